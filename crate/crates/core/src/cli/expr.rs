//! The expression language: syntax tree, parser, printer and evaluator.
//!
//! ```text
//! identity := expr "==" expr
//! expr     := term (("+" | "-") term)*
//! term     := factor (("*" | "/") factor)*
//! factor   := "-" factor | power
//! power    := atom ("^" exponent)?
//! exponent := int | "(" ["-"] int ["/" int] ")"
//! atom     := int | "(" int "/" int ")" | "q" | name | call | "(" expr ")"
//!           | "sqrt" "(" expr ")" | "subq" "(" expr "," int ")"
//! call     := name "(" ["-"] int ("," ["-"] int)* ")"
//! ```

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::constructors::{
    bailey_specialization, eta_quotient_series, gen_eta_series, lambert, lambert_mod, lambert_odd,
    theta_f, EtaQuotient, SignedMonomial, Symbol, SymbolTable, ThetaForm,
};
use crate::error::{Error, Result};
use crate::series::{Exponent, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Call {
    Eta(i64),
    Geta(i64, i64),
    Pi(u32),
    L(i64),
    Lodd(i64),
    Lmod(i64, i64),
    /// `f(a, b)` at signed monomials: `-k` stands for `−q^k`, `k` for `q^k`.
    Thetaf(i64, i64),
    Bailey(i64, i64),
}

impl Call {
    fn build(name: &str, args: &[i64]) -> Option<Call> {
        Some(match (name, args) {
            ("eta", &[d]) => Call::Eta(d),
            ("geta", &[m, g]) => Call::Geta(m, g),
            ("pi" | "Pi", &[k]) => Call::Pi(u32::try_from(k).ok()?),
            ("L", &[k]) => Call::L(k),
            ("Lodd", &[k]) => Call::Lodd(k),
            ("Lmod", &[r, l]) => Call::Lmod(r, l),
            ("thetaf", &[a, b]) => Call::Thetaf(a, b),
            ("bailey", &[i, l]) => Call::Bailey(i, l),
            _ => return None,
        })
    }

    fn arity(name: &str) -> Option<usize> {
        match name {
            "eta" | "pi" | "Pi" | "L" | "Lodd" => Some(1),
            "geta" | "Lmod" | "thetaf" | "bailey" => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for Call {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Call::Eta(d) => write!(f, "eta({d})"),
            Call::Geta(m, g) => write!(f, "geta({m},{g})"),
            Call::Pi(k) => write!(f, "pi({k})"),
            Call::L(k) => write!(f, "L({k})"),
            Call::Lodd(k) => write!(f, "Lodd({k})"),
            Call::Lmod(r, l) => write!(f, "Lmod({r},{l})"),
            Call::Thetaf(a, b) => write!(f, "thetaf({a},{b})"),
            Call::Bailey(i, l) => write!(f, "bailey({i},{l})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigRational),
    /// `q^e`.
    Q(Exponent),
    Call(Call),
    Sym(Symbol),
    Neg(Box<Expr>),
    Sqrt(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Exponent),
    SubQ(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.lhs, self.rhs)
    }
}

// ---------------------------------------------------------------- lexer

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    EqEq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::EqEq => write!(f, "`==`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c == '=' && chars.get(i + 1) == Some(&'=') {
            i += 2;
            Tok::EqEq
        } else if "+-*/^(),".contains(c) {
            i += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Syntax {
                line,
                column,
                expected: "an expression".into(),
                found: format!("`{c}`"),
            });
        };
        column += i - start;
        out.push(Spanned {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

// ---------------------------------------------------------------- parser

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.toks.len() - 1);
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        let s = &self.toks[self.pos];
        Error::Syntax {
            line: s.line,
            column: s.column,
            expected: expected.to_string(),
            found: s.tok.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error("an integer")),
        }
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let neg = self.eat('-');
        let n = self.int()?;
        Ok(if neg { -n } else { n })
    }

    fn small(&mut self, n: BigInt, what: &str) -> Result<i64> {
        i64::try_from(&n).map_err(|_| self.error(what))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let is_q = *self.peek() == Tok::Ident("q".into()) && *self.peek_at(1) != Tok::Sym('(');
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.exponent()?;
        Ok(if is_q { Expr::Q(e) } else { Expr::Pow(Box::new(base), e) })
    }

    fn exponent(&mut self) -> Result<Exponent> {
        if let Tok::Int(_) = self.peek() {
            let n = self.int()?;
            return Ok(Exponent::from(self.small(n, "a small exponent")?));
        }
        if !self.eat('(') {
            return Err(self.error("an integer or `(`"));
        }
        let n = self.signed_int()?;
        let n = self.small(n, "a small exponent")?;
        let d = if self.eat('/') {
            let d = self.int()?;
            self.small(d, "a small exponent")?
        } else {
            1
        };
        if d == 0 {
            return Err(self.error("a nonzero denominator"));
        }
        self.expect(')')?;
        Ok(Exponent::new(n, d))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr::Num(BigRational::from_integer(n)))
            }
            Tok::Sym('(') => {
                // `(a/b)` with integer a, b is a rational literal
                if let (Tok::Int(a), Tok::Sym('/'), Tok::Int(b), Tok::Sym(')')) =
                    (self.peek_at(1).clone(), self.peek_at(2).clone(), self.peek_at(3).clone(), self.peek_at(4).clone())
                {
                    if !b.is_zero() {
                        for _ in 0..5 {
                            self.bump();
                        }
                        return Ok(Expr::Num(BigRational::new(a, b)));
                    }
                }
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                self.named(&name)
            }
            _ => Err(self.error("a number, `q`, a name or `(`")),
        }
    }

    fn named(&mut self, name: &str) -> Result<Expr> {
        let called = *self.peek() == Tok::Sym('(');
        match name {
            "q" if !called => return Ok(Expr::Q(Exponent::one())),
            "sqrt" if called => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                return Ok(Expr::Sqrt(Box::new(e)));
            }
            "subq" if called => {
                self.bump();
                let e = self.expr()?;
                self.expect(',')?;
                let k = self.int()?;
                let k = u32::try_from(&k)
                    .ok()
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| self.error("a positive substitution power"))?;
                self.expect(')')?;
                return Ok(Expr::SubQ(Box::new(e), k));
            }
            _ => {}
        }
        if let Some(arity) = Call::arity(name) {
            if !called {
                return Err(self.error("`(`"));
            }
            self.bump();
            let mut args = Vec::with_capacity(arity);
            loop {
                let n = self.signed_int()?;
                args.push(self.small(n, "a small integer argument")?);
                if !self.eat(',') {
                    break;
                }
            }
            if args.len() != arity {
                return Err(self.error(&format!("{arity} argument(s) to {name}")));
            }
            self.expect(')')?;
            return Call::build(name, &args)
                .map(Expr::Call)
                .ok_or_else(|| self.error(&format!("valid arguments to {name}")));
        }
        if called {
            return Err(Error::UnknownSymbol(name.to_string()));
        }
        name.parse::<Symbol>().map(Expr::Sym)
    }
}

fn parser(text: &str) -> Result<Parser> {
    Ok(Parser {
        toks: lex(text)?,
        pos: 0,
    })
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = parser(text)?;
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

pub fn parse_identity(text: &str) -> Result<Identity> {
    let mut p = parser(text)?;
    let lhs = p.expr()?;
    if p.bump() != Tok::EqEq {
        p.pos -= 1;
        return Err(p.error("`==`"));
    }
    let rhs = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.error("an operator or end of input"));
    }
    Ok(Identity { lhs, rhs })
}

impl std::str::FromStr for Expr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Expr> {
        parse(s)
    }
}

// ---------------------------------------------------------------- printer

const ADD: u8 = 1;
const MUL: u8 = 2;
const NEG: u8 = 3;
const POW: u8 = 4;
const ATOM: u8 = 5;

fn precedence(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => ADD,
        Expr::Mul(..) | Expr::Div(..) => MUL,
        Expr::Neg(_) => NEG,
        Expr::Num(c) if c.is_negative() => NEG,
        Expr::Pow(..) | Expr::Q(_) => POW,
        _ => ATOM,
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, e: Exponent) -> fmt::Result {
    if e.is_integer() && !e.is_negative() {
        write!(f, "{}", e.numer())
    } else {
        write!(f, "({e})")
    }
}

fn is_int_literal(e: &Expr) -> bool {
    matches!(e, Expr::Num(c) if c.is_integer() && !c.is_negative())
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if precedence(e) >= min {
        return write!(f, "{e}");
    }
    match e {
        // `(a/b)` would read back as a literal
        Expr::Div(a, b) if is_int_literal(a) && is_int_literal(b) => write!(f, "(({a})/{b})"),
        _ => write!(f, "({e})"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(c) if c.is_integer() && !c.is_negative() => write!(f, "{}", c.numer()),
            Expr::Num(c) if c.is_negative() => write!(f, "-{}", Expr::Num(-c)),
            Expr::Num(c) => write!(f, "({}/{})", c.numer(), c.denom()),
            Expr::Q(e) if e.is_one() => write!(f, "q"),
            Expr::Q(e) => {
                write!(f, "q^")?;
                write_exponent(f, *e)
            }
            Expr::Call(c) => write!(f, "{c}"),
            Expr::Sym(s) => write!(f, "{s}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                write_at(f, a, NEG)
            }
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, ADD)?;
                write!(f, " {} ", if matches!(self, Expr::Add(..)) { '+' } else { '-' })?;
                write_at(f, b, MUL)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                write_at(f, a, MUL)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { '*' } else { '/' })?;
                write_at(f, b, NEG)
            }
            Expr::Pow(a, e) => {
                match &**a {
                    // a bare `q^` would be read back as a monomial
                    Expr::Q(_) => write!(f, "({a})")?,
                    _ => write_at(f, a, ATOM)?,
                }
                write!(f, "^")?;
                write_exponent(f, *e)
            }
            Expr::SubQ(a, k) => write!(f, "subq({a},{k})"),
        }
    }
}

// ---------------------------------------------------------------- evaluator

/// Evaluates expressions at one precision, sharing symbol and constructor
/// expansions between calls.
pub struct Evaluator {
    order: u32,
    table: SymbolTable,
    calls: Mutex<HashMap<Call, QSeries>>,
}

impl Evaluator {
    pub fn new(order: u32) -> Self {
        Evaluator {
            order,
            table: SymbolTable::new(order),
            calls: Mutex::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    pub fn eval(&self, e: &Expr) -> Result<QSeries> {
        self.node(e).map_err(|err| match err {
            Error::Eval { .. } => err,
            other => Error::Eval {
                expr: e.to_string(),
                source: Box::new(other),
            },
        })
    }

    fn wrap(&self, e: &Expr, r: Result<QSeries>) -> Result<QSeries> {
        r.map_err(|err| match err {
            Error::Eval { .. } => err,
            other => Error::Eval {
                expr: e.to_string(),
                source: Box::new(other),
            },
        })
    }

    fn node(&self, e: &Expr) -> Result<QSeries> {
        let n = self.order;
        let r = match e {
            Expr::Num(c) => Ok(QSeries::constant(c.clone(), n)),
            Expr::Q(x) => Ok(QSeries::monomial(BigRational::one(), *x, *x + Exponent::from(n as i64))),
            Expr::Call(c) => self.call(*c),
            Expr::Sym(s) => self.table.get(*s).map(|s| (*s).clone()),
            Expr::Neg(a) => Ok(self.node(a)?.neg()),
            Expr::Sqrt(a) => self.node(a)?.sqrt(),
            Expr::Add(a, b) => Ok(self.node(a)?.add(&self.node(b)?)),
            Expr::Sub(a, b) => Ok(self.node(a)?.sub(&self.node(b)?)),
            Expr::Mul(a, b) => Ok(self.node(a)?.mul(&self.node(b)?)),
            Expr::Div(a, b) => {
                let (x, y) = (self.node(a)?, self.node(b)?);
                x.div(&y)
            }
            Expr::Pow(a, p) => self.node(a)?.pow_rational(*p),
            Expr::SubQ(a, k) => Ok(self.node(a)?.substitute(*k)),
        };
        self.wrap(e, r)
    }

    fn call(&self, c: Call) -> Result<QSeries> {
        if let Some(s) = self.calls.lock().unwrap().get(&c) {
            return Ok(s.clone());
        }
        let n = self.order;
        let s = match c {
            Call::Eta(d) => eta_quotient_series(&EtaQuotient::new(d.max(1), &[(d, 1)])?, n),
            Call::Geta(m, g) => gen_eta_series(m, g, n)?,
            Call::Pi(k) => {
                if k == 0 {
                    return Err(Error::InvalidArgument("pi index must be positive".into()));
                }
                (*self.table.get(Symbol::Pi(k))?).clone()
            }
            Call::L(k) => lambert(positive(k, "L")?, n)?,
            Call::Lodd(k) => lambert_odd(positive(k, "Lodd")?, n)?,
            Call::Lmod(r, l) => lambert_mod(r, l, n)?,
            Call::Thetaf(a, b) => {
                if a == 0 || b == 0 {
                    return Err(Error::DivergentProduct {
                        start: a.to_string(),
                        step: b.to_string(),
                    });
                }
                theta_f(
                    SignedMonomial::from_signed_integer(a),
                    SignedMonomial::from_signed_integer(b),
                    ThetaForm::Product,
                    n,
                )?
            }
            Call::Bailey(i, l) => bailey_specialization(i, l, n)?,
        };
        self.calls.lock().unwrap().insert(c, s.clone());
        Ok(s)
    }
}

fn positive(k: i64, name: &str) -> Result<i64> {
    if k >= 1 {
        Ok(k)
    } else {
        Err(Error::InvalidArgument(format!("{name} index {k} must be positive")))
    }
}

pub fn eval(e: &Expr, order: u32) -> Result<QSeries> {
    Evaluator::new(order).eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn p(s: &str) -> Expr {
        parse(s).unwrap()
    }

    #[test]
    fn shapes() {
        assert_eq!(
            p("pi(1)/pi(7)"),
            Expr::Div(Box::new(Expr::Call(Call::Pi(1))), Box::new(Expr::Call(Call::Pi(7))))
        );
        assert_eq!(p("q^(1/4)"), Expr::Q(Exponent::new(1, 4)));
        assert_eq!(
            p("Lodd(1) - 7*Lodd(7)"),
            Expr::Sub(
                Box::new(Expr::Call(Call::Lodd(1))),
                Box::new(Expr::Mul(Box::new(Expr::Num(rat(7))), Box::new(Expr::Call(Call::Lodd(7)))))
            )
        );
        assert_eq!(p("(1/24)"), Expr::Num(BigRational::new(1.into(), 24.into())));
        assert_eq!(p("-z^2"), Expr::Neg(Box::new(Expr::Pow(Box::new(p("z")), Exponent::from(2)))));
        assert_eq!(p("thetaf(-8,-6)"), Expr::Call(Call::Thetaf(-8, -6)));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("pi(1) +\n  * 2") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("eta(1,2)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("foo(3)"), Err(Error::UnknownSymbol(_))));
        assert!(matches!(parse("zz"), Err(Error::UnknownSymbol(_))));
        assert!(matches!(parse("1 $ 2"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_identity("z"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn printing_round_trips() {
        for s in [
            "-z^2",
            "(-z)^2",
            "(q)^3",
            "q^(-7/2)*pi(7)^2",
            "z - (g - t)",
            "z - g - t",
            "1/2",
            "z*(1/2)",
            "z*((1)/2)",
            "sqrt(g^(3/2) - 3*g)",
            "subq(L(1), 7) / -2",
        ] {
            let e = p(s);
            assert_eq!(p(&e.to_string()), e, "{s} printed as {e}");
        }
    }

    #[test]
    fn evaluation() {
        let ev = Evaluator::new(20);
        let s = ev.eval(&p("q^(1/4)*(q^2 + 1) - q^(9/4) - q^(1/4)")).unwrap();
        assert!(s.is_zero());
        let euler = ev.eval(&p("q^(-1/24)*eta(1)")).unwrap();
        let theta = ev.eval(&p("thetaf(-1,-2)")).unwrap();
        assert!(euler.sub(&theta).is_zero());
        // L(1) - L(2) == Lodd(1)
        assert!(ev.eval(&p("L(1) - L(2) - Lodd(1)")).unwrap().is_zero());
        assert!(ev.eval(&p("subq(pi(1), 7) - pi(7)")).unwrap().is_zero());
    }

    #[test]
    fn evaluation_errors_name_the_subexpression() {
        match eval(&p("1 + sqrt(2*q)"), 10) {
            Err(Error::Eval { expr, source }) => {
                assert_eq!(expr, "sqrt(2*q)");
                assert!(matches!(*source, Error::NoRationalRoot { index: 2 }));
            }
            other => panic!("{other:?}"),
        }
        assert!(eval(&p("1/(q - q)"), 10).is_err());
    }
}
