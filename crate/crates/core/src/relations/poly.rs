//! Sparse polynomials with exact rational coefficients in up to three
//! variables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{Exponent, QSeries};

/// The variables of a [`MultiPoly`]. `Z`, `F`, `G` stand for the series
/// `z`, `f`, `g`; a relation found between two series uses slots `Z` and
/// `F` under the names `X` and `Y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    F,
    G,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Z, Var::F, Var::G];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        VAR_NAMES[self.index()]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        match s {
            "Z" | "z" => Ok(Var::Z),
            "F" | "f" => Ok(Var::F),
            "G" | "g" => Ok(Var::G),
            _ => Err(Error::UnknownSymbol(s.to_string())),
        }
    }
}

pub const VAR_NAMES: [&str; 3] = ["Z", "F", "G"];
pub const XY_NAMES: [&str; 3] = ["X", "Y", "W"];

pub type Monomial = [u32; 3];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        MultiPoly::monomial(c, [0, 0, 0])
    }

    pub fn one() -> Self {
        MultiPoly::constant(BigRational::one())
    }

    pub fn var(v: Var) -> Self {
        let mut m = [0; 3];
        m[v.index()] = 1;
        MultiPoly::monomial(BigRational::one(), m)
    }

    pub fn monomial(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: Monomial) -> BigRational {
        self.terms.get(&m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m[v.index()]).max()
    }

    /// The coefficient of `v^k`, a polynomial in the other variables.
    pub fn coeff_in(&self, v: Var, k: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m[v.index()] == k)
                .map(|(m, c)| {
                    let mut m = *m;
                    m[v.index()] = 0;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Greatest monomial in lexicographic order `Z > F > G`.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigRational) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = [m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]];
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient; fails when a remainder would be left.
    pub fn exact_divide(&self, divisor: &MultiPoly) -> Result<MultiPoly> {
        let (dm, dc) = match divisor.leading_term() {
            Some((m, c)) => (*m, c.clone()),
            None => return Err(Error::InvalidArgument("division by the zero polynomial".into())),
        };
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            if (0..3).any(|i| rm[i] < dm[i]) {
                return Err(Error::NotDivisible(format_monomial(rm, &VAR_NAMES)));
            }
            let m = [rm[0] - dm[0], rm[1] - dm[1], rm[2] - dm[2]];
            let t = MultiPoly::monomial(rc / &dc, m);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Replaces each variable by a polynomial.
    pub fn compose(&self, images: &[MultiPoly; 3]) -> MultiPoly {
        let mut powers: [Vec<MultiPoly>; 3] = Default::default();
        for (i, img) in images.iter().enumerate() {
            let top = self.terms.keys().map(|m| m[i]).max().unwrap_or(0);
            powers[i].push(MultiPoly::one());
            for k in 1..=top as usize {
                let next = powers[i][k - 1].mul(img);
                powers[i].push(next);
            }
        }
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let t = powers[0][m[0] as usize]
                .mul(&powers[1][m[1] as usize])
                .mul(&powers[2][m[2] as usize]);
            out = out.add(&t.scale(c));
        }
        out
    }

    /// The largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut out = [u32::MAX; 3];
        for m in self.terms.keys() {
            for i in 0..3 {
                out[i] = out[i].min(m[i]);
            }
        }
        if self.is_zero() {
            [0; 3]
        } else {
            out
        }
    }

    /// The rational `s` with `self / s` integral, primitive and with a
    /// positive leading coefficient.
    pub fn scalar_content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        let s = BigRational::new(num, den);
        match self.leading_term() {
            Some((_, c)) if c.is_negative() => -s,
            _ => s,
        }
    }

    /// Divides out scalar and monomial content.
    pub fn primitive_part(&self) -> (BigRational, Monomial, MultiPoly) {
        let s = self.scalar_content();
        let m = self.monomial_content();
        let inv = BigRational::one() / &s;
        let p = MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| ([k[0] - m[0], k[1] - m[1], k[2] - m[2]], c * &inv))
                .collect(),
        };
        (s, m, p)
    }

    pub fn display_with<'a>(&'a self, names: &'a [&'a str; 3]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }

    pub fn parse_with(text: &str, names: &[&str; 3]) -> Result<MultiPoly> {
        let mut p = PolyParser {
            chars: text.chars().collect(),
            pos: 0,
            names,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos < p.chars.len() {
            return Err(p.error("operator or end of input"));
        }
        Ok(out)
    }
}

pub(crate) fn format_monomial(m: &Monomial, names: &[&str; 3]) -> String {
    let parts: Vec<String> = (0..3)
        .filter(|&i| m[i] > 0)
        .map(|i| match m[i] {
            1 => names[i].to_string(),
            e => format!("{}^{e}", names[i]),
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str; 3],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // total degree descending, then lex descending
        let mut terms: Vec<_> = self.poly.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then(b.cmp(a))
        });
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let constant = m.iter().all(|&e| e == 0);
            let coeff = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            if constant {
                write!(f, "{coeff}")?;
            } else if mag.is_one() {
                write!(f, "{}", format_monomial(m, self.names))?;
            } else {
                write!(f, "{coeff}*{}", format_monomial(m, self.names))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&VAR_NAMES))
    }
}

impl FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MultiPoly> {
        MultiPoly::parse_with(s, &VAR_NAMES)
    }
}

struct PolyParser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [&'a str; 3],
}

impl PolyParser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn error(&self, expected: &str) -> Error {
        Error::Syntax {
            line: 1,
            column: self.pos + 1,
            expected: expected.to_string(),
            found: self
                .chars
                .get(self.pos)
                .map_or("end of input".to_string(), |c| format!("`{c}`")),
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if c == '+' { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let t = self.unary()?;
            if c == '*' {
                acc = acc.mul(&t);
            } else {
                let d = t.coefficient([0, 0, 0]);
                if t.num_terms() != 1 || d.is_zero() {
                    return Err(self.error("nonzero constant divisor"));
                }
                acc = acc.scale(&(BigRational::one() / d));
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| self.error("small exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("`)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(MultiPoly::constant(BigRational::from_integer(self.integer()?))),
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric()) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                match self.names.iter().position(|n| n.eq_ignore_ascii_case(&name)) {
                    Some(i) => Ok(MultiPoly::var(Var::ALL[i])),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("one of {}", self.names.join(", "))))
                    }
                }
            }
            _ => Err(self.error("number, variable or `(`")),
        }
    }
}

/// Substitutes series for the variables.
pub fn eval_poly(p: &MultiPoly, assignment: &HashMap<Var, QSeries>) -> Result<QSeries> {
    let mut powers: Vec<Vec<QSeries>> = Vec::new();
    let mut ceiling: Option<Exponent> = None;
    for v in Var::ALL {
        let top = p.degree_in(v).unwrap_or(0);
        if top == 0 {
            powers.push(Vec::new());
            continue;
        }
        let s = assignment
            .get(&v)
            .ok_or_else(|| Error::UnassignedVariable(v.to_string()))?;
        let mut list = vec![s.clone()];
        for k in 1..top as usize {
            let next = list[k - 1].mul(s);
            list.push(next);
        }
        powers.push(list);
    }
    for s in assignment.values() {
        let t = s.truncation();
        ceiling = Some(ceiling.map_or(t, |c: Exponent| c.max(t)));
    }
    let ceiling = ceiling.unwrap_or_else(|| Exponent::from(crate::series::DEFAULT_ORDER as i64));
    let mut acc = QSeries::zero(ceiling);
    for (m, c) in p.terms() {
        let mut t: Option<QSeries> = None;
        for i in 0..3 {
            if m[i] > 0 {
                let p = &powers[i][m[i] as usize - 1];
                t = Some(match t {
                    Some(t) => t.mul(p),
                    None => p.clone(),
                });
            }
        }
        let t = match t {
            Some(t) => t.scale(c),
            None => QSeries::monomial(c.clone(), Exponent::zero(), ceiling),
        };
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// `F(X, Y) = X^n − Y^m + Σ C_{a,b} X^a Y^b` relating two series with pole
/// orders `m` (for `x`) and `n` (for `y`); every monomial satisfies
/// `am + bn ≤ mn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    poly: MultiPoly,
    pub x_pole: u32,
    pub y_pole: u32,
}

impl BivarPoly {
    pub fn new(poly: MultiPoly, x_pole: u32, y_pole: u32) -> Self {
        BivarPoly { poly, x_pole, y_pole }
    }

    /// `X` in slot `Z`, `Y` in slot `F`.
    pub fn as_multi(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn coefficient(&self, a: u32, b: u32) -> BigRational {
        self.poly.coefficient([a, b, 0])
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigRational)> {
        self.poly.terms().map(|(m, c)| ((m[0], m[1]), c))
    }

    pub fn satisfies_degree_bound(&self) -> bool {
        let (m, n) = (self.x_pole, self.y_pole);
        self.terms().all(|((a, b), _)| a * m + b * n <= m * n)
    }

    pub fn is_monic(&self) -> bool {
        self.coefficient(self.y_pole, 0).is_one() && self.coefficient(0, self.x_pole) == -BigRational::one()
    }

    /// Parses a polynomial in `X` and `Y`.
    pub fn parse(text: &str) -> Result<MultiPoly> {
        MultiPoly::parse_with(text, &XY_NAMES)
    }

    /// `F(x, y)` with `x`, `y` polynomials in `Z, F, G`.
    pub fn compose(&self, x: &MultiPoly, y: &MultiPoly) -> MultiPoly {
        self.poly.compose(&[x.clone(), y.clone(), MultiPoly::zero()])
    }

    pub fn eval(&self, x: &QSeries, y: &QSeries) -> Result<QSeries> {
        let assignment = HashMap::from([(Var::Z, x.clone()), (Var::F, y.clone())]);
        eval_poly(&self.poly, &assignment)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.display_with(&XY_NAMES))
    }
}
