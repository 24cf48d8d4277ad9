//! The named level-14 functions and their q-expansions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::series::{rat, QSeries};

use super::lambert::{lambert, lambert_odd};
use super::products::{
    eta_quotient_series, gen_eta_quotient_series, pi_q, EtaQuotient, GenEtaQuotient,
};

/// `g² = η⁸(2τ)η⁴(7τ) / (η⁴(τ)η⁸(14τ))` on level 14.
pub fn g_squared_quotient() -> EtaQuotient {
    EtaQuotient::new(14, &[(1, -4), (2, 8), (7, 4), (14, -8)]).unwrap()
}

/// `h1 = η⁴(2τ)η⁸(14τ) / (η²(τ)η²(7τ)η⁸(28τ))`.
pub fn h1_quotient() -> EtaQuotient {
    EtaQuotient::new(28, &[(1, -2), (2, 4), (7, -2), (14, 8), (28, -8)]).unwrap()
}

/// `h2 = η²(τ)η¹⁶(14τ) / (η⁴(2τ)η⁶(7τ)η⁸(28τ))`.
pub fn h2_quotient() -> EtaQuotient {
    EtaQuotient::new(28, &[(1, 2), (2, -4), (7, -6), (14, 16), (28, -8)]).unwrap()
}

/// `g1 = η²_{14,6}/η²_{14,1}`, `g2 = η²_{14,4}/η²_{14,3}`, `g3 = η²_{14,2}/η²_{14,5}`.
pub fn g_part(j: usize) -> GenEtaQuotient {
    let (num, den) = match j {
        1 => (6, 1),
        2 => (4, 3),
        3 => (2, 5),
        _ => panic!("g_part index must be 1, 2 or 3"),
    };
    GenEtaQuotient::new(14, &[(num, 2), (den, -2)]).unwrap()
}

/// `h1` written over the level-28 generalized eta functions.
pub fn h1_gen_quotient() -> GenEtaQuotient {
    let mut pairs = vec![(14, 2), (7, -2)];
    for k in 1..=7 {
        pairs.push((2 * k, 2));
        pairs.push((2 * k - 1, -2));
    }
    GenEtaQuotient::new(28, &pairs).unwrap()
}

/// `h2` written over the level-28 generalized eta functions.
pub fn h2_gen_quotient() -> GenEtaQuotient {
    let mut pairs = vec![(14, 6), (7, -6)];
    for k in 1..=7 {
        pairs.push((2 * k - 1, 2));
        pairs.push((2 * k, -2));
    }
    GenEtaQuotient::new(28, &pairs).unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Z,
    W,
    F,
    G,
    G1,
    G2,
    G3,
    F0,
    F1,
    H1,
    H2,
    H,
    T,
    Pi(u32),
}

impl Symbol {
    pub const NAMED: [Symbol; 13] = [
        Symbol::Z,
        Symbol::W,
        Symbol::F,
        Symbol::G,
        Symbol::G1,
        Symbol::G2,
        Symbol::G3,
        Symbol::F0,
        Symbol::F1,
        Symbol::H1,
        Symbol::H2,
        Symbol::H,
        Symbol::T,
    ];
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Z => write!(f, "z"),
            Symbol::W => write!(f, "w"),
            Symbol::F => write!(f, "f"),
            Symbol::G => write!(f, "g"),
            Symbol::G1 => write!(f, "g1"),
            Symbol::G2 => write!(f, "g2"),
            Symbol::G3 => write!(f, "g3"),
            Symbol::F0 => write!(f, "f0"),
            Symbol::F1 => write!(f, "f1"),
            Symbol::H1 => write!(f, "h1"),
            Symbol::H2 => write!(f, "h2"),
            Symbol::H => write!(f, "H"),
            Symbol::T => write!(f, "t"),
            Symbol::Pi(k) => write!(f, "Pi({k})"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Symbol> {
        let sym = match s {
            "z" => Symbol::Z,
            "w" => Symbol::W,
            "f" => Symbol::F,
            "g" => Symbol::G,
            "g1" => Symbol::G1,
            "g2" => Symbol::G2,
            "g3" => Symbol::G3,
            "f0" => Symbol::F0,
            "f1" => Symbol::F1,
            "h1" => Symbol::H1,
            "h2" => Symbol::H2,
            "H" => Symbol::H,
            "t" => Symbol::T,
            _ => {
                let k = s
                    .strip_prefix("Pi(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|k| k.trim().parse::<u32>().ok())
                    .filter(|&k| k >= 1);
                match k {
                    Some(k) => Symbol::Pi(k),
                    None => return Err(Error::UnknownSymbol(s.to_string())),
                }
            }
        };
        Ok(sym)
    }
}

/// Memoized expansions of the named symbols at one precision. Lookups take a
/// read lock; a missing entry is computed outside the lock and inserted once.
#[derive(Debug)]
pub struct SymbolTable {
    order: u32,
    memo: RwLock<HashMap<Symbol, Arc<QSeries>>>,
}

impl SymbolTable {
    pub fn new(order: u32) -> Self {
        SymbolTable {
            order,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, sym: Symbol) -> Result<Arc<QSeries>> {
        if let Some(s) = self.memo.read().unwrap().get(&sym) {
            return Ok(Arc::clone(s));
        }
        let value = Arc::new(self.compute(sym)?);
        let mut memo = self.memo.write().unwrap();
        Ok(Arc::clone(memo.entry(sym).or_insert(value)))
    }

    /// `z` from its Lambert-series definition.
    pub fn z_from_lambert(&self) -> Result<QSeries> {
        let n = self.order;
        let num = lambert_odd(1, n)?.sub(&lambert_odd(7, n)?.scale(&rat(7)));
        num.div(&self.get(Symbol::Pi(7))?.pow(2)?)
    }

    /// `z` as `g1 + g2 + g3`.
    pub fn z_from_gen_eta(&self) -> Result<QSeries> {
        let g1 = self.get(Symbol::G1)?;
        let g2 = self.get(Symbol::G2)?;
        let g3 = self.get(Symbol::G3)?;
        Ok(g1.add(&g2).add(&g3))
    }

    fn compute(&self, sym: Symbol) -> Result<QSeries> {
        let n = self.order;
        Ok(match sym {
            Symbol::Pi(k) => pi_q(k, n),
            Symbol::Z => {
                let lam = self.z_from_lambert()?;
                let gen = self.z_from_gen_eta()?;
                if !lam.sub(&gen).is_zero() {
                    return Err(Error::CrossCheck(
                        "z from Lambert sums disagrees with g1 + g2 + g3".into(),
                    ));
                }
                lam
            }
            Symbol::W => {
                let diff = lambert(1, n)?.sub(&lambert(7, n)?.scale(&rat(7)));
                diff.scale(&rat(4)).add(&QSeries::one(n))
            }
            Symbol::F => {
                let w = self.get(Symbol::W)?;
                let z = self.get(Symbol::Z)?;
                let pi7 = self.get(Symbol::Pi(7))?;
                w.div(&pi7.pow(2)?.mul(&z))?
            }
            Symbol::G => self.get(Symbol::Pi(1))?.div(&*self.get(Symbol::Pi(7))?)?,
            Symbol::G1 => gen_eta_quotient_series(&g_part(1), n),
            Symbol::G2 => gen_eta_quotient_series(&g_part(2), n),
            Symbol::G3 => gen_eta_quotient_series(&g_part(3), n),
            Symbol::F0 => {
                let g1 = self.get(Symbol::G1)?;
                let g2 = self.get(Symbol::G2)?;
                let g3 = self.get(Symbol::G3)?;
                g1.mul(&g1).add(&g2.mul(&g2)).add(&g3.mul(&g3))
            }
            Symbol::F1 => {
                let g1 = self.get(Symbol::G1)?;
                let g2 = self.get(Symbol::G2)?;
                let g3 = self.get(Symbol::G3)?;
                g1.mul(&g2).add(&g1.mul(&g3)).add(&g2.mul(&g3))
            }
            Symbol::H1 => eta_quotient_series(&h1_quotient(), n),
            Symbol::H2 => eta_quotient_series(&h2_quotient(), n),
            Symbol::H => {
                let h1 = self.get(Symbol::H1)?;
                let h2 = self.get(Symbol::H2)?;
                h1.add(&h2.invert()?.scale(&rat(16)))
            }
            Symbol::T => {
                let h = self.get(Symbol::H)?;
                let f1 = self.get(Symbol::F1)?;
                h.add(&f1.scale(&rat(4)))
            }
        })
    }
}

/// The expansion of a named symbol (`z`, `w`, `f`, `g`, `g1`–`g3`, `f0`,
/// `f1`, `h1`, `h2`, `H`, `t`, `Pi(k)`).
pub fn gosper_symbol(name: &str, order: u32) -> Result<QSeries> {
    let sym: Symbol = name.parse()?;
    SymbolTable::new(order).get(sym).map(|s| (*s).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Exponent;

    fn coeffs(s: &QSeries, exps: &[(i64, i64)]) -> Vec<i64> {
        exps.iter()
            .map(|&(n, d)| {
                let c = s.coefficient(Exponent::new(n, d)).unwrap();
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn z_expansion() {
        let t = SymbolTable::new(20);
        let z = t.get(Symbol::Z).unwrap();
        let e = [(-5, 2), (-3, 2), (-1, 2), (1, 2), (3, 2), (5, 2)];
        assert_eq!(coeffs(&z, &e), vec![1, 2, 4, 4, 6, 8]);
        assert_eq!(z.valuation(), Some(Exponent::new(-5, 2)));
    }

    #[test]
    fn g_expansion() {
        let g = gosper_symbol("g", 20).unwrap();
        let e = [(-3, 2), (-1, 2), (1, 2), (3, 2), (5, 2)];
        assert_eq!(coeffs(&g, &e), vec![1, 2, 1, 2, 2]);
        let g2 = eta_quotient_series(&g_squared_quotient(), 20);
        assert!(g.mul(&g).sub(&g2).is_zero());
        assert_eq!(g2.valuation(), Some(Exponent::from_integer(-3)));
    }

    #[test]
    fn w_f_and_t_expansions() {
        let t = SymbolTable::new(20);
        let w = t.get(Symbol::W).unwrap();
        let e: Vec<_> = (0..6).map(|k| (k, 1)).collect();
        assert_eq!(coeffs(&w, &e), vec![1, 4, 12, 16, 28, 24]);
        // f = w/(Π²_{q^7} z) has a simple pole: gz(f − 4) = t has order −5
        let f = t.get(Symbol::F).unwrap();
        assert_eq!(f.valuation(), Some(Exponent::from_integer(-1)));
        let back = f.mul(&t.get(Symbol::Pi(7)).unwrap().pow(2).unwrap()).mul(&t.get(Symbol::Z).unwrap());
        assert!(back.sub(&w).is_zero());
        let tt = t.get(Symbol::T).unwrap();
        let e: Vec<_> = (-5..=0).map(|k| (k, 1)).collect();
        assert_eq!(coeffs(&tt, &e), vec![1, 2, 5, 10, 18, 32]);
    }

    #[test]
    fn z_squared_splits() {
        let t = SymbolTable::new(40);
        let z = t.get(Symbol::Z).unwrap();
        let rhs = t.get(Symbol::F0).unwrap().add(&t.get(Symbol::F1).unwrap().scale(&rat(2)));
        assert!(z.mul(&z).sub(&rhs).is_zero());
    }

    #[test]
    fn w_has_integer_coefficients() {
        let w = gosper_symbol("w", 60).unwrap();
        assert_eq!(w.leading().unwrap().1, &rat(1));
        assert_eq!(w.valuation(), Some(Exponent::from_integer(0)));
        assert!(w.has_integer_coefficients());
    }

    #[test]
    fn h1_forms_agree() {
        let eta = eta_quotient_series(&h1_quotient(), 40);
        let gen = gen_eta_quotient_series(&h1_gen_quotient(), 40);
        assert!(eta.sub(&gen).is_zero());
        let eta = eta_quotient_series(&h2_quotient(), 40);
        let gen = gen_eta_quotient_series(&h2_gen_quotient(), 40);
        assert!(eta.sub(&gen).is_zero());
    }

    #[test]
    fn unknown_symbols() {
        assert_eq!(
            gosper_symbol("zz", 10).unwrap_err(),
            Error::UnknownSymbol("zz".into())
        );
        assert!(gosper_symbol("Pi(0)", 10).is_err());
        assert_eq!("Pi(7)".parse::<Symbol>().unwrap(), Symbol::Pi(7));
    }
}
