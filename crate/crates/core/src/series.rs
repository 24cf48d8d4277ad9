//! Truncated formal series in a fractional power of `q` with exact rational
//! coefficients.
//!
//! A [`QSeries`] lives on a grid `q^(1/D)`: every exponent is `j/D` for an
//! integer `j`. Coefficients are stored densely over the index range
//! `[v, T)`, where `v` is the valuation and the series is known modulo
//! `q^(T/D)`. After every operation the grid is reduced to the smallest `D`
//! that still represents every nonzero exponent and the truncation, so two
//! equal series always have identical fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponents of `q` are small rationals.
pub type Exponent = Rational64;

/// Default precision: integer powers of `q` kept beyond the valuation.
pub const DEFAULT_ORDER: u32 = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    grid: i64,
    valuation: i64,
    coeffs: Vec<BigRational>,
    trunc: i64,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// Expresses `e` on grid `grid` if possible.
fn on_grid(e: Exponent, grid: i64) -> Option<i64> {
    let scaled = *e.numer() * grid;
    if scaled % *e.denom() == 0 {
        Some(scaled / *e.denom())
    } else {
        None
    }
}

impl QSeries {
    /// The zero series known modulo `q^trunc`.
    pub fn zero(trunc: Exponent) -> Self {
        let grid = *trunc.denom();
        let t = *trunc.numer();
        QSeries {
            grid,
            valuation: t,
            coeffs: Vec::new(),
            trunc: t,
        }
    }

    /// `c·q^exponent + O(q^trunc)`.
    pub fn monomial(c: BigRational, exponent: Exponent, trunc: Exponent) -> Self {
        let grid = lcm(*exponent.denom(), *trunc.denom());
        let v = on_grid(exponent, grid).unwrap();
        let t = on_grid(trunc, grid).unwrap();
        if v >= t {
            return QSeries::zero(trunc);
        }
        let mut coeffs = vec![BigRational::zero(); (t - v) as usize];
        coeffs[0] = c;
        QSeries::from_dense(grid, v, coeffs, t)
    }

    /// A constant known modulo `q^order`.
    pub fn constant(c: BigRational, order: u32) -> Self {
        QSeries::monomial(c, Exponent::zero(), Exponent::from_integer(order as i64))
    }

    pub fn one(order: u32) -> Self {
        QSeries::constant(BigRational::one(), order)
    }

    /// Builds a series from dense coefficients `coeffs[i]` at exponent
    /// `(start + i)/grid`, known modulo `q^(trunc/grid)`. Entries at or past
    /// `trunc` are dropped, missing entries below it are zero.
    pub fn from_dense(grid: i64, start: i64, mut coeffs: Vec<BigRational>, trunc: i64) -> Self {
        assert!(grid >= 1, "grid denominator must be positive");
        let len = (trunc - start).max(0) as usize;
        coeffs.resize(len, BigRational::zero());
        let mut s = QSeries {
            grid,
            valuation: start.min(trunc),
            coeffs,
            trunc,
        };
        s.canonicalize();
        s
    }

    /// Like [`QSeries::from_dense`] for integer coefficients.
    pub fn from_integers(grid: i64, start: i64, coeffs: Vec<BigInt>, trunc: i64) -> Self {
        let coeffs = coeffs.into_iter().map(BigRational::from_integer).collect();
        QSeries::from_dense(grid, start, coeffs, trunc)
    }

    fn canonicalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.valuation = self.trunc;
            }
            Some(k) => {
                if k > 0 {
                    self.coeffs.drain(..k);
                    self.valuation += k as i64;
                }
            }
        }
        let mut g = self.grid.gcd(&self.trunc).gcd(&self.valuation);
        if g > 1 {
            for (i, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    g = g.gcd(&(i as i64));
                    if g == 1 {
                        break;
                    }
                }
            }
        }
        if g > 1 {
            self.grid /= g;
            self.valuation /= g;
            self.trunc /= g;
            let step = g as usize;
            self.coeffs = std::mem::take(&mut self.coeffs)
                .into_iter()
                .step_by(step)
                .collect();
        }
    }

    /// Re-expresses the series on grid `k·D` without changing its value.
    fn refined(&self, k: i64) -> (i64, i64, Vec<BigRational>, i64) {
        if k == 1 {
            return (self.grid, self.valuation, self.coeffs.clone(), self.trunc);
        }
        let mut coeffs = vec![BigRational::zero(); ((self.trunc - self.valuation) * k) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k as usize] = c.clone();
            }
        }
        (self.grid * k, self.valuation * k, coeffs, self.trunc * k)
    }

    pub fn grid_denominator(&self) -> i64 {
        self.grid
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<Exponent> {
        if self.is_zero() {
            None
        } else {
            Some(Exponent::new(self.valuation, self.grid))
        }
    }

    /// The series is known modulo `q^truncation()`.
    pub fn truncation(&self) -> Exponent {
        Exponent::new(self.trunc, self.grid)
    }

    /// Number of integer powers of `q` known beyond the valuation.
    pub fn relative_precision(&self) -> Exponent {
        Exponent::new(self.trunc - self.valuation, self.grid)
    }

    pub fn leading(&self) -> Option<(Exponent, &BigRational)> {
        self.coeffs
            .first()
            .map(|c| (Exponent::new(self.valuation, self.grid), c))
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &BigRational)> + '_ {
        let (grid, v) = (self.grid, self.valuation);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (Exponent::new(v + i as i64, grid), c))
    }

    /// Exact coefficient of `q^e`.
    pub fn coefficient(&self, e: Exponent) -> Result<BigRational> {
        if e >= self.truncation() {
            return Err(Error::InsufficientPrecision {
                exponent: e.to_string(),
                truncation: self.truncation().to_string(),
            });
        }
        match on_grid(e, self.grid) {
            Some(j) if j >= self.valuation => Ok(self.coeffs[(j - self.valuation) as usize].clone()),
            _ => Ok(BigRational::zero()),
        }
    }

    /// Drops every term at or beyond `q^t`.
    pub fn truncate(&self, t: Exponent) -> QSeries {
        if t >= self.truncation() {
            return self.clone();
        }
        let grid = lcm(self.grid, *t.denom());
        let (g, v, c, _) = self.refined(grid / self.grid);
        QSeries::from_dense(g, v, c, on_grid(t, grid).unwrap())
    }

    fn aligned(a: &QSeries, b: &QSeries) -> (Aligned, Aligned) {
        let grid = lcm(a.grid, b.grid);
        let (_, av, ac, at) = a.refined(grid / a.grid);
        let (_, bv, bc, bt) = b.refined(grid / b.grid);
        (
            Aligned {
                grid,
                valuation: av,
                coeffs: ac,
                trunc: at,
            },
            Aligned {
                grid,
                valuation: bv,
                coeffs: bc,
                trunc: bt,
            },
        )
    }

    fn add_impl(&self, other: &QSeries, negate_other: bool) -> QSeries {
        let (a, b) = QSeries::aligned(self, other);
        let trunc = a.trunc.min(b.trunc);
        let start = a.valuation.min(b.valuation).min(trunc);
        let mut coeffs = vec![BigRational::zero(); (trunc - start) as usize];
        for (i, c) in a.coeffs.iter().enumerate() {
            let j = a.valuation + i as i64;
            if j >= trunc {
                break;
            }
            coeffs[(j - start) as usize] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            let j = b.valuation + i as i64;
            if j >= trunc {
                break;
            }
            if negate_other {
                coeffs[(j - start) as usize] -= c;
            } else {
                coeffs[(j - start) as usize] += c;
            }
        }
        QSeries::from_dense(a.grid, start, coeffs, trunc)
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add_impl(other, true)
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            grid: self.grid,
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            trunc: self.trunc,
        }
    }

    pub fn scale(&self, c: &BigRational) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.truncation());
        }
        QSeries {
            grid: self.grid,
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            trunc: self.trunc,
        }
    }

    /// Multiplies by the exact monomial `q^e`; relative precision is kept.
    pub fn shift(&self, e: Exponent) -> QSeries {
        let grid = lcm(self.grid, *e.denom());
        let (g, v, c, t) = self.refined(grid / self.grid);
        let s = on_grid(e, grid).unwrap();
        QSeries::from_dense(g, v + s, c, t + s)
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let (a, b) = QSeries::aligned(self, other);
        let trunc = (a.trunc + b.valuation).min(b.trunc + a.valuation);
        let start = (a.valuation + b.valuation).min(trunc);
        if self.is_zero() || other.is_zero() {
            return QSeries::from_dense(a.grid, trunc, Vec::new(), trunc);
        }
        let len = (trunc - start) as usize;
        let (an, ad) = integerize(&a.coeffs);
        let (bn, bd) = integerize(&b.coeffs);
        let mut acc = vec![BigInt::zero(); len];
        for (i, x) in &an {
            if *i >= len {
                break;
            }
            for (j, y) in &bn {
                let k = i + j;
                if k >= len {
                    break;
                }
                acc[k] += x * y;
            }
        }
        let den = ad * bd;
        let coeffs = acc
            .into_iter()
            .map(|c| BigRational::new(c, den.clone()))
            .collect();
        QSeries::from_dense(a.grid, start, coeffs, trunc)
    }

    /// Multiplicative inverse; the number of known terms is preserved.
    pub fn invert(&self) -> Result<QSeries> {
        let a0 = match self.coeffs.first() {
            Some(c) => c.clone(),
            None => return Err(Error::NonInvertible),
        };
        let n = self.coeffs.len();
        let (num, den) = integerize(&self.coeffs);
        let lead = num[0].1.clone();
        let out: Vec<BigRational> = if lead.abs().is_one() {
            // Integer recurrence: num has unit leading entry.
            let mut b = vec![BigInt::zero(); n];
            b[0] = lead.clone();
            for k in 1..n {
                let mut s = BigInt::zero();
                for (i, x) in num.iter().skip(1) {
                    if *i > k {
                        break;
                    }
                    s += x * &b[k - i];
                }
                b[k] = -s * &lead;
            }
            b.into_iter()
                .map(|x| BigRational::from_integer(x * &den))
                .collect()
        } else {
            let inv0 = a0.recip();
            let sparse: Vec<(usize, &BigRational)> = self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let mut b = vec![BigRational::zero(); n];
            b[0] = inv0.clone();
            for k in 1..n {
                let mut s = BigRational::zero();
                for (i, x) in &sparse {
                    if *i > k {
                        break;
                    }
                    s += *x * &b[k - i];
                }
                b[k] = -s * &inv0;
            }
            b
        };
        let v = -self.valuation;
        Ok(QSeries::from_dense(self.grid, v, out, v + n as i64))
    }

    pub fn div(&self, other: &QSeries) -> Result<QSeries> {
        Ok(self.mul(&other.invert()?))
    }

    /// Integer power; negative exponents go through [`QSeries::invert`].
    pub fn pow(&self, n: i64) -> Result<QSeries> {
        let base = if n < 0 { self.invert()? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let rel = self.relative_precision();
        let mut acc = QSeries::monomial(BigRational::one(), Exponent::zero(), rel);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// Rational power `f^p`, branch fixed by a positive leading coefficient
    /// for even root indices. The grid is refined when `v·p` leaves it.
    pub fn pow_rational(&self, p: Exponent) -> Result<QSeries> {
        if p.is_integer() {
            return self.pow(*p.numer());
        }
        let root = *p.denom() as u64;
        let a0 = match self.coeffs.first() {
            Some(c) => c.clone(),
            None => return Err(Error::NonInvertible),
        };
        let lead = rational_power(&a0, p).ok_or(Error::NoRationalRoot { index: root })?;

        let k = *p.denom() / self.valuation.gcd(p.denom());
        let (grid, v, coeffs, t) = self.refined(k);
        let n = (t - v) as usize;
        let new_v = v * *p.numer() / *p.denom();

        // Miller's recurrence on the unit part u = f / (a0 q^v).
        let inv0 = a0.recip();
        let pr = BigRational::new(BigInt::from(*p.numer()), BigInt::from(*p.denom()));
        let sparse: Vec<(usize, BigRational)> = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c * &inv0))
            .collect();
        let mut b = vec![BigRational::zero(); n];
        b[0] = BigRational::one();
        for kk in 1..n {
            let mut s = BigRational::zero();
            for (i, a) in &sparse {
                if *i > kk {
                    break;
                }
                let w = &pr * rat(*i as i64) - rat((kk - i) as i64);
                s += w * a * &b[kk - i];
            }
            b[kk] = s / rat(kk as i64);
        }
        let out = b.into_iter().map(|x| x * &lead).collect();
        Ok(QSeries::from_dense(grid, new_v, out, new_v + n as i64))
    }

    pub fn sqrt(&self) -> Result<QSeries> {
        self.pow_rational(Exponent::new(1, 2))
    }

    /// The substitution `q ↦ q^k`.
    pub fn substitute(&self, k: u32) -> QSeries {
        assert!(k >= 1, "substitution power must be positive");
        let k = k as i64;
        let mut coeffs = vec![BigRational::zero(); ((self.trunc - self.valuation) * k) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * k as usize] = c.clone();
            }
        }
        QSeries::from_dense(self.grid, self.valuation * k, coeffs, self.trunc * k)
    }

    /// Coefficient sequence on the current grid, starting at the valuation.
    pub fn dense_coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True when every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

struct Aligned {
    grid: i64,
    valuation: i64,
    coeffs: Vec<BigRational>,
    trunc: i64,
}

/// Splits a coefficient vector into its nonzero integer numerators over a
/// common denominator.
fn integerize(coeffs: &[BigRational]) -> (Vec<(usize, BigInt)>, BigInt) {
    let mut den = BigInt::one();
    for c in coeffs {
        if !c.denom().is_one() {
            den = den.lcm(c.denom());
        }
    }
    let out = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.numer() * (&den / c.denom())))
        .collect();
    (out, den)
}

fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

/// `c^p` when it is rational.
fn rational_power(c: &BigRational, p: Exponent) -> Option<BigRational> {
    let k = (*p.denom()).to_u32()?;
    let root = BigRational::new(exact_root(c.numer(), k)?, exact_root(c.denom(), k)?);
    if k % 2 == 0 && root.is_negative() {
        return None;
    }
    let e = *p.numer();
    let powed = num_traits::pow(root, e.unsigned_abs() as usize);
    Some(if e < 0 { powed.recip() } else { powed })
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            if e.is_zero() {
                write!(f, "{mag}")?;
                continue;
            }
            if !unit {
                if mag.is_integer() {
                    write!(f, "{mag}*")?;
                } else {
                    write!(f, "({mag})*")?;
                }
            }
            write_power(f, e)?;
        }
        if first {
            write!(f, "O(")?;
        } else {
            write!(f, " + O(")?;
        }
        let t = self.truncation();
        if t.is_zero() {
            write!(f, "1)")
        } else {
            write_power(f, t)?;
            write!(f, ")")
        }
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, e: Exponent) -> fmt::Result {
    if e.is_one() {
        write!(f, "q")
    } else if e.is_integer() && e.is_positive() {
        write!(f, "q^{e}")
    } else {
        write!(f, "q^({e})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                QSeries::$m(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(n: i64, d: i64) -> Exponent {
        Exponent::new(n, d)
    }

    /// `Σ c_i q^(e_i)` modulo `q^t`.
    fn series(terms: &[(i64, i64, i64)], t: Exponent) -> QSeries {
        let mut s = QSeries::zero(t);
        for &(c, n, d) in terms {
            s = s.add(&QSeries::monomial(rat(c), ex(n, d), t));
        }
        s
    }

    #[test]
    fn additive_cancellation() {
        let t = ex(10, 1);
        let a = series(&[(1, 0, 1), (-1, 1, 1)], t);
        let b = series(&[(1, 1, 1)], t);
        let s = a.add(&b);
        assert_eq!(s, QSeries::one(10));
        assert_eq!(s.truncation(), t);
    }

    #[test]
    fn monomial_shift() {
        let f = series(&[(1, -3, 2), (2, -1, 2)], ex(5, 1));
        let m = QSeries::monomial(rat(1), ex(3, 2), ex(20, 1));
        let p = f.mul(&m);
        assert_eq!(p.coefficient(ex(0, 1)).unwrap(), rat(1));
        assert_eq!(p.coefficient(ex(1, 1)).unwrap(), rat(2));
        // truncation min(5 + 3/2, 20 - 3/2) keeps the half-integer grid
        assert_eq!(p.grid_denominator(), 2);
        assert_eq!(p.truncation(), ex(13, 2));
    }

    #[test]
    fn invert_geometric() {
        let f = series(&[(1, 0, 1), (-1, 1, 1)], ex(12, 1));
        let inv = f.invert().unwrap();
        for k in 0..12 {
            assert_eq!(inv.coefficient(ex(k, 1)).unwrap(), rat(1));
        }
        assert_eq!(inv.truncation(), ex(12, 1));
    }

    #[test]
    fn invert_monomial() {
        let q = QSeries::monomial(rat(1), ex(1, 1), ex(8, 1));
        let inv = q.invert().unwrap();
        assert_eq!(inv.valuation(), Some(ex(-1, 1)));
        assert_eq!(inv.coefficient(ex(-1, 1)).unwrap(), rat(1));
        assert_eq!(inv.relative_precision(), ex(7, 1));
    }

    #[test]
    fn invert_zero_fails() {
        let z = QSeries::zero(ex(5, 1));
        assert_eq!(z.invert().unwrap_err().to_string(), "non-invertible series");
    }

    #[test]
    fn invert_rational_leading() {
        let f = series(&[(3, 0, 1), (1, 1, 2), (-2, 2, 1)], ex(10, 1));
        let p = f.mul(&f.invert().unwrap());
        assert_eq!(p, QSeries::one(10));
    }

    #[test]
    fn sqrt_perfect_square() {
        let f = series(&[(1, 0, 1), (2, 1, 1), (1, 2, 1)], ex(10, 1));
        let r = f.sqrt().unwrap();
        assert_eq!(r, series(&[(1, 0, 1), (1, 1, 1)], ex(10, 1)));
    }

    #[test]
    fn sqrt_odd_valuation_refines_grid() {
        let q = QSeries::monomial(rat(1), ex(1, 1), ex(6, 1));
        let r = q.sqrt().unwrap();
        assert_eq!(r.valuation(), Some(ex(1, 2)));
        assert_eq!(r.grid_denominator(), 2);
        assert_eq!(r.relative_precision(), ex(5, 1));
    }

    #[test]
    fn sqrt_rejects_non_squares() {
        let two = QSeries::constant(rat(2), 5);
        assert_eq!(two.sqrt().unwrap_err().to_string(), "no rational square root");
        let neg = QSeries::constant(rat(-4), 5);
        assert_eq!(neg.sqrt().unwrap_err().to_string(), "no rational square root");
        let quarter = QSeries::constant(ratio(9, 4), 5);
        assert_eq!(quarter.sqrt().unwrap().coefficient(ex(0, 1)).unwrap(), ratio(3, 2));
    }

    #[test]
    fn substitution_scales_exponents() {
        let f = series(&[(1, 1, 1), (1, 2, 1)], ex(5, 1));
        let g = f.substitute(2);
        assert_eq!(g, series(&[(1, 2, 1), (1, 4, 1)], ex(10, 1)));
    }

    #[test]
    fn coefficient_errors_and_off_grid() {
        let f = series(&[(1, 1, 2)], ex(3, 1));
        assert_eq!(f.coefficient(ex(1, 3)).unwrap(), rat(0));
        assert!(matches!(
            f.coefficient(ex(3, 1)),
            Err(Error::InsufficientPrecision { .. })
        ));
    }

    #[test]
    fn grid_reduction_is_canonical() {
        let a = QSeries::from_dense(4, 4, vec![rat(1), rat(0), rat(0), rat(0), rat(5)], 12);
        assert_eq!(a.grid_denominator(), 1);
        assert_eq!(a.coefficient(ex(2, 1)).unwrap(), rat(5));
    }

    #[test]
    fn rational_power_three_halves() {
        let f = series(&[(1, -2, 1), (3, -1, 1), (1, 0, 1)], ex(20, 1));
        let a = f.pow_rational(ex(3, 2)).unwrap();
        let b = f.sqrt().unwrap().pow(3).unwrap();
        assert!(a.sub(&b).is_zero());
        assert_eq!(a.valuation(), Some(ex(-3, 1)));
    }

    #[test]
    fn display_format() {
        let f = series(&[(1, -5, 2), (2, -3, 2), (-1, 0, 1), (3, 1, 1)], ex(3, 1));
        assert_eq!(f.to_string(), "q^(-5/2) + 2*q^(-3/2) - 1 + 3*q + O(q^3)");
    }
}
