//! Infinite products with monomial arguments: Pochhammer symbols, Dedekind
//! eta, generalized eta, Ramanujan's theta function and `Π_q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{Exponent, QSeries};

/// Dense integer series `Σ c_j q^(j/D)`, `0 ≤ j < len`, built up one
/// binomial factor `(1 − s·q^(e/D))^r` at a time.
pub(crate) struct ProductBuilder {
    grid: i64,
    coeffs: Vec<BigInt>,
}

impl ProductBuilder {
    pub(crate) fn new(grid: i64, len: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); len];
        if len > 0 {
            coeffs[0] = BigInt::one();
        }
        ProductBuilder { grid, coeffs }
    }

    /// Multiplies by `(1 − sign·x^e)^power` where `x = q^(1/D)`.
    pub(crate) fn apply(&mut self, sign: i64, e: usize, power: i64) {
        assert!(e > 0, "binomial factor needs a positive exponent");
        let n = self.coeffs.len();
        if e >= n {
            return;
        }
        let s = BigInt::from(sign);
        if power > 0 {
            for _ in 0..power {
                for i in (e..n).rev() {
                    let t = &self.coeffs[i - e] * &s;
                    self.coeffs[i] -= t;
                }
            }
        } else {
            for _ in 0..(-power) {
                for i in e..n {
                    let t = &self.coeffs[i - e] * &s;
                    self.coeffs[i] += t;
                }
            }
        }
    }

    /// Applies `(sign·x^start; sign_step·x^step)`-style progressions:
    /// the factors `(1 − sign·x^(start + k·step))^power`, `k ≥ 0`.
    pub(crate) fn apply_progression(&mut self, sign: i64, start: usize, step: usize, power: i64) {
        let mut e = start;
        while e < self.coeffs.len() {
            self.apply(sign, e, power);
            e += step;
        }
    }

    /// The product times `q^prefactor`.
    pub(crate) fn finish(self, prefactor: Exponent) -> QSeries {
        let len = self.coeffs.len() as i64;
        QSeries::from_integers(self.grid, 0, self.coeffs, len).shift(prefactor)
    }
}

fn grid_of(values: &[Exponent]) -> i64 {
    values.iter().fold(1, |acc, v| acc.lcm(v.denom()))
}

fn grid_units(e: Exponent, grid: i64) -> usize {
    (*e.numer() * grid / *e.denom()) as usize
}

/// `Π_{n≥0} (1 − sign·q^(a + n·b))` to `order` integer powers of `q`.
pub fn pochhammer(sign: i64, a: Exponent, b: Exponent, order: u32) -> Result<QSeries> {
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::DivergentProduct {
            start: a.to_string(),
            step: b.to_string(),
        });
    }
    let grid = grid_of(&[a, b]);
    let mut p = ProductBuilder::new(grid, order as usize * grid as usize);
    p.apply_progression(sign, grid_units(a, grid), grid_units(b, grid), 1);
    Ok(p.finish(Exponent::zero()))
}

/// An eta-quotient `Π_{δ|N} η(δτ)^{r_δ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaQuotient {
    level: i64,
    exponents: BTreeMap<i64, i64>,
}

impl EtaQuotient {
    pub fn new(level: i64, exponents: &[(i64, i64)]) -> Result<Self> {
        if level < 1 {
            return Err(Error::InvalidArgument(format!("level {level} must be positive")));
        }
        let mut map = BTreeMap::new();
        for &(d, r) in exponents {
            if d < 1 || level % d != 0 {
                return Err(Error::NotADivisor { divisor: d, level });
            }
            *map.entry(d).or_insert(0) += r;
        }
        map.retain(|_, r| *r != 0);
        Ok(EtaQuotient {
            level,
            exponents: map,
        })
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn exponents(&self) -> &BTreeMap<i64, i64> {
        &self.exponents
    }

    /// The same quotient viewed at a multiple (or any other) level.
    pub fn at_level(&self, level: i64) -> Result<Self> {
        let pairs: Vec<_> = self.exponents.iter().map(|(&d, &r)| (d, r)).collect();
        EtaQuotient::new(level, &pairs)
    }

    pub fn mul(&self, other: &EtaQuotient) -> Result<Self> {
        let level = self.level.lcm(&other.level);
        let pairs: Vec<_> = self
            .exponents
            .iter()
            .chain(other.exponents.iter())
            .map(|(&d, &r)| (d, r))
            .collect();
        EtaQuotient::new(level, &pairs)
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut out = self.clone();
        for r in out.exponents.values_mut() {
            *r *= k;
        }
        out.exponents.retain(|_, r| *r != 0);
        out
    }

    /// `(1/24) Σ δ·r_δ`, the exponent of the leading `q` power.
    pub fn prefactor(&self) -> Exponent {
        let s: i64 = self.exponents.iter().map(|(d, r)| d * r).sum();
        Exponent::new(s, 24)
    }

    pub fn weight(&self) -> Exponent {
        let s: i64 = self.exponents.values().sum();
        Exponent::new(s, 2)
    }
}

/// `Π η(δτ)^{r_δ}` as a q-series with `order` integer powers beyond its
/// valuation.
pub fn eta_quotient_series(quotient: &EtaQuotient, order: u32) -> QSeries {
    let mut p = ProductBuilder::new(1, order as usize);
    for (&d, &r) in &quotient.exponents {
        p.apply_progression(1, d as usize, d as usize, r);
    }
    p.finish(quotient.prefactor())
}

/// The second Bernoulli polynomial `t² − t + 1/6`.
pub fn bernoulli2(t: Exponent) -> Exponent {
    t * t - t + Exponent::new(1, 6)
}

/// `B2({t})`.
pub fn periodic_bernoulli2(t: Exponent) -> Exponent {
    bernoulli2(t - t.floor())
}

/// Exponent of the `q` prefactor of `η_{M,g}`: `M·B2(g/M)/2`.
pub fn gen_eta_prefactor(level: i64, g: i64) -> Exponent {
    Exponent::from_integer(level) * bernoulli2(Exponent::new(g, level)) / 2
}

/// A generalized eta-quotient `Π_{1≤g≤⌊M/2⌋} η_{M,g}(τ)^{r_g}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenEtaQuotient {
    level: i64,
    exponents: BTreeMap<i64, i64>,
}

impl GenEtaQuotient {
    pub fn new(level: i64, exponents: &[(i64, i64)]) -> Result<Self> {
        if level < 2 {
            return Err(Error::InvalidArgument(format!(
                "generalized eta level {level} must be at least 2"
            )));
        }
        let mut map = BTreeMap::new();
        for &(g, r) in exponents {
            check_index(level, g)?;
            *map.entry(g).or_insert(0) += r;
        }
        map.retain(|_, r| *r != 0);
        Ok(GenEtaQuotient {
            level,
            exponents: map,
        })
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn exponents(&self) -> &BTreeMap<i64, i64> {
        &self.exponents
    }

    pub fn mul(&self, other: &GenEtaQuotient) -> Result<Self> {
        if self.level != other.level {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply generalized eta-quotients of levels {} and {}",
                self.level, other.level
            )));
        }
        let pairs: Vec<_> = self
            .exponents
            .iter()
            .chain(other.exponents.iter())
            .map(|(&g, &r)| (g, r))
            .collect();
        GenEtaQuotient::new(self.level, &pairs)
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut out = self.clone();
        for r in out.exponents.values_mut() {
            *r *= k;
        }
        out.exponents.retain(|_, r| *r != 0);
        out
    }

    pub fn prefactor(&self) -> Exponent {
        self.exponents
            .iter()
            .map(|(&g, &r)| gen_eta_prefactor(self.level, g) * r)
            .sum()
    }
}

fn check_index(level: i64, g: i64) -> Result<()> {
    if g < 1 || g > level / 2 {
        return Err(Error::IndexOutOfRange {
            index: g,
            max: level / 2,
            level,
        });
    }
    Ok(())
}

/// `η_{M,g}(τ) = q^{M·B2(g/M)/2} (q^g, q^{M−g}; q^M)_∞`.
pub fn gen_eta_series(level: i64, g: i64, order: u32) -> Result<QSeries> {
    Ok(gen_eta_quotient_series(&GenEtaQuotient::new(level, &[(g, 1)])?, order))
}

pub fn gen_eta_quotient_series(quotient: &GenEtaQuotient, order: u32) -> QSeries {
    let m = quotient.level as usize;
    let mut p = ProductBuilder::new(1, order as usize);
    for (&g, &r) in &quotient.exponents {
        let g = g as usize;
        p.apply_progression(1, g, m, r);
        p.apply_progression(1, m - g, m, r);
    }
    p.finish(quotient.prefactor())
}

/// A signed monomial `sign·q^exponent` used as a theta function argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub sign: i64,
    pub exponent: Exponent,
}

impl SignedMonomial {
    pub fn new(sign: i64, exponent: Exponent) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        SignedMonomial { sign, exponent }
    }

    /// `-q^e` for `e > 0`, `+q^(-e)` for a negative argument: the DSL's
    /// encoding of a signed monomial as one integer.
    pub fn from_signed_integer(e: i64) -> Self {
        SignedMonomial::new(e.signum(), Exponent::from_integer(e.abs()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaForm {
    /// `(−a, −b, ab; ab)_∞`.
    Product,
    /// `Σ_{n∈Z} a^{n(n+1)/2} b^{n(n−1)/2}`.
    BilateralSum,
}

/// Ramanujan's `f(a, b)` at signed monomial arguments.
pub fn theta_f(a: SignedMonomial, b: SignedMonomial, form: ThetaForm, order: u32) -> Result<QSeries> {
    if !a.exponent.is_positive() || !b.exponent.is_positive() {
        return Err(Error::DivergentProduct {
            start: a.exponent.to_string(),
            step: b.exponent.to_string(),
        });
    }
    let grid = grid_of(&[a.exponent, b.exponent]);
    let len = order as usize * grid as usize;
    let ea = grid_units(a.exponent, grid);
    let eb = grid_units(b.exponent, grid);
    let step = ea + eb;
    let sab = a.sign * b.sign;
    match form {
        ThetaForm::Product => {
            let mut p = ProductBuilder::new(grid, len);
            // (−a; ab)·(−b; ab): factor 1 + a·(ab)^n has sign −a.sign·sab^n
            let mut k = 0usize;
            let mut sn = 1i64;
            while ea + k * step < len || eb + k * step < len {
                p.apply(-a.sign * sn, ea + k * step, 1);
                p.apply(-b.sign * sn, eb + k * step, 1);
                k += 1;
                sn *= sab;
            }
            // (ab; ab)
            let mut e = step;
            let mut sn = sab;
            while e < len {
                p.apply(sn, e, 1);
                e += step;
                sn *= sab;
            }
            Ok(p.finish(Exponent::zero()))
        }
        ThetaForm::BilateralSum => {
            let mut coeffs = vec![BigInt::zero(); len];
            for dir in [1i64, -1] {
                let mut n: i64 = if dir == 1 { 0 } else { -1 };
                loop {
                    let ta = n * (n + 1) / 2;
                    let tb = n * (n - 1) / 2;
                    let e = ea as i64 * ta + eb as i64 * tb;
                    if e >= len as i64 {
                        break;
                    }
                    let sign = sign_pow(a.sign, ta) * sign_pow(b.sign, tb);
                    coeffs[e as usize] += sign;
                    n += dir;
                }
            }
            Ok(QSeries::from_integers(grid, 0, coeffs, len as i64))
        }
    }
}

fn sign_pow(s: i64, e: i64) -> i64 {
    if s == -1 && e.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

/// `Π_{q^k} = q^{k/4} (q^{2k}; q^{2k})²_∞ / (q^k; q^{2k})²_∞`.
pub fn pi_q(k: u32, order: u32) -> QSeries {
    let k = k as usize;
    let mut p = ProductBuilder::new(1, order as usize);
    p.apply_progression(1, 2 * k, 2 * k, 2);
    p.apply_progression(1, k, 2 * k, -2);
    p.finish(Exponent::new(k as i64, 4))
}
