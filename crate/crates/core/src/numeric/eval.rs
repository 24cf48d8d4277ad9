//! Floating-point values of eta products and truncated series at points of
//! the upper half-plane. Products are summed in log space.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::constructors::{bernoulli2, EtaQuotient, GenEtaQuotient};
use crate::error::{Error, Result};
use crate::series::{Exponent, QSeries};

/// Smallest imaginary part accepted for user-supplied points.
pub const IM_FLOOR: f64 = 0.05;

/// Factors closer to 1 than this end a product.
const FACTOR_EPS: f64 = 1e-17;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A point `τ` with `Im τ ≥ 0.05`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HalfPlanePoint(Complex64);

impl HalfPlanePoint {
    pub fn new(tau: Complex64) -> Result<Self> {
        if !(tau.im >= IM_FLOOR) || !tau.re.is_finite() {
            return Err(Error::OutsideDomain(format!(
                "Im tau = {} is below the floor {IM_FLOOR}",
                tau.im
            )));
        }
        Ok(HalfPlanePoint(tau))
    }

    pub fn from_parts(re: f64, im: f64) -> Result<Self> {
        HalfPlanePoint::new(Complex64::new(re, im))
    }

    pub fn tau(&self) -> Complex64 {
        self.0
    }
}

/// `q^e = exp(2πiτe)` in log form.
fn log_q_power(tau: Complex64, e: f64) -> Complex64 {
    2.0 * PI * I * tau * e
}

/// `Σ_{n≥0} log(1 − q^{start + step·n})`, requiring `|q^step| < 1`.
fn log_progression(tau: Complex64, start: f64, step: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut e = start;
    loop {
        let x = log_q_power(tau, e).exp();
        if x.norm() < FACTOR_EPS && e > 0.0 {
            break;
        }
        acc += (Complex64::new(1.0, 0.0) - x).ln();
        e += step;
    }
    acc
}

/// `log η(τ)`, reducing to `Im τ ≥ √3/2` with `η(τ+1) = e^{πi/12}η(τ)` and
/// `η(−1/τ) = √(−iτ)η(τ)`. The imaginary part is not normalized.
pub(crate) fn log_eta(tau: Complex64) -> Complex64 {
    let mut tau = tau;
    let mut shift = Complex64::new(0.0, 0.0);
    for _ in 0..200 {
        let n = tau.re.round();
        tau -= n;
        shift += I * PI * n / 12.0;
        if tau.norm_sqr() >= 1.0 - 1e-12 {
            break;
        }
        // η(τ) = η(−1/τ) / √(−iτ)
        shift -= 0.5 * (-I * tau).ln();
        tau = -1.0 / tau;
    }
    shift + I * PI * tau / 12.0 + log_progression(tau, 1.0, 1.0)
}

pub fn eta(tau: Complex64) -> Complex64 {
    log_eta(tau).exp()
}

/// `Π η(δτ)^{r_δ}`.
pub fn eval_eta_quotient(q: &EtaQuotient, tau: Complex64) -> Complex64 {
    q.exponents()
        .iter()
        .map(|(&d, &r)| log_eta(tau * d as f64) * r as f64)
        .sum::<Complex64>()
        .exp()
}

/// `log η_{M,g}(τ)` from the literal product
/// `q^{M·B2(g/M)/2} (q^g, q^{M−g}; q^M)_∞`, any integer `g` with `M ∤ g`.
pub(crate) fn log_gen_eta(level: i64, g: i64, tau: Complex64) -> Complex64 {
    let pre = Exponent::from(level) * bernoulli2(Exponent::new(g, level)) / 2;
    let pre = pre.to_f64().expect("small rational");
    let m = level as f64;
    log_q_power(tau, pre) + log_progression(tau, g as f64, m) + log_progression(tau, m - g as f64, m)
}

pub fn gen_eta(level: i64, g: i64, tau: Complex64) -> Complex64 {
    log_gen_eta(level, g, tau).exp()
}

pub fn eval_gen_eta_quotient(q: &GenEtaQuotient, tau: Complex64) -> Complex64 {
    q.exponents()
        .iter()
        .map(|(&g, &r)| log_gen_eta(q.level(), g, tau) * r as f64)
        .sum::<Complex64>()
        .exp()
}

/// The truncated series summed at `q = e^{2πiτ}`.
pub fn eval_series(s: &QSeries, tau: Complex64) -> Complex64 {
    s.terms()
        .map(|(e, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            log_q_power(tau, e.to_f64().expect("small rational")).exp() * c
        })
        .sum()
}

/// `(q; q)_∞` without its prefactor.
pub fn euler_product(tau: Complex64) -> Complex64 {
    log_progression(tau, 1.0, 1.0).exp()
}

/// `Σ_{n≥1, n≡r (mod L)} q^n/(1 − q^n)²` summed directly.
pub fn lambert_mod_value(r: i64, modulus: i64, tau: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut n = if r == 0 { modulus } else { r };
    loop {
        let x = log_q_power(tau, n as f64).exp();
        if x.norm() < FACTOR_EPS {
            break;
        }
        let one = Complex64::new(1.0, 0.0);
        acc += x / ((one - x) * (one - x));
        n += modulus;
    }
    acc
}

/// One of the objects that can be evaluated at a point.
pub enum Evaluable<'a> {
    Eta(&'a EtaQuotient),
    GenEta(&'a GenEtaQuotient),
    Series(&'a QSeries),
}

pub fn eval_product(object: Evaluable<'_>, point: HalfPlanePoint) -> Complex64 {
    let tau = point.tau();
    match object {
        Evaluable::Eta(q) => eval_eta_quotient(q, tau),
        Evaluable::GenEta(q) => eval_gen_eta_quotient(q, tau),
        Evaluable::Series(s) => eval_series(s, tau),
    }
}
