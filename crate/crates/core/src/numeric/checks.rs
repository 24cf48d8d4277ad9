//! Numerical checks of transformation laws that are not identities of
//! q-series.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::constructors::{g_part, h1_quotient, h2_quotient, lambert_mod, pi_q, Symbol, SymbolTable};
use crate::error::{Error, Result};
use crate::gamma0::Matrix2;
use crate::series::QSeries;

use super::eval::{
    eval_eta_quotient, eval_gen_eta_quotient, eval_series, eta, lambert_mod_value, log_gen_eta,
    HalfPlanePoint,
};

const I: Complex64 = Complex64::new(0.0, 1.0);

pub const TRANSFORM_TOL: f64 = 1e-9;
pub const ALPHA_PRODUCT_TOL: f64 = 1e-8;
pub const INVERSION_TOL: f64 = 1e-10;

/// Five sample points used by the built-in checks.
pub fn default_samples() -> Vec<HalfPlanePoint> {
    [(0.1, 1.5), (0.3, 1.2), (-0.25, 1.0), (0.45, 0.8), (1.0 / 3.0, 1.0)]
        .iter()
        .map(|&(x, y)| HalfPlanePoint::from_parts(x, y).expect("above the floor"))
        .collect()
}

/// `|a − b| / max(1, |b|)`.
pub fn deviation(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

pub fn mobius(gamma: &Matrix2, tau: Complex64) -> Complex64 {
    (tau * gamma.a as f64 + gamma.b as f64) / (tau * gamma.c as f64 + gamma.d as f64)
}

/// The root of unity `ε(a, b, c, d)` of the generalized eta transformation.
pub fn epsilon(a: i64, b: i64, c: i64, d: i64) -> Complex64 {
    let phase = if c.rem_euclid(2) == 1 {
        (b * d * (1 - c * c) + c * (a + d - 3)) as f64
    } else {
        (a * c * (1 - d * d) + d * (b - c + 3)) as f64
    };
    let e = (I * PI * phase / 6.0).exp();
    if c.rem_euclid(2) == 1 {
        e
    } else {
        -I * e
    }
}

/// Both sides of `η_{M,g}(γτ) = ε(a, bM, c, d) e^{πi(g²ab/M − gb)} η_{M,ag}(τ)`
/// for `γ = [[a, b], [cM, d]]`. With `c = 0` only `±[[1, b], [0, 1]]` is
/// accepted and the translation law is used.
fn transform_sides(level: i64, g: i64, gamma: &Matrix2, tau: Complex64) -> Result<(Complex64, Complex64)> {
    if !gamma.in_gamma0(level) {
        return Err(Error::NotInGamma0(gamma.to_string(), level));
    }
    let lhs = log_gen_eta(level, g, mobius(gamma, tau));
    if gamma.c == 0 {
        let b = gamma.b * gamma.a;
        let pre = crate::constructors::gen_eta_prefactor(level, g);
        // q^{pre} picks up e^{2πi·b·pre}; the product has integer exponents
        let turn = num_traits::ToPrimitive::to_f64(&(pre * b)).expect("small rational");
        let rhs = log_gen_eta(level, g, tau) + 2.0 * PI * I * turn.fract();
        return Ok((lhs.exp(), rhs.exp()));
    }
    let (a, b, c, d) = (gamma.a, gamma.b, gamma.c / level, gamma.d);
    let phase = PI * ((g * g * a * b) as f64 / level as f64 - (g * b) as f64);
    let rhs = epsilon(a, b * level, c, d).ln() + I * phase + log_gen_eta(level, a * g, tau);
    Ok((lhs.exp(), rhs.exp()))
}

/// Largest deviation of the generalized eta transformation over the samples.
pub fn check_gen_eta_transform(level: i64, g: i64, gamma: &Matrix2, samples: &[HalfPlanePoint]) -> Result<f64> {
    let devs: Result<Vec<f64>> = samples
        .par_iter()
        .map(|p| transform_sides(level, g, gamma, p.tau()).map(|(l, r)| deviation(l, r)))
        .collect();
    Ok(devs?.into_iter().fold(0.0, f64::max))
}

/// `g1(γτ) = −g2(τ)`, `g2(γτ) = −g3(τ)`, `g3(γτ) = −g1(τ)` for
/// `γ = [[3, 1], [14, 5]]`.
pub fn check_g_cycle(samples: &[HalfPlanePoint]) -> f64 {
    let gamma = Matrix2::new(3, 1, 14, 5);
    let parts = [g_part(1), g_part(2), g_part(3)];
    samples
        .par_iter()
        .map(|p| {
            let tau = p.tau();
            let moved = mobius(&gamma, tau);
            (0..3)
                .map(|j| {
                    let lhs = eval_gen_eta_quotient(&parts[j], moved);
                    let rhs = -eval_gen_eta_quotient(&parts[(j + 1) % 3], tau);
                    deviation(lhs, rhs)
                })
                .fold(0.0, f64::max)
        })
        .reduce(|| 0.0, f64::max)
}

/// `max |h1(ατ)·h2(τ) − 16|` with `α = [[1, 0], [14, 1]]`.
pub fn check_alpha_product(samples: &[HalfPlanePoint]) -> f64 {
    let alpha = Matrix2::new(1, 0, 14, 1);
    let (h1, h2) = (h1_quotient(), h2_quotient());
    samples
        .par_iter()
        .map(|p| {
            let tau = p.tau();
            let v = eval_eta_quotient(&h1, mobius(&alpha, tau)) * eval_eta_quotient(&h2, tau);
            (v - 16.0).norm()
        })
        .reduce(|| 0.0, f64::max)
}

/// `|η(−1/τ) / (√(−iτ) η(τ)) − 1|`.
pub fn eta_inversion_deviation(point: HalfPlanePoint) -> f64 {
    let tau = point.tau();
    (eta(-1.0 / tau) / ((-I * tau).sqrt() * eta(tau)) - 1.0).norm()
}

/// `η_{N,g+N} = η_{N,−g} = −η_{N,g}` at each sample.
pub fn sign_law_deviation(level: i64, g: i64, samples: &[HalfPlanePoint]) -> f64 {
    samples
        .iter()
        .map(|p| {
            let tau = p.tau();
            let base = -log_gen_eta(level, g, tau).exp();
            let shifted = log_gen_eta(level, g + level, tau).exp();
            let negated = log_gen_eta(level, -g, tau).exp();
            deviation(shifted, base).max(deviation(negated, base))
        })
        .fold(0.0, f64::max)
}

/// For each named function, the truncated series at `q(τ)` against an
/// evaluation from products and directly summed Lambert series.
pub fn series_product_consistency(table: &SymbolTable, point: HalfPlanePoint) -> Result<Vec<(Symbol, f64)>> {
    let tau = point.tau();
    let eta_pi = |k: i64| eta(tau * (2 * k) as f64).powi(4) / eta(tau * k as f64).powi(2);
    let g = eta_pi(1) / eta_pi(7);
    let gs: Vec<Complex64> = (1..=3).map(|j| eval_gen_eta_quotient(&g_part(j), tau)).collect();
    let z = gs.iter().sum::<Complex64>();
    let f1 = gs[0] * gs[1] + gs[0] * gs[2] + gs[1] * gs[2];
    let h1 = eval_eta_quotient(&h1_quotient(), tau);
    let h2 = eval_eta_quotient(&h2_quotient(), tau);
    let t = h1 + 16.0 / h2 + 4.0 * f1;
    let lambert = |k: i64| lambert_mod_value(0, k, tau);
    let w = 4.0 * (lambert(1) - 7.0 * lambert(7)) + 1.0;
    let f = w / (eta_pi(7).powi(2) * z);
    let direct = [
        (Symbol::Z, z),
        (Symbol::G, g),
        (Symbol::H1, h1),
        (Symbol::H2, h2),
        (Symbol::T, t),
        (Symbol::F, f),
    ];
    direct
        .iter()
        .map(|&(sym, value)| {
            let s = table.get(sym)?;
            Ok((sym, deviation(eval_series(&s, tau), value)))
        })
        .collect()
}

/// The Lambert side of the `z` definition against the product side.
pub fn z_routes_deviation(point: HalfPlanePoint, order: u32) -> Result<f64> {
    let tau = point.tau();
    let numerator: QSeries = lambert_mod(1, 2, order)?.sub(&lambert_mod(7, 14, order)?.scale(&crate::series::rat(7)));
    let pi7 = pi_q(7, order);
    let lam = eval_series(&numerator, tau) / eval_series(&pi7, tau).powi(2);
    let prod: Complex64 = (1..=3).map(|j| eval_gen_eta_quotient(&g_part(j), tau)).sum();
    Ok(deviation(lam, prod))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_is_a_unit() {
        let mut count = 0;
        for a in -9i64..=9 {
            for c in -4i64..=4 {
                if c == 0 {
                    continue;
                }
                // solve a·d − b·14c = 1
                for d in -30i64..=30 {
                    if (a * d - 1) % (14 * c) == 0 {
                        let b = (a * d - 1) / (14 * c);
                        let e = epsilon(a, 14 * b, c, d);
                        assert!((e.norm() - 1.0).abs() < 1e-14);
                        count += 1;
                    }
                }
            }
        }
        assert!(count >= 100, "{count}");
    }

    #[test]
    fn transformation_law() {
        let s = default_samples();
        let gamma = Matrix2::new(3, 1, 14, 5);
        assert!(check_gen_eta_transform(14, 1, &gamma, &s).unwrap() < TRANSFORM_TOL);
        for g in 1..=7 {
            let d = check_gen_eta_transform(14, g, &Matrix2::new(5, 2, 42, 17), &s).unwrap();
            assert!(d < TRANSFORM_TOL, "g = {g}: {d}");
        }
        assert_eq!(check_gen_eta_transform(14, 3, &Matrix2::IDENTITY, &s).unwrap(), 0.0);
        assert!(check_gen_eta_transform(14, 1, &Matrix2::new(1, 3, 0, 1), &s).unwrap() < TRANSFORM_TOL);
        assert!(matches!(
            check_gen_eta_transform(14, 1, &Matrix2::new(1, 0, 3, 1), &s),
            Err(Error::NotInGamma0(_, 14))
        ));
    }

    #[test]
    fn g_cycle() {
        assert!(check_g_cycle(&default_samples()) < TRANSFORM_TOL);
        let single = [HalfPlanePoint::from_parts(0.1, 1.5).unwrap()];
        assert!(check_g_cycle(&single) < TRANSFORM_TOL);
    }

    #[test]
    fn alpha_product() {
        let pts = [
            HalfPlanePoint::from_parts(0.0, 2.0).unwrap(),
            HalfPlanePoint::from_parts(1.0 / 3.0, 1.0).unwrap(),
        ];
        assert!(check_alpha_product(&pts) < ALPHA_PRODUCT_TOL);
        assert!(check_alpha_product(&default_samples()) < ALPHA_PRODUCT_TOL);
    }

    #[test]
    fn sign_laws() {
        for (n, g) in [(14, 1), (14, 3), (28, 5)] {
            assert!(sign_law_deviation(n, g, &default_samples()) < TRANSFORM_TOL);
        }
    }

    #[test]
    fn inversion() {
        for p in default_samples() {
            assert!(eta_inversion_deviation(p) < INVERSION_TOL);
        }
    }

    #[test]
    fn series_agree_with_products() {
        let table = SymbolTable::new(40);
        let p = HalfPlanePoint::from_parts(0.0, 2.0).unwrap();
        for (sym, dev) in series_product_consistency(&table, p).unwrap() {
            assert!(dev < 1e-8, "{sym}: {dev}");
        }
        assert!(z_routes_deviation(HalfPlanePoint::from_parts(0.2, 0.9).unwrap(), 80).unwrap() < 1e-9);
    }
}
