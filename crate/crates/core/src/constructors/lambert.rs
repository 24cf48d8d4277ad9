//! Lambert series `Σ x/(1 − x)²` over arithmetic progressions, computed as
//! divisor sums.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::QSeries;

/// Adds `sign · Σ_{m≥1} m q^{e·m}` into `coeffs` (index = exponent − base).
fn add_lambert_term(coeffs: &mut [BigInt], base: i64, e: i64, sign: i64) {
    let mut m = 1i64;
    loop {
        let idx = e * m - base;
        if idx >= coeffs.len() as i64 {
            break;
        }
        coeffs[idx as usize] += sign * m;
        m += 1;
    }
}

/// `Σ_{n≥1, n≡r (mod L)} q^n/(1 − q^n)²`, known to `order` integer powers
/// beyond its valuation. The coefficient of `q^M` is `Σ_{d|M, d≡r} M/d`.
pub fn lambert_mod(r: i64, modulus: i64, order: u32) -> Result<QSeries> {
    if modulus < 1 || !(0..modulus).contains(&r) {
        return Err(Error::InvalidArgument(format!(
            "residue {r} modulo {modulus} must satisfy 0 <= r < L"
        )));
    }
    let first = if r == 0 { modulus } else { r };
    let trunc = first + order as i64;
    let mut coeffs = vec![BigInt::zero(); (trunc - first) as usize];
    let mut d = first;
    while d < trunc {
        add_lambert_term(&mut coeffs, first, d, 1);
        d += modulus;
    }
    Ok(QSeries::from_integers(1, first, coeffs, trunc))
}

/// `Σ_{n≥1} q^{kn}/(1 − q^{kn})²`.
pub fn lambert(k: i64, order: u32) -> Result<QSeries> {
    lambert_mod(0, k, order)
}

/// `Σ_{n≥1} q^{k(2n−1)}/(1 − q^{k(2n−1)})²`.
pub fn lambert_odd(k: i64, order: u32) -> Result<QSeries> {
    lambert_mod(k, 2 * k, order)
}

/// The bilateral difference
/// `Σ_{n∈Z} [x_n/(1 − x_n)² − y_n/(1 − y_n)²]` with `x_n = q^{a + Pn}` and
/// `y_n = q^{b + Pn}`. Terms with negative exponent are reflected through
/// `x/(1 − x)² = x⁻¹/(1 − x⁻¹)²`.
pub fn bilateral_lambert_difference(a: i64, b: i64, period: i64, order: u32) -> Result<QSeries> {
    if period < 1 {
        return Err(Error::InvalidArgument(format!("period {period} must be positive")));
    }
    for e in [a, b] {
        if e.rem_euclid(period) == 0 {
            return Err(Error::PoleInBilateralSum {
                residue: e,
                period,
            });
        }
    }
    let lowest = [a, b]
        .iter()
        .flat_map(|&e| {
            let r = e.rem_euclid(period);
            [r, period - r]
        })
        .min()
        .unwrap();
    let trunc = lowest + order as i64;
    let mut coeffs = vec![BigInt::zero(); order as usize];
    for (start, sign) in [(a, 1i64), (b, -1i64)] {
        // every n with |start + P n| < trunc
        let n_lo = (-trunc - start).div_euclid(period);
        let n_hi = (trunc - start).div_euclid(period) + 1;
        for n in n_lo..=n_hi {
            let e = (start + period * n).abs();
            if e < trunc {
                add_lambert_term(&mut coeffs, lowest, e, sign);
            }
        }
    }
    Ok(QSeries::from_integers(1, lowest, coeffs, trunc))
}

/// The monomial specialization `a = q^i`, `b = q^{L/2}` of the bilateral
/// Lambert sum with `q` replaced by `q^L`.
pub fn bailey_specialization(i: i64, period: i64, order: u32) -> Result<QSeries> {
    if period < 2 || period % 2 != 0 {
        return Err(Error::InvalidArgument(format!("period {period} must be even")));
    }
    let r = i.rem_euclid(period);
    if r == 0 || r == period / 2 {
        return Err(Error::PoleInBilateralSum {
            residue: i,
            period,
        });
    }
    if !(0 < i && i < period) {
        return Err(Error::InvalidArgument(format!(
            "index {i} must lie strictly between 0 and {period}"
        )));
    }
    bilateral_lambert_difference(i, period / 2, period, order)
}
