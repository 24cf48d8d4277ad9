//! Orders of vanishing at cusps and the modularity criteria for eta and
//! generalized eta quotients.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::constructors::{periodic_bernoulli2, EtaQuotient, GenEtaQuotient};
use crate::error::{Error, Result};
use crate::series::Exponent;

use super::cusps::Cusp;

/// The Kronecker symbol `(a/n)` for `n ≥ 1`.
pub fn kronecker(a: i64, n: i64) -> i64 {
    assert!(n >= 1, "kronecker symbol needs a positive modulus");
    let mut n = n;
    let mut result = 1;
    while n % 2 == 0 {
        n /= 2;
        match a.rem_euclid(8) {
            1 | 7 => {}
            3 | 5 => result = -result,
            _ => return 0,
        }
    }
    // Jacobi symbol for odd n
    let mut a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

fn squarefree_kernel(mut n: i64) -> i64 {
    let sign = n.signum();
    n = n.abs();
    let mut out = 1;
    let mut p = 2;
    while p * p <= n {
        let mut k = 0;
        while n % p == 0 {
            n /= p;
            k += 1;
        }
        if k % 2 == 1 {
            out *= p;
        }
        p += 1;
    }
    sign * out * n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaModularity {
    pub weight: Exponent,
    /// `Σ δ r_δ ≡ 0 (mod 24)`.
    pub delta_sum_ok: bool,
    /// `Σ (N/δ) r_δ ≡ 0 (mod 24)`.
    pub codelta_sum_ok: bool,
    pub character_trivial: bool,
}

impl EtaModularity {
    pub fn is_modular_function(&self) -> bool {
        self.weight.is_zero() && self.delta_sum_ok && self.codelta_sum_ok && self.character_trivial
    }
}

/// Weight, the two congruences mod 24 and triviality of the character
/// `d ↦ ((−1)^k Π δ^{r_δ} / d)` on `Γ0(N)`.
pub fn eta_modularity(quotient: &EtaQuotient, level: i64) -> Result<EtaModularity> {
    for &delta in quotient.exponents().keys() {
        if level % delta != 0 {
            return Err(Error::NotADivisor {
                divisor: delta,
                level,
            });
        }
    }
    let weight = quotient.weight();
    let delta_sum: i64 = quotient.exponents().iter().map(|(d, r)| d * r).sum();
    let codelta_sum: i64 = quotient.exponents().iter().map(|(d, r)| level / d * r).sum();
    let character_trivial = weight.is_integer() && {
        let k = weight.to_integer();
        // squares of δ are coprime to every d that matters, so only odd r_δ count
        let top: i64 = quotient
            .exponents()
            .iter()
            .filter(|(_, r)| *r % 2 != 0)
            .map(|(d, _)| *d)
            .product();
        let top = squarefree_kernel(if k % 2 == 0 { top } else { -top });
        let bound = 24 * level * top.abs();
        (1..=bound)
            .filter(|d| d.gcd(&(6 * level)) == 1)
            .all(|d| kronecker(top, d) == 1)
    };
    Ok(EtaModularity {
        weight,
        delta_sum_ok: delta_sum.rem_euclid(24) == 0,
        codelta_sum_ok: codelta_sum.rem_euclid(24) == 0,
        character_trivial,
    })
}

/// Order of vanishing of an eta quotient on `Γ0(N)` at `r`, with
/// `d = gcd(c, N)`: `N/(24 d gcd(d, N/d)) Σ gcd(d, δ)² r_δ/δ`.
pub fn eta_cusp_order(quotient: &EtaQuotient, level: i64, r: Cusp) -> Exponent {
    let d = if r.is_infinity() { level } else { r.denom.gcd(&level) };
    let sum: Exponent = quotient
        .exponents()
        .iter()
        .map(|(&delta, &e)| {
            let g = d.gcd(&delta);
            Exponent::new(g * g * e, delta)
        })
        .sum();
    Exponent::new(level, 24 * d * d.gcd(&(level / d))) * sum
}

/// `Ord_r` of a level-`M` generalized eta quotient at a cusp of `Γ0(N)`:
/// the first exponent at `a/c`, scaled by the width `N/gcd(c², N)`.
pub fn gen_eta_cusp_ord(quotient: &GenEtaQuotient, group_level: i64, r: Cusp) -> Exponent {
    let m = quotient.level();
    let (a, c) = (r.numer, r.denom);
    let gm = if r.is_infinity() { m } else { c.gcd(&m) };
    let width = r.width(group_level);
    let first: Exponent = quotient
        .exponents()
        .iter()
        .map(|(&g, &e)| {
            Exponent::from_integer(e * gm * gm)
                / Exponent::from_integer(2 * m)
                * periodic_bernoulli2(Exponent::new(a * g, gm))
        })
        .sum();
    first * Exponent::from_integer(width)
}

/// Sufficient conditions for modularity on `Γ1(M)`.
pub fn gen_eta_gamma1_check(quotient: &GenEtaQuotient) -> bool {
    let m = quotient.level();
    let e = quotient.exponents();
    let s0: i64 = e.values().sum();
    let s1: i64 = e.iter().map(|(g, r)| g * r).sum();
    let s2: i64 = e.iter().map(|(g, r)| g * g * r).sum();
    s0.rem_euclid(12) == 0 && s1.rem_euclid(2) == 0 && s2.rem_euclid(2 * m) == 0
}

/// Lower bound for the order of a sum at one cusp.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdBound {
    pub bound: Exponent,
    /// The minimum is attained by exactly one part, so no cancellation.
    pub equality: bool,
}

impl OrdBound {
    pub fn of(parts: &[Exponent]) -> OrdBound {
        let bound = *parts.iter().min().expect("at least one part");
        let hits = parts.iter().filter(|&&p| p == bound).count();
        OrdBound {
            bound,
            equality: hits == 1,
        }
    }
}

/// Per-cusp bounds for a sum whose parts have the given order rows.
pub fn sum_ord_bound(rows: &[Vec<Exponent>]) -> Vec<OrdBound> {
    let cusps = rows.first().map_or(0, Vec::len);
    assert!(rows.iter().all(|r| r.len() == cusps), "rows must cover the same cusps");
    (0..cusps)
        .map(|i| OrdBound::of(&rows.iter().map(|r| r[i]).collect::<Vec<_>>()))
        .collect()
}

/// Holomorphic at every cusp, hence constant.
pub fn constancy_check(orders: &[Exponent]) -> bool {
    orders.iter().all(|o| !o.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{eta_quotient_series, g_part, g_squared_quotient, h1_quotient, h2_quotient};
    use crate::gamma0::cusps::cusp_set;

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker(2, 7), 1);
        assert_eq!(kronecker(2, 3), -1);
        assert_eq!(kronecker(3, 7), -1);
        assert_eq!(kronecker(-1, 3), -1);
        assert_eq!(kronecker(-1, 5), 1);
        assert_eq!(kronecker(5, 10), 0);
        assert_eq!(kronecker(3, 8), -1);
        assert_eq!(kronecker(7, 8), 1);
        for p in [3i64, 5, 7, 11, 13] {
            for a in 1..p {
                let euler = num_bigint::BigInt::from(a).modpow(&((p - 1) / 2).into(), &p.into());
                let want = if euler == 1.into() { 1 } else { -1 };
                assert_eq!(kronecker(a, p), want, "({a}/{p})");
            }
        }
    }

    #[test]
    fn g_squared_is_modular() {
        let m = eta_modularity(&g_squared_quotient(), 14).unwrap();
        assert!(m.is_modular_function());
        assert!(eta_modularity(&h1_quotient(), 28).unwrap().is_modular_function());
        assert!(eta_modularity(&h2_quotient(), 28).unwrap().is_modular_function());
        let empty = EtaQuotient::new(14, &[]).unwrap();
        assert!(eta_modularity(&empty, 14).unwrap().is_modular_function());
    }

    #[test]
    fn non_modular_quotients() {
        let eta = EtaQuotient::new(1, &[(1, 24)]).unwrap();
        let m = eta_modularity(&eta, 1).unwrap();
        assert_eq!(m.weight, Exponent::from(12));
        assert!(!m.is_modular_function());
        // η(τ)η(7τ)⁻¹: congruences fail
        let bad = EtaQuotient::new(7, &[(1, 1), (7, -1)]).unwrap();
        assert!(!eta_modularity(&bad, 7).unwrap().delta_sum_ok);
        let nonsquare = EtaQuotient::new(2, &[(1, 1), (2, -1)]).unwrap();
        assert!(!eta_modularity(&nonsquare, 2).unwrap().character_trivial);
        let square = EtaQuotient::new(6, &[(1, 1), (2, 1), (3, -1), (6, -1)]).unwrap();
        assert!(eta_modularity(&square, 6).unwrap().character_trivial);
        let e = EtaQuotient::new(14, &[(3, 1)]);
        assert!(e.is_err() || eta_modularity(&e.unwrap(), 14).is_err());
    }

    #[test]
    fn g_squared_orders() {
        let q = g_squared_quotient();
        let table = cusp_set(14);
        let orders: Vec<_> = table.cusps().map(|r| eta_cusp_order(&q, 14, r)).collect();
        assert_eq!(orders, vec![Exponent::from(0), Exponent::from(3), Exponent::from(0), Exponent::from(-3)]);
        assert_eq!(orders.iter().sum::<Exponent>(), Exponent::zero());
        assert!(!constancy_check(&orders));
    }

    #[test]
    fn order_at_infinity_is_valuation() {
        for (q, n) in [(g_squared_quotient(), 14), (h1_quotient(), 28), (h2_quotient(), 28)] {
            let v = eta_quotient_series(&q, 5).valuation().unwrap();
            assert_eq!(eta_cusp_order(&q, n, Cusp::infinity()), v);
        }
    }

    #[test]
    fn gen_eta_orders_at_infinity() {
        let q = g_part(1).pow(2);
        assert_eq!(gen_eta_cusp_ord(&q, 14, Cusp::infinity()), Exponent::from(-5));
        let zero = GenEtaQuotient::new(14, &[]).unwrap();
        assert!(gen_eta_cusp_ord(&zero, 14, Cusp::new(1, 2)).is_zero());
    }

    #[test]
    fn gamma1_conditions() {
        assert!(gen_eta_gamma1_check(&g_part(1).pow(2)));
        assert!(gen_eta_gamma1_check(&g_part(1).mul(&g_part(2)).unwrap()));
        assert!(!gen_eta_gamma1_check(&GenEtaQuotient::new(14, &[(1, 1)]).unwrap()));
    }

    #[test]
    fn bounds() {
        let i = |v: &[i64]| v.iter().map(|&x| Exponent::from(x)).collect::<Vec<_>>();
        assert_eq!(OrdBound::of(&i(&[-5, -1, 3])), OrdBound { bound: (-5).into(), equality: true });
        assert_eq!(OrdBound::of(&i(&[1, 1, 1])), OrdBound { bound: 1.into(), equality: false });
        let rows = vec![i(&[0, 1]), i(&[2, 1])];
        let b = sum_ord_bound(&rows);
        assert_eq!(b[0], OrdBound { bound: 0.into(), equality: true });
        assert!(!b[1].equality);
        assert!(constancy_check(&i(&[0, 0, 0])));
    }
}
