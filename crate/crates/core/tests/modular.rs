use gosper::constructors::EtaQuotient;
use gosper::gamma0::{cusp_set, eta_cusp_order, eta_modularity, psi};
use gosper::Exponent;
use proptest::prelude::*;

fn divisors(n: i64) -> Vec<i64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

#[test]
fn width_sums_equal_the_index() {
    for n in 1..=60 {
        assert_eq!(cusp_set(n).width_sum(), psi(n), "N = {n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// A weight-0 eta quotient has as many zeros as poles over the cusps.
    #[test]
    fn divisor_degree_vanishes(level in prop::sample::select(vec![4i64, 6, 8, 10, 12, 14, 18, 20, 28, 36]), raw in prop::collection::vec(-12i64..=12, 9)) {
        let ds = divisors(level);
        let mut pairs: Vec<(i64, i64)> = ds.iter().zip(&raw).map(|(&d, &r)| (d, r)).collect();
        // force weight zero
        let total: i64 = pairs.iter().map(|p| p.1).sum();
        pairs[0].1 -= total;
        let q = EtaQuotient::new(level, &pairs).unwrap();
        let degree: Exponent = cusp_set(level)
            .entries
            .iter()
            .map(|e| eta_cusp_order(&q, level, e.representative))
            .sum();
        prop_assert_eq!(degree, Exponent::from(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Valence formula: orders over the cusps sum to k·ψ(N)/12.
    #[test]
    fn divisor_degree_matches_weight(level in prop::sample::select(vec![6i64, 12, 14, 28]), raw in prop::collection::vec(-6i64..=6, 6)) {
        let pairs: Vec<(i64, i64)> = divisors(level).into_iter().zip(raw).collect();
        let q = EtaQuotient::new(level, &pairs).unwrap();
        let degree: Exponent = cusp_set(level)
            .entries
            .iter()
            .map(|e| eta_cusp_order(&q, level, e.representative))
            .sum();
        prop_assert_eq!(degree, q.weight() * Exponent::from(psi(level)) / 12);
    }
}

#[test]
fn known_modular_functions_have_degree_zero() {
    for (level, pairs) in [
        (14, vec![(1, -4), (2, 8), (7, 4), (14, -8)]),
        (28, vec![(1, -2), (2, 4), (7, -2), (14, 8), (28, -8)]),
        (28, vec![(1, 2), (2, -4), (7, -6), (14, 16), (28, -8)]),
    ] {
        let q = EtaQuotient::new(level, &pairs).unwrap();
        assert!(eta_modularity(&q, level).unwrap().is_modular_function());
        let degree: Exponent = cusp_set(level)
            .entries
            .iter()
            .map(|e| eta_cusp_order(&q, level, e.representative))
            .sum();
        assert_eq!(degree, Exponent::from(0));
    }
}
