//! Interpolating the monic relation between two series with coprime pole
//! orders at infinity.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{Exponent, QSeries};

use super::poly::{BivarPoly, MultiPoly};

/// Equations kept beyond the unknown count as a consistency margin.
pub const GUARD_TERMS: usize = 10;

fn bits(c: &BigRational) -> u64 {
    c.numer().bits() + c.denom().bits()
}

/// Solves `A·x = b` exactly. `rows` holds `[A | b]`. Returns `Ok(None)` when
/// the solution is not unique.
pub(crate) fn solve_exact(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Result<Option<Vec<BigRational>>> {
    let mut pivots = Vec::with_capacity(unknowns);
    let mut r = 0;
    for col in 0..unknowns {
        let pick = (r..rows.len())
            .filter(|&i| !rows[i][col].is_zero())
            .min_by_key(|&i| bits(&rows[i][col]));
        let Some(p) = pick else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][col];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..=unknowns {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return Err(Error::NoRelation);
    }
    if pivots.len() < unknowns {
        return Ok(None);
    }
    Ok(Some((0..unknowns).map(|i| rows[i][unknowns].clone()).collect()))
}

fn pole_order(s: &QSeries, which: &str) -> Result<u32> {
    let (v, c) = s
        .leading()
        .ok_or_else(|| Error::InvalidArgument(format!("{which} is the zero series")))?;
    if !v.is_integer() || s.grid_denominator() != 1 {
        return Err(Error::InvalidArgument(format!(
            "{which} must have integer exponents"
        )));
    }
    if !v.is_negative() {
        return Err(Error::InvalidArgument(format!("{which} must have a pole at infinity")));
    }
    if !c.is_one() {
        return Err(Error::InvalidArgument(format!(
            "{which} must have leading coefficient 1"
        )));
    }
    Ok((-*v.numer()) as u32)
}

/// The monic relation `X^n − Y^m + Σ_{am+bn≤mn} C_{a,b} X^a Y^b` with
/// `F(x, y) = 0` to the full common truncation.
pub fn find_relation(x: &QSeries, y: &QSeries) -> Result<BivarPoly> {
    let m = pole_order(x, "x")?;
    let n = pole_order(y, "y")?;
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime {
            m: m as i64,
            n: n as i64,
        });
    }
    let mut unknowns = Vec::new();
    for a in 0..=n {
        for b in 0..=m {
            if a * m + b * n <= m * n && (a, b) != (n, 0) && (a, b) != (0, m) {
                unknowns.push((a, b));
            }
        }
    }
    let xs = powers(x, n)?;
    let ys = powers(y, m)?;
    let product = |a: u32, b: u32| xs[a as usize].mul(&ys[b as usize]);
    let columns: Vec<QSeries> = unknowns.iter().map(|&(a, b)| product(a, b)).collect();
    let rhs = ys[m as usize].sub(&xs[n as usize]);
    let trunc = columns
        .iter()
        .map(QSeries::truncation)
        .chain([rhs.truncation()])
        .min()
        .expect("nonempty");
    let low = -((m * n) as i64);
    let top = trunc.floor().to_integer() + i64::from(!trunc.is_integer());
    let available = (top - low).max(0) as usize;
    let needed = unknowns.len() + GUARD_TERMS;
    if available < needed {
        let precision = x.relative_precision().min(y.relative_precision());
        let shortfall = (needed - available) as i64;
        return Err(Error::InsufficientTruncation {
            required: precision.ceil().to_integer() + shortfall,
        });
    }
    let mut rows = Vec::with_capacity(available);
    for e in low..top {
        let e = Exponent::from(e);
        let mut row = Vec::with_capacity(unknowns.len() + 1);
        for c in &columns {
            row.push(c.coefficient(e)?);
        }
        row.push(rhs.coefficient(e)?);
        rows.push(row);
    }
    let solution = solve_exact(rows, unknowns.len())?.ok_or_else(|| {
        let precision = x.relative_precision().min(y.relative_precision());
        Error::InsufficientTruncation {
            required: precision.ceil().to_integer() + unknowns.len() as i64,
        }
    })?;
    let mut terms = vec![
        ([n, 0, 0], BigRational::one()),
        ([0, m, 0], -BigRational::one()),
    ];
    for (&(a, b), c) in unknowns.iter().zip(solution) {
        terms.push(([a, b, 0], c));
    }
    let relation = BivarPoly::new(MultiPoly::from_terms(terms), m, n);
    let residual = relation.eval(x, y)?;
    if !residual.is_zero() {
        return Err(Error::NoRelation);
    }
    Ok(relation)
}

fn powers(s: &QSeries, top: u32) -> Result<Vec<QSeries>> {
    let rel = s.relative_precision();
    let mut out = vec![QSeries::monomial(BigRational::one(), Exponent::zero(), rel)];
    for k in 1..=top as usize {
        out.push(out[k - 1].mul(s));
    }
    Ok(out)
}

/// Every coefficient an integer.
pub fn has_integer_coefficients(p: &BivarPoly) -> bool {
    p.terms().all(|(_, c)| c.is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;
    use num_bigint::BigInt;

    fn series(start: i64, coeffs: &[i64], trunc: i64) -> QSeries {
        QSeries::from_integers(1, start, coeffs.iter().map(|&c| BigInt::from(c)).collect(), trunc)
    }

    #[test]
    fn identical_inputs() {
        let x = series(-1, &[1, 0, 3, 5, -2, 7, 1, 1, 1, 4, 2, 8, 1, 1, 2, 3], 15);
        let rel = find_relation(&x, &x).unwrap();
        assert_eq!(rel.to_string(), "X - Y");
    }

    /// Builds x = y^2 + 3y + 1 style data from a known relation and recovers it.
    #[test]
    fn recovers_planted_relation() {
        // y with a simple pole, x = y^2 - 3y + 2 has a double pole; relation X - Y^2 + 3Y - 2
        let y = series(-1, &[1, 0, 1, 1, 2, 0, 5, 1, 2, 1, 3, 1, 1, 0, 2, 1, 4, 2, 1, 1, 3, 3], 21);
        let two = QSeries::monomial(rat(2), Exponent::zero(), Exponent::from(40));
        let x = y.mul(&y).sub(&y.scale(&rat(3))).add(&two);
        let rel = find_relation(&x, &y).unwrap();
        assert!(rel.is_monic());
        assert!(rel.satisfies_degree_bound());
        assert_eq!(rel.as_multi(), &BivarPoly::parse("X - Y^2 + 3*Y - 2").unwrap());
    }

    #[test]
    fn rejects_bad_inputs() {
        let a = series(-2, &[1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], 13);
        let b = series(-4, &[1, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], 11);
        assert!(matches!(find_relation(&a, &b), Err(Error::NotCoprime { m: 2, n: 4 })));
        let short = series(-1, &[1, 1, 1], 2);
        assert!(matches!(
            find_relation(&short, &short),
            Err(Error::InsufficientTruncation { .. })
        ));
        let c = series(-1, &[2, 1, 1], 2);
        assert!(find_relation(&c, &c).is_err());
    }

    #[test]
    fn inconsistent_system() {
        // unrelated random-looking data cannot satisfy a degree-one relation
        let x = series(-1, &[1, 0, 1, 2, 0, 1, 3, 4, 1, 0, 2, 5, 1, 6, 0, 2, 3, 1], 17);
        let y = series(-1, &[1, 0, 1, 2, 0, 1, 3, 4, 1, 0, 2, 5, 1, 6, 0, 2, 3, 2], 17);
        assert!(matches!(find_relation(&x, &y), Err(Error::NoRelation)));
    }

    #[test]
    fn linear_solver() {
        let r = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        let rows = vec![r(&[2, 1, 5]), r(&[1, -1, 1]), r(&[3, 0, 6])];
        assert_eq!(solve_exact(rows, 2).unwrap(), Some(r(&[2, 1])));
        let rows = vec![r(&[1, 1, 2]), r(&[2, 2, 4])];
        assert_eq!(solve_exact(rows, 2).unwrap(), None);
        let rows = vec![r(&[1, 1, 2]), r(&[1, 1, 3])];
        assert!(matches!(solve_exact(rows, 2), Err(Error::NoRelation)));
    }
}
