//! Sylvester resultants over `Q[Z, F, G]` and factor selection by series
//! evaluation.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::series::QSeries;

use super::poly::{eval_poly, format_monomial, Monomial, MultiPoly, Var, VAR_NAMES};

/// The Sylvester matrix of `p` and `q` as polynomials in `v`.
pub fn sylvester_matrix(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<Vec<Vec<MultiPoly>>> {
    let dp = positive_degree(p, v)?;
    let dq = positive_degree(q, v)?;
    let size = (dp + dq) as usize;
    let mut rows = vec![vec![MultiPoly::zero(); size]; size];
    for (poly, deg, shifts, offset) in [(p, dp, dq, 0usize), (q, dq, dp, dq as usize)] {
        let coeffs: Vec<MultiPoly> = (0..=deg).rev().map(|k| poly.coeff_in(v, k)).collect();
        for s in 0..shifts as usize {
            for (j, c) in coeffs.iter().enumerate() {
                rows[offset + s][s + j] = c.clone();
            }
        }
    }
    Ok(rows)
}

fn positive_degree(p: &MultiPoly, v: Var) -> Result<u32> {
    match p.degree_in(v) {
        Some(d) if d > 0 => Ok(d),
        _ => Err(Error::DegreeZero(v.to_string())),
    }
}

/// Fraction-free (Bareiss) determinant; every division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> Result<MultiPoly> {
    let n = m.len();
    if n == 0 {
        return Ok(MultiPoly::one());
    }
    let mut negate = false;
    let mut prev = MultiPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(MultiPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_divide(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// The resultant of `p` and `q` with respect to `v`.
pub fn resultant_eliminate(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly> {
    bareiss_determinant(sylvester_matrix(p, q, v)?)
}

/// A polynomial split as `scalar · monomial · primitive · Π known · rest`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub scalar: BigRational,
    pub monomial: Monomial,
    /// How many times each supplied factor divided the primitive part.
    pub multiplicities: Vec<u32>,
    pub cofactor: MultiPoly,
}

impl Factorization {
    pub fn monomial_string(&self) -> String {
        format_monomial(&self.monomial, &VAR_NAMES)
    }
}

/// Strips scalar and monomial content, then divides out each known factor
/// as often as it goes. The cofactor is made primitive again.
pub fn split_known_factors(p: &MultiPoly, known: &[MultiPoly]) -> Factorization {
    let (mut scalar, monomial, mut rest) = p.primitive_part();
    let mut multiplicities = Vec::with_capacity(known.len());
    for f in known {
        let (_, _, f) = f.primitive_part();
        let mut count = 0;
        while let Ok(q) = rest.exact_divide(&f) {
            rest = q;
            count += 1;
        }
        multiplicities.push(count);
    }
    let (s, _, cofactor) = rest.primitive_part();
    scalar *= s;
    Factorization {
        scalar,
        monomial,
        multiplicities,
        cofactor,
    }
}

/// The index of the factor that vanishes identically at the assignment.
/// Every other factor must be nonzero.
pub fn vanishing_factor(factors: &[MultiPoly], assignment: &HashMap<Var, QSeries>) -> Result<usize> {
    let mut hit = None;
    for (i, f) in factors.iter().enumerate() {
        if eval_poly(f, assignment)?.is_zero() {
            if hit.is_some() {
                return Err(Error::FactorizationInconsistent);
            }
            hit = Some(i);
        }
    }
    hit.ok_or(Error::FactorizationInconsistent)
}
