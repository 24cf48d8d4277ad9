//! Polynomial relations between series: interpolation of the monic
//! relation, resultant elimination and factor selection.

pub mod eliminate;
pub mod find;
pub mod level14;
pub mod poly;

pub use eliminate::{
    bareiss_determinant, resultant_eliminate, split_known_factors, sylvester_matrix,
    vanishing_factor, Factorization,
};
pub use find::{find_relation, GUARD_TERMS};
pub use level14::{eliminate_z, f_cubic, z_cubic, z_cubic_companion, Elimination};
pub use poly::{eval_poly, BivarPoly, Monomial, MultiPoly, Var, VAR_NAMES};
