//! Double-precision evaluation of eta products and series, and numerical
//! checks of modular transformation laws.

pub mod checks;
pub mod eval;

pub use checks::{
    check_alpha_product, check_g_cycle, check_gen_eta_transform, default_samples, deviation,
    epsilon, eta_inversion_deviation, mobius, series_product_consistency, sign_law_deviation,
    z_routes_deviation, ALPHA_PRODUCT_TOL, INVERSION_TOL, TRANSFORM_TOL,
};
pub use eval::{
    eta, eval_eta_quotient, eval_gen_eta_quotient, eval_product, eval_series, gen_eta,
    Evaluable, HalfPlanePoint, IM_FLOOR,
};
