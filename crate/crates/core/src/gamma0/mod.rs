//! Cusps of `Γ0(N)` and orders of vanishing of eta quotients there.

pub mod cusps;
pub mod orders;
pub mod tables;

pub use cusps::{cusp_equivalent, cusp_matrix, cusp_set, psi, Cusp, CuspEntry, CuspTable, Matrix2};
pub use orders::{
    constancy_check, eta_cusp_order, eta_modularity, gen_eta_cusp_ord, gen_eta_gamma1_check,
    kronecker, sum_ord_bound, EtaModularity, OrdBound,
};
pub use tables::{
    eta_ord_row, gen_eta_ord_row, named_table, table_g_products, table_g_squares, table_level_28,
    table_mixed_level, OrdTable, TABLE_NAMES,
};
