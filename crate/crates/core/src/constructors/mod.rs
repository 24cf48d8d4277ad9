//! q-expansions of every named object: Pochhammer products, eta and
//! generalized eta quotients, theta functions, `Π_q`, Lambert series and the
//! level-14 cast.

pub mod lambert;
pub mod products;
pub mod symbols;

pub use lambert::{
    bailey_specialization, bilateral_lambert_difference, lambert, lambert_mod, lambert_odd,
};
pub use products::{
    bernoulli2, eta_quotient_series, gen_eta_prefactor, gen_eta_quotient_series, gen_eta_series,
    periodic_bernoulli2, pi_q, pochhammer, theta_f, EtaQuotient, GenEtaQuotient, SignedMonomial,
    ThetaForm,
};
pub use symbols::{
    g_part, g_squared_quotient, gosper_symbol, h1_gen_quotient, h1_quotient, h2_gen_quotient,
    h2_quotient, Symbol, SymbolTable,
};
