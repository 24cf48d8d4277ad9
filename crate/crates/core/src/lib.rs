//! Exact q-series toolkit for Lambert series identities of level 14.

pub mod cli;
pub mod constructors;
pub mod error;
pub mod gamma0;
pub mod numeric;
pub mod relations;
pub mod series;

pub use error::{Error, Result};
pub use series::{Exponent, QSeries};
