//! Expression language, identity catalog and the command-line driver.

pub mod catalog;
pub mod commands;
pub mod expr;

pub use catalog::{
    catalog, lookup, parse_catalog, verify, verify_all, verify_record, verify_with, FirstNonzero,
    IdentityRecord, Report, Status, CATALOG_ORDER,
};
pub use commands::{ord_table, run_command, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
pub use expr::{eval, parse, parse_identity, Call, Evaluator, Expr, Identity};
