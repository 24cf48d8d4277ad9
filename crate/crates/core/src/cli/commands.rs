//! Subcommands and exit codes: 0 success, 1 verification failure, 2 usage
//! error.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand};

use crate::constructors::{EtaQuotient, GenEtaQuotient};
use crate::error::{Error, Result};
use crate::gamma0::{cusp_set, eta_ord_row, gen_eta_ord_row, named_table, Matrix2, OrdTable, TABLE_NAMES};
use crate::numeric::{
    check_alpha_product, check_g_cycle, check_gen_eta_transform, default_samples,
    eta_inversion_deviation, ALPHA_PRODUCT_TOL, INVERSION_TOL, TRANSFORM_TOL,
};
use crate::relations::find::has_integer_coefficients;
use crate::relations::{eliminate_z, find_relation};
use crate::series::DEFAULT_ORDER;

use super::catalog::{catalog, lookup, verify, verify_all, verify_record, Report, Status};
use super::expr::{parse, parse_identity, Evaluator};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gosper", about = "Exact q-series toolkit for level-14 Lambert series identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify catalog identities or an ad-hoc `lhs == rhs`
    Verify {
        name: Option<String>,
        #[arg(long, conflicts_with_all = ["name", "expr"])]
        all: bool,
        #[arg(long, conflicts_with = "name")]
        expr: Option<String>,
        /// Integer orders kept past each valuation
        #[arg(long)]
        order: Option<u32>,
        #[arg(long)]
        json: bool,
        /// List catalog names instead
        #[arg(long, conflicts_with_all = ["name", "expr", "all"])]
        list: bool,
    },
    /// Cusps of Gamma0(N) with representatives and widths
    Cusps { level: i64 },
    /// Order table by name, or `eta:N:d^r,...` / `geta:M:N:g^r,...`
    OrdTable { spec: String },
    /// Monic relation between two expressions with coprime pole orders
    FindRelation {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 60)]
        order: u32,
    },
    /// Eliminate z between the z cubic and the t relation
    Eliminate {
        #[arg(long, default_value_t = 60)]
        order: u32,
    },
    /// Floating-point checks of the transformation laws
    NumericCheck {
        /// One tolerance for every check instead of the built-in ones
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print the expansion of an expression
    Expand {
        expr: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: u32,
    },
}

/// Runs one command line (without the program name) and returns the exit
/// code and everything that would be printed.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("gosper")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn dispatch(cmd: Command) -> Result<(i32, String)> {
    match cmd {
        Command::Verify {
            name,
            all,
            expr,
            order,
            json,
            list,
        } => run_verify(name, all, expr, order, json, list),
        Command::Cusps { level } => cusps(level),
        Command::OrdTable { spec } => ord_table(&spec).map(|t| (EXIT_OK, t.to_string())),
        Command::FindRelation { x, y, order } => relation(&x, &y, order),
        Command::Eliminate { order } => eliminate(order),
        Command::NumericCheck { tol } => numeric_check(tol),
        Command::Expand { expr, order } => {
            let s = Evaluator::new(order).eval(&parse(&expr)?)?;
            Ok((EXIT_OK, format!("{s}\n")))
        }
    }
}

fn report_output(reports: &[Report], json: bool) -> (i32, String) {
    let mut out = String::new();
    for r in reports {
        let line = if json { r.to_json() } else { r.line() };
        writeln!(out, "{line}").unwrap();
    }
    let code = if reports.iter().all(|r| r.status == Status::Verified) {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    (code, out)
}

fn run_verify(
    name: Option<String>,
    all: bool,
    expr: Option<String>,
    order: Option<u32>,
    json: bool,
    list: bool,
) -> Result<(i32, String)> {
    if order == Some(0) {
        return Err(Error::InvalidArgument("--order must be positive".into()));
    }
    if list {
        let mut out = String::new();
        for r in catalog() {
            writeln!(out, "{:<20} {:>4}  {}", r.name, r.order, r.note).unwrap();
        }
        return Ok((EXIT_OK, out));
    }
    let reports = if all {
        verify_all(&catalog(), order)
    } else if let Some(text) = expr {
        let identity = parse_identity(&text)?;
        vec![verify("expr", &identity, order.unwrap_or(super::catalog::CATALOG_ORDER))]
    } else if let Some(n) = name {
        let record = lookup(&n).ok_or_else(|| Error::UnknownSymbol(n.clone()))?;
        vec![verify_record(&record, order)]
    } else {
        return Err(Error::InvalidArgument(
            "verify needs a catalog name, --all, --expr or --list".into(),
        ));
    };
    Ok(report_output(&reports, json))
}

fn cusps(level: i64) -> Result<(i32, String)> {
    if level < 1 {
        return Err(Error::InvalidArgument(format!("level {level} must be positive")));
    }
    Ok((EXIT_OK, cusp_set(level).to_string()))
}

/// `d^r` pairs separated by commas.
fn exponent_pairs(text: &str) -> Result<Vec<(i64, i64)>> {
    text.split(',')
        .map(|part| {
            let part = part.trim();
            let (d, r) = part.split_once('^').unwrap_or((part, "1"));
            match (d.trim().parse(), r.trim().parse()) {
                (Ok(d), Ok(r)) => Ok((d, r)),
                _ => Err(Error::InvalidArgument(format!("bad factor `{part}`, expected d^r"))),
            }
        })
        .collect()
}

fn level_arg(s: &str) -> Result<i64> {
    s.parse()
        .ok()
        .filter(|&n: &i64| n >= 1)
        .ok_or_else(|| Error::InvalidArgument(format!("bad level `{s}`")))
}

fn table_alias(id: &str) -> &str {
    match id {
        "tables/3.1" => "g-squares",
        "tables/3.2" => "g-products",
        "tables/4.1" => "level-28",
        "tables/4.2" => "mixed-level",
        other => other,
    }
}

/// Resolves an order-table id or quotient spec.
pub fn ord_table(spec: &str) -> Result<OrdTable> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["eta", n, factors] => {
            let level = level_arg(n)?;
            let q = EtaQuotient::new(level, &exponent_pairs(factors)?)?;
            Ok(quotient_table(spec, level, eta_ord_row(&q, level)))
        }
        ["geta", m, n, factors] => {
            let (m, level) = (level_arg(m)?, level_arg(n)?);
            let q = GenEtaQuotient::new(m, &exponent_pairs(factors)?)?;
            Ok(quotient_table(spec, level, gen_eta_ord_row(&q, level)))
        }
        [id] => named_table(table_alias(id)).map_err(|_| {
            Error::InvalidArgument(format!(
                "unknown table `{id}`; known: {} (or eta:N:d^r,... / geta:M:N:g^r,...)",
                TABLE_NAMES.join(", ")
            ))
        }),
        _ => Err(Error::InvalidArgument(format!("bad table spec `{spec}`"))),
    }
}

fn quotient_table(spec: &str, level: i64, row: Vec<crate::series::Exponent>) -> OrdTable {
    OrdTable {
        title: format!("orders of {spec} on Gamma0({level})"),
        level,
        cusps: cusp_set(level).cusps().collect(),
        rows: vec![("ord".to_string(), row)],
    }
}

fn relation(x: &str, y: &str, order: u32) -> Result<(i32, String)> {
    let ev = Evaluator::new(order);
    let xs = ev.eval(&parse(x)?)?;
    let ys = ev.eval(&parse(y)?)?;
    let rel = find_relation(&xs, &ys)?;
    let mut out = format!("F(X, Y) = {rel}\n");
    if !has_integer_coefficients(&rel) {
        out.push_str("note: some coefficients are not integers\n");
    }
    Ok((EXIT_OK, out))
}

fn eliminate(order: u32) -> Result<(i32, String)> {
    let start = Instant::now();
    let table = crate::constructors::SymbolTable::new(order);
    let e = eliminate_z(&table)?;
    let mut out = String::new();
    writeln!(out, "t relation: {}", e.t_relation).unwrap();
    writeln!(out, "resultant terms: {}", e.resultant.num_terms()).unwrap();
    writeln!(out, "scalar content: {}", e.split.scalar).unwrap();
    writeln!(out, "monomial content: {}", e.split.monomial_string()).unwrap();
    writeln!(out, "f cubic multiplicity: {}", e.split.multiplicities[0]).unwrap();
    writeln!(out, "cofactor K ({} terms, X = F, Y = G):", e.split.cofactor.num_terms()).unwrap();
    writeln!(out, "  {}", e.split.cofactor.display_with(&["Z", "X", "Y"])).unwrap();
    writeln!(out, "elapsed: {} ms", start.elapsed().as_millis()).unwrap();
    Ok((EXIT_OK, out))
}

fn numeric_check(tol: Option<f64>) -> Result<(i32, String)> {
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance {t} must be positive")));
        }
    }
    let samples = default_samples();
    let gamma = Matrix2::new(3, 1, 14, 5);
    let mut transform = 0.0f64;
    for g in 1..=7 {
        transform = transform.max(check_gen_eta_transform(14, g, &gamma, &samples)?);
    }
    let inversion = samples.iter().map(|&p| eta_inversion_deviation(p)).fold(0.0, f64::max);
    let checks = [
        ("generalized eta transformation", transform, TRANSFORM_TOL),
        ("g1 -> -g2 -> -g3 -> -g1 cycle", check_g_cycle(&samples), TRANSFORM_TOL),
        ("|h1(alpha tau) h2(tau) - 16|", check_alpha_product(&samples), ALPHA_PRODUCT_TOL),
        ("eta inversion", inversion, INVERSION_TOL),
    ];
    let mut out = String::new();
    let mut code = EXIT_OK;
    for (label, dev, default) in checks {
        let limit = tol.unwrap_or(default);
        let pass = dev < limit;
        if !pass {
            code = EXIT_FAILED;
        }
        writeln!(
            out,
            "{} {label}: {dev:.3e} (< {limit:.0e})",
            if pass { "PASS" } else { "FAIL" }
        )
        .unwrap();
    }
    Ok((code, out))
}
