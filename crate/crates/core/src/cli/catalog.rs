//! The shipped identity catalog and verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{Exponent, QSeries};

use super::expr::{parse_identity, Evaluator, Expr, Identity};

const CATALOG: &str = include_str!("../../catalog/identities.txt");

/// Precision used when an entry gives no `# order:` header.
pub const CATALOG_ORDER: u32 = 40;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub name: String,
    pub identity: Identity,
    pub order: u32,
    pub note: String,
}

/// Reads `# name:` / `# order:` / `# note:` headers, each followed by one
/// identity line.
pub fn parse_catalog(text: &str) -> Result<Vec<IdentityRecord>> {
    let mut out: Vec<IdentityRecord> = Vec::new();
    let mut name: Option<String> = None;
    let mut order = CATALOG_ORDER;
    let mut note = String::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(v) = rest.strip_prefix("name:") {
                name = Some(v.trim().to_string());
                order = CATALOG_ORDER;
                note.clear();
            } else if let Some(v) = rest.strip_prefix("order:") {
                order = v.trim().parse().map_err(|_| {
                    Error::InvalidArgument(format!("catalog line {}: bad order `{}`", i + 1, v.trim()))
                })?;
            } else if let Some(v) = rest.strip_prefix("note:") {
                if !note.is_empty() {
                    note.push(' ');
                }
                note.push_str(v.trim());
            }
            continue;
        }
        let Some(n) = name.take() else {
            return Err(Error::InvalidArgument(format!(
                "catalog line {}: identity without a `# name:` header",
                i + 1
            )));
        };
        let identity = parse_identity(line).map_err(|e| match e {
            Error::Syntax {
                column,
                expected,
                found,
                ..
            } => Error::Syntax {
                line: i + 1,
                column,
                expected,
                found,
            },
            other => other,
        })?;
        if out.iter().any(|r| r.name == n) {
            return Err(Error::InvalidArgument(format!("duplicate catalog name `{n}`")));
        }
        out.push(IdentityRecord {
            name: n,
            identity,
            order,
            note: note.clone(),
        });
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}

/// The shipped catalog, sorted by name.
pub fn catalog() -> Vec<IdentityRecord> {
    parse_catalog(CATALOG).expect("shipped catalog parses")
}

pub fn lookup(name: &str) -> Option<IdentityRecord> {
    catalog().into_iter().find(|r| r.name == name)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FirstNonzero {
    pub exponent: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub status: Status,
    pub grid_denominator: Option<i64>,
    pub truncation_exponent: Option<String>,
    pub first_nonzero: Option<FirstNonzero>,
    pub elapsed_ms: u64,
    /// Orders checked past the lowest valuation of a top-level summand.
    #[serde(skip)]
    pub checked_orders: Option<Exponent>,
    #[serde(skip)]
    pub message: Option<String>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn line(&self) -> String {
        match self.status {
            Status::Verified => format!(
                "{}: verified modulo q^{} ({} orders)",
                self.name,
                self.truncation_exponent.as_deref().unwrap_or("?"),
                self.checked_orders.map_or("?".to_string(), |o| o.to_string())
            ),
            Status::Failed => {
                let f = self.first_nonzero.as_ref().expect("failed reports carry a residual");
                format!(
                    "{}: FAILED, residual {}*q^{} (modulo q^{})",
                    self.name,
                    f.coefficient,
                    f.exponent,
                    self.truncation_exponent.as_deref().unwrap_or("?")
                )
            }
            Status::Error => format!(
                "{}: error: {}",
                self.name,
                self.message.as_deref().unwrap_or("unknown")
            ),
        }
    }
}

fn summands<'a>(e: &'a Expr, out: &mut Vec<&'a Expr>) {
    match e {
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            summands(a, out);
            summands(b, out);
        }
        Expr::Neg(a) => summands(a, out),
        other => out.push(other),
    }
}

/// The residual `lhs − rhs` and the lowest valuation among the top-level
/// summands of either side.
fn residual(identity: &Identity, ev: &Evaluator) -> Result<(QSeries, Option<Exponent>)> {
    let lhs = ev.eval(&identity.lhs)?;
    let rhs = ev.eval(&identity.rhs)?;
    let mut terms = Vec::new();
    summands(&identity.lhs, &mut terms);
    summands(&identity.rhs, &mut terms);
    let mut low: Option<Exponent> = None;
    for t in terms {
        if let Some(v) = ev.eval(t)?.valuation() {
            low = Some(low.map_or(v, |l| l.min(v)));
        }
    }
    Ok((lhs.sub(&rhs), low))
}

/// Evaluates `lhs − rhs` with the given evaluator.
pub fn verify_with(name: &str, identity: &Identity, ev: &Evaluator) -> Report {
    let start = Instant::now();
    let outcome = residual(identity, ev);
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match outcome {
        Ok((r, low)) => {
            let trunc = r.truncation();
            let first_nonzero = r.leading().map(|(e, c)| FirstNonzero {
                exponent: e.to_string(),
                coefficient: c.to_string(),
            });
            Report {
                name: name.to_string(),
                status: if first_nonzero.is_none() {
                    Status::Verified
                } else {
                    Status::Failed
                },
                grid_denominator: Some(r.grid_denominator()),
                truncation_exponent: Some(trunc.to_string()),
                first_nonzero,
                elapsed_ms,
                checked_orders: Some(low.map_or(trunc, |v| trunc - v)),
                message: None,
            }
        }
        Err(e) => Report {
            name: name.to_string(),
            status: Status::Error,
            grid_denominator: None,
            truncation_exponent: None,
            first_nonzero: None,
            elapsed_ms,
            checked_orders: None,
            message: Some(e.to_string()),
        },
    }
}

pub fn verify(name: &str, identity: &Identity, order: u32) -> Report {
    verify_with(name, identity, &Evaluator::new(order))
}

pub fn verify_record(record: &IdentityRecord, order: Option<u32>) -> Report {
    verify(&record.name, &record.identity, order.unwrap_or(record.order))
}

/// Verifies every record concurrently; evaluators are shared per order and
/// the reports come back sorted by name.
pub fn verify_all(records: &[IdentityRecord], order: Option<u32>) -> Vec<Report> {
    let mut evaluators: BTreeMap<u32, Evaluator> = BTreeMap::new();
    for r in records {
        let o = order.unwrap_or(r.order);
        evaluators.entry(o).or_insert_with(|| Evaluator::new(o));
    }
    let mut reports: Vec<Report> = records
        .par_iter()
        .map(|r| verify_with(&r.name, &r.identity, &evaluators[&order.unwrap_or(r.order)]))
        .collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_catalog() {
        let names: Vec<String> = catalog().into_iter().map(|r| r.name).collect();
        assert_eq!(names.len(), 23);
        for want in ["gosper-1.1", "gosper-1.7", "thm-1.1", "thm-1.2", "eq-3.1-a5", "elim-K", "lambert-odd-split"] {
            assert!(names.iter().any(|n| n == want), "{want}");
        }
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn catalog_errors() {
        assert!(parse_catalog("z == z").is_err());
        assert!(parse_catalog("# name: a\nz == z\n# name: a\nz == z").is_err());
        match parse_catalog("# name: a\n\n# order: 5\nz == (") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
        let r = parse_catalog("# name: b\n# order: 7\n# note: n\nq == q").unwrap();
        assert_eq!((r[0].order, r[0].note.as_str()), (7, "n"));
    }

    #[test]
    fn reports() {
        let ok = verify("split", &parse_identity("L(1) - L(2) == Lodd(1)").unwrap(), 30);
        assert_eq!(ok.status, Status::Verified);
        assert!(ok.first_nonzero.is_none());
        let bad = verify("bad", &parse_identity("L(1) == Lodd(1) + q^3").unwrap(), 30);
        assert_eq!(bad.status, Status::Failed);
        assert_eq!(
            bad.first_nonzero,
            Some(FirstNonzero {
                exponent: "2".into(),
                coefficient: "1".into()
            })
        );
        let err = verify("err", &parse_identity("sqrt(2*q) == 0").unwrap(), 10);
        assert_eq!(err.status, Status::Error);
        let json: serde_json::Value = serde_json::from_str(&err.to_json()).unwrap();
        assert!(json["first_nonzero"].is_null());
        assert!(err.line().contains("sqrt(2*q)"));
    }

    #[test]
    fn corrupted_theorem_fails_at_the_constant_term() {
        let record = lookup("thm-1.1").unwrap();
        let corrupted = Identity {
            lhs: Expr::Add(
                Box::new(record.identity.lhs.clone()),
                Box::new(super::super::expr::parse("1").unwrap()),
            ),
            rhs: record.identity.rhs.clone(),
        };
        let r = verify("corrupted", &corrupted, 40);
        assert_eq!(r.status, Status::Failed);
        assert_eq!(r.first_nonzero.unwrap().exponent, "0");
    }
}
