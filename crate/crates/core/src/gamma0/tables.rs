//! Order tables over the cusps of a level.

use std::fmt;

use crate::constructors::{g_part, h1_gen_quotient, h1_quotient, h2_gen_quotient, h2_quotient};
use crate::constructors::{EtaQuotient, GenEtaQuotient};
use crate::error::{Error, Result};
use crate::series::Exponent;

use super::cusps::{cusp_set, Cusp, Matrix2};
use super::orders::{eta_cusp_order, gen_eta_cusp_ord};

/// Rows of orders, one column per cusp of `Γ0(level)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdTable {
    pub title: String,
    pub level: i64,
    pub cusps: Vec<Cusp>,
    pub rows: Vec<(String, Vec<Exponent>)>,
}

impl OrdTable {
    pub fn row(&self, label: &str) -> Option<&[Exponent]> {
        self.rows
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, v)| v.as_slice())
    }

    pub fn cell(&self, label: &str, cusp: Cusp) -> Option<Exponent> {
        let i = self.cusps.iter().position(|&c| c == cusp)?;
        self.row(label).map(|r| r[i])
    }
}

impl fmt::Display for OrdTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        let width = self.rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0).max(6);
        write!(f, "{:<width$}", "cusp")?;
        for c in &self.cusps {
            write!(f, " {:>6}", c.to_string())?;
        }
        writeln!(f)?;
        for (label, values) in &self.rows {
            write!(f, "{label:<width$}")?;
            for v in values {
                write!(f, " {:>6}", v.to_string())?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `ord_r` of an eta quotient at each cusp of `Γ0(N)`.
pub fn eta_ord_row(quotient: &EtaQuotient, level: i64) -> Vec<Exponent> {
    cusp_set(level)
        .entries
        .iter()
        .map(|e| eta_cusp_order(quotient, level, e.representative))
        .collect()
}

/// `Ord_r` of a generalized eta quotient at each listed representative of
/// `Γ0(N)`.
pub fn gen_eta_ord_row(quotient: &GenEtaQuotient, level: i64) -> Vec<Exponent> {
    cusp_set(level)
        .entries
        .iter()
        .map(|e| gen_eta_cusp_ord(quotient, level, e.representative))
        .collect()
}

fn table(title: &str, level: i64, rows: Vec<(String, Vec<Exponent>)>) -> OrdTable {
    OrdTable {
        title: title.to_string(),
        level,
        cusps: cusp_set(level).cusps().collect(),
        rows,
    }
}

/// `Ord_r g_j²` on `Γ0(14)`.
pub fn table_g_squares() -> OrdTable {
    let rows = (1..=3)
        .map(|j| (format!("Ord g{j}^2"), gen_eta_ord_row(&g_part(j).pow(2), 14)))
        .collect();
    table("Ord_r g_j^2 on Gamma0(14)", 14, rows)
}

/// `Ord_r g_i g_j` on `Γ0(14)`.
pub fn table_g_products() -> OrdTable {
    let rows = [(1, 2), (1, 3), (2, 3)]
        .iter()
        .map(|&(i, j)| {
            let q = g_part(i).mul(&g_part(j)).unwrap();
            (format!("Ord g{i}*g{j}"), gen_eta_ord_row(&q, 14))
        })
        .collect();
    table("Ord_r g_i*g_j on Gamma0(14)", 14, rows)
}

/// `ord_r h1(ατ)`, `ord_r h2` and `ord_r J` for `J = h1(ατ)h2(τ)` on
/// `Γ0(28)`, `α = [[1, 0], [14, 1]]`, reading `ord_{r1} h1(ατ)` off the
/// class of `α(r1)`.
pub fn table_level_28() -> OrdTable {
    let alpha = Matrix2::new(1, 0, 14, 1);
    let cusps = cusp_set(28);
    let h1 = h1_quotient();
    let h2 = h2_quotient();
    let mut r1 = Vec::new();
    let mut r2 = Vec::new();
    for e in &cusps.entries {
        let image = cusps
            .class_of(alpha.act(e.representative))
            .expect("every cusp has a class");
        r1.push(eta_cusp_order(&h1, 28, image.representative));
        r2.push(eta_cusp_order(&h2, 28, e.representative));
    }
    let j = r1.iter().zip(&r2).map(|(a, b)| a + b).collect();
    table(
        "ord_r on Gamma0(28)",
        28,
        vec![
            ("ord h1(alpha*tau)".to_string(), r1),
            ("ord h2".to_string(), r2),
            ("ord J".to_string(), j),
        ],
    )
}

/// `Ord_r h1` and `Ord_r 1/h2` on `Γ0(14)` from their level-28 generalized
/// eta forms, evaluated at the listed representatives `1/c`.
pub fn table_mixed_level() -> OrdTable {
    let rows = vec![
        ("Ord h1".to_string(), gen_eta_ord_row(&h1_gen_quotient(), 14)),
        ("Ord 1/h2".to_string(), gen_eta_ord_row(&h2_gen_quotient().pow(-1), 14)),
    ];
    table("Ord_r h1 and 1/h2 on Gamma0(14)", 14, rows)
}

pub const TABLE_NAMES: [&str; 4] = ["g-squares", "g-products", "level-28", "mixed-level"];

pub fn named_table(name: &str) -> Result<OrdTable> {
    match name {
        "g-squares" => Ok(table_g_squares()),
        "g-products" => Ok(table_g_products()),
        "level-28" => Ok(table_level_28()),
        "mixed-level" => Ok(table_mixed_level()),
        _ => Err(Error::UnknownSymbol(name.to_string())),
    }
}
