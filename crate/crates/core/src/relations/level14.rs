//! The level-14 cubics in `z`, `f` and `g`, and the elimination of `z`.

use std::collections::HashMap;

use crate::constructors::{Symbol, SymbolTable};
use crate::error::Result;
use crate::series::QSeries;

use super::eliminate::{resultant_eliminate, split_known_factors, Factorization};
use super::find::find_relation;
use super::poly::{BivarPoly, MultiPoly, Var};

fn parse(s: &str) -> MultiPoly {
    s.parse().expect("well-formed built-in polynomial")
}

/// `z³ + 4gz² − 3g²z − g(g⁴ + 4g² + 49)`.
pub fn z_cubic() -> MultiPoly {
    parse("Z^3 + 4*G*Z^2 - 3*G^2*Z - G*(G^4 + 4*G^2 + 49)")
}

/// The other cubic factor of `F(z², g²)`.
pub fn z_cubic_companion() -> MultiPoly {
    parse("Z^3 - 4*G*Z^2 - 3*G^2*Z + G*(G^4 + 4*G^2 + 49)")
}

pub fn f_cubic() -> MultiPoly {
    parse(
        "G^2*(G^4 + 4*G^2 + 49)*F^3 - G^2*(2*G^4 + 5*G^2 + 98)*F^2 \
         - 2*G^2*(5*G^4 + 22*G^2 + 245)*F - (G^2 - 4*G + 7)^2*(G^2 + 4*G + 7)^2",
    )
}

/// `F(gz(f − 4), g²)` for a relation `F` between `t` and `g²`.
pub fn t_relation_in_zfg(relation: &BivarPoly) -> MultiPoly {
    relation.compose(&parse("G*Z*(F - 4)"), &parse("G^2"))
}

pub fn assignment(table: &SymbolTable) -> Result<HashMap<Var, QSeries>> {
    Ok(HashMap::from([
        (Var::Z, (*table.get(Symbol::Z)?).clone()),
        (Var::F, (*table.get(Symbol::F)?).clone()),
        (Var::G, (*table.get(Symbol::G)?).clone()),
    ]))
}

/// Relations of `z²` and of `t` against `g²`, found from the expansions.
pub fn level14_relations(table: &SymbolTable) -> Result<(BivarPoly, BivarPoly)> {
    let g2 = table.get(Symbol::G)?.pow(2)?;
    let z2 = table.get(Symbol::Z)?.pow(2)?;
    let t = table.get(Symbol::T)?;
    Ok((find_relation(&z2, &g2)?, find_relation(&t, &g2)?))
}

#[derive(Clone, Debug)]
pub struct Elimination {
    pub t_relation: BivarPoly,
    pub resultant: MultiPoly,
    pub split: Factorization,
}

/// Eliminates `z` between the `z` cubic and the `t` relation rewritten in
/// `z, f, g`, then splits the `f` cubic out of the resultant.
pub fn eliminate_z(table: &SymbolTable) -> Result<Elimination> {
    let g2 = table.get(Symbol::G)?.pow(2)?;
    let t_relation = find_relation(&*table.get(Symbol::T)?, &g2)?;
    let resultant = resultant_eliminate(&z_cubic(), &t_relation_in_zfg(&t_relation), Var::Z)?;
    let split = split_known_factors(&resultant, &[f_cubic()]);
    Ok(Elimination {
        t_relation,
        resultant,
        split,
    })
}
