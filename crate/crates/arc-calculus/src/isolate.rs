use std::collections::BTreeSet;

use orbifold_core::Orbifold2;

use crate::arc::ArcClass;
use crate::catalog::catalog_match_with_map;
use crate::cross::{arcs_compatible, curve_arc_compatible};
use crate::error::ArcError;
use crate::lift::lift_arc;
use crate::oracle::{essential_arcs_oracle, is_rigid};
use crate::scc::scc_analysis;

/// One representative per orbit of the orbifold's symmetries.
pub fn up_to_symmetry(o: &Orbifold2, arcs: &[ArcClass]) -> Vec<ArcClass> {
    let syms = o.symmetries();
    let reps: BTreeSet<ArcClass> =
        arcs.iter().map(|a| syms.iter().map(|s| a.mapped(s)).min().unwrap_or_else(|| a.clone())).collect();
    reps.into_iter().collect()
}

/// True when `a` and `b` differ by a symmetry of `o`.
pub fn same_orbit(o: &Orbifold2, a: &ArcClass, b: &ArcClass) -> bool {
    o.symmetries().iter().any(|s| a.mapped(s) == *b)
}

/// Isolated essential arcs found by exhaustive search, one per symmetry orbit.
pub fn oracle_isolated(o: &Orbifold2) -> Result<Vec<ArcClass>, ArcError> {
    let essential = essential_arcs_oracle(o)?;
    let scc = scc_analysis(o)?;
    if scc.escc {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for a in &essential {
        if !is_rigid(o, a) || essential.iter().any(|b| b != a && !arcs_compatible(o, a, b)) {
            continue;
        }
        if !scc.mixed.is_empty() {
            let (_, lifts) = lift_arc(o, a)?;
            if lifts.iter().any(|l| scc.mixed.iter().any(|g| !curve_arc_compatible(g, l))) {
                continue;
            }
        }
        out.push(a.clone());
    }
    Ok(up_to_symmetry(o, &out))
}

/// Isolated essential arcs of `o`, from the catalog when `o` is one of the
/// figures and from the oracle otherwise.
pub fn isolated_arcs(o: &Orbifold2) -> Result<Vec<ArcClass>, ArcError> {
    o.validate()
        .map_err(|v| ArcError::Orbifold(orbifold_core::OrbifoldError::Invalid(v[0].to_string())))?;
    if let Some((entry, sym)) = catalog_match_with_map(o) {
        return Ok(entry.isolated_arc.iter().map(|a| a.mapped(&sym)).collect());
    }
    oracle_isolated(o)
}
