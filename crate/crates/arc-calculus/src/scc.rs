//! Essential simple closed curves, found on the mirror double.
//!
//! Curves of a planar orbifold without mirrors are determined by the cones
//! and circles on each side. A curve around a circle carrying both ∂₀ and
//! ∂₁ (a mixed curve) is essential unless the other side is nearly empty.

use orbifold_core::{Orbifold2, SegKind};

use crate::arc::{objects, CurveClass, Marked, Separation};
use crate::error::ArcError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccAnalysis {
    /// The double that was analysed; it has no mirrors.
    pub double: Orbifold2,
    /// An essential curve avoiding every mixed circle exists.
    pub escc: bool,
    /// Essential curves cutting off a single mixed circle, in the double.
    pub mixed: Vec<CurveClass>,
}

fn is_mixed(o: &Orbifold2, c: usize) -> bool {
    let circle = &o.circles[c];
    circle.has_kind(SegKind::D0) && (circle.has_kind(SegKind::D1) || circle.has_kind(SegKind::Cut))
}

fn planar(d: &Orbifold2) -> SccAnalysis {
    let all = objects(d, &[]);
    let escc = all.len() >= 4;
    let mut mixed = Vec::new();
    for c in (0..d.circles.len()).filter(|&c| is_mixed(d, c)) {
        let rest: Vec<Marked> = all.iter().copied().filter(|&m| m != Marked::Circle(c)).collect();
        let trivial = match rest.as_slice() {
            [] | [Marked::Cone(_)] => true,
            [Marked::Circle(k)] => d.circles[*k].len() == 1,
            _ => false,
        };
        if !trivial {
            mixed.push(CurveClass {
                twisted: false,
                separation: Separation::Separating { forward: vec![Marked::Circle(c)], backward: rest },
            });
        }
    }
    SccAnalysis { double: d.clone(), escc, mixed }
}

/// Curve analysis of `o` through its mirror double.
pub fn scc_analysis(o: &Orbifold2) -> Result<SccAnalysis, ArcError> {
    o.validate()
        .map_err(|v| ArcError::Orbifold(orbifold_core::OrbifoldError::Invalid(v[0].to_string())))?;
    let (d, _) = o.mirror_double();
    if d.genus > 0 || !d.orientable {
        let escc = d.euler_char()?.is_negative();
        return Ok(SccAnalysis { double: d, escc, mixed: Vec::new() });
    }
    Ok(planar(&d))
}

/// Whether `o` contains an essential simple closed curve (possibly twisted,
/// possibly cutting off a mixed boundary circle).
pub fn has_essential_scc(o: &Orbifold2) -> Result<bool, ArcError> {
    if o.euler_char()?.is_positive() {
        return Ok(false);
    }
    let a = scc_analysis(o)?;
    Ok(a.escc || !a.mixed.is_empty())
}
