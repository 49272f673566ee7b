//! The four orbifolds with χ > 0 and boundary, and the least number of ∂₀
//! segments at which they carry an essential arc.

use orbifold_core::{Orbifold2, SegKind};
use serde::Serialize;

use crate::error::ArcError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PositiveFamily {
    /// The disk D²(1).
    Disk,
    /// The cone D²(p), p ≥ 2.
    Cone(u32),
    /// The half disk Y₁: one mirror arc.
    Y1,
    /// Y_p, p ≥ 2: two mirror arcs meeting in a corner of order p.
    Y(u32),
}

impl PositiveFamily {
    pub fn threshold(self) -> u32 {
        match self {
            PositiveFamily::Disk => 4,
            PositiveFamily::Cone(_) | PositiveFamily::Y1 => 3,
            PositiveFamily::Y(_) => 2,
        }
    }

    /// The orbifold with `n` ∂₀ segments alternating with `n` ∂₁ segments;
    /// with mirrors, the interval starts with ∂₀ and ends with ∂₁.
    pub fn with_pattern(self, n: usize) -> Orbifold2 {
        let free = vec!["D0 D1"; n].join(" ");
        let (cones, circle) = match self {
            PositiveFamily::Disk => (vec![], free),
            PositiveFamily::Cone(p) => (vec![p], free),
            PositiveFamily::Y1 => (vec![], format!("{free} M")),
            PositiveFamily::Y(p) => (vec![], format!("{free} M M@{p}")),
        };
        Orbifold2::planar_str(&cones, &[&circle])
    }
}

/// Which of the four families `o` belongs to, ignoring its boundary pattern.
pub fn classify_positive(o: &Orbifold2) -> Result<PositiveFamily, ArcError> {
    let not = || ArcError::NotThresholdFamily(o.to_string());
    if !o.euler_char()?.is_positive() || !o.orientable || o.genus > 0 || o.circles.len() != 1 {
        return Err(not());
    }
    let c = &o.circles[0];
    let mirrors: Vec<usize> = (0..c.len()).filter(|&s| c.kind(s) == SegKind::M).collect();
    match (o.cone_points.as_slice(), mirrors.as_slice()) {
        ([], []) => Ok(PositiveFamily::Disk),
        ([p], []) => Ok(PositiveFamily::Cone(*p)),
        ([], [_]) if c.len() > 1 => Ok(PositiveFamily::Y1),
        ([], [a, b]) if o.boundary_component_count() == 1 => {
            let second = if c.kind(*a + 1) == SegKind::M { (*a + 1) % c.len() } else { *b };
            c.seg(second).corner.map(PositiveFamily::Y).ok_or_else(not)
        }
        _ => Err(not()),
    }
}

/// Least |∂₀| at which `o`'s family has an essential arc.
pub fn threshold_k(o: &Orbifold2) -> Result<u32, ArcError> {
    Ok(classify_positive(o)?.threshold())
}
