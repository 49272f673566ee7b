//! Brute-force enumeration of arc classes on planar orbifolds.
//!
//! A class is fixed by its end segments and by which cones and circles lie
//! on each side. A side is trivial when it holds no cone, no circle, no
//! mirror, and its boundary stretch meets ∂₁ at most once (twisted arcs
//! count the stretch together with its mirror image).

use std::collections::BTreeSet;

use orbifold_core::{Orbifold2, SegKind};

use crate::arc::{objects, ArcClass, Fold, Marked, Separation};
use crate::error::ArcError;

/// Number of maximal ∂₁ runs in a linear sequence of segment kinds.
pub(crate) fn d1_runs(kinds: &[SegKind]) -> usize {
    let mut runs = 0;
    let mut inside = false;
    for k in kinds {
        if k.is_d1_like() {
            if !inside {
                runs += 1;
            }
            inside = true;
        } else {
            inside = false;
        }
    }
    runs
}

fn side_is_trivial(o: &Orbifold2, a: &ArcClass, forward: bool) -> bool {
    if !a.side_objects(forward).is_empty() {
        return false;
    }
    let c = &o.circles[a.ends()[0].0];
    let path = a.path(o, forward);
    let kinds: Vec<SegKind> = path.iter().map(|&s| c.kind(s)).collect();
    if kinds.contains(&SegKind::M) {
        return false;
    }
    let runs = d1_runs(&kinds);
    if !a.twisted {
        return runs <= 1;
    }
    // the stretch next to the mirror merges with its own reflection
    let next_to_mirror = if forward { kinds.last() } else { kinds.first() };
    let merged = usize::from(next_to_mirror.is_some_and(|k| k.is_d1_like()));
    2 * runs - merged <= 1
}

/// The untwisted arc bounding a regular neighbourhood of a fold at a cone point.
pub(crate) fn cone_fold_frontier(o: &Orbifold2, a: &ArcClass) -> Option<ArcClass> {
    match a.fold {
        Some(Fold::Cone(i)) => {
            let e = a.endpoints[0];
            Some(ArcClass::chord(o, e, e, &[Marked::Cone(i)], false))
        }
        _ => None,
    }
}

/// Essential in (X, ∂₀X): not homotopic into a single ∂₀ or ∂₁ segment.
pub fn is_essential(o: &Orbifold2, a: &ArcClass) -> bool {
    if let Some(f) = cone_fold_frontier(o, a) {
        return is_essential(o, &f);
    }
    match a.separation {
        Separation::Nonseparating => true,
        Separation::Separating { .. } => !side_is_trivial(o, a, true) && !side_is_trivial(o, a, false),
    }
}

fn is_pure(o: &Orbifold2, c: usize) -> bool {
    o.circles[c].len() == 1
}

/// True when the class is a single isotopy class rather than the
/// representative of an infinite family related by twists.
pub fn is_rigid(o: &Orbifold2, a: &ArcClass) -> bool {
    if let Some(f) = cone_fold_frontier(o, a) {
        return is_rigid(o, &f);
    }
    let circles = a.circles();
    if a.is_chord() {
        let f = a.side_objects(true).len();
        let b = a.side_objects(false).len();
        (f <= 1 || b == 0) && (b <= 1 || f == 0) && (is_pure(o, circles[0]) || f == 0 || b == 0)
    } else {
        let outside = objects(o, &circles).len();
        let pure = circles.iter().filter(|&&c| is_pure(o, c)).count();
        (outside <= 1 && pure == circles.len()) || (outside == 0 && pure >= 1)
    }
}

pub(crate) fn check_scope(o: &Orbifold2) -> Result<(), ArcError> {
    if let Err(v) = o.validate() {
        return Err(ArcError::Orbifold(orbifold_core::OrbifoldError::Invalid(v[0].to_string())));
    }
    if !o.orientable || o.genus > 0 {
        return Err(ArcError::OutOfScope(format!("underlying surface is not planar: {o}")));
    }
    if objects(o, &[]).len() > 8 {
        return Err(ArcError::OutOfScope(format!("too many cones and circles: {o}")));
    }
    Ok(())
}

fn subsets(items: &[Marked]) -> Vec<Vec<Marked>> {
    (0u32..(1 << items.len()))
        .map(|mask| items.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &m)| m).collect())
        .collect()
}

/// Every arc class with ends on ∂₀ (twisted ones folded on mirrors), one
/// representative per twist family.
pub fn candidate_arcs(o: &Orbifold2) -> Result<Vec<ArcClass>, ArcError> {
    check_scope(o)?;
    let mut out = BTreeSet::new();
    let segs_of = |c: usize, kind: SegKind| -> Vec<(usize, usize)> {
        (0..o.circles[c].len()).filter(|&s| o.circles[c].kind(s) == kind).map(|s| (c, s)).collect()
    };
    for c in 0..o.circles.len() {
        let d0 = segs_of(c, SegKind::D0);
        let mirrors = segs_of(c, SegKind::M);
        let sides = subsets(&objects(o, &[c]));
        for &e0 in &d0 {
            for &e1 in &d0 {
                for fwd in &sides {
                    out.insert(ArcClass::chord(o, e0, e1, fwd, false));
                }
            }
            for &m in &mirrors {
                for fwd in &sides {
                    out.insert(ArcClass::twisted_chord(o, e0, m, fwd));
                }
            }
            for c2 in (0..o.circles.len()).filter(|&c2| c2 != c) {
                for &e1 in &segs_of(c2, SegKind::D0) {
                    out.insert(ArcClass::spanning(e0, e1));
                }
                for &m in &segs_of(c2, SegKind::M) {
                    out.insert(ArcClass::twisted_spanning(e0, m));
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// All essential arc classes of a planar orbifold, sorted.
pub fn essential_arcs_oracle(o: &Orbifold2) -> Result<Vec<ArcClass>, ArcError> {
    Ok(candidate_arcs(o)?.into_iter().filter(|a| is_essential(o, a)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(pattern: &str) -> Orbifold2 {
        Orbifold2::planar_str(&[], &[pattern])
    }

    #[test]
    fn runs_are_counted_linearly() {
        use SegKind::*;
        assert_eq!(d1_runs(&[D1, D0, D1]), 2);
        assert_eq!(d1_runs(&[D1, Cut]), 1);
        assert_eq!(d1_runs(&[]), 0);
    }

    #[test]
    fn disk_with_three_d0_has_no_essential_arc() {
        assert!(essential_arcs_oracle(&disk("D0 D1 D0 D1 D0 D1")).unwrap().is_empty());
    }

    #[test]
    fn disk_with_four_d0_has_the_two_opposite_chords() {
        let o = disk("D0 D1 D0 D1 D0 D1 D0 D1");
        let arcs = essential_arcs_oracle(&o).unwrap();
        assert_eq!(arcs.len(), 2);
        assert!(arcs.contains(&ArcClass::chord(&o, (0, 0), (0, 4), &[], false)));
        assert!(arcs.contains(&ArcClass::chord(&o, (0, 2), (0, 6), &[], false)));
    }

    #[test]
    fn annulus_with_inner_d1_has_only_the_spanning_class() {
        let o = Orbifold2::planar_str(&[], &["D0", "D0 D1"]);
        let arcs = essential_arcs_oracle(&o).unwrap();
        assert_eq!(arcs, vec![ArcClass::spanning((0, 0), (1, 0))]);
    }

    #[test]
    fn twisted_side_doubles_its_runs() {
        // the middle D0 sees D1 D0 D1 towards the mirror and D0 D1 away from it
        let o = disk("D0 D1 D0 D1 D0 D1 M");
        assert!(is_essential(&o, &ArcClass::twisted_chord(&o, (0, 2), (0, 6), &[])));
        assert!(!is_essential(&o, &ArcClass::twisted_chord(&o, (0, 0), (0, 6), &[])));
        assert!(!is_essential(&o, &ArcClass::twisted_chord(&o, (0, 4), (0, 6), &[])));
    }

    #[test]
    fn rigidity_rules() {
        let pants = Orbifold2::planar_str(&[], &["D0", "D0", "D1"]);
        assert!(is_rigid(&pants, &ArcClass::spanning((0, 0), (1, 0))));
        let mixed = Orbifold2::planar_str(&[], &["D0 D1", "D0 D1"]);
        assert!(!is_rigid(&mixed, &ArcClass::spanning((0, 0), (1, 0))));
        let o = Orbifold2::planar_str(&[3], &["D0 D1", "D0"]);
        let a = ArcClass::chord(&o, (0, 0), (0, 0), &[Marked::Cone(0)], false);
        assert!(!is_rigid(&o, &a));
    }

    #[test]
    fn nonplanar_is_out_of_scope() {
        let mobius = Orbifold2 { orientable: false, genus: 1, ..Orbifold2::planar_str(&[], &["D0"]) };
        assert!(matches!(essential_arcs_oracle(&mobius), Err(ArcError::OutOfScope(_))));
    }
}
