//! Preimages of arcs in the mirror double, and the check that a downstairs
//! isolated arc lifts to isolated arcs upstairs.

use orbifold_core::{BoundaryCircle, DoubleMap, DoubleSide, Orbifold2, SegKind, Symmetry};

use crate::arc::{ArcClass, Fold, Marked, Separation};
use crate::error::ArcError;
use crate::oracle::{is_essential, is_rigid};

const SIDES: [DoubleSide; 2] = [DoubleSide::First, DoubleSide::Second];

fn image(map: &DoubleMap, e: (usize, usize), side: DoubleSide) -> Result<(usize, usize), ArcError> {
    map.segment(e.0, e.1, side).ok_or_else(|| ArcError::InvalidArc(format!("segment {}.{} is glued", e.0, e.1)))
}

fn side_has_mirror(o: &Orbifold2, a: &ArcClass, forward: bool) -> bool {
    a.side(forward).iter().any(|m| match *m {
        Marked::Segment(c, s) => o.circles[c].kind(s) == SegKind::M,
        Marked::Circle(c) => o.circles[c].has_kind(SegKind::M),
        Marked::Cone(_) => false,
    })
}

/// Cover objects of the cones and mirror-free circles in `side`, copy `k`.
fn copy_objects(map: &DoubleMap, side: &[Marked], k: DoubleSide) -> Vec<Marked> {
    side.iter()
        .filter_map(|m| match *m {
            Marked::Cone(i) => Some(Marked::Cone(map.cone(i, k))),
            Marked::Circle(c) => map.segment(c, 0, k).map(|(t, _)| Marked::Circle(t)),
            Marked::Segment(..) => None,
        })
        .collect()
}

/// Cover objects lying over the forward side of a twisted chord.
fn twisted_forward_objects(o: &Orbifold2, map: &DoubleMap, a: &ArcClass, home: usize) -> Vec<Marked> {
    let mut out = Vec::new();
    for m in a.side(true) {
        match *m {
            Marked::Cone(i) => {
                out.push(Marked::Cone(map.cone(i, DoubleSide::First)));
                out.push(Marked::Cone(map.cone(i, DoubleSide::Second)));
            }
            Marked::Circle(c) => {
                let circle = &o.circles[c];
                for s in 0..circle.len() {
                    for k in SIDES {
                        if let Some((t, _)) = map.segment(c, s, k) {
                            out.push(Marked::Circle(t));
                        }
                    }
                    if let Some(x) = map.corner_cone(c, s) {
                        out.push(Marked::Cone(x));
                    }
                }
            }
            Marked::Segment(..) => {}
        }
    }
    let c = a.endpoints[0].0;
    let Some(Fold::Mirror(_, fold)) = a.fold else { return out };
    let mut inner = a.path(o, true);
    for &s in &inner {
        if let Some(Some((t, _))) = map.segments[c].get(s).map(|x| x[0]) {
            if t != home {
                out.push(Marked::Circle(t));
            }
        }
    }
    inner.push(fold);
    for s in inner {
        if let Some(x) = map.corner_cone(c, s) {
            out.push(Marked::Cone(x));
        }
    }
    out.sort();
    out.dedup();
    out
}

/// True when `e` is the last free segment before a mirror, going forward.
fn last_before_mirror(c: &BoundaryCircle, s: usize) -> bool {
    c.kind(s + 1) == SegKind::M
}

/// The double and the lifts of `a` into it. For a mirror-free orbifold the
/// lift is the arc itself; for a Möbius band it is the orientation cover.
pub fn lift_arc(o: &Orbifold2, a: &ArcClass) -> Result<(Orbifold2, Vec<ArcClass>), ArcError> {
    a.check(o)?;
    if matches!(a.fold, Some(Fold::Cone(_))) {
        return Err(ArcError::OutOfScope(format!("{a} is folded on a cone point")));
    }
    if o.is_mirror_free() {
        if o.orientable {
            return Ok((o.clone(), vec![a.clone()]));
        }
        return orientation_lift(o, a);
    }
    let (d, map) = o.mirror_double();
    if d.genus > 0 || !d.orientable {
        return Err(ArcError::OutOfScope(format!("mirror double of {o} is not planar")));
    }
    let e0 = a.endpoints[0];
    let lifts = match (a.twisted, &a.separation) {
        (false, Separation::Nonseparating) => {
            let e1 = a.endpoints[1];
            let mut v = Vec::new();
            for k in SIDES {
                v.push(ArcClass::spanning(image(&map, e0, k)?, image(&map, e1, k)?));
            }
            v
        }
        (false, Separation::Separating { .. }) => {
            let e1 = a.endpoints[1];
            let (f, b) = (side_has_mirror(o, a, true), side_has_mirror(o, a, false));
            let mut v = Vec::new();
            for k in SIDES {
                let (p, q) = (image(&map, e0, k)?, image(&map, e1, k)?);
                if f && b {
                    if p.0 == q.0 {
                        return Err(ArcError::OutOfScope(format!("{a} lifts to a nonplanar arc")));
                    }
                    v.push(ArcClass::spanning(p, q));
                    continue;
                }
                // the mirror-free side stays in its copy; the second copy is reversed
                let clean_forward = !f;
                let objs = copy_objects(&map, &a.side_objects(clean_forward), k);
                let long = !a.path(o, clean_forward).is_empty() && e0 == e1;
                let lifted = match (clean_forward, k) {
                    (true, DoubleSide::First) | (false, DoubleSide::Second) => ArcClass::chord(&d, p, q, &objs, long),
                    _ => ArcClass::chord(&d, q, p, &objs, long),
                };
                v.push(lifted);
            }
            v
        }
        (true, Separation::Separating { .. }) => {
            let (p, q) = (image(&map, e0, DoubleSide::First)?, image(&map, e0, DoubleSide::Second)?);
            let objs = twisted_forward_objects(o, &map, a, p.0);
            let long = p == q && !last_before_mirror(&o.circles[e0.0], e0.1);
            vec![ArcClass::chord(&d, p, q, &objs, long)]
        }
        (true, Separation::Nonseparating) => {
            if o.circles[e0.0].has_kind(SegKind::M) {
                return Err(ArcError::OutOfScope(format!("{a} lifts to a nonplanar arc")));
            }
            vec![ArcClass::spanning(image(&map, e0, DoubleSide::First)?, image(&map, e0, DoubleSide::Second)?)]
        }
    };
    Ok((d, lifts))
}

/// Orientation double cover of a Möbius band with cones: every circle and
/// cone doubled, the arc through the crosscap lifting to two spanning arcs.
fn orientation_lift(o: &Orbifold2, a: &ArcClass) -> Result<(Orbifold2, Vec<ArcClass>), ArcError> {
    if o.genus != 1 || a.twisted || a.separation != Separation::Nonseparating || a.endpoints[0].0 != a.endpoints[1].0 {
        return Err(ArcError::OutOfScope(format!("no orientation cover lift for {a} in {o}")));
    }
    let mut circles = Vec::new();
    for c in &o.circles {
        circles.push(c.clone());
        circles.push(c.reversed());
    }
    let cone_points = o.cone_points.iter().chain(&o.cone_points).copied().collect();
    let d = Orbifold2 { orientable: true, genus: 0, cone_points, circles };
    let up = |e: (usize, usize), k: usize| {
        let n = o.circles[e.0].len();
        if k == 0 {
            (2 * e.0, e.1)
        } else {
            (2 * e.0 + 1, (n - 1 - e.1) % n)
        }
    };
    let (e0, e1) = (a.endpoints[0], a.endpoints[1]);
    let lifts = vec![ArcClass::spanning(up(e0, 0), up(e1, 1)), ArcClass::spanning(up(e0, 1), up(e1, 0))];
    Ok((d, lifts))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub double: Orbifold2,
    pub lifts: Vec<ArcClass>,
    pub essential: bool,
    pub rigid: bool,
    pub isolated: bool,
}

impl LiftReport {
    pub fn passed(&self) -> bool {
        self.essential && self.rigid && self.isolated
    }
}

/// The reflection swapping the two sheets of the cover used by [`lift_arc`]
/// (the identity when the orbifold is its own cover).
pub fn deck_involution(o: &Orbifold2) -> Result<(Orbifold2, Symmetry), ArcError> {
    let mut pairs = Vec::new();
    let mut cone_pairs = Vec::new();
    let d = if o.is_mirror_free() && o.orientable {
        let id = o.symmetries().into_iter().find(Symmetry::is_identity).expect("identity is a symmetry");
        return Ok((o.clone(), id));
    } else if o.is_mirror_free() {
        let k = o.cone_points.len();
        for (c, circle) in o.circles.iter().enumerate() {
            let n = circle.len();
            pairs.extend((0..n).map(|s| ((2 * c, s), (2 * c + 1, (n - 1 - s) % n))));
        }
        cone_pairs.extend((0..k).map(|i| (i, i + k)));
        let mut circles = Vec::new();
        for c in &o.circles {
            circles.push(c.clone());
            circles.push(c.reversed());
        }
        let cone_points = o.cone_points.iter().chain(&o.cone_points).copied().collect();
        Orbifold2 { orientable: true, genus: 0, cone_points, circles }
    } else {
        let (d, map) = o.mirror_double();
        for (c, circle) in o.circles.iter().enumerate() {
            for s in 0..circle.len() {
                if let (Some(x), Some(y)) = (map.segment(c, s, DoubleSide::First), map.segment(c, s, DoubleSide::Second)) {
                    pairs.push((x, y));
                }
            }
        }
        cone_pairs.extend((0..o.cone_points.len()).map(|i| (map.cone(i, DoubleSide::First), map.cone(i, DoubleSide::Second))));
        cone_pairs.extend(map.corners.iter().map(|&(_, x)| (x, x)));
        d
    };
    let tau = d
        .symmetries()
        .into_iter()
        .find(|t| {
            t.reflect
                && pairs.iter().all(|&(x, y)| t.segment(x.0, x.1) == y)
                && cone_pairs.iter().all(|&(x, y)| t.cone(x) == y)
        })
        .ok_or_else(|| ArcError::OutOfScope(format!("no deck involution for {o}")))?;
    Ok((d, tau))
}

/// Lifts `a` and checks the lifts on the cover: each is essential and
/// rigid, and none crosses an essential arc whose deck image it does not
/// cross itself (the lifts of embedded arcs downstairs).
pub fn lift_check(o: &Orbifold2, a: &ArcClass) -> Result<LiftReport, ArcError> {
    let (d, lifts) = lift_arc(o, a)?;
    let (_, tau) = deck_involution(o)?;
    let essential = lifts.iter().all(|l| is_essential(&d, l));
    let rigid = lifts.iter().all(|l| is_rigid(&d, l));
    let scc = crate::scc::scc_analysis(&d)?;
    let invariant: Vec<ArcClass> = crate::oracle::essential_arcs_oracle(&d)?
        .into_iter()
        .filter(|b| {
            let image = b.mapped(&tau);
            image == *b || crate::cross::arcs_compatible(&d, b, &image)
        })
        .collect();
    let isolated = !scc.escc
        && lifts.iter().all(|l| {
            invariant.iter().all(|b| b == l || crate::cross::arcs_compatible(&d, l, b))
                && scc.mixed.iter().all(|g| crate::cross::curve_arc_compatible(g, l))
        });
    Ok(LiftReport { double: d, lifts, essential, rigid, isolated })
}
