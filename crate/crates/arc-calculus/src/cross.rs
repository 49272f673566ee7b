//! Whether two classes have disjoint representatives.
//!
//! Arcs on one circle are compared by trying every cyclic order of their
//! end points that the segments allow; the arc whose ends fall inside one
//! side of the other must carry no cone or circle that side lacks.

use orbifold_core::Orbifold2;
use serde::{Deserialize, Serialize};

use crate::arc::{ArcClass, CurveClass, Marked, Separation};

/// Either kind of one-dimensional class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suborbifold {
    Arc(ArcClass),
    Curve(CurveClass),
}

fn subset(small: &[Marked], big: &[Marked]) -> bool {
    small.iter().all(|m| big.contains(m))
}

/// Which side of a separating class holds `m`: `Some(true)` for forward.
fn side_of(sep: &Separation, m: Marked) -> Option<bool> {
    match sep {
        Separation::Separating { forward, backward } => {
            if forward.contains(&m) {
                Some(true)
            } else if backward.contains(&m) {
                Some(false)
            } else {
                None
            }
        }
        Separation::Nonseparating => None,
    }
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn same_circle_compatible(o: &Orbifold2, a: &ArcClass, b: &ArcClass) -> bool {
    let (ea, eb) = (a.ends(), b.ends());
    let n = o.circles[ea[0].0].len();
    let segs = [ea[0].1, ea[1].1, eb[0].1, eb[1].1];
    for perm in permutations4() {
        if (0..3).any(|k| segs[perm[k]] > segs[perm[k + 1]]) {
            continue;
        }
        let mut pos = [0usize; 4];
        for (k, &p) in perm.iter().enumerate() {
            pos[p] = k;
        }
        // a same-segment chord fixes the order of its two ends
        let order_ok = [(a, 0), (b, 2)].iter().all(|&(x, i)| {
            segs[i] != segs[i + 1] || n == 1 || x.twisted || (pos[i] < pos[i + 1]) != x.is_long()
        });
        if !order_ok {
            continue;
        }
        let inside_forward = |p: usize| {
            let d = (pos[p] + 4 - pos[0]) % 4;
            d > 0 && d < (pos[1] + 4 - pos[0]) % 4
        };
        let b_in_forward = inside_forward(2) && inside_forward(3);
        if !b_in_forward && (inside_forward(2) || inside_forward(3)) {
            continue;
        }
        let start = if b_in_forward { pos[0] } else { pos[1] };
        let dist = |p: usize| (pos[p] + 4 - start) % 4;
        let b_forward_inside = dist(2) < dist(3);
        if subset(&b.side_objects(b_forward_inside), &a.side_objects(b_in_forward)) {
            return true;
        }
    }
    false
}

/// Chord `a` against an arc `b` touching two circles.
fn chord_vs_spanning(o: &Orbifold2, a: &ArcClass, b: &ArcClass) -> bool {
    let c = a.ends()[0].0;
    let eb = b.ends();
    let on_c: Vec<(usize, usize)> = eb.iter().copied().filter(|e| e.0 == c).collect();
    let Some(&end) = on_c.first() else {
        let sides: Vec<Option<bool>> = eb.iter().map(|e| side_of(&a.separation, Marked::Circle(e.0))).collect();
        return sides[0] == sides[1];
    };
    let other = eb.iter().find(|e| e.0 != c).expect("spanning arc touches two circles").0;
    let Some(x) = side_of(&a.separation, Marked::Circle(other)) else {
        return false;
    };
    end == a.ends()[0] || end == a.ends()[1] || a.path(o, x).contains(&end.1)
}

fn chords_on_two_circles(a: &ArcClass, b: &ArcClass) -> bool {
    let (ca, cb) = (a.ends()[0].0, b.ends()[0].0);
    let (Some(b_near), Some(a_near)) =
        (side_of(&b.separation, Marked::Circle(ca)), side_of(&a.separation, Marked::Circle(cb)))
    else {
        return false;
    };
    subset(&b.side_objects(!b_near), &a.side_objects(a_near))
}

/// True when the two arc classes have disjoint representatives.
pub fn arcs_compatible(o: &Orbifold2, a: &ArcClass, b: &ArcClass) -> bool {
    match (a.is_chord(), b.is_chord()) {
        (true, true) if a.ends()[0].0 == b.ends()[0].0 => same_circle_compatible(o, a, b),
        (true, true) => chords_on_two_circles(a, b),
        (true, false) => chord_vs_spanning(o, a, b),
        (false, true) => chord_vs_spanning(o, b, a),
        (false, false) => true,
    }
}

/// True when the curve and the arc have disjoint representatives.
pub fn curve_arc_compatible(g: &CurveClass, a: &ArcClass) -> bool {
    let Separation::Separating { forward, backward } = &g.separation else {
        return false;
    };
    let circles = a.circles();
    if a.is_chord() {
        let c = Marked::Circle(circles[0]);
        let far = if forward.contains(&c) { backward } else { forward };
        let far: Vec<Marked> = far.clone();
        subset(&far, &a.side_objects(true)) || subset(&far, &a.side_objects(false))
    } else {
        let sides: Vec<Option<bool>> = circles.iter().map(|&c| side_of(&g.separation, Marked::Circle(c))).collect();
        sides.iter().all(|s| s.is_some() && *s == sides[0])
    }
}

/// True when two separating curves can be made disjoint.
pub fn curves_compatible(g: &CurveClass, h: &CurveClass) -> bool {
    let (Separation::Separating { forward: a, backward: b }, Separation::Separating { forward: c, backward: d }) =
        (&g.separation, &h.separation)
    else {
        return false;
    };
    [a, b].iter().any(|x| [c, d].iter().any(|y| subset(x, y)))
}

/// True when no representatives of `a` and `b` are disjoint.
pub fn crosses(o: &Orbifold2, a: &Suborbifold, b: &Suborbifold) -> bool {
    let ok = match (a, b) {
        (Suborbifold::Arc(x), Suborbifold::Arc(y)) => x == y || arcs_compatible(o, x, y),
        (Suborbifold::Curve(g), Suborbifold::Arc(x)) | (Suborbifold::Arc(x), Suborbifold::Curve(g)) => {
            curve_arc_compatible(g, x)
        }
        (Suborbifold::Curve(g), Suborbifold::Curve(h)) => g == h || curves_compatible(g, h),
    };
    !ok
}
