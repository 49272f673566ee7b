use orbifold_core::{Orbifold2, SegKind, Segment};

use crate::arc::{ArcClass, Fold, Marked};
use crate::error::ArcError;
use crate::isolate::{isolated_arcs, same_orbit};
use crate::oracle::is_essential;

fn plain(kind: SegKind) -> Segment {
    Segment::new(kind)
}

/// Joins neighbours of one kind (a mirror only when no corner separates them).
fn merge(segs: Vec<Segment>) -> Vec<Segment> {
    let mut out: Vec<Segment> = Vec::new();
    for s in segs {
        if let Some(last) = out.last() {
            if last.kind == s.kind && (s.kind != SegKind::M || s.corner.is_none()) {
                continue;
            }
        }
        out.push(s);
    }
    out
}

/// Segments of a linear stretch read backwards, corners moved to the
/// junctions they belong to.
fn reversed(segs: &[Segment]) -> Vec<Segment> {
    let k = segs.len();
    (0..k)
        .map(|i| {
            let j = k - 1 - i;
            let corner = if i == 0 { None } else { segs[j + 1].corner };
            Segment { kind: segs[j].kind, corner }
        })
        .collect()
}

fn stretch(o: &Orbifold2, c: usize, path: &[usize]) -> Vec<Segment> {
    path.iter().map(|&s| o.circles[c].seg(s)).collect()
}

/// Once round circle `c` starting and ending inside segment `s`, with the
/// two pieces of `s` given explicitly.
fn tour(o: &Orbifold2, c: usize, s: usize, first: Segment, last: Segment) -> Vec<Segment> {
    let n = o.circles[c].len();
    let mut v = vec![first];
    v.extend((1..n).map(|k| o.circles[c].seg((s + k) % n)));
    v.push(last);
    v
}

fn fold_pieces(o: &Orbifold2, a: &ArcClass) -> Option<(Segment, Segment)> {
    match a.fold {
        Some(Fold::Mirror(c, m)) => {
            let before = Segment { kind: SegKind::M, corner: o.circles[c].seg(m).corner };
            Some((before, plain(SegKind::M)))
        }
        _ => None,
    }
}

fn piece(o: &Orbifold2, circle: Vec<Segment>, side: &[Marked], keep_all: bool) -> Orbifold2 {
    let mut cones = Vec::new();
    let mut circles = vec![orbifold_core::BoundaryCircle::new(merge(circle))];
    for (i, &p) in o.cone_points.iter().enumerate() {
        if keep_all || side.contains(&Marked::Cone(i)) {
            cones.push(p);
        }
    }
    for m in side {
        if let Marked::Circle(k) = *m {
            circles.push(o.circles[k].clone());
        }
    }
    Orbifold2::planar(cones, circles)
}

/// Cuts `o` along `a` without checking that `a` is isolated.
pub fn cut_unchecked(o: &Orbifold2, a: &ArcClass) -> Result<Vec<Orbifold2>, ArcError> {
    a.check(o)?;
    let d0 = plain(SegKind::D0);
    let cut = plain(SegKind::Cut);
    let e0 = a.endpoints[0];
    if matches!(a.fold, Some(Fold::Cone(_))) {
        return Err(ArcError::OutOfScope(format!("cannot cut along {a}")));
    }
    if a.is_chord() {
        if !o.orientable || o.genus > 0 {
            return Err(ArcError::OutOfScope(format!("separating cut on a nonplanar surface: {o}")));
        }
        let c = e0.0;
        let (end_f, start_b) = fold_pieces(o, a).unwrap_or((d0, d0));
        let mut fwd = vec![d0];
        fwd.extend(stretch(o, c, &a.path(o, true)));
        fwd.extend([end_f, cut]);
        let mut bwd = vec![start_b];
        bwd.extend(stretch(o, c, &a.path(o, false)));
        bwd.extend([d0, cut]);
        return Ok(vec![piece(o, fwd, a.side(true), false), piece(o, bwd, a.side(false), false)]);
    }
    let touched = a.circles();
    let mut circle = Vec::new();
    if touched.len() == 2 {
        circle.extend(tour(o, e0.0, e0.1, d0, d0));
        circle.push(cut);
        let (c2, s2) = a.ends()[1];
        let (before, after) = fold_pieces(o, a).unwrap_or((d0, d0));
        circle.extend(tour(o, c2, s2, after, before));
        circle.push(cut);
    } else {
        // through a crosscap: the stretch beyond the second end comes back reversed
        let c = e0.0;
        let e1 = a.endpoints[1];
        let n = o.circles[c].len();
        let there: Vec<usize> = if e0.1 == e1.1 { Vec::new() } else { crate::arc::strictly_between(n, e0.1, e1.1, false) };
        let back: Vec<usize> = crate::arc::strictly_between(n, e1.1, e0.1, e0.1 == e1.1);
        circle.push(d0);
        circle.extend(stretch(o, c, &there));
        circle.extend([d0, cut]);
        let mut b = vec![d0];
        b.extend(stretch(o, c, &back));
        b.push(d0);
        circle.extend(reversed(&merge(b)));
        circle.push(cut);
    }
    let others: Vec<Marked> =
        (0..o.circles.len()).filter(|k| !touched.contains(k)).map(Marked::Circle).collect();
    let mut p = piece(o, circle, &others, true);
    if touched.len() == 1 {
        if o.orientable || o.genus != 1 {
            return Err(ArcError::OutOfScope(format!("nonseparating chord on {o}")));
        }
        p.orientable = true;
        p.genus = 0;
    } else {
        p.orientable = o.orientable;
        p.genus = o.genus;
    }
    Ok(vec![p])
}

/// Cuts `o` along the isolated arc `a`. Each side of the arc becomes a CUT
/// segment; a separating arc gives two pieces.
pub fn cut_along_arc(o: &Orbifold2, a: &ArcClass) -> Result<Vec<Orbifold2>, ArcError> {
    a.check(o)?;
    if !is_essential(o, a) || !isolated_arcs(o)?.iter().any(|b| same_orbit(o, b, a)) {
        return Err(ArcError::NotIsolated(a.to_string()));
    }
    cut_unchecked(o, a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog_entry;

    fn circles(pieces: &[Orbifold2]) -> Vec<String> {
        pieces.iter().map(|p| p.circles.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")).collect()
    }

    #[test]
    fn cone_disk_splits_in_two() {
        let e = catalog_entry("F3a").unwrap();
        let pieces = cut_along_arc(&e.orbifold, e.isolated_arc.as_ref().unwrap()).unwrap();
        assert_eq!(circles(&pieces), ["[D0 CUT]", "[D0 CUT]"]);
        assert_eq!(pieces[0].cone_points.len() + pieces[1].cone_points.len(), 2);
    }

    #[test]
    fn mixed_annulus_becomes_a_disk() {
        let e = catalog_entry("F1a").unwrap();
        let pieces = cut_along_arc(&e.orbifold, e.isolated_arc.as_ref().unwrap()).unwrap();
        assert_eq!(circles(&pieces), ["[D0 CUT D0 D1 D0 CUT]"]);
        assert!(pieces[0].validate().is_ok());
    }

    #[test]
    fn mobius_band_becomes_a_square() {
        let e = catalog_entry("F1f").unwrap();
        let pieces = cut_unchecked(&e.orbifold, e.isolated_arc.as_ref().unwrap()).unwrap();
        assert_eq!(circles(&pieces), ["[D0 CUT D0 CUT]"]);
        assert!(pieces[0].orientable);
        assert_eq!(pieces[0].genus, 0);
    }

    #[test]
    fn twisted_cut_splits_the_fold_mirror() {
        let e = catalog_entry("F3e").unwrap();
        let pieces = cut_unchecked(&e.orbifold, e.isolated_arc.as_ref().unwrap()).unwrap();
        assert_eq!(circles(&pieces), ["[D0 M M@2 CUT]", "[M M@4 D0 CUT]"]);
        assert!(pieces.iter().all(|p| p.validate().is_ok()));
    }

    #[test]
    fn non_isolated_arc_is_rejected() {
        let o = Orbifold2::planar_str(&[3, 5], &["D0 D1"]);
        let a = ArcClass::chord(&o, (0, 0), (0, 0), &[Marked::Cone(0)], false);
        assert!(matches!(cut_along_arc(&o, &a), Err(ArcError::NotIsolated(_))));
    }
}
