use crate::types::{BoundaryCircle, OrbifoldError, Orbifold2, SegKind, Segment};

/// Which of the two copies of a double a piece of data came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DoubleSide {
    First,
    Second,
}

impl DoubleSide {
    fn index(self) -> usize {
        match self {
            DoubleSide::First => 0,
            DoubleSide::Second => 1,
        }
    }
}

/// Images of one segment in the two copies.
pub type SegmentImages = [Option<(usize, usize)>; 2];

/// How the pieces of an orbifold sit inside one of its doubles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleMap {
    /// `segments[c][s][side]`: image (circle, segment), or `None` for glued segments.
    pub segments: Vec<Vec<SegmentImages>>,
    /// Images of every cone point in each copy.
    pub cones: Vec<[usize; 2]>,
    /// Cone point created by each corner, keyed by (circle, segment after the corner).
    pub corners: Vec<((usize, usize), usize)>,
}

impl DoubleMap {
    pub fn segment(&self, circle: usize, seg: usize, side: DoubleSide) -> Option<(usize, usize)> {
        self.segments[circle][seg][side.index()]
    }

    pub fn cone(&self, cone: usize, side: DoubleSide) -> usize {
        self.cones[cone][side.index()]
    }

    pub fn corner_cone(&self, circle: usize, seg: usize) -> Option<usize> {
        self.corners.iter().find(|(k, _)| *k == (circle, seg)).map(|&(_, v)| v)
    }
}

impl Orbifold2 {
    /// Two copies of the orbifold, the second reflected, glued along every
    /// ∂₀ segment.
    pub fn double_along_d0(&self) -> Result<Orbifold2, OrbifoldError> {
        if !self.has_kind(SegKind::D0) {
            return Err(OrbifoldError::NoD0);
        }
        Ok(double_along(self, SegKind::D0).0)
    }

    /// The double cover branched along the mirrors: two copies glued along
    /// every mirror segment, corners becoming cone points. The result has no
    /// mirrors. A mirror-free orbifold is returned unchanged, both copies
    /// mapping to it, since its double would be disconnected.
    pub fn mirror_double(&self) -> (Orbifold2, DoubleMap) {
        if self.is_mirror_free() {
            let segments = self
                .circles
                .iter()
                .enumerate()
                .map(|(c, circle)| (0..circle.len()).map(|s| [Some((c, s)); 2]).collect())
                .collect();
            let cones = (0..self.cone_points.len()).map(|i| [i, i]).collect();
            return (self.clone(), DoubleMap { segments, cones, corners: Vec::new() });
        }
        double_along(self, SegKind::M)
    }
}

/// Maximal runs of segments not of kind `glue`, as lists of segment indices
/// in circle order. Only meaningful when the circle has some glued segment.
pub(crate) fn free_intervals(c: &BoundaryCircle, glue: SegKind) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut out = Vec::new();
    let Some(start) = (0..n).find(|&i| c.kind(i) == glue) else {
        return out;
    };
    let mut cur = Vec::new();
    for k in 1..=n {
        let i = (start + k) % n;
        if c.kind(i) == glue {
            if !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
        } else {
            cur.push(i);
        }
    }
    out
}

fn double_along(o: &Orbifold2, glue: SegKind) -> (Orbifold2, DoubleMap) {
    let k = o.cone_points.len();
    let mut cone_points: Vec<u32> = o.cone_points.iter().chain(&o.cone_points).copied().collect();
    let cones = (0..k).map(|i| [i, i + k]).collect();
    let mut circles = Vec::new();
    let mut segments: Vec<Vec<SegmentImages>> = Vec::new();
    let mut corners = Vec::new();
    let mut glued_intervals = 0i64;

    for (ci, c) in o.circles.iter().enumerate() {
        let n = c.len();
        let mut segmap = vec![[None, None]; n];
        if !c.has_kind(glue) {
            let a = circles.len();
            circles.push(c.clone());
            circles.push(c.reversed());
            for (s, slot) in segmap.iter_mut().enumerate() {
                *slot = [Some((a, s)), Some((a + 1, (n - 1 - s) % n))];
            }
            segments.push(segmap);
            continue;
        }
        if n > 1 {
            glued_intervals += free_intervals(c, glue).len() as i64;
            if glue == SegKind::M {
                for s in 0..n {
                    if let Some(m) = c.seg(s).corner {
                        if c.kind(s + n - 1) == SegKind::M && c.kind(s) == SegKind::M {
                            corners.push(((ci, s), cone_points.len()));
                            cone_points.push(m);
                        }
                    }
                }
            }
        }
        for iv in free_intervals(c, glue) {
            let m = iv.len();
            let idx = circles.len();
            let t: Vec<Segment> = iv.iter().map(|&i| c.seg(i)).collect();
            let plain = |s: Segment| Segment { kind: s.kind, corner: None };
            if m == 1 {
                circles.push(BoundaryCircle::new(vec![plain(t[0])]));
                segmap[iv[0]] = [Some((idx, 0)), Some((idx, 0))];
                continue;
            }
            let mut segs = Vec::with_capacity(2 * m - 2);
            segs.push(Segment { kind: t[0].kind, corner: t[1].corner });
            segs.extend(t[1..m - 1].iter().copied());
            segs.push(t[m - 1]);
            for j in (1..m - 1).rev() {
                segs.push(Segment { kind: t[j].kind, corner: t[j + 1].corner });
            }
            circles.push(BoundaryCircle::new(segs));
            for (j, &i) in iv.iter().enumerate() {
                let first = j;
                let second = if j == 0 || j == m - 1 { j } else { 2 * m - 2 - j };
                segmap[i] = [Some((idx, first)), Some((idx, second))];
            }
        }
        // a circle entirely of the glue kind counts as a glued circle (χ 0)
        segments.push(segmap);
    }

    let chi = 2 * o.underlying_chi() - glued_intervals;
    let h = circles.len() as i64;
    let genus = if o.orientable { (2 - h - chi) / 2 } else { 2 - h - chi };
    let out = Orbifold2 { orientable: o.orientable, genus: genus.max(0) as u32, cone_points, circles };
    (out, DoubleMap { segments, cones, corners })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chi::WeightedChi;

    #[test]
    fn annulus_doubles_to_torus() {
        let o = Orbifold2::planar_str(&[], &["D0", "D0"]);
        let d = o.double_along_d0().unwrap();
        assert!(d.circles.is_empty());
        assert_eq!(d.genus, 1);
        assert_eq!(d.euler_char_unchecked(), WeightedChi::zero());
    }

    #[test]
    fn square_doubles_to_mirror_annulus() {
        let o = Orbifold2::planar_str(&[], &["M D0 M D0"]);
        let d = o.double_along_d0().unwrap();
        assert_eq!(d.genus, 0);
        assert_eq!(d.circles.len(), 2);
        assert!(d.circles.iter().all(|c| c.to_string() == "[M]"));
        assert_eq!(d.euler_char().unwrap(), WeightedChi::zero());
    }

    #[test]
    fn corner_keeps_labels_in_d0_double() {
        let o = Orbifold2::planar_str(&[], &["D0 M M@3 D1"]);
        let d = o.double_along_d0().unwrap();
        assert_eq!(d.circles.len(), 1);
        assert_eq!(d.circles[0].to_string(), "[M@3 M@3 D1 M]");
        assert!(d.validate().is_ok());
    }

    #[test]
    fn mirror_double_of_y3_is_cone_disk() {
        let o = Orbifold2::planar_str(&[], &["D0 M M@3"]);
        let (d, map) = o.mirror_double();
        assert!(d.is_mirror_free());
        assert_eq!(d.cone_points, vec![3]);
        assert_eq!(d.circles.len(), 1);
        assert_eq!(d.circles[0].to_string(), "[D0]");
        assert_eq!(map.segment(0, 0, DoubleSide::First), Some((0, 0)));
        assert_eq!(map.corner_cone(0, 2), Some(0));
        assert_eq!(d.euler_char().unwrap(), o.euler_char().unwrap() * 2);
    }

    #[test]
    fn mirror_double_interval_layout() {
        let o = Orbifold2::planar_str(&[], &["M D0 D1 D0 D1"]);
        let (d, map) = o.mirror_double();
        assert_eq!(d.circles[0].to_string(), "[D0 D1 D0 D1 D0 D1]");
        assert_eq!(map.segment(0, 2, DoubleSide::Second), Some((0, 5)));
        assert_eq!(map.segment(0, 4, DoubleSide::Second), Some((0, 3)));
        assert_eq!(map.segment(0, 1, DoubleSide::Second), Some((0, 0)));
    }

    #[test]
    fn no_d0_is_an_error() {
        let o = Orbifold2::planar_str(&[], &["D1"]);
        assert_eq!(o.double_along_d0(), Err(OrbifoldError::NoD0));
    }
}
