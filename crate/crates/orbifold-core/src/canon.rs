use crate::types::{BoundaryCircle, Orbifold2};

/// Where each piece of an orbifold went when it was put in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonMap {
    /// Per original circle: (index in the canonical orbifold, rotation offset).
    pub circles: Vec<(usize, usize)>,
    /// Per original cone point: index in the canonical orbifold.
    pub cones: Vec<usize>,
    /// Segment counts of the original circles.
    lens: Vec<usize>,
}

impl CanonMap {
    /// New (circle, segment) of an original (circle, segment).
    pub fn segment(&self, circle: usize, seg: usize) -> (usize, usize) {
        let (c, off) = self.circles[circle];
        let n = self.lens[circle];
        (c, (seg + n - off % n) % n)
    }

    pub fn circle(&self, circle: usize) -> usize {
        self.circles[circle].0
    }

    pub fn cone(&self, cone: usize) -> usize {
        self.cones[cone]
    }
}

/// Index of the lexicographically least rotation of a circle.
pub(crate) fn least_rotation(c: &BoundaryCircle) -> usize {
    (0..c.len().max(1))
        .min_by(|&a, &b| c.rotated(a).segments.cmp(&c.rotated(b).segments).then(a.cmp(&b)))
        .unwrap_or(0)
}

impl Orbifold2 {
    /// Canonical form: each circle rotated to its least sequence, circles
    /// sorted, cone orders sorted. Ties keep the original order.
    pub fn canonical(&self) -> (Orbifold2, CanonMap) {
        let rots: Vec<(BoundaryCircle, usize)> = self
            .circles
            .iter()
            .map(|c| {
                let off = least_rotation(c);
                (c.rotated(off), off)
            })
            .collect();
        let mut order: Vec<usize> = (0..rots.len()).collect();
        order.sort_by(|&a, &b| rots[a].0.cmp(&rots[b].0).then(a.cmp(&b)));
        let mut circles_map = vec![(0, 0); rots.len()];
        for (new, &old) in order.iter().enumerate() {
            circles_map[old] = (new, rots[old].1);
        }
        let mut cone_order: Vec<usize> = (0..self.cone_points.len()).collect();
        cone_order.sort_by(|&a, &b| self.cone_points[a].cmp(&self.cone_points[b]).then(a.cmp(&b)));
        let mut cones_map = vec![0; cone_order.len()];
        for (new, &old) in cone_order.iter().enumerate() {
            cones_map[old] = new;
        }
        let canon = Orbifold2 {
            orientable: self.orientable,
            genus: self.genus,
            cone_points: cone_order.iter().map(|&i| self.cone_points[i]).collect(),
            circles: order.iter().map(|&i| rots[i].0.clone()).collect(),
        };
        let lens = self.circles.iter().map(BoundaryCircle::len).collect();
        (canon, CanonMap { circles: circles_map, cones: cones_map, lens })
    }

    /// Equality of canonical forms.
    pub fn same_as(&self, other: &Orbifold2) -> bool {
        self.canonical().0 == other.canonical().0
    }

    /// Equality up to canonical form and a global reflection.
    pub fn same_up_to_reflection(&self, other: &Orbifold2) -> bool {
        let c = other.canonical().0;
        self.canonical().0 == c || self.reflected().canonical().0 == c
    }

    /// Every combinatorial self-map of the boundary and cone data.
    pub fn symmetries(&self) -> Vec<Symmetry> {
        self.isomorphisms_to(self)
    }

    /// Every combinatorial identification of this orbifold with `other`,
    /// including those that reverse all circles.
    pub fn isomorphisms_to(&self, other: &Orbifold2) -> Vec<Symmetry> {
        let mut out = Vec::new();
        if self.orientable != other.orientable
            || self.genus != other.genus
            || self.circles.len() != other.circles.len()
        {
            return out;
        }
        let mut src_cones = self.cone_points.clone();
        let mut dst_cones = other.cone_points.clone();
        src_cones.sort_unstable();
        dst_cones.sort_unstable();
        if src_cones != dst_cones {
            return out;
        }
        let lens: Vec<usize> = self.circles.iter().map(BoundaryCircle::len).collect();
        let cone_maps = cone_bijections(&self.cone_points, &other.cone_points);
        for reflect in [false, true] {
            let src = if reflect { self.reflected() } else { self.clone() };
            let mut assign = Vec::new();
            let mut used = vec![false; other.circles.len()];
            circle_assignments(&src, other, 0, &mut used, &mut assign, &mut |circles| {
                for cones in &cone_maps {
                    out.push(Symmetry { reflect, circles: circles.to_vec(), cones: cones.clone(), lens: lens.clone() });
                }
            });
        }
        out
    }
}

type Emit<'a> = dyn FnMut(&[(usize, usize)]) + 'a;

fn circle_assignments(
    src: &Orbifold2,
    dst: &Orbifold2,
    i: usize,
    used: &mut Vec<bool>,
    assign: &mut Vec<(usize, usize)>,
    emit: &mut Emit,
) {
    if i == src.circles.len() {
        emit(assign);
        return;
    }
    let c = &src.circles[i];
    for t in 0..dst.circles.len() {
        if used[t] || dst.circles[t].len() != c.len() {
            continue;
        }
        for r in 0..c.len() {
            if c.rotated(r) == dst.circles[t] {
                used[t] = true;
                assign.push((t, r));
                circle_assignments(src, dst, i + 1, used, assign, emit);
                assign.pop();
                used[t] = false;
            }
        }
    }
}

fn cone_bijections(src: &[u32], dst: &[u32]) -> Vec<Vec<usize>> {
    fn go(src: &[u32], dst: &[u32], i: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == src.len() {
            out.push(cur.clone());
            return;
        }
        for t in 0..dst.len() {
            if !used[t] && dst[t] == src[i] {
                used[t] = true;
                cur.push(t);
                go(src, dst, i + 1, used, cur, out);
                cur.pop();
                used[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(src, dst, 0, &mut vec![false; dst.len()], &mut Vec::new(), &mut out);
    out
}

/// A combinatorial identification (an automorphism when source and target
/// agree): optional global reflection, then a permutation of circles with
/// rotations, and a permutation of cones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Symmetry {
    pub reflect: bool,
    /// Per circle: (image circle, rotation applied after the optional reversal).
    pub circles: Vec<(usize, usize)>,
    pub cones: Vec<usize>,
    lens: Vec<usize>,
}

impl Symmetry {
    pub fn segment(&self, circle: usize, seg: usize) -> (usize, usize) {
        let n = self.lens[circle];
        let s = if self.reflect { (n - 1 - seg % n) % n } else { seg % n };
        let (t, r) = self.circles[circle];
        (t, (s + n - r % n) % n)
    }

    pub fn circle(&self, circle: usize) -> usize {
        self.circles[circle].0
    }

    pub fn cone(&self, cone: usize) -> usize {
        self.cones[cone]
    }

    pub fn is_identity(&self) -> bool {
        !self.reflect
            && self.circles.iter().enumerate().all(|(i, &(t, r))| t == i && r == 0)
            && self.cones.iter().enumerate().all(|(i, &t)| t == i)
    }
}
