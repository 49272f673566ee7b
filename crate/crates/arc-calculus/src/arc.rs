use std::fmt;

use orbifold_core::{Orbifold2, SegKind, Symmetry};
use serde::{Deserialize, Serialize};

use crate::error::ArcError;

/// Something that can lie on one side of an arc or curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Marked {
    Cone(usize),
    /// A whole boundary circle not touched by the arc.
    Circle(usize),
    /// A segment (circle, index) of a circle the arc touches.
    Segment(usize, usize),
}

impl Marked {
    pub fn is_object(self) -> bool {
        !matches!(self, Marked::Segment(..))
    }
}

impl fmt::Display for Marked {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marked::Cone(i) => write!(f, "cone {i}"),
            Marked::Circle(c) => write!(f, "circle {c}"),
            Marked::Segment(c, s) => write!(f, "seg {c}.{s}"),
        }
    }
}

/// Where a twisted arc is folded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Fold {
    Mirror(usize, usize),
    Cone(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Separation {
    Nonseparating,
    /// `forward` lies along the circle direction from the first endpoint to
    /// the second endpoint (or to the fold); `backward` is the rest.
    Separating { forward: Vec<Marked>, backward: Vec<Marked> },
}

/// Isotopy class of a simple arc with ends on ∂₀, or of the quotient of
/// such an arc by a reflection (`twisted`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ArcClass {
    pub twisted: bool,
    pub endpoints: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fold: Option<Fold>,
    pub separation: Separation,
}

/// Isotopy class of a simple closed curve, or of the quotient of one by a
/// reflection.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub twisted: bool,
    pub separation: Separation,
}

/// Segments met going forward from `s0` to `s1` on a circle of `n`
/// segments, both ends excluded. For `s0 == s1` the path is empty unless
/// `long`, in which case it is every other segment.
pub(crate) fn strictly_between(n: usize, s0: usize, s1: usize, long: bool) -> Vec<usize> {
    if s0 == s1 {
        if long {
            (1..n).map(|k| (s0 + k) % n).collect()
        } else {
            Vec::new()
        }
    } else {
        let steps = (s1 + n - s0) % n;
        (1..steps).map(|k| (s0 + k) % n).collect()
    }
}

/// All cones and whole circles other than those in `skip`.
pub(crate) fn objects(o: &Orbifold2, skip: &[usize]) -> Vec<Marked> {
    let mut out: Vec<Marked> = (0..o.cone_points.len()).map(Marked::Cone).collect();
    out.extend((0..o.circles.len()).filter(|c| !skip.contains(c)).map(Marked::Circle));
    out
}

fn sorted(mut v: Vec<Marked>) -> Vec<Marked> {
    v.sort();
    v.dedup();
    v
}

impl ArcClass {
    /// An arc joining two different circles.
    pub fn spanning(e0: (usize, usize), e1: (usize, usize)) -> ArcClass {
        ArcClass { twisted: false, endpoints: vec![e0, e1], fold: None, separation: Separation::Nonseparating }
            .canonical()
    }

    /// An arc with both ends on circle `e0.0`; `forward_objects` are the cones
    /// and circles on its forward side. For `e0 == e1`-segment arcs, `long`
    /// says the forward side runs round the rest of the circle.
    pub fn chord(
        o: &Orbifold2,
        e0: (usize, usize),
        e1: (usize, usize),
        forward_objects: &[Marked],
        long: bool,
    ) -> ArcClass {
        let c = e0.0;
        let n = o.circles[c].len();
        let fwd_path = strictly_between(n, e0.1, e1.1, long);
        let bwd_path = strictly_between(n, e1.1, e0.1, e0.1 == e1.1 && !long);
        let mut forward: Vec<Marked> = forward_objects.to_vec();
        forward.extend(fwd_path.iter().map(|&s| Marked::Segment(c, s)));
        let mut backward: Vec<Marked> =
            objects(o, &[c]).into_iter().filter(|m| !forward_objects.contains(m)).collect();
        backward.extend(bwd_path.iter().map(|&s| Marked::Segment(c, s)));
        ArcClass {
            twisted: false,
            endpoints: vec![e0, e1],
            fold: None,
            separation: Separation::Separating { forward: sorted(forward), backward: sorted(backward) },
        }
        .canonical()
    }

    /// A twisted arc from `e0` folded on the mirror segment `m` of the same circle.
    pub fn twisted_chord(o: &Orbifold2, e0: (usize, usize), m: (usize, usize), forward_objects: &[Marked]) -> ArcClass {
        let c = e0.0;
        let n = o.circles[c].len();
        let mut forward: Vec<Marked> = forward_objects.to_vec();
        forward.extend(strictly_between(n, e0.1, m.1, false).into_iter().map(|s| Marked::Segment(c, s)));
        let mut backward: Vec<Marked> =
            objects(o, &[c]).into_iter().filter(|x| !forward_objects.contains(x)).collect();
        backward.extend(strictly_between(n, m.1, e0.1, false).into_iter().map(|s| Marked::Segment(c, s)));
        ArcClass {
            twisted: true,
            endpoints: vec![e0],
            fold: Some(Fold::Mirror(m.0, m.1)),
            separation: Separation::Separating { forward: sorted(forward), backward: sorted(backward) },
        }
    }

    /// A twisted arc from `e0` folded on a mirror segment of another circle.
    pub fn twisted_spanning(e0: (usize, usize), m: (usize, usize)) -> ArcClass {
        ArcClass {
            twisted: true,
            endpoints: vec![e0],
            fold: Some(Fold::Mirror(m.0, m.1)),
            separation: Separation::Nonseparating,
        }
    }

    /// Endpoints followed by the fold segment, if folded on a mirror.
    pub fn ends(&self) -> Vec<(usize, usize)> {
        let mut v = self.endpoints.clone();
        if let Some(Fold::Mirror(c, s)) = self.fold {
            v.push((c, s));
        }
        v
    }

    /// Circles touched by the arc, in end order.
    pub fn circles(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.ends().iter().map(|e| e.0).collect();
        v.dedup();
        v
    }

    /// True when both ends lie on one circle, so the arc cuts the planar
    /// underlying surface in two.
    pub fn is_chord(&self) -> bool {
        let e = self.ends();
        e.len() == 2 && e[0].0 == e[1].0 && matches!(self.separation, Separation::Separating { .. })
    }

    pub fn side(&self, forward: bool) -> &[Marked] {
        match &self.separation {
            Separation::Separating { forward: f, backward: b } => {
                if forward {
                    f
                } else {
                    b
                }
            }
            Separation::Nonseparating => &[],
        }
    }

    pub fn side_objects(&self, forward: bool) -> Vec<Marked> {
        self.side(forward).iter().copied().filter(|m| m.is_object()).collect()
    }

    /// True for a same-segment chord whose forward side runs round the circle.
    pub fn is_long(&self) -> bool {
        let e = self.ends();
        e.len() == 2 && e[0] == e[1] && self.side(true).iter().any(|m| matches!(m, Marked::Segment(..)))
    }

    /// Segments strictly between the ends on one side, in circle order.
    pub fn path(&self, o: &Orbifold2, forward: bool) -> Vec<usize> {
        let e = self.ends();
        if !self.is_chord() {
            return Vec::new();
        }
        let n = o.circles[e[0].0].len();
        let long = self.is_long();
        if forward {
            strictly_between(n, e[0].1, e[1].1, long)
        } else {
            strictly_between(n, e[1].1, e[0].1, e[0].1 == e[1].1 && !long)
        }
    }

    /// The same arc traversed from the other end.
    pub fn swapped(&self) -> ArcClass {
        if self.twisted {
            return self.clone();
        }
        let separation = match &self.separation {
            Separation::Nonseparating => Separation::Nonseparating,
            Separation::Separating { forward, backward } => {
                Separation::Separating { forward: backward.clone(), backward: forward.clone() }
            }
        };
        ArcClass {
            twisted: false,
            endpoints: self.endpoints.iter().rev().copied().collect(),
            fold: self.fold,
            separation,
        }
    }

    /// The least of the arc and its reversal.
    pub fn canonical(&self) -> ArcClass {
        let s = self.swapped();
        if s < *self {
            s
        } else {
            self.clone()
        }
    }

    /// Image under a combinatorial identification of orbifolds.
    pub fn mapped(&self, sym: &Symmetry) -> ArcClass {
        let map = |m: &Marked| match *m {
            Marked::Cone(i) => Marked::Cone(sym.cone(i)),
            Marked::Circle(c) => Marked::Circle(sym.circle(c)),
            Marked::Segment(c, s) => {
                let (c2, s2) = sym.segment(c, s);
                Marked::Segment(c2, s2)
            }
        };
        let separation = match &self.separation {
            Separation::Nonseparating => Separation::Nonseparating,
            Separation::Separating { forward, backward } => {
                let f = sorted(forward.iter().map(map).collect());
                let b = sorted(backward.iter().map(map).collect());
                if sym.reflect {
                    Separation::Separating { forward: b, backward: f }
                } else {
                    Separation::Separating { forward: f, backward: b }
                }
            }
        };
        let fold = self.fold.map(|f| match f {
            Fold::Mirror(c, s) => {
                let (c2, s2) = sym.segment(c, s);
                Fold::Mirror(c2, s2)
            }
            Fold::Cone(i) => Fold::Cone(sym.cone(i)),
        });
        ArcClass {
            twisted: self.twisted,
            endpoints: self.endpoints.iter().map(|&(c, s)| sym.segment(c, s)).collect(),
            fold,
            separation,
        }
        .canonical()
    }

    /// Checks that the arc is well formed in `o`.
    pub fn check(&self, o: &Orbifold2) -> Result<(), ArcError> {
        let bad = |msg: &str| Err(ArcError::InvalidArc(format!("{self}: {msg}")));
        let want = if self.twisted { 1 } else { 2 };
        if self.endpoints.len() != want {
            return bad("wrong number of endpoints");
        }
        for &(c, s) in &self.endpoints {
            if c >= o.circles.len() || s >= o.circles[c].len() || o.circles[c].kind(s) != SegKind::D0 {
                return bad("endpoint not on a D0 segment");
            }
        }
        match (self.twisted, self.fold) {
            (false, None) => {}
            (true, Some(Fold::Mirror(c, s))) => {
                if c >= o.circles.len() || s >= o.circles[c].len() || o.circles[c].kind(s) != SegKind::M {
                    return bad("fold not on a mirror");
                }
            }
            (true, Some(Fold::Cone(i))) => {
                if o.cone_points.get(i) != Some(&2) {
                    return bad("fold not on an order-2 cone point");
                }
            }
            _ => return bad("fold data does not match twist flag"),
        }
        if let Separation::Separating { forward, backward } = &self.separation {
            let mut all: Vec<Marked> = forward.iter().chain(backward).copied().collect();
            all.sort();
            let len = all.len();
            all.dedup();
            if all.len() != len {
                return bad("sides overlap");
            }
            let touched = self.circles();
            let mut expected = objects(o, &touched);
            if let Some(Fold::Cone(i)) = self.fold {
                expected.retain(|m| *m != Marked::Cone(i));
            }
            let ends = self.ends();
            for &c in &touched {
                for s in 0..o.circles[c].len() {
                    if !ends.contains(&(c, s)) {
                        expected.push(Marked::Segment(c, s));
                    }
                }
            }
            expected.sort();
            if all != expected {
                return bad("sides do not cover the marked objects");
            }
        }
        Ok(())
    }
}

impl fmt::Display for ArcClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ends: Vec<String> = self.endpoints.iter().map(|(c, s)| format!("{c}.{s}")).collect();
        write!(f, "{}", if self.twisted { "twisted arc " } else { "arc " })?;
        write!(f, "{}", ends.join(" - "))?;
        match self.fold {
            Some(Fold::Mirror(c, s)) => write!(f, " folded on mirror {c}.{s}")?,
            Some(Fold::Cone(i)) => write!(f, " folded on cone {i}")?,
            None => {}
        }
        match &self.separation {
            Separation::Nonseparating => write!(f, ", nonseparating"),
            Separation::Separating { forward, backward } => {
                let list = |v: &[Marked]| v.iter().map(Marked::to_string).collect::<Vec<_>>().join(", ");
                write!(f, ", forward {{{}}}, backward {{{}}}", list(forward), list(backward))
            }
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.twisted { "twisted curve" } else { "curve" })?;
        match &self.separation {
            Separation::Nonseparating => write!(f, ", nonseparating"),
            Separation::Separating { forward, backward } => {
                let list = |v: &[Marked]| v.iter().map(Marked::to_string).collect::<Vec<_>>().join(", ");
                write!(f, " {{{}}} | {{{}}}", list(forward), list(backward))
            }
        }
    }
}
