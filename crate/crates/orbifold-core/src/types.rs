use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Kind of a boundary segment of the underlying surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SegKind {
    D0,
    D1,
    #[serde(rename = "CUT")]
    Cut,
    M,
}

impl SegKind {
    /// True for the kinds that are part of the orbifold boundary ∂X.
    pub fn is_boundary(self) -> bool {
        !matches!(self, SegKind::M)
    }

    /// True for kinds that behave like ∂₁ when deciding essentiality.
    pub fn is_d1_like(self) -> bool {
        matches!(self, SegKind::D1 | SegKind::Cut)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SegKind::D0 => "D0",
            SegKind::D1 => "D1",
            SegKind::Cut => "CUT",
            SegKind::M => "M",
        }
    }
}

impl fmt::Display for SegKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One segment of a boundary circle. `corner` labels the junction *before*
/// this segment; it is only meaningful between two mirrors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Segment {
    pub kind: SegKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub corner: Option<u32>,
}

impl Segment {
    pub fn new(kind: SegKind) -> Self {
        Segment { kind, corner: None }
    }

    /// A mirror segment preceded by a corner reflector of rotation order `m`.
    pub fn mirror_after_corner(m: u32) -> Self {
        Segment { kind: SegKind::M, corner: Some(m) }
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.corner {
            Some(m) => write!(f, "{}@{}", self.kind, m),
            None => write!(f, "{}", self.kind),
        }
    }
}

/// The point where one segment ends and the next begins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Junction {
    /// Mirror meets mirror at a corner reflector of rotation order m.
    Corner(u32),
    /// Mirror meets a boundary segment; stabilizer of order 2.
    ReflectorEnd,
    /// Two boundary segments of different kinds; trivial stabilizer.
    Plain,
}

/// A boundary circle of the underlying surface as a cyclic segment list.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoundaryCircle {
    pub segments: Vec<Segment>,
}

impl BoundaryCircle {
    pub fn new(segments: Vec<Segment>) -> Self {
        BoundaryCircle { segments }
    }

    pub fn from_kinds(kinds: &[SegKind]) -> Self {
        BoundaryCircle::new(kinds.iter().map(|&k| Segment::new(k)).collect())
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// A single closed segment: no junctions at all.
    pub fn is_closed_segment(&self) -> bool {
        self.segments.len() == 1
    }

    pub fn seg(&self, i: usize) -> Segment {
        self.segments[i % self.segments.len()]
    }

    pub fn kind(&self, i: usize) -> SegKind {
        self.seg(i).kind
    }

    /// Junction before segment `i` (between `i-1` and `i`), or `None` for a
    /// closed single segment.
    pub fn junction_before(&self, i: usize) -> Option<Junction> {
        let n = self.segments.len();
        if n < 2 {
            return None;
        }
        let prev = self.segments[(i + n - 1) % n];
        let cur = self.segments[i % n];
        Some(match (prev.kind, cur.kind) {
            (SegKind::M, SegKind::M) => Junction::Corner(cur.corner.unwrap_or(0)),
            (SegKind::M, _) | (_, SegKind::M) => Junction::ReflectorEnd,
            _ => Junction::Plain,
        })
    }

    pub fn has_kind(&self, kind: SegKind) -> bool {
        self.segments.iter().any(|s| s.kind == kind)
    }

    /// The same circle traversed in the opposite direction, with corner labels
    /// moved so that every junction keeps its label.
    pub fn reversed(&self) -> BoundaryCircle {
        let n = self.segments.len();
        let segments = (0..n)
            .map(|k| Segment {
                kind: self.segments[n - 1 - k].kind,
                corner: self.segments[(n - k) % n].corner,
            })
            .collect();
        BoundaryCircle { segments }
    }

    /// The circle rotated so that segment `offset` comes first.
    pub fn rotated(&self, offset: usize) -> BoundaryCircle {
        let n = self.segments.len();
        BoundaryCircle {
            segments: (0..n).map(|k| self.segments[(k + offset) % n]).collect(),
        }
    }
}

impl fmt::Display for BoundaryCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.segments.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("]")
    }
}

/// Parses the compact notation `"D0 M M@3"` (commas also separate tokens;
/// `@m` attaches a corner label to the junction before that segment).
impl FromStr for BoundaryCircle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut segments = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (kind, corner) = match tok.split_once('@') {
                Some((k, m)) => {
                    let m = m.parse::<u32>().map_err(|_| format!("bad corner label in {tok:?}"))?;
                    (k, Some(m))
                }
                None => (tok, None),
            };
            let kind = match kind {
                "M" => SegKind::M,
                "D0" => SegKind::D0,
                "D1" => SegKind::D1,
                "CUT" => SegKind::Cut,
                other => return Err(format!("unknown segment kind {other:?}")),
            };
            segments.push(Segment { kind, corner });
        }
        Ok(BoundaryCircle { segments })
    }
}

/// A compact 2-orbifold with nonempty boundary data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orbifold2 {
    pub orientable: bool,
    pub genus: u32,
    pub cone_points: Vec<u32>,
    pub circles: Vec<BoundaryCircle>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("invalid orbifold: {0}")]
    Invalid(String),
    #[error("orbifold has no D0 segment")]
    NoD0,
    #[error("closed orbifold: no boundary segment")]
    Closed,
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Orbifold2 {
    /// Genus-0 orientable surface with the given cone points and circles.
    pub fn planar(cone_points: Vec<u32>, circles: Vec<BoundaryCircle>) -> Self {
        Orbifold2 { orientable: true, genus: 0, cone_points, circles }
    }

    /// Convenience constructor from compact circle notation; panics on a
    /// malformed literal, so meant for literals in code and tests.
    pub fn planar_str(cone_points: &[u32], circles: &[&str]) -> Self {
        let circles = circles
            .iter()
            .map(|c| c.parse::<BoundaryCircle>().unwrap_or_else(|e| panic!("{e}")))
            .collect();
        Orbifold2::planar(cone_points.to_vec(), circles)
    }

    pub fn segment_count(&self) -> usize {
        self.circles.iter().map(BoundaryCircle::len).sum()
    }

    pub fn has_kind(&self, kind: SegKind) -> bool {
        self.circles.iter().any(|c| c.has_kind(kind))
    }

    pub fn is_mirror_free(&self) -> bool {
        !self.has_kind(SegKind::M)
    }

    pub fn has_boundary(&self) -> bool {
        self.circles.iter().flat_map(|c| &c.segments).any(|s| s.kind.is_boundary())
    }

    /// Euler characteristic of the underlying surface.
    pub fn underlying_chi(&self) -> i64 {
        let h = self.circles.len() as i64;
        let g = i64::from(self.genus);
        if self.orientable {
            2 - 2 * g - h
        } else {
            2 - g - h
        }
    }

    /// The mirror image: every circle traversed backwards.
    pub fn reflected(&self) -> Orbifold2 {
        Orbifold2 {
            circles: self.circles.iter().map(BoundaryCircle::reversed).collect(),
            ..self.clone()
        }
    }

    /// Relabels every ∂₁-like segment (D1, CUT) as D0 and merges the runs
    /// this creates. Returns the new orbifold and, per circle, the new index
    /// of every old segment.
    pub fn relabel_d1_as_d0(&self) -> (Orbifold2, Vec<Vec<usize>>) {
        let mut circles = Vec::new();
        let mut maps = Vec::new();
        for c in &self.circles {
            let kinds: Vec<Segment> = c
                .segments
                .iter()
                .map(|s| if s.kind.is_d1_like() { Segment { kind: SegKind::D0, corner: None } } else { *s })
                .collect();
            let (merged, map) = merge_equal_runs(&kinds);
            circles.push(BoundaryCircle::new(merged));
            maps.push(map);
        }
        (Orbifold2 { circles, ..self.clone() }, maps)
    }

    /// Number of ∂X components: closed non-mirror circles plus maximal
    /// non-mirror intervals.
    pub fn boundary_component_count(&self) -> usize {
        self.circles
            .iter()
            .map(|c| {
                if !c.has_kind(SegKind::M) {
                    1
                } else {
                    (0..c.len())
                        .filter(|&i| c.kind(i) != SegKind::M && c.kind(i + c.len() - 1) == SegKind::M)
                        .count()
                }
            })
            .sum()
    }
}

/// Merges cyclically adjacent non-mirror segments of equal kind. Returns
/// the merged list and the new index of every old segment.
pub(crate) fn merge_equal_runs(segs: &[Segment]) -> (Vec<Segment>, Vec<usize>) {
    let n = segs.len();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let joins = |i: usize| {
        // true if segment i continues segment i-1
        let prev = segs[(i + n - 1) % n];
        let cur = segs[i];
        cur.kind != SegKind::M && prev.kind == cur.kind
    };
    if (0..n).all(joins) {
        return (vec![Segment::new(segs[0].kind)], vec![0; n]);
    }
    if n == 1 {
        return (segs.to_vec(), vec![0]);
    }
    let start = (0..n).find(|&i| !joins(i)).unwrap_or(0);
    let mut out: Vec<Segment> = Vec::new();
    let mut map = vec![0; n];
    for k in 0..n {
        let i = (start + k) % n;
        if k == 0 || !joins(i) {
            out.push(segs[i]);
        }
        map[i] = out.len() - 1;
    }
    (out, map)
}

impl fmt::Display for Orbifold2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surface = if self.orientable { "orientable" } else { "nonorientable" };
        write!(f, "{surface} genus {}", self.genus)?;
        if !self.cone_points.is_empty() {
            let cones: Vec<String> = self.cone_points.iter().map(u32::to_string).collect();
            write!(f, ", cones ({})", cones.join(","))?;
        }
        for c in &self.circles {
            write!(f, ", {c}")?;
        }
        Ok(())
    }
}
