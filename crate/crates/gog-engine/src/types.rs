use std::fmt;

use orbifold_core::Orbifold2;
use serde::{Deserialize, Serialize};

/// Hirsch length of a group relative to the ambient dimension `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Length {
    #[serde(rename = "n")]
    N,
    #[serde(rename = "n+1")]
    NPlus1,
}

/// A commensurability class of VPC subgroups, named by an opaque token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupMark {
    pub class_id: String,
    pub length: Length,
    /// The class this one sits in with index 2.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index2_over: Option<String>,
}

impl GroupMark {
    pub fn new(class_id: &str, length: Length) -> Self {
        GroupMark { class_id: class_id.to_string(), length, index2_over: None }
    }

    pub fn index2(class_id: &str, length: Length, over: &str) -> Self {
        GroupMark { index2_over: Some(over.to_string()), ..GroupMark::new(class_id, length) }
    }
}

impl fmt::Display for GroupMark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = match self.length {
            Length::N => "n",
            Length::NPlus1 => "n+1",
        };
        write!(f, "{}[{len}]", self.class_id)?;
        if let Some(o) = &self.index2_over {
            write!(f, "<2:{o}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Part {
    V0,
    V1,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::V0 => Part::V1,
            Part::V1 => Part::V0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VertexKind {
    IsolatedV0,
    IBundle,
    InteriorSeifert,
    PeripheralSeifert,
    TorusType1,
    TorusType2,
    SolidTorus,
    Merged,
    OrdinaryV1,
    SpecialSeifert,
    SpecialSolidTorus,
    IsolatedV1,
}

impl VertexKind {
    /// The part a vertex of this kind belongs to before completion.
    pub fn home_part(self) -> Part {
        use VertexKind::*;
        match self {
            IsolatedV0 | IBundle | InteriorSeifert | PeripheralSeifert | TorusType1 | TorusType2 | SolidTorus
            | Merged => Part::V0,
            OrdinaryV1 | SpecialSeifert | SpecialSolidTorus | IsolatedV1 => Part::V1,
        }
    }

    pub fn is_special(self) -> bool {
        matches!(self, VertexKind::SpecialSeifert | VertexKind::SpecialSolidTorus)
    }

    /// Peripheral Seifert, torus type or solid torus type.
    pub fn is_commensuriser(self) -> bool {
        use VertexKind::*;
        matches!(self, PeripheralSeifert | TorusType1 | TorusType2 | SolidTorus)
    }

    pub fn needs_group(self) -> bool {
        use VertexKind::*;
        matches!(self, IsolatedV0 | IsolatedV1 | SpecialSeifert | SpecialSolidTorus)
    }

    pub fn needs_fibre(self) -> bool {
        use VertexKind::*;
        matches!(
            self,
            InteriorSeifert | PeripheralSeifert | TorusType1 | TorusType2 | SolidTorus | SpecialSeifert | SpecialSolidTorus
        )
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// What a merged vertex was made of.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constituent {
    pub id: u32,
    pub kind: VertexKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbifold: Option<Orbifold2>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: u32,
    pub part: Part,
    pub kind: VertexKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupMark>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibre: Option<GroupMark>,
    #[serde(default, rename = "orbifold", skip_serializing_if = "Option::is_none")]
    pub base_orbifold: Option<Orbifold2>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub constituents: Vec<Constituent>,
}

impl Vertex {
    /// A vertex in its kind's home part with no group data.
    pub fn new(id: u32, kind: VertexKind) -> Self {
        Vertex { id, part: kind.home_part(), kind, group: None, fibre: None, base_orbifold: None, constituents: vec![] }
    }

    pub fn with_group(mut self, g: GroupMark) -> Self {
        self.group = Some(g);
        self
    }

    pub fn with_fibre(mut self, g: GroupMark) -> Self {
        self.fibre = Some(g);
        self
    }

    pub fn with_base(mut self, o: Orbifold2) -> Self {
        self.base_orbifold = Some(o);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Annulus { twisted: bool },
    Torus,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeKind::Torus => "torus",
            EdgeKind::Annulus { twisted: false } => "annulus",
            EdgeKind::Annulus { twisted: true } => "twisted annulus",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "EdgeDoc", into = "EdgeDoc")]
pub struct Edge {
    pub id: u32,
    pub ends: (u32, u32),
    pub kind: EdgeKind,
    pub group: GroupMark,
}

impl Edge {
    pub fn torus(id: u32, ends: (u32, u32), group: GroupMark) -> Self {
        Edge { id, ends, kind: EdgeKind::Torus, group }
    }

    pub fn annulus(id: u32, ends: (u32, u32), group: GroupMark) -> Self {
        Edge { id, ends, kind: EdgeKind::Annulus { twisted: false }, group }
    }

    pub fn other_end(&self, v: u32) -> u32 {
        if self.ends.0 == v {
            self.ends.1
        } else {
            self.ends.0
        }
    }

    pub fn touches(&self, v: u32) -> bool {
        self.ends.0 == v || self.ends.1 == v
    }

    pub fn is_torus(&self) -> bool {
        self.kind == EdgeKind::Torus
    }
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum EdgeKindDoc {
    Annulus,
    Torus,
}

#[derive(Serialize, Deserialize)]
struct EdgeDoc {
    id: u32,
    ends: (u32, u32),
    kind: EdgeKindDoc,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    twisted: bool,
    group: GroupMark,
}

impl From<EdgeDoc> for Edge {
    fn from(d: EdgeDoc) -> Self {
        let kind = match d.kind {
            EdgeKindDoc::Annulus => EdgeKind::Annulus { twisted: d.twisted },
            EdgeKindDoc::Torus => EdgeKind::Torus,
        };
        Edge { id: d.id, ends: d.ends, kind, group: d.group }
    }
}

impl From<Edge> for EdgeDoc {
    fn from(e: Edge) -> Self {
        let (kind, twisted) = match e.kind {
            EdgeKind::Annulus { twisted } => (EdgeKindDoc::Annulus, twisted),
            EdgeKind::Torus => (EdgeKindDoc::Torus, false),
        };
        EdgeDoc { id: e.id, ends: e.ends, kind, twisted, group: e.group }
    }
}

/// A graph of groups with a V0/V1 colouring, stored as its quotient graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphOfGroups {
    /// Ambient dimension: edge groups are VPCn or VPC(n+1).
    pub n: u32,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    #[serde(default)]
    pub completed: bool,
}

impl GraphOfGroups {
    pub fn new(n: u32, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        let mut g = GraphOfGroups { n, vertices, edges, completed: false };
        g.sort();
        g
    }

    pub(crate) fn sort(&mut self) {
        self.vertices.sort_by_key(|v| v.id);
        self.edges.sort_by_key(|e| e.id);
    }

    pub fn vertex(&self, id: u32) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn edge(&self, id: u32) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    /// Incident edges in ascending id order; a loop appears once.
    pub fn incident(&self, v: u32) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.touches(v)).collect()
    }

    /// Number of edge ends at `v`, a loop counting twice.
    pub fn valence(&self, v: u32) -> usize {
        self.edges.iter().map(|e| usize::from(e.ends.0 == v) + usize::from(e.ends.1 == v)).sum()
    }

    pub fn next_vertex_id(&self) -> u32 {
        self.vertices.iter().map(|v| v.id + 1).max().unwrap_or(0)
    }

    pub fn next_edge_id(&self) -> u32 {
        self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<GraphOfGroups, serde_json::Error> {
        let mut g: GraphOfGroups = serde_json::from_str(text)?;
        g.sort();
        Ok(g)
    }
}
