//! The worked examples as decomposition-level data.
//!
//! Scott's example glues two Seifert pieces along a torus so that the
//! fibres do not match. The torus-type-2 example puts an annulus with an
//! isolated arc next to such a torus. The Klein example is double covered
//! by Scott's. The two dimension-4 orbifolds carry mirrors and so cannot
//! occur as bases in dimension 3.

use std::fmt;
use std::str::FromStr;

use arc_calculus::catalog_entry;
use gog_engine::{Edge, GraphOfGroups, GroupMark, Length, Vertex, VertexKind};
use orbifold_core::Orbifold2;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixtureId {
    /// Scott's example in ambient dimension `n`.
    Scott(u32),
    TorusType2,
    KleinGlue,
    /// The Klein construction with a special Seifert vertex on each side.
    KleinTwoSpecial,
    Dim4QxI,
    Dim4Corner,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FixtureError {
    #[error("unknown fixture {0:?}; expected scott, torus-type-2, klein, klein-two-special, dim4-qxi or dim4-corner")]
    Unknown(String),
    #[error("ambient dimension must be at least 1")]
    Dimension,
}

impl FixtureId {
    pub const NAMES: [&'static str; 6] = ["scott", "torus-type-2", "klein", "klein-two-special", "dim4-qxi", "dim4-corner"];

    /// Parses a fixture name; `n` only matters for Scott's example.
    pub fn parse(name: &str, n: u32) -> Result<FixtureId, FixtureError> {
        Ok(match name {
            "scott" if n == 0 => return Err(FixtureError::Dimension),
            "scott" => FixtureId::Scott(n),
            "torus-type-2" => FixtureId::TorusType2,
            "klein" => FixtureId::KleinGlue,
            "klein-two-special" => FixtureId::KleinTwoSpecial,
            "dim4-qxi" => FixtureId::Dim4QxI,
            "dim4-corner" => FixtureId::Dim4Corner,
            other => return Err(FixtureError::Unknown(other.to_string())),
        })
    }
}

impl FromStr for FixtureId {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureId::parse(s, 1)
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureId::Scott(n) => write!(f, "scott-{n}"),
            FixtureId::TorusType2 => f.write_str("torus-type-2"),
            FixtureId::KleinGlue => f.write_str("klein"),
            FixtureId::KleinTwoSpecial => f.write_str("klein-two-special"),
            FixtureId::Dim4QxI => f.write_str("dim4-qxi"),
            FixtureId::Dim4Corner => f.write_str("dim4-corner"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fixture {
    Graph(GraphOfGroups),
    Orbifold(Orbifold2),
}

impl Fixture {
    pub fn to_json(&self) -> String {
        match self {
            Fixture::Graph(g) => g.to_json(),
            Fixture::Orbifold(o) => o.to_json(),
        }
    }
}

pub fn build(id: FixtureId) -> Fixture {
    match id {
        FixtureId::Scott(n) => Fixture::Graph(build_scott(n)),
        FixtureId::TorusType2 => Fixture::Graph(build_torus_type2()),
        FixtureId::KleinGlue => Fixture::Graph(build_klein_glue()),
        FixtureId::KleinTwoSpecial => Fixture::Graph(build_klein_two_special()),
        FixtureId::Dim4QxI => Fixture::Orbifold(build_dim4_orbifolds().swap_remove(0)),
        FixtureId::Dim4Corner => Fixture::Orbifold(build_dim4_orbifolds().swap_remove(1)),
    }
}

/// Four-holed sphere: a ∂₁ circle for the torus, a circle half ∂₁ for an
/// annulus, and two ∂₀ circles. Its π₁ is free of rank 3 and it carries
/// essential closed curves, so no arc in it is isolated.
fn seifert_base() -> Orbifold2 {
    Orbifold2::planar_str(&[], &["D1", "D0 D1", "D0", "D0"])
}

fn fibre(name: &str) -> GroupMark {
    GroupMark::new(name, Length::N)
}

fn torus(name: &str) -> GroupMark {
    GroupMark::new(name, Length::NPlus1)
}

/// Two peripheral Seifert vertices glued through an isolated V1 vertex
/// along one torus with mismatched fibres; each also meets an ordinary V1
/// vertex along an annulus over its fibre.
pub fn build_scott(n: u32) -> GraphOfGroups {
    assert!(n >= 1, "ambient dimension must be at least 1");
    let vertices = vec![
        Vertex::new(0, VertexKind::PeripheralSeifert).with_fibre(fibre("h0")).with_base(seifert_base()),
        Vertex::new(1, VertexKind::IsolatedV1).with_group(torus("T")),
        Vertex::new(2, VertexKind::PeripheralSeifert).with_fibre(fibre("h2")).with_base(seifert_base()),
        Vertex::new(3, VertexKind::OrdinaryV1),
        Vertex::new(4, VertexKind::OrdinaryV1),
    ];
    let edges = vec![
        Edge::torus(0, (0, 1), torus("T")),
        Edge::torus(1, (1, 2), torus("T")),
        Edge::annulus(2, (0, 3), fibre("h0")),
        Edge::annulus(3, (2, 4), fibre("h2")),
    ];
    GraphOfGroups::new(n, vertices, edges)
}

/// A torus-type-2 vertex over the annulus with one circle half ∂₁, glued
/// along that torus through an isolated V1 vertex to a peripheral Seifert
/// vertex with another fibre.
pub fn build_torus_type2() -> GraphOfGroups {
    let annulus = catalog_entry("F1a").expect("catalog has F1a").orbifold;
    let vertices = vec![
        Vertex::new(0, VertexKind::TorusType2).with_fibre(fibre("h0")).with_base(annulus),
        Vertex::new(1, VertexKind::IsolatedV1).with_group(torus("T")),
        Vertex::new(2, VertexKind::PeripheralSeifert)
            .with_fibre(fibre("h2"))
            .with_base(Orbifold2::planar_str(&[], &["D1", "D0", "D0", "D0"])),
    ];
    let edges = vec![Edge::torus(0, (0, 1), torus("T")), Edge::torus(1, (1, 2), torus("T"))];
    GraphOfGroups::new(1, vertices, edges)
}

fn special_seifert(id: u32) -> Vertex {
    Vertex::new(id, VertexKind::SpecialSeifert).with_group(torus("K")).with_fibre(fibre(&format!("s{id}")))
}

fn index_two_torus() -> GroupMark {
    GroupMark::index2("T", Length::NPlus1, "K")
}

/// A peripheral Seifert vertex glued along a torus to a special Seifert V1
/// vertex containing the torus group with index 2.
pub fn build_klein_glue() -> GraphOfGroups {
    let vertices = vec![
        Vertex::new(0, VertexKind::PeripheralSeifert)
            .with_fibre(fibre("h0"))
            .with_base(Orbifold2::planar_str(&[], &["D1", "D0", "D0", "D0"])),
        special_seifert(1),
    ];
    GraphOfGroups::new(1, vertices, vec![Edge::torus(0, (0, 1), index_two_torus())])
}

/// Two special Seifert vertices glued along the same torus class through an
/// isolated V0 vertex.
pub fn build_klein_two_special() -> GraphOfGroups {
    let vertices = vec![
        special_seifert(0),
        Vertex::new(1, VertexKind::IsolatedV0).with_group(index_two_torus()),
        special_seifert(2),
    ];
    let edges = vec![Edge::torus(0, (0, 1), index_two_torus()), Edge::torus(1, (1, 2), index_two_torus())];
    GraphOfGroups::new(1, vertices, edges)
}

/// Q×I with Q the circle modulo a reflection, a square with two opposite
/// mirrors and ∂₀ elsewhere; and the disk whose circle is one ∂₀ arc and
/// two mirrors meeting in a corner of order 2.
pub fn build_dim4_orbifolds() -> Vec<Orbifold2> {
    vec![Orbifold2::planar_str(&[], &["M D0 M D0"]), Orbifold2::planar_str(&[], &["D0 M M@2"])]
}
