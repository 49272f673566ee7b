use arc_calculus::{catalog_match, cut_along_arc, essential_arcs_oracle, has_essential_scc, isolated_arcs, ArcClass};
use orbifold_core::{Orbifold2, Pi1Class, SegKind};

use crate::error::GogError;
use crate::reduce::{reduce, restore_bipartite};
use crate::types::{Edge, EdgeKind, GraphOfGroups, Part, Vertex, VertexKind};
use crate::validate::require_valid;

fn hosts_exceptional(kind: VertexKind) -> bool {
    matches!(kind, VertexKind::PeripheralSeifert | VertexKind::TorusType1 | VertexKind::TorusType2)
}

/// Isolated essential arcs in the base orbifolds of V0 commensuriser
/// vertices, each standing for an exceptional annulus.
///
/// Solid torus, I-bundle and merged vertices never host one. Arcs that
/// only matter when the ambient group is VPC are dropped.
pub fn exceptional_annuli(g: &GraphOfGroups) -> Result<Vec<(u32, ArcClass)>, GogError> {
    require_valid(g)?;
    let mut out = Vec::new();
    for v in &g.vertices {
        if v.part != Part::V0 || !hosts_exceptional(v.kind) {
            continue;
        }
        let base = v.base_orbifold.as_ref().expect("validated commensuriser vertex has a base");
        if let Some(entry) = catalog_match(base) {
            let d1_absent = !base.has_kind(SegKind::D1);
            if entry.requires_non_vpc_ambient && (g.vertices.len() > 1 || d1_absent) {
                continue;
            }
        }
        out.extend(isolated_arcs(base)?.into_iter().map(|a| (v.id, a)));
    }
    Ok(out)
}

/// Maximal runs of ∂₁ segments, a whole ∂₁ circle counting once.
fn d1_runs(o: &Orbifold2) -> usize {
    o.circles
        .iter()
        .map(|c| {
            let n = c.len();
            if (0..n).all(|s| c.kind(s) == SegKind::D1) {
                1
            } else {
                (0..n).filter(|&s| c.kind(s) == SegKind::D1 && c.kind(s + n - 1) != SegKind::D1).count()
            }
        })
        .sum()
}

fn piece_vertex(id: u32, original: &Vertex, piece: Orbifold2) -> Result<Vertex, GogError> {
    let essential = !essential_arcs_oracle(&piece)?.is_empty() || has_essential_scc(&piece)?;
    let kind = if !essential {
        VertexKind::OrdinaryV1
    } else {
        match piece.pi1_class()? {
            Pi1Class::NotVirtuallyCyclic => VertexKind::PeripheralSeifert,
            Pi1Class::VirtuallyCyclic if matches!(original.kind, VertexKind::TorusType1 | VertexKind::TorusType2) => {
                original.kind
            }
            Pi1Class::VirtuallyCyclic => VertexKind::TorusType1,
            Pi1Class::Finite => VertexKind::SolidTorus,
        }
    };
    let mut v = Vertex::new(id, kind).with_base(piece);
    v.fibre = original.fibre.clone();
    Ok(v)
}

/// Replaces vertex `v` by the pieces of its base cut along `arc`, joined by
/// a new annulus edge over the fibre.
fn split_vertex(g: &GraphOfGroups, v: u32, arc: &ArcClass) -> Result<GraphOfGroups, GogError> {
    let original = g.vertex(v).ok_or(GogError::UnknownVertex(v))?.clone();
    let base = original.base_orbifold.as_ref().expect("exceptional vertex has a base");
    let pieces = cut_along_arc(base, arc)?;
    let mut s = g.clone();
    let mut ids = vec![v];
    let fresh = s.next_vertex_id();
    ids.extend((1..pieces.len() as u32).map(|k| fresh + k - 1));

    // incident edges go to pieces in order of their ∂₁ runs; leftovers to the first
    let mut incident: Vec<u32> = g.incident(v).iter().map(|e| e.id).collect();
    incident.reverse();
    let mut owner = Vec::new();
    for (k, p) in pieces.iter().enumerate() {
        for _ in 0..d1_runs(p) {
            if let Some(e) = incident.pop() {
                owner.push((e, ids[k]));
            }
        }
    }
    owner.extend(incident.into_iter().map(|e| (e, v)));

    s.vertices.retain(|x| x.id != v);
    for (k, p) in pieces.into_iter().enumerate() {
        s.vertices.push(piece_vertex(ids[k], &original, p)?);
    }
    for (e, to) in owner {
        let edge = s.edges.iter_mut().find(|x| x.id == e).expect("incident edge");
        if edge.ends.0 == v {
            edge.ends.0 = to;
        } else {
            edge.ends.1 = to;
        }
    }
    let fibre = original.fibre.clone().expect("validated vertex has a fibre");
    let far = *ids.last().expect("at least one piece");
    s.edges.push(Edge {
        id: s.next_edge_id(),
        ends: (ids[0], far),
        kind: EdgeKind::Annulus { twisted: arc.twisted },
        group: fibre,
    });
    s.sort();
    restore_bipartite(&mut s);
    Ok(reduce(&s))
}

/// Splits every exceptional vertex along its exceptional annulus until none
/// is left.
pub fn waldhausen_refine(g: &GraphOfGroups) -> Result<GraphOfGroups, GogError> {
    require_valid(g)?;
    let mut s = g.clone();
    while let Some((v, arc)) = exceptional_annuli(&s)?.into_iter().next() {
        s = split_vertex(&s, v, &arc)?;
    }
    Ok(s)
}
