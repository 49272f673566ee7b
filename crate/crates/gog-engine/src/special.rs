use std::collections::{BTreeMap, BTreeSet};

use orbifold_core::Violation;
use serde::Serialize;

use crate::error::GogError;
use crate::reduce::{complete, reduce, restore_bipartite};
use crate::types::{Constituent, Edge, GraphOfGroups, Part, Vertex, VertexKind};
use crate::validate::{is_isolated_vertex, require_valid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EdgeClass {
    Canonical,
    #[serde(rename = "Special")]
    SpecialCanonicalTorus,
}

/// Graph-local test for a special canonical torus on a completed graph:
/// a torus edge whose V1 end is isolated, with V0 neighbours of peripheral
/// Seifert, torus type 2 or special Seifert kind, at most one of them
/// special, and a peripheral Seifert neighbour when both edges form a loop.
pub fn detect_special_canonical(gc: &GraphOfGroups, e: u32) -> Result<bool, GogError> {
    if !gc.completed {
        return Err(GogError::NotCompleted);
    }
    let edge = gc.edge(e).ok_or(GogError::UnknownEdge(e))?;
    if !edge.is_torus() {
        return Ok(false);
    }
    let Some(w) = [edge.ends.0, edge.ends.1].into_iter().find(|&v| gc.vertex(v).is_some_and(|x| x.part == Part::V1))
    else {
        return Ok(false);
    };
    if !is_isolated_vertex(gc, w) {
        return Ok(false);
    }
    let neighbours: Vec<&Vertex> =
        gc.incident(w).iter().filter_map(|x| gc.vertex(x.other_end(w))).collect::<Vec<_>>();
    if neighbours.len() == 2 && neighbours[0].id == neighbours[1].id || neighbours.len() == 1 {
        return Ok(neighbours[0].kind == VertexKind::PeripheralSeifert);
    }
    let allowed = neighbours
        .iter()
        .all(|v| matches!(v.kind, VertexKind::PeripheralSeifert | VertexKind::TorusType2 | VertexKind::SpecialSeifert));
    let specials = neighbours.iter().filter(|v| v.kind == VertexKind::SpecialSeifert).count();
    Ok(allowed && specials <= 1)
}

/// One label per edge of `g`, read off the completion.
pub fn classify_edges(g: &GraphOfGroups) -> Result<BTreeMap<u32, EdgeClass>, GogError> {
    let (gc, map) = completed(g)?;
    g.edges
        .iter()
        .map(|e| {
            let special = detect_special_canonical(&gc, map[&e.id])?;
            Ok((e.id, if special { EdgeClass::SpecialCanonicalTorus } else { EdgeClass::Canonical }))
        })
        .collect()
}

/// Special edges grouped by splitting: the two edges through one isolated
/// V1 vertex carry the same splitting.
pub fn special_splittings(g: &GraphOfGroups) -> Result<Vec<Vec<u32>>, GogError> {
    let (gc, map) = completed(g)?;
    let classes = classify_edges(g)?;
    let mut by_w: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for (&e, &c) in &classes {
        if c == EdgeClass::SpecialCanonicalTorus {
            let ce = gc.edge(map[&e]).expect("mapped edge");
            let w = [ce.ends.0, ce.ends.1]
                .into_iter()
                .find(|&v| gc.vertex(v).is_some_and(|x| x.part == Part::V1))
                .expect("special edge has a V1 end");
            by_w.entry(w).or_default().push(e);
        }
    }
    Ok(by_w.into_values().collect())
}

fn completed(g: &GraphOfGroups) -> Result<(GraphOfGroups, BTreeMap<u32, u32>), GogError> {
    if g.completed {
        require_valid(g)?;
        Ok((g.clone(), g.edges.iter().map(|e| (e.id, e.id)).collect()))
    } else {
        let c = complete(g)?;
        Ok((c.graph, c.edge_map))
    }
}

/// Collapses each connected union of special torus edges, their isolated
/// V1 vertices and the V0 vertices on either side to one merged V0 vertex.
pub fn collapse_special_intervals(g: &GraphOfGroups) -> Result<GraphOfGroups, GogError> {
    let (mut gc, _) = completed(g)?;
    let special: Vec<Edge> = gc
        .edges
        .iter()
        .filter(|e| detect_special_canonical(&gc, e.id).unwrap_or(false))
        .cloned()
        .collect();
    if special.is_empty() {
        return Ok(gc);
    }
    // union-find over vertex ids
    let mut parent: BTreeMap<u32, u32> = gc.vertices.iter().map(|v| (v.id, v.id)).collect();
    fn root(p: &BTreeMap<u32, u32>, mut v: u32) -> u32 {
        while p[&v] != v {
            v = p[&v];
        }
        v
    }
    for e in &special {
        let (a, b) = (root(&parent, e.ends.0), root(&parent, e.ends.1));
        let (lo, hi) = (a.min(b), a.max(b));
        parent.insert(hi, lo);
    }
    let members: BTreeSet<u32> = special.iter().flat_map(|e| [e.ends.0, e.ends.1]).collect();
    let mut groups: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &v in &members {
        groups.entry(root(&parent, v)).or_default().push(v);
    }
    for (&head, ids) in &groups {
        let constituents = ids
            .iter()
            .map(|&id| {
                let v = gc.vertex(id).expect("member");
                Constituent { id, kind: v.kind, orbifold: v.base_orbifold.clone() }
            })
            .collect();
        gc.edges.retain(|e| !(ids.contains(&e.ends.0) && ids.contains(&e.ends.1)));
        for e in gc.edges.iter_mut() {
            if ids.contains(&e.ends.0) {
                e.ends.0 = head;
            }
            if ids.contains(&e.ends.1) {
                e.ends.1 = head;
            }
        }
        gc.vertices.retain(|v| !ids.contains(&v.id));
        gc.vertices.push(Vertex { constituents, ..Vertex::new(head, VertexKind::Merged) });
    }
    gc.sort();
    restore_bipartite(&mut gc);
    Ok(reduce(&gc))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ParallelCase {
    /// The two edges meet in an isolated vertex.
    SharedIsolated,
    /// They meet in a valence-2 V0 vertex containing their group with index 2.
    IndexTwoVertex,
    /// Outer edges of a chain f, b, b', f' through isolated V1 vertices and
    /// such an index-2 V0 vertex.
    Chain,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParallelPair {
    pub first: u32,
    pub second: u32,
    pub case: ParallelCase,
}

fn index_two_over(g: &GraphOfGroups, v: u32, e: &Edge) -> bool {
    let Some(vx) = g.vertex(v) else { return false };
    let Some(vg) = &vx.group else { return false };
    vx.part == Part::V0
        && g.valence(v) == 2
        && (e.group.index2_over.as_deref() == Some(vg.class_id.as_str())
            || vg.index2_over.as_deref() == Some(e.group.class_id.as_str()))
}

/// Isolated V1 in a completed graph; before completion an isolated V0
/// vertex between two V1 vertices plays the same role.
fn isolated_between(g: &GraphOfGroups, v: u32) -> bool {
    g.vertex(v).is_some_and(|x| x.part == Part::V1 || !g.completed) && is_isolated_vertex(g, v)
}

/// Walks from `f` through valence-2 vertices that are isolated V1 or carry
/// the edge group with index 2, at most three of them, looking for `h`.
fn parallel_case(g: &GraphOfGroups, f: &Edge, h: &Edge) -> Option<ParallelCase> {
    for start in [f.ends.0, f.ends.1] {
        let (mut edge, mut at) = (f.clone(), start);
        let mut via_index_two = false;
        for step in 1..=3 {
            let passable = isolated_between(g, at) || index_two_over(g, at, &edge);
            if !passable {
                break;
            }
            via_index_two |= !isolated_between(g, at);
            let next = g.incident(at).into_iter().find(|e| e.id != edge.id)?.clone();
            if next.id == h.id {
                return Some(match (step, via_index_two) {
                    (1, false) => ParallelCase::SharedIsolated,
                    (1, true) => ParallelCase::IndexTwoVertex,
                    _ => ParallelCase::Chain,
                });
            }
            at = next.other_end(at);
            edge = next;
        }
    }
    None
}

/// Every pair of torus edges in one class must be one of the three
/// parallel configurations.
pub fn parallel_edges_check(g: &GraphOfGroups) -> Result<Vec<ParallelPair>, Vec<Violation>> {
    crate::validate::validate_graph(g)?;
    let tori: Vec<&Edge> = g.edges.iter().filter(|e| e.is_torus()).collect();
    let mut pairs = Vec::new();
    let mut bad = Vec::new();
    for (i, f) in tori.iter().enumerate() {
        for h in &tori[i + 1..] {
            if f.group.class_id != h.group.class_id {
                continue;
            }
            match parallel_case(g, f, h) {
                Some(case) => pairs.push(ParallelPair { first: f.id, second: h.id, case }),
                None => bad.push(Violation {
                    location: format!("edges {} and {}", f.id, h.id),
                    message: format!("torus edges in class {} are not parallel through an isolated vertex", f.group.class_id),
                }),
            }
        }
    }
    if bad.is_empty() {
        Ok(pairs)
    } else {
        Err(bad)
    }
}

