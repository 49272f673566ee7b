use std::collections::BTreeMap;

use crate::error::GogError;
use crate::types::{Edge, GraphOfGroups, Part, Vertex, VertexKind};
use crate::validate::{is_isolated_loop, is_isolated_vertex, require_valid, structural};

/// Where the edges of an input graph ended up.
pub type EdgeMap = BTreeMap<u32, u32>;

/// Removes adjacent pairs of isolated vertices until none is left.
///
/// Each pair u–a–b–w becomes a single edge u–w that keeps the lowest of
/// the three edge ids; all three edges carry the same group. The graph
/// that is just a loop through two isolated vertices is left alone.
pub fn reduce(g: &GraphOfGroups) -> GraphOfGroups {
    reduce_with_map(g).0
}

pub(crate) fn reduce_with_map(g: &GraphOfGroups) -> (GraphOfGroups, EdgeMap) {
    let mut g = g.clone();
    let mut map: EdgeMap = g.edges.iter().map(|e| (e.id, e.id)).collect();
    loop {
        let found = g.edges.iter().find(|e| {
            let (a, b) = e.ends;
            a != b && is_isolated_vertex(&g, a) && is_isolated_vertex(&g, b) && !is_isolated_loop(&g, a, b)
        });
        let Some(mid) = found.cloned() else {
            break;
        };
        let (a, b) = mid.ends;
        let outer = |v: u32| g.incident(v).into_iter().find(|e| e.id != mid.id).cloned().expect("valence 2");
        let (left, right) = (outer(a), outer(b));
        let keep = [&left, &mid, &right].into_iter().min_by_key(|e| e.id).expect("three edges").clone();
        let joined = Edge { id: keep.id, ends: (left.other_end(a), right.other_end(b)), ..keep };
        let gone = [left.id, mid.id, right.id];
        g.edges.retain(|e| !gone.contains(&e.id));
        g.vertices.retain(|v| v.id != a && v.id != b);
        for target in map.values_mut() {
            if gone.contains(target) {
                *target = joined.id;
            }
        }
        g.edges.push(joined);
        g.sort();
    }
    (g, map)
}

/// Puts a fresh isolated vertex in the middle of edge `id`.
pub(crate) fn subdivide(g: &mut GraphOfGroups, id: u32, part: Part) {
    let e = g.edge(id).expect("edge exists").clone();
    let w = g.next_vertex_id();
    let kind = match part {
        Part::V0 => VertexKind::IsolatedV0,
        Part::V1 => VertexKind::IsolatedV1,
    };
    g.vertices.push(Vertex { part, ..Vertex::new(w, kind).with_group(e.group.clone()) });
    let second = Edge { id: g.next_edge_id(), ends: (w, e.ends.1), ..e.clone() };
    for x in g.edges.iter_mut().filter(|x| x.id == id) {
        x.ends.1 = w;
    }
    g.edges.push(second);
    g.sort();
}

/// Subdivides every edge whose ends lie in one part, in ascending id order.
pub(crate) fn restore_bipartite(g: &mut GraphOfGroups) {
    let bad: Vec<(u32, Part)> = g
        .edges
        .iter()
        .filter_map(|e| {
            let a = g.vertex(e.ends.0)?.part;
            (a == g.vertex(e.ends.1)?.part).then_some((e.id, a.other()))
        })
        .collect();
    for (id, part) in bad {
        subdivide(g, id, part);
    }
}

/// The completed graph with the maps from the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub graph: GraphOfGroups,
    /// Input vertex id to its id in the completion; vertices removed by
    /// reduction are absent.
    pub vertex_map: BTreeMap<u32, u32>,
    /// Input edge id to the edge carrying the same splitting.
    pub edge_map: EdgeMap,
}

/// Moves special Seifert and special solid torus vertices to V0 and
/// restores bipartiteness with isolated V1 vertices.
pub fn complete(g: &GraphOfGroups) -> Result<Completion, GogError> {
    if g.completed {
        return Err(GogError::AlreadyCompleted);
    }
    require_valid(g)?;
    let mut c = g.clone();
    for v in c.vertices.iter_mut().filter(|v| v.kind.is_special()) {
        v.part = Part::V0;
    }
    c.completed = true;
    restore_bipartite(&mut c);
    let (c, reduce_map) = reduce_with_map(&c);
    let edge_map = g.edges.iter().map(|e| (e.id, reduce_map[&e.id])).collect();
    let vertex_map = g.vertices.iter().filter(|v| c.vertex(v.id).is_some()).map(|v| (v.id, v.id)).collect();
    debug_assert!(structural(&c).is_empty());
    Ok(Completion { graph: c, vertex_map, edge_map })
}
