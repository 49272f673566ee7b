use petgraph::algo::is_isomorphic_matching;
use petgraph::graph::UnGraph;

use crate::types::{EdgeKind, GraphOfGroups, GroupMark, Part, VertexKind};

/// Labels use `\n` line breaks, so only quotes are escaped.
fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

fn vertex_label(part: Part, kind: VertexKind, group: Option<&GroupMark>, fibre: Option<&GroupMark>, id: u32) -> String {
    let mut label = format!("v{id} {part:?} {kind}");
    if let Some(g) = group {
        label.push_str(&format!("\\ngroup {g}"));
    }
    if let Some(f) = fibre {
        label.push_str(&format!("\\nfibre {f}"));
    }
    label
}

/// Undirected DOT text with part, kind and group labels, ordered by id.
pub fn dot_export(g: &GraphOfGroups) -> String {
    let mut out = format!("graph gog {{\n  label={};\n", quote(&format!("n = {}", g.n)));
    for v in &g.vertices {
        let label = vertex_label(v.part, v.kind, v.group.as_ref(), v.fibre.as_ref(), v.id);
        let shape = match v.part {
            Part::V0 => "box",
            Part::V1 => "ellipse",
        };
        out.push_str(&format!("  v{} [label={}, shape={shape}];\n", v.id, quote(&label)));
    }
    for e in &g.edges {
        let label = format!("e{} {} {}", e.id, e.kind, e.group);
        out.push_str(&format!("  v{} -- v{} [label={}];\n", e.ends.0, e.ends.1, quote(&label)));
    }
    out.push_str("}\n");
    out
}

type Shape = UnGraph<(Part, VertexKind, Option<String>), (EdgeKind, String)>;

fn shape(g: &GraphOfGroups) -> Shape {
    let mut s = Shape::default();
    let idx: Vec<_> = g
        .vertices
        .iter()
        .map(|v| (v.id, s.add_node((v.part, v.kind, v.group.as_ref().map(|x| x.class_id.clone())))))
        .collect();
    let at = |id: u32| idx.iter().find(|(v, _)| *v == id).expect("edge end").1;
    for e in &g.edges {
        s.add_edge(at(e.ends.0), at(e.ends.1), (e.kind, e.group.class_id.clone()));
    }
    s
}

/// Same graph up to renaming vertex and edge ids: parts, kinds, group
/// classes and edge kinds must correspond.
pub fn isomorphic(a: &GraphOfGroups, b: &GraphOfGroups) -> bool {
    a.n == b.n && is_isomorphic_matching(&shape(a), &shape(b), |x, y| x == y, |x, y| x == y)
}
