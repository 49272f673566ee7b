use std::collections::{BTreeMap, BTreeSet};

use orbifold_core::{Pi1Class, Violation};

use crate::error::GogError;
use crate::types::{EdgeKind, GraphOfGroups, GroupMark, Length, Part, VertexKind};

fn violation(location: impl Into<String>, message: impl Into<String>) -> Violation {
    Violation { location: location.into(), message: message.into() }
}

fn expected_pi1(kind: VertexKind) -> Option<Pi1Class> {
    match kind {
        VertexKind::PeripheralSeifert => Some(Pi1Class::NotVirtuallyCyclic),
        VertexKind::TorusType1 | VertexKind::TorusType2 => Some(Pi1Class::VirtuallyCyclic),
        VertexKind::SolidTorus => Some(Pi1Class::Finite),
        _ => None,
    }
}

/// Checks every graph invariant and reports all violations.
pub fn validate_graph(g: &GraphOfGroups) -> Result<(), Vec<Violation>> {
    let mut out = structural(g);
    if out.is_empty() {
        out.extend(reducedness(g));
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Everything except reducedness.
pub(crate) fn structural(g: &GraphOfGroups) -> Vec<Violation> {
    let mut out = Vec::new();
    if g.n == 0 {
        out.push(violation("graph", "ambient dimension must be at least 1"));
    }
    if g.vertices.is_empty() {
        out.push(violation("graph", "no vertices"));
        return out;
    }
    let mut ids = BTreeSet::new();
    for v in &g.vertices {
        if !ids.insert(v.id) {
            out.push(violation(format!("vertex {}", v.id), "duplicate vertex id"));
        }
    }
    let mut eids = BTreeSet::new();
    for e in &g.edges {
        if !eids.insert(e.id) {
            out.push(violation(format!("edge {}", e.id), "duplicate edge id"));
        }
    }

    let mut marks: Vec<&GroupMark> = Vec::new();
    for v in &g.vertices {
        marks.extend(v.group.iter().chain(v.fibre.iter()));
    }
    marks.extend(g.edges.iter().map(|e| &e.group));
    let lengths: BTreeMap<&str, BTreeSet<Length>> = marks.iter().fold(BTreeMap::new(), |mut m, k| {
        m.entry(k.class_id.as_str()).or_default().insert(k.length);
        m
    });
    for (class, ls) in &lengths {
        if ls.len() > 1 {
            out.push(violation(format!("class {class}"), "class used with two lengths"));
        }
    }
    for k in &marks {
        if let Some(over) = &k.index2_over {
            if !lengths.get(over.as_str()).is_some_and(|ls| ls.contains(&k.length)) {
                out.push(violation(format!("class {}", k.class_id), format!("index2_over {over} names no mark of equal length")));
            }
        }
    }

    for v in &g.vertices {
        let loc = format!("vertex {}", v.id);
        let home = v.kind.home_part();
        let moved = g.completed && v.kind.is_special() && v.part == Part::V0;
        if v.part != home && !moved {
            out.push(violation(&loc, format!("kind {} cannot be in part {:?}", v.kind, v.part)));
        }
        if v.kind.needs_group() && v.group.is_none() {
            out.push(violation(&loc, format!("kind {} needs a group", v.kind)));
        }
        if v.kind.needs_fibre() {
            match &v.fibre {
                None => out.push(violation(&loc, format!("kind {} needs a fibre", v.kind))),
                Some(f) if f.length != Length::N => out.push(violation(&loc, "fibre must have length n")),
                _ => {}
            }
        }
        if let Some(o) = &v.base_orbifold {
            if let Err(vs) = o.validate() {
                for x in vs {
                    out.push(violation(&loc, format!("base orbifold: {x}")));
                }
                continue;
            }
            if g.n == 1 && !o.is_mirror_free() {
                out.push(violation(&loc, "mirror in dimension 3"));
            }
        }
        if let Some(want) = expected_pi1(v.kind) {
            match v.base_orbifold.as_ref().map(|o| o.pi1_class()) {
                None => out.push(violation(&loc, format!("kind {} needs a base orbifold", v.kind))),
                Some(Ok(c)) if c != want => {
                    out.push(violation(&loc, format!("base orbifold group is {c}, kind {} needs {want}", v.kind)))
                }
                Some(Err(e)) => out.push(violation(&loc, format!("base orbifold: {e}"))),
                _ => {}
            }
        }
        if v.kind == VertexKind::SpecialSeifert {
            let inc = g.incident(v.id);
            let ok = g.valence(v.id) == 1
                && inc[0].is_torus()
                && v.group.as_ref().is_some_and(|gr| inc[0].group.index2_over.as_deref() == Some(gr.class_id.as_str()));
            if !ok {
                out.push(violation(&loc, "special Seifert vertex needs one torus edge of index 2 in its group"));
            }
        }
    }

    for e in &g.edges {
        let loc = format!("edge {}", e.id);
        let (Some(a), Some(b)) = (g.vertex(e.ends.0), g.vertex(e.ends.1)) else {
            out.push(violation(&loc, "end is not a vertex"));
            continue;
        };
        match e.kind {
            EdgeKind::Torus if e.group.length != Length::NPlus1 => {
                out.push(violation(&loc, "torus edge group must have length n+1"))
            }
            EdgeKind::Annulus { twisted } => {
                if e.group.length != Length::N {
                    out.push(violation(&loc, "annulus edge group must have length n"));
                }
                if twisted && g.n == 1 {
                    out.push(violation(&loc, "twisted annulus in dimension 3"));
                }
            }
            _ => {}
        }
        if a.part == b.part {
            out.push(violation(&loc, format!("joins two {:?} vertices", a.part)));
        }
    }

    if !is_connected(g) {
        out.push(violation("graph", "not connected"));
    }
    out
}

fn is_connected(g: &GraphOfGroups) -> bool {
    let mut seen = BTreeSet::from([g.vertices[0].id]);
    let mut stack = vec![g.vertices[0].id];
    while let Some(v) = stack.pop() {
        for e in g.incident(v) {
            let w = e.other_end(v);
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == g.vertices.len()
}

/// Valence 2 with both edge groups in the vertex's class.
pub fn is_isolated_vertex(g: &GraphOfGroups, v: u32) -> bool {
    let Some(group) = g.vertex(v).and_then(|x| x.group.as_ref()) else {
        return false;
    };
    g.valence(v) == 2 && g.incident(v).iter().all(|e| e.group.class_id == group.class_id)
}

/// The two-vertex loop of isolated vertices, the one allowed adjacency.
pub(crate) fn is_isolated_loop(g: &GraphOfGroups, a: u32, b: u32) -> bool {
    g.incident(a).iter().all(|e| e.other_end(a) == b) && g.incident(b).iter().all(|e| e.other_end(b) == a)
}

fn reducedness(g: &GraphOfGroups) -> Vec<Violation> {
    g.edges
        .iter()
        .filter(|e| {
            let (a, b) = e.ends;
            a != b && is_isolated_vertex(g, a) && is_isolated_vertex(g, b) && !is_isolated_loop(g, a, b)
        })
        .map(|e| violation(format!("edge {}", e.id), "joins two isolated vertices"))
        .collect()
}

pub(crate) fn require_valid(g: &GraphOfGroups) -> Result<(), GogError> {
    validate_graph(g).map_err(GogError::Invalid)
}
