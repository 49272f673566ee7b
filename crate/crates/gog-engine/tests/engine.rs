use arc_calculus::catalog_entry;
use gog_engine::*;
use orbifold_core::Orbifold2;

fn fibre(name: &str) -> GroupMark {
    GroupMark::new(name, Length::N)
}

fn torus(name: &str) -> GroupMark {
    GroupMark::new(name, Length::NPlus1)
}

fn seifert(id: u32, base: Orbifold2) -> Vertex {
    Vertex::new(id, VertexKind::PeripheralSeifert).with_fibre(fibre(&format!("h{id}"))).with_base(base)
}

fn four_holed() -> Orbifold2 {
    Orbifold2::planar_str(&[], &["D1", "D1", "D0", "D0"])
}

fn messages(g: &GraphOfGroups) -> Vec<String> {
    validate_graph(g).err().unwrap_or_default().into_iter().map(|v| v.message).collect()
}

/// P0 – w1 – P2 along one torus class, both sides peripheral Seifert.
fn glued() -> GraphOfGroups {
    GraphOfGroups::new(
        1,
        vec![seifert(0, four_holed()), Vertex::new(1, VertexKind::IsolatedV1).with_group(torus("T")), seifert(2, four_holed())],
        vec![Edge::torus(0, (0, 1), torus("T")), Edge::torus(1, (1, 2), torus("T"))],
    )
}

#[test]
fn validation_catches_each_invariant() {
    assert_eq!(validate_graph(&glued()), Ok(()));

    let mut g = glued();
    g.edges[0].kind = EdgeKind::Annulus { twisted: false };
    assert!(messages(&g).contains(&"annulus edge group must have length n".to_string()));

    let y1 = Orbifold2::planar_str(&[], &["D0 D1 D0 D1 D0 D1 M"]);
    let g = GraphOfGroups::new(1, vec![Vertex::new(0, VertexKind::IBundle).with_base(y1.clone())], vec![]);
    assert_eq!(messages(&g), ["mirror in dimension 3"]);
    assert_eq!(validate_graph(&GraphOfGroups { n: 2, ..g }), Ok(()));

    let twisted = GraphOfGroups::new(
        1,
        vec![Vertex::new(0, VertexKind::IBundle), Vertex::new(1, VertexKind::OrdinaryV1)],
        vec![Edge { kind: EdgeKind::Annulus { twisted: true }, ..Edge::annulus(0, (0, 1), fibre("a")) }],
    );
    assert_eq!(messages(&twisted), ["twisted annulus in dimension 3"]);
    assert_eq!(validate_graph(&GraphOfGroups { n: 2, ..twisted }), Ok(()));

    let mut g = glued();
    g.edges.pop();
    assert!(messages(&g).contains(&"not connected".to_string()));

    let mut g = glued();
    g.vertices[1] = Vertex::new(1, VertexKind::IsolatedV0).with_group(torus("T"));
    assert!(messages(&g).iter().any(|m| m.starts_with("joins two V0")));

    let mut g = glued();
    g.vertices[0].kind = VertexKind::TorusType1;
    assert!(messages(&g).iter().any(|m| m.contains("needs VC")));

    let mut g = glued();
    g.vertices[0].fibre = None;
    assert!(messages(&g).iter().any(|m| m.contains("needs a fibre")));

    let special = GraphOfGroups::new(
        1,
        vec![seifert(0, four_holed()), Vertex::new(1, VertexKind::SpecialSeifert).with_group(torus("K")).with_fibre(fibre("s"))],
        vec![Edge::torus(0, (0, 1), torus("T"))],
    );
    assert!(messages(&special).iter().any(|m| m.contains("index 2")));

    let mut g = glued();
    g.edges[0].group.index2_over = Some("nowhere".into());
    assert!(messages(&g).iter().any(|m| m.contains("names no mark")));
}

#[test]
fn isolated_vertices() {
    let g = glued();
    assert!(is_isolated_vertex(&g, 1));
    assert!(!is_isolated_vertex(&g, 0));
    let mut h = glued();
    h.edges[1].group = torus("U");
    assert!(!is_isolated_vertex(&h, 1));
    let leaf = GraphOfGroups::new(
        1,
        vec![Vertex::new(0, VertexKind::IsolatedV0).with_group(fibre("a")), Vertex::new(1, VertexKind::OrdinaryV1)],
        vec![Edge::annulus(0, (0, 1), fibre("a"))],
    );
    assert!(!is_isolated_vertex(&leaf, 0));
}

#[test]
fn reduce_cases() {
    let a = fibre("a");
    let pair = GraphOfGroups::new(
        1,
        vec![Vertex::new(0, VertexKind::IsolatedV0).with_group(a.clone()), Vertex::new(1, VertexKind::IsolatedV1).with_group(a.clone())],
        vec![Edge::annulus(0, (0, 1), a.clone()), Edge::annulus(1, (1, 0), a.clone())],
    );
    assert_eq!(validate_graph(&pair), Ok(()));
    assert_eq!(reduce(&pair), pair);

    // x – i1 – i2 – i3 – y with three isolated vertices in a row
    let path = GraphOfGroups::new(
        1,
        vec![
            Vertex::new(0, VertexKind::IBundle),
            Vertex::new(1, VertexKind::IsolatedV1).with_group(a.clone()),
            Vertex::new(2, VertexKind::IsolatedV0).with_group(a.clone()),
            Vertex::new(3, VertexKind::IsolatedV1).with_group(a.clone()),
            Vertex::new(4, VertexKind::IBundle),
        ],
        vec![
            Edge::annulus(0, (0, 1), a.clone()),
            Edge::annulus(1, (1, 2), a.clone()),
            Edge::annulus(2, (2, 3), a.clone()),
            Edge::annulus(3, (3, 4), a.clone()),
        ],
    );
    assert!(validate_graph(&path).unwrap_err().iter().all(|v| v.message == "joins two isolated vertices"));
    let r = reduce(&path);
    assert_eq!(validate_graph(&r), Ok(()));
    let ids: Vec<u32> = r.vertices.iter().map(|v| v.id).collect();
    assert_eq!(ids, [0, 3, 4]);
    let ends: Vec<(u32, u32)> = r.edges.iter().map(|e| e.ends).collect();
    assert_eq!(ends, [(0, 3), (3, 4)]);

    assert_eq!(reduce(&glued()), glued());
}

#[test]
fn completion() {
    let g = glued();
    let c = complete(&g).unwrap();
    assert!(isomorphic(&c.graph, &g));
    assert!(c.graph.completed);
    assert_eq!(c.edge_map.len(), 2);
    assert!(matches!(complete(&c.graph), Err(GogError::AlreadyCompleted)));
}

#[test]
fn loop_through_an_isolated_vertex() {
    let loop_at = |kind: VertexKind| {
        let base = match kind {
            VertexKind::TorusType2 => catalog_entry("F1a").unwrap().orbifold,
            _ => four_holed(),
        };
        let mut g = GraphOfGroups::new(
            1,
            vec![
                Vertex::new(0, kind).with_fibre(fibre("h")).with_base(base),
                Vertex::new(1, VertexKind::IsolatedV1).with_group(torus("T")),
            ],
            vec![Edge::torus(0, (0, 1), torus("T")), Edge::torus(1, (1, 0), torus("T"))],
        );
        g.completed = true;
        g
    };
    let g = loop_at(VertexKind::PeripheralSeifert);
    assert_eq!(validate_graph(&g), Ok(()));
    assert!(detect_special_canonical(&g, 0).unwrap());
    assert!(!detect_special_canonical(&loop_at(VertexKind::TorusType2), 0).unwrap());
    assert!(matches!(detect_special_canonical(&g, 7), Err(GogError::UnknownEdge(7))));
    assert!(matches!(detect_special_canonical(&glued(), 0), Err(GogError::NotCompleted)));
}

#[test]
fn graphs_without_tori_are_canonical() {
    let g = GraphOfGroups::new(
        2,
        vec![seifert(0, four_holed()), Vertex::new(1, VertexKind::OrdinaryV1), Vertex::new(2, VertexKind::OrdinaryV1)],
        vec![Edge::annulus(0, (0, 1), fibre("h0")), Edge::annulus(1, (0, 2), fibre("h0"))],
    );
    assert!(classify_edges(&g).unwrap().values().all(|c| *c == EdgeClass::Canonical));
    let c = collapse_special_intervals(&g).unwrap();
    assert_eq!(GraphOfGroups { completed: false, ..c }, g);
    assert_eq!(waldhausen_refine(&g).unwrap(), g);
}

#[test]
fn index_two_vertex_and_chain() {
    let t = GroupMark::index2("T", Length::NPlus1, "K");
    let centre = || Vertex::new(2, VertexKind::IBundle).with_group(torus("K"));
    let case3 = GraphOfGroups::new(
        1,
        vec![Vertex::new(0, VertexKind::OrdinaryV1), centre(), Vertex::new(4, VertexKind::OrdinaryV1)],
        vec![Edge::torus(0, (0, 2), t.clone()), Edge::torus(1, (2, 4), t.clone())],
    );
    assert_eq!(validate_graph(&case3), Ok(()));
    let pairs = parallel_edges_check(&case3).unwrap();
    assert_eq!(pairs[0].case, ParallelCase::IndexTwoVertex);

    let case4 = GraphOfGroups::new(
        1,
        vec![
            seifert(0, four_holed()),
            Vertex::new(1, VertexKind::IsolatedV1).with_group(t.clone()),
            centre(),
            Vertex::new(3, VertexKind::IsolatedV1).with_group(t.clone()),
            seifert(4, four_holed()),
        ],
        vec![
            Edge::torus(0, (0, 1), t.clone()),
            Edge::torus(1, (1, 2), t.clone()),
            Edge::torus(2, (2, 3), t.clone()),
            Edge::torus(3, (3, 4), t.clone()),
        ],
    );
    assert_eq!(validate_graph(&case4), Ok(()));
    let pairs = parallel_edges_check(&case4).unwrap();
    let outer = pairs.iter().find(|p| (p.first, p.second) == (0, 3)).unwrap();
    assert_eq!(outer.case, ParallelCase::Chain);
    assert_eq!(pairs.len(), 6);
}

#[test]
fn same_class_tori_meeting_at_a_seifert_vertex_are_not_parallel() {
    let g = GraphOfGroups::new(
        1,
        vec![seifert(0, four_holed()), Vertex::new(1, VertexKind::OrdinaryV1), Vertex::new(2, VertexKind::OrdinaryV1)],
        vec![Edge::torus(0, (0, 1), torus("T")), Edge::torus(1, (0, 2), torus("T"))],
    );
    let v = parallel_edges_check(&g).unwrap_err();
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].location, "edges 0 and 1");
}

#[test]
fn solid_torus_vertices_host_no_exceptional_annulus() {
    let base = Orbifold2::planar_str(&[], &["D0 D1 D0 D1 D0 D1 D0 D1 D0 D1"]);
    let g = GraphOfGroups::new(
        2,
        vec![Vertex::new(0, VertexKind::SolidTorus).with_fibre(fibre("h")).with_base(base), Vertex::new(1, VertexKind::OrdinaryV1)],
        vec![Edge::annulus(0, (0, 1), fibre("h"))],
    );
    assert_eq!(validate_graph(&g), Ok(()));
    assert!(exceptional_annuli(&g).unwrap().is_empty());
}

#[test]
fn pants_with_two_d1_circles_splits_into_two_annuli() {
    let pants = catalog_entry("F4c").unwrap().orbifold;
    let g = GraphOfGroups::new(
        1,
        vec![seifert(0, pants), Vertex::new(1, VertexKind::OrdinaryV1), Vertex::new(2, VertexKind::OrdinaryV1)],
        vec![Edge::torus(0, (0, 1), torus("T1")), Edge::torus(1, (0, 2), torus("T2"))],
    );
    assert_eq!(exceptional_annuli(&g).unwrap().len(), 1);
    let s = waldhausen_refine(&g).unwrap();
    assert_eq!(validate_graph(&s), Ok(()));
    assert!(exceptional_annuli(&s).unwrap().is_empty());
    let pieces: Vec<&Vertex> = s.vertices.iter().filter(|v| v.base_orbifold.is_some()).collect();
    assert_eq!(pieces.len(), 2);
    for p in &pieces {
        assert_eq!(p.kind, VertexKind::OrdinaryV1);
        let circles: Vec<String> = p.base_orbifold.as_ref().unwrap().circles.iter().map(|c| c.to_string()).collect();
        assert_eq!(circles, ["[D0 CUT]", "[D1]"]);
    }
    // the new annulus runs piece – isolated V0 – piece
    let annuli: Vec<&Edge> = s.edges.iter().filter(|e| !e.is_torus()).collect();
    assert_eq!(annuli.len(), 2);
    let mid = annuli[0].ends.1;
    assert_eq!(s.vertex(mid).unwrap().kind, VertexKind::IsolatedV0);
    assert!(annuli.iter().all(|e| e.touches(mid)));
    // each leaf still hangs off one piece through its own torus class
    for (leaf, class) in [(1, "T1"), (2, "T2")] {
        let e = s.incident(leaf)[0];
        assert_eq!(e.group.class_id, class);
    }
}

#[test]
fn dot_output() {
    let single = GraphOfGroups::new(2, vec![Vertex::new(0, VertexKind::IBundle)], vec![]);
    assert_eq!(dot_export(&single), "graph gog {\n  label=\"n = 2\";\n  v0 [label=\"v0 V0 IBundle\", shape=box];\n}\n");
    let g = glued();
    let d = dot_export(&g);
    assert_eq!(d, dot_export(&g.clone()));
    assert_eq!(d.lines().filter(|l| l.contains("shape=")).count(), 3);
    assert!(d.contains("v0 -- v1 [label=\"e0 torus T[n+1]\"];"));
}

#[test]
fn json_round_trip() {
    let mut g = glued();
    g.edges.push(Edge { kind: EdgeKind::Annulus { twisted: true }, ..Edge::annulus(2, (0, 3), fibre("h0")) });
    g.vertices.push(Vertex::new(3, VertexKind::OrdinaryV1));
    g.n = 3;
    let text = g.to_json();
    let back = GraphOfGroups::from_json(&text).unwrap();
    assert_eq!(back, g);
    assert_eq!(back.to_json(), text);
    assert!(text.contains("\"twisted\": true"));
    assert!(text.contains("\"length\": \"n+1\""));
    assert!(GraphOfGroups::from_json("{\"n\": 1}").is_err());
}
