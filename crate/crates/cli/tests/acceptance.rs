//! The ten acceptance criteria, one line each. Runs without the libtest
//! harness so every line is printed; exits non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, Stdio};
use std::time::Instant;

use arc_calculus::*;
use fixtures::*;
use gog_engine::*;
use num_rational::Ratio;
use orbifold_core::{Orbifold2, SegKind, WeightedChi};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn chi(o: &Orbifold2) -> WeightedChi {
    o.euler_char().expect("χ defined")
}

fn q(n: i64, d: i64) -> WeightedChi {
    WeightedChi(Ratio::new(n, d))
}

fn chi_suite() -> Outcome {
    let cases = [
        ("pants", Orbifold2::planar_str(&[], &["D0", "D0", "D0"]), q(-1, 1)),
        ("D²(2,2)", Orbifold2::planar_str(&[2, 2], &["D0"]), q(0, 1)),
        ("annulus", Orbifold2::planar_str(&[], &["D0", "D0"]), q(0, 1)),
        ("Y₃", Orbifold2::planar_str(&[], &["D0 M M@3"]), q(1, 6)),
        ("hexagon", catalog_entry("F2h").expect("F2h").orbifold, q(-1, 2)),
    ];
    for (name, o, want) in &cases {
        ensure!(chi(o) == *want, "{name}: χ = {} not {want}", chi(o));
    }
    for p in [1u32, 2, 3, 5] {
        let disk = Orbifold2::planar_str(if p == 1 { &[] } else { std::slice::from_ref(&p) }, &["D0"]);
        let half = if p == 1 { Orbifold2::planar_str(&[], &["D0 M"]) } else { Orbifold2::planar_str(&[], &[&format!("D0 M M@{p}")]) };
        ensure!(chi(&disk) == chi(&half) * 2, "p = {p}: χ(D²) = {} but χ(Y) = {}", chi(&disk), chi(&half));
    }
    Ok(format!("{} values and 4 cover relations exact", cases.len()))
}

fn threshold_suite() -> Outcome {
    let families = [
        PositiveFamily::Disk,
        PositiveFamily::Cone(2),
        PositiveFamily::Cone(3),
        PositiveFamily::Cone(5),
        PositiveFamily::Y1,
        PositiveFamily::Y(2),
        PositiveFamily::Y(3),
        PositiveFamily::Y(5),
    ];
    let mut problems = Vec::new();
    for f in families {
        for n in 1..=6usize {
            let o = f.with_pattern(n);
            let k = threshold_k(&o).map_err(|e| e.to_string())? as usize;
            let arcs = essential_arcs_oracle(&o).map_err(|e| e.to_string())?;
            if n < k && !arcs.is_empty() {
                problems.push(format!("{f:?} |∂₀|={n} < k={k} has {} essential arcs", arcs.len()));
            }
            if n >= k && arcs.is_empty() {
                problems.push(format!("{f:?} |∂₀|={n} ≥ k={k} has no essential arc"));
            }
            for a in &arcs {
                let crossed = arcs.iter().any(|b| b != a && !arcs_compatible(&o, a, b));
                if !crossed && is_rigid(&o, a) {
                    problems.push(format!("{f:?} |∂₀|={n}: {a} is crossed by no other arc"));
                }
            }
            if !oracle_isolated(&o).map_err(|e| e.to_string())?.is_empty() {
                problems.push(format!("{f:?} |∂₀|={n} has an isolated arc"));
            }
        }
    }
    if problems.is_empty() {
        Ok("48 family sizes agree with k".into())
    } else {
        Err(problems.join("; "))
    }
}

fn catalog_counts() -> Outcome {
    let zero = catalog_chi_zero().len();
    let orbifolds = catalog_chi_neg_orbifolds().len();
    let configs = catalog_chi_neg_configs();
    let d1_empty = configs.iter().filter(|e| !e.orbifold.has_kind(SegKind::D1)).count();
    let dim3 = catalog_dim3();
    let ns: Vec<&str> = dim3.iter().filter(|e| e.ns_omission).map(|e| e.figure_id.as_str()).collect();
    let export = catalog_export();
    let summary = format!(
        "χ=0: {zero}, χ<0 orbifolds: {orbifolds}, χ<0 configurations: {}, ∂₁ empty: {d1_empty}, dim 3: {}, ns omission: {ns:?}",
        configs.len(),
        dim3.len()
    );
    ensure!(export.contains("fourteen"), "catalog export lacks the fourteen note");
    ensure!(zero == 10 && orbifolds == 8 && d1_empty == 6, "{summary}");
    ensure!(dim3.len() == 6 && ns == ["F4b"], "{summary}");
    ensure!(configs.len() == 13, "{summary}; expected 13 configurations");
    Ok(summary)
}

fn oracle_equivalence() -> Outcome {
    let (mut planar, mut lifted) = (0, 0);
    for e in catalog_all() {
        let o = &e.orbifold;
        if o.is_mirror_free() && o.orientable {
            let stored = e.isolated_arc.clone().or_else(|| catalog_match(o).and_then(|m| m.isolated_arc));
            let found = oracle_isolated(o).map_err(|x| x.to_string())?;
            match stored {
                Some(a) => ensure!(
                    found.len() == 1 && same_orbit(o, &found[0], &a),
                    "{}: oracle found {found:?}",
                    e.figure_id
                ),
                None => ensure!(found.is_empty(), "{}: oracle found {found:?}", e.figure_id),
            }
            planar += 1;
        } else if let Some(a) = &e.isolated_arc {
            let r = lift_check(o, a).map_err(|x| x.to_string())?;
            ensure!(r.passed(), "{}: lift check {r:?}", e.figure_id);
            lifted += 1;
        }
    }
    Ok(format!("{planar} entries match the oracle, {lifted} lift checks pass"))
}

/// The ∂X component through a segment: the whole circle when it has no
/// mirror, else the run of non-mirror segments around it.
fn component(o: &Orbifold2, c: usize, s: usize) -> Vec<SegKind> {
    let circle = &o.circles[c];
    let n = circle.len();
    if !circle.has_kind(SegKind::M) {
        return (0..n).map(|i| circle.kind(i)).collect();
    }
    let mut out = vec![circle.kind(s)];
    let mut i = s;
    while circle.kind(i + n - 1) != SegKind::M {
        i = (i + n - 1) % n;
        out.push(circle.kind(i));
    }
    let mut j = s;
    while circle.kind(j + 1) != SegKind::M {
        j = (j + 1) % n;
        out.push(circle.kind(j));
    }
    out
}

fn boundary_constraint() -> Outcome {
    let mut mixed = Vec::new();
    for e in catalog_all() {
        let Some(a) = &e.isolated_arc else { continue };
        let pure = a.endpoints.iter().all(|&(c, s)| component(&e.orbifold, c, s).iter().all(|&k| k == SegKind::D0));
        if !pure {
            ensure!(e.euler_char.is_zero(), "{} has a mixed endpoint component with χ ≠ 0", e.figure_id);
            mixed.push(e.figure_id.clone());
        }
    }
    ensure!(mixed == ["F1a", "F1b", "F1c"], "unexpected mixed endpoint components {mixed:?}");
    Ok(format!("only {mixed:?} touch ∂₁"))
}

fn special_edges(g: &GraphOfGroups) -> Result<Vec<u32>, String> {
    Ok(classify_edges(g)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|(_, c)| *c == EdgeClass::SpecialCanonicalTorus)
        .map(|(e, _)| e)
        .collect())
}

fn scott_pipeline() -> Outcome {
    let g = build_scott(1);
    let classes = classify_edges(&g).map_err(|e| e.to_string())?;
    for e in &g.edges {
        let want = if e.is_torus() { EdgeClass::SpecialCanonicalTorus } else { EdgeClass::Canonical };
        ensure!(classes[&e.id] == want, "edge {} classified {:?}", e.id, classes[&e.id]);
    }
    let collapsed = collapse_special_intervals(&g).map_err(|e| e.to_string())?;
    ensure!(special_edges(&collapsed)?.is_empty(), "special edges survive the collapse");
    let c = complete(&g).map_err(|e| e.to_string())?;
    let reopened = GraphOfGroups { completed: false, ..c.graph.clone() };
    let again = complete(&reopened).map_err(|e| e.to_string())?;
    ensure!(isomorphic(&again.graph, &c.graph) && isomorphic(&c.graph, &g), "completion is not idempotent");
    let pairs = parallel_edges_check(&g).map_err(|v| format!("{v:?}"))?;
    ensure!(
        pairs.len() == 1 && pairs[0].case == ParallelCase::SharedIsolated,
        "parallel pairs {pairs:?}"
    );
    Ok("torus Special, annuli Canonical, collapse clean, completion idempotent, parallel case 2".into())
}

fn klein_pipeline() -> Outcome {
    let one = complete(&build_klein_glue()).map_err(|e| e.to_string())?;
    let e = one.edge_map[&0];
    ensure!(detect_special_canonical(&one.graph, e).map_err(|x| x.to_string())?, "one special neighbour not detected");
    let two = complete(&build_klein_two_special()).map_err(|e| e.to_string())?;
    for e in &two.graph.edges {
        ensure!(!detect_special_canonical(&two.graph, e.id).map_err(|x| x.to_string())?, "two special neighbours accepted");
    }
    let loop_at = |kind: VertexKind, base: Orbifold2| {
        let mut g = GraphOfGroups::new(
            1,
            vec![
                Vertex::new(0, kind).with_fibre(GroupMark::new("h", Length::N)).with_base(base),
                Vertex::new(1, VertexKind::IsolatedV1).with_group(GroupMark::new("T", Length::NPlus1)),
            ],
            vec![
                Edge::torus(0, (0, 1), GroupMark::new("T", Length::NPlus1)),
                Edge::torus(1, (1, 0), GroupMark::new("T", Length::NPlus1)),
            ],
        );
        g.completed = true;
        g
    };
    let peripheral = loop_at(VertexKind::PeripheralSeifert, Orbifold2::planar_str(&[], &["D1", "D1", "D0", "D0"]));
    let torus_type = loop_at(VertexKind::TorusType2, catalog_entry("F1a").expect("F1a").orbifold);
    ensure!(validate_graph(&peripheral).is_ok() && validate_graph(&torus_type).is_ok(), "loop graphs invalid");
    ensure!(detect_special_canonical(&peripheral, 0).map_err(|x| x.to_string())?, "peripheral loop rejected");
    ensure!(!detect_special_canonical(&torus_type, 0).map_err(|x| x.to_string())?, "torus-type loop accepted");
    Ok("one special neighbour true, two false, loop needs peripheral Seifert".into())
}

fn is_reduced(g: &GraphOfGroups) -> bool {
    reduce(g) == *g
}

fn bipartite(g: &GraphOfGroups) -> bool {
    g.edges.iter().all(|e| g.vertex(e.ends.0).map(|v| v.part) != g.vertex(e.ends.1).map(|v| v.part))
}

fn waldhausen_pipeline() -> Outcome {
    let s = waldhausen_refine(&build_torus_type2()).map_err(|e| e.to_string())?;
    ensure!(validate_graph(&s).is_ok(), "refined graph invalid: {:?}", validate_graph(&s));
    ensure!(bipartite(&s) && is_reduced(&s), "refined graph not bipartite and reduced");
    ensure!(exceptional_annuli(&s).map_err(|e| e.to_string())?.is_empty(), "exceptional annuli remain");
    let mut cut = 0;
    for e in catalog_all() {
        let Some(a) = &e.isolated_arc else { continue };
        for p in cut_along_arc(&e.orbifold, a).map_err(|x| x.to_string())? {
            let left = isolated_arcs(&p).map_err(|x| x.to_string())?;
            ensure!(left.is_empty(), "{}: piece {p} has isolated arcs {left:?}", e.figure_id);
            cut += 1;
        }
    }
    Ok(format!("refinement clean; {cut} cut pieces carry no isolated arc"))
}

fn dimension_three_guard() -> Outcome {
    let mut checked = 0;
    let mut bases: Vec<Orbifold2> = catalog_all().into_iter().map(|e| e.orbifold).filter(|o| !o.is_mirror_free()).collect();
    bases.extend(build_dim4_orbifolds());
    for base in bases {
        let g = GraphOfGroups::new(1, vec![Vertex::new(0, VertexKind::IBundle).with_base(base.clone())], vec![]);
        let v = validate_graph(&g).err().unwrap_or_default();
        ensure!(v.iter().any(|x| x.message == "mirror in dimension 3"), "{base} accepted in dimension 3");
        checked += 1;
    }
    let twisted = GraphOfGroups::new(
        1,
        vec![Vertex::new(0, VertexKind::IBundle), Vertex::new(1, VertexKind::OrdinaryV1)],
        vec![Edge {
            kind: EdgeKind::Annulus { twisted: true },
            ..Edge::annulus(0, (0, 1), GroupMark::new("a", Length::N))
        }],
    );
    let v = validate_graph(&twisted).err().unwrap_or_default();
    ensure!(v.iter().any(|x| x.message == "twisted annulus in dimension 3"), "twisted annulus accepted");
    Ok(format!("{checked} mirror bases and the twisted annulus rejected"))
}

fn jsjcalc(args: &[&str], stdin: &str) -> (i32, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jsjcalc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("jsjcalc runs");
    {
        use std::io::Write;
        let mut input = child.stdin.take().expect("stdin");
        input.write_all(stdin.as_bytes()).expect("write stdin");
    }
    let out = child.wait_with_output().expect("jsjcalc finishes");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn determinism() -> Outcome {
    let mut matrix: Vec<(Vec<String>, String)> = Vec::new();
    let args = |s: &str| s.split_whitespace().map(String::from).collect::<Vec<_>>();
    for name in FixtureId::NAMES {
        matrix.push((args(&format!("fixture {name}")), String::new()));
    }
    for fmt in ["text", "json"] {
        matrix.push((args(&format!("catalog --format {fmt}")), String::new()));
    }
    matrix.push((args("catalog --dim 3"), String::new()));
    for name in ["scott", "torus-type-2", "klein", "klein-two-special"] {
        for verb in ["gog-validate", "gog-complete", "gog-classify", "gog-collapse", "gog-refine", "gog-dot"] {
            matrix.push((args(&format!("{verb} --fixture {name}")), String::new()));
        }
    }
    for e in catalog_all() {
        for verb in ["orb-chi", "orb-arcs", "orb-isolated", "orb-cut"] {
            if verb == "orb-arcs" && (!e.orbifold.orientable || !e.orbifold.is_mirror_free()) {
                continue;
            }
            if verb == "orb-cut" && e.isolated_arc.is_none() {
                continue;
            }
            matrix.push((vec![verb.to_string()], e.orbifold.to_json()));
        }
    }
    for (argv, stdin) in &matrix {
        let refs: Vec<&str> = argv.iter().map(String::as_str).collect();
        let first = jsjcalc(&refs, stdin);
        let second = jsjcalc(&refs, stdin);
        ensure!(first.0 == 0, "{argv:?} exited {}", first.0);
        ensure!(first == second, "{argv:?} differs between runs");
    }
    Ok(format!("{} invocations byte-identical", matrix.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Euler characteristic suite", chi_suite),
        ("threshold suite", threshold_suite),
        ("catalog counts", catalog_counts),
        ("oracle and catalog agree", oracle_equivalence),
        ("endpoint components are pure ∂₀", boundary_constraint),
        ("Scott pipeline", scott_pipeline),
        ("Klein pipeline", klein_pipeline),
        ("Waldhausen pipeline", waldhausen_pipeline),
        ("dimension-3 guard", dimension_three_guard),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({ms} ms): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({ms} ms): {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
