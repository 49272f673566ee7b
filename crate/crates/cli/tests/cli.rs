use std::io::Write;
use std::process::{Command, Output, Stdio};

fn jsjcalc(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jsjcalc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const PANTS: &str = r#"{"orientable": true, "genus": 0, "cone_points": [],
  "circles": [[{"kind": "D0"}], [{"kind": "D0"}], [{"kind": "D0"}]]}"#;

#[test]
fn pants_chi() {
    let out = jsjcalc(&["orb-chi"], PANTS);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-1\n");
}

#[test]
fn dimension_three_catalog_has_six_entries() {
    let out = jsjcalc(&["catalog", "--dim", "3"], "");
    assert_eq!(stdout(&out).lines().count(), 6);
    let one = jsjcalc(&["catalog", "--catalog-id", "F4b", "--format", "json"], "");
    assert!(stdout(&one).contains("\"ns_omission\": true"));
    assert_eq!(jsjcalc(&["catalog", "--catalog-id", "F9z"], "").status.code(), Some(1));
}

#[test]
fn scott_fixture_through_classify() {
    let fixture = jsjcalc(&["fixture", "scott", "--n", "1"], "");
    let out = jsjcalc(&["gog-classify"], &stdout(&fixture));
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("special splittings: 1\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.ends_with("Canonical")).count(), 2);
}

#[test]
fn pipelines_compose_through_stdin() {
    let g = stdout(&jsjcalc(&["fixture", "torus-type-2"], ""));
    let refined = stdout(&jsjcalc(&["gog-refine"], &g));
    assert_eq!(stdout(&jsjcalc(&["gog-validate"], &refined)), "ok\n");
    let dot = stdout(&jsjcalc(&["gog-refine", "--format", "dot"], &g));
    assert!(dot.starts_with("graph gog {"));
    let collapsed = stdout(&jsjcalc(&["gog-collapse", "--fixture", "scott"], ""));
    let classes = stdout(&jsjcalc(&["gog-classify", "--format", "json"], &collapsed));
    assert!(classes.contains("\"special_splittings\": []"));
}

#[test]
fn isolated_arc_and_cut() {
    let f4c = arc_calculus::catalog_entry("F4c").unwrap().orbifold.to_json();
    let arcs = stdout(&jsjcalc(&["orb-isolated", "--format", "text"], &f4c));
    assert_eq!(arcs.lines().count(), 1);
    let pieces = stdout(&jsjcalc(&["orb-cut", "--format", "text"], &f4c));
    assert_eq!(pieces, "orientable genus 0, [D0 CUT], [D1]\norientable genus 0, [D0 CUT], [D1]\n");
    let out = jsjcalc(&["orb-cut"], PANTS);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(jsjcalc(&["orb-chi"], "not json").status.code(), Some(2));
    assert_eq!(jsjcalc(&["gog-validate"], "{}").status.code(), Some(2));
    assert_eq!(jsjcalc(&["fixture", "scott", "--n", "0"], "").status.code(), Some(2));
    assert_eq!(jsjcalc(&["no-such-verb"], "").status.code(), Some(2));

    let bad_cone = r#"{"orientable": true, "genus": 0, "cone_points": [1], "circles": [[{"kind": "D0"}]]}"#;
    let out = jsjcalc(&["orb-chi"], bad_cone);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("violation: "));

    let mirror = stdout(&jsjcalc(&["fixture", "dim4-qxi"], ""));
    let graph = format!(r#"{{"n": 1, "vertices": [{{"id": 0, "part": "V0", "kind": "IBundle", "orbifold": {mirror}}}], "edges": []}}"#);
    let out = jsjcalc(&["gog-validate"], &graph);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "violation: vertex 0: mirror in dimension 3\n");
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("jsjcalc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("scott.dot");
    let out = jsjcalc(&["gog-dot", "--fixture", "scott", "-o", path.to_str().unwrap()], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("shape=")).count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}
