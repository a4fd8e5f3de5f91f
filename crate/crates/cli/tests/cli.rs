use std::io::Write;
use std::process::{Command, Output};

use cartanfree::hfree::make_m0;
use cartanfree::liealg::Root;
use cartanfree::polyring::int;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cartanfree"))
        .args(args)
        .env_remove("CARTANFREE_NODE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn table_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

/// Structural DOT check: one digraph block, balanced braces, and every
/// statement is a node or edge with a bracketed attribute list.
fn check_dot(s: &str) -> (usize, usize) {
    let s = s.trim();
    assert!(
        s.starts_with("digraph ") && s.ends_with('}'),
        "not a digraph block"
    );
    assert_eq!(s.matches('{').count(), s.matches('}').count());
    let body = &s[s.find('{').unwrap() + 1..s.len() - 1];
    let (mut nodes, mut edges) = (0, 0);
    for stmt in body.lines().map(str::trim).filter(|l| !l.is_empty()) {
        assert!(stmt.ends_with("];"), "statement without attributes: {stmt}");
        let head = &stmt[..stmt.find('[').unwrap()].trim();
        assert_eq!(
            stmt.matches('"').count() % 2,
            0,
            "unbalanced quotes: {stmt}"
        );
        match head.split(" -> ").collect::<Vec<_>>()[..] {
            ["node"] | ["edge"] | ["graph"] => {}
            [a] if a.starts_with('n') => nodes += 1,
            [a, b] if a.starts_with('n') && b.starts_with('n') => edges += 1,
            _ => panic!("unexpected statement: {stmt}"),
        }
    }
    (nodes, edges)
}

#[test]
fn verify_m0_n3() {
    let o = run(&["verify", "--n", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pairs checked: 210"));
    let o = run(&["verify", "--n", "3", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["pairs_checked"], 210);
}

#[test]
fn verify_reports_broken_table() {
    let m = make_m0(2).unwrap();
    let long = Root::new(vec![2, 0]);
    let doubled = m.action(&long).unwrap().scale(&int(2));
    let broken = m.with_action(long, doubled).unwrap();
    let f = table_file(&broken.to_json_string());
    let o = run(&[
        "verify",
        "--table",
        f.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["passed"], false);
    let pairs: Vec<String> = v["failures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["pair"].to_string())
        .collect();
    assert!(
        pairs
            .iter()
            .any(|p| p.contains("X(2e1)") && p.contains("X(-2e1)")),
        "{pairs:?}"
    );
}

#[test]
fn verify_sl2_fixture() {
    let o = run(&["verify", "--builtin", "sl2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("pairs checked: 3"));
}

#[test]
fn support_at_lambda0_and_generic() {
    let o = run(&["support", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["node_count"], 50);
    assert_eq!(v["components"]["count"], 4);
    let o = run(&["support", "--mu", "1/3,2/7", "--format", "json"]);
    assert_eq!(json(&o)["components"]["count"], 1);
    let o = run(&["support", "--semisimplify"]);
    let text = stdout(&o);
    assert!(
        text.contains("components: 4") && text.contains("order: none"),
        "{text}"
    );
}

#[test]
fn support_dot_is_well_formed() {
    let o = run(&["support", "--format", "dot", "--dashed"]);
    assert!(o.status.success());
    let (nodes, edges) = check_dot(&stdout(&o));
    assert_eq!(nodes, 50);
    assert!(edges >= 285);
    let o = run(&["verify", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_recovers_twists() {
    let o = run(&["classify", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["omega"], serde_json::json!([]));
    let o = run(&["classify", "--twist", "weyl:1", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["omega"], serde_json::json!([1]));
    assert_eq!(v["verdict"], true);
    for seed in ["1", "2", "3"] {
        let o = run(&[
            "classify",
            "--random-twists",
            "4",
            "--seed",
            seed,
            "--format",
            "json",
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert_eq!(json(&o)["verdict"], true);
    }
}

#[test]
fn trace_words() {
    let o = run(&["trace", "--word", "X(2e1),X(-2e1)"]);
    assert_eq!(stdout(&o).trim(), "h1^2 - 2*h1 + 3/4");
    let o = run(&["trace", "--casimir"]);
    assert_eq!(stdout(&o).trim(), "-5/4");
    let o = run(&["trace", "--word", ""]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = run(&["trace", "--word", "X(2e1)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("U(g)_0"));
}

#[test]
fn node_cap_exits_3() {
    let o = run(&["support", "--node-cap", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_cartanfree"))
        .args(["support"])
        .env("CARTANFREE_NODE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn malformed_input_exits_2() {
    let f = table_file("{\"n\": ");
    let o = run(&["verify", "--table", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("cartanfree: "));
    let o = run(&["classify", "--twist", "weyl:7"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["support", "--mu", "1/2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dump_round_trips() {
    let o = run(&["dump", "--format", "json"]);
    let f = table_file(&stdout(&o));
    let o = run(&["verify", "--table", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["tensor", "--format", "json"]);
    assert_eq!(json(&o)["d"], 4);
}
