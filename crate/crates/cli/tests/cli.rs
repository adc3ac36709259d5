use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

const I3: &str = "100\n010\n001\n";
const F1: &str = "011\n101\n111\n";

fn coxeter() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_coxeter"));
    cmd.env_remove("GAMMA_MAX_N").env_remove("GAMMA_WORKERS");
    cmd
}

fn run(args: &[&str]) -> Output {
    coxeter().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Self {
            dir: TempDir::new().unwrap(),
        }
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn distance_to_a_family_member() {
    let f = Files::new();
    let (a, b) = (f.write("a.txt", I3), f.write("b.txt", F1));
    let o = run(&["dist", "--a", s(&a), "--b", s(&b)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4\n");

    let o = run(&["dist", "--a", s(&a), "--b", s(&b), "--bfs"]);
    assert_eq!(stdout(&o), "4\nbfs 4\n");
}

#[test]
fn compact_rows_and_stdin() {
    let f = Files::new();
    let a = f.write("a.txt", "100/010/001");
    let mut child = coxeter()
        .args(["dist", "--a", s(&a), "--b", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(F1.as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "4\n");

    let o = run(&["dist", "--a", "-", "--b", "-"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn diameter_and_codes_list() {
    assert_eq!(stdout(&run(&["diameter", "--n", "3"])), "4\n");
    assert_eq!(
        stdout(&run(&["diameter", "--n", "4", "--bfs"])),
        "5\nbfs eccentricity of I 5\n"
    );
    let o = run(&["codes-list", "--length", "4"]);
    assert_eq!(stdout(&o), "1100\n0011\n\n1010\n0101\n\n1001\n0110\n");
    let j = json(&run(&["codes-list", "--length", "6", "--format", "json"]));
    assert_eq!(j["details"]["count"], 15);
}

#[test]
fn json_shape_is_stable() {
    let f = Files::new();
    let (a, b) = (f.write("a.txt", I3), f.write("b.txt", F1));
    let args = ["classify", "--a", s(&a), "--b", s(&b), "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    let j = json(&first);
    let keys: Vec<&str> = j.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "details", "inputs", "result", "schema"]);
    assert_eq!(j["schema"], "coxeter-cli/1");
    assert_eq!(j["command"], "classify");
    assert_eq!(j["result"], "NonAltI_AllOnes(2)");
    assert_eq!(j["details"]["distance"], 4);
    assert_eq!(j["inputs"]["b"], serde_json::json!(["011", "101", "111"]));
}

#[test]
fn exit_codes() {
    let f = Files::new();
    let a = f.write("a.txt", I3);
    let singular = f.write("s.txt", "110\n110\n001\n");
    let nonsym = f.write("n.txt", "110\n010\n001\n");
    let bad = f.write("bad.txt", "1x0\n");
    let four = f.write("four.txt", "1000\n0100\n0010\n0001\n");
    let cases: [(&[&str], i32); 8] = [
        (&["dist", "--a", s(&a), "--b", s(&singular)], 1),
        (&["dist", "--a", s(&a), "--b", s(&nonsym)], 1),
        (&["dist", "--a", s(&a), "--b", s(&four)], 1),
        (&["dist", "--a", s(&a), "--b", "missing.txt"], 2),
        (&["dist", "--a", s(&a), "--b", s(&bad)], 2),
        (&["dist", "--a", s(&a)], 2),
        (&["verify", "--suite", "nope"], 2),
        (&["enumerate", "--n", "9"], 1),
    ];
    for (args, code) in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(
            String::from_utf8_lossy(&o.stderr).contains("error"),
            "{args:?}"
        );
    }
}

#[test]
fn environment_caps_yield_to_flags() {
    let o = coxeter()
        .env("GAMMA_MAX_N", "3")
        .args(["enumerate", "--n", "4", "--count"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = coxeter()
        .env("GAMMA_MAX_N", "3")
        .args(["enumerate", "--n", "4", "--count", "--max-n", "4"])
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "448\n");
    let o = coxeter()
        .env("GAMMA_WORKERS", "2")
        .args(["enumerate", "--n", "3", "--count"])
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "28\n");
}

#[test]
fn neighbors_and_geodesic() {
    let f = Files::new();
    let (a, b) = (f.write("a.txt", I3), f.write("b.txt", F1));
    let o = run(&["neighbors", "--a", s(&a)]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let j = json(&run(&[
        "geodesic",
        "--a",
        s(&a),
        "--b",
        s(&b),
        "--format",
        "json",
    ]));
    assert_eq!(j["details"]["length"], 4);
    let path = j["result"].as_array().unwrap();
    assert_eq!(
        path.first().unwrap(),
        &serde_json::json!(["100", "010", "001"])
    );
    assert_eq!(
        path.last().unwrap(),
        &serde_json::json!(["011", "101", "111"])
    );
}

#[test]
fn export_graph_of_the_coxeter_graph() {
    let f = Files::new();
    let out = f.dir.path().join("g.txt");
    let o = run(&["export-graph", "--n", "3", "--out", s(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("gamma-graph n=3 vertices=28 edges=42")
    );
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 42);
    let o = run(&["export-graph", "--n", "2"]);
    assert!(stdout(&o).starts_with("gamma-graph n=2 vertices=4 edges=3\n"));
}

#[test]
fn code_family_and_witness() {
    let f = Files::new();
    let c1 = f.write("c1.txt", "1100\n1111\n");
    let c3 = f.write("c3.txt", "1001\n0110\n");
    let j = json(&run(&[
        "codes-family",
        "--code",
        s(&c1),
        "--format",
        "json",
    ]));
    assert_eq!(j["details"]["size"], 2);
    assert_eq!(j["details"]["inverse_closed"], true);
    assert_eq!(
        j["result"],
        serde_json::json!([["011", "101", "111"], ["101", "011", "111"]])
    );

    let member = f.write("m.txt", F1);
    let j2 = json(&run(&[
        "codes-family",
        "--a",
        s(&member),
        "--format",
        "json",
    ]));
    assert_eq!(j2["result"], j["result"]);

    let o = run(&["codes-witness", "--from", s(&c1), "--to", s(&c3)]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows
        .iter()
        .all(|r| r.chars().filter(|&c| c == '1').count() == 1));

    let not_self_dual = f.write("j.txt", "1111\n");
    assert_eq!(
        run(&["codes-family", "--code", s(&not_self_dual)])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_reports_counts() {
    let o = run(&["verify", "--suite", "gamma", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j = json(&o);
    assert_eq!(j["result"]["passed"], true);
    assert_eq!(j["details"][0]["counts"][0]["checks"], 378);
    let human = stdout(&run(&["verify", "--suite", "diameter"]));
    assert!(human.starts_with("PASS diameter"));
}
