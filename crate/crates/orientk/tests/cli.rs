//! End-to-end tests of the `orientk` binary: exit-code contract across all
//! subcommands and shape of the JSON run report.

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

struct TempDir(PathBuf);

impl TempDir {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir()
            .join(format!("orientk-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Self(dir)
    }

    fn file(&self, name: &str) -> PathBuf {
        self.0.join(name)
    }

    fn write(&self, name: &str, contents: &str) -> PathBuf {
        let p = self.file(name);
        std::fs::write(&p, contents).unwrap();
        p
    }
}

impl Drop for TempDir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_orientk"))
        .args(args)
        .env("ORIENTK_THREADS", "2")
        .output()
        .expect("binary runs");
    (out.status.code().expect("no signal"), String::from_utf8(out.stdout).unwrap())
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gk_pipeline_exit_codes() {
    let dir = TempDir::new("gk");
    let graph = dir.file("g4.graph");
    let (code, _) = run(&["gen", "gk", "--k", "4", "-o", p(&graph)]);
    assert_eq!(code, 0);

    assert_eq!(run(&["check", "euler", p(&graph)]).0, 0);
    assert_eq!(run(&["check", "weak", "--k", "4", p(&graph)]).0, 0);
    // weakly 10-connected fails: a mixed-cut witness and exit 1
    let (code, out) = run(&["check", "weak", "--k", "5", p(&graph)]);
    assert_eq!(code, 1);
    assert!(out.contains("refuted"), "refutation should be reported: {out}");
}

#[test]
fn h3_search_and_verify() {
    let dir = TempDir::new("h3");
    let graph = dir.file("h3.graph");
    assert_eq!(run(&["gen", "h3", "-o", p(&graph)]).0, 0);

    // refuted: exit 1
    assert_eq!(run(&["search", "--k", "3", p(&graph)]).0, 1);
    // budget exhausted: exit 3
    assert_eq!(run(&["search", "--k", "3", "--budget", "1", p(&graph)]).0, 3);
    // confirmed counterexample: exit 0
    assert_eq!(run(&["verify", "counterexample", "--k", "3", p(&graph)]).0, 0);

    let g3 = dir.file("g3.graph");
    assert_eq!(run(&["gen", "g3", "-o", p(&g3)]).0, 0);
    assert_eq!(run(&["verify", "counterexample", "--k", "3", p(&g3)]).0, 0);
}

#[test]
fn search_found_round_trips_through_kconn() {
    let dir = TempDir::new("tri");
    let graph =
        dir.write("tri.graph", "graph undirected\nv a\nv b\nv c\ne a b\ne b c\ne c a\n");
    let (code, out) =
        run(&["--json", "search", "--k", "1", p(&graph)]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(report["outcome"]["status"], "found");
    let orientation = dir.write(
        "tri.orient",
        report["outcome"]["orientation"].as_str().unwrap(),
    );
    assert_eq!(run(&["check", "kconn", "--k", "1", p(&graph), p(&orientation)]).0, 0);

    // a triangle is not a counterexample: verify exits 1 on Found
    assert_eq!(run(&["verify", "counterexample", "--k", "1", p(&graph)]).0, 1);
}

#[test]
fn bridge_exit_codes() {
    let dir = TempDir::new("bridge");
    let graph = dir.write("bridge.graph", "graph undirected\nv a\nv b\ne a b\n");
    let orientation = dir.write("bridge.orient", "0 +\n");
    assert_eq!(run(&["check", "euler", p(&graph)]).0, 1);
    assert_eq!(run(&["check", "weak", "--k", "1", p(&graph)]).0, 1);
    assert_eq!(run(&["search", "--k", "1", p(&graph)]).0, 1);
    assert_eq!(run(&["check", "kconn", "--k", "1", p(&graph), p(&orientation)]).0, 1);
}

#[test]
fn encode_decode_and_reduction() {
    let dir = TempDir::new("nae");
    let nae = dir.write("sat.nae", "p nae\nclause x y !z\n");
    let graph = dir.file("d.graph");
    let map = dir.file("d.map.json");
    let (code, out) = run(&[
        "--json", "encode", "--k", "3", p(&nae), "-o", p(&graph), "--map", p(&map),
    ]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    let arcs = report["outcome"]["arcs"].as_u64().unwrap() as usize;

    // identity reorientation = all-true assignment: consistent, exit 0
    let identity: String = (0..arcs).map(|i| format!("{i} +\n")).collect();
    let o_ok = dir.write("id.orient", &identity);
    let (code, out) = run(&["decode", p(&map), p(&o_ok)]);
    assert_eq!(code, 0);
    assert!(out.contains("x = true"), "decode output: {out}");

    // flipping a single arc of an antiparallel pair is inconsistent: exit 1
    let map_json: Value =
        serde_json::from_str(&std::fs::read_to_string(&map).unwrap()).unwrap();
    let paired = map_json["pairs"][0][0].as_u64().unwrap() as usize;
    let mut broken = String::new();
    for i in 0..arcs {
        broken.push_str(&format!("{i} {}\n", if i == paired { "-" } else { "+" }));
    }
    let o_bad = dir.write("bad.orient", &broken);
    assert_eq!(run(&["decode", p(&map), p(&o_bad)]).0, 1);

    assert_eq!(run(&["verify", "reduction", "--k", "3", p(&nae)]).0, 0);
    // the equivalence also holds on an unsatisfiable instance: neither side
    // has a satisfying assignment / k-connected reorientation
    let unsat = dir.write("unsat.nae", "p nae\nclause x x\n");
    assert_eq!(run(&["verify", "reduction", "--k", "3", p(&unsat)]).0, 0);
}

#[test]
fn eulerized_encode_is_eulerian() {
    let dir = TempDir::new("euler");
    let nae = dir.write("sat.nae", "p nae\nclause x y !z\n");
    let graph = dir.file("d.graph");
    let map = dir.file("d.map.json");
    let plain = dir.file("plain.graph");
    let plain_map = dir.file("plain.map.json");
    assert_eq!(
        run(&[
            "encode", "--k", "3", p(&nae), "-o", p(&graph), "--map", p(&map),
            "--eulerize",
        ])
        .0,
        0
    );
    assert_eq!(
        run(&["encode", "--k", "3", p(&nae), "-o", p(&plain), "--map", p(&plain_map)]).0,
        0
    );
    assert_eq!(run(&["check", "euler", p(&graph)]).0, 0);
    assert_eq!(run(&["check", "euler", p(&plain)]).0, 1);
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new("usage");
    assert_eq!(run(&["search", "--k", "1", "/nonexistent/file.graph"]).0, 2);
    let bad = dir.write("bad.graph", "not a graph file\n");
    assert_eq!(run(&["check", "euler", p(&bad)]).0, 2);
    let bad_nae = dir.write("bad.nae", "clause x y\n");
    assert_eq!(run(&["verify", "reduction", "--k", "3", p(&bad_nae)]).0, 2);
    // clap usage error
    let out = Command::new(env!("CARGO_BIN_EXE_orientk"))
        .args(["frobnicate"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_report_shape() {
    let dir = TempDir::new("json");
    let graph =
        dir.write("tri.graph", "graph undirected\nv a\nv b\nv c\ne a b\ne b c\ne c a\n");
    let (code, out) = run(&["--json", "check", "weak", "--k", "1", p(&graph)]);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&out).unwrap();
    assert!(report["command"].as_str().unwrap().contains("check"));
    assert_eq!(report["exit_code"].as_u64(), Some(0));
    assert!(report["elapsed_ms"].is_number());
    let digest = report["inputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
    assert!(digest.chars().all(|c| c.is_ascii_hexdigit()));
    assert_eq!(report["outcome"]["holds"], Value::Bool(true));

    // the report is stable JSON: value round-trip is lossless
    let reparsed: Value =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(reparsed, report);
}
