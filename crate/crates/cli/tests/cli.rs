use std::path::{Path, PathBuf};
use std::process::Command;

use chibound_cli::{run, EXIT_CONTRACT, EXIT_OK, EXIT_USAGE};
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn chibound(args: &[&str]) -> Run {
    let mut argv = vec!["chibound"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn dimacs(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("p edge {n} {}\n", edges.len());
    for (u, v) in edges {
        s += &format!("e {u} {v}\n");
    }
    s
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn c5(dir: &TempDir) -> PathBuf {
    write(dir, "c5.col", &dimacs(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]))
}

fn complete_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            e.push((a, b));
        }
    }
    e
}

#[test]
fn color_c5_meets_the_bound() {
    let dir = TempDir::new().unwrap();
    let r = chibound(&["color", p(&c5(&dir))]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["colors_used"], 3);
    assert_eq!(v["bound"], 3);
    assert_eq!(v["passes"], true);
    assert_eq!(v["input"]["chi"], 3);
    for key in ["branch_trace", "certificates", "seed", "config", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn color_output_verifies() {
    let dir = TempDir::new().unwrap();
    let g = c5(&dir);
    let out = dir.path().join("c5.txt");
    assert_eq!(chibound(&["color", p(&g), "--coloring-out", p(&out)]).code, EXIT_OK);
    let r = chibound(&["verify", p(&g), p(&out)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.starts_with("valid"));
}

#[test]
fn verify_accepts_json_colorings() {
    let dir = TempDir::new().unwrap();
    let g = c5(&dir);
    let c = write(&dir, "c.json", r#"{"palette":3,"assignment":{"1":1,"2":2,"3":1,"4":2,"5":3}}"#);
    assert_eq!(chibound(&["verify", p(&g), p(&c)]).code, EXIT_OK);
}

#[test]
fn verify_rejects_conflicts_and_gaps() {
    let dir = TempDir::new().unwrap();
    let g = c5(&dir);
    let clash = write(&dir, "clash.txt", "1 1\n2 1\n3 2\n4 1\n5 2\n");
    let r = chibound(&["verify", p(&g), p(&clash)]);
    assert_eq!(r.code, EXIT_CONTRACT);
    assert!(r.err.contains("(1, 2)"));
    let partial = write(&dir, "partial.txt", "1 1\n2 2\n");
    assert_eq!(chibound(&["verify", p(&g), p(&partial)]).code, EXIT_CONTRACT);
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(chibound(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(chibound(&["color", "--no-such-flag", p(&c5(&dir))]).code, EXIT_USAGE);
    assert_eq!(chibound(&["color", "/nonexistent/graph.col"]).code, EXIT_USAGE);
    let junk = write(&dir, "junk.col", "p edge 2 1\ne 1 7\n");
    assert_eq!(chibound(&["color", p(&junk)]).code, EXIT_USAGE);
    assert_eq!(chibound(&["--csv", "hit", p(&c5(&dir))]).code, EXIT_USAGE);
    assert_eq!(chibound(&["color", "--epsilon", "3/2", p(&c5(&dir))]).code, EXIT_USAGE);
}

#[test]
fn help_exits_zero() {
    let r = chibound(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("sparse-sim"));
}

#[test]
fn gen_gnp_is_deterministic() {
    let a = chibound(&["gen", "gnp", "--n", "10", "--p", "0.5", "--seed", "7"]);
    let b = chibound(&["gen", "gnp", "--n", "10", "--p", "0.5", "--seed", "7"]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.out, b.out);
    assert!(a.out.contains("p edge 10 "));
}

#[test]
fn gen_regularize_emits_a_regular_graph() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p3.col", &dimacs(3, &[(1, 2), (2, 3)]));
    let r = chibound(&["gen", "regularize", p(&path)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let g = chibound::graph::parse_dimacs(&r.out).unwrap();
    assert!(g.is_regular());
    assert_eq!(g.max_degree(), 2);
}

#[test]
fn gen_dense_reports_infeasible_parameters() {
    let r = chibound(&["gen", "dense", "--delta", "12", "--alpha", "1/160"]);
    assert_eq!(r.code, EXIT_USAGE);
    let r = chibound(&["gen", "dense", "--delta", "120", "--alpha", "1/160", "--seed", "2"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("c center "));
}

#[test]
fn hit_two_disjoint_k4() {
    let dir = TempDir::new().unwrap();
    let mut edges = complete_edges(&[1, 2, 3, 4]);
    edges.extend(complete_edges(&[5, 6, 7, 8]));
    let path = write(&dir, "2k4.col", &dimacs(8, &edges));
    let r = chibound(&["--json", "hit", p(&path)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["status"], "found");
    let set: Vec<u64> = v["set"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(set.len(), 2);
    assert_eq!(set.iter().filter(|&&x| x <= 4).count(), 1);
}

#[test]
fn hit_is_inapplicable_on_c5() {
    let dir = TempDir::new().unwrap();
    let r = chibound(&["hit", p(&c5(&dir))]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("inapplicable"));
}

#[test]
fn analyze_two_k4_sharing_a_triangle() {
    let dir = TempDir::new().unwrap();
    let mut edges = complete_edges(&[1, 2, 3, 4]);
    edges.extend([(1, 5), (2, 5), (3, 5)]);
    let path = write(&dir, "k4k4.col", &dimacs(5, &edges));
    let r = chibound(&["--json", "analyze", p(&path)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["omega"], 4);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
    assert_eq!(v["components"][0]["intersection"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["components"][0]["union"].as_array().unwrap().len(), 5);
    assert_eq!(v["pass"], true);
}

#[test]
fn isr_on_c4() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "c4.col", &dimacs(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]));
    // Every cross pair of {1,3} and {2,4} is an edge.
    let r = chibound(&["--json", "isr", p(&path), "--classes", "1,3;2,4"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["status"], "not_found");

    let r = chibound(&["--json", "isr", p(&path), "--classes", "1,2;3,4", "--mode", "clique"]);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["status"], "found");
    assert_eq!(v["set"], serde_json::json!([1, 3]));

    let r = chibound(&["--json", "isr", p(&path), "--classes", "1,2;3,4", "--mode", "clique", "--required", "4"]);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["set"], serde_json::json!([2, 4]));

    // Classes must partition the vertex set.
    assert_eq!(chibound(&["isr", p(&path), "--classes", "1,2;3"]).code, EXIT_USAGE);
    // {1,2} is not stable.
    assert_eq!(chibound(&["isr", p(&path), "--classes", "1,2;3,4"]).code, EXIT_USAGE);
}

#[test]
fn sparse_sim_csv_has_seed_on_every_row() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "c4.col", &dimacs(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]));
    let args = ["--csv", "sparse-sim", p(&path), "--trials", "500", "--B", "1", "--C", "2", "--seed", "42"];
    let r = chibound(&args);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.starts_with("42,500,")));
    assert_eq!(r.out, chibound(&args).out);
}

#[test]
fn sparse_sim_regularizes_irregular_input() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "p3.col", &dimacs(3, &[(1, 2), (2, 3)]));
    let r = chibound(&["--json", "sparse-sim", p(&path), "--trials", "100", "--B", "0", "--seed", "1"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["vertices"][0]["vertex"], 1);
    assert!(v["doublings"].as_u64().unwrap() >= 1);
}

#[test]
fn seed_comes_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let g = c5(&dir);
    let out = Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(["color", p(&g)])
        .env("CHIBOUND_SEED", "99")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 99);

    let out = Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(["color", p(&g), "--seed", "5"])
        .env("CHIBOUND_SEED", "99")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 5);

    let out = Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(["color", p(&g)])
        .env("CHIBOUND_SEED", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn batch_color_emits_one_csv_row_per_file() {
    let dir = TempDir::new().unwrap();
    let a = c5(&dir);
    let b = write(&dir, "k3.col", &dimacs(3, &complete_edges(&[1, 2, 3])));
    let r = chibound(&["--csv", "color", p(&a), p(&b)]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].contains(",3,3,3,true,"));
}
