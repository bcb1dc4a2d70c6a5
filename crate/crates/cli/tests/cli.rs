use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tesscover"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

const K3: &str = "3 3\n0 1\n1 2\n0 2\n";
const C5: &str = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
const DIAMOND: &str = "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n";

#[test]
fn solve_reports_t_number() {
    let d = tempfile::tempdir().unwrap();
    let k3 = write(d.path(), "k3.txt", K3);
    let out = run(&["solve", "--input", &k3]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["t_number"], 1);
    assert_eq!(v["optimal"], true);
}

#[test]
fn decision_exit_codes() {
    let d = tempfile::tempdir().unwrap();
    let c5 = write(d.path(), "c5.txt", C5);
    let out = run(&["2tess", "--input", &c5]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["decision"], false);
    assert_eq!(run(&["solve", "--t", "2", "--input", &c5]).status.code(), Some(1));
    let yes = run(&["solve", "--t", "3", "--input", &c5]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(json(&yes)["cover"].as_array().unwrap().len(), 3);
    let dia = write(d.path(), "d.txt", DIAMOND);
    let out = run(&["2tess", "--input", &dia]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cover"].to_string(), "[[[0,1,2]],[[0,1,3]]]");
}

#[test]
fn check_round_trips_solver_cover() {
    let d = tempfile::tempdir().unwrap();
    let c5 = write(d.path(), "c5.txt", C5);
    let solved = json(&run(&["solve", "--input", &c5]));
    let doc = serde_json::json!({ "schema": 1, "n": 5, "tessellations": solved["cover"] });
    let cover = write(d.path(), "cover.json", &doc.to_string());
    let out = run(&["check", "--input", &c5, &cover]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["valid"], true);

    let bad = write(d.path(), "bad.json", r#"{"n":3,"tessellations":[[[0,1]]]}"#);
    let k3 = write(d.path(), "k3.txt", K3);
    let out = run(&["check", "--input", &k3, &bad]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["kind"], "uncovered");
}

#[test]
fn parse_errors_exit_two_with_line() {
    let d = tempfile::tempdir().unwrap();
    let dup = write(d.path(), "dup.txt", "2 2\n0 1\n0 1\n");
    let out = run(&["solve", "--input", &dup]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(run(&["solve", "--input", "/nonexistent/g.txt"]).status.code(), Some(2));
}

#[test]
fn bounds_and_color() {
    let d = tempfile::tempdir().unwrap();
    let c5 = write(d.path(), "c5.txt", C5);
    let b = json(&run(&["bounds", "--exact", "--input", &c5]));
    assert_eq!((b["lower"].as_u64(), b["upper"].as_u64()), (Some(3), Some(3)));
    let c = json(&run(&["color", "--vertices", "--exact", "--input", &c5]));
    assert_eq!(c["count"], 3);
    assert_eq!(c["exact"], true);
    assert_eq!(run(&["color", "--input", &c5]).status.code(), Some(2));
}

#[test]
fn kgraph_writes_sidecar() {
    let d = tempfile::tempdir().unwrap();
    let dia = write(d.path(), "d.txt", DIAMOND);
    let out = d.path().join("kg.txt");
    let status = run(&["kgraph", "--input", &dia, "--output", out.to_str().unwrap()]);
    assert_eq!(status.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap(), "2 1\n0 1\n");
    let side: Value = serde_json::from_str(&fs::read_to_string(d.path().join("kg.txt.json")).unwrap()).unwrap();
    assert_eq!(side["cliques"].to_string(), "[[0,1,2],[0,1,3]]");
}

#[test]
fn gen_outputs_and_annotations() {
    let d = tempfile::tempdir().unwrap();
    let k3 = write(d.path(), "k3.txt", K3);
    let out = d.path().join("h.txt");
    let o = out.to_str().unwrap();
    assert_eq!(run(&["gen", "c5", "--input", &k3, "--output", o]).status.code(), Some(0));
    let note: Value = serde_json::from_str(&fs::read_to_string(d.path().join("h.txt.json")).unwrap()).unwrap();
    assert_eq!(note["n"], 19);
    assert_eq!(note["roles"].as_array().unwrap().len(), 19);
    assert_eq!(note["partition"]["cliques"].to_string(), "[[3,4,5]]");

    let nae = write(d.path(), "i.cnf", "p nae3 3 1\n1 2 -3 0\n");
    let g = run(&["gen", "c8", "--input", &nae]);
    assert_eq!(String::from_utf8_lossy(&g.stdout).lines().next(), Some("7 9"));
    let g = run(&["gen", "c1", "--input", &k3]);
    assert_eq!(String::from_utf8_lossy(&g.stdout).lines().next(), Some("6 6"));
    assert_eq!(run(&["gen", "c5", "--input", &write(d.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n")]).status.code(), Some(2));
}

#[test]
fn corpus_is_deterministic() {
    let d = tempfile::tempdir().unwrap();
    let a = d.path().join("a");
    let b = d.path().join("b");
    for dir in [&a, &b] {
        let out = run(&["corpus", "--seed", "0", "--max-n", "4", "--output", dir.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let mut names: Vec<_> = fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.iter().filter(|n| n.to_string_lossy().starts_with("connected-n4")).count() == 6);
    for n in names {
        assert_eq!(fs::read(a.join(&n)).unwrap(), fs::read(b.join(&n)).unwrap());
    }
}
