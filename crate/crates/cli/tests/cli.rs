use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::thread;

use serde_json::Value;
use tamerep::exactnum::Matrix;
use tamerep::io::{map_file_to_json, parse_rep, rep_to_json, to_canonical_string};
use tamerep::quiver::Quiver;
use tamerep::tame::{kron_preprojective, kron_regular, TubePoint};
use tamerep::{Rational, Rep, RepMap};
use tempfile::TempDir;

fn tamerep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tamerep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn ok(args: &[&str]) -> String {
    let o = tamerep(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&ok(args)).expect("json output")
}

fn built(dir: &Path, label: &str, name: &str) -> PathBuf {
    let path = dir.join(name);
    ok(&["build", label, "--out", path.to_str().unwrap()]);
    path
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, to_canonical_string(v)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_catalog_labels() {
    let p2 = json(&["build", "P(2)"]);
    assert_eq!(p2["dims"], serde_json::json!([2, 3]));
    assert_eq!(p2["field"], "Q");
    let tower = json(&["build", "Pruefer(x)", "--truncate", "3"]);
    assert_eq!(tower["stages"].as_array().unwrap().len(), 3);
    let q = json(&["build", "Q"]);
    assert_eq!(q["field"], "Qt");
    assert_eq!(q["dims"], serde_json::json!([1, 1]));
    let adic = json(&["build", "Adic(inf)", "--truncate", "2"]);
    assert_eq!(adic["kind"], "adic");
}

#[test]
fn build_rejects_bad_input() {
    assert_eq!(tamerep(&["build", "Pruefer(x)"]).status.code(), Some(2));
    assert_eq!(tamerep(&["build", "P(two)"]).status.code(), Some(2));
    assert_eq!(tamerep(&["build", "R(x^2-1; 1)"]).status.code(), Some(2));
    assert_eq!(tamerep(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn files_round_trip() {
    let dir = TempDir::new().unwrap();
    for label in ["P(1)", "R(x^2+1; 2)", "I(3)", "Q"] {
        let path = built(dir.path(), label, "x.json");
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = parse_rep(&text).unwrap();
        assert_eq!(to_canonical_string(&parsed.to_json()), text, "{label}");
    }
}

#[test]
fn hom_and_ext_dimensions() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let (p0, p1, i0) = (built(d, "P(0)", "p0.json"), built(d, "P(1)", "p1.json"), built(d, "I(0)", "i0.json"));
    let (r0, rinf) = (built(d, "R(x; 1)", "r0.json"), built(d, "R(inf; 1)", "rinf.json"));
    assert_eq!(ok(&["hom", s(&p0), s(&p1)]), "2\n");
    assert_eq!(ok(&["ext", s(&i0), s(&p0)]), "2\n");
    assert_eq!(ok(&["hom", s(&r0), s(&rinf)]), "0\n");
    let with_basis = json(&["hom", s(&p0), s(&p1), "--basis"]);
    assert_eq!(with_basis["basis"].as_array().unwrap().len(), 2);
    let ext_basis = json(&["ext", s(&i0), s(&p0), "--basis"]);
    assert_eq!(ext_basis["dim"], 2);
    let q = built(d, "Q", "q.json");
    assert_eq!(tamerep(&["hom", s(&q), s(&p0)]).status.code(), Some(2));
    assert_eq!(ok(&["hom", s(&q), s(&q)]), "1\n");
}

#[test]
fn decompose_a_shuffled_sum() {
    let dir = TempDir::new().unwrap();
    let q = Quiver::kronecker();
    let sum = Rep::direct_sum(&q, &[kron_regular(&TubePoint::linear(0), 1).unwrap(), kron_preprojective(1)])
        .unwrap()
        .sum;
    let g0 = Matrix::from_i64_rows(&[&[1, 2], &[1, 3]]);
    let g1 = Matrix::from_i64_rows(&[&[0, 1, 1], &[1, 0, 2], &[1, 1, 0]]);
    let (shuffled, _) = sum.conjugate(&[g0, g1]).unwrap();
    let path = write(dir.path(), "x.json", &rep_to_json(&shuffled));
    let report = json(&["decompose", s(&path)]);
    let summands = report["summands"].as_array().unwrap();
    assert_eq!(summands.len(), 2);
    let mut labels: Vec<&str> = summands.iter().map(|v| v["label"].as_str().unwrap()).collect();
    labels.sort();
    assert_eq!(labels, ["P(1)", "R(x; 1)"]);
    assert_eq!(report["verified"], true);
}

#[test]
fn tau_classify_and_torsion() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let i0 = built(d, "I(0)", "i0.json");
    // Coxeter transformation of (1, 0)
    assert_eq!(json(&["tau", s(&i0)])["dims"], serde_json::json!([3, 2]));
    let p1 = built(d, "P(1)", "p1.json");
    assert_eq!(json(&["tau", s(&p1), "--minus"])["dims"], serde_json::json!([3, 4]));
    assert_eq!(ok(&["classify", s(&p1)]), "preprojective\n");
    assert_eq!(ok(&["classify", s(&i0)]), "preinjective\n");
    let r = built(d, "R(x^2+1; 1)", "r.json");
    assert_eq!(ok(&["classify", s(&r)]), "regular\n");
    let split = json(&["torsion", s(&p1)]);
    assert_eq!(split["torsion"]["dims"], serde_json::json!([0, 0]));
    assert_eq!(split["torsionfree"]["dims"], serde_json::json!([1, 2]));
    assert_eq!(split["verified"], true);
}

#[test]
fn towers() {
    let t = json(&["prufer", "x^2+1", "--stages", "3"]);
    assert_eq!(t["verified"], true);
    assert_eq!(t["stages"][2]["dims"], serde_json::json!([6, 6]));
    let a = json(&["prufer", "inf", "--stages", "3", "--adic"]);
    assert_eq!(a["verified"], true);
    let c = json(&["coext-tower", "--point", "x", "--stages", "3"]);
    assert_eq!(c["passed"], true);
    assert_eq!(c["stages"][2]["dims"], serde_json::json!([3, 4]));
}

#[test]
fn generic_check() {
    let table = ok(&["generic-check"]);
    let rows: Vec<&str> = table.lines().skip(1).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.ends_with("\t0\t0")), "{table}");
    let deg2 = ok(&["generic-check", "--points", "x^2+x+1,inf", "--max-length", "2"]);
    assert_eq!(deg2.lines().count(), 5);
    assert_eq!(tamerep(&["generic-check", "--points", "x^2-1"]).status.code(), Some(2));
    assert_eq!(tamerep(&["generic-check", "--points", "x+"]).status.code(), Some(2));
}

#[test]
fn coherent_evaluation() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let (c0, c1) = (kron_preprojective(0), kron_preprojective(1));
    let phi = RepMap::new(
        c0.clone(),
        c1.clone(),
        vec![Matrix::zeros(1, 0), Matrix::from_i64_rows(&[&[1], &[0]])],
    )
    .unwrap();
    let phi_path = write(d, "phi.json", &map_file_to_json(&phi));
    let simple = built(d, "P(0)", "s.json");
    assert_eq!(ok(&["coherent-eval", s(&phi_path), s(&simple)]), "1\n");
    let r0 = built(d, "R(x; 1)", "r0.json");
    assert_eq!(ok(&["coherent-eval", s(&phi_path), s(&r0)]), "0\n");
    let id = RepMap::identity(&c1);
    let id_path = write(d, "id.json", &map_file_to_json(&id));
    assert_eq!(ok(&["coherent-eval", s(&id_path), s(&r0)]), "0\n");
    let q = built(d, "Q", "q.json");
    assert_eq!(ok(&["coherent-eval", s(&phi_path), s(&q)]), "0\n");
    let dual_target = tamerep::rep::dualize(&kron_regular(&TubePoint::linear(0), 1).unwrap());
    let y = write(d, "y.json", &rep_to_json(&dual_target));
    assert_eq!(ok(&["coherent-eval", s(&phi_path), s(&y), "--dual"]), "0\n");
    assert_eq!(tamerep(&["coherent-eval", s(&phi_path), s(&y)]).status.code(), Some(2));
}

#[test]
fn pp_lattices() {
    let dir = TempDir::new().unwrap();
    let x = built(dir.path(), "P(1)", "x.json");
    let dot = ok(&["pp-lattice", s(&x), "--gen", "P(0):1"]);
    assert!(dot.starts_with("digraph pp_lattice"));
    let v = json(&["pp-lattice", s(&x), "--gen", "P(0):1", "--gen", "P(1):1,0,0", "--format", "json"]);
    let dims: Vec<u64> = v["nodes"].as_array().unwrap().iter().map(|n| n["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims.first(), Some(&0));
    assert_eq!(dims.last(), Some(&3));
    assert!(dims.contains(&2));
    assert_eq!(v["modular"], true);
    let dual = json(&["pp-lattice", s(&x), "--gen", "P(0):1", "--check-duality"]);
    assert_eq!(dual["realized"], true);
    assert_eq!(tamerep(&["pp-lattice", s(&x), "--gen", "P(0):1,2"]).status.code(), Some(2));
}

#[test]
fn atlas_output() {
    let a = json(&["atlas"]);
    let layers = a["layers"].as_array().unwrap();
    let top = layers.iter().find(|l| l["name"] == "generic").unwrap();
    assert_eq!(top["labels"], serde_json::json!(["Q"]));
    assert_eq!(a["hom_direction"]["trisection"]["lower_triangular"], true);
    let dot = ok(&["atlas", "--format", "dot"]);
    let (p, r, i) = (dot.find("\"P-bar\" ->").unwrap(), dot.find("\"R-bar\" ->"), dot.find("\"I-bar\""));
    assert!(r.is_some_and(|r| p < r) && i.is_some());
    assert_eq!(ok(&["atlas", "--format", "dot"]), dot);
    assert_eq!(json(&["atlas"]), a);
    let small = json(&["atlas", "--max-degree", "1"]);
    assert!(small["entries"].as_array().unwrap().len() < a["entries"].as_array().unwrap().len());
}

#[test]
fn verify_suites() {
    let euler = json(&["verify", "--suite", "euler"]);
    assert_eq!(euler["passed"], true);
    let identity = &euler["suites"][0]["properties"][0];
    assert!(identity["checked"].as_u64().unwrap() >= 200);
    assert_eq!(json(&["verify", "--suite", "towers"])["passed"], true);
    assert_eq!(tamerep(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_all_is_reproducible() {
    let runs: Vec<Output> = thread::scope(|sc| {
        let hs: Vec<_> = (0..2)
            .map(|_| sc.spawn(|| tamerep(&["verify", "--suite", "all", "--seed", "7"])))
            .collect();
        hs.into_iter().map(|h| h.join().unwrap()).collect()
    });
    assert_eq!(runs[0].stdout, runs[1].stdout);
    assert_eq!(runs[0].status.code(), runs[1].status.code());
    let v: Value = serde_json::from_slice(&runs[0].stdout).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["suites"].as_array().unwrap().len(), 9);
    let code = if v["passed"] == true { 0 } else { 1 };
    assert_eq!(runs[0].status.code(), Some(code));
}

#[test]
fn rational_entries_survive() {
    let dir = TempDir::new().unwrap();
    let half = Rational::new(1, 2).unwrap();
    let a = Matrix::from_rows(vec![vec![half.clone()]], 1).unwrap();
    let b = Matrix::from_rows(vec![vec![Rational::from(3)]], 1).unwrap();
    let x = Rep::kronecker(a, b).unwrap();
    let path = write(dir.path(), "x.json", &rep_to_json(&x));
    let report = json(&["decompose", s(&path)]);
    assert_eq!(report["summands"][0]["label"], "R(x-6; 1)");
}
