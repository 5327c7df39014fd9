use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use lineopt_core::graph::format::from_graph6;
use lineopt_core::graph::{canonical_form, Graph};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lineopt")).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lineopt"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(schema_name: &str, payload: &Value) {
    let validator = jsonschema::validator_for(&schema(schema_name)).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(payload).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}\n{payload}");
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lineopt-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn iso(a: &Graph, b: &Graph) -> bool {
    canonical_form(a) == canonical_form(b)
}

#[test]
fn linegraph_of_star_is_triangle() {
    let v = json(&run(&["linegraph", "--g6", "Cs"]));
    assert_valid("linegraph.schema.json", &v);
    assert_eq!(v["line_graph"]["vertex_count"], 3);
    assert_eq!(v["line_graph"]["edges"].as_array().unwrap().len(), 3);
    assert_eq!(v["edge_to_vertex"].as_array().unwrap().len(), 3);
}

#[test]
fn linegraph_of_path_from_edge_file() {
    let path = temp_file("p4.txt", "n 4\n0 1\n1 2\n2 3\n");
    let v = json(&run(&["linegraph", "--edges", path.to_str().unwrap()]));
    let lg = from_graph6(v["line_graph"]["graph6"].as_str().unwrap()).unwrap();
    assert!(iso(&lg, &Graph::path(3)));
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(run(&["linegraph", "--g6", "C~~~~~"]).status.code(), Some(2));
    assert_eq!(run(&["linegraph"]).status.code(), Some(2));
    assert_eq!(run(&["mult", "--g6", "Bw"]).status.code(), Some(2));
}

#[test]
fn mult_payloads() {
    let v = json(&run(&["mult", "--g6", "Cr", "--lambda", "1/2"]));
    assert_valid("mult.schema.json", &v);
    assert_eq!(v["multiplicity"], 2);
    assert_eq!(v["minimal_polynomial"], "x");
    assert_eq!(v["bound"], Value::Null);

    // K_3: χ = (x - 2)(x + 1)^2
    let v = json(&run(&["mult", "--g6", "Bw", "--lambda", "2/3"]));
    assert_eq!((v["multiplicity"].as_u64(), v["graph_multiplicity"].as_u64()), (Some(2), Some(2)));

    let out = run(&["mult", "--g6", "Bg", "--lambda", "2/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("canonical"));
}

#[test]
fn mult_table_mode() {
    let out = run(&["mult", "--g6", "Cs", "--lambda", "1/2", "--table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bound 2c+p-1        2"));
}

#[test]
fn check_certificates() {
    // C_4 with a tail of two edges
    let path = temp_file("c4tail.txt", "n 6\n0 1\n1 2\n2 3\n3 0\n0 4\n4 5\n");
    let v = json(&run(&["check", "--edges", path.to_str().unwrap(), "--lambda", "1/2"]));
    assert_valid("check.schema.json", &v);
    assert_eq!(v["case_tag"], "AttachedCycles");
    assert_eq!(v["parameters"]["cycle_orders"], serde_json::json!([4]));

    let v = json(&run(&["check", "--g6", "Cs", "--lambda", "1/3"]));
    assert_valid("check.schema.json", &v);
    assert_eq!(v["case_tag"], "NotOptimal");
    assert_eq!(v["parameters"]["reason"], "lambda_form");

    let out = run(&["check", "--g6", "Cr", "--lambda", "1/2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("IsACycle"));
}

#[test]
fn gen_two_cycles() {
    let v = json(&run(&["gen", "--case", "TwoCyclesEdge", "--lambda", "1/2", "--cycle-orders", "4,4"]));
    assert_valid("gen.schema.json", &v);
    let g = from_graph6(v["graph6"].as_str().unwrap()).unwrap();
    let expected =
        Graph::new(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4)]).unwrap();
    assert!(iso(&g, &expected));
    assert_eq!(run(&["gen", "--case", "Nope", "--lambda", "1/2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--case", "ManyCycles", "--lambda", "1/3"]).status.code(), Some(2));
}

#[test]
fn gen_then_check_round_trip() {
    let fixture = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/family_specs.json");
    let specs: Vec<Value> = serde_json::from_str(&std::fs::read_to_string(fixture).unwrap()).unwrap();
    for (i, spec) in specs.iter().enumerate() {
        let path = temp_file(&format!("spec{i}.json"), &spec.to_string());
        let out = run(&["gen", "--spec", path.to_str().unwrap(), "--table"]);
        assert_eq!(out.status.code(), Some(0), "{spec}: {}", String::from_utf8_lossy(&out.stderr));
        let g6 = String::from_utf8(out.stdout).unwrap();
        let lambda = format!("{}/{}", spec["lambda"]["a"], spec["lambda"]["b"]);
        let v = json(&run_stdin(&["check", "--stdin", "--lambda", &lambda], &g6));
        assert_eq!(v["case_tag"], spec["case"], "{spec}");
    }
}

#[test]
fn verify_small_corpus() {
    let out = run(&["verify", "--max-n", "6"]);
    let v = json(&out);
    assert_valid("verify.schema.json", &v);
    assert_eq!(v["graphs_checked"], 1 + 2 + 6 + 21 + 112 - 4);
    assert!(!String::from_utf8_lossy(&out.stdout).contains('.'), "report JSON carries no floats");
}

#[test]
fn verify_with_lemmas_and_oracles() {
    let v = json(&run(&["verify", "--max-n", "5", "--lemmas", "--oracles", "--samples", "30"]));
    assert_valid("verify.schema.json", &v);
    assert!(v["lemma_checks"]["path_law"].as_u64().unwrap() > 0);
    assert!(v["lemma_checks"]["oracle_agreement"].as_u64().unwrap() > 0);
}

#[test]
fn verify_fails_on_mutant() {
    let out = run(&["verify", "--max-n", "6", "--mutation", "path-residue"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid("verify.schema.json", &v);
    assert!(!v["equivalence_failures"].as_array().unwrap().is_empty());
}

#[test]
fn verify_reads_graph6_files() {
    // K_3 and C_4 are cycles and are dropped, leaving K_{1,3}
    let path = temp_file("corpus.g6", ">>graph6<<Cs\nBw\nCr\n");
    let out = run(&["verify", "--graph6-file", path.to_str().unwrap(), "--table"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("graphs checked        1"));
    assert_eq!(run(&["verify", "--max-n", "11"]).status.code(), Some(2));
}
