use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sepgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn parse_check_reads_edge_lists() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "c5.txt",
        "# five-cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n",
    );
    let doc = json(&["parse-check", "--in", &file]);
    assert_eq!(doc["command"], "parse-check");
    assert_eq!(doc["payload"]["vertex_count"], 5);
    assert_eq!(doc["payload"]["edge_count"], 5);
}

#[test]
fn girth_of_builtins() {
    assert_eq!(
        json(&["girth", "--in", "builtin:petersen"])["payload"]["girth"],
        5
    );
    assert_eq!(
        json(&["girth", "--in", "builtin:heawood"])["payload"]["girth"],
        6
    );
    assert_eq!(
        stdout(&["girth", "--in", "builtin:petersen", "--format", "csv"]).trim(),
        "girth,5"
    );
}

#[test]
fn cheeger_exact_and_spectral() {
    let exact = json(&[
        "cheeger",
        "--in",
        "builtin:petersen",
        "--method",
        "exhaustive",
    ]);
    assert_eq!(exact["payload"]["value"], "4/5");
    let spectral = json(&[
        "cheeger",
        "--in",
        "builtin:petersen",
        "--method",
        "spectral",
    ]);
    assert!(spectral["payload"]["value"].is_string());
}

#[test]
fn cut_reports_witness() {
    let doc = json(&["cut", "--in", "builtin:complete-4"]);
    assert_eq!(doc["payload"]["value"], 2);
    assert_eq!(doc["payload"]["witness"].as_array().unwrap().len(), 2);
    assert_eq!(
        json(&["cut", "--in", "builtin:petersen"])["payload"]["value"],
        4
    );
}

#[test]
fn cut_brackets_large_graphs() {
    let doc = json(&["cut", "--in", "builtin:grid-30x30", "--budget", "1"]);
    let lower = doc["payload"]["lower"].as_u64().unwrap();
    let upper = doc["payload"]["upper"].as_u64().unwrap();
    assert!(lower <= upper);
}

#[test]
fn extract_expander_on_petersen_and_forest() {
    let doc = json(&["extract-expander", "--in", "builtin:petersen"]);
    assert!(doc["payload"].is_object());
    assert_eq!(code(&["extract-expander", "--in", "builtin:path-5"]), 11);
}

#[test]
fn sep_profile_csv() {
    let csv = stdout(&[
        "sep",
        "--in",
        "builtin:petersen",
        "--n-list",
        "1..4",
        "--format",
        "csv",
    ]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,value,kind,witness_size");
    assert_eq!(lines[1], "1,1,exact,1");
    assert_eq!(lines.len(), 5);
}

#[test]
fn profile_compare_from_saved_documents() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    let g = dir.path().join("g.json");
    let (f, g) = (f.to_str().unwrap(), g.to_str().unwrap());
    stdout(&[
        "sep",
        "--in",
        "builtin:path-12",
        "--n-list",
        "1..8",
        "--out",
        f,
    ]);
    stdout(&[
        "sep",
        "--in",
        "builtin:petersen",
        "--n-list",
        "1..8",
        "--out",
        g,
    ]);
    let doc = json(&["profile-compare", "--f", f, "--g", g]);
    assert_eq!(doc["payload"]["comparison"]["relation"], "dominated");
    let csv = stdout(&["profile-compare", "--f", f, "--g", g, "--format", "csv"]);
    assert!(csv.starts_with("n,f,f_kind,g,g_kind,required"));
}

#[test]
fn family_build_drops_out_of_range_indices() {
    let doc = json(&["family", "build", "--bits", "1011", "--depth", "8"]);
    let text = doc["payload"].to_string();
    assert!(text.contains("116"), "{text}");
}

#[test]
fn family_distinguish_reports_gap() {
    let doc = json(&[
        "family",
        "distinguish",
        "--m-bits",
        "11",
        "--n-bits",
        "10",
        "--c",
        "2",
        "--depth",
        "2",
    ]);
    assert_eq!(doc["payload"]["verdict"], "gap");
    assert_eq!(doc["payload"]["lower_at_c"], 4);
    assert_eq!(doc["payload"]["upper_at_c"], 2);
}

#[test]
fn asdim_cut_trace_csv() {
    let csv = stdout(&["asdim-cut", "--grid", "2,12", "--r", "2", "--format", "csv"]);
    assert!(csv.starts_with("iteration,n_cur,class,u_size,level,shell_size,largest_after"));
    assert!(csv.lines().count() >= 2);
}

#[test]
fn sep_upper_grid_curve() {
    let doc = json(&[
        "sep-upper",
        "--model",
        "grid:2",
        "--m",
        "4",
        "--n-list",
        "4096",
    ]);
    assert!(doc["payload"].to_string().contains("6437"));
}

#[test]
fn output_file_matches_stdout_payload() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("girth.json");
    stdout(&[
        "girth",
        "--in",
        "builtin:heawood",
        "--out",
        out.to_str().unwrap(),
    ]);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(
        doc["payload"],
        json(&["girth", "--in", "builtin:heawood"])["payload"]
    );
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "0 1\n1 x\n");
    assert_eq!(code(&["girth", "--in", &bad]), 10);
    assert_eq!(code(&["extract-expander", "--in", "builtin:star-6"]), 11);
    assert_eq!(
        code(&[
            "cheeger",
            "--in",
            "builtin:grid-6x6",
            "--method",
            "exhaustive",
            "--budget",
            "10"
        ]),
        12
    );
    assert_eq!(code(&["asdim-cut", "--grid", "2,4", "--r", "8"]), 13);
    assert_eq!(code(&["girth", "--in", "/nonexistent/graph.txt"]), 1);
    assert_eq!(code(&["girth"]), 2);
    assert_eq!(code(&["no-such-command"]), 2);
}
