use std::path::PathBuf;
use std::process::{Command, Output};

use aode::frontend::{AnalysisJson, ClassificationJson, SolutionJson};

const WORKED: &str = "x^2*(x-1)^2*y''^2 + 4*x^2*(x-1)*y'*y'' - 4*x*(x-1)*y*y'' - 2*(x-1)*y'' + 4*x^2*y'^2 - 8*x*y*y' + 4*y^2";
const KAMKE: &str = "y^2*y''^2 - 2*y*y'^2*y'' + y'^4 - y''^2 - y'^2";
const NOT_COMPLETE: &str = "x^3*y*D(y,3) + x*y*y'' - x*y'^2 + y*y'";
const CRITICAL: &str = "x*y*y'' - x*y'^2 + y*y'";

fn aode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/mini_corpus.txt")
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("aode-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn classify_json(eq: &str) -> ClassificationJson {
    let out = aode(&["classify", "--json", eq]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn solve_json(eq: &str, mode: &str) -> (i32, SolutionJson) {
    let out = aode(&["solve", "--mode", mode, "--json", eq]);
    (code(&out), serde_json::from_str(&stdout(&out)).unwrap())
}

#[test]
fn classify_examples() {
    let c = classify_json(CRITICAL);
    assert!(!c.noncritical);
    assert_eq!(c.indicial_infinity, "0");

    let c = classify_json(WORKED);
    assert!(c.noncritical && c.maximally_comparable);
    assert_eq!(c.completely, Some(true));
    assert_eq!(c.greatest_exponent, Some(vec![0, 0, 2]));
    let factors: Vec<_> = c
        .pole_candidates
        .iter()
        .map(|p| (p.factor.as_str(), p.order_bound))
        .collect();
    assert_eq!(factors, vec![("x", Some(0)), ("x - 1", Some(1))]);

    let c = classify_json("y' - y");
    assert!(c.noncritical && c.maximally_comparable);
    assert_eq!(c.greatest_exponent, Some(vec![0, 1]));
}

#[test]
fn classify_text_report() {
    let out = aode(&["classify", "x^2*y'' + x*y' - y"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("noncritical: yes"));
    assert!(text.contains("pole candidates:"));
}

#[test]
fn solve_examples() {
    let (c, s) = solve_json(KAMKE, "poly");
    assert_eq!(c, 0);
    assert!(s.complete);
    let mut exprs: Vec<_> = s.families.iter().map(|f| f.expr.as_str()).collect();
    exprs.sort();
    assert_eq!(exprs, vec!["-x + t1", "t1", "x + t1"]);
    assert!(s
        .families
        .iter()
        .all(|f| f.verified && f.parameters == ["t1"]));

    let (c, s) = solve_json(WORKED, "rational");
    assert_eq!(c, 0);
    let exprs: Vec<_> = s.families.iter().map(|f| f.expr.as_str()).collect();
    assert_eq!(exprs, vec!["t1*x", "1/(x - 1) + t1*x"]);
}

#[test]
fn incomplete_solve_exits_one() {
    let (c, s) = solve_json(NOT_COMPLETE, "rational");
    assert_eq!(c, 1);
    assert!(!s.complete);
    assert_eq!(s.diagnostics, vec!["ZeroIndicialAtFactor(x)"]);
    assert!(s.families.is_empty());

    let out = aode(&[
        "solve",
        "--mode",
        "rational",
        "--json",
        "--order-cap",
        "1",
        NOT_COMPLETE,
    ]);
    assert_eq!(code(&out), 1);
    let s: SolutionJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(s.diagnostics.contains(&"OrderCapApplied(1)".to_string()));
    assert!(s.families.iter().any(|f| f.expr == "t1*x"));
    assert!(s.families.iter().all(|f| f.verified));

    let (c, s) = solve_json(CRITICAL, "poly");
    assert_eq!(c, 1);
    assert!(s.diagnostics.contains(&"Critical".to_string()));
}

#[test]
fn parse_errors_exit_two() {
    for bad in ["y' +* y", "y^(3)", "x", "y'' + z", "y/(y - 1)", ""] {
        let out = aode(&["classify", bad]);
        assert_eq!(code(&out), 2, "{bad}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error:"),
            "{bad}"
        );
    }
    let out = aode(&["solve", "y' +\n  2 y"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&aode(&["solve", "--mode", "exotic", "y'"])), 2);
    assert_eq!(
        code(&aode(&["analyze", "y'", "--point", "1", "--infinity"])),
        2
    );
    assert_eq!(code(&aode(&["analyze", "y'", "--factor", "x^2 - 1"])), 2);
    assert_eq!(code(&aode(&["frobnicate"])), 2);
}

#[test]
fn caps_exit_three() {
    let out = aode(&["solve", "x*y' - 60*y"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    assert_eq!(code(&aode(&["solve", "x*y' - 40*y"])), 0);
}

#[test]
fn analyze_places() {
    let out = aode(&["analyze", "--json", "--point", "1", WORKED]);
    assert_eq!(code(&out), 0);
    let a: AnalysisJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(a.point, "x - 1");
    assert_eq!(a.indicial, "t^4 - 2*t^3 + t^2");
    assert_eq!(a.b.as_deref(), Some("-1"));
    assert_eq!(a.order_bound, Some(1));

    let out = aode(&["analyze", "--json", "--infinity", KAMKE]);
    let a: AnalysisJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        (a.m, a.indicial.as_str(), a.b.as_deref(), a.order_bound),
        (-4, "t^2", Some("1"), Some(1))
    );
    assert_eq!(a.m_set, vec![vec![2, 0, 2], vec![1, 2, 1], vec![0, 4, 0]]);

    let out = aode(&["analyze", "--json", "--point", "-1/2", "y' - y"]);
    let a: AnalysisJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(a.point, "x + 1/2");

    let out = aode(&["analyze", "--factor", "x^2 + 1", "(x^2 + 1)*y' + 2*x*y"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("order bound: 1"));

    let out = aode(&["analyze", "--json", "--point", "0", NOT_COMPLETE]);
    let a: AnalysisJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((a.indicial.as_str(), a.order_bound), ("0", None));
}

#[test]
fn stats_mini_corpus() {
    let path = corpus();
    let out = aode(&["stats", "--json", "--corpus", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let entries = v["entries"].as_u64().unwrap();
    assert!(entries >= 25);
    assert_eq!(v["classified"].as_u64(), Some(entries));
    assert_eq!(v["noncritical"].as_u64(), Some(entries - 1));
    assert_eq!(v["mismatches"].as_array().unwrap().len(), 0);
    assert_eq!(v["parse_failures"].as_array().unwrap().len(), 0);
}

#[test]
fn stats_jobs_invariant() {
    let path = corpus();
    let runs: Vec<String> = ["1", "3", "8"]
        .iter()
        .map(|j| {
            stdout(&aode(&[
                "stats",
                "--json",
                "--jobs",
                j,
                "--corpus",
                path.to_str().unwrap(),
            ]))
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[0], runs[2]);
}

#[test]
fn stats_edge_cases() {
    let empty = temp_file("empty.txt", "# nothing here\n\n");
    let out = aode(&["stats", "--json", "--corpus", empty.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["entries"].as_u64(), Some(0));
    assert_eq!(v["percent_noncritical"].as_f64(), Some(0.0));

    let text = "a ; y' - y\nb ; y'' +* y\nc ; y'' - x*y ; noncritical=true\n";
    let one_bad = temp_file("one_bad.txt", text);
    let out = aode(&["stats", "--json", "--corpus", one_bad.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["classified"].as_u64(), Some(2));
    assert_eq!(v["parse_failures"].as_array().unwrap().len(), 1);
    assert_eq!(v["parse_failures"][0]["id"], "b");

    let wrong = temp_file("wrong.txt", "a ; y' - y ; maximally_comparable=false\n");
    let out = aode(&["stats", "--corpus", wrong.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("a: maximally_comparable expected false, got true"));

    assert_eq!(
        code(&aode(&["stats", "--corpus", "/nonexistent/corpus.txt"])),
        2
    );
}
