use std::process::{Command, Output};

use serde_json::Value;

fn chute(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chute"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SCHUBERT_21543: &str = "x1^3*x2 + x1^3*x3 + x1^3*x4 + x1^2*x2^2 + 2*x1^2*x2*x3 + x1^2*x2*x4 \
+ x1^2*x3^2 + x1^2*x3*x4 + x1*x2^2*x3 + x1*x2^2*x4 + x1*x2*x3^2 + x1*x2*x3*x4 + x1*x3^2*x4\n";

#[test]
fn schubert_polynomials() {
    for method in ["pipedreams", "compatible", "rfc", "divdiff"] {
        let o = chute(&["schubert", "2,1,5,4,3", "--method", method]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), SCHUBERT_21543, "{method}");
    }
    assert_eq!(stdout(&chute(&["schubert", "1,2,3"])), "1\n");
    let o = chute(&["schubert", "2,1,5,4,3", "--check-all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "OK: 4 methods agree\n");
}

#[test]
fn json_polynomial() {
    let o = chute(&["schubert", "21543", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["polynomial"].as_array().unwrap().len(), 13);
}

#[test]
fn bad_input_exits_one() {
    assert_eq!(chute(&["schubert", "1,1,2"]).status.code(), Some(1));
    assert_eq!(chute(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(chute(&["verify", "8"]).status.code(), Some(1));
    assert_eq!(
        chute(&["pipedreams", "123", "--format", "dot"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        chute(&["phi", "[[1,2],[2,1]]", "--n", "4"]).status.code(),
        Some(1)
    );
}

#[test]
fn crystal_dot_is_deterministic() {
    let a = chute(&["crystal", "21543", "--format", "dot"]);
    let b = chute(&["crystal", "21543", "--format", "dot"]);
    assert_eq!(a.stdout, b.stdout);
    let dot = stdout(&a);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"+")).count(), 14);
    assert_eq!(dot.lines().filter(|l| l.contains(" -> ")).count(), 12);
    let single = stdout(&chute(&["crystal", "123"]));
    assert_eq!(single.lines().filter(|l| l.contains(" -> ")).count(), 0);
    assert_eq!(single.lines().filter(|l| l.contains("wt (")).count(), 1);
}

#[test]
fn crystal_json_keys() {
    let v: Value =
        serde_json::from_slice(&chute(&["crystal", "21543", "--format", "json"]).stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 14);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
}

#[test]
fn decompose_reports() {
    let o = chute(&["decompose", "21543", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let mut words: Vec<String> = v["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            c["pi_reduced_word"]
                .as_array()
                .unwrap()
                .iter()
                .map(|a| a.to_string())
                .collect()
        })
        .collect();
    words.sort();
    assert_eq!(words, ["2", "213", "32"]);

    let o = chute(&["decompose", "1,2,3"]);
    assert!(stdout(&o).contains("1 components"));

    // One component of [4726315] does not verify; the report is still printed.
    let o = chute(&["decompose", "4726315", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["components"].as_array().unwrap().iter().any(|c| {
        c["lambda"] == serde_json::json!([5, 3, 3, 1, 1, 0, 0])
            && c["pi_reduced_word"] == serde_json::json!([1, 3])
    }));
}

#[test]
fn phi_both_directions() {
    let o = chute(&["phi", "[[1,1],[1,4],[2,2],[3,2]]"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("( )( 4 )( 3 )( 1 4 )"));
    assert!(text.contains("[[1,4],[1,1],[2,2],[3,2]] in RP([21543])"));

    let o = chute(&["phi", "( )( 4 )( 3 )( 1 4 )", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(
        v["pipe_dream"]["crosses"],
        serde_json::json!([[1, 4], [1, 1], [2, 2], [3, 2]])
    );

    let o = chute(&["phi", "[]"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("( )"));
}

#[test]
fn phi_round_trips_rp() {
    let v: Value =
        serde_json::from_slice(&chute(&["pipedreams", "21543", "--format", "json"]).stdout)
            .unwrap();
    let all = v["pipe_dreams"].as_array().unwrap();
    assert_eq!(all.len(), 14);
    for d in all {
        let input = serde_json::json!({"n": d["n"], "crosses": d["crosses"]}).to_string();
        let forward: Value =
            serde_json::from_slice(&chute(&["phi", &input, "--format", "json"]).stdout).unwrap();
        let text = forward["rfc"]["text"].as_str().unwrap();
        let back: Value =
            serde_json::from_slice(&chute(&["phi", text, "--format", "json"]).stdout).unwrap();
        assert_eq!(back["pipe_dream"]["crosses"], d["crosses"]);
    }
}

#[test]
fn rfc_listing() {
    let o = chute(&["rfc", "21543"]);
    let text = stdout(&o);
    assert!(text.starts_with("14 factorizations"));
    assert!(text.contains("( )( 4 )( 3 )( 1 4 )"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("crystal.dot");
    let o = chute(&["crystal", "21543", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .starts_with("digraph"));
}

#[test]
fn verify_small() {
    for (n, count) in [("3", 6), ("4", 24)] {
        let o = chute(&["verify", n, "--jobs", "2", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["permutations"], count);
        assert!(v["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn verify_dumps_failures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("failures.json");
    let o = chute(&["verify", "5", "--failures", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let failing: Vec<&Value> = v.as_array().unwrap().iter().map(|f| &f["w"]).collect();
    assert!(failing
        .iter()
        .all(|w| **w == serde_json::json!([2, 5, 1, 4, 3])));
    assert!(stdout(&o).contains("crystal_key_decomposition            pass   120  fail     0"));
}
