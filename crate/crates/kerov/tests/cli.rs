//! End-to-end tests of the `kerov` binary: pinned output formats and the
//! exit-status contract (0 success, 1 verification failure, 2 usage error).

use std::process::{Command, Output};

use kerov::render::OutputDocument;

fn kerov(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kerov"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn sigma_text_format() {
    let out = kerov(&["sigma", "4", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "Sigma_4 = R_5 + 5 R_3\n");
    // the provenance note for --formula all goes to stderr, not stdout
    assert!(stderr(&out).contains("agree"));
}

#[test]
fn sigma_json_format() {
    let out = kerov(&["sigma", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"k\":2,\"formula\":\"all\",\"terms\":[{\"coeff\":\"1\",\"monomial\":{\"3\":1}}]}\n"
    );
}

#[test]
fn sigma_latex_format() {
    let out = kerov(&["sigma", "5", "--format", "latex"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "R_6 + 15R_4 + 5R_2^2 + 8R_2\n");
}

#[test]
fn sigma_single_formula_selection() {
    for f in ["1", "2", "3"] {
        let out = kerov(&["sigma", "3", "--formula", f]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), "Sigma_3 = R_4 + R_2\n", "formula {f}");
        assert!(stderr(&out).is_empty(), "formula {f} should print no note");
    }
}

#[test]
fn sigma_json_round_trips() {
    let out = kerov(&["sigma", "5", "--format", "json", "--formula", "1"]);
    let text = stdout(&out);
    let doc = OutputDocument::from_json(text.trim()).unwrap();
    assert_eq!(doc.to_json() + "\n", text);
    assert_eq!(doc.k, 5);
    assert_eq!(doc.formula, "1");
    assert_eq!(doc.terms.len(), 4);
}

#[test]
fn sigma_usage_errors_exit_2() {
    assert_eq!(kerov(&["sigma", "0"]).status.code(), Some(2));
    assert_eq!(kerov(&["sigma", "x"]).status.code(), Some(2));
    assert_eq!(kerov(&["sigma", "3", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(kerov(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn cumulants_of_empty_partition() {
    let out = kerov(&["cumulants", "", "--kmax", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "R_2 = 0\nR_3 = 0\nR_4 = 0\n");
}

#[test]
fn cumulants_of_hook_shape() {
    let out = kerov(&["cumulants", "2,1", "--kmax", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "R_2 = 3\nR_3 = 0\n");
}

#[test]
fn cumulants_of_fig_partition() {
    let out = kerov(&["cumulants", "4,3,1", "--kmax", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "R_2 = 8\n");
}

#[test]
fn cumulants_parse_errors_exit_2() {
    for bad in ["1,3", "4,0", "a,b", "-2"] {
        let out = kerov(&["cumulants", bad, "--kmax", "4"]);
        assert_eq!(out.status.code(), Some(2), "partition {bad:?}");
        assert!(!stderr(&out).is_empty());
    }
}

#[test]
fn check_passes_and_exits_0() {
    let out = kerov(&["check", "--nmax", "5", "--kmax", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("three-formula agreement (k <= 5)"));
    assert!(text.contains("cumulant recovery"));
    assert!(text.contains("structural invariants"));
    assert!(text.contains("character identity (n <= 5)"));
    assert!(text.contains("RESULT: all checks passed"));
    assert_eq!(text.matches("PASS").count(), 4);
}

#[test]
fn check_with_nmax_zero_is_vacuous() {
    let out = kerov(&["check", "--nmax", "0", "--kmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(0 diagrams, 0 values)"));
}

#[test]
fn corrupted_check_exits_1_with_counterexample() {
    let out = kerov(&["check", "--nmax", "3", "--kmax", "3", "--corrupt"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"));
    assert!(text.contains("RESULT: check failed"));
    assert!(text.contains("first counterexample"));
}

#[test]
fn bench_emits_a_row_per_k_and_formula() {
    let out = kerov(&["bench", "--kmax", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim_end().lines().collect();
    assert_eq!(lines[0], "k,formula,milliseconds,terms");
    assert_eq!(lines.len() - 1, 24, "8 k-values x 3 formulas");
    // Sigma_5 has 4 terms, reported in the last column
    for f in ["1", "2", "3"] {
        let row = lines
            .iter()
            .find(|l| l.starts_with(&format!("5,{f},")))
            .expect("row for k=5 present");
        assert!(row.ends_with(",4"), "unexpected term count in {row:?}");
        let ms: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert!(ms > 0.0);
    }
}

#[test]
fn bench_respects_formula_subset() {
    let out = kerov(&["bench", "--kmax", "2", "--formulas", "1,3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.trim_end().lines().count(), 1 + 4);
    assert!(text.contains("1,1,"));
    assert!(text.contains("1,3,"));
    assert!(!text.contains("1,2,"));
}

#[test]
fn bench_rejects_unknown_formula() {
    assert_eq!(
        kerov(&["bench", "--kmax", "2", "--formulas", "9"]).status.code(),
        Some(2)
    );
}
