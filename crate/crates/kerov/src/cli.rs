//! Implementations of the command-line subcommands. The binary in
//! `src/main.rs` only parses arguments and forwards here, so everything the
//! CLI does is callable (and testable) as a library.
//!
//! Exit-status convention: 0 success, 1 verification failure, 2 usage or
//! parse error.

use std::fmt::Write as _;
use std::time::Instant;

use clap::ValueEnum;

use crate::characters;
use crate::poly::{GradedPoly, Monomial};
use crate::rat::{is_nonnegative_integer, rat};
use crate::render::{poly_latex, poly_text, sigma_text, OutputDocument};
use crate::sigma::{self, Formula, KerovPolynomial};
use crate::young::{self, Partition};

/// Which formula(s) the sigma subcommand should run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FormulaArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

/// A command failure carrying the process exit code (1 = verification
/// failure, 2 = usage error).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }

    fn failure(message: impl Into<String>) -> Self {
        CliError {
            code: 1,
            message: message.into(),
        }
    }
}

/// Output of the sigma subcommand: the rendered document, plus an optional
/// provenance note destined for stderr.
#[derive(Debug)]
pub struct SigmaOutput {
    pub stdout: String,
    pub note: Option<String>,
}

pub fn run_sigma(
    k: u32,
    formula: FormulaArg,
    format: OutputFormat,
) -> Result<SigmaOutput, CliError> {
    if k < 1 {
        return Err(CliError::usage("k must be at least 1"));
    }
    let (poly, label) = match formula {
        FormulaArg::One => (sigma::formula1(k).poly, "1"),
        FormulaArg::Two => (sigma::formula2(k).poly, "2"),
        FormulaArg::Three => (sigma::formula3(k).poly, "3"),
        FormulaArg::All => {
            let one = sigma::formula1(k).poly;
            let two = sigma::formula2(k).poly;
            let three = sigma::formula3(k).poly;
            if one != two || one != three {
                return Err(CliError::failure(format!(
                    "internal error: the formulas disagree at k = {k}\n  formula 1: {}\n  formula 2: {}\n  formula 3: {}",
                    poly_text(&one),
                    poly_text(&two),
                    poly_text(&three),
                )));
            }
            (one, "all")
        }
    };
    let stdout = match format {
        OutputFormat::Text => sigma_text(k, &poly),
        OutputFormat::Latex => poly_latex(&poly),
        OutputFormat::Json => OutputDocument::new(k, label, &poly).to_json(),
    };
    let note = matches!(formula, FormulaArg::All)
        .then(|| format!("formulas 1, 2 and 3 agree for k = {k}"));
    Ok(SigmaOutput { stdout, note })
}

pub fn run_cumulants(partition: &str, kmax: u32) -> Result<String, CliError> {
    if kmax < 2 {
        return Err(CliError::usage("kmax must be at least 2"));
    }
    let p: Partition = partition
        .parse()
        .map_err(|e| CliError::usage(format!("invalid partition {partition:?}: {e}")))?;
    let cumulants = young::free_cumulants(&p, kmax);
    let mut out = String::new();
    for (k, v) in &cumulants {
        writeln!(out, "R_{k} = {v}").unwrap();
    }
    Ok(out)
}

struct CheckRow {
    label: String,
    passed: bool,
    note: String,
}

/// Run the verification matrix: three-formula agreement, the cumulant
/// recovery identity, the structural invariants of Sigma_k, and the master
/// character identity against the Murnaghan-Nakayama oracle. Returns the
/// report and whether everything passed.
///
/// `corrupt` deliberately damages one computed polynomial so the failure
/// path can be exercised end to end; it exists for the test harness.
pub fn run_check(nmax: u64, kmax: u32, corrupt: bool) -> (String, bool) {
    let mut rows: Vec<CheckRow> = Vec::new();
    let mut counterexample: Option<String> = None;

    let mut sigma1: Vec<KerovPolynomial> = (1..=kmax).map(sigma::formula1).collect();
    let sigma2: Vec<KerovPolynomial> = (1..=kmax).map(sigma::formula2).collect();
    let sigma3: Vec<KerovPolynomial> = (1..=kmax).map(sigma::formula3).collect();
    if corrupt {
        let damaged = &mut sigma1.last_mut().expect("kmax >= 1").poly;
        *damaged = &*damaged + &GradedPoly::variable(2);
    }

    // three-formula agreement
    {
        let mut passed = true;
        for k in 1..=kmax as usize {
            let (a, b, c) = (&sigma1[k - 1].poly, &sigma2[k - 1].poly, &sigma3[k - 1].poly);
            if a != b || a != c {
                passed = false;
                counterexample.get_or_insert_with(|| {
                    format!(
                        "first counterexample: formulas disagree at k = {k}\n  formula 1: {}\n  formula 2: {}\n  formula 3: {}",
                        poly_text(a),
                        poly_text(b),
                        poly_text(c),
                    )
                });
                break;
            }
        }
        rows.push(CheckRow {
            label: format!("three-formula agreement (k <= {kmax})"),
            passed,
            note: String::new(),
        });
    }

    // recovery identity: -(1/k) [z^-1] H^k = R_{k+1}
    {
        let mut passed = true;
        for k in 1..=kmax {
            let got = sigma::recover_cumulant(k);
            let expected = GradedPoly::variable(k + 1);
            if got != expected {
                passed = false;
                counterexample.get_or_insert_with(|| {
                    format!(
                        "first counterexample: cumulant recovery at k = {k}\n  got:      {}\n  expected: {}",
                        poly_text(&got),
                        poly_text(&expected),
                    )
                });
                break;
            }
        }
        rows.push(CheckRow {
            label: format!("cumulant recovery (k <= {kmax})"),
            passed,
            note: String::new(),
        });
    }

    // structural invariants of Sigma_k
    {
        let mut passed = true;
        'outer: for s in &sigma1 {
            let k = s.k;
            let target = u64::from(k) + 1;
            let mut violation = None;
            if s.poly.coefficient(&Monomial::unit()) != rat(0) {
                violation = Some("nonzero constant term");
            } else if s.poly.coefficient(&Monomial::var(k + 1)) != rat(1) {
                violation = Some("top term is not R_{k+1}");
            } else {
                for (m, c) in s.poly.terms() {
                    let w = m.weight();
                    if w > target || w % 2 != target % 2 {
                        violation = Some("weight outside the isobaric window");
                        break;
                    }
                    if w == target && m != &Monomial::var(k + 1) {
                        violation = Some("extra top-weight monomial");
                        break;
                    }
                    if !is_nonnegative_integer(c) {
                        violation = Some("coefficient is not a nonnegative integer");
                        break;
                    }
                }
            }
            if let Some(why) = violation {
                passed = false;
                counterexample.get_or_insert_with(|| {
                    format!(
                        "first counterexample: structural invariant at k = {k} ({why})\n  Sigma_{k} = {}",
                        poly_text(&s.poly),
                    )
                });
                break 'outer;
            }
        }
        rows.push(CheckRow {
            label: format!("structural invariants (k <= {kmax})"),
            passed,
            note: String::new(),
        });
    }

    // master character identity
    {
        let mut passed = true;
        let mut diagrams = 0u64;
        let mut values = 0u64;
        'scan: for n in 1..=nmax {
            for lam in Partition::all(n) {
                diagrams += 1;
                for k in 1..=n.min(u64::from(kmax)) {
                    let s = &sigma1[k as usize - 1];
                    let lhs = young::character_via_kerov(&lam, s)
                        .expect("cumulants cover the polynomial's variables");
                    let rhs = characters::normalized_on_cycle(&lam, k)
                        .expect("1 <= k <= n");
                    values += 1;
                    if lhs != rhs {
                        passed = false;
                        counterexample.get_or_insert_with(|| {
                            format!(
                                "first counterexample: lambda = {lam}, k = {k}\n  polynomial side: {lhs}\n  oracle side:     {rhs}"
                            )
                        });
                        break 'scan;
                    }
                }
            }
        }
        rows.push(CheckRow {
            label: format!("character identity (n <= {nmax})"),
            passed,
            note: format!("({diagrams} diagrams, {values} values)"),
        });
    }

    let all_passed = rows.iter().all(|r| r.passed);
    let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
    let mut out = String::new();
    for row in &rows {
        let verdict = if row.passed { "PASS" } else { "FAIL" };
        if row.note.is_empty() {
            writeln!(out, "{:width$}  {verdict}", row.label).unwrap();
        } else {
            writeln!(out, "{:width$}  {verdict}  {}", row.label, row.note).unwrap();
        }
    }
    if all_passed {
        writeln!(out, "RESULT: all checks passed").unwrap();
    } else {
        writeln!(out, "RESULT: check failed").unwrap();
        if let Some(detail) = counterexample {
            writeln!(out, "{detail}").unwrap();
        }
    }
    (out, all_passed)
}

/// Time each requested formula for k = 1..=kmax and report a CSV table with
/// columns k,formula,milliseconds,terms. Rows are ordered by k, then formula.
pub fn run_bench(kmax: u32, formulas: &[Formula]) -> String {
    let mut out = String::from("k,formula,milliseconds,terms\n");
    for k in 1..=kmax {
        for &f in formulas {
            let start = Instant::now();
            let result = sigma::compute(k, f);
            let ms = start.elapsed().as_secs_f64() * 1e3;
            writeln!(
                out,
                "{k},{},{ms:.3},{}",
                f.label(),
                result.poly.term_count()
            )
            .unwrap();
        }
    }
    out
}

/// Parse the --formulas flag of the bench subcommand ("1,2,3").
pub fn parse_formula_list(s: &str) -> Result<Vec<Formula>, CliError> {
    let mut out = Vec::new();
    for tok in s.split(',') {
        match tok.trim() {
            "1" => out.push(Formula::One),
            "2" => out.push(Formula::Two),
            "3" => out.push(Formula::Three),
            other => {
                return Err(CliError::usage(format!(
                    "unknown formula {other:?} (expected 1, 2 or 3)"
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::usage("at least one formula is required"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_text_output() {
        let out = run_sigma(4, FormulaArg::All, OutputFormat::Text).unwrap();
        assert_eq!(out.stdout, "Sigma_4 = R_5 + 5 R_3");
        assert!(out.note.is_some());
        let single = run_sigma(4, FormulaArg::Two, OutputFormat::Text).unwrap();
        assert_eq!(single.stdout, "Sigma_4 = R_5 + 5 R_3");
        assert!(single.note.is_none());
    }

    #[test]
    fn sigma_json_output() {
        let out = run_sigma(2, FormulaArg::All, OutputFormat::Json).unwrap();
        assert_eq!(
            out.stdout,
            r#"{"k":2,"formula":"all","terms":[{"coeff":"1","monomial":{"3":1}}]}"#
        );
    }

    #[test]
    fn sigma_latex_output() {
        let out = run_sigma(5, FormulaArg::All, OutputFormat::Latex).unwrap();
        assert_eq!(out.stdout, "R_6 + 15R_4 + 5R_2^2 + 8R_2");
    }

    #[test]
    fn sigma_rejects_k_zero() {
        let err = run_sigma(0, FormulaArg::All, OutputFormat::Text).unwrap_err();
        assert_eq!(err.code, 2);
    }

    #[test]
    fn cumulants_of_empty_partition() {
        let out = run_cumulants("", 4).unwrap();
        assert_eq!(out, "R_2 = 0\nR_3 = 0\nR_4 = 0\n");
    }

    #[test]
    fn cumulants_of_2_1() {
        let out = run_cumulants("2,1", 3).unwrap();
        assert_eq!(out, "R_2 = 3\nR_3 = 0\n");
    }

    #[test]
    fn cumulants_of_fig_partition() {
        let out = run_cumulants("4,3,1", 2).unwrap();
        assert_eq!(out, "R_2 = 8\n");
    }

    #[test]
    fn cumulants_rejects_bad_input() {
        assert_eq!(run_cumulants("1,3", 4).unwrap_err().code, 2);
        assert_eq!(run_cumulants("a,b", 4).unwrap_err().code, 2);
        assert_eq!(run_cumulants("2,1", 1).unwrap_err().code, 2);
    }

    #[test]
    fn check_passes_at_desk_scale() {
        let (report, ok) = run_check(4, 4, false);
        assert!(ok, "{report}");
        assert!(report.contains("RESULT: all checks passed"));
        assert_eq!(report.matches("PASS").count(), 4);
    }

    #[test]
    fn check_with_nmax_zero_is_vacuous_on_characters() {
        let (report, ok) = run_check(0, 3, false);
        assert!(ok, "{report}");
        assert!(report.contains("(0 diagrams, 0 values)"));
    }

    #[test]
    fn corrupted_check_fails_with_counterexample() {
        let (report, ok) = run_check(3, 3, true);
        assert!(!ok);
        assert!(report.contains("FAIL"));
        assert!(report.contains("first counterexample"));
        assert!(report.contains("RESULT: check failed"));
    }

    #[test]
    fn bench_row_count_and_shape() {
        let csv = run_bench(3, &Formula::ALL);
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines[0], "k,formula,milliseconds,terms");
        assert_eq!(lines.len(), 1 + 3 * 3);
        // Sigma_2 = R_3 has one term
        assert!(lines[4].starts_with("2,1,"));
        assert!(lines[4].ends_with(",1"));
    }

    #[test]
    fn formula_list_parsing() {
        assert_eq!(
            parse_formula_list("1,3").unwrap(),
            vec![Formula::One, Formula::Three]
        );
        assert_eq!(parse_formula_list("4").unwrap_err().code, 2);
        assert_eq!(parse_formula_list("").unwrap_err().code, 2);
    }
}
