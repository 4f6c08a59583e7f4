//! Subprocess-based integration tests for the salem CLI.
//!
//! These run the actual binary and check exit codes, stdout bytes, and the
//! JSON/text document formats end to end. Workloads stay small (traces <= 4)
//! because the binary under test is built without optimization.

use std::io::Write;
use std::process::Command;

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

/// Run the salem binary with given args; return (exit_code, stdout, stderr).
fn run(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_salem"))
        .args(args)
        .output()
        .expect("failed to run salem");
    let code = output.status.code().unwrap_or(-1);
    let stdout = String::from_utf8_lossy(&output.stdout).to_string();
    let stderr = String::from_utf8_lossy(&output.stderr).to_string();
    (code, stdout, stderr)
}

/// Write a polynomial (or document) to a temp file and return its guard.
fn input_file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(content.as_bytes()).expect("write temp input");
    f
}

fn path_str(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

// ===========================================================================
// gen salem
// ===========================================================================

#[test]
fn gen_salem_trace_zero_json_golden() {
    let (code, stdout, _) = run(&["gen", "salem", "--trace", "0"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"kind\":\"salem-candidate\",\"trace\":0,\"degree\":6,\
         \"coeffs\":[\"1\",\"0\",\"-2\",\"-3\",\"-2\",\"0\",\"1\"],\
         \"metadata\":{\"exponents\":[2,3]}}\n"
    );
}

#[test]
fn gen_salem_text_format_is_one_ascending_line() {
    let (code, stdout, _) = run(&["gen", "salem", "--trace", "0", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 0 -2 -3 -2 0 1\n");
}

#[test]
fn gen_salem_trace_two_has_golden_middle_coefficients() {
    let (code, stdout, _) = run(&["gen", "salem", "--trace", "2", "--format", "text"]);
    assert_eq!(code, 0);
    let coeffs: Vec<i64> = stdout
        .trim()
        .split(' ')
        .map(|c| c.parse().unwrap())
        .collect();
    assert_eq!(coeffs.len(), 39);
    // Descending from z^38: 1, 2, -2, -19, ...; the center is -2635.
    assert_eq!(coeffs[38], 1);
    assert_eq!(coeffs[37], 2);
    assert_eq!(coeffs[36], -2);
    assert_eq!(coeffs[35], -19);
    assert_eq!(coeffs[19], -2635);
    assert_eq!(coeffs[0], 1);
}

#[test]
fn gen_salem_trace_two_sieve_certify_json_exits_zero() {
    let (code, stdout, _) = run(&[
        "gen", "salem", "--trace", "2", "--sieve", "--certify", "--format", "json",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"kind\":\"salem\""));
    assert!(stdout.contains("\"degree\":38"));
    // Ascending storage, so the leading run 1, 2, -2, -19 closes the array.
    assert!(stdout.contains("\"-19\",\"-2\",\"2\",\"1\"]"));
    assert!(stdout.contains("\"sieve_passed\":true"));
    assert!(stdout.contains("\"verdict\":\"salem\""));
}

#[test]
fn gen_salem_sieve_and_certify_succeed_on_small_traces() {
    let (code, stdout, _) = run(&["gen", "salem", "--trace", "1", "--sieve", "--certify"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"kind\":\"salem\""));
    assert!(stdout.contains("\"sieve_passed\":true"));
    assert!(stdout.contains("\"verdict\":\"salem\""));
    assert!(stdout.contains("\"value\":\"2.620305400356\""));
}

#[test]
fn gen_salem_killer_policy_reports_without_coefficients() {
    let (code, stdout, _) = run(&["gen", "salem", "--trace", "1", "--policy", "killer"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"kind\":\"killer-report\""));
    assert!(stdout.contains("\"trace\":-1"));
    assert!(stdout.contains("primes not dividing K"));
    assert!(stdout.contains("\"log_k\""));
    assert!(!stdout.contains("coeffs"));
}

#[test]
fn gen_salem_repeat_runs_are_byte_identical() {
    let first = run(&["gen", "salem", "--trace", "3", "--sieve"]);
    let second = run(&["gen", "salem", "--trace", "3", "--sieve"]);
    assert_eq!(first.0, second.0);
    assert_eq!(first.1, second.1);
}

#[test]
fn gen_salem_out_flag_writes_file_and_keeps_stdout_empty() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s0.json");
    let (code, stdout, _) = run(&[
        "gen",
        "salem",
        "--trace",
        "0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let on_disk = std::fs::read_to_string(&path).unwrap();
    let direct = run(&["gen", "salem", "--trace", "0"]).1;
    assert_eq!(on_disk, direct);
}

#[test]
fn gen_salem_timing_goes_to_stderr_only() {
    let plain = run(&["gen", "salem", "--trace", "1"]);
    let timed = run(&["gen", "salem", "--trace", "1", "--timing"]);
    assert_eq!(timed.1, plain.1);
    assert!(timed.2.contains("elapsed"));
}

// ===========================================================================
// gen pisot
// ===========================================================================

#[test]
fn gen_pisot_trace_zero_json_records_stripped_factors() {
    let (code, stdout, _) = run(&["gen", "pisot", "--trace", "0"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"kind\":\"pisot\""));
    assert!(stdout.contains("\"trace\":0"));
    assert!(stdout.contains("\"degree\":16"));
    assert!(stdout.contains("\"exponents\":[2,3,5,7]"));
    assert!(stdout.contains("\"stripped_factors\":[[1,3]]"));
}

#[test]
fn gen_pisot_certify_exits_zero_with_dominant_value() {
    let (code, stdout, _) = run(&["gen", "pisot", "--trace", "1", "--certify"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"verdict\":\"pisot\""));
    assert!(stdout.contains("\"value\":"));
}

// ===========================================================================
// family
// ===========================================================================

#[test]
fn family_lehmer_text_golden() {
    let (code, stdout, _) = run(&["family", "lehmer", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 1 0 -1 -1 -1 -1 -1 0 1 1\n");
}

#[test]
fn family_quartic_takes_its_trace_as_parameter() {
    let (code, stdout, _) = run(&["family", "quartic", "--n", "3", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1 -3 -7 -3 1\n");
}

#[test]
fn family_degree8_json_has_trace_minus_one() {
    let (code, stdout, _) = run(&["family", "degree8"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"trace\":-1"));
    assert!(stdout.contains("\"degree\":8"));
}

#[test]
fn family_quartic_without_n_is_a_usage_error() {
    let (code, stdout, stderr) = run(&["family", "quartic"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("--n"));
}

#[test]
fn family_quartic_rejects_n_below_one() {
    let (code, _, stderr) = run(&["family", "quartic", "--n", "0"]);
    assert_eq!(code, 3);
    assert!(!stderr.is_empty());
}

#[test]
fn family_lehmer_rejects_stray_n() {
    let (code, _, _) = run(&["family", "lehmer", "--n", "2"]);
    assert_eq!(code, 3);
}

// ===========================================================================
// verify
// ===========================================================================

#[test]
fn verify_lehmer_text_file_certifies_salem() {
    let f = input_file("1 1 0 -1 -1 -1 -1 -1 0 1 1\n");
    let (code, stdout, _) = run(&["verify", path_str(&f)]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"kind\":\"salem\""));
    assert!(stdout.contains("\"trace\":-1"));
    assert!(stdout.contains("\"value\":\"1.176280818259\""));
}

#[test]
fn verify_json_document_roundtrips_coefficients() {
    let f = input_file("{\"kind\":\"pisot\",\"degree\":2,\"coeffs\":[\"-1\",\"-1\",\"1\"]}\n");
    let (code, stdout, _) = run(&["verify", path_str(&f)]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"coeffs\":[\"-1\",\"-1\",\"1\"]"));
    assert!(stdout.contains("\"verdict\":\"pisot\""));
    assert!(stdout.contains("\"value\":\"1.618033988749\""));
}

#[test]
fn verify_reciprocal_pisot_under_salem_kind_fails() {
    let f = input_file("1 -3 1\n");
    let (code, stdout, _) = run(&["verify", path_str(&f), "--kind", "salem"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("\"verdict\":\"reciprocal-pisot\""));
}

#[test]
fn verify_auto_kind_routes_non_reciprocal_input_to_pisot() {
    let f = input_file("-1 -1 1\n");
    let (code, stdout, _) = run(&["verify", path_str(&f)]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"kind\":\"pisot\""));
}

#[test]
fn verify_cyclotomic_input_is_not_salem() {
    // z^4 + z^3 + z^2 + z + 1 has all roots on the circle.
    let f = input_file("1 1 1 1 1\n");
    let (code, stdout, _) = run(&["verify", path_str(&f), "--kind", "salem"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("\"verdict\":\"not-salem\""));
}

#[test]
fn verify_missing_file_is_an_io_error() {
    let (code, stdout, stderr) = run(&["verify", "/nonexistent/poly.json"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("error:"));
}

#[test]
fn verify_malformed_polynomial_reports_position() {
    let f = input_file("1 2 x 4\n");
    let (code, _, stderr) = run(&["verify", path_str(&f)]);
    assert_eq!(code, 3);
    assert!(stderr.contains("offset"));
}

#[test]
fn verify_degree_mismatch_in_document_is_rejected() {
    let f = input_file("{\"kind\":\"raw\",\"degree\":3,\"coeffs\":[\"-1\",\"-1\",\"1\"]}\n");
    let (code, _, stderr) = run(&["verify", path_str(&f)]);
    assert_eq!(code, 3);
    assert!(stderr.contains("degree"));
}

// ===========================================================================
// sieve
// ===========================================================================

#[test]
fn sieve_passes_on_lehmer() {
    let f = input_file("1 1 0 -1 -1 -1 -1 -1 0 1 1\n");
    let (code, stdout, _) = run(&["sieve", path_str(&f)]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"passed\":true"));
    assert!(stdout.contains("\"stripped_factors\":[]"));
}

#[test]
fn sieve_flags_a_planted_cyclotomic_factor() {
    // (z^2 + z + 1) times the quartic of trace 1.
    let f = input_file("1 0 -3 -5 -3 0 1\n");
    let (code, stdout, _) = run(&["sieve", path_str(&f)]);
    assert_eq!(code, 1);
    assert!(stdout.contains("\"passed\":false"));
    assert!(stdout.contains("\"stripped_factors\":[[3,1]]"));
    assert!(stdout.contains("\"quotient_degree\":4"));
}

// ===========================================================================
// bounds
// ===========================================================================

#[test]
fn bounds_salem_reports_degree_and_double_log_interval() {
    let (code, stdout, _) = run(&["bounds", "salem", "--trace", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"trace\":-2"));
    assert!(stdout.contains("\"degree\":38"));
    // 22 + 8 ln 2 bracketed to twelve digits.
    assert!(stdout.contains("\"double_log_degree_bound\":[\"27.545177444479\",\"27.545177444480\"]"));
}

#[test]
fn bounds_salem_rejects_trace_zero() {
    let (code, _, _) = run(&["bounds", "salem", "--trace", "0"]);
    assert_eq!(code, 3);
}

#[test]
fn bounds_pisot_reports_prime_sum() {
    let (code, stdout, _) = run(&["bounds", "pisot", "--trace", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"trace\":0,\"degree_bound\":17}\n");
}

#[test]
fn bounds_killer_n_two_is_exact() {
    let (code, stdout, _) = run(&["bounds", "killer", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"n\":2"));
    assert!(stdout.contains("\"big_n\":\"12\""));
    assert!(stdout.contains("\"log_k_exact\":true"));
}

#[test]
fn bounds_killer_rejects_odd_n() {
    let (code, _, stderr) = run(&["bounds", "killer", "--n", "3"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("even"));
}

// ===========================================================================
// table
// ===========================================================================

#[test]
fn table_small_golden() {
    let (code, stdout, _) = run(&["table", "--kind", "salem", "--max-trace", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "trace,degree,sieve,value\n\
         0,6,pass,1.987793166846\n\
         -1,16,pass,2.620305400356\n"
    );
}

#[test]
fn table_output_is_independent_of_job_count() {
    let serial = run(&["table", "--kind", "salem", "--max-trace", "4", "--jobs", "1"]);
    let parallel = run(&["table", "--kind", "salem", "--max-trace", "4", "--jobs", "4"]);
    assert_eq!(serial.0, 0);
    assert_eq!(serial.1, parallel.1);
}

#[test]
fn table_rejects_unknown_kind() {
    let (code, _, _) = run(&["table", "--kind", "pisot", "--max-trace", "1"]);
    assert_eq!(code, 3);
}

// ===========================================================================
// global behavior
// ===========================================================================

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("gen"));
    assert!(stdout.contains("verify"));
    assert!(stdout.contains("bounds"));
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let (code, stdout, stderr) = run(&["gen", "salem", "--trace", "1", "--frobnicate"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(!stderr.is_empty());
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    let (code, _, _) = run(&[]);
    assert_eq!(code, 3);
}

#[test]
fn json_output_is_one_line_with_string_coefficients() {
    let (_, stdout, _) = run(&["gen", "pisot", "--trace", "2"]);
    assert!(stdout.ends_with('\n'));
    assert_eq!(stdout.lines().count(), 1);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["kind"], "pisot");
    assert_eq!(value["degree"].as_u64(), Some(72));
    // Coefficients ride as strings so they survive any JSON reader intact.
    assert!(value["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .all(serde_json::Value::is_string));
}
