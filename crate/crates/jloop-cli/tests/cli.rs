//! End-to-end runs of the `jloop` binary: output shapes, exit codes, and the
//! JSON mode.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn jloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jloop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Writes `text` to a scratch file that lives for the duration of the test.
struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str, text: &str) -> Scratch {
        let path = std::env::temp_dir().join(format!(
            "jloop-cli-{tag}-{}.json",
            std::process::id()
        ));
        fs::write(&path, text).expect("scratch file");
        Scratch(path)
    }

    fn path(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

#[test]
fn composition_round_trips_through_both_divisions() {
    let f = "t + e*t^2 + v0*t^3";
    let g = "t + v1*t^2";
    let h = jloop(&["compose", "--algebra", "split_null:2", f, g]);
    assert_eq!(code(&h), 0, "{}", stderr(&h));
    let h = stdout(&h).trim().to_string();

    let left = jloop(&["divide", "--algebra", "split_null:2", "--side", "left", f, &h]);
    assert_eq!(code(&left), 0);
    assert_eq!(stdout(&left).trim(), g);

    let right = jloop(&["divide", "--algebra", "split_null:2", "--side", "right", &h, g]);
    assert_eq!(code(&right), 0);
    assert_eq!(stdout(&right).trim(), f);
}

#[test]
fn star_drops_the_higher_composition_terms() {
    // Composition picks up alpha_1 * beta_1^2 in slot 3; the star product
    // keeps only the terms linear in the right factor.
    let f = "t + one*t^2";
    let g = "t + e*t^2";
    let args = ["--algebra", "split_null:2", "--truncation", "4", f, g];
    let composed = jloop(&[&["compose"], &args[..]].concat());
    let starred = jloop(&[&["star"], &args[..]].concat());
    assert_eq!(code(&composed), 0);
    assert_eq!(code(&starred), 0);
    assert_eq!(
        stdout(&composed).trim(),
        "t + one*t^2 + e*t^2 + 2*e*t^3 + e2*t^4"
    );
    assert_eq!(stdout(&starred).trim(), "t + one*t^2 + e*t^2 + 2*e*t^3");
}

#[test]
fn st_scans_report_witnesses_and_exit_codes() {
    let fail = jloop(&["identity", "st", "--n", "5", "--algebra", "ev", "--tmax", "3"]);
    assert_eq!(code(&fail), 1);
    assert!(stdout(&fail).contains("St5 fails"), "{}", stdout(&fail));
    assert!(stdout(&fail).contains("4*v"), "{}", stdout(&fail));

    let pass = jloop(&["identity", "st", "--n", "6", "--algebra", "ev", "--tmax", "3"]);
    assert_eq!(code(&pass), 0);
    assert!(stdout(&pass).contains("St6 holds"), "{}", stdout(&pass));

    let json = jloop(&[
        "--json", "identity", "st", "--n", "5", "--algebra", "ev", "--tmax", "3",
    ]);
    assert_eq!(code(&json), 1);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("valid json");
    assert_eq!(doc["status"], "fail");
    assert_eq!(doc["value"], "4*v");
    assert_eq!(doc["witness"]["xs"].as_array().unwrap().len(), 4);
}

#[test]
fn jacobi_holds_for_the_wronskian_spanning_set() {
    let out = jloop(&["identity", "jacobi", "--algebra", "ev", "--tmax", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("Jacobi hold"), "{}", stdout(&out));
}

#[test]
fn sabinin_axiom_scan_accepts_label_and_degree_pools() {
    let out = jloop(&[
        "identity",
        "sabinin-axioms",
        "--algebra",
        "laurent_window:-4:4",
        "--labels",
        "tn1,t0,t1",
        "--max-arity",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("all hold"), "{}", stdout(&out));

    // Graded algebras tag elements intrinsically; --degrees is rejected.
    let clash = jloop(&[
        "identity",
        "sabinin-axioms",
        "--algebra",
        "laurent_window:-4:4",
        "--degrees",
        "0,1",
    ]);
    assert_eq!(code(&clash), 2);
}

#[test]
fn symbolic_closed_bracket_prints_the_free_generator_expansion() {
    let out = jloop(&["bracket", "closed", "--i-degrees", "1,2"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(
        stdout(&out).trim(),
        "[deg 5] -12*x1*x2*y*z + 12*x1*x2*z*y + 6*x2*x1*y*z - 6*x2*x1*z*y"
    );
}

#[test]
fn closed_bracket_reads_concrete_elements_from_json() {
    let scratch = Scratch::new(
        "elts",
        r#"{
            "algebra": "split_null:2",
            "I": [{"degree": -2, "terms": [["1", ["e"]]]}],
            "b": {"degree": 0, "terms": [["1", ["v0"]]]},
            "c": {"degree": 0, "terms": [["1", ["e"]]]}
        }"#,
    );
    let out = jloop(&["bracket", "closed", "--elts", scratch.path()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "[deg -2] -2*v1");

    // Declared degrees must agree with the file.
    let clash = jloop(&[
        "bracket",
        "closed",
        "--elts",
        scratch.path(),
        "--i-degrees",
        "3",
    ]);
    assert_eq!(code(&clash), 2);
}

#[test]
fn filtration_bracket_matches_the_symbolic_closed_form() {
    let out = jloop(&[
        "bracket",
        "filtration",
        "--degrees",
        "2",
        "--y",
        "1",
        "--z",
        "1",
        "--truncation",
        "6",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let filtration = stdout(&out).trim().to_string();

    let closed = jloop(&["bracket", "closed", "--i-degrees", "2"]);
    assert_eq!(stdout(&closed).trim(), filtration);
}

#[test]
fn deviation_applies_words_from_a_json_argument_file() {
    let scratch = Scratch::new(
        "devargs",
        r#"{
            "algebra": "split_null:2",
            "truncation": 5,
            "series": ["t + e*t^2", "t + e*t^2", "t + v0*t^2"]
        }"#,
    );
    let out = jloop(&["deviation", "--base", "assoc", "--args", scratch.path()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "t - v1*t^4");

    // Arity 2 word, three series: usage error.
    let mismatch = jloop(&["deviation", "--base", "comm", "--args", scratch.path()]);
    assert_eq!(code(&mismatch), 2);
}

#[test]
fn klopsch_reports_exact_absorption_coefficients() {
    let ba = jloop(&["klopsch", "--n", "1", "--m", "3", "--target", "ba"]);
    assert_eq!(code(&ba), 0);
    assert!(
        stdout(&ba).contains("lambda = 3/5, mu = -2/5"),
        "{}",
        stdout(&ba)
    );

    let ab = jloop(&["--json", "klopsch", "--n", "1", "--m", "3", "--target", "ab"]);
    assert_eq!(code(&ab), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&ab)).unwrap();
    assert_eq!(doc["lambda"], "2/5");
    assert_eq!(doc["mu"], "-3/5");
    assert_eq!(doc["matches_target"], true);
}

#[test]
fn check_group_separates_groups_from_proper_loops() {
    let group = jloop(&["check-group", "--algebra", "upper_triangular:3"]);
    assert_eq!(code(&group), 0);
    assert!(stdout(&group).starts_with("group"), "{}", stdout(&group));

    let proper = jloop(&["check-group", "--algebra", "split_null:2", "--samples", "50"]);
    assert_eq!(code(&proper), 0);
    assert!(
        stdout(&proper).starts_with("proper loop"),
        "{}",
        stdout(&proper)
    );
    // Reports carry the sampling seed for reproducibility.
    assert!(stdout(&proper).contains("seed"), "{}", stdout(&proper));

    // Two free generators truncated in degree 3: the classical
    // nonassociativity example.
    let free = jloop(&["check-group", "--algebra", "free:a,b:3", "--samples", "60"]);
    assert_eq!(code(&free), 0);
    assert!(
        stdout(&free).starts_with("proper loop"),
        "{}",
        stdout(&free)
    );
}

#[test]
fn inline_algebra_documents_load_from_files() {
    let scratch = Scratch::new(
        "algebra",
        r#"{
            "kind": "structure_constants",
            "name": "trunc2",
            "basis": ["u"],
            "table": {"0,0": []}
        }"#,
    );
    let out = jloop(&[
        "compose",
        "--algebra",
        scratch.path(),
        "--truncation",
        "3",
        "t + u*t^2",
        "t + u*t^2",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    // u^2 = 0, so only the linear terms survive.
    assert_eq!(stdout(&out).trim(), "t + 2*u*t^2");
}

#[test]
fn bad_input_exits_with_usage_code() {
    let unknown_algebra = jloop(&["compose", "--algebra", "nope", "t", "t"]);
    assert_eq!(code(&unknown_algebra), 2);

    let unknown_symbol = jloop(&["compose", "--algebra", "ev", "t + q*t^2", "t"]);
    assert_eq!(code(&unknown_symbol), 2);
    assert!(stderr(&unknown_symbol).contains("unknown symbol"));

    let missing_args = jloop(&["identity", "st", "--algebra", "ev"]);
    assert_eq!(code(&missing_args), 2);

    let no_route = jloop(&["bracket", "closed"]);
    assert_eq!(code(&no_route), 2);
}

#[test]
fn selftest_emits_a_full_json_report() {
    let out = jloop(&["--json", "selftest"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["status"], "pass");
    let criteria = doc["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 15);
    for entry in criteria {
        assert_eq!(entry["status"], "pass", "criterion {}", entry["id"]);
    }
}
