//! The `superrtt` binary: outputs and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superrtt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn reduce_prints_the_normal_form() {
    let o = run(&["reduce", "xi*x", "--in", "A_h1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "x*xi - h1*x^2");

    let o = run(&["reduce", "x", "--in", "A_h1"]);
    assert_eq!(stdout(&o).trim(), "x");

    let o = run(&[
        "reduce",
        "beta*gamma + gamma*beta - (h1*beta - h2*gamma)*(d - a)",
        "--in",
        "GL_h1h2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn rightmost_and_truncated_reduction() {
    let o = run(&["reduce", "xi*xi*x", "--in", "A_h1", "--rightmost"]);
    assert_eq!(stdout(&o).trim(), "-h1*x^2*xi");
    let o = run(&["reduce", "h1*h2*a", "--in", "GL_h1h2", "--assume-h1h2-zero"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["reduce", "x*", "--in", "A_h1"][..],
        &["reduce", "x", "--in", "nowhere"][..],
        &["verify", "nonsense"][..],
        &["expand", "--family", "nonsense"][..],
        &["contract", "Rpq", "--ungraded"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = run(&["reduce", "x*", "--in", "A_h1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 2"));
}

#[test]
fn rtt_suite_passes() {
    let o = run(&["verify", "rtt"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("rtt: PASS"), "{text}");
}

#[test]
fn ungraded_braid_for_h2_is_an_expected_negative() {
    let o = run(&["verify", "braid", "--ungraded", "--matrix", "Rh2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS (expected nonzero)"), "{text}");
    assert!(text.contains("NONZERO"), "{text}");
    assert!(text.contains("2*h2"), "{text}");
}

#[test]
fn graded_ybe_for_a_single_matrix() {
    let o = run(&["verify", "ybe", "--matrix", "Rh1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_report_has_schema_one() {
    let o = run(&["verify", "rtt", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("json");
    assert_eq!(v["schema"], 1);
    assert_eq!(v["suite"], "rtt");
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        assert_eq!(c["checked"], 16);
        assert_eq!(c["residue_count"], 0);
    }
}

#[test]
fn failing_suite_exits_with_one() {
    // the coordinate and derivative relations of the calculus leave residues
    // on overlaps such as dxi*xi*xi
    let o = run(&[
        "verify",
        "calculus",
        "--only",
        "confluence of Calc_h1h2",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).expect("json");
    assert_eq!(v["passed"], false);
    let residues = v["checks"][0]["nonzero_residues"].as_array().unwrap();
    assert_eq!(residues.len(), 5);
}

#[test]
fn contraction_and_expansion_commands() {
    let o = run(&["contract", "A_p"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rule xi*x -> x*xi - h1*x^2"));

    let o = run(&["contract", "Rpq"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("h1*h2"), "{}", stdout(&o));

    let o = run(&["expand", "--family", "deriv_deriv"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# diff\n(none)"), "{}", stdout(&o));
}

#[test]
fn export_round_trips_through_a_file() {
    let o = run(&["export", "GL_h1h2"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("superrtt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("gl.pres");
    std::fs::write(&path, &o.stdout).unwrap();
    let o = run(&["reduce", "d*a - a*d", "--in", path.to_str().unwrap()]);
    let via_file = stdout(&o);
    let o = run(&["reduce", "d*a - a*d", "--in", "GL_h1h2"]);
    assert_eq!(via_file, stdout(&o));
    std::fs::remove_dir_all(dir).ok();
}
