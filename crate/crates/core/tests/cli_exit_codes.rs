//! End-to-end checks of the binary: exit codes and the agreement between
//! the human table and the JSON report.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbihom"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn success_exits_zero() {
    let out = run(&["hp", "--preset", "s2-torus"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("HP_even = 2, HP_odd = 2"), "{stdout}");
}

#[test]
fn config_errors_exit_two() {
    for args in [
        &["hh", "--preset", "nonesuch"][..],
        &["hc", "--preset", "s2-torus"][..],
        &["hp", "--config", "/nonexistent/job.json"][..],
        &["hp", "--preset", "m2"][..],
        &["weyl", "--n", "0"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        assert!(out.stderr.starts_with(b"error:"), "args {args:?}");
    }
}

#[test]
fn size_guards_exit_three() {
    let out = run(&["weyl", "--n", "5", "--check"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn weyl_check_passes_at_small_n() {
    let out = run(&["weyl", "--n", "2", "--check"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("totals: HP_even = 2, HP_odd = 2"), "{stdout}");
    assert!(stdout.contains("agreed"), "{stdout}");
}

#[test]
fn json_report_carries_the_same_numbers() {
    let dir = std::env::temp_dir().join("orbihom-exit-code-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("neg-torus.json");
    let out = run(&["hp", "--preset", "neg-torus", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("HP_even = 1, HP_odd = 1"), "{stdout}");

    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["command"], "hp");
    assert_eq!(report["totals"]["hp"], serde_json::json!([1, 1]));
    assert_eq!(report["per_class"][1]["fixed_set"]["kind"], "empty");
    assert_eq!(report["config"]["preset"], "neg-torus");
}

#[test]
fn reports_are_byte_stable() {
    let a = run(&["hh", "--preset", "diag-c2", "--q-max", "2", "--d-max", "2"]);
    let b = run(&["hh", "--preset", "diag-c2", "--q-max", "2", "--d-max", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
