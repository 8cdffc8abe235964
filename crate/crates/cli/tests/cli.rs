//! Exit-code and output contracts of the four subcommands.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirac-forms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const BOOST_TETRAD: &str = "1.1276259652063807,0.5210953054937474,0,0,\
                            0.5210953054937474,1.1276259652063807,0,0,\
                            0,0,1,0,0,0,0,1";

#[test]
fn verify_passes_by_default_and_fails_below_machine_precision() {
    assert_eq!(code(&run(&["verify"])), 0);
    let strict = run(&["verify", "--tolerance", "1e-30"]);
    assert_eq!(code(&strict), 1);
    let text = String::from_utf8_lossy(&strict.stdout);
    assert!(text.contains("FAIL"));
    // the exact blade-table check is immune to the tolerance
    assert!(text.contains("PASS clifford_blade_associativity"));
}

#[test]
fn malformed_configuration_exits_2() {
    // not enough tetrad entries
    assert_eq!(code(&run(&["verify", "--tetrad", "1,0,0,0"])), 2);
    // sixteen values that are no tetrad
    assert_eq!(
        code(&run(&[
            "verify",
            "--tetrad",
            "0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0"
        ])),
        2
    );
    // malformed numbers in p
    assert_eq!(code(&run(&["solve", "--mass", "1", "--p", "1,x,0,0"])), 2);
    // negative mass
    assert_eq!(code(&run(&["solve", "--mass", "-1", "--p", "1,0,0,0"])), 2);
    // missing required flag
    assert_eq!(code(&run(&["solve", "--p", "1,0,0,0"])), 2);
    // unknown subcommand
    assert_eq!(code(&run(&["explode"])), 2);
}

#[test]
fn gamma_outputs_matrices_in_both_formats() {
    let json = run(&["gamma", "--format", "json"]);
    assert_eq!(code(&json), 0);
    let value: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(value["gamma"].as_array().unwrap().len(), 4);
    assert_eq!(value["tetrad"][0][0], 1.0);
    assert_eq!(value["gamma"][0]["rows"], 4);
    let dev = value["anticommutator_max_deviation"].as_f64().unwrap();
    assert!(dev <= 1e-12);

    let boosted = run(&["gamma", "--format", "json", "--tetrad", BOOST_TETRAD]);
    assert_eq!(code(&boosted), 0);
    let value: serde_json::Value = serde_json::from_slice(&boosted.stdout).unwrap();
    assert!(value["anticommutator_max_deviation"].as_f64().unwrap() <= 1e-12);

    let text = run(&["gamma", "--format", "text"]);
    assert_eq!(code(&text), 0);
    let body = String::from_utf8_lossy(&text.stdout);
    assert!(body.contains("gamma^0"));
    assert!(body.contains("gamma^3"));
}

#[test]
fn solve_counts_follow_the_mass_shell() {
    let on_shell = run(&["solve", "--mass", "1", "--p", "1,0,0,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&on_shell.stdout).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["on_shell"], true);
    for sol in v["solutions"].as_array().unwrap() {
        assert!(sol["residual"].as_f64().unwrap() <= 1e-10);
    }

    let off_shell = run(&["solve", "--mass", "2", "--p", "1,0,0,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&off_shell.stdout).unwrap();
    assert_eq!(v["count"], 0);
    assert_eq!(v["on_shell"], false);

    let zero_symbol = run(&["solve", "--mass", "0", "--p", "0,0,0,0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&zero_symbol.stdout).unwrap();
    assert_eq!(v["count"], 4);

    let shifted = run(&[
        "solve", "--mass", "1", "--p", "2,0,0,0", "--a", "1,0,0,0", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&shifted.stdout).unwrap();
    assert_eq!(v["count"], 2);
}

#[test]
fn compare_holds_on_and_off_shell() {
    let on_shell = run(&[
        "compare", "--mass", "1", "--p", "1,0,0,0", "--format", "json",
    ]);
    assert_eq!(code(&on_shell), 0);
    let v: serde_json::Value = serde_json::from_slice(&on_shell.stdout).unwrap();
    assert_eq!(v["pass"], true);

    // off shell the residuals are large but still agree
    let off_shell = run(&[
        "compare",
        "--mass",
        "1.3",
        "--p",
        "0.4,1.1,-0.6,0.2",
        "--a",
        "0.1,0,0.3,0",
        "--format",
        "json",
    ]);
    assert_eq!(code(&off_shell), 0);
    let v: serde_json::Value = serde_json::from_slice(&off_shell.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["algebra_residual"].as_f64().unwrap() > 0.1);

    // a generic tetrad leaves real round-off, so tolerance 0 must fail
    let strict = run(&[
        "compare",
        "--mass",
        "0.9",
        "--p",
        "0.3,0.7,-0.2,0.1",
        "--tetrad",
        BOOST_TETRAD,
        "--tolerance",
        "0",
        "--format",
        "json",
    ]);
    assert_eq!(code(&strict), 1);
    let v: serde_json::Value = serde_json::from_slice(&strict.stdout).unwrap();
    assert_eq!(v["pass"], false);
}
