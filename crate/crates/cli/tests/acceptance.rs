//! Acceptance: the CLI contract. `verify` exits 0 with defaults, `compare`
//! on (m=1, p=(1,0,0,0), a=0) reports pass in JSON, and identical
//! invocations produce byte-identical output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dirac-forms"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn acceptance_10_cli() {
    let verify = run(&["verify"]);
    assert!(
        verify.status.success(),
        "verify exited {:?}: {}",
        verify.status.code(),
        String::from_utf8_lossy(&verify.stderr)
    );

    let compare = run(&[
        "compare", "--mass", "1", "--p", "1,0,0,0", "--a", "0,0,0,0", "--format", "json",
    ]);
    assert!(compare.status.success());
    let report: serde_json::Value =
        serde_json::from_slice(&compare.stdout).expect("valid JSON report");
    assert_eq!(report["pass"], serde_json::Value::Bool(true));
    for key in [
        "algebra_residual",
        "matrix_residual",
        "difference",
        "tolerance",
    ] {
        assert!(report[key].is_number(), "missing {key}");
    }

    // byte-identical reruns, same config and seed
    for args in [
        vec!["verify", "--format", "json", "--seed", "11"],
        vec![
            "compare", "--mass", "1", "--p", "1,0,0,0", "--a", "0,0,0,0", "--format", "json",
        ],
        vec!["solve", "--mass", "1", "--p", "1,0,0,0", "--format", "json"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "output drifted for {args:?}");
    }

    println!("ACCEPTANCE 10 cli: PASS (verify exit 0, compare pass=true, byte-identical reruns)");
}
