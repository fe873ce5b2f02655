//! End-to-end checks of the built binary: flags, exit codes, output formats,
//! and the round-trip guarantee for emitted scalars.

use std::process::{Command, Output};

use polybern::scalar::{rat, LambdaPoly, Rational};
use polybern::sequences::poly_bernoulli_table;

fn polybern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polybern"))
        .args(args)
        .env_remove("POLYBERN_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn table_poly_bernoulli_csv_matches_known_values() {
    let out = polybern(&[
        "table",
        "--family",
        "poly-bernoulli",
        "--k",
        "2",
        "--lambda",
        "1/2",
        "--n-max",
        "4",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "family,n,k,lambda,value,path");
    assert_eq!(lines.next().unwrap(), "poly-bernoulli,0,2,1/2,1,series");
    assert_eq!(lines.next().unwrap(), "poly-bernoulli,1,2,1/2,1/8,series");
}

#[test]
fn table_symbolic_stirling_renders_lambda_polynomials() {
    let out = polybern(&[
        "table",
        "--family",
        "deg-stirling1",
        "--lambda",
        "symbolic",
        "--n-max",
        "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.lines()
            .any(|l| l == "deg-stirling1,2,1,symbolic,-1 + L,series"),
        "missing expected row in:\n{text}"
    );
}

#[test]
fn table_classical_stirling2_row() {
    let out = polybern(&["table", "--family", "stirling2", "--n-max", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "stirling2,3,2,,3,series"));
}

#[test]
fn emitted_values_round_trip_through_the_parsers() {
    // Symbolic values re-parse as λ-polynomials and match a recomputation.
    let out = polybern(&[
        "table",
        "--family",
        "poly-bernoulli",
        "--k",
        "3",
        "--lambda",
        "symbolic",
        "--n-max",
        "6",
        "--order",
        "8",
    ]);
    assert_eq!(exit_code(&out), 0);
    let recomputed = poly_bernoulli_table(3, &LambdaPoly::var(), 6);
    for (line, expected) in stdout(&out).lines().skip(1).zip(recomputed) {
        let value = line.split(',').nth(4).unwrap();
        let parsed: LambdaPoly = value.parse().expect("value parses");
        assert_eq!(parsed, expected, "line {line:?}");
    }

    // Rational values re-parse exactly as well.
    let out = polybern(&[
        "table", "--family", "carlitz", "--lambda", "-2/3", "--n-max", "6", "--order", "8",
    ]);
    for line in stdout(&out).lines().skip(1) {
        let value = line.split(',').nth(4).unwrap();
        let parsed: Rational = value.parse().expect("value parses");
        assert_eq!(parsed.to_string(), value);
    }
}

#[test]
fn json_and_csv_carry_identical_values() {
    let args_common = [
        "table",
        "--family",
        "deg-stirling2",
        "--lambda",
        "1/3",
        "--n-max",
        "5",
    ];
    let csv = polybern(&{
        let mut a = args_common.to_vec();
        a.extend(["--format", "csv"]);
        a
    });
    let json = polybern(&{
        let mut a = args_common.to_vec();
        a.extend(["--format", "json"]);
        a
    });
    let csv_values: Vec<String> = stdout(&csv)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap().to_string())
        .collect();
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let json_values: Vec<String> = parsed
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["value"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(csv_values, json_values);
}

#[test]
fn verify_clean_run_exits_zero() {
    let out = polybern(&["verify", "--order", "6", "--lambda", "symbolic,1/2"]);
    assert_eq!(exit_code(&out), 0, "stderr: {:?}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] == "pass"));
}

#[test]
fn verify_fault_injection_exits_one_with_counterexample() {
    let out = polybern(&[
        "verify",
        "--order",
        "6",
        "--lambda",
        "1/2",
        "--inject-fault",
        "deg-stirling1-recurrence",
    ]);
    assert_eq!(exit_code(&out), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let failing: Vec<_> = report
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["name"], "deg-stirling1-recurrence");
    let ce = &failing[0]["counterexample"];
    assert!(ce["lhs"].is_string() && ce["rhs"].is_string());
    assert_ne!(ce["lhs"], ce["rhs"]);
}

#[test]
fn verify_order_zero_is_trivially_green() {
    let out = polybern(&["verify", "--order", "0", "--lambda", "symbolic"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn limit_command_confirms_classical_slices() {
    let out = polybern(&["limit", "--n-max", "7"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("carlitz,2,,1/6,1/6,true")));
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn limit_rejects_families_without_a_comparison() {
    let out = polybern(&["limit", "--family", "bernoulli"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&polybern(&["table", "--family", "unknown"])), 2);
    assert_eq!(
        exit_code(&polybern(&[
            "table",
            "--family",
            "bernoulli",
            "--n-max",
            "9",
            "--order",
            "4"
        ])),
        2
    );
    assert_eq!(
        exit_code(&polybern(&[
            "table",
            "--family",
            "poly-bernoulli",
            "--lambda",
            "1/2"
        ])),
        2,
        "missing k"
    );
    assert_eq!(
        exit_code(&polybern(&[
            "table", "--family", "carlitz", "--lambda", "1/0"
        ])),
        2,
        "zero denominator"
    );
    assert_eq!(
        exit_code(&polybern(&["verify", "--lambda", ","])),
        2,
        "empty lambda list"
    );
    assert_eq!(
        exit_code(&polybern(&["verify", "--k-range", "4..-2"])),
        2,
        "inverted k range"
    );
    assert_eq!(
        exit_code(&polybern(&[
            "verify",
            "--inject-fault",
            "nope",
            "--order",
            "2"
        ])),
        2,
        "unknown fault target"
    );
    assert_eq!(exit_code(&polybern(&["bogus"])), 2, "unknown subcommand");
}

#[test]
fn order_env_variable_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_polybern"))
        .args(["table", "--family", "bernoulli", "--n-max", "18"])
        .env("POLYBERN_ORDER", "20")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 0);
    // ...and the flag still overrides it.
    let out = Command::new(env!("CARGO_BIN_EXE_polybern"))
        .args([
            "table",
            "--family",
            "bernoulli",
            "--n-max",
            "18",
            "--order",
            "4",
        ])
        .env("POLYBERN_ORDER", "20")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn output_file_flag_writes_the_file() {
    let path = std::env::temp_dir().join(format!("polybern-table-{}.csv", std::process::id()));
    let path_str = path.to_str().unwrap();
    let out = polybern(&[
        "table",
        "--family",
        "stirling1",
        "--n-max",
        "4",
        "--output",
        path_str,
    ]);
    assert_eq!(exit_code(&out), 0);
    let contents = std::fs::read_to_string(&path).expect("file written");
    assert!(contents.lines().any(|l| l == "stirling1,3,1,,2,series"));
    // S₁(3,1) = 2 with the signed convention.
    assert_eq!(rat(2, 1).to_string(), "2");
    std::fs::remove_file(&path).ok();
}
