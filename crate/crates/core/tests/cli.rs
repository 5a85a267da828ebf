use hexatile::sweep::{from_csv, from_json, CSV_HEADER};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hexatile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--sides", "2", "2"]), "20\n");
    assert_eq!(stdout(&["count", "--sides", "1", "1"]), "2\n");
    assert_eq!(stdout(&["count", "--sides", "3", "4"]), "4116\n");
}

#[test]
fn fixed_examples() {
    assert_eq!(
        stdout(&["fixed", "--sides", "2", "2", "--l", "1"]),
        "total 20\nfixed 8\nproportion 2/5\n"
    );
    assert!(stdout(&["fixed", "--sides", "3", "4", "--l", "2"]).ends_with("proportion 1/3\n"));
    let odd = stdout(&["fixed", "--sides", "3", "3", "--l", "2"]);
    assert!(odd.starts_with("total 980\nfixed 252\n"), "{odd}");
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "fixed", "--sides", "3", "3", "--l", "1", "--json",
    ]))
    .unwrap();
    assert_eq!(json["proportion"], "9/35");
}

#[test]
fn usage_errors_exit_with_two() {
    let pole = run(&["fixed", "--sides", "2", "0", "--l", "1"]);
    assert_eq!(pole.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&pole.stderr).contains("undefined for M=0"));
    assert_eq!(
        run(&["fixed", "--sides", "2", "2", "--l", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["count", "--sides", "0", "2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["sweep", "--a", "1", "--b", "1.5", "--n", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let lemma5 = stdout(&[
        "verify", "--suite", "lemma5", "--max-n", "8", "--max-m", "8",
    ]);
    assert_eq!(
        lemma5.lines().filter(|l| l.starts_with("PASS ")).count(),
        64
    );
    assert!(lemma5.ends_with("lemma5: PASS, 64 cases\n"));
    assert!(
        stdout(&["verify", "--suite", "corollary", "--max-n", "10", "--quiet"])
            .starts_with("corollary: PASS")
    );
    let oracle = stdout(&[
        "verify",
        "--suite",
        "oracle-vs-theorems",
        "--max-a",
        "3",
        "--max-m",
        "4",
        "--quiet",
    ]);
    assert!(oracle.starts_with("oracle-vs-theorems: PASS"), "{oracle}");
}

#[test]
fn verification_failure_exits_with_one() {
    // a cell limit below the smallest hexagon makes every oracle case fail
    let out = run(&[
        "--max-cells",
        "2",
        "verify",
        "--suite",
        "oracle-vs-theorems",
        "--max-a",
        "1",
        "--max-m",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn sweep_output_round_trips() {
    let csv = stdout(&["sweep", "--a", "0.5", "--b", "0.5", "--n", "10:200:10"]);
    assert!(csv.starts_with(CSV_HEADER));
    let rows = from_csv(&csv).unwrap();
    assert_eq!(rows.len(), 20);
    assert!(rows.windows(2).all(|w| w[1].abs_error < w[0].abs_error));
    assert!(rows
        .iter()
        .all(|r| (r.arcsine_value - 1.0 / 3.0).abs() < 1e-14));

    let json = stdout(&[
        "sweep",
        "--a",
        "0.5",
        "--b",
        "0.5",
        "--n",
        "10:200:10",
        "--format",
        "json",
    ]);
    assert_eq!(from_json(&json).unwrap(), rows);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["sweep", "--a", "1", "--b", "0.25", "--n", "4,8,16"][..],
        &["verify", "--suite", "symmetries", "--max-n", "3"],
        &["tilings", "--sides", "2", "2"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn dumps() {
    let region = stdout(&["region", "--sides", "2", "2", "--kind", "lower", "--l", "1"]);
    assert!(region.starts_with("# C(2,1,1) cells=12\n"));
    assert_eq!(
        hexatile::hexagon::parse_cell_list(&region).unwrap().len(),
        12
    );

    let all = run(&["tilings", "--sides", "2", "2"]);
    assert_eq!(
        String::from_utf8_lossy(&all.stdout)
            .matches("# tiling")
            .count(),
        20
    );
    let fixed = stdout(&["tilings", "--sides", "2", "2", "--l", "1"]);
    assert_eq!(fixed.matches("# tiling").count(), 8);
}
