use std::path::Path;
use std::process::{Command, Output};

use eaqecc::codes::{bch63_parity_check, builtin, q15_parity_check, write_table};
use eaqecc::f2::{write_alist, write_dense};
use eaqecc::qc_ldpc::make_ex1;
use eaqecc::BitMatrix;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eaqecc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn hamming() -> BitMatrix {
    BitMatrix::from_u8_rows(&[
        &[0, 0, 0, 1, 1, 1, 1],
        &[0, 1, 1, 0, 0, 1, 1],
        &[1, 0, 1, 0, 1, 0, 1],
    ])
}

#[test]
fn construct_from_classical_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let ham = write(dir.path(), "hamming.mat", &write_dense(&hamming()));
    let out = ok(&["construct", "--input", &ham, "--field", "gf2"]);
    assert!(out.contains("computed: [[7,1;0]]"), "{out}");
    assert!(out.contains("dual-containing: yes"));
    assert!(out.contains("singleton bound holds: unknown distance"));

    let alist = write(dir.path(), "hamming.alist", &write_alist(&hamming()));
    assert!(ok(&["construct", "--input", &alist]).contains("computed: [[7,1;0]]"));

    let q15 = write(dir.path(), "q15.gf4", &q15_parity_check().write());
    let out = ok(&["construct", "--input", &q15, "--field", "gf4"]);
    assert!(out.contains("computed: [[15,9;4]]"), "{out}");

    let bch = write(dir.path(), "bch.mat", &write_dense(&bch63_parity_check()));
    assert!(ok(&["construct", "--input", &bch]).contains("computed: [[63,21;6]]"));
}

#[test]
fn construct_with_distance() {
    let dir = tempfile::tempdir().unwrap();
    let ham = write(dir.path(), "hamming.mat", &write_dense(&hamming()));
    let out = ok(&[
        "construct",
        "--input",
        &ham,
        "--find-distance",
        "--mode",
        "strict",
    ]);
    assert!(out.contains("distance (strict): 3"), "{out}");
    assert!(out.contains("computed: [[7,1,3;0]]"));
    assert!(out.contains("singleton bound holds: yes"));
    let out = ok(&["construct", "--input", &ham, "--distance", "4"]);
    assert!(out.contains("fails at weight 3"), "{out}");
}

#[test]
fn input_errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.mat", "2 3\n101\n1x1\n");
    assert_eq!(code(&["construct", "--input", &bad]), 2);
    let empty = write(dir.path(), "empty.mat", "# nothing\n");
    assert_eq!(code(&["construct", "--input", &empty]), 2);
    let missing = dir.path().join("missing.mat");
    assert_eq!(
        code(&["construct", "--input", missing.to_str().unwrap()]),
        1
    );
    assert_eq!(code(&["construct"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn qcldpc_reports() {
    let out = ok(&["qcldpc", "--example", "ex1", "--emit", "report"]);
    assert!(out.contains("H girth: 6"), "{out}");
    assert!(out.contains("rank(H H^T): 18 by gcd (deg gcd 30), 18 by elimination"));
    assert!(out.contains("c: 18"));
    assert!(out.contains("claimed: [[128,48,6;18]]"));
    assert!(out.contains("computed: [[128,"));

    // The published girth of this construction is 8; the graph has 6-cycles.
    let out = ok(&["qcldpc", "--example", "ex2"]);
    assert!(out.contains("H girth: 6"), "{out}");
    assert!(out.contains("c: 18"));

    let out = ok(&["qcldpc", "--example", "hi"]);
    assert!(out.contains("computed: [[120,38;0]]"), "{out}");
    assert!(out.contains("claimed: [[120,38,4;0]]"));
    assert!(out.contains("rank(H_C H_D^T): 0"));

    let out = ok(&["qcldpc", "--example", "mackay"]);
    assert!(out.contains("c: 0"), "{out}");
    assert!(!out.contains("claimed:"));
}

#[test]
fn qcldpc_matrices_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let dense = ok(&["qcldpc", "--example", "ex1", "--emit", "matrix"]);
    assert_eq!(dense, write_dense(&make_ex1().expand()));
    let alist = ok(&[
        "qcldpc",
        "--example",
        "ex1",
        "--emit",
        "matrix",
        "--format",
        "alist",
    ]);
    assert_eq!(alist, write_alist(&make_ex1().expand()));

    let file = write(dir.path(), "ex1.exp", &make_ex1().to_string());
    assert_eq!(
        ok(&["qcldpc", "--exponent", &file, "--emit", "matrix"]),
        dense
    );
    let report = ok(&["qcldpc", "--exponent", &file]);
    assert!(
        report.contains("c: 18") && !report.contains("claimed:"),
        "{report}"
    );

    // Overriding r changes the expansion size.
    let small = ok(&[
        "qcldpc",
        "--exponent",
        &file,
        "--r",
        "17",
        "--emit",
        "matrix",
    ]);
    assert!(small.starts_with("51 136\n"));

    let bad = write(dir.path(), "bad.exp", "5 1 2\n1 x\n");
    assert_eq!(code(&["qcldpc", "--exponent", &bad]), 2);
    assert_eq!(code(&["qcldpc", "--example", "nope"]), 1);
    assert_eq!(code(&["qcldpc"]), 1);
}

#[test]
fn simulate_csv() {
    let out = ok(&[
        "simulate", "--code", "steane7", "--p", "0", "--trials", "100",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "p,trials,block_errors,wer,ci_lo,ci_hi");
    assert!(lines[1].starts_with("0,100,0,0.000000e0,"), "{out}");
    assert_eq!(code(&["simulate", "--code", "steane7", "--p", "1.5"]), 1);
    assert_eq!(code(&["simulate", "--code", "nosuchcode", "--p", "0.1"]), 1);
}

#[test]
fn simulate_is_deterministic() {
    let args = [
        "simulate",
        "--code",
        "ex1",
        "--p",
        "0.01,0.02,0.03",
        "--trials",
        "300",
    ];
    let with = |extra: &[&str]| {
        let mut all = args.to_vec();
        all.extend_from_slice(&["--seed", "7"]);
        all.extend_from_slice(extra);
        ok(&all)
    };
    let one = with(&["--threads", "1"]);
    assert_eq!(one, with(&["--threads", "4"]));
    assert_eq!(one, with(&[]));
    assert_eq!(one.lines().count(), 4);
}

#[test]
fn builtins_and_tables() {
    let list = ok(&["builtin"]);
    assert_eq!(list.lines().count(), 8);
    assert!(list.contains("bch63"));
    let out = ok(&["builtin", "q15", "--distance", "4", "--mode", "strict"]);
    assert!(out.contains("distance >= 4 (strict): holds"), "{out}");
    assert!(out.contains("computed: [[15,9;4]]") && out.contains("claimed: [[15,9,4;4]]"));

    // A table written by the library reads back as the same code.
    let dir = tempfile::tempdir().unwrap();
    let table = write(
        dir.path(),
        "ea8.txt",
        &write_table(&builtin("ea8").unwrap()),
    );
    let out = ok(&["analyze", "--code", &table, "--find-distance"]);
    assert!(out.contains("distance (degenerate): 3"), "{out}");
    assert!(out.contains("computed: [[8,1,3;1]]"));
}

#[test]
fn analyze_budget_and_girth() {
    let out = ok(&[
        "analyze",
        "--code",
        "steane7",
        "--find-distance",
        "--mode",
        "strict",
    ]);
    assert!(out.contains("girth(H_z): 4"), "{out}");
    assert!(out.contains("distance (strict): 3"));
    let out = ok(&[
        "analyze",
        "--code",
        "shor9",
        "--distance",
        "3",
        "--mode",
        "strict",
    ]);
    assert!(out.contains("fails at weight 2"), "{out}");
    assert_eq!(
        code(&[
            "analyze",
            "--code",
            "ex1",
            "--distance",
            "4",
            "--budget",
            "1000"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "analyze",
            "--code",
            "ex1",
            "--find-distance",
            "--budget",
            "1000"
        ]),
        3
    );
}

#[test]
fn sgs_decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "ops.txt", "# three operators\nXX\nZZ\nZI\n");
    let out = ok(&["sgs", "--input", &file]);
    assert!(out.contains("dimension: 3"), "{out}");
    assert!(out.contains("hyperbolic pairs: 1"));
    assert!(out.contains("isotropic: 1"));
    let bad = write(dir.path(), "bad.txt", "XX\nZ\n");
    assert_eq!(code(&["sgs", "--input", &bad]), 2);
}
