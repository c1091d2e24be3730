use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use supertropical::report::{self, AnalysisReport, LawsDocument};
use supertropical::Matrix;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_supertrop"));
    c.env_remove("SUPERTROP_SEED");
    c
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn golden(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn analyze(path: &Path, extra: &[&str]) -> Output {
    let mut args = vec!["analyze", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn analyze_matches_golden_reports() {
    let cases: [(&str, &[&str], &str); 4] = [
        ("pathological_4x4.txt", &["--adjoint"], "pathological_4x4.txt"),
        ("pathological_4x4.txt", &["--adjoint", "--json"], "pathological_4x4.json"),
        ("adjoint_4x4.txt", &["--generalized"], "adjoint_4x4.txt"),
        ("identity_3x3.txt", &[], "identity_3x3.txt"),
    ];
    for (input, flags, expected) in cases {
        let out = analyze(&data(input), flags);
        assert!(out.status.success(), "{input} {flags:?}");
        assert_eq!(stdout(&out), golden(expected), "{input} {flags:?}");
    }
}

#[test]
fn structured_and_human_outputs_carry_the_same_data() {
    for (input, flags) in [
        ("pathological_4x4.txt", vec!["--adjoint"]),
        ("adjoint_4x4.txt", vec!["--adjoint", "--generalized"]),
        ("identity_3x3.txt", vec![]),
    ] {
        let human = stdout(&analyze(&data(input), &flags));
        let mut with_json = flags.clone();
        with_json.push("--json");
        let parsed: AnalysisReport = serde_json::from_str(&stdout(&analyze(&data(input), &with_json))).unwrap();
        assert_eq!(parsed.schema, report::ANALYSIS_SCHEMA);
        assert_eq!(report::render(&parsed), human, "{input}");
    }
}

#[test]
fn analyze_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\n3\n").unwrap();
    assert_eq!(analyze(&bad, &[]).status.code(), Some(2));
    fs::write(&bad, "1 banana\n").unwrap();
    assert_eq!(analyze(&bad, &[]).status.code(), Some(2));
    assert_eq!(analyze(&dir.path().join("missing.txt"), &[]).status.code(), Some(2));

    let big = dir.path().join("big.txt");
    fs::write(&big, Matrix::identity(9).to_string()).unwrap();
    let out = analyze(&big, &[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}

#[test]
fn verify_single_suite() {
    let out = run(&["verify", "oracle-det", "--trials", "20", "--seed", "5", "--json"]);
    assert!(out.status.success());
    let doc: LawsDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.reports.len(), 1);
    assert_eq!(doc.reports[0].law, "oracle-det");
    assert_eq!(doc.reports[0].trials, 20);
    assert!(doc.passed);
}

#[test]
fn verify_flags_reach_the_config() {
    let out = run(&[
        "verify", "det-mult", "--n", "2", "--n", "3", "--trials", "7", "--seed", "9",
        "--value-range", "-4..4", "--zero-density", "0.5", "--ghost-density", "0", "--m-max", "3", "--json",
    ]);
    assert!(out.status.success());
    let doc: LawsDocument = serde_json::from_str(&stdout(&out)).unwrap();
    let sizes: Vec<usize> = doc.reports.iter().map(|r| r.config.n).collect();
    assert_eq!(sizes, [2, 3]);
    let cfg = &doc.reports[0].config;
    assert_eq!((cfg.trials, cfg.master_seed, cfg.value_range), (7, 9, (-4, 4)));
    assert_eq!((cfg.zero_density, cfg.ghost_density, cfg.m_max), (0.5, 0.0, Some(3)));
}

#[test]
fn verify_rejects_bad_input() {
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "det-mult", "--zero-density", "1.5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "det-mult", "--n", "20"]).status.code(), Some(3));
}

#[test]
fn seed_flag_overrides_environment() {
    let args = ["verify", "det-mult", "--n", "3", "--trials", "10", "--json"];
    let from_env = bin().args(args).env("SUPERTROP_SEED", "77").output().unwrap();
    let overridden = bin().args(args).args(["--seed", "77"]).env("SUPERTROP_SEED", "1").output().unwrap();
    let plain = bin().args(args).args(["--seed", "77"]).output().unwrap();
    assert_eq!(stdout(&from_env), stdout(&plain));
    assert_eq!(stdout(&overridden), stdout(&plain));
}

#[test]
fn zero_trial_experiment_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["experiment", "--trials", "0", "--json", "--out-dir", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let doc: LawsDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.reports[0].trials, 0);
    assert_eq!(doc.reports[0].violation_count, 0);
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files, ["experiment.json"]);
}

#[test]
fn emitted_counterexamples_reanalyze_consistently() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "experiment", "--seed", "11", "--trials", "5", "--attempts-per-trial", "4000",
        "--out-dir", dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let stats: LawsDocument = serde_json::from_str(&fs::read_to_string(dir.path().join("experiment.json")).unwrap()).unwrap();
    let r = &stats.reports[0];
    assert_eq!(r.config.n, 4);
    assert!(r.violation_count > 0, "this seed is known to hit the unconditional reading");

    let mut checked = 0;
    for entry in fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        if !path.file_name().unwrap().to_str().unwrap().starts_with("counterexample") {
            continue;
        }
        let a: AnalysisReport = serde_json::from_slice(&analyze(&path, &["--adjoint", "--json"]).stdout).unwrap();
        // The sampling filter: nonsingular, n distinct eigenvalues, dependent eigenvectors.
        assert!(a.determinant.tangible);
        assert_eq!(a.eigenvalues.len(), 4);
        assert!(a.eigenvalues.iter().all(|e| e.multiplicity == 1));
        assert!(a.dependence.dependent);

        let q = dir.path().join("nabla.txt");
        fs::write(&q, a.quasi_inverse.unwrap().join("\n")).unwrap();
        let qa: AnalysisReport = serde_json::from_slice(&analyze(&q, &["--json"]).stdout).unwrap();
        assert_eq!(qa.char_poly, qa.essential_poly, "unconditional failures have an essential f of A^nabla");
        assert!(qa.eigenvalues.len() >= a.eigenvalues.len());
        checked += 1;
    }
    assert!(checked > 0);
}
