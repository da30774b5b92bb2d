use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const EX62: &str = "F(p & q & F(r & F(p & q)))";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltl-teach")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn characterize_matches_golden_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.sample");
    let args = ["characterize", "--ap", "p,q,r", "--formula", EX62, "--fragment", "monotone", "--out", path_str(&out)];
    assert_eq!(code(&run(&args)), 0);
    let golden = fs::read(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/ex62.sample")).unwrap();
    assert_eq!(fs::read(&out).unwrap(), golden);
    let again = run(&["characterize", "--ap", "p,q,r", "--formula", EX62]);
    assert_eq!(again.stdout, golden);
    let leftovers: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(leftovers.len(), 1);
}

#[test]
fn emitted_samples_feed_fits_and_verify_unique() {
    let dir = tempfile::tempdir().unwrap();
    let sample = dir.path().join("s.sample");
    let s = path_str(&sample);
    assert_eq!(code(&run(&["characterize", "--ap", "p,q", "--formula", "sF p & sF q", "--out", s])), 0);
    let fits = run(&["fits", "--formula", "sF p & sF q", "--sample", s]);
    assert_eq!((code(&fits), stdout(&fits).as_str()), (0, "fits\n"));
    let other = run(&["fits", "--formula", "sF p", "--sample", s]);
    assert_eq!(code(&other), 1);
    assert!(stdout(&other).starts_with("does not fit example"));
    let v = run(&["verify-unique", "--formula", "sF p & sF q", "--sample", s, "--fragment", "monotone", "--max-size", "4"]);
    assert_eq!(code(&v), 0, "{}", stdout(&v));
    assert!(stdout(&v).starts_with("confirmed"));
}

#[test]
fn schematic_samples_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let sample = dir.path().join("r.sample");
    let s = path_str(&sample);
    assert_eq!(code(&run(&["characterize-schematic", "--ap", "p,q", "--formula", "sF(p & q)", "--out", s])), 0);
    assert!(fs::read_to_string(&sample).unwrap().contains("+ schema [!p&!q].[p&q]\n"));
    assert_eq!(code(&run(&["fits", "--formula", "sF(p & q)", "--sample", s])), 0);
    assert_eq!(code(&run(&["fits", "--formula", "sF(p & q)", "--sample", s, "--max-len", "5"])), 0);
}

#[test]
fn eval_on_transfinite_expression() {
    let out = run(&["eval", "--ap", "p", "--formula", "F p", "--expr", "{}^w.{p}"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "true\n"));
    let out = run(&["eval", "--ap", "p", "--formula", "sF p", "--word", "{p}"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (1, "false\n"));
    let out = run(&["eval", "--ap", "p", "--formula", "G p", "--expr", "{p}^w"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn classify_reports_violated_fragment() {
    let out = run(&["classify", "--ops", "F,&"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "does not admit; violated fragment {F,∧}\n");
    let out = run(&["classify", "--ops", "sF,X,&,true"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("admits"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["characterize", "--ap", "p", "--formula", "p U"])), 2);
    assert_eq!(code(&run(&["characterize", "--ap", "p", "--formula", "q"])), 2);
    assert_eq!(code(&run(&["characterize", "--ap", "p", "--formula", "p", "--fragment", "bogus"])), 2);
    assert_eq!(code(&run(&["characterize", "--ap", "p", "--formula", "X p"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn budget_refusal_exits_three() {
    let out = run(&["characterize", "--ap", "p,q,r", "--formula", EX62, "--budget", "10"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("doubly exponentially"));
}

#[test]
fn paper_dual_variant_is_refuted() {
    let dir = tempfile::tempdir().unwrap();
    for (variant, expected) in [("corrected", 0), ("paper", 1)] {
        let sample = dir.path().join(format!("{variant}.sample"));
        let s = path_str(&sample);
        assert_eq!(code(&run(&["characterize", "--ap", "p", "--formula", "p", "--dual-variant", variant, "--out", s])), 0);
        let v = run(&["verify-unique", "--formula", "p", "--sample", s, "--fragment", "monotone"]);
        assert_eq!(code(&v), expected, "{variant}: {}", stdout(&v));
    }
}

#[test]
fn adversary_and_teacher() {
    let dir = tempfile::tempdir().unwrap();
    let sample = dir.path().join("x.sample");
    fs::write(&sample, "ap: p q\n+ word {p}\n- word {}\n").unwrap();
    let out = run(&["adversary", "--family", "x-or", "--sample", path_str(&sample)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("psi: p | X X p\n"));
    let taught = dir.path().join("t.sample");
    let t = path_str(&taught);
    assert_eq!(code(&run(&["teach", "--ap", "p,q", "--formula", "sF p & sF q", "--ops", "sF,&,|", "--out", t])), 0);
    let learned = run(&["learn", "--sample", t, "--ops", "sF,&,|", "--max-size", "5"]);
    assert_eq!((code(&learned), stdout(&learned).as_str()), (0, "sF p & sF q\n"));
}

#[test]
fn oracle_and_size_report() {
    let out = run(&["oracle", "--ap", "p,q", "--formula", "sF p & sF q"]);
    assert_eq!(code(&out), 0);
    let out = run(&["size-report", "--ap", "p,q", "--formula", "sF p & sF q"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("max positive length 3\n"));
}

#[test]
fn finite_fragment_characterization() {
    let out = run(&["characterize", "--ap", "p", "--formula", "X X p", "--fragment", "finite:X,!"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("+ word {}.{}.{p}\n"));
}
