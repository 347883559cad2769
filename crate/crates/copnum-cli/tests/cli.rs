//! End-to-end binary tests: exit codes, stable output keys, and the
//! construct → verify round trip, all through the real executable.

use std::path::Path;
use std::process::{Command, Output};

fn copnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copnum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn copnum_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_copnum"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn solve_named_graphs() {
    let o = copnum(&["solve", "heawood"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("cop_number: 3"), "{out}");
    assert!(out.contains("n: 14"), "{out}");

    let o = copnum(&["solve", "cycle-7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("cop_number: 2"));
}

#[test]
fn solve_reads_edge_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("square.edges");
    std::fs::write(&file, "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = copnum(&["solve", file.to_str().unwrap()]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("cop_number: 2"));
}

#[test]
fn parse_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("junk.edges");
    std::fs::write(&file, "this is not a graph\n").unwrap();
    let o = copnum(&["solve", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error (parse"), "{}", stderr(&o));

    let o = copnum(&["solve", "no-such-graph"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn preconditions_exit_3() {
    // Heawood has diameter 3, so the diameter-2 check refuses it.
    let o = copnum(&["verify", "diam2", "heawood"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error (precondition"), "{}", stderr(&o));
}

#[test]
fn exhausted_budgets_exit_4() {
    let o = copnum(&["solve", "petersen", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).starts_with("error (budget"), "{}", stderr(&o));
}

#[test]
fn budget_env_var_is_honored_and_flag_wins() {
    let o = Command::new(env!("CARGO_BIN_EXE_copnum"))
        .args(["solve", "petersen"])
        .env("COPNUM_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4), "env budget should starve the solve");

    let o = Command::new(env!("CARGO_BIN_EXE_copnum"))
        .args(["solve", "petersen", "--budget", "50000000"])
        .env("COPNUM_BUDGET", "100")
        .output()
        .unwrap();
    assert!(o.status.success(), "flag must override the environment");
    assert!(stdout(&o).contains("cop_number: 3"));
}

#[test]
fn failed_checks_exit_5() {
    let dir = tempfile::tempdir().unwrap();
    let o = copnum_in(dir.path(), &["construct", "ag", "--q", "2"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    let structure = dir.path().join("ag-q2.structure");
    assert!(structure.exists());

    // An affine plane is not a projective plane.
    let o = copnum(&["verify", "axioms", structure.to_str().unwrap(), "--expect", "projective"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stdout(&o).contains("result: FAIL"), "{}", stdout(&o));

    let o = copnum(&["verify", "axioms", structure.to_str().unwrap(), "--expect", "affine"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("result: PASS"));
}

#[test]
fn construct_writes_edge_and_structure_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = copnum_in(dir.path(), &["construct", "pg", "--q", "2"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    let edges = std::fs::read_to_string(dir.path().join("pg-q2.edges")).unwrap();
    let g = copnum::Graph::parse(&edges).unwrap();
    assert_eq!(g.n(), 14);
    assert!(dir.path().join("pg-q2.structure").exists());

    let o = copnum_in(dir.path(), &["construct", "witness", "--n", "72"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("guaranteed_lower_bound: 6"), "{}", stdout(&o));
    let edges = std::fs::read_to_string(dir.path().join("witness-n72.edges")).unwrap();
    assert_eq!(copnum::Graph::parse(&edges).unwrap().n(), 72);
}

#[test]
fn verification_checks_pass_on_good_inputs() {
    let o = copnum(&["verify", "mindeg", "petersen"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("result: PASS"));

    let o = copnum(&["verify", "guard", "cycle-6", "--path", "0,1,2,3"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("result: PASS"));

    let o = copnum(&["verify", "strategy", "--kind", "parallel-class", "--q", "3"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("result: PASS"));

    let o = copnum(&["verify", "frankl", "petersen"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("result: PASS"), "{out}");
    assert!(out.contains("frankl_bound:"), "{out}");
}

#[test]
fn simulate_reports_captures_and_escapes() {
    let o = copnum(&["simulate", "cycle-4", "--cops", "2"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("captured: true"));

    let o = copnum(&["simulate", "cycle-4", "--cops", "1", "--max-rounds", "16"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    assert!(stdout(&o).contains("captured: false"));

    let o = copnum(&["simulate", "cycle-5", "--cops", "2", "--trace"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("state[0]:"), "{out}");
    assert!(out.contains("captured: true"), "{out}");
}

#[test]
fn random_experiments_summarize() {
    let o = copnum(&["random", "--n", "6", "--p", "0.9", "--trials", "3", "--seed", "1"]);
    assert!(o.status.success(), "stderr: {}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("violations: 0"), "{out}");
    assert!(out.contains("trial: 0"), "{out}");
    assert!(out.contains("benchmark:"), "{out}");

    let o = copnum(&["random", "--n", "6", "--p", "1.5", "--trials", "1"]);
    assert_eq!(o.status.code(), Some(3), "p outside [0,1] is a precondition error");
}
