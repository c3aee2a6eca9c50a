//! The command-line interface driven in-process.

use std::fs;
use std::path::Path;

use dot_trees::cli;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        std::iter::once("dot-trees").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn generate_then_count_the_column_construction() {
    let dir = tempfile::tempdir().unwrap();
    let pts = path(dir.path(), "out.pts");
    let r = run(&[
        "generate",
        "--construction",
        "kms",
        "--tree",
        "builtin:path:2",
        "--n",
        "9",
        "-o",
        &pts,
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let text = fs::read_to_string(&pts).unwrap();
    assert_eq!(
        text.lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with('d'))
            .count(),
        9
    );
    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(path(dir.path(), "out.json")).unwrap()).unwrap();
    assert_eq!(sidecar["predicted_count"], "16");

    let r = run(&[
        "count",
        "--tree",
        "builtin:path:2",
        "--weights",
        "2,6",
        "--points",
        &pts,
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout.trim(), "16");
}

#[test]
fn usage_and_input_errors_exit_two() {
    let r = run(&["generate", "--construction", "kms", "--tree", "builtin:path:2"]);
    assert_eq!(r.code, 2);
    assert!(!r.stderr.is_empty());
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(
        run(&[
            "count",
            "--tree",
            "builtin:path:2",
            "--weights",
            "2,6",
            "--points",
            "/nonexistent.pts"
        ])
        .code,
        2
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.pts");
    fs::write(&bad, "d 2\n1 0\n1 0\n").unwrap();
    let r = run(&["radial", "--points", &bad]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("duplicate"), "{}", r.stderr);
    let r = run(&["count", "--tree", "builtin:path:2", "--weights", "2", "--points", &bad]);
    assert_eq!(r.code, 2);
}

#[test]
fn failed_checks_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let pts = path(dir.path(), "line.pts");
    let line: String = (1..=30).map(|x| format!("{x} {x}\n")).collect();
    fs::write(&pts, format!("d 2\n{line}")).unwrap();
    // thirty points on one radial line exceed 30^{2/3} for C = 1
    assert_eq!(run(&["radial", "--points", &pts, "--check"]).code, 1);
    assert_eq!(run(&["radial", "--points", &pts]).code, 0);
    assert_eq!(run(&["radial", "--points", &pts, "--check", "--c", "10"]).code, 0);
}

#[test]
fn every_subcommand_runs() {
    let dir = tempfile::tempdir().unwrap();
    let grid = path(dir.path(), "grid.pts");
    let lattice = path(dir.path(), "lattice.pts");
    let cases: Vec<Vec<String>> = vec![
        vec![
            "generate",
            "--construction",
            "grid",
            "--d",
            "2",
            "--side",
            "5",
            "--start",
            "1",
            "-o",
            &grid,
        ],
        vec![
            "generate",
            "--construction",
            "lattice",
            "--d",
            "2",
            "--q",
            "3",
            "--mode",
            "calibrated",
            "-o",
            &lattice,
        ],
        vec!["distinct", "--points", &grid],
        vec!["distinct", "--points", &grid, "--tree", "builtin:path:2"],
        vec!["pinned", "--points", &grid],
        vec!["incidence", "--points", &grid, "--pins", &grid, "--alpha", "5"],
        vec!["radial", "--points", &grid],
        vec!["proofgraph", "--points", &grid, "--check"],
        vec![
            "report",
            "--experiment",
            "kms",
            "--tree",
            "builtin:path:3",
            "--n",
            "16,32,64",
        ],
        vec!["report", "--experiment", "lattice", "--d", "2", "--q", "4,5,6"],
    ]
    .into_iter()
    .map(|c| c.into_iter().map(str::to_string).collect())
    .collect();
    for case in &cases {
        let args: Vec<&str> = case.iter().map(String::as_str).collect();
        let r = run(&args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        assert!(!r.stdout.is_empty(), "{args:?}");
    }
    assert!(Path::new(&lattice).exists());
    assert!(Path::new(&path(dir.path(), "lattice.dual.pts")).exists());
}

#[test]
fn outputs_are_identical_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for threads in ["1", "4"] {
        let pts = path(dir.path(), &format!("random{threads}.pts"));
        let json = path(dir.path(), &format!("report{threads}.json"));
        let g = run(&[
            "--threads",
            threads,
            "--seed",
            "9",
            "generate",
            "--construction",
            "random",
            "--n",
            "40",
            "--half-width",
            "6",
            "-o",
            &pts,
        ]);
        assert_eq!(g.code, 0, "{}", g.stderr);
        let d = run(&[
            "--threads",
            threads,
            "--json",
            &json,
            "distinct",
            "--points",
            &pts,
            "--tree",
            "builtin:path:2",
        ]);
        assert_eq!(d.code, 0, "{}", d.stderr);
        let p = run(&["--threads", threads, "pinned", "--points", &pts]);
        outputs.push((
            fs::read(&pts).unwrap(),
            fs::read(path(dir.path(), &format!("random{threads}.json"))).unwrap(),
            fs::read(&json).unwrap(),
            g.stdout.replace(&pts, ""),
            d.stdout,
            p.stdout,
        ));
    }
    assert!(outputs[0] == outputs[1]);
}

#[test]
fn random_generation_needs_a_seed() {
    let dir = tempfile::tempdir().unwrap();
    let pts = path(dir.path(), "r.pts");
    let r = run(&["generate", "--construction", "random", "--n", "10", "-o", &pts]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("seed"), "{}", r.stderr);
}

#[test]
fn verify_passes() {
    let r = run(&["verify"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("10/10 criteria passed"));
}
