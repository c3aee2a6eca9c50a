//! Driving the command-line interface in-process: generate a column
//! construction, then count it.

use std::fmt::Write;

use dot_trees::cli;
use dot_trees::Result;

pub fn run_example() -> Result<String> {
    let dir = tempfile::tempdir()?;
    let pts = dir.path().join("out.pts");
    let pts = pts.to_str().expect("utf-8 temp path");
    let mut out = String::new();
    for args in [
        vec![
            "generate",
            "--construction",
            "kms",
            "--tree",
            "builtin:path:2",
            "--n",
            "9",
            "-o",
            pts,
        ],
        vec!["count", "--tree", "builtin:path:2", "--weights", "2,6", "--points", pts],
        vec!["radial", "--points", pts],
    ] {
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = cli::run(
            std::iter::once("dot-trees").chain(args.iter().copied()),
            &mut stdout,
            &mut stderr,
        );
        writeln!(out, "$ dot-trees {} (exit {code})", args[0]).unwrap();
        out.push_str(&String::from_utf8_lossy(&stdout));
        out.push_str(&String::from_utf8_lossy(&stderr));
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
