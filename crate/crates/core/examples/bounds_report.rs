//! Exponent formulas, a log-log fit, and a comparison report for the column
//! construction on the 3-path.

use std::fmt::Write;

use dot_trees::bounds::{compare_report, kms, lattice, loglog_fit, main2_exponent, ReportParams, RunRecord};
use dot_trees::constructions::build_kms_columns;
use dot_trees::counting::{count_embeddings, CountOptions};
use dot_trees::tree::make_path;
use dot_trees::{Result, Scalar, WeightedTree};
use num_bigint::BigUint;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for (k, d) in [(2, 2), (6, 2), (4, 4)] {
        writeln!(
            out,
            "k={k} d={d}: lattice {}, columns {}, max {}",
            lattice(k, d)?,
            kms(k)?,
            main2_exponent(k, d)?
        )
        .unwrap();
    }

    let tree = make_path(3)?;
    let mut records = Vec::new();
    for n in [16u64, 32, 64, 128] {
        let built = build_kms_columns(&tree, n as usize)?;
        let wt = WeightedTree::new(tree.clone(), built.weights.clone())?;
        let count = count_embeddings(&wt, &built.points, &CountOptions::default())?;
        records.push(RunRecord {
            experiment: "kms".into(),
            params: ReportParams {
                k: Some(3),
                d: Some(2),
                n,
                q: None,
                tree: Some("builtin:path:3".into()),
            },
            count: BigUint::from(count),
            predicted: Some(built.predicted_count),
        });
    }
    let series: Vec<(f64, f64)> = records
        .iter()
        .map(|r| (r.params.n as f64, r.count.to_string().parse::<f64>().unwrap_or(0.0)))
        .collect();
    writeln!(out, "fitted slope {:.3}", loglog_fit(&series)?.slope).unwrap();
    let report = compare_report(&records, &kms(3)?, &Scalar::new(1, 8))?;
    write!(out, "{}", report.to_text()).unwrap();
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
