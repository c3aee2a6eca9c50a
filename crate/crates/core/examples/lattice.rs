//! The lattice `E` and its dual set `F` with many unit dot products.

use std::fmt::Write;

use dot_trees::constructions::{build_is_lattice, LatticeMode, LatticeSpec};
use dot_trees::counting::pair_multiplicity;
use dot_trees::{Result, Scalar};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let paper = build_is_lattice(LatticeSpec {
        d: 2,
        q: 2,
        mode: LatticeMode::Paper,
    })?;
    writeln!(out, "A = {:?}", paper.a).unwrap();
    writeln!(out, "B = {:?}", paper.b).unwrap();
    writeln!(
        out,
        "paper mode: |E| = {}, unit pairs = {}",
        paper.e.len(),
        paper.unit_pairs
    )
    .unwrap();

    for q in 4..=6 {
        let l = build_is_lattice(LatticeSpec {
            d: 2,
            q,
            mode: LatticeMode::Calibrated,
        })?;
        let pairs = pair_multiplicity(&l.e, &l.f, &Scalar::one())?;
        writeln!(
            out,
            "calibrated q={q}: window starts at {:?}/{}, {} of {} hyperplanes populated, {pairs} unit pairs",
            l.window_start,
            4 * q * q,
            l.populated_hyperplanes(),
            l.f.len()
        )
        .unwrap();
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
