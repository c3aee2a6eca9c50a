//! Pigeonhole descent through level sets of dot products in `R^3`.

use std::fmt::Write;

use dot_trees::counting::hyperplane_descent;
use dot_trees::sampling::integer_grid;
use dot_trees::Result;

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    for side in [3, 4] {
        let cube = integer_grid(3, side, 1)?;
        let trace = hyperplane_descent(&cube)?;
        writeln!(out, "{side}^3 cube, {} points:", cube.len()).unwrap();
        for l in &trace.levels {
            writeln!(
                out,
                "  pin {} t={} keep x.{} = {}: {} -> {} points",
                l.pin, l.t, l.pin, l.alpha, l.before, l.remaining
            )
            .unwrap();
        }
        writeln!(
            out,
            "  final flat: {} points, affine dim {}, planar pinned {}, whole-set pinned {}",
            trace.final_points.len(),
            trace.final_affine_dim,
            trace.planar_pinned,
            trace.final_count
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
