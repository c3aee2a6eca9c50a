//! Exact scalars, dot products, alpha-lines, radial directions, and the
//! `.pts` format.

use std::fmt::Write;

use dot_trees::geometry::{alpha_hyperplane, radial_direction, read_point_set, write_point_set};
use dot_trees::{dot, Point, PointSet, Result, Scalar};

pub fn run_example() -> Result<String> {
    let mut out = String::new();
    let s = |t: &str| t.parse::<Scalar>().expect("literal");

    let p = Point::new(vec![s("3/4"), s("5/16")]);
    let q = Point::new(vec![s("4"), s("8/5")]);
    writeln!(out, "{p} . {q} = {}", dot(&p, &q)?).unwrap();

    let line = alpha_hyperplane(&Point::from_ints(&[1, 1]), Scalar::from(1))?;
    for x in [
        Point::from_ints(&[1, 0]),
        Point::from_ints(&[0, 1]),
        Point::from_ints(&[1, 1]),
    ] {
        writeln!(out, "{x} on x + y = 1: {}", line.contains(&x)?).unwrap();
    }

    for x in [
        Point::from_ints(&[2, 0]),
        Point::from_ints(&[3, 3]),
        Point::from_ints(&[-4, -6]),
    ] {
        writeln!(out, "radial direction of {x}: {}", radial_direction(&x)?).unwrap();
    }

    let set = read_point_set("d 2\n# unreduced input\n6/8 5/16\n-2 4\n".as_bytes())?;
    let mut text = Vec::new();
    write_point_set(&set, &mut text)?;
    let back: PointSet = read_point_set(text.as_slice())?;
    write!(out, "{}", String::from_utf8(text).expect("utf-8")).unwrap();
    writeln!(out, "round trip identical: {}", back == set).unwrap();

    match read_point_set("d 2\n1 0\n1 0\n".as_bytes()) {
        Err(e) => writeln!(out, "duplicate rejected: {e}").unwrap(),
        Ok(_) => writeln!(out, "duplicate accepted").unwrap(),
    }
    Ok(out)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
