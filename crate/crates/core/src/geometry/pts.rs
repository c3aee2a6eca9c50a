//! The `.pts` text format: a `d <dim>` header followed by one point per line.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::{Point, PointSet, Scalar};
use crate::{Error, Result};

/// Reads a point set. Blank lines and lines starting with `#` are skipped.
/// Fractions are reduced on load; duplicates are rejected with the line
/// number of the second occurrence.
pub fn read_point_set<R: BufRead>(reader: R) -> Result<PointSet> {
    let mut dim: Option<usize> = None;
    let mut points = Vec::new();
    let mut first_seen: HashMap<Point, usize> = HashMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let Some(d) = dim else {
            let mut parts = text.split_whitespace();
            let value = match (parts.next(), parts.next(), parts.next()) {
                (Some("d"), Some(v), None) => v,
                _ => return Err(Error::parse(lineno, "expected header `d <dim>`")),
            };
            let d: usize = value
                .parse()
                .map_err(|_| Error::parse(lineno, format!("invalid dimension `{value}`")))?;
            if d < 2 {
                return Err(Error::parse(lineno, "dimension must be at least 2"));
            }
            dim = Some(d);
            continue;
        };

        let coords = text
            .split_whitespace()
            .map(|tok| tok.parse::<Scalar>().map_err(|e| Error::parse(lineno, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        if coords.len() != d {
            return Err(Error::parse(
                lineno,
                format!("expected {d} coordinates, found {}", coords.len()),
            ));
        }
        let p = Point::new(coords);
        if let Some(prev) = first_seen.get(&p) {
            return Err(Error::parse(
                lineno,
                format!("duplicate point {p} (first seen on line {prev})"),
            ));
        }
        first_seen.insert(p.clone(), lineno);
        points.push(p);
    }

    let dim = dim.ok_or_else(|| Error::parse(1, "missing header `d <dim>`"))?;
    PointSet::new(dim, points)
}

pub fn write_point_set<W: Write>(set: &PointSet, mut out: W) -> Result<()> {
    writeln!(out, "d {}", set.dim())?;
    for p in set {
        let line: Vec<String> = p.coords().iter().map(ToString::to_string).collect();
        writeln!(out, "{}", line.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn read(text: &str) -> Result<PointSet> {
        read_point_set(text.as_bytes())
    }

    #[test]
    fn reads_examples() {
        let set = read("d 2\n1 0\n2 0").unwrap();
        assert_eq!(set.dim(), 2);
        assert_eq!(set.points(), &[Point::from_ints(&[1, 0]), Point::from_ints(&[2, 0])]);

        let set = read("d 2\n3/4 5/16").unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set.get(0).coord(1), &"5/16".parse::<Scalar>().unwrap());
    }

    #[test]
    fn duplicate_is_reported_with_line() {
        match read("d 2\n1 0\n1 0") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("duplicate"));
            }
            other => panic!("unexpected {other:?}"),
        }
        // unreduced input still collides with its reduced form
        assert!(read("d 2\n1/2 0\n2/4 0").is_err());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(read("1 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read("d 2\n1 0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read("d 2\n# c\n1 x\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(read("d 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn writes_reduced() {
        let set = read("# header comment\nd 3\n\n2/4 -6/3 0\n").unwrap();
        let mut out = Vec::new();
        write_point_set(&set, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "d 3\n1/2 -2 0\n");
    }
}
