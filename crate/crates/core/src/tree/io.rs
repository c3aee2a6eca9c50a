//! The `.tree` text format: a `k <num_edges>` header, then one `i j [w]`
//! line per edge. `#` starts a comment line.

use std::io::{BufRead, Write};

use super::{Tree, WeightVector};
use crate::{Error, Result, Scalar};

/// Reads a tree and its optional weights. Edges are re-sorted into canonical
/// order and the weights are permuted along with them. Weights must be
/// given on every edge or on none.
pub fn read_tree<R: BufRead>(reader: R) -> Result<(Tree, Option<WeightVector>)> {
    let mut k: Option<usize> = None;
    let mut edges = Vec::new();
    let mut weights: Vec<Option<Scalar>> = Vec::new();
    let mut header_line = 1;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = text.split_whitespace().collect();
        if k.is_none() {
            match parts.as_slice() {
                ["k", v] => {
                    k = Some(
                        v.parse()
                            .map_err(|_| Error::parse(lineno, format!("invalid edge count `{v}`")))?,
                    );
                    header_line = lineno;
                }
                _ => return Err(Error::parse(lineno, "expected header `k <num_edges>`")),
            }
            continue;
        }
        let vertex = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| Error::parse(lineno, format!("invalid vertex `{tok}`")))
        };
        let (i, j, w) = match parts.as_slice() {
            [i, j] => (vertex(i)?, vertex(j)?, None),
            [i, j, w] => (
                vertex(i)?,
                vertex(j)?,
                Some(w.parse::<Scalar>().map_err(|e| Error::parse(lineno, e.to_string()))?),
            ),
            _ => return Err(Error::parse(lineno, "expected `i j [w]`")),
        };
        edges.push((i, j));
        weights.push(w);
    }

    let k = k.ok_or_else(|| Error::parse(1, "missing header `k <num_edges>`"))?;
    if edges.len() != k {
        return Err(Error::parse(
            header_line,
            format!("header declares {k} edges but {} were given", edges.len()),
        ));
    }
    let (tree, perm) = Tree::with_permutation(k + 1, edges)?;

    let weighted = weights.iter().filter(|w| w.is_some()).count();
    let weights = if weighted == 0 {
        None
    } else if weighted == k {
        Some(WeightVector::new(
            perm.iter().map(|&i| weights[i].clone().unwrap()).collect(),
        ))
    } else {
        return Err(Error::InvalidTree("weights must be given for all edges or none".into()));
    };
    Ok((tree, weights))
}

pub fn write_tree<W: Write>(tree: &Tree, weights: Option<&WeightVector>, mut out: W) -> Result<()> {
    if let Some(w) = weights {
        if w.len() != tree.num_edges() {
            return Err(Error::param("weight count does not match edge count"));
        }
    }
    writeln!(out, "k {}", tree.num_edges())?;
    for (j, (a, b)) in tree.edges().iter().enumerate() {
        match weights {
            Some(w) => writeln!(out, "{a} {b} {}", w.weights()[j])?,
            None => writeln!(out, "{a} {b}")?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::make_path;

    fn read(text: &str) -> Result<(Tree, Option<WeightVector>)> {
        read_tree(text.as_bytes())
    }

    fn write(tree: &Tree, w: Option<&WeightVector>) -> String {
        let mut out = Vec::new();
        write_tree(tree, w, &mut out).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn weighted_path() {
        let (t, w) = read("k 2\n1 2 2\n2 3 6").unwrap();
        assert_eq!(t, make_path(2).unwrap());
        assert_eq!(w, Some(WeightVector::from_ints(&[2, 6])));

        let swapped = read("k 2\n2 3 6\n1 2 2").unwrap();
        assert_eq!(swapped, (t.clone(), w.clone()));
        assert_eq!(write(&t, w.as_ref()), "k 2\n1 2 2\n2 3 6\n");
    }

    #[test]
    fn errors() {
        assert!(read("k 2\n1 2\n3 4").is_err());
        assert!(read("k 2\n1 2\n1 2").is_err());
        assert!(read("k 3\n1 2\n3 4\n").is_err());
        assert!(read("k 2\n1 2 5\n2 3\n").is_err());
        assert!(read("2\n1 2\n").is_err());
        assert!(matches!(read("k 1\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(read("k 1\n1 2 1/0\n").is_err());
    }

    #[test]
    fn unweighted_with_comments() {
        let (t, w) = read("# star\nk 3\n1 4\n# mid\n1 2\n1 3\n").unwrap();
        assert!(w.is_none());
        assert_eq!(write(&t, None), "k 3\n1 2\n1 3\n1 4\n");
    }
}
