use std::path::Path;

use super::{read_tree, Tree, WeightVector};
use crate::{Error, Result};

/// Path `1 - 2 - ... - (k+1)`.
pub fn make_path(k: usize) -> Result<Tree> {
    if k == 0 {
        return Err(Error::param("a path needs at least one edge"));
    }
    Tree::new(k + 1, (1..=k).map(|i| (i, i + 1)).collect())
}

/// Star with center 1 and leaves `2..=k+1`.
pub fn make_star(k: usize) -> Result<Tree> {
    if k == 0 {
        return Err(Error::param("a star needs at least one edge"));
    }
    Tree::new(k + 1, (2..=k + 1).map(|i| (1, i)).collect())
}

/// Perfect binary tree of height `h` in heap numbering: vertex `i` has
/// children `2i` and `2i + 1`. It has `2^(h+1) - 1` vertices.
pub fn make_perfect_binary(h: u32) -> Result<Tree> {
    if h > 20 {
        return Err(Error::param(format!("height {h} is too large")));
    }
    let n = (1usize << (h + 1)) - 1;
    Tree::new(n, (2..=n).map(|c| (c / 2, c)).collect())
}

/// Resolves a tree argument: `builtin:path:K`, `builtin:star:K`,
/// `builtin:binary:H`, or a path to a `.tree` file (whose weights, if any,
/// are returned too).
pub fn parse_builtin(spec: &str) -> Result<(Tree, Option<WeightVector>)> {
    if let Some(rest) = spec.strip_prefix("builtin:") {
        let (kind, size) = rest
            .split_once(':')
            .ok_or_else(|| Error::param(format!("malformed builtin tree `{spec}`")))?;
        let size: usize = size
            .parse()
            .map_err(|_| Error::param(format!("invalid size in `{spec}`")))?;
        let tree = match kind {
            "path" => make_path(size)?,
            "star" => make_star(size)?,
            "binary" => make_perfect_binary(u32::try_from(size).map_err(|_| Error::param("height too large"))?)?,
            other => return Err(Error::param(format!("unknown builtin tree `{other}`"))),
        };
        return Ok((tree, None));
    }
    let file = std::fs::File::open(Path::new(spec))?;
    read_tree(std::io::BufReader::new(file))
}
