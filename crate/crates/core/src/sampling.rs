//! Deterministic point-set generators for experiments and property checks.
//!
//! Random sets use `ChaCha8Rng` seeded with [`rand::SeedableRng::seed_from_u64`],
//! so a seed fixes the output on every platform.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Point, PointSet, Result};

/// The grid `{start, …, start + side − 1}^d`, in lexicographic order.
pub fn integer_grid(d: usize, side: usize, start: i64) -> Result<PointSet> {
    if side == 0 {
        return Err(Error::param("grid side must be positive"));
    }
    let mut points: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..d {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..side as i64).map(move |i| {
                    let mut p = p.clone();
                    p.push(start + i);
                    p
                })
            })
            .collect();
    }
    PointSet::new(d, points.iter().map(|c| Point::from_ints(c)).collect())
}

/// `n` distinct non-origin points with integer coordinates drawn uniformly
/// from `[-half_width, half_width]^d`.
pub fn random_integer_set(d: usize, n: usize, half_width: i64, seed: u64) -> Result<PointSet> {
    if half_width < 1 {
        return Err(Error::param("half width must be at least 1"));
    }
    let side = 2 * half_width as u128 + 1;
    let capacity = u32::try_from(d)
        .ok()
        .and_then(|e| side.checked_pow(e))
        .map_or(u128::MAX, |c| c - 1);
    if n as u128 > capacity {
        return Err(Error::param(format!(
            "cannot draw {n} distinct non-origin points from a box of half width {half_width} in dimension {d}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut points = Vec::with_capacity(n);
    while points.len() < n {
        let c: Vec<i64> = (0..d).map(|_| rng.random_range(-half_width..=half_width)).collect();
        if c.iter().all(|&x| x == 0) || !seen.insert(c.clone()) {
            continue;
        }
        points.push(Point::from_ints(&c));
    }
    PointSet::new(d, points)
}
