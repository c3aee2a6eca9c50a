//! Pigeonhole descent through level sets of dot products.
//!
//! Starting from a point set in `R^d`, each level picks the pin with the
//! most distinct dot products against the current points, then keeps only
//! the heaviest level set `{y : x·y = α}`, which lies in a hyperplane. The
//! descent stops once the remaining points span an affine flat of
//! dimension at most two.
//!
//! Level sets partition the current points completely, so the zero level
//! set is a candidate like any other and `t_i` counts it when it occurs.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::{dot, Error, Point, PointSet, Result, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentLevel {
    /// index of the pin in the input set
    pub pin_index: usize,
    pub pin: Point,
    /// affine dimension of the points before this level
    pub affine_dim: usize,
    /// points before this level
    pub before: usize,
    /// number of level sets of the pin over the current points
    pub t: usize,
    /// value of the kept level set
    pub alpha: Scalar,
    /// points in the kept level set
    pub remaining: usize,
}

impl DescentLevel {
    /// `remaining ≥ before / t`, checked exactly.
    pub fn pigeonhole_holds(&self) -> bool {
        self.remaining * self.t >= self.before
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescentTrace {
    pub dim: usize,
    pub n: usize,
    pub levels: Vec<DescentLevel>,
    /// input indices of the points left in the final flat
    pub final_points: Vec<usize>,
    /// affine dimension of the final flat
    pub final_affine_dim: usize,
    /// largest number of level sets of a pin inside the final flat
    pub planar_pinned: usize,
    /// `max_{x ∈ E} |{x·y : y ∈ E}|` over the whole input, all values counted
    pub final_count: usize,
}

impl DescentTrace {
    /// The whole-set pinned count dominates every `t_i` and the planar count.
    pub fn final_dominates_trace(&self) -> bool {
        self.levels.iter().all(|l| self.final_count >= l.t) && self.final_count >= self.planar_pinned
    }

    /// `n / Π t_i`, the pigeonhole lower bound on the size of the final flat.
    pub fn pigeonhole_floor(&self) -> Scalar {
        let product: usize = self.levels.iter().map(|l| l.t).product();
        Scalar::new(self.n, product)
    }
}

/// Dimension of the affine hull of `points` (0 for a single point), by exact
/// Gaussian elimination on the differences to the first point.
pub fn affine_dimension(points: &[&Point]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let d = first.dim();
    let mut rows: Vec<Vec<Scalar>> = points[1..]
        .iter()
        .map(|p| (0..d).map(|i| p.coord(i) - first.coord(i)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..d {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &(&factor * p);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Level sets of `pin` over `current`, keyed by value; members keep input order.
fn level_sets(points: &PointSet, pin: usize, current: &[usize]) -> BTreeMap<Scalar, Vec<usize>> {
    let x = points.get(pin);
    let mut sets: BTreeMap<Scalar, Vec<usize>> = BTreeMap::new();
    for &y in current {
        let v = dot(x, points.get(y)).expect("points share the set dimension");
        sets.entry(v).or_default().push(y);
    }
    sets
}

/// The pin in `current` with the most level sets, ties to the lowest index.
fn best_pin(points: &PointSet, current: &[usize]) -> Option<(usize, BTreeMap<Scalar, Vec<usize>>)> {
    let mut best: Option<(usize, BTreeMap<Scalar, Vec<usize>>)> = None;
    for &x in current {
        if points.get(x).is_origin() {
            continue;
        }
        let sets = level_sets(points, x, current);
        if best.as_ref().is_none_or(|(_, b)| sets.len() > b.len()) {
            best = Some((x, sets));
        }
    }
    best
}

pub fn hyperplane_descent(points: &PointSet) -> Result<DescentTrace> {
    let d = points.dim();
    if d < 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: d });
    }
    if points.len() < d {
        return Err(Error::param(format!(
            "hyperplane descent needs at least {d} points, got {}",
            points.len()
        )));
    }
    let hull = |idx: &[usize]| affine_dimension(&idx.iter().map(|&i| points.get(i)).collect::<Vec<_>>());

    let mut current: Vec<usize> = (0..points.len()).collect();
    let mut levels = Vec::new();
    let mut dim = hull(&current);
    while dim > 2 {
        let Some((pin, sets)) = best_pin(points, &current) else {
            break;
        };
        // heaviest level set; ties go to the set holding the lowest index
        let (alpha, kept) = sets
            .iter()
            .max_by(|(_, a), (_, b)| a.len().cmp(&b.len()).then(b[0].cmp(&a[0])))
            .map(|(v, s)| (v.clone(), s.clone()))
            .expect("a nonempty set has a level set");
        levels.push(DescentLevel {
            pin_index: pin,
            pin: points.get(pin).clone(),
            affine_dim: dim,
            before: current.len(),
            t: sets.len(),
            alpha,
            remaining: kept.len(),
        });
        current = kept;
        dim = hull(&current);
    }

    let planar_pinned = current
        .iter()
        .filter(|&&x| !points.get(x).is_origin())
        .map(|&x| level_sets(points, x, &current).len())
        .max()
        .unwrap_or(0);
    let all: Vec<usize> = (0..points.len()).collect();
    let final_count = all
        .iter()
        .filter(|&&x| !points.get(x).is_origin())
        .map(|&x| level_sets(points, x, &all).len())
        .max()
        .unwrap_or(0);
    Ok(DescentTrace {
        dim: d,
        n: points.len(),
        levels,
        final_points: current,
        final_affine_dim: dim,
        planar_pinned,
        final_count,
    })
}
