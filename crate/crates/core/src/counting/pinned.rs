use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::{CountOptions, DotProductIndex};
use crate::{dot, Error, Point, PointSet, Result, Scalar};

/// `Π_p(E) = {p·q : q ∈ E}`; zero is dropped unless `include_zero`.
pub fn pinned_set(pin: &Point, points: &PointSet, opts: &CountOptions) -> Result<BTreeSet<Scalar>> {
    if pin.is_origin() {
        return Err(Error::Origin("a pin"));
    }
    let mut out = BTreeSet::new();
    for q in points {
        let v = dot(pin, q)?;
        if opts.include_zero || !v.is_zero() {
            out.insert(v);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DotProductStats {
    /// Distinct counted values over ordered pairs of distinct points.
    pub distinct: usize,
    /// Largest number of ordered pairs sharing one counted value.
    pub max_multiplicity: usize,
    /// A value attaining `max_multiplicity` (the smallest such).
    pub most_common: Option<Scalar>,
    /// Ordered pairs of distinct points with product zero.
    pub zero_pairs: usize,
    /// Pairs per counted value.
    pub multiplicities: BTreeMap<Scalar, usize>,
}

/// Distinct dot products over ordered pairs `(p, q)`, `p ≠ q`.
pub fn distinct_dot_products(points: &PointSet, opts: &CountOptions) -> DotProductStats {
    let index = DotProductIndex::square(points, true);
    let n = points.len();
    let mut counts = vec![0usize; index.values().len()];
    for i in 0..n {
        for (j, &v) in index.row(i).iter().enumerate() {
            if i != j {
                counts[v as usize] += 1;
            }
        }
    }
    let zero_id = index.zero_id();
    let zero_pairs = zero_id.map_or(0, |z| counts[z as usize]);
    let multiplicities: BTreeMap<Scalar, usize> = counts
        .iter()
        .enumerate()
        .filter(|&(id, &c)| c > 0 && (opts.include_zero || Some(id as u32) != zero_id))
        .map(|(id, &c)| (index.value(id as u32).clone(), c))
        .collect();
    let (most_common, max_multiplicity) =
        multiplicities.iter().fold(
            (None, 0),
            |(best, m), (v, &c)| if c > m { (Some(v.clone()), c) } else { (best, m) },
        );
    DotProductStats {
        distinct: multiplicities.len(),
        max_multiplicity,
        most_common,
        zero_pairs,
        multiplicities,
    }
}

/// Number of ordered pairs `(e, f)` with `e·f = value`.
pub fn pair_multiplicity(e: &PointSet, f: &PointSet, value: &Scalar) -> Result<usize> {
    let index = DotProductIndex::new(e, f, true)?;
    Ok(index.pairs(value).len())
}

/// Pinned set sizes `|Π_x(E)|` for every point, in point order.
pub fn pinned_sizes(points: &PointSet, opts: &CountOptions) -> Vec<usize> {
    let index = DotProductIndex::square(points, opts.include_zero);
    (0..points.len())
        .into_par_iter()
        .map(|i| index.row_distinct(i))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxPinned {
    pub index: usize,
    pub point: Point,
    pub count: usize,
}

/// The pin with the largest pinned set; ties go to the lowest index.
pub fn max_pinned(points: &PointSet, opts: &CountOptions) -> Result<MaxPinned> {
    if points.len() < 2 {
        return Err(Error::param("max_pinned needs at least two points"));
    }
    let sizes = pinned_sizes(points, opts);
    let (index, count) = sizes
        .iter()
        .enumerate()
        .fold((0, 0), |(bi, bc), (i, &c)| if c > bc { (i, c) } else { (bi, bc) });
    Ok(MaxPinned {
        index,
        point: points.get(index).clone(),
        count,
    })
}

/// `AB = {ab : a ∈ A, b ∈ B}`.
pub fn product_set(a: &BTreeSet<Scalar>, b: &BTreeSet<Scalar>) -> BTreeSet<Scalar> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}
