use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::{PointSet, Scalar};

/// All dot products between the points of `E` (rows) and `F` (columns),
/// interned as value ids.
///
/// Coordinates are first scaled to integers by the lcm of their
/// denominators, so products are compared as exact integers and only the
/// distinct values are materialized as [`Scalar`]s. Value ids follow the
/// ascending order of the values, which makes every derived count
/// independent of hashing and thread scheduling.
#[derive(Clone, Debug)]
pub struct DotProductIndex {
    rows: usize,
    cols: usize,
    include_zero: bool,
    values: Vec<Scalar>,
    lookup: HashMap<Scalar, u32>,
    zero_id: Option<u32>,
    matrix: Vec<u32>,
    /// per row: `(value id, column)` sorted, zero products dropped unless included
    row_sorted: Vec<Vec<(u32, u32)>>,
}

enum IntCoords {
    Small(Vec<Vec<i64>>),
    Big(Vec<Vec<BigInt>>),
}

/// Largest magnitude for the i128 fast path: d products of two such values
/// stay far below i128::MAX for any practical dimension.
const SMALL_LIMIT: i64 = 1 << 40;

fn integer_coords(set: &PointSet) -> (IntCoords, BigInt) {
    let lcm = set
        .iter()
        .flat_map(|p| p.coords())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let big: Vec<Vec<BigInt>> = set
        .iter()
        .map(|p| p.coords().iter().map(|c| c.numer() * (&lcm / c.denom())).collect())
        .collect();
    let small: Option<Vec<Vec<i64>>> = big
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| x.to_i64().filter(|v| v.abs() < SMALL_LIMIT))
                .collect()
        })
        .collect();
    match small {
        Some(rows) => (IntCoords::Small(rows), lcm),
        None => (IntCoords::Big(big), lcm),
    }
}

fn to_big(coords: &IntCoords) -> Vec<Vec<BigInt>> {
    match coords {
        IntCoords::Small(rows) => rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
        IntCoords::Big(rows) => rows.clone(),
    }
}

fn intern<K: Ord + Clone + Send + Sync>(raw: Vec<Vec<K>>, to_scalar: impl Fn(&K) -> Scalar) -> (Vec<Scalar>, Vec<u32>) {
    let mut distinct: Vec<K> = raw.iter().flatten().cloned().collect();
    distinct.par_sort_unstable();
    distinct.dedup();
    let matrix = raw
        .par_iter()
        .flat_map_iter(|row| {
            row.iter()
                .map(|k| distinct.binary_search(k).expect("value was collected") as u32)
                .collect::<Vec<_>>()
        })
        .collect();
    (distinct.iter().map(to_scalar).collect(), matrix)
}

impl DotProductIndex {
    /// Builds the index for `E × F`. Dimensions must agree.
    pub fn new(e: &PointSet, f: &PointSet, include_zero: bool) -> crate::Result<Self> {
        if e.dim() != f.dim() {
            return Err(crate::Error::DimensionMismatch {
                expected: e.dim(),
                found: f.dim(),
            });
        }
        let (ce, le) = integer_coords(e);
        let (cf, lf) = integer_coords(f);
        let denom = &le * &lf;

        let (values, matrix) = match (&ce, &cf) {
            (IntCoords::Small(re), IntCoords::Small(rf)) => {
                let raw: Vec<Vec<i128>> = re
                    .par_iter()
                    .map(|x| {
                        rf.iter()
                            .map(|y| x.iter().zip(y).map(|(&a, &b)| a as i128 * b as i128).sum())
                            .collect()
                    })
                    .collect();
                intern(raw, |&v| Scalar::new(BigInt::from(v), denom.clone()))
            }
            _ => {
                let (re, rf) = (to_big(&ce), to_big(&cf));
                let raw: Vec<Vec<BigInt>> = re
                    .par_iter()
                    .map(|x| rf.iter().map(|y| x.iter().zip(y).map(|(a, b)| a * b).sum()).collect())
                    .collect();
                intern(raw, |v| Scalar::new(v.clone(), denom.clone()))
            }
        };

        let lookup: HashMap<Scalar, u32> = values.iter().enumerate().map(|(i, v)| (v.clone(), i as u32)).collect();
        let zero_id = lookup.get(&Scalar::zero()).copied();
        let cols = f.len();
        let row_sorted = matrix
            .par_chunks(cols.max(1))
            .take(e.len())
            .map(|row| {
                let mut entries: Vec<(u32, u32)> = row
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| include_zero || Some(v) != zero_id)
                    .map(|(j, &v)| (v, j as u32))
                    .collect();
                entries.sort_unstable();
                entries
            })
            .collect::<Vec<_>>();
        let row_sorted = if cols == 0 {
            vec![Vec::new(); e.len()]
        } else {
            row_sorted
        };

        Ok(DotProductIndex {
            rows: e.len(),
            cols,
            include_zero,
            values,
            lookup,
            zero_id,
            matrix,
            row_sorted,
        })
    }

    /// Index of a set against itself.
    pub fn square(e: &PointSet, include_zero: bool) -> Self {
        DotProductIndex::new(e, e, include_zero).expect("same set has matching dimensions")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn include_zero(&self) -> bool {
        self.include_zero
    }

    /// Distinct values in ascending order; position equals value id.
    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, id: u32) -> &Scalar {
        &self.values[id as usize]
    }

    pub fn id_of(&self, value: &Scalar) -> Option<u32> {
        self.lookup.get(value).copied()
    }

    pub fn zero_id(&self) -> Option<u32> {
        self.zero_id
    }

    pub fn is_excluded(&self, id: u32) -> bool {
        !self.include_zero && Some(id) == self.zero_id
    }

    /// Value id of `e_i · f_j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.matrix[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.matrix[i * self.cols..(i + 1) * self.cols]
    }

    /// Columns `j` with `e_i · f_j` equal to value `id`, ascending.
    pub fn neighbors(&self, i: usize, id: u32) -> impl ExactSizeIterator<Item = usize> + '_ {
        let row = &self.row_sorted[i];
        let lo = row.partition_point(|&(v, _)| v < id);
        let hi = row.partition_point(|&(v, _)| v <= id);
        row[lo..hi].iter().map(|&(_, j)| j as usize)
    }

    pub fn has_neighbor(&self, i: usize, id: u32) -> bool {
        self.neighbors(i, id).len() > 0
    }

    /// Number of distinct counted values in row `i`.
    pub fn row_distinct(&self, i: usize) -> usize {
        let row = &self.row_sorted[i];
        row.iter()
            .enumerate()
            .filter(|&(pos, &(v, _))| pos == 0 || row[pos - 1].0 != v)
            .count()
    }

    /// All ordered pairs `(i, j)` with `e_i · f_j = value`.
    pub fn pairs(&self, value: &Scalar) -> Vec<(usize, usize)> {
        let Some(id) = self.id_of(value) else {
            return Vec::new();
        };
        if self.is_excluded(id) {
            return Vec::new();
        }
        (0..self.rows)
            .flat_map(|i| self.neighbors(i, id).map(move |j| (i, j)))
            .collect()
    }

    /// Number of counted pairs per value id (excluded zero reports 0).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.values.len()];
        for row in &self.row_sorted {
            for &(v, _) in row {
                counts[v as usize] += 1;
            }
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Point;

    fn set(points: &[&[i64]]) -> PointSet {
        PointSet::new(points[0].len(), points.iter().map(|p| Point::from_ints(p)).collect()).unwrap()
    }

    #[test]
    fn pairs_cover_everything() {
        let e = set(&[&[1, 0], &[2, 0], &[0, 5], &[1, 1]]);
        let idx = DotProductIndex::square(&e, true);
        let total: usize = idx.multiplicities().iter().sum();
        assert_eq!(total, 16);
        let mut seen = Vec::new();
        for v in idx.values() {
            seen.extend(idx.pairs(v));
        }
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 16);

        let idx = DotProductIndex::square(&e, false);
        let zeros = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| e.get(i).dot(e.get(j)).unwrap().is_zero())
            .count();
        assert_eq!(idx.multiplicities().iter().sum::<usize>(), 16 - zeros);
        assert!(idx.pairs(&Scalar::zero()).is_empty());
    }

    #[test]
    fn rational_and_big_coordinates_agree_with_direct_products() {
        let e = PointSet::new(
            2,
            vec![
                Point::new(vec!["3/4".parse().unwrap(), "5/16".parse().unwrap()]),
                Point::new(vec!["-2/3".parse().unwrap(), "7".parse().unwrap()]),
                Point::new(vec![
                    "123456789012345678901234567890".parse().unwrap(),
                    "1/3".parse().unwrap(),
                ]),
            ],
        )
        .unwrap();
        let f = set(&[&[4, 0], &[1, 1], &[0, 3]]);
        let idx = DotProductIndex::new(&e, &f, true).unwrap();
        for i in 0..e.len() {
            for j in 0..f.len() {
                assert_eq!(idx.value(idx.get(i, j)), &e.get(i).dot(f.get(j)).unwrap());
            }
        }
        let sorted = idx.values().windows(2).all(|w| w[0] < w[1]);
        assert!(sorted);
    }

    #[test]
    fn neighbors_and_row_distinct() {
        let e = set(&[&[1, 0], &[2, 0], &[3, 0], &[1, 7]]);
        let idx = DotProductIndex::square(&e, false);
        let two = idx.id_of(&Scalar::from(2)).unwrap();
        assert_eq!(idx.neighbors(0, two).collect::<Vec<_>>(), vec![1]);
        // row of (1,0): products 1, 2, 3, 1
        assert_eq!(idx.row_distinct(0), 3);
    }
}
