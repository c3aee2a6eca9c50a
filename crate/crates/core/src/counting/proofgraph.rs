//! The crossing multigraph on `E ∪ F`: for every pin `p ∈ E` and every
//! value `α ∈ Π_p(F)`, the points of `F` on the alpha-line `ℓ_α(p)` are
//! joined consecutively along the line. Pins on a common radial line can
//! share alpha-lines, which produces parallel edges.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{CountOptions, DotProductIndex};
use crate::{Error, Point, PointSet, Result, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofGraphStats {
    /// vertices: distinct points of `E ∪ F`
    pub v: usize,
    /// edges, counted with multiplicity
    pub e: usize,
    /// maximum edge multiplicity (0 without edges)
    pub m: usize,
    /// max pinned cardinality `max_p |Π_p(F)|` over pins in `E`
    pub t: usize,
    /// properly crossing pairs of drawn edges in the straight-line drawing
    pub drawing_crossings: u64,
    /// `|E|² t²`
    pub crossing_bound: u128,
}

impl ProofGraphStats {
    pub fn crossings_within_bound(&self) -> bool {
        u128::from(self.drawing_crossings) <= self.crossing_bound
    }
}

/// One alpha-line of one pin with at least one point of `F` on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlphaLine {
    pub pin: usize,
    pub alpha: Scalar,
    pub points_on_line: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ProofGraph {
    pub stats: ProofGraphStats,
    /// `E` points first, then the points of `F` not in `E`.
    pub vertices: Vec<Point>,
    /// `(u, v)` with `u < v` → multiplicity
    pub edges: BTreeMap<(usize, usize), usize>,
    pub lines: Vec<AlphaLine>,
}

fn require_plane_without_origin(set: &PointSet) -> Result<()> {
    if set.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: set.dim(),
        });
    }
    if set.iter().any(Point::is_origin) {
        return Err(Error::Origin("a vertex of the crossing multigraph"));
    }
    Ok(())
}

pub fn proof_multigraph(e: &PointSet, f: &PointSet, opts: &CountOptions) -> Result<ProofGraph> {
    require_plane_without_origin(e)?;
    require_plane_without_origin(f)?;
    let index = DotProductIndex::new(e, f, opts.include_zero)?;

    let mut vertices: Vec<Point> = e.points().to_vec();
    let mut vertex_of: HashMap<Point, usize> = vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let f_vertex: Vec<usize> = f
        .iter()
        .map(|p| {
            *vertex_of.entry(p.clone()).or_insert_with(|| {
                vertices.push(p.clone());
                vertices.len() - 1
            })
        })
        .collect();

    let mut edges: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut lines = Vec::new();
    let mut t = 0;
    for (i, pin) in e.iter().enumerate() {
        let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (j, &v) in index.row(i).iter().enumerate() {
            if !index.is_excluded(v) {
                groups.entry(v).or_default().push(j);
            }
        }
        t = t.max(groups.len());
        // direction along every alpha-line of this pin
        let along = [-pin.coord(1).clone(), pin.coord(0).clone()];
        for (v, mut members) in groups {
            lines.push(AlphaLine {
                pin: i,
                alpha: index.value(v).clone(),
                points_on_line: members.len(),
            });
            if members.len() < 2 {
                continue;
            }
            let key = |j: &usize| {
                let q = f.get(*j);
                q.coord(0) * &along[0] + q.coord(1) * &along[1]
            };
            members.sort_by_cached_key(key);
            for w in members.windows(2) {
                let (a, b) = (f_vertex[w[0]], f_vertex[w[1]]);
                *edges.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
    }

    let e_count = edges.values().sum();
    let m = edges.values().copied().max().unwrap_or(0);
    let drawing_crossings = count_crossings(&vertices, &edges);
    let n = e.len() as u128;
    let stats = ProofGraphStats {
        v: vertices.len(),
        e: e_count,
        m,
        t,
        drawing_crossings,
        crossing_bound: n * n * (t as u128) * (t as u128),
    };
    Ok(ProofGraph {
        stats,
        vertices,
        edges,
        lines,
    })
}

/// Integer coordinates after clearing all denominators; crossing structure
/// is invariant under this uniform scaling.
fn integer_vertices(vertices: &[Point]) -> Vec<[BigInt; 2]> {
    let lcm = vertices
        .iter()
        .flat_map(|p| p.coords())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    vertices
        .iter()
        .map(|p| {
            let c = |s: &Scalar| s.numer() * (&lcm / s.denom());
            [c(p.coord(0)), c(p.coord(1))]
        })
        .collect()
}

trait Coord: Clone + Sync {
    fn orient(a: &[Self; 2], b: &[Self; 2], c: &[Self; 2]) -> i8;
}

impl Coord for i128 {
    fn orient(a: &[i128; 2], b: &[i128; 2], c: &[i128; 2]) -> i8 {
        let v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        v.signum() as i8
    }
}

impl Coord for BigInt {
    fn orient(a: &[BigInt; 2], b: &[BigInt; 2], c: &[BigInt; 2]) -> i8 {
        let v = (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0]);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

fn crossings_with<C: Coord>(pts: &[[C; 2]], segs: &[((usize, usize), usize)]) -> u64 {
    (0..segs.len())
        .into_par_iter()
        .map(|s| {
            let ((a, b), ms) = segs[s];
            let mut total = 0u64;
            for &((c, d), mt) in &segs[s + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let o1 = C::orient(&pts[a], &pts[b], &pts[c]);
                let o2 = C::orient(&pts[a], &pts[b], &pts[d]);
                if o1 * o2 >= 0 {
                    continue;
                }
                let o3 = C::orient(&pts[c], &pts[d], &pts[a]);
                let o4 = C::orient(&pts[c], &pts[d], &pts[b]);
                if o3 * o4 < 0 {
                    total += (ms * mt) as u64;
                }
            }
            total
        })
        .sum()
}

/// Pairs of drawn edges whose segments cross at a point interior to both,
/// weighted by multiplicity. Shared endpoints and collinear overlaps do not
/// count, and copies of one multi-edge never cross each other.
pub fn count_crossings(vertices: &[Point], edges: &BTreeMap<(usize, usize), usize>) -> u64 {
    let segs: Vec<((usize, usize), usize)> = edges.iter().map(|(&k, &m)| (k, m)).collect();
    let big = integer_vertices(vertices);
    const LIMIT: i64 = 1 << 60;
    let small: Option<Vec<[i128; 2]>> = big
        .iter()
        .map(|[x, y]| {
            let x = x.to_i64().filter(|v| v.abs() < LIMIT)?;
            let y = y.to_i64().filter(|v| v.abs() < LIMIT)?;
            Some([x as i128, y as i128])
        })
        .collect();
    match small {
        Some(pts) => crossings_with(&pts, &segs),
        None => crossings_with(&big, &segs),
    }
}
