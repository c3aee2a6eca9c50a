use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_integer::Roots;

use super::{ConstructionMetadata, ConstructionResult};
use crate::tree::{bipartition, Bipartition, Tree};
use crate::{dot, Error, Point, PointSet, Result, Scalar, WeightVector};

/// Whether a (partial) abscissa assignment keeps every realized weight
/// attached to a single vertex pair.
///
/// Each weight must have exactly one factorization as a `U`-abscissa times a
/// `V`-abscissa, and with `axis_pairs` no product of two `V`-abscissas may
/// equal a weight (those points share the x-axis).
fn assignment_is_clean(tree: &Tree, bip: &Bipartition, abscissa: &[Option<u64>], axis_pairs: bool) -> bool {
    let weights: BTreeSet<u64> = tree
        .edges()
        .iter()
        .filter_map(|&(a, b)| Some(abscissa[a]? * abscissa[b]?))
        .collect();
    let us: Vec<u64> = bip.u.iter().filter_map(|&v| abscissa[v]).collect();
    let vs: Vec<u64> = bip.v.iter().filter_map(|&v| abscissa[v]).collect();
    for &w in &weights {
        let factorizations = us
            .iter()
            .flat_map(|&a| vs.iter().map(move |&b| a * b))
            .filter(|&p| p == w)
            .count();
        if factorizations != 1 {
            return false;
        }
    }
    if axis_pairs {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if weights.contains(&(a * b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Abscissas in BFS discovery order from `start`, each vertex taking the
/// next unused positive integer that keeps the assignment clean.
fn assign_abscissas(tree: &Tree, bip: &Bipartition, start: usize, axis_pairs: bool) -> Vec<Option<u64>> {
    let mut abscissa = vec![None; tree.num_vertices() + 1];
    let mut next = 1u64;
    for (v, _) in tree.bfs(start) {
        loop {
            abscissa[v] = Some(next);
            next += 1;
            if assignment_is_clean(tree, bip, &abscissa, axis_pairs) {
                break;
            }
        }
    }
    abscissa
}

fn free_points(abscissa: u64, offset: u64, count: usize, dim: usize, free_axis: usize) -> Vec<Point> {
    (1..=count as u64)
        .map(|j| {
            let mut c = vec![Scalar::zero(); dim];
            c[0] = Scalar::from(abscissa);
            c[free_axis] = Scalar::from(offset + j);
            Point::new(c)
        })
        .collect()
}

fn axis_point(x: i64, dim: usize) -> Point {
    let mut c = vec![Scalar::zero(); dim];
    c[0] = Scalar::from(x);
    Point::new(c)
}

/// Filler points `(-x, 0, …)` for `x = 1, 2, …`, skipping any `x` whose
/// product with an earlier filler is a weight.
fn fillers(count: usize, weights: &BTreeSet<u64>) -> Vec<u64> {
    let mut chosen: Vec<u64> = Vec::with_capacity(count);
    let mut x = 0u64;
    while chosen.len() < count {
        x += 1;
        if chosen.iter().all(|&y| !weights.contains(&(x * y))) {
            chosen.push(x);
        }
    }
    chosen
}

struct Layout {
    dim: usize,
    name: &'static str,
    per_vertex: usize,
    /// vertices that receive `per_vertex` points, with their free axis
    spread: BTreeMap<usize, usize>,
    axis_pairs: bool,
    notes: Vec<String>,
}

fn build(tree: &Tree, n: usize, bip: Bipartition, layout: Layout) -> Result<ConstructionResult> {
    let start = *bip.u.iter().next().expect("the larger class is nonempty");
    let abscissa = assign_abscissas(tree, &bip, start, layout.axis_pairs);
    let abs = |v: usize| abscissa[v].expect("every vertex is reached");

    let weight_values: Vec<u64> = tree.edges().iter().map(|&(a, b)| abs(a) * abs(b)).collect();
    let weight_set: BTreeSet<u64> = weight_values.iter().copied().collect();
    let max_weight = weight_set.iter().copied().max().unwrap_or(0);
    // two free coordinates above the offset multiply to more than any weight
    let offset = max_weight.sqrt();

    let mut points = Vec::with_capacity(n);
    let mut vertex_assignment = BTreeMap::new();
    for v in tree.vertices() {
        let first = points.len();
        match layout.spread.get(&v) {
            Some(&axis) => points.extend(free_points(abs(v), offset, layout.per_vertex, layout.dim, axis)),
            None => points.push(axis_point(abs(v) as i64, layout.dim)),
        }
        vertex_assignment.insert(v, (first..points.len()).collect::<Vec<_>>());
    }
    let filler_xs = fillers(n - points.len(), &weight_set);
    let construction_end = points.len();
    points.extend(filler_xs.iter().map(|&x| axis_point(-(x as i64), layout.dim)));
    let points = PointSet::new(layout.dim, points)?;

    let weights = WeightVector::new(weight_values.iter().map(|&w| Scalar::from(w)).collect());
    check_constant_weights(tree, &weights, &points, &vertex_assignment)?;
    check_fillers_inert(&points, construction_end, &weights)?;

    let product_count = vertex_assignment
        .values()
        .fold(BigUint::from(1u32), |acc, s| acc * BigUint::from(s.len()));
    // a single edge is realized in both vertex orders
    let predicted_count = if tree.num_edges() == 1 {
        &product_count * 2u32
    } else {
        product_count.clone()
    };

    let metadata = ConstructionMetadata {
        name: layout.name.to_string(),
        n,
        k: tree.num_edges(),
        bipartition: bip,
        per_vertex: layout.per_vertex,
        start_vertex: start,
        abscissas: tree.vertices().map(|v| (v, abs(v))).collect(),
        free_offset: offset,
        fillers: filler_xs,
        notes: layout.notes,
    };
    Ok(ConstructionResult {
        points,
        tree: tree.clone(),
        weights,
        predicted_count,
        product_count,
        vertex_assignment,
        metadata,
    })
}

/// Every pair drawn from the two assigned subsets of an edge realizes that
/// edge's weight.
fn check_constant_weights(
    tree: &Tree,
    weights: &WeightVector,
    points: &PointSet,
    assignment: &BTreeMap<usize, Vec<usize>>,
) -> Result<()> {
    for (j, &(a, b)) in tree.edges().iter().enumerate() {
        for &p in &assignment[&a] {
            for &q in &assignment[&b] {
                if dot(points.get(p), points.get(q))? != weights.weights()[j] {
                    return Err(Error::Construction(format!(
                        "edge {a}-{b} is not constant on its assigned points"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// No pair involving a filler point realizes any edge weight.
fn check_fillers_inert(points: &PointSet, construction_end: usize, weights: &WeightVector) -> Result<()> {
    let w: BTreeSet<&Scalar> = weights.weights().iter().collect();
    for f in construction_end..points.len() {
        for q in 0..points.len() {
            if q != f && w.contains(&dot(points.get(f), points.get(q))?) {
                return Err(Error::Construction(format!(
                    "filler {} realizes an edge weight",
                    points.get(f)
                )));
            }
        }
    }
    Ok(())
}

/// Planar column construction: each vertex of the larger color class `U`
/// gets a vertical column of `m = ⌊(n − k2)/k1⌋` points, each vertex of `V`
/// a single point on the x-axis, and filler points on the negative x-axis
/// pad the set to exactly `n` points.
pub fn build_kms_columns(tree: &Tree, n: usize) -> Result<ConstructionResult> {
    let k = tree.num_edges();
    if k == 0 {
        return Err(Error::param(
            "the column construction needs a tree with at least one edge",
        ));
    }
    if n < k + 1 {
        return Err(Error::param(format!(
            "the column construction needs n >= {} for a tree with {k} edges, got {n}",
            k + 1
        )));
    }
    let bip = bipartition(tree);
    let per_vertex = (n - bip.k2()) / bip.k1();
    let layout = Layout {
        dim: 2,
        name: "kms",
        per_vertex,
        spread: bip.u.iter().map(|&v| (v, 1)).collect(),
        axis_pairs: true,
        notes: Vec::new(),
    };
    build(tree, n, bip, layout)
}

/// Three-dimensional construction with one line per vertex: `(a, y, 0)` for
/// the larger color class and `(a, 0, z)` for the other, each holding
/// `⌊n/(k+1)⌋` points.
pub fn build_perp_lines_3d(tree: &Tree, n: usize) -> Result<ConstructionResult> {
    let k = tree.num_edges();
    if k == 0 {
        return Err(Error::param(
            "the line construction needs a tree with at least one edge",
        ));
    }
    if n < 2 * (k + 1) {
        return Err(Error::param(format!(
            "the line construction needs n >= {} for a tree with {k} edges, got {n}",
            2 * (k + 1)
        )));
    }
    let bip = bipartition(tree);
    let per_vertex = n / (k + 1);
    let spread = tree.vertices().map(|v| (v, if bip.in_u(v) { 1 } else { 2 })).collect();
    let layout = Layout {
        dim: 3,
        name: "perp-lines",
        per_vertex,
        spread,
        axis_pairs: false,
        notes: vec![format!(
            "copy count grows like n^{} (exponent k+1); the stated n^k scaling is not what this layout produces",
            k + 1
        )],
    };
    build(tree, n, bip, layout)
}
