//! Brute-force oracles over integer point sets, written against plain `i64`
//! arithmetic so they share no code with the library's counting kernels.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dot_trees::{Point, PointSet, Tree};

pub type Pt = Vec<i64>;

pub fn ints(set: &PointSet) -> Vec<Pt> {
    set.iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| {
                    assert!(c.is_integer(), "oracle needs integer coordinates, got {c}");
                    c.to_string().parse().unwrap()
                })
                .collect()
        })
        .collect()
}

pub fn point_set(points: &[Pt]) -> PointSet {
    PointSet::new(points[0].len(), points.iter().map(|p| Point::from_ints(p)).collect()).unwrap()
}

pub fn dot(p: &[i64], q: &[i64]) -> i64 {
    p.iter().zip(q).map(|(a, b)| a * b).sum()
}

/// Calls `visit` on every map `{1..=vertices} -> points`, injective or not.
pub fn for_each_map(vertices: usize, points: usize, injective: bool, visit: &mut dyn FnMut(&[usize])) {
    fn go(pos: usize, assign: &mut Vec<usize>, points: usize, injective: bool, visit: &mut dyn FnMut(&[usize])) {
        if pos == assign.len() {
            visit(assign);
            return;
        }
        for p in 0..points {
            if injective && assign[..pos].contains(&p) {
                continue;
            }
            assign[pos] = p;
            go(pos + 1, assign, points, injective, visit);
        }
    }
    let mut assign = vec![0; vertices];
    go(0, &mut assign, points, injective, visit);
}

/// Edge weights of a vertex map, in canonical edge order.
pub fn weights_of(tree: &Tree, pts: &[Pt], assign: &[usize]) -> Vec<i64> {
    tree.edges()
        .iter()
        .map(|&(a, b)| dot(&pts[assign[a - 1]], &pts[assign[b - 1]]))
        .collect()
}

pub fn naive_count(tree: &Tree, pts: &[Pt], w: &[i64], injective: bool) -> u64 {
    let mut count = 0;
    for_each_map(tree.num_vertices(), pts.len(), injective, &mut |a| {
        if weights_of(tree, pts, a) == w {
            count += 1;
        }
    });
    count
}

/// Distinct tuples over injective maps, optionally with vertex `root`
/// pinned to point `pin`.
pub fn naive_tuples(tree: &Tree, pts: &[Pt], include_zero: bool, pinned: Option<(usize, usize)>) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for_each_map(tree.num_vertices(), pts.len(), true, &mut |a| {
        if let Some((root, pin)) = pinned {
            if a[root - 1] != pin {
                return;
            }
        }
        let w = weights_of(tree, pts, a);
        if include_zero || w.iter().all(|&x| x != 0) {
            out.insert(w);
        }
    });
    out
}

/// `{pin·q : q ∈ pts}`, the pin's own square included when it is a member.
pub fn naive_pinned(pin: &[i64], pts: &[Pt], include_zero: bool) -> BTreeSet<i64> {
    pts.iter()
        .map(|q| dot(pin, q))
        .filter(|&v| include_zero || v != 0)
        .collect()
}

/// Multiplicity of every value over ordered pairs of distinct points.
pub fn naive_multiplicities(pts: &[Pt]) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, q) in pts.iter().enumerate() {
            if i != j {
                *out.entry(dot(p, q)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Primitive direction with the first nonzero coordinate positive.
pub fn naive_direction(p: &[i64]) -> Pt {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let g = p.iter().fold(0, |g, &x| gcd(g, x));
    let sign = p.iter().find(|&&x| x != 0).map_or(1, |x| x.signum());
    p.iter().map(|x| sign * x / g).collect()
}

fn orient(a: &[i64], b: &[i64], c: &[i64]) -> i64 {
    ((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])).signum()
}

/// Proper crossings between segments with four distinct endpoints,
/// weighted by the product of their multiplicities.
pub fn naive_crossings(vertices: &[Pt], edges: &[((usize, usize), usize)]) -> u64 {
    let mut total = 0;
    for (i, &((a, b), m1)) in edges.iter().enumerate() {
        for &((c, d), m2) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let (pa, pb, pc, pd) = (&vertices[a], &vertices[b], &vertices[c], &vertices[d]);
            if orient(pa, pb, pc) * orient(pa, pb, pd) < 0 && orient(pc, pd, pa) * orient(pc, pd, pb) < 0 {
                total += (m1 * m2) as u64;
            }
        }
    }
    total
}
