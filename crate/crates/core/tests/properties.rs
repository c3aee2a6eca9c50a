//! Property-based invariants of geometry, trees, and counting.

mod common;

use std::collections::BTreeSet;

use dot_trees::counting::{
    count_embeddings, count_homomorphisms, distinct_dot_products, distinct_weight_tuples, max_pinned, pinned_sizes,
    radial_histogram, CountOptions, TupleOptions,
};
use dot_trees::geometry::{alpha_hyperplane, read_point_set, write_point_set};
use dot_trees::tree::{bipartition, read_tree, split_at_vertex, write_tree};
use dot_trees::{dot, Point, PointSet, Scalar, Tree, WeightVector, WeightedTree};
use num_bigint::BigUint;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Scalar::new(n, d))
}

fn point(dim: usize) -> impl Strategy<Value = Point> {
    prop::collection::vec(scalar(), dim).prop_map(Point::new)
}

fn nonzero_point(dim: usize) -> impl Strategy<Value = Point> {
    point(dim).prop_filter("non-origin", |p| !p.is_origin())
}

/// Distinct non-origin integer points in the plane.
fn int_set(max: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::btree_set((-5i64..=5, -5i64..=5), 3..=max).prop_filter_map("non-origin points", |pts| {
        let pts: Vec<Point> = pts
            .into_iter()
            .filter(|&(x, y)| (x, y) != (0, 0))
            .map(|(x, y)| Point::from_ints(&[x, y]))
            .collect();
        (pts.len() >= 3).then(|| PointSet::new(2, pts).unwrap())
    })
}

/// A random labeled tree on `2..=max` vertices, as an unsorted edge list.
fn raw_tree(max: usize) -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (2..=max).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        (
            parents,
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
            prop::collection::vec(any::<bool>(), n - 1),
        )
            .prop_map(move |(parents, labels, flips)| {
                let mut edges: Vec<(usize, usize)> = parents
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (labels[i + 1], labels[p]))
                    .zip(flips)
                    .map(|((a, b), f)| if f { (b, a) } else { (a, b) })
                    .collect();
                edges.reverse();
                (n, edges)
            })
    })
}

fn rotate(set: &PointSet) -> PointSet {
    let rows = vec![
        vec![Scalar::new(3, 5), Scalar::new(4, 5)],
        vec![Scalar::new(-4, 5), Scalar::new(3, 5)],
    ];
    set.map(|p| p.transform(&rows).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dot_is_symmetric_and_bilinear(p in point(3), q in point(3), r in point(3), l in scalar()) {
        prop_assert_eq!(dot(&p, &q).unwrap(), dot(&q, &p).unwrap());
        let sum = dot(&p, &q.add(&r).unwrap()).unwrap();
        prop_assert_eq!(sum, dot(&p, &q).unwrap() + dot(&p, &r).unwrap());
        let scaled = dot(&p.scale(&l), &q.scale(&l)).unwrap();
        prop_assert_eq!(scaled, &l * &l * dot(&p, &q).unwrap());
    }

    #[test]
    fn rotation_preserves_dot(p in point(2), q in point(2)) {
        let set = PointSet::new(2, vec![p.clone()]).unwrap();
        let other = PointSet::new(2, vec![q.clone()]).unwrap();
        let (rp, rq) = (rotate(&set), rotate(&other));
        prop_assert_eq!(dot(rp.get(0), rq.get(0)).unwrap(), dot(&p, &q).unwrap());
    }

    #[test]
    fn distinct_pins_give_distinct_alpha_lines(p in nonzero_point(2), q in nonzero_point(2), alpha in scalar()) {
        prop_assume!(p != q && !alpha.is_zero());
        let (lp, lq) = (alpha_hyperplane(&p, alpha.clone()).unwrap(), alpha_hyperplane(&q, alpha).unwrap());
        let (base, along) = lp.parametrize_line().unwrap();
        let other = base.add(&along).unwrap();
        prop_assert!(lp.contains(&base).unwrap() && lp.contains(&other).unwrap());
        prop_assert!(!(lq.contains(&base).unwrap() && lq.contains(&other).unwrap()));
    }

    #[test]
    fn point_files_round_trip(points in prop::collection::btree_set(prop::collection::vec(scalar(), 3), 0..20)) {
        let set = PointSet::new(3, points.into_iter().map(Point::new).collect()).unwrap();
        let mut bytes = Vec::new();
        write_point_set(&set, &mut bytes).unwrap();
        let back = read_point_set(bytes.as_slice()).unwrap();
        prop_assert_eq!(&back, &set);
        let mut again = Vec::new();
        write_point_set(&back, &mut again).unwrap();
        prop_assert_eq!(again, bytes);
    }

    #[test]
    fn edge_order_is_canonical((n, edges) in raw_tree(9), seed in any::<u64>()) {
        let mut shuffled = edges.clone();
        let len = shuffled.len();
        shuffled.rotate_left(seed as usize % len);
        let a = Tree::new(n, edges).unwrap();
        let b = Tree::new(n, shuffled).unwrap();
        let (mut wa, mut wb) = (Vec::new(), Vec::new());
        write_tree(&a, None, &mut wa).unwrap();
        write_tree(&b, None, &mut wb).unwrap();
        prop_assert_eq!(&wa, &wb);
        let (read, _) = read_tree(wa.as_slice()).unwrap();
        prop_assert_eq!(read, a);
    }

    #[test]
    fn bipartition_is_a_proper_coloring((n, edges) in raw_tree(12)) {
        let t = Tree::new(n, edges).unwrap();
        let b = bipartition(&t);
        prop_assert_eq!(b.k1() + b.k2(), t.num_vertices());
        prop_assert!(b.k1() >= b.k2());
        for &(x, y) in t.edges() {
            prop_assert_ne!(b.in_u(x), b.in_u(y));
        }
    }

    #[test]
    fn splits_partition_the_edges((n, edges) in raw_tree(12)) {
        let t = Tree::new(n, edges).unwrap();
        for v in t.vertices().filter(|&v| t.degree(v) >= 2) {
            let (first, rest) = split_at_vertex(&t, v).unwrap();
            prop_assert_eq!(first.tree.num_edges() + rest.tree.num_edges(), t.num_edges());
            let all: BTreeSet<usize> = first.edge_indices.iter().chain(&rest.edge_indices).copied().collect();
            prop_assert_eq!(all.len(), t.num_edges());
            prop_assert!(first.relabel(v).is_some() && rest.relabel(v).is_some());
            let shared: BTreeSet<usize> = first.labels.iter().copied().filter(|l| rest.labels.contains(l)).collect();
            prop_assert_eq!(shared, BTreeSet::from([v]));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn counts_survive_rotation(set in int_set(9), (n, edges) in raw_tree(3)) {
        let tree = Tree::new(n, edges).unwrap();
        let rotated = rotate(&set);
        let opts = CountOptions::default();
        let tuples = distinct_weight_tuples(&tree, &set, &TupleOptions::default()).unwrap();
        let rotated_tuples = distinct_weight_tuples(&tree, &rotated, &TupleOptions::default()).unwrap();
        prop_assert_eq!(tuples.count, rotated_tuples.count);
        prop_assert_eq!(pinned_sizes(&set, &opts), pinned_sizes(&rotated, &opts));
        // rotation maps radial lines to radial lines
        prop_assert_eq!(radial_histogram(&set).max, radial_histogram(&rotated).max);
        let pts = common::ints(&set);
        let w: Vec<i64> = tree.edges().iter().map(|&(a, b)| common::dot(&pts[a - 1], &pts[b - 1])).collect();
        prop_assume!(w.iter().all(|&x| x != 0));
        let wt = WeightedTree::new(tree, WeightVector::from_ints(&w)).unwrap();
        prop_assert_eq!(count_embeddings(&wt, &set, &opts).unwrap(), count_embeddings(&wt, &rotated, &opts).unwrap());
    }

    #[test]
    fn counts_scale_covariantly(set in int_set(9), (n, edges) in raw_tree(3), lambda in 2i64..=5) {
        let tree = Tree::new(n, edges).unwrap();
        let l = Scalar::from(lambda);
        let scaled = set.map(|p| p.scale(&l)).unwrap();
        let pts = common::ints(&set);
        let w: Vec<i64> = tree.edges().iter().map(|&(a, b)| common::dot(&pts[a - 1], &pts[b - 1])).collect();
        prop_assume!(w.iter().all(|&x| x != 0));
        let weights = WeightVector::from_ints(&w);
        let opts = CountOptions::default();
        let plain = WeightedTree::new(tree.clone(), weights.clone()).unwrap();
        let squared = WeightedTree::new(tree.clone(), weights.scaled(&(&l * &l))).unwrap();
        prop_assert_eq!(count_embeddings(&plain, &set, &opts).unwrap(), count_embeddings(&squared, &scaled, &opts).unwrap());
        let a = distinct_weight_tuples(&tree, &set, &TupleOptions::default()).unwrap();
        let b = distinct_weight_tuples(&tree, &scaled, &TupleOptions::default()).unwrap();
        prop_assert_eq!(a.count, b.count);
        let homs = count_homomorphisms(&plain, &set, &opts).unwrap();
        prop_assert!(homs >= BigUint::from(count_embeddings(&plain, &set, &opts).unwrap()));
    }

    #[test]
    fn pair_statistics_add_up(set in int_set(14)) {
        let n = set.len();
        let opts = CountOptions::default();
        let stats = distinct_dot_products(&set, &opts);
        let total: usize = stats.multiplicities.values().sum();
        prop_assert_eq!(total + stats.zero_pairs, n * n - n);
        let best = max_pinned(&set, &opts).unwrap();
        prop_assert!(best.count * n >= stats.distinct);
        prop_assert_eq!(radial_histogram(&set).total(), n);
    }
}
