//! Labeled trees with canonical edge order, weight vectors, bipartitions,
//! and vertex splits.
//!
//! Vertices are numbered `1..=k+1`. Edges are stored as `(a, b)` with
//! `a < b`, sorted lexicographically; the `j`-th weight of a
//! [`WeightVector`] belongs to the `j`-th edge in that order.

mod generators;
mod io;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::{Error, Result, Scalar};

pub use generators::{make_path, make_perfect_binary, make_star, parse_builtin};
pub use io::{read_tree, write_tree};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tree {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Validates and canonicalizes an edge list. Endpoints may be given in
    /// either order.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Tree::with_permutation(num_vertices, edges).map(|(t, _)| t)
    }

    /// Like [`Tree::new`], also returning `perm` with `perm[j]` the input
    /// position of the `j`-th canonical edge.
    pub fn with_permutation(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<(Self, Vec<usize>)> {
        if num_vertices == 0 {
            return Err(Error::InvalidTree("a tree needs at least one vertex".into()));
        }
        if edges.len() + 1 != num_vertices {
            return Err(Error::InvalidTree(format!(
                "{} edges cannot form a tree on {num_vertices} vertices",
                edges.len()
            )));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a == b {
                return Err(Error::InvalidTree(format!("self-loop at vertex {a}")));
            }
            for v in [a, b] {
                if v == 0 || v > num_vertices {
                    return Err(Error::InvalidTree(format!(
                        "vertex {v} out of range 1..={num_vertices}"
                    )));
                }
            }
            normalized.push(((a.min(b), a.max(b)), i));
        }
        normalized.sort();

        // union-find: k edges on k+1 vertices with no cycle is connected
        let mut parent: Vec<usize> = (0..=num_vertices).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &((a, b), _) in &normalized {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Err(Error::InvalidTree(format!("edge {a}-{b} closes a cycle")));
            }
            parent[ra] = rb;
        }

        let perm = normalized.iter().map(|&(_, i)| i).collect();
        let edges = normalized.into_iter().map(|(e, _)| e).collect();
        Ok((Tree { num_vertices, edges }, perm))
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.num_vertices
    }

    /// `adjacency()[v]` lists `(neighbor, edge index)` sorted by neighbor.
    /// Index 0 is unused.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.num_vertices + 1];
        for (j, &(a, b)) in self.edges.iter().enumerate() {
            adj[a].push((b, j));
            adj[b].push((a, j));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.num_vertices {
            return Err(Error::InvalidTree(format!(
                "vertex {v} out of range 1..={}",
                self.num_vertices
            )));
        }
        Ok(())
    }

    /// BFS order from `root` together with each vertex's parent edge
    /// `(parent, edge index)`. Neighbors are visited in increasing order.
    pub fn bfs(&self, root: usize) -> Vec<(usize, Option<(usize, usize)>)> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.num_vertices + 1];
        let mut order = Vec::with_capacity(self.num_vertices);
        let mut queue = VecDeque::from([(root, None)]);
        seen[root] = true;
        while let Some((v, parent)) = queue.pop_front() {
            order.push((v, parent));
            for &(u, j) in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back((u, Some((v, j))));
                }
            }
        }
        order
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({} vertices, edges {:?})", self.num_vertices, self.edges)
    }
}

/// Edge weights aligned with a tree's canonical edge order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<Scalar>);

impl WeightVector {
    pub fn new(weights: Vec<Scalar>) -> Self {
        WeightVector(weights)
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        WeightVector(weights.iter().map(|&w| Scalar::from(w)).collect())
    }

    /// Comma-separated rationals, e.g. `2,6` or `1/2,-3`.
    pub fn parse_list(text: &str) -> Result<Self> {
        text.split(',')
            .map(|tok| tok.trim().parse::<Scalar>().map_err(|e| Error::param(e.to_string())))
            .collect::<Result<Vec<_>>>()
            .map(WeightVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[Scalar] {
        &self.0
    }

    pub fn has_zero(&self) -> bool {
        self.0.iter().any(Scalar::is_zero)
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        WeightVector(self.0.iter().map(|w| w * factor).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A tree together with its weight vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct WeightedTree {
    tree: Tree,
    weights: WeightVector,
}

impl WeightedTree {
    pub fn new(tree: Tree, weights: WeightVector) -> Result<Self> {
        if tree.num_edges() != weights.len() {
            return Err(Error::param(format!(
                "tree has {} edges but {} weights were given",
                tree.num_edges(),
                weights.len()
            )));
        }
        Ok(WeightedTree { tree, weights })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn weight(&self, edge: usize) -> &Scalar {
        &self.weights.0[edge]
    }
}

/// The two color classes of a tree, with `|U| ≥ |V|`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Bipartition {
    pub u: BTreeSet<usize>,
    pub v: BTreeSet<usize>,
}

impl Bipartition {
    pub fn k1(&self) -> usize {
        self.u.len()
    }

    pub fn k2(&self) -> usize {
        self.v.len()
    }

    pub fn in_u(&self, vertex: usize) -> bool {
        self.u.contains(&vertex)
    }
}

/// Proper 2-coloring by BFS parity from vertex 1. The classes are swapped
/// when needed so the larger one is `U`; on a tie `U` holds vertex 1.
pub fn bipartition(tree: &Tree) -> Bipartition {
    let mut depth = vec![0usize; tree.num_vertices() + 1];
    for (v, parent) in tree.bfs(1) {
        if let Some((p, _)) = parent {
            depth[v] = depth[p] + 1;
        }
    }
    let (even, odd): (BTreeSet<usize>, BTreeSet<usize>) = tree.vertices().partition(|&v| depth[v].is_multiple_of(2));
    if even.len() >= odd.len() {
        Bipartition { u: even, v: odd }
    } else {
        Bipartition { u: odd, v: even }
    }
}

/// A tree with a distinguished vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootedTree {
    tree: Tree,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: Tree, root: usize) -> Result<Self> {
        tree.check_vertex(root)?;
        Ok(RootedTree { tree, root })
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }
}

/// One side of [`split_at_vertex`]: a relabeled tree plus the original
/// labels and edge indices it came from.
#[derive(Clone, Debug)]
pub struct SplitPart {
    pub tree: Tree,
    /// `labels[i]` is the original label of new vertex `i + 1`.
    pub labels: Vec<usize>,
    /// Original canonical indices of the edges in this part.
    pub edge_indices: Vec<usize>,
}

impl SplitPart {
    /// The new label of original vertex `v`, if present.
    pub fn relabel(&self, v: usize) -> Option<usize> {
        self.labels.iter().position(|&l| l == v).map(|i| i + 1)
    }
}

/// Splits `tree` at an interior vertex `v` into two edge-disjoint trees
/// sharing only `v`. The first part is the branch through `v`'s
/// lowest-numbered neighbor; the second holds every other branch.
pub fn split_at_vertex(tree: &Tree, v: usize) -> Result<(SplitPart, SplitPart)> {
    tree.check_vertex(v)?;
    let adj = tree.adjacency();
    if adj[v].len() < 2 {
        return Err(Error::LeafSplit(v));
    }
    let first = adj[v][0].0;

    // vertices reachable from `first` without passing through `v`
    let mut branch = BTreeSet::from([first]);
    let mut stack = vec![first];
    while let Some(x) = stack.pop() {
        for &(y, _) in &adj[x] {
            if y != v && branch.insert(y) {
                stack.push(y);
            }
        }
    }

    let mut left_edges = Vec::new();
    let mut right_edges = Vec::new();
    for (j, &(a, b)) in tree.edges().iter().enumerate() {
        if branch.contains(&a) || branch.contains(&b) {
            left_edges.push(j);
        } else {
            right_edges.push(j);
        }
    }
    Ok((build_part(tree, &left_edges)?, build_part(tree, &right_edges)?))
}

fn build_part(tree: &Tree, edge_indices: &[usize]) -> Result<SplitPart> {
    let labels: Vec<usize> = edge_indices
        .iter()
        .flat_map(|&j| {
            let (a, b) = tree.edges()[j];
            [a, b]
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let new_label = |x: usize| labels.binary_search(&x).map(|i| i + 1).unwrap();
    let edges = edge_indices
        .iter()
        .map(|&j| {
            let (a, b) = tree.edges()[j];
            (new_label(a), new_label(b))
        })
        .collect();
    Ok(SplitPart {
        tree: Tree::new(labels.len(), edges)?,
        labels,
        edge_indices: edge_indices.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_validation() {
        let (t, perm) = Tree::with_permutation(4, vec![(3, 4), (2, 1), (3, 2)]).unwrap();
        assert_eq!(t.edges(), &[(1, 2), (2, 3), (3, 4)]);
        assert_eq!(perm, vec![1, 2, 0]);

        assert!(Tree::new(3, vec![(1, 2), (1, 2)]).is_err());
        assert!(Tree::new(4, vec![(1, 2), (2, 3), (1, 3)]).is_err());
        assert!(Tree::new(3, vec![(1, 2), (3, 4)]).is_err());
        assert!(Tree::new(3, vec![(1, 1), (2, 3)]).is_err());
        assert!(Tree::new(0, vec![]).is_err());
        assert_eq!(Tree::new(1, vec![]).unwrap().num_edges(), 0);
    }

    #[test]
    fn bipartition_examples() {
        let path = make_path(2).unwrap();
        let b = bipartition(&path);
        assert_eq!(b.u, BTreeSet::from([1, 3]));
        assert_eq!(b.v, BTreeSet::from([2]));

        let star = make_star(3).unwrap();
        let b = bipartition(&star);
        assert_eq!(b.u, BTreeSet::from([2, 3, 4]));
        assert_eq!(b.v, BTreeSet::from([1]));

        // levels 0 and 2 hold 1 + 4 vertices, level 1 holds 2
        let bin = make_perfect_binary(2).unwrap();
        let b = bipartition(&bin);
        assert_eq!((b.k1(), b.k2()), (5, 2));
        assert_eq!(b.v, BTreeSet::from([2, 3]));
    }

    #[test]
    fn bipartition_is_proper() {
        for t in [
            make_path(7).unwrap(),
            make_star(5).unwrap(),
            make_perfect_binary(3).unwrap(),
            Tree::new(6, vec![(1, 4), (2, 4), (4, 5), (5, 6), (3, 6)]).unwrap(),
        ] {
            let b = bipartition(&t);
            assert_eq!(b.k1() + b.k2(), t.num_vertices());
            assert!(b.k1() >= b.k2());
            for &(x, y) in t.edges() {
                assert_ne!(b.in_u(x), b.in_u(y));
            }
        }
    }

    #[test]
    fn split_examples() {
        let path = make_path(2).unwrap();
        let (l, r) = split_at_vertex(&path, 2).unwrap();
        assert_eq!(l.labels, vec![1, 2]);
        assert_eq!(r.labels, vec![2, 3]);
        assert_eq!((l.tree.num_edges(), r.tree.num_edges()), (1, 1));

        let star = make_star(3).unwrap();
        let (l, r) = split_at_vertex(&star, 1).unwrap();
        assert_eq!(l.edge_indices, vec![0]);
        assert_eq!(r.edge_indices, vec![1, 2]);
        assert_eq!(r.labels, vec![1, 3, 4]);

        assert!(matches!(split_at_vertex(&path, 1), Err(Error::LeafSplit(1))));
        assert!(matches!(split_at_vertex(&path, 3), Err(Error::LeafSplit(3))));
        assert!(split_at_vertex(&path, 9).is_err());
    }

    #[test]
    fn split_partitions_edges() {
        let t = make_perfect_binary(3).unwrap();
        for v in t.vertices().filter(|&v| t.degree(v) >= 2) {
            let (l, r) = split_at_vertex(&t, v).unwrap();
            assert!(l.relabel(v).is_some() && r.relabel(v).is_some());
            let lv: BTreeSet<_> = l.labels.iter().copied().collect();
            let rv: BTreeSet<_> = r.labels.iter().copied().collect();
            assert_eq!(lv.intersection(&rv).copied().collect::<Vec<_>>(), vec![v]);
            let mut all: Vec<_> = l.edge_indices.iter().chain(&r.edge_indices).copied().collect();
            all.sort();
            assert_eq!(all, (0..t.num_edges()).collect::<Vec<_>>());
            assert_eq!(l.tree.num_edges() + r.tree.num_edges(), t.num_edges());
        }
    }
}
