use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use super::{CountOptions, DotProductIndex};
use crate::tree::Tree;
use crate::{Error, PointSet, Result, WeightedTree};

/// Order in which tree vertices are assigned during enumeration: starting at
/// `root`, repeatedly take the lowest canonical edge joining an assigned
/// vertex to an unassigned one.
#[derive(Clone, Debug)]
pub(crate) struct ExtensionOrder {
    /// vertices in assignment order
    pub vertices: Vec<usize>,
    /// for position `p > 0`: `(position of parent, edge index)`
    pub parent: Vec<Option<(usize, usize)>>,
    /// for each position: `(child position, edge index)` of later neighbors
    pub children: Vec<Vec<(usize, usize)>>,
}

impl ExtensionOrder {
    pub fn new(tree: &Tree, root: usize) -> Self {
        let n = tree.num_vertices();
        let mut pos_of = vec![usize::MAX; n + 1];
        pos_of[root] = 0;
        let mut vertices = vec![root];
        let mut parent = vec![None];
        let mut used = vec![false; tree.num_edges()];
        while vertices.len() < n {
            let (j, &(a, b)) = tree
                .edges()
                .iter()
                .enumerate()
                .find(|&(j, &(a, b))| !used[j] && ((pos_of[a] == usize::MAX) != (pos_of[b] == usize::MAX)))
                .expect("tree is connected");
            used[j] = true;
            let (from, to) = if pos_of[a] != usize::MAX { (a, b) } else { (b, a) };
            pos_of[to] = vertices.len();
            vertices.push(to);
            parent.push(Some((pos_of[from], j)));
        }
        let mut children = vec![Vec::new(); n];
        for (p, par) in parent.iter().enumerate() {
            if let Some((pp, j)) = *par {
                children[pp].push((p, j));
            }
        }
        ExtensionOrder {
            vertices,
            parent,
            children,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }
}

/// Value id for each edge weight, or `None` if the weight never occurs.
fn weight_ids(wt: &WeightedTree, index: &DotProductIndex, opts: &CountOptions) -> Result<Option<Vec<u32>>> {
    if !opts.include_zero && wt.weights().has_zero() {
        return Err(Error::ZeroWeight);
    }
    Ok(wt.weights().weights().iter().map(|w| index.id_of(w)).collect())
}

struct Embedder<'a> {
    index: &'a DotProductIndex,
    order: &'a ExtensionOrder,
    wid: &'a [u32],
}

impl Embedder<'_> {
    /// Every later neighbor of position `pos` still has a candidate from `point`.
    fn viable(&self, pos: usize, point: usize) -> bool {
        self.order.children[pos]
            .iter()
            .all(|&(_, j)| self.index.has_neighbor(point, self.wid[j]))
    }

    fn count_from(&self, pos: usize, assign: &mut [usize], used: &mut [bool]) -> u64 {
        if pos == self.order.len() {
            return 1;
        }
        let (pp, j) = self.order.parent[pos].expect("non-root position has a parent");
        let mut total = 0;
        for c in self.index.neighbors(assign[pp], self.wid[j]) {
            if used[c] || !self.viable(pos, c) {
                continue;
            }
            used[c] = true;
            assign[pos] = c;
            total += self.count_from(pos + 1, assign, used);
            used[c] = false;
        }
        total
    }

    fn count_rooted(&self, root_point: usize) -> u64 {
        if !self.viable(0, root_point) {
            return 0;
        }
        let n = self.index.rows();
        let mut assign = vec![0usize; self.order.len()];
        let mut used = vec![false; n];
        assign[0] = root_point;
        used[root_point] = true;
        self.count_from(1, &mut assign, &mut used)
    }
}

/// Number of injective maps from the tree's vertices into `points` such
/// that every edge's endpoints have exactly the prescribed dot product.
///
/// Vertices are labeled, so automorphic images count separately.
pub fn count_embeddings(wt: &WeightedTree, points: &PointSet, opts: &CountOptions) -> Result<u64> {
    let index = DotProductIndex::square(points, opts.include_zero);
    count_embeddings_indexed(wt, &index, opts)
}

/// [`count_embeddings`] against a prebuilt square index.
pub fn count_embeddings_indexed(wt: &WeightedTree, index: &DotProductIndex, opts: &CountOptions) -> Result<u64> {
    let tree = wt.tree();
    let n = index.rows();
    if n < tree.num_vertices() {
        return Ok(0);
    }
    let Some(wid) = weight_ids(wt, index, opts)? else {
        return Ok(0);
    };
    if tree.num_edges() == 0 {
        return Ok(n as u64);
    }
    let order = ExtensionOrder::new(tree, 1);
    let embedder = Embedder {
        index,
        order: &order,
        wid: &wid,
    };
    Ok((0..n).into_par_iter().map(|p| embedder.count_rooted(p)).sum())
}

/// Number of not necessarily injective maps satisfying every edge
/// constraint, by dynamic programming over the tree rooted at vertex 1.
/// Adjacent vertices may share a point when its self dot product matches.
pub fn count_homomorphisms(wt: &WeightedTree, points: &PointSet, opts: &CountOptions) -> Result<BigUint> {
    let index = DotProductIndex::square(points, opts.include_zero);
    let tree = wt.tree();
    let n = points.len();
    let Some(wid) = weight_ids(wt, &index, opts)? else {
        return Ok(BigUint::zero());
    };
    let order = ExtensionOrder::new(tree, 1);

    // ways[pos][p]: maps of the subtree under position `pos` with it sent to p
    let mut ways: Vec<Vec<BigUint>> = vec![Vec::new(); order.len()];
    for pos in (0..order.len()).rev() {
        let children = &order.children[pos];
        let row: Vec<BigUint> = (0..n)
            .into_par_iter()
            .map(|p| {
                let mut acc = BigUint::from(1u32);
                for &(c, j) in children {
                    let s: BigUint = index
                        .neighbors(p, wid[j])
                        .map(|q| &ways[c][q])
                        .fold(BigUint::zero(), |a, b| a + b);
                    if s.is_zero() {
                        return BigUint::zero();
                    }
                    acc *= s;
                }
                acc
            })
            .collect();
        ways[pos] = row;
        for &(c, _) in children {
            ways[c] = Vec::new();
        }
    }
    Ok(ways[0].iter().fold(BigUint::zero(), |a, b| a + b))
}
