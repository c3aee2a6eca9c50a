use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use rayon::prelude::*;

use super::embed::ExtensionOrder;
use super::DotProductIndex;
use crate::tree::{RootedTree, Tree};
use crate::{Error, Point, PointSet, Result, Scalar};

/// Options for distinct weight-tuple enumeration.
#[derive(Clone, Debug, Default)]
pub struct TupleOptions {
    pub include_zero: bool,
    /// Return the tuples themselves (sorted) in addition to their count.
    pub keep_tuples: bool,
    /// Bound memory by spilling sorted runs to disk.
    pub spill: Option<SpillConfig>,
}

#[derive(Clone, Debug)]
pub struct SpillConfig {
    /// Tuples buffered before a sorted run is written.
    pub max_in_memory: usize,
    /// Directory for run files; the system temp dir when `None`.
    pub dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctTuples {
    pub count: usize,
    /// Sorted tuples, present when requested (and not spilled).
    pub tuples: Option<Vec<Vec<Scalar>>>,
}

type Tuple = Box<[u32]>;

struct TupleWalker<'a> {
    index: &'a DotProductIndex,
    order: &'a ExtensionOrder,
    num_edges: usize,
}

impl TupleWalker<'_> {
    /// Visits the weight tuple of every injective map with position 0 sent
    /// to `root_point`.
    fn walk(&self, root_point: usize, sink: &mut dyn FnMut(&[u32])) {
        let n = self.index.rows();
        let mut assign = vec![0usize; self.order.len()];
        let mut used = vec![false; n];
        let mut tuple = vec![0u32; self.num_edges];
        assign[0] = root_point;
        used[root_point] = true;
        self.extend(1, &mut assign, &mut used, &mut tuple, sink);
    }

    fn extend(
        &self,
        pos: usize,
        assign: &mut [usize],
        used: &mut [bool],
        tuple: &mut [u32],
        sink: &mut dyn FnMut(&[u32]),
    ) {
        if pos == self.order.len() {
            sink(tuple);
            return;
        }
        let (pp, j) = self.order.parent[pos].expect("non-root position has a parent");
        let from = assign[pp];
        for c in 0..self.index.rows() {
            if used[c] {
                continue;
            }
            let v = self.index.get(from, c);
            if self.index.is_excluded(v) {
                continue;
            }
            tuple[j] = v;
            used[c] = true;
            assign[pos] = c;
            self.extend(pos + 1, assign, used, tuple, sink);
            used[c] = false;
        }
    }
}

fn materialize(index: &DotProductIndex, mut ids: Vec<Tuple>) -> Vec<Vec<Scalar>> {
    // ids ascend with values, so sorting ids sorts the scalar tuples too
    ids.sort_unstable();
    ids.iter()
        .map(|t| t.iter().map(|&v| index.value(v).clone()).collect())
        .collect()
}

fn collect_in_memory(walker: &TupleWalker<'_>, roots: Vec<usize>, keep: bool) -> (usize, Option<Vec<Tuple>>) {
    let set = roots
        .into_par_iter()
        .fold(HashSet::<Tuple>::new, |mut acc, r| {
            walker.walk(r, &mut |t| {
                if !acc.contains(t) {
                    acc.insert(t.into());
                }
            });
            acc
        })
        .reduce(HashSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        });
    let count = set.len();
    (count, keep.then(|| set.into_iter().collect()))
}

fn encode(t: &[u32]) -> String {
    // fixed width keeps lexicographic order equal to numeric order
    t.iter().map(|v| format!("{v:010}")).collect::<Vec<_>>().join(" ")
}

/// External sort: sorted, deduplicated runs on disk, then a k-way merge
/// that counts distinct lines.
fn collect_spilled(walker: &TupleWalker<'_>, roots: Vec<usize>, cfg: &SpillConfig) -> Result<usize> {
    let dir = match &cfg.dir {
        Some(d) => tempfile::tempdir_in(d)?,
        None => tempfile::tempdir()?,
    };
    let limit = cfg.max_in_memory.max(1);
    let mut runs: Vec<PathBuf> = Vec::new();
    let mut buffer: BTreeSet<Tuple> = BTreeSet::new();
    let mut io_error: Option<std::io::Error> = None;

    let flush = |buffer: &mut BTreeSet<Tuple>, runs: &mut Vec<PathBuf>| -> std::io::Result<()> {
        if buffer.is_empty() {
            return Ok(());
        }
        let path = dir.path().join(format!("run-{}.txt", runs.len()));
        let mut out = BufWriter::new(File::create(&path)?);
        for t in std::mem::take(buffer) {
            writeln!(out, "{}", encode(&t))?;
        }
        out.flush()?;
        runs.push(path);
        Ok(())
    };

    for r in roots {
        walker.walk(r, &mut |t| {
            if io_error.is_some() {
                return;
            }
            if !buffer.contains(t) {
                buffer.insert(t.into());
            }
            if buffer.len() >= limit {
                if let Err(e) = flush(&mut buffer, &mut runs) {
                    io_error = Some(e);
                }
            }
        });
        if let Some(e) = io_error.take() {
            return Err(e.into());
        }
    }
    flush(&mut buffer, &mut runs)?;

    let mut readers = runs
        .iter()
        .map(|p| File::open(p).map(|f| BufReader::new(f).lines()))
        .collect::<std::io::Result<Vec<_>>>()?;
    let mut heap = BinaryHeap::new();
    for (i, r) in readers.iter_mut().enumerate() {
        if let Some(line) = r.next() {
            heap.push(Reverse((line?, i)));
        }
    }
    let mut count = 0;
    let mut last: Option<String> = None;
    while let Some(Reverse((line, i))) = heap.pop() {
        if last.as_deref() != Some(line.as_str()) {
            count += 1;
            last = Some(line);
        }
        if let Some(next) = readers[i].next() {
            heap.push(Reverse((next?, i)));
        }
    }
    Ok(count)
}

fn run(tree: &Tree, root: usize, roots: Vec<usize>, points: &PointSet, opts: &TupleOptions) -> Result<DistinctTuples> {
    if points.len() < tree.num_vertices() {
        return Ok(DistinctTuples {
            count: 0,
            tuples: opts.keep_tuples.then(Vec::new),
        });
    }
    let index = DotProductIndex::square(points, opts.include_zero);
    let order = ExtensionOrder::new(tree, root);
    let walker = TupleWalker {
        index: &index,
        order: &order,
        num_edges: tree.num_edges(),
    };
    if let Some(cfg) = &opts.spill {
        let count = collect_spilled(&walker, roots, cfg)?;
        return Ok(DistinctTuples { count, tuples: None });
    }
    let (count, ids) = collect_in_memory(&walker, roots, opts.keep_tuples);
    Ok(DistinctTuples {
        count,
        tuples: ids.map(|ids| materialize(&index, ids)),
    })
}

/// Distinct weight tuples `(φ(a_1)·φ(b_1), …, φ(a_k)·φ(b_k))` over all
/// injective maps `φ`, in canonical edge order.
pub fn distinct_weight_tuples(tree: &Tree, points: &PointSet, opts: &TupleOptions) -> Result<DistinctTuples> {
    run(tree, 1, (0..points.len()).collect(), points, opts)
}

/// Distinct weight tuples over the injective maps sending the root of
/// `rooted` to `pin`.
pub fn pinned_weight_tuples(
    rooted: &RootedTree,
    pin: &Point,
    points: &PointSet,
    opts: &TupleOptions,
) -> Result<DistinctTuples> {
    let x = points.index_of(pin).ok_or(Error::PinNotInSet)?;
    run(rooted.tree(), rooted.root(), vec![x], points, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{make_path, make_star};

    fn line(xs: &[i64]) -> PointSet {
        PointSet::new(2, xs.iter().map(|&x| Point::from_ints(&[x, 0])).collect()).unwrap()
    }

    fn ints(t: &[Vec<Scalar>]) -> Vec<Vec<i64>> {
        t.iter()
            .map(|v| v.iter().map(|s| s.to_string().parse().unwrap()).collect())
            .collect()
    }

    fn keep() -> TupleOptions {
        TupleOptions {
            keep_tuples: true,
            ..TupleOptions::default()
        }
    }

    #[test]
    fn examples() {
        let e = line(&[1, 2, 3]);
        let r = distinct_weight_tuples(&make_path(1).unwrap(), &e, &keep()).unwrap();
        assert_eq!(r.count, 3);
        assert_eq!(ints(&r.tuples.unwrap()), vec![vec![2], vec![3], vec![6]]);

        let r = distinct_weight_tuples(&make_path(2).unwrap(), &e, &keep()).unwrap();
        assert_eq!(r.count, 6);
        assert_eq!(
            ints(&r.tuples.unwrap()),
            vec![vec![2, 3], vec![2, 6], vec![3, 2], vec![3, 6], vec![6, 2], vec![6, 3]]
        );

        let single = line(&[5]);
        assert_eq!(
            distinct_weight_tuples(&make_path(1).unwrap(), &single, &keep())
                .unwrap()
                .count,
            0
        );
    }

    #[test]
    fn pinned_examples() {
        let e = line(&[1, 2, 3]);
        let rooted = RootedTree::new(make_path(1).unwrap(), 1).unwrap();
        let r = pinned_weight_tuples(&rooted, &Point::from_ints(&[1, 0]), &e, &keep()).unwrap();
        assert_eq!(ints(&r.tuples.unwrap()), vec![vec![2], vec![3]]);

        let center = RootedTree::new(make_path(2).unwrap(), 2).unwrap();
        for x in [1, 2, 3] {
            let r = pinned_weight_tuples(&center, &Point::from_ints(&[x, 0]), &e, &keep()).unwrap();
            assert_eq!(r.count, 2);
        }
        assert!(matches!(
            pinned_weight_tuples(&rooted, &Point::from_ints(&[9, 0]), &e, &keep()),
            Err(Error::PinNotInSet)
        ));
    }

    #[test]
    fn zero_products_excluded_by_default() {
        let e = PointSet::new(
            2,
            vec![
                Point::from_ints(&[1, 0]),
                Point::from_ints(&[0, 1]),
                Point::from_ints(&[1, 1]),
            ],
        )
        .unwrap();
        let star = make_star(2).unwrap();
        let without = distinct_weight_tuples(&star, &e, &TupleOptions::default()).unwrap();
        let with = distinct_weight_tuples(
            &star,
            &e,
            &TupleOptions {
                include_zero: true,
                ..TupleOptions::default()
            },
        )
        .unwrap();
        // center (1,1): (1,1) both ways; centers (1,0)/(0,1): one zero edge each
        assert_eq!(without.count, 1);
        assert_eq!(with.count, 3);
    }

    #[test]
    fn spilled_count_matches_in_memory() {
        let pts: Vec<Point> = (1..=4)
            .flat_map(|x| (1..=3).map(move |y| Point::from_ints(&[x, y])))
            .collect();
        let e = PointSet::new(2, pts).unwrap();
        for tree in [make_path(2).unwrap(), make_star(3).unwrap()] {
            let mem = distinct_weight_tuples(&tree, &e, &TupleOptions::default()).unwrap();
            let spill = TupleOptions {
                spill: Some(SpillConfig {
                    max_in_memory: 7,
                    dir: None,
                }),
                ..TupleOptions::default()
            };
            let disk = distinct_weight_tuples(&tree, &e, &spill).unwrap();
            assert_eq!(mem.count, disk.count);
        }
    }
}
