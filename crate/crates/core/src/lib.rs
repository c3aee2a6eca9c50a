//! Exact construction, counting, and verification of dot-product-weighted
//! tree configurations in finite point sets.
//!
//! Every geometric quantity is an exact rational ([`Scalar`]). A tree on
//! `k + 1` labeled vertices carries a weight vector aligned with its
//! canonical (lexicographic) edge order; a *copy* of the weighted tree in a
//! point set is an injective vertex map whose edges realize the prescribed
//! dot products exactly.
//!
//! The crate is organized as:
//!
//! * [`geometry`]: scalars, points, dot products, alpha-hyperplanes, radial
//!   directions, and the `.pts` file format.
//! * [`tree`]: labeled trees, weights, bipartitions, splitting, generators,
//!   and the `.tree` file format.
//! * [`constructions`]: the column, perpendicular-lines, and lattice
//!   constructions with exact predicted copy counts.
//! * [`counting`]: the counting engines (embeddings, homomorphisms, distinct
//!   weight tuples, pinned sets, incidences, radial histograms, the crossing
//!   multigraph, hyperplane descent).
//! * [`bounds`]: exponent formulas, log-log fits, comparison reports.
//! * [`verify`]: the self-contained acceptance checks used by `dot-trees verify`.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod counting;
mod error;
pub mod geometry;
pub mod report;
pub mod sampling;
pub mod tree;
pub mod verify;

pub use error::{Error, Result};
pub use geometry::{dot, AlphaHyperplane, Direction, Point, PointSet, Scalar};
pub use tree::{Bipartition, RootedTree, Tree, WeightVector, WeightedTree};
