//! Exact counting engines over point sets.
//!
//! Zero dot products are excluded by default; set
//! [`CountOptions::include_zero`] to count them.

mod descent;
mod embed;
mod incidence;
mod index;
mod pinned;
mod proofgraph;
mod radial;
mod tuples;

pub use descent::{affine_dimension, hyperplane_descent, DescentLevel, DescentTrace};
pub use embed::{count_embeddings, count_embeddings_indexed, count_homomorphisms};
pub use incidence::{alpha_lines, incidences};
pub use index::DotProductIndex;
pub use pinned::{
    distinct_dot_products, max_pinned, pair_multiplicity, pinned_set, pinned_sizes, product_set, DotProductStats,
    MaxPinned,
};
pub use proofgraph::{count_crossings, proof_multigraph, AlphaLine, ProofGraph, ProofGraphStats};
pub use radial::{radial_histogram, RadialHistogram};
pub use tuples::{distinct_weight_tuples, pinned_weight_tuples, DistinctTuples, SpillConfig, TupleOptions};

/// Options shared by the counting engines.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CountOptions {
    /// Count zero dot products as ordinary values.
    pub include_zero: bool,
}
