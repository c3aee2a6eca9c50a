//! Extremal point-set constructions with exact predicted copy counts.
//!
//! * [`build_kms_columns`]: one vertical column of points per vertex of the
//!   larger color class and one point on the x-axis per vertex of the other,
//!   giving `m^{k1}` labeled copies in the plane.
//! * [`build_perp_lines_3d`]: one line perpendicular to the x-axis per
//!   vertex, free in `y` or `z` by color class, giving `m^{k+1}` copies.
//! * [`build_is_lattice`]: the lattice `E` and its dual set `F`, where many
//!   pairs have dot product exactly one.

mod columns;
mod lattice;

use std::collections::BTreeMap;
use std::io::Write;

use num_bigint::BigUint;
use serde::Serialize;

use crate::tree::{Bipartition, Tree};
use crate::{PointSet, Result, WeightVector};

pub use columns::{build_kms_columns, build_perp_lines_3d};
pub use lattice::{build_is_lattice, LatticeConstruction, LatticeMode, LatticeSpec};

/// Provenance of a column or line construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionMetadata {
    pub name: String,
    pub n: usize,
    pub k: usize,
    pub bipartition: Bipartition,
    /// points assigned to each vertex (column or line size)
    pub per_vertex: usize,
    /// tree vertex the abscissa assignment starts from
    pub start_vertex: usize,
    /// vertex → integer abscissa of its column, line, or axis point
    pub abscissas: BTreeMap<usize, u64>,
    /// free coordinates run over `free_offset + 1 ..= free_offset + per_vertex`
    pub free_offset: u64,
    /// filler points sit at `(-x, 0, …)` for these `x`
    pub fillers: Vec<u64>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    pub points: PointSet,
    pub tree: Tree,
    pub weights: WeightVector,
    /// exact labeled copy count of the weighted tree in `points`
    pub predicted_count: BigUint,
    /// product of the assigned subset sizes
    pub product_count: BigUint,
    /// tree vertex → indices of its assigned points
    pub vertex_assignment: BTreeMap<usize, Vec<usize>>,
    pub metadata: ConstructionMetadata,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    construction: &'a str,
    points_digest: String,
    num_points: usize,
    dim: usize,
    tree: &'a Tree,
    weights: &'a WeightVector,
    predicted_count: String,
    product_count: String,
    vertex_assignment: &'a BTreeMap<usize, Vec<usize>>,
    metadata: &'a ConstructionMetadata,
}

impl ConstructionResult {
    /// Writes the JSON sidecar describing this construction.
    pub fn write_sidecar<W: Write>(&self, mut out: W) -> Result<()> {
        let sidecar = Sidecar {
            construction: &self.metadata.name,
            points_digest: self.points.digest(),
            num_points: self.points.len(),
            dim: self.points.dim(),
            tree: &self.tree,
            weights: &self.weights,
            predicted_count: self.predicted_count.to_string(),
            product_count: self.product_count.to_string(),
            vertex_assignment: &self.vertex_assignment,
            metadata: &self.metadata,
        };
        serde_json::to_writer_pretty(&mut out, &sidecar)?;
        writeln!(out)?;
        Ok(())
    }

    pub fn sidecar_json(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_sidecar(&mut buf)?;
        Ok(String::from_utf8(buf).expect("JSON output is UTF-8"))
    }
}
