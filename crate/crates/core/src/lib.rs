//! Exact deformation cones of graphical zonotopes.
//!
//! The graphical zonotope `Z_G` of a simple graph `G` is the Minkowski sum of
//! the segments `[e_i, e_j]` over the edges of `G`. Its deformations (polytopes
//! whose normal fan coarsens the one of `Z_G`) form a polyhedral cone, which
//! this crate builds in edge-length coordinates: one coordinate per Edge of
//! `Z_G`, cut out by the polygonal equations of its parallelogram and hexagon
//! 2-faces.
//!
//! The crate is `no_std` (it needs `alloc`) and purely algorithmic:
//!
//! - [`graph`]: simple graphs, cliques, contraction and restriction, named families.
//! - [`orientation`]: acyclic orientations, flips and zonotope vertices.
//! - [`faces`]: Edges and 2-faces of `Z_G` as ordered-partition labels.
//! - [`linalg`] and [`cone`]: exact rational linear algebra and a double
//!   description engine for cones `{x >= 0 : Ax = 0}`.
//! - [`defcone`]: the edge-length deformation cone and its analysis.
//! - [`deformation`]: reconstruction of the deformed polytope from lengths.
//! - [`decompose`]: Minkowski decomposition for graphs without `K4`.
//! - [`experiments`]: ray-dimension censuses.
//!
//! All arithmetic is exact. Effort bounds are carried by [`Limits`] and
//! exceeding one is reported as an error instead of a partial answer.

#![no_std]
#![warn(
    clippy::cast_lossless,
    clippy::redundant_closure_for_method_calls,
    clippy::inconsistent_struct_constructor,
    clippy::map_unwrap_or
)]

extern crate alloc;

mod bitset;
pub mod cone;
pub mod decompose;
pub mod defcone;
pub mod deformation;
mod error;
pub mod experiments;
pub mod faces;
pub mod graph;
pub mod linalg;
pub mod orientation;

pub use bitset::BitSet;
pub use cone::{ConeH, ConeSolution, RayList};
pub use decompose::{Decomposition, TriangulationReport};
pub use defcone::{DefCone, FormulaReport, LengthVector};
pub use deformation::{DeformedPolytope, FlipGraph, Summand};
pub use error::{Error, Result};
pub use experiments::Census;
pub use faces::{EdgeLabel, Flat, TwoFaceLabel, ZonotopeEdges};
pub use graph::{Graph, VertexPartition};
pub use linalg::{Rational, RationalMatrix};
pub use orientation::AcyclicOrientation;

/// Effort bounds for the enumerations.
///
/// The defaults are generous enough for every graph on at most six vertices
/// that this crate is exercised on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of acyclic orientations enumerated for a single graph
    /// (the graph itself or one of its contractions).
    pub max_orientations: usize,
    /// Maximum number of rays alive at any point of the double description.
    pub max_rays: usize,
    /// Maximum dimension of the linear span of a cone handed to the ray
    /// enumeration.
    pub max_dim: usize,
    /// Maximum number of rays for which a face lattice is enumerated.
    pub max_fvector_rays: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_orientations: 1 << 24,
            max_rays: 1 << 14,
            max_dim: 128,
            max_fvector_rays: 64,
        }
    }
}
