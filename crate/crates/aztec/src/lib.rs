//! Exact enumeration of perfect matchings on planar bipartite graphs embedded
//! in the square grid, together with the closed-form product formulas and the
//! graph-surgery identities (factorization splits, pendant symmetrization,
//! complementation parameter maps) that relate the Aztec-triangle, cruciform,
//! and Aztec-rectangle families to one another.
//!
//! All arithmetic is exact: big integers and dyadic rationals, no floating
//! point anywhere. The numeric kernel in [`arith`] is generic over the
//! mantissa integer type via `num-traits`; the concrete aliases below pick
//! arbitrary precision for everything graph-facing.

pub mod arith;
pub mod formulas;
pub mod graph;
pub mod matching;
pub mod regions;
pub mod replay;
pub mod svg;
pub mod symmetry;

/// Arbitrary-precision signed integer used throughout the graph layer.
pub type Int = num_bigint::BigInt;

/// Exact dyadic rational (odd-or-zero mantissa over a power of two).
pub type Weight = arith::Dyadic<Int>;

/// Exact rational with arbitrary denominator, for ratio identities.
pub type Ratio = arith::Frac<Int>;

pub use graph::{AxisDir, AxisSpec, EmbeddedPlanarGraph, GridPoint};
