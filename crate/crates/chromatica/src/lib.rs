//! Exact-arithmetic computation of chromatic polynomials of simple graphs
//! and of characteristic polynomials and chamber counts of graphic and
//! projective-line hyperplane arrangements.
//!
//! The crate is organized around one idea: compute fast with structure
//! (closed forms, quotient rules for edge additions, memoized
//! deletion-contraction) and verify with independent brute force (edge-subset
//! expansion, bond-lattice Möbius sums, direct coloring and finite-field
//! point counts). Every quotient goes through exact polynomial division, so
//! a misapplied rule raises an error instead of corrupting a result.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here can be shared and sent across threads freely.

pub mod arrangement;
pub mod canon;
pub mod chromatic;
pub mod coeffs;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod poly;

pub use arrangement::{
    add_edge_chambers, add_line_characteristic, chambers, characteristic_lines, intersect_count,
    rank2_characteristic, ChamberCount, GraphicArrangement, ProjLine, ProjLineArrangement,
};
pub use canon::{canonical_key, CanonKey};
pub use chromatic::{
    chromatic, chromatic_of_sum, chromatic_traced, classify_edge_addition, closed_form,
    extend_by_edge, inductive_chromatic, subgraph_sum, ClosedFormFamily, ComputationTrace,
    EdgeAdditionRule, EngineOptions,
};
pub use coeffs::{count_patterns, leading_coefficients, PatternCounts};
pub use error::{Error, Result};
pub use graph::{is_path_intersecting, Graph, Subgraph};
pub use oracle::{
    bond_lattice_characteristic, coloring_count, fp_point_count, line_lattice_characteristic,
    whitney_chromatic, BondLattice,
};
pub use poly::Poly;

pub use num_bigint::BigInt;
