//! Total difference labelings of graphs.
//!
//! A labeling `L: V -> {1, ..., k}` induces edge labels `|L(u) - L(v)|`; it is
//! a total difference labeling when the combined vertex/edge labeling is a
//! proper total coloring. Equivalently the vertex labeling is proper and has
//! no *double* (adjacent `u, v` with `L(u) = 2 L(v)`) and no *triple* (a path
//! `u - v - w` with `|L(u) - L(v)| = |L(v) - L(w)|`).

pub mod brute;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod lobster;
pub mod solver;
pub mod verifier;

pub use error::{Error, Result};
pub use graph::{Diameter, FamilySpec, Graph, Role, VertexRoleMap};
pub use solver::{BoundsResult, Provenance, SearchOptions, SearchOutcome, VertexOrder};
pub use verifier::{Labeling, Violation, ViolationKind, ViolationReport};
