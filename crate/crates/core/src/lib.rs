//! Edge ideals of squares of trees: exact graph operations, chordality and
//! gap detection, linear quotients of quadratic monomial ideals, exact
//! combinatorial invariants, a Hochster-formula Betti oracle, tree family
//! recognition with closed-form invariants, and exhaustive small-tree scans.
//!
//! Vertices are labeled `1..=n` throughout.
//!
//! ```
//! use sqtree::{chordality::is_cochordal, graph::{square, Graph}};
//!
//! let t = Graph::from_edges(6, [(1, 3), (2, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
//! let sq = square(&t);
//! assert_eq!(sq.edge_count(), 11);
//! assert!(!is_cochordal(&sq));
//! ```

pub mod chordality;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod invariants;
pub mod io;
mod matching;
pub mod recognize;
pub mod scan;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
