//! Constructive graph coloring within `⌈(1−ε)(Δ+1) + εω⌉`.
//!
//! Every step of the argument is either an algorithm or a checkable
//! certificate:
//!
//! * [`graph`]: graph representation, DIMACS I/O, exact matchings and generators.
//! * [`cliques`]: maximum clique enumeration, the clique graph and its
//!   components, plus the Hajnal and Kostochka intersection certificates.
//! * [`transversal`]: independent systems of representatives, totally
//!   dominating certificates and the stable set hitting every maximum clique.
//! * [`coloring`]: exact chromatic number, greedy, Brooks, list coloring of
//!   cliques minus a matching and the dense-neighbourhood extension.
//! * [`sparse`]: the naive random coloring procedure and its statistics.
//! * [`pipeline`]: the recursive coloring algorithm and its report.

pub mod cliques;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod pipeline;
pub mod rational;
pub mod sparse;
pub mod transversal;

pub use error::{Error, Result};
pub use graph::Graph;
