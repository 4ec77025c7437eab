//! Exact computations with soluble graphs and related generation graphs of
//! finite permutation groups.

pub mod catalog;
pub mod certs;
pub mod chain;
pub mod error;
pub mod field;
pub mod graph;
pub mod group;
pub mod intgraph;
pub mod oracle;
pub mod perm;
pub mod predicate;
pub mod simple_graph;
pub mod suite;
pub mod table;

pub use catalog::{build, build_str, parse_spec, GroupSpec};
pub use error::{Error, Result};
pub use graph::{Ball, Dist, GraphView};
pub use group::{Group, DEFAULT_CAP};
pub use perm::Permutation;
pub use predicate::PredicateKind;
