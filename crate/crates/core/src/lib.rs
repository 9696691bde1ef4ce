//! Reduced, strongly reduced and extremely reduced DAGs: predicates,
//! Turán-type edge bounds, extremal constructions, box intersection graphs
//! and an exhaustive verification harness.

pub mod boxes;
pub mod dag;
pub mod error;
pub mod generators;
pub mod harness;
pub mod io;
pub mod predicates;
pub mod turan;

pub use dag::{Dag, LevelPartition, Reachability, TopoOrder};
pub use error::{Error, Result};
