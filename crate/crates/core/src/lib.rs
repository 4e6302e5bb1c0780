//! Exact colouring-defect computations for cubic graphs and snarks.

pub mod budget;
pub mod census;
pub mod clusters;
pub mod constructions;
pub mod covers;
pub mod edgeset;
pub mod error;
pub mod colouring;
pub mod graph;
pub mod matching;
pub mod named;
pub mod reduction;

pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use graph::{CubicGraph, Multipole};
