//! Enumeration of all induced matchings of an undirected graph.
//!
//! [`enumerate::enumerate_c4free`] partitions the solution space around a
//! maximum-degree pivot and runs in constant amortized time per solution on
//! graphs without 4-cycles. [`enumerate::enumerate_general`] handles any graph
//! with a binary pivot-edge partition, and [`enumerate::enumerate_brute`] is a
//! subset-filtering oracle for small inputs.

pub mod analysis;
pub mod bench;
pub mod degree_index;
pub mod dynamic;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod neighborhood;
pub mod stats;

pub use dynamic::{DynamicGraph, UndoMark};
pub use enumerate::{count_induced_matchings, enumerate, Algorithm, Control, EnumConfig, SolutionSink};
pub use graph::{EdgeId, Graph, VertexId};
pub use stats::EnumStats;
