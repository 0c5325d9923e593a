//! Fair division of edge items on graph-structured valuation instances.
//!
//! Agents are vertices of a simple graph; items are its edges; each item is
//! valued only by its two endpoints, additively over bundles. This crate
//! provides the instance/allocation model, envy-freeness and EFX predicates,
//! constructive solvers for binary instances, a vertex-cover-parameterized
//! solver for bounded value sets, an exhaustive search oracle, reductions
//! from multicolored independent set, instance generators, and line-based
//! file formats for all of it.

pub mod binary;
pub mod error;
pub mod format;
pub mod fpt;
pub mod generate;
pub mod ilp;
pub mod instance;
pub mod oracle;
pub mod orientation;
pub mod reductions;

pub use error::{Error, Result};
pub use instance::{Allocation, EdgeItem, GraphicalInstance, WelfareReport};
