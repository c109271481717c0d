//! Pieces of the `indexlab` binary that are also exercised by tests.

pub mod compare;
pub mod render;
pub mod witness;
