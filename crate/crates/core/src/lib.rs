//! Biased graphs, their group labellings, rerouting certificates of
//! non-labellability, and the frame and lift matroids built from them.

pub mod bias;
pub mod certify;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod format;
pub mod graph;
pub mod grouplab;
pub mod matroids;

pub use error::{Error, Result};
