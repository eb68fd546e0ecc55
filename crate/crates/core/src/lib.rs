//! Construction and verification of the Nordstrom-Robinson code and its
//! punctured variant.
//!
//! The crate builds both codes from the extended Golay code and checks their
//! distance spectra, complete regularity, design properties, automorphism
//! groups and complete transitivity, all with exact arithmetic.

pub mod code;
pub mod construct;
pub mod error;
pub mod hamming;
pub mod report;
pub mod spectrum;
pub mod symmetry;

pub use code::{project, puncture, translate, Code, CodePredicates, ProjectionSpec};
pub use error::{Error, Result};
pub use hamming::{krawtchouk, sphere, KrawtchoukTable, Vertex};
