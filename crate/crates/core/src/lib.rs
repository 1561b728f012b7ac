//! Exact systoles of graphs, cogirths of regular matroids, surface
//! embedding certificates, and the supporting exact linear algebra.

pub mod cubicgen;
pub mod error;
pub mod exact;
pub mod graph;
pub mod involutions;
pub mod matroid;
pub mod optimize;
pub mod surface;

pub use error::{Error, Result};
