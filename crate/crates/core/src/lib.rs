//! Exact computer algebra for Hom-Lie-Yamaguti algebras over ℚ.
//!
//! Every object is stored by structure constants on a fixed basis and every
//! identity is verified exactly on basis tuples.

pub mod linalg;
pub mod error;
pub mod report;
pub mod algebra;
pub mod representation;
pub mod cohomology;
pub mod deformation;
pub mod extension;
pub mod io;
pub mod samples;
pub mod selftest;
pub mod random;

pub use error::{Error, Result};
