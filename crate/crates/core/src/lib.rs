//! Sandpile groups of standard representative matrices, their periodic
//! tiles, and the sandpile-to-basis multijections read off from them.
//!
//! Everything is exact: entries are arbitrary-precision integers and
//! geometry is done over the rationals.

pub mod chambers;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod lower;
pub mod sandpile;
pub mod srm;
pub mod svg;
pub mod tiling;

pub use error::{Error, Result};
pub use sandpile::{SandpileClass, SandpileLattice};
pub use srm::{Basis, StandardRepMatrix};
pub use tiling::{ShiftingVector, w_representatives};
