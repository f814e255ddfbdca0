//! Eigenvalues, traces and eigenfunctions of `P_m`.

mod brute;
mod catalog;
mod jack;
mod closed;

pub use brute::*;
pub use catalog::*;
pub use jack::*;
pub use closed::*;
