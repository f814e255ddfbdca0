//! Exact spectral computations for Dunkl operators and the
//! Heckman–Polychronakos family `P_m = Σ_i (x_i D_i)^m` acting on polynomials
//! in `N` variables.
//!
//! Every quantity is computed exactly, either with θ specialized to a
//! rational number or with θ kept as a formal variable (values then live in
//! the field of rational functions Q(θ)).

pub mod arith;
pub mod characters;
pub mod cli;
pub mod error;
pub mod operators;
pub mod poly;
pub mod settings;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
