//! Berezin transforms attached to spherical Landau levels on CP^n.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`]: Pochhammer symbols, Jacobi polynomials, terminating
//!   hypergeometric series and Gauss–Jacobi quadrature;
//! * [`geometry`]: the affine chart of CP^n, Fubini–Study distance, the
//!   measure dμ_n, its sampler and the radial reduction of biinvariant
//!   integrals;
//! * [`spectra`]: dimensions, reproducing kernels, spectral functions and
//!   the finite-difference magnetic Laplacian;
//! * [`berezin`]: the Berezin kernel, the variational weight W in its
//!   closed, projected and product forms, and application of the transform;
//! * [`report`] / [`verify`]: machine-readable check documents and the
//!   invariant suites that fill them.

pub mod berezin;
pub mod error;
pub mod geometry;
pub mod report;
pub mod specfun;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
