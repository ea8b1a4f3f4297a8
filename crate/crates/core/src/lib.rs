//! Quantum eigenmodes and breather dynamics of a one-dimensional nonlinear
//! Klein-Gordon lattice.
//!
//! The pipeline runs bottom-up:
//!
//! * [`onsite`] diagonalizes a single anharmonic oscillator in a truncated
//!   harmonic basis and, independently, by Bohr-Sommerfeld quantization.
//! * [`symbasis`] enumerates excitation configurations under the total cutoff
//!   and groups them into translation orbits and momentum sectors.
//! * [`qham`] assembles and diagonalizes the Hamiltonian block of each sector.
//! * [`bands`] identifies multi-phonon bound-state bands by their overlap with
//!   single-site Bloch waves.
//! * [`breather`] evolves the Wannier state of a band and tracks the on-site
//!   kinetic energy.
//! * [`oracle`] is a brute-force dense solver used for validation.
//! * [`cli`] wires everything into the `kgbreather` command-line tool.

pub mod bands;
pub mod breather;
pub mod cli;
pub mod error;
pub mod lattice;
mod linalg;
pub mod onsite;
pub mod oracle;
pub mod qham;
pub mod symbasis;

pub use error::{Error, Result};

/// Complex scalar used for all momentum-space quantities.
pub type C64 = faer::c64;
