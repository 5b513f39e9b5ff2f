//! Index of signed complete graphs `(K_n, B)` whose negative part `B` is
//! bicyclic.
//!
//! The crate builds the graphs, computes exact characteristic polynomials and
//! their quotient factorizations, isolates the index exactly or numerically,
//! enumerates bicyclic negative parts up to isomorphism, and runs the
//! verification suites behind the `theta-spectra` binary.

pub mod exactpoly;
pub mod graph;
pub mod report;
pub mod spectra;
pub mod families;
pub mod quotient;
pub mod enumerate;
pub mod perturb;
pub mod verify;
pub mod cli;
