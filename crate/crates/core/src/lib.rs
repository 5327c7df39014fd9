//! Exact spectral toolkit for line graphs attaining the multiplicity bound
//! `m_{L(G)}(λ) = 2c(G) + p(G) − 1`.
//!
//! The crate builds line graphs, computes exact eigenvalue multiplicities for
//! `λ = 2cos(aπ/b)`, recognizes the extremal graphs structurally with
//! certificates, generates extremal families, and verifies the recognizer
//! against the exact engine over enumerated graphs.

pub mod graph;
pub mod line_graph;
pub mod spectra;
pub mod characterize;
pub mod families;
pub mod verify;
