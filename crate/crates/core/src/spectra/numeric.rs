//! Floating-point spectrum, used only as an independent cross-check.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Eigenvalues closer than this to `λ` are counted.
pub const MATCH_TOLERANCE: f64 = 1e-8;
/// Eigenvalues between the two tolerances make a count untrustworthy.
pub const GUARD_TOLERANCE: f64 = 1e-6;

/// Sorted eigenvalues of the adjacency matrix.
pub fn numeric_spectrum(g: &Graph) -> Vec<f64> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = a.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericCount {
    pub count: usize,
    /// False when some eigenvalue sits in the ambiguous band
    /// `(MATCH_TOLERANCE, GUARD_TOLERANCE]` around the target.
    pub separated: bool,
}

pub fn count_near(spectrum: &[f64], target: f64) -> NumericCount {
    let mut count = 0;
    let mut separated = true;
    for &x in spectrum {
        let d = (x - target).abs();
        if d <= MATCH_TOLERANCE {
            count += 1;
        } else if d <= GUARD_TOLERANCE {
            separated = false;
        }
    }
    NumericCount { count, separated }
}
