//! Characteristic polynomials of adjacency matrices by Berkowitz's
//! division-free algorithm.
//!
//! Working from the bottom-right corner, the polynomial of the trailing
//! `s × s` submatrix is obtained from the `(s-1) × (s-1)` one by a
//! lower-triangular Toeplitz product whose first column is
//! `1, -a, -RC, -RMC, -RM²C, …`. The quantities `R Mʲ C` are walk counts and
//! are produced by repeated sparse neighbor sums. A checked `i128` pass is
//! tried first and big integers take over on overflow.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;
use crate::graph::Graph;

/// `det(xI - A(g))`, monic of degree `|V(g)|`.
pub fn char_poly(g: &Graph) -> IntPoly {
    let desc = berkowitz_i128(g)
        .map(|c| c.into_iter().map(BigInt::from).collect())
        .unwrap_or_else(|| berkowitz_big(g));
    IntPoly::new(desc.into_iter().rev().collect())
}

/// Neighbors of `v` with index at least `lo`.
fn tail_neighbors(g: &Graph, v: usize, lo: usize) -> impl Iterator<Item = usize> + '_ {
    g.neighbors(v).filter(move |&w| w >= lo)
}

fn berkowitz_i128(g: &Graph) -> Option<Vec<i128>> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(vec![1]);
    }
    // descending coefficients of the trailing 1×1 block (zero diagonal)
    let mut poly: Vec<i128> = vec![1, 0];
    for k in (0..n - 1).rev() {
        let s = n - k;
        let mut toeplitz = vec![0i128; s + 1];
        toeplitz[0] = 1;
        // v = C restricted to rows k+1..n
        let mut v = vec![0i128; n];
        for w in tail_neighbors(g, k, k + 1) {
            v[w] = 1;
        }
        for t in toeplitz.iter_mut().skip(2) {
            let mut dot = 0i128;
            for w in tail_neighbors(g, k, k + 1) {
                dot = dot.checked_add(v[w])?;
            }
            *t = dot.checked_neg()?;
            let mut next = vec![0i128; n];
            for (u, slot) in next.iter_mut().enumerate().skip(k + 1) {
                let mut acc = 0i128;
                for w in tail_neighbors(g, u, k + 1) {
                    acc = acc.checked_add(v[w])?;
                }
                *slot = acc;
            }
            v = next;
        }
        let mut out = vec![0i128; s + 1];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = 0i128;
            for j in i.saturating_sub(s)..=i.min(s - 1) {
                let t = toeplitz[i - j];
                if t != 0 && poly[j] != 0 {
                    acc = acc.checked_add(t.checked_mul(poly[j])?)?;
                }
            }
            *o = acc;
        }
        poly = out;
    }
    Some(poly)
}

fn berkowitz_big(g: &Graph) -> Vec<BigInt> {
    let n = g.vertex_count();
    if n == 0 {
        return vec![BigInt::from(1)];
    }
    let mut poly: Vec<BigInt> = vec![BigInt::from(1), BigInt::zero()];
    for k in (0..n - 1).rev() {
        let s = n - k;
        let mut toeplitz = vec![BigInt::zero(); s + 1];
        toeplitz[0] = BigInt::from(1);
        let mut v = vec![BigInt::zero(); n];
        for w in tail_neighbors(g, k, k + 1) {
            v[w] = BigInt::from(1);
        }
        for t in toeplitz.iter_mut().skip(2) {
            let dot: BigInt = tail_neighbors(g, k, k + 1).map(|w| &v[w]).sum();
            *t = -dot;
            let mut next = vec![BigInt::zero(); n];
            for (u, slot) in next.iter_mut().enumerate().skip(k + 1) {
                *slot = tail_neighbors(g, u, k + 1).map(|w| &v[w]).sum();
            }
            v = next;
        }
        let mut out = vec![BigInt::zero(); s + 1];
        for (i, o) in out.iter_mut().enumerate() {
            for j in i.saturating_sub(s)..=i.min(s - 1) {
                let t = &toeplitz[i - j];
                if !t.is_zero() && !poly[j].is_zero() {
                    *o += t * &poly[j];
                }
            }
        }
        poly = out;
    }
    poly
}
