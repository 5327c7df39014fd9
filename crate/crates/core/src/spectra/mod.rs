//! Exact spectra: characteristic polynomials, minimal polynomials of
//! `2cos(aπ/b)`, exact multiplicities and annihilator dimensions.

mod charpoly;
pub mod modp;
mod numeric;
mod numfield;
mod poly;
mod trig;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use charpoly::char_poly;
pub use numeric::{count_near, numeric_spectrum, NumericCount, GUARD_TOLERANCE, MATCH_TOLERANCE};
pub use numfield::{annihilator_dimension, exact_rank, FieldElem, NumberField};
pub use poly::IntPoly;
pub use trig::{
    candidates, conductor_degree, conductors, cyclotomic, euler_phi, trig_min_poly, trig_min_poly_for_conductor, with_conductor,
    AlgebraicEigenvalue, LambdaError,
};

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: Vertex, vertex_count: usize },
    #[error(transparent)]
    Lambda(#[from] LambdaError),
}

/// One squarefree class of the characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigClass {
    pub factor: IntPoly,
    pub multiplicity: usize,
}

/// Largest `e` with `psi^e | f`, for monic `psi`.
///
/// A remainder modulo `2^61 - 1` screens out non-divisors before the exact
/// division (a monic divisor over `Z` stays a divisor modulo any prime).
pub fn factor_multiplicity(f: &IntPoly, psi: &IntPoly) -> usize {
    assert!(psi.is_monic() && !psi.is_constant(), "divisor must be monic and nonconstant");
    let p = modp::P61;
    let psi_p = psi.mod_p(p);
    let mut f = f.clone();
    let mut e = 0;
    while !f.is_zero() {
        if !modp::poly_rem_monic(&f.mod_p(p), &psi_p, p).is_empty() {
            break;
        }
        match f.div_exact(psi) {
            Some(q) => {
                f = q;
                e += 1;
            }
            None => break,
        }
    }
    e
}

/// `m_G(λ)`: the exponent of `Ψ_λ` in the characteristic polynomial.
pub fn multiplicity(g: &Graph, l: &AlgebraicEigenvalue) -> usize {
    factor_multiplicity(&char_poly(g), &l.min_poly())
}

/// Squarefree classes of the characteristic polynomial, ascending by
/// multiplicity.
pub fn eig_classes(g: &Graph) -> Vec<EigClass> {
    eig_classes_of(&char_poly(g))
}

pub fn eig_classes_of(f: &IntPoly) -> Vec<EigClass> {
    f.squarefree_decomposition()
        .into_iter()
        .map(|(factor, multiplicity)| EigClass { factor, multiplicity })
        .collect()
}

/// Characteristic polynomial of a graph kept around for repeated queries.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub char_poly: IntPoly,
}

impl Spectrum {
    pub fn of(g: &Graph) -> Self {
        Self { char_poly: char_poly(g) }
    }

    pub fn multiplicity(&self, l: &AlgebraicEigenvalue) -> usize {
        factor_multiplicity(&self.char_poly, &l.min_poly())
    }

    pub fn classes(&self) -> Vec<EigClass> {
        eig_classes_of(&self.char_poly)
    }

    /// Multiplicity of every `λ` whose minimal polynomial has degree at most
    /// the order of the matrix; conjugates share one division chain.
    /// `(conductor, multiplicity)` for every conductor whose minimal
    /// polynomial has degree at most `max_degree`, tested modulo `P61` first.
    pub fn conductor_multiplicities(&self, max_degree: usize) -> Vec<(u64, usize)> {
        let f_p = self.char_poly.mod_p(modp::P61);
        conductors(max_degree)
            .iter()
            .map(|&cond| {
                let m = if modp::poly_rem_monic(&f_p, &psi_mod_p61(cond), modp::P61).is_empty() {
                    factor_multiplicity(&self.char_poly, &trig_min_poly_for_conductor(cond))
                } else {
                    0
                };
                (cond, m)
            })
            .collect()
    }

    /// Multiplicity of every candidate of degree at most `max_degree`,
    /// sorted by `(b, a)`.
    pub fn candidate_multiplicities_up_to(&self, max_degree: usize) -> Vec<(AlgebraicEigenvalue, usize)> {
        let mut out: Vec<(AlgebraicEigenvalue, usize)> = self
            .conductor_multiplicities(max_degree)
            .into_iter()
            .flat_map(|(cond, m)| with_conductor(cond).into_iter().map(move |l| (l, m)))
            .collect();
        out.sort_by_key(|(l, _)| (l.b, l.a));
        out
    }

    /// Multiplicity of every candidate of degree at most `deg χ`.
    pub fn candidate_multiplicities(&self) -> Vec<(AlgebraicEigenvalue, usize)> {
        self.candidate_multiplicities_up_to(self.char_poly.degree().unwrap_or(0))
    }
}

fn psi_mod_p61(conductor: u64) -> std::sync::Arc<Vec<u64>> {
    use std::collections::HashMap;
    use std::sync::{Arc, OnceLock, RwLock};
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<u64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().expect("cache lock").get(&conductor) {
        return hit.clone();
    }
    let p = Arc::new(trig_min_poly_for_conductor(conductor).mod_p(modp::P61));
    cache.write().expect("cache lock").entry(conductor).or_insert(p).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(a: u64, b: u64) -> AlgebraicEigenvalue {
        AlgebraicEigenvalue::new(a, b).unwrap()
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&Graph::cycle(4), &lam(1, 2)), 2);
        assert_eq!(multiplicity(&Graph::path(3), &lam(1, 4)), 1);
        assert_eq!(multiplicity(&Graph::complete(3), &lam(2, 3)), 2);
        assert_eq!(multiplicity(&Graph::petersen(), &lam(1, 3)), 5);
        assert_eq!(multiplicity(&Graph::cycle(5), &lam(1, 3)), 0);
        assert_eq!(multiplicity(&Graph::cycle(10), &lam(3, 5)), 2);
    }

    #[test]
    fn classes() {
        let c4 = eig_classes(&Graph::cycle(4));
        assert_eq!(
            c4,
            vec![
                EigClass { factor: IntPoly::from_i64(&[-4, 0, 1]), multiplicity: 1 },
                EigClass { factor: IntPoly::x(), multiplicity: 2 },
            ]
        );
        let k13 = eig_classes(&Graph::star(3));
        assert_eq!(k13[0].factor, IntPoly::from_i64(&[-3, 0, 1]));
        assert_eq!(k13[1], EigClass { factor: IntPoly::x(), multiplicity: 2 });
        assert_eq!(eig_classes(&Graph::path(2)), vec![EigClass { factor: IntPoly::from_i64(&[-1, 0, 1]), multiplicity: 1 }]);
        for g in [Graph::petersen(), Graph::spider(&[2, 3, 3]), Graph::complete(6)] {
            let total: usize = eig_classes(&g).iter().map(|c| c.factor.degree().unwrap() * c.multiplicity).sum();
            assert_eq!(total, g.vertex_count());
        }
    }

    #[test]
    fn candidate_sweep_matches_direct() {
        let g = Graph::cycle(12);
        let s = Spectrum::of(&g);
        for (l, m) in s.candidate_multiplicities() {
            assert_eq!(m, multiplicity(&g, &l));
        }
    }
}
