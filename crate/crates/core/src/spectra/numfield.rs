//! Exact linear algebra over `Q(λ) = Q[y]/Ψ(y)`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp::{add_mod, inv_mod, prime_with_root_of_unity, rank_mod, sub_mod};
use super::{AlgebraicEigenvalue, IntPoly, SpectraError};
use crate::graph::{Graph, Vertex};

/// `num(λ) / den` with `deg num < deg Ψ`, `den > 0` and no common integer
/// factor between `den` and the numerator coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    num: Vec<BigInt>,
    den: BigInt,
}

impl FieldElem {
    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    fn size(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).sum::<u64>() + self.den.bits()
    }
}

/// The field `Q[y]/Ψ` for a monic irreducible `Ψ`.
#[derive(Debug, Clone)]
pub struct NumberField {
    psi: IntPoly,
}

impl NumberField {
    pub fn new(psi: IntPoly) -> Self {
        assert!(psi.is_monic(), "defining polynomial must be monic");
        Self { psi }
    }

    pub fn degree(&self) -> usize {
        self.psi.degree().expect("nonzero")
    }

    fn make(&self, mut num: Vec<BigInt>, den: BigInt) -> FieldElem {
        let d = self.degree();
        // reduce modulo the monic Ψ
        while num.len() > d {
            let top = num.pop().expect("nonempty");
            if !top.is_zero() {
                let k = num.len() - d;
                for (j, c) in self.psi.coeffs().iter().take(d).enumerate() {
                    num[k + j] -= &top * c;
                }
            }
        }
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        if num.is_empty() {
            return FieldElem { num, den: BigInt::one() };
        }
        let mut g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
        if den.is_negative() {
            g = -g;
        }
        FieldElem { num: num.iter().map(|c| c / &g).collect(), den: den / g }
    }

    pub fn from_int(&self, k: i64) -> FieldElem {
        self.make(vec![BigInt::from(k)], BigInt::one())
    }

    /// The generator `λ` itself.
    pub fn generator(&self) -> FieldElem {
        self.make(vec![BigInt::zero(), BigInt::one()], BigInt::one())
    }

    pub fn sub(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        let n = x.num.len().max(y.num.len());
        let get = |v: &[BigInt], i: usize| v.get(i).cloned().unwrap_or_default();
        let num = (0..n).map(|i| get(&x.num, i) * &y.den - get(&y.num, i) * &x.den).collect();
        self.make(num, &x.den * &y.den)
    }

    pub fn mul(&self, x: &FieldElem, y: &FieldElem) -> FieldElem {
        if x.is_zero() || y.is_zero() {
            return self.from_int(0);
        }
        let mut num = vec![BigInt::zero(); x.num.len() + y.num.len() - 1];
        for (i, a) in x.num.iter().enumerate() {
            for (j, b) in y.num.iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        self.make(num, &x.den * &y.den)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm over `Q[y]`.
    pub fn inv(&self, x: &FieldElem) -> FieldElem {
        assert!(!x.is_zero(), "inverse of zero");
        let to_rat = |v: &[BigInt]| -> Vec<BigRational> { v.iter().map(|c| BigRational::from_integer(c.clone())).collect() };
        let mut r0 = to_rat(self.psi.coeffs());
        let mut r1 = to_rat(&x.num);
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = rat_divrem(&r0, &r1);
            let s2 = rat_sub(&s0, &rat_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        assert_eq!(r0.len(), 1, "Ψ is irreducible so the gcd is a unit");
        let c = &r0[0];
        // inverse of num is s0 / c; inverse of num/den is s0 * den / c
        let scale = BigRational::from_integer(x.den.clone()) / c;
        let coeffs: Vec<BigRational> = s0.iter().map(|s| s * &scale).collect();
        let den = coeffs.iter().fold(BigInt::one(), |l, r| l.lcm(r.denom()));
        let num = coeffs.iter().map(|r| r.numer() * (&den / r.denom())).collect();
        self.make(num, den)
    }
}

fn rat_trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    rat_trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rat_trim(out)
}

fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), rat_trim(r));
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    let lead = &b[db];
    while r.len() > db {
        let top = r.pop().expect("nonempty");
        let k = r.len() - db;
        let f = top / lead;
        for j in 0..db {
            r[k + j] -= &f * &b[j];
        }
        q[k] = f;
        r = rat_trim(r);
        if r.len() <= db {
            break;
        }
    }
    (rat_trim(q), rat_trim(r))
}

/// Rank of a matrix over a number field (rows are consumed).
#[allow(clippy::needless_range_loop)]
pub fn rank(field: &NumberField, mut rows: Vec<Vec<FieldElem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let piv = (rank..rows.len()).filter(|&r| !rows[r][c].is_zero()).min_by_key(|&r| rows[r][c].size());
        let Some(piv) = piv else { continue };
        rows.swap(rank, piv);
        let inv = field.inv(&rows[rank][c]);
        for j in c..cols {
            rows[rank][j] = field.mul(&rows[rank][j], &inv);
        }
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for j in c..cols {
                if !rows[rank][j].is_zero() {
                    let t = field.mul(&f, &rows[rank][j]);
                    rows[r][j] = field.sub(&rows[r][j], &t);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn modular_root(n: u64) -> (u64, u64) {
    static CACHE: OnceLock<RwLock<HashMap<u64, (u64, u64)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(&hit) = cache.read().expect("cache lock").get(&n) {
        return hit;
    }
    let (p, zeta) = prime_with_root_of_unity(n);
    let r = add_mod(zeta, inv_mod(zeta, p), p);
    cache.write().expect("cache lock").insert(n, (p, r));
    (p, r)
}

/// Whether `A - λI`, restricted to `cols`, has full column rank modulo a
/// prime ideal over `p`. A full-rank reduction certifies full rank over
/// `Q(λ)`: the ring map `Z[λ] → F_p`, `λ ↦ ζ + ζ⁻¹`, is a homomorphism and a
/// minor nonzero in the image is nonzero in `Z[λ]`.
fn full_rank_mod_p(g: &Graph, l: &AlgebraicEigenvalue, cols: &[Vertex]) -> bool {
    let (p, r) = modular_root(l.conductor());
    let n = g.vertex_count();
    let rows: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            cols.iter()
                .map(|&j| {
                    let a = u64::from(g.has_edge(i, j));
                    if i == j {
                        sub_mod(a, r, p)
                    } else {
                        a
                    }
                })
                .collect()
        })
        .collect();
    rank_mod(rows, p) == cols.len()
}

/// Dimension of the space of `λ`-eigenvectors vanishing on `u_set`: the
/// column nullity of `A - λI` with the columns of `u_set` dropped, computed
/// exactly in `Q(λ)`.
pub fn annihilator_dimension(g: &Graph, l: &AlgebraicEigenvalue, u_set: &[Vertex]) -> Result<usize, SpectraError> {
    let n = g.vertex_count();
    if let Some(&v) = u_set.iter().find(|&&v| v >= n) {
        return Err(SpectraError::InvalidVertex { vertex: v, vertex_count: n });
    }
    let mut in_u = vec![false; n];
    for &v in u_set {
        in_u[v] = true;
    }
    let cols: Vec<Vertex> = (0..n).filter(|&v| !in_u[v]).collect();
    if cols.is_empty() || full_rank_mod_p(g, l, &cols) {
        return Ok(0);
    }
    Ok(cols.len() - exact_rank(g, l, &cols))
}

/// Exact rank of `(A - λI)[:, cols]`, without the modular shortcut.
pub fn exact_rank(g: &Graph, l: &AlgebraicEigenvalue, cols: &[Vertex]) -> usize {
    let field = NumberField::new((*l.min_poly()).clone());
    let minus_lambda = field.sub(&field.from_int(0), &field.generator());
    let (zero, one) = (field.from_int(0), field.from_int(1));
    let rows: Vec<Vec<FieldElem>> = (0..g.vertex_count())
        .map(|i| {
            cols.iter()
                .map(|&j| {
                    if i == j {
                        minus_lambda.clone()
                    } else if g.has_edge(i, j) {
                        one.clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    rank(&field, rows)
}
