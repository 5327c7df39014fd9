//! The numbers `2cos(aπ/b)` and their minimal polynomials.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambdaError {
    #[error("2cos({a}π/{b}) is not in canonical form: need gcd(a,b) = 1 and 1 ≤ a < b")]
    NonCanonical { a: u64, b: u64 },
    #[error("cannot parse `{0}` as a/b")]
    Parse(String),
}

/// `λ = 2cos(aπ/b)` with `gcd(a, b) = 1` and `1 ≤ a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawLambda")]
pub struct AlgebraicEigenvalue {
    pub a: u64,
    pub b: u64,
}

#[derive(Deserialize)]
struct RawLambda {
    a: u64,
    b: u64,
}

impl TryFrom<RawLambda> for AlgebraicEigenvalue {
    type Error = LambdaError;
    fn try_from(r: RawLambda) -> Result<Self, LambdaError> {
        Self::new(r.a, r.b)
    }
}

impl AlgebraicEigenvalue {
    pub fn new(a: u64, b: u64) -> Result<Self, LambdaError> {
        if a == 0 || a >= b || a.gcd(&b) != 1 {
            return Err(LambdaError::NonCanonical { a, b });
        }
        Ok(Self { a, b })
    }

    /// Order of the root of unity `ζ` with `λ = ζ + ζ⁻¹`.
    pub fn conductor(&self) -> u64 {
        if self.a % 2 == 1 {
            2 * self.b
        } else {
            self.b
        }
    }

    /// Degree of the minimal polynomial, `φ(n)/2`.
    pub fn degree(&self) -> usize {
        (euler_phi(self.conductor()) / 2) as usize
    }

    pub fn value(&self) -> f64 {
        2.0 * (self.a as f64 * std::f64::consts::PI / self.b as f64).cos()
    }

    pub fn min_poly(&self) -> Arc<IntPoly> {
        trig_min_poly_for_conductor(self.conductor())
    }

    /// The conjugates sharing this minimal polynomial.
    pub fn conjugates(&self) -> Vec<AlgebraicEigenvalue> {
        with_conductor(self.conductor())
    }
}

impl fmt::Display for AlgebraicEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

impl FromStr for AlgebraicEigenvalue {
    type Err = LambdaError;
    fn from_str(s: &str) -> Result<Self, LambdaError> {
        let (a, b) = s.trim().split_once('/').ok_or_else(|| LambdaError::Parse(s.into()))?;
        let a = a.trim().parse().map_err(|_| LambdaError::Parse(s.into()))?;
        let b = b.trim().parse().map_err(|_| LambdaError::Parse(s.into()))?;
        Self::new(a, b)
    }
}

pub fn euler_phi(n: u64) -> u64 {
    super::modp::prime_factors(n).iter().fold(n, |acc, q| acc / q * (q - 1))
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn min_poly_cache() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(cache: &RwLock<HashMap<u64, Arc<IntPoly>>>, n: u64, build: impl FnOnce() -> IntPoly) -> Arc<IntPoly> {
    if let Some(p) = cache.read().expect("cache lock").get(&n) {
        return p.clone();
    }
    let p = Arc::new(build());
    cache.write().expect("cache lock").entry(n).or_insert(p).clone()
}

/// `Φ_n`, by dividing `x^n - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    cached(cyclotomic_cache(), n, || {
        (1..n).filter(|d| n.is_multiple_of(*d)).fold(IntPoly::x_pow_minus_one(n as usize), |acc, d| {
            acc.div_exact(&cyclotomic(d)).expect("Φ_d divides x^n - 1")
        })
    })
}

/// Minimal polynomial of `ζ + ζ⁻¹` for a primitive `n`-th root `ζ`, `n ≥ 3`.
///
/// `Φ_n` is palindromic of degree `2d`, so
/// `x^{-d} Φ_n(x) = c_d + Σ_j c_{d+j} (x^j + x^{-j})` and
/// `x^j + x^{-j} = D_j(x + x^{-1})` with `D_0 = 2`, `D_1 = y`,
/// `D_{j+1} = y D_j - D_{j-1}`.
pub fn trig_min_poly_for_conductor(n: u64) -> Arc<IntPoly> {
    assert!(n >= 3, "conductor must be at least 3");
    cached(min_poly_cache(), n, || {
        let phi = cyclotomic(n);
        let d = phi.degree().expect("nonzero") / 2;
        let y = IntPoly::x();
        let mut dickson = vec![IntPoly::from_i64(&[2]), y.clone()];
        for j in 1..d {
            let next = &(&y * &dickson[j]) - &dickson[j - 1];
            dickson.push(next);
        }
        let mut psi = IntPoly::new(vec![phi.coeff(d)]);
        for (j, dj) in dickson.iter().enumerate().skip(1).take(d) {
            psi = &psi + &dj.scale(&phi.coeff(d + j));
        }
        psi
    })
}

pub fn trig_min_poly(l: &AlgebraicEigenvalue) -> Arc<IntPoly> {
    l.min_poly()
}

/// All canonical `λ` with conductor `n`, ascending by `(b, a)`.
pub fn with_conductor(n: u64) -> Vec<AlgebraicEigenvalue> {
    let mut out: Vec<AlgebraicEigenvalue> = if n % 2 == 1 {
        (1..n).filter(|j| 2 * j < n).map(|j| (2 * j, n)).collect::<Vec<_>>()
    } else {
        (1..n / 2).map(|j| (j, n / 2)).collect()
    }
    .into_iter()
    .filter_map(|(a, b)| AlgebraicEigenvalue::new(a, b).ok())
    .filter(|l| l.conductor() == n)
    .collect();
    out.sort_by_key(|l| (l.b, l.a));
    out
}

/// Conductors `n ≥ 3` with `φ(n)/2 ≤ max_degree`, ascending.
pub fn conductors(max_degree: usize) -> Arc<Vec<u64>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<u64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().expect("cache lock").get(&max_degree) {
        return hit.clone();
    }
    // φ(n) ≥ sqrt(n/2), so φ(n)/2 ≤ D forces n ≤ 2(2D)^2
    let bound = 8 * (max_degree as u64).pow(2) + 6;
    let list: Vec<u64> = if max_degree == 0 {
        Vec::new()
    } else {
        (3..=bound).filter(|&n| (euler_phi(n) / 2) as usize <= max_degree).collect()
    };
    cache.write().expect("cache lock").entry(max_degree).or_insert(Arc::new(list)).clone()
}

/// Every canonical `λ` whose minimal polynomial has degree at most
/// `max_degree`, sorted by `(b, a)`.
pub fn candidates(max_degree: usize) -> Vec<AlgebraicEigenvalue> {
    let mut out: Vec<AlgebraicEigenvalue> = conductors(max_degree).iter().flat_map(|&n| with_conductor(n)).collect();
    out.sort_by_key(|l| (l.b, l.a));
    out
}

/// Degree of the minimal polynomial of `ζ + ζ⁻¹`, without building it.
pub fn conductor_degree(n: u64) -> usize {
    (euler_phi(n) / 2) as usize
}
