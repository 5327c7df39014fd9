//! Arithmetic modulo word-sized primes.

/// The Mersenne prime `2^61 - 1`.
pub const P61: u64 = (1 << 61) - 1;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    add_mod(a, p - b % p, p)
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime `p > 2^30` with `p ≡ 1 (mod n)` and a primitive `n`-th
/// root of unity modulo it.
pub fn prime_with_root_of_unity(n: u64) -> (u64, u64) {
    let mut p = ((1u64 << 30) / n + 1) * n + 1;
    while !is_prime(p) {
        p += n;
    }
    let qs = prime_factors(n);
    let cofactor = (p - 1) / n;
    for g in 2.. {
        let zeta = pow_mod(g, cofactor, p);
        if qs.iter().all(|&q| pow_mod(zeta, n / q, p) != 1) {
            return (p, zeta);
        }
    }
    unreachable!("F_p^* is cyclic")
}

/// Remainder of `f` by the monic `d`, both ascending mod `p`.
pub fn poly_rem_monic(f: &[u64], d: &[u64], p: u64) -> Vec<u64> {
    let dd = d.len() - 1;
    debug_assert_eq!(d[dd], 1);
    let mut r = f.to_vec();
    while r.len() > dd {
        let top = r.pop().expect("nonempty");
        if top != 0 {
            let k = r.len() - dd;
            for j in 0..dd {
                r[k + j] = sub_mod(r[k + j], mul_mod(top, d[j], p), p);
            }
        }
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

/// Rank of a dense matrix over `F_p` (rows destroyed).
#[allow(clippy::needless_range_loop)]
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][c], p);
        for j in c..cols {
            rows[rank][j] = mul_mod(rows[rank][j], inv, p);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for j in c..cols {
                    let t = mul_mod(f, rows[rank][j], p);
                    rows[r][j] = sub_mod(rows[r][j], t, p);
                }
            }
        }
        rank += 1;
    }
    rank
}
