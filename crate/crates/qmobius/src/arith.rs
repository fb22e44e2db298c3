//! Elementary multiplicative number theory: the Möbius function, divisor
//! enumeration, the divisor-sum transform and its Möbius inversion, and the
//! generic inversion of indexed families `f(a;n)` with `f̂(a;n) = Σ_j f(aj;n)`.
//!
//! Integer tables here are indexed by `n` directly: a table of bound `B` has
//! length `B + 1` and entry `0` is ignored by every transform.

use std::sync::OnceLock;

use num::{BigInt, Zero};

use crate::{Error, Result};

/// Values of μ(1..=bound) from a linear sieve, for dense sweeps.
pub struct MobiusTable {
    mu: Vec<i8>,
}

impl MobiusTable {
    /// Sieve μ on `1..=bound`.
    pub fn up_to(bound: usize) -> Self {
        let mut mu = vec![0i8; bound + 1];
        if bound >= 1 {
            mu[1] = 1;
        }
        let mut primes: Vec<usize> = Vec::new();
        // linear sieve: each composite is crossed off once, by its least prime factor
        let mut is_comp = vec![false; bound + 1];
        for i in 2..=bound {
            if !is_comp[i] {
                primes.push(i);
                mu[i] = -1;
            }
            for &p in &primes {
                let ip = i * p;
                if ip > bound {
                    break;
                }
                is_comp[ip] = true;
                if i % p == 0 {
                    mu[ip] = 0; // p² | ip
                    break;
                }
                mu[ip] = -mu[i];
            }
        }
        MobiusTable { mu }
    }

    pub fn bound(&self) -> usize {
        self.mu.len() - 1
    }

    /// μ(n); panics if `n` is 0 or beyond the sieve bound.
    pub fn get(&self, n: usize) -> i8 {
        assert!(n >= 1 && n <= self.bound());
        self.mu[n]
    }
}

const SIEVE_BOUND: usize = 1 << 16;

fn shared_sieve() -> &'static MobiusTable {
    static SIEVE: OnceLock<MobiusTable> = OnceLock::new();
    SIEVE.get_or_init(|| MobiusTable::up_to(SIEVE_BOUND))
}

/// The Möbius function: 0 if `n` is not squarefree, else (−1)^(number of
/// prime factors). Sieved below 2¹⁶, trial division beyond.
pub fn mobius(n: u64) -> Result<i8> {
    if n < 1 {
        return Err(Error::Domain("mobius requires n ≥ 1".into()));
    }
    if n <= SIEVE_BOUND as u64 {
        return Ok(shared_sieve().get(n as usize));
    }
    let mut m = n;
    let mut factors = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return Ok(0);
            }
            factors += 1;
        }
        p += 1;
    }
    if m > 1 {
        factors += 1;
    }
    Ok(if factors.is_multiple_of(2) { 1 } else { -1 })
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n < 1 {
        return Err(Error::Domain("divisors requires n ≥ 1".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

/// `Σ_{d|n} μ(d)`, which is 1 for `n = 1` and 0 otherwise.
pub fn mobius_divisor_sum(n: u64) -> Result<i64> {
    let mut acc = 0i64;
    for d in divisors(n)? {
        acc += mobius(d)? as i64;
    }
    Ok(acc)
}

/// Divisor-sum transform: `g(n) = Σ_{d|n} f(d)` for `1 ≤ n ≤ bound`.
///
/// `f` is indexed by `n` (entry 0 ignored); the result has the same shape
/// with entry 0 zero.
pub fn divisor_transform(f: &[BigInt]) -> Vec<BigInt> {
    let bound = f.len().saturating_sub(1);
    let mut g = vec![BigInt::zero(); bound + 1];
    for (d, value) in f.iter().enumerate().skip(1) {
        for multiple in (d..=bound).step_by(d) {
            g[multiple] += value;
        }
    }
    g
}

/// Möbius inversion of a divisor-sum transform:
/// `f(n) = Σ_{d|n} μ(d)·g(n/d)`, the inverse of [`divisor_transform`].
pub fn mobius_invert(g: &[BigInt]) -> Vec<BigInt> {
    let bound = g.len().saturating_sub(1);
    let mut f = vec![BigInt::zero(); bound + 1];
    for n in 1..=bound {
        let mut acc = BigInt::zero();
        for d in divisors(n as u64).expect("n ≥ 1") {
            let mu = mobius(d).expect("d ≥ 1");
            if mu != 0 {
                acc += mu as i64 * &g[n / d as usize];
            }
        }
        f[n] = acc;
    }
    f
}

/// Hat of an indexed family: `f̂(a;n) = Σ_{j≥1} f(aj;n)`.
///
/// `f` must satisfy the vanishing threshold `f(a;n) = 0` for `a > n`, which
/// truncates the sum at `j = ⌊n/a⌋`; the result is 0 whenever `a > n`.
pub fn family_hat(f: impl Fn(u32, u32) -> BigInt, a: u32, n: u32) -> BigInt {
    assert!(a >= 1 && n >= 1);
    let mut acc = BigInt::zero();
    let mut j = 1;
    while a * j <= n {
        acc += f(a * j, n);
        j += 1;
    }
    acc
}

/// Inversion of [`family_hat`]: `f(a;n) = Σ_{j≥1} μ(j)·f̂(aj;n)`, truncated
/// at the same vanishing threshold.
pub fn family_invert(fhat: impl Fn(u32, u32) -> BigInt, a: u32, n: u32) -> BigInt {
    assert!(a >= 1 && n >= 1);
    let mut acc = BigInt::zero();
    let mut j = 1;
    while a * j <= n {
        let mu = mobius(j as u64).expect("j ≥ 1");
        if mu != 0 {
            acc += mu as i64 * fhat(a * j, n);
        }
        j += 1;
    }
    acc
}
