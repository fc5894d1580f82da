//! Exact integer arithmetic used by the adjacency predicate and the spectral
//! formulas. Everything is trial division over `u64`; group orders in this
//! crate stay far below the range where that matters.

use crate::error::{Result, ThetaError};

/// Canonical prime factorization, primes strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Number of distinct primes.
    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    pub fn value(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    debug_assert!(a >= 1 && b >= 1);
    a / gcd(a, b) * b
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The adjacency predicate on a gcd value: 1 or a prime.
pub fn is_one_or_prime(n: u64) -> bool {
    n == 1 || is_prime(n)
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(ThetaError::Domain(format!(
            "factorize requires n >= 2, got {n}"
        )));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

/// Euler's totient, from the factorization.
pub fn euler_phi(n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let f = factorize(n).expect("n >= 2");
    f.factors()
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Integer square root (floor).
pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Splits `n` as `k² · r` with `r` squarefree; returns `(k, r)`.
pub fn square_part(n: u64) -> (u64, u64) {
    if n < 2 {
        return (1, n);
    }
    let f = factorize(n).expect("n >= 2");
    let mut k = 1;
    let mut r = 1;
    for &(p, e) in f.factors() {
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            r *= p;
        }
    }
    (k, r)
}
