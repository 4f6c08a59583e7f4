//! Prime generation and exact Chebyshev sums.
//!
//! Primality is deterministic Miller–Rabin with the witness set that is
//! exact for all 64-bit integers. The Chebyshev functions are computed
//! without floating point: the relevant primorial (for theta) or lcm
//! (for psi) is assembled exactly with a product tree and a single
//! bracketed logarithm is taken at the end.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::dyadic::{ln_interval, RealInterval};
use crate::modp::{mulmod, powmod};
use crate::poly::Rational;

/// Inputs above this make the exact primorial/lcm approach unreasonable.
pub const CHEBYSHEV_LIMIT: u64 = 10_000_000;

/// Error from the Chebyshev functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebyshevError {
    /// Argument exceeds [`CHEBYSHEV_LIMIT`].
    TooLarge { x: u64, limit: u64 },
}

impl fmt::Display for ChebyshevError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChebyshevError::TooLarge { x, limit } => {
                write!(f, "argument {} exceeds the exact-evaluation limit {}", x, limit)
            }
        }
    }
}

impl core::error::Error for ChebyshevError {}

// Deterministic for every u64 (exact below ~3.3e24).
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    if n < 2 {
        return 2;
    }
    let mut m = n + 1;
    if m % 2 == 0 {
        if m == 2 {
            return 2;
        }
        m += 1;
    }
    while !is_prime_u64(m) {
        m += 2;
    }
    m
}

/// The first `k` primes in order.
pub fn first_primes(k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    let mut p = 0u64;
    for _ in 0..k {
        p = next_prime(p);
        out.push(p);
    }
    out
}

/// All primes `<= x`, ascending (Eratosthenes).
pub fn primes_up_to(x: u64) -> Vec<u64> {
    if x < 2 {
        return Vec::new();
    }
    let n = x as usize;
    let mut composite = alloc::vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn product_tree(mut layer: Vec<BigInt>) -> BigInt {
    if layer.is_empty() {
        return BigInt::from(1);
    }
    while layer.len() > 1 {
        let mut next = Vec::with_capacity(layer.len().div_ceil(2));
        let mut it = layer.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a * b),
                None => next.push(a),
            }
        }
        layer = next;
    }
    layer.pop().unwrap()
}

/// First Chebyshev function: sum of `ln p` over primes `p <= x`,
/// as a bracket of width below `2^-precision_bits`.
pub fn chebyshev_theta(x: u64, precision_bits: u32) -> Result<RealInterval, ChebyshevError> {
    if x > CHEBYSHEV_LIMIT {
        return Err(ChebyshevError::TooLarge { x, limit: CHEBYSHEV_LIMIT });
    }
    let primorial = product_tree(primes_up_to(x).into_iter().map(BigInt::from).collect());
    Ok(ln_interval(&Rational::from_integer(primorial), precision_bits)
        .expect("primorial is positive"))
}

/// Second Chebyshev function: sum of `ln p` over prime powers `p^k <= x`,
/// i.e. `ln lcm(1..=x)`, as a bracket of width below `2^-precision_bits`.
pub fn chebyshev_psi(x: u64, precision_bits: u32) -> Result<RealInterval, ChebyshevError> {
    if x > CHEBYSHEV_LIMIT {
        return Err(ChebyshevError::TooLarge { x, limit: CHEBYSHEV_LIMIT });
    }
    let powers = primes_up_to(x)
        .into_iter()
        .map(|p| {
            let mut pe = p;
            while pe <= x / p {
                pe *= p;
            }
            BigInt::from(pe)
        })
        .collect();
    let lcm = product_tree(powers);
    Ok(ln_interval(&Rational::from_integer(lcm), precision_bits).expect("lcm is positive"))
}
