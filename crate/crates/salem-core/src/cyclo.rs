//! Cyclotomic polynomials, the gcd sieve, and factor stripping.
//!
//! The sieve rests on the fact that a root of unity ω is conjugate to one of
//! −ω, ω² or −ω², so any cyclotomic factor of S forces a nonconstant
//! gcd(S(z), S(−z)·S(z²)·S(−z²)). The converse can fail off the beaten path
//! (a root set symmetric under negation also trips the gcd), which is why
//! `strip_cyclotomic` reports trial-division factors independently of the
//! witness.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::modp::{modular_primes, PolyP};
use crate::poly::{gcd_primitive, IntPolynomial};
use crate::primes::primes_up_to;

/// Outcome of the cyclotomic gcd sieve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveResult {
    /// Whether the gcd witness is constant (no cyclotomic factor detected).
    pub passed: bool,
    /// Primitive gcd of S(z) and S(−z)·S(z²)·S(−z²); degree 0 iff `passed`.
    pub witness_gcd: IntPolynomial,
    /// (cyclotomic index d, multiplicity) pairs; filled by `strip_cyclotomic`,
    /// always empty from `sieve_gcd_test` itself.
    pub stripped_factors: Vec<(u64, u32)>,
}

/// Sieve record plus the cyclotomic-free quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripResult {
    pub sieve: SieveResult,
    /// Input divided by all cyclotomic factors found.
    pub quotient: IntPolynomial,
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    assert!(n > 0, "euler_phi(0)");
    let mut phi = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            phi *= p - 1;
            while n % p == 0 {
                n /= p;
                phi *= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi *= n - 1;
    }
    phi
}

fn cyclotomic_cached(n: u64, cache: &mut BTreeMap<u64, IntPolynomial>) -> IntPolynomial {
    if let Some(hit) = cache.get(&n) {
        return hit.clone();
    }
    let mut quot = IntPolynomial::z_pow_minus_one(n as usize);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_cached(d, cache);
            quot = quot.exact_div(&phi_d).expect("proper cyclotomic divisor");
        }
    }
    cache.insert(n, quot.clone());
    quot
}

/// The n-th cyclotomic polynomial Φ_n: monic, degree φ(n).
pub fn cyclotomic_poly(n: u64) -> IntPolynomial {
    assert!(n > 0, "cyclotomic_poly(0)");
    let mut cache = BTreeMap::new();
    cyclotomic_cached(n, &mut cache)
}

/// All n ≥ 1 with φ(n) ≤ limit, ascending. Exact inverse-φ enumeration by
/// backtracking over squarefree-cored prime powers; no coarse d-bound needed.
pub fn orders_with_phi_at_most(limit: u64) -> Vec<u64> {
    assert!(limit > 0, "orders_with_phi_at_most(0)");
    // Any prime p dividing a solution n contributes a factor p−1 ≤ φ(n).
    let primes = primes_up_to(limit + 1);
    let mut out = Vec::new();
    fn dfs(primes: &[u64], from: usize, n: u64, phi: u64, limit: u64, out: &mut Vec<u64>) {
        out.push(n);
        for (i, &p) in primes.iter().enumerate().skip(from) {
            if phi.saturating_mul(p - 1) > limit {
                break; // primes ascend, so every later choice is worse
            }
            let mut n2 = n * p;
            let mut phi2 = phi * (p - 1);
            loop {
                dfs(primes, i + 1, n2, phi2, limit, out);
                if phi2.saturating_mul(p) > limit {
                    break;
                }
                n2 *= p;
                phi2 *= p;
            }
        }
    }
    dfs(&primes, 0, 1, 1, limit, &mut out);
    out.sort_unstable();
    out
}

/// S(−z)·S(z²)·S(−z²) over the integers.
fn sieve_companion(s: &IntPolynomial) -> IntPolynomial {
    let a = s.compose_neg();
    let b = s.compose_power(2);
    // Negate *inside* the square: S(−z²), not S((−z)²).
    let c = a.compose_power(2);
    &(&a * &b) * &c
}

/// Modular fast path: gcd(S̄, S̄(−z)·S̄(z²)·S̄(−z²) mod S̄) over one 62-bit
/// prime not dividing lc(S). A constant image certifies a constant integer
/// gcd, because reduction can only raise the gcd degree when the leading
/// coefficients survive.
fn sieve_passes_mod_p(s: &IntPolynomial) -> bool {
    let lc = s.leading_coeff().expect("nonzero").clone();
    let p = modular_primes()
        .find(|&p| !(&lc % BigInt::from(p)).is_zero())
        .expect("prime pool");
    let sp = PolyP::from_int(s, p);
    if sp.degree() == Some(0) {
        return true;
    }
    let a = sp.compose_neg().rem(&sp);
    let b = sp.compose_power(2).rem(&sp);
    let c = sp.compose_neg().compose_power(2).rem(&sp);
    let prod = a.mul(&b).rem(&sp).mul(&c).rem(&sp);
    PolyP::gcd(sp, prod).degree() == Some(0)
}

/// The gcd sieve: passed ⟺ gcd_primitive(S(z), S(−z)·S(z²)·S(−z²)) is
/// constant. `stripped_factors` is left empty; see `strip_cyclotomic`.
pub fn sieve_gcd_test(s: &IntPolynomial) -> SieveResult {
    assert!(!s.is_zero(), "sieve of zero polynomial");
    if s.degree() == Some(0) || sieve_passes_mod_p(s) {
        return SieveResult {
            passed: true,
            witness_gcd: IntPolynomial::one(),
            stripped_factors: vec![],
        };
    }
    let witness = gcd_primitive(s, &sieve_companion(s));
    SieveResult {
        passed: witness.degree() == Some(0),
        witness_gcd: witness,
        stripped_factors: vec![],
    }
}

/// Trial-divides S by Φ_d for every d with φ(d) ≤ deg S, to multiplicity.
/// The sieve record is computed independently so the quotient-empty ⟺ passed
/// equivalence stays a checked fact rather than a construction.
pub fn strip_cyclotomic(s: &IntPolynomial) -> StripResult {
    assert!(!s.is_zero(), "strip of zero polynomial");
    let sieve = sieve_gcd_test(s);
    let deg = s.degree().unwrap_or(0) as u64;
    if deg == 0 {
        return StripResult {
            sieve,
            quotient: s.clone(),
        };
    }
    let p = modular_primes().next().expect("prime pool");
    let mut mod_cache: BTreeMap<u64, PolyP> = BTreeMap::new();
    let mut exact_cache: BTreeMap<u64, IntPolynomial> = BTreeMap::new();
    let mut quotient = s.clone();
    let mut factors: Vec<(u64, u32)> = Vec::new();
    for d in orders_with_phi_at_most(deg) {
        if euler_phi(d) > quotient.degree().unwrap_or(0) as u64 {
            continue;
        }
        // Cheap mod-p prefilter: Φ_d is monic, so nondivisibility mod p is
        // conclusive over the integers.
        let phi_mod = cyclotomic_mod_cached(d, p, &mut mod_cache);
        let q_mod = PolyP::from_int(&quotient, p);
        if !q_mod.rem(&phi_mod).is_zero() {
            continue;
        }
        let phi_d = cyclotomic_cached(d, &mut exact_cache);
        let mut mult = 0u32;
        while let Ok(q) = quotient.exact_div(&phi_d) {
            quotient = q;
            mult += 1;
        }
        if mult > 0 {
            factors.push((d, mult));
        }
    }
    StripResult {
        sieve: SieveResult {
            stripped_factors: factors,
            ..sieve
        },
        quotient,
    }
}

fn cyclotomic_mod_cached(n: u64, p: u64, cache: &mut BTreeMap<u64, PolyP>) -> PolyP {
    if let Some(hit) = cache.get(&n) {
        return hit.clone();
    }
    let mut quot = PolyP::from_int(&IntPolynomial::z_pow_minus_one(n as usize), p);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_mod_cached(d, p, cache);
            quot = quot.div_exact(&phi_d);
        }
    }
    cache.insert(n, quot.clone());
    quot
}

/// Divides by (z−1) as long as P(1) = 0; returns the quotient and the
/// multiplicity removed.
pub fn strip_root_one(p: &IntPolynomial) -> (IntPolynomial, u32) {
    assert!(!p.is_zero(), "strip_root_one of zero polynomial");
    let one = BigInt::one();
    let z_minus_one = IntPolynomial::z_pow_minus_one(1);
    let mut quotient = p.clone();
    let mut mult = 0u32;
    while quotient.degree().unwrap_or(0) >= 1 && quotient.eval(&one).is_zero() {
        quotient = quotient
            .exact_div(&z_minus_one)
            .expect("root at 1 divides");
        mult += 1;
    }
    (quotient, mult)
}
