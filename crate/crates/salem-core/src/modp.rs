//! Polynomial arithmetic modulo word-size primes.
//!
//! Backs the integer-polynomial gcd (modular images + CRT lifting, verified
//! by trial division) and the fast path of the cyclotomic-factor sieve.
//! Primes are drawn from a fixed descending sequence below 2^62 so every
//! run of the same computation picks the same moduli.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::poly::IntPolynomial;
use crate::primes::is_prime_u64;

/// Primes just below 2^62, descending; deterministic across runs.
pub(crate) fn modular_primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1; // odd
    core::iter::from_fn(move || {
        while !is_prime_u64(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b; // safe: a, b < p < 2^63
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Inverse mod a prime, via Fermat.
pub(crate) fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

fn trim(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// Dense polynomial over F_p, ascending coefficients, no trailing zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct PolyP {
    pub p: u64,
    pub c: Vec<u64>,
}

impl PolyP {
    pub fn from_int(f: &IntPolynomial, p: u64) -> Self {
        let pb = BigInt::from(p);
        let c = f
            .coeffs()
            .iter()
            .map(|x| x.mod_floor(&pb).to_u64().unwrap())
            .collect();
        PolyP { p, c: trim(c) }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    fn lc(&self) -> u64 {
        *self.c.last().expect("leading coefficient of zero")
    }

    pub fn make_monic(mut self) -> Self {
        if self.is_zero() || self.lc() == 1 {
            return self;
        }
        let inv = invmod(self.lc(), self.p);
        for x in self.c.iter_mut() {
            *x = mulmod(*x, inv, self.p);
        }
        self
    }

    pub fn mul(&self, rhs: &PolyP) -> PolyP {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return PolyP { p, c: Vec::new() };
        }
        let mut out = alloc::vec![0u64; self.c.len() + rhs.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.c.iter().enumerate() {
                out[i + j] = addmod(out[i + j], mulmod(a, b, p), p);
            }
        }
        PolyP { p, c: trim(out) }
    }

    /// Remainder of Euclidean division; divisor need not be monic.
    pub fn rem(&self, rhs: &PolyP) -> PolyP {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let db = rhs.degree().expect("rem by zero polynomial");
        let inv_lc = invmod(rhs.lc(), p);
        let mut r = self.c.clone();
        while r.len() > db {
            let top = *r.last().unwrap();
            if top != 0 {
                let k = r.len() - 1 - db;
                let q = mulmod(top, inv_lc, p);
                for j in 0..db {
                    let sub = mulmod(q, rhs.c[j], p);
                    r[k + j] = submod(r[k + j], sub, p);
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        PolyP { p, c: r }
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(mut a: PolyP, mut b: PolyP) -> PolyP {
        debug_assert_eq!(a.p, b.p);
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// `f(-z)`.
    pub fn compose_neg(&self) -> PolyP {
        let p = self.p;
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, &x)| if i % 2 == 1 && x != 0 { p - x } else { x })
            .collect();
        PolyP { p, c }
    }

    /// `f(z^n)` for `n >= 1`.
    pub fn compose_power(&self, n: usize) -> PolyP {
        assert!(n >= 1);
        if self.is_zero() || n == 1 {
            return self.clone();
        }
        let mut c = alloc::vec![0u64; (self.c.len() - 1) * n + 1];
        for (i, &x) in self.c.iter().enumerate() {
            c[i * n] = x;
        }
        PolyP { p: self.p, c }
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, rhs: &PolyP) -> PolyP {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let db = rhs.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return PolyP { p, c: Vec::new() };
        }
        let da = self.degree().unwrap();
        assert!(da >= db, "non-exact division");
        let inv_lc = invmod(rhs.lc(), p);
        let mut r = self.c.clone();
        let mut q = alloc::vec![0u64; da - db + 1];
        for k in (0..=(da - db)).rev() {
            let top = r[k + db];
            if top != 0 {
                let qk = mulmod(top, inv_lc, p);
                q[k] = qk;
                for j in 0..=db {
                    let sub = mulmod(qk, rhs.c[j], p);
                    r[k + j] = submod(r[k + j], sub, p);
                }
            }
        }
        assert!(r.iter().all(|&x| x == 0), "non-exact division");
        PolyP { p, c: trim(q) }
    }
}

fn symmetric(x: BigInt, m: &BigInt) -> BigInt {
    let y = x.mod_floor(m);
    if &y + &y > *m {
        y - m
    } else {
        y
    }
}

fn crt_combine(m: &mut BigInt, r: &mut [BigInt], p: u64, s: &[u64]) {
    debug_assert_eq!(r.len(), s.len());
    let pb = BigInt::from(p);
    let m_mod_p = m.mod_floor(&pb).to_u64().unwrap();
    let minv = invmod(m_mod_p, p);
    let new_m = &*m * &pb;
    for (ri, &si) in r.iter_mut().zip(s.iter()) {
        let cur = ri.mod_floor(&pb).to_u64().unwrap();
        let t = mulmod(submod(si, cur, p), minv, p);
        let lifted = &*ri + &*m * BigInt::from(t);
        *ri = symmetric(lifted, &new_m);
    }
    *m = new_m;
}

/// Gcd over Q as a primitive, positive-leading integer polynomial.
///
/// Modular images of matching minimal degree are CRT-combined and
/// symmetric-lifted; a candidate is accepted only once trial division
/// confirms it divides both inputs, so unlucky primes cannot produce a
/// wrong answer. A degree-0 image proves coprimality outright.
pub(crate) fn gcd_primitive_impl(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.primitive_normalized();
    }
    if b.is_zero() {
        return a.primitive_normalized();
    }
    let a = a.primitive_normalized();
    let b = b.primitive_normalized();
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return IntPolynomial::one();
    }
    // lc(gcd) divides gcd of the leading coefficients; scaling the monic
    // image up to it keeps every lifted coefficient integral.
    let d_lc = a.leading_coeff().unwrap().gcd(b.leading_coeff().unwrap());
    let mut best: Option<(usize, BigInt, Vec<BigInt>)> = None;
    for p in modular_primes().take(512) {
        let pb = BigInt::from(p);
        if a.leading_coeff().unwrap().mod_floor(&pb).is_zero()
            || b.leading_coeff().unwrap().mod_floor(&pb).is_zero()
        {
            continue;
        }
        let gp = PolyP::gcd(PolyP::from_int(&a, p), PolyP::from_int(&b, p));
        let dg = gp.degree().expect("gcd of nonzero images is nonzero");
        if dg == 0 {
            return IntPolynomial::one();
        }
        let scale = d_lc.mod_floor(&pb).to_u64().unwrap();
        let gs: Vec<u64> = gp.c.iter().map(|&c| mulmod(c, scale, p)).collect();
        let restart = match &best {
            None => true,
            Some((bd, _, _)) => dg < *bd,
        };
        if restart {
            let r = gs.iter().map(|&c| symmetric(BigInt::from(c), &pb)).collect();
            best = Some((dg, pb.clone(), r));
        } else {
            let (bd, m, r) = best.as_mut().unwrap();
            if dg > *bd {
                continue; // unlucky prime: image degree too high
            }
            crt_combine(m, r, p, &gs);
        }
        let (_, _, r) = best.as_ref().unwrap();
        let cand = IntPolynomial::from_coeffs(r.clone()).primitive_normalized();
        if !cand.is_zero() && a.exact_div(&cand).is_ok() && b.exact_div(&cand).is_ok() {
            return cand;
        }
    }
    unreachable!("modular gcd did not stabilize within the prime budget");
}
