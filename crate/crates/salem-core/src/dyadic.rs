//! Exact real brackets: closed intervals with rational endpoints.
//!
//! Every real-valued quantity in this crate (logarithms, square roots,
//! limit points from bisection) is reported as a `RealInterval` that
//! provably contains the exact value. Endpoints are exact rationals;
//! transcendental functions are evaluated by truncated series with an
//! explicit tail bound folded into the upper endpoint, then rounded
//! outward to short dyadic endpoints so widths stay controlled and
//! numbers stay small.

use alloc::string::{String, ToString};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Rational;

/// Errors from the real-bracket functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyadicError {
    /// Logarithm of zero or a negative number.
    LnNonPositive,
    /// Square root of a negative number.
    SqrtNegative,
}

impl fmt::Display for DyadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyadicError::LnNonPositive => write!(f, "logarithm requires a positive argument"),
            DyadicError::SqrtNegative => write!(f, "square root requires a nonnegative argument"),
        }
    }
}

impl core::error::Error for DyadicError {}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RealInterval {
    lo: Rational,
    hi: Rational,
}

impl RealInterval {
    /// Panics unless `lo <= hi`.
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RealInterval { lo, hi }
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: Rational) -> Self {
        RealInterval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(BigInt::from(2))
    }

    pub fn add(&self, rhs: &RealInterval) -> RealInterval {
        RealInterval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }

    pub fn sub(&self, rhs: &RealInterval) -> RealInterval {
        RealInterval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }

    pub fn neg(&self) -> RealInterval {
        RealInterval {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    pub fn add_rational(&self, x: &Rational) -> RealInterval {
        RealInterval {
            lo: &self.lo + x,
            hi: &self.hi + x,
        }
    }

    /// Multiplies by an integer, swapping endpoints when it is negative.
    pub fn scale_int(&self, k: &BigInt) -> RealInterval {
        let kq = Rational::from_integer(k.clone());
        let a = &self.lo * &kq;
        let b = &self.hi * &kq;
        if k.is_negative() {
            RealInterval { lo: b, hi: a }
        } else {
            RealInterval { lo: a, hi: b }
        }
    }

    /// Multiplies by a rational, swapping endpoints when it is negative.
    pub fn scale_rational(&self, c: &Rational) -> RealInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if c < &Rational::zero() {
            RealInterval { lo: b, hi: a }
        } else {
            RealInterval { lo: a, hi: b }
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// True when every point of the interval is below `x`.
    pub fn entirely_below(&self, x: &Rational) -> bool {
        self.hi < *x
    }

    /// True when every point of the interval is above `x`.
    pub fn entirely_above(&self, x: &Rational) -> bool {
        self.lo > *x
    }

    /// Smallest interval containing both.
    pub fn hull(&self, rhs: &RealInterval) -> RealInterval {
        RealInterval {
            lo: if self.lo <= rhs.lo { self.lo.clone() } else { rhs.lo.clone() },
            hi: if self.hi >= rhs.hi { self.hi.clone() } else { rhs.hi.clone() },
        }
    }

    /// Rounds outward to endpoints with denominator `2^bits`.
    pub fn round_outward(&self, bits: u32) -> RealInterval {
        RealInterval {
            lo: dyadic_floor(&self.lo, bits),
            hi: dyadic_ceil(&self.hi, bits),
        }
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub(crate) fn pow2_rational(e: i64) -> Rational {
    if e >= 0 {
        Rational::from_integer(BigInt::one() << e as usize)
    } else {
        Rational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn dyadic_floor(x: &Rational, bits: u32) -> Rational {
    let scaled = x * pow2_rational(bits as i64);
    Rational::new(scaled.floor().to_integer(), BigInt::one() << bits as usize)
}

fn dyadic_ceil(x: &Rational, bits: u32) -> Rational {
    let scaled = x * pow2_rational(bits as i64);
    Rational::new(scaled.ceil().to_integer(), BigInt::one() << bits as usize)
}

// atanh series for ln on [1, 2.5): u = (m-1)/(m+1), ln m = 2*sum u^(2j+1)/(2j+1),
// tail after K+1 terms bounded by 2u^(2K+3) / ((2K+3)(1-u^2)).
fn ln_series(m: &Rational, terms: usize) -> RealInterval {
    debug_assert!(*m >= Rational::one());
    let one = Rational::one();
    let u = (m - &one) / (m + &one);
    if u.is_zero() {
        return RealInterval::point(Rational::zero());
    }
    let u2 = &u * &u;
    let mut sum = Rational::zero();
    let mut pow = u.clone();
    for j in 0..=terms {
        sum += &pow / Rational::from_integer(BigInt::from(2 * j as u64 + 1));
        pow *= &u2;
    }
    // pow is now u^(2*terms+3)
    let two = Rational::from_integer(BigInt::from(2));
    let tail_den = Rational::from_integer(BigInt::from(2 * terms as u64 + 3)) * (&one - &u2);
    let tail = &two * &pow / tail_den;
    let lo = &two * &sum;
    let hi = &lo + &tail;
    RealInterval::new(lo, hi)
}

fn series_terms(work_bits: u32) -> usize {
    // u <= 0.34 loses ~1.55 bits per power; two powers per term.
    (work_bits as usize) / 3 + 8
}

/// Bracket for `ln 2`, width below `2^-precision_bits`.
pub fn ln2_interval(precision_bits: u32) -> RealInterval {
    let work = precision_bits + 8;
    let two = Rational::from_integer(BigInt::from(2));
    ln_series(&two, series_terms(work)).round_outward(precision_bits + 2)
}

/// Bracket for `ln x` of a positive rational, width below `2^-precision_bits`.
pub fn ln_interval(x: &Rational, precision_bits: u32) -> Result<RealInterval, DyadicError> {
    if !x.is_positive() {
        return Err(DyadicError::LnNonPositive);
    }
    // Write x = m * 2^e with m in [1, 2); reduced num/den bit lengths put
    // the first guess within one step. The mantissa is truncated to `work`
    // fractional bits by pure shift-and-divide — building it as a reduced
    // rational would send a huge numerator through gcd.
    let (num, den) = (x.numer(), x.denom());
    let mut e = num.bits() as i64 - den.bits() as i64;
    let ebits = 64 - (e.unsigned_abs() + 1).leading_zeros();
    let work = precision_bits + 8 + ebits;
    // floor(x * 2^(work-e)) with remainder
    let scaled = |e: i64| -> (BigInt, BigInt) {
        let shift = work as i64 - e;
        if shift >= 0 {
            (num << shift as usize).div_rem(den)
        } else {
            num.div_rem(&(den << (-shift) as usize))
        }
    };
    let (mut q, mut r) = scaled(e);
    let one_scaled = BigInt::one() << work as usize;
    if q < one_scaled {
        e -= 1;
        (q, r) = scaled(e);
    }
    debug_assert!(q >= one_scaled && q < (&one_scaled << 1u8));
    // ln is monotone, so bracketing m brackets ln m.
    let pow_den = BigInt::one() << work as usize;
    let m_lo = Rational::new(q.clone(), pow_den.clone());
    let ln_m = if r.is_zero() {
        ln_series(&m_lo, series_terms(work))
    } else {
        let m_hi = Rational::new(q + 1, pow_den);
        let lo_end = ln_series(&m_lo, series_terms(work));
        let hi_end = ln_series(&m_hi, series_terms(work));
        RealInterval::new(lo_end.lo, hi_end.hi)
    };
    let result = if e == 0 {
        ln_m
    } else {
        let l2 = ln_series(&Rational::from_integer(BigInt::from(2)), series_terms(work));
        ln_m.add(&l2.scale_int(&BigInt::from(e)))
    };
    Ok(result.round_outward(precision_bits + 2))
}

/// Bracket for `ln` over a positive interval (monotone hull).
pub fn ln_interval_hull(iv: &RealInterval, precision_bits: u32) -> Result<RealInterval, DyadicError> {
    let lo = ln_interval(iv.lo(), precision_bits)?;
    let hi = ln_interval(iv.hi(), precision_bits)?;
    Ok(RealInterval::new(lo.lo, hi.hi))
}

/// Bracket for the square root of a nonnegative rational, width below
/// `2^-precision_bits`; exact squares give a point interval.
pub fn sqrt_interval(x: &Rational, precision_bits: u32) -> Result<RealInterval, DyadicError> {
    if x.is_negative() {
        return Err(DyadicError::SqrtNegative);
    }
    if x.is_zero() {
        return Ok(RealInterval::point(Rational::zero()));
    }
    let k = precision_bits + 2;
    // sqrt(a/b) = sqrt(ab)/b; floor integer sqrt of ab*4^k gives the bracket.
    let a = x.numer();
    let b = x.denom();
    let scaled = (a * b) << (2 * k as usize);
    let s = scaled.sqrt();
    let den = Rational::from_integer(b << k as usize);
    let lo = Rational::from_integer(s.clone()) / &den;
    if &s * &s == scaled {
        return Ok(RealInterval::point(lo));
    }
    let hi = Rational::from_integer(s + BigInt::one()) / den;
    Ok(RealInterval::new(lo, hi))
}

fn pow10(digits: usize) -> BigInt {
    BigInt::from(10u32).pow(digits as u32)
}

fn render_scaled(n: &BigInt, digits: usize) -> String {
    if digits == 0 {
        return n.to_string();
    }
    let neg = n.is_negative();
    let a = n.abs();
    let (int, frac) = a.div_rem(&pow10(digits));
    let frac_str = frac.to_string();
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&int.to_string());
    s.push('.');
    for _ in 0..digits - frac_str.len() {
        s.push('0');
    }
    s.push_str(&frac_str);
    s
}

/// Decimal rendering with `digits` places, rounded toward minus infinity.
pub fn decimal_floor(x: &Rational, digits: usize) -> String {
    let scaled = x * Rational::from_integer(pow10(digits));
    render_scaled(&scaled.floor().to_integer(), digits)
}

/// Decimal rendering with `digits` places, rounded toward plus infinity.
pub fn decimal_ceil(x: &Rational, digits: usize) -> String {
    let scaled = x * Rational::from_integer(pow10(digits));
    render_scaled(&scaled.ceil().to_integer(), digits)
}

/// Decimal rendering with `digits` places, round-half-up (deterministic).
pub fn decimal_nearest(x: &Rational, digits: usize) -> String {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let scaled = x * Rational::from_integer(pow10(digits)) + half;
    render_scaled(&scaled.floor().to_integer(), digits)
}
