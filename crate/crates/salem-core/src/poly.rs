//! Dense integer polynomials with exact arithmetic.
//!
//! Coefficients are arbitrary-precision integers stored in ascending order
//! with no trailing zero, so every value has exactly one representation and
//! equality is coefficient equality. The zero polynomial is the empty vector
//! and reports degree `None`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_bigint::BigInt as Coeff;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

/// Exact division failed: the quotient is not an integer polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotDivisible;

impl fmt::Display for NotDivisible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial division leaves a remainder")
    }
}

impl core::error::Error for NotDivisible {}

/// Error from parsing the space-separated coefficient text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError {
    /// Zero-based index of the offending token.
    pub token: usize,
    /// Byte offset of the offending token within the input line.
    pub offset: usize,
}

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid coefficient at token {} (byte offset {})",
            self.token, self.offset
        )
    }
}

impl core::error::Error for ParsePolyError {}

/// Dense univariate polynomial over the integers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    // Ascending powers; empty means zero; last entry nonzero otherwise.
    coeffs: Vec<BigInt>,
}

// Below this many coefficients in the shorter operand, schoolbook
// multiplication beats the splitting overhead.
const KARATSUBA_MIN: usize = 96;

impl IntPolynomial {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPolynomial::constant(BigInt::one())
    }

    /// A constant polynomial.
    pub fn constant(c: BigInt) -> Self {
        IntPolynomial::from_coeffs(alloc::vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPolynomial { coeffs }
    }

    /// `z^k - 1`.
    pub fn z_pow_minus_one(k: usize) -> Self {
        assert!(k >= 1);
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[0] = -BigInt::one();
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// `z^k + 1`.
    pub fn z_pow_plus_one(k: usize) -> Self {
        assert!(k >= 1);
        let mut coeffs = alloc::vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Convenience constructor from machine integers, ascending.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient; `None` for zero.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, One::is_one)
    }

    /// True when `reverse(self) == self` (palindromic coefficients).
    pub fn is_reciprocal(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Sum of roots of a monic polynomial of degree >= 1.
    pub fn trace(&self) -> Option<BigInt> {
        let d = self.degree()?;
        if d == 0 || !self.is_monic() {
            return None;
        }
        Some(-self.coeffs[d - 1].clone())
    }

    /// Multiplies by `z^k`.
    pub fn mul_z_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = alloc::vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPolynomial { coeffs }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rational::from(c.clone());
        }
        acc
    }

    /// `den^deg * p(num/den)`: integer with the same sign as `p(num/den)`
    /// when `den > 0`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        // Horner on c_d, c_{d-1}*den, c_{d-2}*den^2, ...
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        let mut terms: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            terms.push(c * &den_pow);
            den_pow *= den;
        }
        for t in terms.iter() {
            acc = acc * num + t;
        }
        acc
    }

    /// First derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero();
        }
        IntPolynomial::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// `z^deg * p(1/z)`: coefficients reversed.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPolynomial::from_coeffs(coeffs)
    }

    /// `p(z^n)` for `n >= 1`.
    pub fn compose_power(&self, n: usize) -> Self {
        assert!(n >= 1, "compose_power requires n >= 1");
        if self.is_zero() || n == 1 {
            return self.clone();
        }
        let d = self.coeffs.len() - 1;
        let mut coeffs = alloc::vec![BigInt::zero(); d * n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c.clone();
        }
        IntPolynomial { coeffs }
    }

    /// `p(-z)`: negates odd coefficients.
    pub fn compose_neg(&self) -> Self {
        IntPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(z + c)` (Taylor shift by a machine integer).
    pub fn compose_shift(&self, c: i64) -> Self {
        // Synthetic Horner: repeatedly divide by (z - (-c)).
        let shift = BigInt::from(c);
        let mut out = self.coeffs.clone();
        let n = out.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = &out[j + 1] * &shift;
                out[j] += add;
            }
        }
        IntPolynomial::from_coeffs(out)
    }

    /// Gcd of all coefficient magnitudes; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the leading sign.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Primitive with positive leading coefficient; zero stays zero.
    pub fn primitive_normalized(&self) -> Self {
        let p = self.primitive_part();
        match p.leading_coeff() {
            Some(lc) if lc.is_negative() => -&p,
            _ => p,
        }
    }

    /// Exact quotient `self / rhs` over the integers.
    pub fn exact_div(&self, rhs: &IntPolynomial) -> Result<IntPolynomial, NotDivisible> {
        let (q, r) = self.div_rem(rhs).ok_or(NotDivisible)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(NotDivisible)
        }
    }

    /// Long division when every quotient coefficient is integral;
    /// `None` as soon as a non-integral quotient coefficient appears.
    /// Panics if `rhs` is zero.
    pub fn div_rem(&self, rhs: &IntPolynomial) -> Option<(IntPolynomial, IntPolynomial)> {
        let db = rhs.degree().expect("division by zero polynomial");
        let lc = rhs.leading_coeff().unwrap();
        let da = match self.degree() {
            None => return Some((IntPolynomial::zero(), IntPolynomial::zero())),
            Some(d) if d < db => return Some((IntPolynomial::zero(), self.clone())),
            Some(d) => d,
        };
        let mut rem = self.coeffs.clone();
        let mut quot = alloc::vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = core::mem::take(&mut rem[k + db]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for j in 0..db {
                let sub = &q * &rhs.coeffs[j];
                rem[k + j] -= sub;
            }
            quot[k] = q;
        }
        rem.truncate(db);
        Some((
            IntPolynomial::from_coeffs(quot),
            IntPolynomial::from_coeffs(rem),
        ))
    }

    /// Remainder of `lc(rhs)^(da-db+1) * self` by `rhs` (integer pseudo-remainder).
    pub fn pseudo_rem(&self, rhs: &IntPolynomial) -> IntPolynomial {
        let db = rhs.degree().expect("pseudo_rem by zero polynomial");
        let da = match self.degree() {
            None => return IntPolynomial::zero(),
            Some(d) if d < db => return self.clone(),
            Some(d) => d,
        };
        let lc = rhs.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        for k in (0..=da - db).rev() {
            let top = core::mem::take(&mut rem[k + db]);
            // rem <- lc*rem - top*z^k*rhs, applied only to the live prefix.
            for c in rem.iter_mut().take(k + db) {
                *c *= &lc;
            }
            if !top.is_zero() {
                for j in 0..db {
                    let sub = &top * &rhs.coeffs[j];
                    rem[k + j] -= sub;
                }
            }
        }
        rem.truncate(db);
        IntPolynomial::from_coeffs(rem)
    }

    /// Writes the text interchange form: ascending base-10 coefficients,
    /// single spaces. The zero polynomial prints as "0".
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            write!(s, "{}", c).unwrap();
        }
        s
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial[{}]", self.to_text())
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for IntPolynomial {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut coeffs = Vec::new();
        let mut token = 0usize;
        let mut offset = 0usize;
        for part in s.split_whitespace() {
            // Byte offset of this token for diagnostics.
            let pos = s[offset..].find(part).map(|p| p + offset).unwrap_or(offset);
            let c = BigInt::from_str(part).map_err(|_| ParsePolyError { token, offset: pos })?;
            coeffs.push(c);
            token += 1;
            offset = pos + part.len();
        }
        if coeffs.is_empty() {
            return Err(ParsePolyError { token: 0, offset: 0 });
        }
        Ok(IntPolynomial::from_coeffs(coeffs))
    }
}

fn add_assign_slices(a: &mut Vec<BigInt>, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x += y;
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        add_assign_slices(&mut coeffs, &rhs.coeffs);
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < rhs.coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (x, y) in coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *x -= y;
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let out = mul_dispatch(&self.coeffs, &rhs.coeffs);
        IntPolynomial::from_coeffs(out)
    }
}

fn mul_dispatch(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len().min(b.len()) < KARATSUBA_MIN {
        mul_schoolbook_slices(a, b)
    } else {
        mul_karatsuba_slices(a, b)
    }
}

fn mul_schoolbook_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let prod = x * y;
            out[i + j] += prod;
        }
    }
    out
}

// Half-splitting Karatsuba: three recursive products instead of four.
fn mul_karatsuba_slices(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let half = n / 2;
    if a.len() <= half || b.len() <= half {
        // Too lopsided to split both; split the longer one block-wise.
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
        let mut base = 0;
        while base < long.len() {
            let end = (base + half.max(1)).min(long.len());
            let part = mul_dispatch(&long[base..end], short);
            for (i, c) in part.into_iter().enumerate() {
                out[base + i] += c;
            }
            base = end;
        }
        return out;
    }
    let (a0, a1) = a.split_at(half);
    let (b0, b1) = b.split_at(half);
    let z0 = mul_dispatch(a0, b0);
    let z2 = mul_dispatch(a1, b1);
    let mut sa: Vec<BigInt> = a0.to_vec();
    add_assign_slices(&mut sa, a1);
    let mut sb: Vec<BigInt> = b0.to_vec();
    add_assign_slices(&mut sb, b1);
    let mut z1 = mul_dispatch(&sa, &sb);
    for (i, c) in z0.iter().enumerate() {
        z1[i] -= c;
    }
    for (i, c) in z2.iter().enumerate() {
        z1[i] -= c;
    }
    let mut out = alloc::vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in z1.into_iter().enumerate() {
        out[half + i] += c;
    }
    for (i, c) in z2.into_iter().enumerate() {
        out[2 * half + i] += c;
    }
    out
}

/// Schoolbook product, exposed for cross-checking the split multiplier.
#[doc(hidden)]
pub fn mul_schoolbook(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() || b.is_zero() {
        return IntPolynomial::zero();
    }
    IntPolynomial::from_coeffs(mul_schoolbook_slices(a.coeffs(), b.coeffs()))
}

/// Gcd over the rationals, returned as a primitive integer polynomial with
/// positive leading coefficient. `gcd(a, 0)` is the normalized primitive
/// part of `a`; coprime inputs give the constant 1. Scaling either argument
/// by a nonzero integer does not change the result.
pub fn gcd_primitive(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    crate::modp::gcd_primitive_impl(a, b)
}
