//! Exact root location and the Salem/Pisot certificates.
//!
//! One primitive carries the module: the Cauchy index of g/f over an
//! interval, read off as the sign-variation drop of a signed pseudo-remainder
//! chain (subresultant divisors control coefficient growth; the textbook
//! negated-remainder signs are restored afterwards). Real-root counting is
//! the index of f′/f and works for non-squarefree input, where it counts
//! distinct roots. Unit-disk counting maps |z|<1 to a half-plane through
//! z = (w−1)/(w+1) and takes the index along the boundary axis.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Pow, Signed, Zero};

use crate::cyclo::{sieve_gcd_test, strip_cyclotomic, SieveResult};
use crate::dyadic::{pow2_rational, sqrt_interval, RealInterval};
use crate::poly::{gcd_primitive, IntPolynomial, Rational};

/// Where a sign query is taken.
#[derive(Clone, Debug, PartialEq)]
pub enum ChainPoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// A queried endpoint is a root of the polynomial being counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndpointIsRoot;

impl fmt::Display for EndpointIsRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "endpoint is a root of the polynomial")
    }
}

impl core::error::Error for EndpointIsRoot {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XTransformError {
    NotReciprocal,
    OddDegree,
}

impl fmt::Display for XTransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XTransformError::NotReciprocal => write!(f, "polynomial is not reciprocal"),
            XTransformError::OddDegree => write!(f, "reciprocal polynomial has odd degree"),
        }
    }
}

impl core::error::Error for XTransformError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DiskCountError {
    /// P(1) = 0: the boundary map degenerates.
    RootAtOne,
    /// P(−1) = 0: the image polynomial loses its constant term.
    RootAtMinusOne,
    /// A root lies on the unit circle itself.
    BoundaryRoot,
    /// Internal parity or range failure; `step` locates the stage.
    Degenerate { step: usize },
}

impl fmt::Display for DiskCountError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskCountError::RootAtOne => write!(f, "root at z = 1"),
            DiskCountError::RootAtMinusOne => write!(f, "root at z = -1"),
            DiskCountError::BoundaryRoot => write!(f, "root on the unit circle"),
            DiskCountError::Degenerate { step } => write!(f, "degenerate count at step {step}"),
        }
    }
}

impl core::error::Error for DiskCountError {}

pub(crate) fn sign_big(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Internal evaluation points; `ZeroPlus` means the limit from the right of 0.
enum Pt<'a> {
    NegInf,
    Fin(&'a Rational),
    PosInf,
    ZeroPlus,
}

impl<'a> Pt<'a> {
    fn of(p: &'a ChainPoint) -> Pt<'a> {
        match p {
            ChainPoint::NegInf => Pt::NegInf,
            ChainPoint::Finite(q) => Pt::Fin(q),
            ChainPoint::PosInf => Pt::PosInf,
        }
    }
}

fn sign_at(f: &IntPolynomial, at: &Pt<'_>) -> i8 {
    let Some(d) = f.degree() else { return 0 };
    match at {
        Pt::PosInf => sign_big(f.leading_coeff().unwrap()),
        Pt::NegInf => {
            let s = sign_big(f.leading_coeff().unwrap());
            if d % 2 == 1 {
                -s
            } else {
                s
            }
        }
        Pt::Fin(q) => sign_big(&f.eval_homogeneous(q.numer(), q.denom())),
        Pt::ZeroPlus => {
            let s = f
                .coeffs()
                .iter()
                .find(|c| !c.is_zero())
                .map_or(0, |c| sign_big(c));
            s
        }
    }
}

fn point_lt(a: &ChainPoint, b: &ChainPoint) -> bool {
    match (a, b) {
        (ChainPoint::NegInf, ChainPoint::NegInf) | (ChainPoint::PosInf, ChainPoint::PosInf) => {
            false
        }
        (ChainPoint::NegInf, _) | (_, ChainPoint::PosInf) => true,
        (_, ChainPoint::NegInf) | (ChainPoint::PosInf, _) => false,
        (ChainPoint::Finite(x), ChainPoint::Finite(y)) => x < y,
    }
}

fn pow_u32(b: &BigInt, e: u32) -> BigInt {
    Pow::pow(b, e)
}

/// Walks the signed remainder chain of (f, g): the visited sequence starts
/// with f, then g, and each later element is congruent to a *negative*
/// multiple of its pre-predecessor modulo its predecessor. Coefficients stay
/// subresultant-sized; signs are corrected on the fly.
fn signed_prs<F: FnMut(IntPolynomial)>(f: &IntPolynomial, g: &IntPolynomial, mut visit: F) {
    debug_assert!(!f.is_zero(), "chain head must be nonzero");
    visit(f.clone());
    if g.is_zero() {
        return;
    }
    visit(g.clone());
    let mut a = f.clone();
    let mut b = g.clone();
    // σ for a and b: stored = σ · raw subresultant element
    let (mut sig_a, mut sig_b) = (1i8, 1i8);
    let mut gc = BigInt::one();
    let mut hc = BigInt::one();
    loop {
        let da = a.degree().expect("nonzero chain element");
        let db = b.degree().expect("nonzero chain element");
        debug_assert!(da >= db, "chain degrees must descend");
        let delta = (da - db) as u32;
        let prem = a.pseudo_rem(&b); // ≡ lc(b)^{δ+1} · a  (mod b)
        if prem.is_zero() {
            return;
        }
        let divisor = &gc * pow_u32(&hc, delta);
        let r = prem
            .exact_div(&IntPolynomial::constant(divisor.clone()))
            .expect("subresultant divisor divides the pseudo-remainder");
        // raw_{i+1} ≡ m · raw_{i−1} (mod raw_i) with m = lc(b)^{δ+1}/divisor
        let s_lcb = sign_big(b.leading_coeff().unwrap());
        let m_sign = if delta % 2 == 0 { s_lcb } else { 1 } * sign_big(&divisor);
        let sig_r = -sig_a * m_sign * sig_b * sig_b; // sig_b² = 1; kept for clarity
        visit(if sig_r < 0 { -&r } else { r.clone() });
        gc = b.leading_coeff().unwrap().clone();
        hc = match delta {
            0 => hc,
            1 => gc.clone(),
            d => {
                let num = pow_u32(&gc, d);
                let den = pow_u32(&hc, d - 1);
                debug_assert!((&num % &den).is_zero());
                num / den
            }
        };
        a = b;
        b = r;
        sig_a = sig_b;
        sig_b = sig_r;
    }
}

#[derive(Default)]
struct VarCount {
    last: i8,
    count: usize,
}

impl VarCount {
    fn push(&mut self, s: i8) {
        if s != 0 {
            if self.last != 0 && s != self.last {
                self.count += 1;
            }
            self.last = s;
        }
    }
}

/// Stored signed remainder chain for repeated interval queries.
pub struct SturmChain {
    elems: Vec<IntPolynomial>,
}

impl SturmChain {
    /// Chain of (f, f′).
    pub fn of(f: &IntPolynomial) -> Self {
        Self::generalized(f, &f.derivative())
    }

    /// Chain of (f, g) for Cauchy-index queries; requires deg f ≥ deg g.
    pub fn generalized(f: &IntPolynomial, g: &IntPolynomial) -> Self {
        assert!(!f.is_zero(), "chain head must be nonzero");
        let mut elems = Vec::new();
        signed_prs(f, g, |e| elems.push(e));
        SturmChain { elems }
    }

    pub fn elements(&self) -> &[IntPolynomial] {
        &self.elems
    }

    fn variations(&self, at: &Pt<'_>) -> usize {
        let mut v = VarCount::default();
        for e in &self.elems {
            v.push(sign_at(e, at));
        }
        v.count
    }

    /// Cauchy index of g/f over (lo, hi]: V(lo) − V(hi).
    pub fn index(&self, lo: &ChainPoint, hi: &ChainPoint) -> i64 {
        assert!(point_lt(lo, hi), "interval must be nonempty");
        self.variations(&Pt::of(lo)) as i64 - self.variations(&Pt::of(hi)) as i64
    }

    /// Distinct real roots of the chain head in the open interval (lo, hi).
    /// Finite endpoints must not be roots.
    pub fn count_open(&self, lo: &ChainPoint, hi: &ChainPoint) -> Result<usize, EndpointIsRoot> {
        assert!(point_lt(lo, hi), "interval must be nonempty");
        let f = &self.elems[0];
        for p in [lo, hi] {
            if let ChainPoint::Finite(q) = p {
                if f.eval_homogeneous(q.numer(), q.denom()).is_zero() {
                    return Err(EndpointIsRoot);
                }
            }
        }
        let idx = self.index(lo, hi);
        debug_assert!(idx >= 0, "root count cannot be negative");
        Ok(idx.max(0) as usize)
    }
}

/// Distinct real roots of f in the open interval (lo, hi), without storing
/// the chain. Finite endpoints must not be roots of f.
pub fn sturm_count(
    f: &IntPolynomial,
    lo: &ChainPoint,
    hi: &ChainPoint,
) -> Result<usize, EndpointIsRoot> {
    assert!(!f.is_zero(), "cannot count roots of the zero polynomial");
    assert!(point_lt(lo, hi), "interval must be nonempty");
    for p in [lo, hi] {
        if let ChainPoint::Finite(q) = p {
            if f.eval_homogeneous(q.numer(), q.denom()).is_zero() {
                return Err(EndpointIsRoot);
            }
        }
    }
    let g = f.derivative();
    let (plo, phi) = (Pt::of(lo), Pt::of(hi));
    let mut vlo = VarCount::default();
    let mut vhi = VarCount::default();
    signed_prs(f, &g, |e| {
        vlo.push(sign_at(&e, &plo));
        vhi.push(sign_at(&e, &phi));
    });
    let idx = vlo.count as i64 - vhi.count as i64;
    debug_assert!(idx >= 0, "root count cannot be negative");
    Ok(idx.max(0) as usize)
}

/// Disjoint open intervals, one per distinct real root of f in (lo, hi).
/// Interval endpoints are never roots. Requires f(lo) ≠ 0 ≠ f(hi).
pub fn isolate_real_roots_in(
    f: &IntPolynomial,
    lo: &Rational,
    hi: &Rational,
) -> Result<Vec<(Rational, Rational)>, EndpointIsRoot> {
    assert!(lo < hi, "interval must be nonempty");
    let chain = SturmChain::of(f);
    let (clo, chi) = (
        ChainPoint::Finite(lo.clone()),
        ChainPoint::Finite(hi.clone()),
    );
    let n = chain.count_open(&clo, &chi)?;
    let mut out = Vec::new();
    split_interval(&chain, lo.clone(), hi.clone(), n, &mut out);
    Ok(out)
}

fn split_interval(
    chain: &SturmChain,
    lo: Rational,
    hi: Rational,
    n: usize,
    out: &mut Vec<(Rational, Rational)>,
) {
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push((lo, hi));
        return;
    }
    let f = &chain.elements()[0];
    let two = Rational::from_integer(BigInt::from(2));
    let mut cut = (&lo + &hi) / &two;
    let mut step = (&hi - &cut) / &two;
    // nudge off roots; only finitely many candidates can be roots
    while f.eval_homogeneous(cut.numer(), cut.denom()).is_zero() {
        cut = &cut + &step;
        step = &step / &two;
    }
    let nl = chain
        .count_open(
            &ChainPoint::Finite(lo.clone()),
            &ChainPoint::Finite(cut.clone()),
        )
        .expect("cut avoids roots");
    split_interval(chain, lo, cut.clone(), nl, out);
    split_interval(chain, cut, hi, n - nl, out);
}

/// For reciprocal S of even degree 2m, the unique T̃ with S = z^m·T̃(z + 1/z):
/// T̃ = c_m + Σ_{j=1..m} c_{m+j}·v_j where v₀ = 2, v₁ = x, v_{j+1} = x·v_j − v_{j−1}.
pub fn x_transform(s: &IntPolynomial) -> Result<IntPolynomial, XTransformError> {
    if s.is_zero() || !s.is_reciprocal() {
        return Err(XTransformError::NotReciprocal);
    }
    let d = s.degree().unwrap();
    if d % 2 == 1 {
        return Err(XTransformError::OddDegree);
    }
    let m = d / 2;
    let x = IntPolynomial::monomial(BigInt::one(), 1);
    let mut acc = IntPolynomial::constant(s.coeff(m));
    let mut v_prev = IntPolynomial::constant(BigInt::from(2));
    let mut v_cur = x.clone();
    for j in 1..=m {
        acc = &acc + &v_cur.scale(&s.coeff(m + j));
        if j < m {
            let next = &(&x * &v_cur) - &v_prev;
            v_prev = v_cur;
            v_cur = next;
        }
    }
    Ok(acc)
}

/// Q(w) = (w+1)^d · P((w−1)/(w+1)); maps |z| < 1 to Re w > 0.
fn cayley_transform(p: &IntPolynomial) -> IntPolynomial {
    let d = p.degree().expect("nonzero polynomial");
    let wm = IntPolynomial::from_i64(&[-1, 1]);
    let wp = IntPolynomial::from_i64(&[1, 1]);
    let mut acc = IntPolynomial::zero();
    let mut wp_pow = IntPolynomial::one(); // (w+1)^{d−k}
    for k in (0..=d).rev() {
        acc = &(&acc * &wm) + &wp_pow.scale(&p.coeff(k));
        if k > 0 {
            wp_pow = &wp_pow * &wp;
        }
    }
    acc
}

/// Even/odd split of Q(iω) = Ũ(ω²) + iω·W̃(ω²).
fn boundary_split(q: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    let coeffs = q.coeffs();
    let mut u = Vec::new();
    let mut w = Vec::new();
    for (k, c) in coeffs.iter().enumerate() {
        let j = k / 2;
        let signed = if j % 2 == 1 { -c } else { c.clone() };
        if k % 2 == 0 {
            if u.len() <= j {
                u.resize(j + 1, BigInt::zero());
            }
            u[j] = signed;
        } else {
            if w.len() <= j {
                w.resize(j + 1, BigInt::zero());
            }
            w[j] = signed;
        }
    }
    (
        IntPolynomial::from_coeffs(u),
        IntPolynomial::from_coeffs(w),
    )
}

/// Cauchy index of g/f over (0, ∞) plus the final chain element (for the
/// boundary guard).
fn index_pos_axis(f: &IntPolynomial, g: &IntPolynomial) -> (i64, IntPolynomial) {
    let mut v0 = VarCount::default();
    let mut vinf = VarCount::default();
    let mut last = f.clone();
    signed_prs(f, g, |e| {
        v0.push(sign_at(&e, &Pt::ZeroPlus));
        vinf.push(sign_at(&e, &Pt::PosInf));
        last = e;
    });
    (v0.count as i64 - vinf.count as i64, last)
}

fn has_positive_real_root(f: &IntPolynomial) -> bool {
    if f.degree().map_or(true, |d| d == 0) {
        return false;
    }
    sturm_count(
        f,
        &ChainPoint::Finite(Rational::zero()),
        &ChainPoint::PosInf,
    )
    .map_or(true, |c| c > 0)
}

/// Number of roots of P in the open unit disk, counted with multiplicity.
/// Exact: Cayley transform to a half-plane, then the boundary Cauchy index
/// on half-degree even/odd parts.
pub fn count_roots_in_unit_disk(p: &IntPolynomial) -> Result<usize, DiskCountError> {
    assert!(!p.is_zero(), "disk count of the zero polynomial");
    let n = match p.degree() {
        Some(0) | None => return Ok(0),
        Some(d) => d,
    };
    if p.eval_i64(1).is_zero() {
        return Err(DiskCountError::RootAtOne);
    }
    if p.eval_i64(-1).is_zero() {
        return Err(DiskCountError::RootAtMinusOne);
    }
    let q = cayley_transform(p);
    debug_assert_eq!(q.degree(), Some(n), "lc(Q) = P(1) ≠ 0");
    let (ut, wt) = boundary_split(&q);
    // diff = (#roots in Re w < 0) − (#roots in Re w > 0)
    let diff = if wt.is_zero() {
        if has_positive_real_root(&ut) {
            return Err(DiskCountError::BoundaryRoot);
        }
        0
    } else if n % 2 == 0 {
        let (idx, last) = index_pos_axis(&ut, &wt);
        if last.degree().map_or(false, |d| d >= 1) && has_positive_real_root(&last) {
            return Err(DiskCountError::BoundaryRoot);
        }
        -2 * idx
    } else {
        let (idx, last) = index_pos_axis(&wt, &ut);
        if last.degree().map_or(false, |d| d >= 1) && has_positive_real_root(&last) {
            return Err(DiskCountError::BoundaryRoot);
        }
        let w_low = wt
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .map_or(0, sign_big);
        let j0 = i64::from(sign_big(&q.coeff(0)) * w_low);
        2 * idx + j0
    };
    let num = n as i64 - diff;
    if num < 0 || num % 2 != 0 || num > 2 * n as i64 {
        return Err(DiskCountError::Degenerate { step: 1 });
    }
    Ok((num / 2) as usize)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SalemVerdict {
    Salem,
    /// Reciprocal quadratic with its root pair split across |z| = 1.
    ReciprocalPisot,
    NotSalem,
    Inconclusive,
}

/// Distinct-root counts of the transform T̃ relative to the window [−2, 2].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootCounts {
    /// in (−2, 2)
    pub between: usize,
    pub at_two: usize,
    pub at_minus_two: usize,
    /// in (2, ∞)
    pub beyond_two: usize,
}

#[derive(Clone, Debug)]
pub struct SalemCertificate {
    pub verdict: SalemVerdict,
    pub degree: usize,
    pub trace: Option<BigInt>,
    pub counts: Option<RootCounts>,
    pub sieve: Option<SieveResult>,
    /// Bracket for τ, the root in (1, ∞); present for Salem and
    /// ReciprocalPisot verdicts.
    pub value: Option<RealInterval>,
    pub reason: Option<&'static str>,
}

fn salem_fail(degree: usize, trace: Option<BigInt>, reason: &'static str) -> SalemCertificate {
    SalemCertificate {
        verdict: SalemVerdict::NotSalem,
        degree,
        trace,
        counts: None,
        sieve: None,
        value: None,
        reason: Some(reason),
    }
}

/// Certifies that S is the minimal polynomial of a Salem number: monic,
/// reciprocal, even degree 2m ≥ 4, S(±1) ≠ 0, cyclotomic sieve passed,
/// squarefree transform with m−1 roots in (−2,2) and one in (2,∞). Those
/// facts force irreducibility: a factor avoiding the root pair τ, 1/τ would
/// have all roots on |z| = 1 and hence be cyclotomic by Kronecker, which the
/// sieve excludes; a factor containing only one of τ, 1/τ would have
/// constant term of modulus < 1. Degree 2 earns `ReciprocalPisot` instead.
pub fn certify_salem(s: &IntPolynomial) -> SalemCertificate {
    certify_salem_inner(s, 64)
}

fn certify_salem_inner(s: &IntPolynomial, precision_bits: u32) -> SalemCertificate {
    let degree = match s.degree() {
        Some(d) if d >= 1 => d,
        _ => return salem_fail(0, None, "zero or constant polynomial"),
    };
    if !s.is_monic() {
        return salem_fail(degree, None, "not monic");
    }
    let trace = s.trace();
    if !s.is_reciprocal() {
        return salem_fail(degree, trace, "not reciprocal");
    }
    if degree % 2 == 1 {
        return salem_fail(degree, trace, "odd degree");
    }
    let m = degree / 2;
    if s.eval_i64(1).is_zero() {
        return salem_fail(degree, trace, "root at z = 1");
    }
    if s.eval_i64(-1).is_zero() {
        return salem_fail(degree, trace, "root at z = -1");
    }
    let sieve = sieve_gcd_test(s);
    if !sieve.passed {
        return SalemCertificate {
            sieve: Some(sieve),
            ..salem_fail(degree, trace, "cyclotomic sieve failed")
        };
    }
    let t = x_transform(s).expect("monic reciprocal of even degree");
    if gcd_primitive(&t, &t.derivative()).degree() != Some(0) {
        return SalemCertificate {
            sieve: Some(sieve),
            ..salem_fail(degree, trace, "repeated roots")
        };
    }
    let two = ChainPoint::Finite(Rational::from_integer(BigInt::from(2)));
    let minus_two = ChainPoint::Finite(Rational::from_integer(BigInt::from(-2)));
    // T̃(±2) = S(±1) up to sign, both nonzero by the checks above.
    let between = sturm_count(&t, &minus_two, &two).expect("transform nonzero at ±2");
    let beyond = sturm_count(&t, &two, &ChainPoint::PosInf).expect("transform nonzero at 2");
    let counts = RootCounts {
        between,
        at_two: 0,
        at_minus_two: 0,
        beyond_two: beyond,
    };
    if between == m - 1 && beyond == 1 {
        let value = bisect_tau(&t, precision_bits);
        SalemCertificate {
            verdict: if m >= 2 {
                SalemVerdict::Salem
            } else {
                SalemVerdict::ReciprocalPisot
            },
            degree,
            trace,
            counts: Some(counts),
            sieve: Some(sieve),
            value: Some(value),
            reason: None,
        }
    } else {
        SalemCertificate {
            counts: Some(counts),
            sieve: Some(sieve),
            ..salem_fail(degree, trace, "roots not split m-1 inside [-2,2] plus one beyond 2")
        }
    }
}

pub(crate) fn sign_at_rational(f: &IntPolynomial, x: &Rational) -> i8 {
    sign_big(&f.eval_homogeneous(x.numer(), x.denom()))
}

/// Bracket of the unique root of T̃ in (2, ∞), transported to τ through the
/// increasing map τ = (x + √(x²−4))/2, outward-rounded, width ≤ 2^−bits.
fn bisect_tau(t: &IntPolynomial, precision_bits: u32) -> RealInterval {
    let two = Rational::from_integer(BigInt::from(2));
    let mut bound = BigInt::one();
    for c in t.coeffs() {
        let a = c.abs();
        if a > bound {
            bound = a;
        }
    }
    let mut lo = two.clone();
    let mut hi = &two + &Rational::from_integer(&bound + 1);
    debug_assert!(sign_at_rational(t, &lo) < 0, "one sign change beyond 2");
    debug_assert!(sign_at_rational(t, &hi) > 0, "positive beyond the root bound");
    let eps = pow2_rational(-i64::from(precision_bits));
    let max_iter = 2 * (precision_bits as usize + bound.bits() as usize + 32);
    for _ in 0..max_iter {
        let iv = tau_bracket(&lo, &hi, precision_bits);
        if iv.width() <= eps {
            return iv;
        }
        let mid = (&lo + &hi) / &two;
        match sign_at_rational(t, &mid) {
            0 => {
                lo = mid.clone();
                hi = mid;
            }
            s if s < 0 => lo = mid,
            _ => hi = mid,
        }
    }
    unreachable!("tau bisection failed to converge");
}

fn tau_bracket(lo: &Rational, hi: &Rational, precision_bits: u32) -> RealInterval {
    let four = Rational::from_integer(BigInt::from(4));
    let two = Rational::from_integer(BigInt::from(2));
    let s_lo = sqrt_interval(&(&(lo * lo) - &four), precision_bits + 6).expect("x ≥ 2");
    let s_hi = sqrt_interval(&(&(hi * hi) - &four), precision_bits + 6).expect("x ≥ 2");
    RealInterval::new((lo + s_lo.lo()) / &two, (hi + s_hi.hi()) / &two)
}

/// Salem (or reciprocal-Pisot) value τ as a bracket of width ≤ 2^−precision.
/// On any other verdict the failed certificate comes back as the error.
pub fn salem_value(
    s: &IntPolynomial,
    precision_bits: u32,
) -> Result<RealInterval, SalemCertificate> {
    let cert = certify_salem_inner(s, precision_bits);
    match cert.verdict {
        SalemVerdict::Salem | SalemVerdict::ReciprocalPisot => {
            Ok(cert.value.clone().expect("value accompanies the verdict"))
        }
        _ => Err(cert),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PisotVerdict {
    Pisot,
    NotPisot,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct PisotCertificate {
    pub verdict: PisotVerdict,
    pub degree: usize,
    pub trace: Option<BigInt>,
    /// Roots in |z| < 1, with multiplicity.
    pub disk_count: Option<usize>,
    /// Bracket for the dominant real root in (1, ∞); present on Pisot.
    pub dominant: Option<RealInterval>,
    pub reason: Option<&'static str>,
}

fn pisot_fail(degree: usize, trace: Option<BigInt>, reason: &'static str) -> PisotCertificate {
    PisotCertificate {
        verdict: PisotVerdict::NotPisot,
        degree,
        trace,
        disk_count: None,
        dominant: None,
        reason: Some(reason),
    }
}

/// Certifies that P is the minimal polynomial of a Pisot number: monic,
/// P(0) ≠ 0, exactly one real root in (1, ∞), no roots on |z| = 1 (via
/// gcd(P, reverse P), resolved through its own transform when nonconstant),
/// and deg−1 roots in the open disk. Irreducibility follows: a proper factor
/// missing the dominant root would have all roots strictly inside the disk
/// and hence integer constant term of modulus < 1.
pub fn certify_pisot(p: &IntPolynomial) -> PisotCertificate {
    certify_pisot_inner(p, 64)
}

fn certify_pisot_inner(p: &IntPolynomial, precision_bits: u32) -> PisotCertificate {
    let degree = match p.degree() {
        Some(d) if d >= 1 => d,
        _ => return pisot_fail(0, None, "zero or constant polynomial"),
    };
    if !p.is_monic() {
        return pisot_fail(degree, None, "not monic");
    }
    let trace = p.trace();
    if p.coeff(0).is_zero() {
        return pisot_fail(degree, trace, "zero constant term");
    }
    if p.eval_i64(1).is_zero() {
        return pisot_fail(degree, trace, "root at z = 1");
    }
    if p.eval_i64(-1).is_zero() {
        return pisot_fail(degree, trace, "root at z = -1");
    }
    // Circle roots of P are shared with reverse(P), so they all divide g.
    let g = gcd_primitive(p, &p.reverse());
    if g.degree() != Some(0) {
        let strip = strip_cyclotomic(&g);
        if !strip.sieve.stripped_factors.is_empty() {
            return pisot_fail(degree, trace, "cyclotomic factor");
        }
        // g divides both P and reverse(P), so reverse(g) = ±g; the sign and
        // parity cases with a −1 root are already excluded.
        if !g.is_reciprocal() || g.degree().unwrap() % 2 == 1 {
            return PisotCertificate {
                verdict: PisotVerdict::Inconclusive,
                degree,
                trace,
                disk_count: None,
                dominant: None,
                reason: Some("unresolved overlap with the reversed polynomial"),
            };
        }
        let gt = x_transform(&g).expect("even reciprocal");
        let two = ChainPoint::Finite(Rational::from_integer(BigInt::from(2)));
        let minus_two = ChainPoint::Finite(Rational::from_integer(BigInt::from(-2)));
        let circle = sturm_count(&gt, &minus_two, &two).expect("g(±1) ≠ 0");
        if circle > 0 {
            return pisot_fail(degree, trace, "conjugate on the unit circle");
        }
    }
    let inside = match count_roots_in_unit_disk(p) {
        Ok(c) => c,
        Err(DiskCountError::BoundaryRoot) => {
            return pisot_fail(degree, trace, "conjugate on the unit circle")
        }
        Err(_) => {
            return PisotCertificate {
                verdict: PisotVerdict::Inconclusive,
                degree,
                trace,
                disk_count: None,
                dominant: None,
                reason: Some("disk count degenerated"),
            }
        }
    };
    let above = sturm_count(p, &ChainPoint::Finite(Rational::one()), &ChainPoint::PosInf)
        .expect("P(1) ≠ 0");
    if inside == degree - 1 && above == 1 {
        let dominant = bisect_dominant(p, precision_bits);
        PisotCertificate {
            verdict: PisotVerdict::Pisot,
            degree,
            trace,
            disk_count: Some(inside),
            dominant: Some(dominant),
            reason: None,
        }
    } else {
        PisotCertificate {
            disk_count: Some(inside),
            ..pisot_fail(degree, trace, "roots not split deg-1 inside the disk plus one beyond 1")
        }
    }
}

/// Bracket of the unique real root of P in (1, ∞), width ≤ 2^−bits.
fn bisect_dominant(p: &IntPolynomial, precision_bits: u32) -> RealInterval {
    let mut bound = BigInt::one();
    for c in p.coeffs() {
        let a = c.abs();
        if a > bound {
            bound = a;
        }
    }
    let mut lo = Rational::one();
    let mut hi = &lo + &Rational::from_integer(&bound + 1);
    assert!(sign_at_rational(p, &lo) < 0, "P(1) < 0 for a Pisot polynomial");
    debug_assert!(sign_at_rational(p, &hi) > 0);
    let eps = pow2_rational(-i64::from(precision_bits));
    let two = Rational::from_integer(BigInt::from(2));
    loop {
        if &hi - &lo <= eps {
            return RealInterval::new(lo, hi);
        }
        let mid = (&lo + &hi) / &two;
        match sign_at_rational(p, &mid) {
            0 => return RealInterval::point(mid),
            s if s < 0 => lo = mid,
            _ => hi = mid,
        }
    }
}

/// T̃(y − 2): totally positive algebraic integer whose trace is 2m − T.
/// Errors with the failed certificate if S is not Salem/reciprocal-Pisot.
pub fn totally_positive_from_salem(
    s: &IntPolynomial,
) -> Result<IntPolynomial, SalemCertificate> {
    let cert = certify_salem(s);
    if !matches!(
        cert.verdict,
        SalemVerdict::Salem | SalemVerdict::ReciprocalPisot
    ) {
        return Err(cert);
    }
    let m = cert.degree / 2;
    let t = x_transform(s).expect("certified reciprocal of even degree");
    let shifted = t.compose_shift(-2);
    let positive = sturm_count(
        &shifted,
        &ChainPoint::Finite(Rational::zero()),
        &ChainPoint::PosInf,
    )
    .expect("T̃(−2) ≠ 0");
    assert_eq!(positive, m, "all roots of T̃(y−2) are positive");
    let expected = BigInt::from(2 * m as i64) + s.trace().expect("monic");
    assert_eq!(shifted.trace(), Some(expected), "trace is 2m − T");
    Ok(shifted)
}

/// |S(1)·S(−1)|; equals 1 exactly for unramified Salem polynomials.
pub fn unramified_flag(s: &IntPolynomial) -> BigInt {
    (s.eval_i64(1) * s.eval_i64(-1)).abs()
}

/// Trace magnitude below 2 is outside the bound's domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BadTrace;

impl fmt::Display for BadTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "minimum-degree bound needs trace magnitude at least 2")
    }
}

impl core::error::Error for BadTrace {}

/// Whether `degree` meets the minimum degree 2⌊9T/2⌋ + 2 required of a Salem
/// polynomial with trace −T, T ≥ 2 (18k+2 at T = 2k, 18k+10 at T = 2k+1).
pub fn min_degree_check(trace_magnitude: u64, degree: u64) -> Result<bool, BadTrace> {
    if trace_magnitude < 2 {
        return Err(BadTrace);
    }
    Ok(degree >= 2 * (9 * trace_magnitude / 2) + 2)
}
