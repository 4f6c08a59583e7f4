//! Circularly interlacing polynomial pairs and the Salem/Pisot combinators.
//!
//! A pair (p, q) of equal-degree polynomials interlaces circularly when all
//! roots of p·q are simple, lie on |z| = 1, and alternate between p and q
//! around the circle. Everything is checked in the x = z + 1/z coordinate:
//! roots at z = ±1 are divided out exactly first, the rest become simple
//! real roots in (−2, 2), and alternation reduces to merging isolating
//! intervals. Real coefficients force exactly one of p, q to vanish at each
//! of z = ±1 — a conjugate pair straddling one of those points would put
//! two same-label roots next to each other.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::certify::{
    isolate_real_roots_in, sign_at_rational, sign_big, sturm_count, x_transform, ChainPoint,
};
use crate::poly::{gcd_primitive, IntPolynomial, Rational};

/// Which member of a pair a verification failure points at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    P,
    Q,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlaceError {
    /// Degree or shape precondition violated (equal degree ≥ 1, positive
    /// leading coefficients, nonempty input).
    BadPair,
    NotCoprime,
    /// The named half has a root off the unit circle.
    NotOnCircle(Half),
    /// The named half has a repeated root.
    NotSimple(Half),
    /// Roots fail to alternate; `position` indexes the circular sequence
    /// taken in ascending x = z + 1/z order, 0 being the z = −1 slot.
    NotAlternating { position: usize },
    /// An input pair lacks verification.
    NotInterlacing,
    /// A combinator's sign or monicity condition fails.
    PreconditionFailed,
    /// Interval refinement hit the iteration cap.
    Inconclusive,
}

impl fmt::Display for InterlaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InterlaceError::BadPair => write!(f, "pair shape precondition violated"),
            InterlaceError::NotCoprime => write!(f, "pair has a common factor"),
            InterlaceError::NotOnCircle(h) => write!(f, "{h:?} has a root off the unit circle"),
            InterlaceError::NotSimple(h) => write!(f, "{h:?} has a repeated root"),
            InterlaceError::NotAlternating { position } => {
                write!(f, "roots fail to alternate at position {position}")
            }
            InterlaceError::NotInterlacing => write!(f, "input pair is not verified"),
            InterlaceError::PreconditionFailed => write!(f, "combinator precondition failed"),
            InterlaceError::Inconclusive => write!(f, "interval refinement cap reached"),
        }
    }
}

impl core::error::Error for InterlaceError {}

/// A (denominator, numerator) pair; `verified` is set only by
/// `verify_circular_interlacing` (directly or through `pair_sum`).
#[derive(Clone, Debug, PartialEq)]
pub struct InterlacingPair {
    p: IntPolynomial,
    q: IntPolynomial,
    verified: bool,
}

impl InterlacingPair {
    /// Wraps raw polynomials without any checking; combinators reject such
    /// pairs until they pass verification.
    pub fn new_unverified(p: IntPolynomial, q: IntPolynomial) -> Self {
        InterlacingPair {
            p,
            q,
            verified: false,
        }
    }

    pub fn p(&self) -> &IntPolynomial {
        &self.p
    }

    pub fn q(&self) -> &IntPolynomial {
        &self.q
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }
}

/// One polynomial split against the unit circle: f = (z−1)^a (z+1)^b · unit.
struct CircleFactor {
    at_one: u32,
    at_minus_one: u32,
    /// x-transform of the unit part; its roots are the cosine doubles of
    /// the circle roots away from ±1.
    transform: IntPolynomial,
}

fn strip_linear(f: &IntPolynomial, at: i64) -> (IntPolynomial, u32) {
    let div = IntPolynomial::from_i64(&[-at, 1]);
    let mut g = f.clone();
    let mut mult = 0u32;
    while g.degree().map_or(false, |d| d >= 1) && g.eval_i64(at).is_zero() {
        g = g.exact_div(&div).expect("root factor divides");
        mult += 1;
    }
    (g, mult)
}

fn two_r() -> Rational {
    Rational::from_integer(BigInt::from(2))
}

fn fin(x: Rational) -> ChainPoint {
    ChainPoint::Finite(x)
}

/// Certifies that all roots of f are simple and on |z| = 1; multiplicities
/// at ±1 come back split off.
fn circle_structure(f: &IntPolynomial, half: Half) -> Result<CircleFactor, InterlaceError> {
    let (unit, at_one) = strip_linear(f, 1);
    let (unit, at_minus_one) = strip_linear(&unit, -1);
    if at_one >= 2 || at_minus_one >= 2 {
        return Err(InterlaceError::NotSimple(half));
    }
    // conjugate-pair roots on the circle make the remaining factor palindromic
    if unit.reverse() != unit {
        return Err(InterlaceError::NotOnCircle(half));
    }
    let transform = x_transform(&unit).map_err(|_| InterlaceError::NotOnCircle(half))?;
    if let Some(m) = transform.degree().filter(|&m| m >= 1) {
        if gcd_primitive(&transform, &transform.derivative()).degree() != Some(0) {
            return Err(InterlaceError::NotSimple(half));
        }
        let inside = sturm_count(&transform, &fin(-two_r()), &fin(two_r()))
            .expect("unit part is nonzero at z = ±1");
        if inside != m {
            return Err(InterlaceError::NotOnCircle(half));
        }
    }
    Ok(CircleFactor {
        at_one,
        at_minus_one,
        transform,
    })
}

/// One bisection step on an isolating interval of a root of f; endpoints
/// stay off the root set.
fn tighten(f: &IntPolynomial, lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mid = (lo + hi) / two_r();
    match sign_at_rational(f, &mid) {
        0 => {
            // the isolated root is mid itself; shrink symmetrically around it
            let w = (hi - lo) / Rational::from_integer(BigInt::from(8));
            (&mid - &w, &mid + &w)
        }
        s if s == sign_at_rational(f, lo) => (mid, hi.clone()),
        _ => (lo.clone(), mid),
    }
}

const REFINE_CAP: usize = 64;

/// Checks the circular interlacing condition exactly and returns the pair
/// with `verified` set.
pub fn verify_circular_interlacing(
    p: &IntPolynomial,
    q: &IntPolynomial,
) -> Result<InterlacingPair, InterlaceError> {
    let n = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) if a == b && a >= 1 => a,
        _ => return Err(InterlaceError::BadPair),
    };
    if sign_big(p.leading_coeff().unwrap()) <= 0 || sign_big(q.leading_coeff().unwrap()) <= 0 {
        return Err(InterlaceError::BadPair);
    }
    if gcd_primitive(p, q).degree() != Some(0) {
        return Err(InterlaceError::NotCoprime);
    }
    let sp = circle_structure(p, Half::P)?;
    let sq = circle_structure(q, Half::Q)?;
    if sp.at_one + sq.at_one != 1 {
        return Err(InterlaceError::NotAlternating { position: n });
    }
    if sp.at_minus_one + sq.at_minus_one != 1 {
        return Err(InterlaceError::NotAlternating { position: 0 });
    }
    let mut items: Vec<(Rational, Rational, Half)> = Vec::new();
    for (t, half) in [(&sp.transform, Half::P), (&sq.transform, Half::Q)] {
        if t.degree().map_or(false, |m| m >= 1) {
            for (lo, hi) in
                isolate_real_roots_in(t, &-two_r(), &two_r()).expect("±2 are not roots")
            {
                items.push((lo, hi, half));
            }
        }
    }
    for round in 0..=REFINE_CAP {
        items.sort_by(|a, b| a.0.cmp(&b.0));
        if !items.windows(2).any(|w| w[0].1 > w[1].0) {
            break;
        }
        if round == REFINE_CAP {
            return Err(InterlaceError::Inconclusive);
        }
        for item in items.iter_mut() {
            let t = match item.2 {
                Half::P => &sp.transform,
                Half::Q => &sq.transform,
            };
            let (lo, hi) = tighten(t, &item.0, &item.1);
            item.0 = lo;
            item.1 = hi;
        }
    }
    // ascending x runs from the z = −1 slot through the open upper arc
    // (backwards in angle) to the z = +1 slot; the mirror arc repeats the
    // pattern, so alternation on this half sequence settles the circle.
    let label = |at_p: u32| if at_p == 1 { Half::P } else { Half::Q };
    let mut seq = Vec::with_capacity(items.len() + 2);
    seq.push(label(sp.at_minus_one));
    seq.extend(items.iter().map(|i| i.2));
    seq.push(label(sp.at_one));
    for i in 1..seq.len() {
        if seq[i] == seq[i - 1] {
            return Err(InterlaceError::NotAlternating { position: i });
        }
    }
    Ok(InterlacingPair {
        p: p.clone(),
        q: q.clone(),
        verified: true,
    })
}

/// Sum of the quotients qᵢ/pᵢ as one reduced pair q/p, re-verified.
/// The pair is primitive jointly (a shared constant is divided out, an
/// unbalanced one like the factor 2 in even-length sums is kept).
pub fn pair_sum(pairs: &[InterlacingPair]) -> Result<InterlacingPair, InterlaceError> {
    if pairs.is_empty() {
        return Err(InterlaceError::BadPair);
    }
    if pairs.iter().any(|pr| !pr.verified) {
        return Err(InterlaceError::NotInterlacing);
    }
    let mut big_p = IntPolynomial::one();
    for pr in pairs {
        big_p = &big_p * &pr.p;
    }
    let mut big_q = IntPolynomial::zero();
    for (i, pr) in pairs.iter().enumerate() {
        let mut term = pr.q.clone();
        for (j, other) in pairs.iter().enumerate() {
            if i != j {
                term = &term * &other.p;
            }
        }
        big_q = &big_q + &term;
    }
    let g = gcd_primitive(&big_p, &big_q);
    let mut rp = big_p.exact_div(&g).expect("primitive gcd divides");
    let mut rq = big_q.exact_div(&g).expect("primitive gcd divides");
    let joint = rp.content().gcd(&rq.content());
    if joint > BigInt::one() {
        let c = IntPolynomial::constant(joint);
        rp = rp.exact_div(&c).unwrap();
        rq = rq.exact_div(&c).unwrap();
    }
    if rp
        .leading_coeff()
        .map_or(false, |c| c.sign() == Sign::Minus)
    {
        rp = -&rp;
        rq = -&rq;
    }
    verify_circular_interlacing(&rp, &rq)
}

/// (z²−1)·p − z·q: a Salem candidate when z = 1 caps the root sweep, i.e.
/// p(1) = 0, or q(1) = 0 with 2p(1) − q′(1) < 0. The output may still carry
/// a cyclotomic factor; callers sieve and certify.
pub fn salem_combine(pair: &InterlacingPair) -> Result<IntPolynomial, InterlaceError> {
    if !pair.verified {
        return Err(InterlaceError::NotInterlacing);
    }
    if !pair.p.is_monic() {
        return Err(InterlaceError::PreconditionFailed);
    }
    let p1 = pair.p.eval_i64(1);
    let admissible = p1.is_zero()
        || (pair.q.eval_i64(1).is_zero()
            && (BigInt::from(2) * &p1 - pair.q.derivative().eval_i64(1)).sign() == Sign::Minus);
    if !admissible {
        return Err(InterlaceError::PreconditionFailed);
    }
    let factor = IntPolynomial::from_i64(&[-1, 0, 1]);
    Ok(&(&factor * &pair.p) - &pair.q.mul_z_pow(1))
}

/// (z²−z−1)·p − z·q: a Pisot candidate, cyclotomic-free by construction.
pub fn pisot_combine(pair: &InterlacingPair) -> Result<IntPolynomial, InterlaceError> {
    if !pair.verified {
        return Err(InterlaceError::NotInterlacing);
    }
    if !pair.p.is_monic() {
        return Err(InterlaceError::PreconditionFailed);
    }
    let factor = IntPolynomial::from_i64(&[-1, -1, 1]);
    Ok(&(&factor * &pair.p) - &pair.q.mul_z_pow(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueSign {
    Positive,
    Negative,
    Zero,
}

/// One pole of f(x) = zq / (p·(z²−1)) read in x: the pole lies in
/// [lo, hi] (a point interval for the exact poles x = ±2).
#[derive(Clone, Debug, PartialEq)]
pub struct PoleResidue {
    pub lo: Rational,
    pub hi: Rational,
    pub sign: ResidueSign,
}

/// Pole intervals in ascending order, pairwise disjoint, one pole each.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueReport {
    pub poles: Vec<PoleResidue>,
}

impl ResidueReport {
    pub fn all_positive(&self) -> bool {
        self.poles.iter().all(|p| p.sign == ResidueSign::Positive)
    }
}

fn sign_to_residue(s: i8) -> ResidueSign {
    match s {
        0 => ResidueSign::Zero,
        s if s > 0 => ResidueSign::Positive,
        _ => ResidueSign::Negative,
    }
}

/// Signs of the residues λⱼ of f(x) = zq/(p·(z²−1)) at its poles αⱼ.
/// In reduced form f = N/D with N the transform of q's unit part and
/// D = (x−2)^{a}(x+2)^{b} times the transform of p's unit part (a, b the
/// multiplicities of ∓1 in p); every pole is simple and λⱼ = N(αⱼ)/D′(αⱼ).
/// Verified pairs report all signs positive.
pub fn residue_signs(pair: &InterlacingPair) -> Result<ResidueReport, InterlaceError> {
    let (p, q) = (&pair.p, &pair.q);
    let n = match (p.degree(), q.degree()) {
        (Some(a), Some(b)) if a == b && a >= 1 => a,
        _ => return Err(InterlaceError::BadPair),
    };
    let sp = circle_structure(p, Half::P)?;
    let sq = circle_structure(q, Half::Q)?;
    // exactly one ±1 root on each side makes f a rational function of x
    if sp.at_one + sq.at_one != 1 {
        return Err(InterlaceError::NotAlternating { position: n });
    }
    if sp.at_minus_one + sq.at_minus_one != 1 {
        return Err(InterlaceError::NotAlternating { position: 0 });
    }
    let numer = &sq.transform;
    let mut denom = sp.transform.clone();
    if sp.at_one == 1 {
        denom = &denom * &IntPolynomial::from_i64(&[-2, 1]);
    }
    if sp.at_minus_one == 1 {
        denom = &denom * &IntPolynomial::from_i64(&[2, 1]);
    }
    let denom_d = denom.derivative();
    #[cfg(debug_assertions)]
    {
        // sample the defining identity at z = 3, x = 3 + 1/3
        let x3 = Rational::new(BigInt::from(10), BigInt::from(3));
        let lhs = Rational::from_integer(BigInt::from(3) * q.eval_i64(3))
            / Rational::from_integer(p.eval_i64(3) * BigInt::from(8));
        let rhs = numer.eval_rational(&x3) / denom.eval_rational(&x3);
        debug_assert_eq!(lhs, rhs, "reduced form disagrees with zq/(p(z²−1))");
    }
    let mut poles: Vec<PoleResidue> = Vec::new();
    if sp.at_minus_one == 1 {
        let s = sign_big(&numer.eval_i64(-2)) * sign_big(&denom_d.eval_i64(-2));
        poles.push(PoleResidue {
            lo: -two_r(),
            hi: -two_r(),
            sign: sign_to_residue(s),
        });
    }
    if sp.transform.degree().map_or(false, |m| m >= 1) {
        for (lo, hi) in isolate_real_roots_in(&sp.transform, &-two_r(), &two_r())
            .expect("±2 are not roots")
        {
            poles.push(interior_residue(&sp.transform, numer, &denom, &denom_d, lo, hi)?);
        }
    }
    if sp.at_one == 1 {
        let s = sign_big(&numer.eval_i64(2)) * sign_big(&denom_d.eval_i64(2));
        poles.push(PoleResidue {
            lo: two_r(),
            hi: two_r(),
            sign: sign_to_residue(s),
        });
    }
    Ok(ResidueReport { poles })
}

/// Shrinks an isolating interval of a pole until the numerator and D′ are
/// root-free on it, so their signs there are the signs at the pole.
fn interior_residue(
    pole_poly: &IntPolynomial,
    numer: &IntPolynomial,
    denom: &IntPolynomial,
    denom_d: &IntPolynomial,
    mut lo: Rational,
    mut hi: Rational,
) -> Result<PoleResidue, InterlaceError> {
    for _ in 0..=REFINE_CAP {
        let interior = -two_r() < lo && hi < two_r();
        if interior {
            let clean = |f: &IntPolynomial| {
                sturm_count(f, &fin(lo.clone()), &fin(hi.clone())) == Ok(0)
            };
            if clean(numer) && clean(denom_d) {
                let s = sign_at_rational(numer, &lo) * sign_at_rational(denom_d, &lo);
                return Ok(PoleResidue {
                    lo,
                    hi,
                    sign: sign_to_residue(s),
                });
            }
        }
        let (l, h) = tighten(pole_poly, &lo, &hi);
        lo = l;
        hi = h;
    }
    // a residue can only refuse to leave zero if the pole cancels entirely
    let shared = gcd_primitive(numer, denom);
    if shared.degree().map_or(false, |d| d >= 1)
        && sturm_count(&shared, &fin(lo.clone()), &fin(hi.clone())) == Ok(1)
    {
        return Ok(PoleResidue {
            lo,
            hi,
            sign: ResidueSign::Zero,
        });
    }
    Err(InterlaceError::Inconclusive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::str::FromStr;

    fn poly(s: &str) -> IntPolynomial {
        IntPolynomial::from_str(s).unwrap()
    }

    fn verified(p: &str, q: &str) -> InterlacingPair {
        verify_circular_interlacing(&poly(p), &poly(q)).unwrap()
    }

    #[test]
    fn basic_pairs_verify() {
        assert!(verified("-1 0 1", "1 0 1").is_verified());
        assert!(verified("-1 0 0 0 0 1", "1 0 0 0 0 1").is_verified());
        assert!(verified("-1 1", "1 1").is_verified());
        // the reversed roles alternate too: ±i between ±1
        assert!(verified("1 0 1", "-1 0 1").is_verified());
    }

    #[test]
    fn shape_and_coprimality_guards() {
        let e = verify_circular_interlacing(&poly("-1 0 1"), &poly("1 1"));
        assert_eq!(e, Err(InterlaceError::BadPair));
        let e = verify_circular_interlacing(&poly("-1 0 1"), &poly("-1 0 -1"));
        assert_eq!(e, Err(InterlaceError::BadPair));
        let e = verify_circular_interlacing(&poly("-1 0 1"), &poly("-2 0 2"));
        assert_eq!(e, Err(InterlaceError::NotCoprime));
    }

    #[test]
    fn double_root_is_not_simple() {
        // (z−1)² against z²+1
        let e = verify_circular_interlacing(&poly("1 -2 1"), &poly("1 0 1"));
        assert_eq!(e, Err(InterlaceError::NotSimple(Half::P)));
    }

    #[test]
    fn off_circle_root_is_rejected() {
        // z²−3z+1 is palindromic but has real roots off the circle
        let e = verify_circular_interlacing(&poly("1 -3 1"), &poly("1 0 1"));
        assert_eq!(e, Err(InterlaceError::NotOnCircle(Half::P)));
        // non-palindromic remainder after stripping ±1
        let e = verify_circular_interlacing(&poly("-2 1 1"), &poly("1 0 1"));
        assert_eq!(e, Err(InterlaceError::NotOnCircle(Half::P)));
    }

    #[test]
    fn missing_wraparound_root_fails_alternation() {
        // neither z²+1 nor z²+z+1 vanishes at z = 1
        let e = verify_circular_interlacing(&poly("1 0 1"), &poly("1 1 1"));
        assert_eq!(e, Err(InterlaceError::NotAlternating { position: 2 }));
    }

    #[test]
    fn interior_clash_fails_alternation() {
        // p roots at 0°,120°,180°,240°; q at 60°,90°,270°,300° — the q pair
        // between 0° and 120° breaks the alternation
        let p = poly("-1 -1 0 1 1");
        let q = &poly("1 -1 1") * &poly("1 0 1");
        let e = verify_circular_interlacing(&p, &q);
        assert_eq!(e, Err(InterlaceError::NotAlternating { position: 1 }));
    }

    #[test]
    fn pair_sum_of_quadratic_and_cubic_pairs() {
        let a = verified("-1 0 1", "1 0 1");
        let b = verified("-1 0 0 1", "1 0 0 1");
        let sum = pair_sum(&[a, b]).unwrap();
        assert_eq!(sum.p(), &poly("-1 -1 0 1 1"));
        assert_eq!(sum.q(), &poly("2 2 2 2 2"));
        assert!(sum.is_verified());
    }

    #[test]
    fn pair_sum_singleton_and_doubling() {
        let single = pair_sum(&[verified("-1 0 0 0 0 1", "1 0 0 0 0 1")]).unwrap();
        assert_eq!(single.p(), &poly("-1 0 0 0 0 1"));
        assert_eq!(single.q(), &poly("1 0 0 0 0 1"));
        let a = verified("-1 1", "1 1");
        let twice = pair_sum(&[a.clone(), a]).unwrap();
        assert_eq!(twice.p(), &poly("-1 1"));
        assert_eq!(twice.q(), &poly("2 2"));
    }

    #[test]
    fn pair_sum_rejects_unverified_input() {
        let raw = InterlacingPair::new_unverified(poly("-1 0 1"), poly("1 0 1"));
        assert_eq!(pair_sum(&[raw]), Err(InterlaceError::NotInterlacing));
        assert_eq!(pair_sum(&[]), Err(InterlaceError::BadPair));
    }

    #[test]
    fn salem_combine_golden_outputs() {
        let s = salem_combine(&verified("-1 -1 0 1 1", "1 1 1 1 1")).unwrap();
        assert_eq!(s, poly("1 0 -2 -3 -2 0 1"));
        let s = salem_combine(&verified("-1 0 1", "1 0 1")).unwrap();
        assert_eq!(s, poly("1 -1 -2 -1 1"));
        let s = salem_combine(&verified("-1 1", "1 1")).unwrap();
        assert_eq!(s, poly("1 -2 -2 1"));
        // (z+1)(z²−3z+1): the combinator may hand back a cyclotomic cofactor
        assert_eq!(
            s.exact_div(&poly("1 1")).unwrap(),
            poly("1 -3 1")
        );
    }

    #[test]
    fn salem_combine_guards() {
        // q vanishes at 1 instead and 2p(1) − q′(1) = 2 ≥ 0
        let pair = verified("1 0 1", "-1 0 1");
        assert_eq!(salem_combine(&pair), Err(InterlaceError::PreconditionFailed));
        let raw = InterlacingPair::new_unverified(poly("-1 0 1"), poly("1 0 1"));
        assert_eq!(salem_combine(&raw), Err(InterlaceError::NotInterlacing));
        // non-monic p
        let pair = verify_circular_interlacing(&poly("-2 0 2"), &poly("1 0 1")).unwrap();
        assert_eq!(salem_combine(&pair), Err(InterlaceError::PreconditionFailed));
    }

    #[test]
    fn pisot_combine_golden_outputs() {
        let p = pisot_combine(&verified("-1 -1 0 1 1", "1 1 1 1 1")).unwrap();
        assert_eq!(p, poly("1 1 -1 -3 -3 -1 1"));
        let p = pisot_combine(&verified("-1 1", "1 1")).unwrap();
        assert_eq!(p, poly("1 -1 -3 1"));
    }

    #[test]
    fn residue_signs_partial_fraction_examples() {
        // x/(x²−4) = ½/(x−2) + ½/(x+2)
        let r = residue_signs(&verified("-1 0 1", "1 0 1")).unwrap();
        assert_eq!(r.poles.len(), 2);
        assert!(r.all_positive());
        assert_eq!(r.poles[0].lo, -two_r());
        assert_eq!(r.poles[1].hi, two_r());
        // 1/(x−2)
        let r = residue_signs(&verified("-1 1", "1 1")).unwrap();
        assert_eq!(r.poles.len(), 1);
        assert!(r.all_positive());
    }

    #[test]
    fn residue_signs_on_summed_pair() {
        let a = verified("-1 0 1", "1 0 1");
        let b = verified("-1 0 0 1", "1 0 0 1");
        let sum = pair_sum(&[a, b]).unwrap();
        let r = residue_signs(&sum).unwrap();
        assert_eq!(r.poles.len(), 3);
        assert!(r.all_positive());
        assert!(r.poles.windows(2).all(|w| w[0].hi <= w[1].lo));
    }

    #[test]
    fn negated_numerator_flips_residue_signs() {
        let raw = InterlacingPair::new_unverified(poly("-1 0 1"), poly("-1 0 -1"));
        let r = residue_signs(&raw).unwrap();
        assert!(r.poles.iter().all(|p| p.sign == ResidueSign::Negative));
    }

    #[test]
    fn compose_power_preserves_verification() {
        let p = poly("-1 0 1");
        let q = poly("1 0 1");
        for n in 2..=4 {
            let pn = p.compose_power(n);
            let qn = q.compose_power(n);
            assert!(verify_circular_interlacing(&pn, &qn).is_ok());
        }
    }
}
