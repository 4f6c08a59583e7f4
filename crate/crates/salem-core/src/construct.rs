//! Candidate generation for Salem and Pisot numbers of prescribed trace.
//!
//! Both generators iterate a two-line update over consecutive prime pairs
//! (2,3), (5,7), … — the primes play the role of pairwise-coprime exponents
//! k₁..k_n. The Salem loop works with the (z^k−1)/(z−1) quotients so its
//! output is directly reciprocal; the Pisot loop uses the bare z^k−1 factors
//! and leaves a forced (z−1)^m divisor that is stripped afterwards. The
//! module also exposes the even-coefficient substitution h(t, t^{k₁}, …)
//! underlying the construction and a handful of closed-form families used as
//! certification fixtures.

use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bounds::{self, BoundReport};
use crate::cyclo;
use crate::poly::IntPolynomial;
use crate::primes;

/// Why a generation request was rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructError {
    /// The exponent list has odd length.
    OddN,
    /// Two exponents share a factor.
    NotCoprime,
    /// A parameter lies outside its family's domain.
    BadParam,
    /// The record was produced under a policy that does not expand
    /// polynomials.
    NotMaterializable,
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::OddN => write!(f, "exponent list must have even length"),
            ConstructError::NotCoprime => write!(f, "exponents must be pairwise coprime"),
            ConstructError::BadParam => write!(f, "parameter out of range"),
            ConstructError::NotMaterializable => {
                write!(f, "polynomial not materialized under this policy")
            }
        }
    }
}

impl core::error::Error for ConstructError {}

/// Exponent selection policy for Salem generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    /// k₁..k_n = the first n primes; output fully materialized.
    FirstPrimes,
    /// k₁ = the torsion-killing exponent K, far too large to expand; the
    /// record carries log-scale estimates instead of polynomials.
    Killer,
}

/// The exponents k₁..k_n a run used, literal or symbolic.
#[derive(Clone, Debug)]
pub enum ExponentSpec {
    Primes(Vec<u64>),
    /// K is given only through the logarithmic estimates in `report`; the
    /// remaining n−1 exponents are the smallest primes not dividing K.
    Killer { report: BoundReport, description: String },
}

/// One generation run: the target, the exponents, and (when materialized)
/// the loop output before and after reduction.
#[derive(Clone, Debug)]
pub struct GenerationRecord {
    /// Target trace, always −T.
    pub trace: i64,
    pub exponents: ExponentSpec,
    /// Number of exponents: 2T+2 for Salem, 2T+4 for Pisot.
    pub n: usize,
    raw: Option<IntPolynomial>,
    reduced: Option<IntPolynomial>,
    /// Exact output degree for Salem, an upper bound for Pisot; absent under
    /// the killer policy.
    pub predicted_degree: Option<u64>,
    /// Multiplicity of the stripped z−1 factor (Pisot only).
    pub stripped_multiplicity: Option<u32>,
}

impl GenerationRecord {
    /// Loop output before any reduction.
    pub fn raw(&self) -> Result<&IntPolynomial, ConstructError> {
        self.raw.as_ref().ok_or(ConstructError::NotMaterializable)
    }

    /// The candidate polynomial itself.
    pub fn reduced(&self) -> Result<&IntPolynomial, ConstructError> {
        self.reduced.as_ref().ok_or(ConstructError::NotMaterializable)
    }
}

/// (z^k − 1)/(z − 1): the all-ones polynomial of degree k−1.
fn geometric(k: u64) -> IntPolynomial {
    IntPolynomial::from_coeffs(alloc::vec![BigInt::one(); k as usize])
}

/// Runs S ← ((z^q−1)/(z−1))((z^r−1)/(z−1))·S − ((z^{q+r}−1)/(z−1))·Q,
/// Q ← ((z^q−1)/(z−1))((z^r−1)/(z−1))·Q over T+1 consecutive prime pairs
/// starting from S = (z²−1)(z−1), Q = z.
///
/// The output is monic, reciprocal, of trace −T and degree Σkᵢ − (2T−1).
/// It is a Salem candidate only: the cyclotomic sieve and root-location
/// certificate remain the caller's job.
pub fn generate_salem_candidate(t: u64, policy: Policy) -> GenerationRecord {
    let n = 2 * (t as usize) + 2;
    if policy == Policy::Killer {
        let report = bounds::killer_exponent_report(n as u64);
        let description = format!(
            "k1 = K, an integer given only through log K; k2..k{} = the {} smallest primes not dividing K",
            n,
            n - 1
        );
        return GenerationRecord {
            trace: -(t as i64),
            exponents: ExponentSpec::Killer { report, description },
            n,
            raw: None,
            reduced: None,
            predicted_degree: None,
            stripped_multiplicity: None,
        };
    }

    let ks = primes::first_primes(n);
    // (z²−1)(z−1) and z; the loop keeps deg S = deg Q + 2.
    let mut s = IntPolynomial::from_i64(&[1, -1, -1, 1]);
    let mut q = IntPolynomial::from_i64(&[0, 1]);
    for pair in ks.chunks(2) {
        let gg = &geometric(pair[0]) * &geometric(pair[1]);
        let cross = geometric(pair[0] + pair[1]);
        s = &(&gg * &s) - &(&cross * &q);
        q = &gg * &q;
    }

    let sum: u64 = ks.iter().sum();
    let predicted = (sum as i64 - (2 * t as i64 - 1)) as u64;
    assert_eq!(s.degree(), Some(predicted as usize));
    assert!(s.is_monic() && s.is_reciprocal());
    assert_eq!(s.trace(), Some(BigInt::from(-(t as i64))));
    GenerationRecord {
        trace: -(t as i64),
        exponents: ExponentSpec::Primes(ks),
        n,
        raw: Some(s.clone()),
        reduced: Some(s),
        predicted_degree: Some(predicted),
        stripped_multiplicity: None,
    }
}

/// Runs P ← (z^q−1)(z^r−1)·P − (z^{q+r}−1)·Q, Q ← (z^q−1)(z^r−1)·Q over
/// T+2 consecutive prime pairs starting from P = z²−z−1, Q = z, then strips
/// the (z−1)^m factor every iteration forces.
///
/// The reduced output is monic with nonzero constant term, trace −T, and
/// degree at most Σkᵢ; certification is the caller's job.
pub fn generate_pisot(t: u64) -> GenerationRecord {
    let n = 2 * (t as usize) + 4;
    let ks = primes::first_primes(n);
    let mut p = IntPolynomial::from_i64(&[-1, -1, 1]);
    let mut q = IntPolynomial::from_i64(&[0, 1]);
    for pair in ks.chunks(2) {
        let ff = &IntPolynomial::z_pow_minus_one(pair[0] as usize)
            * &IntPolynomial::z_pow_minus_one(pair[1] as usize);
        let cross = IntPolynomial::z_pow_minus_one((pair[0] + pair[1]) as usize);
        p = &(&ff * &p) - &(&cross * &q);
        q = &ff * &q;
    }

    let (reduced, multiplicity) = cyclo::strip_root_one(&p);
    assert!(multiplicity >= 1, "every iteration forces a root at 1");
    assert!(!reduced.coeff(0).is_zero());
    assert_eq!(reduced.trace(), Some(BigInt::from(-(t as i64))));
    let sum: u64 = ks.iter().sum();
    assert!(reduced.degree().unwrap() as u64 <= sum);
    GenerationRecord {
        trace: -(t as i64),
        exponents: ExponentSpec::Primes(ks),
        n,
        raw: Some(p),
        reduced: Some(reduced),
        predicted_degree: Some(sum),
        stripped_multiplicity: Some(multiplicity),
    }
}

/// Substitutes xᵢ = t^{kᵢ} into the hypersurface form
/// 2(t²−1)·Πᵢ(t^{kᵢ}−1) − t·Σⱼ(t^{kⱼ}+1)·Π_{i≠j}(t^{kᵢ}−1).
///
/// The exponents must be even in number, each ≥ 2, and pairwise coprime.
/// All coefficients of the result are even, and t = 1 is a root of
/// multiplicity below n; both facts are asserted.
pub fn h_substitute(ks: &[u64]) -> Result<IntPolynomial, ConstructError> {
    if ks.len() % 2 != 0 {
        return Err(ConstructError::OddN);
    }
    if ks.is_empty() || ks.iter().any(|&k| k < 2) {
        return Err(ConstructError::BadParam);
    }
    for i in 0..ks.len() {
        for j in i + 1..ks.len() {
            if ks[i].gcd(&ks[j]) != 1 {
                return Err(ConstructError::NotCoprime);
            }
        }
    }

    let factors: Vec<IntPolynomial> = ks
        .iter()
        .map(|&k| IntPolynomial::z_pow_minus_one(k as usize))
        .collect();
    let product = factors.iter().fold(IntPolynomial::one(), |acc, f| &acc * f);
    let mut sum = IntPolynomial::zero();
    for (j, &k) in ks.iter().enumerate() {
        let rest = product
            .exact_div(&factors[j])
            .expect("each factor divides the full product");
        sum = &sum + &(&IntPolynomial::z_pow_plus_one(k as usize) * &rest);
    }
    let h = &(&IntPolynomial::from_i64(&[-2, 0, 2]) * &product) - &sum.mul_z_pow(1);

    let two = BigInt::from(2);
    assert!(
        h.coeffs().iter().all(|c| c.is_multiple_of(&two)),
        "all coefficients must be even"
    );
    let mut nth = h.clone();
    for _ in 0..ks.len() {
        nth = nth.derivative();
    }
    assert!(
        !nth.eval_i64(1).is_zero(),
        "n-th derivative at 1 must be nonzero"
    );
    Ok(h)
}

/// Closed-form fixtures with known certification outcomes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// z⁴ − nz³ − (2n+1)z² − nz + 1 for n ≥ 1: Salem of trace n.
    Quartic(i64),
    /// z⁶ − z⁴ − 2z³ − z² + 1: a zero-trace Salem number.
    SexticZero,
    /// The degree-10 polynomial of the smallest known Salem number.
    Lehmer,
    /// z⁸ + z⁷ − z⁶ − 4z⁵ − 5z⁴ − 4z³ − z² + z + 1: the one Salem number of
    /// degree below 10 with negative trace.
    Degree8NegTrace,
}

/// Returns the named family member.
pub fn family(which: Family) -> Result<IntPolynomial, ConstructError> {
    match which {
        Family::Quartic(n) => {
            if n < 1 {
                return Err(ConstructError::BadParam);
            }
            let nb = BigInt::from(n);
            Ok(IntPolynomial::from_coeffs(alloc::vec![
                BigInt::one(),
                -nb.clone(),
                -(BigInt::from(2) * &nb + BigInt::one()),
                -nb,
                BigInt::one(),
            ]))
        }
        Family::SexticZero => Ok(IntPolynomial::from_i64(&[1, 0, -1, -2, -1, 0, 1])),
        Family::Lehmer => Ok(IntPolynomial::from_i64(&[
            1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1,
        ])),
        Family::Degree8NegTrace => Ok(IntPolynomial::from_i64(&[
            1, 1, -1, -4, -5, -4, -1, 1, 1,
        ])),
    }
}

#[cfg(test)]
mod tests {
    use core::str::FromStr;

    use super::*;

    fn poly(s: &str) -> IntPolynomial {
        IntPolynomial::from_str(s).unwrap()
    }

    #[test]
    fn salem_trace_zero_golden() {
        let rec = generate_salem_candidate(0, Policy::FirstPrimes);
        assert_eq!(rec.reduced().unwrap(), &poly("1 0 -2 -3 -2 0 1"));
        assert_eq!(rec.raw().unwrap(), rec.reduced().unwrap());
        assert_eq!(rec.trace, 0);
        assert_eq!(rec.n, 2);
        assert_eq!(rec.predicted_degree, Some(6));
        assert_eq!(rec.stripped_multiplicity, None);
        match &rec.exponents {
            ExponentSpec::Primes(ks) => assert_eq!(ks, &[2, 3]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn salem_trace_two_spot_checks() {
        let rec = generate_salem_candidate(2, Policy::FirstPrimes);
        let s = rec.reduced().unwrap();
        assert_eq!(s.degree(), Some(38));
        assert_eq!(s.trace().unwrap(), BigInt::from(-2));
        assert!(s.is_monic() && s.is_reciprocal());
        assert_eq!(s.coeff(19), BigInt::from(-2635));
        assert_eq!(s.coeff(20), BigInt::from(-2602));
        assert_eq!(s.coeff(35), BigInt::from(-19));
    }

    #[test]
    fn salem_degree_tracks_prime_sums() {
        for t in 0..6u64 {
            let rec = generate_salem_candidate(t, Policy::FirstPrimes);
            let ks = match &rec.exponents {
                ExponentSpec::Primes(ks) => ks.clone(),
                other => panic!("unexpected {other:?}"),
            };
            assert_eq!(ks.len(), 2 * t as usize + 2);
            let expected = ks.iter().sum::<u64>() as i64 - (2 * t as i64 - 1);
            assert_eq!(rec.reduced().unwrap().degree(), Some(expected as usize));
        }
    }

    #[test]
    fn salem_generation_is_deterministic() {
        let a = generate_salem_candidate(3, Policy::FirstPrimes);
        let b = generate_salem_candidate(3, Policy::FirstPrimes);
        assert_eq!(a.reduced().unwrap(), b.reduced().unwrap());
    }

    #[test]
    fn killer_policy_reports_without_expanding() {
        let rec = generate_salem_candidate(0, Policy::Killer);
        assert_eq!(rec.raw(), Err(ConstructError::NotMaterializable));
        assert_eq!(rec.reduced(), Err(ConstructError::NotMaterializable));
        assert_eq!(rec.predicted_degree, None);
        match &rec.exponents {
            ExponentSpec::Killer { report, description } => {
                assert_eq!(report.n, 2);
                assert!(description.contains("primes not dividing K"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn pisot_update_first_iteration_checkpoint() {
        // One hand-expanded update from (z²−z−1, z) with (q, r) = (2, 3).
        let ff = &poly("-1 0 1") * &poly("-1 0 0 1");
        let raw = &(&ff * &poly("-1 -1 1")) - &poly("-1 0 0 0 0 1").mul_z_pow(1);
        assert_eq!(raw, poly("-1 0 2 2 0 -2 -2 1"));
        let (stripped, m) = cyclo::strip_root_one(&raw);
        assert_eq!(m, 1);
        assert_eq!(stripped, poly("1 1 -1 -3 -3 -1 1"));
    }

    #[test]
    fn pisot_trace_zero_record() {
        let rec = generate_pisot(0);
        let p = rec.reduced().unwrap();
        assert!(p.degree().unwrap() <= 17);
        assert_eq!(p.trace().unwrap(), BigInt::from(0));
        assert!(!p.coeff(0).is_zero());
        assert!(rec.raw().unwrap().degree().unwrap() == 19);
        assert!(rec.stripped_multiplicity.unwrap() >= 1);
        assert_eq!(rec.predicted_degree, Some(17));
    }

    #[test]
    fn pisot_small_traces_stay_under_bound() {
        for t in 0..4u64 {
            let rec = generate_pisot(t);
            let p = rec.reduced().unwrap();
            assert_eq!(p.trace().unwrap(), BigInt::from(-(t as i64)));
            assert!(p.degree().unwrap() as u64 <= rec.predicted_degree.unwrap());
        }
    }

    #[test]
    fn h_golden_pair() {
        let h = h_substitute(&[2, 3]).unwrap();
        assert_eq!(h, poly("-2 2 4 2 -2 -4 -2 2"));
    }

    #[test]
    fn h_matches_scaled_salem_output() {
        let h = h_substitute(&[2, 3]).unwrap();
        let s = generate_salem_candidate(0, Policy::FirstPrimes);
        let rhs = (&poly("-1 1") * s.reduced().unwrap()).scale(&BigInt::from(2));
        assert_eq!(h, rhs);
    }

    #[test]
    fn h_rejects_bad_exponents() {
        assert_eq!(h_substitute(&[2, 3, 5]), Err(ConstructError::OddN));
        assert_eq!(h_substitute(&[2, 4]), Err(ConstructError::NotCoprime));
        assert_eq!(h_substitute(&[1, 2]), Err(ConstructError::BadParam));
        assert_eq!(h_substitute(&[]), Err(ConstructError::BadParam));
    }

    #[test]
    fn family_goldens() {
        assert_eq!(family(Family::Quartic(1)).unwrap(), poly("1 -1 -3 -1 1"));
        assert_eq!(family(Family::Quartic(3)).unwrap(), poly("1 -3 -7 -3 1"));
        assert_eq!(family(Family::Quartic(0)), Err(ConstructError::BadParam));
        assert_eq!(family(Family::Quartic(-2)), Err(ConstructError::BadParam));

        let sextic = family(Family::SexticZero).unwrap();
        assert_eq!(sextic.trace().unwrap(), BigInt::from(0));
        let lehmer = family(Family::Lehmer).unwrap();
        assert_eq!(lehmer.degree(), Some(10));
        assert_eq!(lehmer.trace().unwrap(), BigInt::from(-1));
        let oct = family(Family::Degree8NegTrace).unwrap();
        assert_eq!(oct.trace().unwrap(), BigInt::from(-1));
        for p in [&sextic, &lehmer, &oct] {
            assert!(p.is_monic() && p.is_reciprocal());
        }
    }
}
