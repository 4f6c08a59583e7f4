//! On a corpus of generated candidates, named families, and deliberately
//! contaminated products, the gcd sieve and exhaustive trial division must
//! tell the same story.
//!
//! The gcd witness can in principle trip on a cyclotomic-free polynomial
//! whose root set is symmetric under negation; the corpus here stays clear
//! of that corner, so passed ⟺ no stripped factors is asserted exactly.

use salem_core::construct::{family, generate_pisot, generate_salem_candidate, Family, Policy};
use salem_core::cyclo::{cyclotomic_poly, sieve_gcd_test, strip_cyclotomic};
use salem_core::poly::IntPolynomial;

fn corpus() -> Vec<IntPolynomial> {
    let mut polys = Vec::new();
    for t in 0..=10u64 {
        polys.push(
            generate_salem_candidate(t, Policy::FirstPrimes)
                .reduced()
                .unwrap()
                .clone(),
        );
    }
    for t in 0..=4u64 {
        let rec = generate_pisot(t);
        polys.push(rec.raw().unwrap().clone());
        polys.push(rec.reduced().unwrap().clone());
    }
    for n in 1..=10i64 {
        polys.push(family(Family::Quartic(n)).unwrap());
    }
    for f in [Family::SexticZero, Family::Lehmer, Family::Degree8NegTrace] {
        polys.push(family(f).unwrap());
    }
    // Contaminate a few clean members with known cyclotomic factors.
    let lehmer = family(Family::Lehmer).unwrap();
    for d in [1u64, 2, 3, 4, 5, 6, 7, 12] {
        polys.push(&lehmer * &cyclotomic_poly(d));
    }
    polys.push(&(&lehmer * &cyclotomic_poly(3)) * &cyclotomic_poly(3));
    polys.push(&family(Family::Quartic(2)).unwrap() * &cyclotomic_poly(8));
    polys
}

#[test]
fn sieve_and_strip_agree_on_corpus() {
    for p in corpus() {
        let sieve = sieve_gcd_test(&p);
        let strip = strip_cyclotomic(&p);
        assert_eq!(
            sieve.passed,
            strip.sieve.stripped_factors.is_empty(),
            "verdicts disagree on {p:?}"
        );
        assert_eq!(sieve.passed, strip.quotient == p);

        // Reassemble: quotient · Π Φ_d^mult must equal the input.
        let mut rebuilt = strip.quotient.clone();
        for &(d, mult) in &strip.sieve.stripped_factors {
            let phi = cyclotomic_poly(d);
            for _ in 0..mult {
                rebuilt = &rebuilt * &phi;
            }
        }
        assert_eq!(rebuilt, p, "stripped factors fail to reassemble");

        // The quotient itself is clean.
        assert!(strip_cyclotomic(&strip.quotient)
            .sieve
            .stripped_factors
            .is_empty());
    }
}

#[test]
fn generated_salem_candidates_pass_the_sieve() {
    for t in 0..=10u64 {
        let rec = generate_salem_candidate(t, Policy::FirstPrimes);
        assert!(
            sieve_gcd_test(rec.reduced().unwrap()).passed,
            "trace −{t} candidate carries a cyclotomic factor"
        );
    }
}
