//! Randomized property suites shared by the `properties` and `acceptance`
//! test targets. Every suite runs 500 cases from a fixed seed.

use std::collections::BTreeSet;

use gtg_core::poly::{second_coefficient, trace_polynomial, transfer_332_to_232, IntPoly};
use gtg_core::sc::{certify, check_certificate, is_piece, segment_lengths, Relator, ScCase};
use gtg_core::word::{
    equivalence_orbit, pairlist_of_word, push_332_to_232, rotate_to_normal, Factor, FactorSpec, Syllable, Word,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{RngSeed, TestRunner};

#[allow(dead_code)]
pub const CASES: u32 = 500;

fn config(seed: u64) -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn check<S: Strategy>(
    seed: u64,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    TestRunner::new(config(seed)).run(&strategy, test).map_err(|e| e.to_string())
}

/// `x^{a1} y^{b1} ... x^{ak} y^{bk}` with k in the given range.
fn word_332(k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Word> {
    k.prop_flat_map(|k| prop::collection::vec(1u8..=2, 2 * k))
        .prop_map(|e| Word::from_exponents(FactorSpec::ThreeThree, &e).unwrap())
}

/// `u v^{a1} ... u v^{ak}` with k in the given range.
fn word_232(k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Word> {
    k.prop_flat_map(|k| prop::collection::vec(1u8..=2, k)).prop_map(|a| Word::from_v_exponents(&a).unwrap())
}

fn any_word(k: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Word> {
    prop_oneof![word_332(k.clone()), word_232(k)]
}

/// `p(1 − λ)`.
fn reflect(p: &IntPoly) -> IntPoly {
    p.compose(&IntPoly::from_i64(&[1, -1]))
}

/// Every tail that follows `v` in some rotation of U or U⁻¹, U = W².
fn naive_tails(v: &[Syllable], w: &Word) -> BTreeSet<Vec<Syllable>> {
    let u = w.power(2);
    let mut out = BTreeSet::new();
    for base in [u.clone(), u.inverse()] {
        let s = base.syllables();
        let n = s.len();
        for r in 0..n {
            let rot: Vec<Syllable> = (0..n).map(|j| s[(r + j) % n]).collect();
            if v.len() < n && rot.starts_with(v) {
                out.insert(rot[v.len()..].to_vec());
            }
        }
    }
    out
}

pub fn trace_is_constant_on_orbits_232() -> Result<(), String> {
    check(0x6774_0001, word_232(1..=10), |w| {
        let t = trace_polynomial(&w);
        for o in equivalence_orbit(&w) {
            prop_assert_eq!(trace_polynomial(&o), t.clone(), "orbit member {}", o);
        }
        Ok(())
    })
}

pub fn trace_on_orbits_332_is_tau_or_its_reflection() -> Result<(), String> {
    check(0x6774_0002, word_332(1..=8), |w| {
        let t = trace_polynomial(&w);
        let k = w.pair_length();
        let r = if k % 2 == 0 { reflect(&t) } else { -&reflect(&t) };
        for o in equivalence_orbit(&w) {
            let to = trace_polynomial(&o);
            prop_assert!(to == t || to == r, "orbit member {} has {}", o, to);
        }
        Ok(())
    })
}

pub fn push_commutes_with_transfer() -> Result<(), String> {
    check(0x6774_0003, word_332(1..=12), |w| {
        let z = push_332_to_232(&w).unwrap();
        prop_assert_eq!(z.pair_length(), 2 * w.pair_length());
        prop_assert_eq!(trace_polynomial(&z), transfer_332_to_232(&trace_polynomial(&w), w.pair_length()));
        Ok(())
    })
}

pub fn trace_is_monic_of_degree_k_with_parity() -> Result<(), String> {
    check(0x6774_0004, any_word(1..=16), |w| {
        let t = trace_polynomial(&w);
        let k = w.pair_length();
        prop_assert!(t.is_monic());
        prop_assert_eq!(t.degree(), Some(k));
        if w.spec() == FactorSpec::TwoThree {
            prop_assert!(if k % 2 == 0 { t.is_even() } else { t.is_odd() }, "{}", t);
        }
        Ok(())
    })
}

pub fn trace_332_is_bounded_on_the_interval() -> Result<(), String> {
    check(0x6774_0005, word_332(1..=12), |w| {
        let t = trace_polynomial(&w);
        for i in 0..50 {
            let lambda = -1.0 + 3.0 * i as f64 / 49.0;
            let v = t.eval_f64(lambda);
            prop_assert!(v.abs() <= 2.0 + 1e-9, "tau({}) = {} for {}", lambda, v, w);
        }
        Ok(())
    })
}

pub fn second_coefficient_matches() -> Result<(), String> {
    check(0x6774_0006, word_232(2..=16), |w| {
        let k = w.pair_length();
        let list = pairlist_of_word(&rotate_to_normal(&w).unwrap()).unwrap();
        let t = trace_polynomial(&w);
        prop_assert_eq!(t.coeff(k - 2), second_coefficient(&list, k));
        prop_assert_eq!(list.total() as usize, k);
        // the same value from the definition: −(k − m), m the number of (β,γ) pairs
        let g = w.second_exponents();
        let m = (0..k).filter(|&i| g[i] == 1 && g[(i + 1) % k] == 2).count();
        prop_assert_eq!(t.coeff(k - 2), BigInt::from(m as i64 - k as i64));
        Ok(())
    })
}

/// An alternating syllable sequence, most of which occur in no relator.
fn probe(spec: FactorSpec, first: bool, exps: &[u8]) -> Vec<Syllable> {
    let mut factor = if first { Factor::First } else { Factor::Second };
    exps.iter()
        .map(|&e| {
            let s = Syllable::new(factor, e.min(spec.order(factor) - 1));
            factor = factor.other();
            s
        })
        .collect()
}

pub fn piece_detector_matches_naive_oracle() -> Result<(), String> {
    check(0x6774_0007, (any_word(1..=6), any::<bool>(), prop::collection::vec(1u8..=2, 1..12)), |(w, first, exps)| {
        let rel = Relator::new(&w).unwrap();
        let u = w.power(2);
        let big_k = u.len();
        for start in 0..w.len() {
            for len in 1..big_k {
                let v = u.cyclic_subword(start, len);
                let tails = naive_tails(v.syllables(), &w);
                prop_assert!(!tails.is_empty());
                prop_assert_eq!(is_piece(&v, &rel).unwrap(), tails.len() >= 2, "{} in {}", v, w);
            }
        }
        let mut p = probe(w.spec(), first, &exps);
        p.truncate(big_k - 1);
        let tails = naive_tails(&p, &w);
        let pw = Word::from_syllables(w.spec(), p).unwrap();
        match is_piece(&pw, &rel) {
            Err(_) => prop_assert!(tails.is_empty(), "{} reported absent from {}", pw, w),
            Ok(piece) => prop_assert_eq!(piece, tails.len() >= 2, "{} in {}", pw, w),
        }
        Ok(())
    })
}

fn naive_certificate_checks(w: &Word, case: ScCase) -> Result<(), TestCaseError> {
    let Some(c) = certify(w, case).unwrap() else { return Ok(()) };
    check_certificate(&c).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let ell = case.ell();
    let n = w.len();
    prop_assert_eq!(segment_lengths(n, c.cuts).iter().sum::<usize>(), n);
    let joined: Vec<Syllable> = c.segments.iter().flat_map(|s| s.syllables().to_vec()).collect();
    let rotated = w.cyclic_subword(c.cuts[0], n);
    prop_assert_eq!(&joined[..], rotated.syllables());
    for s in &c.segments {
        prop_assert!(s.len() >= ell);
        prop_assert_eq!(naive_tails(s.syllables(), w).len(), 1, "segment {} is a piece", s);
    }
    prop_assert_eq!(c.n, 20 * 2 * n as u64 * ell as u64 + 1);
    Ok(())
}

pub fn certificates_revalidate_332() -> Result<(), String> {
    check(0x6774_0008, word_332(6..=12), |w| {
        naive_certificate_checks(&w, ScCase::C33)?;
        Ok(())
    })
}

pub fn certificates_revalidate_232() -> Result<(), String> {
    check(0x6774_0009, word_232(12..=18), |w| {
        naive_certificate_checks(&w, ScCase::C23)?;
        Ok(())
    })
}

/// Every suite with its name.
#[allow(dead_code)]
pub fn all() -> Vec<(&'static str, fn() -> Result<(), String>)> {
    vec![
        ("trace_is_constant_on_orbits_232", trace_is_constant_on_orbits_232),
        ("trace_on_orbits_332_is_tau_or_its_reflection", trace_on_orbits_332_is_tau_or_its_reflection),
        ("push_commutes_with_transfer", push_commutes_with_transfer),
        ("trace_is_monic_of_degree_k_with_parity", trace_is_monic_of_degree_k_with_parity),
        ("trace_332_is_bounded_on_the_interval", trace_332_is_bounded_on_the_interval),
        ("second_coefficient_matches", second_coefficient_matches),
        ("piece_detector_matches_naive_oracle", piece_detector_matches_naive_oracle),
        ("certificates_revalidate_332", certificates_revalidate_332),
        ("certificates_revalidate_232", certificates_revalidate_232),
    ]
}
