//! Independent reference: every exponent sequence up to a length, no
//! encoding and no filters.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::poly::matrix::{Coeff, PolyMat};
use crate::poly::{expand_target, generator, match_target, target_forms, trace_polynomial, IntPoly, TargetForm};
use crate::word::{canonicalize, CanonicalKey, Factor, FactorSpec, Syllable, Word};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleClass {
    pub key: CanonicalKey,
    /// For Z3*Z3 the form is normalized to a ≥ b, matching the search.
    pub form: TargetForm,
    pub tau: IntPoly,
}

fn normalize(f: TargetForm) -> TargetForm {
    if f.case == FactorSpec::ThreeThree && f.a < f.b {
        TargetForm { a: f.b, b: f.a, ..f }
    } else {
        f
    }
}

struct Walk {
    spec: FactorSpec,
    cap: usize,
    targets: HashMap<Vec<i64>, TargetForm>,
    exps: Vec<u8>,
    mats: Vec<Option<PolyMat<i64>>>,
    found: BTreeMap<CanonicalKey, TargetForm>,
}

impl Walk {
    fn rec(&mut self, depth: usize, total: usize) {
        if depth == total {
            self.leaf();
            return;
        }
        let factor = if depth % 2 == 0 { Factor::First } else { Factor::Second };
        for e in 1..self.spec.order(factor) {
            let g = generator(self.spec, Syllable::new(factor, e));
            self.exps[depth] = e;
            let (head, tail) = self.mats.split_at_mut(depth + 1);
            let next = &mut tail[0];
            match (&head[depth], next.as_mut()) {
                (Some(cur), Some(out)) => {
                    if cur.mul_into(g, out).is_none() {
                        *next = None;
                    }
                }
                _ => *next = None,
            }
            self.rec(depth + 1, total);
            if self.mats[depth + 1].is_none() {
                self.mats[depth + 1] = Some(PolyMat::identity(self.cap));
            }
        }
    }

    fn leaf(&mut self) {
        let n = self.exps.len();
        let form = match self.mats[n].as_ref().and_then(|m| m.trace()) {
            Some((re, om)) => {
                assert!(om.iter().all(Coeff::is_zero), "nonzero ω-part");
                let mut re = re;
                while re.last() == Some(&0) {
                    re.pop();
                }
                self.targets.get(&re).copied()
            }
            None => {
                let w = Word::from_exponents(self.spec, &self.exps).expect("valid exponents");
                match_target(&trace_polynomial(&w), self.spec)
            }
        };
        if let Some(f) = form {
            let w = Word::from_exponents(self.spec, &self.exps).expect("valid exponents");
            self.found.entry(canonicalize(&w)).or_insert(normalize(f));
        }
    }
}

/// All classes with pair length at most `max_k` whose trace polynomial is a
/// target form, sorted by canonical key.
pub fn brute_force_oracle(case: FactorSpec, max_k: usize) -> Vec<OracleClass> {
    let mut targets = HashMap::new();
    for f in target_forms(case) {
        if f.degree() <= max_k {
            let coeffs = expand_target(&f).to_i64s().expect("small target coefficients");
            targets.insert(coeffs, f);
        }
    }
    let cap = max_k + 1;
    let mut walk = Walk { spec: case, cap, targets, exps: Vec::new(), mats: Vec::new(), found: BTreeMap::new() };
    for k in 1..=max_k {
        walk.exps = vec![0; 2 * k];
        walk.mats = (0..=2 * k).map(|_| Some(PolyMat::identity(cap))).collect();
        walk.rec(0, 2 * k);
    }
    walk.found
        .into_iter()
        .map(|(key, form)| OracleClass { key, form, tau: expand_target(&form) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_for_zero_length() {
        assert!(brute_force_oracle(FactorSpec::TwoThree, 0).is_empty());
    }

    #[test]
    fn small_z3z3_classes() {
        // independent expectation through exact trace polynomials
        let mut expected = std::collections::BTreeSet::new();
        for len in [2usize, 4] {
            for bits in 0..1u32 << len {
                let exps: Vec<u8> = (0..len).map(|i| 1 + (bits >> i & 1) as u8).collect();
                let w = Word::from_exponents(FactorSpec::ThreeThree, &exps).unwrap();
                if match_target(&trace_polynomial(&w), FactorSpec::ThreeThree).is_some() {
                    expected.insert(canonicalize(&w).to_string());
                }
            }
        }
        let found = brute_force_oracle(FactorSpec::ThreeThree, 2);
        let words: std::collections::BTreeSet<String> = found.iter().map(|c| c.key.to_string()).collect();
        assert_eq!(words, expected);
        assert!(words.contains("xy") && words.contains("xyxy2") && words.contains("xyx2y2"));
    }
}
