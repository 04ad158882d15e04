//! Statistical soundness check of the filters at lengths beyond the
//! oracle: random lists of a form's shape are tested exactly, and every
//! exact match must survive the filters.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::crude::crude_key;
use super::kernel::EVAL_POINT;
use super::shape::ShapeRule;
use crate::perm::{passes_filter_fast, requirements_of};
use crate::poly::{eval_trace_int, expand_target, trace_polynomial, TargetForm};
use crate::word::{word_of_pairlist, FactorSpec, PairList};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub form: TargetForm,
    pub seed: u64,
    pub samples: u64,
    pub exact_matches: u64,
    /// Exact matches some filter would have rejected; must be zero.
    pub rejected_matches: u64,
    /// Samples the filters pass (a superset of the exact matches).
    pub filter_passes: u64,
}

/// Uniform random composition of `n` into `parts` positive parts.
fn random_composition(rng: &mut ChaCha8Rng, n: u32, parts: usize) -> Vec<u32> {
    if parts == 1 {
        return vec![n];
    }
    let mut cuts: Vec<u32> = sample(rng, n as usize - 1, parts - 1).into_iter().map(|c| c as u32 + 1).collect();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        out.push(c - prev);
        prev = c;
    }
    out
}

fn random_list(rng: &mut ChaCha8Rng, rule: &ShapeRule) -> PairList {
    let (len, ones) = (rule.list_length, rule.ones_count);
    let bigs = random_composition(rng, rule.total() - len as u32, len - ones);
    let mut is_one = vec![false; len];
    for i in sample(rng, len, ones) {
        is_one[i] = true;
    }
    let mut it = bigs.into_iter();
    let runs = is_one.into_iter().map(|o| if o { 1 } else { it.next().expect("enough") + 1 }).collect();
    PairList::new(runs).expect("valid list")
}

/// Samples lists of the form's shape (Z3*Z3 forms use the transferred
/// Z2*Z3 form) with all filters disabled.
pub fn audit_filters(form: TargetForm, samples: u64, seed: u64) -> AuditReport {
    let form232 = if form.case == FactorSpec::ThreeThree { form.transferred() } else { form };
    let mut report = AuditReport { form, seed, samples: 0, exact_matches: 0, rejected_matches: 0, filter_passes: 0 };
    let Some(rule) = ShapeRule::of(form232) else {
        return report;
    };
    let target = expand_target(&form232);
    let at_point = target.eval(&EVAL_POINT.into());
    let reqs = requirements_of(&form232);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        report.samples += 1;
        let list = random_list(&mut rng, &rule);
        let key = crude_key(&list);
        let w = word_of_pairlist(&key, FactorSpec::TwoThree);
        let passes = passes_filter_fast(&w, &reqs) && eval_trace_int(&w, EVAL_POINT) == at_point;
        if passes {
            report.filter_passes += 1;
        }
        if trace_polynomial(&w) == target {
            report.exact_matches += 1;
            if !passes {
                report.rejected_matches += 1;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let c = random_composition(&mut rng, 20, 7);
            assert_eq!(c.len(), 7);
            assert_eq!(c.iter().sum::<u32>(), 20);
            assert!(c.iter().all(|&v| v >= 1));
        }
    }

    #[test]
    fn small_form_audit_finds_matches_and_rejects_none() {
        let form = TargetForm::new(FactorSpec::TwoThree, 0, 0, 1).unwrap();
        let r = audit_filters(form, 50, 7);
        assert_eq!(r.samples, 50);
        assert!(r.exact_matches > 0);
        assert_eq!(r.rejected_matches, 0);
    }
}
