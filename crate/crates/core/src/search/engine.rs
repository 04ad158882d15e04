//! The search pipeline: shape rule, crude key, permutation filter,
//! integer evaluation, exact confirmation, canonical deduplication.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;
use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checkpoint::Checkpoint;
use super::compositions::{binomial, compositions, pairlist_count};
use super::kernel::{run_unit, KernelSetup, UnitCounts};
use super::shape::ShapeRule;
use crate::error::Result;
use crate::perm::{passes_filter_fast, requirements_of};
use crate::poly::{eval_trace_int, expand_target, target_forms, trace_polynomial, IntPoly, TargetForm};
use crate::word::{
    canonicalize, equivalence_orbit, lift_232_to_332, pairlist_of_word, rotate_to_normal, word_of_pairlist,
    CanonicalKey, FactorSpec, PairList, PureRun, Word,
};

/// Number of candidates surviving each stage. Stages are applied in order,
/// so the counts never increase.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub enumerated: u64,
    pub after_crude: u64,
    pub after_perm: u64,
    pub after_eval: u64,
    pub exact: u64,
}

impl Stats {
    pub fn is_monotone(&self) -> bool {
        self.enumerated >= self.after_crude
            && self.after_crude >= self.after_perm
            && self.after_perm >= self.after_eval
            && self.after_eval >= self.exact
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub key: CanonicalKey,
    /// A representative whose trace polynomial is exactly the form.
    pub word: Word,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairlist: Option<PairList>,
    pub tau: IntPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub form: TargetForm,
    pub stats: Stats,
    pub classes: Vec<ClassRecord>,
}

#[derive(Clone, Debug)]
pub struct Progress {
    pub form: TargetForm,
    pub done: u64,
    pub total: u64,
}

pub type ProgressFn = Arc<dyn Fn(&Progress) + Send + Sync>;

#[derive(Clone, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    pub checkpoint: Option<PathBuf>,
    pub resume: bool,
    pub progress: Option<ProgressFn>,
    /// Candidates between progress reports; 0 means 10^7.
    pub progress_every: u64,
}

/// Work units per checkpoint write.
const CHUNK: usize = 64;

struct Runner<'a> {
    opts: &'a SearchOptions,
    resume: Option<Checkpoint>,
    pool: rayon::ThreadPool,
}

impl<'a> Runner<'a> {
    fn new(opts: &'a SearchOptions) -> Result<Self> {
        let resume = match (&opts.checkpoint, opts.resume) {
            (Some(path), true) => Checkpoint::load(path)?,
            _ => None,
        };
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(j) = opts.jobs {
            builder = builder.num_threads(j.max(1));
        }
        let pool = builder.build().map_err(|e| crate::Error::Checkpoint(format!("thread pool: {e}")))?;
        Ok(Runner { opts, resume, pool })
    }

    fn run(&self, form: TargetForm) -> Result<SearchResult> {
        match form.case {
            FactorSpec::TwoThree => self.run_232(form),
            FactorSpec::ThreeThree => Ok(lift_result(form, &self.run_232(form.transferred())?)),
        }
    }

    fn run_232(&self, form: TargetForm) -> Result<SearchResult> {
        let k = form.degree();
        let screen = Screen::new(form);
        let mut stats = Stats::default();
        let mut found: Vec<(Word, Option<PairList>)> = Vec::new();

        let mut extra: Vec<Word> = Vec::new();
        if let Some(rule) = ShapeRule::of(form) {
            let (counts, lists) = self.run_kernel(form, rule)?;
            stats.enumerated = pairlist_count(k as u32, rule.list_length, rule.ones_count) as u64;
            stats.after_crude = counts.crude;
            stats.after_perm = counts.perm;
            for runs in lists {
                let list = PairList::new(runs).expect("kernel yields valid lists");
                let w = word_of_pairlist(&list, FactorSpec::TwoThree);
                if screen.eval_ok(&w) {
                    stats.after_eval += 1;
                    if screen.exact_ok(&w) {
                        stats.exact += 1;
                        found.push((w, Some(list)));
                    }
                }
            }
            // pure powers have no list of even length; test them directly
            for kind in [PureRun::First, PureRun::Second] {
                let list = PairList::pure(k as u32, kind).expect("k > 0");
                extra.push(word_of_pairlist(&list, FactorSpec::TwoThree));
            }
        } else {
            // small forms: every word u v^{e1} ... u v^{ek}
            for mask in 0u32..(1 << k) {
                let exps: Vec<u8> = (0..k).map(|i| 1 + ((mask >> i) & 1) as u8).collect();
                extra.push(Word::from_v_exponents(&exps).expect("valid exponents"));
            }
        }
        for w in extra {
            stats.enumerated += 1;
            stats.after_crude += 1;
            if !screen.perm_ok(&w) {
                continue;
            }
            stats.after_perm += 1;
            if !screen.eval_ok(&w) {
                continue;
            }
            stats.after_eval += 1;
            if screen.exact_ok(&w) {
                stats.exact += 1;
                let normal = rotate_to_normal(&w).unwrap_or(w);
                let list = pairlist_of_word(&normal).ok();
                found.push((normal, list));
            }
        }
        let tau = expand_target(&form);
        let mut classes: BTreeMap<CanonicalKey, (Word, Option<PairList>)> = BTreeMap::new();
        // representative: least pair list, preferring words that have one
        let rank = |c: &(Word, Option<PairList>)| (c.1.is_none(), c.1.clone(), c.0.clone());
        for cand in found {
            let key = canonicalize(&cand.0);
            match classes.get(&key) {
                Some(cur) if rank(cur) <= rank(&cand) => {}
                _ => {
                    classes.insert(key, cand);
                }
            }
        }
        let classes = classes
            .into_iter()
            .map(|(key, (word, pairlist))| ClassRecord { key, word, pairlist, tau: tau.clone() })
            .collect();
        Ok(SearchResult { form, stats, classes })
    }

    fn run_kernel(&self, form: TargetForm, rule: ShapeRule) -> Result<(UnitCounts, Vec<Vec<u32>>)> {
        let (len, ones) = (rule.list_length, rule.ones_count);
        let setup = KernelSetup::new(form, len, ones);
        let units: Vec<Vec<u32>> = compositions(rule.total() - len as u32, len - ones)
            .into_iter()
            .map(|c| c.into_iter().map(|v| v + 1).collect())
            .collect();
        let per_unit = binomial(len as u64, ones as u64) as u64;
        let total = per_unit * units.len() as u64;
        let key = (form.a, form.b, form.c);

        let mut cp = Checkpoint { form: key, ..Default::default() };
        if let Some(r) = self.resume.as_ref().filter(|r| r.form == key) {
            cp = r.clone();
            cp.idx = cp.idx.min(units.len());
        }
        let every = if self.opts.progress_every == 0 { 10_000_000 } else { self.opts.progress_every };
        let mut start = cp.idx;
        while start < units.len() {
            let end = (start + CHUNK).min(units.len());
            let outs: Vec<_> =
                self.pool.install(|| units[start..end].par_iter().map(|b| run_unit(&setup, b)).collect());
            for o in outs {
                cp.add_counts(&o.counts);
                cp.lists.extend(o.survivors);
            }
            cp.idx = end;
            if let Some(path) = &self.opts.checkpoint {
                cp.save(path)?;
            }
            if let Some(cb) = &self.opts.progress {
                let (before, after) = (start as u64 * per_unit, end as u64 * per_unit);
                if before / every != after / every || end == units.len() {
                    cb(&Progress { form, done: after, total });
                }
            }
            start = end;
        }
        if let Some(path) = &self.opts.checkpoint {
            cp.save(path)?;
        }
        let mut lists = cp.lists;
        lists.sort();
        lists.dedup();
        let counts = UnitCounts { crude: cp.counts[0], perm: cp.counts[1], modp: cp.counts[2] };
        Ok((counts, lists))
    }
}

/// Per-form filters applied to explicit words.
struct Screen {
    form: TargetForm,
    reqs: BTreeSet<crate::perm::RepRequirement>,
    target: IntPoly,
    values: Vec<BigInt>,
}

impl Screen {
    fn new(form: TargetForm) -> Self {
        let target = expand_target(&form);
        let values = (0..=form.degree() as i64).map(|i| target.eval(&BigInt::from(2 + i))).collect();
        Screen { form, reqs: requirements_of(&form), target, values }
    }

    fn perm_ok(&self, w: &Word) -> bool {
        passes_filter_fast(w, &self.reqs)
    }

    /// Agreement at λ0 = 2, 3, ..., 2 + k; stops at the first mismatch.
    fn eval_ok(&self, w: &Word) -> bool {
        self.values.iter().enumerate().all(|(i, v)| eval_trace_int(w, 2 + i as i64) == *v)
    }

    fn exact_ok(&self, w: &Word) -> bool {
        w.pair_length() == self.form.degree() && trace_polynomial(w) == self.target
    }
}

/// Classes of a Z3*Z3 form obtained by lifting the classes of the
/// corresponding Z2*Z3 form with both parities.
pub fn lift_result(form: TargetForm, res232: &SearchResult) -> SearchResult {
    assert_eq!(form.case, FactorSpec::ThreeThree);
    assert_eq!(res232.form, form.transferred());
    let tau = expand_target(&form);
    let mut classes: BTreeMap<CanonicalKey, ClassRecord> = BTreeMap::new();
    for class in &res232.classes {
        for parity in 0..2 {
            let w = lift_232_to_332(&class.word, parity).expect("Z2*Z3 target words have an even number of u's");
            let key = canonicalize(&w);
            if classes.contains_key(&key) {
                continue;
            }
            let rep = equivalence_orbit(&w)
                .into_iter()
                .find(|m| trace_polynomial(m) == tau)
                .expect("the lift itself has the transferred trace polynomial");
            let pairlist = rotate_to_normal(&rep).ok().and_then(|n| pairlist_of_word(&n).ok());
            classes.insert(key.clone(), ClassRecord { key, word: rep, pairlist, tau: tau.clone() });
        }
    }
    SearchResult { form, stats: res232.stats, classes: classes.into_values().collect() }
}

/// Forms searched by [`run_all`]: every form for Z2*Z3; for Z3*Z3 those with
/// a ≥ b, since the automorphism y ↦ y⁻¹ exchanges a and b.
pub fn searched_forms(case: FactorSpec, max_c: Option<u8>) -> Vec<TargetForm> {
    target_forms(case)
        .into_iter()
        .filter(|f| case == FactorSpec::TwoThree || f.a >= f.b)
        .filter(|f| max_c.is_none_or(|m| f.c <= m))
        .collect()
}

pub fn run_case(form: TargetForm, opts: &SearchOptions) -> Result<SearchResult> {
    Runner::new(opts)?.run(form)
}

pub fn run_forms(forms: &[TargetForm], opts: &SearchOptions) -> Result<Vec<SearchResult>> {
    let runner = Runner::new(opts)?;
    forms.iter().map(|&f| runner.run(f)).collect()
}

/// Runs every target form of the case, in (a,b,c) order.
pub fn run_all(case: FactorSpec, opts: &SearchOptions) -> Result<Vec<SearchResult>> {
    run_forms(&searched_forms(case, None), opts)
}

/// Derives the Z3*Z3 results from a complete set of Z2*Z3 results.
pub fn lift_all(results232: &[SearchResult]) -> Vec<SearchResult> {
    searched_forms(FactorSpec::ThreeThree, None)
        .into_iter()
        .filter_map(|f| results232.iter().find(|r| r.form == f.transferred()).map(|r| lift_result(f, r)))
        .collect()
}

/// Total number of classes over a set of results.
pub fn class_count(results: &[SearchResult]) -> usize {
    results.iter().map(|r| r.classes.len()).sum()
}
