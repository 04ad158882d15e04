use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Factor, FactorSpec, Syllable, Word};
use crate::error::{Error, Result};

/// Which pure power a degenerate pair list stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PureRun {
    /// `(xy)^k`
    First,
    /// `(xy^2)^k`
    Second,
}

/// Run-length form `[b1, g1, ..., bm, gm]` of `(xy)^b1 (xy^2)^g1 ... (xy)^bm (xy^2)^gm`.
///
/// Pure powers `(xy)^k` and `(xy^2)^k` have no such list of even length and
/// are carried as `runs = [k]` with `pure` set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PairList {
    runs: Vec<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pure: Option<PureRun>,
}

impl PairList {
    pub fn new(runs: Vec<u32>) -> Result<Self> {
        if runs.is_empty() || runs.len() % 2 != 0 || runs.contains(&0) {
            return Err(Error::BadPairList);
        }
        Ok(PairList { runs, pure: None })
    }

    pub fn pure(k: u32, kind: PureRun) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadPairList);
        }
        Ok(PairList { runs: vec![k], pure: Some(kind) })
    }

    pub fn runs(&self) -> &[u32] {
        &self.runs
    }

    pub fn pure_kind(&self) -> Option<PureRun> {
        self.pure
    }

    pub fn is_degenerate(&self) -> bool {
        self.pure.is_some()
    }

    /// Number of (β,γ) pairs, m; zero for pure powers.
    pub fn pairs(&self) -> usize {
        if self.pure.is_some() {
            0
        } else {
            self.runs.len() / 2
        }
    }

    /// The length parameter k: sum of runs.
    pub fn total(&self) -> u32 {
        self.runs.iter().sum()
    }
}

impl fmt::Display for PairList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pure {
            Some(PureRun::First) => write!(f, "[{} | pure-uv]", self.runs[0]),
            Some(PureRun::Second) => write!(f, "[{} | pure-uv2]", self.runs[0]),
            None => {
                let parts: Vec<String> = self.runs.iter().map(|r| r.to_string()).collect();
                write!(f, "[{}]", parts.join(", "))
            }
        }
    }
}

fn second_exps_if_pairable(w: &Word) -> Result<Vec<u8>> {
    if !w.starts_with_first() || !w.is_cyclically_reduced() || w.len() % 2 != 0 {
        return Err(Error::NotRotationNormal);
    }
    let syl = w.syllables();
    if syl.iter().step_by(2).any(|s| s.exp != 1) {
        return Err(Error::NoPairList);
    }
    Ok(w.second_exponents())
}

/// Rotates by whole pairs so the word starts with a (xy)-run and ends with a
/// (xy^2)-run. Pure powers are returned unchanged.
pub fn rotate_to_normal(w: &Word) -> Result<Word> {
    let w = w.normalize_start();
    let g = second_exps_if_pairable(&w)?;
    let k = g.len();
    match (0..k).find(|&i| g[i] == 1 && g[(i + k - 1) % k] == 2) {
        Some(i) => Ok(w.rotate(2 * i)),
        None => Ok(w),
    }
}

pub fn pairlist_of_word(w: &Word) -> Result<PairList> {
    let g = second_exps_if_pairable(w)?;
    let k = g.len() as u32;
    if g.iter().all(|&e| e == 1) {
        return PairList::pure(k, PureRun::First);
    }
    if g.iter().all(|&e| e == 2) {
        return PairList::pure(k, PureRun::Second);
    }
    if g[0] != 1 || g[g.len() - 1] != 2 {
        return Err(Error::NotRotationNormal);
    }
    let mut runs = Vec::new();
    let mut cur = g[0];
    let mut len = 0u32;
    for &e in &g {
        if e == cur {
            len += 1;
        } else {
            runs.push(len);
            cur = e;
            len = 1;
        }
    }
    runs.push(len);
    PairList::new(runs)
}

pub fn word_of_pairlist(list: &PairList, spec: FactorSpec) -> Word {
    let mut syl = Vec::with_capacity(2 * list.total() as usize);
    let mut push = |exp: u8, times: u32| {
        for _ in 0..times {
            syl.push(Syllable::new(Factor::First, 1));
            syl.push(Syllable::new(Factor::Second, exp));
        }
    };
    match list.pure {
        Some(PureRun::First) => push(1, list.runs[0]),
        Some(PureRun::Second) => push(2, list.runs[0]),
        None => {
            for (i, &r) in list.runs.iter().enumerate() {
                push(if i % 2 == 0 { 1 } else { 2 }, r);
            }
        }
    }
    Word::from_parts_unchecked(spec, syl)
}
