//! Pieces of the relator U = W², detected by syllable-aligned matching.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::word::{Syllable, Word};

/// The cyclic relator `U = W·W` together with its inverse.
#[derive(Clone, Debug)]
pub struct Relator {
    w: Word,
    u: Vec<Syllable>,
    u_inv: Vec<Syllable>,
}

impl Relator {
    /// Builds `U = W²`; `W` must be cyclically reduced.
    pub fn new(w: &Word) -> Result<Self> {
        if w.is_empty() || !w.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced);
        }
        let u = w.power(2);
        let u_inv = u.inverse();
        Ok(Relator { w: w.clone(), u: u.syllables().to_vec(), u_inv: u_inv.syllables().to_vec() })
    }

    pub fn word(&self) -> &Word {
        &self.w
    }

    /// Syllable length K of U.
    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    pub(crate) fn cyclic(&self) -> [&[Syllable]; 2] {
        [&self.u, &self.u_inv]
    }
}

/// Which of U, U⁻¹ an occurrence lies in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A cyclic occurrence of a subword, with the word completing it to a
/// cyclic conjugate of U or U⁻¹.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub start: usize,
    pub direction: Direction,
    pub completion: Vec<Syllable>,
}

fn matches_at(cyc: &[Syllable], start: usize, v: &[Syllable]) -> bool {
    let n = cyc.len();
    v.iter().enumerate().all(|(j, s)| cyc[(start + j) % n] == *s)
}

/// Every syllable-aligned cyclic occurrence of `v` in U and U⁻¹.
pub fn occurrences(v: &[Syllable], rel: &Relator) -> Vec<Occurrence> {
    let k = rel.len();
    let mut out = Vec::new();
    if v.is_empty() || v.len() >= k {
        return out;
    }
    for (cyc, direction) in rel.cyclic().into_iter().zip([Direction::Forward, Direction::Inverse]) {
        for start in 0..k {
            if matches_at(cyc, start, v) {
                let completion = (v.len()..k).map(|j| cyc[(start + j) % k]).collect();
                out.push(Occurrence { start, direction, completion });
            }
        }
    }
    out
}

/// The distinct completions of `v`; `v` is a piece when there are two or more.
///
/// Words of length K or more have no occurrence of the required kind, so the
/// set is empty for them.
pub fn completions(v: &Word, rel: &Relator) -> BTreeSet<Vec<Syllable>> {
    occurrences(v.syllables(), rel).into_iter().map(|o| o.completion).collect()
}

fn count_completions(v: &[Syllable], rel: &Relator) -> usize {
    let mut seen = BTreeSet::new();
    for o in occurrences(v, rel) {
        seen.insert(o.completion);
        if seen.len() > 1 {
            break;
        }
    }
    seen.len()
}

/// True when `v` occurs in U^{±1} with exactly one completion.
pub fn is_non_piece(v: &Word, rel: &Relator) -> Result<bool> {
    match count_completions(v.syllables(), rel) {
        0 => Err(Error::NotASubword(v.to_string())),
        n => Ok(n == 1),
    }
}

pub fn is_piece(v: &Word, rel: &Relator) -> Result<bool> {
    is_non_piece(v, rel).map(|b| !b)
}

/// For each start position of the cyclic word W, the least length of a
/// non-piece beginning there, if one shorter than |W| exists.
///
/// Extending a non-piece to the right keeps it a non-piece, so a segment
/// `W[i..i+len]` is a non-piece exactly when `len` is at least this bound.
pub fn min_non_piece_lengths(rel: &Relator) -> Vec<Option<usize>> {
    let w = rel.word();
    let n = w.len();
    (0..n)
        .map(|i| {
            (1..n).find(|&len| {
                let v: Vec<Syllable> = (0..len).map(|j| w.syllables()[(i + j) % n]).collect();
                count_completions(&v, rel) == 1
            })
        })
        .collect()
}
