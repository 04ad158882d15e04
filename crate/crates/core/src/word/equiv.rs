//! Equivalence of relators: cyclic permutation, inversion, automorphisms of
//! the factors, and (when p = q) interchange of the generators.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Factor, Syllable, Word};

/// The lexicographically least member of an equivalence class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(Word);

impl CanonicalKey {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn apply_aut(w: &Word, factor: Factor) -> Word {
    let spec = w.spec();
    let syl = w
        .syllables()
        .iter()
        .map(|s| if s.factor == factor { s.inverse(spec) } else { *s })
        .collect();
    Word::from_parts_unchecked(spec, syl)
}

fn interchange(w: &Word) -> Word {
    let syl: Vec<Syllable> =
        w.syllables().iter().map(|s| Syllable::new(s.factor.other(), s.exp)).collect();
    Word::from_parts_unchecked(w.spec(), syl).normalize_start()
}

/// The closure of `{w}` under the equivalence moves, each member written as a
/// cyclic word starting with a first-factor syllable.
pub fn equivalence_orbit(w: &Word) -> BTreeSet<Word> {
    assert!(w.is_cyclically_reduced() && w.len() % 2 == 0, "orbit of a non-relator");
    let spec = w.spec();
    let start = w.normalize_start();
    let mut seen = BTreeSet::new();
    let mut queue = vec![start.clone()];
    seen.insert(start);
    while let Some(cur) = queue.pop() {
        let mut next = vec![cur.rotate(2), cur.inverse().normalize_start(), apply_aut(&cur, Factor::Second)];
        if spec.p() == 3 {
            next.push(apply_aut(&cur, Factor::First));
        }
        if spec.p() == spec.q() {
            next.push(interchange(&cur));
        }
        for n in next {
            if seen.insert(n.clone()) {
                queue.push(n);
            }
        }
    }
    seen
}

/// Rotation offset (even, so the result starts with a first-factor syllable)
/// giving the least rotation of an exponent sequence.
fn least_even_rotation(e: &[u8]) -> usize {
    let n = e.len();
    let mut best = 0;
    for r in (2..n).step_by(2) {
        let better = (0..n).map(|i| e[(r + i) % n]).cmp((0..n).map(|i| e[(best + i) % n]));
        if better == std::cmp::Ordering::Less {
            best = r;
        }
    }
    best
}

/// Lexicographic minimum over the equivalence orbit.
///
/// Works on the exponent sequence directly: the moves generate a dihedral
/// action (rotation by one syllable composes interchange with a shift when
/// p = q) together with complementing the exponents of either factor.
pub fn canonicalize(w: &Word) -> CanonicalKey {
    assert!(w.is_cyclically_reduced() && w.len() % 2 == 0, "canonical form of a non-relator");
    let spec = w.spec();
    let base = w.normalize_start().exponents();
    let n = base.len();
    let reversed: Vec<u8> = {
        // inverse, then rotated by one so it starts with the first factor
        let inv: Vec<u8> = (0..n)
            .map(|i| {
                let j = (2 * n - 2 - i) % n;
                let order = if j % 2 == 0 { spec.p() } else { spec.q() };
                order - base[j]
            })
            .collect();
        inv
    };
    let auts: &[(bool, bool)] =
        if spec.p() == 3 { &[(false, false), (true, false), (false, true), (true, true)] } else { &[(false, false), (false, true)] };
    let shifts: &[usize] = if spec.p() == spec.q() { &[0, 1] } else { &[0] };

    let mut best: Option<Vec<u8>> = None;
    let mut cand = vec![0u8; n];
    for src in [&base, &reversed] {
        for &shift in shifts {
            for &(ca, cb) in auts {
                for (i, c) in cand.iter_mut().enumerate() {
                    let v = src[(i + shift) % n];
                    let comp = if i % 2 == 0 { ca } else { cb };
                    let order = if i % 2 == 0 { spec.p() } else { spec.q() };
                    *c = if comp { order - v } else { v };
                }
                let r = least_even_rotation(&cand);
                let rotated: Vec<u8> = (0..n).map(|i| cand[(r + i) % n]).collect();
                if best.as_ref().is_none_or(|b| rotated < *b) {
                    best = Some(rotated);
                }
            }
        }
    }
    let exps = best.expect("nonempty orbit");
    CanonicalKey(Word::from_exponents(spec, &exps).expect("canonical form is a valid word"))
}

pub fn are_equivalent(a: &Word, b: &Word) -> bool {
    a.spec() == b.spec() && a.len() == b.len() && canonicalize(a) == canonicalize(b)
}
