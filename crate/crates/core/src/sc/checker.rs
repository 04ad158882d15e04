//! Re-validation of a certificate from its stored fields alone, with
//! deliberately naive algorithms that share no code with the search.

use std::collections::BTreeSet;

use super::certificate::{Generators, ScCertificate};
use crate::error::{Error, Result};
use crate::word::{Syllable, Word};

fn fail(msg: impl Into<String>) -> Error {
    Error::Certificate(msg.into())
}

fn rotations(seq: &[Syllable]) -> Vec<Vec<Syllable>> {
    (0..seq.len()).map(|r| seq[r..].iter().chain(&seq[..r]).copied().collect()).collect()
}

/// Piece test straight from the definition: collect the suffix following
/// `v` in every rotation of U and U⁻¹ that begins with `v`.
fn naive_is_non_piece(v: &[Syllable], w: &Word) -> bool {
    let u: Vec<Syllable> = [w.syllables(), w.syllables()].concat();
    let u_inv = w.power(2).inverse();
    let mut tails = BTreeSet::new();
    for rot in rotations(&u).into_iter().chain(rotations(u_inv.syllables())) {
        if rot.len() > v.len() && rot.starts_with(v) {
            tails.insert(rot[v.len()..].to_vec());
        }
    }
    tails.len() == 1
}

/// `v` is read off A^∞ or (A⁻¹)^∞ from some starting phase.
fn naive_in_power(v: &[Syllable], a: &Word) -> bool {
    let l = a.len();
    [a.clone(), a.inverse()]
        .iter()
        .any(|base| (0..l).any(|r| v.iter().enumerate().all(|(j, s)| base.syllables()[(r + j) % l] == *s)))
}

fn naive_conjugate(a: &Word, b: &Word) -> bool {
    let doubled = |x: &Word| [x.syllables(), x.syllables()].concat();
    a.len() == b.len()
        && [doubled(b), doubled(&b.inverse())].iter().any(|d| d.windows(a.len()).any(|win| win == a.syllables()))
}

fn alternating_even(a: &Word) -> bool {
    a.len() % 2 == 0 && a.syllables().windows(2).all(|p| p[0].factor != p[1].factor)
}

/// Checks every clause: the subdivision, the non-piece property of each
/// segment, segment lengths ≥ ℓ, no segment inside a power of A, A not a
/// cyclic conjugate of B^{±1}, and the value of N with its generators.
pub fn check_certificate(c: &ScCertificate) -> Result<()> {
    let w = &c.word;
    let ell = c.case.ell();
    let n = w.len();
    if w.spec() != c.case.spec() {
        return Err(fail(format!("word is over {} but the case is {}", w.spec(), c.case)));
    }
    if !w.is_cyclically_reduced() || !alternating_even(w) {
        return Err(fail("word is not cyclically reduced"));
    }
    let [i1, i2, i3] = c.cuts;
    if !(i1 < i2 && i2 < i3 && i3 < n) {
        return Err(fail(format!("cuts {:?} are not increasing within 0..{n}", c.cuts)));
    }
    let syl = w.syllables();
    let expected: [Vec<Syllable>; 3] =
        [syl[i1..i2].to_vec(), syl[i2..i3].to_vec(), [&syl[i3..], &syl[..i1]].concat()];
    if c.segments.len() != 3 {
        return Err(fail("need exactly three segments"));
    }
    for (k, (seg, exp)) in c.segments.iter().zip(&expected).enumerate() {
        if seg.syllables() != exp.as_slice() {
            return Err(fail(format!("segment {} does not match the cuts", k + 1)));
        }
        if c.segment_lengths[k] != exp.len() {
            return Err(fail(format!("segment {} length is recorded wrongly", k + 1)));
        }
        if exp.len() < ell {
            return Err(fail(format!("segment {} is shorter than {ell}", k + 1)));
        }
        if !naive_is_non_piece(exp, w) {
            return Err(fail(format!("segment {} ({seg}) is a piece", k + 1)));
        }
        if naive_in_power(exp, &c.a) {
            return Err(fail(format!("segment {} is a subword of a power of A", k + 1)));
        }
    }
    for (name, x) in [("A", &c.a), ("B", &c.b)] {
        if x.spec() != w.spec() || x.len() != ell || !alternating_even(x) {
            return Err(fail(format!("{name} is not a reduced word of length {ell}")));
        }
    }
    if naive_conjugate(&c.a, &c.b) {
        return Err(fail("A is a cyclic conjugate of B or its inverse"));
    }
    let k = 2 * n as u64;
    if c.n != 20 * k * ell as u64 + 1 {
        return Err(fail(format!("N = {} but 20Kℓ+1 = {}", c.n, 20 * k * ell as u64 + 1)));
    }
    if c.generators != Generators::new(&c.a, &c.b, c.n) {
        return Err(fail("generators are not A^N B^N and B^N A^N"));
    }
    Ok(())
}
