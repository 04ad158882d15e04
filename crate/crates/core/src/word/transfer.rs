//! The substitution `x -> uvu`, `y -> v` from Z3*Z3 into Z2*Z3 and its inverse.

use super::{Factor, FactorSpec, Syllable, Word};
use crate::error::{Error, Result};

/// `Z(u,v) = W(uvu, v)`, freely reduced using `u^2 = 1`.
///
/// A word of length parameter k maps to one of length parameter 2k.
pub fn push_332_to_232(w: &Word) -> Result<Word> {
    if w.spec() != FactorSpec::ThreeThree {
        return Err(Error::WrongCase { expected: "332", got: w.spec().label() });
    }
    if !w.is_cyclically_reduced() {
        return Err(Error::NotCyclicallyReduced);
    }
    let w = w.normalize_start();
    let mut syl = Vec::with_capacity(2 * w.len());
    for s in w.syllables() {
        match s.factor {
            // x^a -> u v^a u; the trailing u is absorbed by the next pair
            Factor::First => {
                syl.push(Syllable::new(Factor::First, 1));
                syl.push(Syllable::new(Factor::Second, s.exp));
                syl.push(Syllable::new(Factor::First, 1));
            }
            Factor::Second => syl.push(Syllable::new(Factor::Second, s.exp)),
        }
    }
    Word::from_syllables(FactorSpec::TwoThree, syl)
}

/// Inverse of [`push_332_to_232`]. Reading the v-exponents `g1 g2 ... g2k`,
/// parity 0 takes `x^{g1} y^{g2} x^{g3} ...`; parity 1 starts one pair later.
pub fn lift_232_to_332(z: &Word, parity: u8) -> Result<Word> {
    if z.spec() != FactorSpec::TwoThree {
        return Err(Error::WrongCase { expected: "232", got: z.spec().label() });
    }
    let z = z.normalize_start();
    let g = z.second_exponents();
    if g.len() % 2 != 0 {
        return Err(Error::OddPairLength(g.len()));
    }
    let n = g.len();
    let shift = (parity % 2) as usize;
    let exps: Vec<u8> = (0..n).map(|i| g[(i + shift) % n]).collect();
    Word::from_exponents(FactorSpec::ThreeThree, &exps)
}
