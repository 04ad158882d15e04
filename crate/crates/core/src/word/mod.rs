//! Words in the free products Z2*Z3 = <u,v> and Z3*Z3 = <x,y>.
//!
//! A [`Word`] is a freely reduced sequence of syllables whose factors
//! alternate. Relators are additionally cyclically reduced; every word
//! returned by [`parse_word`] has that property.

mod equiv;
mod pairlist;
mod parse;
mod transfer;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use equiv::{are_equivalent, canonicalize, equivalence_orbit, CanonicalKey};
pub use pairlist::{pairlist_of_word, rotate_to_normal, word_of_pairlist, PairList, PureRun};
pub use parse::{infer_spec, parse_reduced, parse_word};
pub use transfer::{lift_232_to_332, push_332_to_232};

/// Exponent of the relator in every group considered here: `W(x,y)^2 = 1`.
pub const RELATOR_POWER: u32 = 2;

/// The pair of cyclic factor orders (p,q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FactorSpec {
    /// Z2 * Z3, generators u (order 2) and v (order 3).
    #[serde(rename = "232")]
    TwoThree,
    /// Z3 * Z3, generators x and y (both order 3).
    #[serde(rename = "332")]
    ThreeThree,
}

impl FactorSpec {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        match (p, q) {
            (2, 3) => Ok(FactorSpec::TwoThree),
            (3, 3) => Ok(FactorSpec::ThreeThree),
            _ => Err(Error::UnsupportedSpec { p, q }),
        }
    }

    pub fn p(self) -> u8 {
        match self {
            FactorSpec::TwoThree => 2,
            FactorSpec::ThreeThree => 3,
        }
    }

    pub fn q(self) -> u8 {
        3
    }

    pub fn order(self, factor: Factor) -> u8 {
        match factor {
            Factor::First => self.p(),
            Factor::Second => self.q(),
        }
    }

    pub fn letters(self) -> [char; 2] {
        match self {
            FactorSpec::TwoThree => ['u', 'v'],
            FactorSpec::ThreeThree => ['x', 'y'],
        }
    }

    /// Short label used on the command line and in JSON: `"232"` or `"332"`.
    pub fn label(self) -> &'static str {
        match self {
            FactorSpec::TwoThree => "232",
            FactorSpec::ThreeThree => "332",
        }
    }
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}*Z{}", self.p(), self.q())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    First,
    Second,
}

impl Factor {
    pub fn other(self) -> Factor {
        match self {
            Factor::First => Factor::Second,
            Factor::Second => Factor::First,
        }
    }
}

/// One nontrivial element of a cyclic factor. The derived order (First before
/// Second, then ascending exponent) is the order used for canonical forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    pub factor: Factor,
    pub exp: u8,
}

impl Syllable {
    pub fn new(factor: Factor, exp: u8) -> Self {
        Syllable { factor, exp }
    }

    pub fn inverse(self, spec: FactorSpec) -> Self {
        Syllable { factor: self.factor, exp: spec.order(self.factor) - self.exp }
    }
}

/// A freely reduced alternating word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
    spec: FactorSpec,
}

impl Word {
    /// Builds a word from syllables that already alternate.
    pub fn from_syllables(spec: FactorSpec, syllables: Vec<Syllable>) -> Result<Self> {
        for s in &syllables {
            let order = spec.order(s.factor);
            if s.exp == 0 || s.exp >= order {
                return Err(Error::BadExponent { exp: s.exp as u32, order });
            }
        }
        if syllables.windows(2).any(|w| w[0].factor == w[1].factor) {
            return Err(Error::NotAlternating);
        }
        Ok(Word { syllables, spec })
    }

    /// `x^{e0} y^{e1} x^{e2} ...`: exponents of an alternating word that starts
    /// with the first factor.
    pub fn from_exponents(spec: FactorSpec, exps: &[u8]) -> Result<Self> {
        let syllables = exps
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let factor = if i % 2 == 0 { Factor::First } else { Factor::Second };
                Syllable::new(factor, e)
            })
            .collect();
        Word::from_syllables(spec, syllables)
    }

    /// `u v^{a1} u v^{a2} ... u v^{ak}` in Z2*Z3.
    pub fn from_v_exponents(alphas: &[u8]) -> Result<Self> {
        let exps: Vec<u8> = alphas.iter().flat_map(|&a| [1, a]).collect();
        Word::from_exponents(FactorSpec::TwoThree, &exps)
    }

    pub(crate) fn from_parts_unchecked(spec: FactorSpec, syllables: Vec<Syllable>) -> Self {
        debug_assert!(Word::from_syllables(spec, syllables.clone()).is_ok());
        Word { syllables, spec }
    }

    pub fn spec(&self) -> FactorSpec {
        self.spec
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// Free-product length (number of syllables).
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// The length parameter k: the number of first-factor syllables.
    pub fn pair_length(&self) -> usize {
        self.syllables.iter().filter(|s| s.factor == Factor::First).count()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.syllables.first(), self.syllables.last()) {
            (Some(a), Some(b)) => self.syllables.len() == 1 || a.factor != b.factor,
            _ => true,
        }
    }

    pub fn starts_with_first(&self) -> bool {
        self.syllables.first().is_some_and(|s| s.factor == Factor::First)
    }

    /// Exponent sequence; for words starting with the first factor the even
    /// positions are first-factor exponents.
    pub fn exponents(&self) -> Vec<u8> {
        self.syllables.iter().map(|s| s.exp).collect()
    }

    /// Exponents of the second-factor syllables, in order.
    pub fn second_exponents(&self) -> Vec<u8> {
        self.syllables.iter().filter(|s| s.factor == Factor::Second).map(|s| s.exp).collect()
    }

    /// Cyclic rotation by `n` syllables.
    pub fn rotate(&self, n: usize) -> Word {
        let mut syllables = self.syllables.clone();
        if !syllables.is_empty() {
            let n = n % syllables.len();
            syllables.rotate_left(n);
        }
        Word { syllables, spec: self.spec }
    }

    /// Rotates a cyclic word by one syllable if needed so it starts with the
    /// first factor.
    pub fn normalize_start(&self) -> Word {
        if self.starts_with_first() || self.is_empty() {
            self.clone()
        } else {
            self.rotate(1)
        }
    }

    pub fn inverse(&self) -> Word {
        let syllables = self.syllables.iter().rev().map(|s| s.inverse(self.spec)).collect();
        Word { syllables, spec: self.spec }
    }

    /// Concatenation `self * other` as written; fails if the juxtaposition is
    /// not reduced.
    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.spec != other.spec {
            return Err(Error::WrongCase { expected: self.spec.label(), got: other.spec.label() });
        }
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        Word::from_syllables(self.spec, syllables)
    }

    /// `self^n`; the word must be cyclically reduced with even length.
    pub fn power(&self, n: usize) -> Word {
        let mut syllables = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            syllables.extend_from_slice(&self.syllables);
        }
        Word { syllables, spec: self.spec }
    }

    /// Syllables `start..start+len` of the cyclic word.
    pub fn cyclic_subword(&self, start: usize, len: usize) -> Word {
        let n = self.len();
        let syllables = (0..len).map(|i| self.syllables[(start + i) % n]).collect();
        Word { syllables, spec: self.spec }
    }

    /// The word with exponent 2 written as `^2` instead of a digit suffix.
    pub fn pretty(&self) -> String {
        self.render(true)
    }

    fn render(&self, pretty: bool) -> String {
        let letters = self.spec.letters();
        let mut out = String::with_capacity(self.len() * 2);
        for s in &self.syllables {
            out.push(match s.factor {
                Factor::First => letters[0],
                Factor::Second => letters[1],
            });
            if s.exp != 1 {
                if pretty {
                    out.push('^');
                }
                out.push_str(&s.exp.to_string());
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        let spec = infer_spec(&text).map_err(serde::de::Error::custom)?;
        parse_reduced(&text, spec).map_err(serde::de::Error::custom)
    }
}
