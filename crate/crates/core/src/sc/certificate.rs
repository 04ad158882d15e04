//! Certificates that W satisfies the small-cancellation hypotheses giving a
//! non-abelian free subgroup of `(Γ1 * Γ2) / <<W²>>`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::checker::check_certificate;
use super::pieces::{is_non_piece, Relator};
use super::power::{is_cyclic_conjugate_pm, is_subword_of_power};
use super::subdivision::{find_subdivision, segment_lengths, segments, Cuts};
use crate::error::{Error, Result};
use crate::word::{parse_reduced, FactorSpec, Word};

/// The two small-cancellation settings: Z3*Z3 with segments of length ≥ 4,
/// and Z2*Z3 with segments of length ≥ 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScCase {
    C33,
    C23,
}

impl ScCase {
    pub fn of_spec(spec: FactorSpec) -> ScCase {
        match spec {
            FactorSpec::ThreeThree => ScCase::C33,
            FactorSpec::TwoThree => ScCase::C23,
        }
    }

    pub fn spec(self) -> FactorSpec {
        match self {
            ScCase::C33 => FactorSpec::ThreeThree,
            ScCase::C23 => FactorSpec::TwoThree,
        }
    }

    /// Minimum segment length ℓ.
    pub fn ell(self) -> usize {
        match self {
            ScCase::C33 => 4,
            ScCase::C23 => 8,
        }
    }

    /// The four candidate words A₁..A₄, each of length ℓ.
    pub fn candidates(self) -> [Word; 4] {
        let texts = match self {
            ScCase::C33 => ["xyxy", "xy2xy2", "xyxy2", "xyx2y2"],
            ScCase::C23 => ["uvuvuvuv", "uvuv2uvuv2", "uvuvuvuv2", "uvuvuv2uv2"],
        };
        texts.map(|t| parse_reduced(t, self.spec()).expect("candidate words are valid"))
    }
}

impl fmt::Display for ScCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScCase::C33 => "C33",
            ScCase::C23 => "C23",
        })
    }
}

/// The symbolic free generators `X = A^N B^N`, `Y = B^N A^N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generators {
    #[serde(rename = "X")]
    pub x: String,
    #[serde(rename = "Y")]
    pub y: String,
}

impl Generators {
    pub fn new(a: &Word, b: &Word, n: u64) -> Self {
        Generators { x: format!("({a})^{n}({b})^{n}"), y: format!("({b})^{n}({a})^{n}") }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScCertificate {
    pub case: ScCase,
    pub word: Word,
    pub cuts: Cuts,
    pub segments: Vec<Word>,
    pub segment_lengths: [usize; 3],
    #[serde(rename = "A")]
    pub a: Word,
    #[serde(rename = "B")]
    pub b: Word,
    #[serde(rename = "N")]
    pub n: u64,
    pub generators: Generators,
}

/// `20·K·ℓ + 1` with K the syllable length of W².
pub fn required_n(word_len: usize, ell: usize) -> u64 {
    20 * (2 * word_len as u64) * ell as u64 + 1
}

/// Picks A as the first candidate with no segment inside a power of it, and B
/// as the next candidate after A in the list.
pub fn choose_ab(segs: &[Word], case: ScCase) -> Result<(Word, Word)> {
    let cands = case.candidates();
    let ai = (0..4)
        .find(|&i| segs.iter().all(|s| !is_subword_of_power(s, &cands[i])))
        .ok_or_else(|| Error::Certificate("every candidate A contains a segment in a power".into()))?;
    let a = cands[ai].clone();
    let b = cands[(ai + 1) % 4].clone();
    if is_cyclic_conjugate_pm(&a, &b) {
        return Err(Error::Certificate(format!("{a} is a cyclic conjugate of {b} or its inverse")));
    }
    Ok((a, b))
}

/// Assembles the certificate for given cuts without searching.
pub fn certificate_for_cuts(w: &Word, cuts: Cuts, case: ScCase) -> Result<ScCertificate> {
    let n = w.len();
    if !(cuts[0] < cuts[1] && cuts[1] < cuts[2] && cuts[2] < n) {
        return Err(Error::BadSubdivision(format!("cuts {cuts:?} are not increasing below {n}")));
    }
    let lens = segment_lengths(n, cuts);
    if lens.iter().any(|&l| l < case.ell()) {
        return Err(Error::BadSubdivision(format!("segment lengths {lens:?} are below {}", case.ell())));
    }
    let segs = segments(w, cuts).to_vec();
    let rel = Relator::new(w)?;
    for s in &segs {
        if !is_non_piece(s, &rel)? {
            return Err(Error::Certificate(format!("segment {s} is a piece")));
        }
    }
    let (a, b) = choose_ab(&segs, case)?;
    let n = required_n(w.len(), case.ell());
    let cert = ScCertificate {
        case,
        word: w.clone(),
        cuts,
        segment_lengths: lens,
        segments: segs,
        generators: Generators::new(&a, &b, n),
        a,
        b,
        n,
    };
    check_certificate(&cert)?;
    Ok(cert)
}

/// Searches for a subdivision and builds a re-validated certificate.
pub fn certify(w: &Word, case: ScCase) -> Result<Option<ScCertificate>> {
    if w.spec() != case.spec() {
        return Err(Error::WrongCase { expected: case.spec().label(), got: w.spec().label() });
    }
    match find_subdivision(w, case.ell())? {
        None => Ok(None),
        Some(cuts) => certificate_for_cuts(w, cuts, case).map(Some),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn candidates_are_pairwise_non_conjugate() {
        for case in [ScCase::C33, ScCase::C23] {
            let c = case.candidates();
            for i in 0..4 {
                assert_eq!(c[i].len(), case.ell());
                for j in 0..4 {
                    assert_eq!(is_cyclic_conjugate_pm(&c[i], &c[j]), i == j, "{case} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn table_word_is_certified() {
        let w = parse_word("xyxyxy2x2y2xyx2yx2y2", FactorSpec::ThreeThree).unwrap();
        let cert = certify(&w, ScCase::C33).unwrap().unwrap();
        assert_eq!(cert.n, 20 * 28 * 4 + 1);
        assert!(ScCase::C33.candidates().contains(&cert.a));
        let json = serde_json::to_string(&cert).unwrap();
        let back: ScCertificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
    }

    #[test]
    fn short_word_has_no_certificate() {
        let w = parse_word("xyxyx2y2", FactorSpec::ThreeThree).unwrap();
        assert_eq!(certify(&w, ScCase::C33).unwrap(), None);
        assert!(certify(&w, ScCase::C23).is_err());
    }
}
