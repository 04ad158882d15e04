//! Subwords of powers and cyclic conjugacy of short words.

use crate::word::{Syllable, Word};

fn occurs_in(v: &[Syllable], hay: &[Syllable]) -> bool {
    v.len() <= hay.len() && hay.windows(v.len()).any(|w| w == v)
}

/// True when `v` is a syllable-aligned subword of `A^n` or `A^{-n}` for some n.
///
/// The window `A^M` with `M = ceil(|V|/|A|) + 1` holds every phase of every
/// occurrence.
pub fn is_subword_of_power(v: &Word, a: &Word) -> bool {
    if a.is_empty() {
        return false;
    }
    if v.is_empty() {
        return true;
    }
    let m = v.len().div_ceil(a.len()) + 1;
    [a.clone(), a.inverse()].iter().any(|base| occurs_in(v.syllables(), base.power(m).syllables()))
}

/// True when `a` equals some cyclic rotation of `b` or of `b⁻¹`.
pub fn is_cyclic_conjugate_pm(a: &Word, b: &Word) -> bool {
    if a.len() != b.len() || a.spec() != b.spec() {
        return false;
    }
    let binv = b.inverse();
    (0..b.len().max(1)).any(|r| b.rotate(r) == *a || binv.rotate(r) == *a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_reduced, FactorSpec};

    fn w(s: &str) -> Word {
        parse_reduced(s, FactorSpec::ThreeThree).unwrap()
    }

    #[test]
    fn power_examples() {
        assert!(is_subword_of_power(&w("xyxy"), &w("xyxy")));
        assert!(!is_subword_of_power(&w("xyx2y2"), &w("xyxy")));
        assert!(is_subword_of_power(&w("yxyx"), &w("xyxy")));
        assert!(is_subword_of_power(&w("yxyxyxyxyxy"), &w("xyxy")));
        // inverse powers count: (xyxy)^{-1} = y2x2y2x2
        assert!(is_subword_of_power(&w("x2y2x2"), &w("xyxy")));
        assert!(!is_subword_of_power(&w("xyx2"), &w("xyxy2")));
        assert!(is_subword_of_power(&w("y2xyx"), &w("xyxy2")));
    }

    #[test]
    fn conjugacy() {
        assert!(is_cyclic_conjugate_pm(&w("yxyx"), &w("xyxy")));
        assert!(is_cyclic_conjugate_pm(&w("x2y2x2y2"), &w("xyxy")));
        assert!(!is_cyclic_conjugate_pm(&w("xyxy2"), &w("xyxy")));
    }
}
