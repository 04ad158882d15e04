//! Cutting W into three non-pieces of U = W² of prescribed minimum length.

use super::pieces::{min_non_piece_lengths, Relator};
use crate::error::Result;
use crate::word::Word;

/// Cut positions `i1 < i2 < i3` in syllable indices of W. The segments are
/// `W[i1..i2]`, `W[i2..i3]` and the wrap-around `W[i3..] W[..i1]`.
pub type Cuts = [usize; 3];

pub fn segment_lengths(n: usize, cuts: Cuts) -> [usize; 3] {
    let [a, b, c] = cuts;
    [b - a, c - b, n - c + a]
}

pub fn segments(w: &Word, cuts: Cuts) -> [Word; 3] {
    let lens = segment_lengths(w.len(), cuts);
    [0, 1, 2].map(|i| w.cyclic_subword(cuts[i], lens[i]))
}

struct Finder {
    n: usize,
    ell: usize,
    bounds: Vec<Option<usize>>,
}

impl Finder {
    fn new(w: &Word, ell: usize) -> Result<Self> {
        let rel = Relator::new(w)?;
        Ok(Finder { n: w.len(), ell, bounds: min_non_piece_lengths(&rel) })
    }

    fn ok(&self, start: usize, len: usize) -> bool {
        len >= self.ell && self.bounds[start % self.n].is_some_and(|m| len >= m)
    }

    fn visit(&self, mut f: impl FnMut(Cuts) -> bool) {
        let n = self.n;
        if n < 3 * self.ell {
            return;
        }
        for i1 in 0..n {
            for i2 in i1 + 1..n {
                if !self.ok(i1, i2 - i1) {
                    continue;
                }
                for i3 in i2 + 1..n {
                    if self.ok(i2, i3 - i2) && self.ok(i3, n - i3 + i1) && !f([i1, i2, i3]) {
                        return;
                    }
                }
            }
        }
    }
}

/// The lexicographically least cut triple whose three segments are
/// non-pieces of W² of length at least `ell`, if any.
pub fn find_subdivision(w: &Word, ell: usize) -> Result<Option<Cuts>> {
    let finder = Finder::new(w, ell)?;
    let mut found = None;
    finder.visit(|c| {
        found = Some(c);
        false
    });
    Ok(found)
}

/// Every valid cut triple, in lexicographic order.
pub fn all_subdivisions(w: &Word, ell: usize) -> Result<Vec<Cuts>> {
    let finder = Finder::new(w, ell)?;
    let mut out = Vec::new();
    finder.visit(|c| {
        out.push(c);
        true
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_word, FactorSpec};

    #[test]
    fn short_words_have_none() {
        let w = parse_word("xy", FactorSpec::ThreeThree).unwrap();
        assert_eq!(find_subdivision(&w, 4).unwrap(), None);
    }

    #[test]
    fn printed_bracketing_is_among_the_subdivisions() {
        let w = parse_word("xyxyxy2x2y2xyx2yx2y2", FactorSpec::ThreeThree).unwrap();
        let all = all_subdivisions(&w, 4).unwrap();
        assert!(all.contains(&[0, 5, 9]));
        assert_eq!(segment_lengths(14, [0, 5, 9]), [5, 4, 5]);
        assert_eq!(find_subdivision(&w, 4).unwrap(), all.first().copied());
        let segs = segments(&w, [0, 5, 9]);
        assert_eq!(segs.map(|s| s.to_string()), ["xyxyx", "y2x2y2x", "yx2yx2y2"]);
    }
}
