//! Cheap duplicate suppression before the expensive filters: of all
//! rotations of a pair list by whole (β,γ) pairs, only the greatest is
//! kept. Rotations by pairs are equivalences, so every class meeting a
//! shape keeps at least one member.

use crate::word::PairList;

fn rotation_cmp(runs: &[u32], shift: usize) -> std::cmp::Ordering {
    let n = runs.len();
    (0..n).map(|i| runs[(i + shift) % n]).cmp(runs.iter().copied())
}

/// The lexicographically greatest rotation of `L` by whole pairs.
pub fn crude_key(list: &PairList) -> PairList {
    if list.is_degenerate() {
        return list.clone();
    }
    let runs = list.runs();
    let n = runs.len();
    let best = (0..n).step_by(2).fold(0, |best, s| {
        let cand = (0..n).map(|i| runs[(i + s) % n]);
        if cand.cmp((0..n).map(|i| runs[(i + best) % n])) == std::cmp::Ordering::Greater {
            s
        } else {
            best
        }
    });
    let rotated: Vec<u32> = (0..n).map(|i| runs[(i + best) % n]).collect();
    PairList::new(rotated).expect("rotation of a valid list")
}

/// `runs` is its own crude key.
pub fn is_crude_fixed(runs: &[u32]) -> bool {
    let first = runs[0];
    (2..runs.len()).step_by(2).all(|s| runs[s] < first || rotation_cmp(runs, s) != std::cmp::Ordering::Greater)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys() {
        let l = PairList::new(vec![1, 2, 4, 1]).unwrap();
        assert_eq!(crude_key(&l).runs(), &[4, 1, 1, 2]);
        let l = PairList::new(vec![3, 1]).unwrap();
        assert_eq!(crude_key(&l), l);
        assert!(is_crude_fixed(&[4, 1, 1, 2]));
        assert!(!is_crude_fixed(&[1, 2, 4, 1]));
        assert!(is_crude_fixed(&[2, 1, 2, 1]));
    }

    #[test]
    fn fixed_point_agrees_with_key() {
        for l in super::super::compositions::enumerate_pairlists(10, 6, 2) {
            assert_eq!(is_crude_fixed(l.runs()), crude_key(&l) == l, "{l}");
        }
    }
}
