//! Ordered partitions (compositions) and the double encoding of pair lists.

use crate::word::PairList;

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

/// Number of compositions of `n` into `parts` positive parts.
pub fn composition_count(n: u64, parts: u64) -> u128 {
    match (n, parts) {
        (0, 0) => 1,
        (_, 0) => 0,
        _ if n < parts => 0,
        _ => binomial(n - 1, parts - 1),
    }
}

/// All compositions of `n` into `parts` positive parts, in lexicographic order.
pub fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if (rest as usize) < parts {
            return;
        }
        let max = rest - (parts as u32 - 1);
        for v in 1..=max {
            cur.push(v);
            rec(rest - v, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Compositions of `n` into `parts` parts with exactly `ones` parts equal
/// to 1, built from two simpler compositions: the entries greater than one
/// (each reduced by one: a composition of n−parts into parts−ones parts)
/// and the gaps between the positions of the ones (a composition of
/// parts+1 into ones+1 parts).
///
/// Only even `parts` yield pair lists; odd `parts` give an empty stream.
pub fn enumerate_pairlists(n: u32, parts: usize, ones: usize) -> impl Iterator<Item = PairList> {
    let valid = parts % 2 == 0 && parts > 0 && ones <= parts && n as usize >= parts;
    let (bigs, gaps) = if valid {
        (compositions(n - parts as u32, parts - ones), compositions(parts as u32 + 1, ones + 1))
    } else {
        (Vec::new(), Vec::new())
    };
    bigs.into_iter().flat_map(move |big| {
        let gaps = gaps.clone();
        gaps.into_iter().map(move |gap| {
            let mut is_one = vec![false; parts];
            let mut pos = 0usize;
            for g in &gap[..gap.len() - 1] {
                pos += *g as usize;
                is_one[pos - 1] = true;
            }
            let mut it = big.iter();
            let runs = is_one.iter().map(|&one| if one { 1 } else { it.next().expect("enough entries") + 1 }).collect();
            PairList::new(runs).expect("positive entries of even length")
        })
    })
}

/// `C(n−parts−1, parts−ones−1) · C(parts, ones)`, the size of
/// [`enumerate_pairlists`].
pub fn pairlist_count(n: u32, parts: usize, ones: usize) -> u128 {
    if parts % 2 != 0 || parts == 0 || ones > parts || (n as usize) < parts {
        return 0;
    }
    composition_count((n as usize - parts) as u64, (parts - ones) as u64) * binomial(parts as u64, ones as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn lists(n: u32, parts: usize, ones: usize) -> BTreeSet<Vec<u32>> {
        enumerate_pairlists(n, parts, ones).map(|l| l.runs().to_vec()).collect()
    }

    #[test]
    fn small_cases() {
        let expect: BTreeSet<Vec<u32>> = [vec![3, 1], vec![1, 3]].into_iter().collect();
        assert_eq!(lists(4, 2, 1), expect);
        let expect: BTreeSet<Vec<u32>> = [vec![4, 2], vec![2, 4], vec![3, 3]].into_iter().collect();
        assert_eq!(lists(6, 2, 0), expect);
    }

    #[test]
    fn counts_match_closed_form_and_brute_force() {
        for n in 1..=12u32 {
            for parts in (2..=n as usize).step_by(2) {
                for ones in 0..=parts {
                    let brute: BTreeSet<Vec<u32>> = compositions(n, parts)
                        .into_iter()
                        .filter(|c| c.iter().filter(|&&v| v == 1).count() == ones)
                        .collect();
                    let streamed: Vec<Vec<u32>> = enumerate_pairlists(n, parts, ones).map(|l| l.runs().to_vec()).collect();
                    assert_eq!(streamed.len() as u128, pairlist_count(n, parts, ones));
                    assert_eq!(streamed.iter().cloned().collect::<BTreeSet<_>>(), brute, "{n} {parts} {ones}");
                    assert_eq!(streamed.len(), brute.len(), "duplicates for {n} {parts} {ones}");
                }
            }
        }
    }

    #[test]
    fn largest_case_count() {
        assert_eq!(pairlist_count(40, 20, 9), 92378 * 167960);
    }
}
