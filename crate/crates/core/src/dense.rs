//! Position-indexed bitsets and the (size, lex) subset search used by the
//! exhaustive Hall check and the tight-set search.

use std::ops::RangeInclusive;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(width: usize) -> Self {
        BitSet {
            words: vec![0; width.div_ceil(64)],
        }
    }

    pub fn insert(&mut self, pos: usize) {
        self.words[pos / 64] |= 1 << (pos % 64);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * 64 + bit)
            })
        })
    }
}

/// Searches index subsets of `sets` by increasing size and, within a size, in
/// lexicographic order of positions. Returns the first subset whose union
/// satisfies `accept(size, union_count)`, together with that union.
pub(crate) fn first_subset(
    sets: &[BitSet],
    sizes: RangeInclusive<usize>,
    accept: impl Fn(usize, usize) -> bool,
) -> Option<(Vec<usize>, BitSet)> {
    let n = sets.len();
    let words = sets.first().map_or(0, |s| s.words.len());
    for k in sizes {
        if k == 0 || k > n {
            continue;
        }
        // prefix[d] holds the union of the first d chosen sets
        let mut prefix = vec![0u64; (k + 1) * words];
        let mut chosen = Vec::with_capacity(k);
        if search(sets, k, 0, &mut chosen, &mut prefix, words, &accept) {
            let mut union = BitSet::new(0);
            union.words = prefix[k * words..(k + 1) * words].to_vec();
            return Some((chosen, union));
        }
    }
    None
}

fn search(
    sets: &[BitSet],
    k: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    prefix: &mut [u64],
    words: usize,
    accept: &impl Fn(usize, usize) -> bool,
) -> bool {
    let depth = chosen.len();
    if depth == k {
        let union = &prefix[k * words..(k + 1) * words];
        let count = union.iter().map(|w| w.count_ones() as usize).sum();
        return accept(k, count);
    }
    let last = sets.len() - (k - depth);
    for p in start..=last {
        let (lower, upper) = prefix.split_at_mut((depth + 1) * words);
        let from = &lower[depth * words..];
        let to = &mut upper[..words];
        for ((t, f), s) in to.iter_mut().zip(from).zip(&sets[p].words) {
            *t = f | s;
        }
        chosen.push(p);
        if search(sets, k, p + 1, chosen, prefix, words, accept) {
            return true;
        }
        chosen.pop();
    }
    false
}
