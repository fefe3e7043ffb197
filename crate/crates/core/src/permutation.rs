//! Permutations on positions `1..=n`: the standard permutation of a word,
//! cycle decompositions, and the k-order standard permutation of a word list.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::words::AlphabetOrder;

/// A bijection on `1..=n`. Public accessors use 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    // 0-based images: map[i] = π(i + 1) - 1
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds a permutation from its 1-based images `(π(1), ..., π(n))`.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &p in images {
            if p == 0 || p > n || seen[p - 1] {
                return Err(Error::NotAPermutation(format!("image {p} invalid or repeated for n = {n}")));
            }
            seen[p - 1] = true;
            map.push(p - 1);
        }
        Ok(Permutation { map })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `π(i)` for a 1-based position `i`.
    ///
    /// Panics if `i` is not in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.map[i - 1] + 1
    }

    /// `π^t(i)`, by walking `t` steps.
    pub fn iterate(&self, i: usize, t: usize) -> usize {
        let mut p = i - 1;
        for _ in 0..t {
            p = self.map[p];
        }
        p + 1
    }

    /// The `t`-fold power `π^t`; `π^0` is the identity.
    pub fn pow(&self, t: usize) -> Permutation {
        let mut out = vec![0; self.len()];
        for cycle in self.cycles().cycles() {
            let d = cycle.len();
            for (j, &p) in cycle.iter().enumerate() {
                out[p - 1] = cycle[(j + t) % d] - 1;
            }
        }
        Permutation { map: out }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &p) in self.map.iter().enumerate() {
            inv[p] = i;
        }
        Permutation { map: inv }
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.map.iter().map(|&p| p + 1).collect()
    }

    #[cfg(test)]
    pub(crate) fn as_zero_based(&self) -> &[usize] {
        &self.map
    }

    pub fn cycles(&self) -> CycleDecomposition {
        cycle_decomposition(self)
    }
}

/// Cycles of a permutation, each starting at its smallest element, ordered
/// by that element. Positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Reassembles the permutation the cycles were taken from.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.cycles.iter().map(Vec::len).sum();
        let mut map = vec![0; n];
        for cycle in &self.cycles {
            for (j, &p) in cycle.iter().enumerate() {
                map[p - 1] = cycle[(j + 1) % cycle.len()] - 1;
            }
        }
        Permutation { map }
    }
}

pub fn cycle_decomposition(p: &Permutation) -> CycleDecomposition {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    // Scanning starts in ascending order, so each cycle is entered at its minimum.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut q = start;
        while !seen[q] {
            seen[q] = true;
            cycle.push(q + 1);
            q = p.map[q];
        }
        cycles.push(cycle);
    }
    CycleDecomposition { cycles }
}

/// Stable counting sort of positions by letter, on a word already in rank
/// space. `result[i]` is the 0-based position holding the `i`-th smallest
/// letter occurrence.
pub(crate) fn standard_permutation_ranks(text: &[u8]) -> Vec<usize> {
    let mut start = [0usize; 257];
    for &b in text {
        start[b as usize + 1] += 1;
    }
    for c in 1..257 {
        start[c] += start[c - 1];
    }
    let mut out = vec![0; text.len()];
    for (pos, &b) in text.iter().enumerate() {
        let slot = &mut start[b as usize];
        out[*slot] = pos;
        *slot += 1;
    }
    out
}

/// The standard permutation `π_L`: `π_L(i)` is the position of the `i`-th
/// letter when the positions of `L` are sorted by (letter, position).
pub fn standard_permutation(l: &[u8], ord: &AlphabetOrder) -> Result<Permutation> {
    if l.is_empty() {
        return Err(Error::EmptyWord("standard permutation"));
    }
    Ok(Permutation { map: standard_permutation_ranks(&ord.to_ranks(l)) })
}

/// Contexts up to this order are materialized as sort keys.
const MATERIALIZE_LIMIT: usize = 32;

/// The k-order standard permutation `ν_{k,V}`: a stable sort of the list `V`
/// by k-order context, list index breaking ties. Position `i` of the result
/// holds the 1-based index of the element that lands in row `i`.
pub fn k_order_standard_permutation<W: AsRef<[u8]>>(v: &[W], k: usize, ord: &AlphabetOrder) -> Result<Permutation> {
    if v.iter().any(|w| w.as_ref().is_empty()) {
        return Err(Error::EmptyWord("k-order context"));
    }
    let words: Vec<Vec<u8>> = v.iter().map(|w| ord.to_ranks(w.as_ref())).collect();
    let mut idx: Vec<usize> = (0..words.len()).collect();
    if k <= MATERIALIZE_LIMIT {
        let keys: Vec<Vec<u8>> = words.iter().map(|w| w.iter().copied().cycle().take(k).collect()).collect();
        idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    } else {
        idx.sort_by(|&a, &b| compare_contexts(&words[a], &words[b], k));
    }
    Ok(Permutation { map: idx })
}

/// Compares `context_k(u)` and `context_k(v)` without materializing them.
/// Past `|u| + |v|` symbols the two periodic sequences can no longer differ.
fn compare_contexts(u: &[u8], v: &[u8], k: usize) -> Ordering {
    let limit = k.min(u.len() + v.len());
    let (mut i, mut j) = (0, 0);
    for _ in 0..limit {
        match u[i].cmp(&v[j]) {
            Ordering::Equal => {}
            other => return other,
        }
        i = if i + 1 == u.len() { 0 } else { i + 1 };
        j = if j + 1 == v.len() { 0 } else { j + 1 };
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::conjugacy_class;

    fn id() -> AlphabetOrder {
        AlphabetOrder::identity()
    }

    #[test]
    fn standard_permutation_examples() {
        assert_eq!(
            standard_permutation(b"bcbccbcbcabbaaba", &id()).unwrap().to_one_based(),
            vec![10, 13, 14, 16, 1, 3, 6, 8, 11, 12, 15, 2, 4, 5, 7, 9]
        );
        assert_eq!(
            standard_permutation(b"bacbbaaccacbbcbb", &id()).unwrap().to_one_based(),
            vec![2, 6, 7, 10, 1, 4, 5, 12, 13, 15, 16, 3, 8, 9, 11, 14]
        );
        assert_eq!(standard_permutation(b"aaa", &id()).unwrap(), Permutation::identity(3));
        assert!(standard_permutation(b"", &id()).is_err());
    }

    #[test]
    fn cycle_examples() {
        let p = standard_permutation(b"abababaccccbbcbb", &id()).unwrap();
        assert_eq!(
            p.cycles().cycles(),
            &[vec![1], vec![2, 3, 5], vec![4, 7, 6], vec![8, 12], vec![9, 13], vec![10, 15, 11, 16, 14]]
        );
        let p = standard_permutation(b"bbacabaacccbbcbb", &id()).unwrap();
        assert_eq!(
            p.cycles().cycles(),
            &[vec![1, 3, 7, 6, 2, 5], vec![4, 8, 12], vec![9, 13], vec![10, 15, 11, 16, 14]]
        );
        let ident = Permutation::identity(4).cycles();
        assert_eq!(ident.cycles(), &[vec![1], vec![2], vec![3], vec![4]]);
    }

    #[test]
    fn cycles_round_trip() {
        let p = standard_permutation(b"bcbccbcbcabbaaba", &id()).unwrap();
        assert_eq!(p.cycles().to_permutation(), p);
    }

    #[test]
    fn powers_and_inverse() {
        let p = standard_permutation(b"bacbbaaccacbbcbb", &id()).unwrap();
        assert_eq!(p.pow(0), Permutation::identity(16));
        assert_eq!(p.pow(1), p);
        for i in 1..=16 {
            assert_eq!(p.pow(5).apply(i), p.iterate(i, 5));
            assert_eq!(p.inverse().apply(p.apply(i)), i);
        }
        // The cycle through 10 visits the whole word.
        assert_eq!(p.iterate(10, 1), 15);
        assert_eq!(p.iterate(10, 16), 10);
    }

    #[test]
    fn from_one_based_validates() {
        assert!(Permutation::from_one_based(&[2, 1, 3]).is_ok());
        assert!(Permutation::from_one_based(&[2, 2, 3]).is_err());
        assert!(Permutation::from_one_based(&[0, 1]).is_err());
    }

    #[test]
    fn k_order_examples() {
        let class = conjugacy_class(b"bcbccbcbcabbaaba").unwrap();
        assert_eq!(
            k_order_standard_permutation(&class, 2, &id()).unwrap().to_one_based(),
            vec![5, 2, 4, 8, 3, 6, 7, 1, 10, 12, 15, 9, 11, 13, 16, 14]
        );
        assert_eq!(k_order_standard_permutation(&class, 0, &id()).unwrap(), Permutation::identity(16));
        let v: [&[u8]; 3] = [b"b", b"a", b"a"];
        assert_eq!(k_order_standard_permutation(&v, 1, &id()).unwrap().to_one_based(), vec![2, 3, 1]);
        let bad: [&[u8]; 2] = [b"a", b""];
        assert!(k_order_standard_permutation(&bad, 1, &id()).is_err());
    }

    #[test]
    fn lazy_and_materialized_keys_agree() {
        let v: [&[u8]; 5] = [b"ab", b"aba", b"abab", b"a", b"abaab"];
        for k in [MATERIALIZE_LIMIT + 1, 40, 100] {
            let lazy = k_order_standard_permutation(&v, k, &id()).unwrap();
            let mut idx: Vec<usize> = (0..v.len()).collect();
            idx.sort_by_key(|&i| v[i].iter().copied().cycle().take(k).collect::<Vec<u8>>());
            assert_eq!(lazy.as_zero_based(), &idx[..]);
        }
    }
}
