//! The bijective Burrows-Wheeler transform (BWTS): the Lyndon factors'
//! conjugacy classes pooled and sorted by the ω-order, last letters read off.
//! No index is needed to invert it.

use crate::lyndon::{duval, LyndonFactorization};
use crate::permutation::standard_permutation_ranks;
use crate::rotsort::ClassList;
use crate::words::AlphabetOrder;

/// One row of the ω-sorted list of conjugates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaEntry {
    pub word: Vec<u8>,
    /// 1-based factor ordinal counted from the smallest factor `v_1`.
    pub source_factor: usize,
    /// The entry is `r^shift(v_source_factor)`.
    pub shift: usize,
}

/// The list `LM(w)`: all rotations of all Lyndon factors, sorted by the
/// ω-order with ties in (factor ordinal, shift) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSortedConjugates {
    pub entries: Vec<OmegaEntry>,
}

impl OmegaSortedConjugates {
    pub fn last_letters(&self) -> Vec<u8> {
        self.entries.iter().map(|e| *e.word.last().expect("conjugates are nonempty")).collect()
    }
}

/// Class list of the Lyndon factors `[v_1], ..., [v_s]` of a rank-space word.
pub(crate) fn factor_classes(ranks: &[u8]) -> ClassList {
    let bounds = duval(ranks);
    ClassList::new(bounds.iter().rev().map(|r| &ranks[r.clone()]))
}

/// Order at which context comparison of any two factor rotations coincides
/// with ω-comparison.
fn omega_order(len: usize) -> usize {
    2 * len
}

pub fn omega_sorted_conjugates(w: &[u8], ord: &AlphabetOrder) -> OmegaSortedConjugates {
    let ranks = ord.to_ranks(w);
    let bounds = duval(&ranks);
    let list = factor_classes(&ranks);
    let rows = list.sort(omega_order(w.len()));
    // Segment start offsets of v_1, v_2, ... inside the class list.
    let factors: Vec<&[u8]> = bounds.iter().rev().map(|r| &w[r.clone()]).collect();
    let mut starts = Vec::with_capacity(factors.len());
    let mut acc = 0;
    for f in &factors {
        starts.push(acc);
        acc += f.len();
    }
    let entries = rows
        .iter()
        .map(|&p| {
            let idx = list.list_index(p);
            let j = starts.partition_point(|&s| s <= idx) - 1;
            let shift = idx - starts[j];
            let v = factors[j];
            let split = v.len() - shift;
            let mut word = v[split..].to_vec();
            word.extend_from_slice(&v[..split]);
            OmegaEntry { word, source_factor: j + 1, shift }
        })
        .collect();
    OmegaSortedConjugates { entries }
}

pub fn bwts_forward(w: &[u8], ord: &AlphabetOrder) -> Vec<u8> {
    if w.is_empty() {
        return Vec::new();
    }
    let ranks = ord.to_ranks(w);
    let list = factor_classes(&ranks);
    let (rows, rank) = list.sort_ranked(omega_order(w.len()));
    let mut out = list.last_column(&rows);
    // ω-equal rotations share a primitive root, hence their last letter.
    debug_assert!(rows.windows(2).zip(out.windows(2)).all(|(r, l)| rank[r[0]] != rank[r[1]] || l[0] == l[1]));
    ord.restore_bytes(&mut out);
    out
}

/// Decodes the cycles of `π_L`: the cycle with the `j`-th smallest minimum
/// spells the Lyndon factor `v_j` when read from the element after it.
pub fn recover_lyndon_factors(l: &[u8], ord: &AlphabetOrder) -> LyndonFactorization {
    let pi = standard_permutation_ranks(&ord.to_ranks(l));
    let n = l.len();
    let mut visited = vec![false; n];
    let mut letters = Vec::with_capacity(n);
    let mut ends = Vec::new();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut p = start;
        loop {
            p = pi[p];
            visited[p] = true;
            letters.push(l[p]);
            if p == start {
                break;
            }
        }
        ends.push(letters.len());
    }
    // Factors were produced v_1 first; lay them out v_t ... v_1.
    let mut word = Vec::with_capacity(n);
    let mut bounds = Vec::with_capacity(ends.len());
    for j in (0..ends.len()).rev() {
        let begin = if j == 0 { 0 } else { ends[j - 1] };
        let at = word.len();
        word.extend_from_slice(&letters[begin..ends[j]]);
        bounds.push(at..word.len());
    }
    LyndonFactorization::from_parts(word, bounds)
}

pub fn bwts_inverse(l: &[u8], ord: &AlphabetOrder) -> Vec<u8> {
    recover_lyndon_factors(l, ord).word().to_vec()
}
