//! The Burrows-Wheeler transform with rotation index, under the right-shift
//! convention, and the context reconstruction it shares with the sort
//! transform.

use crate::error::{Error, Result};
use crate::permutation::standard_permutation_ranks;
use crate::rotsort::ClassList;
use crate::words::AlphabetOrder;

/// A last column `L` together with the 1-based row of the input word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexedTransform {
    pub last_column: Vec<u8>,
    pub index: usize,
}

impl IndexedTransform {
    pub fn new(last_column: impl Into<Vec<u8>>, index: usize) -> Self {
        IndexedTransform { last_column: last_column.into(), index }
    }

    pub(crate) fn check_index(&self) -> Result<()> {
        let len = self.last_column.len();
        if self.index == 0 || self.index > len {
            return Err(Error::IndexOutOfRange { index: self.index, len });
        }
        Ok(())
    }
}

/// Sorts the rotations of a single word by `k`-order context, returning the
/// transform in the caller's alphabet.
pub(crate) fn sort_single_word(w: &[u8], k: usize, ord: &AlphabetOrder) -> IndexedTransform {
    let ranks = ord.to_ranks(w);
    let list = ClassList::new([&ranks[..]]);
    let rows = list.sort(k);
    let mut last_column = list.last_column(&rows);
    ord.restore_bytes(&mut last_column);
    // The word itself is the rotation starting at 0; among equal rotations it
    // has the smallest list index, so it is the first of them.
    let index = rows.iter().position(|&p| p == 0).expect("row of the input") + 1;
    IndexedTransform { last_column, index }
}

pub fn bwt_forward(w: &[u8], ord: &AlphabetOrder) -> Result<IndexedTransform> {
    if w.is_empty() {
        return Err(Error::EmptyWord("BWT"));
    }
    Ok(sort_single_word(w, w.len(), ord))
}

/// Inverts `(L, i)` by reading `λ_L π_L(i), λ_L π_L^2(i), ...`.
///
/// Pairs outside the image of the transform are not detected; they decode
/// to some word whose transform differs from the input.
pub fn bwt_inverse(t: &IndexedTransform, ord: &AlphabetOrder) -> Result<Vec<u8>> {
    t.check_index()?;
    let pi = standard_permutation_ranks(&ord.to_ranks(&t.last_column));
    let l = &t.last_column;
    let mut p = t.index - 1;
    let mut out = Vec::with_capacity(l.len());
    for _ in 0..l.len() {
        p = pi[p];
        out.push(l[p]);
    }
    Ok(out)
}

/// Inverts `(L, i)` from right to left with `π_L^{-1}`: the last letter of
/// row `i` is `λ_L(i)`, the one before it `λ_L π_L^{-1}(i)`, and so on.
pub fn bwt_inverse_right_to_left(t: &IndexedTransform, ord: &AlphabetOrder) -> Result<Vec<u8>> {
    t.check_index()?;
    let pi = standard_permutation_ranks(&ord.to_ranks(&t.last_column));
    let mut inv = vec![0; pi.len()];
    for (i, &p) in pi.iter().enumerate() {
        inv[p] = i;
    }
    let l = &t.last_column;
    let mut out = vec![0; l.len()];
    let mut p = t.index - 1;
    for slot in out.iter_mut().rev() {
        *slot = l[p];
        p = inv[p];
    }
    Ok(out)
}

/// The k-order context of every row of a context-sorted conjugate list with
/// last column `L`: `context_k(row i) = λ_L π_L(i) ... λ_L π_L^k(i)`.
pub fn reconstruct_contexts(l: &[u8], k: usize, ord: &AlphabetOrder) -> Result<Vec<Vec<u8>>> {
    if l.is_empty() && k > 0 {
        return Err(Error::EmptyWord("context reconstruction"));
    }
    let pi = standard_permutation_ranks(&ord.to_ranks(l));
    Ok((0..l.len())
        .map(|i| {
            let mut p = i;
            (0..k)
                .map(|_| {
                    p = pi[p];
                    l[p]
                })
                .collect()
        })
        .collect())
}
