//! Lyndon words and the Chen-Fox-Lyndon factorization (Duval's algorithm).

use std::ops::Range;

use crate::error::{Error, Result};
use crate::words::AlphabetOrder;

/// The factorization `w = v_s ... v_1` into a non-increasing sequence of
/// Lyndon words. Factors are kept in text order, so `factors().next()` is
/// `v_s` and the last factor is `v_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonFactorization {
    word: Vec<u8>,
    bounds: Vec<Range<usize>>,
}

impl LyndonFactorization {
    pub(crate) fn from_parts(word: Vec<u8>, bounds: Vec<Range<usize>>) -> Self {
        debug_assert_eq!(bounds.last().map_or(0, |r| r.end), word.len());
        LyndonFactorization { word, bounds }
    }

    /// Number of factors `s`.
    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn total_length(&self) -> usize {
        self.word.len()
    }

    /// Factors in text order (`v_s` first).
    pub fn factors(&self) -> impl DoubleEndedIterator<Item = &[u8]> + ExactSizeIterator + '_ {
        self.bounds.iter().map(move |r| &self.word[r.clone()])
    }

    /// Factors in increasing order (`v_1` first).
    pub fn factors_increasing(&self) -> impl Iterator<Item = &[u8]> + '_ {
        self.factors().rev()
    }

    /// Byte ranges of the factors within the word, in text order.
    pub fn ranges(&self) -> &[Range<usize>] {
        &self.bounds
    }

    pub fn to_vecs(&self) -> Vec<Vec<u8>> {
        self.factors().map(<[u8]>::to_vec).collect()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }
}

/// Duval's algorithm on a word whose byte values already encode the order.
/// Returns factor ranges in text order.
pub(crate) fn duval(s: &[u8]) -> Vec<Range<usize>> {
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(i..i + period);
            i += period;
        }
    }
    out
}

pub fn lyndon_factorization(w: &[u8], ord: &AlphabetOrder) -> LyndonFactorization {
    let bounds = duval(&ord.to_ranks(w));
    LyndonFactorization { word: w.to_vec(), bounds }
}

/// True iff `w` is strictly smaller than each of its nontrivial rotations.
pub fn is_lyndon(w: &[u8], ord: &AlphabetOrder) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord("Lyndon test"));
    }
    let bounds = duval(&ord.to_ranks(w));
    Ok(bounds.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::compare_lex;

    fn factors(w: &[u8]) -> Vec<Vec<u8>> {
        lyndon_factorization(w, &AlphabetOrder::identity()).to_vecs()
    }

    fn strs(v: &[&str]) -> Vec<Vec<u8>> {
        v.iter().map(|s| s.as_bytes().to_vec()).collect()
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(factors(b"bcbccbcbcabbaaba"), strs(&["bcbcc", "bc", "bc", "abb", "aab", "a"]));
        assert_eq!(factors(b"aaa"), strs(&["a", "a", "a"]));
        assert_eq!(factors(b"banana"), strs(&["b", "an", "an", "a"]));
        assert!(factors(b"").is_empty());
    }

    #[test]
    fn lyndon_examples() {
        let id = AlphabetOrder::identity();
        assert!(is_lyndon(b"a", &id).unwrap());
        assert!(is_lyndon(b"aab", &id).unwrap());
        assert!(!is_lyndon(b"aba", &id).unwrap());
        assert!(!is_lyndon(b"aa", &id).unwrap());
        assert!(is_lyndon(b"", &id).is_err());
    }

    #[test]
    fn factors_are_non_increasing() {
        let id = AlphabetOrder::identity();
        let f = lyndon_factorization(b"bcbccbcbcabbaaba", &id);
        let v: Vec<&[u8]> = f.factors().collect();
        for pair in v.windows(2) {
            assert_ne!(compare_lex(pair[0], pair[1], &id), std::cmp::Ordering::Less);
        }
        assert_eq!(f.factors_increasing().next().unwrap(), b"a");
        assert_eq!(f.total_length(), 16);
    }

    #[test]
    fn order_changes_factorization() {
        let rev: Vec<u8> = (0..=255).rev().collect();
        let rev = AlphabetOrder::from_sequence(&rev).unwrap();
        // Under b < a the word ab is no longer Lyndon.
        assert_eq!(lyndon_factorization(b"ab", &rev).to_vecs(), strs(&["a", "b"]));
        assert!(is_lyndon(b"ba", &rev).unwrap());
    }
}
