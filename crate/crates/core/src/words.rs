//! Byte-level word primitives.
//!
//! Words are plain byte slices. Every comparison is taken relative to an
//! [`AlphabetOrder`], a total order on the 256 byte values. Positions in
//! public contracts are 1-based; the slices themselves are indexed as usual.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A total order on the byte alphabet, stored as a rank table.
///
/// `rank(b)` is the position of byte `b` in the order; the identity table
/// gives the usual numeric order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AlphabetOrder {
    rank: [u8; 256],
    byte_of_rank: [u8; 256],
}

impl AlphabetOrder {
    pub fn identity() -> Self {
        let mut rank = [0u8; 256];
        for (b, r) in rank.iter_mut().enumerate() {
            *r = b as u8;
        }
        AlphabetOrder { rank, byte_of_rank: rank }
    }

    /// Builds an order from a rank table, `ranks[b]` being the rank of byte `b`.
    pub fn from_ranks(ranks: &[u8]) -> Result<Self> {
        if ranks.len() != 256 {
            return Err(Error::NotAPermutation(format!("rank table has {} entries, expected 256", ranks.len())));
        }
        let mut seen = [false; 256];
        let mut rank = [0u8; 256];
        let mut byte_of_rank = [0u8; 256];
        for (b, &r) in ranks.iter().enumerate() {
            if seen[r as usize] {
                return Err(Error::NotAPermutation(format!("rank {r} assigned twice")));
            }
            seen[r as usize] = true;
            rank[b] = r;
            byte_of_rank[r as usize] = b as u8;
        }
        Ok(AlphabetOrder { rank, byte_of_rank })
    }

    /// Builds an order from the bytes listed smallest first.
    pub fn from_sequence(bytes_ascending: &[u8]) -> Result<Self> {
        if bytes_ascending.len() != 256 {
            return Err(Error::NotAPermutation(format!(
                "sequence has {} entries, expected 256",
                bytes_ascending.len()
            )));
        }
        let mut ranks = [0u8; 256];
        let mut seen = [false; 256];
        for (r, &b) in bytes_ascending.iter().enumerate() {
            if seen[b as usize] {
                return Err(Error::NotAPermutation(format!("byte {b} listed twice")));
            }
            seen[b as usize] = true;
            ranks[b as usize] = r as u8;
        }
        Self::from_ranks(&ranks)
    }

    #[inline]
    pub fn rank(&self, b: u8) -> u8 {
        self.rank[b as usize]
    }

    #[inline]
    pub fn byte_at_rank(&self, r: u8) -> u8 {
        self.byte_of_rank[r as usize]
    }

    /// The rank table, indexed by byte value.
    pub fn ranks(&self) -> &[u8; 256] {
        &self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.rank.iter().enumerate().all(|(b, &r)| b == r as usize)
    }

    #[inline]
    pub fn cmp_bytes(&self, a: u8, b: u8) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }

    /// Maps a word into rank space, where numeric byte order is this order.
    pub(crate) fn to_ranks(&self, w: &[u8]) -> Vec<u8> {
        w.iter().map(|&b| self.rank(b)).collect()
    }

    /// Inverse of [`AlphabetOrder::to_ranks`], in place.
    pub(crate) fn restore_bytes(&self, w: &mut [u8]) {
        for b in w.iter_mut() {
            *b = self.byte_at_rank(*b);
        }
    }
}

impl Default for AlphabetOrder {
    fn default() -> Self {
        Self::identity()
    }
}

impl fmt::Debug for AlphabetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            f.write_str("AlphabetOrder(identity)")
        } else {
            f.debug_tuple("AlphabetOrder").field(&&self.rank[..]).finish()
        }
    }
}

/// Lexicographic comparison, a proper prefix being smaller.
pub fn compare_lex(u: &[u8], v: &[u8], ord: &AlphabetOrder) -> Ordering {
    for (&a, &b) in u.iter().zip(v) {
        match ord.cmp_bytes(a, b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    u.len().cmp(&v.len())
}

/// Compares the infinite powers `u^ω` and `v^ω`.
///
/// Only the first `|u| + |v|` symbols are inspected: if the powers agree that
/// far they agree everywhere, and `u`, `v` are powers of a common word.
pub fn compare_omega(u: &[u8], v: &[u8], ord: &AlphabetOrder) -> Result<Ordering> {
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord("omega order"));
    }
    let (mut i, mut j) = (0, 0);
    for _ in 0..u.len() + v.len() {
        match ord.cmp_bytes(u[i], v[j]) {
            Ordering::Equal => {}
            other => return Ok(other),
        }
        i += 1;
        if i == u.len() {
            i = 0;
        }
        j += 1;
        if j == v.len() {
            j = 0;
        }
    }
    Ok(Ordering::Equal)
}

/// `r^i(w)`: moves the last `i mod n` letters to the front.
pub fn right_shift(w: &[u8], i: usize) -> Result<Vec<u8>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("rotation"));
    }
    let j = i % w.len();
    let split = w.len() - j;
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[split..]);
    out.extend_from_slice(&w[..split]);
    Ok(out)
}

/// The ordered conjugacy class `(w, r(w), ..., r^{n-1}(w))`.
pub fn conjugacy_class(w: &[u8]) -> Result<Vec<Vec<u8>>> {
    if w.is_empty() {
        return Err(Error::EmptyWord("conjugacy class"));
    }
    (0..w.len()).map(|i| right_shift(w, i)).collect()
}

/// The prefix of length `k` of `w^ω`.
pub fn context_of_order(w: &[u8], k: usize) -> Result<Vec<u8>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    if w.is_empty() {
        return Err(Error::EmptyWord("context"));
    }
    Ok(w.iter().copied().cycle().take(k).collect())
}

pub fn reversal(w: &[u8]) -> Vec<u8> {
    w.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: &[u8] = b"bcbccbcbcabbaaba";

    fn id() -> AlphabetOrder {
        AlphabetOrder::identity()
    }

    #[test]
    fn lex_examples() {
        assert_eq!(compare_lex(b"b", b"ba", &id()), Ordering::Less);
        assert_eq!(compare_lex(b"ab", b"ab", &id()), Ordering::Equal);
        assert_eq!(compare_lex(b"abc", b"abd", &id()), Ordering::Less);
        assert_eq!(compare_lex(b"", b"", &id()), Ordering::Equal);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(compare_omega(b"ba", b"b", &id()).unwrap(), Ordering::Less);
        assert_eq!(compare_omega(b"ab", b"abab", &id()).unwrap(), Ordering::Equal);
        assert_eq!(compare_omega(b"aab", b"ab", &id()).unwrap(), Ordering::Less);
        assert_eq!(compare_omega(b"", b"a", &id()).unwrap_err().to_string(), "omega order undefined on empty word");
    }

    #[test]
    fn custom_order_flips_comparison() {
        let seq: Vec<u8> = (0..=255).rev().collect();
        let rev = AlphabetOrder::from_sequence(&seq).unwrap();
        assert_eq!(compare_lex(b"a", b"b", &rev), Ordering::Greater);
        assert_eq!(compare_omega(b"ba", b"b", &rev).unwrap(), Ordering::Greater);
    }

    #[test]
    fn rejects_non_permutation_table() {
        let mut ranks = [0u8; 256];
        ranks[1] = 0;
        assert!(AlphabetOrder::from_ranks(&ranks).is_err());
        assert!(AlphabetOrder::from_ranks(&[0u8; 10]).is_err());
    }

    #[test]
    fn shifts() {
        assert_eq!(right_shift(b"bcbcc", 1).unwrap(), b"cbcbc");
        assert_eq!(right_shift(b"bcbcc", 5).unwrap(), b"bcbcc");
        assert_eq!(right_shift(b"abc", 2).unwrap(), b"bca");
        assert!(right_shift(b"", 1).is_err());
    }

    #[test]
    fn conjugacy_classes() {
        assert_eq!(conjugacy_class(b"ab").unwrap(), vec![b"ab".to_vec(), b"ba".to_vec()]);
        assert_eq!(conjugacy_class(b"aa").unwrap(), vec![b"aa".to_vec(), b"aa".to_vec()]);
        let class = conjugacy_class(W).unwrap();
        assert_eq!(class.len(), 16);
        assert_eq!(class[0], W);
        assert_eq!(class[1], b"abcbccbcbcabbaab");
        assert_eq!(class[8], b"cabbaababcbccbcb");
        assert_eq!(class[15], b"cbccbcbcabbaabab");
    }

    #[test]
    fn contexts() {
        assert_eq!(context_of_order(b"bcbcc", 7).unwrap(), b"bcbccbc");
        assert_eq!(context_of_order(b"bc", 7).unwrap(), b"bcbcbcb");
        assert_eq!(context_of_order(b"abc", 0).unwrap(), b"");
        assert_eq!(context_of_order(b"", 0).unwrap(), b"");
        assert!(context_of_order(b"", 3).is_err());
    }

    #[test]
    fn reversals() {
        assert_eq!(reversal(b"abc"), b"cba");
        assert_eq!(reversal(b""), b"");
        assert_eq!(reversal(W), b"abaabbacbcbccbcb");
    }
}
