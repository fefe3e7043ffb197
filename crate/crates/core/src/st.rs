//! The order-k sort transform with right shifts: rotations are sorted by
//! their k-order contexts only, rotation index breaking ties.

use crate::bwt::{sort_single_word, IndexedTransform};
use crate::context_graph::ContextGraph;
use crate::error::{Error, Result};
use crate::words::AlphabetOrder;

pub fn st_forward(w: &[u8], k: usize, ord: &AlphabetOrder) -> Result<IndexedTransform> {
    if w.is_empty() {
        return Err(Error::EmptyWord("sort transform"));
    }
    Ok(sort_single_word(w, k, ord))
}

/// Rebuilds the context graph of `L`, starts at the context of row `i` and
/// chases `n` smallest-label edges; the emitted letters spell the word
/// backwards.
pub fn st_inverse(t: &IndexedTransform, k: usize, ord: &AlphabetOrder) -> Result<Vec<u8>> {
    t.check_index()?;
    let n = t.last_column.len();
    let graph = ContextGraph::build(&t.last_column, k, ord)?;
    let mut conf = graph.configuration(graph.context_of_row(t.index));
    let mut out = vec![0u8; n];
    let mut slot = n;
    graph
        .walk(&mut conf, n, |step| {
            slot -= 1;
            out[slot] = step.letter;
        })
        .map_err(|e| Error::InvalidStImage(Box::new(e)))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bwt::bwt_forward;
    use crate::words::reversal;

    const W: &[u8] = b"bcbccbcbcabbaaba";

    fn id() -> AlphabetOrder {
        AlphabetOrder::identity()
    }

    #[test]
    fn forward_examples() {
        assert_eq!(st_forward(W, 2, &id()).unwrap(), IndexedTransform::new(*b"bbacabaacccbbcbb", 8));
        assert_eq!(st_forward(b"abc", 0, &id()).unwrap(), IndexedTransform::new(*b"cba", 1));
        assert_eq!(st_forward(W, 16, &id()).unwrap(), bwt_forward(W, &id()).unwrap());
        assert!(st_forward(b"", 1, &id()).is_err());
    }

    #[test]
    fn inverse_examples() {
        let t = IndexedTransform::new(*b"bbacabaacccbbcbb", 8);
        assert_eq!(st_inverse(&t, 2, &id()).unwrap(), W);
        assert_eq!(st_inverse(&IndexedTransform::new(*b"cba", 1), 0, &id()).unwrap(), b"abc");
        assert_eq!(st_inverse(&IndexedTransform::new(*b"ba", 1), 1, &id()).unwrap(), b"ab");
    }

    #[test]
    fn order_zero_is_reversal() {
        for w in [&b"x"[..], b"hello world", W] {
            let t = st_forward(w, 0, &id()).unwrap();
            assert_eq!(t, IndexedTransform::new(reversal(w), 1));
        }
    }

    #[test]
    fn invalid_images() {
        let err = st_inverse(&IndexedTransform::new(*b"ab", 1), 1, &id()).unwrap_err();
        assert!(matches!(err, Error::InvalidStImage(_)));
        assert!(err.to_string().starts_with("invalid ST image"));
        let err = st_inverse(&IndexedTransform::new(*b"ab", 5), 1, &id()).unwrap_err();
        assert_eq!(err, Error::IndexOutOfRange { index: 5, len: 2 });
    }
}
