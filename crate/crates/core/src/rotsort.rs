//! Context sorting of rotations.
//!
//! Every forward transform here sorts the rotations of one or more cyclic
//! words by their k-order contexts, breaking ties by the rotation's index in
//! the list `([u_1], ..., [u_s])` of ordered conjugacy classes. This module
//! does that by prefix doubling over the cycles: after each round the rank
//! of a position is the rank of its `t`-order context, and two ranks at
//! distance `h <= t` give the rank of the `(t + h)`-order context.

/// A list of ordered conjugacy classes `([u_1], ..., [u_s])`, with the words
/// `u_j` stored back to back in rank space.
pub(crate) struct ClassList {
    text: Vec<u8>,
    segment_of: Vec<u32>,
    segments: Vec<(usize, usize)>,
}

impl ClassList {
    /// `words` are the generating words `u_1, ..., u_s` in list order.
    pub(crate) fn new<'a>(words: impl IntoIterator<Item = &'a [u8]>) -> Self {
        let mut text = Vec::new();
        let mut segment_of = Vec::new();
        let mut segments = Vec::new();
        for w in words {
            debug_assert!(!w.is_empty());
            let id = segments.len() as u32;
            segments.push((text.len(), w.len()));
            text.extend_from_slice(w);
            segment_of.extend(std::iter::repeat_n(id, w.len()));
        }
        ClassList { text, segment_of, segments }
    }

    pub(crate) fn len(&self) -> usize {
        self.text.len()
    }

    /// The position `h` steps further along the cycle through `p`.
    #[inline]
    fn advance(&self, p: usize, h: usize) -> usize {
        let (s, l) = self.segments[self.segment_of[p] as usize];
        s + (p - s + h % l) % l
    }

    /// Index in the class list of the rotation starting at `p`. The class
    /// `[u] = (u, r(u), r^2(u), ...)` and `r^j(u)` starts at offset `-j mod |u|`.
    #[inline]
    pub(crate) fn list_index(&self, p: usize) -> usize {
        let (s, l) = self.segments[self.segment_of[p] as usize];
        s + (l - (p - s)) % l
    }

    /// Last letter of the rotation starting at `p`.
    #[inline]
    pub(crate) fn last_letter(&self, p: usize) -> u8 {
        let (_, l) = self.segments[self.segment_of[p] as usize];
        self.text[self.advance(p, l - 1)]
    }

    /// Orders beyond this bound cannot change the relative order of two
    /// rotations: two periodic sequences with periods `p, q` that agree on
    /// `p + q` symbols agree everywhere.
    fn effective_order(&self, k: usize) -> usize {
        let longest = self.segments.iter().map(|&(_, l)| l).max().unwrap_or(0);
        if self.segments.len() == 1 {
            k.min(longest)
        } else {
            k.min(2 * longest)
        }
    }

    /// Rank of each position's k-order context; equal contexts get equal
    /// ranks and the ranks respect the context order.
    pub(crate) fn context_ranks(&self, k: usize) -> Vec<u32> {
        let n = self.len();
        let k = self.effective_order(k);
        if k == 0 {
            return vec![0; n];
        }
        let mut rank: Vec<u32> = self.text.iter().map(|&b| b as u32).collect();
        let mut distinct = {
            let mut seen = [false; 256];
            self.text.iter().for_each(|&b| seen[b as usize] = true);
            seen.iter().filter(|&&s| s).count()
        };
        let mut t = 1;
        let mut keyed: Vec<(u64, u32)> = Vec::with_capacity(n);
        while t < k && distinct < n {
            let h = t.min(k - t);
            keyed.clear();
            keyed.extend((0..n).map(|p| {
                let key = (rank[p] as u64) << 32 | rank[self.advance(p, h)] as u64;
                (key, p as u32)
            }));
            keyed.sort_unstable();
            let mut r = 0u32;
            for i in 0..n {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    r += 1;
                }
                rank[keyed[i].1 as usize] = r;
            }
            distinct = r as usize + 1;
            t += h;
        }
        rank
    }

    /// Rows of `M_k`: the start position of each row's rotation, in row order.
    pub(crate) fn sort(&self, k: usize) -> Vec<usize> {
        self.sort_ranked(k).0
    }

    /// Like [`ClassList::sort`], also returning the context rank of each
    /// position.
    pub(crate) fn sort_ranked(&self, k: usize) -> (Vec<usize>, Vec<u32>) {
        let rank = self.context_ranks(k);
        let mut keyed: Vec<u64> = (0..self.len()).map(|p| (rank[p] as u64) << 32 | self.list_index(p) as u64).collect();
        keyed.sort_unstable();
        // Undo the list index to recover the start position of each row.
        let mut start_of_index = vec![0usize; self.len()];
        for p in 0..self.len() {
            start_of_index[self.list_index(p)] = p;
        }
        let rows = keyed.into_iter().map(|key| start_of_index[(key & 0xffff_ffff) as usize]).collect();
        (rows, rank)
    }

    /// Last letters of the rows of `M_k`, still in rank space.
    pub(crate) fn last_column(&self, rows: &[usize]) -> Vec<u8> {
        rows.iter().map(|&p| self.last_letter(p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_word_context_two() {
        let w = b"bcbccbcbcabbaaba";
        let list = ClassList::new([&w[..]]);
        let rows = list.sort(2);
        assert_eq!(list.last_column(&rows), b"bbacabaacccbbcbb");
        // Row 8 holds the word itself.
        assert_eq!(rows.iter().position(|&p| p == 0), Some(7));
    }

    #[test]
    fn order_zero_is_list_order() {
        let list = ClassList::new([&b"abc"[..], &b"d"[..]]);
        let rows = list.sort(0);
        let idx: Vec<usize> = rows.iter().map(|&p| list.list_index(p)).collect();
        assert_eq!(idx, vec![0, 1, 2, 3]);
        assert_eq!(list.last_column(&rows), b"cbad");
    }

    #[test]
    fn huge_order_is_capped() {
        let w = b"abaab";
        let list = ClassList::new([&w[..]]);
        assert_eq!(list.sort(5), list.sort(1_000_000));
    }
}
