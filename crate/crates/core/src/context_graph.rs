//! The k-order context graph rebuilt from a last column, and the
//! smallest-edge traversal that inverts the sort transforms.
//!
//! Rows of a context-sorted list keep equal contexts together, so every
//! vertex owns a contiguous range of edge labels. Vertices are numbered in
//! context order and a traversal keeps one cursor per vertex (the smallest
//! unused label leaving it) plus one cursor for the globally smallest unused
//! label. Each step is O(1).

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::permutation::standard_permutation_ranks;
use crate::words::AlphabetOrder;

/// A vertex of the graph. Ids follow the context order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContextId(usize);

impl ContextId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// One traversed edge. Labels are 1-based rows of the sorted list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeStep {
    pub label: usize,
    pub letter: u8,
    pub source: ContextId,
    pub target: ContextId,
}

/// The unused edges plus the current vertex of a traversal.
#[derive(Debug, Clone)]
pub struct Configuration {
    next_label: Vec<u32>,
    first_open: usize,
    current: ContextId,
    remaining: usize,
}

impl Configuration {
    pub fn current(&self) -> ContextId {
        self.current
    }

    /// Number of unused edges.
    pub fn remaining(&self) -> usize {
        self.remaining
    }

    pub fn is_exhausted(&self) -> bool {
        self.remaining == 0
    }
}

/// Labels and letters of a chase, in traversal order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Chase {
    pub labels: Vec<usize>,
    pub emission: Vec<u8>,
}

#[derive(Debug, Clone)]
pub struct ContextGraph {
    order: usize,
    alphabet: AlphabetOrder,
    letters: Vec<u8>,
    pi: Vec<u32>,
    source: Vec<u32>,
    target: Vec<u32>,
    // first_label[c]..first_label[c + 1] are the 0-based labels leaving c
    first_label: Vec<u32>,
}

impl ContextGraph {
    /// Rebuilds `G_k` from the last column `L` of a context-sorted list of
    /// conjugates: vertex of row `i` is `context_k(row i)`, and edge `i` runs
    /// to `context_k(λ_L(i) · context_k(row i))`.
    pub fn build(l: &[u8], k: usize, ord: &AlphabetOrder) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::EmptyWord("context graph"));
        }
        assert!(l.len() < u32::MAX as usize, "block too large for the context graph");
        let ranks = ord.to_ranks(l);
        let pi = standard_permutation_ranks(&ranks);
        let ids = context_ids(&ranks, &pi, k);
        let n = l.len();

        // Row π^{-1}(i) is a right shift of row i, so edge i ends at its context.
        let mut target = vec![0u32; n];
        for (row, &p) in pi.iter().enumerate() {
            target[p] = ids[row];
        }
        let contexts = ids.last().map_or(0, |&c| c as usize + 1);
        let mut first_label = Vec::with_capacity(contexts + 1);
        for (i, &c) in ids.iter().enumerate() {
            if i == 0 || c != ids[i - 1] {
                debug_assert_eq!(c as usize, first_label.len());
                first_label.push(i as u32);
            }
        }
        first_label.push(n as u32);

        Ok(ContextGraph {
            order: k,
            alphabet: ord.clone(),
            letters: l.to_vec(),
            pi: pi.into_iter().map(|p| p as u32).collect(),
            source: ids,
            target,
            first_label,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn num_edges(&self) -> usize {
        self.letters.len()
    }

    pub fn num_contexts(&self) -> usize {
        self.first_label.len() - 1
    }

    /// The vertex of row `label` (1-based).
    pub fn context_of_row(&self, label: usize) -> ContextId {
        ContextId(self.source[label - 1] as usize)
    }

    /// The edge with the given 1-based label.
    pub fn edge(&self, label: usize) -> EdgeStep {
        let i = label - 1;
        EdgeStep {
            label,
            letter: self.letters[i],
            source: ContextId(self.source[i] as usize),
            target: ContextId(self.target[i] as usize),
        }
    }

    /// 1-based labels of the edges leaving `c`, ascending.
    pub fn labels_from(&self, c: ContextId) -> std::ops::Range<usize> {
        self.first_label[c.0] as usize + 1..self.first_label[c.0 + 1] as usize + 1
    }

    /// The context string of a vertex, read off the standard permutation.
    pub fn context(&self, c: ContextId) -> Vec<u8> {
        let mut p = self.first_label[c.0] as usize;
        (0..self.order)
            .map(|_| {
                p = self.pi[p] as usize;
                self.letters[p]
            })
            .collect()
    }

    /// All vertices' contexts in ascending order.
    pub fn contexts(&self) -> Vec<Vec<u8>> {
        (0..self.num_contexts()).map(|c| self.context(ContextId(c))).collect()
    }

    pub fn find_context(&self, ctx: &[u8]) -> Option<ContextId> {
        if ctx.len() != self.order {
            return None;
        }
        let key = self.alphabet.to_ranks(ctx);
        let (mut lo, mut hi) = (0, self.num_contexts());
        while lo < hi {
            let mid = (lo + hi) / 2;
            let probe = self.alphabet.to_ranks(&self.context(ContextId(mid)));
            match probe.cmp(&key) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(ContextId(mid)),
            }
        }
        None
    }

    /// A configuration with every edge unused, positioned at `start`.
    pub fn configuration(&self, start: ContextId) -> Configuration {
        assert!(start.0 < self.num_contexts(), "context id out of range");
        Configuration {
            next_label: self.first_label[..self.num_contexts()].to_vec(),
            first_open: 0,
            current: start,
            remaining: self.num_edges(),
        }
    }

    fn take(&self, label: u32, conf: &mut Configuration) -> EdgeStep {
        let c = self.source[label as usize] as usize;
        debug_assert_eq!(conf.next_label[c], label);
        conf.next_label[c] += 1;
        conf.remaining -= 1;
        let step = self.edge(label as usize + 1);
        conf.current = step.target;
        step
    }

    /// Consumes the smallest unused edge leaving the current vertex, or
    /// returns `None` when no unused edge leaves it.
    pub fn smallest_edge_step(&self, conf: &mut Configuration) -> Option<EdgeStep> {
        let c = conf.current.0;
        let label = conf.next_label[c];
        if label == self.first_label[c + 1] {
            return None;
        }
        Some(self.take(label, conf))
    }

    /// Consumes the globally smallest unused edge wherever it starts, or
    /// returns `None` once every edge is used.
    pub fn global_smallest_edge_step(&self, conf: &mut Configuration) -> Option<EdgeStep> {
        // Labels are consumed in ascending order within each vertex, so the
        // first vertex with an open range holds the global minimum.
        let m = self.num_contexts();
        while conf.first_open < m && conf.next_label[conf.first_open] == self.first_label[conf.first_open + 1] {
            conf.first_open += 1;
        }
        if conf.first_open == m {
            return None;
        }
        let label = conf.next_label[conf.first_open];
        Some(self.take(label, conf))
    }

    pub(crate) fn walk(&self, conf: &mut Configuration, steps: usize, mut on_step: impl FnMut(EdgeStep)) -> Result<()> {
        for completed in 0..steps {
            match self.smallest_edge_step(conf) {
                Some(step) => on_step(step),
                None => return Err(Error::PrematureDeadEnd { completed, expected: steps }),
            }
        }
        Ok(())
    }

    /// Follows `steps` smallest-label edges from `start` over a fresh
    /// configuration.
    pub fn chase_from(&self, start: ContextId, steps: usize) -> Result<Chase> {
        let mut conf = self.configuration(start);
        let mut chase = Chase::default();
        self.walk(&mut conf, steps, |s| {
            chase.labels.push(s.label);
            chase.emission.push(s.letter);
        })?;
        Ok(chase)
    }

    /// Letters emitted by a chase of `steps` transitions from the vertex
    /// labeled `start`. The text they spell is the reversal of the emission.
    pub fn chase(&self, start: &[u8], steps: usize) -> Result<Vec<u8>> {
        let id = self.find_context(start).ok_or(Error::UnknownContext)?;
        Ok(self.chase_from(id, steps)?.emission)
    }

    /// One line per edge: `label<TAB>source<TAB>target<TAB>letter`, labels
    /// ascending. Non-printable bytes are escaped.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let contexts = self.contexts();
        for label in 1..=self.num_edges() {
            let e = self.edge(label);
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                label,
                escape(&contexts[e.source.0]),
                escape(&contexts[e.target.0]),
                escape(&[e.letter])
            );
        }
        out
    }
}

fn escape(bytes: &[u8]) -> String {
    bytes.iter().flat_map(|&b| std::ascii::escape_default(b)).map(char::from).collect()
}

/// Dense ids of the k-order contexts of the rows whose last column has rank
/// text `ranks` and standard permutation `pi`.
///
/// `context_t(i) = λπ(i) · context_{t-1}(π(i))`, and because `π` is
/// increasing on runs of equal `λπ`, the contexts are non-decreasing in `i`
/// for every `t`. Ids can therefore be assigned by comparing neighbours,
/// doubling `t` each round with jumps along the cycles of `π`.
fn context_ids(ranks: &[u8], pi: &[usize], k: usize) -> Vec<u32> {
    let n = ranks.len();
    // Context sequences have period at most n; order 2n settles all comparisons.
    let k = k.min(2 * n);
    if k == 0 {
        return vec![0; n];
    }

    // Lay out each cycle of π contiguously so that π^h is index arithmetic.
    let mut seq = Vec::with_capacity(n);
    let mut at = vec![0u32; n];
    let mut cycle_of = vec![0u32; n];
    let mut cycles: Vec<(usize, usize)> = Vec::new();
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let base = seq.len();
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            at[p] = seq.len() as u32;
            cycle_of[p] = cycles.len() as u32;
            seq.push(p as u32);
            p = pi[p];
        }
        cycles.push((base, seq.len() - base));
    }
    let jump = |i: usize, h: usize| -> usize {
        let (base, len) = cycles[cycle_of[i] as usize];
        seq[base + (at[i] as usize - base + h % len) % len] as usize
    };

    let mut rank: Vec<u32> = pi.iter().map(|&p| ranks[p] as u32).collect();
    let mut distinct = dense_in_place(&mut rank);
    let mut t = 1;
    let mut next = vec![0u32; n];
    while t < k && distinct < n {
        let h = t.min(k - t);
        let mut id = 0u32;
        let mut prev = (rank[0], rank[jump(0, h)]);
        next[0] = 0;
        for i in 1..n {
            let key = (rank[i], rank[jump(i, h)]);
            debug_assert!(key >= prev, "contexts must be sorted by row");
            if key != prev {
                id += 1;
            }
            next[i] = id;
            prev = key;
        }
        std::mem::swap(&mut rank, &mut next);
        distinct = id as usize + 1;
        t += h;
    }
    rank
}

/// Replaces a non-decreasing sequence by dense ids; returns the id count.
fn dense_in_place(v: &mut [u32]) -> usize {
    let mut id = 0;
    let mut prev = v[0];
    for x in v.iter_mut() {
        if *x != prev {
            id += 1;
            prev = *x;
        }
        *x = id;
    }
    id as usize + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id() -> AlphabetOrder {
        AlphabetOrder::identity()
    }

    const ST2: &[u8] = b"bbacabaacccbbcbb";
    const LST2: &[u8] = b"abababaccccbbcbb";

    fn edges(g: &ContextGraph) -> Vec<(String, String)> {
        (1..=g.num_edges())
            .map(|l| {
                let e = g.edge(l);
                (String::from_utf8(g.context(e.source)).unwrap(), String::from_utf8(g.context(e.target)).unwrap())
            })
            .collect()
    }

    fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
        v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn sort_transform_graph() {
        let g = ContextGraph::build(ST2, 2, &id()).unwrap();
        assert_eq!(
            edges(&g),
            pairs(&[
                ("aa", "ba"),
                ("ab", "ba"),
                ("ab", "aa"),
                ("ab", "ca"),
                ("ba", "ab"),
                ("ba", "bb"),
                ("bb", "ab"),
                ("bc", "ab"),
                ("bc", "cb"),
                ("bc", "cb"),
                ("bc", "cb"),
                ("ca", "bc"),
                ("cb", "bc"),
                ("cb", "cc"),
                ("cb", "bc"),
                ("cc", "bc"),
            ])
        );
        assert_eq!(g.edge(8).letter, b'a');
        assert_eq!(g.num_contexts(), 8);
        assert_eq!(g.labels_from(g.find_context(b"bc").unwrap()), 8..12);
    }

    #[test]
    fn bijective_transform_graph() {
        let g = ContextGraph::build(LST2, 2, &id()).unwrap();
        let e = edges(&g);
        assert_eq!(e[0], ("aa".to_string(), "aa".to_string()));
        assert_eq!(e[1], ("aa".to_string(), "ba".to_string()));
        assert_eq!(e[11], ("cb".to_string(), "bc".to_string()));
        assert_eq!(g.num_contexts(), 7);
    }

    #[test]
    fn order_zero_graph_is_one_vertex() {
        let g = ContextGraph::build(b"hello", 0, &id()).unwrap();
        assert_eq!(g.num_contexts(), 1);
        assert_eq!(g.contexts(), vec![Vec::<u8>::new()]);
        let chase = g.chase(b"", 5).unwrap();
        assert_eq!(chase, b"hello");
    }

    #[test]
    fn chase_sort_transform_example() {
        let g = ContextGraph::build(ST2, 2, &id()).unwrap();
        let start = g.find_context(b"bc").unwrap();
        let chase = g.chase_from(start, 16).unwrap();
        assert_eq!(chase.labels, vec![8, 2, 5, 3, 1, 6, 7, 4, 12, 9, 13, 10, 14, 16, 11, 15]);
        assert_eq!(chase.emission, b"abaabbacbcbccbcb");
        assert_eq!(g.chase(b"bc", 1).unwrap(), b"a");
        assert_eq!(g.chase(b"zz", 1).unwrap_err(), Error::UnknownContext);
    }

    #[test]
    fn smallest_edge_steps() {
        let g = ContextGraph::build(ST2, 2, &id()).unwrap();
        let bc = g.find_context(b"bc").unwrap();
        let mut conf = g.configuration(bc);
        let step = g.smallest_edge_step(&mut conf).unwrap();
        assert_eq!((step.letter, step.label), (b'a', 8));
        assert_eq!(conf.current(), g.find_context(b"ab").unwrap());
        for _ in 0..15 {
            g.smallest_edge_step(&mut conf).unwrap();
        }
        assert!(conf.is_exhausted());
        for c in 0..g.num_contexts() {
            conf.current = ContextId(c);
            assert!(g.smallest_edge_step(&mut conf).is_none());
        }
        assert!(g.global_smallest_edge_step(&mut conf).is_none());
    }

    #[test]
    fn global_step_after_dead_end() {
        let g = ContextGraph::build(LST2, 2, &id()).unwrap();
        let aa = g.find_context(b"aa").unwrap();
        let mut conf = g.configuration(aa);
        let labels: Vec<usize> = (0..4).map(|_| g.smallest_edge_step(&mut conf).unwrap().label).collect();
        assert_eq!(labels, vec![1, 2, 5, 3]);
        assert_eq!(conf.current(), aa);
        assert!(g.smallest_edge_step(&mut conf).is_none());
        let step = g.global_smallest_edge_step(&mut conf).unwrap();
        assert_eq!((step.label, step.letter), (4, b'b'));
        assert_eq!(conf.current(), g.find_context(b"ba").unwrap());
    }

    #[test]
    fn dead_end_is_an_error() {
        // Two disjoint cycles under k = 1: the chase from one cannot reach the other.
        let g = ContextGraph::build(b"ab", 1, &id()).unwrap();
        let err = g.chase_from(ContextId(0), 2).unwrap_err();
        assert!(matches!(err, Error::PrematureDeadEnd { completed: 1, .. }));
    }

    #[test]
    fn dump_format() {
        let g = ContextGraph::build(ST2, 2, &id()).unwrap();
        let dump = g.dump();
        let lines: Vec<&str> = dump.lines().collect();
        assert_eq!(lines.len(), 16);
        assert_eq!(lines[7], "8\tbc\tab\ta");
        assert_eq!(lines[11], "12\tca\tbc\tb");
    }

    #[test]
    fn huge_order_matches_capped_order() {
        let l = b"cabbacbbca";
        let a = ContextGraph::build(l, 20, &id()).unwrap();
        let b = ContextGraph::build(l, 1_000, &id()).unwrap();
        assert_eq!(a.source, b.source);
        assert_eq!(a.target, b.target);
    }
}
