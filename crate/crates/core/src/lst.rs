//! The bijective sort transform `LST_k`.
//!
//! Forward: Lyndon-factorize `w = v_s ... v_1`, list the ordered conjugacy
//! classes `[v_1], ..., [v_s]` (smallest factor first), stable-sort that list
//! by k-order context and read the last letters. The tie-break is the global
//! position in the class list; the inverse depends on it.
//!
//! Inverse: rebuild the context graph, start at the context of row 1 and
//! keep taking the smallest unused edge at the current vertex, jumping to the
//! globally smallest unused edge whenever the current vertex is used up.

use crate::bwts::factor_classes;
use crate::context_graph::{ContextGraph, EdgeStep};
use crate::words::AlphabetOrder;

pub fn lst_forward(w: &[u8], k: usize, ord: &AlphabetOrder) -> Vec<u8> {
    if w.is_empty() {
        return Vec::new();
    }
    let ranks = ord.to_ranks(w);
    let list = factor_classes(&ranks);
    let rows = list.sort(k);
    let mut out = list.last_column(&rows);
    ord.restore_bytes(&mut out);
    out
}

fn drive(l: &[u8], k: usize, ord: &AlphabetOrder, mut on_step: impl FnMut(EdgeStep)) {
    if l.is_empty() {
        return;
    }
    let graph = ContextGraph::build(l, k, ord).expect("nonempty last column");
    let mut conf = graph.configuration(graph.context_of_row(1));
    while let Some(step) = graph.smallest_edge_step(&mut conf).or_else(|| graph.global_smallest_edge_step(&mut conf)) {
        on_step(step);
    }
    debug_assert!(conf.is_exhausted());
}

pub fn lst_inverse(l: &[u8], k: usize, ord: &AlphabetOrder) -> Vec<u8> {
    let mut out = vec![0u8; l.len()];
    let mut slot = l.len();
    drive(l, k, ord, |step| {
        slot -= 1;
        out[slot] = step.letter;
    });
    assert_eq!(slot, 0, "every edge is consumed exactly once");
    out
}

/// The inverse together with the edge labels in the order they were taken.
pub fn lst_inverse_traced(l: &[u8], k: usize, ord: &AlphabetOrder) -> (Vec<u8>, Vec<usize>) {
    let mut labels = Vec::with_capacity(l.len());
    let mut emission = Vec::with_capacity(l.len());
    drive(l, k, ord, |step| {
        labels.push(step.label);
        emission.push(step.letter);
    });
    emission.reverse();
    (emission, labels)
}
