//! Brute-force reference implementations used as differential oracles.
//!
//! Everything here materializes full rotation lists and sorts them with
//! plain comparisons. Quadratic or worse; only meant for small inputs.

use std::cmp::Ordering;

use thiserror::Error;

use crate::error::Result;
use crate::words::{compare_lex, conjugacy_class, context_of_order, AlphabetOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixMode {
    /// Full lexicographic order of the rotations.
    Lex,
    /// Stable sort by k-order context.
    Context(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveMatrix {
    pub rows: Vec<Vec<u8>>,
    /// 1-based index of each row's rotation in the conjugacy class.
    pub row_labels: Vec<usize>,
    pub last_column: Vec<u8>,
    /// 1-based row holding the input word.
    pub index: usize,
}

fn ranked(w: &[u8], ord: &AlphabetOrder) -> Vec<u8> {
    w.iter().map(|&b| ord.rank(b)).collect()
}

pub fn naive_matrix_transform(w: &[u8], mode: MatrixMode, ord: &AlphabetOrder) -> Result<NaiveMatrix> {
    let class = conjugacy_class(w)?;
    let mut idx: Vec<usize> = (0..class.len()).collect();
    match mode {
        MatrixMode::Lex => idx.sort_by(|&a, &b| compare_lex(&class[a], &class[b], ord)),
        MatrixMode::Context(k) => {
            let keys: Vec<Vec<u8>> =
                class.iter().map(|r| ranked(&context_of_order(r, k).expect("nonempty rotation"), ord)).collect();
            idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
        }
    }
    let rows: Vec<Vec<u8>> = idx.iter().map(|&i| class[i].clone()).collect();
    let last_column = rows.iter().map(|r| *r.last().unwrap()).collect();
    let index = idx.iter().position(|&i| i == 0).unwrap() + 1;
    Ok(NaiveMatrix { rows, row_labels: idx.iter().map(|&i| i + 1).collect(), last_column, index })
}

/// Lyndon test by enumerating all rotations.
pub fn naive_is_lyndon(w: &[u8], ord: &AlphabetOrder) -> bool {
    match conjugacy_class(w) {
        Ok(class) => class[1..].iter().all(|r| compare_lex(w, r, ord) == Ordering::Less),
        Err(_) => false,
    }
}

/// Repeatedly strips the longest Lyndon prefix.
pub fn naive_lyndon_factorization(w: &[u8], ord: &AlphabetOrder) -> Vec<Vec<u8>> {
    let mut rest = w;
    let mut out = Vec::new();
    while !rest.is_empty() {
        let len =
            (1..=rest.len()).rev().find(|&l| naive_is_lyndon(&rest[..l], ord)).expect("a single letter is Lyndon");
        out.push(rest[..len].to_vec());
        rest = &rest[len..];
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Bwts,
    Lst(usize),
}

/// The list `([v_1], ..., [v_s])` of the Lyndon factors' conjugacy classes.
pub fn naive_class_list(w: &[u8], ord: &AlphabetOrder) -> Vec<Vec<u8>> {
    naive_lyndon_factorization(w, ord)
        .iter()
        .rev()
        .flat_map(|v| conjugacy_class(v).expect("factors are nonempty"))
        .collect()
}

/// BWTS sorts the class list by prefixes of length `2 * maxlen` of the
/// infinite powers; LST_k sorts it by k-order contexts. Both sorts are
/// stable, so list position breaks ties.
pub fn naive_bijective_transform(w: &[u8], variant: Variant, ord: &AlphabetOrder) -> Vec<u8> {
    let list = naive_class_list(w, ord);
    let depth = match variant {
        Variant::Bwts => 2 * list.iter().map(Vec::len).max().unwrap_or(0),
        Variant::Lst(k) => k,
    };
    let keys: Vec<Vec<u8>> = list.iter().map(|u| ranked(&context_of_order(u, depth).unwrap(), ord)).collect();
    let mut idx: Vec<usize> = (0..list.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    idx.iter().map(|&i| *list[i].last().unwrap()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget exceeded (length {len}, {distinct} distinct bytes)")]
    OverBudget { len: usize, distinct: usize },
    #[error("no preimage found")]
    NoPreimage,
    #[error("{0} preimages found")]
    MultiplePreimages(usize),
}

/// Finds the unique preimage of `l` by trying every arrangement of its bytes.
pub fn invert_by_search(l: &[u8], variant: Variant, ord: &AlphabetOrder) -> std::result::Result<Vec<u8>, SearchError> {
    let mut letters = l.to_vec();
    letters.sort_unstable();
    let mut distinct = letters.clone();
    distinct.dedup();
    if l.len() > 12 || distinct.len() > 3 {
        return Err(SearchError::OverBudget { len: l.len(), distinct: distinct.len() });
    }
    let mut found = Vec::new();
    loop {
        if naive_bijective_transform(&letters, variant, ord) == l {
            found.push(letters.clone());
        }
        if !next_permutation(&mut letters) {
            break;
        }
    }
    match found.len() {
        0 => Err(SearchError::NoPreimage),
        1 => Ok(found.pop().unwrap()),
        n => Err(SearchError::MultiplePreimages(n)),
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
