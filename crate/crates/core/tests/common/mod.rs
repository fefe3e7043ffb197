//! Helpers shared by the integration tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use xbwt_core::AlphabetOrder;

pub const W: &[u8] = b"bcbccbcbcabbaaba";

pub const SAMPLE: &[u8] = include_bytes!("../data/sample.txt");

pub fn id() -> AlphabetOrder {
    AlphabetOrder::identity()
}

/// Every word of length `n` over `alphabet`, in lexicographic order of
/// letter positions.
pub fn all_words(alphabet: &[u8], n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(alphabet.len().pow(n as u32));
    let mut digits = vec![0usize; n];
    loop {
        out.push(digits.iter().map(|&d| alphabet[d]).collect());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alphabet.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut impl Rng, alphabet: &[u8], max_len: usize) -> Vec<u8> {
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| *alphabet.choose(rng).unwrap()).collect()
}

pub fn random_order(rng: &mut impl Rng) -> AlphabetOrder {
    let mut seq: Vec<u8> = (0..=255).collect();
    seq.shuffle(rng);
    AlphabetOrder::from_sequence(&seq).unwrap()
}

pub fn random_bytes(rng: &mut impl Rng, len: usize) -> Vec<u8> {
    let mut v = vec![0u8; len];
    rng.fill(&mut v[..]);
    v
}

/// A natural-language block of exactly `len` bytes: sentences of the
/// bundled sample in a seeded random order.
pub fn prose(len: usize, seed: u64) -> Vec<u8> {
    let text = std::str::from_utf8(SAMPLE).unwrap();
    let sentences: Vec<&str> =
        text.split_inclusive(['.', '?', '!']).map(str::trim_start).filter(|s| !s.is_empty()).collect();
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(len + 256);
    while out.len() < len {
        out.extend_from_slice(sentences.choose(&mut rng).unwrap().as_bytes());
        out.push(b' ');
    }
    out.truncate(len);
    out
}

/// Proptest settings for integration tests, which have no `src/lib.rs` next
/// to them to anchor a regressions file.
pub fn proptest_config() -> proptest::test_runner::Config {
    proptest::test_runner::Config { failure_persistence: None, ..Default::default() }
}
