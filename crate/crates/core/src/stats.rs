//! Compressibility proxies for transformed blocks: run counts, move-to-front
//! zero fraction and the order-0 entropy of the move-to-front output.

use std::fmt;
use std::io::Read;

use rayon::prelude::*;

use crate::container::{encode_block, ContainerError, EncodeOptions};
use crate::words::reversal;

/// Number of maximal runs of equal adjacent bytes; 0 for the empty slice.
pub fn count_runs(data: &[u8]) -> usize {
    if data.is_empty() {
        return 0;
    }
    1 + data.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Move-to-front coding starting from the list `0, 1, ..., 255`.
pub fn move_to_front(data: &[u8]) -> Vec<u8> {
    let mut table: [u8; 256] = std::array::from_fn(|i| i as u8);
    data.iter()
        .map(|&b| {
            let pos = table.iter().position(|&t| t == b).expect("every byte is in the table");
            table.copy_within(0..pos, 1);
            table[0] = b;
            pos as u8
        })
        .collect()
}

fn histogram(data: &[u8]) -> [u64; 256] {
    let mut h = [0u64; 256];
    for &b in data {
        h[b as usize] += 1;
    }
    h
}

fn entropy_of(h: &[u64; 256]) -> f64 {
    let total: u64 = h.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let n = total as f64;
    h.iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.log2()
        })
        .sum()
}

/// Order-0 empirical entropy in bits per byte.
pub fn order0_entropy(data: &[u8]) -> f64 {
    entropy_of(&histogram(data))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockStats {
    pub len: usize,
    pub input_runs: usize,
    pub output_runs: usize,
    /// Fraction of zeros in the move-to-front coding of the output.
    pub mtf_zero_fraction: f64,
    /// Order-0 entropy of the move-to-front output, bits per byte.
    pub mtf_entropy: f64,
    pub index_bytes_avoided: usize,
    mtf_histogram: [u64; 256],
}

impl BlockStats {
    pub fn compute(input: &[u8], output: &[u8], indexed: bool) -> Self {
        let mtf = move_to_front(output);
        let mtf_histogram = histogram(&mtf);
        BlockStats {
            len: input.len(),
            input_runs: count_runs(input),
            output_runs: count_runs(output),
            mtf_zero_fraction: zero_fraction(&mtf_histogram),
            mtf_entropy: entropy_of(&mtf_histogram),
            index_bytes_avoided: if indexed { 0 } else { 4 },
            mtf_histogram,
        }
    }
}

fn zero_fraction(h: &[u64; 256]) -> f64 {
    let total: u64 = h.iter().sum();
    if total == 0 {
        0.0
    } else {
        h[0] as f64 / total as f64
    }
}

/// Per-block figures and their totals. Runs are summed per block, so a run
/// crossing a block boundary counts once in each block; the MTF figures of
/// the total are taken over the pooled MTF output of all blocks.
#[derive(Debug, Clone, PartialEq)]
pub struct StatsReport {
    pub options: EncodeOptions,
    pub reversed: bool,
    pub blocks: Vec<BlockStats>,
    pub total: BlockStats,
}

impl StatsReport {
    fn from_blocks(options: EncodeOptions, reversed: bool, blocks: Vec<BlockStats>) -> Self {
        let mut h = [0u64; 256];
        for b in &blocks {
            for (acc, c) in h.iter_mut().zip(b.mtf_histogram.iter()) {
                *acc += c;
            }
        }
        let total = BlockStats {
            len: blocks.iter().map(|b| b.len).sum(),
            input_runs: blocks.iter().map(|b| b.input_runs).sum(),
            output_runs: blocks.iter().map(|b| b.output_runs).sum(),
            mtf_zero_fraction: zero_fraction(&h),
            mtf_entropy: entropy_of(&h),
            index_bytes_avoided: blocks.iter().map(|b| b.index_bytes_avoided).sum(),
            mtf_histogram: h,
        };
        StatsReport { options, reversed, blocks, total }
    }
}

/// Transforms `input` block by block exactly as the encoder would (or its
/// per-block reversal when `reversed` is set) and reports the statistics.
pub fn stats<R: Read>(mut input: R, opts: &EncodeOptions, reversed: bool) -> Result<StatsReport, ContainerError> {
    opts.validate()?;
    let mut data = Vec::new();
    input.read_to_end(&mut data)?;
    let blocks = data
        .par_chunks(opts.block_size)
        .map(|chunk| {
            let src = if reversed { reversal(chunk) } else { chunk.to_vec() };
            let block = encode_block(&src, opts.transform, opts.order_k, &opts.alphabet);
            BlockStats::compute(&src, &block.payload, opts.transform.is_indexed())
        })
        .collect();
    Ok(StatsReport::from_blocks(opts.clone(), reversed, blocks))
}

impl fmt::Display for StatsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "transform {}", self.options.transform)?;
        if self.options.transform.takes_order() {
            write!(f, " order {}", self.options.order_k)?;
        }
        writeln!(f, " block-size {}{}", self.options.block_size, if self.reversed { " reversed" } else { "" })?;
        writeln!(f, "block\tlen\truns_in\truns_out\tmtf_zero\tmtf_entropy\tindex_avoided")?;
        let row = |f: &mut fmt::Formatter<'_>, name: &str, b: &BlockStats| {
            writeln!(
                f,
                "{name}\t{}\t{}\t{}\t{:.6}\t{:.6}\t{}",
                b.len, b.input_runs, b.output_runs, b.mtf_zero_fraction, b.mtf_entropy, b.index_bytes_avoided
            )
        };
        for (i, b) in self.blocks.iter().enumerate() {
            row(f, &i.to_string(), b)?;
        }
        row(f, "total", &self.total)
    }
}
