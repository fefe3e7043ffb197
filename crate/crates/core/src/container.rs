//! Block-framed container for transformed data.
//!
//! Layout, all integers big-endian:
//!
//! ```text
//! header:  "BWTX" | version u8 = 1 | transform u8 | order u16 | flags u8 | [order table, 256 bytes]
//! block:   payload length u32 | [row index u32, BWT and ST only] | payload
//! ```
//!
//! Flag bit 0 marks a custom alphabet order; the table that follows maps each
//! byte value to its rank. Row indices are stored zero-based. Blocks are
//! independent and appear in input order; an empty input has no blocks.

use std::fmt;
use std::io::{self, Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::bwt::{bwt_forward, bwt_inverse, IndexedTransform};
use crate::bwts::{bwts_forward, bwts_inverse};
use crate::error::Error;
use crate::lst::{lst_forward, lst_inverse};
use crate::st::{st_forward, st_inverse};
use crate::words::AlphabetOrder;

pub const MAGIC: [u8; 4] = *b"BWTX";
pub const VERSION: u8 = 1;
pub const DEFAULT_BLOCK_SIZE: usize = 262_144;
pub const FLAG_ORDER_TABLE: u8 = 0x01;
/// Fixed part of the header, without the optional order table.
pub const HEADER_LEN: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u8)]
pub enum Transform {
    Bwt = 0,
    Bwts = 1,
    St = 2,
    Lst = 3,
}

impl Transform {
    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            0 => Some(Transform::Bwt),
            1 => Some(Transform::Bwts),
            2 => Some(Transform::St),
            3 => Some(Transform::Lst),
            _ => None,
        }
    }

    /// Whether blocks carry a row index.
    pub fn is_indexed(self) -> bool {
        matches!(self, Transform::Bwt | Transform::St)
    }

    /// Whether the transform is parameterized by a context order.
    pub fn takes_order(self) -> bool {
        matches!(self, Transform::St | Transform::Lst)
    }

    pub fn name(self) -> &'static str {
        match self {
            Transform::Bwt => "bwt",
            Transform::Bwts => "bwts",
            Transform::St => "st",
            Transform::Lst => "lst",
        }
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Transform {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "bwt" => Ok(Transform::Bwt),
            "bwts" => Ok(Transform::Bwts),
            "st" => Ok(Transform::St),
            "lst" => Ok(Transform::Lst),
            other => Err(format!("unknown transform `{other}` (expected bwt, bwts, st or lst)")),
        }
    }
}

#[derive(Debug, Error)]
pub enum ContainerError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("bad magic {0:02x?}, not a BWTX container")]
    BadMagic([u8; 4]),
    #[error("unsupported container version {0}")]
    UnsupportedVersion(u8),
    #[error("unknown transform id {0}")]
    UnknownTransform(u8),
    #[error("unknown header flags {0:#04x}")]
    UnknownFlags(u8),
    #[error("order {order} given for {transform}, which takes no order")]
    UnexpectedOrder { transform: Transform, order: u16 },
    #[error("alphabet order table is not a byte permutation")]
    InvalidOrderTable,
    #[error("truncated header")]
    TruncatedHeader,
    #[error("truncated block {block}")]
    TruncatedBlock { block: usize },
    #[error("block {block}: row index {index} out of range for payload length {len}")]
    RowIndexOutOfRange { block: usize, index: u32, len: u32 },
    #[error("corrupt block {block}: {source}")]
    CorruptBlock {
        block: usize,
        #[source]
        source: Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainerHeader {
    pub transform: Transform,
    pub order_k: u16,
    /// `None` for the identity order.
    pub alphabet: Option<AlphabetOrder>,
}

impl ContainerHeader {
    pub fn alphabet_order(&self) -> AlphabetOrder {
        self.alphabet.clone().unwrap_or_default()
    }

    pub fn encoded_len(&self) -> usize {
        HEADER_LEN + if self.alphabet.is_some() { 256 } else { 0 }
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        let mut head = [0u8; HEADER_LEN];
        head[..4].copy_from_slice(&MAGIC);
        head[4] = VERSION;
        head[5] = self.transform.id();
        head[6..8].copy_from_slice(&self.order_k.to_be_bytes());
        head[8] = if self.alphabet.is_some() { FLAG_ORDER_TABLE } else { 0 };
        out.write_all(&head)?;
        if let Some(ord) = &self.alphabet {
            out.write_all(ord.ranks())?;
        }
        Ok(())
    }

    pub fn read_from<R: Read>(mut input: R) -> Result<Self, ContainerError> {
        let mut head = [0u8; HEADER_LEN];
        let got = read_full(&mut input, &mut head)?;
        if got >= 4 && head[..4] != MAGIC {
            return Err(ContainerError::BadMagic(head[..4].try_into().unwrap()));
        }
        if got < HEADER_LEN {
            return Err(ContainerError::TruncatedHeader);
        }
        if head[4] != VERSION {
            return Err(ContainerError::UnsupportedVersion(head[4]));
        }
        let transform = Transform::from_id(head[5]).ok_or(ContainerError::UnknownTransform(head[5]))?;
        let order_k = u16::from_be_bytes([head[6], head[7]]);
        if !transform.takes_order() && order_k != 0 {
            return Err(ContainerError::UnexpectedOrder { transform, order: order_k });
        }
        let flags = head[8];
        if flags & !FLAG_ORDER_TABLE != 0 {
            return Err(ContainerError::UnknownFlags(flags));
        }
        let alphabet = if flags & FLAG_ORDER_TABLE != 0 {
            let mut table = [0u8; 256];
            if read_full(&mut input, &mut table)? < 256 {
                return Err(ContainerError::TruncatedHeader);
            }
            Some(AlphabetOrder::from_ranks(&table).map_err(|_| ContainerError::InvalidOrderTable)?)
        } else {
            None
        };
        Ok(ContainerHeader { transform, order_k, alphabet })
    }
}

/// Reads until `buf` is full or the input ends; returns the byte count.
fn read_full<R: Read>(input: &mut R, buf: &mut [u8]) -> io::Result<usize> {
    let mut filled = 0;
    while filled < buf.len() {
        match input.read(&mut buf[filled..]) {
            Ok(0) => break,
            Ok(n) => filled += n,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(filled)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodeOptions {
    pub transform: Transform,
    pub order_k: usize,
    pub block_size: usize,
    pub alphabet: AlphabetOrder,
}

impl EncodeOptions {
    pub fn new(transform: Transform) -> Self {
        EncodeOptions { transform, order_k: 0, block_size: DEFAULT_BLOCK_SIZE, alphabet: AlphabetOrder::identity() }
    }

    pub fn with_order(mut self, k: usize) -> Self {
        self.order_k = k;
        self
    }

    pub fn with_block_size(mut self, block_size: usize) -> Self {
        self.block_size = block_size;
        self
    }

    pub fn with_alphabet(mut self, alphabet: AlphabetOrder) -> Self {
        self.alphabet = alphabet;
        self
    }

    pub fn validate(&self) -> Result<(), ContainerError> {
        if self.block_size == 0 || self.block_size > u32::MAX as usize {
            return Err(ContainerError::Usage(format!(
                "block size must be in 1..={}, got {}",
                u32::MAX,
                self.block_size
            )));
        }
        if !self.transform.takes_order() && self.order_k != 0 {
            return Err(ContainerError::Usage(format!("{} takes no order, got {}", self.transform, self.order_k)));
        }
        if self.order_k > u16::MAX as usize {
            return Err(ContainerError::Usage(format!("order must be at most {}, got {}", u16::MAX, self.order_k)));
        }
        Ok(())
    }

    pub fn header(&self) -> ContainerHeader {
        ContainerHeader {
            transform: self.transform,
            order_k: self.order_k as u16,
            alphabet: (!self.alphabet.is_identity()).then(|| self.alphabet.clone()),
        }
    }
}

/// One block as stored: the transformed bytes and, for indexed transforms,
/// the zero-based row index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub payload: Vec<u8>,
    pub row_index: Option<u32>,
}

impl Block {
    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(&(self.payload.len() as u32).to_be_bytes())?;
        if let Some(i) = self.row_index {
            out.write_all(&i.to_be_bytes())?;
        }
        out.write_all(&self.payload)
    }

    pub fn encoded_len(&self) -> usize {
        4 + self.row_index.map_or(0, |_| 4) + self.payload.len()
    }
}

pub fn encode_block(data: &[u8], transform: Transform, k: usize, ord: &AlphabetOrder) -> Block {
    if data.is_empty() {
        return Block { payload: Vec::new(), row_index: transform.is_indexed().then_some(0) };
    }
    let indexed = |t: IndexedTransform| Block { row_index: Some((t.index - 1) as u32), payload: t.last_column };
    match transform {
        Transform::Bwt => indexed(bwt_forward(data, ord).expect("nonempty block")),
        Transform::St => indexed(st_forward(data, k, ord).expect("nonempty block")),
        Transform::Bwts => Block { payload: bwts_forward(data, ord), row_index: None },
        Transform::Lst => Block { payload: lst_forward(data, k, ord), row_index: None },
    }
}

pub fn decode_block(block: &Block, header: &ContainerHeader) -> Result<Vec<u8>, Error> {
    let ord = header.alphabet_order();
    let k = header.order_k as usize;
    if block.payload.is_empty() {
        return Ok(Vec::new());
    }
    let indexed =
        || IndexedTransform { last_column: block.payload.clone(), index: block.row_index.unwrap_or(0) as usize + 1 };
    match header.transform {
        Transform::Bwt => bwt_inverse(&indexed(), &ord),
        Transform::St => st_inverse(&indexed(), k, &ord),
        Transform::Bwts => Ok(bwts_inverse(&block.payload, &ord)),
        Transform::Lst => Ok(lst_inverse(&block.payload, k, &ord)),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct StreamSummary {
    pub blocks: usize,
    pub input_bytes: u64,
    pub output_bytes: u64,
}

/// Splits the input into `block_size` chunks, transforms them (several at a
/// time on the rayon pool) and writes header and blocks in input order.
pub fn encode_stream<R: Read, W: Write>(
    mut input: R,
    mut output: W,
    opts: &EncodeOptions,
) -> Result<StreamSummary, ContainerError> {
    opts.validate()?;
    let header = opts.header();
    header.write_to(&mut output)?;
    let mut summary = StreamSummary { output_bytes: header.encoded_len() as u64, ..Default::default() };
    let batch = rayon::current_num_threads().max(1);
    let mut done = false;
    while !done {
        let mut chunks = Vec::with_capacity(batch);
        while chunks.len() < batch {
            let mut chunk = vec![0u8; opts.block_size];
            let got = read_full(&mut input, &mut chunk)?;
            chunk.truncate(got);
            if got > 0 {
                chunks.push(chunk);
            }
            if got < opts.block_size {
                done = true;
                break;
            }
        }
        let blocks: Vec<Block> =
            chunks.par_iter().map(|c| encode_block(c, opts.transform, opts.order_k, &opts.alphabet)).collect();
        for (chunk, block) in chunks.iter().zip(&blocks) {
            block.write_to(&mut output)?;
            summary.blocks += 1;
            summary.input_bytes += chunk.len() as u64;
            summary.output_bytes += block.encoded_len() as u64;
        }
    }
    output.flush()?;
    Ok(summary)
}

fn read_block<R: Read>(input: &mut R, header: &ContainerHeader, block: usize) -> Result<Option<Block>, ContainerError> {
    let mut len = [0u8; 4];
    match read_full(input, &mut len)? {
        0 => return Ok(None),
        4 => {}
        _ => return Err(ContainerError::TruncatedBlock { block }),
    }
    let len = u32::from_be_bytes(len);
    let row_index = if header.transform.is_indexed() {
        let mut idx = [0u8; 4];
        if read_full(input, &mut idx)? < 4 {
            return Err(ContainerError::TruncatedBlock { block });
        }
        let index = u32::from_be_bytes(idx);
        if (len > 0 && index >= len) || (len == 0 && index != 0) {
            return Err(ContainerError::RowIndexOutOfRange { block, index, len });
        }
        Some(index)
    } else {
        None
    };
    let mut payload = Vec::new();
    input.by_ref().take(len as u64).read_to_end(&mut payload)?;
    if payload.len() != len as usize {
        return Err(ContainerError::TruncatedBlock { block });
    }
    Ok(Some(Block { payload, row_index }))
}

/// Reads a container and writes the original bytes. Blocks are decoded one
/// at a time in stream order.
pub fn decode_stream<R: Read, W: Write>(mut input: R, mut output: W) -> Result<StreamSummary, ContainerError> {
    let header = ContainerHeader::read_from(&mut input)?;
    let mut summary = StreamSummary { input_bytes: header.encoded_len() as u64, ..Default::default() };
    while let Some(block) = read_block(&mut input, &header, summary.blocks)? {
        let data = decode_block(&block, &header)
            .map_err(|source| ContainerError::CorruptBlock { block: summary.blocks, source })?;
        output.write_all(&data)?;
        summary.blocks += 1;
        summary.input_bytes += block.encoded_len() as u64;
        summary.output_bytes += data.len() as u64;
    }
    output.flush()?;
    Ok(summary)
}

pub fn encode_bytes(data: &[u8], opts: &EncodeOptions) -> Result<Vec<u8>, ContainerError> {
    let mut out = Vec::new();
    encode_stream(data, &mut out, opts)?;
    Ok(out)
}

pub fn decode_bytes(data: &[u8]) -> Result<Vec<u8>, ContainerError> {
    let mut out = Vec::new();
    decode_stream(data, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const W: &[u8] = b"bcbccbcbcabbaaba";

    #[test]
    fn empty_input_is_header_only() {
        let out = encode_bytes(b"", &EncodeOptions::new(Transform::Bwts)).unwrap();
        assert_eq!(out, [b'B', b'W', b'T', b'X', 1, 1, 0, 0, 0]);
        assert_eq!(decode_bytes(&out).unwrap(), b"");
    }

    #[test]
    fn lst_block_layout() {
        let out = encode_bytes(W, &EncodeOptions::new(Transform::Lst).with_order(2)).unwrap();
        let mut expected = vec![b'B', b'W', b'T', b'X', 1, 3, 0, 2, 0, 0, 0, 0, 16];
        expected.extend_from_slice(b"abababaccccbbcbb");
        assert_eq!(out, expected);
        assert_eq!(decode_bytes(&out).unwrap(), W);
    }

    #[test]
    fn st_block_layout() {
        let out = encode_bytes(W, &EncodeOptions::new(Transform::St).with_order(2)).unwrap();
        let mut expected = vec![b'B', b'W', b'T', b'X', 1, 2, 0, 2, 0, 0, 0, 0, 16, 0, 0, 0, 7];
        expected.extend_from_slice(b"bbacabaacccbbcbb");
        assert_eq!(out, expected);
        assert_eq!(decode_bytes(&out).unwrap(), W);
    }

    #[test]
    fn usage_errors() {
        let bad = EncodeOptions::new(Transform::Bwt).with_order(3);
        assert!(matches!(encode_bytes(W, &bad), Err(ContainerError::Usage(_))));
        let bad = EncodeOptions::new(Transform::St).with_block_size(0);
        assert!(matches!(encode_bytes(W, &bad), Err(ContainerError::Usage(_))));
        let bad = EncodeOptions::new(Transform::Lst).with_order(70_000);
        assert!(matches!(encode_bytes(W, &bad), Err(ContainerError::Usage(_))));
    }

    #[test]
    fn header_errors() {
        assert!(matches!(decode_bytes(b"BWTY\x01\x01\0\0\0"), Err(ContainerError::BadMagic(_))));
        assert!(matches!(decode_bytes(b"BWTX\x02\x01\0\0\0"), Err(ContainerError::UnsupportedVersion(2))));
        assert!(matches!(decode_bytes(b"BWTX\x01\x07\0\0\0"), Err(ContainerError::UnknownTransform(7))));
        assert!(matches!(decode_bytes(b"BWTX\x01\x00\0\x02\0"), Err(ContainerError::UnexpectedOrder { .. })));
        assert!(matches!(decode_bytes(b"BWTX\x01\x01\0\0\x04"), Err(ContainerError::UnknownFlags(4))));
        assert!(matches!(decode_bytes(b"BWTX\x01"), Err(ContainerError::TruncatedHeader)));
        assert!(matches!(decode_bytes(b"BW"), Err(ContainerError::TruncatedHeader)));
        let mut bad_table = b"BWTX\x01\x01\0\0\x01".to_vec();
        bad_table.extend_from_slice(&[0u8; 256]);
        assert!(matches!(decode_bytes(&bad_table), Err(ContainerError::InvalidOrderTable)));
    }

    #[test]
    fn block_errors() {
        let good = encode_bytes(W, &EncodeOptions::new(Transform::St).with_order(2)).unwrap();
        for cut in [HEADER_LEN + 2, HEADER_LEN + 6, good.len() - 1] {
            assert!(matches!(decode_bytes(&good[..cut]), Err(ContainerError::TruncatedBlock { block: 0 })));
        }
        let mut bad = good.clone();
        bad[HEADER_LEN + 7] = 16;
        assert!(matches!(decode_bytes(&bad), Err(ContainerError::RowIndexOutOfRange { index: 16, len: 16, .. })));
    }

    #[test]
    fn invalid_st_payload_is_corrupt_block() {
        // "ab" under order 1 has two disjoint cycles.
        let mut data = b"BWTX\x01\x02\x00\x01\x00".to_vec();
        data.extend_from_slice(&[0, 0, 0, 2, 0, 0, 0, 0, b'a', b'b']);
        let err = decode_bytes(&data).unwrap_err();
        assert!(matches!(err, ContainerError::CorruptBlock { block: 0, .. }), "{err}");
    }

    #[test]
    fn custom_order_table_round_trips() {
        let seq: Vec<u8> = (0..=255u8).map(|b| b.wrapping_mul(37).wrapping_add(11)).collect();
        let ord = AlphabetOrder::from_sequence(&seq).unwrap();
        let opts = EncodeOptions::new(Transform::Lst).with_order(3).with_alphabet(ord.clone());
        let out = encode_bytes(W, &opts).unwrap();
        assert_eq!(out[8], FLAG_ORDER_TABLE);
        assert_eq!(&out[9..9 + 256], ord.ranks());
        assert_eq!(decode_bytes(&out).unwrap(), W);
    }

    #[test]
    fn multiple_blocks() {
        let data: Vec<u8> = (0..1000u32).map(|i| (i * 7 % 13) as u8).collect();
        for t in [Transform::Bwt, Transform::Bwts, Transform::St, Transform::Lst] {
            let k = if t.takes_order() { 3 } else { 0 };
            let opts = EncodeOptions::new(t).with_order(k).with_block_size(64);
            let mut out = Vec::new();
            let s = encode_stream(&data[..], &mut out, &opts).unwrap();
            assert_eq!(s.blocks, 16);
            assert_eq!(s.output_bytes, out.len() as u64);
            assert_eq!(decode_bytes(&out).unwrap(), data);
        }
    }

    #[test]
    fn transform_names() {
        for t in [Transform::Bwt, Transform::Bwts, Transform::St, Transform::Lst] {
            assert_eq!(t.name().parse::<Transform>().unwrap(), t);
            assert_eq!(Transform::from_id(t.id()), Some(t));
        }
        assert!("bzip".parse::<Transform>().is_err());
    }
}
