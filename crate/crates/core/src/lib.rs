//! Burrows-Wheeler transform, order-k sort transform, and their index-free
//! bijective variants (BWTS and LST_k), with a block container format.
//!
//! All rotations use right shifts, `r(a_1 ... a_n) = a_n a_1 ... a_{n-1}`,
//! and every comparison is relative to an [`AlphabetOrder`]. Row indices in
//! the public API are 1-based.
//!
//! ```
//! use xbwt_core::{lst_forward, lst_inverse, AlphabetOrder};
//!
//! let ord = AlphabetOrder::identity();
//! let l = lst_forward(b"bcbccbcbcabbaaba", 2, &ord);
//! assert_eq!(l, b"abababaccccbbcbb");
//! assert_eq!(lst_inverse(&l, 2, &ord), b"bcbccbcbcabbaaba");
//! ```

pub mod bwt;
pub mod bwts;
pub mod container;
pub mod context_graph;
pub mod error;
pub mod lst;
pub mod lyndon;
pub mod permutation;
mod rotsort;
pub mod selftest;
pub mod st;
pub mod stats;
pub mod words;

#[cfg(feature = "oracle")]
pub mod oracle;

pub use bwt::{bwt_forward, bwt_inverse, bwt_inverse_right_to_left, reconstruct_contexts, IndexedTransform};
pub use bwts::{bwts_forward, bwts_inverse, omega_sorted_conjugates, recover_lyndon_factors, OmegaSortedConjugates};
pub use container::{
    decode_bytes, decode_stream, encode_bytes, encode_stream, ContainerError, ContainerHeader, EncodeOptions,
    StreamSummary, Transform,
};

pub use context_graph::{Configuration, ContextGraph, ContextId, EdgeStep};
pub use error::{Error, Result};
pub use lst::{lst_forward, lst_inverse, lst_inverse_traced};
pub use lyndon::{is_lyndon, lyndon_factorization, LyndonFactorization};
pub use permutation::{
    cycle_decomposition, k_order_standard_permutation, standard_permutation, CycleDecomposition, Permutation,
};
pub use selftest::{run_selftest, SelftestReport};
pub use st::{st_forward, st_inverse};
pub use stats::{count_runs, move_to_front, order0_entropy, stats, BlockStats, StatsReport};
pub use words::{compare_lex, compare_omega, conjugacy_class, context_of_order, reversal, right_shift, AlphabetOrder};
