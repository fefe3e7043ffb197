//! Built-in golden fixtures for the running example `w = bcbccbcbcabbaaba`
//! and a few small words, checked against a [`Subject`].
//!
//! [`Subject`]'s methods default to this library, so [`run_selftest`] checks
//! the build itself. Overriding single methods lets a test plant a fault and
//! watch the corresponding fixture fail.

use std::cmp::Ordering;
use std::fmt;

use crate::bwt::{bwt_forward, bwt_inverse, reconstruct_contexts, IndexedTransform};
use crate::bwts::{bwts_forward, bwts_inverse, omega_sorted_conjugates};
use crate::container::{decode_bytes, encode_bytes, EncodeOptions, Transform};
use crate::context_graph::ContextGraph;
use crate::lst::{lst_forward, lst_inverse_traced};
use crate::lyndon::lyndon_factorization;
use crate::permutation::{k_order_standard_permutation, standard_permutation};
use crate::st::{st_forward, st_inverse};
use crate::words::{self, AlphabetOrder};

type Check<T> = std::result::Result<T, String>;

fn id() -> AlphabetOrder {
    AlphabetOrder::identity()
}

fn err(e: impl fmt::Display) -> String {
    e.to_string()
}

/// The operations the fixtures exercise, all under the identity order.
/// Permutations and labels are 1-based.
pub trait Subject {
    fn compare_lex(&self, u: &[u8], v: &[u8]) -> Ordering {
        words::compare_lex(u, v, &id())
    }
    fn compare_omega(&self, u: &[u8], v: &[u8]) -> Check<Ordering> {
        words::compare_omega(u, v, &id()).map_err(err)
    }
    fn conjugacy_class(&self, w: &[u8]) -> Check<Vec<Vec<u8>>> {
        words::conjugacy_class(w).map_err(err)
    }
    fn context_of_order(&self, w: &[u8], k: usize) -> Check<Vec<u8>> {
        words::context_of_order(w, k).map_err(err)
    }
    fn reversal(&self, w: &[u8]) -> Vec<u8> {
        words::reversal(w)
    }
    fn lyndon_factors(&self, w: &[u8]) -> Vec<Vec<u8>> {
        lyndon_factorization(w, &id()).to_vecs()
    }
    fn standard_permutation(&self, l: &[u8]) -> Check<Vec<usize>> {
        Ok(standard_permutation(l, &id()).map_err(err)?.to_one_based())
    }
    fn standard_permutation_cycles(&self, l: &[u8]) -> Check<Vec<Vec<usize>>> {
        Ok(standard_permutation(l, &id()).map_err(err)?.cycles().cycles().to_vec())
    }
    fn k_order_permutation(&self, list: &[Vec<u8>], k: usize) -> Check<Vec<usize>> {
        Ok(k_order_standard_permutation(list, k, &id()).map_err(err)?.to_one_based())
    }
    fn bwt_forward(&self, w: &[u8]) -> Check<(Vec<u8>, usize)> {
        let t = bwt_forward(w, &id()).map_err(err)?;
        Ok((t.last_column, t.index))
    }
    fn bwt_inverse(&self, l: &[u8], index: usize) -> Check<Vec<u8>> {
        bwt_inverse(&IndexedTransform::new(l, index), &id()).map_err(err)
    }
    fn reconstruct_contexts(&self, l: &[u8], k: usize) -> Check<Vec<Vec<u8>>> {
        reconstruct_contexts(l, k, &id()).map_err(err)
    }
    fn bwts_forward(&self, w: &[u8]) -> Vec<u8> {
        bwts_forward(w, &id())
    }
    fn bwts_inverse(&self, l: &[u8]) -> Vec<u8> {
        bwts_inverse(l, &id())
    }
    /// The ω-sorted conjugates with their 1-based positions in the
    /// concatenated class list `[v_1], ..., [v_s]`.
    fn omega_sorted(&self, w: &[u8]) -> Vec<(Vec<u8>, usize)> {
        let lm = omega_sorted_conjugates(w, &id());
        let factors = self.lyndon_factors(w);
        let mut starts = Vec::new();
        let mut acc = 0;
        for f in factors.iter().rev() {
            starts.push(acc);
            acc += f.len();
        }
        lm.entries
            .into_iter()
            .map(|e| {
                let label = starts[e.source_factor - 1] + e.shift + 1;
                (e.word, label)
            })
            .collect()
    }
    fn st_forward(&self, w: &[u8], k: usize) -> Check<(Vec<u8>, usize)> {
        let t = st_forward(w, k, &id()).map_err(err)?;
        Ok((t.last_column, t.index))
    }
    fn st_inverse(&self, l: &[u8], index: usize, k: usize) -> Check<Vec<u8>> {
        st_inverse(&IndexedTransform::new(l, index), k, &id()).map_err(err)
    }
    fn context_graph(&self, l: &[u8], k: usize) -> Check<ContextGraph> {
        ContextGraph::build(l, k, &id()).map_err(err)
    }
    fn lst_forward(&self, w: &[u8], k: usize) -> Vec<u8> {
        lst_forward(w, k, &id())
    }
    fn lst_inverse_traced(&self, l: &[u8], k: usize) -> (Vec<u8>, Vec<usize>) {
        lst_inverse_traced(l, k, &id())
    }
    fn encode_container(&self, data: &[u8], transform: Transform, k: usize) -> Check<Vec<u8>> {
        encode_bytes(data, &EncodeOptions::new(transform).with_order(k)).map_err(err)
    }
    fn decode_container(&self, data: &[u8]) -> Check<Vec<u8>> {
        decode_bytes(data).map_err(err)
    }
}

/// This library.
#[derive(Debug, Clone, Copy, Default)]
pub struct Library;

impl Subject for Library {}

pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    check: fn(&dyn Subject) -> Check<()>,
}

impl fmt::Debug for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fixture").field("name", &self.name).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub description: &'static str,
    /// `None` on success, otherwise the first mismatch.
    pub failure: Option<String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestReport {
    pub outcomes: Vec<FixtureOutcome>,
}

impl SelftestReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(FixtureOutcome::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &FixtureOutcome> {
        self.outcomes.iter().filter(|o| !o.passed())
    }

    pub fn outcome(&self, name: &str) -> Option<&FixtureOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            match &o.failure {
                None => writeln!(f, "PASS {:<28} {}", o.name, o.description)?,
                Some(why) => writeln!(f, "FAIL {:<28} {}: {why}", o.name, o.description)?,
            }
        }
        let failed = self.failures().count();
        write!(f, "{} fixtures, {} passed, {} failed", self.outcomes.len(), self.outcomes.len() - failed, failed)
    }
}

pub fn run_selftest() -> SelftestReport {
    run_fixtures(&Library)
}

/// Runs every fixture against `subject`. Panics inside a check count as
/// failures.
pub fn run_fixtures(subject: &dyn Subject) -> SelftestReport {
    let outcomes = fixtures()
        .iter()
        .map(|fx| {
            let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (fx.check)(subject)));
            let failure = match result {
                Ok(Ok(())) => None,
                Ok(Err(why)) => Some(why),
                Err(_) => Some("panicked".to_string()),
            };
            FixtureOutcome { name: fx.name, description: fx.description, failure }
        })
        .collect();
    SelftestReport { outcomes }
}

const W: &[u8] = b"bcbccbcbcabbaaba";
const BWT_W: &[u8] = b"bacbbaaccacbbcbb";
const ST2_W: &[u8] = b"bbacabaacccbbcbb";
const LST2_W: &[u8] = b"abababaccccbbcbb";
const W_REV: &[u8] = b"abaabbacbcbccbcb";

const CLASS_W: [&str; 16] = [
    "bcbccbcbcabbaaba",
    "abcbccbcbcabbaab",
    "babcbccbcbcabbaa",
    "ababcbccbcbcabba",
    "aababcbccbcbcabb",
    "baababcbccbcbcab",
    "bbaababcbccbcbca",
    "abbaababcbccbcbc",
    "cabbaababcbccbcb",
    "bcabbaababcbccbc",
    "cbcabbaababcbccb",
    "bcbcabbaababcbcc",
    "cbcbcabbaababcbc",
    "ccbcbcabbaababcb",
    "bccbcbcabbaababc",
    "cbccbcbcabbaabab",
];

pub fn fixtures() -> &'static [Fixture] {
    const FIXTURES: &[Fixture] = &[
        Fixture {
            name: "omega-order",
            description: "b < ba lexicographically, ba < b in the omega order",
            check: check_omega,
        },
        Fixture { name: "conjugacy-class", description: "the 16 right shifts of w", check: check_class },
        Fixture { name: "contexts", description: "order-7 contexts of bcbcc and bc", check: check_contexts },
        Fixture { name: "reversal", description: "reversal of w", check: check_reversal },
        Fixture { name: "lyndon-factorization", description: "w = bcbcc.bc.bc.abb.aab.a", check: check_lyndon },
        Fixture { name: "standard-permutation", description: "pi_w", check: check_pi_w },
        Fixture {
            name: "bwt-lexicographic-rows",
            description: "row labels of the lexicographically sorted class",
            check: check_lex_rows,
        },
        Fixture {
            name: "context-sorted-rows",
            description: "2-order standard permutation of [w]",
            check: check_context_rows,
        },
        Fixture { name: "bwt", description: "BWT(w) = (bacbbaaccacbbcbb, 10), pi_L and inverse", check: check_bwt },
        Fixture { name: "bwts", description: "BWTS(w), LM(w) table, cycles of pi_L and inverse", check: check_bwts },
        Fixture {
            name: "st",
            description: "ST_2(w) = (bbacabaacccbbcbb, 8), contexts, cycles, inverse",
            check: check_st,
        },
        Fixture {
            name: "st-graph-chase",
            description: "ST_2 context graph edges and chase from bc",
            check: check_st_graph,
        },
        Fixture { name: "lst", description: "LST_2(w), contexts, graph and edge-label sequence", check: check_lst },
        Fixture { name: "container", description: "ST_2 and LST_2 single-block containers", check: check_container },
    ];
    FIXTURES
}

fn show(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

fn expect<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> Check<()> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn expect_bytes(what: &str, got: &[u8], want: &[u8]) -> Check<()> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {}, expected {}", show(got), show(want)))
    }
}

fn expect_words(what: &str, got: &[Vec<u8>], want: &[&str]) -> Check<()> {
    let got: Vec<String> = got.iter().map(|w| show(w)).collect();
    expect(what, got, want.iter().map(|s| s.to_string()).collect())
}

fn check_omega(s: &dyn Subject) -> Check<()> {
    expect("lex(b, ba)", s.compare_lex(b"b", b"ba"), Ordering::Less)?;
    expect("omega(ba, b)", s.compare_omega(b"ba", b"b")?, Ordering::Less)?;
    expect("omega(b, ba)", s.compare_omega(b"b", b"ba")?, Ordering::Greater)
}

fn check_class(s: &dyn Subject) -> Check<()> {
    expect_words("[w]", &s.conjugacy_class(W)?, &CLASS_W)
}

fn check_contexts(s: &dyn Subject) -> Check<()> {
    expect_bytes("context_7(bcbcc)", &s.context_of_order(b"bcbcc", 7)?, b"bcbccbc")?;
    expect_bytes("context_7(bc)", &s.context_of_order(b"bc", 7)?, b"bcbcbcb")
}

fn check_reversal(s: &dyn Subject) -> Check<()> {
    expect_bytes("reversal(w)", &s.reversal(W), W_REV)
}

fn check_lyndon(s: &dyn Subject) -> Check<()> {
    expect_words("factors", &s.lyndon_factors(W), &["bcbcc", "bc", "bc", "abb", "aab", "a"])
}

fn check_pi_w(s: &dyn Subject) -> Check<()> {
    expect("pi_w", s.standard_permutation(W)?, vec![10, 13, 14, 16, 1, 3, 6, 8, 11, 12, 15, 2, 4, 5, 7, 9])
}

fn check_lex_rows(s: &dyn Subject) -> Check<()> {
    let class = s.conjugacy_class(W)?;
    let mut labels: Vec<usize> = (1..=class.len()).collect();
    labels.sort_by(|&a, &b| s.compare_lex(&class[a - 1], &class[b - 1]));
    expect("row labels", labels, vec![5, 4, 8, 2, 6, 3, 7, 10, 12, 1, 15, 9, 11, 13, 16, 14])
}

fn check_context_rows(s: &dyn Subject) -> Check<()> {
    let class = s.conjugacy_class(W)?;
    expect("nu", s.k_order_permutation(&class, 2)?, vec![5, 2, 4, 8, 3, 6, 7, 1, 10, 12, 15, 9, 11, 13, 16, 14])
}

fn check_bwt(s: &dyn Subject) -> Check<()> {
    let (l, i) = s.bwt_forward(W)?;
    expect_bytes("BWT(w)", &l, BWT_W)?;
    expect("index", i, 10)?;
    expect("pi_L", s.standard_permutation(BWT_W)?, vec![2, 6, 7, 10, 1, 4, 5, 12, 13, 15, 16, 3, 8, 9, 11, 14])?;
    expect_bytes("inverse", &s.bwt_inverse(BWT_W, 10)?, W)
}

fn check_bwts(s: &dyn Subject) -> Check<()> {
    expect_bytes("BWTS(w)", &s.bwts_forward(W), LST2_W)?;
    let lm = s.omega_sorted(W);
    let words: Vec<Vec<u8>> = lm.iter().map(|(w, _)| w.clone()).collect();
    expect_words(
        "LM(w)",
        &words,
        &[
            "a", "aab", "aba", "abb", "baa", "bab", "bba", "bc", "bc", "bcbcc", "bccbc", "cb", "cb", "cbcbc", "cbccb",
            "ccbcb",
        ],
    )?;
    expect(
        "LM(w) labels",
        lm.iter().map(|&(_, l)| l).collect::<Vec<_>>(),
        vec![1, 2, 4, 5, 3, 6, 7, 8, 10, 12, 15, 9, 11, 13, 16, 14],
    )?;
    expect(
        "cycles of pi_L",
        s.standard_permutation_cycles(LST2_W)?,
        vec![vec![1], vec![2, 3, 5], vec![4, 7, 6], vec![8, 12], vec![9, 13], vec![10, 15, 11, 16, 14]],
    )?;
    expect_bytes("inverse", &s.bwts_inverse(LST2_W), W)
}

const ST2_CONTEXTS: [&str; 16] =
    ["aa", "ab", "ab", "ab", "ba", "ba", "bb", "bc", "bc", "bc", "bc", "ca", "cb", "cb", "cb", "cc"];
const LST2_CONTEXTS: [&str; 16] =
    ["aa", "aa", "ab", "ab", "ba", "ba", "bb", "bc", "bc", "bc", "bc", "cb", "cb", "cb", "cb", "cc"];

fn check_st(s: &dyn Subject) -> Check<()> {
    let (l, i) = s.st_forward(W, 2)?;
    expect_bytes("ST_2(w)", &l, ST2_W)?;
    expect("index", i, 8)?;
    expect_words("contexts", &s.reconstruct_contexts(ST2_W, 2)?, &ST2_CONTEXTS)?;
    expect(
        "cycles of pi_L",
        s.standard_permutation_cycles(ST2_W)?,
        vec![vec![1, 3, 7, 6, 2, 5], vec![4, 8, 12], vec![9, 13], vec![10, 15, 11, 16, 14]],
    )?;
    expect_bytes("inverse", &s.st_inverse(ST2_W, 8, 2)?, W)
}

fn edge_contexts(g: &ContextGraph, label: usize) -> (String, u8, String) {
    let e = g.edge(label);
    (show(&g.context(e.source)), e.letter, show(&g.context(e.target)))
}

const ST2_EDGES: [(&str, &str); 16] = [
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
];
const LST2_EDGES: [(&str, &str); 16] = [
    ("aa", "aa"),
    ("aa", "ba"),
    ("ab", "aa"),
    ("ab", "ba"),
    ("ba", "ab"),
    ("ba", "bb"),
    ("bb", "ab"),
    ("bc", "cb"),
    ("bc", "cb"),
    ("bc", "cb"),
    ("bc", "cb"),
    ("cb", "bc"),
    ("cb", "bc"),
    ("cb", "cc"),
    ("cb", "bc"),
    ("cc", "bc"),
];

/// `(source, target)` of every edge, by label.
fn all_edges(g: &ContextGraph) -> Vec<(String, String)> {
    (1..=g.num_edges())
        .map(|label| {
            let e = g.edge(label);
            (show(&g.context(e.source)), show(&g.context(e.target)))
        })
        .collect()
}

fn expect_edges(g: &ContextGraph, want: &[(&str, &str)]) -> Check<()> {
    let want: Vec<(String, String)> = want.iter().map(|&(a, b)| (a.into(), b.into())).collect();
    expect("edges", all_edges(g), want)
}

fn check_st_graph(s: &dyn Subject) -> Check<()> {
    let g = s.context_graph(ST2_W, 2)?;
    expect_edges(&g, &ST2_EDGES)?;
    expect("edge 8", edge_contexts(&g, 8), ("bc".into(), b'a', "ab".into()))?;
    expect("edge 12", edge_contexts(&g, 12), ("ca".into(), b'b', "bc".into()))?;
    let bc = g.find_context(b"bc").ok_or("no vertex bc")?;
    let mut conf = g.configuration(bc);
    let first = g.smallest_edge_step(&mut conf).ok_or("no edge leaves bc")?;
    expect("first step", (first.label, first.letter), (8, b'a'))?;
    expect("after first step", show(&g.context(conf.current())), "ab".to_string())?;
    let chase = g.chase_from(bc, 16).map_err(err)?;
    expect("labels", chase.labels, vec![8, 2, 5, 3, 1, 6, 7, 4, 12, 9, 13, 10, 14, 16, 11, 15])?;
    expect_bytes("emission", &chase.emission, W_REV)?;
    expect_bytes("one step", &g.chase_from(bc, 1).map_err(err)?.emission, b"a")
}

fn check_lst(s: &dyn Subject) -> Check<()> {
    expect_bytes("LST_2(w)", &s.lst_forward(W, 2), LST2_W)?;
    expect_words("contexts", &s.reconstruct_contexts(LST2_W, 2)?, &LST2_CONTEXTS)?;
    let g = s.context_graph(LST2_W, 2)?;
    expect_edges(&g, &LST2_EDGES)?;
    expect("edge 1", edge_contexts(&g, 1), ("aa".into(), b'a', "aa".into()))?;

    let mut conf = g.configuration(g.context_of_row(1));
    let mut taken = Vec::new();
    for _ in 0..4 {
        taken.push(g.smallest_edge_step(&mut conf).ok_or("dead end before label 3")?.label);
    }
    expect("first labels", taken, vec![1, 2, 5, 3])?;
    expect("vertex after label 3", show(&g.context(conf.current())), "aa".to_string())?;
    if g.smallest_edge_step(&mut conf).is_some() {
        return Err("aa should have no unused edge after (1, 2, 5, 3)".into());
    }
    let jump = g.global_smallest_edge_step(&mut conf).ok_or("no unused edge left")?;
    expect("jump", (jump.label, jump.letter), (4, b'b'))?;
    expect("after jump", show(&g.context(conf.current())), "ba".to_string())?;

    let (word, labels) = s.lst_inverse_traced(LST2_W, 2);
    expect("edge labels", labels, vec![1, 2, 5, 3, 4, 6, 7, 8, 12, 9, 13, 10, 14, 16, 11, 15])?;
    expect_bytes("inverse", &word, W)
}

fn check_container(s: &dyn Subject) -> Check<()> {
    let mut lst = b"BWTX\x01\x03\x00\x02\x00\x00\x00\x00\x10".to_vec();
    lst.extend_from_slice(LST2_W);
    expect("LST_2 container", s.encode_container(W, Transform::Lst, 2)?, lst.clone())?;
    expect_bytes("LST_2 decode", &s.decode_container(&lst)?, W)?;
    let mut st = b"BWTX\x01\x02\x00\x02\x00\x00\x00\x00\x10\x00\x00\x00\x07".to_vec();
    st.extend_from_slice(ST2_W);
    expect("ST_2 container", s.encode_container(W, Transform::St, 2)?, st.clone())?;
    expect_bytes("ST_2 decode", &s.decode_container(&st)?, W)
}
