//! Exhaustive oracles and checkers for the closed-form entropy minima.
//!
//! Two oracle tiers: the sequence tier enumerates realizable degree sequences (entropy
//! depends on nothing else), the graph tier enumerates edge subsets and groups the
//! minimizers into isomorphism classes. All minimizer decisions use exact keys.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::entropy::{compute_entropy, exact_key, EntropyReport};
use crate::error::{Error, Result};
use crate::extremal::{
    b_fits, binom2, construct_b, k_star, min_entropy_bipartite, min_entropy_general, sigma, star_bound,
    t_star, with_isolated_name,
};
use crate::graph::{bipartition, canonical_key, CanonicalKey, Graph};
use crate::recognition::{is_difference, is_threshold};
use crate::sequences::{
    enumerate_bigraphical, enumerate_graphical, majorize_compare, max_bipartite_edges, DegreeSequence,
    Majorization,
};

/// Largest `n` for the edge-subset tier.
pub const GRAPHS_MAX_N: usize = 7;
/// Largest `n` for the degree-sequence tier.
pub const SEQUENCES_MAX_N: usize = 10;
/// Largest `n` for the labeled-tree oracle.
pub const TREES_MAX_N: usize = 8;
/// Largest `n` for the majorization sweep.
pub const MAJORIZATION_MAX_N: usize = 8;

const FLOAT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMode {
    Sequences,
    Graphs,
}

impl OracleMode {
    fn limit(self) -> usize {
        match self {
            OracleMode::Sequences => SEQUENCES_MAX_N,
            OracleMode::Graphs => GRAPHS_MAX_N,
        }
    }

    fn check(self, n: usize) -> Result<()> {
        if n > self.limit() {
            return Err(Error::ScopeExceeded { what: self.what(), limit: self.limit(), got: n });
        }
        Ok(())
    }

    fn what(self) -> &'static str {
        match self {
            OracleMode::Sequences => "sequence oracle vertex count",
            OracleMode::Graphs => "graph oracle vertex count",
        }
    }
}

/// Every minimizer of `I_d` at one `(n, m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimizerSet {
    pub n: usize,
    pub m: usize,
    pub report: EntropyReport,
    pub sequences: BTreeSet<DegreeSequence>,
    /// Isomorphism classes; present in graphs mode only.
    pub classes: Option<BTreeSet<CanonicalKey>>,
}

impl MinimizerSet {
    pub fn graphs(&self) -> Vec<Graph> {
        self.classes.iter().flatten().map(CanonicalKey::to_graph).collect()
    }
}

/// Keeps the sequences with the largest exact key.
fn best_sequences(n: usize, m: usize, candidates: impl IntoIterator<Item = DegreeSequence>) -> Result<(BigUint, BTreeSet<DegreeSequence>)> {
    let mut best: Option<BigUint> = None;
    let mut set = BTreeSet::new();
    for d in candidates {
        let key = exact_key(d.as_slice());
        match best.as_ref().map(|b| key.cmp(b)) {
            Some(std::cmp::Ordering::Less) => {}
            Some(std::cmp::Ordering::Equal) => {
                set.insert(d);
            }
            _ => {
                best = Some(key);
                set.clear();
                set.insert(d);
            }
        }
    }
    let best = best.ok_or_else(|| Error::InvalidParameter(format!("no graph with n = {n}, m = {m}")))?;
    Ok((best, set))
}

/// Degree multiset packed as 4-bit counts per degree value.
type DegreeCode = u64;

fn degree_code(degrees: &[u8]) -> DegreeCode {
    degrees.iter().fold(0, |acc, &d| acc + (1u64 << (4 * d as u32)))
}

fn decode_degrees(code: DegreeCode) -> DegreeSequence {
    let mut v = Vec::new();
    for d in 0..16u32 {
        let count = (code >> (4 * d)) & 0xF;
        v.extend(std::iter::repeat_n(d, count as usize));
    }
    DegreeSequence::new(v)
}

/// Next integer with the same popcount.
fn next_combination(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Calls `f` with the degree vector and mask of every `m`-subset of `pairs`.
fn for_each_subset(n: usize, pairs: &[(usize, usize)], m: usize, mut f: impl FnMut(&[u8], u64)) {
    let p = pairs.len();
    if m > p {
        return;
    }
    let mut deg = vec![0u8; n];
    if m == 0 {
        f(&deg, 0);
        return;
    }
    let end = 1u64 << p;
    let mut x = (1u64 << m) - 1;
    while x < end {
        deg.iter_mut().for_each(|d| *d = 0);
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            let (u, v) = pairs[i];
            deg[u] += 1;
            deg[v] += 1;
            bits &= bits - 1;
        }
        f(&deg, x);
        x = next_combination(x);
    }
}

/// Graph-tier oracle over the union of several edge universes on `n` vertices.
fn edge_subset_minimizers(n: usize, m: usize, universes: &[Vec<(usize, usize)>]) -> Result<MinimizerSet> {
    let mut codes: HashSet<DegreeCode> = HashSet::new();
    for pairs in universes {
        for_each_subset(n, pairs, m, |deg, _| {
            codes.insert(degree_code(deg));
        });
    }
    let (_, best) = best_sequences(n, m, codes.iter().map(|&c| decode_degrees(c)))?;
    let wanted: HashSet<DegreeCode> = codes.into_iter().filter(|&c| best.contains(&decode_degrees(c))).collect();

    let mut classes = BTreeSet::new();
    for pairs in universes {
        let mut failed = None;
        for_each_subset(n, pairs, m, |deg, mask| {
            if failed.is_some() || !wanted.contains(&degree_code(deg)) {
                return;
            }
            let edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]);
            match Graph::from_edges(n, edges).and_then(|g| canonical_key(&g)) {
                Ok(key) => {
                    classes.insert(key);
                }
                Err(e) => failed = Some(e),
            }
        });
        if let Some(e) = failed {
            return Err(e);
        }
    }
    let report = compute_entropy(best.first().expect("non-empty"))?;
    Ok(MinimizerSet { n, m, report, sequences: best, classes: Some(classes) })
}

fn check_general_cell(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 1 || m > binom2(n as u64) as usize {
        return Err(Error::InvalidParameter(format!("need n >= 2 and 1 <= m <= C(n,2), got n = {n}, m = {m}")));
    }
    Ok(())
}

fn check_bipartite_cell(n: usize, m: usize) -> Result<()> {
    if n < 2 || m < 1 || m > max_bipartite_edges(n) {
        return Err(Error::InvalidParameter(format!(
            "need n >= 2 and 1 <= m <= {}, got n = {n}, m = {m}",
            max_bipartite_edges(n)
        )));
    }
    Ok(())
}

/// All minimizers of `I_d` among `(n, m)`-graphs.
pub fn brute_min_general(n: usize, m: usize, mode: OracleMode) -> Result<MinimizerSet> {
    mode.check(n)?;
    check_general_cell(n, m)?;
    match mode {
        OracleMode::Sequences => {
            let (_, best) = best_sequences(n, m, enumerate_graphical(n, m)?)?;
            let report = compute_entropy(best.first().expect("non-empty"))?;
            Ok(MinimizerSet { n, m, report, sequences: best, classes: None })
        }
        OracleMode::Graphs => {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            edge_subset_minimizers(n, m, &[pairs])
        }
    }
}

/// All minimizers of `I_d` among `(n, m)`-bipartite graphs.
pub fn brute_min_bipartite(n: usize, m: usize, mode: OracleMode) -> Result<MinimizerSet> {
    mode.check(n)?;
    check_bipartite_cell(n, m)?;
    match mode {
        OracleMode::Sequences => {
            let merged = enumerate_bigraphical(n, m)?.into_iter().map(|p| p.merged());
            let (_, best) = best_sequences(n, m, merged)?;
            let report = compute_entropy(best.first().expect("non-empty"))?;
            Ok(MinimizerSet { n, m, report, sequences: best, classes: None })
        }
        OracleMode::Graphs => {
            let universes: Vec<Vec<(usize, usize)>> = (1..=n / 2)
                .map(|a| (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect())
                .collect();
            edge_subset_minimizers(n, m, &universes)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub observed: String,
}

/// Minimizers recorded for one `(n, m)` cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimizerCell {
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "crate::serialize_round9")]
    pub i_d: f64,
    #[serde(serialize_with = "serialize_decimal")]
    pub exact_key: BigUint,
    pub sequences: Vec<DegreeSequence>,
    /// Edge lists of one representative per isomorphism class.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub graphs: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
}

fn serialize_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

impl MinimizerCell {
    fn from_set(set: &MinimizerSet, names: Vec<String>) -> Self {
        MinimizerCell {
            n: set.n,
            m: set.m,
            i_d: set.report.i_d,
            exact_key: set.report.exact_key.clone(),
            sequences: set.sequences.iter().cloned().collect(),
            graphs: set.graphs().iter().map(Graph::to_edge_list).collect(),
            names,
        }
    }
}

/// Outcome of one checker run. `failures` is empty iff the checked statement holds on
/// the whole scope.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub scope: String,
    pub checked_count: usize,
    pub failures: Vec<Failure>,
    /// Per-cell minimizers in increasing `(n, m)` order.
    pub minimizers: Vec<MinimizerCell>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(scope: String, cells: Vec<CellOutcome>) -> Self {
        let mut report = VerificationReport { scope, checked_count: 0, failures: Vec::new(), minimizers: Vec::new() };
        for cell in cells {
            report.checked_count += cell.checked;
            report.failures.extend(cell.failures);
            report.minimizers.extend(cell.minimizers);
        }
        report
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scope: {}", self.scope)?;
        writeln!(f, "checked: {}", self.checked_count)?;
        writeln!(f, "failures: {}", self.failures.len())?;
        for fail in &self.failures {
            writeln!(f, "  {}: expected {}, observed {}", fail.instance, fail.expected, fail.observed)?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct CellOutcome {
    checked: usize,
    failures: Vec<Failure>,
    minimizers: Vec<MinimizerCell>,
}

impl CellOutcome {
    fn fail(&mut self, instance: String, expected: impl ToString, observed: impl ToString) {
        self.failures.push(Failure { instance, expected: expected.to_string(), observed: observed.to_string() });
    }
}

fn cells(n_max: usize, max_m: impl Fn(usize) -> usize) -> Vec<(usize, usize)> {
    (2..=n_max).flat_map(|n| (1..=max_m(n)).map(move |m| (n, m))).collect()
}

/// Runs `check` on every cell in parallel; results come back in cell order.
fn run_cells(cells: &[(usize, usize)], check: impl Fn(usize, usize) -> CellOutcome + Sync) -> Vec<CellOutcome> {
    cells.par_iter().map(|&(n, m)| check(n, m)).collect()
}

fn seq_list(set: &BTreeSet<DegreeSequence>) -> String {
    set.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn canonical_set(graphs: &[Graph]) -> Result<BTreeSet<CanonicalKey>> {
    graphs.iter().map(canonical_key).collect()
}

/// Compares an oracle minimizer set against the graphs a closed form names.
fn compare_minimizers(out: &mut CellOutcome, instance: &str, found: &MinimizerSet, expected: &[Graph]) {
    let expected_seqs: BTreeSet<DegreeSequence> = expected.iter().map(Graph::degree_sequence).collect();
    if found.sequences != expected_seqs {
        out.fail(format!("{instance} minimizing sequences"), seq_list(&expected_seqs), seq_list(&found.sequences));
    }
    if let Some(classes) = &found.classes {
        match canonical_set(expected) {
            Ok(expected_classes) if &expected_classes == classes => {}
            Ok(expected_classes) => out.fail(
                format!("{instance} minimizing classes"),
                format!("{} class(es)", expected_classes.len()),
                format!("{} class(es): {:?}", classes.len(), names_of(found)),
            ),
            Err(e) => out.fail(format!("{instance} canonical form"), "key", e),
        }
    }
}

fn names_of(found: &MinimizerSet) -> Vec<String> {
    found.graphs().iter().map(|g| g.to_edge_list().replace('\n', ";")).collect()
}

fn check_scope(n_max: usize, mode: OracleMode) -> Result<()> {
    mode.check(n_max)
}

/// Oracle minimum over `(n, m)`-graphs against the closed form and its unique extremal
/// graph, for every `2 <= n <= n_max` and `1 <= m <= C(n, 2)`.
pub fn check_theorem1(n_max: usize, mode: OracleMode) -> Result<VerificationReport> {
    check_scope(n_max, mode)?;
    let cells = cells(n_max, |n| binom2(n as u64) as usize);
    let outcomes = run_cells(&cells, |n, m| {
        let mut out = CellOutcome::default();
        let instance = format!("n={n},m={m}");
        let (k, t) = (k_star(m as u64), t_star(m as u64));
        if (n as u64) < k + sigma(t) {
            return out;
        }
        out.checked = 1;
        let expected = match min_entropy_general(n as u64, m as u64) {
            Ok(r) => r,
            Err(e) => {
                out.fail(instance, "closed form", e);
                return out;
            }
        };
        let found = match brute_min_general(n, m, mode) {
            Ok(f) => f,
            Err(e) => {
                out.fail(instance, "oracle", e);
                return out;
            }
        };
        if found.report.exact_key != expected.exact_key_at_bound {
            out.fail(format!("{instance} exact key"), &expected.exact_key_at_bound, &found.report.exact_key);
        }
        if (found.report.i_d - expected.bound).abs() > FLOAT_TOLERANCE {
            out.fail(format!("{instance} bound"), format!("{:.9}", expected.bound), format!("{:.9}", found.report.i_d));
        }
        compare_minimizers(&mut out, &instance, &found, &expected.graphs);
        out.minimizers.push(MinimizerCell::from_set(&found, expected.names.clone()));
        out
    });
    Ok(VerificationReport::merge(format!("(n,m)-graphs, 2 <= n <= {n_max}, {mode:?} oracle"), outcomes))
}

/// Oracle minimum over `(n, m)`-bipartite graphs against `1 + log2 sqrt(m)`: equal with
/// the listed complete bipartite minimizers when a factorization fits, strictly larger
/// otherwise.
pub fn check_theorem2(n_max: usize, mode: OracleMode) -> Result<VerificationReport> {
    check_scope(n_max, mode)?;
    let cells = cells(n_max, max_bipartite_edges);
    let outcomes = run_cells(&cells, |n, m| {
        let mut out = CellOutcome { checked: 1, ..Default::default() };
        let instance = format!("n={n},m={m}");
        let expected = match min_entropy_bipartite(n as u64, m as u64) {
            Ok(r) => r,
            Err(e) => {
                out.fail(instance, "closed form", e);
                return out;
            }
        };
        let found = match brute_min_bipartite(n, m, mode) {
            Ok(f) => f,
            Err(e) => {
                out.fail(instance, "oracle", e);
                return out;
            }
        };
        if expected.attained {
            if found.report.exact_key != expected.exact_key_at_bound {
                out.fail(format!("{instance} exact key"), &expected.exact_key_at_bound, &found.report.exact_key);
            }
            if (found.report.i_d - expected.bound).abs() > FLOAT_TOLERANCE {
                out.fail(format!("{instance} bound"), format!("{:.9}", expected.bound), format!("{:.9}", found.report.i_d));
            }
            compare_minimizers(&mut out, &instance, &found, &expected.graphs);
        } else if found.report.exact_key >= expected.exact_key_at_bound {
            out.fail(
                format!("{instance} unattained bound"),
                format!("key below {}", expected.exact_key_at_bound),
                &found.report.exact_key,
            );
        }
        let names = match mode {
            OracleMode::Graphs => found.graphs().iter().map(|g| name_bipartite(g, m)).collect(),
            OracleMode::Sequences => Vec::new(),
        };
        out.minimizers.push(MinimizerCell::from_set(&found, names));
        out
    });
    Ok(VerificationReport::merge(format!("(n,m)-bipartite graphs, 2 <= n <= {n_max}, {mode:?} oracle"), outcomes))
}

/// Every graph-tier minimizer over `(n, m)`-graphs is a threshold graph.
pub fn check_minimizers_threshold(n_max: usize) -> Result<VerificationReport> {
    check_scope(n_max, OracleMode::Graphs)?;
    let cells = cells(n_max, |n| binom2(n as u64) as usize);
    let outcomes = run_cells(&cells, |n, m| {
        let mut out = CellOutcome::default();
        match brute_min_general(n, m, OracleMode::Graphs) {
            Ok(found) => {
                for g in found.graphs() {
                    out.checked += 1;
                    let v = is_threshold(&g);
                    if !v.is_threshold {
                        out.fail(format!("n={n},m={m} {}", g.to_edge_list().replace('\n', ";")), "threshold", format!("witness {:?}", v.witness));
                    }
                }
                out.minimizers.push(MinimizerCell::from_set(&found, Vec::new()));
            }
            Err(e) => out.fail(format!("n={n},m={m}"), "oracle", e),
        }
        out
    });
    Ok(VerificationReport::merge(format!("threshold minimizers, 2 <= n <= {n_max}"), outcomes))
}

/// Every graph-tier minimizer over `(n, m)`-bipartite graphs is a difference graph.
pub fn check_minimizers_difference(n_max: usize) -> Result<VerificationReport> {
    check_scope(n_max, OracleMode::Graphs)?;
    let cells = cells(n_max, max_bipartite_edges);
    let outcomes = run_cells(&cells, |n, m| {
        let mut out = CellOutcome::default();
        match brute_min_bipartite(n, m, OracleMode::Graphs) {
            Ok(found) => {
                for g in found.graphs() {
                    out.checked += 1;
                    let v = is_difference(&g);
                    if !v.is_difference {
                        out.fail(format!("n={n},m={m} {}", g.to_edge_list().replace('\n', ";")), "difference graph", format!("witness {:?}", v.witness));
                    }
                }
                out.minimizers.push(MinimizerCell::from_set(&found, Vec::new()));
            }
            Err(e) => out.fail(format!("n={n},m={m}"), "oracle", e),
        }
        out
    });
    Ok(VerificationReport::merge(format!("difference minimizers, 2 <= n <= {n_max}"), outcomes))
}

fn majorization_cell(n: usize, m: usize) -> Result<CellOutcome> {
    let seqs = enumerate_graphical(n, m)?;
    let keys: Vec<BigUint> = seqs.iter().map(|d| exact_key(d.as_slice())).collect();
    let mut out = CellOutcome::default();
    for (i, a) in seqs.iter().enumerate() {
        for (j, b) in seqs.iter().enumerate() {
            let rel = majorize_compare(a, b)?;
            let instance = || format!("n={n},m={m} {a} vs {b}");
            match rel {
                Majorization::Incomparable | Majorization::RightStrictlyMajorizes => continue,
                Majorization::Equal => {
                    out.checked += 1;
                    if i != j || keys[i] != keys[j] {
                        out.fail(instance(), "equal only for identical sequences", "distinct sequences compare equal");
                    }
                }
                Majorization::LeftStrictlyMajorizes => {
                    out.checked += 1;
                    if keys[i] <= keys[j] {
                        out.fail(instance(), "strictly larger key", format!("{} vs {}", keys[i], keys[j]));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Majorization monotonicity over all comparable ordered pairs of graphical
/// `(n, m)`-sequences: `D ⪰ D'` gives `key(D) >= key(D')`, equal only when `D = D'`.
pub fn check_majorization(n: usize, m: usize) -> Result<VerificationReport> {
    if n > MAJORIZATION_MAX_N {
        return Err(Error::ScopeExceeded { what: "majorization vertex count", limit: MAJORIZATION_MAX_N, got: n });
    }
    let out = majorization_cell(n, m)?;
    Ok(VerificationReport::merge(format!("majorization, n={n}, m={m}"), vec![out]))
}

/// [`check_majorization`] for every `n <= n_max` and every `m`.
pub fn check_majorization_upto(n_max: usize) -> Result<VerificationReport> {
    if n_max > MAJORIZATION_MAX_N {
        return Err(Error::ScopeExceeded { what: "majorization vertex count", limit: MAJORIZATION_MAX_N, got: n_max });
    }
    let cells: Vec<(usize, usize)> = (1..=n_max).flat_map(|n| (0..=binom2(n as u64) as usize).map(move |m| (n, m))).collect();
    let outcomes = run_cells(&cells, |n, m| {
        majorization_cell(n, m).unwrap_or_else(|e| {
            let mut out = CellOutcome::default();
            out.fail(format!("n={n},m={m}"), "enumeration", e);
            out
        })
    });
    Ok(VerificationReport::merge(format!("majorization, 1 <= n <= {n_max}, all m"), outcomes))
}

/// Decodes a Prüfer code over vertices `0..code.len()+2` into tree edges.
pub fn prufer_decode(code: &[usize]) -> Vec<(usize, usize)> {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Degree sequences of all labeled trees on `n >= 2` vertices, with multiplicities.
pub fn tree_degree_sequences(n: usize) -> BTreeMap<DegreeSequence, usize> {
    let mut out = BTreeMap::new();
    let len = n - 2;
    let mut code = vec![0usize; len];
    loop {
        let mut deg = vec![0u32; n];
        for (u, v) in prufer_decode(&code) {
            deg[u] += 1;
            deg[v] += 1;
        }
        *out.entry(DegreeSequence::new(deg)).or_insert(0) += 1;
        // Odometer increment.
        let mut i = 0;
        while i < len {
            code[i] += 1;
            if code[i] < n {
                break;
            }
            code[i] = 0;
            i += 1;
        }
        if i == len {
            break;
        }
    }
    out
}

/// Number of partitions of `total` with at most `parts` parts.
fn partition_count(total: usize, parts: usize) -> usize {
    // ways[t] over parts bounded by size, via conjugation: at most `parts` parts is
    // the same as parts of size at most `parts`.
    let mut ways = vec![0usize; total + 1];
    ways[0] = 1;
    for size in 1..=parts.min(total.max(1)) {
        for t in size..=total {
            ways[t] += ways[t - size];
        }
    }
    ways[total]
}

/// The star is the unique entropy minimizer among trees on `n` vertices, with value
/// `1 + log2 sqrt(n - 1)`, for every `2 <= n <= n_max`.
pub fn check_corollary2(n_max: usize) -> Result<VerificationReport> {
    if n_max > TREES_MAX_N {
        return Err(Error::ScopeExceeded { what: "tree oracle vertex count", limit: TREES_MAX_N, got: n_max });
    }
    let ns: Vec<usize> = (2..=n_max).collect();
    let outcomes: Vec<CellOutcome> = ns
        .par_iter()
        .map(|&n| {
            let mut out = CellOutcome::default();
            let instance = format!("n={n}");
            let trees = tree_degree_sequences(n);
            out.checked = trees.values().sum();
            let labeled = n.pow(n as u32 - 2);
            if out.checked != labeled {
                out.fail(format!("{instance} labeled tree count"), labeled, out.checked);
            }
            // Tree sequences are exactly the length-n positive sequences summing to 2(n-1).
            let shapes = partition_count(n - 2, n);
            if trees.len() != shapes {
                out.fail(format!("{instance} distinct degree sequences"), shapes, trees.len());
            }
            let (_, best) = match best_sequences(n, n - 1, trees.keys().cloned()) {
                Ok(b) => b,
                Err(e) => {
                    out.fail(instance, "trees", e);
                    return out;
                }
            };
            let star = star_bound(n as u64).expect("n >= 2");
            let star_seq = star.graphs[0].degree_sequence();
            if best.len() != 1 || !best.contains(&star_seq) {
                out.fail(format!("{instance} minimizers"), &star_seq, seq_list(&best));
            }
            let found = MinimizerSet {
                n,
                m: n - 1,
                report: compute_entropy(best.first().expect("non-empty")).expect("trees have edges"),
                sequences: best,
                classes: None,
            };
            if (found.report.i_d - star.bound).abs() > FLOAT_TOLERANCE {
                out.fail(format!("{instance} bound"), format!("{:.9}", star.bound), format!("{:.9}", found.report.i_d));
            }
            out.minimizers.push(MinimizerCell::from_set(&found, star.names.clone()));
            out
        })
        .collect();
    Ok(VerificationReport::merge(format!("trees, 2 <= n <= {n_max}"), outcomes))
}

/// Names a bipartite minimizer: `K_{q,b} ∪ K̄_j` when complete bipartite up to
/// isolated vertices, otherwise `B(n,m,b)` for the largest `b` whose construction is
/// isomorphic, otherwise its degree sequence.
pub fn name_bipartite(g: &Graph, m: usize) -> String {
    let n = g.n();
    let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let pad = n - active.len();
    if let Some(side) = bipartition(g) {
        let q = active.iter().filter(|&&v| !side[v]).count();
        let b = active.len() - q;
        if q * b == m && m > 0 {
            let (q, b) = (q.min(b), q.max(b));
            return with_isolated_name(format!("K_{{{q},{b}}}"), pad);
        }
    }
    if let Ok(key) = canonical_key(g) {
        for b in (1..=m as u64).rev() {
            if !b_fits(n as u64, m as u64, b) {
                continue;
            }
            let candidate = construct_b(n as u64, m as u64, b).expect("fits");
            if canonical_key(&candidate).ok() == Some(key) {
                return format!("B({n},{m},{b})");
            }
        }
    }
    g.degree_sequence().to_string()
}

/// Minimizers among `(n, m)`-bipartite graphs for `2 <= n <= 6`, by name.
pub fn table1() -> Result<BTreeMap<(usize, usize), BTreeSet<String>>> {
    let cells = cells(6, max_bipartite_edges);
    let named: Result<Vec<_>> = cells
        .par_iter()
        .map(|&(n, m)| {
            let found = brute_min_bipartite(n, m, OracleMode::Graphs)?;
            Ok(((n, m), found.graphs().iter().map(|g| name_bipartite(g, m)).collect()))
        })
        .collect();
    Ok(named?.into_iter().collect())
}

/// One row of the `B(n, m, b)` exploration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExploreRow {
    pub b: u64,
    pub q: u64,
    pub r: u64,
    pub degrees: DegreeSequence,
    pub report: EntropyReport,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleSummary {
    #[serde(serialize_with = "crate::serialize_round9")]
    pub i_d: f64,
    #[serde(serialize_with = "serialize_decimal")]
    pub exact_key: BigUint,
    pub sequences: Vec<DegreeSequence>,
    /// Whether some `B(n, m, b)` reaches the true minimum.
    pub attained_by_b: bool,
}

/// A recorded strict ordering of entropies, checked against exact keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderingCheck {
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExploreReport {
    pub n: u64,
    pub m: u64,
    pub rows: Vec<ExploreRow>,
    /// Values of `b` whose `B(n, m, b)` has the smallest entropy.
    pub argmin: Vec<u64>,
    pub oracle: Option<OracleSummary>,
    pub recorded_orderings: Vec<OrderingCheck>,
    /// Set when a recorded ordering for this `(n, m)` contradicts the exact keys.
    pub inconsistent: bool,
}

/// Literature orderings for `B(n, m, b)`: `b` values listed by claimed increasing `I_d`.
///
/// The `(6, 7)` entry contradicts exact computation and the tabulated minimizer
/// `B(6,7,4)`; it is kept so the explorer can flag it.
pub const RECORDED_ORDERINGS: &[(u64, u64, &[u64])] = &[(6, 7, &[3, 4]), (7, 7, &[4, 3, 5]), (7, 10, &[3, 4])];

/// Entropy of every valid `B(n, m, b)`, the minimizing `b`, and the true bipartite
/// minimum when `n <= 7`.
pub fn explore_problem1(n: u64, m: u64) -> Result<ExploreReport> {
    let mut rows = Vec::new();
    for b in 1..=m {
        if !b_fits(n, m, b) {
            continue;
        }
        let g = construct_b(n, m, b)?;
        let degrees = g.degree_sequence();
        let report = compute_entropy(&degrees)?;
        rows.push(ExploreRow { b, q: m / b, r: m % b, degrees, report });
    }
    if rows.is_empty() {
        return Err(Error::InvalidParameter(format!("no b with B({n},{m},b) fitting in {n} vertices")));
    }
    let best_key = rows.iter().map(|r| &r.report.exact_key).max().expect("non-empty").clone();
    let argmin = rows.iter().filter(|r| r.report.exact_key == best_key).map(|r| r.b).collect();

    let oracle = if n as usize <= GRAPHS_MAX_N && m as usize <= max_bipartite_edges(n as usize) {
        let found = brute_min_bipartite(n as usize, m as usize, OracleMode::Sequences)?;
        Some(OracleSummary {
            i_d: found.report.i_d,
            attained_by_b: found.report.exact_key == best_key,
            exact_key: found.report.exact_key,
            sequences: found.sequences.into_iter().collect(),
        })
    } else {
        None
    };

    let key_of = |b: u64| rows.iter().find(|r| r.b == b).map(|r| &r.report.exact_key);
    let mut recorded_orderings = Vec::new();
    for &(rn, rm, order) in RECORDED_ORDERINGS {
        if (rn, rm) != (n, m) {
            continue;
        }
        let statement = order.iter().map(|b| format!("I_d(B({n},{m},{b}))")).collect::<Vec<_>>().join(" < ");
        // Smaller entropy means a larger key.
        let holds = order.windows(2).all(|w| match (key_of(w[0]), key_of(w[1])) {
            (Some(a), Some(b)) => a > b,
            _ => false,
        });
        recorded_orderings.push(OrderingCheck { statement, holds });
    }
    let inconsistent = recorded_orderings.iter().any(|c| !c.holds);
    Ok(ExploreReport { n, m, rows, argmin, oracle, recorded_orderings, inconsistent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, Family};

    fn seqs(set: &MinimizerSet) -> Vec<Vec<u32>> {
        set.sequences.iter().map(|d| d.as_slice().to_vec()).collect()
    }

    #[test]
    fn general_oracle_examples() {
        for mode in [OracleMode::Sequences, OracleMode::Graphs] {
            assert_eq!(seqs(&brute_min_general(5, 10, mode).unwrap()), vec![vec![4; 5]]);
            assert_eq!(seqs(&brute_min_general(5, 7, mode).unwrap()), vec![vec![4, 3, 3, 3, 1]]);
            // K_3 ∪ K̄_1 (key 64) beats the star (key 27).
            assert_eq!(seqs(&brute_min_general(4, 3, mode).unwrap()), vec![vec![2, 2, 2, 0]]);
        }
        let found = brute_min_general(5, 7, OracleMode::Graphs).unwrap();
        let classes = found.classes.unwrap();
        assert_eq!(classes.len(), 1);
        let k41 = build_named(Family::CliquePlusVertex { k: 4, t: 1 }, 0).unwrap();
        assert!(classes.contains(&canonical_key(&k41).unwrap()));
    }

    #[test]
    fn bipartite_oracle_examples() {
        for mode in [OracleMode::Sequences, OracleMode::Graphs] {
            let f = brute_min_bipartite(5, 4, mode).unwrap();
            assert_eq!(f.report.exact_key, BigUint::from(256u32));
            assert_eq!(seqs(&f), vec![vec![2, 2, 2, 2, 0], vec![4, 1, 1, 1, 1]]);
            assert_eq!(seqs(&brute_min_bipartite(5, 5, mode).unwrap()), vec![vec![3, 2, 2, 2, 1]]);
            assert_eq!(seqs(&brute_min_bipartite(2, 1, mode).unwrap()), vec![vec![1, 1]]);
        }
    }

    #[test]
    fn oracle_scope_errors() {
        assert!(matches!(brute_min_general(8, 3, OracleMode::Graphs), Err(Error::ScopeExceeded { .. })));
        assert!(matches!(brute_min_general(11, 3, OracleMode::Sequences), Err(Error::ScopeExceeded { .. })));
        assert!(brute_min_general(4, 7, OracleMode::Sequences).is_err());
        assert!(brute_min_bipartite(5, 7, OracleMode::Graphs).is_err());
        assert!(check_theorem1(8, OracleMode::Graphs).is_err());
        assert!(check_corollary2(9).is_err());
    }

    #[test]
    fn general_check_smallest_scope() {
        let r = check_theorem1(2, OracleMode::Graphs).unwrap();
        assert!(r.passed());
        assert_eq!(r.checked_count, 1);
        assert_eq!(r.minimizers[0].names, vec!["K_2"]);
    }

    #[test]
    fn extremal_checks_small() {
        assert!(check_theorem1(5, OracleMode::Graphs).unwrap().passed());
        assert!(check_theorem1(8, OracleMode::Sequences).unwrap().passed());
        assert!(check_theorem2(5, OracleMode::Graphs).unwrap().passed());
        assert!(check_theorem2(8, OracleMode::Sequences).unwrap().passed());
    }

    #[test]
    fn minimizer_class_checks_small() {
        assert!(check_minimizers_threshold(5).unwrap().passed());
        assert!(check_minimizers_difference(5).unwrap().passed());
        let f = brute_min_general(4, 4, OracleMode::Graphs).unwrap();
        assert!(f.graphs().iter().all(|g| is_threshold(g).is_threshold));
    }

    #[test]
    fn majorization_examples() {
        let r = check_majorization(4, 3).unwrap();
        assert!(r.passed());
        // [3,1,1,1] ⪰ [2,2,1,1], [3,1,1,1] ⪰ [2,2,2,0]? prefix 3 ≥ 2, 4 ≥ 4, 5 < 6: no.
        // [2,2,2,0] ⪰ [2,2,1,1]; plus three reflexive pairs.
        assert_eq!(r.checked_count, 5);
        assert!(check_majorization(9, 3).is_err());
        assert!(check_majorization_upto(5).unwrap().passed());
    }

    #[test]
    fn prufer_trees() {
        assert_eq!(prufer_decode(&[]), vec![(0, 1)]);
        let t = tree_degree_sequences(4);
        assert_eq!(t.len(), 2);
        assert_eq!(t[&DegreeSequence::new(vec![3, 1, 1, 1])], 4);
        assert_eq!(t[&DegreeSequence::new(vec![2, 2, 1, 1])], 12);
        for code in [[0usize, 0, 0], [1, 2, 3], [4, 4, 0]] {
            let edges = prufer_decode(&code);
            let g = Graph::from_edges(5, edges).unwrap();
            assert_eq!(g.edge_count(), 4);
            assert!(bipartition(&g).is_some());
        }
        assert_eq!(partition_count(0, 2), 1);
        assert_eq!(partition_count(4, 6), 5);
        assert_eq!(partition_count(6, 3), 7);
    }

    #[test]
    fn tree_check_small() {
        let r = check_corollary2(6).unwrap();
        assert!(r.passed(), "{r}");
        let five = r.minimizers.iter().find(|c| c.n == 5).unwrap();
        assert_eq!(five.i_d, 2.0);
    }

    #[test]
    fn bipartite_names() {
        let g = build_named(Family::CompleteBipartite { s: 2, t: 2 }, 1).unwrap();
        assert_eq!(name_bipartite(&g, 4), "K_{2,2} ∪ K̄_1");
        assert_eq!(name_bipartite(&build_named(Family::Star { n: 5 }, 0).unwrap(), 4), "K_{1,4}");
        assert_eq!(name_bipartite(&construct_b(5, 5, 3).unwrap(), 5), "B(5,5,3)");
        assert_eq!(name_bipartite(&construct_b(5, 5, 2).unwrap(), 5), "B(5,5,3)");
        assert_eq!(name_bipartite(&construct_b(6, 7, 4).unwrap(), 7), "B(6,7,4)");
    }

    #[test]
    fn explore_examples() {
        let r = explore_problem1(6, 7).unwrap();
        // B(6,7,2) is B(6,7,4) with the sides swapped.
        assert_eq!(r.argmin, vec![2, 4]);
        assert!(r.inconsistent);
        assert_eq!(r.recorded_orderings.len(), 1);
        assert!(!r.recorded_orderings[0].holds);
        assert!(r.oracle.as_ref().unwrap().attained_by_b);

        let r = explore_problem1(7, 7).unwrap();
        assert!(!r.inconsistent && r.recorded_orderings[0].holds);
        let r = explore_problem1(7, 10).unwrap();
        assert!(!r.inconsistent && r.recorded_orderings[0].holds);

        let r = explore_problem1(20, 7).unwrap();
        assert!(r.oracle.is_none() && r.recorded_orderings.is_empty());
        assert!(explore_problem1(2, 5).is_err());
    }
}
