//! Degree-sequence algebra: majorization, conjugation, realizability and enumeration.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count accepted by the sequence enumerators.
pub const ENUMERATION_MAX_N: usize = 12;

/// A non-increasing list of non-negative degrees. Zero entries are kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<u32>);

impl DegreeSequence {
    /// Sorts `entries` into non-increasing order.
    pub fn new(mut entries: Vec<u32>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(entries)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u32> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    /// Edge count when read as a graph's degree sequence.
    pub fn m(&self) -> u64 {
        self.sum() / 2
    }

    pub fn max_entry(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> DegreeSequence {
        let keep = self.0.iter().take_while(|&&d| d > 0).count();
        DegreeSequence(self.0[..keep].to_vec())
    }

    /// Pads with zeros up to length `len`.
    pub fn padded(&self, len: usize) -> DegreeSequence {
        let mut v = self.0.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        DegreeSequence(v)
    }

    /// Merges two sequences into one sorted sequence.
    pub fn merged(&self, other: &DegreeSequence) -> DegreeSequence {
        DegreeSequence::new(self.0.iter().chain(other.iter()).copied().collect())
    }
}

impl From<Vec<u32>> for DegreeSequence {
    fn from(v: Vec<u32>) -> Self {
        DegreeSequence::new(v)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

/// Degree sequences of the two sides of a bipartition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BipartitePair {
    pub x: DegreeSequence,
    pub y: DegreeSequence,
}

impl BipartitePair {
    pub fn new(x: impl Into<DegreeSequence>, y: impl Into<DegreeSequence>) -> Self {
        BipartitePair { x: x.into(), y: y.into() }
    }

    /// Degree sequence of the whole graph.
    pub fn merged(&self) -> DegreeSequence {
        self.x.merged(&self.y)
    }
}

/// Outcome of comparing two equal-total sequences under majorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Majorization {
    LeftStrictlyMajorizes,
    Equal,
    RightStrictlyMajorizes,
    Incomparable,
}

/// Compares prefix sums after zero-padding both sequences to a common length.
/// Sequences with different totals are not comparable under majorization and are
/// rejected with [`Error::UnequalSums`].
pub fn majorize_compare(a: &DegreeSequence, b: &DegreeSequence) -> Result<Majorization> {
    if a.sum() != b.sum() {
        return Err(Error::UnequalSums { left: a.sum(), right: b.sum() });
    }
    let len = a.len().max(b.len());
    let (a, b) = (a.padded(len), b.padded(len));
    let (mut pa, mut pb) = (0u64, 0u64);
    let (mut a_ahead, mut b_ahead) = (false, false);
    for (&x, &y) in a.iter().zip(b.iter()) {
        pa += x as u64;
        pb += y as u64;
        match pa.cmp(&pb) {
            Ordering::Greater => a_ahead = true,
            Ordering::Less => b_ahead = true,
            Ordering::Equal => {}
        }
    }
    Ok(match (a_ahead, b_ahead) {
        (false, false) => Majorization::Equal,
        (true, false) => Majorization::LeftStrictlyMajorizes,
        (false, true) => Majorization::RightStrictlyMajorizes,
        (true, true) => Majorization::Incomparable,
    })
}

/// `c*_i = |{j : c_j >= i}|` for `i = 1..=max(c)`.
pub fn conjugate(c: &DegreeSequence) -> DegreeSequence {
    let entries = (1..=c.max_entry())
        .map(|i| c.iter().filter(|&&d| d >= i).count() as u32)
        .collect();
    DegreeSequence(entries)
}

/// Erdős–Gallai test.
pub fn is_graphical(d: &DegreeSequence) -> bool {
    let n = d.len() as u64;
    if d.sum() % 2 == 1 || (d.max_entry() > 0 && d.max_entry() as u64 >= n) {
        return false;
    }
    let degs = d.as_slice();
    let mut prefix = 0u64;
    for k in 1..=degs.len() {
        prefix += degs[k - 1] as u64;
        let k64 = k as u64;
        let tail: u64 = degs[k..].iter().map(|&x| (x as u64).min(k64)).sum();
        if prefix > k64 * (k64 - 1) + tail {
            return false;
        }
    }
    true
}

/// Gale–Ryser test for a bipartite graph with sides of sizes `|x|` and `|y|`.
pub fn is_bigraphical(p: &BipartitePair) -> bool {
    if p.x.sum() != p.y.sum() {
        return false;
    }
    let mut prefix = 0u64;
    for (k, &d) in p.x.iter().enumerate() {
        prefix += d as u64;
        let k = k as u64 + 1;
        let cap: u64 = p.y.iter().map(|&e| (e as u64).min(k)).sum();
        if prefix > cap {
            return false;
        }
    }
    // With equal totals the last inequality also bounds every y-degree by |x|.
    p.y.max_entry() as usize <= p.x.len()
}

/// Non-increasing sequences of length `len` with entries in `0..=max_part` summing to
/// `total`, in decreasing lexicographic order.
fn bounded_partitions(total: u32, len: usize, max_part: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, len: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = (len - cur.len()) as u64;
        let hi = cap.min(rest);
        for part in (0..=hi).rev() {
            // Remaining slots are bounded above by `part` each.
            if (part as u64) * slots < rest as u64 {
                break;
            }
            cur.push(part);
            rec(rest - part, len, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(total, len, max_part, &mut Vec::with_capacity(len), &mut out);
    out
}

fn check_enumeration_scope(n: usize) -> Result<()> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::ScopeExceeded {
            what: "sequence enumeration vertex count",
            limit: ENUMERATION_MAX_N,
            got: n,
        });
    }
    Ok(())
}

/// All graphical degree sequences of `(n, m)`-graphs, each once, in decreasing
/// lexicographic order.
pub fn enumerate_graphical(n: usize, m: usize) -> Result<Vec<DegreeSequence>> {
    check_enumeration_scope(n)?;
    let max_m = n * n.saturating_sub(1) / 2;
    if m > max_m {
        return Err(Error::InvalidParameter(format!("m = {m} exceeds C({n},2) = {max_m}")));
    }
    Ok(bounded_partitions(2 * m as u32, n, n.saturating_sub(1) as u32)
        .into_iter()
        .map(DegreeSequence)
        .filter(is_graphical)
        .collect())
}

/// Largest edge count of a bipartite graph on `n` vertices, `⌈n/2⌉⌊n/2⌋`.
pub fn max_bipartite_edges(n: usize) -> usize {
    n.div_ceil(2) * (n / 2)
}

/// All realizable bipartite degree-sequence pairs with `|x| + |y| = n` and `m` edges.
///
/// Side sizes range over every split `|x| <= |y|`; when the sides have equal size the
/// unordered pair is emitted once, as the orientation with `x >= y`.
pub fn enumerate_bigraphical(n: usize, m: usize) -> Result<Vec<BipartitePair>> {
    check_enumeration_scope(n)?;
    let max_m = max_bipartite_edges(n);
    if m > max_m {
        return Err(Error::InvalidParameter(format!(
            "m = {m} exceeds the bipartite maximum {max_m} for n = {n}"
        )));
    }
    let mut out = Vec::new();
    for a in 0..=n / 2 {
        let b = n - a;
        let xs = bounded_partitions(m as u32, a, b as u32);
        let ys = bounded_partitions(m as u32, b, a as u32);
        for x in &xs {
            for y in &ys {
                if a == b && x < y {
                    continue;
                }
                let pair = BipartitePair { x: DegreeSequence(x.clone()), y: DegreeSequence(y.clone()) };
                if is_bigraphical(&pair) {
                    out.push(pair);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn ds(v: &[u32]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec())
    }

    #[test]
    fn majorization_examples() {
        use Majorization::*;
        assert_eq!(majorize_compare(&ds(&[3, 1, 1, 1]), &ds(&[2, 2, 1, 1])).unwrap(), LeftStrictlyMajorizes);
        assert_eq!(majorize_compare(&ds(&[2, 2, 2]), &ds(&[2, 2, 2])).unwrap(), Equal);
        assert_eq!(majorize_compare(&ds(&[3, 3, 1, 1]), &ds(&[3, 2, 2, 1])).unwrap(), LeftStrictlyMajorizes);
        assert_eq!(majorize_compare(&ds(&[2, 2, 1, 1]), &ds(&[3, 1, 1, 1])).unwrap(), RightStrictlyMajorizes);
        assert_eq!(majorize_compare(&ds(&[4, 1, 1, 1, 1]), &ds(&[2, 2, 2, 2, 0])).unwrap(), Incomparable);
        // Padding: [2,2] vs [2,1,1]
        assert_eq!(majorize_compare(&ds(&[2, 2]), &ds(&[2, 1, 1])).unwrap(), LeftStrictlyMajorizes);
    }

    #[test]
    fn majorization_rejects_unequal_totals() {
        assert_eq!(
            majorize_compare(&ds(&[3, 1]), &ds(&[2, 1])),
            Err(Error::UnequalSums { left: 4, right: 3 })
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(conjugate(&ds(&[3, 2, 2])).as_slice(), &[3, 3, 1]);
        assert!(conjugate(&ds(&[0, 0])).is_empty());
        assert_eq!(conjugate(&ds(&[2, 2, 1])).as_slice(), &[3, 2]);
    }

    #[test]
    fn graphical_examples() {
        assert!(is_graphical(&ds(&[2, 2, 2, 2])));
        assert!(!is_graphical(&ds(&[3, 3, 1, 1])));
        assert!(is_graphical(&ds(&[0])));
        assert!(is_graphical(&ds(&[])));
        assert!(!is_graphical(&ds(&[1])));
        assert!(!is_graphical(&ds(&[2, 2])));
        assert!(!is_graphical(&ds(&[3, 1, 1])));
        assert!(is_graphical(&ds(&[4, 4, 4, 4, 4])));
    }

    #[test]
    fn bigraphical_examples() {
        assert!(is_bigraphical(&BipartitePair::new(vec![2, 2], vec![2, 2])));
        assert!(!is_bigraphical(&BipartitePair::new(vec![3], vec![1, 1])));
        assert!(is_bigraphical(&BipartitePair::new(vec![2, 2], vec![1, 1, 1, 1])));
        assert!(!is_bigraphical(&BipartitePair::new(vec![2], vec![2])));
        assert!(is_bigraphical(&BipartitePair::new(vec![1, 1], vec![2, 0])));
    }

    #[test]
    fn enumerate_graphical_examples() {
        let got = |n, m| enumerate_graphical(n, m).unwrap().into_iter().map(DegreeSequence::into_vec).collect::<Vec<_>>();
        assert_eq!(got(3, 2), vec![vec![2, 1, 1]]);
        assert_eq!(got(3, 3), vec![vec![2, 2, 2]]);
        assert_eq!(got(4, 3), vec![vec![3, 1, 1, 1], vec![2, 2, 2, 0], vec![2, 2, 1, 1]]);
        assert_eq!(got(3, 0), vec![vec![0, 0, 0]]);
        assert!(enumerate_graphical(13, 1).is_err());
        assert!(enumerate_graphical(4, 7).is_err());
    }

    #[test]
    fn enumerate_bigraphical_examples() {
        assert_eq!(enumerate_bigraphical(2, 1).unwrap(), vec![BipartitePair::new(vec![1], vec![1])]);
        let p3 = enumerate_bigraphical(3, 2).unwrap();
        assert_eq!(p3, vec![BipartitePair::new(vec![2], vec![1, 1])]);
        assert!(enumerate_bigraphical(4, 4).unwrap().contains(&BipartitePair::new(vec![2, 2], vec![2, 2])));
        assert!(enumerate_bigraphical(5, 7).is_err());
    }

    /// Degree sequences of every labeled graph on `n` vertices with `m` edges.
    fn edge_subset_sequences(n: usize, m: usize) -> BTreeSet<DegreeSequence> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u32..1 << pairs.len())
            .filter(|mask| mask.count_ones() as usize == m)
            .map(|mask| {
                let mut deg = vec![0u32; n];
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        deg[u] += 1;
                        deg[v] += 1;
                    }
                }
                DegreeSequence::new(deg)
            })
            .collect()
    }

    #[test]
    fn enumerate_graphical_matches_edge_subsets() {
        for n in 1..=6 {
            for m in 0..=n * (n - 1) / 2 {
                let listed = enumerate_graphical(n, m).unwrap();
                let set: BTreeSet<_> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len(), "duplicates at n={n}, m={m}");
                assert_eq!(set, edge_subset_sequences(n, m), "n={n}, m={m}");
                assert!(listed.windows(2).all(|w| w[0] > w[1]), "order at n={n}, m={m}");
            }
        }
    }

    /// Brute-force search for a 0/1 matrix with the given row and column sums.
    fn realizable_by_search(x: &[u32], y: &[u32]) -> bool {
        fn rec(row: usize, x: &[u32], cols: &mut Vec<u32>) -> bool {
            if row == x.len() {
                return cols.iter().all(|&c| c == 0);
            }
            let k = cols.len();
            for mask in 0u32..1 << k {
                if mask.count_ones() != x[row] {
                    continue;
                }
                if (0..k).any(|j| mask >> j & 1 == 1 && cols[j] == 0) {
                    continue;
                }
                for (j, c) in cols.iter_mut().enumerate() {
                    if mask >> j & 1 == 1 {
                        *c -= 1;
                    }
                }
                let ok = rec(row + 1, x, cols);
                for (j, c) in cols.iter_mut().enumerate() {
                    if mask >> j & 1 == 1 {
                        *c += 1;
                    }
                }
                if ok {
                    return true;
                }
            }
            false
        }
        rec(0, x, &mut y.to_vec())
    }

    #[test]
    fn gale_ryser_matches_brute_force_realization() {
        for n in 1..=6 {
            for a in 0..=n {
                let b = n - a;
                for m in 0..=(a * b) as u32 + 1 {
                    for x in bounded_partitions(m, a, b as u32 + 1) {
                        for y in bounded_partitions(m, b, a as u32 + 1) {
                            let pair = BipartitePair::new(x.clone(), y.clone());
                            assert_eq!(is_bigraphical(&pair), realizable_by_search(&x, &y), "{x:?} {y:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bigraphical_enumeration_covers_all_bipartite_graphs() {
        for n in 2..=6 {
            for m in 1..=max_bipartite_edges(n) {
                let merged: BTreeSet<_> = enumerate_bigraphical(n, m).unwrap().iter().map(BipartitePair::merged).collect();
                // Every subgraph of K_{a, n-a} must have its sequence listed, and conversely.
                let mut seen = BTreeSet::new();
                for a in 1..=n / 2 {
                    let cross: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect();
                    for mask in 0u32..1 << cross.len() {
                        if mask.count_ones() as usize != m {
                            continue;
                        }
                        let mut deg = vec![0u32; n];
                        for (i, &(u, v)) in cross.iter().enumerate() {
                            if mask >> i & 1 == 1 {
                                deg[u] += 1;
                                deg[v] += 1;
                            }
                        }
                        seen.insert(DegreeSequence::new(deg));
                    }
                }
                assert_eq!(merged, seen, "n={n}, m={m}");
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn seq(max_len: usize, max_val: u32) -> impl Strategy<Value = DegreeSequence> {
            proptest::collection::vec(0..=max_val, 0..=max_len).prop_map(DegreeSequence::new)
        }

        /// Random sequences sharing a total: fixed-length compositions of `total`.
        fn same_total(total: u32, len: usize) -> impl Strategy<Value = DegreeSequence> {
            proptest::collection::vec(0..=total, len).prop_map(move |cuts| {
                let mut cuts = cuts;
                cuts.sort_unstable();
                let mut parts = Vec::with_capacity(len + 1);
                let mut prev = 0;
                for c in cuts {
                    parts.push(c - prev);
                    prev = c;
                }
                parts.push(total - prev);
                DegreeSequence::new(parts)
            })
        }

        proptest! {
            #[test]
            fn conjugate_is_an_involution(c in seq(10, 9)) {
                prop_assert_eq!(conjugate(&conjugate(&c)), c.trimmed());
            }

            #[test]
            fn conjugate_is_non_increasing(c in seq(10, 9)) {
                let cc = conjugate(&c);
                prop_assert!(cc.as_slice().windows(2).all(|w| w[0] >= w[1]));
                prop_assert_eq!(cc.len(), c.max_entry() as usize);
            }

            #[test]
            fn majorization_is_a_partial_order(
                a in same_total(12, 5),
                b in same_total(12, 5),
                c in same_total(12, 5),
            ) {
                use Majorization::*;
                let ab = majorize_compare(&a, &b).unwrap();
                let ba = majorize_compare(&b, &a).unwrap();
                let flipped = match ab {
                    LeftStrictlyMajorizes => RightStrictlyMajorizes,
                    RightStrictlyMajorizes => LeftStrictlyMajorizes,
                    other => other,
                };
                prop_assert_eq!(ba, flipped);
                prop_assert_eq!(ab == Equal, a == b);
                let geq = |x: &DegreeSequence, y: &DegreeSequence| {
                    matches!(majorize_compare(x, y).unwrap(), LeftStrictlyMajorizes | Equal)
                };
                if geq(&a, &b) && geq(&b, &c) {
                    prop_assert!(geq(&a, &c));
                }
            }

            #[test]
            fn gale_ryser_prefix_dominance(
                x in seq(5, 5),
                y in seq(5, 5),
            ) {
                let pair = BipartitePair { x: x.clone(), y: y.clone() };
                if is_bigraphical(&pair) {
                    let conj = conjugate(&y).padded(x.len());
                    let mut px = 0u32;
                    let mut pc = 0u32;
                    for (a, b) in x.iter().zip(conj.iter()) {
                        px += a;
                        pc += b;
                        prop_assert!(px <= pc);
                    }
                }
            }
        }
    }
}
