//! Simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequences::DegreeSequence;

/// Largest vertex count accepted by [`canonical_key`].
pub const CANONICAL_MAX_N: usize = 10;

/// Largest vertex count whose upper-triangular adjacency fits in a `u64` mask.
pub const MASK_MAX_N: usize = 11;

/// A labeled simple graph. Neighbor lists are kept sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from 0-based edges, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidParameter(format!(
                "edge ({u}, {v}) has an endpoint outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidParameter(format!("duplicate edge ({u}, {v})"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|nb| nb.binary_search(&v).is_ok())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Per-vertex degrees in label order.
    pub fn degrees(&self) -> Vec<u32> {
        self.adj.iter().map(|nb| nb.len() as u32).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    /// Disjoint union; the vertices of `other` are relabeled to follow those of `self`.
    pub fn union(&self, other: &Graph) -> Graph {
        let offset = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| nb.iter().map(|&v| v + offset).collect()),
        );
        Graph { adj }
    }

    /// `self ∪ K̄_k`.
    pub fn with_isolated(&self, k: usize) -> Graph {
        self.union(&Graph::empty(k))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph { adj }
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nb) in self.adj.iter().enumerate() {
            adj[perm[u]] = nb.iter().map(|&v| perm[v]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj }
    }

    /// Upper-triangular adjacency as a bit mask; bit [`pair_index`]`(n, u, v)` is set
    /// iff `uv` is an edge. Only defined for `n <= MASK_MAX_N`.
    pub fn upper_mask(&self) -> u64 {
        let n = self.n();
        assert!(n <= MASK_MAX_N, "mask form needs n <= {MASK_MAX_N}");
        self.edges().fold(0u64, |acc, (u, v)| acc | 1 << pair_index(n, u, v))
    }

    pub fn from_upper_mask(n: usize, mask: u64) -> Graph {
        assert!(n <= MASK_MAX_N, "mask form needs n <= {MASK_MAX_N}");
        let mut adj = vec![Vec::new(); n];
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> bit & 1 == 1 {
                    adj[u].push(v);
                    adj[v].push(u);
                }
                bit += 1;
            }
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Graph { adj }
    }

    /// Emits the edge-list text format: header `n m`, then one `u v` line per edge
    /// (1-based, `u < v`, lexicographic), LF terminated.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }
}

/// Index of the pair `u < v` among the `n(n-1)/2` pairs in lexicographic order.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Parses the edge-list format written by [`Graph::to_edge_list`].
///
/// Lines starting with `#` and blank lines are skipped. Endpoints may appear in
/// either order; errors carry the 1-based line number of the offending line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let [n, m] = parse_pair(header).ok_or_else(|| Error::Parse {
        line: header_line,
        message: format!("malformed header {header:?}, expected \"n m\""),
    })?;

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    let mut last_line = header_line;
    for (line, text) in lines {
        last_line = line;
        let err = |message: String| Error::Parse { line, message };
        let [u, v] = parse_pair(text).ok_or_else(|| err(format!("malformed edge {text:?}")))?;
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(err(format!("vertex label {x} outside 1..={n}")));
            }
        }
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u - 1, v - 1) {
            return Err(err(format!("duplicate edge {} {}", u.min(v), u.max(v))));
        }
        seen += 1;
        if seen > m {
            return Err(err(format!("more edges than the declared m = {m}")));
        }
        g.try_add_edge(u - 1, v - 1).map_err(|e| err(e.to_string()))?;
    }
    if seen != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("declared m = {m} but found {seen} edges"),
        });
    }
    Ok(g)
}

fn parse_pair(s: &str) -> Option<[usize; 2]> {
    let mut it = s.split_whitespace().map(str::parse::<usize>);
    let a = it.next()?.ok()?;
    let b = it.next()?.ok()?;
    it.next().is_none().then_some([a, b])
}

/// Named graph families. Every extremal graph here is one of these plus isolated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    /// `K_k`.
    Complete { k: usize },
    /// `K_{s,t}`, with the `s`-side labeled first.
    CompleteBipartite { s: usize, t: usize },
    /// `K_{1,n-1}`; the center is vertex 0.
    Star { n: usize },
    /// `K̄_n`.
    Empty { n: usize },
    /// `K(k, t)`: `K_k` plus one vertex adjacent to `t` of its vertices.
    /// For `t = 0` no vertex is added.
    CliquePlusVertex { k: usize, t: usize },
}

/// Builds `family ∪ K̄_pad`.
pub fn build_named(family: Family, pad_isolated: usize) -> Result<Graph> {
    let core = match family {
        Family::Complete { k } => {
            require(k >= 1, "complete graph needs k >= 1")?;
            complete(k)
        }
        Family::CompleteBipartite { s, t } => {
            require(s >= 1 && t >= 1, "complete bipartite graph needs s, t >= 1")?;
            complete_bipartite(s, t)
        }
        Family::Star { n } => {
            require(n >= 1, "star needs n >= 1")?;
            if n == 1 {
                Graph::empty(1)
            } else {
                complete_bipartite(1, n - 1)
            }
        }
        Family::Empty { n } => Graph::empty(n),
        Family::CliquePlusVertex { k, t } => {
            require(k >= 1, "K(k,t) needs k >= 1")?;
            require(t <= k, "K(k,t) needs t <= k")?;
            clique_plus_vertex(k, t)
        }
    };
    Ok(core.with_isolated(pad_isolated))
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg.into()))
    }
}

fn complete(k: usize) -> Graph {
    let adj = (0..k).map(|u| (0..k).filter(|&v| v != u).collect()).collect();
    Graph { adj }
}

fn complete_bipartite(s: usize, t: usize) -> Graph {
    let adj = (0..s + t)
        .map(|u| if u < s { (s..s + t).collect() } else { (0..s).collect() })
        .collect();
    Graph { adj }
}

fn clique_plus_vertex(k: usize, t: usize) -> Graph {
    let mut g = complete(k);
    if t > 0 {
        g.adj.push((0..t).collect());
        for v in 0..t {
            g.adj[v].push(k);
        }
    }
    g
}

/// Isomorphism-invariant key for graphs with at most [`CANONICAL_MAX_N`] vertices.
///
/// The key is an adjacency bit string read column by column over the upper triangle,
/// pairs `(0,1), (0,2), (1,2), (0,3), ...`, first pair in the most significant bit,
/// minimized over vertex relabelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalKey {
    n: usize,
    bits: u64,
}

impl CanonicalKey {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// A representative graph of the isomorphism class.
    pub fn to_graph(&self) -> Graph {
        let n = self.n;
        let pairs = n * n.saturating_sub(1) / 2;
        let edges = (1..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| self.bits >> key_shift(pairs, u, v) & 1 == 1);
        Graph::from_edges(n, edges).expect("key bits describe a simple graph")
    }
}

/// Bit position of pair `u < v` in a [`CanonicalKey`] over `pairs` pairs.
fn key_shift(pairs: usize, u: usize, v: usize) -> usize {
    pairs - 1 - (v * (v - 1) / 2 + u)
}

/// Canonical key by exhaustive search over relabelings that list vertices in
/// non-increasing degree order. Degree is an isomorphism invariant, so the restricted
/// minimum is still a complete invariant. Placing vertex `s` decides a high-order
/// prefix of the key, which lets the search prune partial labelings already worse
/// than the best complete one.
pub fn canonical_key(g: &Graph) -> Result<CanonicalKey> {
    let n = g.n();
    if n > CANONICAL_MAX_N {
        return Err(Error::ScopeExceeded {
            what: "canonical labeling vertex count",
            limit: CANONICAL_MAX_N,
            got: n,
        });
    }
    if n < 2 {
        return Ok(CanonicalKey { n, bits: 0 });
    }
    let mut slot_degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    slot_degree.sort_unstable_by(|a, b| b.cmp(a));

    let mut search = CanonSearch {
        g,
        n,
        pairs: n * (n - 1) / 2,
        slot_degree,
        slot_vertex: vec![usize::MAX; n],
        used: vec![false; n],
        best: u64::MAX,
    };
    search.assign(0, 0);
    Ok(CanonicalKey { n, bits: search.best })
}

struct CanonSearch<'a> {
    g: &'a Graph,
    n: usize,
    pairs: usize,
    slot_degree: Vec<usize>,
    slot_vertex: Vec<usize>,
    used: Vec<bool>,
    best: u64,
}

impl CanonSearch<'_> {
    fn assign(&mut self, slot: usize, partial: u64) {
        if slot == self.n {
            self.best = self.best.min(partial);
            return;
        }
        for v in 0..self.n {
            if self.used[v] || self.g.degree(v) != self.slot_degree[slot] {
                continue;
            }
            let mut bits = partial;
            for earlier in 0..slot {
                if self.g.has_edge(self.slot_vertex[earlier], v) {
                    bits |= 1 << key_shift(self.pairs, earlier, slot);
                }
            }
            // Pairs among slots 0..=slot occupy the top C(slot+1, 2) bits.
            let undecided = self.pairs - (slot + 1) * slot / 2;
            if self.best != u64::MAX && shr(bits, undecided) > shr(self.best, undecided) {
                continue;
            }
            self.used[v] = true;
            self.slot_vertex[slot] = v;
            self.assign(slot + 1, bits);
            self.used[v] = false;
        }
    }
}

fn shr(x: u64, by: usize) -> u64 {
    x.checked_shr(by as u32).unwrap_or(0)
}

/// Proper 2-coloring (`false` = side X, `true` = side Y) if `g` is bipartite.
/// Each component's smallest vertex, and every isolated vertex, lands on side X.
pub fn bipartition(g: &Graph) -> Option<Vec<bool>> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued vertices are colored");
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.expect("all vertices colored")).collect())
}
