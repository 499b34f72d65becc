//! Closed-form entropy minima and the graphs attaining them.

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::entropy::{compute_entropy, exact_key};
use crate::error::{Error, Result};
use crate::graph::{build_named, Family, Graph};
use crate::sequences::max_bipartite_edges;

/// A lower bound on `I_d` over a family of graphs and the graphs meeting it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalResult {
    #[serde(serialize_with = "crate::serialize_round9")]
    pub bound: f64,
    /// `prod d^d` of any graph attaining the bound.
    #[serde(serialize_with = "serialize_decimal")]
    pub exact_key_at_bound: BigUint,
    #[serde(serialize_with = "serialize_graphs")]
    pub graphs: Vec<Graph>,
    /// Human-readable name of each graph in `graphs`.
    pub names: Vec<String>,
    pub attained: bool,
}

fn serialize_decimal<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

fn serialize_graphs<S: Serializer>(gs: &[Graph], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(gs.iter().map(Graph::to_edge_list))
}

pub fn binom2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Largest `k` with `C(k, 2) <= m`.
pub fn k_star(m: u64) -> u64 {
    let mut k = 1;
    while binom2(k + 1) <= m {
        k += 1;
    }
    k
}

/// `m - C(k*, 2)`; always below `k*`.
pub fn t_star(m: u64) -> u64 {
    m - binom2(k_star(m))
}

pub fn sigma(x: u64) -> u64 {
    u64::from(x != 0)
}

fn x_log_x(x: u64) -> f64 {
    if x == 0 {
        0.0
    } else {
        x as f64 * (x as f64).log2()
    }
}

fn check_general_range(n: u64, m: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    if m < 1 || m > binom2(n) {
        return Err(Error::InvalidParameter(format!("m = {m} outside 1..={}", binom2(n))));
    }
    Ok(())
}

/// Minimum entropy over `(n, m)`-graphs, attained only by `K(k*, t*) ∪ K̄_{n-k*-σ(t*)}`.
pub fn min_entropy_general(n: u64, m: u64) -> Result<ExtremalResult> {
    check_general_range(n, m)?;
    let (k, t) = (k_star(m), t_star(m));
    let core_n = k + sigma(t);
    if n < core_n {
        return Err(Error::PreconditionUnmet(format!(
            "K({k},{t}) needs {core_n} vertices but n = {n}"
        )));
    }
    let two_m = 2 * m;
    let h = t as f64 * k as f64 * (k as f64).log2() + (k - t) as f64 * x_log_x(k - 1) + x_log_x(t);
    let bound = (two_m as f64).log2() - h / two_m as f64;
    let key = BigUint::from(k).pow(u32::try_from(t * k).expect("small exponent"))
        * BigUint::from(k - 1).pow(u32::try_from((k - t) * (k - 1)).expect("small exponent"))
        * BigUint::from(t).pow(u32::try_from(t).expect("small exponent"));
    let pad = (n - core_n) as usize;
    let graph = build_named(Family::CliquePlusVertex { k: k as usize, t: t as usize }, pad)?;
    Ok(ExtremalResult {
        bound,
        exact_key_at_bound: key,
        graphs: vec![graph],
        names: vec![with_isolated_name(clique_plus_vertex_name(k, t), pad)],
        attained: true,
    })
}

/// `1 + log2 sqrt(m)` over `(n, m)`-bipartite graphs; attained by each
/// `K_{q,b} ∪ K̄_{n-q-b}` with `qb = m`, `q <= b`, `q + b <= n`, listed by increasing `q`.
pub fn min_entropy_bipartite(n: u64, m: u64) -> Result<ExtremalResult> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    let max_m = max_bipartite_edges(n as usize) as u64;
    if m < 1 || m > max_m {
        return Err(Error::InvalidParameter(format!("m = {m} outside 1..={max_m}")));
    }
    let mut graphs = Vec::new();
    let mut names = Vec::new();
    for q in (1..).take_while(|q| q * q <= m) {
        if !m.is_multiple_of(q) || q + m / q > n {
            continue;
        }
        let b = m / q;
        let pad = (n - q - b) as usize;
        graphs.push(build_named(Family::CompleteBipartite { s: q as usize, t: b as usize }, pad)?);
        names.push(with_isolated_name(format!("K_{{{q},{b}}}"), pad));
    }
    Ok(ExtremalResult {
        bound: 1.0 + 0.5 * (m as f64).log2(),
        exact_key_at_bound: BigUint::from(m).pow(u32::try_from(m).expect("small exponent")),
        attained: !graphs.is_empty(),
        graphs,
        names,
    })
}

/// Minimum entropy over trees on `n` vertices: the star `K_{1,n-1}`.
pub fn star_bound(n: u64) -> Result<ExtremalResult> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    let m = n - 1;
    Ok(ExtremalResult {
        bound: 1.0 + 0.5 * (m as f64).log2(),
        exact_key_at_bound: BigUint::from(m).pow(u32::try_from(m).expect("small exponent")),
        graphs: vec![build_named(Family::Star { n: n as usize }, 0)?],
        names: vec![format!("K_{{1,{m}}}")],
        attained: true,
    })
}

/// Whether `B(n, m, b)` is defined: `1 <= b <= m` and the construction fits in `n`.
pub fn b_fits(n: u64, m: u64, b: u64) -> bool {
    if b < 1 || b > m {
        return false;
    }
    let (q, r) = (m / b, m % b);
    q + sigma(r) + b <= n
}

/// `B(n, m, b)`: `x_1..x_q` joined to all of `y_1..y_b`, `x_{q+1}` joined to
/// `y_1..y_r` where `q = ⌊m/b⌋`, `r = m - qb`, padded with isolated vertices.
///
/// Vertices are labeled X side first, then `y_1..y_b`, then the padding.
pub fn construct_b(n: u64, m: u64, b: u64) -> Result<Graph> {
    if b < 1 || b > m {
        return Err(Error::InvalidParameter(format!("B(n,m,b) needs 1 <= b <= m, got b = {b}, m = {m}")));
    }
    if !b_fits(n, m, b) {
        return Err(Error::InvalidParameter(format!("B({n},{m},{b}) does not fit in {n} vertices")));
    }
    let (q, r) = ((m / b) as usize, (m % b) as usize);
    let b = b as usize;
    let xs = q + usize::from(r > 0);
    let y = |j: usize| xs + j;
    let full = (0..q).flat_map(|i| (0..b).map(move |j| (i, y(j))));
    let partial = (0..r).map(|j| (q, y(j)));
    Graph::from_edges(n as usize, full.chain(partial))
}

pub fn clique_plus_vertex_name(k: u64, t: u64) -> String {
    if t == 0 {
        format!("K_{k}")
    } else {
        format!("K({k},{t})")
    }
}

/// Appends `∪ K̄_pad` when `pad > 0`.
pub fn with_isolated_name(core: String, pad: usize) -> String {
    if pad == 0 {
        core
    } else {
        format!("{core} ∪ K̄_{pad}")
    }
}

/// Checks that `result`'s bound and key match each of its graphs.
pub fn result_is_consistent(result: &ExtremalResult) -> bool {
    result.graphs.iter().all(|g| match compute_entropy(&g.degree_sequence()) {
        Ok(r) => r.exact_key == result.exact_key_at_bound && (r.i_d - result.bound).abs() <= 1e-9,
        Err(_) => false,
    })
}

/// Key of `K_{q,b}`, which is `m^m` for `m = qb`.
pub fn complete_bipartite_key(q: u32, b: u32) -> BigUint {
    let mut degs = vec![b; q as usize];
    degs.extend(std::iter::repeat_n(q, b as usize));
    exact_key(&degs)
}
