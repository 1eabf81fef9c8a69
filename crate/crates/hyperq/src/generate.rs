//! Hypergraph families for tests, corpora, and experiments: the worked
//! five-vertex example, complete and cyclic k-graphs, stars, seeded random
//! connected k-graphs, and generalized power hypergraphs.
//!
//! Every generator output passes full [`Hypergraph`] validation. Random
//! generation draws from an explicit counter-based stream keyed by
//! (seed, attempt) so corpora are reproducible bit-for-bit.

use std::collections::BTreeSet;
use std::ops::Range;

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::rng::SplitMix64;

const RANDOM_MAX_ATTEMPTS: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("no connected {k}-uniform hypergraph on {n} vertices with {m} edges exists")]
    Infeasible { n: usize, k: usize, m: usize },
    #[error("no connected sample found after {attempts} attempts")]
    RetriesExhausted { attempts: u64 },
}

/// The worked example: five vertices, three 3-edges
/// {1,2,3}, {1,4,5}, {3,4,5} in 1-based naming.
pub fn example_fig1() -> Hypergraph {
    Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![0, 3, 4], vec![2, 3, 4]])
        .expect("the worked example is valid")
}

/// Complete k-graph: all C(n, k) edges. C(n−1, k−1)-regular.
pub fn complete_kgraph(n: usize, k: usize) -> Result<Hypergraph, GenError> {
    if k < 2 || n < k {
        return Err(GenError::BadParams(format!("need n >= k >= 2, got n={n}, k={k}")));
    }
    let mut edges = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        edges.push(current.clone());
        if !next_combination(&mut current, n) {
            return Ok(Hypergraph::new(n, k, edges).expect("complete family is valid"));
        }
    }
}

/// Advances to the next k-combination of 0..n in lexicographic order.
fn next_combination(current: &mut [usize], n: usize) -> bool {
    let k = current.len();
    for i in (0..k).rev() {
        if current[i] < n - (k - i) {
            current[i] += 1;
            for j in i + 1..k {
                current[j] = current[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Cyclic k-graph: edges {i, i+1, …, i+k−1} mod n for i = 0..n.
/// k-regular and connected for every n > k.
pub fn cyclic_kgraph(n: usize, k: usize) -> Result<Hypergraph, GenError> {
    if k < 2 || n <= k {
        return Err(GenError::BadParams(format!("need n > k >= 2, got n={n}, k={k}")));
    }
    let edges = (0..n)
        .map(|i| (0..k).map(|j| (i + j) % n).collect())
        .collect();
    Ok(Hypergraph::new(n, k, edges).expect("cyclic family is valid"))
}

/// Star graph: center 0 joined to each of 1..n by a 2-edge. Edge-regular
/// (every edge degree sum is n) without being regular for n ≥ 4.
pub fn star_graph(n: usize) -> Result<Hypergraph, GenError> {
    if n < 3 {
        return Err(GenError::BadParams(format!("star needs n >= 3, got n={n}")));
    }
    let edges = (1..n).map(|v| vec![0, v]).collect();
    Ok(Hypergraph::new(n, 2, edges).expect("star family is valid"))
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Seeded sample of a connected k-graph with exactly `m` distinct edges.
///
/// Connectivity is possible iff m·(k−1) ≥ n−1 and m ≤ C(n, k); within those
/// limits the generator redraws (deterministically, keyed by seed and attempt
/// number) until a connected edge set appears, up to 1000 attempts.
pub fn random_connected_kgraph(
    n: usize,
    k: usize,
    m: usize,
    seed: u64,
) -> Result<Hypergraph, GenError> {
    if k < 2 || n < k {
        return Err(GenError::BadParams(format!("need n >= k >= 2, got n={n}, k={k}")));
    }
    if m == 0 && n > 1 {
        return Err(GenError::Infeasible { n, k, m });
    }
    if m * (k - 1) < n - 1 || (m as u128) > binomial(n, k) {
        return Err(GenError::Infeasible { n, k, m });
    }
    for attempt in 0..RANDOM_MAX_ATTEMPTS {
        let mut rng = SplitMix64::new(seed ^ attempt.wrapping_mul(0xA076_1D64_78BD_642F));
        let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut scratch: Vec<usize> = (0..n).collect();
        let mut draws = 0u32;
        while edges.len() < m && draws < 100_000 {
            draws += 1;
            // partial Fisher-Yates: a uniform k-subset in the prefix
            for i in 0..k {
                let j = i + rng.below(n - i);
                scratch.swap(i, j);
            }
            let mut edge = scratch[..k].to_vec();
            edge.sort_unstable();
            edges.insert(edge);
        }
        if edges.len() < m {
            continue;
        }
        let h = Hypergraph::new(n, k, edges.into_iter().collect())
            .expect("sampled edges are valid by construction");
        if h.is_connected() {
            return Ok(h);
        }
    }
    Err(GenError::RetriesExhausted { attempts: RANDOM_MAX_ATTEMPTS })
}

/// A generalized power hypergraph together with the vertex bookkeeping that
/// links it back to its base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerHypergraph {
    pub hypergraph: Hypergraph,
    /// vertex_blocks[v] is the id range of the s clones of base vertex v.
    pub vertex_blocks: Vec<Range<usize>>,
    /// edge_padding[j] is the id range of the r−ks fresh vertices of edge j.
    pub edge_padding: Vec<Range<usize>>,
}

/// The r-uniform power hypergraph: every base vertex becomes a block of `s`
/// clones and every base edge gains r−ks fresh vertices.
///
/// Clones of base vertex v occupy ids [v·s, v·s+s); the padding of edge j
/// (canonical base order) occupies ids n·s + j·(r−ks) onward, so serialized
/// outputs are reproducible. Requires s ≥ 1 and r ≥ k·s; with s = 1 and
/// r = k the construction is the identity.
///
/// Each clone keeps its base vertex's degree and each padding vertex has
/// degree 1, so edge-regular bases yield edge-regular powers.
pub fn power_hypergraph(base: &Hypergraph, r: usize, s: usize) -> Result<PowerHypergraph, GenError> {
    if s < 1 || r < base.k() * s {
        return Err(GenError::BadParams(format!(
            "need s >= 1 and r >= k*s, got r={r}, s={s}, k={}",
            base.k()
        )));
    }
    let pad = r - base.k() * s;
    let n = base.n() * s + base.m() * pad;
    let vertex_blocks: Vec<Range<usize>> = (0..base.n()).map(|v| v * s..(v + 1) * s).collect();
    let pad_base = base.n() * s;
    let edge_padding: Vec<Range<usize>> = (0..base.m())
        .map(|j| pad_base + j * pad..pad_base + (j + 1) * pad)
        .collect();
    let edges: Vec<Vec<usize>> = base
        .edges()
        .iter()
        .enumerate()
        .map(|(j, edge)| {
            let mut e: Vec<usize> = edge
                .iter()
                .flat_map(|&v| vertex_blocks[v].clone())
                .chain(edge_padding[j].clone())
                .collect();
            e.sort_unstable();
            e
        })
        .collect();
    let hypergraph = Hypergraph::new(n, r, edges).expect("power construction is valid");
    Ok(PowerHypergraph { hypergraph, vertex_blocks, edge_padding })
}
