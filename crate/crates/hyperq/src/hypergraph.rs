//! k-uniform hypergraphs and the combinatorial quantities derived from them:
//! degrees, set degrees, neighborhoods, walk distances, and the clique
//! multigraph.
//!
//! Vertices are dense ids `0..n`. Edges are stored canonically: strictly
//! ascending within each edge, and the edge list sorted lexicographically.
//! All values are immutable after construction, so everything here is a pure
//! function of its inputs.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::matrix::IntMatrix;

/// Validation failures when building or querying a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got k={0}")]
    BadUniformity(usize),
    #[error("edge {index} has {len} distinct vertices, expected k={expected}")]
    NonUniformEdge { index: usize, len: usize, expected: usize },
    #[error("edge {index} repeats vertex {vertex}")]
    DuplicateVertexInEdge { index: usize, vertex: usize },
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
    #[error("vertex set must be non-empty")]
    EmptySet,
}

/// A k-uniform hypergraph on vertices `0..n`.
///
/// Invariants: every edge holds exactly `k` distinct in-range vertices, no two
/// edges are equal as sets, `k >= 2`, `n >= 1`. The edge list may be empty.
///
/// ```
/// use hyperq::Hypergraph;
///
/// let h = Hypergraph::new(5, 3, vec![vec![0, 1, 2], vec![0, 3, 4], vec![2, 3, 4]]).unwrap();
/// assert_eq!(h.m(), 3);
/// assert_eq!(h.degrees(), vec![2, 1, 2, 2, 2]);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Validates and canonicalizes the edge list: each edge is sorted, edges
    /// are sorted lexicographically, duplicates (as sets) are rejected.
    pub fn new(n: usize, k: usize, edges: Vec<Vec<usize>>) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::BadUniformity(k));
        }
        if n < 1 {
            return Err(HypergraphError::VertexOutOfRange { vertex: 0, n });
        }
        let mut canonical: Vec<Vec<usize>> = Vec::with_capacity(edges.len());
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (index, edge) in edges.into_iter().enumerate() {
            for &v in &edge {
                if v >= n {
                    return Err(HypergraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            let mut sorted = edge;
            sorted.sort_unstable();
            if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                return Err(HypergraphError::DuplicateVertexInEdge { index, vertex: w[0] });
            }
            if sorted.len() != k {
                return Err(HypergraphError::NonUniformEdge { index, len: sorted.len(), expected: k });
            }
            if !seen.insert(sorted.clone()) {
                return Err(HypergraphError::DuplicateEdge { index });
            }
            canonical.push(sorted);
        }
        canonical.sort_unstable();
        Ok(Hypergraph { n, k, edges: canonical })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Uniformity (cardinality of every edge).
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonically ordered edge list.
    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Option<&[usize]> {
        self.edges.get(index).map(Vec::as_slice)
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    /// All vertex degrees, indexed by vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for edge in &self.edges {
            for &v in edge {
                d[v] += 1;
            }
        }
        d
    }

    /// Degree statistics: extremes, exact average, Zagreb index.
    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees = self.degrees();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
        let zagreb: u64 = degrees.iter().map(|&d| (d as u64) * (d as u64)).sum();
        DegreeProfile {
            degrees,
            max_degree,
            min_degree,
            avg_degree: Ratio::new(sum, self.n as u64),
            zagreb,
            edge_count: self.edges.len(),
        }
    }

    /// Number of edges containing every vertex of `alpha` simultaneously.
    /// For a singleton this is the vertex degree.
    pub fn set_degree(&self, alpha: &[usize]) -> Result<usize, HypergraphError> {
        if alpha.is_empty() {
            return Err(HypergraphError::EmptySet);
        }
        for &v in alpha {
            if v >= self.n {
                return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| alpha.iter().all(|v| e.binary_search(v).is_ok()))
            .count())
    }

    /// Open/closed neighborhoods of `v` and the indices of its incident edges.
    pub fn neighborhoods(&self, v: usize) -> Result<Neighborhoods, HypergraphError> {
        if v >= self.n {
            return Err(HypergraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut open: BTreeSet<usize> = BTreeSet::new();
        let mut incident_edges = Vec::new();
        for (j, edge) in self.edges.iter().enumerate() {
            if edge.binary_search(&v).is_ok() {
                incident_edges.push(j);
                open.extend(edge.iter().copied().filter(|&u| u != v));
            }
        }
        let mut closed = open.clone();
        closed.insert(v);
        Ok(Neighborhoods {
            open: open.into_iter().collect(),
            closed: closed.into_iter().collect(),
            incident_edges,
        })
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.n];
        for edge in &self.edges {
            for (a, &u) in edge.iter().enumerate() {
                for &w in &edge[a + 1..] {
                    adj[u].insert(w);
                    adj[w].insert(u);
                }
            }
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Pairwise walk distances via breadth-first search over shared edges,
    /// the connectivity flag, and the diameter (defined only when connected).
    ///
    /// A single vertex is connected with diameter 0; a disconnected hypergraph
    /// reports `diameter: None`.
    pub fn connectivity(&self) -> ConnectivityMetrics {
        let n = self.n;
        let adj = self.adjacency_lists();
        let mut distances: Vec<Vec<Option<u32>>> = vec![vec![None; n]; n];
        for start in 0..n {
            let dist = &mut distances[start];
            dist[start] = Some(0);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let du = dist[u].expect("queued vertices have distances");
                for &w in &adj[u] {
                    if dist[w].is_none() {
                        dist[w] = Some(du + 1);
                        queue.push_back(w);
                    }
                }
            }
        }
        let connected = distances.iter().all(|row| row.iter().all(Option::is_some));
        let diameter = if connected {
            distances
                .iter()
                .flat_map(|row| row.iter().map(|d| d.expect("connected")))
                .max()
        } else {
            None
        };
        ConnectivityMetrics { connected, distances, diameter }
    }

    /// Cheap connectivity test (single traversal, no distance matrix).
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// The clique multigraph: entry (u, v) counts the hyperedges containing
    /// both u and v; the diagonal is zero.
    pub fn clique_multigraph(&self) -> CliqueMultigraph {
        let mut pair_counts = IntMatrix::zero(self.n);
        for edge in &self.edges {
            for (a, &u) in edge.iter().enumerate() {
                for &w in &edge[a + 1..] {
                    pair_counts.add_assign(u, w, 1);
                    pair_counts.add_assign(w, u, 1);
                }
            }
        }
        CliqueMultigraph { n: self.n, pair_counts }
    }

    /// Exact integer check of the row-sum identity
    /// d(v) + Σ_{u ∈ N(v)} d({v,u}) = k·d(v), the row of the signless
    /// Laplacian at `v`.
    pub fn row_sum_check(&self, v: usize) -> Result<RowSumCheck, HypergraphError> {
        let nb = self.neighborhoods(v)?;
        let dv = nb.incident_edges.len() as u64;
        let mut lhs = dv;
        for &u in &nb.open {
            lhs += self.set_degree(&[v, u])? as u64;
        }
        let rhs = self.k as u64 * dv;
        Ok(RowSumCheck { lhs, rhs, holds: lhs == rhs })
    }
}

/// Per-vertex degrees plus the derived degree statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    /// Exact average degree (Σ d(v)) / n.
    pub avg_degree: Ratio,
    /// Zagreb index Σ d(v)².
    pub zagreb: u64,
    pub edge_count: usize,
}

impl DegreeProfile {
    /// True iff all degrees are equal (decided in exact integers).
    pub fn is_regular(&self) -> bool {
        self.max_degree == self.min_degree
    }
}

/// Exact nonnegative rational with a real rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Ratio { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Open neighborhood N(v), closed neighborhood N[v], and incident edge indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighborhoods {
    pub open: Vec<usize>,
    pub closed: Vec<usize>,
    pub incident_edges: Vec<usize>,
}

/// Connectivity flag, pairwise walk distances, and diameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityMetrics {
    pub connected: bool,
    /// distances[u][v] is the shortest walk length, None for unreachable pairs.
    pub distances: Vec<Vec<Option<u32>>>,
    /// Defined only for connected hypergraphs.
    pub diameter: Option<u32>,
}

/// Clique multigraph adjacency with edge multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueMultigraph {
    n: usize,
    pair_counts: IntMatrix,
}

impl CliqueMultigraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self, u: usize, v: usize) -> u64 {
        self.pair_counts.get(u, v)
    }

    pub fn pair_counts(&self) -> &IntMatrix {
        &self.pair_counts
    }
}

/// Both sides of the row-sum identity, compared exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowSumCheck {
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
}
