//! Scalar parameters of the principal eigenvector: the vertex-entry extremes
//! and their ratio γ, the edge-sum extremes and their ratio Γ, regularity and
//! edge-regularity verdicts, the closed-form eigenpair of edge-regular
//! hypergraphs, and the constrained power-sum bound.
//!
//! Regularity and edge-regularity are decided in exact integer arithmetic,
//! never read off the floating-point eigenvector; the spectral measures γ and
//! Γ are then checked against those integer verdicts by the certifier.

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::matrix::norm2;
use crate::spectra::{signless_laplacian, SpectralError, SpectralResult};

/// Tie tolerance when collecting argmin/argmax sets.
pub const ARG_TIE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("hypergraph is not connected")]
    NotConnected,
    #[error("hypergraph has no edges")]
    NoEdges,
    #[error("hypergraph is not edge-regular")]
    NotEdgeRegular,
    #[error("exponents must satisfy 1 <= r <= s with n >= 1, got n={n}, r={r}, s={s}")]
    BadExponents { n: usize, r: u32, s: u32 },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Smallest and largest entries of the principal eigenvector, their argument
/// sets, and the irregularity ratio γ = x_max / x_min.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexExtremes {
    pub x_min: f64,
    pub x_max: f64,
    pub argmin: Vec<usize>,
    pub argmax: Vec<usize>,
    pub gamma: f64,
}

/// Smallest and largest edge sums x(e), their argument edges, and the
/// edge-irregularity ratio Γ = x(max) / x(min).
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeExtremes {
    pub xe_min: f64,
    pub xe_max: f64,
    pub argmin_edges: Vec<usize>,
    pub argmax_edges: Vec<usize>,
    pub big_gamma: f64,
}

/// Exact integer regularity verdicts.
///
/// A hypergraph is edge-regular when Σ_{v∈e} d(v) is the same for every edge;
/// with no edges the condition is vacuously true and `constant_degree_sum` is
/// absent. Regular implies edge-regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub is_regular: bool,
    pub is_edge_regular: bool,
    pub edge_degree_sum_min: Option<u64>,
    pub edge_degree_sum_max: Option<u64>,
    /// The common edge degree sum, present iff edge-regular with ≥ 1 edge.
    pub constant_degree_sum: Option<u64>,
    /// A pair of edge indices with differing degree sums, when not edge-regular.
    pub witness: Option<(usize, usize)>,
}

/// Extremes of the principal eigenvector entries.
///
/// Requires a connected hypergraph (the Perron vector of a disconnected one
/// may carry zero entries, making γ meaningless).
pub fn vertex_extremes(
    h: &Hypergraph,
    spectral: &SpectralResult,
) -> Result<VertexExtremes, ParamError> {
    if !h.is_connected() {
        return Err(ParamError::NotConnected);
    }
    let x = &spectral.x;
    let x_min = x.iter().copied().fold(f64::INFINITY, f64::min);
    let x_max = x.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let argmin = (0..x.len()).filter(|&v| x[v] <= x_min + ARG_TIE_TOL).collect();
    let argmax = (0..x.len()).filter(|&v| x[v] >= x_max - ARG_TIE_TOL).collect();
    Ok(VertexExtremes { x_min, x_max, argmin, argmax, gamma: x_max / x_min })
}

/// Extremes of the edge sums x(e).
pub fn edge_extremes(
    h: &Hypergraph,
    spectral: &SpectralResult,
) -> Result<EdgeExtremes, ParamError> {
    if !h.is_connected() {
        return Err(ParamError::NotConnected);
    }
    if h.m() == 0 {
        return Err(ParamError::NoEdges);
    }
    let sums: Vec<f64> = h
        .edges()
        .iter()
        .map(|edge| edge.iter().map(|&v| spectral.x[v]).sum())
        .collect();
    let xe_min = sums.iter().copied().fold(f64::INFINITY, f64::min);
    let xe_max = sums.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let argmin_edges = (0..sums.len()).filter(|&j| sums[j] <= xe_min + ARG_TIE_TOL).collect();
    let argmax_edges = (0..sums.len()).filter(|&j| sums[j] >= xe_max - ARG_TIE_TOL).collect();
    Ok(EdgeExtremes { xe_min, xe_max, argmin_edges, argmax_edges, big_gamma: xe_max / xe_min })
}

/// Integer regularity and edge-regularity verdicts with witnesses.
pub fn regularity_report(h: &Hypergraph) -> RegularityReport {
    let degrees = h.degrees();
    let is_regular = degrees.windows(2).all(|w| w[0] == w[1]);
    if h.m() == 0 {
        return RegularityReport {
            is_regular,
            is_edge_regular: true,
            edge_degree_sum_min: None,
            edge_degree_sum_max: None,
            constant_degree_sum: None,
            witness: None,
        };
    }
    let sums: Vec<u64> = h
        .edges()
        .iter()
        .map(|edge| edge.iter().map(|&v| degrees[v] as u64).sum())
        .collect();
    let (mut arg_min, mut arg_max) = (0usize, 0usize);
    for (j, &s) in sums.iter().enumerate() {
        if s < sums[arg_min] {
            arg_min = j;
        }
        if s > sums[arg_max] {
            arg_max = j;
        }
    }
    let (lo, hi) = (sums[arg_min], sums[arg_max]);
    let is_edge_regular = lo == hi;
    RegularityReport {
        is_regular,
        is_edge_regular,
        edge_degree_sum_min: Some(lo),
        edge_degree_sum_max: Some(hi),
        constant_degree_sum: is_edge_regular.then_some(lo),
        witness: (!is_edge_regular).then_some((arg_min, arg_max)),
    }
}

/// Closed-form principal eigenpair of a connected edge-regular hypergraph:
/// ρ equals the common edge degree sum and x_u = d(u)/√(ρ·m).
///
/// The result is verified before returning: ‖x‖₂ = 1 and Q·x = ρ·x, both to
/// 1e−9. Failing either check indicates a bug, not bad input.
pub fn edge_regular_closed_form(h: &Hypergraph) -> Result<(f64, Vec<f64>), ParamError> {
    if !h.is_connected() {
        return Err(ParamError::NotConnected);
    }
    let report = regularity_report(h);
    let rho = match report.constant_degree_sum {
        Some(d) => d as f64,
        None => {
            return Err(if h.m() == 0 { ParamError::NoEdges } else { ParamError::NotEdgeRegular })
        }
    };
    let m = h.m() as f64;
    let scale = (rho * m).sqrt();
    let x: Vec<f64> = h.degrees().into_iter().map(|d| d as f64 / scale).collect();
    let norm = norm2(&x);
    if (norm - 1.0).abs() > 1e-9 {
        return Err(SpectralError::InternalIdentityViolation(format!(
            "closed-form vector has norm {norm}"
        ))
        .into());
    }
    let q = signless_laplacian(h)?;
    let y = q.mul_vec(&x);
    let worst = y
        .iter()
        .zip(&x)
        .map(|(yi, xi)| (yi - rho * xi).abs())
        .fold(0.0f64, f64::max);
    if worst > 1e-9 {
        return Err(SpectralError::InternalIdentityViolation(format!(
            "closed-form vector misses the eigen equation by {worst}"
        ))
        .into());
    }
    Ok((rho, x))
}

/// Maximum of Σ xᵢʳ over positive vectors with Σ xᵢˢ = 1: equals n^((s−r)/s).
///
/// Requires 1 ≤ r ≤ s and n ≥ 1. With r = s the bound degenerates to 1; with
/// (r, s) = (1, 2) it is the √n cap on the eigenvector entry sum.
pub fn lagrange_sum_bound(n: usize, r: u32, s: u32) -> Result<f64, ParamError> {
    if n < 1 || r < 1 || r > s {
        return Err(ParamError::BadExponents { n, r, s });
    }
    Ok((n as f64).powf(f64::from(s - r) / f64::from(s)))
}
