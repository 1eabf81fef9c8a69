//! Spectral analysis of k-uniform hypergraphs through the signless Laplacian
//! matrix Q = B·Bᵀ, where B is the vertex-edge incidence matrix.
//!
//! The crate builds Q two independent ways in exact integer arithmetic
//! (incidence Gram product, and degrees plus clique-multigraph adjacency),
//! computes the principal eigenpair (ρ, x) by power iteration with a dense
//! Jacobi diagonalization as oracle, derives the irregularity measures
//! γ = x_max/x_min over vertices and Γ = x(max)/x(min) over edge sums, and
//! certifies a catalog of thirty inequalities relating all of these with
//! per-record slack and equality diagnostics.
//!
//! ```
//! use hyperq::{certify, generate, CertifyConfig};
//!
//! // a star: edge-regular (every edge degree sum is 4) but not regular
//! let star = generate::star_graph(4).unwrap();
//! let report = certify::certify(&star, &CertifyConfig::default()).unwrap();
//!
//! assert!((report.analysis.spectral.rho - 4.0).abs() < 1e-9);
//! assert!(report.all_applicable_hold());
//! let t48 = report.checks.iter().find(|c| c.id == "T4.8").unwrap();
//! assert!(t48.holds);
//! ```
//!
//! The accompanying guide under `book/` walks through the concepts; its code
//! snippets are compiled and run as doc-tests via the [`book`] module.

pub mod certify;
pub mod generate;
pub mod hypergraph;
pub mod io;
pub mod matrix;
pub mod params;
pub mod spectra;

mod book;
mod rng;

pub use certify::{
    analyze, certify as certify_bounds, corpus_certify, Analysis, BoundCheck, CertificateReport,
    CertifyConfig, CorpusSummary, CATALOG,
};
pub use hypergraph::{DegreeProfile, Hypergraph, HypergraphError};
pub use params::{EdgeExtremes, RegularityReport, VertexExtremes};
pub use spectra::{SolverConfig, SpectralError, SpectralResult};
