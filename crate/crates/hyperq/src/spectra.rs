//! The signless Laplacian Q = B·Bᵀ = D + A_C and its eigenstructure.
//!
//! Q is assembled twice in exact integer arithmetic — once as the incidence
//! Gram matrix B·Bᵀ, once as degrees plus clique-multigraph adjacency — and
//! the two constructions are compared entrywise before anything floating
//! point happens. The principal eigenpair comes from power iteration (valid
//! here: Q is positive semidefinite with nonnegative entries, so the largest
//! eigenvalue is also largest in magnitude, and the all-ones start vector is
//! never orthogonal to the Perron vector). The full spectrum comes from a
//! cyclic Jacobi diagonalization and doubles as the oracle for the second
//! eigenvalue.
//!
//! ```
//! use hyperq::{generate, spectra, SolverConfig};
//!
//! let h = generate::cyclic_kgraph(6, 3).unwrap();
//! let q = spectra::signless_laplacian(&h).unwrap();
//! let cfg = SolverConfig::default();
//! let eig = spectra::principal_eigenpair(&q, cfg.tol, cfg.max_iter).unwrap();
//! assert!((eig.rho - 9.0).abs() < 1e-9);
//! ```

use thiserror::Error;

use crate::hypergraph::Hypergraph;
use crate::matrix::{dot, norm2, IncidenceMatrix, IntMatrix, SymMatrix};
use crate::rng::SplitMix64;

/// Residual tolerance ‖Qx − ρx‖∞ for the power iteration.
pub const DEFAULT_TOL: f64 = 1e-10;
/// Iteration cap for the power iteration.
pub const DEFAULT_MAX_ITER: usize = 100_000;
/// Largest order handled by the dense Jacobi diagonalization.
pub const DEFAULT_DENSE_LIMIT: usize = 512;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigensolver settings shared by the analysis pipeline and the CLI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub tol: f64,
    pub max_iter: usize,
    pub dense_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            dense_limit: DEFAULT_DENSE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("eigensolver did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("matrix order {order} exceeds the dense limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("vector length {got} does not match order {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("internal identity violated: {0}")]
    InternalIdentityViolation(String),
}

/// Principal eigenpair of Q plus solver diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    /// Spectral radius ρ.
    pub rho: f64,
    /// Principal eigenvector, unit Euclidean norm, entries nonnegative.
    pub x: Vec<f64>,
    /// Second largest eigenvalue, filled in by [`second_eigenvalue`].
    pub lambda2: Option<f64>,
    /// ‖Qx − ρx‖∞ at convergence.
    pub residual: f64,
    pub iterations: usize,
    /// Set when Q was identically zero (ρ = 0, x uniform).
    pub zero_matrix: bool,
}

/// 0/1 incidence matrix of `h`; column order matches the canonical edge order.
pub fn incidence_matrix(h: &Hypergraph) -> IncidenceMatrix {
    IncidenceMatrix::from_edges(h.n(), h.edges())
}

/// Diagonal degree matrix D.
pub fn degree_matrix(h: &Hypergraph) -> IntMatrix {
    let mut d = IntMatrix::zero(h.n());
    for (v, deg) in h.degrees().into_iter().enumerate() {
        d.set(v, v, deg as u64);
    }
    d
}

/// Both exact-integer constructions of Q: the incidence Gram matrix B·Bᵀ, and
/// degrees plus clique adjacency D + A_C.
pub fn signless_laplacian_routes(h: &Hypergraph) -> (IntMatrix, IntMatrix) {
    let gram = incidence_matrix(h).gram();
    let degrees = degree_matrix(h);
    let mut d_plus_ac = h.clique_multigraph().pair_counts().clone();
    for v in 0..h.n() {
        d_plus_ac.set(v, v, degrees.get(v, v));
    }
    (gram, d_plus_ac)
}

/// The signless Laplacian of `h`.
///
/// Computes Q both as B·Bᵀ and as D + A_C in exact integers and insists the
/// results agree entrywise before converting to floating point. A mismatch is
/// a bug in this crate, never a property of the input.
pub fn signless_laplacian(h: &Hypergraph) -> Result<SymMatrix, SpectralError> {
    let (gram, d_plus_ac) = signless_laplacian_routes(h);
    if gram != d_plus_ac {
        let n = h.n();
        for i in 0..n {
            for j in 0..n {
                if gram.get(i, j) != d_plus_ac.get(i, j) {
                    return Err(SpectralError::InternalIdentityViolation(format!(
                        "B·Bᵀ and D+A_C disagree at ({i},{j}): {} vs {}",
                        gram.get(i, j),
                        d_plus_ac.get(i, j)
                    )));
                }
            }
        }
    }
    Ok(gram.to_sym())
}

/// Power iteration for the principal eigenpair of a symmetric nonnegative
/// matrix, starting from the (normalized) all-ones vector.
///
/// Stops when ‖Qx − ρx‖∞ ≤ `tol` with ρ the Rayleigh quotient. The returned
/// vector has unit Euclidean norm and nonnegative entries. A zero matrix is
/// reported via the `zero_matrix` flag with ρ = 0 and a uniform vector.
pub fn principal_eigenpair(
    q: &SymMatrix,
    tol: f64,
    max_iter: usize,
) -> Result<SpectralResult, SpectralError> {
    assert!(tol > 0.0, "tolerance must be positive");
    let n = q.order();
    let uniform = 1.0 / (n as f64).sqrt();
    if q.max_abs() == 0.0 {
        return Ok(SpectralResult {
            rho: 0.0,
            x: vec![uniform; n],
            lambda2: None,
            residual: 0.0,
            iterations: 0,
            zero_matrix: true,
        });
    }
    let mut x = vec![uniform; n];
    for iteration in 1..=max_iter {
        let y = q.mul_vec(&x);
        let rho = dot(&x, &y);
        let residual = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| (yi - rho * xi).abs())
            .fold(0.0f64, f64::max);
        if residual <= tol {
            return Ok(SpectralResult {
                rho,
                x,
                lambda2: None,
                residual,
                iterations: iteration,
                zero_matrix: false,
            });
        }
        let norm = norm2(&y);
        if norm == 0.0 {
            // possible only if x fell entirely into the kernel; restart is
            // pointless because the start vector was strictly positive
            return Err(SpectralError::NoConvergence { iterations: iteration });
        }
        x = y;
        for xi in &mut x {
            *xi /= norm;
        }
    }
    Err(SpectralError::NoConvergence { iterations: max_iter })
}

/// All eigenvalues of `q` in descending order, via cyclic Jacobi rotations.
///
/// The sweep order is fixed, so results are deterministic. Off-diagonal mass
/// is driven below 1e−12·‖q‖_max.
pub fn full_spectrum(q: &SymMatrix, dense_limit: usize) -> Result<Vec<f64>, SpectralError> {
    let n = q.order();
    if n > dense_limit {
        return Err(SpectralError::TooLarge { order: n, limit: dense_limit });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let threshold = 1e-12 * q.max_abs();
    let mut a = q.data().to_vec();
    let idx = |i: usize, j: usize| i * n + j;
    for _sweep in 0..JACOBI_MAX_SWEEPS {
        let mut off_max = 0.0f64;
        for p in 0..n {
            for r in p + 1..n {
                off_max = off_max.max(a[idx(p, r)].abs());
            }
        }
        if off_max <= threshold {
            let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
            eigenvalues.sort_by(|x, y| y.partial_cmp(x).expect("finite eigenvalues"));
            return Ok(eigenvalues);
        }
        for p in 0..n - 1 {
            for r in p + 1..n {
                let apr = a[idx(p, r)];
                if apr == 0.0 {
                    continue;
                }
                let app = a[idx(p, p)];
                let arr = a[idx(r, r)];
                let theta = (arr - app) / (2.0 * apr);
                // smaller-angle root of t² + 2θt − 1 = 0, for stability
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for w in 0..n {
                    if w == p || w == r {
                        continue;
                    }
                    let awp = a[idx(w, p)];
                    let awr = a[idx(w, r)];
                    let new_wp = c * awp - s * awr;
                    let new_wr = s * awp + c * awr;
                    a[idx(w, p)] = new_wp;
                    a[idx(p, w)] = new_wp;
                    a[idx(w, r)] = new_wr;
                    a[idx(r, w)] = new_wr;
                }
                a[idx(p, p)] = app - t * apr;
                a[idx(r, r)] = arr + t * apr;
                a[idx(p, r)] = 0.0;
                a[idx(r, p)] = 0.0;
            }
        }
    }
    Err(SpectralError::NoConvergence { iterations: JACOBI_MAX_SWEEPS })
}

/// Second largest eigenvalue of `q`.
///
/// Uses the dense Jacobi spectrum when the order fits within `dense_limit`,
/// otherwise power iteration on the deflated matrix Q − ρ·x·xᵀ (the iterate is
/// re-projected against x every step, which keeps rounding drift from pulling
/// it back toward the Perron direction). Requires order ≥ 2.
pub fn second_eigenvalue(
    q: &SymMatrix,
    spectral: &SpectralResult,
    cfg: &SolverConfig,
) -> Result<f64, SpectralError> {
    let n = q.order();
    if n < 2 {
        return Err(SpectralError::DimensionMismatch { expected: 2, got: n });
    }
    if n <= cfg.dense_limit {
        let spectrum = full_spectrum(q, cfg.dense_limit)?;
        return Ok(spectrum[1]);
    }
    deflated_dominant(q, spectral.rho, &spectral.x, cfg.tol, cfg.max_iter)
}

/// Power iteration on Q − ρ·x·xᵀ. Exposed for cross-checking against the
/// dense spectrum at moderate orders.
pub fn deflated_dominant(
    q: &SymMatrix,
    rho: f64,
    x: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<f64, SpectralError> {
    let n = q.order();
    if x.len() != n {
        return Err(SpectralError::DimensionMismatch { expected: n, got: x.len() });
    }
    // deterministic start, made orthogonal to x
    let mut rng = SplitMix64::new(0xDEF1_A7ED_5EED_0001);
    let mut v: Vec<f64> = (0..n).map(|_| rng.unit_f64() - 0.5).collect();
    project_out(&mut v, x);
    let norm = norm2(&v);
    if norm < 1e-12 {
        // astronomically unlikely with the fixed stream; fall back to e0 - (x·e0)x
        v = vec![0.0; n];
        v[0] = 1.0;
        project_out(&mut v, x);
    }
    normalize(&mut v);
    for _ in 1..=max_iter {
        let mut y = q.mul_vec(&v);
        let xv = dot(x, &v);
        for (yi, xi) in y.iter_mut().zip(x) {
            *yi -= rho * xv * xi;
        }
        project_out(&mut y, x);
        let theta = dot(&v, &y);
        let residual = y
            .iter()
            .zip(&v)
            .map(|(yi, vi)| (yi - theta * vi).abs())
            .fold(0.0f64, f64::max);
        if residual <= tol {
            return Ok(theta);
        }
        let norm = norm2(&y);
        if norm == 0.0 {
            // deflated matrix annihilated the iterate: remaining spectrum is 0
            return Ok(0.0);
        }
        v = y;
        normalize(&mut v);
    }
    Err(SpectralError::NoConvergence { iterations: max_iter })
}

fn project_out(v: &mut [f64], x: &[f64]) {
    let c = dot(v, x);
    for (vi, xi) in v.iter_mut().zip(x) {
        *vi -= c * xi;
    }
}

fn normalize(v: &mut [f64]) {
    let norm = norm2(v);
    if norm > 0.0 {
        for vi in v.iter_mut() {
            *vi /= norm;
        }
    }
}

/// Per-edge sums x(e) = Σ_{v ∈ e} x_v and their sum of squares.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeSums {
    pub per_edge: Vec<f64>,
    pub sum_of_squares: f64,
}

/// Evaluates x(e) for every edge and checks the Rayleigh identity
/// xᵀQx = Σ_e x(e)² to 1e−9 relative accuracy before returning.
pub fn edge_sums(h: &Hypergraph, x: &[f64]) -> Result<EdgeSums, SpectralError> {
    if x.len() != h.n() {
        return Err(SpectralError::DimensionMismatch { expected: h.n(), got: x.len() });
    }
    let per_edge: Vec<f64> = h
        .edges()
        .iter()
        .map(|edge| edge.iter().map(|&v| x[v]).sum())
        .collect();
    let sum_of_squares: f64 = per_edge.iter().map(|s| s * s).sum();
    let q = signless_laplacian(h)?;
    let quad = q.quadratic_form(x);
    let scale = 1.0f64.max(sum_of_squares.abs()).max(quad.abs());
    if (sum_of_squares - quad).abs() > 1e-9 * scale {
        return Err(SpectralError::InternalIdentityViolation(format!(
            "Σ x(e)² = {sum_of_squares} but xᵀQx = {quad}"
        )));
    }
    Ok(EdgeSums { per_edge, sum_of_squares })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete_kgraph, cyclic_kgraph, example_fig1, star_graph};

    fn solve(h: &Hypergraph) -> (SymMatrix, SpectralResult) {
        let q = signless_laplacian(h).unwrap();
        let eig = principal_eigenpair(&q, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        (q, eig)
    }

    #[test]
    fn incidence_of_example() {
        let inc = incidence_matrix(&example_fig1());
        assert_eq!((inc.rows(), inc.cols()), (5, 3));
        // canonical edge order: {1,2,3}, {1,4,5}, {3,4,5} in 1-based naming
        for (e, members) in [(0, [0usize, 1, 2]), (1, [0, 3, 4]), (2, [2, 3, 4])] {
            for v in 0..5 {
                assert_eq!(inc.get(v, e), members.contains(&v));
            }
            assert_eq!(inc.column_sum(e), 3);
        }
        for v in 0..5 {
            assert_eq!(inc.row_sum(v), example_fig1().degree(v));
        }
    }

    #[test]
    fn incidence_single_edge_and_empty() {
        let single = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let inc = incidence_matrix(&single);
        assert_eq!((inc.rows(), inc.cols()), (2, 1));
        assert!(inc.get(0, 0) && inc.get(1, 0));

        let empty = Hypergraph::new(4, 2, vec![]).unwrap();
        let inc = incidence_matrix(&empty);
        assert_eq!((inc.rows(), inc.cols()), (4, 0));
        assert_eq!(inc.gram(), IntMatrix::zero(4));
    }

    #[test]
    fn laplacian_of_example() {
        let q = signless_laplacian(&example_fig1()).unwrap();
        let expected_row0 = [2.0, 1.0, 1.0, 1.0, 1.0];
        for (j, &want) in expected_row0.iter().enumerate() {
            assert_eq!(q.get(0, j), want);
        }
        assert_eq!(q.get(3, 4), 2.0);
        assert_eq!(q.get(1, 1), 1.0);
    }

    #[test]
    fn laplacian_single_edge_and_empty() {
        let q = signless_laplacian(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(q.get(i, j), 1.0);
            }
        }
        let zero = signless_laplacian(&Hypergraph::new(3, 2, vec![]).unwrap()).unwrap();
        assert_eq!(zero.max_abs(), 0.0);
    }

    #[test]
    fn both_constructions_agree_on_families() {
        for h in [
            example_fig1(),
            complete_kgraph(5, 3).unwrap(),
            cyclic_kgraph(7, 4).unwrap(),
            star_graph(6).unwrap(),
        ] {
            let (gram, d_plus_ac) = signless_laplacian_routes(&h);
            assert_eq!(gram, d_plus_ac);
        }
    }

    #[test]
    fn regular_eigenpair_is_exact() {
        let (_, eig) = solve(&cyclic_kgraph(6, 3).unwrap());
        assert!((eig.rho - 9.0).abs() < 1e-9);
        let uniform = 1.0 / 6f64.sqrt();
        for xi in &eig.x {
            assert!((xi - uniform).abs() < 1e-9);
        }
        assert!(!eig.zero_matrix);
        assert!(eig.residual <= DEFAULT_TOL);
    }

    #[test]
    fn star_eigenpair_matches_closed_form() {
        let (_, eig) = solve(&star_graph(4).unwrap());
        assert!((eig.rho - 4.0).abs() < 1e-9);
        let expected = [0.866025403784, 0.288675134595, 0.288675134595, 0.288675134595];
        for (a, b) in eig.x.iter().zip(expected) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn example_rho_inside_degree_bracket() {
        let (q, eig) = solve(&example_fig1());
        assert!(eig.rho > 5.4 + 1e-6);
        assert!(eig.rho < 6.0 - 1e-6);
        // dense oracle: the spectrum is {4+sqrt(3), 4-sqrt(3), 1, 0, 0}
        let spectrum = full_spectrum(&q, DEFAULT_DENSE_LIMIT).unwrap();
        assert!((eig.rho - spectrum[0]).abs() < 1e-8);
        assert!((spectrum[0] - (4.0 + 3f64.sqrt())).abs() < 1e-9);
        assert!((spectrum[1] - (4.0 - 3f64.sqrt())).abs() < 1e-9);
        assert!((spectrum[2] - 1.0).abs() < 1e-9);
        assert!(spectrum[3].abs() < 1e-9);
        assert!(spectrum[4].abs() < 1e-9);
    }

    #[test]
    fn zero_matrix_is_flagged() {
        let (_, eig) = solve(&Hypergraph::new(3, 2, vec![]).unwrap());
        assert!(eig.zero_matrix);
        assert_eq!(eig.rho, 0.0);
        for xi in &eig.x {
            assert!((xi - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        }
    }

    #[test]
    fn power_iteration_reports_non_convergence() {
        let q = signless_laplacian(&star_graph(4).unwrap()).unwrap();
        let err = principal_eigenpair(&q, 1e-30, 3).unwrap_err();
        assert_eq!(err, SpectralError::NoConvergence { iterations: 3 });
    }

    #[test]
    fn spectrum_of_single_edge_graph() {
        let q = signless_laplacian(&Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap()).unwrap();
        let spectrum = full_spectrum(&q, DEFAULT_DENSE_LIMIT).unwrap();
        assert!((spectrum[0] - 2.0).abs() < 1e-12);
        assert!(spectrum[1].abs() < 1e-12);
    }

    #[test]
    fn spectrum_trace_identity() {
        for h in [example_fig1(), cyclic_kgraph(6, 3).unwrap(), star_graph(5).unwrap()] {
            let q = signless_laplacian(&h).unwrap();
            let spectrum = full_spectrum(&q, DEFAULT_DENSE_LIMIT).unwrap();
            let trace: f64 = spectrum.iter().sum();
            assert!((trace - (h.k() * h.m()) as f64).abs() < 1e-8);
        }
    }

    #[test]
    fn spectrum_respects_dense_limit() {
        let q = signless_laplacian(&example_fig1()).unwrap();
        assert_eq!(
            full_spectrum(&q, 4).unwrap_err(),
            SpectralError::TooLarge { order: 5, limit: 4 }
        );
    }

    #[test]
    fn second_eigenvalue_values() {
        let cfg = SolverConfig::default();

        let single = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let (q, eig) = solve(&single);
        assert!(second_eigenvalue(&q, &eig, &cfg).unwrap().abs() < 1e-9);

        let (q, eig) = solve(&cyclic_kgraph(6, 3).unwrap());
        let lambda2 = second_eigenvalue(&q, &eig, &cfg).unwrap();
        assert!((lambda2 - 4.0).abs() < 1e-8);
        assert!(lambda2 < 9.0);

        let (q, eig) = solve(&example_fig1());
        let lambda2 = second_eigenvalue(&q, &eig, &cfg).unwrap();
        assert!((lambda2 - (4.0 - 3f64.sqrt())).abs() < 1e-8);
    }

    #[test]
    fn second_eigenvalue_needs_order_two() {
        let h = Hypergraph::new(1, 2, vec![]).unwrap();
        let (q, eig) = solve(&h);
        assert_eq!(
            second_eigenvalue(&q, &eig, &SolverConfig::default()).unwrap_err(),
            SpectralError::DimensionMismatch { expected: 2, got: 1 }
        );
    }

    #[test]
    fn deflation_agrees_with_dense() {
        for h in [
            example_fig1(),
            star_graph(5).unwrap(),
            cyclic_kgraph(8, 3).unwrap(),
            complete_kgraph(5, 2).unwrap(),
        ] {
            let (q, eig) = solve(&h);
            let dense = full_spectrum(&q, DEFAULT_DENSE_LIMIT).unwrap()[1];
            let deflated =
                deflated_dominant(&q, eig.rho, &eig.x, DEFAULT_TOL, 1_000_000).unwrap();
            assert!((dense - deflated).abs() < 1e-8, "dense {dense} vs deflated {deflated}");
        }
    }

    #[test]
    fn edge_sums_of_example_with_ones() {
        let h = example_fig1();
        let sums = edge_sums(&h, &[1.0; 5]).unwrap();
        assert_eq!(sums.per_edge, vec![3.0, 3.0, 3.0]);
        assert_eq!(sums.sum_of_squares, 27.0);
        // equals the all-ones quadratic form
        let q = signless_laplacian(&h).unwrap();
        assert_eq!(q.quadratic_form(&[1.0; 5]), 27.0);
    }

    #[test]
    fn edge_sums_zero_vector_and_mismatch() {
        let h = example_fig1();
        let sums = edge_sums(&h, &[0.0; 5]).unwrap();
        assert!(sums.per_edge.iter().all(|&s| s == 0.0));
        assert_eq!(
            edge_sums(&h, &[0.0; 4]).unwrap_err(),
            SpectralError::DimensionMismatch { expected: 5, got: 4 }
        );
    }

    #[test]
    fn edge_sums_regular_principal_vector() {
        let h = cyclic_kgraph(6, 3).unwrap();
        let (_, eig) = solve(&h);
        let sums = edge_sums(&h, &eig.x).unwrap();
        let expected = 3.0 / 6f64.sqrt();
        for s in sums.per_edge {
            assert!((s - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn solver_is_bit_deterministic() {
        let h = example_fig1();
        let (q1, a) = solve(&h);
        let (q2, b) = solve(&h);
        assert_eq!(q1, q2);
        assert_eq!(a.rho.to_bits(), b.rho.to_bits());
        assert_eq!(a.iterations, b.iterations);
        for (x, y) in a.x.iter().zip(&b.x) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        let s1 = full_spectrum(&q1, DEFAULT_DENSE_LIMIT).unwrap();
        let s2 = full_spectrum(&q2, DEFAULT_DENSE_LIMIT).unwrap();
        for (x, y) in s1.iter().zip(&s2) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }
}
