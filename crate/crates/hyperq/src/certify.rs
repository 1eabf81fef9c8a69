//! Evaluates the full catalog of eigenvector-entry and spectral-radius bounds
//! on a hypergraph, producing one machine-readable record per inequality with
//! its slack, applicability, and equality-condition verdict.
//!
//! Every bound quantifies over connected hypergraphs, so a disconnected input
//! yields an all-not-applicable report rather than an error. Bounds with ρ, δ,
//! λ₂, or a degree gap in a denominator carry explicit applicability rules
//! instead of producing infinities.
//!
//! One catalog entry deserves a warning: the T3.7 inequality
//! x_min ≤ √(kδ²/(ρ²+kδ²(n−δ))) does *not* hold for every connected
//! hypergraph. The smallest counterexample is a single 3-uniform edge, where
//! x_min = 1/√3 ≈ 0.577 exceeds the bound √(3/15) ≈ 0.447. The certifier
//! evaluates the inequality as written and reports such violations honestly.

use thiserror::Error;

use crate::hypergraph::{ConnectivityMetrics, DegreeProfile, Hypergraph};
use crate::params::{
    edge_extremes, regularity_report, vertex_extremes, EdgeExtremes, RegularityReport,
    VertexExtremes,
};
use crate::spectra::{
    principal_eigenpair, second_eigenvalue, signless_laplacian, SolverConfig, SpectralError,
    SpectralResult,
};

/// Inequality satisfaction tolerance: a record holds when slack ≥ −1e−8.
pub const DEFAULT_SLACK_TOL: f64 = 1e-8;
/// Equality detection tolerance: |slack| ≤ 1e−7 records an equality note.
pub const DEFAULT_EQ_TOL: f64 = 1e-7;

/// Stable keys of every certified bound, in report order.
pub const CATALOG: [&str; 30] = [
    "L2.4.lo", "L2.4.hi", "C2.7.lo", "C2.7.hi", "L2.8", "C3.3", "T3.4", "T3.4.min", "T3.4.max",
    "T3.6", "T3.7", "T3.8", "T3.9", "T3.10.a", "T3.10.b", "T3.11", "T3.12.a", "T3.12.b",
    "T4.2.lo", "T4.2.hi", "C4.3", "T4.5.a.lo", "T4.5.a.hi", "T4.5.b.lo", "T4.5.b.hi", "C4.6.lo",
    "C4.6.hi", "T4.12.lo", "T4.12.hi", "T4.8",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("unknown bound id {0:?}")]
    UnknownId(String),
}

/// Tolerances and eigensolver settings for a certification run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifyConfig {
    pub solver: SolverConfig,
    pub slack_tol: f64,
    pub eq_tol: f64,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            solver: SolverConfig::default(),
            slack_tol: DEFAULT_SLACK_TOL,
            eq_tol: DEFAULT_EQ_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

/// Records that an equality was observed (|slack| ≤ eq_tol) next to whether
/// the stated attainment condition is met. `condition_met: None` means the
/// condition cannot be decided mechanically (the semi-regular case). The note
/// never claims the converse direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityNote {
    pub condition: &'static str,
    pub condition_met: Option<bool>,
}

/// Per-vertex detail for the folded vertex-entry bound.
#[derive(Debug, Clone, PartialEq)]
pub struct PerVertexBound {
    pub vertex: usize,
    pub value: f64,
    pub bound: f64,
}

/// One certified inequality or identity.
///
/// For `<=` records slack = rhs − lhs, for `>=` records slack = lhs − rhs,
/// and for `=` records slack = −|lhs − rhs| / max(1, |lhs|, |rhs|) (relative,
/// so identities stay scale-free). `holds ⇔ slack ≥ −slack_tol` whenever the
/// record is applicable; non-applicable records hold vacuously and carry a
/// reason instead of values.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub id: &'static str,
    pub relation: Relation,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub holds: bool,
    pub applicable: bool,
    pub reason: Option<&'static str>,
    pub equality_note: Option<EqualityNote>,
    /// Folded records (T3.4) keep their per-vertex evaluations here.
    pub per_vertex: Option<Vec<PerVertexBound>>,
}

impl BoundCheck {
    pub fn violated(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Everything the bound catalog consumes, computed once per hypergraph.
#[derive(Debug, Clone, PartialEq)]
pub struct Analysis {
    pub hypergraph: Hypergraph,
    pub profile: DegreeProfile,
    pub connectivity: ConnectivityMetrics,
    pub spectral: SpectralResult,
    pub regularity: RegularityReport,
    /// Present iff the hypergraph is connected.
    pub vertex_extremes: Option<VertexExtremes>,
    /// Present iff connected with at least one edge.
    pub edge_extremes: Option<EdgeExtremes>,
}

/// Runs the full pipeline: degrees, distances, Q, principal eigenpair, second
/// eigenvalue, regularity verdicts, and (for connected inputs) the extremes.
pub fn analyze(h: &Hypergraph, solver: &SolverConfig) -> Result<Analysis, SpectralError> {
    let profile = h.degree_profile();
    let connectivity = h.connectivity();
    let q = signless_laplacian(h)?;
    let mut spectral = principal_eigenpair(&q, solver.tol, solver.max_iter)?;
    if h.n() >= 2 {
        spectral.lambda2 = Some(second_eigenvalue(&q, &spectral, solver)?);
    }
    let regularity = regularity_report(h);
    let vertex_ext = connectivity
        .connected
        .then(|| vertex_extremes(h, &spectral).expect("connected"));
    let edge_ext = (connectivity.connected && h.m() >= 1)
        .then(|| edge_extremes(h, &spectral).expect("connected with edges"));
    Ok(Analysis {
        hypergraph: h.clone(),
        profile,
        connectivity,
        spectral,
        regularity,
        vertex_extremes: vertex_ext,
        edge_extremes: edge_ext,
    })
}

/// Evaluates a single catalog bound against a computed [`Analysis`].
pub fn check_bound(
    id: &str,
    analysis: &Analysis,
    cfg: &CertifyConfig,
) -> Result<BoundCheck, CertifyError> {
    let id = CATALOG
        .iter()
        .copied()
        .find(|&key| key == id)
        .ok_or_else(|| CertifyError::UnknownId(id.to_string()))?;
    Ok(evaluate(id, analysis, cfg))
}

/// Full certificate: the analysis, one record per catalog id, and the
/// tolerances they were judged at.
#[derive(Debug, Clone, PartialEq)]
pub struct CertificateReport {
    pub analysis: Analysis,
    pub checks: Vec<BoundCheck>,
    pub slack_tol: f64,
    pub eq_tol: f64,
}

impl CertificateReport {
    pub fn applicable_count(&self) -> usize {
        self.checks.iter().filter(|c| c.applicable).count()
    }

    pub fn violations(&self) -> Vec<&BoundCheck> {
        self.checks.iter().filter(|c| c.violated()).collect()
    }

    pub fn all_applicable_hold(&self) -> bool {
        self.checks.iter().all(|c| !c.violated())
    }
}

/// Certifies every catalog bound on `h`.
pub fn certify(h: &Hypergraph, cfg: &CertifyConfig) -> Result<CertificateReport, SpectralError> {
    let analysis = analyze(h, &cfg.solver)?;
    let checks = CATALOG.iter().map(|id| evaluate(id, &analysis, cfg)).collect();
    Ok(CertificateReport { analysis, checks, slack_tol: cfg.slack_tol, eq_tol: cfg.eq_tol })
}

/// Aggregate over a corpus: counts, worst slack, and equality inventory per
/// catalog id, plus the (index, id) pairs of every violation.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSummary {
    pub total: usize,
    pub violations: usize,
    pub per_id: Vec<IdSummary>,
    pub violating_inputs: Vec<(usize, &'static str)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IdSummary {
    pub id: &'static str,
    pub applicable: usize,
    pub violations: usize,
    /// Smallest slack seen over applicable inputs.
    pub worst_slack: Option<f64>,
    /// Inputs where |slack| ≤ eq_tol.
    pub equalities: usize,
    /// Equality cases whose stated attainment condition was met.
    pub equality_condition_met: usize,
}

impl CorpusSummary {
    pub fn id_summary(&self, id: &str) -> Option<&IdSummary> {
        self.per_id.iter().find(|s| s.id == id)
    }
}

/// Certifies every hypergraph in `corpus` and aggregates per catalog id.
/// Inputs are processed in order, so the summary is deterministic.
pub fn corpus_certify(
    corpus: &[Hypergraph],
    cfg: &CertifyConfig,
) -> Result<CorpusSummary, SpectralError> {
    let mut per_id: Vec<IdSummary> = CATALOG
        .iter()
        .map(|&id| IdSummary {
            id,
            applicable: 0,
            violations: 0,
            worst_slack: None,
            equalities: 0,
            equality_condition_met: 0,
        })
        .collect();
    let mut violating_inputs = Vec::new();
    for (index, h) in corpus.iter().enumerate() {
        let report = certify(h, cfg)?;
        for (check, summary) in report.checks.iter().zip(per_id.iter_mut()) {
            if !check.applicable {
                continue;
            }
            summary.applicable += 1;
            let slack = check.slack.expect("applicable records carry slack");
            summary.worst_slack =
                Some(summary.worst_slack.map_or(slack, |w: f64| w.min(slack)));
            if check.violated() {
                summary.violations += 1;
                violating_inputs.push((index, check.id));
            }
            if let Some(note) = &check.equality_note {
                summary.equalities += 1;
                if note.condition_met == Some(true) {
                    summary.equality_condition_met += 1;
                }
            }
        }
    }
    let violations = per_id.iter().map(|s| s.violations).sum();
    Ok(CorpusSummary { total: corpus.len(), violations, per_id, violating_inputs })
}

// ---------------------------------------------------------------------------
// evaluation
// ---------------------------------------------------------------------------

struct Ctx<'a> {
    n: f64,
    k: f64,
    m: usize,
    m_f: f64,
    delta: f64,
    big_delta: f64,
    avg: f64,
    zagreb: f64,
    rho: f64,
    sum_x: f64,
    sum_dx: f64,
    lambda2: Option<f64>,
    diameter: Option<u32>,
    x: &'a [f64],
    degrees: &'a [usize],
    vx: Option<&'a VertexExtremes>,
    ex: Option<&'a EdgeExtremes>,
    edge_sum_min: Option<u64>,
    edge_sum_max: Option<u64>,
    is_regular: bool,
    is_edge_regular: bool,
}

impl<'a> Ctx<'a> {
    fn new(a: &'a Analysis) -> Self {
        let x = &a.spectral.x;
        let degrees = &a.profile.degrees;
        let sum_x = x.iter().sum();
        let sum_dx = x.iter().zip(degrees).map(|(xi, &d)| xi * d as f64).sum();
        Ctx {
            n: a.hypergraph.n() as f64,
            k: a.hypergraph.k() as f64,
            m: a.hypergraph.m(),
            m_f: a.hypergraph.m() as f64,
            delta: a.profile.min_degree as f64,
            big_delta: a.profile.max_degree as f64,
            avg: a.profile.avg_degree.value(),
            zagreb: a.profile.zagreb as f64,
            rho: a.spectral.rho,
            sum_x,
            sum_dx,
            lambda2: a.spectral.lambda2,
            diameter: a.connectivity.diameter,
            x,
            degrees,
            vx: a.vertex_extremes.as_ref(),
            ex: a.edge_extremes.as_ref(),
            edge_sum_min: a.regularity.edge_degree_sum_min,
            edge_sum_max: a.regularity.edge_degree_sum_max,
            is_regular: a.regularity.is_regular,
            is_edge_regular: a.regularity.is_edge_regular,
        }
    }

    fn x_min(&self) -> f64 {
        self.vx.expect("connected").x_min
    }

    fn x_max(&self) -> f64 {
        self.vx.expect("connected").x_max
    }

    fn gamma(&self) -> f64 {
        self.vx.expect("connected").gamma
    }

    fn xe_min(&self) -> f64 {
        self.ex.expect("has edges").xe_min
    }

    fn xe_max(&self) -> f64 {
        self.ex.expect("has edges").xe_max
    }

    fn big_gamma(&self) -> f64 {
        self.ex.expect("has edges").big_gamma
    }
}

const REASON_NOT_CONNECTED: &str = "not connected";
const REASON_NO_EDGES: &str = "no edges";
const REASON_TWO_EDGES: &str = "needs at least two edges";
const REASON_LAMBDA2_ZERO: &str = "second eigenvalue vanishes";
const REASON_REGULAR: &str = "regular (bound degenerates)";
const REASON_DENOMINATOR: &str = "degenerate denominator";

const COND_REGULAR: &str = "regular";
const COND_REGULAR_SUFFICIENT: &str = "regular (sufficient)";
const COND_SINGLE_VERTEX: &str = "single vertex";
const COND_IDENTITY: &str = "identity";
const COND_EDGE_REGULAR: &str = "edge-regular";
const COND_SEMI_REGULAR: &str = "regular or semi-regular";
const COND_NOT_STATED: &str = "not stated";

fn relation_of(id: &str) -> Relation {
    match id {
        "L2.8" | "T4.8" => Relation::Eq,
        "T3.6" | "T3.9" | "T3.10.a" | "T3.10.b" | "T3.11" | "T3.12.a" | "C4.3" => Relation::Ge,
        _ => Relation::Le,
    }
}

fn evaluate(id: &'static str, analysis: &Analysis, cfg: &CertifyConfig) -> BoundCheck {
    if !analysis.connectivity.connected {
        return not_applicable(id, REASON_NOT_CONNECTED);
    }
    let c = Ctx::new(analysis);
    let needs_edges: bool = !matches!(
        id,
        "L2.4.lo" | "L2.4.hi" | "C2.7.lo" | "C2.7.hi" | "L2.8" | "T3.8" | "C3.3" | "T3.9"
    );
    if needs_edges && c.m == 0 {
        return not_applicable(id, REASON_NO_EDGES);
    }
    match id {
        "L2.4.lo" => record(id, cfg, c.k * c.avg, c.rho, COND_REGULAR, Some(c.is_regular)),
        "L2.4.hi" => record(id, cfg, c.rho, c.k * c.big_delta, COND_REGULAR, Some(c.is_regular)),
        "C2.7.lo" => {
            record(id, cfg, 1.0, c.sum_x, COND_SINGLE_VERTEX, Some(analysis.hypergraph.n() == 1))
        }
        "C2.7.hi" => record(id, cfg, c.sum_x, c.n.sqrt(), COND_REGULAR, Some(c.is_regular)),
        "L2.8" => record(id, cfg, c.rho * c.sum_x, c.k * c.sum_dx, COND_IDENTITY, Some(true)),
        "C3.3" => {
            if c.m < 2 {
                return not_applicable(id, REASON_TWO_EDGES);
            }
            let lambda2 = c.lambda2.expect("two edges imply n >= 2");
            if lambda2 <= 1e-12 {
                return not_applicable(id, REASON_LAMBDA2_ZERO);
            }
            let d = f64::from(c.diameter.expect("connected"));
            let rhs = 1.0 / (1.0 + (c.rho / lambda2).powf(d - 1.0)).sqrt();
            record(id, cfg, c.x_min(), rhs, COND_NOT_STATED, None)
        }
        "T3.4" => {
            let per_vertex: Vec<PerVertexBound> = (0..c.x.len())
                .map(|v| PerVertexBound {
                    vertex: v,
                    value: c.x[v],
                    bound: c.k.sqrt() * c.degrees[v] as f64 / c.rho,
                })
                .collect();
            let worst = per_vertex
                .iter()
                .min_by(|a, b| {
                    let sa = a.bound - a.value;
                    let sb = b.bound - b.value;
                    sa.partial_cmp(&sb).expect("finite slacks")
                })
                .expect("n >= 1")
                .clone();
            let mut check =
                record(id, cfg, worst.value, worst.bound, COND_NOT_STATED, None);
            check.per_vertex = Some(per_vertex);
            check
        }
        "T3.4.min" => {
            record(id, cfg, c.x_min(), c.k.sqrt() * c.delta / c.rho, COND_NOT_STATED, None)
        }
        "T3.4.max" => {
            record(id, cfg, c.x_max(), c.k.sqrt() * c.big_delta / c.rho, COND_NOT_STATED, None)
        }
        "T3.6" => {
            let rhs = c.rho / (c.k * c.zagreb.sqrt());
            record(id, cfg, c.x_max(), rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T3.7" => {
            let denominator = c.rho * c.rho + c.k * c.delta * c.delta * (c.n - c.delta);
            // rho carries eigensolver noise, so "zero" is judged relative to rho^2
            if denominator <= 1e-9 * c.rho * c.rho {
                return not_applicable(id, REASON_DENOMINATOR);
            }
            let rhs = (c.k * c.delta * c.delta / denominator).sqrt();
            record(id, cfg, c.x_min(), rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T3.8" => {
            let lhs = (c.k * c.n * c.big_delta - c.k * c.k * c.m_f) * c.x_min();
            let rhs = (c.k * c.big_delta - c.rho) * c.n.sqrt();
            record(id, cfg, lhs, rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T3.9" => {
            if c.is_regular {
                return not_applicable(id, REASON_REGULAR);
            }
            let rhs = ((c.rho - c.k * c.delta) * (c.big_delta - c.avg))
                / ((c.k * c.big_delta - c.rho) * (c.avg - c.delta));
            // the semi-regular attainment case is not decided mechanically
            record(id, cfg, c.gamma(), rhs, COND_SEMI_REGULAR, None)
        }
        "T3.10.a" => {
            let rhs = (c.k * c.big_delta / c.rho).max(c.rho / (c.k * c.delta));
            record(id, cfg, c.gamma(), rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T3.10.b" => {
            let lhs = (c.k * c.big_delta / c.rho).max(c.rho / (c.k * c.delta));
            record(id, cfg, lhs, (c.big_delta / c.delta).sqrt(), COND_REGULAR, Some(c.is_regular))
        }
        "T3.11" => {
            let rhs = (c.big_delta.sqrt() - c.delta.sqrt()) / (c.n * c.big_delta).sqrt();
            record(id, cfg, c.x_max() - c.x_min(), rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T3.12.a" => {
            let rhs = c.big_delta / (c.delta * c.delta + (c.n - 1.0) * c.big_delta * c.big_delta).sqrt();
            record(id, cfg, c.x_max(), rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T3.12.b" => {
            let rhs = c.delta / (c.big_delta * c.big_delta + (c.n - 1.0) * c.delta * c.delta).sqrt();
            record(id, cfg, c.x_min(), rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T4.2.lo" => {
            let rhs = (c.rho / c.m_f).sqrt();
            record(id, cfg, c.xe_min(), rhs, COND_REGULAR_SUFFICIENT, Some(c.is_regular))
        }
        "T4.2.hi" => {
            let lhs = (c.rho / c.m_f).sqrt();
            record(id, cfg, lhs, c.xe_max(), COND_REGULAR_SUFFICIENT, Some(c.is_regular))
        }
        "C4.3" => {
            let rhs = (c.rho / (c.k * c.k * c.m_f)).sqrt();
            record(id, cfg, c.x_max(), rhs, COND_REGULAR, Some(c.is_regular))
        }
        "T4.5.a.lo" => record(
            id,
            cfg,
            c.k * c.x_min(),
            c.xe_min(),
            COND_REGULAR_SUFFICIENT,
            Some(c.is_regular),
        ),
        "T4.5.a.hi" => record(
            id,
            cfg,
            c.xe_min(),
            c.rho / c.delta * c.x_min(),
            COND_REGULAR_SUFFICIENT,
            Some(c.is_regular),
        ),
        "T4.5.b.lo" => record(
            id,
            cfg,
            c.rho / c.big_delta * c.x_max(),
            c.xe_max(),
            COND_REGULAR_SUFFICIENT,
            Some(c.is_regular),
        ),
        "T4.5.b.hi" => record(
            id,
            cfg,
            c.xe_max(),
            c.k * c.x_max(),
            COND_REGULAR_SUFFICIENT,
            Some(c.is_regular),
        ),
        "C4.6.lo" => record(
            id,
            cfg,
            c.delta / c.big_delta * c.gamma(),
            c.big_gamma(),
            COND_REGULAR_SUFFICIENT,
            Some(c.is_regular),
        ),
        "C4.6.hi" => record(
            id,
            cfg,
            c.big_gamma(),
            c.gamma(),
            COND_REGULAR_SUFFICIENT,
            Some(c.is_regular),
        ),
        "T4.12.lo" => {
            let lhs = c.edge_sum_min.expect("has edges") as f64;
            record(id, cfg, lhs, c.rho, COND_EDGE_REGULAR, Some(c.is_edge_regular))
        }
        "T4.12.hi" => {
            let rhs = c.edge_sum_max.expect("has edges") as f64;
            record(id, cfg, c.rho, rhs, COND_EDGE_REGULAR, Some(c.is_edge_regular))
        }
        "T4.8" => {
            // biconditional consistency: Γ = 1 (within eq_tol) must coincide
            // with the exact integer edge-regularity verdict
            let gap = (c.big_gamma() - 1.0).abs();
            let slack = if c.is_edge_regular { cfg.eq_tol - gap } else { gap - cfg.eq_tol };
            BoundCheck {
                id,
                relation: Relation::Eq,
                lhs: Some(c.big_gamma()),
                rhs: Some(1.0),
                slack: Some(slack),
                holds: slack >= -cfg.slack_tol,
                applicable: true,
                reason: None,
                equality_note: Some(EqualityNote {
                    condition: COND_EDGE_REGULAR,
                    condition_met: Some(c.is_edge_regular),
                }),
                per_vertex: None,
            }
        }
        _ => unreachable!("evaluate is only called with catalog ids"),
    }
}

fn not_applicable(id: &'static str, reason: &'static str) -> BoundCheck {
    BoundCheck {
        id,
        relation: relation_of(id),
        lhs: None,
        rhs: None,
        slack: None,
        holds: true,
        applicable: false,
        reason: Some(reason),
        equality_note: None,
        per_vertex: None,
    }
}

fn record(
    id: &'static str,
    cfg: &CertifyConfig,
    lhs: f64,
    rhs: f64,
    condition: &'static str,
    condition_met: Option<bool>,
) -> BoundCheck {
    let relation = relation_of(id);
    let slack = match relation {
        Relation::Le => rhs - lhs,
        Relation::Ge => lhs - rhs,
        Relation::Eq => -(lhs - rhs).abs() / 1.0f64.max(lhs.abs()).max(rhs.abs()),
    };
    let equality_note = (slack.abs() <= cfg.eq_tol)
        .then_some(EqualityNote { condition, condition_met });
    BoundCheck {
        id,
        relation,
        lhs: Some(lhs),
        rhs: Some(rhs),
        slack: Some(slack),
        holds: slack >= -cfg.slack_tol,
        applicable: true,
        reason: None,
        equality_note,
        per_vertex: None,
    }
}
