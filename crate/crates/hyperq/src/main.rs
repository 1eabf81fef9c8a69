use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyperq::certify::{analyze, certify, corpus_certify, CertificateReport, CertifyConfig};
use hyperq::generate;
use hyperq::hypergraph::Hypergraph;
use hyperq::io::{
    analysis_json, corpus_json, format_real, parse_hgr, report_json, serialize_hgr,
};
use hyperq::spectra::{self, signless_laplacian, SolverConfig, SpectralError};

#[derive(Parser)]
#[command(
    name = "hyperq",
    version,
    about = "Signless Laplacian spectra and certified eigenvector bounds for k-uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degrees, distances, eigenpair, and irregularity summary of one hypergraph
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = spectra::DEFAULT_TOL)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = spectra::DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Evaluate the bound catalog; exits 2 when an applicable bound is violated
    Certify {
        file: Option<PathBuf>,
        /// Certify every .hgr file in a directory instead
        #[arg(long, conflicts_with = "file")]
        corpus: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Slack tolerance: a bound holds when slack >= -SLACK
        #[arg(long, default_value_t = hyperq::certify::DEFAULT_SLACK_TOL)]
        slack: f64,
        /// Equality detection tolerance on |slack|
        #[arg(long = "eq-tol", default_value_t = hyperq::certify::DEFAULT_EQ_TOL)]
        eq_tol: f64,
        #[arg(long, default_value_t = spectra::DEFAULT_TOL)]
        tol: f64,
        #[arg(long = "max-iter", default_value_t = spectra::DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Print every eigenvalue of Q in descending order
    Spectrum {
        file: PathBuf,
        #[arg(long = "dense-limit", default_value_t = spectra::DEFAULT_DENSE_LIMIT)]
        dense_limit: usize,
    },
    /// Write a member of a hypergraph family to a file
    Generate {
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Base hypergraph file for the power construction
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    ExampleFig1,
    Complete,
    Cyclic,
    Star,
    Random,
    Power,
}

/// Exit codes: 0 success, 1 input or parse error, 2 at least one applicable
/// bound violated, 3 eigensolver non-convergence.
enum CliError {
    Input(String),
    NoConvergence(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::NoConvergence(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::NoConvergence(m) => m,
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(err: SpectralError) -> Self {
        match err {
            SpectralError::NoConvergence { .. } => CliError::NoConvergence(err.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Analyze { file, json, tol, max_iter } => {
            let h = load(&file)?;
            let solver = SolverConfig { tol: positive(tol)?, max_iter, ..SolverConfig::default() };
            let analysis = analyze(&h, &solver)?;
            if json {
                print!("{}", analysis_json(&analysis));
            } else {
                print!("{}", render_analysis(&analysis));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify { file, corpus, json, slack, eq_tol, tol, max_iter } => {
            let cfg = CertifyConfig {
                solver: SolverConfig { tol: positive(tol)?, max_iter, ..SolverConfig::default() },
                slack_tol: slack,
                eq_tol,
            };
            match (file, corpus) {
                (Some(file), None) => {
                    let h = load(&file)?;
                    let report = certify(&h, &cfg)?;
                    if json {
                        print!("{}", report_json(&report));
                    } else {
                        print!("{}", render_report(&report));
                    }
                    Ok(exit_for_violations(!report.all_applicable_hold()))
                }
                (None, Some(dir)) => {
                    let (names, corpus) = load_corpus(&dir)?;
                    let summary = corpus_certify(&corpus, &cfg)?;
                    if json {
                        print!("{}", corpus_json(&summary));
                    } else {
                        println!("corpus: {} hypergraphs from {}", summary.total, dir.display());
                        for &(index, id) in &summary.violating_inputs {
                            println!("violated: {} {}", names[index], id);
                        }
                        println!("{}", render_corpus(&summary));
                    }
                    Ok(exit_for_violations(summary.violations > 0))
                }
                _ => Err(CliError::Input("pass a file or --corpus <dir>".to_string())),
            }
        }
        Command::Spectrum { file, dense_limit } => {
            let h = load(&file)?;
            let q = signless_laplacian(&h)?;
            let spectrum = spectra::full_spectrum(&q, dense_limit)?;
            for value in spectrum {
                println!("{}", format_real(value));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { family, n, k, m, r, s, seed, base, output } => {
            let h = build_family(family, n, k, m, r, s, seed, base.as_deref())?;
            std::fs::write(&output, serialize_hgr(&h))
                .map_err(|e| CliError::Input(format!("{}: {e}", output.display())))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn positive(tol: f64) -> Result<f64, CliError> {
    if tol > 0.0 {
        Ok(tol)
    } else {
        Err(CliError::Input(format!("--tol must be positive, got {tol}")))
    }
}

fn exit_for_violations(any: bool) -> ExitCode {
    if any {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn load(path: &Path) -> Result<Hypergraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_hgr(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load_corpus(dir: &Path) -> Result<(Vec<String>, Vec<Hypergraph>), CliError> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|ext| ext == "hgr"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(CliError::Input(format!("{}: no .hgr files", dir.display())));
    }
    let mut names = Vec::with_capacity(paths.len());
    let mut corpus = Vec::with_capacity(paths.len());
    for path in paths {
        corpus.push(load(&path)?);
        names.push(path.display().to_string());
    }
    Ok((names, corpus))
}

#[allow(clippy::too_many_arguments)]
fn build_family(
    family: Family,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    r: Option<usize>,
    s: Option<usize>,
    seed: u64,
    base: Option<&Path>,
) -> Result<Hypergraph, CliError> {
    let need = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| CliError::Input(format!("this family requires --{flag}")))
    };
    let gen = |r: Result<Hypergraph, generate::GenError>| {
        r.map_err(|e| CliError::Input(e.to_string()))
    };
    match family {
        Family::ExampleFig1 => Ok(generate::example_fig1()),
        Family::Complete => gen(generate::complete_kgraph(need(n, "n")?, need(k, "k")?)),
        Family::Cyclic => gen(generate::cyclic_kgraph(need(n, "n")?, need(k, "k")?)),
        Family::Star => gen(generate::star_graph(need(n, "n")?)),
        Family::Random => gen(generate::random_connected_kgraph(
            need(n, "n")?,
            need(k, "k")?,
            need(m, "m")?,
            seed,
        )),
        Family::Power => {
            let base =
                base.ok_or_else(|| CliError::Input("power requires --base <file>".to_string()))?;
            let base = load(base)?;
            let power = generate::power_hypergraph(&base, need(r, "r")?, need(s, "s")?)
                .map_err(|e| CliError::Input(e.to_string()))?;
            Ok(power.hypergraph)
        }
    }
}

// ---------------------------------------------------------------------------
// text rendering (vertex ids are printed 1-based to match the file format)
// ---------------------------------------------------------------------------

fn render_vertex_set(vs: &[usize]) -> String {
    let inner: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn render_analysis(a: &hyperq::Analysis) -> String {
    let mut out = String::new();
    let h = &a.hypergraph;
    out.push_str(&format!("hypergraph: n={} k={} m={}\n", h.n(), h.k(), h.m()));
    out.push_str(&format!(
        "connected: {}  diameter: {}\n",
        a.connectivity.connected,
        a.connectivity.diameter.map_or("undefined".to_string(), |d| d.to_string())
    ));
    let degrees: Vec<String> = a.profile.degrees.iter().map(|d| d.to_string()).collect();
    out.push_str(&format!(
        "degrees: [{}]  max={} min={} avg={} ({})  zagreb={}\n",
        degrees.join(", "),
        a.profile.max_degree,
        a.profile.min_degree,
        a.profile.avg_degree,
        format_real(a.profile.avg_degree.value()),
        a.profile.zagreb
    ));
    out.push_str(&format!(
        "rho: {}  lambda2: {}  residual: {}  iterations: {}\n",
        format_real(a.spectral.rho),
        a.spectral.lambda2.map_or("undefined".to_string(), format_real),
        format_real(a.spectral.residual),
        a.spectral.iterations
    ));
    let entries: Vec<String> = a.spectral.x.iter().map(|&v| format_real(v)).collect();
    out.push_str(&format!("x: [{}]\n", entries.join(", ")));
    if let Some(vx) = &a.vertex_extremes {
        out.push_str(&format!(
            "x_min: {} at {}  x_max: {} at {}  gamma: {}\n",
            format_real(vx.x_min),
            render_vertex_set(&vx.argmin),
            format_real(vx.x_max),
            render_vertex_set(&vx.argmax),
            format_real(vx.gamma)
        ));
    }
    if let Some(ex) = &a.edge_extremes {
        out.push_str(&format!(
            "x(min): {}  x(max): {}  Gamma: {}\n",
            format_real(ex.xe_min),
            format_real(ex.xe_max),
            format_real(ex.big_gamma)
        ));
    }
    out.push_str(&format!(
        "regular: {}  edge-regular: {}",
        a.regularity.is_regular, a.regularity.is_edge_regular
    ));
    match (a.regularity.edge_degree_sum_min, a.regularity.edge_degree_sum_max) {
        (Some(lo), Some(hi)) if lo == hi => out.push_str(&format!("  edge degree sum: {lo}\n")),
        (Some(lo), Some(hi)) => out.push_str(&format!("  edge degree sums: {lo}..{hi}\n")),
        _ => out.push('\n'),
    }
    if let Some((i, j)) = a.regularity.witness {
        let edges = h.edges();
        out.push_str(&format!(
            "edge-regularity witness: {} vs {}\n",
            render_vertex_set(&edges[i]),
            render_vertex_set(&edges[j])
        ));
    }
    out
}

fn render_report(report: &CertificateReport) -> String {
    let mut out = render_analysis(&report.analysis);
    out.push_str("bounds:\n");
    for check in &report.checks {
        if !check.applicable {
            out.push_str(&format!(
                "  {:<10} not applicable ({})\n",
                check.id,
                check.reason.unwrap_or("unknown")
            ));
            continue;
        }
        let verdict = if check.holds { "ok" } else { "VIOLATED" };
        let mut line = format!(
            "  {:<10} {} {} {}  slack {}  {}",
            check.id,
            format_real(check.lhs.unwrap_or_default()),
            check.relation,
            format_real(check.rhs.unwrap_or_default()),
            format_real(check.slack.unwrap_or_default()),
            verdict
        );
        if let Some(note) = &check.equality_note {
            let met = match note.condition_met {
                Some(true) => "met",
                Some(false) => "unmet",
                None => "undecided",
            };
            line.push_str(&format!("  [equality; condition {:?} {met}]", note.condition));
        }
        line.push('\n');
        out.push_str(&line);
        if let Some(per_vertex) = &check.per_vertex {
            for pv in per_vertex {
                out.push_str(&format!(
                    "             vertex {}: {} <= {}\n",
                    pv.vertex + 1,
                    format_real(pv.value),
                    format_real(pv.bound)
                ));
            }
        }
    }
    let violations = report.violations();
    if violations.is_empty() {
        out.push_str(&format!(
            "verdict: all {} applicable bounds hold\n",
            report.applicable_count()
        ));
    } else {
        let ids: Vec<&str> = violations.iter().map(|c| c.id).collect();
        out.push_str(&format!("verdict: {} violated ({})\n", violations.len(), ids.join(", ")));
    }
    out
}

fn render_corpus(summary: &hyperq::CorpusSummary) -> String {
    let mut out = String::new();
    out.push_str(&format!("violations: {}\n", summary.violations));
    out.push_str("id           applicable  violations  worst slack      equalities (condition met)\n");
    for s in &summary.per_id {
        out.push_str(&format!(
            "{:<12} {:>10}  {:>10}  {:<15}  {} ({})\n",
            s.id,
            s.applicable,
            s.violations,
            s.worst_slack.map_or("-".to_string(), format_real),
            s.equalities,
            s.equality_condition_met
        ));
    }
    out
}
