//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criterion 6 is expected to fail on exactly one catalog id: the T3.7
//! inequality is not universally valid (the single-edge 3-graph already
//! violates it), so an honest corpus sweep cannot report zero violations for
//! it. The test asserts the criterion as stated and the failure message
//! carries the inventory. Every other catalog id passes the sweep.

use hyperq::certify::{analyze, certify, corpus_certify, CertifyConfig, CATALOG};
use hyperq::generate::{
    complete_kgraph, cyclic_kgraph, example_fig1, power_hypergraph, random_connected_kgraph,
    star_graph,
};
use hyperq::hypergraph::Hypergraph;
use hyperq::io::{analysis_json, parse_hgr, serialize_hgr};
use hyperq::params::{edge_extremes, regularity_report, vertex_extremes};
use hyperq::spectra::{
    deflated_dominant, edge_sums, full_spectrum, principal_eigenpair, signless_laplacian,
    signless_laplacian_routes, SolverConfig,
};

fn solver() -> SolverConfig {
    // the corpus tolerance is pinned at 1e-10; the iteration cap is raised
    // beyond the CLI default to be safe against small spectral gaps
    SolverConfig { tol: 1e-10, max_iter: 1_000_000, dense_limit: 512 }
}

fn certify_cfg() -> CertifyConfig {
    CertifyConfig { solver: solver(), slack_tol: 1e-8, eq_tol: 1e-7 }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Deterministic random connected corpus: k in {2,3,4}, n <= 12.
fn random_corpus(count: usize) -> Vec<Hypergraph> {
    let mut corpus = Vec::with_capacity(count);
    let mut i = 0usize;
    while corpus.len() < count {
        let k = [2, 3, 4][i % 3];
        let n = k + 1 + (i * 7) % (12 - k);
        let lo = (n - 1).div_ceil(k - 1);
        let hi = (lo + 6).min(binomial(n, k));
        let m = lo + (i * 13) % (hi - lo + 1);
        if let Ok(h) = random_connected_kgraph(n, k, m, i as u64 * 1_000_003) {
            corpus.push(h);
        }
        i += 1;
    }
    corpus
}

/// Families plus random members, all with n <= 20.
fn family_corpus() -> Vec<Hypergraph> {
    let mut corpus = Vec::new();
    for k in 2..=5 {
        for n in k + 1..=20 {
            corpus.push(cyclic_kgraph(n, k).unwrap());
        }
    }
    for n in 2..=20 {
        corpus.push(complete_kgraph(n, 2).unwrap());
    }
    for n in 3..=10 {
        corpus.push(complete_kgraph(n, 3).unwrap());
    }
    for n in 4..=9 {
        corpus.push(complete_kgraph(n, 4).unwrap());
    }
    for n in 3..=20 {
        corpus.push(star_graph(n).unwrap());
    }
    for s in 1..=2 {
        for extra in 0..=2 {
            let base = star_graph(4).unwrap();
            let p = power_hypergraph(&base, base.k() * s + extra, s).unwrap().hypergraph;
            if p.n() <= 20 {
                corpus.push(p);
            }
            let base = cyclic_kgraph(5, 2).unwrap();
            let p = power_hypergraph(&base, base.k() * s + extra, s).unwrap().hypergraph;
            if p.n() <= 20 {
                corpus.push(p);
            }
        }
    }
    corpus.push(example_fig1());
    corpus.extend(random_corpus(500 - corpus.len()));
    corpus
}

#[test]
fn criterion_01_construction_identity() {
    let corpus = family_corpus();
    assert!(corpus.len() >= 500, "corpus has {} members", corpus.len());
    for (i, h) in corpus.iter().enumerate() {
        assert!(h.n() <= 20, "member {i} too large");
        let (gram, d_plus_ac) = signless_laplacian_routes(h);
        assert_eq!(gram, d_plus_ac, "construction identity failed on member {i}");
    }
    println!(
        "criterion 1: PASS — B·Bᵀ = D + A_C exactly on {} hypergraphs",
        corpus.len()
    );
}

#[test]
fn criterion_02_rayleigh_identity() {
    let corpus = random_corpus(100);
    let mut state = 0x00C0FFEEu64;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
    };
    for (i, h) in corpus.iter().enumerate() {
        let x: Vec<f64> = (0..h.n()).map(|_| next()).collect();
        let sums = edge_sums(h, &x).unwrap();
        let q = signless_laplacian(h).unwrap();
        let quad = q.quadratic_form(&x);
        let scale = 1.0f64.max(sums.sum_of_squares.abs()).max(quad.abs());
        assert!(
            (sums.sum_of_squares - quad).abs() <= 1e-9 * scale,
            "pair {i}: {} vs {quad}",
            sums.sum_of_squares
        );
    }
    println!("criterion 2: PASS — xᵀQx = Σ x(e)² within 1e-9 relative on 100 pairs");
}

#[test]
fn criterion_03_regular_exact_values() {
    let h = cyclic_kgraph(6, 3).unwrap();
    let q = signless_laplacian(&h).unwrap();
    let cfg = solver();
    let eig = principal_eigenpair(&q, cfg.tol, cfg.max_iter).unwrap();
    assert!((eig.rho - 9.0).abs() <= 1e-9, "rho = {}", eig.rho);
    let uniform = 1.0 / 6f64.sqrt();
    for (v, &xi) in eig.x.iter().enumerate() {
        assert!((xi - uniform).abs() <= 1e-9, "x[{v}] = {xi}");
    }
    let vx = vertex_extremes(&h, &eig).unwrap();
    let ex = edge_extremes(&h, &eig).unwrap();
    assert!((vx.gamma - 1.0).abs() <= 1e-7);
    assert!((ex.big_gamma - 1.0).abs() <= 1e-7);
    println!("criterion 3: PASS — cyclic(6,3): rho = 9, x uniform, gamma = Gamma = 1");
}

#[test]
fn criterion_04_edge_regular_closed_form() {
    let h = star_graph(4).unwrap();
    let q = signless_laplacian(&h).unwrap();
    let cfg = solver();
    let eig = principal_eigenpair(&q, cfg.tol, cfg.max_iter).unwrap();
    assert!((eig.rho - 4.0).abs() <= 1e-9, "rho = {}", eig.rho);
    let scale = 12f64.sqrt();
    let expected = [3.0 / scale, 1.0 / scale, 1.0 / scale, 1.0 / scale];
    for (v, (&xi, want)) in eig.x.iter().zip(expected).enumerate() {
        assert!((xi - want).abs() <= 1e-9, "x[{v}] = {xi}, want {want}");
    }
    let ex = edge_extremes(&h, &eig).unwrap();
    assert!((ex.big_gamma - 1.0).abs() <= 1e-7);
    let report = regularity_report(&h);
    assert!(report.is_edge_regular);
    assert!(!report.is_regular);
    println!("criterion 4: PASS — star(4): rho = 4, x = (3,1,1,1)/√12, Gamma = 1");
}

#[test]
fn criterion_05_example_end_to_end() {
    let h = example_fig1();
    let profile = h.degree_profile();
    assert_eq!(profile.degrees, vec![2, 1, 2, 2, 2]);
    assert_eq!(profile.zagreb, 17);
    assert_eq!(h.connectivity().diameter, Some(2));
    assert_eq!(h.clique_multigraph().pair_count(3, 4), 2);
    let report = certify(&h, &certify_cfg()).unwrap();
    let rho = report.analysis.spectral.rho;
    assert!(rho > 5.4 + 1e-9 && rho < 6.0 - 1e-9, "rho = {rho}");
    let big_gamma = report.analysis.edge_extremes.as_ref().unwrap().big_gamma;
    assert!(big_gamma > 1.0 + 1e-7, "Gamma = {big_gamma}");
    assert!(
        report.all_applicable_hold(),
        "violations: {:?}",
        report.violations().iter().map(|c| c.id).collect::<Vec<_>>()
    );
    assert_eq!(report.applicable_count(), CATALOG.len());
    println!("criterion 5: PASS — worked example: degrees, Zagreb, diameter, clique counts, rho bracket, Gamma > 1, zero violations");
}

#[test]
fn criterion_06_bound_soundness_sweep() {
    let corpus = random_corpus(200);
    let summary = corpus_certify(&corpus, &certify_cfg()).unwrap();
    for id_summary in &summary.per_id {
        if id_summary.id == "T3.7" {
            continue;
        }
        assert_eq!(
            id_summary.violations, 0,
            "{} violated on a random corpus (worst slack {:?})",
            id_summary.id, id_summary.worst_slack
        );
    }
    let t37 = summary.id_summary("T3.7").unwrap();
    if summary.violations == 0 {
        println!("criterion 6: PASS — zero violations across the full catalog on {} corpus members", summary.total);
    } else {
        println!(
            "criterion 6: FAIL — T3.7 violated on {}/{} corpus members (worst slack {}); every other catalog id has zero violations. The T3.7 inequality is not universally valid: the single-edge 3-graph already violates it (x_min = 1/√3 > √(3/15)).",
            t37.violations,
            summary.total,
            t37.worst_slack.unwrap()
        );
    }
    assert_eq!(
        summary.violations, 0,
        "T3.7 violated on {}/{} members (worst slack {:?}); all other ids reported zero violations",
        t37.violations, summary.total, t37.worst_slack
    );
}

#[test]
fn criterion_07_biconditional_gamma_edge_regular() {
    let mut corpus: Vec<Hypergraph> = vec![
        example_fig1(),
        star_graph(4).unwrap(),
        star_graph(6).unwrap(),
        star_graph(9).unwrap(),
        cyclic_kgraph(6, 3).unwrap(),
        cyclic_kgraph(8, 2).unwrap(),
        complete_kgraph(5, 3).unwrap(),
        complete_kgraph(6, 2).unwrap(),
        power_hypergraph(&star_graph(4).unwrap(), 5, 2).unwrap().hypergraph,
        power_hypergraph(&star_graph(5).unwrap(), 3, 1).unwrap().hypergraph,
        power_hypergraph(&cyclic_kgraph(5, 2).unwrap(), 6, 2).unwrap().hypergraph,
        power_hypergraph(&example_fig1(), 8, 2).unwrap().hypergraph,
    ];
    corpus.extend(random_corpus(60));
    let mut edge_regular_count = 0;
    for (i, h) in corpus.iter().enumerate() {
        let analysis = analyze(h, &solver()).unwrap();
        let gamma_is_one =
            (analysis.edge_extremes.as_ref().unwrap().big_gamma - 1.0).abs() <= 1e-7;
        assert_eq!(
            gamma_is_one, analysis.regularity.is_edge_regular,
            "misclassification on member {i} (n={}, k={})",
            h.n(),
            h.k()
        );
        if analysis.regularity.is_edge_regular {
            edge_regular_count += 1;
        }
    }
    assert!(edge_regular_count >= 8, "corpus must exercise the Gamma = 1 side");
    assert!(edge_regular_count < corpus.len(), "corpus must exercise the Gamma > 1 side");
    println!(
        "criterion 7: PASS — Gamma = 1 ⇔ edge-regular on {} members, zero misclassifications",
        corpus.len()
    );
}

#[test]
fn criterion_08_power_hypergraph() {
    let p4 = Hypergraph::new(4, 2, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
    let power = power_hypergraph(&p4, 5, 2).unwrap().hypergraph;
    assert_eq!(power.n(), 11);
    assert_eq!(power.m(), 3);
    assert!(power.edges().iter().all(|e| e.len() == 5));

    // every edge-regular base in the corpus keeps Gamma = 1 after powering
    let mut bases: Vec<Hypergraph> = vec![
        star_graph(4).unwrap(),
        star_graph(7).unwrap(),
        cyclic_kgraph(6, 3).unwrap(),
        complete_kgraph(5, 3).unwrap(),
    ];
    bases.extend(random_corpus(40).into_iter().filter(|h| regularity_report(h).is_edge_regular));
    let mut checked = 0;
    for base in &bases {
        for (r_extra, s) in [(0usize, 1usize), (1, 1), (2, 2)] {
            let r = base.k() * s + r_extra;
            let p = power_hypergraph(base, r, s).unwrap().hypergraph;
            let analysis = analyze(&p, &solver()).unwrap();
            let big_gamma = analysis.edge_extremes.as_ref().unwrap().big_gamma;
            assert!(
                (big_gamma - 1.0).abs() <= 1e-7,
                "Gamma = {big_gamma} for power of n={} k={} (r={r}, s={s})",
                base.n(),
                base.k()
            );
            checked += 1;
        }
    }
    println!(
        "criterion 8: PASS — (P₄)⁵₂ has 11 vertices and 3 edges of size 5; Gamma = 1 preserved on {checked} powered bases"
    );
}

#[test]
fn criterion_09_oracle_equivalence() {
    let corpus = random_corpus(200);
    let cfg = solver();
    for (i, h) in corpus.iter().enumerate() {
        assert!(h.n() <= 64);
        let q = signless_laplacian(h).unwrap();
        let eig = principal_eigenpair(&q, cfg.tol, cfg.max_iter).unwrap();
        let dense = full_spectrum(&q, cfg.dense_limit).unwrap();
        assert!(
            (eig.rho - dense[0]).abs() <= 1e-8,
            "member {i}: power {} vs dense {}",
            eig.rho,
            dense[0]
        );
        if h.n() >= 2 {
            let deflated = deflated_dominant(&q, eig.rho, &eig.x, cfg.tol, cfg.max_iter).unwrap();
            assert!(
                (deflated - dense[1]).abs() <= 1e-8,
                "member {i}: deflated {deflated} vs dense {}",
                dense[1]
            );
        }
    }
    println!(
        "criterion 9: PASS — power-iteration rho and deflated lambda2 match the dense spectrum within 1e-8 on {} members",
        corpus.len()
    );
}

#[test]
fn criterion_10_equality_inventory() {
    // twenty k-regular members of the cyclic family (degree r = k, where the
    // equality cases of the catalog are attained exactly)
    let mut corpus = Vec::new();
    for (k, ns) in [(2, 5..=9), (3, 4..=8), (4, 5..=9), (5, 6..=10)] {
        for n in ns {
            corpus.push(cyclic_kgraph(n, k).unwrap());
        }
    }
    assert_eq!(corpus.len(), 20);
    let cfg = certify_cfg();
    let tight_ids =
        ["L2.4.hi", "T3.6", "T3.7", "T3.8", "T3.11", "T3.12.a", "T3.12.b", "T4.2.lo", "T4.2.hi"];
    for h in &corpus {
        let report = certify(h, &cfg).unwrap();
        assert!(report.analysis.regularity.is_regular);
        for id in tight_ids {
            let check = report.checks.iter().find(|c| c.id == id).unwrap();
            assert!(check.applicable, "{id} must be applicable on cyclic({},{})", h.n(), h.k());
            let slack = check.slack.unwrap();
            assert!(
                slack.abs() <= 1e-7,
                "{id} slack {slack} on cyclic({},{})",
                h.n(),
                h.k()
            );
            let note = check.equality_note.as_ref().unwrap();
            assert_eq!(note.condition_met, Some(true), "{id} condition not met");
        }
    }
    println!(
        "criterion 10: PASS — equality records tight (|slack| <= 1e-7, regular condition met) on 20 regular hypergraphs"
    );
}

#[test]
fn criterion_11_round_trip_and_determinism() {
    let corpus: Vec<Hypergraph> = family_corpus().into_iter().take(100).collect();
    assert_eq!(corpus.len(), 100);
    for (i, h) in corpus.iter().enumerate() {
        let text = serialize_hgr(h);
        let back = parse_hgr(&text).unwrap();
        assert_eq!(&back, h, "file {i} round trip changed the hypergraph");
        assert_eq!(serialize_hgr(&back), text, "file {i} round trip changed the bytes");
    }
    let h = example_fig1();
    let a = analysis_json(&analyze(&h, &solver()).unwrap());
    let b = analysis_json(&analyze(&h, &solver()).unwrap());
    assert_eq!(a, b, "repeated analysis must be byte-identical");
    println!("criterion 11: PASS — 100 file round trips byte-identical; repeated analysis JSON byte-identical");
}
