//! Acceptance suite: one test per release criterion, each printing a
//! PASS line with the measured figure (run with `-- --nocapture` to see
//! them). Tolerances and runtime budgets are pinned in the asserts.

mod common;

use std::time::{Duration, Instant};

use common::{balance_stationary, bare_spec, reference_radio};
use uas_planner::{
    coverage_spec, optimal_pap_count, pack, sample_gns, trial_seed, EnvironmentProfile,
    FleetModel, ScenarioConfig, TrafficModel,
};

fn fleet(n: u32, u: u32, delta: f64) -> FleetModel {
    FleetModel::new(n, u, TrafficModel::from_intensity(delta).unwrap()).unwrap()
}

/// Criterion 1 — product form vs dense balance solve: max abs error at most
/// 1e-10 over n ≤ 50, u ≤ n, δ ∈ {0.01, 0.1, 1, 2, 10}, within 30 s.
#[test]
fn criterion_01_balance_equation_oracle() {
    let start = Instant::now();
    let mut max_err: f64 = 0.0;
    let mut checked = 0u32;
    for n in 1..=50 {
        for u in 1..=n {
            for delta in [0.01, 0.1, 1.0, 2.0, 10.0] {
                let product = fleet(n, u, delta).stationary_distribution();
                let oracle = balance_stationary(n, u, delta, 1.0);
                for (p, q) in product.iter().zip(&oracle) {
                    max_err = max_err.max((p - q).abs());
                }
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(max_err <= 1e-10, "max abs error {max_err:.3e}");
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 1 PASS: {checked} configurations, max abs error {max_err:.3e} ({elapsed:.2?})"
    );
}

/// Criterion 2 — a seeded discrete-event run with at least 1e6 transitions
/// reproduces every analytic p_j of (n, u, δ) = (10, 5, 0.1) within 1e-2,
/// within 10 s.
#[test]
fn criterion_02_ctmc_simulation_oracle() {
    let start = Instant::now();
    let model = fleet(10, 5, 0.1);
    let sample = model.simulate(1e6, 2024).unwrap();
    let analytic = model.stationary_distribution();
    assert!(
        sample.transitions >= 1_000_000,
        "only {} transitions",
        sample.transitions
    );
    let mut worst: f64 = 0.0;
    for (j, (emp, exact)) in sample.occupancy.iter().zip(&analytic).enumerate() {
        let err = (emp - exact).abs();
        worst = worst.max(err);
        assert!(err <= 1e-2, "state {j}: |{emp} - {exact}| = {err:.3e}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!(
        "criterion 2 PASS: {} transitions, worst per-state error {worst:.3e} ({elapsed:.2?})",
        sample.transitions
    );
}

/// Criterion 3 — half-fleet availability at low intensity:
/// A(n=10, u=5, δ=0.1) ≥ 0.99.
#[test]
fn criterion_03_half_fleet_availability() {
    let a = fleet(10, 5, 0.1).availability();
    assert!(a >= 0.99, "A = {a}");
    // derived value from the balance oracle
    assert!((a - 0.9990283475739535).abs() < 1e-12);
    println!("criterion 3 PASS: A(10, 5, 0.1) = {a:.6}");
}

/// Criterion 4 — high intensity demands one PAP per cell: with n = 10,
/// δ = 2, ρ = 0.99 the cap engages and the optimal fleet is 10.
#[test]
fn criterion_04_high_intensity_full_fleet() {
    let traffic = TrafficModel::from_intensity(2.0).unwrap();
    let u = optimal_pap_count(10, &traffic, 0.99).unwrap();
    assert_eq!(u, 10);
    let a_full = fleet(10, 10, 2.0).availability();
    assert!((a_full - (1.0 - 1024.0 / 59049.0)).abs() < 1e-12);
    assert!(a_full < 0.99, "cap must engage, A(u=10) = {a_full}");
    println!("criterion 4 PASS: u_opt = {u}, A(u=10) = {a_full:.6} < 0.99");
}

/// Criterion 5 — coverage radii under the reference link budget:
/// urban 290.7 m ± 1 %, suburban 388.0 m ± 1 %, urban strictly smaller.
#[test]
fn criterion_05_coverage_radii() {
    let radio = reference_radio();
    let urban = coverage_spec(&radio, &EnvironmentProfile::urban()).unwrap();
    let suburban = coverage_spec(&radio, &EnvironmentProfile::suburban()).unwrap();
    assert!(
        ((urban.radius - 290.7) / 290.7).abs() <= 0.01,
        "urban radius {}",
        urban.radius
    );
    assert!(
        ((suburban.radius - 388.0) / 388.0).abs() <= 0.01,
        "suburban radius {}",
        suburban.radius
    );
    assert!(urban.radius < suburban.radius);
    println!(
        "criterion 5 PASS: urban {:.1} m, suburban {:.1} m",
        urban.radius, suburban.radius
    );
}

/// Criterion 6 — packing depth equals ceil(log2(R/R_p)) for 1e4 random
/// radius ratios in (1, 64], geometry only, within 5 s.
#[test]
fn criterion_06_level_count_conformance() {
    let start = Instant::now();
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(606);
    for k in 0..10_000 {
        let ratio = 64f64.powf(rng.gen::<f64>()); // log-uniform over (1, 64]
        let cell = 50.0 + 450.0 * rng.gen::<f64>();
        let region = cell * ratio;
        let layout = pack(region, &bare_spec(cell), &[]).unwrap();
        let expected = (region / cell).log2().ceil() as u32;
        assert_eq!(layout.levels, expected, "pair {k}: ratio {ratio}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("criterion 6 PASS: 10000 ratio draws conform ({elapsed:.2?})");
}

/// Criterion 7 — 600 urban trials at R = 600 m, N = 15: every node covered
/// in every trial and the mean cell count within [8, 12], within 60 s.
#[test]
fn criterion_07_packing_coverage_and_cell_count() {
    let start = Instant::now();
    let radio = reference_radio();
    let spec = coverage_spec(&radio, &EnvironmentProfile::urban()).unwrap();
    let mut total = 0usize;
    for trial in 0..600 {
        let gns = sample_gns(15, 600.0, trial_seed(0, trial));
        let layout = pack(600.0, &spec, &gns).unwrap();
        for g in &gns {
            assert!(layout.covers(g), "trial {trial}: node {} uncovered", g.id);
        }
        total += layout.n_cells();
    }
    let mean = total as f64 / 600.0;
    let elapsed = start.elapsed();
    assert!(
        (8.0..=12.0).contains(&mean),
        "mean cell count {mean} outside [8, 12]"
    );
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 7 PASS: mean cell count {mean:.2} over 600 trials ({elapsed:.2?})");
}

fn scenario(radius: f64, n: u32, env: EnvironmentProfile, seed: u64) -> ScenarioConfig {
    ScenarioConfig {
        region_radius: radius,
        n_gns: n,
        environment: env,
        radio: reference_radio(),
        traffic: TrafficModel::from_intensity(0.1).unwrap(),
        threshold: 0.9,
        trials: 600,
        seed,
    }
}

/// Criterion 8 — averaged cell-count trends with paired seeds, 600 trials
/// per point: non-decreasing in the region radius and the node count,
/// urban at least suburban, all within 2 min.
#[test]
fn criterion_08_cell_count_trends() {
    let start = Instant::now();
    let seed = 88;
    let urban = EnvironmentProfile::urban();
    let suburban = EnvironmentProfile::suburban();

    let mean = |cfg: &ScenarioConfig| uas_planner::avg_cell_count(cfg).unwrap().mean;

    let by_radius: Vec<f64> = [400.0, 600.0, 1200.0]
        .iter()
        .map(|&r| mean(&scenario(r, 15, urban, seed)))
        .collect();
    assert!(
        by_radius.windows(2).all(|w| w[0] <= w[1]),
        "radius trend {by_radius:?}"
    );

    let by_n: Vec<f64> = [5, 15, 25]
        .iter()
        .map(|&n| mean(&scenario(600.0, n, urban, seed)))
        .collect();
    assert!(by_n.windows(2).all(|w| w[0] <= w[1]), "node trend {by_n:?}");

    let m_urban = mean(&scenario(600.0, 15, urban, seed));
    let m_suburban = mean(&scenario(600.0, 15, suburban, seed));
    assert!(
        m_urban >= m_suburban,
        "urban {m_urban} < suburban {m_suburban}"
    );

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 8 PASS: radius {by_radius:?}, nodes {by_n:?}, urban {m_urban:.2} >= suburban {m_suburban:.2} ({elapsed:.2?})"
    );
}

/// Criterion 9 — normalized-cost trends at R = 600 m, suburban, N = 25,
/// 600 trials per point: non-decreasing in δ and in ρ, exactly 1 at ρ = 1
/// with δ > 0, within 2 min.
#[test]
fn criterion_09_normalized_cost_trends() {
    let start = Instant::now();
    let base = scenario(600.0, 25, EnvironmentProfile::suburban(), 99);

    let by_delta =
        uas_planner::cost_vs_radius(&base, &[600.0], &[0.1, 0.5, 2.0]).unwrap();
    let costs: Vec<f64> = by_delta.iter().map(|r| r.avg_normalized_cost).collect();
    assert!(
        costs.windows(2).all(|w| w[0] <= w[1]),
        "intensity trend {costs:?}"
    );

    let mut by_rho = Vec::new();
    for rho in [0.9, 0.99, 0.999] {
        let cfg = ScenarioConfig {
            threshold: rho,
            ..base
        };
        let rows = uas_planner::cost_vs_radius(&cfg, &[600.0], &[0.5]).unwrap();
        by_rho.push(rows[0].avg_normalized_cost);
    }
    assert!(
        by_rho.windows(2).all(|w| w[0] <= w[1]),
        "threshold trend {by_rho:?}"
    );

    let saturated = ScenarioConfig {
        threshold: 1.0,
        ..base
    };
    let rows = uas_planner::cost_vs_radius(&saturated, &[600.0], &[1.0]).unwrap();
    assert_eq!(rows[0].avg_normalized_cost, 1.0, "ρ = 1 with δ > 0");

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 9 PASS: cost by δ {costs:?}, by ρ {by_rho:?}, saturates at 1 ({elapsed:.2?})"
    );
}

/// Criterion 10 — rerunning any figure subcommand with the same config
/// yields byte-identical CSVs.
#[test]
fn criterion_10_figure_determinism() {
    let bin = env!("CARGO_BIN_EXE_uas-planner");
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("run.json");
    std::fs::write(
        &config_path,
        r#"{
            "region": {"radius_m": 600.0, "n_gns": 15},
            "radio": {
                "g0": 1.42e-4, "p_downlink_w": 1e-3, "p_max_gn_w": 1.0,
                "noise_power_w": 1.25e-14, "gamma_dl": 100.0, "gamma_ul": 100.0
            },
            "environment": "suburban",
            "traffic": {"arrival_rate": 0.1, "service_rate": 1.0},
            "experiment": {
                "trials": 40, "seed": 7,
                "radii_m": [400.0, 600.0, 800.0],
                "gn_counts": [5, 15],
                "intensities": [0.1, 0.5, 1.0, 2.0],
                "thresholds": [0.9, 0.99],
                "n_cells": 10
            }
        }"#,
    )
    .unwrap();

    for figure in ["fig4", "fig5", "fig6"] {
        let mut outputs = Vec::new();
        for run in 0..2 {
            let out = dir.path().join(format!("{figure}-{run}"));
            let status = std::process::Command::new(bin)
                .args([
                    "figure",
                    figure,
                    "--config",
                    config_path.to_str().unwrap(),
                    "--out",
                    out.to_str().unwrap(),
                ])
                .env_remove("UAS_PLANNER_OUT")
                .stdout(std::process::Stdio::null())
                .status()
                .unwrap();
            assert!(status.success(), "{figure} run {run} failed");
            outputs.push(std::fs::read(out.join(format!("{figure}.csv"))).unwrap());
        }
        assert_eq!(outputs[0], outputs[1], "{figure} CSVs differ across runs");
        assert!(!outputs[0].is_empty());
    }
    println!("criterion 10 PASS: fig4/fig5/fig6 byte-identical across reruns");
}
