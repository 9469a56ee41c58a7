//! Seeded Monte Carlo experiment engine.
//!
//! Ground nodes are drawn uniformly on the service disk from a ChaCha8
//! stream; every trial derives its own seed from `(seed, trial)` via a
//! splitmix64 mix, so trials are independent, reproducible work units and
//! aggregate tables are bit-identical across runs. Reusing a seed across
//! swept region radii reuses the same underlying unit stream, which pairs
//! the comparisons and cancels sampling noise in monotonicity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::channel::{EnvironmentProfile, RadioConfig};
use crate::coverage::coverage_spec;
use crate::error::{Error, Result};
use crate::packing::{pack, GroundNode};
use crate::reliability::{optimal_pap_count, FleetModel, TrafficModel};

/// One Monte Carlo experiment setup.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScenarioConfig {
    /// Service region radius, meters.
    pub region_radius: f64,
    /// Ground nodes per realization.
    pub n_gns: u32,
    pub environment: EnvironmentProfile,
    pub radio: RadioConfig,
    pub traffic: TrafficModel,
    /// Availability threshold `ρ` for fleet sizing.
    pub threshold: f64,
    /// Independent realizations per configuration.
    pub trials: u32,
    pub seed: u64,
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        if self.region_radius <= 0.0 || self.region_radius.is_nan() {
            return Err(Error::invalid("region_radius", "must be > 0"));
        }
        if self.n_gns == 0 {
            return Err(Error::invalid("n_gns", "must be >= 1"));
        }
        if self.trials == 0 {
            return Err(Error::invalid("trials", "must be >= 1"));
        }
        if self.threshold.is_nan() || self.threshold <= 0.0 || self.threshold > 1.0 {
            return Err(Error::invalid("threshold", "must lie in (0, 1]"));
        }
        self.radio.validate()
    }
}

/// Seed for one trial of a base-seeded experiment (splitmix64 mix).
pub fn trial_seed(seed: u64, trial: u32) -> u64 {
    let mut z = seed
        .wrapping_add(u64::from(trial).wrapping_add(1).wrapping_mul(0x9E3779B97F4A7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// `n` ground nodes uniform on the disk of the given radius.
///
/// Radius `R·√U`, angle `2π·V`, one `(U, V)` pair per node in order, so a
/// longer draw from the same seed extends a shorter one.
pub fn sample_gns(n: u32, region_radius: f64, seed: u64) -> Vec<GroundNode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|id| {
            let u: f64 = rng.gen();
            let v: f64 = rng.gen();
            let r = region_radius * u.sqrt();
            let angle = std::f64::consts::TAU * v;
            GroundNode::new(r * angle.cos(), r * angle.sin(), id)
        })
        .collect()
}

/// Average pruned cell count over seeded realizations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CellCountStats {
    pub mean: f64,
    /// `mean` rounded to the nearest integer.
    pub rounded: u64,
}

/// Mean cell count with the default uniform-disk node source.
pub fn avg_cell_count(cfg: &ScenarioConfig) -> Result<CellCountStats> {
    avg_cell_count_with(cfg, |trial| {
        sample_gns(cfg.n_gns, cfg.region_radius, trial_seed(cfg.seed, trial))
    })
}

/// Mean cell count with an injected per-trial node source.
pub fn avg_cell_count_with<F>(cfg: &ScenarioConfig, mut gn_source: F) -> Result<CellCountStats>
where
    F: FnMut(u32) -> Vec<GroundNode>,
{
    cfg.validate()?;
    let spec = coverage_spec(&cfg.radio, &cfg.environment)?;
    let mut total = 0usize;
    for trial in 0..cfg.trials {
        let gns = gn_source(trial);
        let layout = pack(cfg.region_radius, &spec, &gns)?;
        total += layout.n_cells();
    }
    let mean = total as f64 / f64::from(cfg.trials);
    Ok(CellCountStats {
        mean,
        rounded: mean.round() as u64,
    })
}

/// One row of the availability-versus-cost curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AvailabilityRow {
    pub n_paps: u32,
    /// Normalized investment cost `u/n`.
    pub cost: f64,
    pub availability: f64,
    pub utilization: f64,
}

/// Availability and utilization for every fleet size `1..=n_cells`.
pub fn availability_curve(n_cells: u32, traffic: &TrafficModel) -> Result<Vec<AvailabilityRow>> {
    if n_cells == 0 {
        return Err(Error::invalid("n_cells", "must be >= 1"));
    }
    (1..=n_cells)
        .map(|u| {
            let fleet = FleetModel::new(n_cells, u, *traffic)?;
            Ok(AvailabilityRow {
                n_paps: u,
                cost: f64::from(u) / f64::from(n_cells),
                availability: fleet.availability(),
                utilization: fleet.utilization()?,
            })
        })
        .collect()
}

/// One row of the normalized-cost sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostRow {
    pub intensity: f64,
    pub threshold: f64,
    pub region_radius: f64,
    /// Mean `u_opt/n` over the trials.
    pub avg_normalized_cost: f64,
}

/// Mean normalized fleet cost `u_opt/n` for every `(region radius, δ)`
/// combination, at the scenario's availability threshold. Trials are paired
/// across radii: each trial reuses the same unit stream at every radius.
pub fn cost_vs_radius(
    cfg: &ScenarioConfig,
    radii: &[f64],
    intensities: &[f64],
) -> Result<Vec<CostRow>> {
    cfg.validate()?;
    if radii.is_empty() {
        return Err(Error::invalid("radii", "sweep list must be non-empty"));
    }
    if intensities.is_empty() {
        return Err(Error::invalid("intensities", "sweep list must be non-empty"));
    }
    let spec = coverage_spec(&cfg.radio, &cfg.environment)?;
    let mut rows = Vec::with_capacity(radii.len() * intensities.len());
    for &delta in intensities {
        let traffic = TrafficModel::from_intensity(delta)?;
        for &radius in radii {
            let mut total = 0.0;
            for trial in 0..cfg.trials {
                let gns = sample_gns(cfg.n_gns, radius, trial_seed(cfg.seed, trial));
                let layout = pack(radius, &spec, &gns)?;
                let n = layout.n_cells() as u32;
                let u = optimal_pap_count(n.max(1), &traffic, cfg.threshold)?;
                total += f64::from(u) / f64::from(n.max(1));
            }
            rows.push(CostRow {
                intensity: delta,
                threshold: cfg.threshold,
                region_radius: radius,
                avg_normalized_cost: total / f64::from(cfg.trials),
            });
        }
    }
    Ok(rows)
}

/// One row of the average-cells dataset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellsRow {
    pub environment: String,
    pub region_radius: f64,
    pub n_gns: u32,
    pub avg_cells: f64,
}

/// Average cell count for every (environment, radius, node count)
/// combination, trials paired through the shared base seed.
pub fn cells_dataset(
    cfg: &ScenarioConfig,
    environments: &[(String, EnvironmentProfile)],
    radii: &[f64],
    gn_counts: &[u32],
) -> Result<Vec<CellsRow>> {
    if environments.is_empty() || radii.is_empty() || gn_counts.is_empty() {
        return Err(Error::invalid("experiment", "sweep lists must be non-empty"));
    }
    let mut rows = Vec::new();
    for (name, env) in environments {
        for &radius in radii {
            for &n in gn_counts {
                let sub = ScenarioConfig {
                    region_radius: radius,
                    n_gns: n,
                    environment: *env,
                    ..*cfg
                };
                let stats = avg_cell_count(&sub)?;
                rows.push(CellsRow {
                    environment: name.clone(),
                    region_radius: radius,
                    n_gns: n,
                    avg_cells: stats.mean,
                });
            }
        }
    }
    Ok(rows)
}

/// One row of the availability-curve dataset (one curve per intensity).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveRow {
    pub intensity: f64,
    pub n_paps: u32,
    pub cost: f64,
    pub availability: f64,
    pub utilization: f64,
}

/// Availability curves for a fixed cell count across traffic intensities.
pub fn curves_dataset(n_cells: u32, intensities: &[f64]) -> Result<Vec<CurveRow>> {
    if intensities.is_empty() {
        return Err(Error::invalid("intensities", "sweep list must be non-empty"));
    }
    let mut rows = Vec::with_capacity(intensities.len() * n_cells as usize);
    for &delta in intensities {
        let traffic = TrafficModel::from_intensity(delta)?;
        for row in availability_curve(n_cells, &traffic)? {
            rows.push(CurveRow {
                intensity: delta,
                n_paps: row.n_paps,
                cost: row.cost,
                availability: row.availability,
                utilization: row.utilization,
            });
        }
    }
    Ok(rows)
}

/// Normalized-cost sweep over radii, intensities and thresholds.
pub fn cost_dataset(
    cfg: &ScenarioConfig,
    radii: &[f64],
    intensities: &[f64],
    thresholds: &[f64],
) -> Result<Vec<CostRow>> {
    if thresholds.is_empty() {
        return Err(Error::invalid("thresholds", "sweep list must be non-empty"));
    }
    let mut rows = Vec::new();
    for &rho in thresholds {
        let sub = ScenarioConfig {
            threshold: rho,
            ..*cfg
        };
        rows.extend(cost_vs_radius(&sub, radii, intensities)?);
    }
    Ok(rows)
}

/// CSV with columns `env,R,N,avg_cells`.
pub fn cells_csv(rows: &[CellsRow]) -> String {
    let mut out = String::from("env,R,N,avg_cells\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.environment, r.region_radius, r.n_gns, r.avg_cells
        ));
    }
    out
}

/// CSV with columns `delta,u,u_over_n,A,eta`.
pub fn curves_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("delta,u,u_over_n,A,eta\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.intensity, r.n_paps, r.cost, r.availability, r.utilization
        ));
    }
    out
}

/// CSV with columns `delta,rho,R,avg_normalized_cost`.
pub fn cost_csv(rows: &[CostRow]) -> String {
    let mut out = String::from("delta,rho,R,avg_normalized_cost\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.intensity, r.threshold, r.region_radius, r.avg_normalized_cost
        ));
    }
    out
}
