//! Fleet availability via a finite-source birth-death Markov chain.
//!
//! Each of the `n` cells generates service requests as an independent
//! Poisson source of rate `λ` while idle; each busy PAP completes service at
//! exponential rate `κ`. With `u` PAPs the number of busy PAPs is a
//! birth-death chain on `{0, .., u}` with birth rate `(n-j)·λ` and death
//! rate `j·κ`. The stationary law is the truncated binomial-like product
//! form `p_j ∝ C(n,j)·δ^j` with `δ = λ/κ`; blocking is `p_u`, availability
//! `1 - p_u`.
//!
//! Stationary probabilities are computed with the ratio recurrence
//! `p_{j+1} = p_j·(n-j)·δ/(j+1)` followed by one normalization, which is
//! algebraically identical to the explicit binomial form but never touches
//! a factorial.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-cell demand: arrival rate of new service requests (`λ`) and per-PAP
/// service completion rate (`κ`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrafficModel {
    pub arrival_rate: f64,
    pub service_rate: f64,
}

impl TrafficModel {
    pub fn new(arrival_rate: f64, service_rate: f64) -> Result<Self> {
        if arrival_rate < 0.0 || !arrival_rate.is_finite() {
            return Err(Error::invalid(
                "arrival_rate",
                format!("must be >= 0, got {arrival_rate}"),
            ));
        }
        if service_rate <= 0.0 || !service_rate.is_finite() {
            return Err(Error::invalid(
                "service_rate",
                format!("must be > 0, got {service_rate}"),
            ));
        }
        Ok(Self {
            arrival_rate,
            service_rate,
        })
    }

    /// Unit-rate service with the given traffic intensity `δ`.
    pub fn from_intensity(delta: f64) -> Result<Self> {
        Self::new(delta, 1.0)
    }

    /// Traffic intensity `δ = λ/κ`.
    pub fn intensity(&self) -> f64 {
        self.arrival_rate / self.service_rate
    }
}

/// A fleet of `n_paps` PAPs serving `n_cells` cells under the given traffic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FleetModel {
    pub n_cells: u32,
    pub n_paps: u32,
    pub traffic: TrafficModel,
}

impl FleetModel {
    /// `n_paps` may be zero (a degenerate fleet that is never available);
    /// more PAPs than cells add no reachable states and are rejected.
    pub fn new(n_cells: u32, n_paps: u32, traffic: TrafficModel) -> Result<Self> {
        if n_cells == 0 {
            return Err(Error::invalid("n_cells", "must be >= 1"));
        }
        if n_paps > n_cells {
            return Err(Error::invalid(
                "n_paps",
                format!("must not exceed n_cells ({n_cells}), got {n_paps}"),
            ));
        }
        Ok(Self {
            n_cells,
            n_paps,
            traffic,
        })
    }

    /// Stationary distribution `p_0..p_u` of the busy-PAP count.
    pub fn stationary_distribution(&self) -> Vec<f64> {
        let n = f64::from(self.n_cells);
        let delta = self.traffic.intensity();
        let u = self.n_paps as usize;
        let mut p = Vec::with_capacity(u + 1);
        let mut term = 1.0;
        p.push(term);
        for j in 0..u {
            term *= (n - j as f64) * delta / (j as f64 + 1.0);
            p.push(term);
        }
        let sum: f64 = p.iter().sum();
        for v in &mut p {
            *v /= sum;
        }
        p
    }

    /// Probability that all PAPs are busy when a cell turns active.
    pub fn blocking(&self) -> f64 {
        *self
            .stationary_distribution()
            .last()
            .expect("distribution is never empty")
    }

    /// Steady-state availability `1 - p_u`; zero for an empty fleet.
    pub fn availability(&self) -> f64 {
        1.0 - self.blocking()
    }

    /// Mean busy PAPs over fleet size, `Σ j·p_j / u`.
    pub fn utilization(&self) -> Result<f64> {
        if self.n_paps == 0 {
            return Err(Error::invalid("n_paps", "utilization needs at least one PAP"));
        }
        let p = self.stationary_distribution();
        let mean_busy: f64 = p
            .iter()
            .enumerate()
            .map(|(j, &pj)| j as f64 * pj)
            .sum();
        Ok(mean_busy / f64::from(self.n_paps))
    }

    /// Stationary law, availability, blocking and utilization in one shot.
    pub fn analyze(&self) -> Result<AvailabilityResult> {
        let stationary = self.stationary_distribution();
        let blocking = *stationary.last().expect("distribution is never empty");
        let utilization = self.utilization()?;
        Ok(AvailabilityResult {
            stationary,
            availability: 1.0 - blocking,
            blocking,
            utilization,
        })
    }

    /// Discrete-event simulation of the busy-PAP chain.
    ///
    /// Dwell times are sampled by inverse transform (`-ln(U)/rate`) from a
    /// seeded ChaCha8 stream, so runs are reproducible across platforms.
    /// Returns time-weighted state occupancy over the horizon; occupancy
    /// converges to [`Self::stationary_distribution`] as the horizon grows.
    pub fn simulate(&self, horizon: f64, seed: u64) -> Result<OccupancySample> {
        if horizon <= 0.0 || !horizon.is_finite() {
            return Err(Error::invalid(
                "horizon",
                format!("must be > 0, got {horizon}"),
            ));
        }
        let n = f64::from(self.n_cells);
        let u = self.n_paps as usize;
        let lambda = self.traffic.arrival_rate;
        let kappa = self.traffic.service_rate;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut occupancy = vec![0.0; u + 1];
        let mut state = 0usize;
        let mut t = 0.0;
        let mut transitions = 0u64;
        loop {
            let birth = if state < u {
                (n - state as f64) * lambda
            } else {
                0.0
            };
            let death = state as f64 * kappa;
            let total = birth + death;
            if total == 0.0 {
                // absorbing (δ = 0 in state 0): the rest of the horizon
                // stays here
                occupancy[state] += horizon - t;
                break;
            }
            // U ∈ [0, 1): 1-U avoids ln(0)
            let dwell = -(1.0 - rng.gen::<f64>()).ln() / total;
            if t + dwell >= horizon {
                occupancy[state] += horizon - t;
                break;
            }
            occupancy[state] += dwell;
            t += dwell;
            transitions += 1;
            if rng.gen::<f64>() * total < birth {
                state += 1;
            } else {
                state -= 1;
            }
        }
        for v in &mut occupancy {
            *v /= horizon;
        }
        Ok(OccupancySample {
            occupancy,
            transitions,
        })
    }
}

/// Steady-state summary of one fleet configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AvailabilityResult {
    /// Stationary probabilities `p_0..p_u`.
    pub stationary: Vec<f64>,
    /// `1 - blocking`.
    pub availability: f64,
    /// Probability a new active cell finds every PAP busy.
    pub blocking: f64,
    /// Mean busy PAPs over fleet size.
    pub utilization: f64,
}

/// Empirical state occupancy from one simulated trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupancySample {
    /// Time-weighted fraction spent in each state `0..=u`.
    pub occupancy: Vec<f64>,
    /// Number of state transitions within the horizon.
    pub transitions: u64,
}

/// Smallest fleet size whose availability meets `threshold`, capped at the
/// cell count (one PAP per cell always suffices structurally).
pub fn optimal_pap_count(n_cells: u32, traffic: &TrafficModel, threshold: f64) -> Result<u32> {
    if n_cells == 0 {
        return Err(Error::invalid("n_cells", "must be >= 1"));
    }
    if threshold.is_nan() || threshold <= 0.0 || threshold > 1.0 {
        return Err(Error::invalid(
            "threshold",
            format!("must lie in (0, 1], got {threshold}"),
        ));
    }
    for u in 1..=n_cells {
        let fleet = FleetModel::new(n_cells, u, *traffic)?;
        if fleet.availability() >= threshold {
            return Ok(u);
        }
    }
    Ok(n_cells)
}
