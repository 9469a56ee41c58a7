//! Deployment planning for fleets of UAV-mounted portable access points
//! (PAPs).
//!
//! Given a circular service region with stationary ground nodes, the crate
//! answers two sizing questions end to end:
//!
//! 1. **How many cells?** A probabilistic line-of-sight air-to-ground
//!    channel ([`channel`]) fixes the per-PAP coverage radius and hover
//!    height ([`coverage`]); a multi-level 7-circle hexagonal covering then
//!    places the fewest cells that serve every node ([`packing`]).
//! 2. **How many PAPs?** Cells request service as finite Poisson sources
//!    and PAPs serve exponentially; the busy-fleet birth-death chain yields
//!    steady-state availability, blocking, utilization and the smallest
//!    fleet meeting an availability threshold ([`reliability`]).
//!
//! [`scenario`] runs seeded Monte Carlo sweeps over these pieces and emits
//! deterministic CSV datasets; [`cli`] exposes everything as the
//! `uas-planner` binary. Every random stream is ChaCha8 seeded from
//! explicit integers, so all outputs are bit-reproducible.
//!
//! See the crate examples for runnable tours of each capability:
//!
//! ```bash
//! cargo run --example coverage_radii
//! cargo run --example cell_layout
//! cargo run --example fleet_availability
//! cargo run --example ctmc_vs_analytic
//! cargo run --example figure_datasets
//! ```

pub mod channel;
pub mod cli;
pub mod config;
pub mod coverage;
pub mod error;
pub mod manifest;
pub mod packing;
pub mod reliability;
pub mod scenario;

pub use channel::{
    antenna_gain, los_probability, mean_additional_loss, mean_path_loss, EnvironmentProfile,
    RadioConfig, BORESIGHT_GAIN,
};
pub use coverage::{coverage_spec, downlink_radius, gn_transmit_power, uplink_radius, CoverageSpec};
pub use error::{Error, Result};
pub use packing::{
    candidate_grid, child_centers, levels_required, pack, prune, CandidateGrid, CellLayout,
    GroundNode, COVERAGE_TOL, MAX_LEVELS,
};
pub use reliability::{
    optimal_pap_count, AvailabilityResult, FleetModel, OccupancySample, TrafficModel,
};
pub use scenario::{
    avg_cell_count, avg_cell_count_with, availability_curve, cost_vs_radius, sample_gns,
    trial_seed, ScenarioConfig,
};
