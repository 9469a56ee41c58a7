//! PAP cell dimensioning: coverage radii, hover height, uplink power control.
//!
//! The downlink radius is the largest ground distance at which an edge node
//! still meets the downlink SNR threshold; the uplink radius is where the
//! power-controlled node transmit power reaches its cap. The cell radius is
//! the smaller of the two, and the PAP hovers at `R_p·tan(θ)` so the edge
//! node sits exactly on the beam boundary.

use serde::{Deserialize, Serialize};

use crate::channel::{mean_additional_loss, mean_path_loss, EnvironmentProfile, RadioConfig};
use crate::error::{Error, Result};

/// Resolved cell dimensions and uplink power-control target for one
/// (environment, radio) combination.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverageSpec {
    /// Downlink-limited coverage radius, meters.
    pub radius_dl: f64,
    /// Uplink-limited coverage radius, meters.
    pub radius_ul: f64,
    /// Effective cell radius `min(radius_dl, radius_ul)`, meters.
    pub radius: f64,
    /// PAP hover height `radius·tan(θ)`, meters.
    pub hover_height: f64,
    /// Target arrived power at the PAP for uplink power control, Watts.
    pub target_arrival_power: f64,
}

/// Common radius rule shared by both link directions.
fn link_radius(power: f64, gamma: f64, cfg: &RadioConfig, env: &EnvironmentProfile) -> Result<f64> {
    cfg.validate()?;
    let theta = env.half_beamwidth;
    let peak_gain = cfg.boresight_gain / (theta * theta);
    let eta_m = mean_additional_loss(theta.to_degrees(), env)?;
    let sin = theta.sin();
    Ok((peak_gain * cfg.g0 * power * sin * sin / (gamma * cfg.noise_power * eta_m)).sqrt())
}

/// Downlink coverage radius in meters.
pub fn downlink_radius(cfg: &RadioConfig, env: &EnvironmentProfile) -> Result<f64> {
    link_radius(cfg.p_downlink, cfg.gamma_dl, cfg, env)
}

/// Uplink coverage radius in meters.
pub fn uplink_radius(cfg: &RadioConfig, env: &EnvironmentProfile) -> Result<f64> {
    link_radius(cfg.p_max_gn, cfg.gamma_ul, cfg, env)
}

/// Full cell dimensioning: both radii, their minimum, the hover height and
/// the uplink power-control target `Γ^u·σ²/G_p`.
pub fn coverage_spec(cfg: &RadioConfig, env: &EnvironmentProfile) -> Result<CoverageSpec> {
    let radius_dl = downlink_radius(cfg, env)?;
    let radius_ul = uplink_radius(cfg, env)?;
    let radius = radius_dl.min(radius_ul);
    let theta = env.half_beamwidth;
    let peak_gain = cfg.boresight_gain / (theta * theta);
    Ok(CoverageSpec {
        radius_dl,
        radius_ul,
        radius,
        hover_height: radius * theta.tan(),
        target_arrival_power: cfg.gamma_ul * cfg.noise_power / peak_gain,
    })
}

/// Power-controlled uplink transmit power (Watts) for a ground node at
/// horizontal distance `r` from the cell center.
///
/// Inverts the mean path loss so every node arrives at the PAP with the same
/// target power. Rejects nodes outside the cell radius.
pub fn gn_transmit_power(
    horizontal_distance: f64,
    spec: &CoverageSpec,
    env: &EnvironmentProfile,
    cfg: &RadioConfig,
) -> Result<f64> {
    if horizontal_distance > spec.radius {
        return Err(Error::invalid(
            "horizontal_distance",
            format!(
                "ground node at {horizontal_distance} m is outside the cell radius {} m",
                spec.radius
            ),
        ));
    }
    Ok(spec.target_arrival_power * mean_path_loss(horizontal_distance, spec.hover_height, env, cfg)?)
}
