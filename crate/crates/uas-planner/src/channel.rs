//! Probabilistic line-of-sight air-to-ground channel model.
//!
//! A PAP carries a square-beam directional antenna of half-beamwidth `θ`
//! (gain `G_o/θ²` inside the beam, zero outside). The ground-to-air path
//! loss is the free-space term `(r² + h²)/g0` scaled by the mean additional
//! loss `η_m(φ)`, a blend of the LoS and non-LoS excess-loss factors weighted
//! by the elevation-dependent LoS probability.
//!
//! Angle conventions: antenna geometry (`θ`, off-boresight angles) is in
//! radians; the elevation angle fed to the LoS probability is in degrees,
//! because the sigmoid fit parameters `(a, b)` come from a degree-based
//! model.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Peak antenna gain numerator `G_o` for the square-beam pattern.
pub const BORESIGHT_GAIN: f64 = 2.2846;

/// Environment-dependent channel parameters.
///
/// `(a, b)` shape the LoS-probability sigmoid; `eta_los`/`eta_nlos` are the
/// linear mean additional-loss factors of LoS and non-LoS links;
/// `half_beamwidth` is the PAP antenna half-beamwidth in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnvironmentProfile {
    pub a: f64,
    pub b: f64,
    pub eta_los: f64,
    pub eta_nlos: f64,
    pub half_beamwidth: f64,
}

impl EnvironmentProfile {
    pub fn new(a: f64, b: f64, eta_los: f64, eta_nlos: f64, half_beamwidth: f64) -> Result<Self> {
        if a <= 0.0 || a.is_nan() {
            return Err(Error::invalid("a", format!("must be > 0, got {a}")));
        }
        if b <= 0.0 || b.is_nan() {
            return Err(Error::invalid("b", format!("must be > 0, got {b}")));
        }
        if eta_los <= 0.0 || eta_los.is_nan() {
            return Err(Error::invalid("eta_los", format!("must be > 0, got {eta_los}")));
        }
        if eta_nlos < eta_los || eta_nlos.is_nan() {
            return Err(Error::invalid(
                "eta_nlos",
                format!("must be >= eta_los ({eta_los}), got {eta_nlos}"),
            ));
        }
        check_half_beamwidth(half_beamwidth)?;
        Ok(Self {
            a,
            b,
            eta_los,
            eta_nlos,
            half_beamwidth,
        })
    }

    /// Suburban preset: (a, b, η_l, η_nl, θ) = (4.83, 0.43, 1.01, 11.22, 70°).
    pub fn suburban() -> Self {
        Self {
            a: 4.83,
            b: 0.43,
            eta_los: 1.01,
            eta_nlos: 11.22,
            half_beamwidth: 70f64.to_radians(),
        }
    }

    /// Urban preset: (a, b, η_l, η_nl, θ) = (9.6, 0.16, 1.12, 10, 52°).
    pub fn urban() -> Self {
        Self {
            a: 9.6,
            b: 0.16,
            eta_los: 1.12,
            eta_nlos: 10.0,
            half_beamwidth: 52f64.to_radians(),
        }
    }

    /// Look up a deployment preset by name.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "suburban" => Some(Self::suburban()),
            "urban" => Some(Self::urban()),
            _ => None,
        }
    }
}

/// Link budget shared by the downlink and uplink dimensioning rules.
///
/// All quantities are linear (Watts for powers, unitless for gains and SNR
/// thresholds). `boresight_gain` defaults to [`BORESIGHT_GAIN`] and exists so
/// callers can override the antenna pattern constant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadioConfig {
    /// Channel gain at the 1 m reference distance.
    pub g0: f64,
    /// Downlink transmit power per ground node, Watts.
    pub p_downlink: f64,
    /// Maximum ground-node transmit power, Watts.
    pub p_max_gn: f64,
    /// Noise power, Watts.
    pub noise_power: f64,
    /// Downlink SNR threshold, linear.
    pub gamma_dl: f64,
    /// Uplink SNR threshold, linear.
    pub gamma_ul: f64,
    /// Antenna pattern numerator `G_o`.
    pub boresight_gain: f64,
}

impl RadioConfig {
    pub fn new(
        g0: f64,
        p_downlink: f64,
        p_max_gn: f64,
        noise_power: f64,
        gamma_dl: f64,
        gamma_ul: f64,
    ) -> Result<Self> {
        let cfg = Self {
            g0,
            p_downlink,
            p_max_gn,
            noise_power,
            gamma_dl,
            gamma_ul,
            boresight_gain: BORESIGHT_GAIN,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (field, v) in [
            ("g0", self.g0),
            ("p_downlink", self.p_downlink),
            ("p_max_gn", self.p_max_gn),
            ("noise_power", self.noise_power),
            ("gamma_dl", self.gamma_dl),
            ("gamma_ul", self.gamma_ul),
            ("boresight_gain", self.boresight_gain),
        ] {
            if v <= 0.0 || !v.is_finite() {
                return Err(Error::invalid(field, format!("must be > 0, got {v}")));
            }
        }
        Ok(())
    }
}

fn check_half_beamwidth(half_beamwidth: f64) -> Result<()> {
    if half_beamwidth.is_nan()
        || half_beamwidth <= 0.0
        || half_beamwidth >= std::f64::consts::FRAC_PI_2
    {
        return Err(Error::invalid(
            "half_beamwidth",
            format!("must lie in (0, pi/2) radians, got {half_beamwidth}"),
        ));
    }
    Ok(())
}

/// Directional antenna gain in the direction `(psi, omega)` off boresight.
///
/// Returns `G_o/θ²` when both off-boresight angles lie within the
/// half-beamwidth, zero otherwise. All angles in radians.
pub fn antenna_gain(half_beamwidth: f64, psi: f64, omega: f64) -> Result<f64> {
    check_half_beamwidth(half_beamwidth)?;
    if psi.abs() <= half_beamwidth && omega.abs() <= half_beamwidth {
        Ok(BORESIGHT_GAIN / (half_beamwidth * half_beamwidth))
    } else {
        Ok(0.0)
    }
}

/// Line-of-sight probability at the given elevation angle (degrees).
///
/// Sigmoid fit `1 / (1 + a·exp(-b·(φ - a)))`; strictly increasing in
/// elevation, valued in (0, 1).
pub fn los_probability(elevation_deg: f64, env: &EnvironmentProfile) -> Result<f64> {
    if !(0.0..=90.0).contains(&elevation_deg) {
        return Err(Error::invalid(
            "elevation",
            format!("must lie in [0, 90] degrees, got {elevation_deg}"),
        ));
    }
    Ok(1.0 / (1.0 + env.a * (-env.b * (elevation_deg - env.a)).exp()))
}

/// Mean additional path loss `η_m(φ)` at the given elevation (degrees).
///
/// Blends the squared excess-loss factors: `η_nl² + P_l(φ)·(η_l² − η_nl²)`,
/// bounded in `[η_l², η_nl²]` and decreasing in elevation.
pub fn mean_additional_loss(elevation_deg: f64, env: &EnvironmentProfile) -> Result<f64> {
    let p_los = los_probability(elevation_deg, env)?;
    let l2 = env.eta_los * env.eta_los;
    let nl2 = env.eta_nlos * env.eta_nlos;
    Ok(nl2 + p_los * (l2 - nl2))
}

/// Probabilistic mean path loss between a ground node at horizontal distance
/// `r` and a PAP hovering at altitude `h` (both meters), linear.
///
/// Free-space term `(r² + h²)/g0` times `η_m(φ)` with
/// `φ = (180/π)·atan(h/r)`; a node directly underneath (`r = 0`) sees
/// `φ = 90°`.
pub fn mean_path_loss(
    horizontal_distance: f64,
    altitude: f64,
    env: &EnvironmentProfile,
    cfg: &RadioConfig,
) -> Result<f64> {
    if altitude <= 0.0 || altitude.is_nan() {
        return Err(Error::invalid(
            "altitude",
            format!("must be > 0, got {altitude}"),
        ));
    }
    if horizontal_distance < 0.0 || horizontal_distance.is_nan() {
        return Err(Error::invalid(
            "horizontal_distance",
            format!("must be >= 0, got {horizontal_distance}"),
        ));
    }
    let elevation_deg = if horizontal_distance == 0.0 {
        90.0
    } else {
        (altitude / horizontal_distance).atan().to_degrees()
    };
    let fspl = (horizontal_distance * horizontal_distance + altitude * altitude) / cfg.g0;
    Ok(fspl * mean_additional_loss(elevation_deg, env)?)
}
