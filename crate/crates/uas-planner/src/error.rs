//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by planner operations and configuration handling.
#[derive(Debug, Error)]
pub enum Error {
    /// A numeric parameter violated its documented domain.
    #[error("invalid {field}: {reason}")]
    InvalidField {
        field: &'static str,
        reason: String,
    },

    /// A ground node lies outside the service region disk.
    #[error("ground node {id} at ({x:.3}, {y:.3}) lies outside the region of radius {region_radius} m")]
    GnOutsideRegion {
        id: u32,
        x: f64,
        y: f64,
        region_radius: f64,
    },

    /// The region-to-cell radius ratio requires more packing levels than supported.
    #[error("packing would need {levels} levels ({max} supported); region/cell radius ratio too large")]
    TooManyLevels { levels: u32, max: u32 },

    /// Configuration file could not be interpreted.
    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidField {
            field,
            reason: reason.into(),
        }
    }
}
