//! System-level parameters shared by every secrecy-rate computation.
//!
//! A [`SystemConfig`] fixes the deployment: how many users share the
//! superposed downlink signal, the transmit and noise powers, the path-loss
//! law used to map distances to mean channel gains, and the residual
//! interference factor left behind by imperfect successive interference
//! cancellation (SIC).

use serde::Serialize;

use crate::error::{Error, Result};

/// Default number of users sharing the downlink.
pub const DEFAULT_USER_COUNT: usize = 3;
/// Default path-loss constant `L_p` (linear).
pub const DEFAULT_PATH_LOSS_CONSTANT: f64 = 1.0;
/// Default path-loss exponent `e`.
pub const DEFAULT_PATH_LOSS_EXPONENT: f64 = 3.0;
/// Default residual interference factor `zeta` left by imperfect SIC.
pub const DEFAULT_RESIDUAL_SIC_FACTOR: f64 = 0.1;
/// Default noise power at every receiver, in dBm.
pub const DEFAULT_NOISE_POWER_DBM: f64 = -90.0;

/// Converts a power level in dBm to linear milliwatts.
pub fn dbm_to_milliwatts(dbm: f64) -> f64 {
    10f64.powf(dbm / 10.0)
}

/// Immutable description of the transmission system.
///
/// Construction validates every field, so a `SystemConfig` held by value is
/// always internally consistent. The transmit power has no default and must
/// be supplied at construction time; the remaining fields start from the
/// module defaults and can be adjusted through the `with_*` combinators.
///
/// # Example
///
/// ```
/// use noma_secrecy::config::SystemConfig;
///
/// let config = SystemConfig::new(3, -30.0).unwrap();
/// assert_eq!(config.user_count(), 3);
/// // -30 dBm transmit power over -90 dBm noise is a 60 dB transmit SNR.
/// assert!((config.transmit_snr() - 1.0e6).abs() < 1e-3);
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SystemConfig {
    user_count: usize,
    transmit_power_dbm: f64,
    noise_power_dbm: f64,
    path_loss_constant: f64,
    path_loss_exponent: f64,
    residual_sic_factor: f64,
}

impl SystemConfig {
    /// Creates a configuration for `user_count` users at the given transmit
    /// power, with all other parameters at their defaults.
    ///
    /// Requires `user_count >= 2` and a finite transmit power.
    pub fn new(user_count: usize, transmit_power_dbm: f64) -> Result<Self> {
        if user_count < 2 {
            return Err(Error::domain(format!(
                "user count must be at least 2, got {user_count}"
            )));
        }
        if !transmit_power_dbm.is_finite() {
            return Err(Error::domain(format!(
                "transmit power must be finite, got {transmit_power_dbm} dBm"
            )));
        }
        Ok(SystemConfig {
            user_count,
            transmit_power_dbm,
            noise_power_dbm: DEFAULT_NOISE_POWER_DBM,
            path_loss_constant: DEFAULT_PATH_LOSS_CONSTANT,
            path_loss_exponent: DEFAULT_PATH_LOSS_EXPONENT,
            residual_sic_factor: DEFAULT_RESIDUAL_SIC_FACTOR,
        })
    }

    /// Replaces the transmit power (dBm).
    pub fn with_transmit_power_dbm(mut self, dbm: f64) -> Result<Self> {
        if !dbm.is_finite() {
            return Err(Error::domain(format!(
                "transmit power must be finite, got {dbm} dBm"
            )));
        }
        self.transmit_power_dbm = dbm;
        Ok(self)
    }

    /// Replaces the per-receiver noise power (dBm).
    pub fn with_noise_power_dbm(mut self, dbm: f64) -> Result<Self> {
        if !dbm.is_finite() {
            return Err(Error::domain(format!(
                "noise power must be finite, got {dbm} dBm"
            )));
        }
        self.noise_power_dbm = dbm;
        Ok(self)
    }

    /// Replaces the path-loss law `mean gain = constant * distance^-exponent`.
    ///
    /// The constant must be finite and strictly positive so that mean gains
    /// stay positive; the exponent must be finite.
    pub fn with_path_loss(mut self, constant: f64, exponent: f64) -> Result<Self> {
        if !constant.is_finite() || constant <= 0.0 {
            return Err(Error::domain(format!(
                "path-loss constant must be finite and positive, got {constant}"
            )));
        }
        if !exponent.is_finite() {
            return Err(Error::domain(format!(
                "path-loss exponent must be finite, got {exponent}"
            )));
        }
        self.path_loss_constant = constant;
        self.path_loss_exponent = exponent;
        Ok(self)
    }

    /// Replaces the residual interference factor, which must lie in `[0, 1]`.
    ///
    /// A factor of 0 models perfect SIC; 1 means cancellation removes
    /// nothing.
    pub fn with_residual_sic_factor(mut self, factor: f64) -> Result<Self> {
        if !factor.is_finite() || !(0.0..=1.0).contains(&factor) {
            return Err(Error::domain(format!(
                "residual SIC factor must lie in [0, 1], got {factor}"
            )));
        }
        self.residual_sic_factor = factor;
        Ok(self)
    }

    /// Number of users sharing the downlink.
    pub fn user_count(&self) -> usize {
        self.user_count
    }

    /// Transmit power in dBm.
    pub fn transmit_power_dbm(&self) -> f64 {
        self.transmit_power_dbm
    }

    /// Noise power in dBm.
    pub fn noise_power_dbm(&self) -> f64 {
        self.noise_power_dbm
    }

    /// Path-loss constant (linear).
    pub fn path_loss_constant(&self) -> f64 {
        self.path_loss_constant
    }

    /// Path-loss exponent.
    pub fn path_loss_exponent(&self) -> f64 {
        self.path_loss_exponent
    }

    /// Residual interference factor left by imperfect SIC.
    pub fn residual_sic_factor(&self) -> f64 {
        self.residual_sic_factor
    }

    /// Transmit power in linear milliwatts.
    pub fn transmit_power_mw(&self) -> f64 {
        dbm_to_milliwatts(self.transmit_power_dbm)
    }

    /// Noise power in linear milliwatts.
    pub fn noise_power_mw(&self) -> f64 {
        dbm_to_milliwatts(self.noise_power_dbm)
    }

    /// Transmit signal-to-noise ratio `rho_t` (linear): transmit power over
    /// noise power.
    pub fn transmit_snr(&self) -> f64 {
        dbm_to_milliwatts(self.transmit_power_dbm - self.noise_power_dbm)
    }

    /// Mean channel gain of a user at the given distance (meters) under the
    /// configured path-loss law.
    pub fn mean_gain(&self, distance_m: f64) -> Result<f64> {
        if !distance_m.is_finite() || distance_m <= 0.0 {
            return Err(Error::domain(format!(
                "distance must be finite and positive, got {distance_m} m"
            )));
        }
        Ok(self.path_loss_constant * distance_m.powf(-self.path_loss_exponent))
    }
}
