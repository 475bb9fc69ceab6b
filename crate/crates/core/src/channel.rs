//! Channel-state snapshots: one gain per user, strongest first.
//!
//! Users are indexed by descending channel gain, so index 0 always refers to
//! the strongest user. Every secrecy-rate expression in this crate relies on
//! that labeling, which is why [`ChannelState`] enforces strictly descending
//! gains at construction.

use serde::Serialize;

use crate::error::{Error, Result};

/// Per-user channel gains, sorted strongest first, with optional distances.
///
/// Gains are unitless linear power gains (|h|^2 already normalized by the
/// path-loss reference). Distances are carried along when the state was
/// produced from a deployment geometry so that reports can echo them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelState {
    gains: Vec<f64>,
    distances_m: Option<Vec<f64>>,
}

impl ChannelState {
    /// Creates a channel state from gains and the distances they were drawn
    /// at. Gain validation matches [`ChannelState::from_gains`]; distances
    /// must be finite, positive, and as numerous as the gains.
    pub fn new(gains: Vec<f64>, distances_m: Vec<f64>) -> Result<Self> {
        if distances_m.len() != gains.len() {
            return Err(Error::domain(format!(
                "expected {} distances to match the gains, got {}",
                gains.len(),
                distances_m.len()
            )));
        }
        for (index, &d) in distances_m.iter().enumerate() {
            if !d.is_finite() || d <= 0.0 {
                return Err(Error::domain(format!(
                    "distance for user {} must be finite and positive, got {d} m",
                    index + 1
                )));
            }
        }
        let mut state = ChannelState::from_gains(gains)?;
        state.distances_m = Some(distances_m);
        Ok(state)
    }

    /// Creates a channel state from gains alone.
    ///
    /// Requires at least one gain, every gain finite and strictly positive,
    /// and the sequence strictly descending (ties are rejected because the
    /// user labeling would be ambiguous).
    pub fn from_gains(gains: Vec<f64>) -> Result<Self> {
        if gains.is_empty() {
            return Err(Error::domain("channel state needs at least one gain"));
        }
        for (index, &g) in gains.iter().enumerate() {
            if !g.is_finite() || g <= 0.0 {
                return Err(Error::domain(format!(
                    "gain for user {} must be finite and positive, got {g}",
                    index + 1
                )));
            }
        }
        for pair in gains.windows(2) {
            if pair[0] <= pair[1] {
                return Err(Error::domain(format!(
                    "gains must be strictly descending, got {} followed by {}",
                    pair[0], pair[1]
                )));
            }
        }
        Ok(ChannelState {
            gains,
            distances_m: None,
        })
    }

    /// Test-only constructor that skips the descending-gains check, used to
    /// probe degenerate geometries such as exactly equal gains.
    #[cfg(test)]
    pub(crate) fn unchecked(gains: Vec<f64>) -> Self {
        ChannelState {
            gains,
            distances_m: None,
        }
    }

    /// Number of users.
    pub fn user_count(&self) -> usize {
        self.gains.len()
    }

    /// All gains, strongest first.
    pub fn gains(&self) -> &[f64] {
        &self.gains
    }

    /// Gain of one user (0-based index, 0 = strongest).
    pub fn gain(&self, user: usize) -> Result<f64> {
        self.gains.get(user).copied().ok_or_else(|| {
            Error::domain(format!(
                "user index {user} out of range for {} users",
                self.gains.len()
            ))
        })
    }

    /// Distances the gains were drawn at, if the state carries them.
    pub fn distances_m(&self) -> Option<&[f64]> {
        self.distances_m.as_deref()
    }
}
