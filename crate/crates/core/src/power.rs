//! Power-allocation vectors over the superposed downlink signal.
//!
//! A [`PowerAllocation`] assigns each user a strictly positive fraction of
//! the transmit power; the fractions sum to one (within a small tolerance).
//! Because the total is fixed, only the first `K - 1` fractions are free —
//! optimizers work in that reduced space and recover the last entry from the
//! sum constraint.

use serde::Serialize;

use crate::error::{Error, Result};

/// How far the fractions may drift from summing to exactly 1.
pub const ALLOCATION_SUM_TOLERANCE: f64 = 1e-9;

/// Fractions of transmit power assigned to each user, indexed like the
/// channel gains (0 = strongest user).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PowerAllocation {
    alphas: Vec<f64>,
}

impl PowerAllocation {
    /// Validates and wraps a full allocation vector.
    ///
    /// Every fraction must lie strictly inside `(0, 1)` and the sum must be
    /// within [`ALLOCATION_SUM_TOLERANCE`] of 1.
    pub fn new(alphas: Vec<f64>) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::domain(format!(
                "power allocation needs at least 2 users, got {}",
                alphas.len()
            )));
        }
        for (index, &a) in alphas.iter().enumerate() {
            if !a.is_finite() || a <= 0.0 || a >= 1.0 {
                return Err(Error::domain(format!(
                    "power fraction for user {} must lie strictly in (0, 1), got {a}",
                    index + 1
                )));
            }
        }
        let sum: f64 = alphas.iter().sum();
        if (sum - 1.0).abs() > ALLOCATION_SUM_TOLERANCE {
            return Err(Error::domain(format!(
                "power fractions must sum to 1 within {ALLOCATION_SUM_TOLERANCE:e}, got {sum}"
            )));
        }
        Ok(PowerAllocation { alphas })
    }

    /// Equal split across `user_count` users.
    pub fn equal(user_count: usize) -> Result<Self> {
        if user_count < 2 {
            return Err(Error::domain(format!(
                "power allocation needs at least 2 users, got {user_count}"
            )));
        }
        PowerAllocation::new(vec![1.0 / user_count as f64; user_count])
    }

    /// Builds a full allocation from its free components: the last fraction
    /// is `1 - sum(free)`. All resulting fractions must pass the same
    /// validation as [`PowerAllocation::new`].
    pub fn from_free_components(free: &[f64]) -> Result<Self> {
        let mut alphas = free.to_vec();
        let sum: f64 = free.iter().sum();
        alphas.push(1.0 - sum);
        PowerAllocation::new(alphas)
    }

    /// Number of users.
    pub fn user_count(&self) -> usize {
        self.alphas.len()
    }

    /// All fractions, indexed like the channel gains.
    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    /// Fraction for one user (0-based index).
    pub fn alpha(&self, user: usize) -> Result<f64> {
        self.alphas.get(user).copied().ok_or_else(|| {
            Error::domain(format!(
                "user index {user} out of range for {} users",
                self.alphas.len()
            ))
        })
    }

    /// The first `K - 1` fractions — the free coordinates once the unit sum
    /// is imposed.
    pub fn free_components(&self) -> &[f64] {
        &self.alphas[..self.alphas.len() - 1]
    }
}
