//! Stochastic channel generation and Monte Carlo experiment plans.
//!
//! Channels fade independently across trials: each user's power gain is an
//! exponential draw whose mean follows the configured path-loss law at that
//! user's distance. Because the secrecy model labels users by instantaneous
//! channel strength, every draw is sorted strongest-first and users are
//! relabeled accordingly (the originating distances travel along with the
//! sorted gains). Exact ties are resampled so the strict ordering always
//! holds.
//!
//! Randomness is counter-based: trial `t` of a run seeded with `s` always
//! draws from [`trial_rng`]`(s, t)`, an independent stream of a seeded
//! ChaCha generator. A trial's channel is therefore a pure function of
//! `(seed, trial)`, which makes parallel and serial execution agree and
//! reports byte-identical across reruns.

mod experiments;

pub use experiments::{
    run_distance_sweep, run_scheme_comparison, run_secrecy_pdf, run_secrecy_surface,
    run_win_probability, PDF_BINS,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};

use crate::channel::ChannelState;
use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::power::PowerAllocation;

/// Default number of Monte Carlo trials.
pub const DEFAULT_TRIALS: u64 = 10_000;

/// Default RNG seed for simulation runs.
pub const DEFAULT_SEED: u64 = 42;

/// Default user distances in meters (strongest expected user first).
pub fn default_distances_m() -> Vec<f64> {
    vec![100.0, 200.0, 300.0]
}

/// How each trial's power allocation is chosen.
#[derive(Debug, Clone, PartialEq)]
pub enum PaPolicy {
    /// The same allocation for every trial.
    Fixed(PowerAllocation),
    /// Channel-dependent allocation `alpha_n ∝ gain_n^-beta`.
    Symbolic(f64),
    /// Each trial runs the per-order optimizer.
    Optimized,
}

impl PaPolicy {
    /// Short human-readable form for report metadata.
    pub fn describe(&self) -> String {
        match self {
            PaPolicy::Fixed(pa) => {
                let parts: Vec<String> =
                    pa.alphas().iter().map(|a| format!("{a:?}")).collect();
                format!("fixed:{}", parts.join(","))
            }
            PaPolicy::Symbolic(beta) => format!("symbolic:beta={beta:?}"),
            PaPolicy::Optimized => "optimized".to_string(),
        }
    }
}

/// A reproducible Monte Carlo run: how many trials, from which seed, at
/// which user distances, and under which power-allocation policy.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationPlan {
    trials: u64,
    seed: u64,
    distances_m: Vec<f64>,
    pa_policy: PaPolicy,
}

impl SimulationPlan {
    pub fn new(
        trials: u64,
        seed: u64,
        distances_m: Vec<f64>,
        pa_policy: PaPolicy,
    ) -> Result<Self> {
        if trials == 0 {
            return Err(Error::domain("a simulation needs at least 1 trial"));
        }
        if distances_m.is_empty() {
            return Err(Error::domain("a simulation needs at least one distance"));
        }
        for &d in &distances_m {
            if !d.is_finite() || d <= 0.0 {
                return Err(Error::domain(format!(
                    "distances must be finite and positive, got {d} m"
                )));
            }
        }
        match &pa_policy {
            PaPolicy::Fixed(pa) if pa.user_count() != distances_m.len() => {
                return Err(Error::domain(format!(
                    "fixed allocation covers {} users but the plan has {} distances",
                    pa.user_count(),
                    distances_m.len()
                )));
            }
            PaPolicy::Symbolic(beta) if !beta.is_finite() || !(-1.0..=1.0).contains(beta) => {
                return Err(Error::domain(format!(
                    "symbolic exponent must lie in [-1, 1], got {beta}"
                )));
            }
            _ => {}
        }
        Ok(SimulationPlan {
            trials,
            seed,
            distances_m,
            pa_policy,
        })
    }

    pub fn trials(&self) -> u64 {
        self.trials
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn distances_m(&self) -> &[f64] {
        &self.distances_m
    }

    pub fn pa_policy(&self) -> &PaPolicy {
        &self.pa_policy
    }
}

/// The dedicated random stream for one trial of a seeded run.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws one fading realization: independent exponential power gains with
/// means set by the path-loss law, sorted strongest-first with users
/// relabeled. The returned state carries the distance each sorted gain was
/// drawn at.
pub fn sample_channel<R: Rng + ?Sized>(
    distances_m: &[f64],
    config: &SystemConfig,
    rng: &mut R,
) -> Result<ChannelState> {
    if distances_m.is_empty() {
        return Err(Error::domain("need at least one distance to sample"));
    }
    let mut samplers = Vec::with_capacity(distances_m.len());
    for &distance in distances_m {
        let mean = config.mean_gain(distance)?;
        let rate = 1.0 / mean;
        if !rate.is_finite() || rate <= 0.0 {
            return Err(Error::domain(format!(
                "mean gain {mean} at {distance} m leaves no valid exponential rate"
            )));
        }
        let sampler = Exp::new(rate)
            .map_err(|err| Error::domain(format!("invalid exponential rate {rate}: {err}")))?;
        samplers.push((sampler, distance));
    }

    // Exact ties (or a zero draw) would make the user labeling ambiguous;
    // both have probability zero, so resampling terminates immediately in
    // practice.
    for _ in 0..1000 {
        let mut draws: Vec<(f64, f64)> = samplers
            .iter()
            .map(|(sampler, distance)| (sampler.sample(rng), *distance))
            .collect();
        draws.sort_by(|a, b| b.0.total_cmp(&a.0));
        let positive = draws.iter().all(|&(gain, _)| gain > 0.0);
        let strict = draws.windows(2).all(|pair| pair[0].0 > pair[1].0);
        if positive && strict {
            let (gains, distances): (Vec<f64>, Vec<f64>) = draws.into_iter().unzip();
            return ChannelState::new(gains, distances);
        }
    }
    Err(Error::domain(
        "could not draw strictly ordered positive gains after 1000 attempts",
    ))
}

/// Channel-dependent power allocation `alpha_n = gain_n^-beta / sum_k
/// gain_k^-beta` for `beta` in `[-1, 1]`.
///
/// `beta = 0` is the equal split; `beta = 1` weights power toward weak
/// channels; `beta = -1` toward strong ones.
pub fn symbolic_pa(channel: &ChannelState, beta: f64) -> Result<PowerAllocation> {
    if !beta.is_finite() || !(-1.0..=1.0).contains(&beta) {
        return Err(Error::domain(format!(
            "symbolic exponent must lie in [-1, 1], got {beta}"
        )));
    }
    let weights: Vec<f64> = channel.gains().iter().map(|&g| g.powf(-beta)).collect();
    let total: f64 = weights.iter().sum();
    if !total.is_finite() || total <= 0.0 {
        return Err(Error::domain(format!(
            "symbolic weights sum to {total}; gains too extreme for exponent {beta}"
        )));
    }
    PowerAllocation::new(weights.iter().map(|w| w / total).collect())
}
