//! The secrecy-rate kernel: SINR, achievable rates, and per-user secrecy.
//!
//! Every user is both a receiver and a potential eavesdropper on everyone
//! else. When user `m` decodes user `n`'s signal, the signals already
//! cancelled by `m`'s SIC stage leak back a residual fraction `zeta` of
//! their power, while the signals not yet decoded interfere at full power:
//!
//! ```text
//! gamma[n,m] = alpha_n * g_m / ((zeta * sum_before + sum_after) * g_m + 1 / rho_t)
//! ```
//!
//! where the sums run over the power fractions of the users decoded before
//! and after `n` in `m`'s column, and `rho_t` is the transmit SNR. The
//! secrecy rate of user `n` pits its own decoding rate against the best
//! eavesdropper: `R_s[n] = max(0, R[n,n] - max_{m != n} R[n,m])`.
//!
//! All operations here are pure functions over immutable values, so they can
//! be called freely from concurrent workers.

use serde::Serialize;

use crate::channel::ChannelState;
use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::order::DecodingOrder;
use crate::power::PowerAllocation;

/// Per-user rate breakdown for one (order, channel, allocation) triple.
///
/// All vectors are indexed by user (0 = strongest channel), in bits/s/Hz.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecrecyReport {
    self_rates: Vec<f64>,
    eavesdropper_rates: Vec<f64>,
    secrecy_rates: Vec<f64>,
    sum_secrecy_rate: f64,
}

impl SecrecyReport {
    /// Rate at which each user decodes its own signal (`R[n,n]`).
    pub fn self_rates(&self) -> &[f64] {
        &self.self_rates
    }

    /// Best rate any other user achieves on each user's signal
    /// (`max_{m != n} R[n,m]`).
    pub fn eavesdropper_rates(&self) -> &[f64] {
        &self.eavesdropper_rates
    }

    /// Per-user secrecy rates after clamping at zero.
    pub fn secrecy_rates(&self) -> &[f64] {
        &self.secrecy_rates
    }

    /// Sum of the per-user secrecy rates.
    pub fn sum_secrecy_rate(&self) -> f64 {
        self.sum_secrecy_rate
    }
}

fn check_consistency(
    order: &DecodingOrder,
    channel: &ChannelState,
    config: &SystemConfig,
) -> Result<()> {
    if channel.user_count() != config.user_count() {
        return Err(Error::domain(format!(
            "channel has {} users but the system is configured for {}",
            channel.user_count(),
            config.user_count()
        )));
    }
    if order.user_count() != config.user_count() {
        return Err(Error::domain(format!(
            "decoding order has {} users but the system is configured for {}",
            order.user_count(),
            config.user_count()
        )));
    }
    Ok(())
}

fn check_allocation(pa: &PowerAllocation, config: &SystemConfig) -> Result<()> {
    if pa.user_count() != config.user_count() {
        return Err(Error::domain(format!(
            "power allocation has {} users but the system is configured for {}",
            pa.user_count(),
            config.user_count()
        )));
    }
    Ok(())
}

/// SINR seen when `observer` decodes `target`'s signal under the given
/// order, channel, and power allocation. Indices are 0-based.
pub fn sinr(
    order: &DecodingOrder,
    channel: &ChannelState,
    pa: &PowerAllocation,
    config: &SystemConfig,
    target: usize,
    observer: usize,
) -> Result<f64> {
    check_consistency(order, channel, config)?;
    check_allocation(pa, config)?;
    let (before, after) = order.predecessor_sets(observer, target)?;
    let alphas = pa.alphas();
    let residual: f64 = before.iter().map(|&user| alphas[user]).sum();
    let untouched: f64 = after.iter().map(|&user| alphas[user]).sum();
    let interference = config.residual_sic_factor() * residual + untouched;
    let gain = channel.gain(observer)?;
    Ok(alphas[target] * gain / (interference * gain + 1.0 / config.transmit_snr()))
}

/// Achievable rate for a given SINR, in bits/s/Hz.
pub fn rate(gamma: f64) -> Result<f64> {
    if gamma.is_nan() || gamma < 0.0 {
        return Err(Error::domain(format!(
            "SINR must be nonnegative, got {gamma}"
        )));
    }
    Ok((1.0 + gamma).log2())
}

/// Full per-user secrecy breakdown for one (order, channel, allocation)
/// triple.
pub fn secrecy_report(
    order: &DecodingOrder,
    channel: &ChannelState,
    pa: &PowerAllocation,
    config: &SystemConfig,
) -> Result<SecrecyReport> {
    check_allocation(pa, config)?;
    let evaluator = Evaluator::new(order, channel, config)?;
    Ok(evaluator.report(pa.alphas()))
}

/// Precomputed evaluation state for one (order, channel, config) triple.
///
/// Optimizers and Monte Carlo loops evaluate the same order against many
/// allocations; this caches the before/after sets (as bitmasks) and the
/// linear noise term so each evaluation is a handful of multiply-adds.
pub(crate) struct Evaluator<'a> {
    user_count: usize,
    gains: &'a [f64],
    inverse_snr: f64,
    residual_sic_factor: f64,
    /// Masks indexed by `target * user_count + observer`.
    pairs: Vec<(u32, u32)>,
}

#[inline]
fn masked_sum(mask: u32, alphas: &[f64]) -> f64 {
    let mut sum = 0.0;
    let mut rest = mask;
    while rest != 0 {
        sum += alphas[rest.trailing_zeros() as usize];
        rest &= rest - 1;
    }
    sum
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(
        order: &DecodingOrder,
        channel: &'a ChannelState,
        config: &SystemConfig,
    ) -> Result<Self> {
        check_consistency(order, channel, config)?;
        let user_count = config.user_count();
        let mut pairs = vec![(0u32, 0u32); user_count * user_count];
        let full = (1u32 << user_count) - 1;
        for observer in 0..user_count {
            let mut seen = 0u32;
            for &target in order.column(observer)?.entries() {
                let bit = 1u32 << target;
                pairs[target * user_count + observer] = (seen, full & !(seen | bit));
                seen |= bit;
            }
        }
        Ok(Evaluator {
            user_count,
            gains: channel.gains(),
            inverse_snr: 1.0 / config.transmit_snr(),
            residual_sic_factor: config.residual_sic_factor(),
            pairs,
        })
    }

    /// SINR of (`target`, `observer`) under raw power fractions. The slice
    /// length must match the user count; the unit-sum constraint is not
    /// enforced here, which lets formula-level properties be probed
    /// coordinate by coordinate.
    #[inline]
    pub(crate) fn sinr_at(&self, target: usize, observer: usize, alphas: &[f64]) -> f64 {
        debug_assert_eq!(alphas.len(), self.user_count);
        let (before, after) = self.pairs[target * self.user_count + observer];
        let interference =
            self.residual_sic_factor * masked_sum(before, alphas) + masked_sum(after, alphas);
        let gain = self.gains[observer];
        alphas[target] * gain / (interference * gain + self.inverse_snr)
    }

    #[inline]
    fn rate_at(&self, target: usize, observer: usize, alphas: &[f64]) -> f64 {
        (1.0 + self.sinr_at(target, observer, alphas)).log2()
    }

    /// Sum secrecy rate under the given power fractions.
    pub(crate) fn sum_secrecy_rate(&self, alphas: &[f64]) -> f64 {
        let mut total = 0.0;
        for target in 0..self.user_count {
            let own = self.rate_at(target, target, alphas);
            let mut eavesdropper = f64::NEG_INFINITY;
            for observer in 0..self.user_count {
                if observer != target {
                    eavesdropper = eavesdropper.max(self.rate_at(target, observer, alphas));
                }
            }
            let secrecy = own - eavesdropper;
            if secrecy > 0.0 {
                total += secrecy;
            }
        }
        total
    }

    /// Full per-user breakdown under the given power fractions.
    pub(crate) fn report(&self, alphas: &[f64]) -> SecrecyReport {
        let mut self_rates = Vec::with_capacity(self.user_count);
        let mut eavesdropper_rates = Vec::with_capacity(self.user_count);
        let mut secrecy_rates = Vec::with_capacity(self.user_count);
        for target in 0..self.user_count {
            let own = self.rate_at(target, target, alphas);
            let mut eavesdropper = f64::NEG_INFINITY;
            for observer in 0..self.user_count {
                if observer != target {
                    eavesdropper = eavesdropper.max(self.rate_at(target, observer, alphas));
                }
            }
            self_rates.push(own);
            eavesdropper_rates.push(eavesdropper);
            secrecy_rates.push((own - eavesdropper).max(0.0));
        }
        let sum_secrecy_rate = secrecy_rates.iter().sum();
        SecrecyReport {
            self_rates,
            eavesdropper_rates,
            secrecy_rates,
            sum_secrecy_rate,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{suboptimal_order, DecodingOrder};

    fn config_with_snr(snr_db: f64) -> SystemConfig {
        // Noise sits at the default -90 dBm, so the transmit power in dBm is
        // the desired SNR in dB minus 90.
        SystemConfig::new(3, snr_db - 90.0).unwrap()
    }

    fn conventional_order() -> DecodingOrder {
        DecodingOrder::from_index(3, 216).unwrap()
    }

    #[test]
    fn sinr_hand_example_conventional_last_user() {
        // Weakest user decoding itself first: nothing cancelled yet, both
        // stronger signals interfere at full power.
        let config = config_with_snr(20.0); // rho_t = 100
        let channel = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let pa = PowerAllocation::new(vec![0.2, 0.3, 0.5]).unwrap();
        let gamma = sinr(&conventional_order(), &channel, &pa, &config, 2, 2).unwrap();
        let expected = 0.5 / ((0.2 + 0.3) * 1.0 + 0.01);
        assert!((gamma - expected).abs() / expected < 1e-12);
    }

    #[test]
    fn sinr_with_perfect_sic_and_own_signal_last() {
        // Decoding your own signal last with zeta = 0 leaves only noise.
        let config = config_with_snr(40.0)
            .with_residual_sic_factor(0.0)
            .unwrap();
        let channel = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let pa = PowerAllocation::new(vec![0.2, 0.3, 0.5]).unwrap();
        let order = suboptimal_order(3).unwrap();
        let gamma = sinr(&order, &channel, &pa, &config, 0, 0).unwrap();
        let expected = 0.2 * 4.0 * 1.0e4;
        assert!((gamma - expected).abs() / expected < 1e-12);
    }

    #[test]
    fn sinr_with_fully_imperfect_sic_sees_all_other_users() {
        // zeta = 1 makes cancelled and pending signals indistinguishable.
        let config = config_with_snr(30.0).with_residual_sic_factor(1.0).unwrap();
        let channel = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let pa = PowerAllocation::new(vec![0.2, 0.3, 0.5]).unwrap();
        // Conventional order, user 2 decoding itself: before {3}, after {1}.
        let gamma = sinr(&conventional_order(), &channel, &pa, &config, 1, 1).unwrap();
        let gain = 2.0;
        let expected = 0.3 * gain / ((0.2 + 0.5) * gain + 1.0e-3);
        assert!((gamma - expected).abs() / expected < 1e-12);
    }

    #[test]
    fn rate_round_numbers() {
        assert_eq!(rate(0.0).unwrap(), 0.0);
        assert!((rate(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((rate(3.0).unwrap() - 2.0).abs() < 1e-15);
        assert!(rate(-0.5).is_err());
        assert!(rate(f64::NAN).is_err());
    }

    #[test]
    fn report_matches_straight_line_evaluation() {
        // Deliberately plain re-implementation: sets found by scanning the
        // column vectors, every SINR written out longhand.
        let columns: [[usize; 3]; 3] = [[1, 2, 0], [0, 2, 1], [0, 1, 2]];
        let gains: [f64; 3] = [4.0, 2.0, 1.0];
        let alphas: [f64; 3] = [1.0 / 3.0; 3];
        let zeta = 0.1;
        let inverse_snr = 1.0e-4;
        let mut expected_secrecy = [0.0f64; 3];
        for target in 0..3 {
            let mut rates = [0.0f64; 3];
            for observer in 0..3 {
                let column = &columns[observer];
                let stage = column.iter().position(|&u| u == target).unwrap();
                let mut interference = 0.0;
                for (position, &user) in column.iter().enumerate() {
                    if position < stage {
                        interference += zeta * alphas[user];
                    } else if position > stage {
                        interference += alphas[user];
                    }
                }
                let gamma =
                    alphas[target] * gains[observer] / (interference * gains[observer] + inverse_snr);
                rates[observer] = (1.0 + gamma).log2();
            }
            let own = rates[target];
            let eavesdropper = (0..3)
                .filter(|&m| m != target)
                .map(|m| rates[m])
                .fold(f64::NEG_INFINITY, f64::max);
            expected_secrecy[target] = (own - eavesdropper).max(0.0);
        }

        let config = config_with_snr(40.0);
        let channel = ChannelState::from_gains(gains.to_vec()).unwrap();
        let pa = PowerAllocation::new(alphas.to_vec()).unwrap();
        let order = suboptimal_order(3).unwrap();
        let report = secrecy_report(&order, &channel, &pa, &config).unwrap();
        for (user, &want) in expected_secrecy.iter().enumerate() {
            let got = report.secrecy_rates()[user];
            assert!(
                (got - want).abs() / want < 1e-12,
                "user {user}: {got} vs {want}"
            );
        }

        // Frozen values from an independent evaluation of the same inputs.
        let frozen = [1.9995853215181718, 1.651362730532342, 1.6503217424275132];
        for (user, &want) in frozen.iter().enumerate() {
            let got = report.secrecy_rates()[user];
            assert!((got - want).abs() / want < 1e-12, "user {user}");
        }
        let sum = report.sum_secrecy_rate();
        assert!((sum - 5.301269794478027).abs() / 5.301269794478027 < 1e-12);
    }

    #[test]
    fn report_components_are_consistent() {
        let config = config_with_snr(40.0);
        let channel = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let pa = PowerAllocation::new(vec![0.2, 0.3, 0.5]).unwrap();
        let order = DecodingOrder::from_index(3, 100).unwrap();
        let report = secrecy_report(&order, &channel, &pa, &config).unwrap();
        let mut sum = 0.0;
        for user in 0..3 {
            let own = report.self_rates()[user];
            let eavesdropper = report.eavesdropper_rates()[user];
            let secrecy = report.secrecy_rates()[user];
            assert!(secrecy >= 0.0 && secrecy.is_finite());
            assert!((secrecy - (own - eavesdropper).max(0.0)).abs() < 1e-15);
            sum += secrecy;
        }
        assert!((report.sum_secrecy_rate() - sum).abs() < 1e-12);
    }

    #[test]
    fn conventional_order_leaves_weaker_users_without_secrecy() {
        // Under weakest-first decoding everywhere, every eavesdropper's SINR
        // expression on a weaker user matches the user's own except for the
        // (larger) gain, so the clamp fires exactly.
        let config = config_with_snr(40.0);
        let order = conventional_order();
        let cases = [
            (vec![4.0, 2.0, 1.0], vec![0.2, 0.3, 0.5]),
            (vec![9.0, 3.5, 0.8], vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]),
            (vec![1.5, 1.2, 1.1], vec![0.7, 0.2, 0.1]),
        ];
        for (gains, alphas) in cases {
            let channel = ChannelState::from_gains(gains).unwrap();
            let pa = PowerAllocation::new(alphas).unwrap();
            let report = secrecy_report(&order, &channel, &pa, &config).unwrap();
            assert_eq!(report.secrecy_rates()[1], 0.0);
            assert_eq!(report.secrecy_rates()[2], 0.0);
            assert!(report.secrecy_rates()[0] > 0.0);
        }
    }

    #[test]
    fn identical_gains_with_identical_sets_clamp_to_zero() {
        // Two users with the same gain and the same before-set produce
        // bitwise-identical rate expressions, so the difference is exactly 0.
        let config = config_with_snr(40.0);
        let channel = ChannelState::unchecked(vec![2.0, 2.0, 1.0]);
        let pa = PowerAllocation::new(vec![0.2, 0.3, 0.5]).unwrap();
        let report = secrecy_report(&conventional_order(), &channel, &pa, &config).unwrap();
        assert_eq!(report.self_rates()[1], report.eavesdropper_rates()[1]);
        assert_eq!(report.secrecy_rates()[1], 0.0);
    }

    #[test]
    fn high_snr_limit_drops_the_noise_term() {
        // rho_t = 1e12: the SINR approaches the interference-limited value.
        let config = config_with_snr(120.0);
        let channel = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let pa = PowerAllocation::new(vec![0.2, 0.3, 0.5]).unwrap();
        let gamma = sinr(&conventional_order(), &channel, &pa, &config, 1, 1).unwrap();
        let limit = 0.3 / (0.1 * 0.5 + 0.2);
        assert!((gamma - limit).abs() / limit < 1e-6);
    }

    #[test]
    fn sinr_is_monotone_in_each_power_fraction() {
        // Formula-level check on raw fractions: raising the target's share
        // raises its SINR; raising any interferer's share lowers it.
        let config = config_with_snr(30.0);
        let channel = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let order = DecodingOrder::from_index(3, 100).unwrap();
        let evaluator = Evaluator::new(&order, &channel, &config).unwrap();
        let base = [0.25, 0.35, 0.4];
        for target in 0..3 {
            for observer in 0..3 {
                let reference = evaluator.sinr_at(target, observer, &base);
                for moved in 0..3 {
                    let mut bumped = base;
                    bumped[moved] += 0.05;
                    let shifted = evaluator.sinr_at(target, observer, &bumped);
                    if moved == target {
                        assert!(shifted > reference);
                    } else {
                        assert!(shifted < reference);
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let config = config_with_snr(40.0);
        let channel2 = ChannelState::from_gains(vec![4.0, 2.0]).unwrap();
        let channel3 = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let pa2 = PowerAllocation::new(vec![0.4, 0.6]).unwrap();
        let pa3 = PowerAllocation::new(vec![0.2, 0.3, 0.5]).unwrap();
        let order2 = suboptimal_order(2).unwrap();
        let order3 = suboptimal_order(3).unwrap();
        assert!(secrecy_report(&order3, &channel2, &pa3, &config).is_err());
        assert!(secrecy_report(&order2, &channel3, &pa3, &config).is_err());
        assert!(secrecy_report(&order3, &channel3, &pa2, &config).is_err());
        assert!(sinr(&order3, &channel3, &pa3, &config, 3, 0).is_err());
        assert!(sinr(&order3, &channel3, &pa3, &config, 0, 3).is_err());
    }
}
