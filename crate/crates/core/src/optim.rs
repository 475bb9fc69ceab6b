//! Power-allocation optimization over the simplex interior.
//!
//! The sum secrecy rate is a non-convex function of the power fractions, so
//! the per-order optimizer runs two derivative-free phases: an exhaustive
//! grid scan over the free components of the allocation simplex, then a
//! pattern search with a shrinking step started from the best grid point.
//! Both phases respect a strict-interior inset `boundary_margin` so every
//! returned allocation keeps all fractions strictly inside `(0, 1)`.
//!
//! The joint problem scans a list of decoding orders (typically the secure
//! set), optimizes each independently, and keeps the best order, breaking
//! ties by the lowest canonical index. Per-order optimizations run across a
//! worker pool, and the argmax reduction is performed in index order so
//! parallelism never changes the result.

use rayon::prelude::*;

use crate::channel::ChannelState;
use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::order::DecodingOrder;
use crate::power::PowerAllocation;
use crate::secrecy::Evaluator;

/// Default grid resolution over each free power fraction.
pub const DEFAULT_GRID_STEP: f64 = 0.005;
/// Default strict-interior inset for the open constraints.
pub const DEFAULT_BOUNDARY_MARGIN: f64 = 1e-3;
/// Default number of pattern-search polling rounds.
pub const DEFAULT_REFINEMENT_ITERATIONS: usize = 200;
/// Default step size below which the pattern search stops.
pub const DEFAULT_REFINEMENT_TOLERANCE: f64 = 1e-9;

/// Tuning knobs for the two-phase search.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct OptimizerSettings {
    grid_step: f64,
    boundary_margin: f64,
    refinement_iterations: usize,
    refinement_tolerance: f64,
}

impl Default for OptimizerSettings {
    fn default() -> Self {
        OptimizerSettings {
            grid_step: DEFAULT_GRID_STEP,
            boundary_margin: DEFAULT_BOUNDARY_MARGIN,
            refinement_iterations: DEFAULT_REFINEMENT_ITERATIONS,
            refinement_tolerance: DEFAULT_REFINEMENT_TOLERANCE,
        }
    }
}

impl OptimizerSettings {
    /// Validates a full set of knobs: `0 < boundary_margin < grid_step <
    /// 0.5` and a positive refinement tolerance.
    pub fn new(
        grid_step: f64,
        boundary_margin: f64,
        refinement_iterations: usize,
        refinement_tolerance: f64,
    ) -> Result<Self> {
        if !grid_step.is_finite() || grid_step <= 0.0 || grid_step >= 0.5 {
            return Err(Error::domain(format!(
                "grid step must lie in (0, 0.5), got {grid_step}"
            )));
        }
        if !boundary_margin.is_finite() || boundary_margin <= 0.0 || boundary_margin >= grid_step {
            return Err(Error::domain(format!(
                "boundary margin must lie in (0, grid step), got {boundary_margin}"
            )));
        }
        if !refinement_tolerance.is_finite() || refinement_tolerance <= 0.0 {
            return Err(Error::domain(format!(
                "refinement tolerance must be positive, got {refinement_tolerance}"
            )));
        }
        Ok(OptimizerSettings {
            grid_step,
            boundary_margin,
            refinement_iterations,
            refinement_tolerance,
        })
    }

    /// Replaces the grid step, revalidating.
    pub fn with_grid_step(self, grid_step: f64) -> Result<Self> {
        OptimizerSettings::new(
            grid_step,
            self.boundary_margin,
            self.refinement_iterations,
            self.refinement_tolerance,
        )
    }

    /// Replaces the boundary margin, revalidating.
    pub fn with_boundary_margin(self, boundary_margin: f64) -> Result<Self> {
        OptimizerSettings::new(
            self.grid_step,
            boundary_margin,
            self.refinement_iterations,
            self.refinement_tolerance,
        )
    }

    /// Replaces the polling-round budget (0 disables refinement).
    pub fn with_refinement_iterations(mut self, iterations: usize) -> Self {
        self.refinement_iterations = iterations;
        self
    }

    /// Replaces the stopping step size, revalidating.
    pub fn with_refinement_tolerance(self, tolerance: f64) -> Result<Self> {
        OptimizerSettings::new(
            self.grid_step,
            self.boundary_margin,
            self.refinement_iterations,
            tolerance,
        )
    }

    /// Grid resolution over each free power fraction.
    pub fn grid_step(&self) -> f64 {
        self.grid_step
    }

    /// Strict-interior inset applied to every constraint.
    pub fn boundary_margin(&self) -> f64 {
        self.boundary_margin
    }

    /// Maximum number of pattern-search polling rounds.
    pub fn refinement_iterations(&self) -> usize {
        self.refinement_iterations
    }

    /// Step size below which the pattern search stops.
    pub fn refinement_tolerance(&self) -> f64 {
        self.refinement_tolerance
    }
}

/// Outcome of a per-order or joint optimization.
#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    order: DecodingOrder,
    allocation: PowerAllocation,
    sum_secrecy_rate: f64,
}

impl OptimizationResult {
    /// The decoding order the allocation was optimized for (the winning
    /// order, for joint results).
    pub fn order(&self) -> &DecodingOrder {
        &self.order
    }

    /// The optimized power allocation.
    pub fn allocation(&self) -> &PowerAllocation {
        &self.allocation
    }

    /// Sum secrecy rate achieved at the optimized allocation.
    pub fn sum_secrecy_rate(&self) -> f64 {
        self.sum_secrecy_rate
    }
}

/// Whether `free` is a strictly feasible point of the inset simplex: every
/// free fraction in `[margin, 1 - margin]` and enough mass left to give the
/// last user at least `margin`.
pub(crate) fn feasible(free: &[f64], margin: f64) -> bool {
    let mut sum = 0.0;
    for &value in free {
        if !value.is_finite() || value < margin || value > 1.0 - margin {
            return false;
        }
        sum += value;
    }
    sum <= 1.0 - margin
}

/// Visits every grid point of the inset simplex in lexicographic order.
/// Each point is the vector of `free_dims` free fractions; multiples of
/// `grid_step` starting at one step.
pub(crate) fn for_each_grid_point(
    free_dims: usize,
    settings: &OptimizerSettings,
    visit: &mut dyn FnMut(&[f64]),
) {
    fn recurse(
        point: &mut Vec<f64>,
        dim: usize,
        used: f64,
        free_dims: usize,
        step: f64,
        margin: f64,
        visit: &mut dyn FnMut(&[f64]),
    ) {
        let remaining = (free_dims - dim - 1) as f64 * step;
        let mut j = 1u64;
        loop {
            let value = j as f64 * step;
            if value > 1.0 - margin || used + value + remaining > 1.0 - margin {
                break;
            }
            point[dim] = value;
            if dim + 1 == free_dims {
                visit(point);
            } else {
                recurse(point, dim + 1, used + value, free_dims, step, margin, visit);
            }
            j += 1;
        }
    }

    if free_dims == 0 {
        return;
    }
    let mut point = vec![0.0; free_dims];
    recurse(
        &mut point,
        0,
        0.0,
        free_dims,
        settings.grid_step,
        settings.boundary_margin,
        visit,
    );
}

pub(crate) fn fill_alphas(scratch: &mut [f64], free: &[f64]) {
    let mut sum = 0.0;
    for (slot, &value) in scratch.iter_mut().zip(free) {
        *slot = value;
        sum += value;
    }
    scratch[free.len()] = 1.0 - sum;
}

struct SearchOutcome {
    free: Vec<f64>,
    value: f64,
    trace: Vec<f64>,
}

fn two_phase_search(
    evaluator: &Evaluator<'_>,
    user_count: usize,
    settings: &OptimizerSettings,
    candidates: &[PowerAllocation],
) -> Result<SearchOutcome> {
    let free_dims = user_count - 1;
    let margin = settings.boundary_margin;
    let mut scratch = vec![0.0; user_count];
    let mut best_value = f64::NEG_INFINITY;
    let mut best_free: Option<Vec<f64>> = None;

    // Phase 1a: exhaustive grid scan. Strict improvement keeps the first
    // (lexicographically smallest) argmax, so the scan is deterministic.
    for_each_grid_point(free_dims, settings, &mut |free| {
        fill_alphas(&mut scratch, free);
        let value = evaluator.sum_secrecy_rate(&scratch);
        if value > best_value {
            best_value = value;
            best_free = Some(free.to_vec());
        }
    });

    // Phase 1b: explicitly seeded candidates (e.g. a baseline allocation a
    // caller wants the result to dominate). Candidates outside the inset
    // simplex are skipped.
    for candidate in candidates {
        if candidate.user_count() != user_count {
            return Err(Error::domain(format!(
                "candidate allocation has {} users but the system is configured for {user_count}",
                candidate.user_count()
            )));
        }
        let free = candidate.free_components();
        if !feasible(free, margin) {
            continue;
        }
        fill_alphas(&mut scratch, free);
        let value = evaluator.sum_secrecy_rate(&scratch);
        if value > best_value {
            best_value = value;
            best_free = Some(free.to_vec());
        }
    }

    let mut current = best_free.ok_or_else(|| {
        Error::domain(format!(
            "no feasible allocation: grid step {} with margin {margin} leaves no \
             interior point for {user_count} users",
            settings.grid_step
        ))
    })?;

    // Phase 2: coordinate pattern search with a shrinking step. Only strict
    // improvements are accepted, so the trace is non-decreasing.
    let mut trace = Vec::with_capacity(settings.refinement_iterations + 1);
    trace.push(best_value);
    let mut delta = settings.grid_step / 2.0;
    let mut probe = current.clone();
    for _ in 0..settings.refinement_iterations {
        let mut improved = false;
        for dim in 0..free_dims {
            for sign in [1.0, -1.0] {
                probe.copy_from_slice(&current);
                probe[dim] = current[dim] + sign * delta;
                if !feasible(&probe, margin) {
                    continue;
                }
                fill_alphas(&mut scratch, &probe);
                let value = evaluator.sum_secrecy_rate(&scratch);
                if value > best_value {
                    best_value = value;
                    current.copy_from_slice(&probe);
                    improved = true;
                }
            }
        }
        trace.push(best_value);
        if !improved {
            delta *= 0.5;
            if delta < settings.refinement_tolerance {
                break;
            }
        }
    }

    Ok(SearchOutcome {
        free: current,
        value: best_value,
        trace,
    })
}

fn optimize_inner(
    order: &DecodingOrder,
    channel: &ChannelState,
    config: &SystemConfig,
    settings: &OptimizerSettings,
    candidates: &[PowerAllocation],
) -> Result<(OptimizationResult, Vec<f64>)> {
    let evaluator = Evaluator::new(order, channel, config)?;
    let outcome = two_phase_search(&evaluator, config.user_count(), settings, candidates)?;
    let allocation = PowerAllocation::from_free_components(&outcome.free)?;
    Ok((
        OptimizationResult {
            order: order.clone(),
            allocation,
            sum_secrecy_rate: outcome.value,
        },
        outcome.trace,
    ))
}

/// Maximizes the sum secrecy rate of one decoding order over the power
/// allocation.
///
/// Insecure orders are accepted: their optimum simply reflects whichever
/// users retain positive secrecy.
pub fn optimize_pa(
    order: &DecodingOrder,
    channel: &ChannelState,
    config: &SystemConfig,
    settings: &OptimizerSettings,
) -> Result<OptimizationResult> {
    optimize_inner(order, channel, config, settings, &[]).map(|(result, _)| result)
}

/// Like [`optimize_pa`], but guarantees the result is at least as good as
/// every feasible candidate allocation by seeding the search with them.
pub fn optimize_pa_with_candidates(
    order: &DecodingOrder,
    channel: &ChannelState,
    config: &SystemConfig,
    settings: &OptimizerSettings,
    candidates: &[PowerAllocation],
) -> Result<OptimizationResult> {
    optimize_inner(order, channel, config, settings, candidates).map(|(result, _)| result)
}

/// Like [`optimize_pa`], additionally returning the best objective value at
/// the end of each refinement round (entry 0 is the grid-phase value). The
/// trace is non-decreasing.
pub fn optimize_pa_with_trace(
    order: &DecodingOrder,
    channel: &ChannelState,
    config: &SystemConfig,
    settings: &OptimizerSettings,
) -> Result<(OptimizationResult, Vec<f64>)> {
    optimize_inner(order, channel, config, settings, &[])
}

fn prefer(current: OptimizationResult, challenger: OptimizationResult) -> OptimizationResult {
    if challenger.sum_secrecy_rate > current.sum_secrecy_rate
        || (challenger.sum_secrecy_rate == current.sum_secrecy_rate
            && challenger.order.index() < current.order.index())
    {
        challenger
    } else {
        current
    }
}

/// Optimizes every order in `orders` and returns the best result, breaking
/// value ties by the lowest canonical index.
///
/// Per-order optimizations run in parallel; the reduction happens in list
/// order, so the outcome is independent of the worker schedule.
pub fn joint_optimize(
    channel: &ChannelState,
    config: &SystemConfig,
    settings: &OptimizerSettings,
    orders: &[DecodingOrder],
) -> Result<OptimizationResult> {
    joint_optimize_with_candidates(channel, config, settings, orders, &[])
}

/// Like [`joint_optimize`], seeding every per-order search with the given
/// candidate allocations.
pub fn joint_optimize_with_candidates(
    channel: &ChannelState,
    config: &SystemConfig,
    settings: &OptimizerSettings,
    orders: &[DecodingOrder],
    candidates: &[PowerAllocation],
) -> Result<OptimizationResult> {
    if orders.is_empty() {
        return Err(Error::domain("joint optimization needs at least one order"));
    }
    let results = orders
        .par_iter()
        .map(|order| optimize_pa_with_candidates(order, channel, config, settings, candidates))
        .collect::<Result<Vec<_>>>()?;
    Ok(results.into_iter().reduce(prefer).expect("nonempty results"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::suboptimal_order;
    use crate::secrecy::secrecy_report;

    fn config_with_snr(snr_db: f64) -> SystemConfig {
        SystemConfig::new(3, snr_db - 90.0).unwrap()
    }

    fn reference_channel() -> ChannelState {
        ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap()
    }

    #[test]
    fn settings_validation() {
        let settings = OptimizerSettings::default();
        assert_eq!(settings.grid_step(), 0.005);
        assert_eq!(settings.boundary_margin(), 1e-3);
        assert_eq!(settings.refinement_iterations(), 200);
        assert_eq!(settings.refinement_tolerance(), 1e-9);
        assert!(OptimizerSettings::new(0.0, 1e-3, 10, 1e-9).is_err());
        assert!(OptimizerSettings::new(0.5, 1e-3, 10, 1e-9).is_err());
        assert!(OptimizerSettings::new(0.01, 0.01, 10, 1e-9).is_err());
        assert!(OptimizerSettings::new(0.01, 0.0, 10, 1e-9).is_err());
        assert!(OptimizerSettings::new(0.01, 1e-3, 10, 0.0).is_err());
        assert!(settings.with_grid_step(0.02).is_ok());
        assert!(settings.with_boundary_margin(0.004).is_ok());
        assert!(settings.with_boundary_margin(0.005).is_err());
    }

    #[test]
    fn grid_scan_matches_frozen_oracle_values() {
        // Pure grid phase (no refinement) at the default step, frozen
        // against an independent brute-force scan of the same surface.
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let settings = OptimizerSettings::default().with_refinement_iterations(0);

        let ten = optimize_pa(&suboptimal_order(3).unwrap(), &channel, &config, &settings).unwrap();
        let expected = 5.319303453455931;
        assert!((ten.sum_secrecy_rate() - expected).abs() / expected < 1e-12);
        let free = ten.allocation().free_components();
        assert!((free[0] - 0.31).abs() < 1e-12);
        assert!((free[1] - 0.31).abs() < 1e-12);

        let order100 = DecodingOrder::from_index(3, 100).unwrap();
        let hundred = optimize_pa(&order100, &channel, &config, &settings).unwrap();
        let expected100 = 5.319447211477798;
        assert!((hundred.sum_secrecy_rate() - expected100).abs() / expected100 < 1e-12);
        let free100 = hundred.allocation().free_components();
        assert!((free100[0] - 0.38).abs() < 1e-12);
        assert!((free100[1] - 0.31).abs() < 1e-12);
    }

    #[test]
    fn refinement_only_improves_and_is_monotone() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let order = suboptimal_order(3).unwrap();
        let settings = OptimizerSettings::default();

        let grid_only = optimize_pa(
            &order,
            &channel,
            &config,
            &settings.with_refinement_iterations(0),
        )
        .unwrap();
        let (refined, trace) =
            optimize_pa_with_trace(&order, &channel, &config, &settings).unwrap();
        assert!(refined.sum_secrecy_rate() >= grid_only.sum_secrecy_rate());
        assert_eq!(trace[0], grid_only.sum_secrecy_rate());
        assert_eq!(*trace.last().unwrap(), refined.sum_secrecy_rate());
        assert!(trace.windows(2).all(|pair| pair[1] >= pair[0]));
    }

    #[test]
    fn result_dominates_equal_allocation_grid_point() {
        // (0.335, 0.335) is the on-grid neighbor of the equal split at the
        // default step, so the optimum can never fall below its value.
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let order = suboptimal_order(3).unwrap();
        let result = optimize_pa(&order, &channel, &config, &OptimizerSettings::default()).unwrap();
        let near_equal = PowerAllocation::from_free_components(&[0.335, 0.335]).unwrap();
        let reference = secrecy_report(&order, &channel, &near_equal, &config)
            .unwrap()
            .sum_secrecy_rate();
        assert!(result.sum_secrecy_rate() >= reference);
    }

    #[test]
    fn insecure_order_optimum_serves_only_the_strongest_user() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let order = DecodingOrder::from_index(3, 216).unwrap();
        let settings = OptimizerSettings::default().with_grid_step(0.01).unwrap();
        let result = optimize_pa(&order, &channel, &config, &settings).unwrap();
        let report =
            secrecy_report(&order, &channel, result.allocation(), &config).unwrap();
        assert!(report.secrecy_rates()[0] > 0.0);
        assert_eq!(report.secrecy_rates()[1], 0.0);
        assert_eq!(report.secrecy_rates()[2], 0.0);
        assert!(
            (result.sum_secrecy_rate() - report.secrecy_rates()[0]).abs() < 1e-12
        );
    }

    #[test]
    fn feasibility_of_returned_allocations() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let settings = OptimizerSettings::default().with_grid_step(0.02).unwrap();
        for index in [10u64, 100, 216, 1, 57] {
            let order = DecodingOrder::from_index(3, index).unwrap();
            let result = optimize_pa(&order, &channel, &config, &settings).unwrap();
            let margin = settings.boundary_margin();
            let alphas = result.allocation().alphas();
            assert!(alphas.iter().all(|&a| a >= margin && a <= 1.0 - margin));
            assert!(result.sum_secrecy_rate() >= 0.0);
        }
    }

    #[test]
    fn candidates_are_never_beaten() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let order = suboptimal_order(3).unwrap();
        // Coarse grid that cannot land near the candidate on its own.
        let settings = OptimizerSettings::new(0.2, 1e-3, 0, 1e-9).unwrap();
        let candidate = PowerAllocation::new(vec![0.1667, 0.3333, 0.5]).unwrap();
        let baseline = secrecy_report(&order, &channel, &candidate, &config)
            .unwrap()
            .sum_secrecy_rate();
        let result = optimize_pa_with_candidates(
            &order,
            &channel,
            &config,
            &settings,
            std::slice::from_ref(&candidate),
        )
        .unwrap();
        assert!(result.sum_secrecy_rate() >= baseline);
        let mismatched = PowerAllocation::new(vec![0.5, 0.5 - 1e-12]).unwrap();
        assert!(optimize_pa_with_candidates(
            &order,
            &channel,
            &config,
            &settings,
            std::slice::from_ref(&mismatched),
        )
        .is_err());
    }

    #[test]
    fn empty_interior_is_reported_and_candidates_rescue_it() {
        // Five users at a coarse step: four free fractions of at least 0.3
        // overshoot the simplex, so the grid is empty.
        let config = SystemConfig::new(5, -50.0).unwrap();
        let channel = ChannelState::from_gains(vec![5.0, 4.0, 3.0, 2.0, 1.0]).unwrap();
        let order = suboptimal_order(5).unwrap();
        let settings = OptimizerSettings::new(0.3, 1e-3, 5, 1e-9).unwrap();
        assert!(matches!(
            optimize_pa(&order, &channel, &config, &settings),
            Err(Error::Domain(_))
        ));
        let rescue = PowerAllocation::equal(5).unwrap();
        let result = optimize_pa_with_candidates(
            &order,
            &channel,
            &config,
            &settings,
            std::slice::from_ref(&rescue),
        )
        .unwrap();
        assert!(result.sum_secrecy_rate() >= 0.0);
    }

    #[test]
    fn joint_on_a_singleton_equals_the_single_optimization() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let order = suboptimal_order(3).unwrap();
        let settings = OptimizerSettings::default().with_grid_step(0.02).unwrap();
        let single = optimize_pa(&order, &channel, &config, &settings).unwrap();
        let joint =
            joint_optimize(&channel, &config, &settings, std::slice::from_ref(&order)).unwrap();
        assert_eq!(joint, single);
        assert!(joint_optimize(&channel, &config, &settings, &[]).is_err());
    }

    #[test]
    fn joint_equals_the_max_of_independent_runs() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let settings = OptimizerSettings::default().with_grid_step(0.02).unwrap();
        let orders: Vec<DecodingOrder> = [10u64, 12, 100, 200]
            .iter()
            .map(|&index| DecodingOrder::from_index(3, index).unwrap())
            .collect();
        let joint = joint_optimize(&channel, &config, &settings, &orders).unwrap();
        let mut best_value = f64::NEG_INFINITY;
        for order in &orders {
            let result = optimize_pa(order, &channel, &config, &settings).unwrap();
            assert!(joint.sum_secrecy_rate() >= result.sum_secrecy_rate());
            best_value = best_value.max(result.sum_secrecy_rate());
        }
        assert_eq!(joint.sum_secrecy_rate(), best_value);
    }

    #[test]
    fn ties_break_toward_the_lowest_index() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let settings = OptimizerSettings::default().with_grid_step(0.02).unwrap();
        let low = optimize_pa(
            &DecodingOrder::from_index(3, 10).unwrap(),
            &channel,
            &config,
            &settings,
        )
        .unwrap();
        let mut high = optimize_pa(
            &DecodingOrder::from_index(3, 100).unwrap(),
            &channel,
            &config,
            &settings,
        )
        .unwrap();
        // Force an exact tie to exercise the index rule in both directions.
        high.sum_secrecy_rate = low.sum_secrecy_rate;
        assert_eq!(prefer(low.clone(), high.clone()).order().index(), 10);
        assert_eq!(prefer(high, low).order().index(), 10);
    }

    #[test]
    fn optimization_is_deterministic() {
        let config = config_with_snr(40.0);
        let channel = reference_channel();
        let settings = OptimizerSettings::default().with_grid_step(0.02).unwrap();
        let orders: Vec<DecodingOrder> = [10u64, 100, 216]
            .iter()
            .map(|&index| DecodingOrder::from_index(3, index).unwrap())
            .collect();
        let first = joint_optimize(&channel, &config, &settings, &orders).unwrap();
        let second = joint_optimize(&channel, &config, &settings, &orders).unwrap();
        assert_eq!(
            first.sum_secrecy_rate().to_bits(),
            second.sum_secrecy_rate().to_bits()
        );
        assert_eq!(first.allocation(), second.allocation());
        assert_eq!(first.order().index(), second.order().index());
    }

    #[test]
    fn grid_visits_are_lexicographic_and_feasible() {
        let settings = OptimizerSettings::new(0.25, 0.01, 0, 1e-9).unwrap();
        let mut points = Vec::new();
        for_each_grid_point(2, &settings, &mut |free| points.push(free.to_vec()));
        assert_eq!(
            points,
            vec![
                vec![0.25, 0.25],
                vec![0.25, 0.5],
                vec![0.5, 0.25],
                // (0.5, 0.5) would leave nothing for the third user.
            ]
        );
        for point in &points {
            assert!(feasible(point, 0.01));
        }
        assert!(!feasible(&[0.25, 0.75], 0.01));
        assert!(!feasible(&[0.005, 0.5], 0.01));
    }
}
