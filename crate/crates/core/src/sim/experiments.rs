//! The experiment runners behind the `simulate` subcommands.
//!
//! Every runner returns an [`ExperimentReport`] whose tables follow a fixed,
//! documented schema, and every runner is deterministic: given the same plan
//! and configuration it produces an identical report, regardless of how many
//! worker threads execute the trials. Trials are embarrassingly parallel and
//! each one re-derives its random stream from `(seed, trial)`, while all
//! reductions (sums, histogram fills, winner tallies) happen serially in
//! trial order.

use rayon::prelude::*;

use crate::channel::ChannelState;
use crate::config::SystemConfig;
use crate::error::{Error, Result};
use crate::optim::{
    fill_alphas, for_each_grid_point, joint_optimize_with_candidates, optimize_pa,
    optimize_pa_with_candidates, OptimizerSettings,
};
use crate::order::{secure_orders, suboptimal_order, DecodingOrder};
use crate::power::PowerAllocation;
use crate::report::{
    Axis, Cell, ExperimentReport, Metadata, OptimizerSnapshot, SystemSnapshot, Table,
};
use crate::secrecy::Evaluator;

use super::{sample_channel, symbolic_pa, trial_rng, PaPolicy, SimulationPlan};

/// Number of histogram bins in the secrecy-rate distribution experiment.
pub const PDF_BINS: usize = 50;

fn check_plan_users(plan: &SimulationPlan, config: &SystemConfig) -> Result<()> {
    if plan.distances_m().len() != config.user_count() {
        return Err(Error::domain(format!(
            "plan has {} distances but the system is configured for {} users",
            plan.distances_m().len(),
            config.user_count()
        )));
    }
    Ok(())
}

/// Resolves a per-trial allocation for the policies that do not optimize.
fn fixed_or_symbolic_pa(policy: &PaPolicy, channel: &ChannelState) -> Result<PowerAllocation> {
    match policy {
        PaPolicy::Fixed(pa) => Ok(pa.clone()),
        PaPolicy::Symbolic(beta) => symbolic_pa(channel, *beta),
        PaPolicy::Optimized => Err(Error::domain(
            "this experiment compares orders under one given allocation; \
             use a fixed or symbolic policy",
        )),
    }
}

fn check_strictly_ascending(name: &str, values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::domain(format!("{name} must not be empty")));
    }
    for &value in values {
        if !value.is_finite() {
            return Err(Error::domain(format!("{name} holds non-finite value {value}")));
        }
    }
    if values.windows(2).any(|pair| pair[0] >= pair[1]) {
        return Err(Error::domain(format!("{name} must be strictly ascending")));
    }
    Ok(())
}

fn mean_and_standard_error(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let sum_squares: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, (sum_squares / (n - 1.0) / n).sqrt())
}

fn column_names(names: &[&str]) -> Vec<String> {
    names.iter().map(|name| name.to_string()).collect()
}

/// Estimates how often each secure decoding order yields the highest sum
/// secrecy rate under the plan's (fixed or symbolic) power allocation.
///
/// Table `win_probability`, one row per secure order in ascending canonical
/// index: `order_index`, `order`, `wins`, `win_fraction`. A trial's winner
/// is the order with the strictly highest sum secrecy rate; exact value
/// ties go to the lowest index. Fractions sum to one.
///
/// The optimizer settings are only echoed into the report metadata so the
/// file is self-describing; the ranking uses the given allocation as-is.
pub fn run_win_probability(
    plan: &SimulationPlan,
    config: &SystemConfig,
    settings: &OptimizerSettings,
) -> Result<ExperimentReport> {
    check_plan_users(plan, config)?;
    if matches!(plan.pa_policy(), PaPolicy::Optimized) {
        return Err(Error::domain(
            "win probability ranks orders under one allocation; \
             use a fixed or symbolic policy",
        ));
    }
    let secure = secure_orders(config.user_count())?;

    let winners: Vec<usize> = (0..plan.trials())
        .into_par_iter()
        .map(|trial| -> Result<usize> {
            let mut rng = trial_rng(plan.seed(), trial);
            let channel = sample_channel(plan.distances_m(), config, &mut rng)?;
            let pa = fixed_or_symbolic_pa(plan.pa_policy(), &channel)?;
            let mut best_value = f64::NEG_INFINITY;
            let mut best_position = 0;
            for (position, order) in secure.iter().enumerate() {
                let value = Evaluator::new(order, &channel, config)?.sum_secrecy_rate(pa.alphas());
                if value > best_value {
                    best_value = value;
                    best_position = position;
                }
            }
            Ok(best_position)
        })
        .collect::<Result<_>>()?;

    let mut wins = vec![0u64; secure.len()];
    for position in winners {
        wins[position] += 1;
    }

    let mut table = Table::new(
        "win_probability",
        column_names(&["order_index", "order", "wins", "win_fraction"]),
    );
    for (order, &count) in secure.iter().zip(&wins) {
        table.push_row(vec![
            Cell::Int(order.index() as i64),
            Cell::Text(order.to_string()),
            Cell::Int(count as i64),
            Cell::Float(count as f64 / plan.trials() as f64),
        ]);
    }

    Ok(ExperimentReport {
        experiment: "win-probability".to_string(),
        metadata: Metadata {
            seed: Some(plan.seed()),
            trials: Some(plan.trials()),
            distances_m: Some(plan.distances_m().to_vec()),
            power_allocation: Some(plan.pa_policy().describe()),
            system: Some(SystemSnapshot::from(config)),
            optimizer: Some(OptimizerSnapshot::from(settings)),
            ..Metadata::default()
        },
        axes: vec![Axis {
            name: "order_index".to_string(),
            unit: "1".to_string(),
            values: secure.iter().map(|order| order.index() as f64).collect(),
        }],
        tables: vec![table],
    })
}

/// Tabulates the sum secrecy rate of one order over the whole power-allocation
/// grid of a fixed channel.
///
/// Table `secrecy_surface`, one row per feasible grid point in lexicographic
/// order: the free fractions `alpha1..alpha{K-1}` followed by
/// `sum_secrecy_rate`. The grid is the optimizer's own phase-one grid, so the
/// table's maximum row reproduces the grid phase of [`optimize_pa`] exactly.
pub fn run_secrecy_surface(
    order: &DecodingOrder,
    channel: &ChannelState,
    config: &SystemConfig,
    settings: &OptimizerSettings,
) -> Result<ExperimentReport> {
    let evaluator = Evaluator::new(order, channel, config)?;
    let user_count = config.user_count();
    let free_dims = user_count - 1;

    let mut columns: Vec<String> = (1..user_count).map(|user| format!("alpha{user}")).collect();
    columns.push("sum_secrecy_rate".to_string());
    let mut table = Table::new("secrecy_surface", columns);

    let mut scratch = vec![0.0; user_count];
    let mut axis_values: Vec<Vec<f64>> = vec![Vec::new(); free_dims];
    for_each_grid_point(free_dims, settings, &mut |free| {
        fill_alphas(&mut scratch, free);
        let value = evaluator.sum_secrecy_rate(&scratch);
        let mut row: Vec<Cell> = free.iter().map(|&fraction| Cell::Float(fraction)).collect();
        row.push(Cell::Float(value));
        table.push_row(row);
        for (dim, &fraction) in free.iter().enumerate() {
            axis_values[dim].push(fraction);
        }
    });
    if table.rows.is_empty() {
        return Err(Error::domain(
            "no grid point is feasible; decrease grid_step or boundary_margin",
        ));
    }

    let axes = axis_values
        .into_iter()
        .enumerate()
        .map(|(dim, mut values)| {
            values.sort_by(f64::total_cmp);
            values.dedup();
            Axis {
                name: format!("alpha{}", dim + 1),
                unit: "1".to_string(),
                values,
            }
        })
        .collect();

    Ok(ExperimentReport {
        experiment: "secrecy-surface".to_string(),
        metadata: Metadata {
            gains: Some(channel.gains().to_vec()),
            distances_m: channel.distances_m().map(|d| d.to_vec()),
            order_index: Some(order.index()),
            order: Some(order.to_string()),
            system: Some(SystemSnapshot::from(config)),
            optimizer: Some(OptimizerSnapshot::from(settings)),
            ..Metadata::default()
        },
        axes,
        tables: vec![table],
    })
}

/// Estimates the distribution of the sum secrecy rate for several decoding
/// orders under the plan's (fixed or symbolic) allocation.
///
/// Table `secrecy_pdf`: 50 equal-width bins spanning the pooled range of all
/// observed rates, with columns `bin_lower`, `bin_center`, `bin_upper`, then
/// one `mass_o<index>` column per order holding that order's probability
/// mass in the bin (each column sums to one). If every sample coincides the
/// single degenerate bin 0 carries all mass. Table `order_stats`: per order,
/// `order_index`, `order`, `mean`, and population `variance`.
pub fn run_secrecy_pdf(
    plan: &SimulationPlan,
    orders: &[DecodingOrder],
    config: &SystemConfig,
) -> Result<ExperimentReport> {
    check_plan_users(plan, config)?;
    if matches!(plan.pa_policy(), PaPolicy::Optimized) {
        return Err(Error::domain(
            "the rate distribution is studied under one allocation; \
             use a fixed or symbolic policy",
        ));
    }
    if orders.is_empty() {
        return Err(Error::domain("need at least one decoding order"));
    }
    for order in orders {
        if order.user_count() != config.user_count() {
            return Err(Error::domain(format!(
                "order {} covers {} users but the system has {}",
                order.index(),
                order.user_count(),
                config.user_count()
            )));
        }
    }
    let mut indices: Vec<u64> = orders.iter().map(DecodingOrder::index).collect();
    indices.sort_unstable();
    if indices.windows(2).any(|pair| pair[0] == pair[1]) {
        return Err(Error::domain("decoding orders must be distinct"));
    }

    let samples: Vec<Vec<f64>> = (0..plan.trials())
        .into_par_iter()
        .map(|trial| -> Result<Vec<f64>> {
            let mut rng = trial_rng(plan.seed(), trial);
            let channel = sample_channel(plan.distances_m(), config, &mut rng)?;
            let pa = fixed_or_symbolic_pa(plan.pa_policy(), &channel)?;
            orders
                .iter()
                .map(|order| {
                    Evaluator::new(order, &channel, config)
                        .map(|evaluator| evaluator.sum_secrecy_rate(pa.alphas()))
                })
                .collect()
        })
        .collect::<Result<_>>()?;

    let mut lowest = f64::INFINITY;
    let mut highest = f64::NEG_INFINITY;
    for row in &samples {
        for &value in row {
            lowest = lowest.min(value);
            highest = highest.max(value);
        }
    }
    let width = (highest - lowest) / PDF_BINS as f64;

    let mut counts = vec![[0u64; PDF_BINS]; orders.len()];
    for row in &samples {
        for (which, &value) in row.iter().enumerate() {
            let bin = if width > 0.0 {
                (((value - lowest) / width) as usize).min(PDF_BINS - 1)
            } else {
                0
            };
            counts[which][bin] += 1;
        }
    }

    let trials = plan.trials() as f64;
    let mut columns = column_names(&["bin_lower", "bin_center", "bin_upper"]);
    for order in orders {
        columns.push(format!("mass_o{}", order.index()));
    }
    let mut pdf = Table::new("secrecy_pdf", columns);
    let mut centers = Vec::with_capacity(PDF_BINS);
    for bin in 0..PDF_BINS {
        let lower = lowest + bin as f64 * width;
        let center = lowest + (bin as f64 + 0.5) * width;
        let upper = lowest + (bin as f64 + 1.0) * width;
        centers.push(center);
        let mut row = vec![Cell::Float(lower), Cell::Float(center), Cell::Float(upper)];
        for order_counts in &counts {
            row.push(Cell::Float(order_counts[bin] as f64 / trials));
        }
        pdf.push_row(row);
    }

    let mut stats = Table::new(
        "order_stats",
        column_names(&["order_index", "order", "mean", "variance"]),
    );
    for (which, order) in orders.iter().enumerate() {
        let values: Vec<f64> = samples.iter().map(|row| row[which]).collect();
        let mean = values.iter().sum::<f64>() / trials;
        let variance = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / trials;
        stats.push_row(vec![
            Cell::Int(order.index() as i64),
            Cell::Text(order.to_string()),
            Cell::Float(mean),
            Cell::Float(variance),
        ]);
    }

    Ok(ExperimentReport {
        experiment: "secrecy-pdf".to_string(),
        metadata: Metadata {
            seed: Some(plan.seed()),
            trials: Some(plan.trials()),
            distances_m: Some(plan.distances_m().to_vec()),
            power_allocation: Some(plan.pa_policy().describe()),
            system: Some(SystemSnapshot::from(config)),
            ..Metadata::default()
        },
        axes: vec![Axis {
            name: "sum_secrecy_rate".to_string(),
            unit: "bit/s/Hz".to_string(),
            values: centers,
        }],
        tables: vec![pdf, stats],
    })
}

/// Sweeps the weaker users' distances and records the average optimized
/// power split for one decoding order in the three-user system.
///
/// The strongest user stays at the plan's first distance `d1`; the grids
/// must satisfy `d1 < min(d2) <= max(d2) < min(d3)` so the distance ranking
/// matches the expected gain ranking. Every `(d2, d3)` cell reuses the same
/// per-trial random streams, so cells differ only through the geometry.
///
/// Table `distance_sweep`, one row per `(d2, d3)` in row-major order:
/// `d2_m`, `d3_m`, then `alpha1_mean`, `alpha1_stderr`, `alpha2_mean`,
/// `alpha2_stderr` (mean and standard error of the optimized fractions of
/// the two stronger users), and `sum_secrecy_rate_mean`.
pub fn run_distance_sweep(
    plan: &SimulationPlan,
    order: &DecodingOrder,
    config: &SystemConfig,
    settings: &OptimizerSettings,
    d2_grid_m: &[f64],
    d3_grid_m: &[f64],
) -> Result<ExperimentReport> {
    if config.user_count() != 3 {
        return Err(Error::domain(
            "the distance sweep studies the three-user geometry",
        ));
    }
    check_plan_users(plan, config)?;
    if order.user_count() != 3 {
        return Err(Error::domain("the decoding order must cover three users"));
    }
    if !matches!(plan.pa_policy(), PaPolicy::Optimized) {
        return Err(Error::domain(
            "the distance sweep optimizes the allocation per trial; \
             use the optimized policy",
        ));
    }
    check_strictly_ascending("d2 grid", d2_grid_m)?;
    check_strictly_ascending("d3 grid", d3_grid_m)?;
    let d1 = plan.distances_m()[0];
    if d2_grid_m[0] <= d1 {
        return Err(Error::domain(format!(
            "every d2 must exceed d1 = {d1} m"
        )));
    }
    if d3_grid_m[0] <= *d2_grid_m.last().expect("nonempty") {
        return Err(Error::domain("every d3 must exceed every d2"));
    }
    for &d in d2_grid_m.iter().chain(d3_grid_m) {
        if d <= 0.0 {
            return Err(Error::domain("distances must be positive"));
        }
    }

    let mut table = Table::new(
        "distance_sweep",
        column_names(&[
            "d2_m",
            "d3_m",
            "alpha1_mean",
            "alpha1_stderr",
            "alpha2_mean",
            "alpha2_stderr",
            "sum_secrecy_rate_mean",
        ]),
    );
    for &d2 in d2_grid_m {
        for &d3 in d3_grid_m {
            let distances = [d1, d2, d3];
            let outcomes: Vec<(f64, f64, f64)> = (0..plan.trials())
                .into_par_iter()
                .map(|trial| -> Result<(f64, f64, f64)> {
                    let mut rng = trial_rng(plan.seed(), trial);
                    let channel = sample_channel(&distances, config, &mut rng)?;
                    let result = optimize_pa(order, &channel, config, settings)?;
                    let free = result.allocation().free_components();
                    Ok((free[0], free[1], result.sum_secrecy_rate()))
                })
                .collect::<Result<_>>()?;

            let alpha1: Vec<f64> = outcomes.iter().map(|o| o.0).collect();
            let alpha2: Vec<f64> = outcomes.iter().map(|o| o.1).collect();
            let sums: Vec<f64> = outcomes.iter().map(|o| o.2).collect();
            let (alpha1_mean, alpha1_stderr) = mean_and_standard_error(&alpha1);
            let (alpha2_mean, alpha2_stderr) = mean_and_standard_error(&alpha2);
            let (sum_mean, _) = mean_and_standard_error(&sums);
            table.push_row(vec![
                Cell::Float(d2),
                Cell::Float(d3),
                Cell::Float(alpha1_mean),
                Cell::Float(alpha1_stderr),
                Cell::Float(alpha2_mean),
                Cell::Float(alpha2_stderr),
                Cell::Float(sum_mean),
            ]);
        }
    }

    Ok(ExperimentReport {
        experiment: "distance-sweep".to_string(),
        metadata: Metadata {
            seed: Some(plan.seed()),
            trials: Some(plan.trials()),
            distances_m: Some(plan.distances_m().to_vec()),
            order_index: Some(order.index()),
            order: Some(order.to_string()),
            power_allocation: Some(plan.pa_policy().describe()),
            system: Some(SystemSnapshot::from(config)),
            optimizer: Some(OptimizerSnapshot::from(settings)),
            ..Metadata::default()
        },
        axes: vec![
            Axis {
                name: "d2_m".to_string(),
                unit: "m".to_string(),
                values: d2_grid_m.to_vec(),
            },
            Axis {
                name: "d3_m".to_string(),
                unit: "m".to_string(),
                values: d3_grid_m.to_vec(),
            },
        ],
        tables: vec![table],
    })
}

/// First transmit power (piecewise-linear in `powers`) at which `curve`
/// reaches `target`, scanning segments left to right. `None` when the curve
/// never reaches it.
fn power_reaching(powers: &[f64], curve: &[f64], target: f64) -> Option<f64> {
    if powers.len() == 1 {
        return (curve[0] == target).then(|| powers[0]);
    }
    for segment in 0..powers.len() - 1 {
        let (low, high) = (curve[segment], curve[segment + 1]);
        let contains = (low <= target && target <= high) || (high <= target && target <= low);
        if contains {
            if high == low {
                return Some(powers[segment]);
            }
            let fraction = (target - low) / (high - low);
            return Some(powers[segment] + fraction * (powers[segment + 1] - powers[segment]));
        }
    }
    None
}

/// Compares four transmission schemes over a transmit-power sweep: the
/// suboptimal order at the plan's fixed allocation (`fpa`), the best secure
/// order at that same allocation (`odo`), the optimized allocation for the
/// suboptimal order (`opa`), and the jointly optimized order and allocation
/// (`joint`).
///
/// The optimized schemes are seeded with the fixed allocation as a search
/// candidate, so per trial `joint >= opa >= fpa` and `joint >= odo >= fpa`
/// hold exactly, not just statistically.
///
/// Table `scheme_comparison`, one row per power: `transmit_power_dbm`,
/// `fpa_mean`, `odo_mean`, `opa_mean`, `joint_mean`. Table `gain_metrics`,
/// one row per power: `joint_over_fpa_db` (the mean-rate ratio in decibels,
/// null when the baseline mean is zero) and `equivalent_power_shift_db` (how
/// many more dBm the baseline needs to match the joint scheme's mean rate,
/// interpolated on the baseline curve; null when the curve never reaches
/// that rate).
pub fn run_scheme_comparison(
    plan: &SimulationPlan,
    config: &SystemConfig,
    settings: &OptimizerSettings,
    power_grid_dbm: &[f64],
) -> Result<ExperimentReport> {
    check_plan_users(plan, config)?;
    let fixed = match plan.pa_policy() {
        PaPolicy::Fixed(pa) => pa.clone(),
        _ => {
            return Err(Error::domain(
                "scheme comparison pins the baseline to one fixed allocation",
            ))
        }
    };
    check_strictly_ascending("power grid", power_grid_dbm)?;
    let suboptimal = suboptimal_order(config.user_count())?;
    let secure = secure_orders(config.user_count())?;
    let candidates = [fixed.clone()];

    let mut fpa_means = Vec::with_capacity(power_grid_dbm.len());
    let mut odo_means = Vec::with_capacity(power_grid_dbm.len());
    let mut opa_means = Vec::with_capacity(power_grid_dbm.len());
    let mut joint_means = Vec::with_capacity(power_grid_dbm.len());
    for &power in power_grid_dbm {
        let powered = config.with_transmit_power_dbm(power)?;
        let per_trial: Vec<[f64; 4]> = (0..plan.trials())
            .into_par_iter()
            .map(|trial| -> Result<[f64; 4]> {
                let mut rng = trial_rng(plan.seed(), trial);
                let channel = sample_channel(plan.distances_m(), &powered, &mut rng)?;
                let fpa = Evaluator::new(&suboptimal, &channel, &powered)?
                    .sum_secrecy_rate(fixed.alphas());
                let mut odo = f64::NEG_INFINITY;
                for order in &secure {
                    let value =
                        Evaluator::new(order, &channel, &powered)?.sum_secrecy_rate(fixed.alphas());
                    if value > odo {
                        odo = value;
                    }
                }
                let opa =
                    optimize_pa_with_candidates(&suboptimal, &channel, &powered, settings, &candidates)?
                        .sum_secrecy_rate();
                let joint =
                    joint_optimize_with_candidates(&channel, &powered, settings, &secure, &candidates)?
                        .sum_secrecy_rate();
                // The candidate seeding makes these exact; see the runner doc.
                debug_assert!(odo >= fpa && opa >= fpa && joint >= opa && joint >= odo);
                Ok([fpa, odo, opa, joint])
            })
            .collect::<Result<_>>()?;
        let trials = plan.trials() as f64;
        let mut means = [0.0f64; 4];
        for row in &per_trial {
            for (mean, value) in means.iter_mut().zip(row) {
                *mean += value;
            }
        }
        fpa_means.push(means[0] / trials);
        odo_means.push(means[1] / trials);
        opa_means.push(means[2] / trials);
        joint_means.push(means[3] / trials);
    }

    let mut comparison = Table::new(
        "scheme_comparison",
        column_names(&[
            "transmit_power_dbm",
            "fpa_mean",
            "odo_mean",
            "opa_mean",
            "joint_mean",
        ]),
    );
    let mut gains = Table::new(
        "gain_metrics",
        column_names(&[
            "transmit_power_dbm",
            "joint_over_fpa_db",
            "equivalent_power_shift_db",
        ]),
    );
    for (position, &power) in power_grid_dbm.iter().enumerate() {
        comparison.push_row(vec![
            Cell::Float(power),
            Cell::Float(fpa_means[position]),
            Cell::Float(odo_means[position]),
            Cell::Float(opa_means[position]),
            Cell::Float(joint_means[position]),
        ]);
        let ratio_db = if fpa_means[position] > 0.0 {
            Cell::Float(10.0 * (joint_means[position] / fpa_means[position]).log10())
        } else {
            Cell::Null
        };
        let shift = power_reaching(power_grid_dbm, &fpa_means, joint_means[position])
            .map(|equivalent| Cell::Float(equivalent - power))
            .unwrap_or(Cell::Null);
        gains.push_row(vec![Cell::Float(power), ratio_db, shift]);
    }

    Ok(ExperimentReport {
        experiment: "scheme-comparison".to_string(),
        metadata: Metadata {
            seed: Some(plan.seed()),
            trials: Some(plan.trials()),
            distances_m: Some(plan.distances_m().to_vec()),
            power_allocation: Some(plan.pa_policy().describe()),
            system: Some(SystemSnapshot::from(config)),
            optimizer: Some(OptimizerSnapshot::from(settings)),
            ..Metadata::default()
        },
        axes: vec![Axis {
            name: "transmit_power_dbm".to_string(),
            unit: "dBm".to_string(),
            values: power_grid_dbm.to_vec(),
        }],
        tables: vec![comparison, gains],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::DecodingOrder;

    fn default_config() -> SystemConfig {
        SystemConfig::new(3, -30.0).unwrap()
    }

    fn equal_plan(trials: u64, seed: u64) -> SimulationPlan {
        SimulationPlan::new(
            trials,
            seed,
            vec![100.0, 200.0, 300.0],
            PaPolicy::Fixed(PowerAllocation::equal(3).unwrap()),
        )
        .unwrap()
    }

    fn order(index: u64) -> DecodingOrder {
        DecodingOrder::from_index(3, index).unwrap()
    }

    #[test]
    fn win_probability_tallies_and_repeats_exactly() {
        let plan = equal_plan(64, 9);
        let config = default_config();
        let settings = OptimizerSettings::default();
        let report = run_win_probability(&plan, &config, &settings).unwrap();
        let again = run_win_probability(&plan, &config, &settings).unwrap();
        assert_eq!(report, again);

        let table = report.table("win_probability").unwrap();
        assert_eq!(table.rows.len(), 76);
        let wins: f64 = table.column_f64("wins").unwrap().iter().sum();
        assert_eq!(wins, 64.0);
        let fractions = table.column_f64("win_fraction").unwrap();
        assert!((fractions.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        let indices = table.column_f64("order_index").unwrap();
        assert!(indices.windows(2).all(|pair| pair[0] < pair[1]));
        assert_eq!(indices[0], 10.0);
        assert_eq!(*indices.last().unwrap(), 200.0);
    }

    #[test]
    fn win_probability_single_trial_has_one_winner() {
        let plan = SimulationPlan::new(
            1,
            5,
            vec![100.0, 200.0, 300.0],
            PaPolicy::Symbolic(0.5),
        )
        .unwrap();
        let report =
            run_win_probability(&plan, &default_config(), &OptimizerSettings::default()).unwrap();
        let fractions = report
            .table("win_probability")
            .unwrap()
            .column_f64("win_fraction")
            .unwrap();
        assert_eq!(fractions.iter().filter(|&&f| f == 1.0).count(), 1);
        assert_eq!(fractions.iter().filter(|&&f| f == 0.0).count(), 75);
    }

    #[test]
    fn win_probability_rejects_optimized_policy() {
        let plan =
            SimulationPlan::new(4, 1, vec![100.0, 200.0, 300.0], PaPolicy::Optimized).unwrap();
        assert!(
            run_win_probability(&plan, &default_config(), &OptimizerSettings::default()).is_err()
        );
    }

    #[test]
    fn surface_maximum_reproduces_the_optimizer_grid_phase() {
        let channel = ChannelState::from_gains(vec![4.0, 2.0, 1.0]).unwrap();
        let config = default_config();
        let settings = OptimizerSettings::default();
        let report = run_secrecy_surface(&order(10), &channel, &config, &settings).unwrap();
        let table = report.table("secrecy_surface").unwrap();

        let values = table.column_f64("sum_secrecy_rate").unwrap();
        let alpha1 = table.column_f64("alpha1").unwrap();
        let alpha2 = table.column_f64("alpha2").unwrap();
        let best = values
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (row, &value)| {
                if value > acc.1 {
                    (row, value)
                } else {
                    acc
                }
            });

        let grid_only = settings.with_refinement_iterations(0);
        let reference = optimize_pa(&order(10), &channel, &config, &grid_only).unwrap();
        assert_eq!(best.1, reference.sum_secrecy_rate());
        assert_eq!(alpha1[best.0], reference.allocation().free_components()[0]);
        assert_eq!(alpha2[best.0], reference.allocation().free_components()[1]);

        // The optimum sits well inside the simplex, away from the margins.
        assert!(alpha1[best.0] > 0.1 && alpha2[best.0] > 0.1);
        assert!(alpha1[best.0] + alpha2[best.0] < 0.9);
        assert!(values.iter().all(|&v| v >= 0.0));
        assert_eq!(report.axes.len(), 2);
    }

    #[test]
    fn surface_with_no_feasible_points_errors() {
        let channel = ChannelState::from_gains(vec![5.0, 4.0, 3.0, 2.0, 1.0]).unwrap();
        let config = SystemConfig::new(5, -30.0).unwrap();
        let settings = OptimizerSettings::default().with_grid_step(0.3).unwrap();
        let order = suboptimal_order(5).unwrap();
        assert!(run_secrecy_surface(&order, &channel, &config, &settings).is_err());
    }

    #[test]
    fn pdf_masses_and_stats_are_consistent() {
        let plan = equal_plan(200, 11);
        let config = default_config();
        let orders = [order(10), order(12), order(100), order(200)];
        let report = run_secrecy_pdf(&plan, &orders, &config).unwrap();
        assert_eq!(report, run_secrecy_pdf(&plan, &orders, &config).unwrap());

        let pdf = report.table("secrecy_pdf").unwrap();
        assert_eq!(pdf.rows.len(), PDF_BINS);
        for index in [10, 12, 100, 200] {
            let masses = pdf.column_f64(&format!("mass_o{index}")).unwrap();
            assert!((masses.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        }
        let lowers = pdf.column_f64("bin_lower").unwrap();
        let uppers = pdf.column_f64("bin_upper").unwrap();
        assert!(lowers.windows(2).all(|pair| pair[0] < pair[1]));
        assert!(lowers.iter().zip(&uppers).all(|(l, u)| l < u));

        let stats = report.table("order_stats").unwrap();
        assert_eq!(stats.rows.len(), 4);
        let means = stats.column_f64("mean").unwrap();
        let variances = stats.column_f64("variance").unwrap();
        assert!(means.iter().all(|m| m.is_finite() && *m > 0.0));
        assert!(variances.iter().all(|v| v.is_finite() && *v >= 0.0));
        // Every mean lies inside the pooled histogram range.
        for mean in means {
            assert!(mean >= lowers[0] && mean <= *uppers.last().unwrap());
        }
    }

    #[test]
    fn pdf_single_trial_collapses_to_one_bin() {
        let plan = equal_plan(1, 3);
        let orders = [order(10)];
        let report = run_secrecy_pdf(&plan, &orders, &default_config()).unwrap();
        let masses = report
            .table("secrecy_pdf")
            .unwrap()
            .column_f64("mass_o10")
            .unwrap();
        assert_eq!(masses[0], 1.0);
        assert!(masses[1..].iter().all(|&m| m == 0.0));
    }

    #[test]
    fn pdf_rejects_bad_order_lists_and_policies() {
        let plan = equal_plan(2, 3);
        let config = default_config();
        assert!(run_secrecy_pdf(&plan, &[], &config).is_err());
        assert!(run_secrecy_pdf(&plan, &[order(10), order(10)], &config).is_err());
        let mismatched = DecodingOrder::from_index(2, 3).unwrap();
        assert!(run_secrecy_pdf(&plan, &[mismatched], &config).is_err());
        let optimized =
            SimulationPlan::new(2, 3, vec![100.0, 200.0, 300.0], PaPolicy::Optimized).unwrap();
        assert!(run_secrecy_pdf(&optimized, &[order(10)], &config).is_err());
    }

    #[test]
    fn distance_sweep_single_cell_matches_direct_optimization() {
        let plan = SimulationPlan::new(
            1,
            3,
            vec![100.0, 200.0, 300.0],
            PaPolicy::Optimized,
        )
        .unwrap();
        let config = default_config();
        let settings = OptimizerSettings::default();
        let report = run_distance_sweep(&plan, &order(10), &config, &settings, &[200.0], &[400.0])
            .unwrap();
        let table = report.table("distance_sweep").unwrap();
        assert_eq!(table.rows.len(), 1);

        let mut rng = trial_rng(3, 0);
        let channel = sample_channel(&[100.0, 200.0, 400.0], &config, &mut rng).unwrap();
        let direct = optimize_pa(&order(10), &channel, &config, &settings).unwrap();
        let row = &table.rows[0];
        assert_eq!(row[0], Cell::Float(200.0));
        assert_eq!(row[1], Cell::Float(400.0));
        assert_eq!(
            row[2],
            Cell::Float(direct.allocation().free_components()[0])
        );
        assert_eq!(row[3], Cell::Float(0.0));
        assert_eq!(
            row[4],
            Cell::Float(direct.allocation().free_components()[1])
        );
        assert_eq!(row[5], Cell::Float(0.0));
        assert_eq!(row[6], Cell::Float(direct.sum_secrecy_rate()));
    }

    #[test]
    fn distance_sweep_validates_geometry_and_policy() {
        let config = default_config();
        let settings = OptimizerSettings::default();
        let optimized = SimulationPlan::new(
            1,
            3,
            vec![100.0, 200.0, 300.0],
            PaPolicy::Optimized,
        )
        .unwrap();
        let sweep = |plan: &SimulationPlan, d2: &[f64], d3: &[f64]| {
            run_distance_sweep(plan, &order(10), &config, &settings, d2, d3)
        };
        assert!(sweep(&optimized, &[100.0], &[400.0]).is_err());
        assert!(sweep(&optimized, &[200.0, 150.0], &[400.0]).is_err());
        assert!(sweep(&optimized, &[200.0], &[200.0]).is_err());
        assert!(sweep(&optimized, &[], &[400.0]).is_err());
        assert!(sweep(&equal_plan(1, 3), &[200.0], &[400.0]).is_err());
        let two_user = SystemConfig::new(2, -30.0).unwrap();
        assert!(run_distance_sweep(
            &optimized,
            &order(10),
            &two_user,
            &settings,
            &[200.0],
            &[400.0]
        )
        .is_err());
    }

    #[test]
    fn scheme_comparison_respects_exact_dominance() {
        let plan = equal_plan(3, 21);
        let config = default_config();
        let settings = OptimizerSettings::new(0.05, 1e-3, 40, 1e-9).unwrap();
        let powers = [10.0, 30.0];
        let report = run_scheme_comparison(&plan, &config, &settings, &powers).unwrap();
        assert_eq!(
            report,
            run_scheme_comparison(&plan, &config, &settings, &powers).unwrap()
        );

        let table = report.table("scheme_comparison").unwrap();
        let fpa = table.column_f64("fpa_mean").unwrap();
        let odo = table.column_f64("odo_mean").unwrap();
        let opa = table.column_f64("opa_mean").unwrap();
        let joint = table.column_f64("joint_mean").unwrap();
        for row in 0..powers.len() {
            assert!(fpa[row] > 0.0);
            assert!(odo[row] >= fpa[row]);
            assert!(opa[row] >= fpa[row]);
            assert!(joint[row] >= opa[row]);
            assert!(joint[row] >= odo[row]);
        }

        let gains = report.table("gain_metrics").unwrap();
        for row in &gains.rows {
            match &row[1] {
                Cell::Float(db) => assert!(*db >= 0.0),
                other => panic!("expected a ratio, got {other:?}"),
            }
        }
    }

    #[test]
    fn scheme_comparison_validates_inputs() {
        let config = default_config();
        let settings = OptimizerSettings::default();
        let symbolic = SimulationPlan::new(
            1,
            3,
            vec![100.0, 200.0, 300.0],
            PaPolicy::Symbolic(0.0),
        )
        .unwrap();
        assert!(run_scheme_comparison(&symbolic, &config, &settings, &[0.0, 10.0]).is_err());
        let plan = equal_plan(1, 3);
        assert!(run_scheme_comparison(&plan, &config, &settings, &[]).is_err());
        assert!(run_scheme_comparison(&plan, &config, &settings, &[10.0, 10.0]).is_err());
        assert!(run_scheme_comparison(&plan, &config, &settings, &[10.0, f64::NAN]).is_err());
    }

    #[test]
    fn pdf_ranks_the_handpicked_order_first() {
        // Among a spread of secure orders under an equal fixed allocation,
        // the handpicked suboptimal order (index 10) achieves the highest
        // mean sum secrecy rate, and the order closest to the conventional
        // one (index 200) the lowest. Deterministic at a fixed seed; the
        // same ranking holds across a wide transmit-power range.
        let plan = equal_plan(10_000, 42);
        let config = SystemConfig::new(3, -20.0).unwrap();
        let orders = [order(10), order(12), order(100), order(200)];
        let report = run_secrecy_pdf(&plan, &orders, &config).unwrap();
        let means = report
            .table("order_stats")
            .unwrap()
            .column_f64("mean")
            .unwrap();
        assert!(means[0] > means[1] && means[0] > means[2] && means[0] > means[3]);
        assert!(means[3] < means[1] && means[3] < means[2]);
    }

    #[test]
    fn power_reaching_interpolates_leftmost() {
        let powers = [0.0, 10.0, 20.0];
        let curve = [1.0, 2.0, 4.0];
        assert_eq!(power_reaching(&powers, &curve, 1.0), Some(0.0));
        assert_eq!(power_reaching(&powers, &curve, 2.0), Some(10.0));
        assert_eq!(power_reaching(&powers, &curve, 4.0), Some(20.0));
        assert_eq!(power_reaching(&powers, &curve, 1.5), Some(5.0));
        assert_eq!(power_reaching(&powers, &curve, 3.0), Some(15.0));
        assert_eq!(power_reaching(&powers, &curve, 5.0), None);
        assert_eq!(power_reaching(&powers, &curve, 0.5), None);
        assert_eq!(power_reaching(&[5.0], &[2.0], 2.0), Some(5.0));
        assert_eq!(power_reaching(&[5.0], &[2.0], 3.0), None);
        // A flat stretch resolves to its left edge.
        assert_eq!(power_reaching(&[0.0, 10.0], &[2.0, 2.0], 2.0), Some(0.0));
    }
}
