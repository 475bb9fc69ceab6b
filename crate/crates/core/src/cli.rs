//! Command-line frontend: argument parsing, configuration merging, and
//! output for every library operation.
//!
//! Every setting resolves in three layers: built-in default, then the TOML
//! config file (named by `--config` or the `NOMA_SECRECY_CONFIG` environment
//! variable), then the command-line flag. The config file is flat key/value
//! TOML whose keys match the long flags (units spelled out, e.g.
//! `transmit_power_dbm = -20.0`); unknown keys are rejected.
//!
//! Exit codes: 0 success, 1 output I/O failure, 2 usage or configuration
//! problems (bad flags, malformed lists, config-file trouble, missing
//! transmit power), 3 capacity limits, 4 domain validation errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::channel::ChannelState;
use crate::config::{
    SystemConfig, DEFAULT_NOISE_POWER_DBM, DEFAULT_PATH_LOSS_CONSTANT, DEFAULT_PATH_LOSS_EXPONENT,
    DEFAULT_RESIDUAL_SIC_FACTOR, DEFAULT_USER_COUNT,
};
use crate::error::Error;
use crate::optim::{
    joint_optimize, optimize_pa, OptimizationResult, OptimizerSettings, DEFAULT_BOUNDARY_MARGIN,
    DEFAULT_GRID_STEP, DEFAULT_REFINEMENT_ITERATIONS, DEFAULT_REFINEMENT_TOLERANCE,
};
use crate::order::{enumerate_orders, secure_orders, suboptimal_order, DecodingOrder};
use crate::power::PowerAllocation;
use crate::report::{write_csv, write_json, ExperimentReport};
use crate::secrecy::secrecy_report;
use crate::sim::{
    default_distances_m, run_distance_sweep, run_scheme_comparison, run_secrecy_pdf,
    run_secrecy_surface, run_win_probability, PaPolicy, SimulationPlan, DEFAULT_SEED,
    DEFAULT_TRIALS,
};

/// Environment variable consulted for a config-file path when `--config` is
/// absent.
pub const CONFIG_ENV: &str = "NOMA_SECRECY_CONFIG";

/// Default decoding orders compared by `simulate secrecy-pdf` (three users).
const DEFAULT_PDF_ORDERS: [u64; 4] = [10, 12, 100, 200];

/// Default fixed allocation for `simulate scheme-comparison` (three users).
const DEFAULT_SCHEME_ALPHAS: [f64; 3] = [0.1667, 0.3333, 0.5];

fn default_power_grid_dbm() -> Vec<f64> {
    (0..=8).map(|step| 5.0 * step as f64).collect()
}

fn default_d2_grid_m() -> Vec<f64> {
    vec![150.0, 200.0, 250.0, 300.0]
}

fn default_d3_grid_m() -> Vec<f64> {
    vec![400.0, 600.0, 800.0, 1000.0]
}

#[derive(Parser)]
#[command(
    name = "noma-secrecy",
    version,
    about = "Secrecy-rate toolkit for downlink untrusted NOMA with imperfect SIC"
)]
struct Cli {
    #[command(flatten)]
    flags: GlobalFlags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalFlags {
    /// TOML config file; keys match the long flags.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Number of users K.
    #[arg(long, global = true)]
    users: Option<usize>,
    /// Base-station transmit power in dBm (required by every command that
    /// evaluates rates).
    #[arg(long, global = true, allow_negative_numbers = true)]
    transmit_power_dbm: Option<f64>,
    /// Noise power in dBm.
    #[arg(long, global = true, allow_negative_numbers = true)]
    noise_power_dbm: Option<f64>,
    /// Path-loss constant L_p.
    #[arg(long, global = true)]
    path_loss_constant: Option<f64>,
    /// Path-loss exponent e.
    #[arg(long, global = true)]
    path_loss_exponent: Option<f64>,
    /// Residual self-interference factor zeta in [0, 1].
    #[arg(long, global = true)]
    residual_sic_factor: Option<f64>,
    /// Optimizer grid step.
    #[arg(long, global = true)]
    grid_step: Option<f64>,
    /// Optimizer boundary margin epsilon.
    #[arg(long, global = true)]
    boundary_margin: Option<f64>,
    /// Optimizer refinement iteration limit.
    #[arg(long, global = true)]
    refinement_iterations: Option<usize>,
    /// Optimizer refinement stopping tolerance.
    #[arg(long, global = true)]
    refinement_tolerance: Option<f64>,
    /// Monte Carlo trial count.
    #[arg(long, global = true)]
    trials: Option<u64>,
    /// Monte Carlo base seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Comma-separated user distances in meters.
    #[arg(long, global = true, value_name = "D1,D2,...")]
    distances: Option<String>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Report file format (default: by output extension, JSON otherwise).
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List every decoding order as "index | columns".
    Enumerate,
    /// List only the secure decoding orders.
    Filter,
    /// Print the handpicked suboptimal secure order.
    Suboptimal,
    /// Print a per-user secrecy report for one explicit configuration.
    Evaluate {
        /// Decoding order: canonical index or "2,3,1;1,3,2;1,2,3" text.
        #[arg(long)]
        order: String,
        /// Comma-separated channel gains, strictly descending.
        #[arg(long, value_name = "G1,G2,...")]
        gains: String,
        /// Comma-separated power fractions summing to one.
        #[arg(long, value_name = "A1,A2,...")]
        alphas: String,
    },
    /// Optimize the power allocation for one order on a fixed channel.
    Optimize {
        #[arg(long)]
        order: String,
        #[arg(long, value_name = "G1,G2,...")]
        gains: String,
    },
    /// Jointly optimize decoding order and power allocation.
    Joint {
        #[arg(long, value_name = "G1,G2,...")]
        gains: String,
        /// Comma-separated order indices (default: every secure order).
        #[arg(long)]
        orders: Option<String>,
    },
    /// Run a Monte Carlo experiment and emit its report.
    Simulate {
        #[command(subcommand)]
        experiment: Experiment,
    },
}

#[derive(Subcommand)]
enum Experiment {
    /// How often each secure order yields the best sum secrecy rate.
    WinProbability {
        /// Fixed power fractions (default: equal split).
        #[arg(long, value_name = "A1,A2,...", conflicts_with = "beta")]
        alphas: Option<String>,
        /// Symbolic allocation exponent in [-1, 1] instead of fixed fractions.
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
    },
    /// Sum secrecy rate of one order over the whole allocation grid.
    SecrecySurface {
        #[arg(long)]
        order: String,
        #[arg(long, value_name = "G1,G2,...")]
        gains: String,
    },
    /// Distribution of the sum secrecy rate for selected orders.
    SecrecyPdf {
        /// Comma-separated order indices (default for three users: 10,12,100,200).
        #[arg(long)]
        orders: Option<String>,
        #[arg(long, value_name = "A1,A2,...", conflicts_with = "beta")]
        alphas: Option<String>,
        #[arg(long, allow_negative_numbers = true)]
        beta: Option<f64>,
    },
    /// Mean optimized allocation across the weaker users' distances.
    DistanceSweep {
        /// Decoding order (default: the suboptimal order).
        #[arg(long)]
        order: Option<String>,
        /// Comma-separated grid for the middle user's distance in meters.
        #[arg(long, value_name = "D,D,...")]
        d2_grid: Option<String>,
        /// Comma-separated grid for the weakest user's distance in meters.
        #[arg(long, value_name = "D,D,...")]
        d3_grid: Option<String>,
    },
    /// Mean rate of four transmission schemes over a power sweep.
    SchemeComparison {
        /// Baseline fixed power fractions (default for three users:
        /// 0.1667,0.3333,0.5).
        #[arg(long, value_name = "A1,A2,...")]
        alphas: Option<String>,
        /// Comma-separated transmit powers in dBm (default: 0,5,...,40).
        #[arg(long, value_name = "P,P,...", allow_hyphen_values = true)]
        powers: Option<String>,
    },
}

/// Flat key/value schema of the TOML config file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    users: Option<usize>,
    transmit_power_dbm: Option<f64>,
    noise_power_dbm: Option<f64>,
    path_loss_constant: Option<f64>,
    path_loss_exponent: Option<f64>,
    residual_sic_factor: Option<f64>,
    grid_step: Option<f64>,
    boundary_margin: Option<f64>,
    refinement_iterations: Option<usize>,
    refinement_tolerance: Option<f64>,
    trials: Option<u64>,
    seed: Option<u64>,
    distances_m: Option<Vec<f64>>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::Domain(_) => 4,
            Error::Capacity(_) => 3,
            Error::Io(_) => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn config_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Every global setting after merging defaults, config file, and flags.
struct Resolved {
    users: usize,
    transmit_power_dbm: Option<f64>,
    noise_power_dbm: f64,
    path_loss_constant: f64,
    path_loss_exponent: f64,
    residual_sic_factor: f64,
    grid_step: f64,
    boundary_margin: f64,
    refinement_iterations: usize,
    refinement_tolerance: f64,
    trials: u64,
    seed: u64,
    distances_m: Vec<f64>,
    output: Option<PathBuf>,
    format: Option<OutputFormat>,
}

impl Resolved {
    fn system_config(&self) -> Result<SystemConfig, Failure> {
        let transmit = self.transmit_power_dbm.ok_or_else(|| {
            config_failure(
                "transmit power is required: pass --transmit-power-dbm or set \
                 transmit_power_dbm in the config file",
            )
        })?;
        Ok(SystemConfig::new(self.users, transmit)?
            .with_noise_power_dbm(self.noise_power_dbm)?
            .with_path_loss(self.path_loss_constant, self.path_loss_exponent)?
            .with_residual_sic_factor(self.residual_sic_factor)?)
    }

    fn optimizer_settings(&self) -> Result<OptimizerSettings, Failure> {
        Ok(OptimizerSettings::new(
            self.grid_step,
            self.boundary_margin,
            self.refinement_iterations,
            self.refinement_tolerance,
        )?)
    }

    fn plan(&self, policy: PaPolicy) -> Result<SimulationPlan, Failure> {
        Ok(SimulationPlan::new(
            self.trials,
            self.seed,
            self.distances_m.clone(),
            policy,
        )?)
    }
}

fn load_file_config(explicit: Option<&Path>) -> Result<FileConfig, Failure> {
    let path = match explicit {
        Some(path) => Some(path.to_path_buf()),
        None => std::env::var_os(CONFIG_ENV).map(PathBuf::from),
    };
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|err| config_failure(format!("cannot read config {}: {err}", path.display())))?;
    toml::from_str(&text)
        .map_err(|err| config_failure(format!("malformed config {}: {err}", path.display())))
}

fn parse_f64_list(text: &str, what: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(str::trim)
        .map(|token| {
            token
                .parse::<f64>()
                .map_err(|_| config_failure(format!("{what}: {token:?} is not a number")))
        })
        .collect()
}

fn parse_u64_list(text: &str, what: &str) -> Result<Vec<u64>, Failure> {
    text.split(',')
        .map(str::trim)
        .map(|token| {
            token
                .parse::<u64>()
                .map_err(|_| config_failure(format!("{what}: {token:?} is not an index")))
        })
        .collect()
}

/// Accepts either a canonical index or the textual column form.
fn parse_order(text: &str, users: usize) -> Result<DecodingOrder, Failure> {
    let trimmed = text.trim();
    if trimmed.chars().all(|c| c.is_ascii_digit()) && !trimmed.is_empty() {
        let index = trimmed
            .parse::<u64>()
            .map_err(|_| config_failure(format!("order index {trimmed:?} is out of range")))?;
        return Ok(DecodingOrder::from_index(users, index)?);
    }
    let order: DecodingOrder = trimmed.parse()?;
    if order.user_count() != users {
        return Err(Error::domain(format!(
            "order covers {} users but the system has {users}",
            order.user_count()
        ))
        .into());
    }
    Ok(order)
}

fn resolve(flags: &GlobalFlags, file: &FileConfig) -> Result<Resolved, Failure> {
    let distances_m = match &flags.distances {
        Some(text) => parse_f64_list(text, "--distances")?,
        None => file.distances_m.clone().unwrap_or_else(default_distances_m),
    };
    Ok(Resolved {
        users: flags.users.or(file.users).unwrap_or(DEFAULT_USER_COUNT),
        transmit_power_dbm: flags.transmit_power_dbm.or(file.transmit_power_dbm),
        noise_power_dbm: flags
            .noise_power_dbm
            .or(file.noise_power_dbm)
            .unwrap_or(DEFAULT_NOISE_POWER_DBM),
        path_loss_constant: flags
            .path_loss_constant
            .or(file.path_loss_constant)
            .unwrap_or(DEFAULT_PATH_LOSS_CONSTANT),
        path_loss_exponent: flags
            .path_loss_exponent
            .or(file.path_loss_exponent)
            .unwrap_or(DEFAULT_PATH_LOSS_EXPONENT),
        residual_sic_factor: flags
            .residual_sic_factor
            .or(file.residual_sic_factor)
            .unwrap_or(DEFAULT_RESIDUAL_SIC_FACTOR),
        grid_step: flags.grid_step.or(file.grid_step).unwrap_or(DEFAULT_GRID_STEP),
        boundary_margin: flags
            .boundary_margin
            .or(file.boundary_margin)
            .unwrap_or(DEFAULT_BOUNDARY_MARGIN),
        refinement_iterations: flags
            .refinement_iterations
            .or(file.refinement_iterations)
            .unwrap_or(DEFAULT_REFINEMENT_ITERATIONS),
        refinement_tolerance: flags
            .refinement_tolerance
            .or(file.refinement_tolerance)
            .unwrap_or(DEFAULT_REFINEMENT_TOLERANCE),
        trials: flags.trials.or(file.trials).unwrap_or(DEFAULT_TRIALS),
        seed: flags.seed.or(file.seed).unwrap_or(DEFAULT_SEED),
        distances_m,
        output: flags.output.clone(),
        format: flags.format,
    })
}

fn order_lines(orders: &[DecodingOrder]) -> String {
    let mut text = String::new();
    for order in orders {
        let _ = writeln!(text, "{} | {order}", order.index());
    }
    text
}

fn optimization_text(result: &OptimizationResult) -> String {
    let alphas: Vec<String> = result
        .allocation()
        .alphas()
        .iter()
        .map(|alpha| format!("{alpha}"))
        .collect();
    format!(
        "order {} | {}\nalphas: {}\nsum secrecy rate: {}\n",
        result.order().index(),
        result.order(),
        alphas.join(","),
        result.sum_secrecy_rate()
    )
}

/// Writes text (line-oriented commands) to the output file or hands it back
/// as the stdout payload.
fn emit_text(text: String, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        None => Ok(text),
        Some(path) => {
            std::fs::write(path, text).map_err(|err| Failure {
                code: 1,
                message: format!("cannot write {}: {err}", path.display()),
            })?;
            Ok(format!("wrote {}\n", path.display()))
        }
    }
}

/// Writes a report as JSON or CSV per the resolved output settings; without
/// an output path the report goes to stdout as JSON.
fn emit_report(report: &ExperimentReport, resolved: &Resolved) -> Result<String, Failure> {
    let Some(path) = &resolved.output else {
        let mut text = serde_json::to_string_pretty(report).map_err(|err| Failure {
            code: 1,
            message: format!("cannot serialize report: {err}"),
        })?;
        text.push('\n');
        return Ok(text);
    };
    let format = resolved.format.unwrap_or_else(|| {
        match path.extension().and_then(|ext| ext.to_str()) {
            Some("csv") => OutputFormat::Csv,
            _ => OutputFormat::Json,
        }
    });
    let written = match format {
        OutputFormat::Json => {
            write_json(report, path)?;
            vec![path.clone()]
        }
        OutputFormat::Csv => write_csv(report, path)?,
    };
    let mut text = String::new();
    for path in written {
        let _ = writeln!(text, "wrote {}", path.display());
    }
    Ok(text)
}

/// Resolves the `--alphas`/`--beta` pair into a fixed or symbolic policy,
/// defaulting to the equal split.
fn fixed_or_symbolic_policy(
    alphas: Option<&str>,
    beta: Option<f64>,
    users: usize,
) -> Result<PaPolicy, Failure> {
    if let Some(text) = alphas {
        let fractions = parse_f64_list(text, "--alphas")?;
        return Ok(PaPolicy::Fixed(PowerAllocation::new(fractions)?));
    }
    if let Some(beta) = beta {
        return Ok(PaPolicy::Symbolic(beta));
    }
    Ok(PaPolicy::Fixed(PowerAllocation::equal(users)?))
}

fn run(cli: Cli) -> Result<String, Failure> {
    let file = load_file_config(cli.flags.config.as_deref())?;
    let resolved = resolve(&cli.flags, &file)?;
    match cli.command {
        Command::Enumerate => {
            let orders = enumerate_orders(resolved.users)?;
            emit_text(order_lines(&orders), resolved.output.as_deref())
        }
        Command::Filter => {
            let orders = secure_orders(resolved.users)?;
            emit_text(order_lines(&orders), resolved.output.as_deref())
        }
        Command::Suboptimal => {
            let order = suboptimal_order(resolved.users)?;
            emit_text(order_lines(std::slice::from_ref(&order)), resolved.output.as_deref())
        }
        Command::Evaluate {
            order,
            gains,
            alphas,
        } => {
            let order = parse_order(&order, resolved.users)?;
            let channel = ChannelState::from_gains(parse_f64_list(&gains, "--gains")?)?;
            let pa = PowerAllocation::new(parse_f64_list(&alphas, "--alphas")?)?;
            let config = resolved.system_config()?;
            let report = secrecy_report(&order, &channel, &pa, &config)?;
            let mut text = format!("order {} | {order}\n", order.index());
            for user in 0..config.user_count() {
                let _ = writeln!(
                    text,
                    "user {}: self {} | eavesdropper {} | secrecy {}",
                    user + 1,
                    report.self_rates()[user],
                    report.eavesdropper_rates()[user],
                    report.secrecy_rates()[user]
                );
            }
            let _ = writeln!(text, "sum secrecy rate: {}", report.sum_secrecy_rate());
            emit_text(text, resolved.output.as_deref())
        }
        Command::Optimize { order, gains } => {
            let order = parse_order(&order, resolved.users)?;
            let channel = ChannelState::from_gains(parse_f64_list(&gains, "--gains")?)?;
            let config = resolved.system_config()?;
            let settings = resolved.optimizer_settings()?;
            let result = optimize_pa(&order, &channel, &config, &settings)?;
            emit_text(optimization_text(&result), resolved.output.as_deref())
        }
        Command::Joint { gains, orders } => {
            let channel = ChannelState::from_gains(parse_f64_list(&gains, "--gains")?)?;
            let config = resolved.system_config()?;
            let settings = resolved.optimizer_settings()?;
            let orders = match orders {
                Some(text) => parse_u64_list(&text, "--orders")?
                    .into_iter()
                    .map(|index| DecodingOrder::from_index(resolved.users, index))
                    .collect::<crate::error::Result<Vec<_>>>()?,
                None => secure_orders(resolved.users)?,
            };
            let result = joint_optimize(&channel, &config, &settings, &orders)?;
            emit_text(optimization_text(&result), resolved.output.as_deref())
        }
        Command::Simulate { experiment } => {
            let report = run_experiment(experiment, &resolved)?;
            emit_report(&report, &resolved)
        }
    }
}

fn run_experiment(experiment: Experiment, resolved: &Resolved) -> Result<ExperimentReport, Failure> {
    let config = resolved.system_config()?;
    match experiment {
        Experiment::WinProbability { alphas, beta } => {
            let policy = fixed_or_symbolic_policy(alphas.as_deref(), beta, resolved.users)?;
            let plan = resolved.plan(policy)?;
            Ok(run_win_probability(&plan, &config, &resolved.optimizer_settings()?)?)
        }
        Experiment::SecrecySurface { order, gains } => {
            let order = parse_order(&order, resolved.users)?;
            let channel = ChannelState::from_gains(parse_f64_list(&gains, "--gains")?)?;
            Ok(run_secrecy_surface(
                &order,
                &channel,
                &config,
                &resolved.optimizer_settings()?,
            )?)
        }
        Experiment::SecrecyPdf {
            orders,
            alphas,
            beta,
        } => {
            let indices = match orders {
                Some(text) => parse_u64_list(&text, "--orders")?,
                None if resolved.users == 3 => DEFAULT_PDF_ORDERS.to_vec(),
                None => {
                    return Err(config_failure(
                        "--orders is required when the system is not three users",
                    ))
                }
            };
            let orders = indices
                .into_iter()
                .map(|index| DecodingOrder::from_index(resolved.users, index))
                .collect::<crate::error::Result<Vec<_>>>()?;
            let policy = fixed_or_symbolic_policy(alphas.as_deref(), beta, resolved.users)?;
            let plan = resolved.plan(policy)?;
            Ok(run_secrecy_pdf(&plan, &orders, &config)?)
        }
        Experiment::DistanceSweep {
            order,
            d2_grid,
            d3_grid,
        } => {
            let order = match order {
                Some(text) => parse_order(&text, resolved.users)?,
                None => suboptimal_order(resolved.users)?,
            };
            let d2 = match d2_grid {
                Some(text) => parse_f64_list(&text, "--d2-grid")?,
                None => default_d2_grid_m(),
            };
            let d3 = match d3_grid {
                Some(text) => parse_f64_list(&text, "--d3-grid")?,
                None => default_d3_grid_m(),
            };
            let plan = resolved.plan(PaPolicy::Optimized)?;
            Ok(run_distance_sweep(
                &plan,
                &order,
                &config,
                &resolved.optimizer_settings()?,
                &d2,
                &d3,
            )?)
        }
        Experiment::SchemeComparison { alphas, powers } => {
            let fractions = match alphas {
                Some(text) => parse_f64_list(&text, "--alphas")?,
                None if resolved.users == 3 => DEFAULT_SCHEME_ALPHAS.to_vec(),
                None => {
                    return Err(config_failure(
                        "--alphas is required when the system is not three users",
                    ))
                }
            };
            let policy = PaPolicy::Fixed(PowerAllocation::new(fractions)?);
            let plan = resolved.plan(policy)?;
            let powers = match powers {
                Some(text) => parse_f64_list(&text, "--powers")?,
                None => default_power_grid_dbm(),
            };
            Ok(run_scheme_comparison(
                &plan,
                &config,
                &resolved.optimizer_settings()?,
                &powers,
            )?)
        }
    }
}

/// Parses and executes an argument vector, returning the exit code along
/// with the stdout and stderr payloads.
fn evaluate_argv<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    (0, err.to_string(), String::new())
                }
                _ => (2, String::new(), err.to_string()),
            };
        }
    };
    match run(cli) {
        Ok(payload) => (0, payload, String::new()),
        Err(failure) => (failure.code, String::new(), format!("error: {}\n", failure.message)),
    }
}

/// Runs the CLI for `argv` (including the program name) and returns the
/// process exit code, printing payloads to stdout and diagnostics to stderr.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (code, stdout, stderr) = evaluate_argv(argv);
    print!("{stdout}");
    eprint!("{stderr}");
    code
}
