//! Secrecy-rate modeling for downlink untrusted NOMA with imperfect SIC.
//!
//! A base station superposes K user signals; every receiver is honest-but-
//! curious, so each user's message must stay secret from the other users,
//! which decode with successive interference cancellation under a residual-
//! error factor. This crate models the per-link SINRs and secrecy rates,
//! enumerates the `(K!)^K` possible SIC decoding-order matrices, filters
//! them for secrecy feasibility, optimizes the power allocation per order,
//! and runs the Monte Carlo experiments behind the `noma-secrecy` binary.
//!
//! ```
//! use noma_secrecy::{
//!     joint_optimize, ChannelState, OptimizerSettings, SystemConfig,
//! };
//! use noma_secrecy::order::secure_orders;
//!
//! let config = SystemConfig::new(3, -30.0)?;
//! let channel = ChannelState::from_gains(vec![4e-6, 2e-6, 1e-6])?;
//! let secure = secure_orders(3)?;
//! assert_eq!(secure.len(), 76);
//!
//! let settings = OptimizerSettings::default().with_refinement_iterations(20);
//! let best = joint_optimize(&channel, &config, &settings, &secure)?;
//! assert!(best.sum_secrecy_rate() > 0.0);
//! assert!(best.order().is_secure());
//! # Ok::<(), noma_secrecy::Error>(())
//! ```

pub mod channel;
pub mod cli;
pub mod config;
mod error;
pub mod optim;
pub mod order;
pub mod power;
pub mod report;
pub mod secrecy;
pub mod sim;

pub use channel::ChannelState;
pub use config::SystemConfig;
pub use error::{Error, Result};
pub use optim::{joint_optimize, optimize_pa, OptimizationResult, OptimizerSettings};
pub use order::{DecodingOrder, Permutation};
pub use power::PowerAllocation;
pub use report::ExperimentReport;
pub use secrecy::{secrecy_report, SecrecyReport};
pub use sim::{PaPolicy, SimulationPlan};
