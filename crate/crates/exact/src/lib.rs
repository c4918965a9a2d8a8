//! Exact counts and first-order asymptotics for tree-child networks.
//!
//! Everything in [`counts`], [`bound`] and [`constants`] is exact big-integer
//! or big-rational arithmetic; floating point only appears in [`asymptotics`].

use thiserror::Error;

pub mod asymptotics;
pub mod bound;
pub mod constants;
pub mod counts;
pub mod factorial;
mod series;

pub use asymptotics::{LogEstimate, RatioPoint, RatioSeries};
pub use bound::{upper_bound_u, BoundSignature, TcTable};
pub use constants::{c_constant, d_closed, d_partial, DyadicRational, ExactRatio, RadicalConstant};
pub use counts::{
    one_component_count, phylo_tree_count, sigma_sum, star_count, star_count_convolution,
    tc_exact_k_one, tree_power_coeff,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CountError {
    #[error("{0}")]
    Domain(String),
    #[error("factorial of {requested} exceeds the cap of {cap}")]
    FactorialCap { requested: usize, cap: usize },
    #[error("division in {0} left a remainder")]
    NonIntegral(&'static str),
    #[error("invalid bound signature: {0}")]
    Signature(String),
    #[error("no tree-child count for {leaves} leaves and {reticulations} reticulations in the table")]
    MissingTableEntry { leaves: usize, reticulations: usize },
}

pub type Result<T> = std::result::Result<T, CountError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(CountError::Domain(msg.into()))
}
