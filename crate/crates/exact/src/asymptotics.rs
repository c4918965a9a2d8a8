//! First-order asymptotics on the natural-log scale and the ratio ladders
//! that compare them with exact counts.

use std::f64::consts::{LN_2, PI};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::constants::{c_constant, d_closed};
use crate::counts::{one_component_count, sigma_sum, star_count};
use crate::factorial::factorial;
use crate::{domain, Result};

/// `ln x` for `x >= 1`, from the top 64 bits and the bit length.
pub fn log_big(x: &BigUint) -> Result<f64> {
    if x.is_zero() {
        return domain("log of zero");
    }
    Ok(ln_biguint(x))
}

pub(crate) fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return x.to_u64().expect("fits in 64 bits").to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits");
    (top as f64).ln() + shift as f64 * LN_2
}

/// A non-negative real kept as its logarithm, or an exact zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum LogEstimate {
    Zero,
    Ln(f64),
}

impl LogEstimate {
    pub fn is_zero(&self) -> bool {
        matches!(self, LogEstimate::Zero)
    }

    pub fn ln(&self) -> Option<f64> {
        match *self {
            LogEstimate::Zero => None,
            LogEstimate::Ln(v) => Some(v),
        }
    }

    /// The value itself; overflows to infinity for large logs.
    pub fn value(&self) -> f64 {
        self.ln().map_or(0.0, f64::exp)
    }
}

fn ln_factorial(n: usize) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// `ln( 2^(k-1) √2 / k! · (2/e)^ℓ · ℓ^(ℓ+2k-1) )`.
pub fn log_asymptotic_tc(leaves: usize, reticulations: usize) -> Result<LogEstimate> {
    if leaves < 2 {
        return domain("leaves must be >= 2");
    }
    let (l, k) = (leaves as f64, reticulations as f64);
    let ln_l = l.ln();
    let v = (k - 1.0) * LN_2 + 0.5 * LN_2 - ln_factorial(reticulations) + l * (LN_2 - 1.0) + (l + 2.0 * k - 1.0) * ln_l;
    Ok(LogEstimate::Ln(v))
}

/// The same leading term for networks whose `n` non-root vertices all carry
/// labels: zero for even `n`, otherwise
/// `2√2/(4^k k!) · (√2/e)^n · n^(n+2k-1)`.
pub fn log_asymptotic_node_labeled(n: usize, reticulations: usize) -> Result<LogEstimate> {
    if n < 2 {
        return domain("n must be >= 2");
    }
    if n.is_multiple_of(2) {
        return Ok(LogEstimate::Zero);
    }
    let (nf, k) = (n as f64, reticulations as f64);
    let lead = 1.5 * LN_2 - 2.0 * k * LN_2 - ln_factorial(reticulations);
    Ok(LogEstimate::Ln(lead + nf * (0.5 * LN_2 - 1.0) + (nf + 2.0 * k - 1.0) * nf.ln()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioPoint {
    pub leaves: usize,
    pub ratio: f64,
}

/// Ratios indexed by strictly increasing leaf counts.
#[derive(Clone, Debug, PartialEq)]
pub struct RatioSeries {
    points: Vec<RatioPoint>,
}

impl RatioSeries {
    pub fn new(points: Vec<RatioPoint>) -> Result<Self> {
        if points.windows(2).any(|w| w[0].leaves >= w[1].leaves) {
            return domain("leaf counts must be strictly increasing");
        }
        Ok(RatioSeries { points })
    }

    fn collect(leaves: &[usize], f: impl Fn(usize) -> Result<f64>) -> Result<Self> {
        let points = leaves
            .iter()
            .map(|&l| f(l).map(|ratio| RatioPoint { leaves: l, ratio }))
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    pub fn points(&self) -> &[RatioPoint] {
        &self.points
    }

    /// `|ratio - 1|` at each point.
    pub fn deviations(&self) -> Vec<f64> {
        self.points.iter().map(|p| (p.ratio - 1.0).abs()).collect()
    }

    pub fn deviation_strictly_decreasing(&self) -> bool {
        self.deviations().windows(2).all(|w| w[1] < w[0])
    }

    pub fn supremum(&self) -> Option<f64> {
        self.points.iter().map(|p| p.ratio).reduce(f64::max)
    }
}

/// Star count over the leading asymptotic term, for each `ℓ` in the ladder.
pub fn ratio_star_vs_asymptotic(reticulations: usize, leaves: &[usize]) -> Result<RatioSeries> {
    RatioSeries::collect(leaves, |l| {
        if l <= reticulations {
            return domain("each leaf count must exceed k");
        }
        let exact = log_big(&star_count(l, reticulations)?)?;
        let asym = log_asymptotic_tc(l, reticulations)?.ln().expect("nonzero");
        Ok((exact - asym).exp())
    })
}

/// `ln( d_k/√π · 4^(ℓ-1) · ℓ^(2k-3/2) )`, the Laplace estimate of
/// [`sigma_sum`].
pub fn log_laplace_estimate(leaves: usize, reticulations: usize) -> Result<f64> {
    let (l, k) = (leaves as f64, reticulations as f64);
    Ok(d_closed(reticulations)?.ln() - 0.5 * PI.ln() + (l - 1.0) * 4f64.ln() + (2.0 * k - 1.5) * l.ln())
}

/// The inner sum of the star count over its Laplace estimate.
pub fn laplace_ratio(leaves: usize, reticulations: usize) -> Result<f64> {
    if reticulations == 0 || leaves <= reticulations {
        return domain("need 1 <= k < leaves");
    }
    let exact = log_big(&sigma_sum(leaves, reticulations)?)?;
    Ok((exact - log_laplace_estimate(leaves, reticulations)?).exp())
}

/// `ln( 2√(2π) · (2e)^(-ℓ) · ℓ^(ℓ+1/2) )`, the Stirling estimate of
/// `ℓ!/2^(ℓ-1)`. The star-count prefactor divides both by `(k-1)!`.
pub fn log_prefactor_estimate(leaves: usize) -> f64 {
    let l = leaves as f64;
    (2.0 * (2.0 * PI).sqrt()).ln() - l * (LN_2 + 1.0) + (l + 0.5) * l.ln()
}

/// `ℓ!/(2^(ℓ-1)(k-1)!)` over its Stirling estimate. The `(k-1)!` cancels,
/// so the ratio does not depend on `k >= 1`.
pub fn prefactor_ratio(leaves: usize, reticulations: usize) -> Result<f64> {
    if leaves < 2 || reticulations == 0 {
        return domain("need leaves >= 2 and k >= 1");
    }
    let exact = log_big(&*factorial(leaves)?)? - (leaves as f64 - 1.0) * LN_2;
    Ok((exact - log_prefactor_estimate(leaves)).exp())
}

/// `ln( (2/e)^ℓ ℓ^(ℓ+k-1) )`, the growth scale of one-component counts.
pub fn log_o_scale(leaves: usize, reticulations: usize) -> f64 {
    let l = leaves as f64;
    l * (LN_2 - 1.0) + (l + reticulations as f64 - 1.0) * l.ln()
}

/// One-component counts over `(2/e)^ℓ ℓ^(ℓ+k-1)`; bounded if the big-O
/// estimate holds.
pub fn o_bound_diagnostic(reticulations: usize, leaves: &[usize]) -> Result<RatioSeries> {
    if reticulations == 0 {
        return domain("k must be >= 1");
    }
    RatioSeries::collect(leaves, |l| {
        let exact = log_big(&one_component_count(l, reticulations)?)?;
        Ok((exact - log_o_scale(l, reticulations)).exp())
    })
}

/// `ln c_k`, the constant part of [`log_asymptotic_tc`].
pub fn ln_c_constant(reticulations: usize) -> Result<f64> {
    Ok(c_constant(reticulations)?.ln())
}
