//! Upper bound on the networks built over a reduced component graph.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::counts::{one_component_count, phylo_tree_count};
use crate::factorial::factorial;
use crate::{CountError, Result};

/// `(t, β_1..β_t, δ_0..δ_t)` for one reduced component graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSignature {
    pub t: usize,
    pub betas: Vec<usize>,
    pub deltas: Vec<u32>,
}

impl BoundSignature {
    fn check(&self, k: usize) -> Result<()> {
        let bad = |msg: String| Err(CountError::Signature(msg));
        if self.t < 1 || self.t >= k {
            return bad(format!("need 1 <= t < k, got t={} k={k}", self.t));
        }
        if self.betas.len() != self.t {
            return bad(format!("need t={} child sizes, got {}", self.t, self.betas.len()));
        }
        if self.deltas.len() != self.t + 1 {
            return bad(format!("need t+1={} deltas, got {}", self.t + 1, self.deltas.len()));
        }
        let m: usize = self.betas.iter().sum();
        if self.t + m > k {
            return bad(format!("need t+m <= k, got t={} m={m} k={k}", self.t));
        }
        let total: usize = self.deltas.iter().map(|&d| d as usize).sum();
        if total != 2 * (k - self.t - m) {
            return bad(format!(
                "need sum of deltas = 2(k-t-m) = {}, got {total}",
                2 * (k - self.t - m)
            ));
        }
        Ok(())
    }
}

/// Known values of `TC_{ℓ,k}`, keyed by `(leaves, reticulations)`.
#[derive(Clone, Debug, Default)]
pub struct TcTable {
    values: HashMap<(usize, usize), BigUint>,
}

impl TcTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// A table holding the tree counts `TC_{ℓ,0}` for `ℓ <= max_leaves`.
    pub fn with_trees(max_leaves: usize) -> Result<Self> {
        let mut table = Self::new();
        for l in 1..=max_leaves {
            table.insert(l, 0, phylo_tree_count(l)?);
        }
        Ok(table)
    }

    pub fn insert(&mut self, leaves: usize, reticulations: usize, count: BigUint) {
        self.values.insert((leaves, reticulations), count);
    }

    /// The stored count; zero without lookup when `k >= ℓ`, since no
    /// tree-child network has that many reticulations.
    pub fn get(&self, leaves: usize, reticulations: usize) -> Result<BigUint> {
        if reticulations >= 1 && reticulations >= leaves {
            return Ok(BigUint::zero());
        }
        self.values
            .get(&(leaves, reticulations))
            .cloned()
            .ok_or(CountError::MissingTableEntry {
                leaves,
                reticulations,
            })
    }
}

/// `U_{ℓ,k} = Σ multinomial(ℓ; ℓ_0..ℓ_t) O_{ℓ_0+t,t} Π TC_{ℓ_j,β_j} Π ℓ_j^{δ_j}`
/// over compositions of `ℓ` into `t+1` positive parts.
pub fn upper_bound_u(leaves: usize, reticulations: usize, sig: &BoundSignature, table: &TcTable) -> Result<BigUint> {
    sig.check(reticulations)?;
    let parts = sig.t + 1;
    if leaves < parts {
        return Ok(BigUint::zero());
    }
    let lf = factorial(leaves)?;
    let mut total = BigUint::zero();
    let mut comp = vec![1usize; parts];
    comp[0] = leaves - sig.t;
    loop {
        total += term(&comp, sig, table, &lf)?;
        if !next_composition(&mut comp) {
            break;
        }
    }
    Ok(total)
}

fn term(comp: &[usize], sig: &BoundSignature, table: &TcTable, lf: &BigUint) -> Result<BigUint> {
    let mut den = BigUint::one();
    for &part in comp {
        den *= &*factorial(part)?;
    }
    let mut value = lf / den * one_component_count(comp[0] + sig.t, sig.t)?;
    for (j, &beta) in sig.betas.iter().enumerate() {
        if value.is_zero() {
            return Ok(value);
        }
        value *= table.get(comp[j + 1], beta)?;
    }
    for (&part, &delta) in comp.iter().zip(&sig.deltas) {
        value *= BigUint::from(part).pow(delta);
    }
    Ok(value)
}

/// Steps through compositions with positive parts in reverse lexicographic
/// order, starting from `(n - t, 1, .., 1)`.
fn next_composition(comp: &mut [usize]) -> bool {
    let n = comp.len();
    // rightmost part, excluding the last, that can give one to its right
    let Some(i) = (0..n - 1).rev().find(|&i| comp[i] > 1) else {
        return false;
    };
    comp[i] -= 1;
    let rest: usize = comp[i + 1..].iter().sum::<usize>() + 1;
    let tail = n - i - 1;
    comp[i + 1] = rest - (tail - 1);
    for c in &mut comp[i + 2..] {
        *c = 1;
    }
    true
}
