//! Brute-force enumeration of tree-child networks for small parameters.
//!
//! This crate deliberately shares no code with the closed-form counts: it
//! only builds networks, deduplicates them by canonical form and reads off
//! their properties, so it can serve as an independent check on formulas.

mod generate;

use std::collections::BTreeMap;
use std::io::{self, Write};

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;
use tcnet_core::{CanonicalForm, ComponentGraph, Network, NetworkError, VertexKind};
use thiserror::Error;

use generate::{shapes, Budget};

/// Default bound on `ℓ + k` for the full enumeration.
pub const DEFAULT_MAX_SIZE: usize = 7;
/// Default bound on `ℓ + k` for one-component enumeration, which is far
/// more constrained and covers `(5, 4)`.
pub const DEFAULT_MAX_ONE_COMPONENT_SIZE: usize = 9;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("{0}")]
    Domain(String),
    #[error("ℓ+k = {size} exceeds the oracle limit of {limit}")]
    ResourceLimit { size: usize, limit: usize },
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    pub max_size: usize,
    pub max_one_component_size: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Keep every network (in canonical order) in the result.
    pub keep_networks: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_size: DEFAULT_MAX_SIZE,
            max_one_component_size: DEFAULT_MAX_ONE_COMPONENT_SIZE,
            threads: None,
            keep_networks: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub leaves: usize,
    pub reticulations: usize,
    pub count: BigUint,
    pub normal_count: BigUint,
    /// Network counts keyed by the canonical form of their component graph.
    pub by_component_graph: BTreeMap<CanonicalForm, BigUint>,
    pub component_graphs: BTreeMap<CanonicalForm, ComponentGraph>,
    /// Canonicalized networks sorted by canonical form, if requested.
    pub networks: Option<Vec<Network>>,
}

impl EnumerationResult {
    /// Networks whose component graph is the star; `None` without
    /// reticulations, where no star exists.
    pub fn star_share(&self) -> Option<BigUint> {
        let star = ComponentGraph::star(self.reticulations).ok()?;
        Some(
            self.by_component_graph
                .get(&star.canonical_form())
                .cloned()
                .unwrap_or_default(),
        )
    }

    /// Networks from every component graph other than the star.
    pub fn residual(&self) -> Option<BigUint> {
        self.star_share().map(|s| &self.count - s)
    }

    /// Writes one network JSON object per line. Needs `keep_networks`.
    pub fn write_jsonl(&self, mut out: impl Write) -> io::Result<()> {
        let nets = self.networks.as_ref().ok_or_else(|| {
            io::Error::new(io::ErrorKind::InvalidInput, "networks were not kept")
        })?;
        for n in nets {
            writeln!(out, "{}", n.to_json())?;
        }
        Ok(())
    }
}

fn check(leaves: usize, reticulations: usize, limit: usize) -> Result<()> {
    if leaves == 0 {
        return Err(OracleError::Domain("leaves must be >= 1".into()));
    }
    if reticulations >= 1 && reticulations >= leaves {
        return Err(OracleError::Domain("k must be < leaves".into()));
    }
    let size = leaves + reticulations;
    if size > limit {
        return Err(OracleError::ResourceLimit { size, limit });
    }
    Ok(())
}

fn budget(leaves: usize, reticulations: usize) -> Budget {
    Budget {
        leaves,
        tree: leaves + reticulations - 1,
        retics: reticulations,
    }
}

fn run<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| OracleError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// Every labeling of every shape, deduplicated by canonical form. `keep`
/// filters the labelings by the permutation applied to the shape's labels.
fn labeled(shapes: &[Network], leaves: usize, keep: impl Fn(&Network, &[u32]) -> bool + Sync) -> BTreeMap<CanonicalForm, Network> {
    shapes
        .par_iter()
        .map(|shape| {
            let mut seen = BTreeMap::new();
            for perm in (1..=leaves as u32).permutations(leaves) {
                if !keep(shape, &perm) {
                    continue;
                }
                let net = shape.with_labels(|x| perm[x as usize - 1]);
                seen.entry(net.canonical_form()).or_insert(net);
            }
            seen
        })
        .reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            a
        })
}

/// All tree-child networks with `ℓ` labeled leaves and `k` reticulations, up
/// to isomorphism fixing the labels.
pub fn enumerate_tree_child(leaves: usize, reticulations: usize, config: &OracleConfig) -> Result<EnumerationResult> {
    check(leaves, reticulations, config.max_size)?;
    run(config.threads, || {
        let shapes = shapes(budget(leaves, reticulations), false);
        let nets = labeled(&shapes, leaves, |_, _| true);
        summarize(leaves, reticulations, nets, config.keep_networks)
    })?
}

fn summarize(
    leaves: usize,
    reticulations: usize,
    nets: BTreeMap<CanonicalForm, Network>,
    keep: bool,
) -> Result<EnumerationResult> {
    let props: Vec<(bool, ComponentGraph)> = nets
        .par_iter()
        .map(|(_, n)| Ok((n.is_normal()?, n.component_graph()?)))
        .collect::<Result<_>>()?;
    let mut normal = 0u64;
    let mut by_cg: BTreeMap<CanonicalForm, BigUint> = BTreeMap::new();
    let mut cgs = BTreeMap::new();
    for (is_normal, cg) in props {
        normal += u64::from(is_normal);
        let key = cg.canonical_form();
        *by_cg.entry(key.clone()).or_default() += 1u32;
        cgs.entry(key).or_insert_with(|| cg.canonicalized());
    }
    let count = BigUint::from(nets.len());
    let networks = keep.then(|| nets.values().map(Network::canonicalized).collect());
    Ok(EnumerationResult {
        leaves,
        reticulations,
        count,
        normal_count: BigUint::from(normal),
        by_component_graph: by_cg,
        component_graphs: cgs,
        networks,
    })
}

/// Tree-child networks in which every reticulation's child is a leaf and
/// those leaves carry exactly the labels `1..k`.
pub fn enumerate_one_component(leaves: usize, reticulations: usize, config: &OracleConfig) -> Result<BigUint> {
    check(leaves, reticulations, config.max_one_component_size)?;
    let k = reticulations as u32;
    run(config.threads, || {
        let shapes = shapes(budget(leaves, reticulations), true);
        let nets = labeled(&shapes, leaves, |shape, perm| {
            below_reticulations(shape).iter().all(|&l| perm[l as usize - 1] <= k)
        });
        BigUint::from(nets.len())
    })
}

/// Labels of the leaves whose parent is a reticulation.
fn below_reticulations(net: &Network) -> Vec<u32> {
    net.edges()
        .iter()
        .filter(|&&(p, _)| net.kind(p) == VertexKind::Reticulation)
        .filter_map(|&(_, c)| net.vertices()[c].label)
        .collect()
}

/// [`EnumerationResult::star_share`] for a fresh enumeration.
pub fn star_share(leaves: usize, reticulations: usize, config: &OracleConfig) -> Result<Option<BigUint>> {
    Ok(enumerate_tree_child(leaves, reticulations, config)?.star_share())
}

/// [`EnumerationResult::residual`] for a fresh enumeration.
pub fn residual(leaves: usize, reticulations: usize, config: &OracleConfig) -> Result<Option<BigUint>> {
    Ok(enumerate_tree_child(leaves, reticulations, config)?.residual())
}
