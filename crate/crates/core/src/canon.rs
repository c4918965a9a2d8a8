//! Canonical labeling of small vertex-colored directed multigraphs.
//!
//! The graphs handled here have at most a few dozen vertices, so the search
//! is a plain individualization/refinement tree without automorphism pruning:
//! every leaf of the search tree is encoded and the lexicographically smallest
//! encoding wins. The encoding of the winning leaf is the canonical form.

use std::fmt;

/// Byte string identifying a colored multigraph up to color-preserving
/// isomorphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Lowercase hex rendering, used as a map key in JSON output.
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Vertex rank with sorted (rank, multiplicity) lists of out- and in-neighbours.
type RefineKey = (u32, Vec<(u32, u8)>, Vec<(u32, u8)>);

/// Directed multigraph with an initial vertex coloring.
///
/// Colors must be chosen by the caller in an isomorphism-invariant way (for
/// example from vertex kinds and leaf labels); they are part of the encoding.
#[derive(Clone, Debug)]
pub struct ColoredDigraph {
    n: usize,
    colors: Vec<u32>,
    adj: Vec<u8>,
}

impl ColoredDigraph {
    pub fn new(colors: Vec<u32>) -> Self {
        let n = colors.len();
        ColoredDigraph {
            n,
            colors,
            adj: vec![0; n * n],
        }
    }

    /// Adds one arc `u -> v`; repeated calls raise the multiplicity.
    pub fn add_arc(&mut self, u: usize, v: usize) {
        let idx = u * self.n + v;
        self.adj[idx] = self.adj[idx].saturating_add(1);
    }

    pub fn set_multiplicity(&mut self, u: usize, v: usize, mult: u8) {
        self.adj[u * self.n + v] = mult;
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn mult(&self, u: usize, v: usize) -> u8 {
        self.adj[u * self.n + v]
    }

    /// Returns the canonical form together with the canonical order:
    /// `order[pos]` is the vertex placed at position `pos`.
    pub fn canonical_labeling(&self) -> (CanonicalForm, Vec<usize>) {
        let mut ranks = rank_keys(&self.colors);
        self.refine(&mut ranks);
        let mut best: Option<(Vec<u8>, Vec<usize>)> = None;
        self.search(ranks, &mut best);
        let (bytes, order) = best.expect("search visits at least one leaf");
        (CanonicalForm(bytes), order)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        self.canonical_labeling().0
    }

    fn search(&self, ranks: Vec<u32>, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
        let Some(cell) = first_nontrivial_cell(&ranks) else {
            let mut order: Vec<usize> = (0..self.n).collect();
            order.sort_by_key(|&v| ranks[v]);
            let code = self.encode(&order);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                *best = Some((code, order));
            }
            return;
        };
        for v in (0..self.n).filter(|&v| ranks[v] == cell) {
            let keys: Vec<(u32, u8)> = ranks
                .iter()
                .enumerate()
                .map(|(u, &r)| (r, u8::from(u != v)))
                .collect();
            let mut child = rank_keys(&keys);
            self.refine(&mut child);
            self.search(child, best);
        }
    }

    fn refine(&self, ranks: &mut Vec<u32>) {
        let mut classes = count_classes(ranks);
        loop {
            let keys: Vec<RefineKey> = (0..self.n)
                .map(|v| {
                    let mut out: Vec<(u32, u8)> = (0..self.n)
                        .filter(|&w| self.mult(v, w) > 0)
                        .map(|w| (ranks[w], self.mult(v, w)))
                        .collect();
                    let mut inc: Vec<(u32, u8)> = (0..self.n)
                        .filter(|&w| self.mult(w, v) > 0)
                        .map(|w| (ranks[w], self.mult(w, v)))
                        .collect();
                    out.sort_unstable();
                    inc.sort_unstable();
                    (ranks[v], out, inc)
                })
                .collect();
            let next = rank_keys(&keys);
            let next_classes = count_classes(&next);
            *ranks = next;
            if next_classes == classes {
                return;
            }
            classes = next_classes;
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let mut code = Vec::with_capacity(4 + 4 * self.n + self.n * self.n);
        code.extend_from_slice(&(self.n as u32).to_be_bytes());
        for &v in order {
            code.extend_from_slice(&self.colors[v].to_be_bytes());
        }
        for &u in order {
            for &v in order {
                code.push(self.mult(u, v));
            }
        }
        code
    }
}

fn rank_keys<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present") as u32)
        .collect()
}

fn count_classes(ranks: &[u32]) -> usize {
    ranks.iter().copied().max().map_or(0, |m| m as usize + 1)
}

fn first_nontrivial_cell(ranks: &[u32]) -> Option<u32> {
    let mut sizes = vec![0usize; count_classes(ranks)];
    for &r in ranks {
        sizes[r as usize] += 1;
    }
    sizes.iter().position(|&s| s > 1).map(|c| c as u32)
}
