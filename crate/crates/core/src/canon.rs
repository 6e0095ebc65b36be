//! Canonical labeling by individualization–refinement.
//!
//! Two graphs are isomorphic exactly when their canonical forms are equal.
//! The canonical form is the relabeling that maximizes the upper-triangle
//! adjacency bitstring (row-major, most significant bit first), found by:
//!
//! 1. color refinement: vertices are repeatedly split by the multiset of
//!    their neighbors' colors until stable, with cells ordered by a
//!    label-invariant signature;
//! 2. individualization: the first vertex class that refinement cannot split
//!    is branched on, one subtree per member — except that *twins* (vertices
//!    with identical neighborhoods outside the pair) generate identical
//!    subtrees and only the first is explored.
//!
//! Hosts are capped at 64 vertices so adjacency rows fit machine words; the
//! enumeration workloads this module serves stop well below that.

use crate::graph::Graph;
use thiserror::Error;

pub const CANON_MAX_ORDER: usize = 64;
/// Orders whose canonical adjacency bits (plus the order itself) pack into a
/// single `u64` key: C(11,2) = 55 bits leaves room for the order tag.
pub const KEY_MAX_ORDER: usize = 11;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("canonical labeling supports up to {cap} vertices, got {order}")]
    OrderTooLarge { order: usize, cap: usize },
}

/// Permutation `old label -> new label` whose relabeling is the canonical
/// form of `g`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, CanonError> {
    let n = g.order();
    if n > CANON_MAX_ORDER {
        return Err(CanonError::OrderTooLarge { order: n, cap: CANON_MAX_ORDER });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | 1 << u))
        .collect();
    let mut best: Option<(Vec<u64>, Vec<usize>)> = None;
    let mut search = CanonSearch { adj: &adj, n, best: &mut best };
    let initial: Vec<Vec<usize>> = vec![(0..n).collect()];
    search.descend(refine(&adj, n, initial));
    Ok(best.expect("search visits at least one leaf").1)
}

/// The canonically labeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph, CanonError> {
    Ok(g.relabeled(&canonical_labeling(g)?))
}

/// Canonical graph6 line — equal strings iff isomorphic graphs.
pub fn canonical_g6(g: &Graph) -> Result<String, CanonError> {
    Ok(crate::graph6::write_graph6(&canonical_form(g)?))
}

/// One-word canonical identity for small graphs: the order in the top bits,
/// the canonical adjacency triangle below. Equal keys iff isomorphic.
pub fn canonical_key(g: &Graph) -> Result<u64, CanonError> {
    let n = g.order();
    if n > KEY_MAX_ORDER {
        return Err(CanonError::OrderTooLarge { order: n, cap: KEY_MAX_ORDER });
    }
    let canon = canonical_form(g)?;
    let mut bits = 0u64;
    let mut index = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if canon.has_edge(u, v) {
                bits |= 1 << index;
            }
            index += 1;
        }
    }
    Ok(((n as u64) << 55) | bits)
}

/// Rebuilds the canonical graph packed by [`canonical_key`].
pub fn graph_from_key(key: u64) -> Graph {
    let n = (key >> 55) as usize;
    let mut edges = Vec::new();
    let mut index = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if key & (1 << index) != 0 {
                edges.push((u, v));
            }
            index += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("key encodes a valid graph")
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonError> {
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

// ---------------------------------------------------------------------------
// Search internals
// ---------------------------------------------------------------------------

struct CanonSearch<'a> {
    adj: &'a [u64],
    n: usize,
    best: &'a mut Option<(Vec<u64>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>) {
        if let Some(target) = cells.iter().position(|c| c.len() > 1) {
            let members = cells[target].clone();
            let mut tried: Vec<usize> = Vec::new();
            for &v in &members {
                // Twins generate isomorphic subtrees: branch once per class.
                let is_twin_of_tried = tried.iter().any(|&u| {
                    (self.adj[u] & !(1 << v)) == (self.adj[v] & !(1 << u))
                });
                tried.push(v);
                if is_twin_of_tried {
                    continue;
                }
                let mut split: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
                for (i, cell) in cells.iter().enumerate() {
                    if i == target {
                        split.push(vec![v]);
                        split.push(cell.iter().copied().filter(|&u| u != v).collect());
                    } else {
                        split.push(cell.clone());
                    }
                }
                self.descend(refine(self.adj, self.n, split));
            }
            return;
        }
        // Discrete partition: new label = cell position.
        let mut label = vec![0usize; self.n];
        for (new, cell) in cells.iter().enumerate() {
            label[cell[0]] = new;
        }
        let bits = triangle_bits(self.adj, self.n, &label);
        let better = match self.best {
            None => true,
            Some((incumbent, _)) => bits > *incumbent,
        };
        if better {
            *self.best = Some((bits, label));
        }
    }
}

/// Upper-triangle adjacency bits under `label`, packed MSB-first.
fn triangle_bits(adj: &[u64], n: usize, label: &[usize]) -> Vec<u64> {
    let total = n * (n - 1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut old_of = vec![0usize; n];
    for v in 0..n {
        old_of[label[v]] = v;
    }
    let mut index = 0;
    for a in 0..n {
        let row = adj[old_of[a]];
        for &old_b in &old_of[(a + 1)..n] {
            if row & (1 << old_b) != 0 {
                bits[index / 64] |= 1u64 << (63 - index % 64);
            }
            index += 1;
        }
    }
    bits
}

/// Color refinement to a stable (equitable) ordered partition. Cells are
/// ordered by a signature built only from label-invariant data, so the
/// ordering itself is canonical.
fn refine(adj: &[u64], n: usize, cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let mut color = vec![0usize; n];
    let mut cells = cells;
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v] = c;
            }
        }
        // Signature: own color, then sorted neighbor colors.
        let mut sigs: Vec<(Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut sig = Vec::with_capacity(adj[v].count_ones() as usize + 1);
                sig.push(color[v]);
                let mut rest = adj[v];
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    sig.push(color[u]);
                }
                sig[1..].sort_unstable();
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        let mut open_sig: Option<Vec<usize>> = None;
        for (sig, v) in sigs {
            if open_sig.as_ref() == Some(&sig) {
                next.last_mut().unwrap().push(v);
            } else {
                next.push(vec![v]);
                open_sig = Some(sig);
            }
        }
        // Signatures lead with the old color, so cells only ever split;
        // an unchanged cell count means the partition is stable.
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}
