//! Exhaustive isomorph-free graph enumeration at desk scale.
//!
//! Level-wise augmentation: every graph on `k+1` vertices arises from some
//! graph on `k` vertices by appending one vertex joined to a subset of the
//! old ones, so extending every canonical order-`k` graph by every attachment
//! subset and deduplicating by canonical key covers all isomorphism classes.
//! Levels are kept as packed canonical keys (one `u64` per graph), which
//! bounds memory at roughly 100 MB for the hardest supported order.

use crate::canon::{canonical_key, graph_from_key, KEY_MAX_ORDER};
use crate::graph::Graph;
use std::collections::HashSet;
use thiserror::Error;

/// Largest supported order: the level representation requires canonical
/// keys (cap [`KEY_MAX_ORDER`]), and the next order up holds over a billion
/// graphs anyway.
pub const ENUMERATE_MAX_ORDER: usize = 10;
const _: () = assert!(ENUMERATE_MAX_ORDER <= KEY_MAX_ORDER);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration supports orders 1..={cap}, got {order}")]
    OrderOutOfRange { order: usize, cap: usize },
}

/// Canonical keys of all isomorphism classes of simple graphs on `n`
/// vertices, sorted. Decode with [`graph_from_key`].
pub fn enumerate_graph_keys(n: usize) -> Result<Vec<u64>, EnumerateError> {
    if n == 0 || n > ENUMERATE_MAX_ORDER {
        return Err(EnumerateError::OrderOutOfRange { order: n, cap: ENUMERATE_MAX_ORDER });
    }
    let mut level: Vec<u64> = vec![canonical_key(&Graph::empty(1)).unwrap()];
    for size in 2..=n {
        let mut seen: HashSet<u64> = HashSet::with_capacity(level.len() * 8);
        for &key in &level {
            let base = graph_from_key(key);
            let parent_order = size - 1;
            let edges_base: Vec<(usize, usize)> = base.edges().collect();
            for attach in 0u32..(1 << parent_order) {
                let mut edges = edges_base.clone();
                for v in 0..parent_order {
                    if attach & (1 << v) != 0 {
                        edges.push((v, parent_order));
                    }
                }
                let extended = Graph::from_edges(size, &edges).unwrap();
                seen.insert(canonical_key(&extended).unwrap());
            }
        }
        level = seen.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level)
}

/// All isomorphism classes of simple graphs on `n` vertices, canonically
/// labeled.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    Ok(enumerate_graph_keys(n)?
        .into_iter()
        .map(graph_from_key)
        .collect())
}

/// The connected classes only.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    Ok(enumerate_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}
