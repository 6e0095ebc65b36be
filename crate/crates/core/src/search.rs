//! Path-rewiring moves, improving-move local search, and exhaustive extremal
//! search over minor-free graph classes.
//!
//! The rewiring moves act on an induced path that hangs off the set of
//! dominating vertices (vertices adjacent to everything else).  Each move
//! swaps path edges for chords so that the edge count is preserved while the
//! spectral radius does not decrease; iterating them converts long paths into
//! disjoint triangles, which is exactly the shape of the extremal family.
//! Single-edge additions and edge swaps complete the move set for local
//! search, and [`extremal_search`] scans every isomorphism class at a given
//! order to find the true maximum.

use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

use crate::canon::{canonical_g6, graph_from_key, CanonError};
use crate::enumerate::{enumerate_graph_keys, EnumerateError};
use crate::graph::{build_extremal_family, Graph, GraphError};
use crate::minor::{has_minor, MinorError, MinorPattern};
use crate::spectral::{q_radius, SpectralError};

// ---------------------------------------------------------------------------
// Errors and tolerances
// ---------------------------------------------------------------------------

/// A move must beat the current radius by this margin to count as improving.
pub const IMPROVEMENT_MARGIN: f64 = 1e-8;

/// Graphs within this distance of the maximum are reported as co-maximizers.
pub const TIE_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("move inapplicable: {0}")]
    MoveInapplicable(String),
    #[error("start graph already contains a {0} minor")]
    StartHasMinor(MinorPattern),
    #[error("no {pattern}-minor-free graph of order {n} exists")]
    NoMinorFreeGraphs { pattern: MinorPattern, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Minor(#[from] MinorError),
}

// ---------------------------------------------------------------------------
// Rewiring moves
// ---------------------------------------------------------------------------

/// The three edge-preserving path rewires.
///
/// With the path written `v_1, ..., v_h` (1-indexed):
/// - `Case2` requires `h = 4` and replaces `v_1v_2` by `v_2v_4`.
/// - `Case3Odd` requires odd `h = 2p+1 >= 5`, `Case3Even` even `h = 2p >= 6`;
///   both replace `{v_{p-1}v_p, v_{p+2}v_{p+3}}` by `{v_pv_{p+2}, v_{p-1}v_{p+3}}`,
///   splitting a triangle off the path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RewireMove {
    Case2,
    Case3Odd,
    Case3Even,
}

impl fmt::Display for RewireMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RewireMove::Case2 => "case2",
            RewireMove::Case3Odd => "case3-odd",
            RewireMove::Case3Even => "case3-even",
        };
        f.write_str(name)
    }
}

/// Index pairs into a path's vertex list, naming edges by position.
type PositionPairs = Vec<(usize, usize)>;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unrecognized rewire move {0:?} (expected case2, case3-odd, case3-even)")]
pub struct RewireParseError(pub String);

impl FromStr for RewireMove {
    type Err = RewireParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "case2" => Ok(RewireMove::Case2),
            "case3-odd" => Ok(RewireMove::Case3Odd),
            "case3-even" => Ok(RewireMove::Case3Even),
            _ => Err(RewireParseError(s.to_string())),
        }
    }
}

impl RewireMove {
    /// Length constraint on the path the move applies to.
    fn length_ok(self, h: usize) -> bool {
        match self {
            RewireMove::Case2 => h == 4,
            RewireMove::Case3Odd => h >= 5 && h % 2 == 1,
            RewireMove::Case3Even => h >= 6 && h.is_multiple_of(2),
        }
    }

    /// Edge swap performed by the move, as 0-based positions into the path:
    /// `(removed, added)`.
    fn swap_positions(self, h: usize) -> (PositionPairs, PositionPairs) {
        match self {
            RewireMove::Case2 => (vec![(0, 1)], vec![(1, 3)]),
            RewireMove::Case3Odd | RewireMove::Case3Even => {
                let p = if h % 2 == 1 { (h - 1) / 2 } else { h / 2 };
                (
                    vec![(p - 2, p - 1), (p + 1, p + 2)],
                    vec![(p - 1, p + 1), (p - 2, p + 2)],
                )
            }
        }
    }
}

/// Checks that `path` lists an induced path of `g` whose only outside
/// neighbors are dominating vertices — i.e. a path component of `g` minus its
/// dominating set.
fn check_path_setting(g: &Graph, path: &[usize]) -> Result<(), SearchError> {
    let n = g.order();
    let h = path.len();
    let mut seen = vec![false; n];
    for &v in path {
        if v >= n {
            return Err(SearchError::MoveInapplicable(format!(
                "path vertex {v} out of range for order {n}"
            )));
        }
        if seen[v] {
            return Err(SearchError::MoveInapplicable(format!(
                "path vertex {v} listed twice"
            )));
        }
        seen[v] = true;
    }
    for i in 0..h {
        for j in (i + 1)..h {
            let adjacent = g.has_edge(path[i], path[j]);
            if j == i + 1 && !adjacent {
                return Err(SearchError::MoveInapplicable(format!(
                    "consecutive path vertices {} and {} are not adjacent",
                    path[i],
                    path[j]
                )));
            }
            if j > i + 1 && adjacent {
                return Err(SearchError::MoveInapplicable(format!(
                    "path is not induced: chord between {} and {}",
                    path[i],
                    path[j]
                )));
            }
        }
    }
    for &v in path {
        for &w in g.neighbors(v) {
            let w = w as usize;
            if !seen[w] && g.degree(w) != n - 1 {
                return Err(SearchError::MoveInapplicable(format!(
                    "path vertex {v} has non-dominating outside neighbor {w}"
                )));
            }
        }
    }
    Ok(())
}

/// Applies a rewiring move to the induced path `path` of `g`.
///
/// The path must be a path component of `g` minus its dominating vertices and
/// must have the length/parity the move requires; otherwise the move is
/// rejected as inapplicable.  The result has exactly the same number of edges.
pub fn rewire_path_move(g: &Graph, path: &[usize], mv: RewireMove) -> Result<Graph, SearchError> {
    let h = path.len();
    if !mv.length_ok(h) {
        return Err(SearchError::MoveInapplicable(format!(
            "{mv} does not apply to a path of {h} vertices"
        )));
    }
    check_path_setting(g, path)?;
    let (removed, added) = mv.swap_positions(h);
    let mut out = g.clone();
    for (i, j) in removed {
        out = out.without_edge(path[i], path[j])?;
    }
    for (i, j) in added {
        out = out.with_edge(path[i], path[j])?;
    }
    debug_assert_eq!(out.size(), g.size());
    Ok(out)
}

/// Change in the Rayleigh quotient `x^T Q x` caused by removing and adding the
/// listed edges, for a fixed vector `x`: each edge `ab` contributes
/// `(x_a + x_b)^2`.
///
/// With `x` the unit Perron vector of the original graph this is a lower bound
/// on `q(after) - q(before)` whenever it is nonnegative.
pub fn rayleigh_shift_bound(x: &[f64], removed: &[(usize, usize)], added: &[(usize, usize)]) -> f64 {
    let term = |(a, b): &(usize, usize)| {
        let s = x[*a] + x[*b];
        s * s
    };
    added.iter().map(term).sum::<f64>() - removed.iter().map(term).sum::<f64>()
}

// ---------------------------------------------------------------------------
// Improving-move search
// ---------------------------------------------------------------------------

/// One candidate move in the local-search move set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum SearchMove {
    Rewire { path: Vec<usize>, kind: RewireMove },
    AddEdge { u: usize, v: usize },
    SwapEdge { removed: (usize, usize), added: (usize, usize) },
}

impl fmt::Display for SearchMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchMove::Rewire { path, kind } => write!(f, "rewire {kind} on {path:?}"),
            SearchMove::AddEdge { u, v } => write!(f, "add edge {u}-{v}"),
            SearchMove::SwapEdge { removed, added } => write!(
                f,
                "swap edge {}-{} for {}-{}",
                removed.0, removed.1, added.0, added.1
            ),
        }
    }
}

/// Which move classes an improving-move scan considers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveSet {
    pub rewires: bool,
    pub additions: bool,
    pub swaps: bool,
}

impl MoveSet {
    /// Rewires, single-edge additions, and edge swaps.
    pub fn full() -> Self {
        MoveSet {
            rewires: true,
            additions: true,
            swaps: true,
        }
    }

    /// Rewires and single-edge additions only (the moves used by the
    /// stability sweeps).
    pub fn rewires_and_additions() -> Self {
        MoveSet {
            rewires: true,
            additions: true,
            swaps: false,
        }
    }
}

/// An improving move found by [`find_improving_move`], together with the graph
/// it produces and that graph's spectral radius.
#[derive(Clone, Debug)]
pub struct ImprovingMove {
    pub mv: SearchMove,
    pub graph: Graph,
    pub q: f64,
}

/// Returns the path components of `g` minus its dominating vertices, each as
/// an endpoint-to-endpoint vertex sequence.  Components that are not paths
/// (isolated vertices, cycles, branching trees, ...) are skipped, as are paths
/// shorter than 4 vertices, which no rewire move applies to.
fn rewirable_paths(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let dominating: Vec<bool> = (0..n).map(|v| g.degree(v) == n - 1).collect();
    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    for start in 0..n {
        if dominating[start] || seen[start] {
            continue;
        }
        // Collect the component of `start` in g minus the dominating set.
        let mut comp = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &w in g.neighbors(v) {
                let w = w as usize;
                if !dominating[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        if comp.len() < 4 {
            continue;
        }
        // Inner degree profile of a path: two endpoints of degree 1, the rest
        // of degree 2.
        let inner_degree = |v: usize| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| !dominating[w as usize])
                .count()
        };
        let endpoints: Vec<usize> = comp.iter().copied().filter(|&v| inner_degree(v) == 1).collect();
        if endpoints.len() != 2 || comp.iter().any(|&v| inner_degree(v) > 2) {
            continue;
        }
        // Walk from one endpoint to the other.
        let mut order = vec![endpoints[0]];
        let mut prev = usize::MAX;
        while order.len() < comp.len() {
            let v = *order.last().unwrap();
            let next = g
                .neighbors(v)
                .iter()
                .map(|&w| w as usize)
                .find(|&w| !dominating[w] && w != prev);
            match next {
                Some(w) => {
                    prev = v;
                    order.push(w);
                }
                None => break,
            }
        }
        if order.len() == comp.len() {
            paths.push(order);
        }
    }
    paths
}

/// Rewire moves applicable to `g` (paths hanging off the dominating set, in
/// both orientations where orientation matters).
fn rewire_candidates(g: &Graph) -> Vec<(Vec<usize>, RewireMove)> {
    let mut out = Vec::new();
    for path in rewirable_paths(g) {
        let h = path.len();
        let mut reversed = path.clone();
        reversed.reverse();
        if h == 4 {
            // Case 2 is orientation-dependent.
            out.push((path.clone(), RewireMove::Case2));
            out.push((reversed, RewireMove::Case2));
        } else if h % 2 == 1 {
            // The odd Case 3 swap is invariant under reversal.
            out.push((path.clone(), RewireMove::Case3Odd));
        } else {
            // The even Case 3 swap is not.
            out.push((path.clone(), RewireMove::Case3Even));
            out.push((reversed, RewireMove::Case3Even));
        }
    }
    out
}

/// Scans the move set for the move that increases the spectral radius the
/// most (by more than `margin`) while keeping the graph `pattern`-minor-free.
///
/// Returns `Ok(None)` when no such move exists, i.e. the graph is move-stable
/// at the given margin.
pub fn find_improving_move(
    g: &Graph,
    pattern: &MinorPattern,
    moves: MoveSet,
    margin: f64,
) -> Result<Option<ImprovingMove>, SearchError> {
    let n = g.order();
    let q0 = q_radius(g)?.q;
    // Gather every candidate with its radius first (cheap), then test minor
    // freeness (expensive) in decreasing-q order until one survives.
    let mut candidates: Vec<(f64, SearchMove)> = Vec::new();
    let mut consider = |mv: SearchMove, graph: &Graph| -> Result<(), SearchError> {
        let q = q_radius(graph)?.q;
        if q > q0 + margin {
            candidates.push((q, mv));
        }
        Ok(())
    };
    if moves.rewires {
        for (path, kind) in rewire_candidates(g) {
            let next = rewire_path_move(g, &path, kind)?;
            consider(SearchMove::Rewire { path, kind }, &next)?;
        }
    }
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    if moves.additions {
        for &(u, v) in &non_edges {
            let next = g.with_edge(u, v)?;
            consider(SearchMove::AddEdge { u, v }, &next)?;
        }
    }
    if moves.swaps {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        for &removed in &edges {
            let shrunk = g.without_edge(removed.0, removed.1)?;
            for &added in &non_edges {
                let next = shrunk.with_edge(added.0, added.1)?;
                consider(SearchMove::SwapEdge { removed, added }, &next)?;
            }
        }
    }
    candidates.sort_by(|a, b| b.0.total_cmp(&a.0));
    for (q, mv) in candidates {
        let graph = match &mv {
            SearchMove::Rewire { path, kind } => rewire_path_move(g, path, *kind)?,
            SearchMove::AddEdge { u, v } => g.with_edge(*u, *v)?,
            SearchMove::SwapEdge { removed, added } => g
                .without_edge(removed.0, removed.1)?
                .with_edge(added.0, added.1)?,
        };
        if has_minor(&graph, pattern)?.is_none() {
            return Ok(Some(ImprovingMove { mv, graph, q }));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Local search
// ---------------------------------------------------------------------------

/// Result of [`local_search_extremal`]: the best graph reached, its radius,
/// the moves applied in order, and whether the search proved local optimality
/// (`complete`) or ran out of budget first.
#[derive(Clone, Debug)]
pub struct LocalSearchOutcome {
    pub graph: Graph,
    pub q: f64,
    pub moves: Vec<SearchMove>,
    pub complete: bool,
}

/// Steepest-ascent local search from `start` over the full move set.
///
/// Every accepted move strictly increases the spectral radius by more than
/// [`IMPROVEMENT_MARGIN`] and preserves `pattern`-minor-freeness.  `budget`
/// caps the number of moves; if it runs out the best-so-far graph is returned
/// with `complete = false`.
pub fn local_search_extremal(
    start: &Graph,
    pattern: &MinorPattern,
    budget: usize,
) -> Result<LocalSearchOutcome, SearchError> {
    local_search_extremal_with(start, pattern, budget, MoveSet::full(), IMPROVEMENT_MARGIN)
}

/// [`local_search_extremal`] with an explicit move set and margin.
pub fn local_search_extremal_with(
    start: &Graph,
    pattern: &MinorPattern,
    budget: usize,
    moves: MoveSet,
    margin: f64,
) -> Result<LocalSearchOutcome, SearchError> {
    if has_minor(start, pattern)?.is_some() {
        return Err(SearchError::StartHasMinor(*pattern));
    }
    let mut graph = start.clone();
    let mut q = q_radius(&graph)?.q;
    let mut applied = Vec::new();
    let mut complete = false;
    while applied.len() < budget {
        match find_improving_move(&graph, pattern, moves, margin)? {
            Some(step) => {
                graph = step.graph;
                q = step.q;
                applied.push(step.mv);
            }
            None => {
                complete = true;
                break;
            }
        }
    }
    if applied.len() == budget && !complete {
        // Budget spent; optimality was not established.
        complete = find_improving_move(&graph, pattern, moves, margin)?.is_none();
    }
    Ok(LocalSearchOutcome {
        graph,
        q,
        moves: applied,
        complete,
    })
}

// ---------------------------------------------------------------------------
// Exhaustive extremal search
// ---------------------------------------------------------------------------

/// Outcome of an exhaustive scan of all `pattern`-minor-free graphs of order
/// `n`: the maximum spectral radius, every maximizer (canonical graph6, all
/// within [`TIE_TOL`] of the maximum), and whether the maximizer set is
/// exactly the reference family construction.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremalSearchResult {
    pub n: usize,
    pub pattern: MinorPattern,
    pub max_q: f64,
    pub argmax: Vec<String>,
    pub matches_family: bool,
}

/// Scans every isomorphism class of graphs of order `n` (cap: the enumeration
/// limit) and maximizes the spectral radius over the `pattern`-minor-free
/// ones.
///
/// All graphs within [`TIE_TOL`] of the maximum are reported, so a uniqueness
/// claim holds exactly when `argmax` is a singleton.  `matches_family` records
/// whether `argmax` equals `{F_{s,t}(n)}` for the corresponding family
/// construction (always `false` for complete and star patterns, which have no
/// such construction here).
pub fn extremal_search(n: usize, pattern: &MinorPattern) -> Result<ExtremalSearchResult, SearchError> {
    let keys = enumerate_graph_keys(n)?;
    // Minor filter + eigensolve per class; the aggregation below is a plain
    // max/argmax merge, independent of evaluation order.
    let scored: Vec<(u64, f64)> = keys
        .par_iter()
        .map(|&key| -> Result<Option<(u64, f64)>, SearchError> {
            let g = graph_from_key(key);
            if has_minor(&g, pattern)?.is_some() {
                return Ok(None);
            }
            let q = if g.size() == 0 { 0.0 } else { q_radius(&g)?.q };
            Ok(Some((key, q)))
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let max_q = scored
        .iter()
        .map(|&(_, q)| q)
        .fold(f64::NEG_INFINITY, f64::max);
    if scored.is_empty() {
        return Err(SearchError::NoMinorFreeGraphs { pattern: *pattern, n });
    }
    let mut argmax: Vec<String> = scored
        .iter()
        .filter(|&&(_, q)| q >= max_q - TIE_TOL)
        .map(|&(key, _)| canonical_g6(&graph_from_key(key)))
        .collect::<Result<Vec<_>, _>>()?;
    argmax.sort();
    let matches_family = match *pattern {
        MinorPattern::CompleteBipartite(s, t) if s >= 2 => match build_extremal_family(s, t, n) {
            Ok((family, _)) => argmax == vec![canonical_g6(&family)?],
            Err(_) => false,
        },
        _ => false,
    };
    Ok(ExtremalSearchResult {
        n,
        pattern: *pattern,
        max_q,
        argmax,
        matches_family,
    })
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::join;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Dominating vertex 0 joined to a path on 1..=h.
    fn fan(h: usize) -> Graph {
        join(&Graph::complete(1), &Graph::path(h))
    }

    #[test]
    fn case2_swaps_the_stated_edges() {
        let g = fan(4);
        let path = [1, 2, 3, 4];
        let out = rewire_path_move(&g, &path, RewireMove::Case2).unwrap();
        assert_eq!(out.size(), g.size());
        assert!(!out.has_edge(1, 2));
        assert!(out.has_edge(2, 4));
        assert!(out.has_edge(2, 3));
        assert!(out.has_edge(3, 4));
        // Triangle {2,3,4} plus the now-pendant 1 hanging only off vertex 0.
        assert_eq!(out.degree(1), 1);
    }

    #[test]
    fn case3_odd_at_five_vertices_splits_a_triangle() {
        let g = fan(5);
        let path = [1, 2, 3, 4, 5];
        // p = 2: remove v1v2 and v4v5, add v2v4 and v1v5.
        let out = rewire_path_move(&g, &path, RewireMove::Case3Odd).unwrap();
        assert_eq!(out.size(), g.size());
        assert!(!out.has_edge(1, 2));
        assert!(!out.has_edge(4, 5));
        assert!(out.has_edge(2, 4));
        assert!(out.has_edge(1, 5));
        // Components of g - 0: triangle {2,3,4} and edge {1,5}.
        let inner = out.induced(&[1, 2, 3, 4, 5]).unwrap();
        let mut sizes: Vec<usize> = inner.components().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn case3_even_at_six_vertices_splits_a_triangle() {
        let g = fan(6);
        let path = [1, 2, 3, 4, 5, 6];
        // p = 3: remove v2v3 and v5v6, add v3v5 and v2v6.
        let out = rewire_path_move(&g, &path, RewireMove::Case3Even).unwrap();
        assert_eq!(out.size(), g.size());
        assert!(!out.has_edge(2, 3));
        assert!(!out.has_edge(5, 6));
        assert!(out.has_edge(3, 5));
        assert!(out.has_edge(2, 6));
        let inner = out.induced(&[1, 2, 3, 4, 5, 6]).unwrap();
        let mut sizes: Vec<usize> = inner.components().iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3]);
    }

    #[test]
    fn inapplicable_moves_are_rejected() {
        let g = fan(5);
        // Wrong length for the move.
        assert!(matches!(
            rewire_path_move(&g, &[1, 2, 3, 4, 5], RewireMove::Case2),
            Err(SearchError::MoveInapplicable(_))
        ));
        assert!(matches!(
            rewire_path_move(&g, &[1, 2, 3, 4, 5], RewireMove::Case3Even),
            Err(SearchError::MoveInapplicable(_))
        ));
        // Not consecutive in the graph.
        assert!(matches!(
            rewire_path_move(&g, &[1, 3, 2, 4], RewireMove::Case2),
            Err(SearchError::MoveInapplicable(_))
        ));
        // Chord: vertices 1..4 of a cycle hanging off a dominator.
        let cyc = join(&Graph::complete(1), &Graph::cycle(4));
        assert!(matches!(
            rewire_path_move(&cyc, &[1, 2, 3, 4], RewireMove::Case2),
            Err(SearchError::MoveInapplicable(_))
        ));
        // Outside neighbor that does not dominate: plain path, no apex, with
        // an extra pendant vertex attached mid-path.
        let mut edges = vec![(0, 1), (1, 2), (2, 3)];
        edges.push((1, 4));
        let g = Graph::from_edges(5, &edges).unwrap();
        assert!(matches!(
            rewire_path_move(&g, &[0, 1, 2, 3], RewireMove::Case2),
            Err(SearchError::MoveInapplicable(_))
        ));
        // Repeated and out-of-range vertices.
        let p = Graph::path(4);
        assert!(matches!(
            rewire_path_move(&p, &[0, 1, 2, 2], RewireMove::Case2),
            Err(SearchError::MoveInapplicable(_))
        ));
        assert!(matches!(
            rewire_path_move(&p, &[0, 1, 2, 9], RewireMove::Case2),
            Err(SearchError::MoveInapplicable(_))
        ));
    }

    #[test]
    fn random_applications_preserve_edge_count() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_0001);
        for _ in 0..200 {
            let h = rng.gen_range(4..=12);
            let extra = rng.gen_range(0..3usize);
            // Dominator 0, path on 1..=h, plus `extra` vertices adjacent only
            // to the dominator.
            let n = 1 + h + extra;
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
            for i in 1..h {
                edges.push((i, i + 1));
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let path: Vec<usize> = (1..=h).collect();
            let mv = if h == 4 {
                RewireMove::Case2
            } else if h % 2 == 1 {
                RewireMove::Case3Odd
            } else {
                RewireMove::Case3Even
            };
            let out = rewire_path_move(&g, &path, mv).unwrap();
            assert_eq!(out.size(), g.size());
            assert_eq!(out.order(), g.order());
        }
    }

    #[test]
    fn rayleigh_shift_bounds_the_radius_gain() {
        let g = fan(9);
        let path: Vec<usize> = (1..=9).collect();
        let spec = q_radius(&g).unwrap();
        let out = rewire_path_move(&g, &path, RewireMove::Case3Odd).unwrap();
        let q_after = q_radius(&out).unwrap().q;
        // p = 4: removed v3v4, v6v7; added v4v6, v3v7 (1-indexed).
        let removed = [(3, 4), (6, 7)];
        let added = [(4, 6), (3, 7)];
        let shift = rayleigh_shift_bound(&spec.perron, &removed, &added);
        assert!(
            q_after >= spec.q + shift - 1e-7,
            "gain {} below Rayleigh bound {}",
            q_after - spec.q,
            shift
        );
        // On this instance the move strictly helps.
        assert!(q_after > spec.q + IMPROVEMENT_MARGIN);
    }

    #[test]
    fn family_graphs_admit_no_improving_proof_move() {
        for (s, t, n) in [(2, 3, 25), (2, 3, 22), (3, 3, 12), (3, 3, 8)] {
            let (family, _) = build_extremal_family(s, t, n).unwrap();
            let pattern = MinorPattern::complete_bipartite(s, t);
            let found = find_improving_move(
                &family,
                &pattern,
                MoveSet::rewires_and_additions(),
                IMPROVEMENT_MARGIN,
            )
            .unwrap();
            assert!(
                found.is_none(),
                "unexpected improving move on the ({s},{t}) family at n={n}: {:?}",
                found.map(|m| m.mv)
            );
        }
    }

    #[test]
    fn local_search_reaches_the_order_four_family_from_a_path() {
        let start = Graph::path(4);
        let pattern = MinorPattern::complete_bipartite(2, 2);
        let out = local_search_extremal(&start, &pattern, 10).unwrap();
        assert!(out.complete);
        assert!(!out.moves.is_empty());
        let (family, _) = build_extremal_family(2, 2, 4).unwrap();
        assert_eq!(
            canonical_g6(&out.graph).unwrap(),
            canonical_g6(&family).unwrap()
        );
        assert!((out.q - q_radius(&family).unwrap().q).abs() < 1e-9);
    }

    #[test]
    fn local_search_leaves_an_optimal_start_untouched() {
        let (family, _) = build_extremal_family(2, 2, 6).unwrap();
        let pattern = MinorPattern::complete_bipartite(2, 2);
        let out = local_search_extremal(&family, &pattern, 10).unwrap();
        assert!(out.complete);
        assert!(out.moves.is_empty());
        assert_eq!(
            canonical_g6(&out.graph).unwrap(),
            canonical_g6(&family).unwrap()
        );
    }

    #[test]
    fn local_search_rejects_a_start_with_the_minor() {
        let g = Graph::complete(5);
        let pattern = MinorPattern::complete_bipartite(2, 2);
        assert!(matches!(
            local_search_extremal(&g, &pattern, 5),
            Err(SearchError::StartHasMinor(_))
        ));
    }

    #[test]
    fn local_search_respects_the_budget() {
        // On 5 vertices a K_{2,3} minor needs at least 6 edges, so from the
        // 4-edge path every single-edge addition is legal and improving; one
        // move cannot exhaust them.
        let start = Graph::path(5);
        let pattern = MinorPattern::complete_bipartite(2, 3);
        let q0 = q_radius(&start).unwrap().q;
        let out = local_search_extremal_with(
            &start,
            &pattern,
            1,
            MoveSet::rewires_and_additions(),
            IMPROVEMENT_MARGIN,
        )
        .unwrap();
        assert!(!out.complete);
        assert_eq!(out.moves.len(), 1);
        assert!(out.q > q0 + IMPROVEMENT_MARGIN);
    }

    #[test]
    fn fan_converges_to_the_triangle_family() {
        // Dominator over a path on 10 vertices has the same edge count as the
        // (2,3) family at n = 11; proof moves alone carry it there.
        let start = fan(10);
        let pattern = MinorPattern::complete_bipartite(2, 3);
        let out = local_search_extremal_with(
            &start,
            &pattern,
            20,
            MoveSet::rewires_and_additions(),
            IMPROVEMENT_MARGIN,
        )
        .unwrap();
        assert!(out.complete);
        let (family, _) = build_extremal_family(2, 3, 11).unwrap();
        let q_family = q_radius(&family).unwrap().q;
        assert!(
            out.q <= q_family + 1e-8,
            "local optimum {} exceeds family radius {}",
            out.q,
            q_family
        );
        assert!(out.q > q_radius(&start).unwrap().q);
    }

    #[test]
    fn extremal_search_small_orders_match_the_family() {
        let pattern = MinorPattern::complete_bipartite(2, 2);
        for n in 4..=7 {
            let res = extremal_search(n, &pattern).unwrap();
            assert_eq!(res.argmax.len(), 1, "ties at n={n}: {:?}", res.argmax);
            assert!(res.matches_family, "family is not the winner at n={n}");
            let (family, _) = build_extremal_family(2, 2, n).unwrap();
            let q_family = q_radius(&family).unwrap().q;
            assert!((res.max_q - q_family).abs() <= 1e-9);
        }
    }

    #[test]
    fn extremal_search_reports_winner_consistently() {
        let pattern = MinorPattern::complete_bipartite(2, 3);
        let res = extremal_search(5, &pattern).unwrap();
        assert!(!res.argmax.is_empty());
        let (family, _) = build_extremal_family(2, 3, 5).unwrap();
        let family_g6 = canonical_g6(&family).unwrap();
        assert_eq!(res.matches_family, res.argmax == vec![family_g6]);
        assert!(res.max_q >= q_radius(&family).unwrap().q - 1e-9);
    }

    #[test]
    fn extremal_search_rejects_unattainable_patterns() {
        // Every graph on >= 1 vertex has a K_1 minor.
        let err = extremal_search(3, &MinorPattern::complete(1));
        assert!(matches!(err, Err(SearchError::NoMinorFreeGraphs { .. })));
    }

    #[test]
    fn rewire_move_parsing_round_trips() {
        for mv in [RewireMove::Case2, RewireMove::Case3Odd, RewireMove::Case3Even] {
            let s = mv.to_string();
            assert_eq!(s.parse::<RewireMove>().unwrap(), mv);
        }
        assert!("case4".parse::<RewireMove>().is_err());
    }
}
