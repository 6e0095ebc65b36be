//! Immutable simple graphs and the extremal family constructor.
//!
//! Graphs are stored as per-vertex sorted neighbor lists over labels
//! `0..n-1`. Constructors validate symmetry and irreflexivity and return new
//! graphs; nothing mutates a graph in place after construction.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("family parameters invalid: need 2 <= s <= t and n >= s-1, got s={s}, t={t}, n={n}")]
    BadFamilyParams { s: usize, t: usize, n: usize },
    #[error("degree statistics need order >= {need}, graph has order {got}")]
    OrderTooSmall { need: usize, got: usize },
    #[error("edge ({0}, {1}) already present")]
    EdgeExists(usize, usize),
    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&u| u as usize != v).collect())
            .collect();
        Graph { adj }
    }

    /// Path `P_n` with edges `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge_unchecked(v - 1, v);
        }
        g
    }

    /// Cycle `C_n` (`n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.insert_edge_unchecked(0, n - 1);
        g
    }

    /// Star `K_{1,t}` with center 0 and leaves `1..=t`.
    pub fn star(t: usize) -> Self {
        let mut g = Graph::empty(t + 1);
        for v in 1..=t {
            g.insert_edge_unchecked(0, v);
        }
        g
    }

    /// Complete bipartite graph with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.insert_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list; vertices are `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !g.has_edge(u, v) {
                g.insert_edge_unchecked(u, v);
            }
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            });
        }
        Ok(())
    }

    fn insert_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        let iu = self.adj[u].binary_search(&(v as u32)).unwrap_err();
        self.adj[u].insert(iu, v as u32);
        let iv = self.adj[v].binary_search(&(u as u32)).unwrap_err();
        self.adj[v].insert(iv, u as u32);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|nbrs| nbrs.len()).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Iterates edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, nbrs)| {
            nbrs.iter()
                .filter(move |&&v| (v as usize) > u)
                .map(move |&v| (u, v as usize))
        })
    }

    /// New graph with edge `(u, v)` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::EdgeExists(u, v));
        }
        let mut g = self.clone();
        g.insert_edge_unchecked(u, v);
        Ok(g)
    }

    /// New graph with edge `(u, v)` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::EdgeMissing(u, v));
        }
        let mut g = self.clone();
        let iu = g.adj[u].binary_search(&(v as u32)).unwrap();
        g.adj[u].remove(iu);
        let iv = g.adj[v].binary_search(&(u as u32)).unwrap();
        g.adj[v].remove(iv);
        Ok(g)
    }

    /// Subgraph induced by `keep` (in the order given); `keep` must not repeat.
    pub fn induced(&self, keep: &[usize]) -> Result<Self, GraphError> {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            pos[v] = i;
        }
        let mut g = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = pos[w as usize];
                if j != usize::MAX && j > i {
                    g.insert_edge_unchecked(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.order());
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.insert_edge_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w as usize);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }
}

/// Join `g ∨ h`: disjoint copies of `g` and `h` plus every cross edge.
/// Vertices of `g` keep their labels; vertices of `h` are shifted by
/// `g.order()`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let ng = g.order();
    let mut out = disjoint_union(&[g.clone(), h.clone()]);
    for u in 0..ng {
        for v in ng..ng + h.order() {
            out.insert_edge_unchecked(u, v);
        }
    }
    out
}

/// Disjoint union; the i-th input occupies a contiguous label block after the
/// blocks of its predecessors.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n: usize = parts.iter().map(|g| g.order()).sum();
    let mut out = Graph::empty(n);
    let mut base = 0;
    for g in parts {
        for (u, v) in g.edges() {
            out.insert_edge_unchecked(base + u, base + v);
        }
        base += g.order();
    }
    out
}

/// Parameters of the extremal family member on `n` vertices: the join of
/// `K_{s-1}` with `p` disjoint copies of `K_t` plus a remainder clique `K_r`,
/// where `n - s + 1 = p*t + r` and `0 <= r < t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    pub s: usize,
    pub t: usize,
    pub n: usize,
    pub p: usize,
    pub r: usize,
}

impl FamilyParams {
    pub fn new(s: usize, t: usize, n: usize) -> Result<Self, GraphError> {
        if s < 2 || t < s || n + 1 < s {
            return Err(GraphError::BadFamilyParams { s, t, n });
        }
        let rest = n - (s - 1);
        Ok(FamilyParams {
            s,
            t,
            n,
            p: rest / t,
            r: rest % t,
        })
    }

    /// Exact edge count: C(s-1,2) + (s-1)(n-s+1) + p*C(t,2) + C(r,2).
    pub fn edge_count(&self) -> usize {
        let c2 = |m: usize| m * m.saturating_sub(1) / 2;
        c2(self.s - 1) + (self.s - 1) * (self.n + 1 - self.s) + self.p * c2(self.t) + c2(self.r)
    }
}

/// Builds the extremal family member for `(s, t, n)`.
///
/// Labels: the dominating clique `K_{s-1}` takes `0..s-1`, the `p` copies of
/// `K_t` follow in contiguous blocks, and the remainder clique `K_r` (omitted
/// when `r = 0`) takes the last `r` labels.
pub fn build_extremal_family(s: usize, t: usize, n: usize) -> Result<(Graph, FamilyParams), GraphError> {
    let params = FamilyParams::new(s, t, n)?;
    let mut blocks: Vec<Graph> = Vec::with_capacity(params.p + 1);
    for _ in 0..params.p {
        blocks.push(Graph::complete(t));
    }
    if params.r > 0 {
        blocks.push(Graph::complete(params.r));
    }
    let outer = disjoint_union(&blocks);
    let g = join(&Graph::complete(s - 1), &outer);
    // The join shifted the outer part by s-1, so dominators are 0..s-1 as
    // documented.
    debug_assert_eq!(g.order(), n);
    debug_assert_eq!(g.size(), params.edge_count());
    Ok((g, params))
}

/// Degree statistics: the non-increasing degree sequence, largest and
/// second-largest degrees, and the edge count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub second_max_degree: usize,
    pub edges: usize,
}

/// Errors if the graph has fewer than two vertices (no second-largest degree).
pub fn degree_stats(g: &Graph) -> Result<DegreeStats, GraphError> {
    if g.order() < 2 {
        return Err(GraphError::OrderTooSmall {
            need: 2,
            got: g.order(),
        });
    }
    let mut degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let edges = degrees.iter().sum::<usize>() / 2;
    Ok(DegreeStats {
        max_degree: degrees[0],
        second_max_degree: degrees[1],
        edges,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_constructors() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.order(), 4);
        assert_eq!(k4.size(), 6);
        assert!(k4.is_connected());

        let p3 = Graph::path(3);
        assert_eq!(p3.size(), 2);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));

        let c5 = Graph::cycle(5);
        assert_eq!(c5.size(), 5);
        assert!(c5.has_edge(0, 4));

        let star = Graph::star(4);
        assert_eq!(star.degree(0), 4);
        assert_eq!(star.size(), 4);

        let kb = Graph::complete_bipartite(2, 3);
        assert_eq!(kb.size(), 6);
        assert!(!kb.has_edge(0, 1) && kb.has_edge(0, 2));
    }

    #[test]
    fn from_edges_validates() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        // Duplicate edges collapse.
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn edge_add_remove() {
        let g = Graph::path(3);
        let h = g.with_edge(0, 2).unwrap();
        assert_eq!(h.size(), 3);
        assert_eq!(g.size(), 2, "with_edge must not mutate the original");
        assert_eq!(h.with_edge(0, 2), Err(GraphError::EdgeExists(0, 2)));
        let back = h.without_edge(0, 2).unwrap();
        assert_eq!(back, g);
        assert_eq!(g.without_edge(0, 2), Err(GraphError::EdgeMissing(0, 2)));
    }

    #[test]
    fn join_edge_count_identity() {
        // e(g ∨ h) = e(g) + e(h) + |g||h|
        let g = Graph::path(3);
        let h = Graph::cycle(4);
        let j = join(&g, &h);
        assert_eq!(j.order(), 7);
        assert_eq!(j.size(), 2 + 4 + 12);
        // Cross edges all present, internal structure preserved.
        assert!(j.has_edge(0, 3) && j.has_edge(2, 6));
        assert!(j.has_edge(3, 4) && !j.has_edge(3, 5));
    }

    #[test]
    fn disjoint_union_components() {
        let u = disjoint_union(&[Graph::complete(3), Graph::complete(3), Graph::path(2)]);
        assert_eq!(u.order(), 8);
        assert_eq!(u.size(), 3 + 3 + 1);
        assert_eq!(u.components().len(), 3);
        assert_eq!(u.components()[1], vec![3, 4, 5]);
    }

    #[test]
    fn family_2_3_7() {
        // K_1 ∨ (2 K_3): one dominating vertex, two triangles.
        let (g, params) = build_extremal_family(2, 3, 7).unwrap();
        assert_eq!(params, FamilyParams { s: 2, t: 3, n: 7, p: 2, r: 0 });
        assert_eq!(g.size(), 12);
        let mut degs: Vec<usize> = (0..7).map(|v| g.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![6, 3, 3, 3, 3, 3, 3]);
        // Triangle blocks are labeled contiguously after the dominator.
        assert!(g.has_edge(1, 2) && g.has_edge(2, 3) && !g.has_edge(3, 4));
    }

    #[test]
    fn family_remainder_block_is_last() {
        // (2,3,9): rest = 8 = 2*3 + 2, so one K_2 at the end.
        let (g, params) = build_extremal_family(2, 3, 9).unwrap();
        assert_eq!((params.p, params.r), (2, 2));
        assert!(g.has_edge(7, 8));
        assert!(!g.has_edge(6, 7));
        assert_eq!(g.size(), params.edge_count());
        assert_eq!(g.size(), 8 + 2 * 3 + 1);
    }

    #[test]
    fn family_r0_has_no_empty_block() {
        let (g, params) = build_extremal_family(3, 3, 8).unwrap();
        assert_eq!((params.p, params.r), (2, 0));
        // Dominating K_2 on {0,1}; components of g - {0,1} are the two K_3s.
        assert_eq!(g.size(), 1 + 2 * 6 + 2 * 3);
        assert_eq!(g.degree(0), 7);
        assert_eq!(g.degree(1), 7);
        assert_eq!(g.degree(2), 4);
    }

    #[test]
    fn family_edge_count_formula_sweep() {
        for s in 2..=4 {
            for t in s..=5 {
                for n in (s + 1)..=30 {
                    let (g, params) = build_extremal_family(s, t, n).unwrap();
                    assert_eq!(g.size(), params.edge_count(), "(s,t,n)=({s},{t},{n})");
                    assert_eq!(n - s + 1, params.p * t + params.r);
                    assert!(params.r < t);
                }
            }
        }
    }

    #[test]
    fn family_param_errors() {
        assert!(build_extremal_family(1, 3, 5).is_err());
        assert!(build_extremal_family(3, 2, 5).is_err());
        assert!(FamilyParams::new(4, 4, 2).is_err());
        // Degenerate but legal: n = s - 1 gives the bare dominating clique.
        let (g, params) = build_extremal_family(3, 3, 2).unwrap();
        assert_eq!((params.p, params.r), (0, 0));
        assert_eq!(g, Graph::complete(2));
    }

    #[test]
    fn degree_stats_basics() {
        let (g, _) = build_extremal_family(2, 3, 7).unwrap();
        let stats = degree_stats(&g).unwrap();
        assert_eq!(stats.degrees, vec![6, 3, 3, 3, 3, 3, 3]);
        assert_eq!(stats.max_degree, 6);
        assert_eq!(stats.second_max_degree, 3);
        assert_eq!(stats.edges, 12);
        assert!(degree_stats(&Graph::empty(1)).is_err());
        assert!(degree_stats(&Graph::empty(0)).is_err());
    }

    #[test]
    fn induced_and_relabeled() {
        let g = Graph::cycle(5);
        let sub = g.induced(&[0, 1, 2]).unwrap();
        assert_eq!(sub.size(), 2);
        let perm = vec![4, 3, 2, 1, 0];
        let r = g.relabeled(&perm);
        assert_eq!(r.size(), 5);
        assert!(r.has_edge(4, 3) && r.has_edge(4, 0));
    }
}
