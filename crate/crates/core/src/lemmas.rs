//! Degree-profile hypotheses that force the spectral bound `q <= n + 2`.
//!
//! Each hypothesis constrains the non-increasing degree sequence
//! `d_1 >= d_2 >= ... >= d_n` with exact rational cut points: a near-dominating
//! largest degree, an optional band of `k` mid-range degrees, and a cap
//! keeping every remaining degree strictly below the cut.  Whenever the
//! hypothesis is met (at orders above the stated floor), the signless
//! Laplacian spectral radius satisfies `q(G) <= n + 2`; [`check_degree_lemma`]
//! decides the hypothesis exactly and then tests the spectral bound
//! numerically.  Seeded samplers build random graphs with the prescribed
//! degree profiles for randomized sweeps.

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::spectral::{q_radius, SpectralError};

/// Slack allowed on the spectral side of the conclusion `q <= n + 2`.
pub const DEGREE_BOUND_TOL: f64 = 1e-8;

type Rational = Ratio<i64>;

// ---------------------------------------------------------------------------
// Hypotheses
// ---------------------------------------------------------------------------

/// The four degree-profile hypotheses.
///
/// - `L25`: `n >= 115`, `n-3 <= d_1 <= n-2`, a band of `1 <= k <= 12` degrees
///   in `[n/6 + 1, n - 61]`, everything else strictly below `n/6 + 1`.
/// - `L26`: `n >= 4`, `n-3 <= d_1 <= n-2`, all other degrees below `n/6 + 1`.
/// - `L27`: `n >= 91`, `d_1 = n-1`, a band of `1 <= k <= 13` degrees in
///   `[n/7 + 19/7, n - 75]`, everything else strictly below `n/7 + 19/7`.
/// - `L28`: `n >= 6`, `d_1 = n-1`, all other degrees below `n/7 + 19/7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LemmaId {
    L25,
    L26,
    L27,
    L28,
}

impl std::fmt::Display for LemmaId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Error)]
pub enum LemmaError {
    #[error("block size {k} is out of range for {lemma}")]
    BadBlockSize { lemma: LemmaId, k: usize },
    #[error("order {n} is below the {lemma} floor {floor}")]
    OrderBelowFloor { lemma: LemmaId, n: usize, floor: usize },
    #[error("no valid degree profile for {lemma} at order {n}")]
    ProfileInfeasible { lemma: LemmaId, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// A degree hypothesis: which lemma, and (for the banded ones) the number of
/// mid-band degrees `d_2 ... d_{k+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeHypothesis {
    pub lemma_id: LemmaId,
    pub k: usize,
}

/// Cut points of a hypothesis at a concrete order, all exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutPoints {
    /// Inclusive range for the largest degree.
    pub d1_range: (i64, i64),
    /// The rational cut: band degrees are `>=` it, tail degrees are `<` it.
    pub cut: Rational,
    /// Upper cap on band degrees (`None` when the hypothesis has no band).
    pub band_cap: Option<i64>,
}

impl DegreeHypothesis {
    /// Validates the block size for the lemma: `1..=12` for `L25`, `1..=13`
    /// for `L27`, and exactly `0` for the band-free `L26`/`L28`.
    pub fn new(lemma_id: LemmaId, k: usize) -> Result<Self, LemmaError> {
        let ok = match lemma_id {
            LemmaId::L25 => (1..=12).contains(&k),
            LemmaId::L27 => (1..=13).contains(&k),
            LemmaId::L26 | LemmaId::L28 => k == 0,
        };
        if ok {
            Ok(DegreeHypothesis { lemma_id, k })
        } else {
            Err(LemmaError::BadBlockSize { lemma: lemma_id, k })
        }
    }

    /// Smallest order at which the hypothesis is assertable.
    pub fn floor_order(&self) -> usize {
        match self.lemma_id {
            LemmaId::L25 => 115,
            LemmaId::L26 => 4,
            LemmaId::L27 => 91,
            LemmaId::L28 => 6,
        }
    }

    /// Exact cut points at order `n`.
    pub fn cuts(&self, n: usize) -> CutPoints {
        let n = n as i64;
        match self.lemma_id {
            LemmaId::L25 => CutPoints {
                d1_range: (n - 3, n - 2),
                cut: Rational::new(n + 6, 6),
                band_cap: Some(n - 61),
            },
            LemmaId::L26 => CutPoints {
                d1_range: (n - 3, n - 2),
                cut: Rational::new(n + 6, 6),
                band_cap: None,
            },
            LemmaId::L27 => CutPoints {
                d1_range: (n - 1, n - 1),
                cut: Rational::new(n + 19, 7),
                band_cap: Some(n - 75),
            },
            LemmaId::L28 => CutPoints {
                d1_range: (n - 1, n - 1),
                cut: Rational::new(n + 19, 7),
                band_cap: None,
            },
        }
    }

    /// Decides the hypothesis on a graph by exact rational comparison on the
    /// sorted degree sequence.  Orders below the floor never meet it.
    pub fn is_met(&self, g: &Graph) -> bool {
        let n = g.order();
        if n < self.floor_order() {
            return false;
        }
        let mut degrees: Vec<i64> = (0..n).map(|v| g.degree(v) as i64).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let cuts = self.cuts(n);
        let (d1_lo, d1_hi) = cuts.d1_range;
        if degrees[0] < d1_lo || degrees[0] > d1_hi {
            return false;
        }
        // Band: d_2 ... d_{k+1} must sit in [cut, band_cap].
        if let Some(cap) = cuts.band_cap {
            if degrees.len() <= self.k {
                return false;
            }
            for &d in &degrees[1..=self.k] {
                if Rational::from_integer(d) < cuts.cut || d > cap {
                    return false;
                }
            }
        }
        // Tail: everything after the band stays strictly below the cut.
        degrees[self.k + 1..]
            .iter()
            .all(|&d| Rational::from_integer(d) < cuts.cut)
    }
}

/// Result of [`check_degree_lemma`]: whether the degree hypothesis is met,
/// and — only in that case — whether `q(G) <= n + 2` holds (with the measured
/// radius attached).
#[derive(Clone, Debug, Serialize)]
pub struct DegreeLemmaCheck {
    pub n: usize,
    pub hypothesis_met: bool,
    pub bound_holds: Option<bool>,
    pub q: Option<f64>,
}

/// Checks the hypothesis exactly and, when it is met, the spectral conclusion
/// `q(G) <= n + 2` within [`DEGREE_BOUND_TOL`].
pub fn check_degree_lemma(g: &Graph, hyp: &DegreeHypothesis) -> Result<DegreeLemmaCheck, LemmaError> {
    let n = g.order();
    if !hyp.is_met(g) {
        return Ok(DegreeLemmaCheck {
            n,
            hypothesis_met: false,
            bound_holds: None,
            q: None,
        });
    }
    let q = q_radius(g)?.q;
    Ok(DegreeLemmaCheck {
        n,
        hypothesis_met: true,
        bound_holds: Some(q <= n as f64 + 2.0 + DEGREE_BOUND_TOL),
        q: Some(q),
    })
}

// ---------------------------------------------------------------------------
// Profile samplers
// ---------------------------------------------------------------------------

/// Largest integer degree strictly below the cut.
fn max_tail_degree(cut: Rational) -> i64 {
    let floor = cut.floor().to_integer();
    if Rational::from_integer(floor) < cut {
        floor
    } else {
        floor - 1
    }
}

/// Smallest integer degree at or above the cut.
fn min_band_degree(cut: Rational) -> i64 {
    let ceil = cut.ceil().to_integer();
    debug_assert!(Rational::from_integer(ceil) >= cut);
    ceil
}

/// Builds a seeded random graph whose degree sequence meets `hyp` at order
/// `n`: one (near-)dominating hub, `k` mid-band vertices wired to the hub and
/// to random low-degree partners, and a sprinkle of extra edges that respects
/// every cap.
pub fn sample_profile_graph(
    hyp: &DegreeHypothesis,
    n: usize,
    seed: u64,
) -> Result<Graph, LemmaError> {
    let floor = hyp.floor_order();
    if n < floor {
        return Err(LemmaError::OrderBelowFloor {
            lemma: hyp.lemma_id,
            n,
            floor,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cuts = hyp.cuts(n);
    let tail_max = max_tail_degree(cuts.cut) as usize;
    // Hub 0 misses the last `deficiency` vertices (0 when d_1 = n - 1).
    let deficiency = (n as i64 - 1 - cuts.d1_range.1) as usize
        + usize::from(cuts.d1_range.0 < cuts.d1_range.1 && rng.gen_bool(0.5));
    let mut adjacency: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); n];
    let add = |adj: &mut Vec<std::collections::BTreeSet<usize>>, a: usize, b: usize| {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    for v in 1..(n - deficiency) {
        add(&mut adjacency, 0, v);
    }
    let k = hyp.k;
    if let Some(cap) = cuts.band_cap {
        // Mid-band vertices 1..=k: pick a target degree in the band and wire
        // the remainder (beyond the hub edge) to distinct low vertices.
        let lo = min_band_degree(cuts.cut) as usize;
        let hi = (cap as usize).min(lo + 8);
        if lo > hi {
            return Err(LemmaError::ProfileInfeasible {
                lemma: hyp.lemma_id,
                n,
            });
        }
        for mid in 1..=k {
            let target = rng.gen_range(lo..=hi);
            let mut candidates: Vec<usize> = (k + 1..n)
                .filter(|&v| adjacency[v].len() < tail_max && !adjacency[mid].contains(&v))
                .collect();
            candidates.shuffle(&mut rng);
            let needed = target.saturating_sub(adjacency[mid].len());
            if candidates.len() < needed {
                return Err(LemmaError::ProfileInfeasible {
                    lemma: hyp.lemma_id,
                    n,
                });
            }
            for &low in candidates.iter().take(needed) {
                add(&mut adjacency, mid, low);
            }
        }
    }
    // Extra low-low edges, kept strictly under the cut.
    let extras = rng.gen_range(0..=n / 4);
    for _ in 0..extras {
        let a = rng.gen_range(k + 1..n);
        let b = rng.gen_range(k + 1..n);
        if a != b
            && !adjacency[a].contains(&b)
            && adjacency[a].len() < tail_max
            && adjacency[b].len() < tail_max
        {
            add(&mut adjacency, a, b);
        }
    }
    let edges: Vec<(usize, usize)> = adjacency
        .iter()
        .enumerate()
        .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
        .collect();
    let g = Graph::from_edges(n, &edges)?;
    debug_assert!(hyp.is_met(&g), "sampler produced an off-profile graph");
    Ok(g)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    /// Hub adjacent to everything plus a perfect-as-possible matching on the
    /// remaining vertices.
    fn star_plus_matching(n: usize) -> Graph {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
        let mut v = 1;
        while v + 1 < n {
            edges.push((v, v + 1));
            v += 2;
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn star_plus_matching_meets_the_dominant_hub_hypothesis() {
        for n in [6, 20, 50] {
            let hyp = DegreeHypothesis::new(LemmaId::L28, 0).unwrap();
            let check = check_degree_lemma(&star_plus_matching(n), &hyp).unwrap();
            assert!(check.hypothesis_met, "hypothesis failed at n={n}");
            assert_eq!(check.bound_holds, Some(true), "bound failed at n={n}");
        }
    }

    #[test]
    fn complete_graph_fails_the_near_dominating_hypothesis() {
        let hyp = DegreeHypothesis::new(LemmaId::L26, 0).unwrap();
        let check = check_degree_lemma(&Graph::complete(20), &hyp).unwrap();
        assert!(!check.hypothesis_met);
        assert_eq!(check.bound_holds, None);
        assert_eq!(check.q, None);
    }

    #[test]
    fn cut_comparisons_are_exact_at_the_boundary() {
        // n = 30: the cut (n + 19)/7 = 7 exactly, so a second degree of 7
        // must fail the strict inequality and 6 must pass.
        let n = 30;
        let hyp = DegreeHypothesis::new(LemmaId::L28, 0).unwrap();
        let with_second_degree = |d: usize| {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
            for v in 2..(2 + d - 1) {
                edges.push((1, v));
            }
            Graph::from_edges(n, &edges).unwrap()
        };
        assert!(!hyp.is_met(&with_second_degree(7)));
        assert!(hyp.is_met(&with_second_degree(6)));
    }

    #[test]
    fn block_sizes_are_validated() {
        assert!(DegreeHypothesis::new(LemmaId::L25, 0).is_err());
        assert!(DegreeHypothesis::new(LemmaId::L25, 13).is_err());
        assert!(DegreeHypothesis::new(LemmaId::L25, 12).is_ok());
        assert!(DegreeHypothesis::new(LemmaId::L27, 14).is_err());
        assert!(DegreeHypothesis::new(LemmaId::L27, 13).is_ok());
        assert!(DegreeHypothesis::new(LemmaId::L26, 1).is_err());
        assert!(DegreeHypothesis::new(LemmaId::L28, 0).is_ok());
    }

    #[test]
    fn orders_below_the_floor_never_meet_the_hypothesis() {
        let hyp = DegreeHypothesis::new(LemmaId::L28, 0).unwrap();
        let check = check_degree_lemma(&star_plus_matching(5), &hyp).unwrap();
        assert!(!check.hypothesis_met);
        let hyp25 = DegreeHypothesis::new(LemmaId::L25, 3).unwrap();
        assert!(matches!(
            sample_profile_graph(&hyp25, 100, 0),
            Err(LemmaError::OrderBelowFloor { .. })
        ));
    }

    #[test]
    fn two_hundred_sampled_profiles_hold_the_bound() {
        let cases = [
            (DegreeHypothesis::new(LemmaId::L25, 5).unwrap(), 120),
            (DegreeHypothesis::new(LemmaId::L26, 0).unwrap(), 40),
            (DegreeHypothesis::new(LemmaId::L27, 13).unwrap(), 100),
            (DegreeHypothesis::new(LemmaId::L28, 0).unwrap(), 50),
        ];
        for (hyp, n) in cases {
            for seed in 0..50u64 {
                let g = sample_profile_graph(&hyp, n, seed).unwrap();
                let check = check_degree_lemma(&g, &hyp).unwrap();
                assert!(
                    check.hypothesis_met,
                    "{} sample (seed {seed}) missed its own profile",
                    hyp.lemma_id
                );
                assert_eq!(
                    check.bound_holds,
                    Some(true),
                    "{} bound failed at n={n}, seed {seed}: q={:?}",
                    hyp.lemma_id,
                    check.q
                );
            }
        }
    }

    #[test]
    fn banded_profiles_place_exactly_k_degrees_in_the_band() {
        let hyp = DegreeHypothesis::new(LemmaId::L27, 4).unwrap();
        let g = sample_profile_graph(&hyp, 95, 7).unwrap();
        let cuts = hyp.cuts(95);
        let in_band = (0..g.order())
            .filter(|&v| {
                let d = g.degree(v) as i64;
                d < 94 && Rational::from_integer(d) >= cuts.cut
            })
            .count();
        assert_eq!(in_band, 4);
    }
}
