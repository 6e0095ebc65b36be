//! Signless Laplacian spectral radius.
//!
//! `Q(G) = D(G) + A(G)` is entrywise nonnegative and positive semidefinite;
//! on a connected graph it is irreducible, so its largest eigenvalue is the
//! simple Perron root with a positive eigenvector. The solver exploits this:
//! deterministic power iteration per connected component from the all-ones
//! vector, with a dense Jacobi eigendecomposition as fallback for small
//! components when the spectral gap makes the iteration crawl. The radius of
//! a disconnected graph is the maximum over components.

use crate::graph::Graph;
use thiserror::Error;

/// Default residual tolerance: `‖Qx - qx‖_∞ <= DEFAULT_TOL` at exit.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Power-iteration count after which a small component (order <= 64) is
/// handed to the dense fallback.
const FALLBACK_AFTER: usize = 20_000;
/// Hard iteration cap for components too large for the dense fallback.
const MAX_ITERS: usize = 400_000;
/// Largest component order the dense Jacobi fallback accepts.
const JACOBI_MAX_ORDER: usize = 64;

#[derive(Debug, Error, PartialEq)]
pub enum SpectralError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("iteration did not reach tol={tol} within {iterations} steps (best q={best_q}, residual={residual})")]
    NotConverged {
        best_q: f64,
        residual: f64,
        iterations: usize,
        tol: f64,
    },
    #[error("vector length {got} does not match graph order {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("vector is identically zero")]
    ZeroVector,
    #[error("vector has a non-finite entry at index {0}")]
    NonFinite(usize),
}

/// Output of [`q_radius`]: the spectral radius, a unit-norm nonnegative
/// eigenvector estimate (supported on one extremal component), the final
/// residual `‖Qx - qx‖_∞`, and the work performed.
#[derive(Clone, Debug)]
pub struct SpectralResult {
    pub q: f64,
    pub perron: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
}

/// Spectral radius of `Q(g)` at the default tolerance.
pub fn q_radius(g: &Graph) -> Result<SpectralResult, SpectralError> {
    q_radius_tol(g, DEFAULT_TOL)
}

/// Spectral radius of `Q(g)` with an explicit residual tolerance.
pub fn q_radius_tol(g: &Graph, tol: f64) -> Result<SpectralResult, SpectralError> {
    if g.order() == 0 {
        return Err(SpectralError::EmptyGraph);
    }
    struct Best<'a> {
        q: f64,
        x: Vec<f64>,
        residual: f64,
        comp: &'a [usize],
    }
    let comps = g.components();
    let mut best: Option<Best> = None;
    let mut total_iters = 0;
    for comp in &comps {
        let (q, x, residual, iters) = component_radius(g, comp, tol)?;
        total_iters += iters;
        if best.as_ref().is_none_or(|b| q > b.q) {
            best = Some(Best { q, x, residual, comp });
        }
    }
    let best = best.expect("at least one component");
    let mut perron = vec![0.0; g.order()];
    for (i, &v) in best.comp.iter().enumerate() {
        perron[v] = best.x[i];
    }
    Ok(SpectralResult {
        q: best.q,
        perron,
        residual: best.residual,
        iterations: total_iters,
    })
}

/// Radius of one connected component, with vertices `comp` (sorted labels).
fn component_radius(
    g: &Graph,
    comp: &[usize],
    tol: f64,
) -> Result<(f64, Vec<f64>, f64, usize), SpectralError> {
    let m = comp.len();
    if m == 1 {
        return Ok((0.0, vec![1.0], 0.0, 0));
    }
    // Local adjacency in component coordinates.
    let mut pos = std::collections::HashMap::with_capacity(m);
    for (i, &v) in comp.iter().enumerate() {
        pos.insert(v, i);
    }
    let adj: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|&w| pos[&(w as usize)]).collect())
        .collect();
    let deg: Vec<f64> = adj.iter().map(|nb| nb.len() as f64).collect();

    let matvec = |x: &[f64], y: &mut [f64]| {
        for v in 0..m {
            let mut acc = deg[v] * x[v];
            for &u in &adj[v] {
                acc += x[u];
            }
            y[v] = acc;
        }
    };

    let mut x = vec![(m as f64).sqrt().recip(); m];
    let mut y = vec![0.0; m];
    let cap = if m <= JACOBI_MAX_ORDER { FALLBACK_AFTER } else { MAX_ITERS };
    let mut q = 0.0;
    for iter in 1..=cap {
        matvec(&x, &mut y);
        q = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - q * a).abs())
            .fold(0.0f64, f64::max);
        if residual <= tol {
            return Ok((q, x, residual, iter));
        }
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        for (xv, yv) in x.iter_mut().zip(&y) {
            *xv = yv / norm;
        }
    }
    if m <= JACOBI_MAX_ORDER {
        let (q, x) = jacobi_top_pair(&adj, &deg);
        matvec(&x, &mut y);
        let residual = x
            .iter()
            .zip(&y)
            .map(|(a, b)| (b - q * a).abs())
            .fold(0.0f64, f64::max);
        return Ok((q, x, residual, cap));
    }
    Err(SpectralError::NotConverged {
        best_q: q,
        residual: tol * 10.0,
        iterations: cap,
        tol,
    })
}

/// Full dense eigensolve of `Q` for a small component; returns the largest
/// eigenvalue and its unit nonnegative eigenvector.
#[allow(clippy::needless_range_loop)] // rotations touch rows i and j in lockstep
fn jacobi_top_pair(adj: &[Vec<usize>], deg: &[f64]) -> (f64, Vec<f64>) {
    let m = deg.len();
    let mut a = vec![vec![0.0f64; m]; m];
    for v in 0..m {
        a[v][v] = deg[v];
        for &u in &adj[v] {
            a[v][u] = 1.0;
        }
    }
    let mut vecs = vec![vec![0.0f64; m]; m];
    for (i, row) in vecs.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    let scale: f64 = deg.iter().fold(1.0f64, |acc, d| acc.max(*d));
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..m {
            for j in i + 1..m {
                off += a[i][j] * a[i][j];
            }
        }
        if off.sqrt() <= 1e-14 * scale {
            break;
        }
        for i in 0..m {
            for j in i + 1..m {
                if a[i][j].abs() <= 1e-300 {
                    continue;
                }
                let theta = (a[j][j] - a[i][i]) / (2.0 * a[i][j]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..m {
                    let aik = a[i][k];
                    let ajk = a[j][k];
                    a[i][k] = c * aik - s * ajk;
                    a[j][k] = s * aik + c * ajk;
                }
                for k in 0..m {
                    let aki = a[k][i];
                    let akj = a[k][j];
                    a[k][i] = c * aki - s * akj;
                    a[k][j] = s * aki + c * akj;
                }
                for row in vecs.iter_mut() {
                    let vi = row[i];
                    let vj = row[j];
                    row[i] = c * vi - s * vj;
                    row[j] = s * vi + c * vj;
                }
            }
        }
    }
    let (top, _) = (0..m)
        .map(|i| (i, a[i][i]))
        .fold((0usize, f64::NEG_INFINITY), |acc, (i, v)| {
            if v > acc.1 {
                (i, v)
            } else {
                acc
            }
        });
    let mut x: Vec<f64> = vecs.iter().map(|row| row[top]).collect();
    if x.iter().sum::<f64>() < 0.0 {
        for v in x.iter_mut() {
            *v = -*v;
        }
    }
    // The Perron vector of a connected component is positive; scrub the
    // numerical dust so callers can rely on nonnegativity.
    for v in x.iter_mut() {
        debug_assert!(*v > -1e-8, "Perron entry far below zero: {v}");
        if *v < 0.0 {
            *v = 0.0;
        }
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    for v in x.iter_mut() {
        *v /= norm;
    }
    (a[top][top], x)
}

/// Rayleigh quotient of `Q(g)` at `x`, in edge-sum form:
/// `Σ_{uv ∈ E} (x_u + x_v)^2 / Σ_v x_v^2`. Never exceeds the spectral radius.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != g.order() {
        return Err(SpectralError::LengthMismatch {
            got: x.len(),
            want: g.order(),
        });
    }
    for (i, v) in x.iter().enumerate() {
        if !v.is_finite() {
            return Err(SpectralError::NonFinite(i));
        }
    }
    let den: f64 = x.iter().map(|v| v * v).sum();
    if den == 0.0 {
        return Err(SpectralError::ZeroVector);
    }
    let num: f64 = g
        .edges()
        .map(|(u, v)| {
            let s = x[u] + x[v];
            s * s
        })
        .sum();
    Ok(num / den)
}

/// Degree-based upper bound on the spectral radius:
/// `max_v { d(v) + (Σ_{w ∈ N(v)} d(w)) / d(v) }` over non-isolated `v`.
/// Isolated vertices contribute only the eigenvalue 0 and are skipped; the
/// bound of an edgeless graph is 0.
pub fn merris_bound(g: &Graph) -> f64 {
    let mut best = 0.0f64;
    for v in 0..g.order() {
        let d = g.degree(v);
        if d == 0 {
            continue;
        }
        let nbr_sum: usize = g.neighbors(v).iter().map(|&w| g.degree(w as usize)).sum();
        best = best.max(d as f64 + nbr_sum as f64 / d as f64);
    }
    best
}
