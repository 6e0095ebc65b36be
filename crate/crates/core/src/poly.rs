//! Closed-form polynomials and radical bounds for the extremal families.
//!
//! For `F = K_{s-1} ∨ (p·K_t ∪ K_r)` with `n - s + 1 = pt + r`, the vertex
//! partition into dominators / `K_t`-block vertices / `K_r` vertices is
//! equitable, and the quotient matrix of `Q(F)` is
//!
//! ```text
//!         | n+s-3   pt      r      |
//!   B  =  | s-1     s+2t-3  0      |
//!         | s-1     0       s+2r-3 |
//! ```
//!
//! whose characteristic polynomial `f` carries the signless Laplacian
//! spectral radius of `F` as its largest root whenever `p >= 1`. The `p = 0`
//! family collapses to a complete graph, where `q = 2n - 2` exactly and the
//! cubic no longer applies.
//!
//! All polynomials here are monic with integer coefficients, stored
//! most-significant first.

use crate::graph::{FamilyParams, GraphError};
use serde::Serialize;

// ---------------------------------------------------------------------------
// Polynomial container and root finding
// ---------------------------------------------------------------------------

/// A monic integer polynomial, coefficients most-significant first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolySpec {
    pub label: String,
    pub coeffs: Vec<i64>,
}

impl PolySpec {
    pub fn new(label: impl Into<String>, coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "polynomial needs at least one coefficient");
        assert_eq!(coeffs[0], 1, "coefficients must be monic");
        PolySpec {
            label: label.into(),
            coeffs,
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation in doubles.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    /// Largest real root, or `None` when every root is strictly complex.
    ///
    /// Works by recursing on derivatives: the real critical points split the
    /// line into monotone intervals, and each sign change is bisected to
    /// machine precision. A root of even multiplicity that is not an exact
    /// float critical point can be missed; the families used here have a
    /// simple largest root, which is always found.
    pub fn largest_real_root(&self) -> Option<f64> {
        let c: Vec<f64> = self.coeffs.iter().map(|&v| v as f64).collect();
        real_roots(&c).last().copied()
    }
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().fold(0.0, |acc, &v| acc * x + v)
}

fn bisect(c: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    // Invariant: sign(p(lo)) != sign(p(hi)), p(lo) < 0 < p(hi) or reverse.
    let neg_at_lo = horner(c, lo) < 0.0;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let fm = horner(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == neg_at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// All real roots found by monotone-interval bisection, ascending.
fn real_roots(c: &[f64]) -> Vec<f64> {
    let degree = c.len() - 1;
    if degree == 0 {
        return Vec::new();
    }
    if degree == 1 {
        return vec![-c[1] / c[0]];
    }
    let deriv: Vec<f64> = (0..degree).map(|i| c[i] * (degree - i) as f64).collect();
    let crits = real_roots(&deriv);
    // Cauchy bound: every root has |x| < 1 + max |a_i / a_0|.
    let bound = 1.0 + c[1..].iter().map(|a| (a / c[0]).abs()).fold(0.0, f64::max);
    let mut pts = vec![-bound];
    pts.extend(crits.into_iter().filter(|x| x.abs() < bound));
    pts.push(bound);
    let mut roots = Vec::new();
    for w in pts.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (horner(c, a), horner(c, b));
        if fa == 0.0 {
            roots.push(a);
        } else if fa * fb < 0.0 {
            roots.push(bisect(c, a, b));
        }
    }
    if horner(c, bound) == 0.0 {
        roots.push(bound);
    }
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * (1.0 + bound));
    roots
}

// ---------------------------------------------------------------------------
// Family polynomials
// ---------------------------------------------------------------------------

/// Quadratic `g` whose largest root bounds `q` of any `K_{s,t}`-minor free
/// graph from above (via the radical form below), and equals `q(F)` exactly
/// when `r = 0`:
/// `g(x) = x^2 + (6-2s-2t-n)x + (n+s-3)(s+2t-3) - (s-1)(n-s+1)`.
pub fn family_quadratic(s: usize, t: usize, n: usize) -> PolySpec {
    let (s, t, n) = (s as i64, t as i64, n as i64);
    PolySpec::new(
        format!("family-quadratic(s={s},t={t},n={n})"),
        vec![
            1,
            6 - 2 * s - 2 * t - n,
            (n + s - 3) * (s + 2 * t - 3) - (s - 1) * (n - s + 1),
        ],
    )
}

/// Shifted quadratic `h = g + (s-1)`, whose larger root bounds `q(F)` from
/// below once the order passes [`sandwich_threshold`].
pub fn family_quadratic_shifted(s: usize, t: usize, n: usize) -> PolySpec {
    let mut p = family_quadratic(s, t, n);
    p.label = format!("family-quadratic-shifted(s={s},t={t},n={n})");
    *p.coeffs.last_mut().unwrap() += s as i64 - 1;
    p
}

/// Cubic `f(x) = (x+3-s-2r)·g(x) - 2r(s-1)(r-t)` with `r = (n-s+1) mod t`;
/// its largest root is `q(F_{s,t}(n))` whenever `p >= 1`.
pub fn family_cubic(s: usize, t: usize, n: usize) -> PolySpec {
    let g = family_quadratic(s, t, n);
    let (b, c) = (g.coeffs[1], g.coeffs[2]);
    let (si, ti, ni) = (s as i64, t as i64, n as i64);
    let r = (ni - si + 1).rem_euclid(ti);
    let k = 3 - si - 2 * r;
    PolySpec::new(
        format!("family-cubic(s={s},t={t},n={n})"),
        vec![1, b + k, c + k * b, k * c - 2 * r * (si - 1) * (r - ti)],
    )
}

/// Characteristic polynomial of the 3x3 equitable-quotient matrix of `Q(F)`,
/// expanded exactly: `x^3 - tr·x^2 + m2·x - det`. Identical to
/// [`family_cubic`] for every valid parameter triple; kept as an independent
/// derivation for cross-checking.
pub fn family_quotient_char_poly(params: &FamilyParams) -> PolySpec {
    let (s, t, n, p, r) = (
        params.s as i64,
        params.t as i64,
        params.n as i64,
        params.p as i64,
        params.r as i64,
    );
    let m = [
        [n + s - 3, p * t, r],
        [s - 1, s + 2 * t - 3, 0],
        [s - 1, 0, s + 2 * r - 3],
    ];
    let tr = m[0][0] + m[1][1] + m[2][2];
    let m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2]
        - m[1][2] * m[2][1];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    PolySpec::new(
        format!(
            "family-quotient-charpoly(s={},t={},n={})",
            params.s, params.t, params.n
        ),
        vec![1, -tr, m2, -det],
    )
}

/// The `K_{2,3}` extremal cubic in its traditional expanded form, with
/// `r = (n-1) mod 3`. Coefficient-identical to `family_cubic(2, 3, n)`.
pub fn k23_extremal_cubic(n: usize) -> PolySpec {
    let ni = n as i64;
    let r = (ni - 1).rem_euclid(3);
    PolySpec::new(
        format!("k23-extremal-cubic(n={n})"),
        vec![
            1,
            -(ni + 2 * r + 3),
            8 * r + 3 * ni + 2 * r * ni - 8,
            14 * r + 4 * ni - 8 * r * ni - 2 * r * r - 4,
        ],
    )
}

/// The `K_{3,3}` extremal cubic in its traditional expanded form, with
/// `r = (n-2) mod 3`. Coefficient-identical to `family_cubic(3, 3, n)`.
pub fn k33_extremal_cubic(n: usize) -> PolySpec {
    let ni = n as i64;
    let r = (ni - 2).rem_euclid(3);
    PolySpec::new(
        format!("k33-extremal-cubic(n={n})"),
        vec![
            1,
            -(ni + 2 * r + 6),
            12 * r + 4 * ni + 2 * r * ni + 4,
            4 * r - 8 * r * ni - 4 * r * r,
        ],
    )
}

// ---------------------------------------------------------------------------
// Radical bounds
// ---------------------------------------------------------------------------

/// Larger root of the family quadratic `g`:
/// `(n + 2s + 2t - 6 + sqrt((n+2s-2t-2)^2 + 8(s-1)(t-s+1))) / 2`.
/// Upper bound on `q` for `K_{s,t}`-minor free graphs of order `n`.
pub fn radical_upper_bound(s: usize, t: usize, n: usize) -> f64 {
    let (s, t, n) = (s as f64, t as f64, n as f64);
    let disc = (n + 2.0 * s - 2.0 * t - 2.0).powi(2) + 8.0 * (s - 1.0) * (t - s + 1.0);
    0.5 * (n + 2.0 * s + 2.0 * t - 6.0 + disc.sqrt())
}

/// Larger root of the shifted quadratic `h = g + (s-1)`: a strict lower
/// bound on `q(F_{s,t}(n))` once `n >= s + 2t^2 - 5`, itself strictly above
/// the integer floor `n + 2s - 4`.
pub fn radical_lower_bound(s: usize, t: usize, n: usize) -> f64 {
    let (s, t, n) = (s as f64, t as f64, n as f64);
    let disc = (n + 2.0 * s - 2.0 * t - 2.0).powi(2) + 4.0 * (s - 1.0) * (2.0 * t - 2.0 * s + 1.0);
    0.5 * (n + 2.0 * s + 2.0 * t - 6.0 + disc.sqrt())
}

/// The `s = 2` radical bound in its traditional display form:
/// `(n + 2t - 2 + sqrt((n-2t+2)^2 + 8t - 8)) / 2`.
pub fn k2t_radical_bound(t: usize, n: usize) -> f64 {
    let (t, n) = (t as f64, n as f64);
    0.5 * (n + 2.0 * t - 2.0 + ((n - 2.0 * t + 2.0).powi(2) + 8.0 * t - 8.0).sqrt())
}

/// Floor of the sandwich: `q(F_{s,t}(n)) >= n + 2s - 4` once
/// `n >= s + 2t^2 - 5`, with equality exactly when `t` divides `n - s + 1`.
pub fn sandwich_lower_bound(s: usize, n: usize) -> f64 {
    (n + 2 * s - 4) as f64
}

/// Order threshold from which the sandwich (and the equality
/// characterization) is guaranteed: `n >= s + 2t^2 - 5`.
pub fn sandwich_threshold(s: usize, t: usize) -> usize {
    s + 2 * t * t - 5
}

// ---------------------------------------------------------------------------
// Closed-form radius
// ---------------------------------------------------------------------------

/// How a closed-form radius value was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ClosedFormSource {
    /// Largest root of the family cubic (`p >= 1`).
    CubicRoot,
    /// The family collapsed to a complete graph (`p = 0`), where `q = 2n-2`.
    CompleteGraph,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosedFormQ {
    pub params: FamilyParams,
    pub q: f64,
    pub source: ClosedFormSource,
    /// The cubic whose root was taken, when one applies.
    pub poly: Option<PolySpec>,
}

/// Closed-form `q(F_{s,t}(n))` without building the graph: the largest root
/// of the family cubic, except in the degenerate `p = 0` regime where the
/// family is a clique and the exact value `2(n-1)` is returned instead.
pub fn q_family_closed(s: usize, t: usize, n: usize) -> Result<ClosedFormQ, GraphError> {
    let params = FamilyParams::new(s, t, n)?;
    if params.p == 0 {
        return Ok(ClosedFormQ {
            params,
            q: if n == 0 { 0.0 } else { 2.0 * (n as f64 - 1.0) },
            source: ClosedFormSource::CompleteGraph,
            poly: None,
        });
    }
    let poly = family_cubic(s, t, n);
    let q = poly
        .largest_real_root()
        .expect("family cubic always has a real root");
    Ok(ClosedFormQ {
        params,
        q,
        source: ClosedFormSource::CubicRoot,
        poly: Some(poly),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_extremal_family;
    use crate::spectral::q_radius;

    #[test]
    fn quadratic_examples() {
        assert_eq!(family_quadratic(2, 3, 10).coeffs, vec![1, -14, 36]);
        assert_eq!(family_quadratic(2, 2, 7).coeffs, vec![1, -9, 12]);
        // Larger roots: 7 + sqrt(13) and (9 + sqrt(33)) / 2.
        let r1 = family_quadratic(2, 3, 10).largest_real_root().unwrap();
        assert!((r1 - 10.605_551_275_463_99).abs() < 1e-12);
        let r2 = family_quadratic(2, 2, 7).largest_real_root().unwrap();
        assert!((r2 - 7.372281323269014).abs() < 1e-12);
    }

    #[test]
    fn shifted_quadratic_adds_constant() {
        let g = family_quadratic(3, 4, 30);
        let h = family_quadratic_shifted(3, 4, 30);
        assert_eq!(h.coeffs[2] - g.coeffs[2], 2);
        assert!(h.largest_real_root().unwrap() < g.largest_real_root().unwrap());
    }

    #[test]
    fn cubic_hand_expansions() {
        // (x+1)(x^2 - 26x + 84) at (2,3,22); r = 0 there.
        assert_eq!(family_cubic(2, 3, 22).coeffs, vec![1, -25, 58, 84]);
        assert_eq!(family_cubic(2, 3, 23).coeffs, vec![1, -28, 115, -84]);
        assert_eq!(family_cubic(3, 3, 8).coeffs, vec![1, -14, 36, 0]);
        // The paw graph is F_{2,2}(4).
        assert_eq!(family_cubic(2, 2, 4).coeffs, vec![1, -7, 12, -4]);
        let paw_q = family_cubic(2, 2, 4).largest_real_root().unwrap();
        assert!((paw_q - 4.561552812808829).abs() < 1e-12);
    }

    #[test]
    fn expanded_cubics_match_general_form() {
        for n in 4..=120 {
            assert_eq!(k23_extremal_cubic(n).coeffs, family_cubic(2, 3, n).coeffs);
        }
        for n in 5..=120 {
            assert_eq!(k33_extremal_cubic(n).coeffs, family_cubic(3, 3, n).coeffs);
        }
    }

    #[test]
    fn quotient_char_poly_matches_cubic() {
        for (s, t) in [(2, 2), (2, 3), (2, 5), (3, 3), (3, 4), (4, 6)] {
            for n in (s + t)..=90 {
                let params = crate::graph::FamilyParams::new(s, t, n).unwrap();
                if params.p == 0 {
                    continue;
                }
                assert_eq!(
                    family_quotient_char_poly(&params).coeffs,
                    family_cubic(s, t, n).coeffs,
                    "s={s} t={t} n={n}"
                );
            }
        }
    }

    #[test]
    fn closed_form_matches_eigensolver() {
        for (s, t) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
            for n in (s + t)..=36 {
                let closed = q_family_closed(s, t, n).unwrap();
                let (g, _) = build_extremal_family(s, t, n).unwrap();
                let solved = q_radius(&g).unwrap().q;
                assert!(
                    (closed.q - solved).abs() < 1e-9,
                    "s={s} t={t} n={n}: closed {} vs solved {}",
                    closed.q,
                    solved
                );
            }
        }
    }

    #[test]
    fn closed_form_complete_graph_regime() {
        // n - s + 1 < t collapses the family to K_n.
        for (s, t, n) in [(2, 3, 3), (2, 5, 5), (3, 4, 5), (2, 4, 4)] {
            let closed = q_family_closed(s, t, n).unwrap();
            assert_eq!(closed.source, ClosedFormSource::CompleteGraph);
            assert_eq!(closed.q, 2.0 * (n as f64 - 1.0));
            let (g, _) = build_extremal_family(s, t, n).unwrap();
            assert!((closed.q - q_radius(&g).unwrap().q).abs() < 1e-10);
        }
    }

    #[test]
    fn sandwich_chain_on_family_radius() {
        // For n past the threshold: n+2s-4 < h-root < q(F) <= g-root,
        // with the upper equality exactly when t | n-s+1.
        for (s, t) in [(2, 2), (2, 4), (3, 3), (3, 4)] {
            for n in (s + t)..=140 {
                let closed = q_family_closed(s, t, n).unwrap();
                let q = closed.q;
                let upper = radical_upper_bound(s, t, n);
                let lower = radical_lower_bound(s, t, n);
                assert!(lower < upper, "s={s} t={t} n={n}");
                if n >= sandwich_threshold(s, t) {
                    assert!(
                        sandwich_lower_bound(s, n) < lower,
                        "s={s} t={t} n={n}: floor vs {lower}"
                    );
                    assert!(lower < q, "s={s} t={t} n={n}: {lower} vs {q}");
                    assert!(q <= upper + 1e-9, "s={s} t={t} n={n}: {q} vs {upper}");
                    let tight = (q - upper).abs() < 1e-8;
                    assert_eq!(tight, closed.params.r == 0, "s={s} t={t} n={n}");
                }
            }
        }
    }

    #[test]
    fn k2t_display_form_is_the_s2_bound() {
        for t in 2..=6 {
            for n in (t + 2)..=200 {
                let a = k2t_radical_bound(t, n);
                let b = radical_upper_bound(2, t, n);
                assert!((a - b).abs() < 1e-10, "t={t} n={n}");
            }
        }
    }

    #[test]
    fn largest_root_edge_cases() {
        // x^2 + 1 has no real root.
        let p = PolySpec::new("irreducible", vec![1, 0, 1]);
        assert_eq!(p.largest_real_root(), None);
        // x^3 - x: roots -1, 0, 1.
        let p = PolySpec::new("cube-minus-x", vec![1, 0, -1, 0]);
        assert!((p.largest_real_root().unwrap() - 1.0).abs() < 1e-14);
        // Linear.
        let p = PolySpec::new("linear", vec![1, -5]);
        assert!((p.largest_real_root().unwrap() - 5.0).abs() < 1e-14);
    }

    #[test]
    fn eval_matches_hand_values() {
        let f = family_cubic(2, 3, 22);
        assert_eq!(f.eval_f64(0.0), 84.0);
        assert_eq!(f.eval_f64(1.0), 1.0 - 25.0 + 58.0 + 84.0);
    }
}
