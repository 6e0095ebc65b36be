//! Upper-bound certificates for the spectral radius.
//!
//! If `A` is entrywise nonnegative and irreducible and some nonnegative
//! `y != 0` satisfies `Ay <= r·y` pointwise, then the spectral radius of `A`
//! is at most `r`. Applied to `Q(G)` per connected component, a certificate
//! `(y, r)` that passes the row check on every vertex — with `y` not
//! identically zero on any component — proves `q(G) <= r`.
//!
//! Certificates built from rational data are checked in exact rational
//! arithmetic; float certificates (e.g. a computed Perron vector) are checked
//! with an explicit tolerance.

use crate::graph::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive, Zero};
use thiserror::Error;

pub type Rat = BigRational;

/// Convenience: `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Default slack for float-mode row checks.
pub const DEFAULT_CERT_TOL: f64 = 1e-8;

#[derive(Debug, Error, PartialEq)]
pub enum CertificateError {
    #[error("certificate length {got} does not match graph order {want}")]
    LengthMismatch { got: usize, want: usize },
    #[error("certificate entry {index} is negative")]
    NegativeEntry { index: usize },
    #[error("certificate vector is identically zero")]
    ZeroVector,
    #[error("certificate entry {index} is not finite")]
    NonFinite { index: usize },
    #[error("hub certificate needs order >= 5, got {0}")]
    OrderTooSmall(usize),
}

#[derive(Clone, Debug)]
enum CertData {
    Float { y: Vec<f64>, r: f64 },
    Exact { y: Vec<Rat>, r: Rat },
}

/// A candidate witness that `q(g) <= r`.
#[derive(Clone, Debug)]
pub struct BoundCertificate {
    data: CertData,
}

impl BoundCertificate {
    pub fn from_floats(y: Vec<f64>, r: f64) -> Self {
        BoundCertificate {
            data: CertData::Float { y, r },
        }
    }

    pub fn exact(y: Vec<Rat>, r: Rat) -> Self {
        BoundCertificate {
            data: CertData::Exact { y, r },
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.data, CertData::Exact { .. })
    }

    /// The certified bound as a float (rounded if exact).
    pub fn bound(&self) -> f64 {
        match &self.data {
            CertData::Float { r, .. } => *r,
            CertData::Exact { r, .. } => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Certificate for graphs with two heavy vertices at labels 0 and 1
    /// (degrees up to `n-2`) and all other degrees at most `(n+16)/6`:
    /// `y = 1` on the hubs, `3/(n-2)` elsewhere, bound `n + 2`. Exact.
    pub fn paired_hubs(n: usize) -> Result<Self, CertificateError> {
        if n < 5 {
            return Err(CertificateError::OrderTooSmall(n));
        }
        let mut y = vec![rat(3, (n - 2) as i64); n];
        y[0] = rat(1, 1);
        y[1] = rat(1, 1);
        Ok(Self::exact(y, rat((n + 2) as i64, 1)))
    }

    /// Certificate for graphs with a dominating vertex at label 0, a second
    /// heavy vertex at label 1, and all other degrees at most `n/16 + 23/8`:
    /// `y = (1, 3/4, 2/(n-2), ...)`, bound `n + 2`. Exact.
    pub fn dominant_hub(n: usize) -> Result<Self, CertificateError> {
        if n < 5 {
            return Err(CertificateError::OrderTooSmall(n));
        }
        let mut y = vec![rat(2, (n - 2) as i64); n];
        y[0] = rat(1, 1);
        y[1] = rat(3, 4);
        Ok(Self::exact(y, rat((n + 2) as i64, 1)))
    }
}

/// Row-check outcome. `Reject` reports the first failing vertex with both
/// sides of its row inequality (as floats, for display).
#[derive(Clone, Debug, PartialEq)]
pub enum CertVerdict {
    Accept,
    Reject { vertex: usize, lhs: f64, rhs: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct CertReport {
    pub verdict: CertVerdict,
    /// Whether the check ran in exact rational arithmetic.
    pub exact: bool,
    /// Per connected component (ordered by minimum vertex): does `y` have a
    /// nonzero entry there? The spectral bound transfers only to components
    /// where it does.
    pub component_applicable: Vec<bool>,
    /// True when every component carries certificate mass, so `Accept`
    /// certifies the radius of the whole graph.
    pub covers_all_components: bool,
}

/// Checks `(Q(g) y)_v <= r·y_v + tol` for every vertex (tol is ignored — and
/// the comparison exact — for rational certificates).
pub fn certify_upper_bound(
    g: &Graph,
    cert: &BoundCertificate,
    tol: f64,
) -> Result<CertReport, CertificateError> {
    let n = g.order();
    let (verdict, exact, nonzero): (CertVerdict, bool, Vec<bool>) = match &cert.data {
        CertData::Float { y, r } => {
            if y.len() != n {
                return Err(CertificateError::LengthMismatch { got: y.len(), want: n });
            }
            for (i, v) in y.iter().enumerate() {
                if !v.is_finite() {
                    return Err(CertificateError::NonFinite { index: i });
                }
                if *v < 0.0 {
                    return Err(CertificateError::NegativeEntry { index: i });
                }
            }
            if !r.is_finite() {
                return Err(CertificateError::NonFinite { index: usize::MAX });
            }
            if y.iter().all(|&v| v == 0.0) {
                return Err(CertificateError::ZeroVector);
            }
            let mut verdict = CertVerdict::Accept;
            for v in 0..n {
                let mut lhs = g.degree(v) as f64 * y[v];
                for &w in g.neighbors(v) {
                    lhs += y[w as usize];
                }
                let rhs = r * y[v];
                if lhs > rhs + tol {
                    verdict = CertVerdict::Reject { vertex: v, lhs, rhs };
                    break;
                }
            }
            (verdict, false, y.iter().map(|&v| v != 0.0).collect())
        }
        CertData::Exact { y, r } => {
            if y.len() != n {
                return Err(CertificateError::LengthMismatch { got: y.len(), want: n });
            }
            for (i, v) in y.iter().enumerate() {
                if v < &Rat::zero() {
                    return Err(CertificateError::NegativeEntry { index: i });
                }
            }
            if y.iter().all(|v| v.is_zero()) {
                return Err(CertificateError::ZeroVector);
            }
            let mut verdict = CertVerdict::Accept;
            for v in 0..n {
                let mut lhs = Rat::from_usize(g.degree(v)).unwrap() * &y[v];
                for &w in g.neighbors(v) {
                    lhs += &y[w as usize];
                }
                let rhs = r * &y[v];
                if lhs > rhs {
                    verdict = CertVerdict::Reject {
                        vertex: v,
                        lhs: lhs.to_f64().unwrap_or(f64::NAN),
                        rhs: rhs.to_f64().unwrap_or(f64::NAN),
                    };
                    break;
                }
            }
            (verdict, true, y.iter().map(|v| !v.is_zero()).collect())
        }
    };
    let component_applicable: Vec<bool> = g
        .components()
        .iter()
        .map(|comp| comp.iter().any(|&v| nonzero[v]))
        .collect();
    let covers_all_components = component_applicable.iter().all(|&b| b);
    Ok(CertReport {
        verdict,
        exact,
        component_applicable,
        covers_all_components,
    })
}
