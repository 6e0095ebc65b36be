//! Spectral extremes of minor-free graph families.
//!
//! The library is organized around one family of graphs: the join of a clique
//! `K_{s-1}` with a disjoint union of `p` cliques `K_t` and one remainder
//! clique `K_r` (where `n - s + 1 = p*t + r`, `0 <= r < t`). These graphs
//! maximize the signless Laplacian spectral radius `q` among graphs with no
//! `K_{s,t}` minor, and everything here either builds them, computes `q`
//! (iteratively or via exact characteristic polynomials), decides minor
//! containment with explicit witnesses, or verifies the published bounds at
//! desk scale by exhaustive enumeration and local search.
//!
//! Modules:
//! - [`graph`]: immutable simple graphs, join/union constructors, the extremal
//!   family builder, degree statistics.
//! - [`graph6`]: bit-exact graph6 parsing and writing.
//! - [`spectral`]: signless Laplacian spectral radius (power iteration with a
//!   dense Jacobi fallback), Rayleigh quotients, the degree-based Merris bound.
//! - [`certificate`]: upper-bound certificates `Qy <= r y`, checked in exact
//!   rational arithmetic when the data is rational.
//! - [`poly`]: exact integer characteristic polynomials of the family, radical
//!   closed forms, bracketed root extraction.
//! - [`minor`]: minor detection for complete-bipartite, complete, and star
//!   patterns, with witnesses, edge-maximality, and edge-count bound reports.
//! - [`canon`]: canonical labeling / canonical graph6 form.
//! - [`enumerate`]: exhaustive isomorph-free graph enumeration (desk scale).
//! - [`search`]: path-rewiring moves, local search, exhaustive extremal search.
//! - [`lemmas`]: degree-profile hypothesis checks and spectral predicates.
//! - [`theorems`]: named verification suites producing machine-readable
//!   reports.

#![forbid(unsafe_code)]

pub mod bits;
pub mod canon;
pub mod certificate;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod lemmas;
pub mod minor;
pub mod poly;
pub mod report;
pub mod search;
pub mod spectral;
pub mod theorems;

pub use certificate::{certify_upper_bound, BoundCertificate, CertReport, CertVerdict};
pub use graph::{DegreeStats, FamilyParams, Graph, GraphError};
pub use graph6::{parse_graph6, write_graph6, Graph6Error};
pub use minor::{has_minor, verify_witness, MinorError, MinorPattern, MinorWitness};
pub use poly::{q_family_closed, PolySpec};
pub use spectral::{q_radius, SpectralResult};


