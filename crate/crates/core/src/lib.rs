//! Equidistant linear codes in projective spaces over finite fields.
//!
//! The crate builds subspaces of F_q^n, linear subspace codes with an
//! explicit addition table, the classical equidistant constructions (Fano,
//! sunflower, hyperplane, Steiner-triple-system lifts), and exhaustive
//! searches for intersecting families of subspaces.

pub mod construct;
pub mod designs;
pub mod error;
pub mod gfq;
pub mod lincode;
pub mod search;
pub mod subspace;

pub use construct::{
    fano_code, hyperplane_family, sts_lift, sunflower, sunflower_code_binary, trim_family, IntersectingFamily,
    LiftMode, Sunflower,
};
pub use designs::{sts_boolean, sts_make, verify_sts, Sts};
pub use error::{Error, Result};
pub use gfq::{field, Field, FieldElement, FieldOp, FieldSpec};
pub use lincode::{
    check_lemma_suite, metrics, structure_analysis, verify_linear, Axiom, CodeFile, CodeMetrics, LinearCode,
    VerificationReport,
};
pub use search::{max_intersecting_family, max_intersecting_family_with, SearchOptions, SearchOrder, SearchResult};
pub use subspace::{
    enumerate_grassmannian, gaussian_binomial, grassmannian, projective_space_size, Subspace,
    Vector,
};
