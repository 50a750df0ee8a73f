//! Affine short-Weierstrass elliptic-curve arithmetic built around
//! single-inversion composite point operations.
//!
//! The affine group law pays one field inversion per step, which dominates
//! its cost. This crate implements direct formulas that batch several
//! steps — repeated doublings `[4]P`, `[8]P`, `[16]P`, the triple `[3]P`,
//! and combined forms up to `[2^n]P + [m]Q` — behind a single shared
//! denominator, so each composite block costs exactly one inversion. On
//! top of them sit scalar-multiplication ladders driven by binary, NAF,
//! base-16, and mixed base-16/32 signed recodings of the scalar, including
//! the `P + [k]Q` kernel shape.
//!
//! All field arithmetic is routed through explicit operation counters, so
//! the inversion-count claims of every routine are checkable, and an
//! x-only Montgomery ladder is included as the classical inversion-free
//! baseline.

pub mod composite;
pub mod curve;
pub mod fp;
pub mod hooks;
pub mod ladders;
pub mod montgomery;
pub mod recode;
pub mod rng;

pub use composite::{CompositeError, CompositeResult, SlopeChain};
pub use curve::{AffinePoint, CurveError, CurveParams};
pub use fp::{FieldCtx, FieldElement, FpError, OpCounter, PrimeModulus};
pub use ladders::{LadderAlgorithm, LadderTrace};
pub use recode::MixedBaseRepr;
