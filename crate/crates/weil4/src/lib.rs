//! Exact decision procedures for degree-8 Weil polynomials over finite fields.
//!
//! A monic integer polynomial of degree 8 whose roots are conjugate pairs of
//! modulus `sqrt(q)` is determined by a coefficient quadruple `(a1, a2, a3, a4)`
//! together with `q = p^n`:
//!
//! ```text
//! p(t) = t^8 + a1 t^7 + a2 t^6 + a3 t^5 + a4 t^4 + q a3 t^3 + q^2 a2 t^2 + q^3 a1 t + q^4
//! ```
//!
//! This crate decides, with exact arithmetic only:
//!
//! * whether a quadruple yields a Weil polynomial ([`weil`]), via an explicit
//!   coefficient characterization and, independently, via a generic Sturm-based
//!   oracle;
//! * whether an irreducible Weil polynomial is the characteristic polynomial of
//!   Frobenius of a dimension-4 abelian variety, together with its p-rank and
//!   supersingularity ([`classify`]), via Newton polygons and p-adic root and
//!   factor detection ([`padic`]);
//! * the full list of supersingular quadruples for a given `q`
//!   ([`classify::supersingular`]);
//! * exhaustive censuses over the pruned coefficient box for small `q`, with
//!   dual-path cross-validation ([`census`]).
//!
//! The arithmetic kernel ([`exact`]) provides rationals, quadratic surds
//! `a + b*sqrt(q)`, dense polynomials, Sturm sequences and subresultants; no
//! floating point is used anywhere on a decision path (floats appear only in
//! clearly-marked diagnostics).

// pub mod census;
// pub mod classify;
pub mod exact;
pub mod numeric;
// pub mod padic;
// pub mod record;
pub mod weil;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
