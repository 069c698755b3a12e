//! Arbitrary-precision exact arithmetic kernel.
//!
//! Integers and rationals come from the `num` crates; this module adds the
//! pieces the rest of the crate is built on: quadratic surds with exact signs
//! ([`surd`]), dense integer and rational polynomials with subresultant
//! machinery ([`zpoly`], [`qpoly`]) and Sturm-sequence root counting
//! ([`sturm`]). Everything is immutable after construction and safe to share
//! across threads.

pub mod qpoly;
pub mod sturm;
pub mod surd;
pub mod zpoly;

pub use qpoly::QPoly;
pub use sturm::{
    count_distinct_real_roots, count_real_roots_with_multiplicity,
    count_real_roots_with_multiplicity_closed, sturm_count, surd_sign, Endpoint,
};
pub use surd::{int_sqrt, perfect_sqrt, Surd};
pub use zpoly::ZPoly;
