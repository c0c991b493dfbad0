//! Exact computation with λ-Pfaffians of skew-symmetric matrices.
//!
//! The λ-Pfaffian is a one-parameter deformation of the Pfaffian. It can be
//! computed two independent ways: as a weighted sum over perfect matchings
//! (weights read off the crossing and nesting statistics of each matching),
//! or by a deformed Dodgson-style condensation recurrence that divides out
//! central minors. Both algorithms live in [`pfaffian`]; their agreement on
//! generic matrices is the central consistency check of this crate.
//!
//! Module map:
//! - [`ring`] — sparse multivariate polynomials over arbitrary-precision
//!   integers: the value type for everything else.
//! - [`matchings`] — perfect matching enumeration, crossing/nesting
//!   statistics, matching weights.
//! - [`pfaffian`] — skew-symmetric matrices, minors, the two λ-Pfaffian
//!   algorithms, the recurrence verifier, and the classical (λ=1) Pfaffian.
//! - [`involution`] — the executable cancellation involution on pairs of
//!   matchings that certifies the condensation recurrence term by term.
//! - [`identities`] — one verifier per closed-form λ-Pfaffian identity
//!   (block determinant, all-ones, x·y entries, x−y entries, x−x entries,
//!   the crossing/nesting continued fraction).

pub mod identities;
pub mod involution;
pub mod matchings;
pub mod pfaffian;
pub mod ring;

pub use pfaffian::SkewMatrix;
pub use ring::{Polynomial, VarId};
