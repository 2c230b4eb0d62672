//! Exact symbolic computation over a concrete non-Archimedean model of the
//! hyperreals, for studying free lattice-ordered groups and Riesz spaces
//! through their prime spectra.
//!
//! The library works over points whose coordinates are finite formal series
//! in a positive infinitesimal `e` with real algebraic coefficients. On top
//! of that model it provides:
//!
//! - exact ordered-field arithmetic in number fields `Q(th)` with certified
//!   sign determination ([`coeff`]),
//! - the series arithmetic itself, with standard parts and the
//!   infinitesimal/limited/unlimited classification ([`series`]),
//! - an AST, parser, and evaluators for lattice-group and Riesz terms, i.e.
//!   piecewise homogeneous linear functions ([`term`]),
//! - orthogonal decomposition of hyperreal points into indexes, rational
//!   envelopes, Z-reduction, specialization predicates, and constructive
//!   separating functionals ([`index`]),
//! - prime-ideal membership oracles, the C/V Galois operators on finite
//!   data, v-cones, strong-order-unit checks, and an independent polyhedral
//!   fan cross-check ([`spectrum`]).
//!
//! The `examples/` directory of this crate contains one runnable example per
//! capability; `cargo run --example decompose_point` is a good starting
//! point. A thin command-line binary (`nonstd-cones`) exposes the same
//! operations for batch use.
//!
//! ```
//! use nonstd_cones::index::{index_of, riesz_specializes};
//! use nonstd_cones::series::parse_point;
//! use nonstd_cones::{Dialect, NumberFieldSpec, Term};
//!
//! let field = NumberFieldSpec::rational();
//! let point = parse_point("(1, e)", 2, &field)?;
//! // The index of (1, e) has two directions: the point hugs the first
//! // axis to infinitesimal order.
//! assert_eq!(index_of(&point)?.len(), 2);
//! // Its axis shadow (1, 0) lies in the closure of (1, e)...
//! let shadow = parse_point("(1, 0)", 2, &field)?;
//! assert!(riesz_specializes(&shadow, &point)?);
//! // ...which is why every term of the defining family vanishes there.
//! let t = Term::parse_q("0 /\\ x0 /\\ x1 /\\ (x0 - 7*x1)", 2, Dialect::LGroup)?;
//! assert!(t.eval_series(&point)?.is_zero());
//! # Ok::<(), nonstd_cones::Error>(())
//! ```

pub mod cli;
pub mod coeff;
pub mod index;
mod linalg;
pub mod selftest;
pub mod series;
pub mod spectrum;
pub mod term;
mod text;

pub use coeff::{FieldElement, NumberFieldSpec, Rational};
pub use index::{Decomposition, Direction, Index, RationalSubspace};
pub use series::EpsSeries;
pub use spectrum::{FanPiece, PrimeIdealHandle, VCone};
pub use term::{Dialect, LinearForm, Term};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("field specs do not match")]
    FieldMismatch,
    #[error("inversion of zero field element")]
    ZeroInversion,
    #[error("minimal polynomial is not valid: {0}")]
    BadMinPoly(String),
    #[error("isolating interval is not valid: {0}")]
    BadInterval(String),
    #[error("standard part of an unlimited series")]
    Unlimited,
    #[error("leading term of the zero series")]
    ZeroSeries,
    #[error("operation undefined on the zero vector")]
    ZeroPoint,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable x{var} out of range for arity {arity}")]
    VarOutOfRange { var: usize, arity: usize },
    #[error("dialect violation: {0}")]
    DialectViolation(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("not an index: {0}")]
    BadIndex(String),
    #[error("v-cone radii must be strictly positive")]
    BadRadii,
    #[error("points do specialize; no separating form exists")]
    NotSeparable,
    #[error("arity {0} exceeds the fan enumeration guard (n <= 3)")]
    ArityGuard(usize),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
