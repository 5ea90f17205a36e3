//! Exact-arithmetic solver for one-parameter polynomial linear programs.
//!
//! A 1-PLP is a system `A(d) x >= b(d)` whose coefficients are univariate
//! polynomials in a parameter `d`. This crate decides feasibility on a
//! punctured neighbourhood of `d = 0` — separately for the negative side,
//! the origin, and the positive side — entirely in rational arithmetic.
//! Feasible verdicts come with a rational-function solution `x(d)` and a
//! certified radius on which it satisfies every constraint, verifiable by
//! Sturm-sequence root counting. Infeasible verdicts are sound thanks to a
//! degree bound on rational solutions.
//!
//! On top of the core solver sit three applications:
//! - local optimization of a parametric LP (feasible / unbounded / optimal
//!   value as a rational function),
//! - potential-function search proving ergodicity of probabilistic cellular
//!   automata on {0,1,?} alphabets,
//! - potential-function search for broadcasting of a bit on a grid.
//!
//! See the `examples/` directory for runnable entry points into each
//! capability.

pub mod automata;
pub mod json;
pub mod lp;
pub mod opt;
pub mod plp;
pub mod poly;
pub mod ratfunc;
pub mod sturm;

/// Crate-wide error type. Solver verdicts (infeasible, unbounded,
/// unknown-at-cap) are ordinary return values, not errors; errors mark
/// contract violations and malformed input.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero-polynomial has no root structure")]
    ZeroPolynomial,
    #[error("not positive near zero")]
    NotPositiveNearZero,
    #[error("forced-zero undefined on empty set")]
    ForcedZeroOnEmptySet,
    #[error("caller must promote to equality")]
    MustPromoteToEquality,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
