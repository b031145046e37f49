//! Exact scalar arithmetic.
//!
//! Three scalar domains cover everything the rest of the crate needs:
//!
//! * [`LaurentScalar`] — Laurent polynomials in the formal variable `v` with
//!   `v^2 = q`, over arbitrary-precision integers.  Half-integral powers of
//!   `q` (ubiquitous in spherical function normalizations) are integral
//!   powers of `v`, so no denominators ever appear.
//! * [`CycLaurent`] — elements of the group ring `Z[v^{±1}][ζ]` for `ζ` a
//!   primitive p-th root of unity.  Additive character sums live here until
//!   they are proved to collapse into the base ring.
//! * [`SqrtVal`] — numbers `a + b·√p` with rational `a, b`, the image of a
//!   `LaurentScalar` under `v ↦ √p`.  Comparing two of these is the exact
//!   way to compare symbolic values "at `q = p`".
//!
//! [`qpoly`] holds plain integer polynomials in one variable `q` (ascending
//! coefficient vectors) with exact division, and [`linalg`] a dense rational
//! Gaussian elimination for the small linear systems used in root-coordinate
//! conversions and basis triangularization.

mod cyclo;
mod laurent;
pub mod linalg;
pub mod qpoly;

pub use cyclo::CycLaurent;
pub use laurent::{rat_pow, LaurentScalar, SqrtVal};

use num_bigint::BigInt;
use num_rational::Ratio;

/// Arbitrary-precision integer used for all exact coefficients.
pub type Int = BigInt;

/// Arbitrary-precision rational.
pub type Rat = Ratio<BigInt>;

/// Convenience: an `Int` from a machine integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Convenience: a `Rat` from a machine integer pair `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}
