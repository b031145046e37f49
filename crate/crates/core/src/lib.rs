//! Exact computational algebra for the spherical Hecke algebra of a split
//! reductive group over a local field, its Satake transform, and the
//! associated Whittaker / spherical function data.
//!
//! Everything here is exact: scalars are Laurent polynomials in `v` (a square
//! root of the residue cardinality `q`, so `v^2 = q`) with arbitrary-precision
//! integer coefficients, p-adic matrix entries are finite Laurent polynomials
//! in a uniformizer over the residue field, and additive characters take
//! values in the integral group ring of the p-th roots of unity.  No floating
//! point is used anywhere, so every identity test is an exact equality of
//! canonical forms.
//!
//! The crate is organized in layers:
//!
//! * [`exactalg`] — scalar rings: Laurent polynomials in `v`, cyclotomic
//!   integers, rational linear algebra.
//! * [`rootdata`] — root systems of type `GL_n` and the simple rank ≤ 3
//!   types, Weyl groups, dominance order, Kostant partition counts.
//! * [`charring`] — the representation ring: weight multiplicities via
//!   Freudenthal, virtual characters, truncated character series.
//! * [`hecke`] — the spherical Hecke algebra: Lusztig–Kato polynomials, the
//!   `c`/`H` bases, convolution, Satake parameters, Whittaker values,
//!   Kostant harmonics, Plancherel data.
//! * [`padic`] — brute-force integration over the group: Hermite lattice
//!   representatives, Cartan and Iwasawa decompositions, Fourier coefficients
//!   of spherical functions against a Whittaker character.
//! * [`stalks`] — graded local data of intersection cohomology sheaves on
//!   the affine Grassmannian and the sheaf-theoretic local counting function
//!   attached to an unramified Langlands parameter.

pub mod charring;
pub mod error;
pub mod exactalg;
pub mod hecke;
pub mod padic;
pub mod rootdata;
pub mod stalks;

pub use charring::{CharSeries, QChar, VirtualChar};
pub use error::{Error, Result};
pub use exactalg::{CycLaurent, Int, LaurentScalar, Rat, SqrtVal};
pub use hecke::{Basis, HeckeCtx, HeckeElt, LkRow, LkTable};
pub use rootdata::{RootSystem, Wt};
