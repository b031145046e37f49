//! The group ring `Z[v^{±1}][ζ]` for `ζ` a primitive p-th root of unity.
//!
//! Sums of additive character values `ζ^r · (power of v)` accumulate here.
//! The only relation is `1 + ζ + ζ^2 + … + ζ^{p-1} = 0`; an element reduces
//! to the base ring `Z[v^{±1}]` exactly when, after subtracting a multiple of
//! that relation, all the coefficients of `ζ, …, ζ^{p-1}` vanish.  Theorem
//! checks use this reduction as an *assertion*: a Gauss-sum cancellation
//! really happened iff the reduction succeeds.

use std::fmt;

use super::laurent::LaurentScalar;

/// An element `Σ_{j=0}^{p-1} a_j(v) · ζ^j` with `a_j ∈ Z[v^{±1}]`.
///
/// The representation is *not* canonical (the `a_j` are stored as given);
/// [`CycLaurent::reduce`] produces the canonical base-ring value or reports
/// the obstruction.
#[derive(Clone, Debug)]
pub struct CycLaurent {
    p: u32,
    comps: Vec<LaurentScalar>,
}

impl CycLaurent {
    /// The zero element over the p-th roots of unity.
    pub fn zero(p: u32) -> Self {
        assert!(p >= 2, "need p >= 2");
        Self {
            p,
            comps: vec![LaurentScalar::zero(); p as usize],
        }
    }

    /// The order of the root of unity.
    pub fn order(&self) -> u32 {
        self.p
    }

    /// Add `a · ζ^j` in place (`j` is reduced mod p; negative `j` allowed).
    pub fn add_zeta_term(&mut self, j: i64, a: &LaurentScalar) {
        let idx = j.rem_euclid(self.p as i64) as usize;
        let slot = &mut self.comps[idx];
        *slot = &*slot + a;
    }

    /// Add another element in place.
    pub fn add_assign(&mut self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "mixing roots of unity of different order");
        for (s, r) in self.comps.iter_mut().zip(&rhs.comps) {
            *s = &*s + r;
        }
    }

    /// Multiply every component by a base-ring scalar.
    pub fn scale(&self, c: &LaurentScalar) -> Self {
        Self {
            p: self.p,
            comps: self.comps.iter().map(|a| a * c).collect(),
        }
    }

    /// Reduce to the base ring `Z[v^{±1}]`.
    ///
    /// Subtracting `a_{p-1} · (1 + ζ + … + ζ^{p-1}) = 0` normalizes the top
    /// coefficient to zero; the element lies in the base ring iff the
    /// remaining `ζ^j` (0 < j < p-1) coefficients then vanish, and its value
    /// is `a_0 - a_{p-1}`.  Returns `Err` with the first obstruction
    /// otherwise.
    pub fn reduce(&self) -> Result<LaurentScalar, String> {
        let top = &self.comps[self.p as usize - 1];
        for (j, a) in self.comps.iter().enumerate().skip(1) {
            if j == self.p as usize - 1 {
                continue;
            }
            let norm = a - top;
            if !norm.is_zero() {
                return Err(format!(
                    "coefficient of ζ^{j} does not cancel: {norm}"
                ));
            }
        }
        Ok(&self.comps[0] - top)
    }

    /// Whether the element reduces to zero.
    pub fn is_zero_reduced(&self) -> bool {
        matches!(self.reduce(), Ok(v) if v.is_zero())
    }
}

impl fmt::Display for CycLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, a) in self.comps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "({a})")?;
            } else {
                write!(f, "({a})·ζ^{j}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
