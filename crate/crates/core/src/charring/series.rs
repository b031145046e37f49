//! Truncated power series in one auxiliary variable `u` with virtual
//! character coefficients.
//!
//! All the series identities in the Hecke layer (graded harmonics, the
//! summed Satake identity, Plancherel orthogonality) compare two such series
//! through a fixed truncation order; `u` is `q^{-1}` in every application.
//! Precision is explicit and all binary operations require equal precision —
//! mixing truncations silently is how series bugs happen.

use std::fmt;

use super::vchar::VirtualChar;
use crate::rootdata::Wt;

/// A power series `Σ_{d < prec} χ_d · u^d` with `χ_d ∈ Z[X]`, truncated at
/// a fixed precision.
#[derive(Clone, PartialEq, Eq)]
pub struct CharSeries {
    rank: usize,
    coeffs: Vec<VirtualChar>,
}

impl CharSeries {
    /// The zero series to the given precision.
    pub fn zero(rank: usize, prec: usize) -> Self {
        assert!(prec > 0);
        Self { rank, coeffs: vec![VirtualChar::zero(rank); prec] }
    }

    /// The constant series `1`.
    pub fn one(rank: usize, prec: usize) -> Self {
        let mut s = Self::zero(rank, prec);
        s.coeffs[0] = VirtualChar::one(rank);
        s
    }

    /// A single term `χ · u^d` (dropped entirely if `d ≥ prec`).
    pub fn monomial(prec: usize, d: usize, chi: VirtualChar) -> Self {
        let mut s = Self::zero(chi.rank(), prec);
        if d < prec {
            s.coeffs[d] = chi;
        }
        s
    }

    /// The geometric series `1/(1 - u·e^wt) = Σ_d u^d e^{d·wt}`.
    pub fn geometric(prec: usize, wt: &[i64]) -> Self {
        let rank = wt.len();
        let mut s = Self::zero(rank, prec);
        for (d, slot) in s.coeffs.iter_mut().enumerate() {
            let scaled: Wt = wt.iter().map(|x| x * d as i64).collect();
            *slot = VirtualChar::monomial(scaled);
        }
        s
    }

    /// Truncation order.
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    /// Weight-lattice dimension.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The coefficient of `u^d`.
    pub fn coeff(&self, d: usize) -> &VirtualChar {
        &self.coeffs[d]
    }

    /// Mutable coefficient access (for building series termwise).
    pub fn coeff_mut(&mut self, d: usize) -> &mut VirtualChar {
        &mut self.coeffs[d]
    }

    fn check_compat(&self, rhs: &Self) {
        assert_eq!(self.rank, rhs.rank, "mixing series over different lattices");
        assert_eq!(self.prec(), rhs.prec(), "mixing series precisions");
    }

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        self.check_compat(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Self { rank: self.rank, coeffs }
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_compat(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Self { rank: self.rank, coeffs }
    }

    /// Truncated product.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_compat(rhs);
        let prec = self.prec();
        let mut out = Self::zero(self.rank, prec);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if i + j >= prec {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
            }
        }
        out
    }

    /// Multiply by a single character (degree 0).
    pub fn mul_char(&self, chi: &VirtualChar) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.mul(chi)).collect();
        Self { rank: self.rank, coeffs }
    }

    /// Integer multiple.
    pub fn scaled(&self, n: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|a| a.scaled(n)).collect();
        Self { rank: self.rank, coeffs }
    }

    /// Multiplicative inverse; requires constant term exactly `1 = e^0`.
    pub fn invert(&self) -> Self {
        assert_eq!(
            self.coeffs[0],
            VirtualChar::one(self.rank),
            "series inversion needs constant term 1"
        );
        let prec = self.prec();
        let mut inv = Self::zero(self.rank, prec);
        inv.coeffs[0] = VirtualChar::one(self.rank);
        for d in 1..prec {
            let mut acc = VirtualChar::zero(self.rank);
            for k in 1..=d {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].mul(&inv.coeffs[d - k]));
            }
            inv.coeffs[d] = VirtualChar::zero(self.rank).sub(&acc);
        }
        inv
    }

    /// Whether all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(VirtualChar::is_zero)
    }

    /// The weight-zero coefficient of each power of `u` — the "constant term
    /// profile" used for orthogonality pairings.
    pub fn weight_zero_profile(&self) -> Vec<i64> {
        let zero: Wt = vec![0; self.rank];
        self.coeffs.iter().map(|c| c.coeff(&zero)).collect()
    }
}

impl fmt::Debug for CharSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            writeln!(f, "u^{d}: {c:?}")?;
        }
        Ok(())
    }
}
