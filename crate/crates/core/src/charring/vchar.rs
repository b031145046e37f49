//! Virtual characters with integer and Laurent-scalar coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::exactalg::{Int, LaurentScalar, Rat, SqrtVal};
use crate::rootdata::{RootSystem, WeylElt, Wt};

/// An element of the group ring `Z[X]` of the weight lattice: a finite
/// integer combination of formal exponentials `e^μ`.  Canonical form: no
/// zero coefficients are stored, so `==` is exact equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct VirtualChar {
    rank: usize,
    terms: BTreeMap<Wt, i64>,
}

impl VirtualChar {
    /// The zero element.
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    /// The unit `e^0`.
    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank])
    }

    /// A single exponential `e^wt`.
    pub fn monomial(wt: Wt) -> Self {
        let rank = wt.len();
        let mut terms = BTreeMap::new();
        terms.insert(wt, 1);
        Self { rank, terms }
    }

    /// Coordinate dimension of the underlying weight lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct weights in the support.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `e^wt`.
    pub fn coeff(&self, wt: &[i64]) -> i64 {
        self.terms.get(wt).copied().unwrap_or(0)
    }

    /// Iterate over `(weight, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Wt, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    /// Add `c·e^wt` in place.
    pub fn add_term(&mut self, wt: &[i64], c: i64) {
        debug_assert_eq!(wt.len(), self.rank);
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(wt.to_vec()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(wt);
        }
    }

    /// Insert a coefficient, asserting the weight was not yet present —
    /// used when spreading dominant multiplicities over disjoint orbits.
    pub fn set_coeff_if_absent(&mut self, wt: Wt, c: i64) {
        debug_assert_eq!(wt.len(), self.rank);
        if c == 0 {
            return;
        }
        let prev = self.terms.insert(wt, c);
        debug_assert!(prev.is_none(), "weight already present");
    }

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, *c);
        }
        out
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, -c);
        }
        out
    }

    /// Product (convolution of weights).
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let sum: Wt = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                out.add_term(&sum, c1 * c2);
            }
        }
        out
    }

    /// Integer multiple.
    pub fn scaled(&self, n: i64) -> Self {
        if n == 0 {
            return Self::zero(self.rank);
        }
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c * n)).collect();
        Self { rank: self.rank, terms }
    }

    /// Exact division of all coefficients by `n` (panics if inexact).
    pub fn divided_exact(&self, n: i64) -> Self {
        assert!(n != 0);
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                assert!(c % n == 0, "inexact character division by {n}");
                (w.clone(), c / n)
            })
            .collect();
        Self { rank: self.rank, terms }
    }

    /// Transform every weight (e.g. Adams scaling); coefficients of weights
    /// that collide are added.
    pub fn map_weights(&self, f: impl Fn(&Wt) -> Wt) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(&f(w), *c);
        }
        out
    }

    /// The dual character (weights negated).
    pub fn dual(&self) -> Self {
        self.map_weights(|w| w.iter().map(|x| -x).collect())
    }

    /// Apply a Weyl group element to every weight.
    pub fn apply_weyl(&self, w: &WeylElt) -> Self {
        self.map_weights(|wt| w.apply(wt))
    }

    /// Value at the identity: the (virtual) dimension.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value at a diagonal point with nonzero rational eigenvalues:
    /// `Σ_w mult(w) · γ^w`.
    pub fn eval_rat(&self, gamma: &[Rat]) -> Rat {
        use num_traits::One;
        debug_assert_eq!(gamma.len(), self.rank);
        let mut acc = Rat::zero();
        for (w, c) in &self.terms {
            let mut term = Rat::one();
            for (g, e) in gamma.iter().zip(w) {
                term *= crate::exactalg::rat_pow(g, *e);
            }
            acc += term * Rat::from(Int::from(*c));
        }
        acc
    }

    /// Evaluate at a rational torus point (all coordinates nonzero).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (w, c) in &self.terms {
            let mut mono = Rat::from(crate::exactalg::int(*c));
            for (p, e) in point.iter().zip(w) {
                let mag = num_traits::pow::pow(p.clone(), e.unsigned_abs() as usize);
                if *e >= 0 {
                    mono *= mag;
                } else {
                    mono *= mag.recip();
                }
            }
            acc += mono;
        }
        acc
    }

    /// The maximal `(weight, coefficient)` in the refined dominance order,
    /// or `None` if zero.
    pub fn max_term(&self, rs: &RootSystem) -> Option<(Wt, i64)> {
        self.terms
            .iter()
            .max_by_key(|(w, _)| rs.order_key(w))
            .map(|(w, c)| (w.clone(), *c))
    }
}

impl fmt::Debug for VirtualChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}·e{w:?}")?;
        }
        Ok(())
    }
}

/// A virtual character with coefficients in `Z[v^{±1}]` — the value ring for
/// Hecke eigenvalues, Whittaker values, and sheaf-counting functions, where
/// powers of `v` multiply symmetric functions of the Satake parameter.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct QChar {
    rank: usize,
    terms: BTreeMap<Wt, LaurentScalar>,
}

impl QChar {
    /// The zero element.
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    /// Coordinate dimension of the weight lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Embed an integer virtual character.
    pub fn from_virtual(chi: &VirtualChar) -> Self {
        let mut out = Self::zero(chi.rank());
        for (w, c) in chi.terms() {
            out.add_term(w, &LaurentScalar::from_int(c));
        }
        out
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `e^wt`.
    pub fn coeff(&self, wt: &[i64]) -> LaurentScalar {
        self.terms.get(wt).cloned().unwrap_or_else(LaurentScalar::zero)
    }

    /// Iterate over `(weight, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Wt, &LaurentScalar)> {
        self.terms.iter()
    }

    /// Add `c·e^wt` in place.
    pub fn add_term(&mut self, wt: &[i64], c: &LaurentScalar) {
        debug_assert_eq!(wt.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(wt.to_vec())
            .or_insert_with(LaurentScalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(wt);
        }
    }

    /// Add `scalar · χ` in place.
    pub fn add_scaled_virtual(&mut self, chi: &VirtualChar, scalar: &LaurentScalar) {
        for (w, c) in chi.terms() {
            self.add_term(w, &scalar.scale(&crate::exactalg::int(c)));
        }
    }

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, c);
        }
        out
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w, &(-c));
        }
        out
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, s: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w, &(c * s));
        }
        out
    }

    /// Product (convolution of weights).
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let sum: Wt = w1.iter().zip(w2).map(|(a, b)| a + b).collect();
                out.add_term(&sum, &(c1 * c2));
            }
        }
        out
    }

    /// Specialize `v ↦ √p`: the map `weight ↦ value in Q(√p)`, with zero
    /// values dropped.  Two symbolic expressions agree at `q = p` iff these
    /// maps are equal.
    pub fn eval_sqrt(&self, p: u32) -> BTreeMap<Wt, SqrtVal> {
        let mut out = BTreeMap::new();
        for (w, c) in &self.terms {
            let val = c.eval_sqrt(p);
            if !val.is_zero() {
                out.insert(w.clone(), val);
            }
        }
        out
    }

    /// Evaluate the whole expression at a rational torus point and rational
    /// `v`.
    pub fn eval(&self, point: &[Rat], v: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (w, c) in &self.terms {
            let mono = VirtualChar::monomial(w.clone()).eval(point);
            acc += mono * c.eval_v(v);
        }
        acc
    }
}

impl fmt::Debug for QChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})·e{w:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_axioms_smoke() {
        let a = VirtualChar::monomial(vec![1, 0]);
        let b = VirtualChar::monomial(vec![0, 1]);
        let s = a.add(&b);
        let p = s.mul(&s);
        assert_eq!(p.coeff(&[1, 1]), 2);
        assert_eq!(p.coeff(&[2, 0]), 1);
        assert_eq!(p.dim(), 4);
        assert!(s.sub(&s).is_zero());
    }

    #[test]
    fn dual_inverts_weights() {
        let mut chi = VirtualChar::zero(2);
        chi.add_term(&[2, -1], 3);
        let d = chi.dual();
        assert_eq!(d.coeff(&[-2, 1]), 3);
    }

    #[test]
    fn qchar_scalars_accumulate() {
        let mut x = QChar::zero(1);
        x.add_term(&[0], &LaurentScalar::v_pow(1));
        x.add_term(&[0], &LaurentScalar::v_pow(-1));
        let c = x.coeff(&[0]);
        assert_eq!(c.coeff(1), crate::exactalg::int(1));
        assert_eq!(c.coeff(-1), crate::exactalg::int(1));
        x.add_term(&[0], &(-&c));
        assert!(x.is_zero());
    }

    #[test]
    fn sqrt_specialization_drops_zeroes() {
        let mut x = QChar::zero(1);
        // (v^2 - 2) vanishes at p = 2 but not at p = 3.
        let mut s = LaurentScalar::q_pow(1);
        s.add_term(0, &crate::exactalg::int(-2));
        x.add_term(&[5], &s);
        assert!(x.eval_sqrt(2).is_empty());
        assert_eq!(x.eval_sqrt(3).len(), 1);
    }
}
