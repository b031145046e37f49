//! Laurent polynomials in `v` (with `v^2 = q`) over `Z`, and their
//! evaluations at `v = √p`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Int, Rat};

/// A sparse Laurent polynomial `Σ a_k v^k` with `a_k ∈ Z`.
///
/// The variable `v` is a formal square root of the residue cardinality `q`;
/// exponents are exponents of `v`, so `q^m` is stored at exponent `2m` and
/// the half-integral powers `q^{m/2}` that appear in spherical function
/// values are exponent `m`.  The zero polynomial is the empty term map, and
/// all operations keep the map free of zero coefficients, so `==` is a
/// canonical-form comparison.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, Int>,
}

impl LaurentScalar {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The constant polynomial `n`.
    pub fn from_int(n: i64) -> Self {
        Self::term(0, Int::from(n))
    }

    /// The monomial `c · v^k`.
    pub fn term(k: i64, c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    /// The monomial `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::term(k, Int::one())
    }

    /// The monomial `q^m = v^{2m}`.
    pub fn q_pow(m: i64) -> Self {
        Self::v_pow(2 * m)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether this is the constant polynomial `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    /// The coefficient of `v^k` (zero if absent).
    pub fn coeff(&self, k: i64) -> Int {
        self.terms.get(&k).cloned().unwrap_or_else(Int::zero)
    }

    /// Iterate over `(exponent of v, coefficient)` in ascending exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Int)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Lowest and highest `v`-exponents, if nonzero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?;
        let hi = self.terms.keys().next_back()?;
        Some((*lo, *hi))
    }

    /// Add `c · v^k` in place.
    pub fn add_term(&mut self, k: i64, c: &Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Multiply by the monomial `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e + k, c.clone()))
            .collect();
        Self { terms }
    }

    /// Multiply by an integer scalar.
    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, a)| (*e, a * c)).collect();
        Self { terms }
    }

    /// Whether every exponent of `v` is even, i.e. the value lies in
    /// `Z[q^{±1}]`.
    pub fn is_q_polynomial(&self) -> bool {
        self.terms.keys().all(|k| k % 2 == 0)
    }

    /// Whether all coefficients are nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Exact division, panicking if `self` is not a multiple of `d`.
    ///
    /// Ordinary long division by the leading term; every intermediate
    /// coefficient quotient must be exact and the remainder must vanish.
    /// Used for Poincaré-polynomial quotients, which are always exact.
    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "division by zero LaurentScalar");
        let mut rem = self.clone();
        let mut quo = Self::zero();
        let (_, d_hi) = d.degree_range().unwrap();
        let d_lead = d.coeff(d_hi);
        while !rem.is_zero() {
            let (_, r_hi) = rem.degree_range().unwrap();
            let r_lead = rem.coeff(r_hi);
            let (c, r) = num_integer::Integer::div_rem(&r_lead, &d_lead);
            assert!(r.is_zero(), "inexact coefficient division in div_exact");
            let mono = Self::term(r_hi - d_hi, c);
            rem = &rem - &(&mono * d);
            quo += &mono;
            if let Some((_, new_hi)) = rem.degree_range() {
                assert!(new_hi < r_hi, "division not reducing degree (remainder {rem})");
            }
        }
        quo
    }

    /// Evaluate at a rational value of `v`.
    pub fn eval_v(&self, v: &Rat) -> Rat {
        assert!(!v.is_zero(), "cannot evaluate a Laurent polynomial at v = 0");
        let mut acc = Rat::zero();
        for (k, c) in &self.terms {
            acc += Rat::from(c.clone()) * rat_pow(v, *k);
        }
        acc
    }

    /// Evaluate at `v = √p`, exactly, as an element `a + b√p` of `Q(√p)`.
    pub fn eval_sqrt(&self, p: u32) -> SqrtVal {
        let p_int = Int::from(p);
        let mut rat = Rat::zero();
        let mut irr = Rat::zero();
        for (k, c) in &self.terms {
            // v^k = p^{k/2} for even k, p^{(k-1)/2}·√p for odd k.
            let half = k.div_euclid(2);
            let p_half = if half >= 0 {
                Rat::from(p_int.pow(half as u32))
            } else {
                Rat::new(Int::one(), p_int.pow((-half) as u32))
            };
            let contrib = Rat::from(c.clone()) * p_half;
            if k.rem_euclid(2) == 0 {
                rat += contrib;
            } else {
                irr += contrib;
            }
        }
        SqrtVal { p, rat, irr }
    }

    /// Substitute `v ↦ v^{-1}` (the bar involution on exponents).
    pub fn bar(&self) -> Self {
        let terms = self.terms.iter().map(|(k, c)| (-k, c.clone())).collect();
        Self { terms }
    }
}

/// `v^k` for a nonzero rational `v` and any integer `k`.
pub fn rat_pow(v: &Rat, k: i64) -> Rat {
    if k >= 0 {
        num_traits::pow::pow(v.clone(), k as usize)
    } else {
        num_traits::pow::pow(v.clone(), (-k) as usize).recip()
    }
}

impl AddAssign<&LaurentScalar> for LaurentScalar {
    fn add_assign(&mut self, rhs: &LaurentScalar) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c);
        }
    }
}

impl Add for &LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c.clone());
        }
        out
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        let terms = self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect();
        LaurentScalar { terms }
    }
}

impl Mul for &LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (j, a) in &self.terms {
            for (k, b) in &rhs.terms {
                out.add_term(j + k, &(a * b));
            }
        }
        out
    }
}

impl fmt::Display for LaurentScalar {
    /// Renders in terms of `q` when every exponent is even (`2 + 3q^-1`),
    /// otherwise in terms of `v` (`v^-3 + v`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let in_q = self.is_q_polynomial();
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            let (var, e) = if in_q { ("q", k / 2) } else { ("v", *k) };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if e == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An exact element `rat + irr·√p` of the real quadratic field `Q(√p)`.
///
/// This is the target of [`LaurentScalar::eval_sqrt`]; two symbolic values
/// agree at `q = p` exactly when their `SqrtVal`s are equal.  For `p` a
/// prime, `√p` is irrational, so the representation is unique and equality
/// is component-wise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SqrtVal {
    p: u32,
    rat: Rat,
    irr: Rat,
}

impl SqrtVal {
    /// The zero value for the given `p`.
    pub fn zero(p: u32) -> Self {
        Self { p, rat: Rat::zero(), irr: Rat::zero() }
    }

    /// A rational value embedded in `Q(√p)`.
    pub fn from_rat(p: u32, r: Rat) -> Self {
        Self { p, rat: r, irr: Rat::zero() }
    }

    /// The rational part.
    pub fn rational_part(&self) -> &Rat {
        &self.rat
    }

    /// The coefficient of `√p`.
    pub fn sqrt_part(&self) -> &Rat {
        &self.irr
    }

    /// Whether the value is rational (no `√p` component).
    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// Whether the value is zero.
    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    fn assert_same(&self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "mixing SqrtVal over different primes");
    }

    /// Sum.
    pub fn add(&self, rhs: &Self) -> Self {
        self.assert_same(rhs);
        Self {
            p: self.p,
            rat: &self.rat + &rhs.rat,
            irr: &self.irr + &rhs.irr,
        }
    }

    /// Difference.
    pub fn sub(&self, rhs: &Self) -> Self {
        self.assert_same(rhs);
        Self {
            p: self.p,
            rat: &self.rat - &rhs.rat,
            irr: &self.irr - &rhs.irr,
        }
    }

    /// Product, using `(a + b√p)(c + d√p) = ac + bdp + (ad + bc)√p`.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.assert_same(rhs);
        let p_rat = Rat::from(Int::from(self.p));
        Self {
            p: self.p,
            rat: &self.rat * &rhs.rat + &self.irr * &rhs.irr * &p_rat,
            irr: &self.rat * &rhs.irr + &self.irr * &rhs.rat,
        }
    }
}

impl fmt::Display for SqrtVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.irr.is_zero() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            write!(f, "{}·√{}", self.irr, self.p)
        } else {
            write!(f, "{} + {}·√{}", self.rat, self.irr, self.p)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ls(pairs: &[(i64, i64)]) -> LaurentScalar {
        let mut out = LaurentScalar::zero();
        for (k, c) in pairs {
            out.add_term(*k, &Int::from(*c));
        }
        out
    }

    #[test]
    fn arithmetic_basics() {
        let a = ls(&[(0, 1), (2, 1)]); // 1 + q
        let b = ls(&[(-2, 1), (0, -1)]); // q^{-1} - 1
        assert_eq!(&a + &b, ls(&[(-2, 1), (2, 1)]));
        assert_eq!(&a * &b, ls(&[(-2, 1), (2, -1)]));
        assert_eq!((&a - &a), LaurentScalar::zero());
        assert!((&a * &LaurentScalar::zero()).is_zero());
    }

    #[test]
    fn division_is_exact() {
        // (1 - q^3)/(1 - q) = 1 + q + q^2, shifted by arbitrary v-powers.
        let num = ls(&[(0, 1), (6, -1)]).shift(-3);
        let den = ls(&[(0, 1), (2, -1)]).shift(1);
        let quo = num.div_exact(&den);
        assert_eq!(quo, ls(&[(0, 1), (2, 1), (4, 1)]).shift(-4));
        assert_eq!(&quo * &den, num);
    }

    #[test]
    #[should_panic(expected = "inexact")]
    fn division_rejects_nonmultiples() {
        let num = ls(&[(0, 1), (2, 1)]);
        let den = ls(&[(0, 2)]);
        let _ = num.div_exact(&den);
    }

    #[test]
    fn sqrt_evaluation() {
        // v^{-1} + v^2 at p = 2: 2^{-1}·√2·... v^{-1} = (1/2)√2, v^2 = 2.
        let x = ls(&[(-1, 1), (2, 1)]);
        let val = x.eval_sqrt(2);
        assert_eq!(*val.rational_part(), Rat::from(Int::from(2)));
        assert_eq!(*val.sqrt_part(), Rat::new(Int::from(1), Int::from(2)));
        assert!(!val.is_rational());
        // And at a rational v.
        assert_eq!(
            x.eval_v(&Rat::new(Int::from(1), Int::from(2))),
            Rat::new(Int::from(9), Int::from(4))
        );
    }

    #[test]
    fn sqrt_field_arithmetic() {
        let a = ls(&[(1, 1), (0, 1)]).eval_sqrt(3); // 1 + √3
        let sq = a.mul(&a); // 4 + 2√3
        assert_eq!(*sq.rational_part(), Rat::from(Int::from(4)));
        assert_eq!(*sq.sqrt_part(), Rat::from(Int::from(2)));
    }

    #[test]
    fn display_uses_q_when_even() {
        let x = ls(&[(0, 1), (2, 1)]);
        assert_eq!(x.to_string(), "q + 1");
        let y = ls(&[(1, 1), (0, 1)]);
        assert_eq!(y.to_string(), "v + 1");
        let z = ls(&[(-4, 3), (0, -1)]);
        assert_eq!(z.to_string(), "-1 + 3*q^-2");
    }
}
