//! Values of the normalized Whittaker function on the torus, the two
//! standard normalizations and the dictionary between them, the symbolic
//! Fourier transform to the Whittaker model, and local L-factors.
//!
//! With `γ` kept symbolic, the value at a torus point of weight `μ` is
//!
//! * unitary frame: `q^{-(μ,ρ)}·Tr(γ, V(μ))` for dominant `μ`, else `0`;
//! * galois frame (GL_n): `q^{n(μ)}·Tr(γ, V(μ))` with `n(μ) = Σ (i−1)μ_i`.
//!
//! The two frames agree after the substitution `γ ↦ q^{(n−1)/2}·γ`
//! together with the scalar `q^{|μ|(n−1)/2}`, which is the content of
//! [`frobenius_twist`] and the tests below.

use std::collections::BTreeMap;

use crate::charring::QChar;
use crate::error::{Error, Result};
use crate::exactalg::{rat_pow, LaurentScalar, Rat};
use crate::hecke::{to_h_basis, HeckeCtx, HeckeElt};
use crate::rootdata::{RootSystem, Wt};

/// Which normalization of the Whittaker function is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    /// Eigenvalues of the unramified principal series, unitarily induced.
    Unitary,
    /// The arithmetic normalization (GL_n only) matching Frobenius traces.
    Galois,
}

/// The Whittaker value at a torus point of weight `mu`, with `γ` symbolic.
/// Returns the zero character when `mu` is not dominant.
pub fn whittaker_value(ctx: &HeckeCtx, mu: &[i64], frame: Frame) -> Result<QChar> {
    let rs = ctx.rs();
    rs.check_weight(mu)?;
    if !rs.is_dominant(mu) {
        return Ok(QChar::zero(rs.rank()));
    }
    let scalar = match frame {
        Frame::Unitary => LaurentScalar::v_pow(-rs.pair_2rho_check(mu)),
        Frame::Galois => {
            if rs.gl_n().is_none() {
                return Err(Error::BadInput(
                    "galois normalization is defined for GL_n only".into(),
                ));
            }
            LaurentScalar::v_pow(2 * n_coordinate(mu))
        }
    };
    let mut out = QChar::zero(rs.rank());
    out.add_scaled_virtual(&ctx.character(mu), &scalar);
    Ok(out)
}

/// The statistic `n(μ) = Σ_i (i−1) μ_i` (rows indexed from 1).
pub fn n_coordinate(mu: &[i64]) -> i64 {
    mu.iter().enumerate().map(|(i, m)| i as i64 * m).sum()
}

/// Substitutes `γ ↦ v^{half_steps}·γ` in a symbolic class function: each
/// monomial of weight `w` picks up the factor `v^{half_steps·|w|}`.
/// With `half_steps = n−1` this is the eigenvalue dictionary between the
/// unitary and galois frames for GL_n.
pub fn frobenius_twist(x: &QChar, half_steps: i64) -> QChar {
    let mut out = QChar::zero(x.rank());
    for (w, c) in x.terms() {
        let total: i64 = w.iter().sum();
        out.add_term(w, &c.shift(half_steps * total));
    }
    out
}

/// The symbolic Fourier transform into the Whittaker model: the image of
/// `f` expanded over the supported-on-one-stratum basis `φ_λ`, returned as
/// a map `λ ↦ coefficient`. `H_λ` maps to `φ_λ` on the nose.
pub fn fourier_symbolic(ctx: &HeckeCtx, f: &HeckeElt) -> BTreeMap<Wt, LaurentScalar> {
    let fh = to_h_basis(ctx, f);
    fh.terms().map(|(w, c)| (w.clone(), c.clone())).collect()
}

/// Outcome of evaluating a local L-factor at a rational point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LFactor {
    Value(Rat),
    /// The Euler product has a vanishing factor: the L-factor has a pole.
    Pole,
}

/// The local L-factor `det(1 − r(γ) q^{-s})^{-1}` for a representation
/// given by its virtual character, a numeric semisimple `γ` and integer
/// `s`. A pole is reported as [`LFactor::Pole`], not an error.
pub fn l_factor(
    rep: &crate::charring::VirtualChar,
    gamma: &[Rat],
    q: &Rat,
    s: i64,
) -> Result<LFactor> {
    use num_traits::{One, Zero};
    if gamma.iter().any(|g| g.is_zero()) {
        return Err(Error::BadInput("γ must have nonzero eigenvalues".into()));
    }
    if q.is_zero() {
        return Err(Error::BadInput("q must be nonzero".into()));
    }
    let qs = rat_pow(q, -s);
    let mut num = Rat::one();
    let mut den = Rat::one();
    for (w, mult) in rep.terms() {
        let eig = eval_weight(gamma, w);
        let factor = Rat::one() - eig * &qs;
        if mult > 0 {
            for _ in 0..mult {
                den *= &factor;
            }
        } else {
            for _ in 0..(-mult) {
                num *= &factor;
            }
        }
    }
    if den.is_zero() {
        return Ok(LFactor::Pole);
    }
    Ok(LFactor::Value(num / den))
}

/// The computable Whittaker-model criterion for a numeric `γ`: whether
/// `∏_{α ∈ Δ} (1 − q^{-1} α(γ))` is nonzero (equivalently, whether the
/// adjoint L-factor is regular at `s = 1`).
pub fn whittaker_model_criterion(rs: &RootSystem, gamma: &[Rat], q: &Rat) -> bool {
    use num_traits::Zero;
    let q_inv = rat_pow(q, -1);
    for root in rs.positive_roots() {
        for wt in [root.wt.clone(), root.wt.iter().map(|x| -x).collect::<Wt>()] {
            let factor = Rat::from_integer(1.into()) - eval_weight(gamma, &wt) * &q_inv;
            if factor.is_zero() {
                return false;
            }
        }
    }
    true
}

/// `γ^w = ∏_i γ_i^{w_i}`.
pub fn eval_weight(gamma: &[Rat], w: &[i64]) -> Rat {
    use num_traits::One;
    let mut out = Rat::one();
    for (g, e) in gamma.iter().zip(w) {
        out *= rat_pow(g, *e);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charring::weyl_character;
    use crate::exactalg::{int, rat};
    use crate::hecke::Basis;

    #[test]
    fn unitary_values() {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        // μ = 0 → 1.
        let w0 = whittaker_value(&ctx, &[0, 0], Frame::Unitary).unwrap();
        let mut one = QChar::zero(2);
        one.add_term(&[0, 0], &LaurentScalar::one());
        assert_eq!(w0, one);
        // μ = (1,0) → q^{-1/2}(t₁+t₂).
        let w = whittaker_value(&ctx, &[1, 0], Frame::Unitary).unwrap();
        let mut expect = QChar::zero(2);
        expect.add_term(&[1, 0], &LaurentScalar::v_pow(-1));
        expect.add_term(&[0, 1], &LaurentScalar::v_pow(-1));
        assert_eq!(w, expect);
        // Non-dominant → 0.
        let w = whittaker_value(&ctx, &[0, 1], Frame::Unitary).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn frame_ratio_is_half_degree_power() {
        // galois/unitary = q^{|μ|(n−1)/2}, i.e. n(μ) + (μ,ρ) = |μ|(n−1)/2.
        for n in [2usize, 3, 4] {
            let rs = RootSystem::gl(n);
            let ctx = HeckeCtx::new(&rs);
            for mu in rs.gl_partitions(3, 3) {
                let unit = whittaker_value(&ctx, &mu, Frame::Unitary).unwrap();
                let gal = whittaker_value(&ctx, &mu, Frame::Galois).unwrap();
                let total: i64 = mu.iter().sum();
                let ratio = LaurentScalar::v_pow(total * (n as i64 - 1));
                assert_eq!(gal, unit.scale(&ratio), "n={n} μ={mu:?}");
            }
        }
    }

    #[test]
    fn eigenvalue_dictionary_via_frobenius_twist() {
        // q^{-i(i−1)/2}·e_i(γ_gal) = q^{i(n−i)/2}·e_i(γ_unit) where
        // γ_gal = q^{(n−1)/2}γ_unit, for the exterior powers of the
        // standard representation of GL_n.
        for n in [2usize, 3, 4] {
            let rs = RootSystem::gl(n);
            for i in 1..=n {
                let mut lam = vec![0i64; n];
                for entry in lam.iter_mut().take(i) {
                    *entry = 1;
                }
                let ei = weyl_character(&rs, &lam);
                let mut as_q = QChar::zero(n);
                as_q.add_scaled_virtual(&ei, &LaurentScalar::one());
                let i = i as i64;
                let n_i = n as i64;
                let lhs = frobenius_twist(&as_q, n_i - 1).scale(&LaurentScalar::v_pow(-i * (i - 1)));
                let rhs = as_q.scale(&LaurentScalar::v_pow(i * (n_i - i)));
                assert_eq!(lhs, rhs, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn fourier_symbolic_examples() {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        // Φ(H_λ) = φ_λ.
        let h = HeckeElt::basis_vector(2, Basis::H, vec![2, 0]);
        let phi = fourier_symbolic(&ctx, &h);
        assert_eq!(phi.len(), 1);
        assert_eq!(phi[&vec![2, 0]], LaurentScalar::one());
        // Φ(c_{(1,0)}) = q^{1/2} φ_{(1,0)} (minuscule).
        let c = HeckeElt::basis_vector(2, Basis::C, vec![1, 0]);
        let phi = fourier_symbolic(&ctx, &c);
        assert_eq!(phi.len(), 1);
        assert_eq!(phi[&vec![1, 0]], LaurentScalar::v_pow(1));
        // Leading φ-coefficient of Φ(c_λ) is q^{(λ,ρ)} in general.
        let c = HeckeElt::basis_vector(2, Basis::C, vec![3, 1]);
        let phi = fourier_symbolic(&ctx, &c);
        assert_eq!(phi[&vec![3, 1]], LaurentScalar::v_pow(2));
        // Φ(0) = 0.
        let z = HeckeElt::zero(2, Basis::C);
        assert!(fourier_symbolic(&ctx, &z).is_empty());
    }

    #[test]
    fn l_factor_examples() {
        // Trivial representation → L = (1 − q^{-s})^{-1}; at q=2, s=1: 2.
        let rs = RootSystem::gl(2);
        let triv = weyl_character(&rs, &[0, 0]);
        let got = l_factor(&triv, &[rat(1, 1), rat(1, 1)], &rat(2, 1), 1).unwrap();
        assert_eq!(got, LFactor::Value(rat(2, 1)));
        // Standard rep of GL_2 at γ=(1,1), q=2, s=1: (1−1/2)^{-2} = 4.
        let std = weyl_character(&rs, &[1, 0]);
        let got = l_factor(&std, &[rat(1, 1), rat(1, 1)], &rat(2, 1), 1).unwrap();
        assert_eq!(got, LFactor::Value(rat(4, 1)));
        // Pole: γ = (2,1), q=2, s=1: the factor (1 − 2/2) vanishes.
        let got = l_factor(&std, &[rat(2, 1), rat(1, 1)], &rat(2, 1), 1).unwrap();
        assert_eq!(got, LFactor::Pole);
        // Dimension-zero virtual character → numerator only.
        let virt = std.sub(&std);
        let got = l_factor(&virt, &[rat(3, 1), rat(5, 1)], &rat(2, 1), 1).unwrap();
        assert_eq!(got, LFactor::Value(rat(1, 1)));
    }

    #[test]
    fn whittaker_criterion_examples() {
        // α(γ) = q kills the criterion (adjoint L-factor pole at s=1):
        // γ = (q·t, t) for GL_2.
        let rs = RootSystem::gl(2);
        assert!(!whittaker_model_criterion(&rs, &[rat(2, 1), rat(1, 1)], &rat(2, 1)));
        assert!(!whittaker_model_criterion(&rs, &[rat(1, 1), rat(2, 1)], &rat(2, 1)));
        assert!(whittaker_model_criterion(&rs, &[rat(3, 1), rat(1, 1)], &rat(2, 1)));
        assert!(whittaker_model_criterion(&rs, &[rat(1, 1), rat(1, 1)], &rat(2, 1)));
    }

    #[test]
    fn galois_frame_requires_gl() {
        let rs = RootSystem::parse("B2").unwrap();
        let ctx = HeckeCtx::new(&rs);
        assert!(whittaker_value(&ctx, &[0, 1], Frame::Galois).is_err());
        let _ = int(0);
    }
}
