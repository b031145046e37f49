//! The spherical Hecke algebra of an unramified group, presented in two
//! bases: the geometric basis `c_μ` (indicator functions of double cosets)
//! and the Satake basis `H_λ` (matching irreducible characters of the dual
//! group under the Satake transform).
//!
//! The bridge between the two bases is the family of Lusztig–Kato
//! polynomials `P_{μλ}(q)`, computed here from the q-analog of Kostant's
//! partition function by a Weyl-alternating sum:
//!
//! ```text
//! m^λ_μ(u) = Σ_{w ∈ W} (−1)^{ℓ(w)} 𝒫_u(w(λ+δ) − (μ+δ)),
//! P_{μλ}(q) = q^{⟨λ−μ, ρ̌⟩} · m^λ_μ(1/q),
//! H_λ  =  q^{-(λ,ρ)} Σ_{μ ≤ λ} P_{μλ}(q) · c_μ.
//! ```
//!
//! Everything is exact: coefficients live in `Z[v^{±1}]` with `v² = q`.

pub mod harmonics;
pub mod identities;
pub mod whittaker;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::{Deserialize, Serialize};

use crate::charring::{QChar, VirtualChar};
use crate::charring::{decompose_virtual, weyl_character};
use crate::error::{Error, Result};
use crate::exactalg::{int, qpoly, Int, LaurentScalar};
use crate::rootdata::KostantCache;
use crate::rootdata::{RootSystem, Wt};

/// Which basis the coefficients of a [`HeckeElt`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    /// Double-coset indicator functions `c_μ`.
    #[serde(rename = "c")]
    C,
    /// Satake basis `H_λ`.
    #[serde(rename = "H")]
    H,
}

/// A finitely supported element of the spherical Hecke algebra, as a map
/// from dominant weights to scalars in `Z[v^{±1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElt {
    rank: usize,
    basis: Basis,
    terms: std::collections::BTreeMap<Wt, LaurentScalar>,
}

impl HeckeElt {
    pub fn zero(rank: usize, basis: Basis) -> Self {
        HeckeElt { rank, basis, terms: Default::default() }
    }

    /// The basis vector itself: `c_μ` or `H_μ` depending on `basis`.
    pub fn basis_vector(rank: usize, basis: Basis, wt: Wt) -> Self {
        let mut e = Self::zero(rank, basis);
        e.add_term(wt, LaurentScalar::one());
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Wt, &LaurentScalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Wt> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, wt: &[i64]) -> LaurentScalar {
        self.terms.get(wt).cloned().unwrap_or_else(LaurentScalar::zero)
    }

    pub fn add_term(&mut self, wt: Wt, c: LaurentScalar) {
        assert_eq!(wt.len(), self.rank, "weight rank mismatch");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(wt.clone()).or_insert_with(LaurentScalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&wt);
        }
    }

    pub fn add(&self, other: &HeckeElt) -> HeckeElt {
        assert_eq!(self.basis, other.basis, "basis mismatch in addition");
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &LaurentScalar) -> HeckeElt {
        let mut out = HeckeElt::zero(self.rank, self.basis);
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c * s);
        }
        out
    }
}

/// One row of a Lusztig–Kato table: the polynomial `P_{μλ}` attached to a
/// dominant weight `μ ≤ λ`, with coefficients listed in ascending powers
/// of `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LkRow {
    pub mu: Wt,
    /// Ascending coefficients of `P_{μλ}(q)`; always nonempty with
    /// nonnegative entries.
    pub p: Vec<Int>,
}

/// The full table `{P_{μλ} : μ ≤ λ dominant}` for a fixed `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LkTable {
    pub lambda: Wt,
    /// Rows in decreasing dominance order; the first row is `μ = λ` with
    /// `P = 1`.
    pub rows: Vec<LkRow>,
}

impl LkTable {
    pub fn row(&self, mu: &[i64]) -> Option<&LkRow> {
        self.rows.iter().find(|r| r.mu == mu)
    }
}

/// Shared per-root-system context: memoizes Lusztig–Kato tables, Satake
/// basis expansions and Weyl characters (single-writer caches behind
/// mutexes, so sweeps can run under rayon).
pub struct HeckeCtx<'a> {
    rs: &'a RootSystem,
    lk: Mutex<HashMap<Wt, Arc<LkTable>>>,
    satake: Mutex<HashMap<Wt, Arc<HeckeElt>>>,
    chars: Mutex<HashMap<Wt, Arc<VirtualChar>>>,
}

impl<'a> HeckeCtx<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        HeckeCtx {
            rs,
            lk: Mutex::new(HashMap::new()),
            satake: Mutex::new(HashMap::new()),
            chars: Mutex::new(HashMap::new()),
        }
    }

    pub fn rs(&self) -> &RootSystem {
        self.rs
    }

    /// Memoized irreducible character of the highest-weight module `V(λ)`.
    pub fn character(&self, lam: &[i64]) -> Arc<VirtualChar> {
        if let Some(ch) = self.chars.lock().unwrap().get(lam) {
            return ch.clone();
        }
        let ch = Arc::new(weyl_character(self.rs, lam));
        self.chars.lock().unwrap().entry(lam.to_vec()).or_insert(ch).clone()
    }

    /// Memoized Lusztig–Kato table for `λ`.
    pub fn lk(&self, lam: &[i64]) -> Arc<LkTable> {
        if let Some(t) = self.lk.lock().unwrap().get(lam) {
            return t.clone();
        }
        let t = Arc::new(lusztig_kato(self.rs, lam).expect("lusztig_kato failed"));
        self.lk.lock().unwrap().entry(lam.to_vec()).or_insert(t).clone()
    }

    /// Memoized `H_λ` in the `c`-basis.
    pub fn satake_h(&self, lam: &[i64]) -> Arc<HeckeElt> {
        if let Some(t) = self.satake.lock().unwrap().get(lam) {
            return t.clone();
        }
        let t = Arc::new(satake_h(self.rs, lam).expect("satake_h failed"));
        self.satake.lock().unwrap().entry(lam.to_vec()).or_insert(t).clone()
    }

    /// Tensor-product decomposition `V(λ) ⊗ V(μ) = Σ mult · V(ν)`.
    pub fn tensor_decompose(&self, lam: &[i64], mu: &[i64]) -> Vec<(Wt, i64)> {
        let prod = self.character(lam).mul(&self.character(mu));
        decompose_virtual(self.rs, &prod)
    }
}

/// The alternating-sum weight-multiplicity q-analog
/// `m^λ_μ(u) = Σ_w (−1)^{ℓ(w)} 𝒫_u(w(λ+δ) − (μ+δ))`,
/// returned as ascending coefficients in `u`.
pub fn q_weight_multiplicity(
    rs: &RootSystem,
    kostant: &mut KostantCache,
    lam: &[i64],
    mu: &[i64],
) -> Vec<Int> {
    let delta = rs.rho_shift();
    let lam_d: Wt = lam.iter().zip(&delta).map(|(a, b)| a + b).collect();
    let mu_d: Wt = mu.iter().zip(&delta).map(|(a, b)| a + b).collect();
    let mut acc: Vec<Int> = Vec::new();
    for w in rs.weyl() {
        let moved = w.apply(&lam_d);
        let beta: Wt = moved.iter().zip(&mu_d).map(|(a, b)| a - b).collect();
        let part = kostant.qpartition(&beta);
        let signed: Vec<Int> = if w.sign() < 0 {
            part.iter().map(|c| -c).collect()
        } else {
            part
        };
        acc = qpoly::add(&acc, &signed);
    }
    acc
}

/// Computes the Lusztig–Kato table of `λ`: the polynomials `P_{μλ}(q)` for
/// every dominant `μ ≤ λ`.
///
/// Guarantees asserted on every row: nonnegative integer coefficients,
/// `P_{λλ} = 1`, `deg P_{μλ} < ⟨λ−μ, ρ̌⟩` for `μ < λ`, and
/// `P_{μλ}(1) =` weight multiplicity of `μ` in `V(λ)`.
pub fn lusztig_kato(rs: &RootSystem, lam: &[i64]) -> Result<LkTable> {
    rs.check_weight(lam)?;
    if !rs.is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let mut kostant = KostantCache::new(rs);
    let mut rows = Vec::new();
    for mu in rs.dominant_below(lam) {
        let m = q_weight_multiplicity(rs, &mut kostant, lam, &mu);
        let ht2 = rs.pair_2rho_check(&sub(lam, &mu));
        assert!(ht2 >= 0 && ht2 % 2 == 0, "λ−μ must have integral height");
        let ht = (ht2 / 2) as usize;
        assert!(m.len() <= ht + 1, "q-analog degree exceeds height bound");
        // P(q) = q^ht · m(1/q): reverse the coefficient list.
        let mut p = vec![Int::from(0u32); ht + 1];
        for (j, c) in m.iter().enumerate() {
            p[ht - j] = c.clone();
        }
        let p = qpoly::trim(p);
        assert!(
            p.iter().all(|c| *c >= int(0)),
            "negative Lusztig–Kato coefficient at λ={lam:?}, μ={mu:?}"
        );
        if mu == lam {
            assert_eq!(p, vec![int(1)], "P_λλ must be 1");
        }
        assert!(!p.is_empty(), "P_{{μλ}} vanished for dominant μ ≤ λ");
        rows.push(LkRow { mu, p });
    }
    Ok(LkTable { lambda: lam.to_vec(), rows })
}

fn sub(a: &[i64], b: &[i64]) -> Wt {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// The Satake basis element `H_λ` expanded in the `c`-basis:
/// `H_λ = Σ_μ v^{2 deg − ⟨λ,2ρ̌⟩}`-weighted Lusztig–Kato coefficients.
pub fn satake_h(rs: &RootSystem, lam: &[i64]) -> Result<HeckeElt> {
    let table = lusztig_kato(rs, lam)?;
    let shift = rs.pair_2rho_check(lam);
    let mut elt = HeckeElt::zero(rs.rank(), Basis::C);
    for row in &table.rows {
        let mut c = LaurentScalar::zero();
        for (i, coeff) in row.p.iter().enumerate() {
            c.add_term(2 * i as i64 - shift, &coeff.clone());
        }
        elt.add_term(row.mu.clone(), c);
    }
    Ok(elt)
}

/// Rewrites an element given in the `c`-basis in the `H`-basis by
/// triangular elimination (the change of basis is unitriangular up to the
/// diagonal monomials `q^{-(λ,ρ)}`, so no division beyond monomials
/// occurs and coefficients stay in `Z[v^{±1}]`).
pub fn to_h_basis(ctx: &HeckeCtx, f: &HeckeElt) -> HeckeElt {
    match f.basis() {
        Basis::H => f.clone(),
        Basis::C => {
            let rs = ctx.rs();
            let mut rem = f.clone();
            let mut out = HeckeElt::zero(f.rank(), Basis::H);
            while !rem.is_zero() {
                let top = rem
                    .terms()
                    .map(|(w, _)| w.clone())
                    .max_by_key(|w| rs.order_key(w))
                    .unwrap();
                let a = rem.coeff(&top);
                // Diagonal of H_top at c_top is v^{-⟨top,2ρ̌⟩}.
                let h_coeff = a.shift(rs.pair_2rho_check(&top));
                let hx = ctx.satake_h(&top);
                for (mu, c) in hx.terms() {
                    rem.add_term(mu.clone(), -&(&h_coeff * c));
                }
                assert!(rem.coeff(&top).is_zero(), "triangular elimination failed");
                out.add_term(top, h_coeff);
            }
            out
        }
    }
}

/// Expands an element given in the `H`-basis back into the `c`-basis.
pub fn to_c_basis(ctx: &HeckeCtx, f: &HeckeElt) -> HeckeElt {
    match f.basis() {
        Basis::C => f.clone(),
        Basis::H => {
            let mut out = HeckeElt::zero(f.rank(), Basis::C);
            for (lam, a) in f.terms() {
                let hx = ctx.satake_h(lam);
                for (mu, c) in hx.terms() {
                    out.add_term(mu.clone(), a * c);
                }
            }
            out
        }
    }
}

/// Convenience: the expansion `c_μ = Σ_λ b_λ H_λ`.
pub fn c_in_h_basis(ctx: &HeckeCtx, mu: &[i64]) -> HeckeElt {
    let c = HeckeElt::basis_vector(ctx.rs().rank(), Basis::C, mu.to_vec());
    to_h_basis(ctx, &c)
}

/// Convolution product of two Hecke algebra elements. Inputs may be in
/// either basis; the result is returned in the basis of `f`.
///
/// Internally both factors move to the `H`-basis, where the product is
/// governed by tensor-product multiplicities of the dual group
/// (`H_λ ⋆ H_μ = Σ_ν mult(V(ν), V(λ)⊗V(μ)) H_ν`).
pub fn multiply(ctx: &HeckeCtx, f: &HeckeElt, g: &HeckeElt) -> HeckeElt {
    let fh = to_h_basis(ctx, f);
    let gh = to_h_basis(ctx, g);
    let mut out = HeckeElt::zero(f.rank(), Basis::H);
    for (lam, a) in fh.terms() {
        for (mu, b) in gh.terms() {
            let ab = a * b;
            for (nu, mult) in ctx.tensor_decompose(lam, mu) {
                out.add_term(nu, ab.scale(&Int::from(mult)));
            }
        }
    }
    match f.basis() {
        Basis::H => out,
        Basis::C => to_c_basis(ctx, &out),
    }
}

/// The character `χ_γ` of the Hecke algebra attached to a semisimple
/// class `γ` of the dual group, applied to `f`, with `γ` kept symbolic:
/// the result is a virtual character of the dual torus with `Z[v^{±1}]`
/// coefficients. `χ_γ(H_λ) = Tr(γ, V(λ))` exactly.
pub fn satake_char(ctx: &HeckeCtx, f: &HeckeElt) -> QChar {
    let fh = to_h_basis(ctx, f);
    let mut out = QChar::zero(f.rank());
    for (lam, a) in fh.terms() {
        out.add_scaled_virtual(&ctx.character(lam), a);
    }
    out
}

/// The number of single cosets inside the double coset indexed by a
/// dominant weight `μ`, as a polynomial in `q`:
/// `N_μ(q) = q^{⟨μ,2ρ̌⟩} · W(q^{-1}) / W_μ(q^{-1})`,
/// where `W(u)` is the Poincaré polynomial of the Weyl group and `W_μ(u)`
/// that of the stabilizer of `μ`.
pub fn n_mu(rs: &RootSystem, mu: &[i64]) -> Result<LaurentScalar> {
    rs.check_weight(mu)?;
    if !rs.is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    let w_all = rs.poincare();
    let w_stab = rs.poincare_stabilizer(mu);
    let ratio = qpoly::div_exact(&w_all, &w_stab);
    let shift = rs.pair_2rho_check(mu);
    let mut out = LaurentScalar::zero();
    for (j, c) in ratio.iter().enumerate() {
        let e = 2 * (shift - j as i64);
        assert!(e >= 0, "coset count must be a polynomial in q");
        out.add_term(e, &c.clone());
    }
    assert!(out.is_q_polynomial() && out.is_nonneg());
    Ok(out)
}

/// The value of the normalized spherical function attached to `γ`
/// (symbolic) at the class `μ(π)`, as an exact pair
/// (numerator `χ_γ(c_μ)`, denominator `N_μ(q)`).
pub fn spherical_value(ctx: &HeckeCtx, mu: &[i64]) -> Result<(QChar, LaurentScalar)> {
    let c = HeckeElt::basis_vector(ctx.rs().rank(), Basis::C, mu.to_vec());
    let num = satake_char(ctx, &c);
    let den = n_mu(ctx.rs(), mu)?;
    Ok((num, den))
}
