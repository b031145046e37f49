//! Kostant's graded decomposition of the coordinate ring of the adjoint
//! representation: the factorization `Sym(g) = (invariants) ⊗ (harmonics)`,
//! the table of generalized exponents, and the closed form it gives for
//! the Lusztig–Kato polynomials `P_{0,λ}`.
//!
//! In character-series terms (`u` the grading variable):
//!
//! * `Ch Sym(g) = (1−u)^{-rank} ∏_{α ∈ Δ} (1 − u·e^α)^{-1}`,
//! * `Ch (invariants) = ∏_i (1 − u^{d_i})^{-1}` with `d_i` the degrees of
//!   the basic invariants (`m_i + 1` plus one linear degree per central
//!   coordinate),
//! * `Ch (harmonics) = Q(u) · ∏_{α ∈ Δ} (1 − u·e^α)^{-1}` with `Q` the
//!   Poincaré polynomial of the Weyl group,
//!
//! and the multiplicity of `V(λ)` in degree `j` of the harmonics counts
//! the generalized exponents of `λ` equal to `j`; their total number is
//! the zero-weight multiplicity of `V(λ)`.

use std::collections::BTreeMap;

use crate::charring::{adjoint_char, decompose_virtual, symmetric_powers, CharSeries, VirtualChar};
use crate::error::{Error, Result};
use crate::exactalg::Int;
use crate::hecke::HeckeCtx;
use crate::rootdata::{RootSystem, Wt};

/// `Σ_j u^j · ch Sym^j(g)` up to (excluding) degree `prec`.
pub fn sym_adjoint_series(rs: &RootSystem, prec: usize) -> CharSeries {
    let powers = symmetric_powers(&adjoint_char(rs), prec.saturating_sub(1));
    let mut out = CharSeries::zero(rs.rank(), prec);
    for (j, chi) in powers.into_iter().enumerate().take(prec) {
        *out.coeff_mut(j) = chi;
    }
    out
}

/// The polynomial `∏_i (1 − u^{d_i})` over the degrees of the basic
/// invariants: `m_i + 1` for each Weyl-group exponent `m_i`, plus a linear
/// factor for each central coordinate.
pub fn invariant_degrees_poly(rs: &RootSystem) -> Vec<i64> {
    let mut poly = vec![1i64];
    let central = rs.rank() - rs.exponents().len();
    let degrees: Vec<i64> = std::iter::repeat(1)
        .take(central)
        .chain(rs.exponents().iter().map(|m| m + 1))
        .collect();
    for d in degrees {
        let mut next = vec![0i64; poly.len() + d as usize];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + d as usize] -= c;
        }
        poly = next;
    }
    poly
}

/// `Σ_j u^j · ch H^j` for the graded harmonics:
/// `Q(u) · ∏_{α ∈ Δ} (1 − u·e^α)^{-1}` up to degree `prec`.
pub fn harmonics_series(rs: &RootSystem, prec: usize) -> CharSeries {
    let mut out = scalar_series(rs.rank(), prec, &int_vec(&rs.poincare()));
    for root in rs.positive_roots() {
        out = out.mul(&CharSeries::geometric(prec, &root.wt));
        let neg: Wt = root.wt.iter().map(|x| -x).collect();
        out = out.mul(&CharSeries::geometric(prec, &neg));
    }
    out
}

/// Verifies the factorization `Sym(g) = invariants ⊗ harmonics` in graded
/// characters up to degree `prec`:
/// `Ch Sym(g) · ∏_i (1 − u^{d_i}) = Q(u) · ∏_{α ∈ Δ} (1 − u·e^α)^{-1}`.
pub fn kostant_factorization_check(rs: &RootSystem, prec: usize) -> bool {
    let lhs = sym_adjoint_series(rs, prec).mul(&scalar_series(
        rs.rank(),
        prec,
        &invariant_degrees_poly(rs),
    ));
    lhs == harmonics_series(rs, prec)
}

/// Highest-weight decomposition of each graded piece of the harmonics up
/// to degree `jmax`: `λ ↦ [mult of V(λ) in H^0, …, H^jmax]`.
pub fn harmonics_table(ctx: &HeckeCtx, jmax: usize) -> BTreeMap<Wt, Vec<i64>> {
    let series = harmonics_series(ctx.rs(), jmax + 1);
    let mut table: BTreeMap<Wt, Vec<i64>> = BTreeMap::new();
    for j in 0..=jmax {
        for (lam, mult) in decompose_virtual(ctx.rs(), series.coeff(j)) {
            assert!(mult > 0, "harmonics are an honest representation");
            table.entry(lam).or_insert_with(|| vec![0; jmax + 1])[j] = mult;
        }
    }
    table
}

/// The generalized exponents of `λ`: the degrees (with multiplicity, in
/// increasing order) in which `V(λ)` occurs in the harmonics. Fails if
/// `jmax` is too small to see them all; on success their count always
/// equals the zero-weight multiplicity of `V(λ)`.
pub fn generalized_exponents(
    ctx: &HeckeCtx,
    table: &BTreeMap<Wt, Vec<i64>>,
    lam: &[i64],
    jmax: usize,
) -> Result<Vec<i64>> {
    let rs = ctx.rs();
    rs.check_weight(lam)?;
    let pair = rs.pair_2rho_check(lam);
    if pair % 2 != 0 || rs.root_lattice_coords(lam).is_none() {
        return Err(Error::NotInRootLattice(lam.to_vec()));
    }
    if pair / 2 > jmax as i64 {
        return Err(Error::BadInput(format!(
            "need jmax ≥ {} to see all generalized exponents of {lam:?}",
            pair / 2
        )));
    }
    let mut exps = Vec::new();
    if let Some(row) = table.get(lam) {
        for (j, mult) in row.iter().enumerate() {
            for _ in 0..*mult {
                exps.push(j as i64);
            }
        }
    }
    let zero_mult = ctx.character(lam).coeff(&vec![0; rs.rank()]);
    assert_eq!(
        exps.len() as i64,
        zero_mult,
        "generalized-exponent count of {lam:?} must equal its zero-weight multiplicity"
    );
    Ok(exps)
}

/// One row of the closed-form check for `P_{0,λ}`.
#[derive(Debug, Clone)]
pub struct ZeroRowReport {
    pub lambda: Wt,
    /// Generalized exponents of `λ`, increasing.
    pub exponents: Vec<i64>,
    /// `P_{0,λ}(q)` from the intersection-cohomology recursion.
    pub p_direct: Vec<Int>,
    /// `q^{⟨λ,ρ̌⟩} Σ_i q^{-m_i(λ)}` from the generalized exponents.
    pub p_from_exponents: Vec<Int>,
    pub pass: bool,
}

/// Checks `P_{0,λ}(q) = q^{⟨λ,ρ̌⟩} · Σ_i q^{-m_i(λ)}` for a dominant `λ`
/// in the root lattice, using the harmonics table for the right-hand side.
pub fn p_zero_check(
    ctx: &HeckeCtx,
    table: &BTreeMap<Wt, Vec<i64>>,
    lam: &[i64],
    jmax: usize,
) -> Result<ZeroRowReport> {
    let rs = ctx.rs();
    let exps = generalized_exponents(ctx, table, lam, jmax)?;
    let shift = rs.pair_2rho_check(lam) / 2;
    let mut from_exps = vec![Int::from(0); shift as usize + 1];
    for m in &exps {
        assert!(*m <= shift, "generalized exponents are bounded by ⟨λ,ρ̌⟩");
        from_exps[(shift - m) as usize] += 1;
    }
    while from_exps.last().is_some_and(|c| *c == Int::from(0)) {
        from_exps.pop();
    }
    let zero = vec![0i64; rs.rank()];
    let lk = ctx.lk(lam);
    let direct = lk
        .rows
        .iter()
        .find(|row| row.mu == zero)
        .map(|row| row.p.clone())
        .unwrap_or_default();
    let pass = direct == from_exps;
    Ok(ZeroRowReport {
        lambda: lam.to_vec(),
        exponents: exps,
        p_direct: direct,
        p_from_exponents: from_exps,
        pass,
    })
}

fn int_vec(xs: &[Int]) -> Vec<i64> {
    use num_traits::ToPrimitive;
    xs.iter()
        .map(|x| x.to_i64().expect("small coefficient"))
        .collect()
}

fn scalar_series(rank: usize, prec: usize, coeffs: &[i64]) -> CharSeries {
    let mut out = CharSeries::zero(rank, prec);
    for (d, c) in coeffs.iter().enumerate().take(prec) {
        *out.coeff_mut(d) = VirtualChar::one(rank).scaled(*c);
    }
    out
}

/// Convenience: the full check for every dominant root-lattice weight with
/// `⟨λ,ρ̌⟩ ≤ bound`; reuses one harmonics table sized by the largest case.
pub fn p_zero_sweep(ctx: &HeckeCtx, bound: i64, jmax: usize) -> Result<Vec<ZeroRowReport>> {
    let rs = ctx.rs();
    if rs.gl_n().is_some() {
        return Err(Error::BadInput(
            "the zero-row sweep enumerates a simple type's dominant slab".into(),
        ));
    }
    let mut out = Vec::new();
    let table = harmonics_table(ctx, jmax);
    for lam in rs.dominant_with_2rho_at_most(2 * bound) {
        if rs.pair_2rho_check(&lam) % 2 != 0 || rs.root_lattice_coords(&lam).is_none() {
            continue;
        }
        out.push(p_zero_check(ctx, &table, &lam, jmax)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn factorization_small_types() {
        for name in ["A1", "A2", "B2"] {
            let rs = RootSystem::parse(name).unwrap();
            assert!(kostant_factorization_check(&rs, 8), "{name}");
        }
        assert!(kostant_factorization_check(&RootSystem::gl(3), 6));
        // Degree 0 of the harmonics is the trivial representation alone.
        let rs = RootSystem::parse("A2").unwrap();
        let h = harmonics_series(&rs, 3);
        assert_eq!(*h.coeff(0), VirtualChar::one(2));
    }

    #[test]
    fn invariant_degrees_examples() {
        // A1: one invariant of degree 2 → 1 − u².
        let rs = RootSystem::parse("A1").unwrap();
        assert_eq!(invariant_degrees_poly(&rs), vec![1, 0, -1]);
        // gl(2): degrees 1 and 2 → (1−u)(1−u²).
        let rs = RootSystem::gl(2);
        assert_eq!(invariant_degrees_poly(&rs), vec![1, -1, -1, 1]);
    }

    #[test]
    fn adjoint_generalized_exponents_are_weyl_exponents() {
        for name in ["A1", "A2", "A3", "B2", "G2"] {
            let rs = RootSystem::parse(name).unwrap();
            let ctx = HeckeCtx::new(&rs);
            let theta = rs.highest_root();
            let jmax = (rs.pair_2rho_check(&theta) / 2) as usize;
            let table = harmonics_table(&ctx, jmax);
            let exps = generalized_exponents(&ctx, &table, &theta, jmax).unwrap();
            assert_eq!(exps, rs.exponents(), "{name}");
        }
    }

    #[test]
    fn a1_harmonics_are_multiplicity_free() {
        // For sl(2): V(2k) occurs exactly in degree k.
        let rs = RootSystem::parse("A1").unwrap();
        let ctx = HeckeCtx::new(&rs);
        let table = harmonics_table(&ctx, 6);
        for k in 0..=6usize {
            let row = table.get(&vec![2 * k as i64]).unwrap();
            let expect: Vec<i64> = (0..=6).map(|j| i64::from(j == k)).collect();
            assert_eq!(row, &expect, "k={k}");
        }
    }

    #[test]
    fn p_zero_closed_form() {
        // A1: P_{0,λ} = 1 for every even λ.
        let rs = RootSystem::parse("A1").unwrap();
        let ctx = HeckeCtx::new(&rs);
        let table = harmonics_table(&ctx, 4);
        for m in [0i64, 2, 4, 6, 8] {
            let report = p_zero_check(&ctx, &table, &[m], 4).unwrap();
            assert!(report.pass, "λ={m}");
            assert_eq!(report.p_direct, vec![int(1)], "λ={m}");
        }
        // A2 adjoint: 1 + q. B2 adjoint: 1 + q².
        for (name, expect) in [("A2", vec![1, 1]), ("B2", vec![1, 0, 1])] {
            let rs = RootSystem::parse(name).unwrap();
            let ctx = HeckeCtx::new(&rs);
            let theta = rs.highest_root();
            let jmax = (rs.pair_2rho_check(&theta) / 2) as usize;
            let table = harmonics_table(&ctx, jmax);
            let report = p_zero_check(&ctx, &table, &theta, jmax).unwrap();
            assert!(report.pass, "{name}");
            let expect: Vec<Int> = expect.into_iter().map(int).collect();
            assert_eq!(report.p_direct, expect, "{name}");
        }
    }

    #[test]
    fn p_zero_sweep_a2() {
        let rs = RootSystem::parse("A2").unwrap();
        let ctx = HeckeCtx::new(&rs);
        let reports = p_zero_sweep(&ctx, 3, 6).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.pass, "λ={:?}", r.lambda);
        }
    }

    #[test]
    fn exponent_window_too_small_is_an_error() {
        let rs = RootSystem::parse("A2").unwrap();
        let ctx = HeckeCtx::new(&rs);
        let table = harmonics_table(&ctx, 1);
        assert!(generalized_exponents(&ctx, &table, &[1, 1], 1).is_err());
    }
}
