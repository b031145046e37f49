//! Graded local data of the intersection-cohomology sheaves on the strata
//! of the affine Grassmannian of `GL_n`, and the sheaf-theoretic counting
//! function they define.
//!
//! For dominant `λ ≥ μ` (partitions of the same size), the stalk of the
//! `λ`-sheaf at a point of the `μ`-stratum has Poincaré polynomial
//! `P_{μλ}(q)` placed in cohomological degrees `2k − ⟨λ, 2ρ̌⟩`: the
//! coefficient of `q^k` is the dimension in that degree.  Summing the
//! strata against characters of the dual group gives the local counting
//! function: its value on the `μ`-stratum is
//! `Σ_{λ ≥ μ, |λ| = |μ|} q^{n(λ)} · P_{μλ}(q) · χ_λ(γ)`,
//! with `n(λ) = Σ (i−1) λ_i` the arithmetic grading shift.

use crate::charring::QChar;
use crate::error::{Error, Result};
use crate::exactalg::{Int, LaurentScalar};
use crate::hecke::whittaker::n_coordinate;
use crate::hecke::HeckeCtx;
use crate::rootdata::Wt;

/// Value of the local counting function on the stratum of a dominant
/// partition `μ`, with the dual-group parameter `γ` kept symbolic:
/// `Σ_{λ ≥ μ, |λ| = |μ|} q^{n(λ)} P_{μλ}(q) χ_λ`.
pub fn ic_local_value(ctx: &HeckeCtx, mu: &[i64]) -> Result<QChar> {
    let rs = ctx.rs();
    let n = rs
        .gl_n()
        .ok_or_else(|| Error::BadInput("stalk data is defined for GL_n".into()))?;
    rs.check_weight(mu)?;
    if !rs.is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    if mu.iter().any(|x| *x < 0) {
        return Err(Error::BadInput(
            "stratum label must be a partition (twist centrally first)".into(),
        ));
    }
    let total: i64 = mu.iter().sum();
    let mut out = QChar::zero(n);
    for lam in rs.gl_partitions(total, total.max(1)) {
        if !rs.dominance_leq(mu, &lam) {
            continue;
        }
        let table = ctx.lk(&lam);
        let Some(row) = table.rows.iter().find(|r| r.mu == mu) else {
            continue;
        };
        let mut p_of_q = LaurentScalar::zero();
        for (k, c) in row.p.iter().enumerate() {
            p_of_q.add_term(2 * (k as i64 + n_coordinate(&lam)), c);
        }
        out.add_scaled_virtual(&ctx.character(&lam), &p_of_q);
    }
    Ok(out)
}

/// One stratum's graded stalk dimensions for a fixed sheaf.
#[derive(Debug, Clone)]
pub struct StalkRow {
    /// The stratum.
    pub mu: Wt,
    /// `(cohomological degree, dimension)` pairs, degree increasing.
    pub entries: Vec<(i64, Int)>,
}

/// The full stalk table of the `λ`-sheaf: for every dominant `μ ≤ λ`, the
/// coefficient of `q^k` in `P_{μλ}` contributes dimension in cohomological
/// degree `2k − ⟨λ, 2ρ̌⟩`.
pub fn stalk_table(ctx: &HeckeCtx, lam: &[i64]) -> Result<Vec<StalkRow>> {
    let rs = ctx.rs();
    rs.check_weight(lam)?;
    if !rs.is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let shift = rs.pair_2rho_check(lam);
    let table = ctx.lk(lam);
    let mut rows = Vec::new();
    for row in &table.rows {
        let entries: Vec<(i64, Int)> = row
            .p
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != Int::from(0))
            .map(|(k, c)| (2 * k as i64 - shift, c.clone()))
            .collect();
        rows.push(StalkRow {
            mu: row.mu.clone(),
            entries,
        });
    }
    Ok(rows)
}

/// The signed, reweighted coefficient function of the counting sheaf
/// attached to `λ`: stratum `μ ↦ (−1)^{⟨λ,2ρ̌⟩} q^{n(λ)} P_{μλ}(q)`,
/// nonzero exactly on dominant `μ ≤ λ`.
pub fn counting_coefficients(ctx: &HeckeCtx, lam: &[i64]) -> Result<Vec<(Wt, LaurentScalar)>> {
    let rs = ctx.rs();
    if rs.gl_n().is_none() {
        return Err(Error::BadInput("counting sheaves are defined for GL_n".into()));
    }
    rs.check_weight(lam)?;
    if !rs.is_dominant(lam) {
        return Err(Error::NotDominant(lam.to_vec()));
    }
    let sign = if rs.pair_2rho_check(lam) % 2 == 0 { 1 } else { -1 };
    let table = ctx.lk(lam);
    let mut out = Vec::new();
    for row in &table.rows {
        let mut val = LaurentScalar::zero();
        for (k, c) in row.p.iter().enumerate() {
            val.add_term(2 * (k as i64 + n_coordinate(lam)), c);
        }
        out.push((row.mu.clone(), val.scale(&Int::from(sign))));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;
    use crate::rootdata::RootSystem;

    #[test]
    fn gl2_local_values() {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        // Stratum (1,0): only λ = (1,0) contributes, n(λ) = 0 → t₁ + t₂.
        let val = ic_local_value(&ctx, &[1, 0]).unwrap();
        let mut expect = QChar::zero(2);
        expect.add_term(&[1, 0], &LaurentScalar::one());
        expect.add_term(&[0, 1], &LaurentScalar::one());
        assert_eq!(val, expect);
        // Stratum (1,1): χ_{(2,0)} + q·χ_{(1,1)}.
        let val = ic_local_value(&ctx, &[1, 1]).unwrap();
        let mut expect = QChar::zero(2);
        expect.add_scaled_virtual(&ctx.character(&[2, 0]), &LaurentScalar::one());
        expect.add_scaled_virtual(&ctx.character(&[1, 1]), &LaurentScalar::q_pow(1));
        assert_eq!(val, expect);
        // Stratum (0,0): the constant 1.
        let val = ic_local_value(&ctx, &[0, 0]).unwrap();
        let mut expect = QChar::zero(2);
        expect.add_term(&[0, 0], &LaurentScalar::one());
        assert_eq!(val, expect);
    }

    #[test]
    fn gl3_local_value_small_stratum() {
        // Stratum (1,1,0) of GL_3: λ = (1,1,0) gives q^{n} = q (n(λ)=1),
        // λ = (2,0,0) ≥ (1,1,0)? No: (1,1,0) ≤ (2,0,0), so both contribute:
        // value = χ_{(2,0,0)}·P_{(1,1,0),(2,0,0)} + q·χ_{(1,1,0)}.
        // P_{(1,1,0),(2,0,0)} = 1, so the weight (1,1,0) coefficient is
        // 1 (from χ_{(2,0,0)}) + q (from q·χ_{(1,1,0)}).
        let rs = RootSystem::gl(3);
        let ctx = HeckeCtx::new(&rs);
        let val = ic_local_value(&ctx, &[1, 1, 0]).unwrap();
        let mut expect_coeff = LaurentScalar::one();
        expect_coeff.add_term(2, &int(1));
        assert_eq!(val.coeff(&[1, 1, 0]), expect_coeff);
        // Weight (2,0,0) appears only through χ_{(2,0,0)}: coefficient 1.
        assert_eq!(val.coeff(&[2, 0, 0]), LaurentScalar::one());
    }

    #[test]
    fn gl3_stalk_dictionary() {
        // The (2,1,0)-sheaf at stratum (1,1,1): P = 1 + q sits in
        // cohomological degrees −4 and −2.
        let rs = RootSystem::gl(3);
        let ctx = HeckeCtx::new(&rs);
        let rows = stalk_table(&ctx, &[2, 1, 0]).unwrap();
        let row = rows.iter().find(|r| r.mu == vec![1, 1, 1]).unwrap();
        assert_eq!(row.entries, vec![(-4, int(1)), (-2, int(1))]);
        // On the open stratum the stalk is one-dimensional in degree
        // −⟨λ,2ρ̌⟩.
        let row = rows.iter().find(|r| r.mu == vec![2, 1, 0]).unwrap();
        assert_eq!(row.entries, vec![(-4, int(1))]);
    }

    #[test]
    fn counting_coefficients_support_and_top() {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        let rows = counting_coefficients(&ctx, &[3, 1]).unwrap();
        // Support is exactly the dominant μ ≤ λ with the same size.
        let support: Vec<Wt> = rows.iter().map(|(mu, _)| mu.clone()).collect();
        assert!(support.contains(&vec![3, 1]));
        assert!(support.contains(&vec![2, 2]));
        assert_eq!(support.len(), 2);
        // Top coefficient: sign · q^{n(λ)} with P_{λλ} = 1.
        let top = rows.iter().find(|(mu, _)| mu == &vec![3, 1]).unwrap();
        assert_eq!(top.1, LaurentScalar::q_pow(1));
        // ⟨(3,1),2ρ̌⟩ = 2 is even → sign +1; richer sign case: λ = (1,0).
        let rows = counting_coefficients(&ctx, &[1, 0]).unwrap();
        assert_eq!(rows[0].1, LaurentScalar::from_int(-1));
    }
}
