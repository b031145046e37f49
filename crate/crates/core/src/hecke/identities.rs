//! Graded character-series identities certifying the Plancherel density,
//! the expansion of the normalized spherical kernel, and the numeric
//! convergence of its defining series.
//!
//! All series live in `Z[weights][[u]]` with `u = q^{-1}`, so every check
//! here is an equality of finitely many exact integer coefficients.

use std::collections::BTreeSet;

use crate::charring::{weyl_character, CharSeries, QChar, VirtualChar};
use crate::error::{Error, Result};
use crate::exactalg::{rat_pow, Int, Rat};
use crate::hecke::whittaker::eval_weight;
use crate::hecke::{n_mu, q_weight_multiplicity, satake_char, HeckeCtx, HeckeElt};
use crate::rootdata::{KostantCache, RootSystem, Wt};

/// The Weyl-denominator product `∏_{α ∈ Δ} (1 − e^α)` over all roots.
pub fn weyl_denominator_product(rs: &RootSystem) -> VirtualChar {
    let mut out = VirtualChar::one(rs.rank());
    for root in rs.positive_roots() {
        for wt in [root.wt.clone(), negate(&root.wt)] {
            let mut factor = VirtualChar::one(rs.rank());
            factor.add_term(&wt, -1);
            out = out.mul(&factor);
        }
    }
    out
}

/// The total-mass certificate for the Plancherel density: the weight-zero
/// profile (in powers of `u = q^{-1}`) of
/// `Q(u) · ∏_{α ∈ Δ} (1 − e^α)/(1 − u·e^α)`
/// must be `|W|` in degree 0 and `0` in every higher degree shown, i.e.
/// the density integrates to exactly `1` once divided by `|W|`.
pub fn plancherel_mass_profile(rs: &RootSystem, prec: usize) -> Vec<i64> {
    let mut series = scalar_series(rs.rank(), prec, &int_to_i64(&rs.poincare()));
    for root in rs.positive_roots() {
        for wt in [root.wt.clone(), negate(&root.wt)] {
            let mut factor = VirtualChar::one(rs.rank());
            factor.add_term(&wt, -1);
            series = series.mul_char(&factor).mul(&CharSeries::geometric(prec, &wt));
        }
    }
    series.weight_zero_profile()
}

/// The Weyl-integration pairing `⟨χ_λ, χ_ν⟩` computed exactly with no `u`:
/// the weight-zero coefficient of `χ_λ · χ_ν^∨ · ∏_{α ∈ Δ} (1 − e^α)`,
/// which must equal `|W| · δ_{λν}`.
pub fn character_pairing(rs: &RootSystem, lam: &[i64], nu: &[i64]) -> i64 {
    let prod = weyl_character(rs, lam)
        .mul(&weyl_character(rs, nu).dual())
        .mul(&weyl_denominator_product(rs));
    prod.coeff(&vec![0; rs.rank()])
}

/// The cross-multiplied Macdonald identity behind the inversion of the
/// density normalization:
/// `Σ_{w ∈ W} ∏_{β ∈ wΔ⁺} (1 − e^β)(1 − u·e^{−β}) = Q(u) · ∏_{β ∈ Δ} (1 − e^β)`,
/// an equality of polynomials in `u` with character coefficients.
pub fn macdonald_sum_check(rs: &RootSystem) -> bool {
    let rank = rs.rank();
    let prec = rs.positive_roots().len() + 1;
    let mut lhs = CharSeries::zero(rank, prec);
    for w in rs.weyl() {
        let mut term = CharSeries::one(rank, prec);
        for root in rs.positive_roots() {
            let beta = w.apply(&root.wt);
            let mut no_u = VirtualChar::one(rank);
            no_u.add_term(&beta, -1);
            let mut with_u = CharSeries::one(rank, prec);
            let mut minus = VirtualChar::zero(rank);
            minus.add_term(&negate(&beta), -1);
            *with_u.coeff_mut(1) = minus;
            term = term.mul_char(&no_u).mul(&with_u);
        }
        lhs = lhs.add(&term);
    }
    let rhs = scalar_series(rank, prec, &int_to_i64(&rs.poincare()))
        .mul_char(&weyl_denominator_product(rs));
    lhs == rhs
}

/// Combined report for the three Plancherel-density certificates.
#[derive(Debug, Clone)]
pub struct PlancherelReport {
    /// Weight-zero profile of the normalized density; `[|W|, 0, 0, …]` passes.
    pub mass_profile: Vec<i64>,
    pub weyl_order: i64,
    pub mass_ok: bool,
    /// Pairs `(λ, ν, ⟨χ_λ, χ_ν⟩)` checked against `|W|·δ_{λν}`.
    pub pairings: Vec<(Wt, Wt, i64)>,
    pub orthogonality_ok: bool,
    pub macdonald_ok: bool,
    pub pass: bool,
}

/// Runs all three certificates: total mass `1`, orthogonality of the
/// spherical kernel's character expansion, and the Macdonald sum.
/// `deg_max` bounds `⟨λ, 2ρ̌⟩` for the orthogonality sweep; `prec` is the
/// `u`-precision of the mass profile.
pub fn plancherel_check(rs: &RootSystem, prec: usize, deg_max: i64) -> PlancherelReport {
    let weyl_order = rs.weyl().len() as i64;
    let mass_profile = plancherel_mass_profile(rs, prec);
    let mass_ok = mass_profile
        .iter()
        .enumerate()
        .all(|(d, c)| *c == if d == 0 { weyl_order } else { 0 });

    let doms: Vec<Wt> = if rs.gl_n().is_some() {
        (0..=deg_max.max(0))
            .flat_map(|t| rs.gl_partitions(t, t.max(1)))
            .collect()
    } else {
        rs.dominant_with_2rho_at_most(deg_max)
    };
    let mut pairings = Vec::new();
    let mut orthogonality_ok = true;
    for la in &doms {
        for nu in &doms {
            let got = character_pairing(rs, la, nu);
            let expect = if la == nu { weyl_order } else { 0 };
            if got != expect {
                orthogonality_ok = false;
            }
            pairings.push((la.clone(), nu.clone(), got));
        }
    }

    let macdonald_ok = macdonald_sum_check(rs);
    let pass = mass_ok && orthogonality_ok && macdonald_ok;
    PlancherelReport {
        mass_profile,
        weyl_order,
        mass_ok,
        pairings,
        orthogonality_ok,
        macdonald_ok,
        pass,
    }
}

/// Result of comparing two character series degree by degree.
#[derive(Debug, Clone)]
pub struct SeriesCheck {
    /// Degrees `0 … prec−1` were compared.
    pub prec: usize,
    /// Number of highest weights contributing to the left-hand side.
    pub lambda_terms: usize,
    /// First degree where the sides differ, if any.
    pub mismatch: Option<usize>,
    pub pass: bool,
}

/// The graded expansion of the normalized spherical kernel at a dominant
/// `μ`, as an identity of character series in `u` (both sides cleared of
/// the overall `u^{⟨μ,ρ̌⟩}`):
///
/// `Σ_λ χ_λ · m^λ_μ(u) = [u^{⟨μ,ρ̌⟩} S(c_μ)] · W_μ(u) · ∏_{α ∈ Δ} (1 − u·e^α)^{-1}`
///
/// where `m^λ_μ` is the weight-multiplicity `q`-analog and `W_μ` the
/// Poincaré polynomial of the stabilizer of `μ`. The left side is summed
/// over the finite set of `λ` that can contribute below degree `prec`.
pub fn spherical_kernel_expansion_check(
    ctx: &HeckeCtx,
    mu: &[i64],
    prec: usize,
) -> Result<SeriesCheck> {
    let rs = ctx.rs();
    rs.check_weight(mu)?;
    if !rs.is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    let rank = rs.rank();

    // Left side: every λ with a Weyl image of λ+δ in μ+δ+Q₊ of bounded
    // height can contribute; the height bound is (prec−1)·ht(θ) because a
    // degree-j term of 𝒫_u needs β expressible as j positive roots.
    let theta_ht = rs.height(&rs.highest_root());
    let bound = (prec as i64 - 1) * theta_ht;
    let delta = rs.rho_shift();
    let mu_d: Wt = mu.iter().zip(&delta).map(|(a, b)| a + b).collect();
    let mut lambdas: BTreeSet<Wt> = BTreeSet::new();
    for beta in positive_cone_up_to_height(rs, bound) {
        let shifted: Wt = mu_d.iter().zip(&beta).map(|(a, b)| a + b).collect();
        for w in rs.weyl() {
            let moved = w.apply(&shifted);
            let lam: Wt = moved.iter().zip(&delta).map(|(a, b)| a - b).collect();
            if !rs.is_dominant(&lam) {
                continue;
            }
            let diff: Wt = lam.iter().zip(mu).map(|(a, b)| a - b).collect();
            match rs.root_lattice_coords(&diff) {
                Some(coords) if coords.iter().all(|c| *c >= 0) => {
                    lambdas.insert(lam);
                }
                _ => continue,
            }
        }
    }

    let mut kostant = KostantCache::new(rs);
    let mut lhs = CharSeries::zero(rank, prec);
    for lam in &lambdas {
        let poly = q_weight_multiplicity(rs, &mut kostant, lam, mu);
        if poly.is_empty() {
            continue;
        }
        let chi = ctx.character(lam);
        for (j, c) in int_to_i64(&poly).into_iter().enumerate().take(prec) {
            if c != 0 {
                let cur = lhs.coeff_mut(j);
                *cur = cur.add(&chi.scaled(c));
            }
        }
    }

    // Right side.
    let c_mu = HeckeElt::basis_vector(rank, crate::hecke::Basis::C, mu.to_vec());
    let w_mu = satake_char(ctx, &c_mu);
    let mut rhs = qchar_to_u_series(&w_mu, rs.pair_2rho_check(mu), prec)?;
    rhs = rhs.mul(&scalar_series(
        rank,
        prec,
        &int_to_i64(&rs.poincare_stabilizer(mu)),
    ));
    for root in rs.positive_roots() {
        for wt in [root.wt.clone(), negate(&root.wt)] {
            rhs = rhs.mul(&CharSeries::geometric(prec, &wt));
        }
    }

    let mismatch = (0..prec).find(|d| lhs.coeff(*d) != rhs.coeff(*d));
    Ok(SeriesCheck {
        prec,
        lambda_terms: lambdas.len(),
        mismatch,
        pass: mismatch.is_none(),
    })
}

/// The rank-one display of the same expansion at `μ = 0`:
/// `Σ_{m ≥ 0} u^m · χ_{2m} = (1 + u) · (1 − u·e^α)^{-1} (1 − u·e^{−α})^{-1}`,
/// returned as (left side, right side, equal).
pub fn sl2_display(prec: usize) -> (CharSeries, CharSeries, bool) {
    let rs = RootSystem::parse("A1").expect("A1 exists");
    let mut lhs = CharSeries::zero(1, prec);
    for m in 0..prec {
        *lhs.coeff_mut(m) = weyl_character(&rs, &[2 * m as i64]);
    }
    let mut rhs = scalar_series(1, prec, &[1, 1]);
    rhs = rhs.mul(&CharSeries::geometric(prec, &[2]));
    rhs = rhs.mul(&CharSeries::geometric(prec, &[-2]));
    let eq = lhs == rhs;
    (lhs, rhs, eq)
}

/// Numeric summary of summing the kernel series at a rational point.
#[derive(Debug, Clone)]
pub struct ConvergeReport {
    /// Terms actually summed (dominant weights, in increasing height).
    pub terms_used: usize,
    /// Last partial sum.
    pub value: Rat,
    /// Closed-form target value.
    pub target: Rat,
    /// `|value − target| / |target|`.
    pub rel_err: Rat,
    /// Whether `rel_err < tol` was reached within the term budget.
    pub pass: bool,
}

/// Sums `Σ_λ χ_λ(γ) · m^λ_μ(1/q)` over dominant `λ ≥ μ` in increasing
/// height of `λ − μ` and compares the partial sums against the closed form
/// `[Q(u) ∏_{α ∈ Δ} (1 − u·γ^α)^{-1}] · [W_μ(u)/W(u)] · w_μ(γ)` at
/// `u = 1/q`, where `w_μ = u^{⟨μ,ρ̌⟩} S(c_μ)`. Stops as soon as the
/// relative error drops below `tol`.
pub fn kernel_series_numeric(
    ctx: &HeckeCtx,
    mu: &[i64],
    gamma: &[Rat],
    q: &Rat,
    max_terms: usize,
    tol: &Rat,
) -> Result<ConvergeReport> {
    use num_traits::{One, Signed, Zero};
    let rs = ctx.rs();
    rs.check_weight(mu)?;
    if !rs.is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    if gamma.len() != rs.rank() || gamma.iter().any(|g| g.is_zero()) {
        return Err(Error::BadInput(
            "γ must list one nonzero rational per coordinate".into(),
        ));
    }
    if q <= &Rat::one() {
        return Err(Error::BadInput("q must be a rational > 1".into()));
    }
    let u = rat_pow(q, -1);

    // Closed-form target.
    let mut target = eval_u_poly(&rs.poincare(), &u);
    for root in rs.positive_roots() {
        for wt in [root.wt.clone(), negate(&root.wt)] {
            let factor = Rat::one() - &u * eval_weight(gamma, &wt);
            if factor.is_zero() {
                return Err(Error::BadInput(format!(
                    "density vanishes at γ: 1 − q^{{-1}}γ^α = 0 for α = {wt:?}"
                )));
            }
            target /= factor;
        }
    }
    target *= eval_u_poly(&rs.poincare_stabilizer(mu), &u) / eval_u_poly(&rs.poincare(), &u);
    let c_mu = HeckeElt::basis_vector(rs.rank(), crate::hecke::Basis::C, mu.to_vec());
    let w_mu = satake_char(ctx, &c_mu);
    target *= eval_qchar_cleared(&w_mu, rs.pair_2rho_check(mu), gamma, q)?;
    if target.is_zero() {
        return Err(Error::BadInput("target value is zero; γ is degenerate".into()));
    }

    // Partial sums over dominant λ = μ + β, β in the positive cone by height.
    let mut kostant = KostantCache::new(rs);
    let mut sum = Rat::zero();
    let mut used = 0usize;
    let mut pass = false;
    'outer: for height in 0..=(max_terms as i64) {
        for beta in positive_cone_at_height(rs, height) {
            let lam: Wt = mu.iter().zip(&beta).map(|(a, b)| a + b).collect();
            if !rs.is_dominant(&lam) {
                continue;
            }
            let poly = q_weight_multiplicity(rs, &mut kostant, &lam, mu);
            if poly.is_empty() {
                continue;
            }
            let m_at_u = eval_u_poly(&poly, &u);
            sum += ctx.character(&lam).eval_rat(gamma) * m_at_u;
            used += 1;
            let rel = ((&sum - &target) / &target).abs();
            if &rel < tol {
                pass = true;
                break 'outer;
            }
            if used >= max_terms {
                break 'outer;
            }
        }
    }
    let rel_err = ((&sum - &target) / &target).abs();
    Ok(ConvergeReport {
        terms_used: used,
        value: sum,
        target,
        rel_err,
        pass,
    })
}

/// Converts a symbolic class function whose coefficients become honest
/// power series in `u = q^{-1}` after clearing `v^{v_shift}`: each
/// coefficient's `v`-exponents must be `≤ v_shift` and of the same parity;
/// `v^{v_shift − 2d}` lands in degree `d`. Degrees ≥ `prec` are dropped.
pub fn qchar_to_u_series(x: &QChar, v_shift: i64, prec: usize) -> Result<CharSeries> {
    use num_traits::ToPrimitive;
    let mut out = CharSeries::zero(x.rank(), prec);
    for (w, c) in x.terms() {
        for (e, a) in c.iter() {
            let rel = v_shift - e;
            if rel < 0 || rel % 2 != 0 {
                return Err(Error::BadInput(format!(
                    "coefficient at weight {w:?} has v-exponent {e} above or off-parity from shift {v_shift}"
                )));
            }
            let d = (rel / 2) as usize;
            if d < prec {
                out.coeff_mut(d)
                    .add_term(w, a.to_i64().expect("small coefficient"));
            }
        }
    }
    Ok(out)
}

/// Evaluates `u^{⟨μ,ρ̌⟩} S(c_μ)` at `(γ, q)`: all `v`-exponents become even
/// after the clearing shift, so the value is rational.
fn eval_qchar_cleared(x: &QChar, v_shift: i64, gamma: &[Rat], q: &Rat) -> Result<Rat> {
    use num_traits::Zero;
    let mut acc = Rat::zero();
    for (w, c) in x.terms() {
        let shifted = c.shift(-v_shift);
        if !shifted.is_q_polynomial() {
            return Err(Error::BadInput(format!(
                "value at weight {w:?} is not in Z[q^{{±1}}] after clearing v^{v_shift}"
            )));
        }
        let mut val = Rat::zero();
        for (e, a) in shifted.iter() {
            val += Rat::from(a.clone()) * rat_pow(q, e / 2);
        }
        acc += val * eval_weight(gamma, w);
    }
    Ok(acc)
}

/// `1/N_μ` expressed through Poincaré polynomials, as a check value:
/// `u^{⟨μ,2ρ̌⟩} W_μ(u) / W(u)` evaluated at `u = 1/q` must equal the
/// reciprocal of the exact `N_μ`.
pub fn n_mu_reciprocal_identity(rs: &RootSystem, mu: &[i64], q: &Rat) -> Result<bool> {
    use num_traits::One;
    let u = rat_pow(q, -1);
    let lhs = rat_pow(&u, rs.pair_2rho_check(mu)) * eval_u_poly(&rs.poincare_stabilizer(mu), &u)
        / eval_u_poly(&rs.poincare(), &u);
    let n = n_mu(rs, mu)?;
    let v = sqrt_exact(q).ok_or_else(|| {
        Error::BadInput("q must be a perfect rational square for this check".into())
    })?;
    Ok(lhs * n.eval_v(&v) == Rat::one())
}

fn sqrt_exact(q: &Rat) -> Option<Rat> {
    let ns = q.numer().sqrt();
    let ds = q.denom().sqrt();
    if &(&ns * &ns) == q.numer() && &(&ds * &ds) == q.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

fn eval_u_poly(coeffs: &[Int], u: &Rat) -> Rat {
    use num_traits::Zero;
    let mut acc = Rat::zero();
    for (j, c) in coeffs.iter().enumerate() {
        acc += Rat::from(c.clone()) * rat_pow(u, j as i64);
    }
    acc
}

fn negate(wt: &[i64]) -> Wt {
    wt.iter().map(|x| -x).collect()
}

fn int_to_i64(xs: &[Int]) -> Vec<i64> {
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

/// All `β` in the nonnegative root-lattice cone with `ht(β) ≤ bound`.
fn positive_cone_up_to_height(rs: &RootSystem, bound: i64) -> Vec<Wt> {
    let mut out = Vec::new();
    for h in 0..=bound {
        out.extend(positive_cone_at_height(rs, h));
    }
    out
}

/// All `β` in the nonnegative root-lattice cone with `ht(β) = h` exactly.
fn positive_cone_at_height(rs: &RootSystem, h: i64) -> Vec<Wt> {
    let simples = rs.simple_roots();
    let mut out = Vec::new();
    let mut coeffs = vec![0i64; simples.len()];
    fill_cone(rs, simples.len(), h, &mut coeffs, &mut out);
    out
}

fn fill_cone(rs: &RootSystem, remaining: usize, h: i64, coeffs: &mut Vec<i64>, out: &mut Vec<Wt>) {
    if remaining == 1 {
        let last = coeffs.len() - 1;
        coeffs[last] = h;
        let mut wt = vec![0i64; rs.rank()];
        for (c, root) in coeffs.iter().zip(rs.simple_roots()) {
            for (x, r) in wt.iter_mut().zip(&root.wt) {
                *x += c * r;
            }
        }
        out.push(wt);
        return;
    }
    let idx = coeffs.len() - remaining;
    for c in 0..=h {
        coeffs[idx] = c;
        fill_cone(rs, remaining - 1, h - c, coeffs, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn mass_profile_is_weyl_order_then_zero() {
        for name in ["A1", "A2", "B2"] {
            let rs = RootSystem::parse(name).unwrap();
            let w = rs.weyl().len() as i64;
            let profile = plancherel_mass_profile(&rs, 7);
            let mut expect = vec![0i64; 7];
            expect[0] = w;
            assert_eq!(profile, expect, "{name}");
        }
        let rs = RootSystem::gl(3);
        let profile = plancherel_mass_profile(&rs, 6);
        assert_eq!(profile[0], 6);
        assert!(profile[1..].iter().all(|c| *c == 0));
    }

    #[test]
    fn character_pairing_is_weyl_orthogonality() {
        let rs = RootSystem::gl(2);
        assert_eq!(character_pairing(&rs, &[0, 0], &[0, 0]), 2);
        assert_eq!(character_pairing(&rs, &[2, 0], &[2, 0]), 2);
        assert_eq!(character_pairing(&rs, &[2, 0], &[1, 1]), 0);
        assert_eq!(character_pairing(&rs, &[2, 0], &[0, 0]), 0);
        let rs = RootSystem::parse("B2").unwrap();
        assert_eq!(character_pairing(&rs, &[1, 0], &[1, 0]), 8);
        assert_eq!(character_pairing(&rs, &[1, 0], &[0, 1]), 0);
    }

    #[test]
    fn macdonald_sum_small_types() {
        for name in ["A1", "A2", "B2"] {
            let rs = RootSystem::parse(name).unwrap();
            assert!(macdonald_sum_check(&rs), "{name}");
        }
        assert!(macdonald_sum_check(&RootSystem::gl(3)));
    }

    #[test]
    fn plancherel_report_passes() {
        let report = plancherel_check(&RootSystem::gl(2), 6, 4);
        assert!(report.mass_ok && report.orthogonality_ok && report.macdonald_ok);
        assert!(report.pass);
        assert!(report.pairings.len() >= 9);
    }

    #[test]
    fn kernel_expansion_gl2() {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        for mu in [vec![0i64, 0], vec![1, 0], vec![2, 1]] {
            let check = spherical_kernel_expansion_check(&ctx, &mu, 7).unwrap();
            assert!(check.pass, "μ={mu:?} mismatch at {:?}", check.mismatch);
            assert!(check.lambda_terms >= 7, "μ={mu:?}");
        }
    }

    #[test]
    fn kernel_expansion_a2_and_b2() {
        for name in ["A2", "B2"] {
            let rs = RootSystem::parse(name).unwrap();
            let ctx = HeckeCtx::new(&rs);
            for mu in [vec![0i64, 0], vec![1, 1]] {
                let check = spherical_kernel_expansion_check(&ctx, &mu, 4).unwrap();
                assert!(check.pass, "{name} μ={mu:?} mismatch at {:?}", check.mismatch);
            }
        }
    }

    #[test]
    fn sl2_display_matches() {
        let (lhs, rhs, eq) = sl2_display(9);
        assert!(eq);
        // Degree 3 on the left is the 7-dimensional χ_6.
        assert_eq!(lhs.coeff(3).dim(), 7);
        assert_eq!(rhs.coeff(3).dim(), 7);
    }

    #[test]
    fn kernel_series_numeric_gl2() {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        let gamma = [rat(3, 2), rat(2, 3)];
        let tol = rat(1, 1_000_000_000);
        let report =
            kernel_series_numeric(&ctx, &[0, 0], &gamma, &rat(4, 1), 50, &tol).unwrap();
        assert!(report.pass, "rel_err = {}", report.rel_err);
        assert_eq!(report.target, rat(45, 14));
        assert!(report.terms_used <= 50);
    }

    #[test]
    fn kernel_series_numeric_rejects_degenerate_gamma() {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        // γ^α = q makes the density vanish.
        let gamma = [rat(4, 1), rat(1, 1)];
        let tol = rat(1, 1_000_000);
        assert!(kernel_series_numeric(&ctx, &[0, 0], &gamma, &rat(4, 1), 10, &tol).is_err());
    }

    #[test]
    fn n_mu_reciprocal_examples() {
        let rs = RootSystem::gl(2);
        for mu in [vec![0i64, 0], vec![1, 0], vec![2, 0], vec![1, 1]] {
            assert!(n_mu_reciprocal_identity(&rs, &mu, &rat(4, 1)).unwrap(), "μ={mu:?}");
            assert!(n_mu_reciprocal_identity(&rs, &mu, &rat(9, 1)).unwrap(), "μ={mu:?}");
        }
    }

    #[test]
    fn density_degree_one_coefficient_is_adjoint() {
        // The u-expansion of the reciprocal density starts 1 + u·(adjoint
        // character) for a simple group: its harmonics in degree one are
        // the adjoint representation itself.
        let rs = RootSystem::parse("A2").unwrap();
        let series = crate::hecke::harmonics::harmonics_series(&rs, 2);
        assert_eq!(*series.coeff(0), VirtualChar::one(2));
        assert_eq!(*series.coeff(1), crate::charring::adjoint_char(&rs));
    }
}
