//! Brute-force oracles over `F_p((π))`.
//!
//! Everything in this module recomputes Hecke-algebra data by direct
//! enumeration — Hermite coset representatives for `K`-orbits, truncated
//! unipotent windows for integrals over the upper-triangular unipotent
//! subgroup — entirely independently of the symbolic layer (Freudenthal
//! recursion, Lusztig–Kato tables, the Satake transform).  The two sides
//! are then compared exactly: accumulated counts land in `Z[ζ_p][v^{±1}]`
//! via [`CycLaurent`]/[`CycQ`], are reduced to `Z[v^{±1}]`, and evaluated
//! at `v = √p` into [`SqrtVal`].  No floating point is involved anywhere.
//!
//! Throughout, `ν(π)` denotes the diagonal matrix `diag(π^{ν_1},…,π^{ν_n})`
//! and `Ψ(u) = ζ_p^{r(u)}` the standard character of the unipotent group,
//! with `r(u)` the sum of the `π^{-1}`-coefficients of the first
//! superdiagonal.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::charring::QChar;
use crate::error::{Error, Result};
use crate::exactalg::{int, rat_pow, CycLaurent, Int, LaurentScalar, Rat, SqrtVal};
use crate::hecke::whittaker::{whittaker_value, Frame};
use crate::hecke::{n_mu, satake_char, Basis, HeckeCtx, HeckeElt};
use crate::rootdata::{RootSystem, Wt};
use crate::stalks::ic_local_value;

use super::enumerate::{hermite_with_cartan, psi_residue, window_point, WindowShape};
use super::{CycQ, SeriesMatrix};

/// Which sign to use in the unipotent character weighting a sum.
///
/// `Inverse` weights a point `u` by `Ψ^{-1}(u) = ζ^{-r(u)}` (the usual
/// convention for Fourier coefficients of a function transforming by `Ψ`);
/// `Direct` weights by `Ψ(u)`.  The identities hold for either choice, the
/// two sums being exchanged by the Galois symmetry `ζ ↦ ζ^{-1}` of
/// `Q(ζ_p)/Q`, so running both is a useful consistency check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiSign {
    Inverse,
    Direct,
}

impl PsiSign {
    fn zeta_exponent(self, r: u32) -> i64 {
        match self {
            PsiSign::Inverse => -(r as i64),
            PsiSign::Direct => r as i64,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadPrime(p))
    }
}

fn check_partition(wt: &[i64]) -> Result<()> {
    let ok = !wt.is_empty()
        && wt.windows(2).all(|w| w[0] >= w[1])
        && *wt.last().unwrap() >= 0;
    if ok {
        Ok(())
    } else {
        Err(Error::BadInput(format!(
            "expected a partition (weakly decreasing, nonnegative), got {wt:?}"
        )))
    }
}

fn require_gl(rs: &RootSystem) -> Result<usize> {
    rs.gl_n()
        .ok_or_else(|| Error::BadInput("this check is specific to GL_n".into()))
}

/// Evaluate an ascending-coefficient integer polynomial at `x`.
fn eval_int_poly(coeffs: &[Int], x: u32) -> Rat {
    let mut acc = Int::from(0);
    for c in coeffs.iter().rev() {
        acc = acc * Int::from(x) + c;
    }
    Rat::from_integer(acc)
}

// ---------------------------------------------------------------------------
// Window census
// ---------------------------------------------------------------------------

/// The result of sweeping a truncated unipotent window at a cocharacter `ν`:
/// for every sampled point `u` of the window, the Cartan invariant of
/// `u·ν(π)` and the character residue `r(u)` are recorded, giving counts
/// indexed by `(class, residue)`.
///
/// Each sampled point carries measure `p^{log_volume}` (see
/// [`WindowShape::log_volume`]), normalised so the unipotent integral of the
/// constant function `1` over the subgroup of integral matrices is `1`.
#[derive(Debug, Clone)]
pub struct WindowCensus {
    nu: Wt,
    p: u32,
    shape: WindowShape,
    by_class: BTreeMap<(Wt, u32), u64>,
}

impl WindowCensus {
    pub fn nu(&self) -> &[i64] {
        &self.nu
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn shape(&self) -> &WindowShape {
        &self.shape
    }

    /// Counts indexed by `(Cartan class, Ψ-residue)`.
    pub fn residue_counts(&self) -> &BTreeMap<(Wt, u32), u64> {
        &self.by_class
    }

    /// Counts per Cartan class, summed over residues.
    pub fn class_counts(&self) -> BTreeMap<Wt, u64> {
        let mut out: BTreeMap<Wt, u64> = BTreeMap::new();
        for ((cls, _), c) in &self.by_class {
            *out.entry(cls.clone()).or_insert(0) += c;
        }
        out
    }

    /// Total number of sampled points.
    pub fn total(&self) -> u64 {
        self.by_class.values().sum()
    }

    /// Whether the total count matches the window's nominal point count —
    /// i.e. no point was lost or double-counted during the sweep.
    pub fn measure_consistent(&self) -> bool {
        self.total() == self.shape.point_count(self.p)
    }
}

/// Sweep the truncated unipotent window at `ν` with the given widening
/// `margin`, tallying `(Cartan class of u·ν(π), residue r(u))` over all
/// sampled points `u`.  The sweep is parallelised over the code space.
pub fn window_census(nu: &[i64], p: u32, margin: i64) -> Result<WindowCensus> {
    check_prime(p)?;
    if nu.is_empty() {
        return Err(Error::BadInput("empty cocharacter".into()));
    }
    let shape = WindowShape::for_cocharacter(nu, margin);
    let total = shape.point_count(p);
    let diag = SeriesMatrix::diag_pi(p, nu);
    let by_class = (0..total)
        .into_par_iter()
        .fold(
            BTreeMap::<(Wt, u32), u64>::new,
            |mut map, code| {
                let u = window_point(p, &shape, code);
                let b = u.mul(&diag);
                let cls = b
                    .cartan_invariant()
                    .expect("window point times ν(π) is invertible");
                let r = psi_residue(&u);
                *map.entry((cls, r)).or_insert(0) += 1;
                map
            },
        )
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(WindowCensus { nu: nu.to_vec(), p, shape, by_class })
}

// ---------------------------------------------------------------------------
// Satake transform by counting
// ---------------------------------------------------------------------------

/// The value at `ν` of the Satake transform of each orbit indicator `c_μ`,
/// computed purely by counting: `S(c_μ)(ν) = q^{⟨ν,ρ̌⟩} · vol · #{u in the
/// window : u·ν(π) ∈ K μ(π) K}`, evaluated at `q = p`.
///
/// Returns a map `μ ↦ S(c_μ)(ν)|_{q=p}` covering every class observed in
/// the census.
pub fn satake_values(rs: &RootSystem, census: &WindowCensus) -> Result<BTreeMap<Wt, SqrtVal>> {
    rs.check_weight(census.nu())?;
    let p = census.prime();
    // q^{⟨ν,ρ̌⟩} · p^{log_volume} as a v-power times the count.
    let e = rs.pair_2rho_check(census.nu()) + 2 * census.shape().log_volume();
    let mut out = BTreeMap::new();
    for (cls, count) in census.class_counts() {
        let val = LaurentScalar::term(e, int(count as i64)).eval_sqrt(p);
        out.insert(cls, val);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The local Fourier-coefficient check
// ---------------------------------------------------------------------------

/// Outcome of one instance of the local check: the unipotent integral of
/// `H_λ` against `Ψ^{∓1}` along the coset `ν(π)`, compared with the
/// predicted `δ_{λν} · q^{-⟨λ,ρ̌⟩}`.
#[derive(Debug, Clone)]
pub struct LocalReport {
    pub lambda: Wt,
    pub nu: Wt,
    pub lhs: SqrtVal,
    pub rhs: SqrtVal,
    /// Number of window points enumerated.
    pub enumerated: u64,
    pub pass: bool,
}

/// Run the local check for `(λ, ν)` reusing an existing census at `ν`.
///
/// The left side is `Σ_u vol · Ψ^{∓1}(u) · H_λ(u·ν(π))`, where `H_λ` is
/// evaluated through its `c`-basis coefficients on the Cartan class of the
/// point; the accumulation happens in `Z[ζ_p][v^{±1}]`, is reduced to
/// `Z[v^{±1}]`, and is compared with `δ_{λν} v^{-⟨λ,2ρ̌⟩}` at `v = √p`.
pub fn local_fourier_with_census(
    ctx: &HeckeCtx,
    lam: &[i64],
    census: &WindowCensus,
    sign: PsiSign,
) -> Result<LocalReport> {
    let rs = ctx.rs();
    rs.check_weight(lam)?;
    let p = census.prime();
    let h = ctx.satake_h(lam);
    let mut acc = CycLaurent::zero(p);
    for ((cls, r), count) in census.residue_counts() {
        let c = h.coeff(cls);
        if c.is_zero() {
            continue;
        }
        acc.add_zeta_term(sign.zeta_exponent(*r), &c.scale(&int(*count as i64)));
    }
    let reduced = acc
        .reduce()
        .map_err(Error::NotReduced)?
        .shift(2 * census.shape().log_volume());
    let lhs = reduced.eval_sqrt(p);
    let rhs = if lam == census.nu() {
        LaurentScalar::v_pow(-rs.pair_2rho_check(lam)).eval_sqrt(p)
    } else {
        SqrtVal::zero(p)
    };
    let pass = lhs == rhs;
    Ok(LocalReport {
        lambda: lam.to_vec(),
        nu: census.nu().to_vec(),
        lhs,
        rhs,
        enumerated: census.total(),
        pass,
    })
}

/// Convenience wrapper: build the census at `ν` and run the local check.
pub fn local_fourier_check(
    ctx: &HeckeCtx,
    lam: &[i64],
    nu: &[i64],
    p: u32,
    margin: i64,
    sign: PsiSign,
) -> Result<LocalReport> {
    let census = window_census(nu, p, margin)?;
    if !census.measure_consistent() {
        return Err(Error::CheckFailed("window census lost points".into()));
    }
    local_fourier_with_census(ctx, lam, &census, sign)
}

// ---------------------------------------------------------------------------
// Solving for the spherical-function coefficients from counts alone
// ---------------------------------------------------------------------------

/// One solved coefficient of the counting oracle.
#[derive(Debug, Clone)]
pub struct OracleHRow {
    pub mu: Wt,
    /// Coefficient solved from window counts and weight multiplicities.
    pub solved: Rat,
    /// The polynomial `P_{μλ}` evaluated at `q = p`.
    pub expected: Rat,
    pub pass: bool,
}

/// Result of the counting oracle for a fixed `λ`.
#[derive(Debug, Clone)]
pub struct OracleHReport {
    pub lambda: Wt,
    pub p: u32,
    pub rows: Vec<OracleHRow>,
    pub pass: bool,
}

/// Recover the `c`-basis coefficients of `H_λ` at `q = p` from window
/// counts alone, and compare them with the Lusztig–Kato polynomials.
///
/// Writing `H_λ = q^{-⟨λ,ρ̌⟩} Σ_{μ≤λ} g_μ c_μ` with unknown numbers `g_μ`,
/// the defining property `S(H_λ) = χ_λ` gives one linear equation per
/// dominant `ν ≤ λ`:
///
/// `m_λ(ν) = Σ_μ g_μ · #{u : u·ν(π) ∈ Kμ(π)K} · p^{(⟨ν,2ρ̌⟩−⟨λ,2ρ̌⟩)/2 + log_vol(ν)}`
///
/// where `m_λ(ν)` is the weight multiplicity of `ν` in `V(λ)` (computed by
/// the Freudenthal recursion, independent of any Kazhdan–Lusztig theory).
/// The system is unitriangular for the dominance order, so it is solved by
/// back-substitution from `ν = λ` downward; the solution must equal
/// `P_{μλ}(p)` row by row.
pub fn oracle_h_solve(ctx: &HeckeCtx, lam: &[i64], p: u32, margin: i64) -> Result<OracleHReport> {
    let rs = ctx.rs();
    require_gl(rs)?;
    rs.check_weight(lam)?;
    check_partition(lam)?;
    check_prime(p)?;

    let total: i64 = lam.iter().sum();
    let mut list: Vec<Wt> = rs
        .gl_partitions(total, total.max(1))
        .into_iter()
        .filter(|nu| rs.dominance_leq(nu, lam))
        .collect();
    // Solve from the top of the dominance order downward.
    list.sort_by(|a, b| rs.order_key(b).cmp(&rs.order_key(a)));

    let lam_pair = rs.pair_2rho_check(lam);
    let mut solved: Vec<(Wt, Rat)> = Vec::new();
    for nu in &list {
        let census = window_census(nu, p, margin)?;
        if !census.measure_consistent() {
            return Err(Error::CheckFailed("window census lost points".into()));
        }
        let counts = census.class_counts();
        let e = (rs.pair_2rho_check(nu) - lam_pair) / 2 + census.shape().log_volume();
        let scale = rat_pow(&Rat::from_integer(int(p as i64)), e);
        let mult = Rat::from_integer(Int::from(ctx.character(lam).coeff(nu)));
        let mut acc = mult;
        for (mu, g) in &solved {
            if let Some(count) = counts.get(mu) {
                acc -= g.clone() * Rat::from_integer(int(*count as i64)) * scale.clone();
            }
        }
        let diag = counts.get(nu).copied().unwrap_or(0);
        if diag == 0 {
            return Err(Error::CheckFailed(format!(
                "window census at {nu:?} never met its own class"
            )));
        }
        let g = acc / (Rat::from_integer(int(diag as i64)) * scale);
        solved.push((nu.clone(), g));
    }

    let table = ctx.lk(lam);
    let mut rows = Vec::new();
    let mut pass = true;
    for (mu, g) in &solved {
        let expected = table
            .rows
            .iter()
            .find(|r| &r.mu == mu)
            .map(|r| eval_int_poly(&r.p, p))
            .unwrap_or_else(|| Rat::from_integer(Int::from(0)));
        let ok = *g == expected;
        pass &= ok;
        rows.push(OracleHRow { mu: mu.clone(), solved: g.clone(), expected, pass: ok });
    }
    Ok(OracleHReport { lambda: lam.to_vec(), p, rows, pass })
}

// ---------------------------------------------------------------------------
// Convolution by coset counting
// ---------------------------------------------------------------------------

/// One structure constant of the convolution oracle.
#[derive(Debug, Clone)]
pub struct ConvRow {
    pub nu: Wt,
    /// `#{x : cartan(x) = μ₁, cartan(x^{-1}ν(π)) = μ₂}` by enumeration.
    pub direct: u64,
    /// The symbolic structure constant evaluated at `q = p`.
    pub symbolic: SqrtVal,
    pub pass: bool,
}

/// Result of the convolution oracle for a pair `(μ₁, μ₂)`.
#[derive(Debug, Clone)]
pub struct ConvReport {
    pub mu1: Wt,
    pub mu2: Wt,
    pub p: u32,
    /// Number of coset representatives enumerated.
    pub enumerated: u64,
    pub rows: Vec<ConvRow>,
    pub pass: bool,
}

/// Check the Hecke-algebra product `c_{μ₁} ⋆ c_{μ₂}` against direct coset
/// counting: the coefficient of `c_ν` in the product equals the number of
/// left cosets `xK ⊂ Kμ₁(π)K` with `x^{-1}ν(π) ∈ Kμ₂(π)K`.
pub fn convolution_check(ctx: &HeckeCtx, mu1: &[i64], mu2: &[i64], p: u32) -> Result<ConvReport> {
    let rs = ctx.rs();
    let n = require_gl(rs)?;
    rs.check_weight(mu1)?;
    rs.check_weight(mu2)?;
    check_partition(mu1)?;
    check_partition(mu2)?;
    check_prime(p)?;

    let c1 = HeckeElt::basis_vector(n, Basis::C, mu1.to_vec());
    let c2 = HeckeElt::basis_vector(n, Basis::C, mu2.to_vec());
    let prod = crate::hecke::multiply(ctx, &c1, &c2);

    let reps = hermite_with_cartan(p, mu1);
    let mut rows = Vec::new();
    let mut pass = true;
    for nu in prod.support() {
        let diag = SeriesMatrix::diag_pi(p, &nu);
        let mut direct = 0u64;
        for x in &reps {
            let xi = x.inverse_monomial_det()?;
            let cls = xi.mul(&diag).cartan_invariant()?;
            if cls == mu2 {
                direct += 1;
            }
        }
        let symbolic = prod.coeff(&nu).eval_sqrt(p);
        let ok = symbolic == LaurentScalar::from_int(direct as i64).eval_sqrt(p);
        pass &= ok;
        rows.push(ConvRow { nu, direct, symbolic, pass: ok });
    }
    Ok(ConvReport {
        mu1: mu1.to_vec(),
        mu2: mu2.to_vec(),
        p,
        enumerated: reps.len() as u64,
        rows,
        pass,
    })
}

// ---------------------------------------------------------------------------
// The Hecke eigenfunction property of the Whittaker function
// ---------------------------------------------------------------------------

/// Result of the eigenfunction check at one `(μ, ν)`.
#[derive(Debug, Clone)]
pub struct EigenReport {
    pub mu: Wt,
    pub nu: Wt,
    pub p: u32,
    /// Number of coset representatives enumerated.
    pub enumerated: u64,
    /// `Σ_{x : cartan(x)=μ} W(ν(π)·x)`, reduced from `Z[ζ_p]`-coefficients.
    pub lhs: QChar,
    /// `S(c_μ) · W(ν(π))`.
    pub rhs: QChar,
    pub pass: bool,
}

/// Check that the unramified Whittaker function is a Hecke eigenfunction
/// with eigenvalue `S(c_μ)`: summing its values over the cosets of the
/// `μ`-orbit translated to `ν(π)` must reproduce `S(c_μ) · W(ν(π))`.
///
/// Each coset representative `x` is put in Iwasawa form `ν(π)·x = u·t·k`;
/// the value contributed is `Ψ^{∓1}(u) · W(t)`, with `W(t)` the symbolic
/// value `v^{-⟨w,2ρ̌⟩}χ_w` at the dominant weights `w` and `0` elsewhere.
/// The sum is reduced from `Z[ζ_p]` coefficients and compared with the
/// symbolic right side at `v = √p`.
pub fn eigenfunction_check(
    ctx: &HeckeCtx,
    mu: &[i64],
    nu: &[i64],
    p: u32,
    sign: PsiSign,
) -> Result<EigenReport> {
    let rs = ctx.rs();
    let n = require_gl(rs)?;
    rs.check_weight(mu)?;
    rs.check_weight(nu)?;
    check_partition(mu)?;
    check_prime(p)?;

    let reps = hermite_with_cartan(p, mu);
    let diag = SeriesMatrix::diag_pi(p, nu);
    let mut acc = CycQ::zero(p, n);
    for x in &reps {
        let b = diag.mul(x);
        let (w, r) = b.iwasawa()?;
        let wv = whittaker_value(ctx, &w, Frame::Unitary)?;
        if wv.is_zero() {
            continue;
        }
        acc.add_zeta_term(sign.zeta_exponent(r), &wv);
    }
    let lhs = acc.reduce()?;
    let c_mu = HeckeElt::basis_vector(n, Basis::C, mu.to_vec());
    let rhs = satake_char(ctx, &c_mu).mul(&whittaker_value(ctx, nu, Frame::Unitary)?);
    let pass = lhs.eval_sqrt(p) == rhs.eval_sqrt(p);
    Ok(EigenReport {
        mu: mu.to_vec(),
        nu: nu.to_vec(),
        p,
        enumerated: reps.len() as u64,
        lhs,
        rhs,
        pass,
    })
}

// ---------------------------------------------------------------------------
// The unipotent integral of the graded local counting function
// ---------------------------------------------------------------------------

/// Result of the counting-function check at one `ν`.
#[derive(Debug, Clone)]
pub struct CountingReport {
    pub nu: Wt,
    pub p: u32,
    /// Number of window points enumerated.
    pub enumerated: u64,
    /// The unipotent integral of the graded counting function against
    /// `Ψ^{∓1}`, reduced to a symbolic character combination.
    pub lhs: QChar,
    /// `q^{n(ν)} χ_ν` — the predicted value.
    pub rhs: QChar,
    pub pass: bool,
}

/// Integrate the graded local counting function over the unipotent window
/// at `ν` against `Ψ^{∓1}` and compare with `q^{n(ν)} χ_ν` at `v = √p`.
///
/// The counting function assigns to each integral class `μ` the graded
/// character value of the intersection-cohomology stalk data at `μ`
/// ([`ic_local_value`]); summing it with the character weighting over the
/// window computes the local contribution at `ν`.
pub fn counting_function_check(
    ctx: &HeckeCtx,
    nu: &[i64],
    p: u32,
    margin: i64,
    sign: PsiSign,
) -> Result<CountingReport> {
    let rs = ctx.rs();
    let n = require_gl(rs)?;
    rs.check_weight(nu)?;
    check_partition(nu)?;

    let census = window_census(nu, p, margin)?;
    if !census.measure_consistent() {
        return Err(Error::CheckFailed("window census lost points".into()));
    }
    let mut values: BTreeMap<Wt, QChar> = BTreeMap::new();
    let mut acc = CycQ::zero(p, n);
    for ((cls, r), count) in census.residue_counts() {
        if !values.contains_key(cls) {
            values.insert(cls.clone(), ic_local_value(ctx, cls)?);
        }
        let term = values[cls].scale(&LaurentScalar::term(0, int(*count as i64)));
        acc.add_zeta_term(sign.zeta_exponent(*r), &term);
    }
    let lhs = acc
        .reduce()?
        .scale(&LaurentScalar::v_pow(2 * census.shape().log_volume()));
    let rhs = whittaker_value(ctx, nu, Frame::Galois)?;
    let pass = lhs.eval_sqrt(p) == rhs.eval_sqrt(p);
    Ok(CountingReport {
        nu: nu.to_vec(),
        p,
        enumerated: census.total(),
        lhs,
        rhs,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Orbit sizes
// ---------------------------------------------------------------------------

/// Result of comparing an enumerated orbit size with `N_μ(p)`.
#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub mu: Wt,
    pub p: u32,
    /// Number of Hermite representatives with Cartan invariant `μ`.
    pub direct: u64,
    /// `N_μ` evaluated at `q = p`.
    pub predicted: Rat,
    pub pass: bool,
}

/// Count the left cosets of the orbit `Kμ(π)K` directly and compare with
/// the symbolic orbit size `N_μ` at `q = p`.
pub fn orbit_count_check(rs: &RootSystem, mu: &[i64], p: u32) -> Result<OrbitReport> {
    require_gl(rs)?;
    rs.check_weight(mu)?;
    check_partition(mu)?;
    check_prime(p)?;
    let direct = hermite_with_cartan(p, mu).len() as u64;
    let sym = n_mu(rs, mu)?.eval_sqrt(p);
    if !sym.is_rational() {
        return Err(Error::CheckFailed(format!(
            "orbit size N_μ at μ = {mu:?} evaluated to an irrational value"
        )));
    }
    let predicted = sym.rational_part().clone();
    let pass = predicted == Rat::from_integer(int(direct as i64));
    Ok(OrbitReport { mu: mu.to_vec(), p, direct, predicted, pass })
}

// ---------------------------------------------------------------------------
// Window stabilisation
// ---------------------------------------------------------------------------

/// Verify that widening the window by one extra unit of depth and
/// truncation does not change the measured Satake values at `ν` for any
/// class the original window reaches — the discrete sums have stabilised
/// and faithfully represent the limit over the full unipotent group.
///
/// A wider window may additionally reach classes of non-integral cosets
/// (deeper pole orders in the unipotent coordinates keep producing new
/// ones at every margin); those lie outside the narrower window's support
/// and outside the support of every `H_λ` with partition `λ`, so they are
/// not constrained here.
pub fn stabilization_check(rs: &RootSystem, nu: &[i64], p: u32, margin: i64) -> Result<bool> {
    let narrow = window_census(nu, p, margin)?;
    let wide = window_census(nu, p, margin + 1)?;
    if !narrow.measure_consistent() || !wide.measure_consistent() {
        return Ok(false);
    }
    let a = satake_values(rs, &narrow)?;
    let b = satake_values(rs, &wide)?;
    Ok(a.iter().all(|(cls, val)| b.get(cls) == Some(val)))
}
