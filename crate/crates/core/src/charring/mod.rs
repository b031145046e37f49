//! The representation ring: virtual characters, weight multiplicities, and
//! truncated character-valued power series.
//!
//! A [`VirtualChar`] is an integer combination of formal exponentials `e^μ`
//! of weights; products convolve the weights, so the ring structure is free
//! of any root-system context.  Irreducible characters are produced by
//! Freudenthal's recursion ([`weyl_character`]) and arbitrary virtual
//! characters are resolved back into irreducibles by highest-weight
//! stripping ([`decompose_virtual`]).  [`QChar`] enriches the coefficients
//! from `Z` to `Z[v^{±1}]` for Hecke-eigenvalue computations, and
//! [`CharSeries`] is a truncated power series in an auxiliary variable `u`
//! (in practice `u = q^{-1}`) with `VirtualChar` coefficients, the carrier
//! for all the series identities.

mod series;
mod vchar;

pub use series::CharSeries;
pub use vchar::{QChar, VirtualChar};

use std::collections::BTreeMap;

use crate::exactalg::Rat;
use crate::rootdata::{RootSystem, Wt};

/// The character of the irreducible representation `V(λ)`, by Freudenthal's
/// multiplicity recursion.
///
/// Works in doubled weight coordinates so the half-integral `ρ` of `GL_n`
/// never appears: with `t = 2ρ` the recursion reads
/// `[B(2λ+t, 2λ+t) - B(2μ+t, 2μ+t)]·m_μ = 2·Σ_{α>0} Σ_{k≥1} B(2(μ+kα), 2α)·m_{μ+kα}`,
/// and every quantity is an integer.  Panics if `λ` is not dominant.
pub fn weyl_character(rs: &RootSystem, la: &[i64]) -> VirtualChar {
    assert!(rs.is_dominant(la), "weyl_character needs a dominant weight, got {la:?}");
    let rank = rs.rank();
    let dominant = rs.dominant_below(la);
    let mut mult: BTreeMap<Wt, i64> = BTreeMap::new();
    mult.insert(la.to_vec(), 1);

    let t = rs.two_rho().clone();
    let dbl = |wt: &[i64]| -> Wt { wt.iter().map(|x| 2 * x).collect() };
    let add = |a: &[i64], b: &[i64]| -> Wt { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    let la2t = add(&dbl(la), &t);
    let norm_top = rs.b_form(&la2t, &la2t);

    // Dominant weights arrive sorted descending, so every m_{μ+kα} needed on
    // the right-hand side is already known.
    for mu in dominant.iter().skip(1) {
        let mu2t = add(&dbl(mu), &t);
        let denom = norm_top - rs.b_form(&mu2t, &mu2t);
        assert!(denom > 0, "Freudenthal denominator must be positive for μ < λ");
        let mut numer: i64 = 0;
        for alpha in rs.positive_roots() {
            let a2 = dbl(&alpha.wt);
            for k in 1.. {
                let shifted: Wt = mu
                    .iter()
                    .zip(&alpha.wt)
                    .map(|(m, a)| m + k * a)
                    .collect();
                let rep = rs.dominant_rep(&shifted);
                let m = mult.get(&rep).copied().unwrap_or(0);
                if m == 0 {
                    // Weights of V(λ) along a root string are contiguous, so
                    // the first vanishing multiplicity ends the string.
                    break;
                }
                let s2: Wt = dbl(&shifted);
                numer += rs.b_form(&s2, &a2) * m;
            }
        }
        numer *= 2;
        assert!(numer % denom == 0, "Freudenthal division must be exact");
        let m_mu = numer / denom;
        if m_mu != 0 {
            mult.insert(mu.clone(), m_mu);
        }
    }

    // Spread the dominant multiplicities over the Weyl orbits.
    let mut out = VirtualChar::zero(rank);
    for (mu, m) in &mult {
        for w in rs.weyl_orbit(mu) {
            out.set_coeff_if_absent(w, *m);
        }
    }
    out
}

/// Decompose a virtual character into irreducibles: returns the multiset
/// `{(λ, n_λ)}` with `χ = Σ n_λ · char V(λ)`, sorted descending in the
/// refined dominance order.
///
/// Works by highest-weight stripping: the maximal surviving weight in the
/// refined total order is always dominant (any strictly higher weight in its
/// orbit would beat it), so subtract `n·weyl_character` of it and repeat.
pub fn decompose_virtual(rs: &RootSystem, chi: &VirtualChar) -> Vec<(Wt, i64)> {
    let mut rem = chi.clone();
    let mut out: Vec<(Wt, i64)> = Vec::new();
    while let Some((top, n)) = rem.max_term(rs) {
        assert!(
            rs.is_dominant(&top),
            "maximal weight {top:?} of a virtual character must be dominant"
        );
        let irr = weyl_character(rs, &top);
        rem = rem.sub(&irr.scaled(n));
        out.push((top, n));
    }
    out
}

/// The k-th Adams operation `ψ^k`: multiplies every weight by `k`.
pub fn adams(chi: &VirtualChar, k: i64) -> VirtualChar {
    chi.map_weights(|wt| wt.iter().map(|x| x * k).collect())
}

/// Exterior powers `Λ^0, …, Λ^jmax` of a character via Newton's identity
/// `j·e_j = Σ_{i=1}^{j} (-1)^{i-1} ψ^i · e_{j-i}` (exact integer division).
pub fn exterior_powers(chi: &VirtualChar, jmax: usize) -> Vec<VirtualChar> {
    let rank = chi.rank();
    let powers: Vec<VirtualChar> = (1..=jmax as i64).map(|i| adams(chi, i)).collect();
    let mut es = vec![VirtualChar::one(rank)];
    for j in 1..=jmax {
        let mut acc = VirtualChar::zero(rank);
        for i in 1..=j {
            let term = powers[i - 1].mul(&es[j - i]);
            let sign = if i % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&term.scaled(sign));
        }
        es.push(acc.divided_exact(j as i64));
    }
    es
}

/// Symmetric powers `Sym^0, …, Sym^jmax` via `j·h_j = Σ_{i=1}^{j} ψ^i · h_{j-i}`.
pub fn symmetric_powers(chi: &VirtualChar, jmax: usize) -> Vec<VirtualChar> {
    let rank = chi.rank();
    let powers: Vec<VirtualChar> = (1..=jmax as i64).map(|i| adams(chi, i)).collect();
    let mut hs = vec![VirtualChar::one(rank)];
    for j in 1..=jmax {
        let mut acc = VirtualChar::zero(rank);
        for i in 1..=j {
            acc = acc.add(&powers[i - 1].mul(&hs[j - i]));
        }
        hs.push(acc.divided_exact(j as i64));
    }
    hs
}

/// Dimension of `V(λ)` by the Weyl dimension formula
/// `∏_{β>0} ⟨λ+ρ, β̌⟩ / ⟨ρ, β̌⟩`, computed exactly — the independent oracle
/// for `weyl_character(...).dim()`.
pub fn weyl_dim(rs: &RootSystem, la: &[i64]) -> i64 {
    let mut num = Rat::from(crate::exactalg::int(1));
    for beta in rs.positive_roots() {
        // ⟨λ+ρ, β̌⟩ = ⟨2λ+2ρ, β̌⟩ / 2; numerators stay integral in doubled form.
        let dbl: Wt = la
            .iter()
            .zip(rs.two_rho())
            .map(|(x, t)| 2 * x + t)
            .collect();
        let top = beta.pair(&dbl);
        let bot = beta.pair(rs.two_rho());
        num *= crate::exactalg::rat(top, bot);
    }
    assert!(num.is_integer(), "Weyl dimension must be an integer");
    use num_traits::ToPrimitive;
    num.numer().to_i64().expect("dimension overflow")
}

/// The character of the adjoint representation of the (reductive) group:
/// all roots plus `rank` copies of the zero weight.
pub fn adjoint_char(rs: &RootSystem) -> VirtualChar {
    let rank = rs.rank();
    let mut chi = VirtualChar::zero(rank);
    let zero = vec![0i64; rank];
    chi.add_term(&zero, rank as i64);
    for beta in rs.positive_roots() {
        chi.add_term(&beta.wt, 1);
        let neg: Wt = beta.wt.iter().map(|x| -x).collect();
        chi.add_term(&neg, 1);
    }
    chi
}
