//! Exhaustive coset enumerations in `GL_n(F_p((π)))`.
//!
//! Two families are enumerated:
//!
//! * Hermite representatives — the distinct left cosets `x·K` of integral
//!   matrices of a given co-length: upper-triangular `x` with diagonal
//!   `π^{a_i}` and entry `(i, j)` (for `i < j`) a polynomial reduced
//!   modulo `π^{a_i}`, the modulus of its own *row* pivot.  Exactly one
//!   representative per lattice.
//!
//! * Unipotent windows — finitely many upper-unitriangular `u` sampling
//!   `N(F)/(π^m-congruence)`: the entry in column `j` runs over
//!   exponents `[−d_j, m−1]`, where `d_j` is the largest pole the
//!   integrand permits in that column and `π^m` is the truncation. Each
//!   point carries Haar measure `p^{−m·n(n−1)/2}` when `N(O)` has mass 1.

use super::{PadicPoly, SeriesMatrix};
use crate::rootdata::Wt;

/// All upper-triangular Hermite representatives with diagonal exponents
/// `a` (one lattice per representative).
pub fn hermite_with_diagonal(p: u32, a: &[i64]) -> Vec<SeriesMatrix> {
    let n = a.len();
    debug_assert!(a.iter().all(|x| *x >= 0));
    let mut out = Vec::new();
    let mut mat = SeriesMatrix::diag_pi(p, a);
    // Entry (i, j), i < j, ranges over polynomials mod π^{a_i}.
    let positions: Vec<(usize, usize, i64)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, a[i]))
        .collect();
    fill_positions(p, &positions, 0, &mut mat, &mut out);
    out
}

fn fill_positions(
    p: u32,
    positions: &[(usize, usize, i64)],
    idx: usize,
    mat: &mut SeriesMatrix,
    out: &mut Vec<SeriesMatrix>,
) {
    if idx == positions.len() {
        out.push(mat.clone());
        return;
    }
    let (i, j, modulus) = positions[idx];
    let digits = modulus.max(0);
    enumerate_polys(p, 0, digits, &mut |poly| {
        *mat.entry_mut(i, j) = poly;
        fill_positions(p, positions, idx + 1, mat, out);
    });
    *mat.entry_mut(i, j) = PadicPoly::zero(p);
}

/// Calls `f` with every polynomial `Σ_{e=lo}^{lo+len-1} c_e π^e`.
fn enumerate_polys(p: u32, lo: i64, len: i64, f: &mut impl FnMut(PadicPoly)) {
    let total = (p as u64).pow(len.max(0) as u32);
    for code in 0..total {
        let mut poly = PadicPoly::zero(p);
        let mut rest = code;
        for d in 0..len {
            let c = (rest % p as u64) as u32;
            rest /= p as u64;
            poly.add_coeff(lo + d, c);
        }
        f(poly);
    }
}

/// All Hermite representatives of integral co-length `m` (sum of diagonal
/// exponents), i.e. one per sublattice of index `p^m`.
pub fn hermite_of_colength(p: u32, n: usize, m: i64) -> Vec<SeriesMatrix> {
    let mut out = Vec::new();
    for a in compositions(n, m) {
        out.extend(hermite_with_diagonal(p, &a));
    }
    out
}

/// All Hermite representatives with a given Cartan invariant `mu`.
pub fn hermite_with_cartan(p: u32, mu: &[i64]) -> Vec<SeriesMatrix> {
    let m: i64 = mu.iter().sum();
    hermite_of_colength(p, mu.len(), m)
        .into_iter()
        .filter(|x| x.cartan_invariant().expect("triangular is invertible") == mu)
        .collect()
}

/// Nonnegative integer vectors of length `n` summing to `m`.
fn compositions(n: usize, m: i64) -> Vec<Wt> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Wt>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[i] = v;
            rec(i + 1, left - v, cur, out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(0, m, &mut cur, &mut out);
    out
}

/// The lateral extent of a unipotent window: pole depths per column and
/// the truncation exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowShape {
    /// `d[j]`: maximal pole order allowed in column `j` (entries of that
    /// column range over exponents `≥ −d[j]`).
    pub depth: Vec<i64>,
    /// Entries are truncated at `π^m` (exponents `< m`).
    pub truncation: i64,
}

impl WindowShape {
    /// The window adapted to integrating against translates of `ν(π)`:
    /// `u · ν(π)` integral forces `val(u_{ij}) ≥ −ν_j`, and the default
    /// truncation `m = ν_1 − ν_n + 1 + margin` is one more than the spread
    /// of `ν`, widened by any extra `margin` for stabilization checks.
    pub fn for_cocharacter(nu: &[i64], margin: i64) -> Self {
        let n = nu.len();
        let spread = if n == 0 { 0 } else { nu[0] - nu[n - 1] };
        WindowShape {
            depth: nu.iter().map(|x| (*x).max(0) + margin).collect(),
            truncation: spread + 1 + margin,
        }
    }

    /// Number of enumerated coefficients, `Σ_{i<j} (d_j + m)`.
    pub fn coefficient_count(&self) -> i64 {
        let n = self.depth.len();
        (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(_, j)| self.depth[j] + self.truncation)
            .sum()
    }

    /// `log_p` of the Haar measure of each sample point when `N(O)` has
    /// measure 1: `−m · n(n−1)/2`.
    pub fn log_volume(&self) -> i64 {
        let n = self.depth.len() as i64;
        -self.truncation * n * (n - 1) / 2
    }

    /// Number of sample points, `p^{coefficient_count}`.
    pub fn point_count(&self, p: u32) -> u64 {
        (p as u64).pow(self.coefficient_count().max(0) as u32)
    }
}

/// Decodes sample point `code` (in `0..point_count`) of the window into an
/// upper-unitriangular matrix. The encoding is base-`p` digits laid out
/// entry by entry, each entry spanning exponents `[−d_j, m−1]`.
pub fn window_point(p: u32, shape: &WindowShape, code: u64) -> SeriesMatrix {
    let n = shape.depth.len();
    let mut u = SeriesMatrix::identity(p, n);
    let mut rest = code;
    for i in 0..n {
        for j in (i + 1)..n {
            let lo = -shape.depth[j];
            let len = shape.depth[j] + shape.truncation;
            let mut poly = PadicPoly::zero(p);
            for d in 0..len {
                let c = (rest % p as u64) as u32;
                rest /= p as u64;
                poly.add_coeff(lo + d, c);
            }
            *u.entry_mut(i, j) = poly;
        }
    }
    debug_assert_eq!(rest, 0, "code out of range for window");
    u
}

/// The additive-character residue of a unipotent window point:
/// `Σ_i (coefficient of π^{-1} in u_{i,i+1}) mod p`.
pub fn psi_residue(u: &SeriesMatrix) -> u32 {
    let n = u.size();
    let mut r = 0u32;
    for i in 0..n.saturating_sub(1) {
        r = (r + u.entry(i, i + 1).coeff(-1)) % u.prime();
    }
    r
}
