//! Brute-force computation in `GL_n` over the Laurent-series field
//! `F_p((π))`: exact matrix arithmetic with finite Laurent-polynomial
//! entries, Cartan and Iwasawa decompositions, coset enumeration, and the
//! integration oracles built on them.
//!
//! Everything stays exact. Matrix entries are finite Laurent polynomials
//! in the uniformizer `π` with coefficients in the prime field, so
//! determinants, minors, valuations and residues are computed with no
//! truncation error; additive-character sums accumulate in the group ring
//! of the `p`-th roots of unity and are reduced only at the end.

pub mod enumerate;
pub mod oracles;

use std::collections::BTreeMap;

use crate::charring::QChar;
use crate::error::{Error, Result};
use crate::rootdata::Wt;

/// A finite Laurent polynomial in the uniformizer `π` with coefficients in
/// `F_p`. The zero polynomial is the empty map; stored coefficients are
/// always in `1..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicPoly {
    p: u32,
    coeffs: BTreeMap<i64, u32>,
}

impl PadicPoly {
    /// The zero polynomial over `F_p`.
    pub fn zero(p: u32) -> Self {
        assert!(p >= 2);
        Self {
            p,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant `1`.
    pub fn one(p: u32) -> Self {
        Self::monomial(p, 0, 1)
    }

    /// The monomial `c · π^e`.
    pub fn monomial(p: u32, e: i64, c: u32) -> Self {
        let mut out = Self::zero(p);
        out.add_coeff(e, c);
        out
    }

    /// The residue characteristic.
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `π^e`, in `0..p`.
    pub fn coeff(&self, e: i64) -> u32 {
        self.coeffs.get(&e).copied().unwrap_or(0)
    }

    /// `π`-adic valuation; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Add `c · π^e` in place.
    pub fn add_coeff(&mut self, e: i64, c: u32) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert(0);
        *entry = (*entry + c) % self.p;
        if *entry == 0 {
            self.coeffs.remove(&e);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_coeff(*e, *c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.p);
        for (e, c) in &self.coeffs {
            out.add_coeff(*e, self.p - c);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let mut out = Self::zero(self.p);
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_coeff(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiply by `π^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, *c)).collect(),
        }
    }

    /// Multiply by the scalar `c`.
    pub fn scale(&self, c: u32) -> Self {
        let mut out = Self::zero(self.p);
        for (e, a) in &self.coeffs {
            out.add_coeff(*e, a * c);
        }
        out
    }

    /// Whether every exponent is ≥ 0 (the polynomial lies in `F_p[[π]]`).
    pub fn is_integral(&self) -> bool {
        self.coeffs.keys().all(|e| *e >= 0)
    }

    /// Whether this is a unit of `F_p[[π]]` (valuation exactly 0).
    pub fn is_unit(&self) -> bool {
        self.valuation() == Some(0)
    }

    /// The inverse of a valuation-0 polynomial modulo `π^len`, i.e. the
    /// first `len` coefficients of the power-series inverse.
    pub fn unit_inverse_trunc(&self, len: i64) -> Self {
        assert!(self.is_unit(), "inverse needs valuation 0, got {self:?}");
        let mut out = Self::zero(self.p);
        if len <= 0 {
            return out;
        }
        let a0_inv = mod_inverse(self.coeff(0), self.p);
        out.add_coeff(0, a0_inv);
        for k in 1..len {
            // b_k = -a_0^{-1} · Σ_{j=1..k} a_j b_{k-j}
            let mut acc: u32 = 0;
            for j in 1..=k {
                acc = (acc + self.coeff(j) * out.coeff(k - j)) % self.p;
            }
            out.add_coeff(k, (self.p - acc % self.p) * a0_inv);
        }
        out
    }
}

/// `c^{-1} mod p` for prime `p` and `c` not divisible by `p`.
fn mod_inverse(c: u32, p: u32) -> u32 {
    assert!(c % p != 0, "no inverse of 0 mod {p}");
    // Fermat: c^{p-2} mod p.
    let mut acc: u64 = 1;
    let mut base: u64 = (c % p) as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// A square matrix over `F_p((π))` with finite Laurent-polynomial entries,
/// stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMatrix {
    p: u32,
    n: usize,
    entries: Vec<PadicPoly>,
}

impl SeriesMatrix {
    pub fn zero(p: u32, n: usize) -> Self {
        Self {
            p,
            n,
            entries: vec![PadicPoly::zero(p); n * n],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut out = Self::zero(p, n);
        for i in 0..n {
            *out.entry_mut(i, i) = PadicPoly::one(p);
        }
        out
    }

    /// The diagonal matrix `diag(π^{w_1}, …, π^{w_n})`.
    pub fn diag_pi(p: u32, wt: &[i64]) -> Self {
        let mut out = Self::zero(p, wt.len());
        for (i, e) in wt.iter().enumerate() {
            *out.entry_mut(i, i) = PadicPoly::monomial(p, *e, 1);
        }
        out
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn entry(&self, i: usize, j: usize) -> &PadicPoly {
        &self.entries[i * self.n + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut PadicPoly {
        &mut self.entries[i * self.n + j]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.n, rhs.n);
        let mut out = Self::zero(self.p, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut acc = PadicPoly::zero(self.p);
                for k in 0..self.n {
                    acc = acc.add(&self.entry(i, k).mul(rhs.entry(k, j)));
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        out
    }

    /// Whether all entries lie in `F_p[[π]]`.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integral())
    }

    /// Whether the matrix lies in `GL_n(F_p[[π]])`: integral entries and
    /// unit determinant.
    pub fn is_unimodular(&self) -> bool {
        self.is_integral() && self.det().is_unit()
    }

    /// Exact determinant by Laplace expansion (the sizes here are ≤ 4).
    pub fn det(&self) -> PadicPoly {
        let idx: Vec<usize> = (0..self.n).collect();
        self.minor_det(&idx, &idx)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> PadicPoly {
        debug_assert_eq!(rows.len(), cols.len());
        match rows.len() {
            0 => PadicPoly::one(self.p),
            1 => self.entry(rows[0], cols[0]).clone(),
            k => {
                let mut acc = PadicPoly::zero(self.p);
                let sub_rows = &rows[1..];
                for (t, col) in cols.iter().enumerate() {
                    let e = self.entry(rows[0], *col);
                    if e.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> = cols
                        .iter()
                        .enumerate()
                        .filter(|(s, _)| *s != t)
                        .map(|(_, c)| *c)
                        .collect();
                    let cof = self.minor_det(sub_rows, &sub_cols);
                    let term = e.mul(&cof);
                    acc = if t % 2 == 0 {
                        acc.add(&term)
                    } else {
                        acc.sub(&term)
                    };
                }
                let _ = k;
                acc
            }
        }
    }

    /// The Cartan invariant: the dominant cocharacter `λ` with
    /// `g ∈ K · diag(π^{λ_1}, …, π^{λ_n}) · K`, computed from the minimal
    /// valuations `d_k` of the `k × k` minors (`λ` reverses the increasing
    /// elementary divisors `e_k = d_k − d_{k−1}`).
    pub fn cartan_invariant(&self) -> Result<Wt> {
        let n = self.n;
        let mut d = vec![0i64; n + 1];
        let all: Vec<usize> = (0..n).collect();
        for k in 1..=n {
            let mut best: Option<i64> = None;
            for rows in subsets(&all, k) {
                for cols in subsets(&all, k) {
                    if let Some(v) = self.minor_det(&rows, &cols).valuation() {
                        best = Some(match best {
                            Some(b) => b.min(v),
                            None => v,
                        });
                    }
                }
            }
            match best {
                Some(v) => d[k] = v,
                None => {
                    return Err(Error::BadInput(
                        "singular matrix has no Cartan invariant".into(),
                    ))
                }
            }
        }
        let mut lam: Wt = (1..=n).map(|k| d[k] - d[k - 1]).collect();
        lam.reverse();
        for w in lam.windows(2) {
            debug_assert!(w[0] >= w[1], "elementary divisors must be sorted");
        }
        Ok(lam)
    }

    /// The adjugate matrix (transpose of cofactors), so that
    /// `self · adjugate = det · identity`.
    pub fn adjugate(&self) -> Self {
        let n = self.n;
        let all: Vec<usize> = (0..n).collect();
        let mut out = Self::zero(self.p, n);
        for i in 0..n {
            for j in 0..n {
                let rows: Vec<usize> = all.iter().copied().filter(|r| *r != j).collect();
                let cols: Vec<usize> = all.iter().copied().filter(|c| *c != i).collect();
                let cof = self.minor_det(&rows, &cols);
                *out.entry_mut(i, j) = if (i + j) % 2 == 0 { cof } else { cof.neg() };
            }
        }
        out
    }

    /// Exact inverse for a matrix whose determinant is a monomial
    /// `c · π^m` (true for every matrix this crate enumerates: triangular
    /// lattice representatives and unipotent-times-diagonal points).
    pub fn inverse_monomial_det(&self) -> Result<Self> {
        let det = self.det();
        let Some(v) = det.valuation() else {
            return Err(Error::BadInput("cannot invert a singular matrix".into()));
        };
        if det.coeffs.len() != 1 {
            return Err(Error::BadInput(format!(
                "determinant {det:?} is not monomial; inverse would leave the polynomial ring"
            )));
        }
        let c_inv = mod_inverse(det.coeff(v), self.p);
        let adj = self.adjugate();
        let mut out = Self::zero(self.p, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                *out.entry_mut(i, j) = adj.entry(i, j).shift(-v).scale(c_inv);
            }
        }
        Ok(out)
    }

    /// The Iwasawa data of an invertible matrix: column-reduces `g` by
    /// right `GL_n(O)` moves to upper-triangular `B = u · diag(π^{w})` and
    /// returns the torus weight `w = (val B_11, …, val B_nn)` together with
    /// the additive-character residue
    /// `r = Σ_i (coefficient of π^{-1} in u_{i,i+1}) mod p`.
    ///
    /// The weight is an invariant of the coset `g·GL_n(O)`.  The residue is
    /// an invariant exactly when `w` is weakly decreasing (the dominant
    /// support of the Whittaker function); elsewhere the unipotent part is
    /// only determined modulo elements whose superdiagonal reaches into
    /// `π^{-1}`, so the residue depends on the representative — and every
    /// consumer multiplies it against a Whittaker value that vanishes there.
    pub fn iwasawa(&self) -> Result<(Wt, u32)> {
        let n = self.n;
        let mut b = self.clone();
        for i in (0..n).rev() {
            // Pivot: the minimal-valuation entry of row i among cols 0..=i.
            let mut pivot: Option<(usize, i64)> = None;
            for j in 0..=i {
                if let Some(v) = b.entry(i, j).valuation() {
                    if pivot.map_or(true, |(_, pv)| v < pv) {
                        pivot = Some((j, v));
                    }
                }
            }
            let Some((jstar, a)) = pivot else {
                return Err(Error::BadInput("singular matrix in Iwasawa reduction".into()));
            };
            if jstar != i {
                for r in 0..n {
                    let tmp = b.entry(r, jstar).clone();
                    *b.entry_mut(r, jstar) = b.entry(r, i).clone();
                    *b.entry_mut(r, i) = tmp;
                }
            }
            let unit = b.entry(i, i).shift(-a);
            for j in 0..i {
                if b.entry(i, j).is_zero() {
                    continue;
                }
                let factor = b.entry(i, j).shift(-a);
                for r in 0..n {
                    let new = unit
                        .mul(b.entry(r, j))
                        .sub(&factor.mul(b.entry(r, i)));
                    *b.entry_mut(r, j) = new;
                }
                debug_assert!(b.entry(i, j).is_zero());
            }
        }
        let wt: Wt = (0..n)
            .map(|i| b.entry(i, i).valuation().expect("unit diagonal"))
            .collect();
        let mut residue: u32 = 0;
        for i in 0..n.saturating_sub(1) {
            residue = (residue + off_diagonal_residue(&b, i)) % self.p;
        }
        Ok((wt, residue))
    }
}

/// Coefficient of `π^{-1}` in `B[i][i+1] / B[i+1][i+1]`, the `(i, i+1)`
/// entry of the unipotent part `u = B · diag(B)^{-1}`.
fn off_diagonal_residue(b: &SeriesMatrix, i: usize) -> u32 {
    let p = b.prime();
    let num = b.entry(i, i + 1);
    if num.is_zero() {
        return 0;
    }
    let den = b.entry(i + 1, i + 1);
    let bval = den.valuation().expect("unit diagonal");
    let unit = den.shift(-bval);
    let shifted = num.shift(-bval);
    let lo = shifted.valuation().expect("nonzero");
    if lo > -1 {
        return 0;
    }
    // (Σ shifted_e π^e) · (Σ inv_k π^k) at π^{-1}: k ranges 0..=-1-lo.
    let inv = unit.unit_inverse_trunc(-lo);
    let mut acc: u32 = 0;
    for k in 0..(-lo) {
        acc = (acc + shifted.coeff(-1 - k) * inv.coeff(k)) % p;
    }
    acc
}

/// All k-element subsets of `idx`, preserving order.
fn subsets(idx: &[usize], k: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    idx.iter().copied().combinations(k).collect()
}

/// An element of `Z[ζ_p]` tensored with the symbolic class-function ring:
/// one class-function component per power of `ζ`. Mirrors the scalar
/// version in `exactalg`, with the same reduction contract.
#[derive(Debug, Clone)]
pub struct CycQ {
    p: u32,
    comps: Vec<QChar>,
}

impl CycQ {
    pub fn zero(p: u32, rank: usize) -> Self {
        assert!(p >= 2);
        Self {
            p,
            comps: vec![QChar::zero(rank); p as usize],
        }
    }

    /// Add `x · ζ^j` in place.
    pub fn add_zeta_term(&mut self, j: i64, x: &QChar) {
        let idx = j.rem_euclid(self.p as i64) as usize;
        self.comps[idx] = self.comps[idx].add(x);
    }

    /// Reduce to the base ring: valid iff the `ζ^j` coefficients for
    /// `0 < j < p−1` all match the top one after normalization; the value
    /// is then `comps[0] − comps[p−1]`.
    pub fn reduce(&self) -> Result<QChar> {
        let top = &self.comps[self.p as usize - 1];
        for (j, a) in self.comps.iter().enumerate().skip(1) {
            if j == self.p as usize - 1 {
                continue;
            }
            let norm = a.sub(top);
            if !norm.is_zero() {
                return Err(Error::NotReduced(format!(
                    "coefficient of ζ^{j} does not cancel"
                )));
            }
        }
        Ok(self.comps[0].sub(top))
    }
}
