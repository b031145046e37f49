//! Root systems, Weyl groups, and the dominance order.
//!
//! Two families are supported, in their natural coordinates:
//!
//! * **`GL_n`** — weights are vectors in `Z^n`, dominant means weakly
//!   decreasing, the Weyl group is `S_n` permuting coordinates.  The Weyl
//!   vector `ρ = ((n-1)/2, …, -(n-1)/2)` is half-integral; alternating sums
//!   use the integral shift `δ = (n-1, …, 1, 0)` instead, which gives the
//!   same differences because `S_n` fixes the all-ones vector.
//! * **Simple types of rank ≤ 3** (`A1, A2, A3, B2, C2, G2`) — weights in
//!   Dynkin coordinates `λ_i = ⟨λ, α̌_i⟩`, dominant means coordinate-wise
//!   nonnegative, and `ρ = (1, …, 1)` is integral.
//!
//! Everything downstream (characters, Hecke algebra, p-adic integration)
//! goes through this interface, so conventions are fixed here once:
//! the Cartan matrix is stored as `A[i][j] = ⟨α_j, α̌_i⟩` (column `j` is the
//! Dynkin coordinate vector of the simple root `α_j`), and all `ρ`-pairings
//! are exposed in doubled form `⟨λ, 2ρ̌⟩` so they stay integral.

mod kostant;

pub use kostant::KostantCache;

use std::collections::{BTreeSet, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{linalg, Int, Rat};

/// A weight (or coweight) in the coordinates of its root system.
pub type Wt = Vec<i64>;

/// A root together with the linear functional of its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// The root as a weight vector.
    pub wt: Wt,
    /// Coroot functional: `⟨λ, β̌⟩ = Σ_i coroot[i]·λ[i]`.
    pub coroot: Vec<i64>,
}

impl Root {
    /// Evaluate the coroot functional on a weight.
    pub fn pair(&self, wt: &[i64]) -> i64 {
        self.coroot.iter().zip(wt).map(|(c, x)| c * x).sum()
    }
}

/// One Weyl group element, acting on coordinate vectors by an integer matrix.
#[derive(Clone, Debug)]
pub struct WeylElt {
    /// `(w·λ)_i = Σ_j mat[i][j]·λ_j`.
    pub mat: Vec<Vec<i64>>,
    /// Coxeter length.
    pub length: usize,
}

impl WeylElt {
    /// Apply to a weight.
    pub fn apply(&self, wt: &[i64]) -> Wt {
        self.mat
            .iter()
            .map(|row| row.iter().zip(wt).map(|(m, x)| m * x).sum())
            .collect()
    }

    /// `(-1)^{ℓ(w)}`.
    pub fn sign(&self) -> i64 {
        if self.length % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// The supported simple types of rank ≤ 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimpleType {
    A1,
    A2,
    A3,
    B2,
    C2,
    G2,
}

impl SimpleType {
    fn cartan(self) -> Vec<Vec<i64>> {
        match self {
            SimpleType::A1 => vec![vec![2]],
            SimpleType::A2 => vec![vec![2, -1], vec![-1, 2]],
            SimpleType::A3 => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            // α_0 long, α_1 short: ⟨α_1, α̌_0⟩ = -1, ⟨α_0, α̌_1⟩ = -2.
            SimpleType::B2 => vec![vec![2, -1], vec![-2, 2]],
            SimpleType::C2 => vec![vec![2, -2], vec![-1, 2]],
            // α_0 short, α_1 long.
            SimpleType::G2 => vec![vec![2, -3], vec![-1, 2]],
        }
    }

    fn name(self) -> &'static str {
        match self {
            SimpleType::A1 => "A1",
            SimpleType::A2 => "A2",
            SimpleType::A3 => "A3",
            SimpleType::B2 => "B2",
            SimpleType::C2 => "C2",
            SimpleType::G2 => "G2",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Gl(usize),
    Simple(SimpleType),
}

/// A root system with its Weyl group and all derived combinatorial data,
/// fully materialized at construction time.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    simple: Vec<Root>,
    positive: Vec<Root>,
    two_rho: Wt,
    two_rho_check: Vec<i64>,
    weyl: Vec<WeylElt>,
    exponents: Vec<i64>,
}

impl RootSystem {
    /// The root system of `GL_n` (weights in `Z^n`).
    pub fn gl(n: usize) -> Self {
        assert!(n >= 1, "GL_n needs n >= 1");
        let mut simple = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut wt = vec![0i64; n];
            wt[i] = 1;
            wt[i + 1] = -1;
            simple.push(Root { wt: wt.clone(), coroot: wt });
        }
        let mut positive = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut wt = vec![0i64; n];
                wt[i] = 1;
                wt[j] = -1;
                positive.push(Root { wt: wt.clone(), coroot: wt });
            }
        }
        Self::finish(Kind::Gl(n), n, simple, positive)
    }

    /// A simple root system in Dynkin coordinates.
    pub fn simple(t: SimpleType) -> Self {
        let a = t.cartan();
        let rank = a.len();
        // Simple root α_j has Dynkin coordinates = column j of the Cartan
        // matrix; its coroot functional is projection onto coordinate j.
        let simple: Vec<Root> = (0..rank)
            .map(|j| {
                let wt: Wt = (0..rank).map(|i| a[i][j]).collect();
                let mut coroot = vec![0i64; rank];
                coroot[j] = 1;
                Root { wt, coroot }
            })
            .collect();

        // Generate all roots as the W-orbit of the simple ones, carrying the
        // coroot functional along: if β' = s_i(β) then ⟨λ, β'̌⟩ = ⟨s_i(λ), β̌⟩.
        let refl: Vec<Vec<Vec<i64>>> = (0..rank)
            .map(|i| simple_reflection_matrix(&a, i))
            .collect();
        let mut seen: BTreeSet<Wt> = BTreeSet::new();
        let mut all: Vec<Root> = Vec::new();
        let mut queue: VecDeque<Root> = simple.iter().cloned().collect();
        while let Some(r) = queue.pop_front() {
            if !seen.insert(r.wt.clone()) {
                continue;
            }
            all.push(r.clone());
            for m in &refl {
                let wt = mat_apply(m, &r.wt);
                // Functional transforms contragrediently: f'(λ) = f(s_i λ),
                // and s_i is its own inverse, so f' = f ∘ s_i = (s_i)^T f.
                let coroot = mat_apply_transpose(m, &r.coroot);
                queue.push_back(Root { wt, coroot });
            }
        }

        // A root is positive iff its expansion in simple roots is nonneg.
        let coords = |wt: &Wt| {
            simple_root_coords_simple(&a, wt).expect("roots lie in the root lattice")
        };
        let mut positive: Vec<Root> = all
            .into_iter()
            .filter(|r| coords(&r.wt).iter().all(|x| *x >= 0))
            .collect();
        positive.sort_by_key(|r| (coords(&r.wt).iter().sum::<i64>(), r.wt.clone()));
        Self::finish(Kind::Simple(t), rank, simple, positive)
    }

    /// Parse a root-system name: `GL<n>` or one of the simple types.
    pub fn parse(name: &str) -> Result<Self> {
        let up = name.trim().to_uppercase();
        if let Some(ns) = up.strip_prefix("GL") {
            let n: usize = ns
                .parse()
                .map_err(|_| Error::UnknownRootSystem(name.to_string()))?;
            if n == 0 || n > 8 {
                return Err(Error::UnknownRootSystem(name.to_string()));
            }
            return Ok(Self::gl(n));
        }
        let t = match up.as_str() {
            "A1" => SimpleType::A1,
            "A2" => SimpleType::A2,
            "A3" => SimpleType::A3,
            "B2" => SimpleType::B2,
            "C2" => SimpleType::C2,
            "G2" => SimpleType::G2,
            _ => return Err(Error::UnknownRootSystem(name.to_string())),
        };
        Ok(Self::simple(t))
    }

    fn finish(kind: Kind, rank: usize, simple: Vec<Root>, positive: Vec<Root>) -> Self {
        let mut two_rho = vec![0i64; rank];
        let mut two_rho_check = vec![0i64; rank];
        for r in &positive {
            for i in 0..rank {
                two_rho[i] += r.wt[i];
                two_rho_check[i] += r.coroot[i];
            }
        }
        let refl: Vec<Vec<Vec<i64>>> = match &kind {
            Kind::Gl(n) => (0..n.saturating_sub(1))
                .map(|i| {
                    let mut m = identity_matrix(*n);
                    m.swap(i, i + 1);
                    m
                })
                .collect(),
            Kind::Simple(t) => {
                let a = t.cartan();
                (0..rank).map(|i| simple_reflection_matrix(&a, i)).collect()
            }
        };
        let weyl = weyl_closure(rank, &refl);
        let exponents = exponents_from_heights(&kind, rank, &positive, &two_rho_check);
        Self {
            kind,
            rank,
            simple,
            positive,
            two_rho,
            two_rho_check,
            weyl,
            exponents,
        }
    }

    /// Display name (`GL3`, `B2`, …).
    pub fn name(&self) -> String {
        match &self.kind {
            Kind::Gl(n) => format!("GL{n}"),
            Kind::Simple(t) => t.name().to_string(),
        }
    }

    /// Coordinate dimension of the weight lattice.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `Some(n)` for `GL_n`, `None` for simple types.
    pub fn gl_n(&self) -> Option<usize> {
        match self.kind {
            Kind::Gl(n) => Some(n),
            Kind::Simple(_) => None,
        }
    }

    /// The simple roots.
    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    /// All positive roots, sorted by height.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// The highest root (the positive root of maximal height); its weight
    /// is the highest weight of the adjoint representation.
    pub fn highest_root(&self) -> Wt {
        self.positive.last().expect("nonempty root system").wt.clone()
    }

    /// The sum of the positive roots (the weight `2ρ`).
    pub fn two_rho(&self) -> &Wt {
        &self.two_rho
    }

    /// The doubled ρ-pairing `⟨λ, 2ρ̌⟩ = Σ_{β>0} ⟨λ, β̌⟩`.
    ///
    /// This is always an integer; the frequently needed `(λ, ρ)` is half of
    /// it and appears in exponents of `v` (where `v^2 = q`), so callers use
    /// this doubled value directly as a `v`-exponent.
    pub fn pair_2rho_check(&self, wt: &[i64]) -> i64 {
        self.two_rho_check.iter().zip(wt).map(|(c, x)| c * x).sum()
    }

    /// Height of a root-lattice element: `⟨β, ρ̌⟩`, an integer.
    pub fn height(&self, beta: &[i64]) -> i64 {
        let d = self.pair_2rho_check(beta);
        assert!(d % 2 == 0, "height of non-root-lattice element {beta:?}");
        d / 2
    }

    /// The integral substitute for `ρ` used in Weyl alternating sums:
    /// `δ = (n-1, …, 1, 0)` for `GL_n` (differs from ρ by a central vector
    /// fixed by `W`), and `ρ = (1, …, 1)` itself for simple types.
    pub fn rho_shift(&self) -> Wt {
        match self.kind {
            Kind::Gl(n) => (0..n).map(|i| (n - 1 - i) as i64).collect(),
            Kind::Simple(_) => vec![1; self.rank],
        }
    }

    /// The full Weyl group.
    pub fn weyl(&self) -> &[WeylElt] {
        &self.weyl
    }

    /// Exponents of the Weyl group, ascending.  For `GL_n` this includes the
    /// extra `0` of the central torus factor, so there are `n` of them and
    /// the degrees of invariants are `m_i + 1 = 1, …, n`.
    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Check that a weight has the right length.
    pub fn check_weight(&self, wt: &[i64]) -> Result<()> {
        if wt.len() != self.rank {
            return Err(Error::RankMismatch { weight: wt.to_vec(), rank: self.rank });
        }
        Ok(())
    }

    /// Whether `wt` is dominant.
    pub fn is_dominant(&self, wt: &[i64]) -> bool {
        match self.kind {
            Kind::Gl(_) => wt.windows(2).all(|w| w[0] >= w[1]),
            Kind::Simple(_) => wt.iter().all(|x| *x >= 0),
        }
    }

    /// Whether `wt` is regular dominant (trivial stabilizer in `W`).
    pub fn is_strictly_dominant(&self, wt: &[i64]) -> bool {
        match self.kind {
            Kind::Gl(_) => wt.windows(2).all(|w| w[0] > w[1]),
            Kind::Simple(_) => wt.iter().all(|x| *x > 0),
        }
    }

    /// Coordinates of `beta` in the simple-root basis, if `beta` lies in the
    /// root lattice (integral coordinates); `None` otherwise.
    pub fn root_lattice_coords(&self, beta: &[i64]) -> Option<Vec<i64>> {
        match self.kind {
            Kind::Gl(_) => {
                // β = Σ c_k (e_k - e_{k+1}) ⟺ c_k = β_1 + … + β_k, with the
                // full sum vanishing.
                let mut acc = 0i64;
                let mut c = Vec::with_capacity(self.rank.saturating_sub(1));
                for (k, x) in beta.iter().enumerate() {
                    acc += x;
                    if k + 1 < self.rank {
                        c.push(acc);
                    }
                }
                (acc == 0).then_some(c)
            }
            Kind::Simple(t) => {
                let a = t.cartan();
                simple_root_coords_simple(&a, beta)
            }
        }
    }

    /// Dominance order: `mu ≤ la`, i.e. `la - mu` is a nonnegative integral
    /// combination of simple roots.
    pub fn dominance_leq(&self, mu: &[i64], la: &[i64]) -> bool {
        let diff: Wt = la.iter().zip(mu).map(|(a, b)| a - b).collect();
        match self.root_lattice_coords(&diff) {
            Some(c) => c.iter().all(|x| *x >= 0),
            None => false,
        }
    }

    /// All dominant weights `μ ≤ λ` in the dominance order, sorted
    /// descending in the refined total order (so `λ` itself is first).
    pub fn dominant_below(&self, la: &[i64]) -> Vec<Wt> {
        assert!(self.is_dominant(la), "dominant_below needs a dominant weight");
        let nsimple = self.simple.len();
        // μ = λ - Σ c_j α_j with Σ c_j = (⟨λ,2ρ̌⟩ - ⟨μ,2ρ̌⟩)/2 ≤ ⟨λ,2ρ̌⟩/2,
        // since every simple root has ⟨α_j, ρ̌⟩ = 1 and dominant μ has
        // ⟨μ, 2ρ̌⟩ ≥ 0.
        let budget = self.pair_2rho_check(la) / 2;
        let mut out = Vec::new();
        let mut c = vec![0i64; nsimple];
        self.dominant_below_rec(la, &mut c, 0, budget, &mut out);
        out.sort_by_key(|mu| {
            let (h, lex) = self.order_key(mu);
            (std::cmp::Reverse(h), std::cmp::Reverse(lex))
        });
        out
    }

    fn dominant_below_rec(
        &self,
        la: &[i64],
        c: &mut Vec<i64>,
        j: usize,
        budget: i64,
        out: &mut Vec<Wt>,
    ) {
        if j == c.len() {
            let mut mu = la.to_vec();
            for (cj, alpha) in c.iter().zip(&self.simple) {
                for (m, a) in mu.iter_mut().zip(&alpha.wt) {
                    *m -= cj * a;
                }
            }
            if self.is_dominant(&mu) {
                out.push(mu);
            }
            return;
        }
        for v in 0..=budget {
            c[j] = v;
            self.dominant_below_rec(la, c, j + 1, budget - v, out);
        }
        c[j] = 0;
    }

    /// Sort key for the total order refining dominance: compare by
    /// `⟨λ, 2ρ̌⟩`, then lexicographically.  (Plain lex does *not* refine
    /// dominance for the non-simply-laced Dynkin coordinates.)
    pub fn order_key(&self, wt: &[i64]) -> (i64, Wt) {
        (self.pair_2rho_check(wt), wt.to_vec())
    }

    /// The dominant Weyl-chamber representative of a weight.
    pub fn dominant_rep(&self, wt: &[i64]) -> Wt {
        match self.kind {
            Kind::Gl(_) => {
                let mut v = wt.to_vec();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            }
            Kind::Simple(t) => {
                let a = t.cartan();
                let mut v = wt.to_vec();
                'outer: loop {
                    for i in 0..self.rank {
                        if v[i] < 0 {
                            let ci = v[i];
                            for k in 0..self.rank {
                                v[k] -= ci * a[k][i];
                            }
                            continue 'outer;
                        }
                    }
                    return v;
                }
            }
        }
    }

    /// The Weyl orbit of a weight (no multiplicities).
    pub fn weyl_orbit(&self, wt: &[i64]) -> Vec<Wt> {
        let mut seen = BTreeSet::new();
        for w in &self.weyl {
            seen.insert(w.apply(wt));
        }
        seen.into_iter().collect()
    }

    /// Order of the stabilizer of `wt` in `W`.
    pub fn stabilizer_order(&self, wt: &[i64]) -> usize {
        self.weyl.iter().filter(|w| w.apply(wt) == wt).count()
    }

    /// Poincaré polynomial `W(u) = Σ_{w∈W} u^{ℓ(w)}` (ascending coeffs).
    pub fn poincare(&self) -> Vec<Int> {
        let max = self.weyl.iter().map(|w| w.length).max().unwrap_or(0);
        let mut p = vec![Int::zero(); max + 1];
        for w in &self.weyl {
            p[w.length] += 1;
        }
        p
    }

    /// Poincaré polynomial of the stabilizer of a (dominant) weight.
    pub fn poincare_stabilizer(&self, wt: &[i64]) -> Vec<Int> {
        let fixed: Vec<&WeylElt> =
            self.weyl.iter().filter(|w| w.apply(wt) == wt).collect();
        let max = fixed.iter().map(|w| w.length).max().unwrap_or(0);
        let mut p = vec![Int::zero(); max + 1];
        for w in fixed {
            p[w.length] += 1;
        }
        p
    }

    /// The W-invariant form `B(λ, μ) = Σ_{β>0} ⟨λ, β̌⟩⟨μ, β̌⟩` (integer
    /// valued; degenerate exactly on the central directions of `GL_n`).
    pub fn b_form(&self, x: &[i64], y: &[i64]) -> i64 {
        self.positive
            .iter()
            .map(|r| r.pair(x) * r.pair(y))
            .sum()
    }

    /// Central twist `λ + c·(1,…,1)` for `GL_n`; identity for simple types
    /// (their weight lattice has no central direction).
    ///
    /// Satake-basis coefficients are invariant under this shift, and the
    /// normalized local values pick up only the documented monomial factor
    /// `q^{c·n(n-1)/2}` in the galois normalization.
    pub fn central_twist(&self, wt: &[i64], c: i64) -> Wt {
        match self.kind {
            Kind::Gl(_) => wt.iter().map(|x| x + c).collect(),
            Kind::Simple(_) => wt.to_vec(),
        }
    }

    /// All `GL_n`-dominant nonnegative weights of total degree `total` with
    /// parts bounded by `max_part` (partitions of `total` into at most `n`
    /// parts, zero-padded).  Panics for simple types.
    pub fn gl_partitions(&self, total: i64, max_part: i64) -> Vec<Wt> {
        let n = self.gl_n().expect("gl_partitions is a GL_n enumeration");
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        gl_partitions_rec(n, total, max_part, &mut cur, &mut out);
        out
    }

    /// All dominant weights `λ` with `⟨λ, 2ρ̌⟩ ≤ bound2` — for simple types
    /// only, where the dominant cone meets that slab in a finite box.
    pub fn dominant_with_2rho_at_most(&self, bound2: i64) -> Vec<Wt> {
        assert!(
            self.gl_n().is_none(),
            "slab enumeration needs a definite pairing; use gl_partitions for GL_n"
        );
        // ⟨ω_i, 2ρ̌⟩ ≥ 1 for every fundamental weight, so each Dynkin
        // coordinate is bounded by bound2.
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.rank];
        self.slab_rec(0, bound2, &mut cur, &mut out);
        out.sort_by_key(|wt| self.order_key(wt));
        out
    }

    fn slab_rec(&self, i: usize, bound2: i64, cur: &mut Vec<i64>, out: &mut Vec<Wt>) {
        if i == self.rank {
            if self.pair_2rho_check(cur) <= bound2 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=bound2 {
            cur[i] = v;
            self.slab_rec(i + 1, bound2, cur, out);
        }
        cur[i] = 0;
    }
}

fn gl_partitions_rec(
    slots: usize,
    total: i64,
    max_part: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<Wt>,
) {
    if slots == 0 {
        if total == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let hi = max_part.min(total);
    for v in (0..=hi).rev() {
        if v * slots as i64 >= total {
            cur.push(v);
            gl_partitions_rec(slots - 1, total - v, v, cur, out);
            cur.pop();
        }
    }
}

fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Matrix of `s_i` on Dynkin coordinates: `(s_i λ)_k = λ_k - λ_i·A[k][i]`.
fn simple_reflection_matrix(a: &[Vec<i64>], i: usize) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut m = identity_matrix(n);
    for (k, row) in m.iter_mut().enumerate() {
        row[i] -= a[k][i];
    }
    m
}

fn mat_apply(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_apply_transpose(m: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    let n = v.len();
    (0..n)
        .map(|j| (0..n).map(|i| m[i][j] * v[i]).sum())
        .collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Breadth-first closure of the simple reflections; BFS depth is Coxeter
/// length because each generator changes length by exactly one.
fn weyl_closure(rank: usize, refl: &[Vec<Vec<i64>>]) -> Vec<WeylElt> {
    let id = identity_matrix(rank);
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back((id, 0usize));
    while let Some((m, len)) = queue.pop_front() {
        if !seen.insert(m.clone()) {
            continue;
        }
        for s in refl {
            queue.push_back((mat_mul(s, &m), len + 1));
        }
        out.push(WeylElt { mat: m, length: len });
    }
    out
}

/// Solve `A c = β` for the simple-root coordinates of `β` (Dynkin coords).
/// Returns `None` when the solution is non-integral, i.e. `β` lies outside
/// the root lattice.
fn simple_root_coords_simple(a: &[Vec<i64>], beta: &[i64]) -> Option<Vec<i64>> {
    let n = a.len();
    let a_rat: Vec<Vec<Rat>> = (0..n)
        .map(|i| (0..n).map(|j| Rat::from(Int::from(a[i][j]))).collect())
        .collect();
    let b_rat: Vec<Rat> = beta.iter().map(|x| Rat::from(Int::from(*x))).collect();
    let sol = linalg::solve(&a_rat, &b_rat).expect("Cartan matrix is invertible");
    sol.iter()
        .map(|x| x.is_integer().then(|| int_to_i64(x.numer())))
        .collect()
}

fn int_to_i64(x: &Int) -> i64 {
    use num_traits::ToPrimitive;
    x.to_i64().expect("coordinate overflow")
}

/// Exponents from the height distribution of the positive roots:
/// `#{β > 0 : ht β = k} - #{β > 0 : ht β = k+1}` copies of the exponent `k`.
/// `GL_n` gets an extra `0` for its central factor, giving `{0, 1, …, n-1}`.
fn exponents_from_heights(
    kind: &Kind,
    _rank: usize,
    positive: &[Root],
    two_rho_check: &[i64],
) -> Vec<i64> {
    let mut by_height: Vec<i64> = Vec::new();
    for r in positive {
        let d: i64 = two_rho_check.iter().zip(&r.wt).map(|(c, x)| c * x).sum();
        assert!(d % 2 == 0 && d > 0);
        let h = (d / 2) as usize;
        if by_height.len() < h {
            by_height.resize(h, 0);
        }
        by_height[h - 1] += 1;
    }
    let mut exps = Vec::new();
    for k in 1..=by_height.len() {
        let here = by_height[k - 1];
        let next = if k < by_height.len() { by_height[k] } else { 0 };
        for _ in 0..(here - next) {
            exps.push(k as i64);
        }
    }
    if matches!(kind, Kind::Gl(_)) {
        exps.push(0);
    }
    exps.sort_unstable();
    exps
}
