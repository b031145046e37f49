//! The graded Kostant partition function.
//!
//! `𝒫_u(β) = Σ_k (# ways to write β as a sum of k positive roots) · u^k`,
//! the u-analog of the partition count.  Weyl-alternating sums of these give
//! the coefficient polynomials of the Satake basis, so this is the
//! computational kernel of the whole Hecke layer.  A per-instance memo table
//! keyed by (root index, remaining target) makes repeated queries cheap; the
//! recursion terminates because every positive root has strictly positive
//! height.

use std::collections::HashMap;

use super::{RootSystem, Wt};
use crate::exactalg::{qpoly, Int};

/// Memoized evaluator for `𝒫_u` on one root system.
///
/// Not `Sync`: create one per worker thread when sweeping in parallel.
pub struct KostantCache<'a> {
    rs: &'a RootSystem,
    memo: HashMap<(usize, Wt), Vec<Int>>,
}

impl<'a> KostantCache<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Self { rs, memo: HashMap::new() }
    }

    /// `𝒫_u(β)` as an ascending coefficient vector in `u` (empty = zero).
    ///
    /// Zero unless `β` is a nonnegative integral combination of simple
    /// roots; `𝒫_u(0) = 1`.
    pub fn qpartition(&mut self, beta: &[i64]) -> Vec<Int> {
        match self.rs.root_lattice_coords(beta) {
            Some(c) if c.iter().all(|x| *x >= 0) => self.rec(0, beta.to_vec()),
            _ => Vec::new(),
        }
    }

    fn rec(&mut self, idx: usize, beta: Wt) -> Vec<Int> {
        if beta.iter().all(|x| *x == 0) {
            return vec![Int::from(1)];
        }
        if idx == self.rs.positive_roots().len() {
            return Vec::new();
        }
        let key = (idx, beta.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let root = self.rs.positive_roots()[idx].wt.clone();
        let mut acc: Vec<Int> = Vec::new();
        let mut target = beta;
        let mut k = 0usize;
        loop {
            // Contribution of using the current root exactly k times.
            let sub = self.rec(idx + 1, target.clone());
            if !sub.is_empty() {
                let mut shifted = vec![Int::from(0); k];
                shifted.extend(sub);
                acc = qpoly::add(&acc, &shifted);
            }
            // One more copy; stop once the remaining height goes negative.
            for (t, r) in target.iter_mut().zip(&root) {
                *t -= r;
            }
            k += 1;
            if self.rs.pair_2rho_check(&target) < 0 {
                break;
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::SimpleType;

    fn poly(cs: &[i64]) -> Vec<Int> {
        cs.iter().map(|&c| Int::from(c)).collect()
    }

    #[test]
    fn gl2_partitions_are_monomials() {
        // Only one positive root α = (1,-1): mα has exactly one partition,
        // into m parts.
        let rs = RootSystem::gl(2);
        let mut pc = KostantCache::new(&rs);
        assert_eq!(pc.qpartition(&[0, 0]), poly(&[1]));
        assert_eq!(pc.qpartition(&[3, -3]), poly(&[0, 0, 0, 1]));
        assert_eq!(pc.qpartition(&[1, 0]), Vec::<Int>::new());
        assert_eq!(pc.qpartition(&[-1, 1]), Vec::<Int>::new());
    }

    #[test]
    fn gl3_highest_root() {
        // θ = α_1 + α_2 = (1,0,-1): either one part (θ itself) or two
        // (α_1 + α_2), so 𝒫_u = u + u^2.
        let rs = RootSystem::gl(3);
        let mut pc = KostantCache::new(&rs);
        assert_eq!(pc.qpartition(&[1, 0, -1]), poly(&[0, 1, 1]));
        // 2θ: {θ+θ}, {θ+α1+α2}, {α1+α1+α2+α2} → u^2 + u^3 + u^4.
        assert_eq!(pc.qpartition(&[2, 0, -2]), poly(&[0, 0, 1, 1, 1]));
    }

    #[test]
    fn counts_match_total_at_u_equals_one() {
        // For A2 in Dynkin coordinates: β = α1+α2 = (1,1).
        let rs = RootSystem::simple(SimpleType::A2);
        let mut pc = KostantCache::new(&rs);
        assert_eq!(pc.qpartition(&[1, 1]), poly(&[0, 1, 1]));
        // G2: β = 2α1 + α2 has partitions {(2α1+α2)}, {α1, α1+α2},
        // {α1, α1, α2} → u + u^2 + u^3.
        let g2 = RootSystem::simple(SimpleType::G2);
        let mut pg = KostantCache::new(&g2);
        let two_a1_plus_a2: Vec<i64> = (0..2)
            .map(|i| 2 * g2.simple_roots()[0].wt[i] + g2.simple_roots()[1].wt[i])
            .collect();
        assert_eq!(pg.qpartition(&two_a1_plus_a2), poly(&[0, 1, 1, 1]));
    }
}
