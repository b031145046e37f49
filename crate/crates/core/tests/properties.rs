//! Randomized structural invariants, exercised with proptest.  Each
//! property is a statement that must hold for *every* input, so shrunk
//! counterexamples point directly at a broken invariant.

use proptest::prelude::*;

use satake_core::charring::weyl_dim;
use satake_core::exactalg::{int, LaurentScalar};
use satake_core::hecke::whittaker::n_coordinate;
use satake_core::hecke::{lusztig_kato, multiply, to_c_basis, to_h_basis, Basis, HeckeCtx, HeckeElt};
use satake_core::padic::enumerate::{psi_residue, window_point, WindowShape};
use satake_core::padic::SeriesMatrix;
use satake_core::{RootSystem, Wt};

fn sorted_desc(mut v: Vec<i64>) -> Wt {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// An integral upper-unitriangular matrix decoded from `code`.
fn upper_unit(p: u32, n: usize, code: u64) -> SeriesMatrix {
    let mut m = SeriesMatrix::identity(p, n);
    let mut rest = code;
    for i in 0..n {
        for j in (i + 1)..n {
            for e in 0..2i64 {
                let c = (rest % p as u64) as u32;
                rest /= p as u64;
                m.entry_mut(i, j).add_coeff(e, c);
            }
        }
    }
    m
}

/// An integral lower-unitriangular matrix decoded from `code`.
fn lower_unit(p: u32, n: usize, code: u64) -> SeriesMatrix {
    let mut m = SeriesMatrix::identity(p, n);
    let mut rest = code;
    for i in 0..n {
        for j in 0..i {
            for e in 0..2i64 {
                let c = (rest % p as u64) as u32;
                rest /= p as u64;
                m.entry_mut(i, j).add_coeff(e, c);
            }
        }
    }
    m
}

/// A unimodular matrix: a product of unitriangular factors of both kinds.
fn unimodular(p: u32, n: usize, code1: u64, code2: u64, code3: u64) -> SeriesMatrix {
    upper_unit(p, n, code1)
        .mul(&lower_unit(p, n, code2))
        .mul(&upper_unit(p, n, code3))
}

fn lk_structure(rs: &RootSystem, lam: &[i64]) {
    let table = lusztig_kato(rs, lam).unwrap();
    assert_eq!(&table.rows[0].mu, lam);
    assert_eq!(table.rows[0].p, vec![int(1)]);
    for row in &table.rows {
        assert!(rs.dominance_leq(&row.mu, lam));
        assert!(row.p.iter().all(|c| *c >= int(0)));
        let diff: Wt = lam.iter().zip(&row.mu).map(|(a, b)| a - b).collect();
        let ht = rs.height(&diff);
        assert!(
            (row.p.len() as i64) <= ht + 1,
            "deg P_{{μλ}} bound violated at μ = {:?}",
            row.mu
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lk_structure_gl3(a in 0..=3i64, b in 0..=3i64, c in 0..=3i64) {
        let rs = RootSystem::gl(3);
        lk_structure(&rs, &sorted_desc(vec![a, b, c]));
    }

    #[test]
    fn lk_structure_b2(a in 0..=3i64, b in 0..=3i64) {
        let rs = RootSystem::parse("B2").unwrap();
        lk_structure(&rs, &[a, b]);
    }

    #[test]
    fn lk_structure_g2(a in 0..=2i64, b in 0..=2i64) {
        let rs = RootSystem::parse("G2").unwrap();
        lk_structure(&rs, &[a, b]);
    }

    #[test]
    fn central_twist_shifts_everything_gl2(a in 0..=3i64, b in 0..=3i64, c in 0..=2i64) {
        let lam = sorted_desc(vec![a, b]);
        let shifted: Wt = lam.iter().map(|x| x + c).collect();
        let rs = RootSystem::gl(2);
        let t0 = lusztig_kato(&rs, &lam).unwrap();
        let t1 = lusztig_kato(&rs, &shifted).unwrap();
        prop_assert_eq!(t0.rows.len(), t1.rows.len());
        for (r0, r1) in t0.rows.iter().zip(&t1.rows) {
            let moved: Wt = r0.mu.iter().map(|x| x + c).collect();
            prop_assert_eq!(&moved, &r1.mu);
            prop_assert_eq!(&r0.p, &r1.p);
        }
    }

    #[test]
    fn characters_are_weyl_invariant_b2(a in 0..=3i64, b in 0..=2i64, k in 0usize..8) {
        let rs = RootSystem::parse("B2").unwrap();
        let ctx = HeckeCtx::new(&rs);
        let ch = ctx.character(&[a, b]);
        let w = &rs.weyl()[k % rs.weyl().len()];
        for (wt, mult) in ch.terms() {
            prop_assert_eq!(ch.coeff(&w.apply(wt)), mult);
        }
    }

    #[test]
    fn hecke_product_commutes_gl2(
        a in 0..=3i64, b in 0..=3i64, c in 0..=3i64, d in 0..=3i64
    ) {
        let rs = RootSystem::gl(2);
        let ctx = HeckeCtx::new(&rs);
        let x = HeckeElt::basis_vector(2, Basis::C, sorted_desc(vec![a, b]));
        let y = HeckeElt::basis_vector(2, Basis::C, sorted_desc(vec![c, d]));
        prop_assert_eq!(multiply(&ctx, &x, &y), multiply(&ctx, &y, &x));
    }

    #[test]
    fn basis_round_trip_gl3(a in 0..=2i64, b in 0..=2i64, c in 0..=2i64, s in -3..=3i64) {
        let rs = RootSystem::gl(3);
        let ctx = HeckeCtx::new(&rs);
        let mut f = HeckeElt::zero(3, Basis::C);
        f.add_term(sorted_desc(vec![a, b, c]), LaurentScalar::from_int(s));
        f.add_term(vec![1, 0, 0], LaurentScalar::v_pow(s));
        let round = to_c_basis(&ctx, &to_h_basis(&ctx, &f));
        prop_assert_eq!(round, f);
    }

    #[test]
    fn psi_residue_is_additive(p in prop_oneof![Just(2u32), Just(3)],
                               code1 in any::<u64>(), code2 in any::<u64>()) {
        // The window at ν = 0 with margin 1 contains points with poles, so
        // additivity is exercised on non-integral entries as well.
        let shape = WindowShape::for_cocharacter(&[0, 0, 0], 1);
        let total = shape.point_count(p);
        let u1 = window_point(p, &shape, code1 % total);
        let u2 = window_point(p, &shape, code2 % total);
        let lhs = psi_residue(&u1.mul(&u2));
        prop_assert_eq!(lhs, (psi_residue(&u1) + psi_residue(&u2)) % p);
    }

    #[test]
    fn census_measure_is_consistent(p in prop_oneof![Just(2u32), Just(3)],
                                    a in 0..=2i64, b in 0..=2i64, margin in 0..=1i64) {
        let nu = sorted_desc(vec![a, b]);
        let census = satake_core::padic::oracles::window_census(&nu, p, margin).unwrap();
        prop_assert!(census.measure_consistent());
    }

    #[test]
    fn cartan_is_bi_k_invariant(p in prop_oneof![Just(2u32), Just(3)],
                                a in 0..=2i64, b in -1..=2i64,
                                c1 in any::<u64>(), c2 in any::<u64>(), c3 in any::<u64>(),
                                c4 in any::<u64>(), c5 in any::<u64>(), c6 in any::<u64>(),
                                u in any::<u64>()) {
        let n = 3;
        let mu = sorted_desc(vec![a, b, 0]);
        let x = upper_unit(p, n, u).mul(&SeriesMatrix::diag_pi(p, &mu));
        let k1 = unimodular(p, n, c1, c2, c3);
        let k2 = unimodular(p, n, c4, c5, c6);
        let before = x.cartan_invariant().unwrap();
        let after = k1.mul(&x).mul(&k2).cartan_invariant().unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn iwasawa_data_is_right_k_invariant(p in prop_oneof![Just(2u32), Just(3)],
                                         a in -1..=2i64, b in 0..=2i64,
                                         c1 in any::<u64>(), c2 in any::<u64>(),
                                         c3 in any::<u64>(), u in any::<u64>()) {
        let n = 3;
        let nu = vec![a, b, 0];
        let g = SeriesMatrix::diag_pi(p, &nu).mul(&upper_unit(p, n, u));
        let k = unimodular(p, n, c1, c2, c3);
        let (w1, r1) = g.iwasawa().unwrap();
        let (w2, r2) = g.mul(&k).iwasawa().unwrap();
        prop_assert_eq!(&w1, &w2);
        // The residue is a canonical invariant of the coset exactly on the
        // dominant support of the Whittaker function; off it, the unipotent
        // part is only defined modulo elements whose superdiagonal reaches
        // into π^{-1}, so the residue may depend on the representative.
        if w1.windows(2).all(|x| x[0] >= x[1]) {
            prop_assert_eq!(r1, r2);
        }
    }

    #[test]
    fn weight_pairing_matches_partition_statistic(a in 0..=4i64, b in 0..=4i64, c in 0..=4i64) {
        // ⟨λ,2ρ̌⟩ + 2·n(λ) = |λ|·(n−1) for partitions of GL_n.
        let lam = sorted_desc(vec![a, b, c]);
        let rs = RootSystem::gl(3);
        let total: i64 = lam.iter().sum();
        prop_assert_eq!(rs.pair_2rho_check(&lam) + 2 * n_coordinate(&lam), total * 2);
    }

    #[test]
    fn tensor_dimensions_add_up_a2(a in 0..=2i64, b in 0..=2i64, c in 0..=2i64, d in 0..=2i64) {
        let rs = RootSystem::parse("A2").unwrap();
        let ctx = HeckeCtx::new(&rs);
        let lhs = weyl_dim(&rs, &[a, b]) * weyl_dim(&rs, &[c, d]);
        let rhs: i64 = ctx
            .tensor_decompose(&[a, b], &[c, d])
            .into_iter()
            .map(|(nu, mult)| mult * weyl_dim(&rs, &nu))
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bar_involution_is_multiplicative(e1 in -3..=3i64, c1 in -4..=4i64,
                                        e2 in -3..=3i64, c2 in -4..=4i64) {
        let mut x = LaurentScalar::term(e1, int(c1));
        x.add_term(0, &int(1));
        let y = LaurentScalar::term(e2, int(c2));
        prop_assert_eq!(x.bar().bar(), x.clone());
        prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
    }
}
