use std::collections::HashSet;

use extcalc_core::arith::binomial;
use extcalc_core::oracle::{
    alternating, build_complex, functor_basis, graded_homology, homology_dims, koszul_homology_formula,
    split_check, genkoszul_check, ComplexSpec, FpMatrix, GradedLinearMap,
};
use extcalc_core::pcalc::splitting_criterion;
use extcalc_core::Flavor;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn koszul_complexes_are_exact() {
    for p in [2u64, 3] {
        for n in 1..=3usize {
            for total in 1..=6u64 {
                for spec in [ComplexSpec::Koszul { p, n, total }, ComplexSpec::DualKoszul { p, n, total }] {
                    let c = build_complex(&spec).unwrap();
                    assert!(homology_dims(&c).iter().all(|&h| h == 0), "{spec:?}");
                }
            }
        }
    }
}

#[test]
fn de_rham_follows_cartier() {
    for p in [2u64, 3] {
        for n in 1..=3usize {
            for total in 1..=6u64 {
                let h = homology_dims(&build_complex(&ComplexSpec::DeRham { p, n, total }).unwrap());
                let n64 = n as u64;
                let expected: Vec<u64> = (0..=total)
                    .map(|i| {
                        if total % p != 0 || i > total / p {
                            return 0;
                        }
                        let m = total / p;
                        let sym = binomial(n64 + m - i - 1, m - i).unwrap();
                        sym * binomial(n64, i).unwrap()
                    })
                    .collect();
                assert_eq!(h, expected, "p={p} n={n} D={total}");
            }
        }
    }
}

#[test]
fn euler_characteristic_survives_homology() {
    for p in [2u64, 3, 5] {
        for n in 1..=3usize {
            for total in 0..=5u64 {
                for spec in [
                    ComplexSpec::Koszul { p, n, total },
                    ComplexSpec::DualKoszul { p, n, total },
                    ComplexSpec::DeRham { p, n, total },
                ] {
                    let c = build_complex(&spec).unwrap();
                    assert_eq!(c.euler_characteristic(), alternating(homology_dims(&c)), "{spec:?}");
                }
            }
        }
    }
}

#[test]
fn frozen_small_complexes() {
    let c = build_complex(&ComplexSpec::DeRham { p: 3, n: 2, total: 3 }).unwrap();
    assert_eq!(c.dims(), [4, 6, 2, 0]);
    assert_eq!(homology_dims(&c), [2, 2, 0, 0]);
    let c = build_complex(&ComplexSpec::DualKoszul { p: 2, n: 3, total: 2 }).unwrap();
    assert_eq!(c.dims(), [6, 9, 3]);
    let c = build_complex(&ComplexSpec::Koszul { p: 2, n: 2, total: 2 }).unwrap();
    // Λ^2 → Λ^1 ⊗ S^1: e1∧e2 ↦ e1⊗x2 − e2⊗x1, which is two ones mod 2
    assert_eq!(c.differentials[0].rows(), 4);
    let ones: u64 = (0..4).map(|r| c.differentials[0].get(r, 0)).sum();
    assert_eq!(ones, 2);
}

#[test]
fn basis_sizes() {
    for p in [2u64, 3] {
        for n in 0..=4usize {
            for d in 0..=5u64 {
                let n64 = n as u64;
                let multisets = if n == 0 { u64::from(d == 0) } else { binomial(n64 + d - 1, d).unwrap() };
                assert_eq!(functor_basis(Flavor::Sym, n, d, p).unwrap().len() as u64, multisets);
                assert_eq!(functor_basis(Flavor::Gamma, n, d, p).unwrap().len() as u64, multisets);
                assert_eq!(functor_basis(Flavor::Ext, n, d, p).unwrap().len() as u64, binomial(n64, d).unwrap());
                let b = functor_basis(Flavor::Sym, n, d, p).unwrap();
                assert!(b.monomials.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }
}

fn random_graded_map(rng: &mut ChaCha8Rng) -> GradedLinearMap {
    let p = if rng.gen_bool(0.5) { 2 } else { 3 };
    let shift: i64 = rng.gen_range(-1..=2);
    let nw = rng.gen_range(0..=4);
    let nv = rng.gen_range(0..=4);
    let source: Vec<u64> = (0..nw).map(|_| rng.gen_range(1..=3)).collect();
    let shifted: Vec<u64> = source.iter().map(|&d| (d as i64 + shift) as u64).collect();
    let target: Vec<u64> = (0..nv)
        .map(|_| if !shifted.is_empty() && rng.gen_bool(0.7) { shifted[rng.gen_range(0..shifted.len())] } else { rng.gen_range(0..=4) })
        .collect();
    let mut m = FpMatrix::zeros(p, nv, nw).unwrap();
    for (r, &t) in target.iter().enumerate() {
        for (c, &d) in shifted.iter().enumerate() {
            if t == d {
                m.set(r, c, rng.gen_range(0..p));
            }
        }
    }
    GradedLinearMap::new(source, target, shift, m).unwrap()
}

#[test]
fn generalized_koszul_matches_kernel_cokernel_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_4301);
    for _ in 0..40 {
        let f = random_graded_map(&mut rng);
        let d = rng.gen_range(0..=3);
        assert!(genkoszul_check(&f, d).unwrap(), "{f:?} d={d}");
    }
}

#[test]
fn generalized_koszul_of_isomorphism_is_exact() {
    for p in [2u64, 3] {
        for n in 1..=3usize {
            // an invertible upper triangular matrix
            let mut m = FpMatrix::identity(p, n).unwrap();
            for r in 0..n {
                for c in r + 1..n {
                    m.set(r, c, (r + 2 * c) as u64);
                }
            }
            let f = GradedLinearMap::new(vec![0; n], vec![0; n], 0, m).unwrap();
            for d in 1..=4u64 {
                let c = build_complex(&ComplexSpec::GenKoszul { map: f.clone(), d }).unwrap();
                assert!(homology_dims(&c).iter().all(|&h| h == 0), "p={p} n={n} d={d}");
            }
        }
    }
}

#[test]
fn generalized_koszul_weights_match_formula_shape() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let f = random_graded_map(&mut rng);
        let c = build_complex(&ComplexSpec::GenKoszul { map: f.clone(), d: 2 }).unwrap();
        assert_eq!(graded_homology(&c).unwrap().len(), koszul_homology_formula(&f, 2).unwrap().len());
    }
}

#[test]
fn split_check_matches_digit_rule() {
    for p in [2u64, 3, 5] {
        for n in 0..=8u64 {
            for m in 0..=n {
                let check = split_check(p, n, m).unwrap();
                assert!(check.holds, "p={p} n={n} m={m}");
                assert_eq!(check.scalar, Some(binomial(n, m).unwrap() % p));
                assert_eq!(check.scalar != Some(0), splitting_criterion(p, n, m));
            }
        }
    }
}

/// Size of the row space, by closing the rows under addition and scaling.
fn row_space_size(m: &FpMatrix) -> usize {
    let p = m.p();
    let mut space: HashSet<Vec<u64>> = HashSet::from([vec![0; m.cols()]]);
    for r in 0..m.rows() {
        let row = m.row(r).to_vec();
        let mut next = space.clone();
        for v in &space {
            for k in 1..p {
                next.insert(v.iter().zip(&row).map(|(a, b)| (a + k * b) % p).collect());
            }
        }
        space = next;
    }
    space.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_row_space(
        p in prop::sample::select(vec![2u64, 3, 5]),
        rows in 0usize..5,
        cols in 0usize..5,
        seed in prop::collection::vec(any::<u64>(), 25),
    ) {
        let data: Vec<Vec<u64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 5 + c] % p).collect()).collect();
        let m = FpMatrix::from_rows(p, cols, &data).unwrap();
        let rank = m.rank();
        prop_assert!(rank <= rows.min(cols));
        prop_assert_eq!((p as usize).pow(rank as u32), row_space_size(&m));
    }
}
