mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use regma::cubicgen::{generate_cubic, CubicFilter};
use regma::exact::{odd_determinant_check, IntMatrix, Rat};
use regma::graph::{enumerate_cycles, girth, min_weight_cycle, EdgeWeights};
use regma::matroid::{cographic, graphic, ksum_rep, r10, KSumConvention, WeightedRep};
use regma::optimize::{
    bound_large_girth, bound_small_cycle, c_of_rep, cogirth, cogirth_masks, embedding_systole_bound, s_table, systole,
    systole_bruteforce,
};
use regma::surface::EmbeddingCertificate;

use common::{r10_piece, random_multigraph, random_plane_graph, random_weights, triangle_piece};

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn separation_oracle_is_exact(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let g = random_multigraph(&mut rng, 18, 10);
        let w = random_weights(&mut rng, g.m());
        let (c, x) = min_weight_cycle(&g, &w).unwrap();
        let best = enumerate_cycles(&g).unwrap().iter().map(|c| c.weight(&w)).min().unwrap();
        prop_assert_eq!(&x, &best);
        prop_assert_eq!(c.weight(&w), x);
    }

    #[test]
    fn cutting_planes_agree_with_bruteforce(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let g = random_multigraph(&mut rng, 14, 8);
        let s = systole(&g).unwrap();
        s.verify(&g).unwrap();
        prop_assert_eq!(&s.value, &systole_bruteforce(&g).unwrap().0);
        prop_assert_eq!(&cogirth(&cographic(&g).unwrap()).unwrap().value, &s.value);
    }

    #[test]
    fn graphic_and_cographic_bases_complement(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let g = random_multigraph(&mut rng, 12, 6);
        let (m, d) = (graphic(&g, 0).unwrap(), cographic(&g).unwrap());
        prop_assert_eq!(m.rank() + d.rank(), g.m());
        for _ in 0..20 {
            let mut subset: Vec<usize> = (0..g.m()).filter(|_| rng.gen_bool(0.5)).collect();
            subset.truncate(m.rank());
            let rest: Vec<usize> = (0..g.m()).filter(|e| !subset.contains(e)).collect();
            prop_assert_eq!(m.is_basis(&subset), d.is_basis(&rest));
        }
        prop_assert!(odd_determinant_check(m.lift().unwrap()).unwrap().is_ok());
        prop_assert!(odd_determinant_check(d.lift().unwrap()).unwrap().is_ok());
    }

    #[test]
    fn plane_graphs_obey_the_embedding_bound(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let (g, rot) = random_plane_graph(&mut rng);
        let cert = EmbeddingCertificate::from_rotation(&g, rot).unwrap();
        cert.verify(&g).unwrap();
        prop_assert_eq!(cert.chi, 2);
        prop_assert!(systole(&g).unwrap().value <= embedding_systole_bound(g.betti(), 2).unwrap());
    }
}

/// `f(v)` over the rationals: mass of the weights not annihilated by `v`.
fn rational_charge(r: &WeightedRep, v: &[i64]) -> Rat {
    (0..r.len())
        .filter(|&j| {
            let dot: num_bigint::BigInt = (0..r.rank()).map(|i| r.h().get(i, j) * v[i]).sum();
            dot != num_bigint::BigInt::from(0)
        })
        .map(|j| r.mult()[j].clone())
        .sum()
}

fn inverse_cogirth(r: &WeightedRep) -> Rat {
    cogirth_masks(r.rank(), &r.masks()).unwrap().value.recip()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The cogirth of a sum is bounded by the pieces with their glued
    /// weights contracted, and the sum keeps the odd-minor condition.
    #[test]
    fn sums_split_the_cogirth(seed in any::<u64>(), k in 1usize..=3) {
        let mut rng = seeded(seed);
        let (r1, r2) = if k == 3 {
            (triangle_piece(&mut rng), triangle_piece(&mut rng))
        } else if rng.gen_bool(0.3) {
            (r10_piece(&mut rng), triangle_piece(&mut rng))
        } else {
            (triangle_piece(&mut rng), triangle_piece(&mut rng))
        };
        let (w1, w2): (Vec<usize>, Vec<usize>) = match k {
            1 => (vec![], vec![]),
            2 => (vec![rng.gen_range(0..6)], vec![rng.gen_range(0..6)]),
            _ => (vec![0, 1, 2], vec![0, 1, 2]),
        };
        let s = ksum_rep(&r1, &r2, k, &w1, &w2, KSumConvention::Remove).unwrap();
        prop_assert!(odd_determinant_check(s.h()).unwrap().is_ok());
        prop_assert!(s.rank() <= r1.rank() + r2.rank() + 1 - k);
        let (p1, p2) = if k == 1 { (r1.clone(), r2.clone()) } else { (r1.contract(&w1).unwrap(), r2.contract(&w2).unwrap()) };
        prop_assert_eq!(p1.rank(), r1.rank() + 1 - k);
        prop_assert!(inverse_cogirth(&s) >= inverse_cogirth(&p1) + inverse_cogirth(&p2));
        // At the given multiplicities the sum is no better than either side.
        let (c, _) = c_of_rep(&s).unwrap();
        let on_left: Rat = s.mult()[..r1.len() - w1.len()].iter().sum();
        prop_assert!(c <= cogirth_masks(p1.rank(), &p1.masks()).unwrap().value * on_left.clone());
        prop_assert!(c <= cogirth_masks(p2.rank(), &p2.masks()).unwrap().value * (Rat::one() - on_left));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Rational directions never beat the F2 minimum, and on these totally
    /// unimodular lifts the {-1, 0, 1} directions attain it.
    #[test]
    fn rational_directions_match_f2(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let r = if rng.gen_bool(0.3) { r10_piece(&mut rng) } else { triangle_piece(&mut rng) };
        let (c, _) = c_of_rep(&r).unwrap();
        for _ in 0..50 {
            let v: Vec<i64> = (0..r.rank()).map(|_| rng.gen_range(-3..=3)).collect();
            if v.iter().all(|&x| x == 0) {
                continue;
            }
            prop_assert!(rational_charge(&r, &v) >= c);
        }
        let d = r.rank() as u32;
        let best = (1..3i64.pow(d))
            .map(|mut code| {
                let v: Vec<i64> = (0..d).map(|_| { let x = code % 3 - 1; code /= 3; x }).collect();
                v
            })
            .filter(|v| v.iter().any(|&x| x != 0))
            .map(|v| rational_charge(&r, &v))
            .min()
            .unwrap();
        prop_assert_eq!(best, c);
    }
}

#[test]
fn fano_lift_fails_the_odd_minor_test() {
    let fano = IntMatrix::from_rows(&[vec![1, 0, 0, 1, 1, 0, 1], vec![0, 1, 0, 1, 0, 1, 1], vec![0, 0, 1, 0, 1, 1, 1]]);
    assert!(!odd_determinant_check(&fano).unwrap().is_ok());
    assert!(WeightedRep::uniform(fano).is_err());
    assert!(odd_determinant_check(r10().lift().unwrap()).unwrap().is_ok());
}

/// Every 3-edge-connected cubic graph with `b <= 7` satisfies all the
/// recursive bounds that apply to it and stays below the table.
#[test]
fn cubic_graphs_respect_the_bounds() {
    let s = s_table();
    let filter = CubicFilter { three_edge_connected: true, ..CubicFilter::default() };
    let mut checked = 0;
    for b in 3..=7 {
        for g in generate_cubic(2 * b - 2, filter).unwrap() {
            let inv = systole(&g).unwrap().value.recip();
            assert!(inv >= s[b - 1].recip());
            let gi = girth(&g).unwrap();
            if let Ok(x) = bound_large_girth(b, gi, &s) {
                assert!(inv >= x, "large girth, b = {b}");
            }
            for h in 1..=gi.min(b - 1) {
                assert!(inv >= bound_small_cycle(b, gi, h, &s).unwrap(), "small cycle, b = {b}, h = {h}");
            }
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 2 + 4 + 14 + 57);
}

#[test]
fn weighted_systole_is_below_the_optimum() {
    let mut rng = seeded(3);
    for _ in 0..20 {
        let g = random_multigraph(&mut rng, 16, 9);
        let w = EdgeWeights::new(random_weights(&mut rng, g.m())).unwrap();
        let (x, c) = regma::optimize::systole_weighted(&g, &w).unwrap();
        assert_eq!(c.weight(w.as_slice()) / w.total(), x);
        assert!(x <= systole(&g).unwrap().value);
    }
}
