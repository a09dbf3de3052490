mod common;

use burnside_core::burnside::{burnside_exponent, BurnsideContext, BurnsideElement};
use burnside_core::liering::{bracket, graded_image, LieElement};
use burnside_core::words::FreeWord;
use common::{all_elements, normal_closure_size_brute_force, printed, P_TEMPLATE};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn element(ctx: &BurnsideContext, seed: u64) -> BurnsideElement {
    ctx.random_element(&mut ChaCha8Rng::seed_from_u64(seed))
}

#[test]
fn b23_table_is_a_group_of_exponent_three() {
    let ctx = BurnsideContext::new(2).unwrap();
    let all = all_elements(&ctx);
    assert_eq!(all.len(), 27);
    for x in &all {
        assert!(ctx.power(x, 3).unwrap().is_identity());
        for y in &all {
            let xy = ctx.multiply(x, y).unwrap();
            for z in &all {
                assert_eq!(
                    ctx.multiply(&xy, z).unwrap(),
                    ctx.multiply(x, &ctx.multiply(y, z).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn generators_produce_the_whole_group() {
    for n in 1..=3 {
        let ctx = BurnsideContext::new(n).unwrap();
        let gens: Vec<_> = (1..=n).map(|i| ctx.generator(i).unwrap()).collect();
        assert_eq!(
            normal_closure_size_brute_force(&ctx, &gens),
            3usize.pow(burnside_exponent(n) as u32)
        );
    }
}

#[test]
fn orders_of_free_burnside_groups() {
    let exps: Vec<usize> = (1..=5).map(burnside_exponent).collect();
    assert_eq!(exps, [1, 3, 7, 14, 25]);
    for n in 0..=6 {
        let ctx = BurnsideContext::new(n).unwrap();
        assert_eq!(ctx.dimension(), burnside_exponent(n));
        assert!(ctx.consistency_check().passed);
    }
}

#[test]
fn printed_relator_lands_in_weight_three() {
    let ctx = BurnsideContext::new(4).unwrap();
    let p1 = ctx
        .evaluate(&printed(P_TEMPLATE, 1).kill_generator(5))
        .unwrap();
    assert!(p1.alpha().is_zero() && p1.beta().is_zero());
    assert!(!p1.gamma().is_zero());
    let relators: Vec<_> = (1..=4)
        .map(|i| {
            ctx.evaluate(&printed(P_TEMPLATE, i).kill_generator(5))
                .unwrap()
        })
        .collect();
    let closure = ctx.normal_closure(&relators).unwrap();
    assert_eq!(closure.ranks(), [0, 0, 4]);
    assert_eq!(ctx.dimension() - closure.order_exponent(), 10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity_and_cubes(n in 1usize..=6, a: u64, b: u64, c: u64) {
        let ctx = BurnsideContext::new(n).unwrap();
        let (x, y, z) = (element(&ctx, a), element(&ctx, b), element(&ctx, c));
        let left = ctx.multiply(&ctx.multiply(&x, &y).unwrap(), &z).unwrap();
        let right = ctx.multiply(&x, &ctx.multiply(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(ctx.power(&x, 3).unwrap().is_identity());
        prop_assert!(ctx.multiply(&x, &ctx.inverse(&x).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn words_cubed_vanish(signed in prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], 0..30)) {
        let ctx = BurnsideContext::new(4).unwrap();
        let w = FreeWord::from_signed(&signed);
        prop_assert!(ctx.evaluate(&w.pow(3)).unwrap().is_identity());
        let prod = ctx.evaluate(&w.concat(&w.invert())).unwrap();
        prop_assert!(prod.is_identity());
    }

    #[test]
    fn class_three(n in 2usize..=5, a: u64, b: u64, c: u64, d: u64) {
        let ctx = BurnsideContext::new(n).unwrap();
        let (x, y, z, w) = (element(&ctx, a), element(&ctx, b), element(&ctx, c), element(&ctx, d));
        let t = ctx.commutator(&ctx.commutator(&x, &y).unwrap(), &z).unwrap();
        prop_assert!(t.alpha().is_zero() && t.beta().is_zero());
        prop_assert!(ctx.commutator(&t, &w).unwrap().is_identity());
    }

    #[test]
    fn closure_is_order_independent_and_normal(n in 2usize..=5, seeds in prop::collection::vec(any::<u64>(), 1..4), shuffle: u64) {
        let ctx = BurnsideContext::new(n).unwrap();
        let mut rels: Vec<_> = seeds.iter().map(|&s| element(&ctx, s)).collect();
        let first = ctx.normal_closure(&rels).unwrap();
        rels.shuffle(&mut ChaCha8Rng::seed_from_u64(shuffle));
        let inverted: Vec<_> = rels.iter().map(|r| ctx.inverse(r).unwrap()).collect();
        let second = ctx.normal_closure(&inverted).unwrap();
        prop_assert!(first == second);
        prop_assert_eq!(first.ranks(), second.ranks());
        for layer in 1..=3 {
            prop_assert!(first.layer(layer).is_reduced_echelon());
        }
        let g = element(&ctx, shuffle);
        for h in first.witnesses() {
            prop_assert!(first.contains(&ctx, &ctx.conjugate(&g, h).unwrap()).unwrap());
        }
        for r in &rels {
            prop_assert!(first.contains(&ctx, r).unwrap());
        }
    }

    #[test]
    fn weight_three_is_central(n in 3usize..=6, a: u64, b: u64) {
        let ctx = BurnsideContext::new(n).unwrap();
        let x = element(&ctx, a);
        let mut z = element(&ctx, b);
        z = ctx.element(
            burnside_core::gf3::Gf3Vector::zero(n),
            burnside_core::gf3::Gf3Vector::zero(ctx.pair_count()),
            z.gamma().clone(),
        ).unwrap();
        prop_assert_eq!(ctx.multiply(&x, &z).unwrap(), ctx.multiply(&z, &x).unwrap());
    }

    #[test]
    fn commutators_match_lie_brackets(n in 2usize..=5, a: u64, b: u64, wa in 1usize..=2, wb in 1usize..=2) {
        prop_assume!(wa + wb <= 3);
        let ctx = BurnsideContext::new(n).unwrap();
        // push the random elements down to the requested weights
        let lower = |e: BurnsideElement, w: usize| {
            let z1 = burnside_core::gf3::Gf3Vector::zero(n);
            if w == 1 { e } else { ctx.element(z1, e.beta().clone(), e.gamma().clone()).unwrap() }
        };
        let x = lower(element(&ctx, a), wa);
        let y = lower(element(&ctx, b), wb);
        let (gx, gy) = (graded_image(&ctx, &x), graded_image(&ctx, &y));
        let c = ctx.commutator(&x, &y).unwrap();
        let lie = bracket(&ctx, &gx, &gy).unwrap();
        let (layer, expected) = match wa + wb {
            2 => (2, &lie.w2),
            _ => (3, &lie.w3),
        };
        let same_weight = x.weight() == Some(wa) && y.weight() == Some(wb);
        for lower_layer in 1..layer {
            prop_assert!(c.layer_vector(lower_layer).is_zero());
        }
        if same_weight {
            prop_assert_eq!(c.layer_vector(layer), expected);
        }
    }

    #[test]
    fn lie_bracket_laws(n in 2usize..=5, a: u64, b: u64, c: u64) {
        let ctx = BurnsideContext::new(n).unwrap();
        let lie = |s: u64| {
            let e = element(&ctx, s);
            LieElement { w1: e.alpha().clone(), w2: e.beta().clone(), w3: e.gamma().clone() }
        };
        let (x, y, z) = (lie(a), lie(b), lie(c));
        let br = |p: &LieElement, q: &LieElement| bracket(&ctx, p, q).unwrap();
        prop_assert!(br(&x, &x).is_zero());
        prop_assert_eq!(br(&x, &y), br(&y, &x).neg());
        prop_assert_eq!(br(&x.add(&y).unwrap(), &z), br(&x, &z).add(&br(&y, &z)).unwrap());
        prop_assert_eq!(br(&x.scale(2), &y), br(&x, &y).scale(2));
        let jacobi = br(&br(&x, &y), &z)
            .add(&br(&br(&y, &z), &x)).unwrap()
            .add(&br(&br(&z, &x), &y)).unwrap();
        prop_assert!(jacobi.is_zero());
    }
}

#[test]
fn normal_closure_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=3 {
        let ctx = BurnsideContext::new(n).unwrap();
        for count in 1..=2 {
            for _ in 0..4 {
                let rels: Vec<_> = (0..count).map(|_| ctx.random_element(&mut rng)).collect();
                let closure = ctx.normal_closure(&rels).unwrap();
                assert_eq!(
                    3usize.pow(closure.order_exponent() as u32),
                    normal_closure_size_brute_force(&ctx, &rels),
                    "n = {n}"
                );
            }
        }
        // commutators only: closure sits in the derived subgroup
        let c = ctx
            .commutator(&ctx.generator(1).unwrap(), &ctx.generator(2).unwrap())
            .unwrap();
        let closure = ctx.normal_closure(std::slice::from_ref(&c)).unwrap();
        assert_eq!(closure.ranks()[0], 0);
        assert_eq!(
            3usize.pow(closure.order_exponent() as u32),
            normal_closure_size_brute_force(&ctx, &[c])
        );
    }
}

#[test]
fn graded_image_of_first_relator() {
    use burnside_core::liering::to_e_basis;
    let ctx = BurnsideContext::new(4).unwrap();
    let p1 = ctx
        .evaluate(&printed(P_TEMPLATE, 1).kill_generator(5))
        .unwrap();
    let image = graded_image(&ctx, &p1);
    assert_eq!(to_e_basis(&ctx, &image.w3).to_signed(), vec![-1, 0, 0, 0]);
}
