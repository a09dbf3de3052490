mod common;

use burnside_core::burnside::BurnsideContext;
use burnside_core::words::FreeWord;
use burnside_core::linkio::{
    closed_braid_presentation, core_transport, parse_braid, transport_labels, two_cable, BraidWord,
};
use common::{printed, P_TEMPLATE, Q_TEMPLATE};
use proptest::prelude::*;

#[test]
fn gamma_transport_matches_printed_labels() {
    let gamma = parse_braid("(1 2 3 4)^10").unwrap();
    let q = core_transport(&gamma);
    for i in 1..=5 {
        assert_eq!(q[i - 1], printed(Q_TEMPLATE, i), "Q_{i}");
    }
}

#[test]
fn gamma_presentation_matches_printed_relators() {
    let p = closed_braid_presentation(&parse_braid("(1 2 3 4)^10").unwrap());
    assert_eq!(p.generator_count, 4);
    assert_eq!(p.killed_generator, 5);
    assert_eq!(p.component_count, 5);
    for i in 1..=4 {
        assert_eq!(p.relators[i - 1], printed(P_TEMPLATE, i), "P_{i}");
    }
}

#[test]
fn printed_relators_are_commutators() {
    // P_i = [u u', x_i u'] holds exactly in B(4,3)
    let ctx = BurnsideContext::new(4).unwrap();
    for i in 1..=4 {
        let lhs = ctx.evaluate(&printed(P_TEMPLATE, i)).unwrap();
        let rhs = ctx
            .evaluate(&burnside_core::liering::lemma7_commutator_word(i))
            .unwrap();
        assert_eq!(lhs, rhs, "P_{i}");
    }
}

#[test]
fn l2br_cable_word() {
    let l = two_cable(&parse_braid("(1 -2)^3").unwrap());
    assert_eq!(l.strands(), 6);
    assert_eq!(l.len(), 24);
    assert_eq!(&l.letters()[..8], &[2, 1, 3, 2, -4, -5, -3, -4]);
}

fn braid_strategy() -> impl Strategy<Value = BraidWord> {
    (2usize..=5).prop_flat_map(|n| {
        let m = (n - 1) as i32;
        prop::collection::vec(
            (1..=m, any::<bool>()).prop_map(|(g, s)| if s { g } else { -g }),
            0..16,
        )
        .prop_map(move |letters| BraidWord::new(n, letters).unwrap())
    })
}

proptest! {
    #[test]
    fn transport_is_multiplicative(a in braid_strategy(), b in braid_strategy()) {
        let n = a.strands().max(b.strands());
        let a = BraidWord::new(n, a.letters().to_vec()).unwrap();
        let b = BraidWord::new(n, b.letters().to_vec()).unwrap();
        let mid = core_transport(&a);
        prop_assert_eq!(core_transport(&a.then(&b)), transport_labels(&b, &mid));
    }

    #[test]
    fn braid_then_inverse_is_identity(a in braid_strategy()) {
        let labels = core_transport(&a.then(&a.inverse()));
        prop_assert_eq!(labels, core_transport(&BraidWord::identity(a.strands())));
    }

    #[test]
    fn abelianized_transport_is_fox_rule(a in braid_strategy(), seed in prop::collection::vec(0i64..3, 5)) {
        // exponent sums mod 3 evaluated on a coloring follow c = 2a - b
        let n = a.strands();
        let labels = core_transport(&a);
        let mut colors: Vec<i64> = seed[..n].to_vec();
        for &l in a.letters() {
            let i = l.unsigned_abs() as usize - 1;
            let (p, q) = (colors[i], colors[i + 1]);
            if l > 0 {
                colors[i] = (2 * p - q).rem_euclid(3);
                colors[i + 1] = p;
            } else {
                colors[i] = q;
                colors[i + 1] = (2 * q - p).rem_euclid(3);
            }
        }
        for (w, &c) in labels.iter().zip(&colors) {
            let sums = w.exponent_sums(n);
            let v: i64 = sums.iter().zip(&seed).map(|(s, x)| s * x).sum();
            prop_assert_eq!(v.rem_euclid(3), c);
        }
    }
}

#[test]
fn half_twist_intermediate_labels() {
    let y = [FreeWord::generator(1), FreeWord::generator(2)];
    let twice = transport_labels(&BraidWord::new(2, vec![1, 1]).unwrap(), &y);
    assert_eq!(twice[0], "x1 x2^-1 x1 x2^-1 x1".parse().unwrap());
    let thrice = transport_labels(&BraidWord::new(2, vec![1, 1, 1]).unwrap(), &y);
    assert_eq!(thrice[0].exponent_sums(2), vec![4, -3]);
}
