use num_complex::Complex64;
use proptest::prelude::*;

use braid3::analytic_blocks::{
    covering_f, covering_f1, covering_f2, glue_word, seeded_glue_words, slalom_extremal_exact, BlockGeometry,
    FmEvaluator, QuadratureSpec,
};
use braid3::braid_words::{
    cyclic_reduce, parse_braid, parse_pure_word, script_l_word, BraidSymbol, BraidWord, FreeWord, Generator,
    SyllableKind,
};
use braid3::invariant_bounds::{class_bounds_thm2, consistency_check, Verdict};
use braid3::matrix_oracles::{burau_image, entropy_exact, psl2_image, LaurentMat2};
use braid3::normal_form::{denormalize, normalize, theta};

fn gen() -> impl Strategy<Value = Generator> {
    prop_oneof![Just(Generator::One), Just(Generator::Two)]
}

fn free_word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((gen(), -4i64..=4), 0..=max_len).prop_map(FreeWord::from_pairs)
}

fn braid_word(max_len: usize) -> impl Strategy<Value = BraidWord> {
    let sym = prop_oneof![Just(BraidSymbol::S1), Just(BraidSymbol::S2), Just(BraidSymbol::Delta)];
    prop::collection::vec((sym, -3i64..=3), 0..=max_len).prop_map(BraidWord::from_letters)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn inverse_cancels(w in free_word(10)) {
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
    }

    #[test]
    fn render_parses_back(w in free_word(10)) {
        if !w.is_empty() {
            prop_assert_eq!(parse_pure_word(&w.render()).unwrap(), w);
        }
    }

    #[test]
    fn reduction_is_idempotent(w in free_word(10)) {
        let once = FreeWord::from_pairs(w.blocks().iter().map(|b| (b.gen, b.exp)));
        prop_assert_eq!(once, w.clone());
        let cw = cyclic_reduce(&w);
        prop_assert_eq!(cyclic_reduce(&cw.as_word()), cw);
    }

    #[test]
    fn conjugation_preserves_class(w in free_word(8), u in free_word(4)) {
        let conj = u.concat(&w).concat(&u.inverse());
        prop_assert_eq!(cyclic_reduce(&conj), cyclic_reduce(&w));
        prop_assert_eq!(psl2_image(&conj).trace(), psl2_image(&w).trace());
    }

    #[test]
    fn rotation_preserves_class(w in free_word(8), k in 0usize..8) {
        let cw = cyclic_reduce(&w);
        if !cw.is_empty() {
            let rotated = cw.rotation(k % cw.blocks().len());
            let other = cyclic_reduce(&rotated);
            prop_assert_eq!(&other, &cw);
            let (a, b) = (class_bounds_thm2(&cw).unwrap(), class_bounds_thm2(&other).unwrap());
            prop_assert_eq!(a.l, b.l);
        }
    }

    #[test]
    fn class_bounds_hold(w in free_word(8)) {
        let rep = class_bounds_thm2(&cyclic_reduce(&w)).unwrap();
        prop_assert_eq!(consistency_check(&rep), Verdict::Pass);
    }

    #[test]
    fn separated_blocks_add_to_l(d1 in 1i64..6, d2 in 1i64..6) {
        // a1^{d1} a2^{-d2}: lone blocks of opposite sign are separate syllables
        let w = FreeWord::from_pairs([(Generator::One, d1), (Generator::Two, -d2)]);
        let want = ((4 * d1 - 1) as f64).ln() + ((4 * d2 - 1) as f64).ln();
        prop_assert!((script_l_word(&w) - want).abs() < 1e-12);
    }

    #[test]
    fn normal_form_round_trip(b in braid_word(12)) {
        let nf = normalize(&b);
        prop_assert_eq!(burau_image(&denormalize(&nf)), burau_image(&b));
        let delta = parse_braid("d").unwrap();
        prop_assert_eq!(normalize(&b.concat(&delta)), nf.shift_delta(1));
        let full = parse_braid("d^2").unwrap();
        prop_assert_eq!(normalize(&full.concat(&b)), nf.shift_delta(2));
    }

    #[test]
    fn theta_ignores_full_twists(b in braid_word(8), k in -3i64..=3) {
        let nf = normalize(&b);
        let shifted = nf.shift_delta(2 * k);
        match (theta(&nf), theta(&shifted)) {
            (Ok(a), Ok(c)) => prop_assert_eq!(a, c),
            (a, c) => prop_assert_eq!(a.is_ok(), c.is_ok()),
        }
    }

    #[test]
    fn burau_inverse(b in braid_word(8)) {
        prop_assert_eq!(burau_image(&b.concat(&b.inverse())), LaurentMat2::identity());
        prop_assert_eq!(burau_image(&b.inverse().concat(&b)), LaurentMat2::scalar(1, 0));
    }

    #[test]
    fn entropy_is_inverse_invariant(w in free_word(8)) {
        prop_assert_eq!(entropy_exact(&w), entropy_exact(&w.inverse()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn fm_is_odd(m in 2u32..8, x in 0.05f64..3.0, y in -10.0f64..10.0, flip in any::<bool>()) {
        let ev = FmEvaluator::new(m as f64).unwrap();
        let z = Complex64::new(if flip { -x } else { x }, y);
        let spec = QuadratureSpec::default();
        let a = ev.value(z, &spec).unwrap();
        let b = ev.value(-z, &spec).unwrap();
        prop_assert!((a + b).norm() < 1e-10 * (1.0 + a.norm()), "{} {} {}", z, a, b);
    }

    #[test]
    fn fm_conjugate_symmetric(m in 2u32..8, x in 0.05f64..3.0, y in -10.0f64..10.0) {
        let ev = FmEvaluator::new(m as f64).unwrap();
        let z = Complex64::new(-x, y);
        let spec = QuadratureSpec::default();
        let a = ev.value(z, &spec).unwrap();
        let b = ev.value(z.conj(), &spec).unwrap();
        prop_assert!((a.conj() - b).norm() < 1e-10 * (1.0 + a.norm()));
    }

    #[test]
    fn covering_identities(x in -3.0f64..3.0, y in 0.01f64..0.99, k in -3i32..3) {
        let z = Complex64::new(x, y + 2.0 * k as f64);
        let i = Complex64::i();
        let f = covering_f(z).unwrap();
        let close = |a: Complex64, b: Complex64| (a - b).norm() <= 1e-9 * (1.0 + a.norm());
        prop_assert!(close(covering_f(z + i).unwrap(), f));
        prop_assert!(close(covering_f2(z + i).unwrap(), covering_f2(z).unwrap().inv()));
        let w = covering_f2(z).unwrap();
        prop_assert!(close(covering_f1(w.inv()).unwrap(), covering_f1(w).unwrap()));
        prop_assert!((f - 1.0).norm() > 0.0 && (f + 1.0).norm() > 0.0);
    }

    #[test]
    fn slalom_is_increasing(m in 0.2f64..60.0, dm in 0.01f64..5.0) {
        let a = slalom_extremal_exact(m).unwrap();
        let b = slalom_extremal_exact(m + dm).unwrap();
        prop_assert!(a < b);
    }

    #[test]
    fn anchors_are_normalized(d in 2u64..12, form2 in any::<bool>()) {
        let kind = if form2 { SyllableKind::Form2 } else { SyllableKind::Form1 };
        let g = BlockGeometry::for_degree(kind, d).unwrap();
        let (dm, dp) = g.anchor_derivatives();
        let (v_minus, d_minus) = g.eval(g.anchor_minus).unwrap();
        let (v_plus, d_plus) = g.eval(g.anchor_plus).unwrap();
        prop_assert!((d_minus - dm).norm() < 1e-10, "{:?} {} {}", g.kind, d_minus, dm);
        prop_assert!((d_plus - dp).norm() < 1e-10, "{:?} {} {}", g.kind, d_plus, dp);
        // anchors land on the imaginary axis
        prop_assert!(v_minus.re.abs() < 1e-10 && v_plus.re.abs() < 1e-10);
        prop_assert!(v_minus.im < 0.0 || v_plus.im < 0.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn dilatation_matches_sup(seed in any::<u64>()) {
        for w in seeded_glue_words(seed, 2) {
            let a = glue_word(&w, 1.0 / 90.0).unwrap();
            let mu = a.sup_mu;
            prop_assert!((a.qc_dilatation - (1.0 + mu) / (1.0 - mu)).abs() < 1e-12);
            prop_assert!((a.sup_mu - a.sup_mu_analytic).abs() < 1e-6);
            prop_assert!(a.passed && (a.margin > 0.0) == a.passed);
        }
    }
}
