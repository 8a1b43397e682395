//! Randomized invariants.

mod common;

use common::{oracle_mul, random_compact, random_non_split, random_split, rng};
use khcurves::algebra::{Element, Vertex, WordKind};
use khcurves::complex::{cone_h, gauss_reduce, shift_complex, validate_complex, ComplexB};
use khcurves::curve::{
    apply_to_slope, compile, delta, mcg_apply, normalize_slope, CurveComponent, Family, Multicurve, Slope,
};
use khcurves::pairing::{build_mor_complex, mor_homology};
use proptest::prelude::*;

fn slope() -> impl Strategy<Value = Slope> {
    (-12i64..=12, 0i64..=12)
        .prop_filter("not 0/0", |&(p, q)| (p, q) != (0, 0))
        .prop_map(|(p, q)| normalize_slope(p, q).unwrap())
}

/// Products of the generators `[[1,1],[0,1]]` and `[[1,0],[1,1]]` and their inverses.
fn sl2() -> impl Strategy<Value = [[i64; 2]; 2]> {
    prop::collection::vec(0usize..4, 0..6).prop_map(|steps| {
        let gens = [[[1, 1], [0, 1]], [[1, -1], [0, 1]], [[1, 0], [1, 1]], [[1, 0], [-1, 1]]];
        let mut m = [[1i64, 0], [0, 1]];
        for s in steps {
            let g = gens[s];
            m = [
                [m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]],
                [m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]],
            ];
        }
        m
    })
}

fn element(v: Vertex, w: Vertex) -> impl Strategy<Value = Element> {
    prop::collection::vec((0u64..=4, any::<bool>()), 0..4).prop_map(move |terms| {
        let mut e = Element::zero(v, w);
        for (k, use_d) in terms {
            let kind = match (v == w, k, use_d) {
                (true, 0, _) => WordKind::Id,
                (true, k, true) => WordKind::D(k),
                (true, k, false) => WordKind::S(2 * k),
                (false, k, _) => WordKind::S(2 * k + 1),
            };
            e.toggle(kind);
        }
        e
    })
}

fn vertex() -> impl Strategy<Value = Vertex> {
    prop_oneof![Just(Vertex::B), Just(Vertex::C)]
}

fn triple() -> impl Strategy<Value = (Element, Element, Element)> {
    (vertex(), vertex(), vertex(), vertex()).prop_flat_map(|(a, b, c, d)| (element(a, b), element(b, c), element(c, d)))
}

proptest! {
    #[test]
    fn delta_is_symmetric(s in slope(), r in slope()) {
        prop_assert_eq!(delta(s, r), delta(r, s));
        prop_assert_eq!(delta(s, s), 0);
    }

    #[test]
    fn mapping_classes_preserve_delta(m in sl2(), s in slope(), r in slope()) {
        let (ms, mr) = (apply_to_slope(&m, s).unwrap(), apply_to_slope(&m, r).unwrap());
        prop_assert_eq!(delta(ms, mr), delta(s, r));
    }

    #[test]
    fn mcg_keeps_kind_and_length(m in sl2(), s in slope(), len in 1u64..4) {
        let c = Multicurve::new(vec![CurveComponent::rational(s, len).unwrap()]);
        let out = mcg_apply(&m, &c).unwrap();
        prop_assert_eq!(out.components[0].kind, c.components[0].kind);
        prop_assert_eq!(out.components[0].length, len);
    }

    #[test]
    fn element_products_match_path_model((a, b, c) in triple()) {
        prop_assert_eq!(a.mul(&b).unwrap(), oracle_mul(&a, &b));
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn random_complexes_are_valid_and_cones_stay_valid(seed in any::<u64>()) {
        let mut r = rng(seed);
        for x in [random_split(&mut r), random_non_split(&mut r)] {
            prop_assert!(validate_complex(&x).is_valid());
            let cone = cone_h(&x);
            prop_assert!(validate_complex(&cone).is_valid());
            prop_assert_eq!(cone.len(), 2 * x.len());
            let red = gauss_reduce(&x);
            prop_assert!(validate_complex(&red).is_valid());
            prop_assert!(red.is_reduced());
        }
    }

    #[test]
    fn mor_complex_squares_to_zero(seed in any::<u64>(), cap in 0u64..12) {
        let mut r = rng(seed);
        let x = random_compact(&mut r);
        for arc in [Family::A0, Family::AInf, Family::AlphaMinusN(2)] {
            let a = compile(arc).unwrap();
            prop_assert!(build_mor_complex(&a, &x, cap).d_squared_zero());
            prop_assert!(build_mor_complex(&x, &a, cap).d_squared_zero());
        }
    }

    #[test]
    fn shifts_move_the_table(seed in any::<u64>(), dq in -6i64..=6, dh in -3i64..=3) {
        let mut r = rng(seed);
        let x = random_compact(&mut r);
        let a = compile(Family::AInf).unwrap();
        let base = mor_homology(&a, &x).unwrap();
        prop_assert_eq!(mor_homology(&a, &shift_complex(&x, dq, dh)).unwrap(), base.shifted(dq, dh));
        prop_assert_eq!(mor_homology(&shift_complex(&a, dq, dh), &x).unwrap(), base.shifted(-dq, -dh));
    }

    #[test]
    fn json_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let x = random_non_split(&mut r);
        let back = ComplexB::from_json_str(&x.to_json_string()).unwrap();
        prop_assert_eq!(back, x);
    }
}
