//! Morphism homology against an independent dense-matrix oracle and against
//! intersection counts.

mod common;

use common::{oracle_mor_homology, random_compact, rng};
use khcurves::complex::{cone_h, gauss_reduce, shift_complex, ComplexB};
use khcurves::curve::{compile, delta, Family};
use khcurves::pairing::{geometric_dim, mor_homology, BigradedDims};

fn c(f: Family) -> ComplexB {
    compile(f).unwrap()
}

fn table(d: &BigradedDims) -> Vec<((i64, i64), usize)> {
    d.iter().collect()
}

fn oracle_table(x: &ComplexB, y: &ComplexB) -> Vec<((i64, i64), usize)> {
    let (xmin, xmax) = x.q_range().unwrap();
    let (ymin, ymax) = y.q_range().unwrap();
    let top = ymax - xmin;
    let span = (xmax - xmin) + (ymax - ymin) + 12;
    oracle_mor_homology(x, y, top - span, top).into_iter().collect()
}

fn grid_arcs() -> Vec<Family> {
    let mut arcs = vec![Family::A0, Family::AInf, Family::AlphaPlus, Family::AlphaMinus];
    arcs.extend((1..=4).flat_map(|n| [Family::AlphaPlusN(n), Family::AlphaMinusN(n)]));
    arcs.extend((-3..=3).filter(|&n| n != 0).map(Family::AlphaHalf));
    arcs
}

#[test]
fn cross_check_grid_matches_oracle_and_geometry() {
    let targets = [Family::E(1), Family::E(2), Family::E(3), Family::R1Zero, Family::R1Inf];
    for a in grid_arcs() {
        for t in targets {
            let (ga, gt) = (a.component(), t.component());
            let dims = mor_homology(&c(a), &c(t)).unwrap();
            assert_eq!(table(&dims), oracle_table(&c(a), &c(t)), "{a} vs {t}");
            assert_eq!(dims.total() as u64, geometric_dim(&ga, &gt).unwrap(), "{a} vs {t}");
        }
    }
}

#[test]
fn h_cones_of_arcs_pair_by_delta() {
    let arcs = grid_arcs();
    for &a in &arcs {
        for &b in &arcs {
            let (sa, sb) = (a.slope(), b.slope());
            let cone = cone_h(&c(b));
            let dims = mor_homology(&c(a), &cone).unwrap();
            let expected = if sa == sb { 2 } else { delta(sa, sb) as usize };
            assert_eq!(dims.total(), expected, "{a} vs cone({b})");
        }
    }
}

#[test]
fn oracle_agrees_on_random_complexes() {
    let mut r = rng(11);
    for i in 0..25 {
        let x = random_compact(&mut r);
        for arc in [Family::A0, Family::AInf, Family::AlphaPlus, Family::BnQ13] {
            let dims = mor_homology(&c(arc), &x).unwrap();
            assert_eq!(table(&dims), oracle_table(&c(arc), &x), "fixture {i} vs {arc}");
        }
    }
}

#[test]
fn reduction_preserves_pairing_with_every_grid_arc() {
    let mut r = rng(13);
    for i in 0..20 {
        let x = random_compact(&mut r);
        let red = gauss_reduce(&x);
        assert!(red.is_reduced());
        for arc in grid_arcs() {
            assert_eq!(
                mor_homology(&c(arc), &x).unwrap(),
                mor_homology(&c(arc), &red).unwrap(),
                "fixture {i} vs {arc}"
            );
        }
    }
}

#[test]
fn shifting_the_target_shifts_the_table() {
    let x = c(Family::BnQ13);
    let y = c(Family::R1Inf);
    let base = mor_homology(&y, &x).unwrap();
    for (dq, dh) in [(2, 0), (-4, 1), (3, -2)] {
        let moved = mor_homology(&y, &shift_complex(&x, dq, dh)).unwrap();
        assert_eq!(moved, base.shifted(dq, dh));
    }
}

#[test]
fn homotopic_and_arc_pairs_are_rejected() {
    let err = mor_homology(&c(Family::A0), &c(Family::A0)).unwrap_err();
    assert_eq!(err.kind(), "non_stabilizing");
    let err = mor_homology(&c(Family::A0), &c(Family::AInf)).unwrap_err();
    assert_eq!(err.kind(), "non_stabilizing");
}
