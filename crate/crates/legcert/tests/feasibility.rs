use legcert::braid::BraidWord;
use legcert::diagram::builtin::chekanov_left;
use legcert::diagram::{CrossingKind, LagrangianDiagram, rainbow_closure_diagram};
use legcert::feasibility::*;
use legcert::rational::{Q, q};
use num_traits::{Signed, Zero};

fn torus(p: usize, qq: usize) -> LagrangianDiagram {
    rainbow_closure_diagram(&BraidWord::torus(p, qq).unwrap()).unwrap()
}

fn braid_chords(d: &LagrangianDiagram) -> Vec<Vec<usize>> {
    (0..d.crossings().len())
        .filter(|&c| matches!(d.crossings()[c].kind, CrossingKind::Braid { .. }))
        .map(|c| vec![c])
        .collect()
}

fn assert_certified(sys: &FeasibilitySystem, v: &FeasibilityVerdict) {
    assert_eq!(v.kind, VerdictKind::OnlyTrivial);
    for j in 0..sys.cols() {
        assert_eq!(v.maxima[j], Maximum::Finite(Q::zero()));
        assert!(sys.check_dual(j, v.duals[j].as_ref().unwrap()), "dual for column {j}");
    }
}

#[test]
fn trefoil_system_shape_and_verdict() {
    let d = torus(2, 3);
    let a1 = d.crossing_by_label("α1").unwrap();
    let sys = build_system(&d, &[a1], &braid_chords(&d)).unwrap();
    assert_eq!(sys.rows.len(), 6);
    assert_eq!(sys.cols(), 3);
    let b1 = d.face_by_label("B1").unwrap();
    for (r, &f) in sys.rows.iter().enumerate() {
        assert_eq!(sys.rhs[r], if f == b1 { q(1) } else { q(0) });
    }
    let v = only_trivial(&sys);
    assert_certified(&sys, &v);
    let iv = integer_oracle(&sys, 10).unwrap();
    assert_eq!(iv.kind, VerdictKind::OnlyTrivial);
}

#[test]
fn torus_systems_only_trivial() {
    for (p, qq) in [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)] {
        let d = torus(p, qq);
        let a1 = d.crossing_by_label("α1").unwrap();
        let sys = build_system(&d, &[a1], &braid_chords(&d)).unwrap();
        assert_certified(&sys, &only_trivial(&sys));
    }
}

#[test]
fn zero_column_is_witness() {
    let d = torus(2, 3);
    let a1 = d.crossing_by_label("α1").unwrap();
    let mut sys = build_system(&d, &[a1], &braid_chords(&d)).unwrap();
    for row in sys.matrix.iter_mut() {
        row.push(Q::zero());
    }
    sys.variables.push(vec![a1]);
    let v = only_trivial(&sys);
    assert_eq!(v.kind, VerdictKind::Witness);
    assert_eq!(v.maxima[3], Maximum::Unbounded);
    assert!(sys.check_witness(v.witness.as_ref().unwrap()));
    let iv = integer_oracle(&sys, 1).unwrap();
    assert_eq!(iv.kind, VerdictKind::Witness);
}

#[test]
fn empty_candidates() {
    let d = torus(2, 3);
    let a1 = d.crossing_by_label("α1").unwrap();
    let sys = build_system(&d, &[a1], &[]).unwrap();
    assert_eq!(sys.cols(), 0);
    assert_eq!(only_trivial(&sys).kind, VerdictKind::OnlyTrivial);
}

#[test]
fn chekanov_five_candidates() {
    let d = chekanov_left();
    let c = |l: &str| d.crossing_by_label(l).unwrap();
    let (a4, a8, a9) = (c("a4"), c("a8"), c("a9"));
    let cands = vec![vec![a8], vec![a9], vec![a8, a8], vec![a9, a9], vec![a8, a9]];
    let sys = build_system(&d, &[a4], &cands).unwrap();
    assert_eq!((sys.rows.len(), sys.cols()), (10, 5));
    // Each column has a positive entry on a face other than A4.
    let a4f = d.face_by_label("A4").unwrap();
    for k in 0..5 {
        assert!(
            sys.rows
                .iter()
                .enumerate()
                .any(|(r, &f)| f != a4f && sys.matrix[r][k].is_positive())
        );
    }
    // The product q(a8) q(a9) survives: x8 = x9 = 1 leaves B6 >= 0.
    let x = vec![q(1), q(1), q(0), q(0), q(0)];
    assert!(sys.check_witness(&x));
    let v = only_trivial(&sys);
    assert_eq!(v.kind, VerdictKind::Witness);
    assert!(sys.check_witness(v.witness.as_ref().unwrap()));
    let iv = integer_oracle(&sys, 10).unwrap();
    assert_eq!(iv.kind, VerdictKind::Witness);
    assert_eq!(compare_verdicts(&sys, &v, &iv, 10), Agreement::Agree);
}

#[test]
fn column_subsets_are_monotone() {
    let d = torus(3, 4);
    let a1 = d.crossing_by_label("α1").unwrap();
    let mut cands = braid_chords(&d);
    cands.push(vec![d.crossing_by_label("α2").unwrap()]);
    cands.push(vec![d.crossing_by_label("α3").unwrap()]);
    let full = build_system(&d, &[a1], &cands).unwrap();
    let full_v = only_trivial(&full).kind;
    for drop in 0..cands.len() {
        let sub: Vec<Vec<usize>> = cands
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != drop)
            .map(|(_, w)| w.clone())
            .collect();
        let v = only_trivial(&build_system(&d, &[a1], &sub).unwrap()).kind;
        if full_v == VerdictKind::OnlyTrivial {
            assert_eq!(v, VerdictKind::OnlyTrivial);
        }
    }
}

#[test]
fn oracle_budget() {
    let d = torus(2, 3);
    let a1 = d.crossing_by_label("α1").unwrap();
    let sys = build_system(&d, &[a1], &braid_chords(&d)).unwrap();
    let lim = OracleLimits {
        node_budget: 3,
        ..Default::default()
    };
    assert_eq!(
        integer_oracle_with(&sys, 10, lim).unwrap_err(),
        FeasibilityError::BudgetExceeded(3)
    );
    assert!(matches!(
        integer_oracle(&sys, 21),
        Err(FeasibilityError::BoxTooLarge { .. })
    ));
}

fn naive_box(sys: &FeasibilitySystem, b: u64) -> (bool, Option<Vec<u64>>) {
    let n = sys.cols();
    let mut best: Option<Vec<u64>> = None;
    let mut nonzero = false;
    for code in 0..(b + 1).pow(n as u32) {
        let x: Vec<u64> = (0..n).map(|i| code / (b + 1).pow(i as u32) % (b + 1)).collect();
        let xq: Vec<Q> = x.iter().map(|&v| q(v as i64)).collect();
        if sys.slack(&xq).iter().all(|s| !s.is_negative()) {
            nonzero |= x.iter().any(|&v| v > 0);
            let m = best.get_or_insert(vec![0; n]);
            for (m, v) in m.iter_mut().zip(&x) {
                *m = (*m).max(*v);
            }
        }
    }
    (nonzero, best)
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

    #[test]
    fn oracle_matches_naive_enumeration(
        entries in proptest::collection::vec(-3i64..=3, 12),
        den in 1i64..=3,
        rhs in proptest::collection::vec(-1i64..=2, 4),
    ) {
        let matrix: Vec<Vec<Q>> = entries.chunks(3).map(|r| r.iter().map(|&v| legcert::rational::qf(v, den)).collect()).collect();
        let sys = FeasibilitySystem::from_parts(matrix, rhs.iter().map(|&v| q(v)).collect());
        let v = integer_oracle(&sys, 4).unwrap();
        let (nonzero, best) = naive_box(&sys, 4);
        proptest::prop_assert_eq!(v.kind == VerdictKind::Witness, nonzero);
        let expect = match best {
            Some(b) => b.iter().map(|&m| Maximum::Finite(q(m as i64))).collect::<Vec<_>>(),
            None => vec![Maximum::Empty; 3],
        };
        proptest::prop_assert_eq!(v.maxima, expect);
    }
}
