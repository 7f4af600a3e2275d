use legcert::braid::BraidWord;
use legcert::diagram::builtin::{chekanov_left, chekanov_right};
use legcert::diagram::{LagrangianDiagram, rainbow_closure_diagram};
use legcert::grading::*;
use legcert::rational::{Q, q, qf};

fn torus(p: usize, qq: usize) -> LagrangianDiagram {
    rainbow_closure_diagram(&BraidWord::torus(p, qq).unwrap()).unwrap()
}

fn vec_of(d: &LagrangianDiagram, terms: &[(&str, Q)]) -> GradingVector {
    let mut g = GradingVector::zero(d.faces().len());
    for (l, v) in terms {
        g.0[d.face_by_label(l).unwrap()] = v.clone();
    }
    g
}

fn h(n: i64) -> Q {
    qf(n, 2)
}

fn torus_range() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for p in 2..=6usize {
        for qq in p + 1..=6usize {
            if (1..=p).filter(|k| p % k == 0 && qq % k == 0).count() == 1 {
                v.push((p, qq));
            }
        }
    }
    v
}

#[test]
fn torus_meridian_closed_form() {
    for (p, qq) in torus_range() {
        let d = torus(p, qq);
        let mu = meridian_grading(&d).unwrap();
        let den = ((p - 1) * (qq - 1)) as i64;
        let mut expect = Vec::new();
        for i in 1..=p {
            expect.push((format!("A{i}"), qf(-((p + 1 - i) as i64), den)));
            expect.push((format!("B{i}"), qf(-(p as i64 - 1 - i as i64), den)));
            if i < p {
                for j in 1..qq {
                    expect.push((format!("R{i},{j}"), qf(-((p - i) as i64), den)));
                }
            }
        }
        let terms: Vec<(&str, Q)> = expect.iter().map(|(l, v)| (l.as_str(), v.clone())).collect();
        assert_eq!(mu, vec_of(&d, &terms), "({p},{qq})");
    }
}

#[test]
fn trefoil_meridian() {
    let d = torus(2, 3);
    let mu = meridian_grading(&d).unwrap();
    let expect = vec_of(
        &d,
        &[
            ("R1,1", h(-1)),
            ("R1,2", h(-1)),
            ("A1", q(-1)),
            ("A2", h(-1)),
            ("B2", h(1)),
        ],
    );
    assert_eq!(mu, expect);
}

#[test]
fn alpha1_is_b1_with_both_cappings() {
    for (p, qq) in torus_range() {
        let d = torus(p, qq);
        let a1 = d.crossing_by_label("α1").unwrap();
        let b1 = vec_of(&d, &[("B1", q(1))]);
        assert_eq!(word_grading_with(&d, &[a1], Capping::Positive).unwrap(), b1);
        assert_eq!(word_grading_with(&d, &[a1], Capping::Negative).unwrap(), b1);
        let lp = pushout_loop(&d, &[a1], Capping::Negative).unwrap();
        assert_eq!(linking_number(&d, &lp), 0);
        let w = loop_winding(&d, &lp);
        for f in d.bounded_faces() {
            assert_eq!(w[f], if d.faces()[f].label == "B1" { 1 } else { 0 });
        }
    }
}

#[test]
fn longitude_representative() {
    for d in [torus(2, 3), torus(3, 5), chekanov_left()] {
        let lp = PushOutLoop::longitude(&d);
        assert_eq!(linking_number(&d, &lp), d.writhe());
        assert_eq!(loop_winding(&d, &lp), d.winding_numbers().unwrap());
    }
}

#[test]
fn left_chekanov_vectors() {
    let d = chekanov_left();
    let c = |l: &str| d.crossing_by_label(l).unwrap();
    let mu = meridian_grading(&d).unwrap();
    let mu_expected = vec_of(
        &d,
        &[
            ("A1", h(1)),
            ("A2", h(-1)),
            ("A3", h(-1)),
            ("A4", h(1)),
            ("B2", h(-1)),
            ("B3", h(1)),
            ("B5", h(1)),
            ("B6", h(-1)),
        ],
    );
    assert_eq!(mu, mu_expected);
    let a8 = vec_of(
        &d,
        &[
            ("A1", h(-1)),
            ("A2", h(-1)),
            ("A3", h(1)),
            ("A4", h(1)),
            ("B1", q(1)),
            ("B2", h(1)),
            ("B3", h(1)),
            ("B5", h(-1)),
            ("B6", h(-1)),
        ],
    );
    let a9 = vec_of(
        &d,
        &[
            ("A1", h(1)),
            ("A2", h(1)),
            ("A3", h(-1)),
            ("A4", h(1)),
            ("B1", q(-1)),
            ("B2", h(-1)),
            ("B3", h(-1)),
            ("B5", h(1)),
            ("B6", h(-1)),
        ],
    );
    assert_eq!(chord_grading(&d, c("a8")).unwrap(), a8);
    assert_eq!(chord_grading(&d, c("a9")).unwrap(), a9);
    assert_eq!(word_grading(&d, &[c("a8"), c("a8")]).unwrap(), &a8 + &a8);
    assert_eq!(word_grading(&d, &[c("a9"), c("a9")]).unwrap(), &a9 + &a9);
    // The product word differs from the sum of its letters by a multiple of I(μ).
    let w89 = word_grading(&d, &[c("a8"), c("a9")]).unwrap();
    let defect = &(&w89 - &a8) - &a9;
    assert!(defect == mu || defect == -&mu);
    let a4 = chord_grading(&d, c("a4")).unwrap();
    assert_eq!(a4, vec_of(&d, &[("A4", q(1))]));
}

#[test]
fn capping_independence() {
    let diagrams = vec![
        torus(2, 3),
        torus(3, 4),
        torus(2, 5),
        chekanov_left(),
        chekanov_right(),
        rainbow_closure_diagram(&BraidWord::twisted(4, &[(4, 3), (3, 3)]).unwrap()).unwrap(),
    ];
    for d in diagrams {
        let n = d.crossings().len();
        for a in 0..n {
            let w = [a];
            assert_eq!(
                word_grading_with(&d, &w, Capping::Positive).unwrap(),
                word_grading_with(&d, &w, Capping::Negative).unwrap()
            );
            for b in 0..n {
                let w = [a, b, (a + b) % n];
                assert_eq!(
                    word_grading_with(&d, &w, Capping::Positive).unwrap(),
                    word_grading_with(&d, &w, Capping::Negative).unwrap()
                );
            }
        }
    }
}

#[test]
fn difference_is_linear() {
    let d = chekanov_left();
    let c = |l: &str| d.crossing_by_label(l).unwrap();
    let diff = difference_grading(&d, &[c("a4")], &[vec![c("a8")], vec![c("a9")]]).unwrap();
    let direct = &(&chord_grading(&d, c("a4")).unwrap() - &chord_grading(&d, c("a8")).unwrap())
        - &chord_grading(&d, c("a9")).unwrap();
    assert_eq!(diff, direct);
    let t = torus(3, 4);
    let a1 = t.crossing_by_label("α1").unwrap();
    assert_eq!(difference_grading(&t, &[a1], &[]).unwrap(), vec_of(&t, &[("B1", q(1))]));
}

#[test]
fn label_map_round_trip() {
    let d = chekanov_left();
    let g = chord_grading(&d, d.crossing_by_label("a8").unwrap()).unwrap();
    let m = g.to_label_map(&d);
    assert_eq!(m.get("A1").unwrap(), "-1/2");
    assert_eq!(m.get("B1").unwrap(), "1");
    assert_eq!(GradingVector::from_label_map(&d, &m).unwrap(), g);
}

#[test]
fn tb_minus_one_rejected() {
    let d = rainbow_closure_diagram(&legcert::braid::validate_braid(&[], 1).unwrap()).unwrap();
    assert_eq!(meridian_grading(&d).unwrap_err(), GradingError::TbMinusOne);
}
