use legcert::braid::{BraidWord, thurston_bennequin, validate_braid};
use legcert::diagram::builtin::{chekanov_left, chekanov_right};
use legcert::diagram::{DiagramError, load_diagram, load_diagram_json, rainbow_closure_diagram};

fn coprime(a: usize, b: usize) -> bool {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a == 1
}

fn torus_range() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for p in 2..=6 {
        for q in p + 1..=6 {
            if coprime(p, q) {
                v.push((p, q));
            }
        }
    }
    v
}

#[test]
fn torus_winding_matches_closed_form() {
    for (p, q) in torus_range() {
        let d = rainbow_closure_diagram(&BraidWord::torus(p, q).unwrap()).unwrap();
        assert_eq!(d.faces().len(), d.crossings().len() + 2);
        assert_eq!(d.writhe(), (p * q - p - q) as i64);
        let w = d.winding_numbers().unwrap();
        assert_eq!(w[d.unbounded_face()], 0);
        for i in 1..=p {
            let f = |s: String| d.face_by_label(&s).unwrap();
            assert_eq!(w[f(format!("A{i}"))], (p + 1 - i) as i64);
            assert_eq!(w[f(format!("B{i}"))], p as i64 - 1 - i as i64);
            if i < p {
                for j in 1..q {
                    assert_eq!(w[f(format!("R{i},{j}"))], (p - i) as i64, "({p},{q}) R{i},{j}");
                }
            }
        }
    }
}

#[test]
fn torus_labels_3_5() {
    let d = rainbow_closure_diagram(&BraidWord::torus(3, 5).unwrap()).unwrap();
    for i in 1..=2 {
        for j in 1..=5 {
            assert!(d.crossing_by_label(&format!("r{i},{j}")).is_some());
        }
        for j in 1..=4 {
            assert!(d.face_by_label(&format!("R{i},{j}")).is_some());
        }
    }
    assert!(d.crossing_by_label("α3").is_some());
    assert!(d.crossing_by_label("alpha3").is_some());
}

#[test]
fn trefoil_b2_winding() {
    let d = rainbow_closure_diagram(&validate_braid(&[1, 1, 1], 2).unwrap()).unwrap();
    let w = d.winding_numbers().unwrap();
    assert_eq!(w[d.face_by_label("B2").unwrap()], -1);
}

#[test]
fn writhe_equals_tb_for_assorted_braids() {
    for (letters, p) in [
        (vec![1, 2, 3, 1, 2, 3, 1, 2, 3, 2, 3, 2, 3, 2, 3], 4),
        (vec![1, 2, 1, 2, 1], 3),
        (vec![1, 1, 1, 1, 1], 2),
        (vec![1, 2, 2, 1, 2, 2, 1], 3),
    ] {
        if let Ok(b) = validate_braid(&letters, p) {
            let d = rainbow_closure_diagram(&b).unwrap();
            assert_eq!(d.writhe(), thurston_bennequin(&b));
        }
    }
}

#[test]
fn torus_rsft_disks_include_alpha_teardrops() {
    for (p, q) in torus_range() {
        let d = rainbow_closure_diagram(&BraidWord::torus(p, q).unwrap()).unwrap();
        let disks = d.rsft_disks();
        for l in 1..=p {
            let b = d.face_by_label(&format!("B{l}")).unwrap();
            let a = d.crossing_by_label(&format!("α{l}")).unwrap();
            assert!(disks.iter().any(|k| k.face == b && k.word == vec![a]));
        }
    }
}

#[test]
fn chekanov_diagrams_load() {
    for d in [chekanov_left(), chekanov_right()] {
        assert_eq!(d.crossings().len(), 9);
        assert_eq!(d.faces().len(), 11);
        assert_eq!(d.writhe(), 1);
        let w = d.winding_numbers().unwrap();
        let expect = [
            ("A1", -1),
            ("A2", 1),
            ("A3", 1),
            ("A4", -1),
            ("B1", 0),
            ("B2", 1),
            ("B3", -1),
            ("B4", 0),
            ("B5", -1),
            ("B6", 1),
        ];
        for (l, v) in expect {
            assert_eq!(w[d.face_by_label(l).unwrap()], v, "{l}");
        }
    }
    assert_ne!(
        chekanov_left().labeled_fingerprint(),
        chekanov_right().labeled_fingerprint()
    );
}

#[test]
fn right_chekanov_has_a4_disk() {
    let d = chekanov_right();
    let a4 = d.crossing_by_label("a4").unwrap();
    let f = d.face_by_label("A4").unwrap();
    assert!(d.rsft_disks().iter().any(|k| k.face == f && k.word == vec![a4]));
}

#[test]
fn round_trips() {
    for d in [
        chekanov_left(),
        rainbow_closure_diagram(&BraidWord::torus(3, 4).unwrap()).unwrap(),
    ] {
        let t = load_diagram(&d.to_text()).unwrap();
        assert_eq!(t.labeled_fingerprint(), d.labeled_fingerprint());
        let j = serde_json::to_string(&d.to_json_value()).unwrap();
        let u = load_diagram_json(&j).unwrap();
        assert_eq!(u.labeled_fingerprint(), d.labeled_fingerprint());
        assert_eq!(u.to_text(), t.to_text());
    }
}

#[test]
fn malformed_inputs() {
    let three = "crossing a ends=e1,e2,e3 over=e1,e3 label=a\nedge e1 from=a.0 to=a.1\n";
    assert!(matches!(load_diagram(three), Err(DiagramError::Arity { .. })));
    let no_unbounded: String = legcert::diagram::builtin::CHEKANOV_LEFT
        .lines()
        .filter(|l| !l.starts_with("unbounded"))
        .collect::<Vec<_>>()
        .join("\n");
    assert_eq!(
        load_diagram(&no_unbounded).unwrap_err(),
        DiagramError::UnlabeledUnboundedFace
    );
    let bad_sign = legcert::diagram::builtin::CHEKANOV_LEFT.replace("sign=+1 label=a5", "sign=-1 label=a5");
    assert!(matches!(
        load_diagram(&bad_sign),
        Err(DiagramError::SignMismatch { .. })
    ));
    assert!(matches!(
        load_diagram("bogus line"),
        Err(DiagramError::ParseError { .. })
    ));
    // Two disjoint curls: a 2-component link.
    let link = "crossing a ends=e1,e2,e2,e1 over=0,2\ncrossing b ends=f1,f2,f2,f1 over=0,2\n\
        edge e1 from=a.0 to=a.3\nedge e2 from=a.1 to=a.2\nedge f1 from=b.0 to=b.3\nedge f2 from=b.1 to=b.2\nunbounded e1:L\n";
    assert!(matches!(
        load_diagram(link),
        Err(DiagramError::MultiComponent { components: 2 })
    ));
}
