use legcert::braid::{BraidWord, validate_braid};
use legcert::diagram::builtin::chekanov_left;
use legcert::diagram::{CrossingKind, LagrangianDiagram, rainbow_closure_diagram};
use legcert::index::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn torus(p: usize, q: usize) -> LagrangianDiagram {
    rainbow_closure_diagram(&BraidWord::torus(p, q).unwrap()).unwrap()
}

fn is_braid(d: &LagrangianDiagram, c: usize) -> bool {
    matches!(d.crossings()[c].kind, CrossingKind::Braid { .. })
}

#[test]
fn every_pair_has_quarter_or_three_quarter_turn() {
    for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)] {
        let d = torus(p, q);
        let n = d.crossings().len();
        for i in 0..n {
            for j in 0..n {
                let r = rotation_number(&d, i, j).unwrap();
                if is_braid(&d, i) {
                    assert_eq!((r.theta_quarters, r.rot), (1, 0));
                    assert_eq!((r.type1, r.type2), (1, r.type3));
                } else {
                    assert_eq!((r.theta_quarters, r.rot), (3, 1));
                    assert_eq!((r.type1, r.type3), (0, r.type2 + 1));
                }
            }
        }
    }
}

#[test]
fn braid_words_have_index_equal_to_length() {
    let d = torus(2, 3);
    let braid: Vec<usize> = (0..d.crossings().len()).filter(|&c| is_braid(&d, c)).collect();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..4 {
        words = words
            .iter()
            .flat_map(|w| braid.iter().map(move |&c| [w.clone(), vec![c]].concat()))
            .collect();
        for w in &words {
            assert_eq!(cz_index(&d, w).unwrap(), w.len() as i64);
        }
    }
}

#[test]
fn alpha_alone_has_index_two() {
    for (p, q) in [(2, 3), (3, 4), (2, 7)] {
        let d = torus(p, q);
        let a1 = d.crossing_by_label("α1").unwrap();
        assert_eq!(cz_index(&d, &[a1]).unwrap(), 2);
        assert_eq!(degree_lower_bound(&d, &[a1]).unwrap(), 1);
    }
}

#[test]
fn policies() {
    assert_eq!(degree_zero_generators(&torus(2, 5)), GeneratorPolicy::SingleChord);
    assert_eq!(degree_zero_generators(&chekanov_left()), GeneratorPolicy::ActionFilter);
    assert_eq!(
        degree_zero_generators(&torus(2, 5).without_braid_flag()),
        GeneratorPolicy::ActionFilter
    );
    assert_eq!(cz_index(&chekanov_left(), &[0]), Err(IndexError::NotBraidClosure));
    assert_eq!(
        rotation_number(&torus(2, 3), 0, 99),
        Err(IndexError::UnknownCrossing(99))
    );
}

fn random_knot_braid(rng: &mut ChaCha8Rng) -> BraidWord {
    loop {
        let p = rng.gen_range(2..=5i64);
        let len = rng.gen_range(1..=12);
        let letters: Vec<i64> = (0..len).map(|_| rng.gen_range(1..p)).collect();
        if let Ok(b) = validate_braid(&letters, p) {
            return b;
        }
    }
}

#[test]
fn random_words_on_random_positive_braids() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 1000 {
        let d = rainbow_closure_diagram(&random_knot_braid(&mut rng)).unwrap();
        for _ in 0..20 {
            let len = rng.gen_range(1..=6);
            let w: Vec<usize> = (0..len).map(|_| rng.gen_range(0..d.crossings().len())).collect();
            let cz = cz_index(&d, &w).unwrap();
            assert!(cz >= w.len() as i64);
            let alphas = w.iter().filter(|&&c| !is_braid(&d, c)).count() as i64;
            assert_eq!(cz, w.len() as i64 + alphas);
            for k in 0..w.len() {
                let r = rotation_number(&d, w[k], w[(k + 1) % w.len()]).unwrap();
                assert!(r.rot == 0 || r.rot == 1);
                assert!(r.theta_quarters == 1 || r.theta_quarters == 3);
                let rotated = [&w[k..], &w[..k]].concat();
                assert_eq!(cz_index(&d, &rotated).unwrap(), cz);
            }
            checked += 1;
        }
    }
}
