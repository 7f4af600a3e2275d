//! Corner relations of the left 5_2, an exact area assignment realizing a
//! chord ordering, and a Farkas certificate for a contradictory request.

use legcert::action::{ActionError, RealizeOptions, corner_relations, parse_constraint, realize_areas};
use legcert::diagram::builtin::chekanov_left;
use legcert::rational::fmt_q;

fn main() {
    let d = chekanov_left();
    let sys = corner_relations(&d);
    for r in sys.relations.iter().filter(|r| r.is_nontrivial()) {
        println!("relation: {}", r.display(&d));
    }
    let ordering = [
        "act(a8) == act(a9)",
        "act(a8) < act(a4)",
        "act(a4) << act(a7)",
        "act(a7) << act(a3)",
        "act(a3) << act(a5)",
        "act(a5) << act(a6)",
        "act(a6) << act(a2)",
        "act(a2) << act(a1)",
        "area(B6) << act(a8)",
    ];
    let cons: Vec<_> = ordering.iter().map(|c| parse_constraint(&d, c).unwrap()).collect();
    let a = realize_areas(&d, &sys, &cons, &RealizeOptions::default()).unwrap();
    for (c, x) in d.crossings().iter().enumerate() {
        println!("A({}) = {}", x.label, fmt_q(&a.actions[c]));
    }
    for f in d.bounded_faces() {
        println!("area({}) = {}", d.faces()[f].label, fmt_q(&a.areas[f]));
    }
    let bad = [
        parse_constraint(&d, "act(a4) << act(a8)").unwrap(),
        parse_constraint(&d, "act(a8) << act(a4)").unwrap(),
    ];
    match realize_areas(&d, &sys, &bad, &RealizeOptions::default()) {
        Err(ActionError::Infeasible(cert)) => println!(
            "contradictory ordering refuted; Farkas certificate checks: {}",
            cert.verify()
        ),
        other => println!("unexpected: {other:?}"),
    }
}
