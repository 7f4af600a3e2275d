//! Enumerates the chord words whose action lies below the target's bound.

use legcert::action::{
    AreaAssignment, RealizeOptions, complete_length_bound, corner_relations, enumerate_candidates, parse_constraint,
    realize_areas, word_action,
};
use legcert::diagram::builtin::chekanov_left;
use legcert::grading::{parse_word, word_text};
use legcert::rational::fmt_q;

fn main() {
    let d = chekanov_left();
    let sys = corner_relations(&d);
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
    let a: AreaAssignment = realize_areas(&d, &sys, &cons, &RealizeOptions::default()).unwrap();
    let eps = a.min_action() / legcert::rational::q(1000);
    let target = parse_word(&d, "a4").unwrap();
    let bound = complete_length_bound(&a, &target, &eps);
    println!(
        "target a4, A = {}, eps = {}, words longer than {:?} cannot qualify",
        fmt_q(&word_action(&a, &target)),
        fmt_q(&eps),
        bound
    );
    for w in enumerate_candidates(&a, &target, &eps, 8, 1_000_000).unwrap() {
        println!("  ({}) A = {}", word_text(&d, &w), fmt_q(&word_action(&a, &w)));
    }
}
