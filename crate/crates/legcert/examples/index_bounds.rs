//! Rotation numbers of chord pairs and Conley-Zehnder lower bounds on a
//! rainbow closure, and the generator policy each diagram gets.

use legcert::braid::BraidWord;
use legcert::diagram::builtin::chekanov_left;
use legcert::diagram::rainbow_closure_diagram;
use legcert::index::{cz_index, degree_zero_generators, rotation_number};

fn main() {
    let d = rainbow_closure_diagram(&BraidWord::torus(2, 3).unwrap()).unwrap();
    let label = |c: usize| d.crossings()[c].label.clone();
    for i in 0..d.crossings().len() {
        for j in 0..d.crossings().len() {
            let r = rotation_number(&d, i, j).unwrap();
            println!(
                "{:>4} -> {:<4} quarter turns {} rot {}",
                label(i),
                label(j),
                r.theta_quarters,
                r.rot
            );
        }
    }
    for w in [vec![0], vec![0, 1], vec![0, 1, 2], vec![3, 3]] {
        let text: Vec<String> = w.iter().map(|&c| label(c)).collect();
        println!(
            "cz({}) = {} (length {})",
            text.join(" "),
            cz_index(&d, &w).unwrap(),
            w.len()
        );
    }
    println!("policy for T(2,3): {}", degree_zero_generators(&d).name());
    println!(
        "policy for the 5_2 diagram: {}",
        degree_zero_generators(&chekanov_left()).name()
    );
}
