//! Intersection gradings: meridian and chord vectors on a torus knot and on
//! the left 5_2, including a product word.

use legcert::braid::BraidWord;
use legcert::diagram::builtin::chekanov_left;
use legcert::diagram::rainbow_closure_diagram;
use legcert::grading::{chord_grading, meridian_grading, parse_word, word_grading};

fn main() {
    let d = rainbow_closure_diagram(&BraidWord::torus(2, 5).unwrap()).unwrap();
    println!("T(2,5)  I(mu) = {}", meridian_grading(&d).unwrap().display(&d));
    for c in 0..d.crossings().len() {
        println!(
            "        I({}) = {}",
            d.crossings()[c].label,
            chord_grading(&d, c).unwrap().display(&d)
        );
    }
    let d = chekanov_left();
    println!("5_2     I(mu) = {}", meridian_grading(&d).unwrap().display(&d));
    for w in ["a8", "a9", "a8 a9", "a8 a8", "a9 a9"] {
        let g = word_grading(&d, &parse_word(&d, w).unwrap()).unwrap();
        println!("        I({w}) = {}", g.display(&d));
    }
}
