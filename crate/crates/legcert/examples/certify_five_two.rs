//! Runs the pipeline on both Chekanov 5_2 diagrams with the fixed chord
//! ordering; the positivity system admits a witness, so the run is inconclusive.

use legcert::diagram::builtin::{chekanov_left, chekanov_right};
use legcert::pipeline::{Config, Input, certify, explain, verify};

fn main() {
    let constraints = [
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
    let config = Config {
        constraints: constraints.map(String::from).to_vec(),
        slice_genus: Some(1),
        oracle_box: Some(10),
        ..Config::default()
    };
    for (name, d) in [("left", chekanov_left()), ("right", chekanov_right())] {
        let c = certify(&Input::from_diagram(d), &config).unwrap();
        println!("== {name} 5_2 ==");
        print!("{}", explain(&c));
        println!("verifier: {:?}\n", verify(&c));
    }
}
