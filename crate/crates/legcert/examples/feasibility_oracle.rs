//! Decides the positivity system exactly, prints dual certificates, and
//! cross-checks with the exhaustive integer oracle.

use legcert::braid::BraidWord;
use legcert::diagram::rainbow_closure_diagram;
use legcert::feasibility::{build_system, compare_verdicts, integer_oracle, only_trivial};
use legcert::grading::parse_word;
use legcert::rational::fmt_q;

fn main() {
    let d = rainbow_closure_diagram(&BraidWord::torus(2, 3).unwrap()).unwrap();
    let target = parse_word(&d, "α1").unwrap();
    let cands: Vec<Vec<usize>> = (0..d.crossings().len())
        .filter(|&c| c != target[0])
        .map(|c| vec![c])
        .collect();
    let sys = build_system(&d, &target, &cands).unwrap();
    let v = only_trivial(&sys);
    println!("{} rows x {} columns: {:?}", sys.matrix.len(), sys.cols(), v.kind);
    for (j, y) in v.duals.iter().enumerate() {
        if let Some(y) = y {
            let y: Vec<String> = y.iter().map(fmt_q).collect();
            println!(
                "  x{j} <= 0 certified by y = ({}), exact check {}",
                y.join(", "),
                sys.check_dual(j, &v.duals[j].clone().unwrap())
            );
        }
    }
    let int = integer_oracle(&sys, 10).unwrap();
    println!(
        "integer oracle over [0,10]^{}: {:?}; {:?}",
        sys.cols(),
        int.kind,
        compare_verdicts(&sys, &v, &int, 10)
    );
}
