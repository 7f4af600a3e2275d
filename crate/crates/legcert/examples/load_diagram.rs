//! Loads a diagram file, prints its summary and round-trips it through JSON.
//! Usage: cargo run --example load_diagram -- data/chekanov_right.ldg

use legcert::diagram::{load_diagram, load_diagram_json};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/chekanov_left.ldg").into());
    let text = std::fs::read_to_string(&path).expect("readable diagram file");
    let d = match load_diagram(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(3);
        }
    };
    println!(
        "{path}: {} crossings, {} edges, {} faces, tb = {}",
        d.crossings().len(),
        d.edges().len(),
        d.faces().len(),
        d.writhe()
    );
    let json = serde_json::to_string_pretty(&d.to_json_value()).unwrap();
    let back = load_diagram_json(&json).unwrap();
    println!(
        "JSON round trip preserves the labeled structure: {}",
        back.labeled_fingerprint() == d.labeled_fingerprint()
    );
    print!("{}", d.to_text());
}
