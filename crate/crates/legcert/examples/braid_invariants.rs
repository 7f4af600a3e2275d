//! Parses a positive braid and prints tb, genus and the tightness criterion.
//! Usage: cargo run --example braid_invariants -- "p=3;1,2,1,2,1,2,1,2"

use legcert::braid::{BraidWord, tightness_report};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "p=3;1,2,1,2,1,2,1,2".into());
    let b = match BraidWord::parse(&text) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("{text}: {e}");
            std::process::exit(3);
        }
    };
    let inv = tightness_report(&b).expect("positive braid closures have odd tb");
    println!("braid {} ({} strands, {} letters)", b.to_text(), b.strands, b.len());
    println!("tb = {}, Seifert genus = {}", inv.tb, inv.seifert_genus);
    println!(
        "tb = 2 g_s - 1: {}; surgery tight: {}",
        inv.slice_genus_equal, inv.tight_certified
    );
    for link in ["p=2;1,1", "p=3;1,2,2"] {
        println!("{link}: {}", BraidWord::parse(link).unwrap_err());
    }
}
