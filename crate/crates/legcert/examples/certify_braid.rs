//! Certifies a braid closure and prints the proof narrative and certificate.
//! Usage: cargo run --example certify_braid -- "p=4;1,2,3,1,2,3,1,2,3,2,3,2,3,2,3"

use legcert::pipeline::{Config, Input, certify, explain};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "p=2;1,1,1".into());
    let input = Input::parse_braid(&text).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    });
    match certify(&input, &Config::default()) {
        Ok(c) => {
            print!("{}", explain(&c));
            println!("certified: {}", c.is_certified());
            print!("{}", c.to_json());
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
