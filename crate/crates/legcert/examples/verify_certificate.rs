//! Emits a certificate, re-checks it offline, then shows that a single
//! altered matrix entry is rejected even after resealing the digest.

use legcert::braid::BraidWord;
use legcert::pipeline::{Certificate, Config, Input, certify, verify};

fn main() {
    let input = Input::from_braid(BraidWord::torus(3, 4).unwrap()).unwrap();
    let json = certify(&input, &Config::default()).unwrap().to_json();
    let cert = Certificate::from_json(&json).unwrap();
    println!("original: {:?}", verify(&cert));
    let mut bad = cert.clone();
    bad.system.matrix[0][0] = "7/3".into();
    println!("edited without resealing: {:?}", verify(&bad).failures);
    println!("edited and resealed: {:?}", verify(&bad.seal()).failures);
}
