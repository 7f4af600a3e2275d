//! Builds the rainbow closure of a torus braid and lists its crossings,
//! faces with winding numbers, and teardrop disks.

use legcert::braid::BraidWord;
use legcert::diagram::rainbow_closure_diagram;

fn main() {
    let d = rainbow_closure_diagram(&BraidWord::torus(3, 4).unwrap()).unwrap();
    let wind = d.winding_numbers().unwrap();
    println!(
        "T(3,4): {} crossings, {} faces, writhe {}",
        d.crossings().len(),
        d.faces().len(),
        d.writhe()
    );
    for c in d.crossings() {
        println!("  crossing {:>5} sign {:+}", c.label, c.sign);
    }
    for (f, face) in d.faces().iter().enumerate() {
        let corners: Vec<&str> = face
            .corners
            .iter()
            .map(|s| d.crossings()[s.crossing].label.as_str())
            .collect();
        println!(
            "  face {:>5} winding {:>2} corners {}",
            face.label,
            wind[f],
            corners.join(" ")
        );
    }
    for disk in d.rsft_disks() {
        let word: Vec<&str> = disk.word.iter().map(|&c| d.crossings()[c].label.as_str()).collect();
        println!(
            "  disk with only positive punctures: face {} word ({})",
            d.faces()[disk.face].label,
            word.join(" ")
        );
    }
}
