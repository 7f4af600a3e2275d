//! Renders a braid closure and a loaded diagram to SVG files.
//! Usage: cargo run --example render_svg -- out_dir

use std::path::PathBuf;

use legcert::braid::BraidWord;
use legcert::diagram::builtin::chekanov_right;
use legcert::diagram::{RenderOptions, rainbow_closure_diagram, render_svg};

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);
    let torus = rainbow_closure_diagram(&BraidWord::torus(3, 5).unwrap()).unwrap();
    for (name, d) in [("torus_3_5", torus), ("chekanov_right", chekanov_right())] {
        let svg = render_svg(&d, &RenderOptions::default()).unwrap();
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, &svg).unwrap();
        println!("wrote {} ({} bytes)", path.display(), svg.len());
    }
}
