//! Corpus shared by several test targets.
#![allow(dead_code)]

pub mod geometric;

use legcert::braid::BraidWord;
use legcert::diagram::{CrossingKind, LagrangianDiagram, rainbow_closure_diagram};

/// Coprime (p, q) with 2 <= p < q <= 6.
pub fn torus_range() -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for p in 2..=6usize {
        for qq in p + 1..=6usize {
            if (1..=p).filter(|k| p % k == 0 && qq % k == 0).count() == 1 {
                v.push((p, qq));
            }
        }
    }
    v
}

pub fn torus(p: usize, qq: usize) -> LagrangianDiagram {
    rainbow_closure_diagram(&BraidWord::torus(p, qq).unwrap()).unwrap()
}

/// (σ1⋯σ_{p-1})^q (σ2⋯σ_{p-1})^r, or None when it closes to a link.
pub fn twisted_braid(p: usize, qq: usize, r: usize) -> Option<BraidWord> {
    BraidWord::twisted(p, &[(p, qq), (p - 1, r)]).ok()
}

pub fn twisted(p: usize, qq: usize, r: usize) -> Option<LagrangianDiagram> {
    Some(rainbow_closure_diagram(&twisted_braid(p, qq, r)?).unwrap())
}

/// The full grid {3,4,5} x {2,3,4} x {1,2,3}, knots and links alike.
pub fn grid() -> Vec<(usize, usize, usize)> {
    let mut v = Vec::new();
    for p in 3..=5 {
        for qq in 2..=4 {
            for r in 1..=3 {
                v.push((p, qq, r));
            }
        }
    }
    v
}

pub fn grid_knots() -> Vec<(usize, usize, usize)> {
    grid()
        .into_iter()
        .filter(|&(p, qq, r)| twisted_braid(p, qq, r).is_some())
        .collect()
}

pub fn braid_chords(d: &LagrangianDiagram) -> Vec<usize> {
    (0..d.crossings().len())
        .filter(|&c| matches!(d.crossings()[c].kind, CrossingKind::Braid { .. }))
        .collect()
}

/// Row-1 faces plus the row-2 faces to the right of the last full block.
pub fn first_row_faces(d: &LagrangianDiagram, p: usize, qq: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for f in d.bounded_faces() {
        let l = &d.faces()[f].label;
        let Some(rest) = l.strip_prefix('R') else { continue };
        let Some((i, j)) = rest.split_once(',') else { continue };
        let (i, j): (usize, usize) = (i.parse().unwrap(), j.parse().unwrap());
        if i == 1 {
            out.push(f);
        } else if i == 2 {
            let right = d
                .crossings()
                .iter()
                .find_map(|c| match c.kind {
                    CrossingKind::Braid { row: 2, col, letter } if col == j + 1 => Some(letter),
                    _ => None,
                })
                .unwrap();
            if right >= qq * (p - 1) {
                out.push(f);
            }
        }
    }
    out
}
