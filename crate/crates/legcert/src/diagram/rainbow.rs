//! Rainbow closure of a positive braid.
//!
//! Braid crossings use slots NE=0, NW=1, SW=2, SE=3 with the descending strand
//! (NW to SE) over. Each rainbow crossing α_l receives level l from the braid at
//! slot 2, sends it into its curl at slot 0, takes it back at slot 3 and leaves
//! along the rainbow arc at slot 1, which re-enters the braid at level l.

use super::{
    CrossingKind, DiagramError, Edge, EdgeKind, EdgeSide, End, LagrangianDiagram, RawCrossing, RawDiagram, Side,
};
use crate::braid::BraidWord;

/// Builds the Lagrangian projection of the rainbow closure of `b`.
pub fn rainbow_closure_diagram(b: &BraidWord) -> Result<LagrangianDiagram, DiagramError> {
    let p = b.strands;
    let w = b.letters.len();
    let alpha = |l: usize| w + l - 1;

    let mut crossings = Vec::with_capacity(w + p);
    let mut row_count = vec![0usize; p];
    for (pos, &i) in b.letters.iter().enumerate() {
        row_count[i - 1] += 1;
        let col = row_count[i - 1];
        crossings.push(RawCrossing {
            id: format!("r{i}_{col}"),
            label: format!("r{i},{col}"),
            over_parity: 1,
            declared_sign: Some(1),
            kind: CrossingKind::Braid {
                row: i,
                col,
                letter: pos,
            },
        });
    }
    for l in 1..=p {
        crossings.push(RawCrossing {
            id: format!("alpha{l}"),
            label: format!("α{l}"),
            over_parity: 1,
            declared_sign: Some(-1),
            kind: CrossingKind::Rainbow { level: l },
        });
    }

    let mut edges: Vec<Edge> = Vec::with_capacity(2 * (w + p));
    let push = |tail: End, head: End, kind: EdgeKind, edges: &mut Vec<Edge>| {
        let id = format!("e{}", edges.len() + 1);
        edges.push(Edge { id, tail, head, kind });
    };
    let mut last: Vec<(End, EdgeKind)> = (1..=p)
        .map(|l| (End::new(alpha(l), 1), EdgeKind::Arc { level: l }))
        .collect();
    for (c, &i) in b.letters.iter().enumerate() {
        let (t, k) = last[i - 1];
        push(t, End::new(c, 1), k, &mut edges);
        let (t, k) = last[i];
        push(t, End::new(c, 2), k, &mut edges);
        last[i - 1] = (End::new(c, 0), EdgeKind::Braid { level: i });
        last[i] = (End::new(c, 3), EdgeKind::Braid { level: i + 1 });
    }
    for l in 1..=p {
        let (t, k) = last[l - 1];
        push(t, End::new(alpha(l), 2), k, &mut edges);
        push(
            End::new(alpha(l), 0),
            End::new(alpha(l), 3),
            EdgeKind::Curl { level: l },
            &mut edges,
        );
    }

    let side_of = |s: End, edges: &[Edge]| -> EdgeSide {
        for (e, ed) in edges.iter().enumerate() {
            if ed.tail == s {
                return EdgeSide {
                    edge: e,
                    side: Side::Left,
                };
            }
            if ed.head == s {
                return EdgeSide {
                    edge: e,
                    side: Side::Right,
                };
            }
        }
        unreachable!("every slot carries an edge")
    };
    let mut face_labels = Vec::new();
    for l in 1..=p {
        face_labels.push((side_of(End::new(alpha(l), 3), &edges), format!("B{l}")));
        face_labels.push((side_of(End::new(alpha(l), 1), &edges), format!("A{l}")));
    }
    for (c, rc) in crossings.iter().enumerate() {
        if let CrossingKind::Braid { row, col, .. } = rc.kind {
            if col < row_count[row - 1] {
                face_labels.push((side_of(End::new(c, 3), &edges), format!("R{row},{col}")));
            }
        }
    }
    let unbounded = Some(side_of(End::new(alpha(p), 0), &edges));
    LagrangianDiagram::assemble(RawDiagram {
        crossings,
        edges,
        unbounded,
        unbounded_label: Some("R0".into()),
        face_labels,
        braid: Some(b.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{thurston_bennequin, validate_braid};

    #[test]
    fn trefoil_counts() {
        let b = validate_braid(&[1, 1, 1], 2).unwrap();
        let d = rainbow_closure_diagram(&b).unwrap();
        assert_eq!(d.crossings().len(), 5);
        assert_eq!(d.faces().len(), 7);
        assert_eq!(d.writhe(), thurston_bennequin(&b));
        let mut labels: Vec<_> = d.faces().iter().map(|f| f.label.clone()).collect();
        labels.sort();
        assert_eq!(labels, ["A1", "A2", "B1", "B2", "R0", "R1,1", "R1,2"]);
    }

    #[test]
    fn unknot_builds() {
        let b = validate_braid(&[], 1).unwrap();
        let d = rainbow_closure_diagram(&b).unwrap();
        assert_eq!(d.faces().len(), 3);
        assert_eq!(d.writhe(), -1);
    }
}
