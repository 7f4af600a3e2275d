//! Lagrangian-projection diagrams as oriented 4-valent planar maps.
//!
//! Each crossing has four slots numbered 0..3 counterclockwise; slots `k` and
//! `k + 2` are joined by a straight strand. Sector `k` of a crossing is the
//! angular region between slots `k` and `k + 1`. Faces are orbits of sectors.

mod format;
mod rainbow;
mod render;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;

pub use format::{DiagramJson, load_diagram, load_diagram_json};
pub use rainbow::rainbow_closure_diagram;
pub use render::{Layout, RenderOptions, layout, render_svg};

/// A slot of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct End {
    pub crossing: usize,
    pub slot: usize,
}

impl End {
    pub fn new(crossing: usize, slot: usize) -> Self {
        End {
            crossing,
            slot: slot % 4,
        }
    }

    /// The slot across the crossing on the same strand.
    pub fn opposite(self) -> Self {
        End::new(self.crossing, self.slot + 2)
    }
}

/// Side of a directed edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// One side of one edge; identifies the face lying there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSide {
    pub edge: usize,
    pub side: Side,
}

/// Structural role of a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    /// The `col`-th occurrence of σ_row; `letter` is its 0-based position in the word.
    Braid {
        row: usize,
        col: usize,
        letter: usize,
    },
    /// The rainbow crossing α_level.
    Rainbow {
        level: usize,
    },
    Generic,
}

/// Structural role of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Runs horizontally through the braid area at `level`.
    Braid {
        level: usize,
    },
    /// The rainbow arc leaving α_level and entering the braid at `level`.
    Arc {
        level: usize,
    },
    /// The curl of α_level.
    Curl {
        level: usize,
    },
    Generic,
}

#[derive(Debug, Clone)]
pub struct Crossing {
    pub id: String,
    pub label: String,
    /// Parity of the over slots: 0 for {0,2}, 1 for {1,3}.
    pub over_parity: usize,
    pub sign: i32,
    /// Edge incident at each slot.
    pub slots: [usize; 4],
    pub kind: CrossingKind,
}

impl Crossing {
    pub fn is_over_slot(&self, slot: usize) -> bool {
        slot % 2 == self.over_parity
    }
}

#[derive(Debug, Clone)]
pub struct Edge {
    pub id: String,
    pub tail: End,
    pub head: End,
    pub kind: EdgeKind,
}

#[derive(Debug, Clone)]
pub struct Face {
    pub label: String,
    /// Corners in boundary order (counterclockwise around the face), as sectors.
    pub corners: Vec<End>,
    /// Boundary edge-sides in the same order.
    pub sides: Vec<EdgeSide>,
}

/// A bounded face all of whose corners are positive punctures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsftDisk {
    pub face: usize,
    pub word: Vec<usize>,
}

/// Winding number of the knot projection around each face.
pub type WindingMap = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("parse error on line {line}: {msg}")]
    ParseError { line: usize, msg: String },
    #[error("crossing {crossing}: {detail}")]
    Arity { crossing: String, detail: String },
    #[error("crossing {0}: each straight strand needs one incoming and one outgoing end")]
    Orientation(String),
    #[error("diagram has {components} components, expected a knot")]
    MultiComponent { components: usize },
    #[error("Euler violation: {crossings} crossings but {faces} faces")]
    EulerViolation { crossings: usize, faces: usize },
    #[error("no face is marked unbounded")]
    UnlabeledUnboundedFace,
    #[error("bounded face next to edge {0} has no label")]
    MissingFaceLabel(String),
    #[error("face carries two labels: {0} and {1}")]
    ConflictingLabels(String, String),
    #[error("label {0} is used twice")]
    DuplicateLabel(String),
    #[error("crossing {crossing}: declared sign {declared} but the diagram implies {computed}")]
    SignMismatch {
        crossing: String,
        declared: i32,
        computed: i32,
    },
    #[error("unknown crossing {0}")]
    UnknownCrossing(String),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("winding propagation disagrees across edge {0}")]
    InconsistentWinding(String),
    #[error("layout failed: {0}")]
    LayoutFailure(String),
    #[error(transparent)]
    Braid(#[from] crate::braid::BraidError),
}

/// Unvalidated diagram data shared by the rainbow builder and the file loaders.
#[derive(Debug, Clone, Default)]
pub(crate) struct RawDiagram {
    pub crossings: Vec<RawCrossing>,
    pub edges: Vec<Edge>,
    pub unbounded: Option<EdgeSide>,
    pub unbounded_label: Option<String>,
    pub face_labels: Vec<(EdgeSide, String)>,
    pub braid: Option<BraidWord>,
}

#[derive(Debug, Clone)]
pub(crate) struct RawCrossing {
    pub id: String,
    pub label: String,
    pub over_parity: usize,
    pub declared_sign: Option<i32>,
    pub kind: CrossingKind,
}

#[derive(Debug, Clone)]
pub struct LagrangianDiagram {
    crossings: Vec<Crossing>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    unbounded: usize,
    sector_face: Vec<[usize; 4]>,
    knot_order: Vec<usize>,
    edge_pos: Vec<usize>,
    braid: Option<BraidWord>,
}

impl LagrangianDiagram {
    pub(crate) fn assemble(raw: RawDiagram) -> Result<Self, DiagramError> {
        let n = raw.crossings.len();
        let cname = |c: usize| raw.crossings[c].id.clone();
        let mut slot_edge: Vec<[Option<(usize, bool)>; 4]> = vec![[None; 4]; n];
        for (ei, e) in raw.edges.iter().enumerate() {
            for (end, is_tail) in [(e.tail, true), (e.head, false)] {
                if end.crossing >= n || end.slot > 3 {
                    return Err(DiagramError::UnknownCrossing(format!("{}.{}", end.crossing, end.slot)));
                }
                let cell = &mut slot_edge[end.crossing][end.slot];
                if cell.is_some() {
                    return Err(DiagramError::Arity {
                        crossing: cname(end.crossing),
                        detail: format!("slot {} used twice", end.slot),
                    });
                }
                *cell = Some((ei, is_tail));
            }
        }
        let mut crossings = Vec::with_capacity(n);
        for (c, rc) in raw.crossings.iter().enumerate() {
            let mut slots = [0; 4];
            let mut outgoing = [false; 4];
            for k in 0..4 {
                let (e, t) = slot_edge[c][k].ok_or_else(|| DiagramError::Arity {
                    crossing: rc.id.clone(),
                    detail: format!("slot {k} has no edge (crossings must be 4-valent)"),
                })?;
                slots[k] = e;
                outgoing[k] = t;
            }
            if outgoing[0] == outgoing[2] || outgoing[1] == outgoing[3] {
                return Err(DiagramError::Orientation(rc.id.clone()));
            }
            let over_out = (0..4).find(|&k| k % 2 == rc.over_parity && outgoing[k]).unwrap();
            let under_out = (0..4).find(|&k| k % 2 != rc.over_parity && outgoing[k]).unwrap();
            let sign = if (under_out + 4 - over_out) % 4 == 1 { 1 } else { -1 };
            if let Some(d) = rc.declared_sign {
                if d != sign {
                    return Err(DiagramError::SignMismatch {
                        crossing: rc.id.clone(),
                        declared: d,
                        computed: sign,
                    });
                }
            }
            crossings.push(Crossing {
                id: rc.id.clone(),
                label: rc.label.clone(),
                over_parity: rc.over_parity,
                sign,
                slots,
                kind: rc.kind,
            });
        }
        let edges = raw.edges;
        if edges.is_empty() {
            return Err(DiagramError::Arity {
                crossing: "-".into(),
                detail: "diagram has no crossings".into(),
            });
        }

        // Knot traversal: after arriving at (c,k) continue along slot k+2.
        let next_edge = |e: usize| -> usize {
            let h = edges[e].head;
            crossings[h.crossing].slots[(h.slot + 2) % 4]
        };
        let mut seen = vec![false; edges.len()];
        let mut components = 0;
        let mut knot_order = Vec::new();
        for start in 0..edges.len() {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                if components == 1 {
                    knot_order.push(e);
                }
                e = next_edge(e);
            }
        }
        if components != 1 {
            return Err(DiagramError::MultiComponent { components });
        }
        let mut edge_pos = vec![0; edges.len()];
        for (i, &e) in knot_order.iter().enumerate() {
            edge_pos[e] = i;
        }

        // Faces as orbits of sectors.
        let far_end = |c: usize, k: usize| -> End {
            let e = &edges[crossings[c].slots[k]];
            if e.tail == End::new(c, k) { e.head } else { e.tail }
        };
        let mut sector_face = vec![[usize::MAX; 4]; n];
        let mut faces: Vec<Face> = Vec::new();
        for c0 in 0..n {
            for k0 in 0..4 {
                if sector_face[c0][k0] != usize::MAX {
                    continue;
                }
                let fid = faces.len();
                let mut corners = Vec::new();
                let mut sides = Vec::new();
                let (mut c, mut k) = (c0, k0);
                while sector_face[c][k] == usize::MAX {
                    sector_face[c][k] = fid;
                    corners.push(End::new(c, k));
                    let e = crossings[c].slots[k];
                    let side = if edges[e].tail == End::new(c, k) {
                        Side::Left
                    } else {
                        Side::Right
                    };
                    sides.push(EdgeSide { edge: e, side });
                    let f = far_end(c, k);
                    c = f.crossing;
                    k = (f.slot + 3) % 4;
                }
                faces.push(Face {
                    label: String::new(),
                    corners,
                    sides,
                });
            }
        }
        if faces.len() != n + 2 {
            return Err(DiagramError::EulerViolation {
                crossings: n,
                faces: faces.len(),
            });
        }

        let mut d = LagrangianDiagram {
            crossings,
            edges,
            faces,
            unbounded: 0,
            sector_face,
            knot_order,
            edge_pos,
            braid: raw.braid,
        };
        let ub = raw.unbounded.ok_or(DiagramError::UnlabeledUnboundedFace)?;
        d.unbounded = d.face_of_side(ub);
        let mut used: BTreeMap<String, usize> = BTreeMap::new();
        if let Some(l) = raw.unbounded_label {
            d.faces[d.unbounded].label = l.clone();
            used.insert(l, d.unbounded);
        }
        for (s, name) in raw.face_labels {
            let f = d.face_of_side(s);
            if let Some(&g) = used.get(&name) {
                if g != f {
                    return Err(DiagramError::DuplicateLabel(name));
                }
                continue;
            }
            if !d.faces[f].label.is_empty() {
                return Err(DiagramError::ConflictingLabels(d.faces[f].label.clone(), name));
            }
            d.faces[f].label = name.clone();
            used.insert(name, f);
        }
        if d.faces[d.unbounded].label.is_empty() {
            if used.contains_key("R0") {
                return Err(DiagramError::DuplicateLabel("R0".into()));
            }
            d.faces[d.unbounded].label = "R0".into();
        }
        if let Some(f) = d.faces.iter().position(|f| f.label.is_empty()) {
            return Err(DiagramError::MissingFaceLabel(
                d.edges[d.faces[f].sides[0].edge].id.clone(),
            ));
        }
        let mut cl = BTreeMap::new();
        for c in &d.crossings {
            if cl.insert(c.label.clone(), ()).is_some() {
                return Err(DiagramError::DuplicateLabel(c.label.clone()));
            }
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn unbounded_face(&self) -> usize {
        self.unbounded
    }

    /// Bounded face ids in increasing order.
    pub fn bounded_faces(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.faces.len()).filter(move |&f| f != self.unbounded)
    }

    /// The braid this diagram closes, when built by `rainbow_closure_diagram`.
    pub fn braid(&self) -> Option<&BraidWord> {
        self.braid.as_ref()
    }

    pub fn is_braid_closure(&self) -> bool {
        self.braid.is_some()
    }

    /// Copy of the diagram with the braid-closure flag removed.
    pub fn without_braid_flag(&self) -> Self {
        let mut d = self.clone();
        d.braid = None;
        d
    }

    pub fn crossing_by_label(&self, label: &str) -> Option<usize> {
        let l = normalize_label(label);
        self.crossings.iter().position(|c| normalize_label(&c.label) == l)
    }

    pub fn face_by_label(&self, label: &str) -> Option<usize> {
        let l = normalize_label(label);
        self.faces.iter().position(|f| normalize_label(&f.label) == l)
    }

    pub fn face_of_sector(&self, s: End) -> usize {
        self.sector_face[s.crossing][s.slot]
    }

    pub fn face_of_side(&self, s: EdgeSide) -> usize {
        match s.side {
            Side::Left => self.left_face(s.edge),
            Side::Right => self.right_face(s.edge),
        }
    }

    pub fn left_face(&self, e: usize) -> usize {
        let t = self.edges[e].tail;
        self.sector_face[t.crossing][t.slot]
    }

    pub fn right_face(&self, e: usize) -> usize {
        let t = self.edges[e].tail;
        self.sector_face[t.crossing][(t.slot + 3) % 4]
    }

    /// +1 when the sector runs counterclockwise from an over slot to an under slot.
    pub fn corner_sign(&self, s: End) -> i32 {
        if self.crossings[s.crossing].is_over_slot(s.slot) {
            1
        } else {
            -1
        }
    }

    /// Edges in knot order, starting from edge 0.
    pub fn knot_order(&self) -> &[usize] {
        &self.knot_order
    }

    pub fn edge_position(&self, e: usize) -> usize {
        self.edge_pos[e]
    }

    pub fn next_edge(&self, e: usize) -> usize {
        self.knot_order[(self.edge_pos[e] + 1) % self.knot_order.len()]
    }

    /// The edge arriving at the over (or under) passage of `c`.
    pub fn edge_into(&self, c: usize, over: bool) -> usize {
        let cr = &self.crossings[c];
        (0..4)
            .map(|k| cr.slots[k])
            .find(|&e| {
                let h = self.edges[e].head;
                h.crossing == c && cr.is_over_slot(h.slot) == over
            })
            .expect("every crossing has one incoming end per strand")
    }

    /// True when the head of `e` is an over passage.
    pub fn ends_over(&self, e: usize) -> bool {
        let h = self.edges[e].head;
        self.crossings[h.crossing].is_over_slot(h.slot)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Winding numbers by propagation from the unbounded face.
    pub fn winding_numbers(&self) -> Result<WindingMap, DiagramError> {
        let counts = vec![1i64; self.edges.len()];
        self.chain_winding(&counts)
    }

    /// Winding of the 1-chain assigning `counts[e]` to each edge, with the unbounded face at 0.
    pub fn chain_winding(&self, counts: &[i64]) -> Result<WindingMap, DiagramError> {
        let nf = self.faces.len();
        let mut adj: Vec<Vec<(usize, i64, usize)>> = vec![Vec::new(); nf];
        for (e, &k) in counts.iter().enumerate().take(self.edges.len()) {
            let (l, r) = (self.left_face(e), self.right_face(e));
            adj[r].push((l, k, e));
            adj[l].push((r, -k, e));
        }
        let mut w: Vec<Option<i64>> = vec![None; nf];
        w[self.unbounded] = Some(0);
        let mut queue = VecDeque::from([self.unbounded]);
        while let Some(f) = queue.pop_front() {
            let wf = w[f].unwrap();
            for &(g, delta, e) in &adj[f] {
                match w[g] {
                    None => {
                        w[g] = Some(wf + delta);
                        queue.push_back(g);
                    }
                    Some(x) if x != wf + delta => {
                        return Err(DiagramError::InconsistentWinding(self.edges[e].id.clone()));
                    }
                    _ => {}
                }
            }
        }
        Ok(w.into_iter().map(|x| x.unwrap_or(0)).collect())
    }

    /// Bounded faces whose corners are all positive, with their cyclic chord words.
    pub fn rsft_disks(&self) -> Vec<RsftDisk> {
        self.bounded_faces()
            .filter(|&f| self.faces[f].corners.iter().all(|&s| self.corner_sign(s) > 0))
            .map(|f| RsftDisk {
                face: f,
                word: self.faces[f].corners.iter().map(|s| s.crossing).collect(),
            })
            .collect()
    }

    /// Labelled-map invariant: equal for labelled-isomorphic diagrams.
    pub fn labeled_fingerprint(&self) -> String {
        let mut faces: Vec<String> = self
            .faces
            .iter()
            .map(|f| {
                let seq: Vec<String> = f
                    .corners
                    .iter()
                    .map(|&s| {
                        format!(
                            "{}{}",
                            self.crossings[s.crossing].label,
                            if self.corner_sign(s) > 0 { '+' } else { '-' }
                        )
                    })
                    .collect();
                let rot = (0..seq.len())
                    .map(|i| [&seq[i..], &seq[..i]].concat().join(" "))
                    .min()
                    .unwrap_or_default();
                format!("{}:[{}]", f.label, rot)
            })
            .collect();
        faces.sort();
        let mut edges: Vec<String> = (0..self.edges.len())
            .map(|e| {
                let ed = &self.edges[e];
                format!(
                    "{}>{}|{}|{}",
                    self.crossings[ed.tail.crossing].label,
                    self.crossings[ed.head.crossing].label,
                    self.faces[self.left_face(e)].label,
                    self.faces[self.right_face(e)].label
                )
            })
            .collect();
        edges.sort();
        format!("{}\n{}", faces.join("\n"), edges.join("\n"))
    }
}

/// Accepts `α1`, `alpha1`, `a_1` style spellings for the same label.
pub fn normalize_label(s: &str) -> String {
    let s = s.trim().replace('α', "alpha").replace(['_', '{', '}', ' '], "");
    s.replace('₀', "0")
        .replace('₁', "1")
        .replace('₂', "2")
        .replace('₃', "3")
        .replace('₄', "4")
        .replace('₅', "5")
        .replace('₆', "6")
        .replace('₇', "7")
        .replace('₈', "8")
        .replace('₉', "9")
}

/// Bundled diagrams.
pub mod builtin {
    use super::{LagrangianDiagram, load_diagram};

    /// Text of the left Chekanov 5_2 diagram (chords a1..a9).
    pub const CHEKANOV_LEFT: &str = include_str!("../../data/chekanov_left.ldg");
    /// Text of the right Chekanov 5_2 diagram.
    pub const CHEKANOV_RIGHT: &str = include_str!("../../data/chekanov_right.ldg");

    pub fn chekanov_left() -> LagrangianDiagram {
        load_diagram(CHEKANOV_LEFT).expect("bundled diagram is valid")
    }

    pub fn chekanov_right() -> LagrangianDiagram {
        load_diagram(CHEKANOV_RIGHT).expect("bundled diagram is valid")
    }
}
