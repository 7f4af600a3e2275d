//! Push-out loops and the rational intersection grading.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use thiserror::Error;

use crate::diagram::{CrossingKind, DiagramError, EdgeKind, LagrangianDiagram, WindingMap};
use crate::rational::{Q, fmt_q, parse_q, q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("tb = -1: the rational grading is undefined")]
    TbMinusOne,
    #[error("unknown crossing {0}")]
    UnknownCrossing(String),
    #[error("empty word")]
    EmptyWord,
    #[error("unknown face label {0}")]
    UnknownFace(String),
    #[error("bad coefficient {0:?}")]
    BadCoefficient(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Exact rational coefficients indexed by face id; the unbounded face is always 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradingVector(pub Vec<Q>);

impl GradingVector {
    pub fn zero(faces: usize) -> Self {
        GradingVector(vec![Q::zero(); faces])
    }

    pub fn get(&self, face: usize) -> &Q {
        &self.0[face]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn from_winding(w: &WindingMap) -> Self {
        GradingVector(w.iter().map(|&x| q(x)).collect())
    }

    /// `{face-label: "num/den"}` with zero entries omitted; keys sorted.
    pub fn to_label_map(&self, d: &LagrangianDiagram) -> BTreeMap<String, String> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(f, v)| (d.faces()[f].label.clone(), fmt_q(v)))
            .collect()
    }

    pub fn from_label_map(d: &LagrangianDiagram, m: &BTreeMap<String, String>) -> Result<Self, GradingError> {
        let mut g = Self::zero(d.faces().len());
        for (k, v) in m {
            let f = d.face_by_label(k).ok_or_else(|| GradingError::UnknownFace(k.clone()))?;
            g.0[f] = parse_q(v).ok_or_else(|| GradingError::BadCoefficient(v.clone()))?;
        }
        Ok(g)
    }

    /// Human-readable linear combination such as `-1/2 A1 + B2`.
    pub fn display(&self, d: &LagrangianDiagram) -> String {
        let mut parts = Vec::new();
        for (f, v) in self.0.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let label = &d.faces()[f].label;
            let s = if *v == q(1) {
                label.clone()
            } else if *v == q(-1) {
                format!("-{label}")
            } else {
                format!("{} {label}", fmt_q(v))
            };
            parts.push(s);
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl Add for &GradingVector {
    type Output = GradingVector;
    fn add(self, o: &GradingVector) -> GradingVector {
        GradingVector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &GradingVector {
    type Output = GradingVector;
    fn sub(self, o: &GradingVector) -> GradingVector {
        GradingVector(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul<&Q> for &GradingVector {
    type Output = GradingVector;
    fn mul(self, k: &Q) -> GradingVector {
        GradingVector(self.0.iter().map(|a| a * k).collect())
    }
}

impl Neg for &GradingVector {
    type Output = GradingVector;
    fn neg(self) -> GradingVector {
        GradingVector(self.0.iter().map(|a| -a).collect())
    }
}

/// Which capping path closes each chord-to-chord stretch of a push-out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Capping {
    /// Follow the knot orientation from the end of a chord to the start of the next.
    #[default]
    Positive,
    /// Run against the orientation instead.
    Negative,
}

/// One piece of a push-out loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Segment {
    /// A copy of `edge` pushed to the left of the knot, traversed forward or backward.
    Parallel { edge: usize, forward: bool },
    /// Vertical jump along the chord at `crossing`, from its under point to its over point.
    Jump { crossing: usize, forward: bool },
}

/// A push-out loop: parallel arcs joined by chord jumps at the letters of `word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushOutLoop {
    pub segments: Vec<Segment>,
    pub word: Vec<usize>,
}

impl PushOutLoop {
    /// The parallel copy of the whole knot (a longitude representative).
    pub fn longitude(d: &LagrangianDiagram) -> Self {
        let segments = d
            .knot_order()
            .iter()
            .map(|&edge| Segment::Parallel { edge, forward: true })
            .collect();
        PushOutLoop {
            segments,
            word: Vec::new(),
        }
    }

    /// Number of chord jumps.
    pub fn jumps(&self) -> usize {
        self.segments
            .iter()
            .filter(|s| matches!(s, Segment::Jump { .. }))
            .count()
    }

    /// Maximal runs of consecutive parallel segments.
    pub fn runs(&self) -> Vec<Vec<(usize, bool)>> {
        let mut runs = Vec::new();
        let mut cur = Vec::new();
        for s in &self.segments {
            match *s {
                Segment::Parallel { edge, forward } => cur.push((edge, forward)),
                Segment::Jump { .. } => {
                    if !cur.is_empty() {
                        runs.push(std::mem::take(&mut cur));
                    }
                }
            }
        }
        if !cur.is_empty() {
            runs.push(cur);
        }
        runs
    }
}

/// Builds the left push-out of the cyclic word with the requested capping paths.
pub fn pushout_loop(d: &LagrangianDiagram, word: &[usize], capping: Capping) -> Result<PushOutLoop, GradingError> {
    if word.is_empty() {
        return Err(GradingError::EmptyWord);
    }
    if let Some(&c) = word.iter().find(|&&c| c >= d.crossings().len()) {
        return Err(GradingError::UnknownCrossing(c.to_string()));
    }
    let order = d.knot_order();
    let n = order.len();
    let mut segments = Vec::new();
    for k in 0..word.len() {
        let (a, b) = (word[k], word[(k + 1) % word.len()]);
        let o = d.edge_position(d.edge_into(a, true));
        let u = d.edge_position(d.edge_into(b, false));
        match capping {
            Capping::Positive => {
                let len = (u + n - o) % n;
                for j in 1..=len {
                    segments.push(Segment::Parallel {
                        edge: order[(o + j) % n],
                        forward: true,
                    });
                }
                segments.push(Segment::Jump {
                    crossing: b,
                    forward: true,
                });
            }
            Capping::Negative => {
                let len = (o + n - u) % n;
                for j in 0..len {
                    segments.push(Segment::Parallel {
                        edge: order[(o + n - j) % n],
                        forward: false,
                    });
                }
                segments.push(Segment::Jump {
                    crossing: b,
                    forward: false,
                });
            }
        }
    }
    Ok(PushOutLoop {
        segments,
        word: word.to_vec(),
    })
}

/// Winding number of the loop's projection around each face.
pub fn loop_winding(d: &LagrangianDiagram, lp: &PushOutLoop) -> WindingMap {
    let mut counts = vec![0i64; d.edges().len()];
    for s in &lp.segments {
        if let Segment::Parallel { edge, forward } = *s {
            counts[edge] += if forward { 1 } else { -1 };
        }
    }
    d.chain_winding(&counts)
        .expect("edge chains of a valid diagram have consistent winding")
}

/// Linking number of the vertically lifted loop with the knot.
///
/// Each over passage strictly inside a parallel run contributes the crossing
/// sign (negated for backward runs); each jump at a positive crossing
/// contributes +1 (forward capping) or -1 (backward capping).
pub fn linking_number(d: &LagrangianDiagram, lp: &PushOutLoop) -> i64 {
    let segs = &lp.segments;
    let m = segs.len();
    let mut lk = 0i64;
    for i in 0..m {
        match (segs[i], segs[(i + 1) % m]) {
            (Segment::Parallel { edge: e, forward: true }, Segment::Parallel { forward: true, .. }) => {
                if d.ends_over(e) {
                    lk += d.crossings()[d.edges()[e].head.crossing].sign as i64;
                }
            }
            (
                Segment::Parallel { forward: false, .. },
                Segment::Parallel {
                    edge: f,
                    forward: false,
                },
            ) => {
                if d.ends_over(f) {
                    lk -= d.crossings()[d.edges()[f].head.crossing].sign as i64;
                }
            }
            (Segment::Jump { crossing, forward }, _) if d.crossings()[crossing].sign > 0 => {
                lk += if forward { 1 } else { -1 };
            }
            _ => {}
        }
    }
    lk
}

/// I(μ) = -1/(tb+1) Σ wind(Λ,F) F.
pub fn meridian_grading(d: &LagrangianDiagram) -> Result<GradingVector, GradingError> {
    let tb = d.writhe();
    if tb == -1 {
        return Err(GradingError::TbMinusOne);
    }
    let w = d.winding_numbers()?;
    Ok(&GradingVector::from_winding(&w) * &Q::new((-1).into(), (tb + 1).into()))
}

/// Grading of an arbitrary push-out loop: winding plus lk · I(μ).
pub fn loop_grading(d: &LagrangianDiagram, lp: &PushOutLoop) -> Result<GradingVector, GradingError> {
    let mu = meridian_grading(d)?;
    let w = GradingVector::from_winding(&loop_winding(d, lp));
    Ok(&w + &(&mu * &q(linking_number(d, lp))))
}

/// I(c) for a single chord.
pub fn chord_grading(d: &LagrangianDiagram, c: usize) -> Result<GradingVector, GradingError> {
    word_grading(d, &[c])
}

/// I(c1…cn) with the default positive capping.
pub fn word_grading(d: &LagrangianDiagram, word: &[usize]) -> Result<GradingVector, GradingError> {
    word_grading_with(d, word, Capping::Positive)
}

pub fn word_grading_with(
    d: &LagrangianDiagram,
    word: &[usize],
    capping: Capping,
) -> Result<GradingVector, GradingError> {
    if d.writhe() == -1 {
        return Err(GradingError::TbMinusOne);
    }
    loop_grading(d, &pushout_loop(d, word, capping)?)
}

/// I(target) - Σ I(output_j).
pub fn difference_grading(
    d: &LagrangianDiagram,
    target: &[usize],
    outputs: &[Vec<usize>],
) -> Result<GradingVector, GradingError> {
    let mut g = word_grading(d, target)?;
    for w in outputs {
        g = &g - &word_grading(d, w)?;
    }
    Ok(g)
}

/// Resolves a word written as labels separated by spaces, `*` or `·`.
pub fn parse_word(d: &LagrangianDiagram, text: &str) -> Result<Vec<usize>, GradingError> {
    let w: Vec<usize> = text
        .split(|c: char| c.is_whitespace() || c == '·' || c == '*')
        .filter(|s| !s.is_empty())
        .map(|s| {
            d.crossing_by_label(s)
                .ok_or_else(|| GradingError::UnknownCrossing(s.to_string()))
        })
        .collect::<Result<_, _>>()?;
    if w.is_empty() {
        return Err(GradingError::EmptyWord);
    }
    Ok(w)
}

/// Word as labels joined by spaces.
pub fn word_text(d: &LagrangianDiagram, w: &[usize]) -> String {
    w.iter()
        .map(|&c| d.crossings()[c].label.clone())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Whether the loop runs along the innermost rainbow arc (the arc of level 1).
pub fn contains_innermost_arc(d: &LagrangianDiagram, lp: &PushOutLoop) -> bool {
    lp.segments
        .iter()
        .any(|s| matches!(s, Segment::Parallel { edge, .. } if d.edges()[*edge].kind == EdgeKind::Arc { level: 1 }))
}

/// Whether some forward run descends over braid crossings from level 1 to the
/// bottom level, including the horizontal pieces before and after the descent.
pub fn contains_complete_descending_arc(d: &LagrangianDiagram, lp: &PushOutLoop) -> bool {
    let Some(b) = d.braid() else { return false };
    let p = b.strands;
    if p < 2 {
        return false;
    }
    let is_braid = |c: usize| matches!(d.crossings()[c].kind, CrossingKind::Braid { .. });
    let level_one = |e: usize| {
        matches!(
            d.edges()[e].kind,
            EdgeKind::Braid { level: 1 } | EdgeKind::Arc { level: 1 }
        )
    };
    for run in lp.runs() {
        if run.iter().any(|&(_, f)| !f) || run.len() < p {
            continue;
        }
        'start: for s in 0..=run.len() - p {
            let e0 = run[s].0;
            let h = d.edges()[e0].head;
            if !level_one(e0) || !is_braid(h.crossing) || h.slot != 1 {
                continue;
            }
            for m in 1..p {
                let e = &d.edges()[run[s + m].0];
                if !is_braid(e.tail.crossing) || e.tail.slot != 3 {
                    continue 'start;
                }
                if m < p - 1 && (!is_braid(e.head.crossing) || e.head.slot != 1) {
                    continue 'start;
                }
            }
            return true;
        }
    }
    false
}
