//! Rotation angles of chord pairs on rainbow closures, the Conley-Zehnder
//! lower bound and the degree-zero generator policy.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{CrossingKind, EdgeKind, LagrangianDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IndexError {
    #[error("rotation data needs a rainbow closure of a positive braid")]
    NotBraidClosure,
    #[error("unknown crossing index {0}")]
    UnknownCrossing(usize),
}

/// Rotation of the capping path from `from` to `to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationData {
    pub from: usize,
    pub to: usize,
    /// Angle in units of π/2.
    pub theta_quarters: i64,
    /// ⌊θ/π⌋.
    pub rot: i64,
    /// Turn at a braid-area start (+π/2 each).
    pub type1: usize,
    /// Curls traversed (−3π/2 each).
    pub type2: usize,
    /// Rainbow arcs traversed (+3π/2 each).
    pub type3: usize,
}

/// Edges from the over-outgoing edge of `from` through the under-incoming edge of `to`.
fn capping_path(d: &LagrangianDiagram, from: usize, to: usize) -> Vec<usize> {
    let start = (0..d.edges().len())
        .find(|&e| {
            let t = d.edges()[e].tail;
            t.crossing == from && d.crossings()[from].is_over_slot(t.slot)
        })
        .expect("every crossing has an over-outgoing edge");
    let stop = d.edge_into(to, false);
    let mut path = vec![start];
    let mut e = start;
    while e != stop {
        e = d.next_edge(e);
        path.push(e);
    }
    path
}

/// Decomposes the capping path from `c_i` to `c_j` into Type 1/2/3 arcs.
pub fn rotation_number(d: &LagrangianDiagram, c_i: usize, c_j: usize) -> Result<RotationData, IndexError> {
    if !d.is_braid_closure() {
        return Err(IndexError::NotBraidClosure);
    }
    for c in [c_i, c_j] {
        if c >= d.crossings().len() {
            return Err(IndexError::UnknownCrossing(c));
        }
    }
    let path = capping_path(d, c_i, c_j);
    let type1 = usize::from(matches!(d.crossings()[c_i].kind, CrossingKind::Braid { .. }));
    let type2 = path
        .iter()
        .filter(|&&e| matches!(d.edges()[e].kind, EdgeKind::Curl { .. }))
        .count();
    let type3 = path
        .iter()
        .filter(|&&e| matches!(d.edges()[e].kind, EdgeKind::Arc { .. }))
        .count();
    let theta_quarters = type1 as i64 - 3 * type2 as i64 + 3 * type3 as i64;
    Ok(RotationData {
        from: c_i,
        to: c_j,
        theta_quarters,
        rot: theta_quarters.div_euclid(2),
        type1,
        type2,
        type3,
    })
}

/// Σ (rot_{k,k+1} + 1) over the cyclic word.
pub fn cz_index(d: &LagrangianDiagram, word: &[usize]) -> Result<i64, IndexError> {
    if !d.is_braid_closure() {
        return Err(IndexError::NotBraidClosure);
    }
    let n = word.len();
    (0..n)
        .map(|k| rotation_number(d, word[k], word[(k + 1) % n]).map(|r| r.rot + 1))
        .sum()
}

/// Lower bound for the degree of the orbit of `word`: one less than its
/// Conley-Zehnder bound.
pub fn degree_lower_bound(d: &LagrangianDiagram, word: &[usize]) -> Result<i64, IndexError> {
    Ok(cz_index(d, word)? - 1)
}

/// Which monomials the feasibility step must consider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorPolicy {
    /// Degree-zero orbits come from single chords, so candidates are products of single-chord orbits.
    SingleChord,
    /// Only the action filter applies; candidates are all action-bounded words.
    ActionFilter,
}

impl GeneratorPolicy {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorPolicy::SingleChord => "single_chord",
            GeneratorPolicy::ActionFilter => "action_filter",
        }
    }
}

pub fn degree_zero_generators(d: &LagrangianDiagram) -> GeneratorPolicy {
    if d.is_braid_closure() {
        GeneratorPolicy::SingleChord
    } else {
        GeneratorPolicy::ActionFilter
    }
}
