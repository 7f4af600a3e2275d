//! Action/area relations, positive area realization and action-bounded candidate words.

mod constraint;
mod enumerate;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::diagram::LagrangianDiagram;
use crate::lp::{Cmp, LinearProgram, LpOutcome};
use crate::rational::{Q, q};

pub use constraint::{Atom, Constraint, Expr, Relation, parse_constraint};
pub use enumerate::{canonical_rotation, complete_length_bound, enumerate_candidates, word_action};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("constraints are infeasible")]
    Infeasible(Box<FarkasCertificate>),
    #[error("constraint {0:?} does not bound any action or area")]
    UnboundedRequest(String),
    #[error("cannot parse constraint {0:?}: {1}")]
    BadConstraint(String, String),
    #[error("unknown chord or face {0}")]
    UnknownName(String),
    #[error("gap factor and eps must be positive")]
    BadParameter,
    #[error("candidate enumeration exceeded the budget of {0} nodes")]
    BudgetExceeded(u64),
}

/// `Area(face) = Σ coeffs[c] · A(c)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRelation {
    pub face: usize,
    pub coeffs: BTreeMap<usize, i32>,
}

impl FaceRelation {
    /// At least one chord enters with a negative coefficient.
    pub fn is_nontrivial(&self) -> bool {
        self.coeffs.values().any(|&v| v < 0)
    }

    pub fn area(&self, actions: &[Q]) -> Q {
        self.coeffs.iter().map(|(&c, &k)| &actions[c] * q(k as i64)).sum()
    }

    /// Text such as `A(a4) - A(a8) - A(a9) = Area(B6)`.
    pub fn display(&self, d: &LagrangianDiagram) -> String {
        let mut s = String::new();
        for (i, (&c, &k)) in self
            .coeffs
            .iter()
            .filter(|(_, k)| **k > 0)
            .chain(self.coeffs.iter().filter(|(_, k)| **k < 0))
            .enumerate()
        {
            let mag = k.abs();
            let m = if mag == 1 { String::new() } else { mag.to_string() };
            let op = if k < 0 {
                " - "
            } else if i > 0 {
                " + "
            } else {
                ""
            };
            s.push_str(&format!("{op}{m}A({})", d.crossings()[c].label));
        }
        format!("{s} = Area({})", d.faces()[self.face].label)
    }
}

/// One relation per bounded face plus the winding data for admissibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionSystem {
    pub relations: Vec<FaceRelation>,
    pub winding: Vec<i64>,
    pub chords: usize,
    pub faces: usize,
}

impl ActionSystem {
    /// Areas of all faces (unbounded face 0) for the given chord actions.
    pub fn areas(&self, actions: &[Q]) -> Vec<Q> {
        let mut a = vec![Q::zero(); self.faces];
        for r in &self.relations {
            a[r.face] = r.area(actions);
        }
        a
    }

    /// Σ_F wind(Λ,F) · Area(F).
    pub fn admissibility_residual(&self, areas: &[Q]) -> Q {
        self.winding.iter().zip(areas).map(|(&w, a)| a * q(w)).sum()
    }

    pub fn relation_for(&self, face: usize) -> Option<&FaceRelation> {
        self.relations.iter().find(|r| r.face == face)
    }
}

/// Corner-quadrant relations: each positive corner adds the chord's action, each negative one subtracts it.
pub fn corner_relations(d: &LagrangianDiagram) -> ActionSystem {
    let relations = d
        .bounded_faces()
        .map(|f| {
            let mut coeffs = BTreeMap::new();
            for &s in &d.faces()[f].corners {
                *coeffs.entry(s.crossing).or_insert(0) += d.corner_sign(s);
            }
            coeffs.retain(|_, v| *v != 0);
            FaceRelation { face: f, coeffs }
        })
        .collect();
    ActionSystem {
        relations,
        winding: d.winding_numbers().expect("valid diagrams have consistent winding"),
        chords: d.crossings().len(),
        faces: d.faces().len(),
    }
}

/// Positive chord actions with the face areas they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AreaAssignment {
    pub actions: Vec<Q>,
    pub areas: Vec<Q>,
}

impl AreaAssignment {
    pub fn from_actions(sys: &ActionSystem, actions: Vec<Q>) -> Self {
        let areas = sys.areas(&actions);
        AreaAssignment { actions, areas }
    }

    /// Positivity, relations and admissibility, all exact.
    pub fn is_valid(&self, sys: &ActionSystem, unbounded: usize) -> bool {
        self.actions.iter().all(Signed::is_positive)
            && self
                .areas
                .iter()
                .enumerate()
                .all(|(f, a)| if f == unbounded { a.is_zero() } else { a.is_positive() })
            && sys
                .relations
                .iter()
                .all(|r| r.area(&self.actions) == self.areas[r.face])
            && sys.admissibility_residual(&self.areas).is_zero()
    }

    pub fn min_action(&self) -> Q {
        self.actions.iter().min().cloned().unwrap_or_else(Q::zero)
    }

    /// Evaluates a linear expression.
    pub fn eval(&self, e: &Expr, eps: &Q) -> Q {
        e.0.iter()
            .map(|(c, a)| {
                c * match a {
                    Atom::Act(x) => self.actions[*x].clone(),
                    Atom::Area(f) => self.areas[*f].clone(),
                    Atom::Eps => eps.clone(),
                    Atom::One => q(1),
                }
            })
            .sum()
    }

    /// Whether a constraint holds (strict ones strictly).
    pub fn satisfies(&self, c: &Constraint, opts: &RealizeOptions) -> bool {
        let (l, r) = (self.eval(&c.lhs, &opts.eps), self.eval(&c.rhs, &opts.eps));
        match c.rel {
            Relation::Le => l <= r,
            Relation::Lt => l < r,
            Relation::Eq => l == r,
            Relation::Much => &l * &opts.gap <= r,
        }
    }
}

/// Parameters of the realization LP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Gap factor G for `<<`.
    pub gap: Q,
    /// Value of the symbol `eps` inside constraints.
    pub eps: Q,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            gap: q(100),
            eps: Q::new(1.into(), 1000.into()),
        }
    }
}

/// Dual certificate of infeasibility for the system `rows · (A, t) <= rhs`, `(A, t) >= 0`.
///
/// With `r = yᵀ rows`, either `r >= e_t` and `y·rhs <= 0` (every solution has
/// margin t = 0, so strict positivity fails) or `r >= 0` and `y·rhs < 0`
/// (no solution at all).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub row_names: Vec<String>,
    pub rows: Vec<Vec<Q>>,
    pub rhs: Vec<Q>,
    pub y: Vec<Q>,
}

impl FarkasCertificate {
    pub fn verify(&self) -> bool {
        if self.y.len() != self.rows.len() || self.y.iter().any(Signed::is_negative) {
            return false;
        }
        let n = self.rows.first().map_or(0, Vec::len);
        if n == 0 {
            return false;
        }
        let r: Vec<Q> = (0..n)
            .map(|k| self.y.iter().zip(&self.rows).map(|(a, row)| a * &row[k]).sum())
            .collect();
        let yb: Q = self.y.iter().zip(&self.rhs).map(|(a, b)| a * b).sum();
        let t = n - 1;
        if r[..t].iter().any(Signed::is_negative) || r[t].is_negative() {
            return false;
        }
        (r[t] >= q(1) && !yb.is_positive()) || yb.is_negative()
    }
}

/// Finds positive actions satisfying every relation, admissibility and the constraints.
///
/// Maximizes a common strictness margin t in [0, 1], then minimizes the total
/// action at that margin.
pub fn realize_areas(
    d: &LagrangianDiagram,
    sys: &ActionSystem,
    constraints: &[Constraint],
    opts: &RealizeOptions,
) -> Result<AreaAssignment, ActionError> {
    if !opts.gap.is_positive() || !opts.eps.is_positive() {
        return Err(ActionError::BadParameter);
    }
    let n = sys.chords;
    let t = n;
    let width = n + 1;
    // Every row is `coeffs · (A, t) <= rhs`.
    let mut names = Vec::new();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    let mut rhs = Vec::new();
    let mut push = |name: String, row: Vec<Q>, b: Q, names: &mut Vec<String>| {
        names.push(name);
        rows.push(row);
        rhs.push(b);
    };
    for c in 0..n {
        let mut row = vec![Q::zero(); width];
        row[c] = q(-1);
        row[t] = q(1);
        push(format!("A({}) > 0", d.crossings()[c].label), row, Q::zero(), &mut names);
    }
    for r in &sys.relations {
        let mut row = vec![Q::zero(); width];
        for (&c, &k) in &r.coeffs {
            row[c] = q(-(k as i64));
        }
        row[t] = q(1);
        push(
            format!("Area({}) > 0", d.faces()[r.face].label),
            row,
            Q::zero(),
            &mut names,
        );
    }
    {
        let mut row = vec![Q::zero(); width];
        row[t] = q(1);
        push("margin <= 1".into(), row, q(1), &mut names);
    }
    {
        let mut adm = vec![Q::zero(); width];
        for r in &sys.relations {
            for (&c, &k) in &r.coeffs {
                adm[c] += q(k as i64 * sys.winding[r.face]);
            }
        }
        if adm.iter().any(|x| !x.is_zero()) {
            let neg: Vec<Q> = adm.iter().map(|x| -x).collect();
            push("admissibility".into(), adm, Q::zero(), &mut names);
            push("admissibility (reverse)".into(), neg, Q::zero(), &mut names);
        }
    }
    // Linear form of an expression: (coefficients over A, constant).
    let linear = |e: &Expr| -> (Vec<Q>, Q) {
        let mut v = vec![Q::zero(); n];
        let mut k = Q::zero();
        for (c, a) in &e.0 {
            match a {
                Atom::Act(x) => v[*x] += c,
                Atom::Area(f) => {
                    if let Some(r) = sys.relation_for(*f) {
                        for (&ch, &m) in &r.coeffs {
                            v[ch] += c * q(m as i64);
                        }
                    }
                }
                Atom::Eps => k += c * &opts.eps,
                Atom::One => k += c,
            }
        }
        (v, k)
    };
    for con in constraints {
        let (mut lv, mut lk) = linear(&con.lhs);
        let (rv, rk) = linear(&con.rhs);
        if con.rel == Relation::Much {
            lv.iter_mut().for_each(|x| *x *= &opts.gap);
            lk *= &opts.gap;
        }
        // lhs - rhs (<=|<|==) 0  ->  diff · A (+ t) <= rk - lk
        let diff: Vec<Q> = lv.iter().zip(&rv).map(|(a, b)| a - b).collect();
        let b = &rk - &lk;
        let mut row = diff.clone();
        row.push(if con.rel == Relation::Lt { q(1) } else { Q::zero() });
        push(con.text.clone(), row, b.clone(), &mut names);
        if con.rel == Relation::Eq {
            let mut neg: Vec<Q> = diff.iter().map(|x| -x).collect();
            neg.push(Q::zero());
            push(format!("{} (reverse)", con.text), neg, -b, &mut names);
        }
    }

    let mut lp = LinearProgram::new(width);
    lp.objective[t] = q(1);
    for (row, b) in rows.iter().zip(&rhs) {
        lp.push(row.clone(), Cmp::Le, b.clone());
    }
    let margin = match lp.solve() {
        LpOutcome::Optimal { value, .. } if value.is_positive() => value,
        LpOutcome::Unbounded { .. } => unreachable!("margin is capped at 1"),
        _ => {
            let y = farkas(&rows, &rhs);
            return Err(ActionError::Infeasible(Box::new(FarkasCertificate {
                row_names: names,
                rows,
                rhs,
                y,
            })));
        }
    };
    let mut lp2 = lp.clone();
    lp2.objective = (0..width).map(|k| if k < n { q(-1) } else { Q::zero() }).collect();
    let mut fix = vec![Q::zero(); width];
    fix[t] = q(1);
    lp2.push(fix, Cmp::Eq, margin);
    let actions = match lp2.solve() {
        LpOutcome::Optimal { x, .. } => x[..n].to_vec(),
        o => unreachable!("phase two of a feasible bounded-below program: {o:?}"),
    };
    Ok(AreaAssignment::from_actions(sys, actions))
}

/// Dual vector proving that no solution has a positive margin.
fn farkas(rows: &[Vec<Q>], rhs: &[Q]) -> Vec<Q> {
    let m = rows.len();
    let width = rows[0].len();
    let t = width - 1;
    let col = |k: usize| -> Vec<Q> { rows.iter().map(|r| r[k].clone()).collect() };
    // min y·rhs s.t. yᵀrows >= e_t, y >= 0.
    let mut lp = LinearProgram::new(m);
    lp.objective = rhs.iter().map(|b| -b).collect();
    for k in 0..width {
        lp.push(col(k), Cmp::Ge, if k == t { q(1) } else { Q::zero() });
    }
    if let LpOutcome::Optimal { x, value } = lp.solve() {
        if !value.is_negative() {
            return x;
        }
    }
    // Plain infeasibility: yᵀrows >= 0, y·rhs = -1.
    let mut lp = LinearProgram::new(m);
    for k in 0..width {
        lp.push(col(k), Cmp::Ge, Q::zero());
    }
    lp.push(rhs.to_vec(), Cmp::Eq, q(-1));
    match lp.solve() {
        LpOutcome::Optimal { x, .. } => x,
        _ => vec![Q::zero(); m],
    }
}
