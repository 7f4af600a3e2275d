//! Positivity systems `I(target) - Σ x_j I(candidate_j) >= 0, x >= 0` and their exact decision.

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::diagram::LagrangianDiagram;
use crate::grading::{GradingError, GradingVector, word_grading};
use crate::lp::{Cmp, LinearProgram, LpOutcome};
use crate::rational::{Q, denom_lcm, q};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FeasibilityError {
    #[error("integer enumeration exceeded the budget of {0} nodes")]
    BudgetExceeded(u64),
    #[error("{vars} variables exceed the oracle limit of {max}")]
    TooManyVariables { vars: usize, max: usize },
    #[error("box bound {bound} exceeds the oracle limit of {max}")]
    BoxTooLarge { bound: u64, max: u64 },
    #[error("system coefficients overflow the integer oracle")]
    Overflow,
}

/// Rows are bounded faces, columns candidates: `Σ_k matrix[F][k] x_k <= rhs[F]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilitySystem {
    pub target: Vec<usize>,
    pub variables: Vec<Vec<usize>>,
    pub rows: Vec<usize>,
    pub matrix: Vec<Vec<Q>>,
    pub rhs: Vec<Q>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    OnlyTrivial,
    Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Maximum {
    Finite(Q),
    Unbounded,
    /// The system has no solution at all (not even x = 0).
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub kind: VerdictKind,
    pub witness: Option<Vec<Q>>,
    pub maxima: Vec<Maximum>,
    /// For each variable with maximum 0, a vector y >= 0 over rows with
    /// (yᵀM)_k >= δ_jk and y·rhs <= 0, proving x_j <= 0.
    pub duals: Vec<Option<Vec<Q>>>,
}

impl FeasibilitySystem {
    /// Assembles a system from explicit data; rows are numbered 0..m.
    pub fn from_parts(matrix: Vec<Vec<Q>>, rhs: Vec<Q>) -> Self {
        let cols = matrix.first().map_or(0, Vec::len);
        FeasibilitySystem {
            target: Vec::new(),
            variables: (0..cols).map(|k| vec![k]).collect(),
            rows: (0..rhs.len()).collect(),
            matrix,
            rhs,
        }
    }

    pub fn cols(&self) -> usize {
        self.variables.len()
    }

    pub fn column(&self, k: usize) -> Vec<Q> {
        self.matrix.iter().map(|r| r[k].clone()).collect()
    }

    /// Row residuals rhs - M x.
    pub fn slack(&self, x: &[Q]) -> Vec<Q> {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| b - row.iter().zip(x).map(|(a, v)| a * v).sum::<Q>())
            .collect()
    }

    /// Exact post-hoc check of a witness.
    pub fn check_witness(&self, x: &[Q]) -> bool {
        x.len() == self.cols()
            && x.iter().all(|v| !v.is_negative())
            && x.iter().any(|v| v.is_positive())
            && self.slack(x).iter().all(|s| !s.is_negative())
    }

    /// Exact check that `y` proves max x_j <= 0.
    pub fn check_dual(&self, j: usize, y: &[Q]) -> bool {
        if y.len() != self.rows.len() || y.iter().any(|v| v.is_negative()) {
            return false;
        }
        let yb: Q = y.iter().zip(&self.rhs).map(|(a, b)| a * b).sum();
        if yb.is_positive() {
            return false;
        }
        (0..self.cols()).all(|k| {
            let s: Q = y.iter().zip(&self.matrix).map(|(a, row)| a * &row[k]).sum();
            s >= if k == j { q(1) } else { Q::zero() }
        })
    }

    fn primal(&self, j: usize) -> LinearProgram {
        let n = self.cols();
        let mut lp = LinearProgram::new(n);
        lp.objective[j] = q(1);
        for (row, b) in self.matrix.iter().zip(&self.rhs) {
            lp.push(row.clone(), Cmp::Le, b.clone());
        }
        lp
    }

    fn dual(&self, j: usize) -> LinearProgram {
        let m = self.rows.len();
        let mut lp = LinearProgram::new(m);
        lp.objective = self.rhs.iter().map(|b| -b).collect();
        for k in 0..self.cols() {
            let col = self.column(k);
            lp.push(col, Cmp::Ge, if k == j { q(1) } else { Q::zero() });
        }
        lp
    }
}

/// Builds the system for `target` against `candidates` over all bounded faces.
pub fn build_system(
    d: &LagrangianDiagram,
    target: &[usize],
    candidates: &[Vec<usize>],
) -> Result<FeasibilitySystem, GradingError> {
    let rows: Vec<usize> = d.bounded_faces().collect();
    let t = word_grading(d, target)?;
    let cols: Vec<GradingVector> = candidates
        .iter()
        .map(|w| word_grading(d, w))
        .collect::<Result<_, _>>()?;
    let matrix = rows
        .iter()
        .map(|&f| cols.iter().map(|g| g.get(f).clone()).collect())
        .collect();
    let rhs = rows.iter().map(|&f| t.get(f).clone()).collect();
    Ok(FeasibilitySystem {
        target: target.to_vec(),
        variables: candidates.to_vec(),
        rows,
        matrix,
        rhs,
    })
}

/// Maximizes each variable exactly; OnlyTrivial iff every maximum is 0.
pub fn only_trivial(sys: &FeasibilitySystem) -> FeasibilityVerdict {
    let n = sys.cols();
    // Per variable: maximum, witness, dual certificate.
    type Column = (Maximum, Option<Vec<Q>>, Option<Vec<Q>>);
    let per_var: Vec<Column> = (0..n)
        .into_par_iter()
        .map(|j| match sys.primal(j).solve() {
            LpOutcome::Infeasible => (Maximum::Empty, None, None),
            LpOutcome::Unbounded { x, ray } => {
                let w: Vec<Q> = x.iter().zip(&ray).map(|(a, r)| a + r).collect();
                (Maximum::Unbounded, Some(w), None)
            }
            LpOutcome::Optimal { x, value } => {
                if value.is_positive() {
                    (Maximum::Finite(value), Some(x), None)
                } else {
                    let y = match sys.dual(j).solve() {
                        LpOutcome::Optimal { x: y, .. } => Some(y),
                        _ => None,
                    };
                    (Maximum::Finite(value), None, y)
                }
            }
        })
        .collect();
    let witness = per_var.iter().find_map(|(_, w, _)| w.clone());
    let kind = if witness.is_some() {
        VerdictKind::Witness
    } else {
        VerdictKind::OnlyTrivial
    };
    FeasibilityVerdict {
        kind,
        witness,
        maxima: per_var.iter().map(|(m, _, _)| m.clone()).collect(),
        duals: per_var.into_iter().map(|(_, _, y)| y).collect(),
    }
}

/// Limits for the integer oracle.
#[derive(Debug, Clone, Copy)]
pub struct OracleLimits {
    pub max_vars: usize,
    pub max_box: u64,
    pub node_budget: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_vars: 16,
            max_box: 20,
            node_budget: 5_000_000,
        }
    }
}

/// Exhaustive search over integer vectors in [0, box_bound]^n.
pub fn integer_oracle(sys: &FeasibilitySystem, box_bound: u64) -> Result<FeasibilityVerdict, FeasibilityError> {
    integer_oracle_with(sys, box_bound, OracleLimits::default())
}

pub fn integer_oracle_with(
    sys: &FeasibilitySystem,
    box_bound: u64,
    limits: OracleLimits,
) -> Result<FeasibilityVerdict, FeasibilityError> {
    let n = sys.cols();
    if n > limits.max_vars {
        return Err(FeasibilityError::TooManyVariables {
            vars: n,
            max: limits.max_vars,
        });
    }
    if box_bound > limits.max_box {
        return Err(FeasibilityError::BoxTooLarge {
            bound: box_bound,
            max: limits.max_box,
        });
    }
    let m = sys.rows.len();
    // Rows scaled to integers: row r reads Σ a[r][k] x_k <= b[r].
    let mut a = vec![vec![0i128; n]; m];
    let mut b = vec![0i128; m];
    for r in 0..m {
        let l = Q::from_integer(denom_lcm(sys.matrix[r].iter().chain(std::iter::once(&sys.rhs[r]))));
        let int = |x: &Q| (x * &l).to_integer().to_i128().ok_or(FeasibilityError::Overflow);
        for (ak, x) in a[r].iter_mut().zip(&sys.matrix[r]) {
            *ak = int(x)?;
        }
        b[r] = int(&sys.rhs[r])?;
    }
    let bound = box_bound as i128;
    // Most negative contribution still available from variables k.. in each row.
    let mut tail_min = vec![vec![0i128; m]; n + 1];
    for k in (0..n).rev() {
        for r in 0..m {
            tail_min[k][r] = tail_min[k + 1][r] + a[r][k].min(0) * bound;
        }
    }
    struct Search {
        a: Vec<Vec<i128>>,
        b: Vec<i128>,
        tail_min: Vec<Vec<i128>>,
        bound: i128,
        nodes: u64,
        budget: u64,
        x: Vec<u64>,
        best: Vec<u64>,
        witness: Option<Vec<u64>>,
        any_feasible: bool,
    }
    impl Search {
        /// Rows that cannot be satisfied by any completion of the prefix.
        fn dead(&self, k: usize, partial: &[i128]) -> Vec<usize> {
            let t = &self.tail_min[k];
            (0..partial.len()).filter(|&r| partial[r] + t[r] > self.b[r]).collect()
        }

        fn go(&mut self, k: usize, partial: &mut [i128]) -> Result<(), FeasibilityError> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(FeasibilityError::BudgetExceeded(self.budget));
            }
            if k == self.x.len() {
                self.any_feasible = true;
                for (b, &v) in self.best.iter_mut().zip(&self.x) {
                    *b = (*b).max(v);
                }
                if self.witness.is_none() && self.x.iter().any(|&v| v > 0) {
                    self.witness = Some(self.x.clone());
                }
                return Ok(());
            }
            let mut v = 0;
            while v <= self.bound {
                self.x[k] = v as u64;
                let dead = self.dead(k + 1, partial);
                if dead.is_empty() {
                    self.go(k + 1, partial)?;
                } else if dead.iter().all(|&r| self.a[r][k] >= 0) {
                    // Raising x_k cannot repair any violated row.
                    break;
                }
                for (p, row) in partial.iter_mut().zip(&self.a) {
                    *p += row[k];
                }
                v += 1;
            }
            for (p, row) in partial.iter_mut().zip(&self.a) {
                *p -= row[k] * v;
            }
            self.x[k] = 0;
            Ok(())
        }
    }
    let mut s = Search {
        a,
        b,
        tail_min,
        bound,
        nodes: 0,
        budget: limits.node_budget,
        x: vec![0; n],
        best: vec![0; n],
        witness: None,
        any_feasible: false,
    };
    let mut partial = vec![0i128; m];
    if s.dead(0, &partial).is_empty() {
        s.go(0, &mut partial)?;
    }
    let witness: Option<Vec<Q>> = s.witness.map(|w| w.into_iter().map(|v| q(v as i64)).collect());
    let maxima = if s.any_feasible {
        s.best.iter().map(|&v| Maximum::Finite(q(v as i64))).collect()
    } else {
        vec![Maximum::Empty; n]
    };
    Ok(FeasibilityVerdict {
        kind: if witness.is_some() {
            VerdictKind::Witness
        } else {
            VerdictKind::OnlyTrivial
        },
        witness,
        maxima,
        duals: vec![None; n],
    })
}

/// Outcome of comparing the rational and integer verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    /// The rational witness has no integer counterpart in the box; `scaled` clears denominators.
    ScalingNote {
        scaled: Vec<Q>,
        reason: String,
    },
    Disagree(String),
}

/// OnlyTrivial over Q must imply OnlyTrivial over the box; a rational witness
/// must come with an integer witness or a scaling note.
pub fn compare_verdicts(
    sys: &FeasibilitySystem,
    rational: &FeasibilityVerdict,
    integer: &FeasibilityVerdict,
    box_bound: u64,
) -> Agreement {
    match (rational.kind, integer.kind) {
        (VerdictKind::OnlyTrivial, VerdictKind::OnlyTrivial) | (VerdictKind::Witness, VerdictKind::Witness) => {
            Agreement::Agree
        }
        (VerdictKind::OnlyTrivial, VerdictKind::Witness) => {
            Agreement::Disagree("integer witness exists but the rational system is only-trivial".into())
        }
        (VerdictKind::Witness, VerdictKind::OnlyTrivial) => {
            let w = rational.witness.as_ref().expect("witness verdict carries a witness");
            let l = Q::from_integer(denom_lcm(w));
            let scaled: Vec<Q> = w.iter().map(|v| v * &l).collect();
            let bq = q(box_bound as i64);
            let reason = if scaled.iter().any(|v| *v > bq) {
                "scaled witness leaves the box".to_string()
            } else if !sys.check_witness(&scaled) {
                "scaled witness violates a row (the rational witness is not integral up to scaling)".to_string()
            } else {
                return Agreement::Disagree("scaled rational witness lies in the box but was not found".into());
            };
            Agreement::ScalingNote { scaled, reason }
        }
    }
}
