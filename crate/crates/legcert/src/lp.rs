//! Exact rational linear programming: dense two-phase simplex with Bland's rule.
//!
//! Problems are `maximize c·x` subject to linear constraints and `x >= 0`.

use num_traits::{Signed, Zero};

use crate::rational::{Q, q};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub cmp: Cmp,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, cmp: Cmp, rhs: Q) -> Self {
        Constraint { coeffs, cmp, rhs }
    }

    pub fn holds(&self, x: &[Q]) -> bool {
        let lhs: Q = self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match self.cmp {
            Cmp::Le => lhs <= self.rhs,
            Cmp::Ge => lhs >= self.rhs,
            Cmp::Eq => lhs == self.rhs,
        }
    }
}

/// `maximize objective·x` subject to `constraints`, `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub vars: usize,
    pub objective: Vec<Q>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        x: Vec<Q>,
        value: Q,
    },
    Infeasible,
    /// `x` is feasible and `x + t·ray` stays feasible for all t >= 0 while the objective grows.
    Unbounded {
        x: Vec<Q>,
        ray: Vec<Q>,
    },
}

impl LinearProgram {
    pub fn new(vars: usize) -> Self {
        LinearProgram {
            vars,
            objective: vec![Q::zero(); vars],
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<Q>, cmp: Cmp, rhs: Q) {
        assert_eq!(coeffs.len(), self.vars);
        self.constraints.push(Constraint::new(coeffs, cmp, rhs));
    }

    /// Checks `x >= 0` and every constraint exactly.
    pub fn is_feasible(&self, x: &[Q]) -> bool {
        x.len() == self.vars && x.iter().all(|v| !v.is_negative()) && self.constraints.iter().all(|c| c.holds(x))
    }

    pub fn solve(&self) -> LpOutcome {
        Tableau::build(self).run(&self.objective)
    }
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    rhs: Vec<Q>,
    basis: Vec<usize>,
    n_orig: usize,
    n_cols: usize,
    artificial_from: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();
        let n = lp.vars;
        let mut extra = 0;
        let mut arts = 0;
        let norm: Vec<(Vec<Q>, Cmp, Q)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flip = match c.cmp {
                        Cmp::Le => Cmp::Ge,
                        Cmp::Ge => Cmp::Le,
                        Cmp::Eq => Cmp::Eq,
                    };
                    (c.coeffs.iter().map(|a| -a).collect(), flip, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.cmp, c.rhs.clone())
                }
            })
            .collect();
        for (_, cmp, _) in &norm {
            match cmp {
                Cmp::Le => extra += 1,
                Cmp::Ge => {
                    extra += 1;
                    arts += 1
                }
                Cmp::Eq => arts += 1,
            }
        }
        let artificial_from = n + extra;
        let n_cols = artificial_from + arts;
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut s, mut a) = (n, artificial_from);
        for (coeffs, cmp, b) in norm {
            let mut row = vec![Q::zero(); n_cols];
            row[..n].clone_from_slice(&coeffs);
            match cmp {
                Cmp::Le => {
                    row[s] = q(1);
                    basis.push(s);
                    s += 1;
                }
                Cmp::Ge => {
                    row[s] = q(-1);
                    s += 1;
                    row[a] = q(1);
                    basis.push(a);
                    a += 1;
                }
                Cmp::Eq => {
                    row[a] = q(1);
                    basis.push(a);
                    a += 1;
                }
            }
            rows.push(row);
            rhs.push(b);
        }
        Tableau {
            rows,
            rhs,
            basis,
            n_orig: n,
            n_cols,
            artificial_from,
        }
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let p = self.rows[r][col].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&prow) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        self.basis[r] = col;
    }

    /// Bland-rule simplex maximizing `cost` over columns `< limit`. Returns the unbounded column, if any.
    fn optimize(&mut self, cost: &[Q], limit: usize) -> Option<usize> {
        loop {
            let mut entering = None;
            for j in 0..limit {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut d = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        d -= &cost[b] * &self.rows[i][j];
                    }
                }
                if d.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let j = entering?;
            let mut best: Option<(Q, usize, usize)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][j].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][j];
                    let better = match &best {
                        None => true,
                        Some((r, _, bi)) => ratio < *r || (ratio == *r && self.basis[i] < *bi),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            match best {
                None => return Some(j),
                Some((_, i, _)) => self.pivot(i, j),
            }
        }
    }

    fn solution(&self) -> Vec<Q> {
        let mut x = vec![Q::zero(); self.n_orig];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.n_orig {
                x[b] = self.rhs[i].clone();
            }
        }
        x
    }

    fn run(mut self, objective: &[Q]) -> LpOutcome {
        if self.artificial_from < self.n_cols {
            let mut cost = vec![Q::zero(); self.n_cols];
            for c in cost.iter_mut().skip(self.artificial_from) {
                *c = q(-1);
            }
            self.optimize(&cost, self.n_cols);
            let infeas: Q = self
                .basis
                .iter()
                .zip(&self.rhs)
                .filter(|(b, _)| **b >= self.artificial_from)
                .map(|(_, v)| v.clone())
                .sum();
            if infeas.is_positive() {
                return LpOutcome::Infeasible;
            }
            // Drive zero-level artificials out of the basis; drop redundant rows.
            let mut i = 0;
            while i < self.rows.len() {
                if self.basis[i] >= self.artificial_from {
                    match (0..self.artificial_from).find(|&j| !self.rows[i][j].is_zero()) {
                        Some(j) => {
                            self.pivot(i, j);
                            i += 1;
                        }
                        None => {
                            self.rows.remove(i);
                            self.rhs.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        let mut cost = vec![Q::zero(); self.n_cols];
        cost[..self.n_orig].clone_from_slice(objective);
        let limit = self.artificial_from;
        match self.optimize(&cost, limit) {
            None => {
                let x = self.solution();
                let value = objective.iter().zip(&x).map(|(a, b)| a * b).sum();
                LpOutcome::Optimal { x, value }
            }
            Some(j) => {
                let x = self.solution();
                let mut ray = vec![Q::zero(); self.n_orig];
                if j < self.n_orig {
                    ray[j] = q(1);
                }
                for (i, &b) in self.basis.iter().enumerate() {
                    if b < self.n_orig {
                        ray[b] = -&self.rows[i][j];
                    }
                }
                LpOutcome::Unbounded { x, ray }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn small_optimum() {
        // max x + y, x + 2y <= 4, 3x + y <= 6
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![q(1), q(1)];
        lp.push(vec![q(1), q(2)], Cmp::Le, q(4));
        lp.push(vec![q(3), q(1)], Cmp::Le, q(6));
        match lp.solve() {
            LpOutcome::Optimal { x, value } => {
                assert_eq!(x, vec![qf(8, 5), qf(6, 5)]);
                assert_eq!(value, qf(14, 5));
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(1);
        lp.push(vec![q(1)], Cmp::Ge, q(1));
        lp.push(vec![q(1)], Cmp::Le, q(0));
        assert_eq!(lp.solve(), LpOutcome::Infeasible);
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![q(1), q(0)];
        lp.push(vec![q(1), q(-1)], Cmp::Le, q(1));
        match lp.solve() {
            LpOutcome::Unbounded { x, ray } => {
                assert!(lp.is_feasible(&x));
                let far: Vec<Q> = x.iter().zip(&ray).map(|(a, r)| a + r * q(100)).collect();
                assert!(lp.is_feasible(&far));
                assert!(ray[0].is_positive());
            }
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn equalities_and_negative_rhs() {
        // x - y = -2, x + y >= 4, min x (max -x)
        let mut lp = LinearProgram::new(2);
        lp.objective = vec![q(-1), q(0)];
        lp.push(vec![q(1), q(-1)], Cmp::Eq, q(-2));
        lp.push(vec![q(1), q(1)], Cmp::Ge, q(4));
        match lp.solve() {
            LpOutcome::Optimal { x, .. } => assert_eq!(x, vec![q(1), q(3)]),
            o => panic!("{o:?}"),
        }
    }
}
