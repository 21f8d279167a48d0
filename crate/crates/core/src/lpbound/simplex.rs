//! Dense two-phase simplex over exact rationals.
//!
//! Problems are always maximizations over `x >= 0`. The dual returned with an
//! optimal solution uses the sign convention of that form: `y_r >= 0` on `<=`
//! rows, `y_r <= 0` on `>=` rows, free on equalities, and `A^T y >= c`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub num_vars: usize,
    /// Maximized.
    pub objective: Vec<Q>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Optimal,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    pub status: Status,
    pub value: Q,
    pub x: Vec<Q>,
    pub y: Vec<Q>,
    /// `(A^T y - c)_j`, nonnegative at optimality.
    pub reduced_costs: Vec<Q>,
}

impl LinearProgram {
    pub fn new(num_vars: usize, objective: Vec<Q>) -> LinearProgram {
        assert_eq!(objective.len(), num_vars);
        LinearProgram {
            num_vars,
            objective,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, coeffs: Vec<Q>, relation: Relation, rhs: Q) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.rows.push(Row {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn objective_value(&self, x: &[Q]) -> Q {
        dot(&self.objective, x)
    }

    /// Exact check of primal feasibility, dual feasibility and zero gap.
    pub fn verify(&self, sol: &Solution) -> std::result::Result<(), String> {
        if sol.status != Status::Optimal {
            return Err("solution is not optimal".into());
        }
        if sol.x.len() != self.num_vars || sol.y.len() != self.rows.len() {
            return Err("solution dimensions do not match the program".into());
        }
        if let Some(j) = sol.x.iter().position(|v| v.is_negative()) {
            return Err(format!("x_{j} is negative"));
        }
        for (r, row) in self.rows.iter().enumerate() {
            let lhs = dot(&row.coeffs, &sol.x);
            let ok = match row.relation {
                Relation::Le => lhs <= row.rhs,
                Relation::Ge => lhs >= row.rhs,
                Relation::Eq => lhs == row.rhs,
            };
            if !ok {
                return Err(format!("row {r} violated: {lhs} vs {}", row.rhs));
            }
            let y = &sol.y[r];
            let sign_ok = match row.relation {
                Relation::Le => !y.is_negative(),
                Relation::Ge => !y.is_positive(),
                Relation::Eq => true,
            };
            if !sign_ok {
                return Err(format!("dual multiplier {r} has the wrong sign: {y}"));
            }
        }
        for j in 0..self.num_vars {
            let col: Q = self
                .rows
                .iter()
                .zip(&sol.y)
                .fold(Q::zero(), |s, (row, y)| s + &row.coeffs[j] * y);
            if col < self.objective[j] {
                return Err(format!("dual constraint for x_{j} violated"));
            }
        }
        let primal = self.objective_value(&sol.x);
        let dual = self
            .rows
            .iter()
            .zip(&sol.y)
            .fold(Q::zero(), |s, (row, y)| s + &row.rhs * y);
        if primal != dual || primal != sol.value {
            return Err(format!(
                "duality gap: primal {primal}, dual {dual}, reported {}",
                sol.value
            ));
        }
        Ok(())
    }

    pub fn solve(&self) -> Result<Solution> {
        Tableau::build(self).solve(self)
    }
}

pub(crate) fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |s, (x, y)| s + x * y)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ColKind {
    Original,
    Slack,
    Artificial,
}

struct Tableau {
    m: usize,
    /// Rows of `[B^{-1} A | B^{-1} b]`.
    t: Vec<Vec<Q>>,
    kinds: Vec<ColKind>,
    basis: Vec<usize>,
    /// Column holding `B^{-1} e_r` for each row, and the sign used to make
    /// the right-hand side nonnegative.
    identity_col: Vec<usize>,
    row_sign: Vec<Q>,
    /// `z_j = c_B^T B^{-1} A_j - c_j` followed by the objective value.
    z: Vec<Q>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let m = lp.rows.len();
        let n = lp.num_vars;
        let mut kinds = vec![ColKind::Original; n];
        let mut extra: Vec<(usize, usize, Q)> = Vec::new(); // (row, col, value)
        let mut identity_col = vec![0; m];
        let mut row_sign = vec![Q::one(); m];
        let mut basis = vec![0; m];
        for (r, row) in lp.rows.iter().enumerate() {
            let mut rel = row.relation;
            // negate rows with b < 0, and `>=` rows with b = 0 so they get a slack basis
            if row.rhs.is_negative() || (row.rhs.is_zero() && rel == Relation::Ge) {
                row_sign[r] = -Q::one();
                rel = match rel {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
            }
            match rel {
                Relation::Le => {
                    let c = kinds.len();
                    kinds.push(ColKind::Slack);
                    extra.push((r, c, Q::one()));
                    identity_col[r] = c;
                    basis[r] = c;
                }
                Relation::Ge => {
                    let s = kinds.len();
                    kinds.push(ColKind::Slack);
                    extra.push((r, s, -Q::one()));
                    let a = kinds.len();
                    kinds.push(ColKind::Artificial);
                    extra.push((r, a, Q::one()));
                    identity_col[r] = a;
                    basis[r] = a;
                }
                Relation::Eq => {
                    let a = kinds.len();
                    kinds.push(ColKind::Artificial);
                    extra.push((r, a, Q::one()));
                    identity_col[r] = a;
                    basis[r] = a;
                }
            }
        }
        let ncols = kinds.len();
        let mut t = vec![vec![Q::zero(); ncols + 1]; m];
        for (r, row) in lp.rows.iter().enumerate() {
            for j in 0..n {
                t[r][j] = &row.coeffs[j] * &row_sign[r];
            }
            t[r][ncols] = &row.rhs * &row_sign[r];
        }
        for (r, c, v) in extra {
            t[r][c] = v;
        }
        Tableau {
            m,
            t,
            kinds,
            basis,
            identity_col,
            row_sign,
            z: vec![Q::zero(); ncols + 1],
        }
    }

    fn ncols(&self) -> usize {
        self.kinds.len()
    }

    fn set_costs(&mut self, cost: &[Q]) {
        let nc = self.ncols();
        for j in 0..=nc {
            let mut v = if j < nc { -cost[j].clone() } else { Q::zero() };
            for r in 0..self.m {
                let cb = &cost[self.basis[r]];
                if !cb.is_zero() && !self.t[r][j].is_zero() {
                    v += cb * &self.t[r][j];
                }
            }
            self.z[j] = v;
        }
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let nc = self.ncols();
        let inv = self.t[pr][pc].recip();
        for j in 0..=nc {
            if !self.t[pr][j].is_zero() {
                self.t[pr][j] *= &inv;
            }
        }
        let prow = self.t[pr].clone();
        for r in 0..self.m {
            if r == pr || self.t[r][pc].is_zero() {
                continue;
            }
            let f = self.t[r][pc].clone();
            for j in 0..=nc {
                if !prow[j].is_zero() {
                    let d = &f * &prow[j];
                    self.t[r][j] -= d;
                }
            }
        }
        if !self.z[pc].is_zero() {
            let f = self.z[pc].clone();
            for j in 0..=nc {
                if !prow[j].is_zero() {
                    let d = &f * &prow[j];
                    self.z[j] -= d;
                }
            }
        }
        self.basis[pr] = pc;
    }

    /// Pivots to optimality over the allowed columns: most negative reduced
    /// cost first, switching to Bland's rule for good once `STALL`
    /// consecutive pivots leave the objective unchanged.
    fn optimize(&mut self, allowed: &dyn Fn(usize) -> bool) -> Result<()> {
        const STALL: usize = 20;
        let nc = self.ncols();
        let mut bland = false;
        let mut stalled = 0;
        loop {
            let candidates = (0..nc).filter(|&j| allowed(j) && self.z[j].is_negative());
            let entering = if bland {
                candidates.min()
            } else {
                candidates.min_by(|&a, &b| self.z[a].cmp(&self.z[b]).then(a.cmp(&b)))
            };
            let Some(pc) = entering else {
                return Ok(());
            };
            let mut best: Option<(usize, Q)> = None;
            for r in 0..self.m {
                if self.t[r][pc].is_positive() {
                    let ratio = &self.t[r][nc] / &self.t[r][pc];
                    let better = match &best {
                        None => true,
                        Some((br, bv)) => {
                            ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br])
                        }
                    };
                    if better {
                        best = Some((r, ratio));
                    }
                }
            }
            let Some((pr, ratio)) = best else {
                return Err(Error::Unbounded);
            };
            if ratio.is_zero() {
                stalled += 1;
                bland |= stalled >= STALL;
            } else {
                stalled = 0;
            }
            self.pivot(pr, pc);
        }
    }

    fn solve(mut self, lp: &LinearProgram) -> Result<Solution> {
        let nc = self.ncols();
        let n = lp.num_vars;
        if self.kinds.contains(&ColKind::Artificial) {
            let cost: Vec<Q> = self
                .kinds
                .iter()
                .map(|k| {
                    if *k == ColKind::Artificial {
                        -Q::one()
                    } else {
                        Q::zero()
                    }
                })
                .collect();
            self.set_costs(&cost);
            self.optimize(&|_| true)?;
            if self.z[nc].is_negative() {
                return Ok(Solution {
                    status: Status::Infeasible,
                    value: Q::zero(),
                    x: Vec::new(),
                    y: Vec::new(),
                    reduced_costs: Vec::new(),
                });
            }
            // drive zero-level artificials out of the basis where possible
            for r in 0..self.m {
                if self.kinds[self.basis[r]] == ColKind::Artificial {
                    if let Some(c) = (0..nc)
                        .find(|&j| self.kinds[j] != ColKind::Artificial && !self.t[r][j].is_zero())
                    {
                        self.pivot(r, c);
                    }
                }
            }
        }
        let mut cost = vec![Q::zero(); nc];
        cost[..n].clone_from_slice(&lp.objective);
        self.set_costs(&cost);
        let kinds = self.kinds.clone();
        self.optimize(&|j| kinds[j] != ColKind::Artificial)?;

        let mut x = vec![Q::zero(); n];
        for r in 0..self.m {
            if self.basis[r] < n {
                x[self.basis[r]] = self.t[r][nc].clone();
            }
        }
        let y: Vec<Q> = (0..self.m)
            .map(|r| &self.z[self.identity_col[r]] * &self.row_sign[r])
            .collect();
        let reduced_costs = self.z[..n].to_vec();
        Ok(Solution {
            status: Status::Optimal,
            value: self.z[nc].clone(),
            x,
            y,
            reduced_costs,
        })
    }
}
