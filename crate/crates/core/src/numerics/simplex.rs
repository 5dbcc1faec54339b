use crate::scalar::Scalar;

use super::NumericsError;

const PIVOT_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct LpConstraint<S> {
    pub coeffs: Vec<S>,
    pub relation: Relation,
    pub rhs: S,
}

impl<S> LpConstraint<S> {
    pub fn le(coeffs: Vec<S>, rhs: S) -> Self {
        LpConstraint {
            coeffs,
            relation: Relation::Le,
            rhs,
        }
    }
    pub fn ge(coeffs: Vec<S>, rhs: S) -> Self {
        LpConstraint {
            coeffs,
            relation: Relation::Ge,
            rhs,
        }
    }
    pub fn eq(coeffs: Vec<S>, rhs: S) -> Self {
        LpConstraint {
            coeffs,
            relation: Relation::Eq,
            rhs,
        }
    }
}

/// Minimize `objective . x` over free (sign-unrestricted) variables subject
/// to the constraints.
#[derive(Debug, Clone)]
pub struct LpProblem<S> {
    pub objective: Vec<S>,
    pub constraints: Vec<LpConstraint<S>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone)]
pub struct LpSolution<S> {
    pub status: LpStatus,
    /// Optimal point (meaningful only when `status == Optimal`).
    pub x: Vec<S>,
    /// `objective . x` of the returned point as computed, not the tableau value.
    pub objective: S,
}

struct Tableau<S> {
    rows: Vec<Vec<S>>,
    rhs: Vec<S>,
    basis: Vec<usize>,
    obj: Vec<S>,
    obj_val: S,
    ncols: usize,
}

impl<S: Scalar> Tableau<S> {
    fn pivot(&mut self, r: usize, c: usize) {
        let pivot = self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v = *v / pivot;
        }
        self.rhs[r] = self.rhs[r] / pivot;
        for i in 0..self.rows.len() {
            if i == r {
                continue;
            }
            let factor = self.rows[i][c];
            if factor == S::zero() {
                continue;
            }
            for j in 0..self.ncols {
                let delta = factor * self.rows[r][j];
                self.rows[i][j] = self.rows[i][j] - delta;
            }
            self.rhs[i] = self.rhs[i] - factor * self.rhs[r];
        }
        let factor = self.obj[c];
        if factor != S::zero() {
            self.obj_val = self.obj_val + factor * self.rhs[r];
            for j in 0..self.ncols {
                let delta = factor * self.rows[r][j];
                self.obj[j] = self.obj[j] - delta;
            }
        }
        self.basis[r] = c;
    }

    /// Reset the objective row to `cost` expressed in the current basis.
    fn set_objective(&mut self, cost: &[S]) {
        self.obj = cost.to_vec();
        self.obj_val = S::zero();
        for r in 0..self.rows.len() {
            let cb = cost[self.basis[r]];
            if cb == S::zero() {
                continue;
            }
            self.obj_val = self.obj_val + cb * self.rhs[r];
            for j in 0..self.ncols {
                let delta = cb * self.rows[r][j];
                self.obj[j] = self.obj[j] - delta;
            }
        }
    }

    fn current_value(&self) -> S {
        self.obj_val
    }

    /// Bland's rule: entering column is the lowest index with a negative
    /// reduced cost, the leaving row breaks ratio ties by the lowest basis
    /// variable index. Cycling-proof.
    fn run(&mut self, banned_from: usize, pivots_left: &mut usize) -> Result<LpStatus, NumericsError> {
        let enter_tol = S::cast(1e-9);
        let pivot_tol = S::cast(1e-11);
        loop {
            let mut entering = None;
            for j in 0..self.ncols {
                if j >= banned_from {
                    break;
                }
                if self.obj[j] < -enter_tol {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return Ok(LpStatus::Optimal);
            };
            let mut leaving: Option<(usize, S)> = None;
            for r in 0..self.rows.len() {
                let a = self.rows[r][c];
                if a <= pivot_tol {
                    continue;
                }
                let ratio = self.rhs[r] / a;
                leaving = match leaving {
                    None => Some((r, ratio)),
                    Some((best_r, best)) => {
                        if ratio < best
                            || (ratio == best && self.basis[r] < self.basis[best_r])
                        {
                            Some((r, ratio))
                        } else {
                            Some((best_r, best))
                        }
                    }
                };
            }
            let Some((r, _)) = leaving else {
                return Ok(LpStatus::Unbounded);
            };
            if *pivots_left == 0 {
                return Err(NumericsError::PivotCapExceeded { cap: PIVOT_CAP });
            }
            *pivots_left -= 1;
            self.pivot(r, c);
        }
    }
}

/// Dense two-phase simplex. Free variables are split into nonnegative
/// pairs; rows get slack, surplus, and artificial columns as needed.
pub fn lp_minimize<S: Scalar>(problem: &LpProblem<S>) -> Result<LpSolution<S>, NumericsError> {
    let nvars = problem.objective.len();
    for con in &problem.constraints {
        if con.coeffs.len() != nvars {
            return Err(NumericsError::DimensionMismatch {
                expected: nvars,
                got: con.coeffs.len(),
            });
        }
    }

    let m = problem.constraints.len();
    let split = 2 * nvars;
    let mut n_slack = 0;
    for con in &problem.constraints {
        if con.relation != Relation::Eq {
            n_slack += 1;
        }
    }
    // Worst case every row needs an artificial.
    let art_start = split + n_slack;
    let ncols = art_start + m;

    let mut rows: Vec<Vec<S>> = Vec::with_capacity(m);
    let mut rhs: Vec<S> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut n_art = 0;
    let mut slack_idx = 0;

    for con in &problem.constraints {
        let mut row = vec![S::zero(); ncols];
        let mut b = con.rhs;
        let negate = b < S::zero();
        for (j, &a) in con.coeffs.iter().enumerate() {
            let a = if negate { -a } else { a };
            row[2 * j] = a;
            row[2 * j + 1] = -a;
        }
        if negate {
            b = -b;
        }
        let relation = match (con.relation, negate) {
            (Relation::Eq, _) => Relation::Eq,
            (Relation::Le, false) | (Relation::Ge, true) => Relation::Le,
            (Relation::Ge, false) | (Relation::Le, true) => Relation::Ge,
        };
        match relation {
            Relation::Le => {
                row[split + slack_idx] = S::one();
                basis.push(split + slack_idx);
                slack_idx += 1;
            }
            Relation::Ge => {
                row[split + slack_idx] = -S::one();
                slack_idx += 1;
                row[art_start + n_art] = S::one();
                basis.push(art_start + n_art);
                n_art += 1;
            }
            Relation::Eq => {
                row[art_start + n_art] = S::one();
                basis.push(art_start + n_art);
                n_art += 1;
            }
        }
        rows.push(row);
        rhs.push(b);
    }

    let mut tab = Tableau {
        rows,
        rhs,
        basis,
        obj: vec![S::zero(); ncols],
        obj_val: S::zero(),
        ncols,
    };
    let mut pivots_left = PIVOT_CAP;

    // Phase 1: drive the artificials to zero.
    if n_art > 0 {
        let mut cost = vec![S::zero(); ncols];
        for j in art_start..art_start + n_art {
            cost[j] = S::one();
        }
        tab.set_objective(&cost);
        // Artificials may not re-enter once they leave; allowing only
        // columns below art_start keeps that invariant.
        match tab.run(art_start, &mut pivots_left)? {
            LpStatus::Optimal => {}
            // Phase 1 is bounded below by zero, so this cannot happen.
            _ => unreachable!("phase-1 objective is bounded"),
        }
        if tab.current_value() > S::cast(1e-8) {
            return Ok(LpSolution {
                status: LpStatus::Infeasible,
                x: vec![S::zero(); nvars],
                objective: S::zero(),
            });
        }
        // Pivot leftover basic artificials out, dropping dependent rows.
        let pivot_tol = S::cast(1e-11);
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= art_start {
                let mut found = None;
                for j in 0..art_start {
                    if tab.rows[r][j].abs() > pivot_tol {
                        found = Some(j);
                        break;
                    }
                }
                match found {
                    Some(j) => {
                        tab.pivot(r, j);
                        r += 1;
                    }
                    None => {
                        tab.rows.remove(r);
                        tab.rhs.remove(r);
                        tab.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
    }

    // Phase 2: the real objective on the split variables.
    let mut cost = vec![S::zero(); ncols];
    for (j, &c) in problem.objective.iter().enumerate() {
        cost[2 * j] = c;
        cost[2 * j + 1] = -c;
    }
    tab.set_objective(&cost);
    let status = tab.run(art_start, &mut pivots_left)?;
    if status == LpStatus::Unbounded {
        return Ok(LpSolution {
            status,
            x: vec![S::zero(); nvars],
            objective: S::neg_infinity(),
        });
    }

    let mut split_values = vec![S::zero(); ncols];
    for (r, &b) in tab.basis.iter().zip(tab.rhs.iter()) {
        split_values[*r] = b;
    }
    let x: Vec<S> = (0..nvars)
        .map(|j| split_values[2 * j] - split_values[2 * j + 1])
        .collect();
    let objective = problem
        .objective
        .iter()
        .zip(x.iter())
        .map(|(&c, &v)| c * v)
        .sum();

    Ok(LpSolution {
        status: LpStatus::Optimal,
        x,
        objective,
    })
}
