//   Copyright 2026 The recess Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.

//! Exact-rational linear programming.
//!
//! A dense two-phase simplex over `BigRational` with Bland's rule. Variables
//! are free; internally each is split as `x = p - n` with `p, n >= 0`. Problem
//! sizes are desk scale (at most a few hundred rows), so the dense tableau is
//! not a bottleneck.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{serde_rational, Rational};
use crate::vector::{check_dim, Functional, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinearConstraint {
    pub coeffs: Functional,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(coeffs: Functional, relation: Relation, rhs: Rational) -> Self {
        LinearConstraint {
            coeffs,
            relation,
            rhs,
        }
    }

    pub fn is_satisfied(&self, x: &Vector) -> bool {
        let lhs = self.coeffs.apply(x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Minimize `objective . x` subject to `constraints`, with `x` free in `R^num_vars`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearProgram {
    pub objective: Functional,
    pub constraints: Vec<LinearConstraint>,
}

impl LinearProgram {
    pub fn minimize(objective: Functional) -> Self {
        LinearProgram {
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn maximize(objective: Functional) -> Self {
        Self::minimize(-&objective)
    }

    pub fn num_vars(&self) -> usize {
        self.objective.dim()
    }

    pub fn with(mut self, coeffs: Functional, relation: Relation, rhs: Rational) -> Self {
        self.constraints
            .push(LinearConstraint::new(coeffs, relation, rhs));
        self
    }

    pub fn push(&mut self, coeffs: Functional, relation: Relation, rhs: Rational) {
        self.constraints
            .push(LinearConstraint::new(coeffs, relation, rhs));
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Optimal {
        point: Vector,
        value: Rational,
    },
    Infeasible,
    /// `ray` is a direction along which the objective decreases without bound:
    /// `a . ray <= 0` for `<=` rows, `= 0` for equality rows, `>= 0` for `>=` rows,
    /// and `c . ray < 0`.
    Unbounded {
        ray: Vector,
    },
}

impl LpOutcome {
    pub fn point(&self) -> Option<&Vector> {
        match self {
            LpOutcome::Optimal { point, .. } => Some(point),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Columns that may never enter (artificials in phase two).
    blocked: Vec<bool>,
    width: usize,
}

enum Step {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut z: Vec<Rational> = cost.to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (j, zj) in z.iter_mut().enumerate() {
                if !self.rows[i][j].is_zero() {
                    *zj -= &cost[b] * &self.rows[i][j];
                }
            }
        }
        z
    }

    /// Bland's rule: lowest-index improving column, lowest-index leaving basic variable.
    fn run(&mut self, cost: &[Rational]) -> Step {
        loop {
            let z = self.reduced_costs(cost);
            let entering = (0..self.width).find(|&j| !self.blocked[j] && z[j].is_negative());
            let Some(c) = entering else {
                return Step::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return Step::Unbounded(c),
            }
        }
    }

    fn values(&self) -> Vec<Rational> {
        let mut y = vec![Rational::zero(); self.width];
        for (i, &b) in self.basis.iter().enumerate() {
            y[b] = self.rhs(i).clone();
        }
        y
    }
}

pub fn solve(lp: &LinearProgram) -> Result<LpOutcome> {
    let d = lp.num_vars();
    if d == 0 {
        return Err(Error::invalid("linear program with no variables"));
    }
    for (i, row) in lp.constraints.iter().enumerate() {
        check_dim(d, row.coeffs.dim())
            .map_err(|e| Error::invalid(format!("constraint {i}: {e}")))?;
    }
    let m = lp.constraints.len();
    let slack_count = lp
        .constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let structural = 2 * d + slack_count;
    let width = structural + m;

    let mut rows = Vec::with_capacity(m);
    let mut slack = 2 * d;
    for (i, con) in lp.constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); width + 1];
        for (j, a) in con.coeffs.coords().iter().enumerate() {
            row[j] = a.clone();
            row[d + j] = -a;
        }
        match con.relation {
            Relation::Le => {
                row[slack] = Rational::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[width] = con.rhs.clone();
        if con.rhs.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
        row[structural + i] = Rational::one();
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        basis: (structural..width).collect(),
        blocked: vec![false; width],
        width,
    };

    let mut phase_one = vec![Rational::zero(); width];
    for c in phase_one.iter_mut().skip(structural) {
        *c = Rational::one();
    }
    if let Step::Unbounded(_) = t.run(&phase_one) {
        return Err(Error::Internal("phase one reported unbounded".into()));
    }
    let infeasibility = t
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= structural)
        .fold(Rational::zero(), |acc, (i, _)| acc + t.rhs(i));
    if infeasibility.is_positive() {
        return Ok(LpOutcome::Infeasible);
    }

    // Drive zero-valued artificials out of the basis; drop redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= structural {
            match (0..structural).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for b in t.blocked.iter_mut().skip(structural) {
        *b = true;
    }

    let mut cost = vec![Rational::zero(); width];
    for (j, c) in lp.objective.coords().iter().enumerate() {
        cost[j] = c.clone();
        cost[d + j] = -c;
    }
    let split =
        |y: &[Rational]| -> Vector { Vector::new((0..d).map(|j| &y[j] - &y[d + j]).collect()) };
    match t.run(&cost) {
        Step::Optimal => {
            let point = split(&t.values());
            let value = lp.objective.apply(&point);
            Ok(LpOutcome::Optimal { point, value })
        }
        Step::Unbounded(c) => {
            let mut y = vec![Rational::zero(); width];
            y[c] = Rational::one();
            for (i, &b) in t.basis.iter().enumerate() {
                y[b] = -t.rows[i][c].clone();
            }
            Ok(LpOutcome::Unbounded { ray: split(&y) })
        }
    }
}

/// A half-space `<normal, x> < bound` (strict) or `<= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    #[serde(rename = "a")]
    pub normal: Functional,
    #[serde(rename = "b", with = "serde_rational")]
    pub bound: Rational,
    #[serde(default = "default_strict")]
    pub strict: bool,
}

fn default_strict() -> bool {
    true
}

impl Inequality {
    pub fn strict(normal: Functional, bound: Rational) -> Self {
        Inequality {
            normal,
            bound,
            strict: true,
        }
    }

    pub fn closed(normal: Functional, bound: Rational) -> Self {
        Inequality {
            normal,
            bound,
            strict: false,
        }
    }

    /// `bound - <normal, x>`
    pub fn slack(&self, x: &Vector) -> Rational {
        &self.bound - self.normal.apply(x)
    }

    pub fn holds(&self, x: &Vector) -> bool {
        let s = self.slack(x);
        if self.strict {
            s.is_positive()
        } else {
            !s.is_negative()
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    Feasible(Vector),
    Infeasible,
}

/// Finds an exact point satisfying every row, strict rows strictly.
///
/// Strict rows are handled by maximizing a common slack `s <= 1`; the open
/// system is feasible iff the optimal slack is positive.
pub fn feasible_point(rows: &[Inequality], dim: usize) -> Result<Feasibility> {
    if dim == 0 {
        return Err(Error::invalid("feasibility problem with no variables"));
    }
    for (i, row) in rows.iter().enumerate() {
        check_dim(dim, row.normal.dim()).map_err(|e| Error::invalid(format!("row {i}: {e}")))?;
    }
    let any_strict = rows.iter().any(|r| r.strict);
    let n = if any_strict { dim + 1 } else { dim };
    let extend = |a: &Functional, s: i64| {
        let mut c = a.coords().to_vec();
        if any_strict {
            c.push(crate::scalar::int(s));
        }
        Functional::new(c)
    };
    let mut objective = vec![Rational::zero(); n];
    if any_strict {
        objective[dim] = -Rational::one();
    }
    let mut lp = LinearProgram::minimize(Functional::new(objective));
    for r in rows {
        lp.push(
            extend(&r.normal, i64::from(r.strict)),
            Relation::Le,
            r.bound.clone(),
        );
    }
    if any_strict {
        let mut cap = vec![Rational::zero(); n];
        cap[dim] = Rational::one();
        lp.push(Functional::new(cap), Relation::Le, Rational::one());
    }
    match solve(&lp)? {
        LpOutcome::Infeasible => Ok(Feasibility::Infeasible),
        LpOutcome::Unbounded { .. } => Err(Error::Internal(
            "bounded slack problem reported unbounded".into(),
        )),
        LpOutcome::Optimal { point, .. } => {
            if any_strict && !point[dim].is_positive() {
                return Ok(Feasibility::Infeasible);
            }
            let x = point.head(dim);
            if rows.iter().all(|r| r.holds(&x)) {
                Ok(Feasibility::Feasible(x))
            } else {
                Err(Error::Internal("feasible point failed re-check".into()))
            }
        }
    }
}
