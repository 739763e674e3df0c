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

//! Nearest points of closed inner sets, used for Minkowski-sum membership.

use num_traits::{Signed, Zero};

use super::{ConvexSet, Shape, StripSet};
use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{solve, Inequality, LinearProgram, LpOutcome, Relation};
use crate::scalar::{self, Rational, Scalar};
use crate::vector::{sum_sq, Functional, NormKind, Vector};

/// Subsets of active rows examined by the L2 projection before giving up.
const MAX_ACTIVE_SETS: usize = 200_000;

/// A distance kept exact: the distance itself for L1/Linf, its square for L2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gauge {
    pub kind: NormKind,
    pub raw: Rational,
}

impl Gauge {
    pub fn of(v: &Vector, kind: NormKind) -> Gauge {
        let c = v.coords();
        let raw = match kind {
            NormKind::L1 => c.iter().fold(Rational::zero(), |a, x| a + x.abs()),
            NormKind::L2 => sum_sq(c),
            NormKind::Linf => c
                .iter()
                .map(Signed::abs)
                .max()
                .unwrap_or_else(Rational::zero),
        };
        Gauge { kind, raw }
    }

    /// Combines a distance within the subspace with the orthogonal component.
    pub fn compose(&self, orthogonal: &Vector) -> Gauge {
        let other = Gauge::of(orthogonal, self.kind);
        let raw = match self.kind {
            NormKind::Linf => self.raw.clone().max(other.raw),
            _ => &self.raw + other.raw,
        };
        Gauge {
            kind: self.kind,
            raw,
        }
    }

    /// Exact `distance < r`.
    pub fn lt(&self, r: &Rational) -> bool {
        match self.kind {
            NormKind::L2 => self.raw < r * r,
            _ => &self.raw < r,
        }
    }

    pub fn to_scalar(&self) -> Scalar {
        match self.kind {
            NormKind::L2 => scalar::sqrt_scalar(&self.raw),
            _ => Scalar::Exact(self.raw.clone()),
        }
    }

    pub fn upper(&self) -> Rational {
        match self.kind {
            NormKind::L2 => scalar::sqrt_upper(&self.raw),
            _ => self.raw.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Projection {
    pub point: Vector,
    pub distance: Gauge,
}

/// Nearest point of the closure of `inner` to `y`, in `inner`'s norm.
pub fn nearest_point(inner: &ConvexSet, y: &Vector) -> Result<Projection> {
    crate::vector::check_dim(inner.dim(), y.dim())?;
    let kind = inner.norm();
    let point = match inner.shape() {
        Shape::Strip(s)
            if s.system.is_coordinate_aligned()
                || (kind == NormKind::L2 && s.system.is_orthonormal()) =>
        {
            clamp(s, y)?
        }
        Shape::Minkowski(_) => {
            return Err(Error::invalid("nested Minkowski sums are not supported"))
        }
        _ => {
            let rows = inner.closure_rows()?;
            match kind {
                NormKind::L2 => project_l2(&rows, y)?,
                _ => project_lp(&rows, y, kind)?,
            }
        }
    };
    let distance = Gauge::of(&(y - &point), kind);
    Ok(Projection { point, distance })
}

/// Moves `y` back into each slab along its (orthonormal or coordinate) functional.
fn clamp(s: &StripSet, y: &Vector) -> Result<Vector> {
    let mut w = y.clone();
    for (f, r) in s.system.functionals().iter().zip(&s.radii) {
        let Scalar::Exact(r) = &r.value else {
            return Err(Error::invalid(
                "irrational strip radius in Minkowski inner set",
            ));
        };
        let v = f.apply(y);
        let excess = v.abs() - r;
        if excess.is_positive() {
            let step = if v.is_positive() { excess } else { -excess };
            w = w.along(&f.as_vector(), &(-step));
        }
    }
    Ok(w)
}

/// Euclidean projection onto a closed polyhedron by active-set enumeration.
///
/// The projection lies on some face, whose affine hull is cut out by at most
/// `k` independent active rows; a candidate with nonnegative multipliers that
/// satisfies every row is the projection (KKT).
fn project_l2(rows: &[Inequality], y: &Vector) -> Result<Vector> {
    if rows.iter().all(|r| r.holds(y)) {
        return Ok(y.clone());
    }
    let active: Vec<&Inequality> = rows.iter().filter(|r| !r.normal.is_zero()).collect();
    let k = y.dim();
    let mut examined = 0usize;
    let mut best: Option<(Rational, Vector)> = None;
    let mut combo: Vec<usize> = Vec::new();
    for size in 1..=k.min(active.len()) {
        combo.clear();
        combo.extend(0..size);
        loop {
            examined += 1;
            if examined > MAX_ACTIVE_SETS {
                return Err(Error::invalid(
                    "inner polyhedron too large for exact Euclidean projection",
                ));
            }
            if let Some((lambda, w)) = project_onto_faces(&active, &combo, y) {
                if rows.iter().all(|r| r.holds(&w)) {
                    if lambda.iter().all(|l| !l.is_negative()) {
                        return Ok(w);
                    }
                    let d = sum_sq((y - &w).coords());
                    if best.as_ref().is_none_or(|(b, _)| d < *b) {
                        best = Some((d, w));
                    }
                }
            }
            if !next_combination(&mut combo, active.len()) {
                break;
            }
        }
    }
    best.map(|(_, w)| w)
        .ok_or_else(|| Error::invalid("inner polyhedron is empty"))
}

fn project_onto_faces(
    rows: &[&Inequality],
    combo: &[usize],
    y: &Vector,
) -> Option<(Vec<Rational>, Vector)> {
    let normals: Vec<&Functional> = combo.iter().map(|&i| &rows[i].normal).collect();
    let gram: linalg::Matrix = normals
        .iter()
        .map(|a| normals.iter().map(|b| a.dot(b.coords())).collect())
        .collect();
    let rhs: Vec<Rational> = combo
        .iter()
        .map(|&i| rows[i].normal.apply(y) - &rows[i].bound)
        .collect();
    let lambda = linalg::solve(&gram, &rhs)?;
    let mut w = y.clone();
    for (a, l) in normals.iter().zip(&lambda) {
        w = w.along(&a.as_vector(), &(-l));
    }
    Some((lambda, w))
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// L1 / Linf projection as a linear program over `(w, s)`.
fn project_lp(rows: &[Inequality], y: &Vector, kind: NormKind) -> Result<Vector> {
    let k = y.dim();
    let slack_vars = if kind == NormKind::L1 { k } else { 1 };
    let n = k + slack_vars;
    let unit = |i: usize, c: i64| {
        let mut v = vec![Rational::zero(); n];
        v[i] = scalar::int(c);
        v
    };
    let mut objective = vec![Rational::zero(); n];
    for c in objective.iter_mut().skip(k) {
        *c = scalar::int(1);
    }
    let mut lp = LinearProgram::minimize(Functional::new(objective));
    for r in rows {
        let mut c = r.normal.coords().to_vec();
        c.resize(n, Rational::zero());
        lp.push(Functional::new(c), Relation::Le, r.bound.clone());
    }
    for j in 0..k {
        let s = if kind == NormKind::L1 { k + j } else { k };
        // y_j - w_j <= s  and  w_j - y_j <= s
        let mut a = unit(j, -1);
        a[s] = scalar::int(-1);
        lp.push(Functional::new(a), Relation::Le, -y[j].clone());
        let mut b = unit(j, 1);
        b[s] = scalar::int(-1);
        lp.push(Functional::new(b), Relation::Le, y[j].clone());
    }
    match solve(&lp)? {
        LpOutcome::Optimal { point, .. } => Ok(point.head(k)),
        LpOutcome::Infeasible => Err(Error::invalid("inner polyhedron is empty")),
        LpOutcome::Unbounded { .. } => Err(Error::Internal("distance LP unbounded".into())),
    }
}
