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

//! Open convex sets: H-polyhedra, strip sets and Minkowski thickenings.
//!
//! Every representation describes an open set. Membership is decided in exact
//! rational arithmetic for all three shapes; only reported radii under the L2
//! norm fall back to binary64 when a square root is irrational.

mod minkowski;

pub use minkowski::{nearest_point, Gauge, Projection};

use num_traits::Signed;
use serde::Serialize;

use crate::counterexample::BiorthogonalSystem;
use crate::error::{Error, Result};
use crate::lp::{feasible_point, Feasibility, Inequality};
use crate::scalar::{self, Extended, Rational, Scalar};
use crate::vector::{check_dim, dual_norm, dual_norm_bounds, Functional, NormKind, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct ConvexSet {
    dim: usize,
    norm: NormKind,
    shape: Shape,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Shape {
    Polyhedron(Polyhedron),
    Strip(StripSet),
    Minkowski(MinkowskiSum),
}

/// `{x : <a_i, x> < b_i}` with optional non-strict rows for closures.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyhedron {
    pub rows: Vec<Inequality>,
}

/// `{x : |f_n(x)| < R_n for all n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct StripSet {
    pub system: BiorthogonalSystem,
    pub radii: Vec<StripRadius>,
}

/// A strip radius kept as its exact square so membership stays exact even
/// when the radius itself is irrational.
#[derive(Clone, Debug, PartialEq)]
pub struct StripRadius {
    pub squared: Rational,
    pub value: Scalar,
}

impl StripRadius {
    pub fn exact(r: Rational) -> Self {
        StripRadius {
            squared: &r * &r,
            value: Scalar::Exact(r),
        }
    }

    /// `eps * ||f||_*` under the ambient norm `kind`.
    pub fn scaled_dual(eps: &Rational, f: &Functional, kind: NormKind) -> Result<Self> {
        let dual = dual_norm(f, kind)?;
        let dual_sq = match kind.dual() {
            NormKind::L2 => crate::vector::sum_sq(f.coords()),
            _ => {
                let q = dual.to_rational();
                &q * &q
            }
        };
        Ok(StripRadius {
            squared: eps * eps * dual_sq,
            value: Scalar::Exact(eps.clone()).mul(&dual),
        })
    }

    /// Rigorous lower bound on the radius.
    pub fn lower(&self) -> Rational {
        match &self.value {
            Scalar::Exact(r) => r.clone(),
            Scalar::Approx(_) => scalar::sqrt_lower(&self.squared),
        }
    }
}

/// `inner + B(0, radius)`, where `inner` lives on the first `inner.dim()`
/// coordinates and the ball uses the ambient norm.
#[derive(Clone, Debug, PartialEq)]
pub struct MinkowskiSum {
    pub inner: Box<ConvexSet>,
    pub radius: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipVerdict {
    pub inside: bool,
    /// Constraint (row or functional, 0-based) with the smallest slack.
    pub binding: Option<usize>,
}

impl ConvexSet {
    pub fn polyhedron(dim: usize, norm: NormKind, rows: Vec<Inequality>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("ambient dimension must be at least 1"));
        }
        for (i, r) in rows.iter().enumerate() {
            check_dim(dim, r.normal.dim()).map_err(|e| Error::invalid(format!("row {i}: {e}")))?;
        }
        Ok(ConvexSet {
            dim,
            norm,
            shape: Shape::Polyhedron(Polyhedron { rows }),
        })
    }

    /// The open half-space `{x : <a, x> < b}`.
    pub fn half_space(norm: NormKind, a: Functional, b: Rational) -> Result<Self> {
        let dim = a.dim();
        Self::polyhedron(dim, norm, vec![Inequality::strict(a, b)])
    }

    /// The open box `prod (lo_i, hi_i)`.
    pub fn open_box(norm: NormKind, lo: &[Rational], hi: &[Rational]) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::invalid("box bounds differ in length"));
        }
        let dim = lo.len();
        let mut rows = Vec::with_capacity(2 * dim);
        for i in 0..dim {
            if lo[i] >= hi[i] {
                return Err(Error::invalid(format!("empty box side {i}")));
            }
            rows.push(Inequality::strict(Functional::basis(dim, i), hi[i].clone()));
            rows.push(Inequality::strict(
                -&Functional::basis(dim, i),
                -lo[i].clone(),
            ));
        }
        Self::polyhedron(dim, norm, rows)
    }

    pub fn strip(
        system: BiorthogonalSystem,
        radii: Vec<StripRadius>,
        norm: NormKind,
    ) -> Result<Self> {
        if radii.len() != system.count() {
            return Err(Error::invalid(format!(
                "{} radii for {} functionals",
                radii.len(),
                system.count()
            )));
        }
        if let Some(n) = radii
            .iter()
            .position(|r| !r.squared.is_positive() || r.value.to_f64() <= 0.0)
        {
            return Err(Error::invalid(format!("strip radius {n} is not positive")));
        }
        Ok(ConvexSet {
            dim: system.dim(),
            norm,
            shape: Shape::Strip(StripSet { system, radii }),
        })
    }

    pub fn strip_exact(
        system: BiorthogonalSystem,
        radii: Vec<Rational>,
        norm: NormKind,
    ) -> Result<Self> {
        if let Some(n) = radii.iter().position(|r| !r.is_positive()) {
            return Err(Error::invalid(format!("strip radius {n} is not positive")));
        }
        Self::strip(
            system,
            radii.into_iter().map(StripRadius::exact).collect(),
            norm,
        )
    }

    pub fn minkowski(inner: ConvexSet, dim: usize, radius: Rational) -> Result<Self> {
        if inner.dim > dim {
            return Err(Error::invalid(format!(
                "inner dimension {} exceeds ambient dimension {dim}",
                inner.dim
            )));
        }
        if matches!(inner.shape, Shape::Minkowski(_)) {
            return Err(Error::invalid("nested Minkowski sums are not supported"));
        }
        if !radius.is_positive() {
            return Err(Error::invalid("ball radius must be positive"));
        }
        if let Shape::Strip(s) = &inner.shape {
            if s.radii.iter().any(|r| !r.value.is_exact()) {
                return Err(Error::invalid(
                    "inner strip sets of a Minkowski sum need rational radii",
                ));
            }
        }
        let norm = inner.norm;
        Ok(ConvexSet {
            dim,
            norm,
            shape: Shape::Minkowski(MinkowskiSum {
                inner: Box::new(inner),
                radius,
            }),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> NormKind {
        self.norm
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    /// Same set measured in another norm.
    pub fn with_norm(&self, norm: NormKind) -> ConvexSet {
        let mut s = self.clone();
        s.norm = norm;
        if let Shape::Minkowski(m) = &mut s.shape {
            m.inner.norm = norm;
        }
        s
    }

    /// Whether ray lengths have a closed form (polyhedra and strips).
    pub fn has_closed_form(&self) -> bool {
        !matches!(self.shape, Shape::Minkowski(_))
    }

    pub fn contains(&self, x: &Vector) -> Result<MembershipVerdict> {
        check_dim(self.dim, x.dim())?;
        Ok(match &self.shape {
            Shape::Polyhedron(p) => {
                let mut binding: Option<(usize, Rational)> = None;
                let mut inside = true;
                for (i, row) in p.rows.iter().enumerate() {
                    inside &= row.holds(x);
                    if row.normal.is_zero() {
                        continue;
                    }
                    let s = row.slack(x);
                    if binding.as_ref().is_none_or(|(_, b)| s < *b) {
                        binding = Some((i, s));
                    }
                }
                MembershipVerdict {
                    inside,
                    binding: binding.map(|(i, _)| i),
                }
            }
            Shape::Strip(s) => {
                let mut inside = true;
                let mut binding: Option<(usize, f64)> = None;
                for (n, (f, r)) in s.system.functionals().iter().zip(&s.radii).enumerate() {
                    let v = f.apply(x);
                    inside &= &v * &v < r.squared;
                    let slack = match &r.value {
                        Scalar::Exact(q) => scalar::to_f64(&(q - v.abs())),
                        Scalar::Approx(q) => q - scalar::to_f64(&v.abs()),
                    };
                    if binding.is_none_or(|(_, b)| slack < b) {
                        binding = Some((n, slack));
                    }
                }
                MembershipVerdict {
                    inside,
                    binding: binding.map(|(n, _)| n),
                }
            }
            Shape::Minkowski(m) => MembershipVerdict {
                inside: self.minkowski_gauge(m, x)?.lt(&m.radius),
                binding: None,
            },
        })
    }

    pub fn is_inside(&self, x: &Vector) -> Result<bool> {
        Ok(self.contains(x)?.inside)
    }

    /// Distance from `x` to the closure of the inner set, composed per the ambient norm.
    fn minkowski_gauge(&self, m: &MinkowskiSum, x: &Vector) -> Result<Gauge> {
        let k = m.inner.dim;
        let proj = nearest_point(&m.inner, &x.head(k))?;
        Ok(proj.distance.compose(&x.tail(k)))
    }

    /// Distance from `x` to the closure of the inner set of a Minkowski sum.
    pub fn distance_to_inner(&self, x: &Vector) -> Result<Option<Gauge>> {
        check_dim(self.dim, x.dim())?;
        match &self.shape {
            Shape::Minkowski(m) => self.minkowski_gauge(m, x).map(Some),
            _ => Ok(None),
        }
    }

    fn interior_or_err(&self, x: &Vector) -> Result<()> {
        if !self.contains(x)?.inside {
            return Err(Error::NotInSet);
        }
        if let Shape::Polyhedron(p) = &self.shape {
            // non-strict rows at equality leave no room for a ball
            if p.rows
                .iter()
                .any(|r| !r.normal.is_zero() && !r.slack(x).is_positive())
            {
                return Err(Error::NotInSet);
            }
        }
        Ok(())
    }

    /// Largest `delta` with `B(x, delta)` inside the set.
    pub fn inner_radius(&self, x: &Vector) -> Result<Extended> {
        self.interior_or_err(x)?;
        Ok(match &self.shape {
            Shape::Polyhedron(p) => {
                let mut best: Option<Scalar> = None;
                for row in p.rows.iter().filter(|r| !r.normal.is_zero()) {
                    let d = Scalar::Exact(row.slack(x)).div(&dual_norm(&row.normal, self.norm)?);
                    best = Some(match best {
                        None => d,
                        Some(b) => b.min(d),
                    });
                }
                best.map_or(Extended::Infinite, Extended::Finite)
            }
            Shape::Strip(s) => {
                let mut best: Option<Scalar> = None;
                for (f, r) in s.system.functionals().iter().zip(&s.radii) {
                    let slack = r.value.sub(&Scalar::Exact(f.apply(x).abs()));
                    let d = slack.div(&dual_norm(f, self.norm)?);
                    best = Some(match best {
                        None => d,
                        Some(b) => b.min(d),
                    });
                }
                best.map_or(Extended::Infinite, Extended::Finite)
            }
            Shape::Minkowski(m) => {
                let g = self.minkowski_gauge(m, x)?;
                Extended::Finite(Scalar::Exact(m.radius.clone()).sub(&g.to_scalar()))
            }
        })
    }

    /// A positive rational lower bound on the inner radius at `x`
    /// (`None` when the radius is infinite). Balls of this radius are
    /// guaranteed to lie inside the set.
    pub fn safe_inner_radius(&self, x: &Vector) -> Result<Option<Rational>> {
        self.interior_or_err(x)?;
        let bound = match &self.shape {
            Shape::Polyhedron(p) => p
                .rows
                .iter()
                .filter(|r| !r.normal.is_zero())
                .map(|r| r.slack(x) / dual_norm_bounds(&r.normal, self.norm).1)
                .min(),
            Shape::Strip(s) => s
                .system
                .functionals()
                .iter()
                .zip(&s.radii)
                .map(|(f, r)| (r.lower() - f.apply(x).abs()) / dual_norm_bounds(f, self.norm).1)
                .min(),
            Shape::Minkowski(m) => {
                let g = self.minkowski_gauge(m, x)?;
                Some(&m.radius - g.upper())
            }
        };
        match bound {
            Some(b) if !b.is_positive() => Err(Error::Internal(
                "inner radius bound is not positive for an interior point".into(),
            )),
            other => Ok(other),
        }
    }

    /// Closed inequalities describing the closure (polyhedra and strips with
    /// rational radii).
    pub fn closure_rows(&self) -> Result<Vec<Inequality>> {
        match &self.shape {
            Shape::Polyhedron(p) => Ok(p
                .rows
                .iter()
                .map(|r| Inequality::closed(r.normal.clone(), r.bound.clone()))
                .collect()),
            Shape::Strip(s) => {
                let mut rows = Vec::with_capacity(2 * s.radii.len());
                for (f, r) in s.system.functionals().iter().zip(&s.radii) {
                    let Scalar::Exact(q) = &r.value else {
                        return Err(Error::invalid(
                            "strip radius is irrational; no rational closure rows",
                        ));
                    };
                    rows.push(Inequality::closed(f.clone(), q.clone()));
                    rows.push(Inequality::closed(-f, q.clone()));
                }
                Ok(rows)
            }
            Shape::Minkowski(_) => Err(Error::invalid(
                "Minkowski sums have no finite inequality description",
            )),
        }
    }

    /// Some exact point of the (open) set.
    pub fn interior_point(&self) -> Result<Vector> {
        match &self.shape {
            Shape::Polyhedron(p) => match feasible_point(&p.rows, self.dim)? {
                Feasibility::Feasible(x) => Ok(x),
                Feasibility::Infeasible => Err(Error::EmptySet),
            },
            // every strip set contains the origin
            Shape::Strip(_) => Ok(Vector::zeros(self.dim)),
            Shape::Minkowski(m) => Ok(m.inner.interior_point()?.embed(self.dim)),
        }
    }

    pub fn is_empty(&self) -> Result<bool> {
        match self.interior_point() {
            Ok(_) => Ok(false),
            Err(Error::EmptySet) => Ok(true),
            Err(e) => Err(e),
        }
    }
}
