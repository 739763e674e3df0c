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

//! Ray containment, ray length, recession cones and recession reports.
//!
//! Recession cones are computed on the closure of the (open) set. For a point
//! inside an open convex set, every recession direction of the closure gives
//! an open half-line that stays inside the set, so the closure is enough for
//! membership questions about rays.

mod certificates;

pub use certificates::{
    decompose, direction_set_invariance, limit_direction, midpoint_certificate,
    translate_ray_certificate, CertificateCheck, ContradictionCertificate, Decomposition,
    DirectionSet, Discrepancy, InvarianceReport, LimitDirection, MidpointCertificate,
};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp::{solve, LinearProgram, LpOutcome, Relation};
use crate::scalar::{self, serde_rational, Rational, Scalar};
use crate::sets::{ConvexSet, Shape};
use crate::vector::{check_dim, normalize, Functional, NormKind, Vector};

/// Numeric knobs shared by the oracle, the clustering surrogate and certificate searches.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Params {
    /// Tolerance for approximate (L2) comparisons.
    pub tolerance: f64,
    /// Oracle ray searches stop at `2^cap_exponent`.
    pub cap_exponent: u32,
    /// Bisection stops once `hi - lo <= relative_tolerance * lo`.
    pub relative_tolerance: f64,
    pub cluster_eps: f64,
    /// Largest net radius tried when escalating `cluster_eps` by factors of 10.
    pub cluster_eps_max: f64,
    pub min_cluster: usize,
    /// Doubling searches inside certificate construction stop at `2^search_cap_exponent`.
    pub search_cap_exponent: u32,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            tolerance: scalar::DEFAULT_TOLERANCE,
            cap_exponent: 40,
            relative_tolerance: 1e-9,
            cluster_eps: 1e-6,
            cluster_eps_max: 0.1,
            min_cluster: 10,
            search_cap_exponent: 64,
        }
    }
}

impl Params {
    pub fn cap(&self) -> Rational {
        Rational::from_integer(num_bigint::BigInt::one() << self.cap_exponent)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RayLength {
    /// `binding` is the 0-based row or functional index attaining the minimum
    /// (lowest index on ties); absent for oracle results.
    Finite {
        value: Scalar,
        binding: Option<usize>,
    },
    Infinite,
    /// The oracle was still inside the set at the cap. Never a proof of infinity.
    ExceedsCap {
        cap: Rational,
    },
}

impl RayLength {
    pub fn is_infinite(&self) -> bool {
        matches!(self, RayLength::Infinite)
    }

    pub fn value(&self) -> Option<&Scalar> {
        match self {
            RayLength::Finite { value, .. } => Some(value),
            _ => None,
        }
    }
}

fn check_ray_query(set: &ConvexSet, z: &Vector, u: &Vector) -> Result<()> {
    check_dim(set.dim(), z.dim())?;
    check_dim(set.dim(), u.dim())?;
    if u.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if !set.is_inside(z)? {
        return Err(Error::NotInSet);
    }
    Ok(())
}

/// `sup {t : z + s u in set for all s in (0, t)}`: closed form for polyhedra
/// and strips, bisection oracle for Minkowski sums.
pub fn ray_length(set: &ConvexSet, z: &Vector, u: &Vector, params: &Params) -> Result<RayLength> {
    check_ray_query(set, z, u)?;
    match set.shape() {
        Shape::Minkowski(_) => ray_length_oracle(set, z, u, params),
        _ => closed_form(set, z, u),
    }
}

fn closed_form(set: &ConvexSet, z: &Vector, u: &Vector) -> Result<RayLength> {
    let mut best: Option<(Scalar, usize)> = None;
    let mut offer = |value: Scalar, index: usize| {
        let better = match &best {
            None => true,
            Some((b, _)) => match (&value, b) {
                (Scalar::Exact(v), Scalar::Exact(b)) => v < b,
                _ => value.to_f64() < b.to_f64(),
            },
        };
        if better {
            best = Some((value, index));
        }
    };
    match set.shape() {
        Shape::Polyhedron(p) => {
            for (i, row) in p.rows.iter().enumerate() {
                let rate = row.normal.apply(u);
                if rate.is_positive() {
                    offer(Scalar::Exact(row.slack(z) / rate), i);
                }
            }
        }
        Shape::Strip(s) => {
            for (n, (f, r)) in s.system.functionals().iter().zip(&s.radii).enumerate() {
                let rate = f.apply(u);
                if rate.is_zero() {
                    continue;
                }
                let signed = if rate.is_positive() {
                    f.apply(z)
                } else {
                    -f.apply(z)
                };
                let value = r
                    .value
                    .sub(&Scalar::Exact(signed))
                    .div(&Scalar::Exact(rate.abs()));
                offer(value, n);
            }
        }
        Shape::Minkowski(_) => {
            return Err(Error::invalid(
                "no closed-form ray length for Minkowski sums",
            ))
        }
    }
    Ok(match best {
        Some((value, i)) => RayLength::Finite {
            value,
            binding: Some(i),
        },
        None => RayLength::Infinite,
    })
}

/// Ray length from membership queries only: doubling up to the cap, then
/// bisection. Parameters are dyadic rationals, so every query is exact.
pub fn ray_length_oracle(
    set: &ConvexSet,
    z: &Vector,
    u: &Vector,
    params: &Params,
) -> Result<RayLength> {
    check_ray_query(set, z, u)?;
    let inside = |t: &Rational| set.is_inside(&z.along(u, t));
    let cap = params.cap();
    let two = scalar::int(2);
    let (mut lo, mut hi);
    let mut t = Rational::one();
    if inside(&t)? {
        loop {
            if t >= cap {
                return Ok(RayLength::ExceedsCap { cap });
            }
            let next = &t * &two;
            if !inside(&next)? {
                lo = t;
                hi = next;
                break;
            }
            t = next;
        }
    } else {
        hi = t.clone();
        let mut halvings = 0;
        loop {
            t = &t / &two;
            halvings += 1;
            if inside(&t)? {
                lo = t;
                break;
            }
            if halvings > 2000 {
                return Err(Error::Internal("ray oracle found no interior step".into()));
            }
            hi = t.clone();
        }
    }
    let rel = scalar::from_f64(params.relative_tolerance)?;
    while &hi - &lo > &rel * &lo {
        let mid = (&lo + &hi) / &two;
        if inside(&mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(RayLength::Finite {
        value: Scalar::Approx(scalar::to_f64(&((lo + hi) / two))),
        binding: None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HalfLine {
    Contained,
    NotContained {
        length: Scalar,
    },
    /// The oracle reached the cap without leaving the set.
    NotProven {
        #[serde(with = "serde_rational")]
        cap: Rational,
    },
}

impl HalfLine {
    pub fn is_contained(&self) -> bool {
        matches!(self, HalfLine::Contained)
    }
}

/// Whether `{z + t u : t > 0}` lies in the set, decided from [`ray_length`].
/// For Minkowski sums, where the oracle cannot see past its cap, the exact
/// recession cone settles containment first.
pub fn contains_half_line(
    set: &ConvexSet,
    z: &Vector,
    u: &Vector,
    params: &Params,
) -> Result<HalfLine> {
    if !set.has_closed_form() && set.is_inside(z)? && ray_in_set(set, z, u)? {
        return Ok(HalfLine::Contained);
    }
    Ok(match ray_length(set, z, u, params)? {
        RayLength::Infinite => HalfLine::Contained,
        RayLength::Finite { value, .. } => HalfLine::NotContained { length: value },
        RayLength::ExceedsCap { cap } => HalfLine::NotProven { cap },
    })
}

/// Exact containment of the open ray `{z + t u : t > 0}`; `z` itself may lie
/// outside or on the boundary for polyhedra and strips.
pub fn ray_in_set(set: &ConvexSet, z: &Vector, u: &Vector) -> Result<bool> {
    check_dim(set.dim(), z.dim())?;
    check_dim(set.dim(), u.dim())?;
    if u.is_zero() {
        return Err(Error::ZeroDirection);
    }
    Ok(match set.shape() {
        Shape::Polyhedron(p) => p.rows.iter().all(|r| {
            let rate = r.normal.apply(u);
            let slack = r.slack(z);
            if rate.is_positive() {
                false
            } else if r.strict {
                slack.is_positive() || (slack.is_zero() && rate.is_negative())
            } else {
                !slack.is_negative()
            }
        }),
        Shape::Strip(s) => s.system.functionals().iter().zip(&s.radii).all(|(f, r)| {
            let v = f.apply(z);
            f.apply(u).is_zero() && &v * &v < r.squared
        }),
        Shape::Minkowski(_) => {
            if !set.is_inside(z)? {
                return Err(Error::invalid(
                    "rays of a Minkowski sum must start inside the set",
                ));
            }
            recession_cone(set)?.contains(u)
        }
    })
}

/// Recession cone of the closure of a set.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecessionCone {
    /// `{u : <a_i, u> <= 0}`.
    Polyhedral {
        rows: Vec<Functional>,
        dimension: usize,
        lineality: Vec<Vector>,
        sample_ray: Option<Vector>,
    },
    /// `{u : f_n(u) = 0}` with an exact basis.
    Subspace {
        annihilators: Vec<Functional>,
        basis: Vec<Vector>,
    },
    /// The inner cone placed on the first coordinates of `R^ambient_dim`.
    Embedded {
        inner: Box<RecessionCone>,
        ambient_dim: usize,
    },
}

impl RecessionCone {
    pub fn contains(&self, u: &Vector) -> bool {
        match self {
            RecessionCone::Polyhedral { rows, .. } => {
                rows.iter().all(|a| !a.apply(u).is_positive())
            }
            RecessionCone::Subspace { annihilators, .. } => {
                annihilators.iter().all(|f| f.apply(u).is_zero())
            }
            RecessionCone::Embedded { inner, .. } => {
                let k = inner.ambient();
                u.coords()[k..].iter().all(Zero::is_zero) && inner.contains(&u.head(k))
            }
        }
    }

    fn ambient(&self) -> usize {
        match self {
            RecessionCone::Polyhedral {
                rows,
                lineality,
                sample_ray,
                ..
            } => rows
                .first()
                .map(Functional::dim)
                .or_else(|| lineality.first().map(Vector::dim))
                .or_else(|| sample_ray.as_ref().map(Vector::dim))
                .unwrap_or(0),
            RecessionCone::Subspace {
                annihilators,
                basis,
            } => annihilators
                .first()
                .map(Functional::dim)
                .or_else(|| basis.first().map(Vector::dim))
                .unwrap_or(0),
            RecessionCone::Embedded { ambient_dim, .. } => *ambient_dim,
        }
    }

    /// Dimension of the linear span of the cone.
    pub fn dimension(&self) -> usize {
        match self {
            RecessionCone::Polyhedral { dimension, .. } => *dimension,
            RecessionCone::Subspace { basis, .. } => basis.len(),
            RecessionCone::Embedded { inner, .. } => inner.dimension(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.dimension() == 0
    }

    /// Whether the cone contains no line.
    pub fn lineality_is_trivial(&self) -> bool {
        match self {
            RecessionCone::Polyhedral { lineality, .. } => lineality.is_empty(),
            RecessionCone::Subspace { basis, .. } => basis.is_empty(),
            RecessionCone::Embedded { inner, .. } => inner.lineality_is_trivial(),
        }
    }

    /// A nonzero direction in the cone, if any.
    pub fn sample_ray(&self) -> Option<Vector> {
        match self {
            RecessionCone::Polyhedral { sample_ray, .. } => sample_ray.clone(),
            RecessionCone::Subspace { basis, .. } => basis.first().cloned(),
            RecessionCone::Embedded { inner, ambient_dim } => {
                inner.sample_ray().map(|u| u.embed(*ambient_dim))
            }
        }
    }
}

/// Cone `{u : A u <= 0}` with its span dimension, lineality space and a
/// relative-interior sample ray.
///
/// One LP finds the implicit equalities: maximize `sum t_i` with
/// `0 <= t_i <= 1`, `t_i <= -<a_i, u>`, `A u <= 0`. Scaling a relative-interior
/// point shows the optimum sets `t_i = 1` exactly on rows that are not implicit
/// equalities; the cone spans the kernel of the implicit rows.
pub fn polyhedral_cone(rows: Vec<Functional>, dim: usize) -> Result<RecessionCone> {
    let m = rows.len();
    let lineality = linalg::kernel_basis(
        &rows.iter().map(|a| a.coords().to_vec()).collect::<Vec<_>>(),
        dim,
    );
    if m == 0 {
        return Ok(RecessionCone::Polyhedral {
            rows,
            dimension: dim,
            sample_ray: lineality.first().cloned(),
            lineality,
        });
    }
    let n = dim + m;
    let mut objective = vec![Rational::zero(); n];
    for c in objective.iter_mut().skip(dim) {
        *c = Rational::one();
    }
    let mut lp = LinearProgram::maximize(Functional::new(objective));
    let unit = |j: usize| {
        let mut v = vec![Rational::zero(); n];
        v[j] = Rational::one();
        Functional::new(v)
    };
    for (i, a) in rows.iter().enumerate() {
        let mut c = a.coords().to_vec();
        c.resize(n, Rational::zero());
        lp.push(Functional::new(c.clone()), Relation::Le, Rational::zero());
        // t_i + <a_i, u> <= 0
        c[dim + i] = Rational::one();
        lp.push(Functional::new(c), Relation::Le, Rational::zero());
        lp.push(unit(dim + i), Relation::Le, Rational::one());
        lp.push(unit(dim + i), Relation::Ge, Rational::zero());
    }
    let LpOutcome::Optimal { point, .. } = solve(&lp)? else {
        return Err(Error::Internal("cone LP is not bounded-feasible".into()));
    };
    let implicit: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .filter(|(i, _)| !point[dim + i].is_one())
        .map(|(_, a)| a.coords().to_vec())
        .collect();
    let dimension = dim - linalg::rank(&implicit);
    let u = point.head(dim);
    let sample_ray = if !u.is_zero() {
        Some(u)
    } else {
        lineality.first().cloned()
    };
    Ok(RecessionCone::Polyhedral {
        rows,
        dimension,
        lineality,
        sample_ray,
    })
}

pub fn recession_cone(set: &ConvexSet) -> Result<RecessionCone> {
    if set.is_empty()? {
        return Err(Error::EmptySet);
    }
    match set.shape() {
        Shape::Polyhedron(p) => {
            polyhedral_cone(p.rows.iter().map(|r| r.normal.clone()).collect(), set.dim())
        }
        Shape::Strip(s) => {
            let rows: Vec<Vec<Rational>> = s
                .system
                .functionals()
                .iter()
                .map(|f| f.coords().to_vec())
                .collect();
            Ok(RecessionCone::Subspace {
                annihilators: s.system.functionals().to_vec(),
                basis: linalg::kernel_basis(&rows, set.dim()),
            })
        }
        Shape::Minkowski(m) => Ok(RecessionCone::Embedded {
            inner: Box::new(recession_cone(&m.inner)?),
            ambient_dim: set.dim(),
        }),
    }
}

/// Whether `u` is a recession direction of the closure (exact).
pub fn is_recession_direction(set: &ConvexSet, u: &Vector) -> Result<bool> {
    check_dim(set.dim(), u.dim())?;
    Ok(recession_cone(set)?.contains(u))
}

/// An open half-line `{base + t direction : t > 0}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Ray {
    pub base: Vector,
    pub direction: Vector,
    /// Normalized copy for reporting.
    pub unit_direction: Vec<f64>,
}

impl Ray {
    pub fn new(base: Vector, direction: Vector, norm: NormKind) -> Result<Self> {
        let unit_direction = normalize(&direction, norm)?.to_f64();
        Ok(Ray {
            base,
            direction,
            unit_direction,
        })
    }
}

/// Evidence that a ray lies in a set: the pairing of its direction with each
/// constraint, which an independent checker can recompute.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RayCertificate {
    pub ray: Ray,
    /// `<a_i, u>` (all `<= 0`) for polyhedra, `f_n(u)` (all `0`) for strips;
    /// for Minkowski sums, the pairings with the inner constraints.
    #[serde(with = "serde_rational::vec")]
    pub pairings: Vec<Rational>,
}

impl RayCertificate {
    pub fn build(set: &ConvexSet, ray: Ray) -> Result<Self> {
        let pairings = pairings(set, &ray.direction);
        Ok(RayCertificate { ray, pairings })
    }

    /// Re-checks the certificate with exact arithmetic.
    pub fn verify(&self, set: &ConvexSet) -> Result<bool> {
        Ok(set.is_inside(&self.ray.base)?
            && pairings(set, &self.ray.direction) == self.pairings
            && ray_in_set(set, &self.ray.base, &self.ray.direction)?)
    }
}

fn pairings(set: &ConvexSet, u: &Vector) -> Vec<Rational> {
    match set.shape() {
        Shape::Polyhedron(p) => p.rows.iter().map(|r| r.normal.apply(u)).collect(),
        Shape::Strip(s) => s.system.functionals().iter().map(|f| f.apply(u)).collect(),
        Shape::Minkowski(m) => {
            let k = m.inner.dim();
            let mut v = pairings(&m.inner, &u.head(k));
            v.extend(u.coords()[k..].iter().cloned());
            v
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Bounded,
    UnboundedWithRay { ray: Ray },
    UnboundedNoRayFoundAtCap { escaping_directions: Vec<Vec<f64>> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecessionReport {
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Whether the verdict is proven in exact arithmetic.
    pub exact: bool,
    pub recc_dim: Option<usize>,
    pub recession_cone: Option<RecessionCone>,
    pub certificates: Vec<RayCertificate>,
}

/// Exact recession analysis.
pub fn analyze(set: &ConvexSet) -> Result<RecessionReport> {
    let cone = recession_cone(set)?;
    let recc_dim = cone.dimension();
    let (verdict, certificates) = match cone.sample_ray() {
        None => (Verdict::Bounded, Vec::new()),
        Some(u) => {
            let ray = Ray::new(set.interior_point()?, u, set.norm())?;
            let cert = RayCertificate::build(set, ray.clone())?;
            if !cert.verify(set)? {
                return Err(Error::Internal(
                    "ray certificate failed verification".into(),
                ));
            }
            (Verdict::UnboundedWithRay { ray }, vec![cert])
        }
    };
    Ok(RecessionReport {
        verdict,
        exact: true,
        recc_dim: Some(recc_dim),
        recession_cone: Some(cone),
        certificates,
    })
}

/// Oracle-only analysis from a direction sample. Directions that stay inside
/// up to the cap are reported, never promoted to proven rays.
pub fn analyze_sampled(
    set: &ConvexSet,
    directions: &[Vector],
    params: &Params,
) -> Result<RecessionReport> {
    let base = set.interior_point()?;
    let mut escaping = Vec::new();
    for u in directions {
        if let RayLength::ExceedsCap { .. } = ray_length_oracle(set, &base, u, params)? {
            escaping.push(normalize(u, set.norm())?.to_f64());
        }
    }
    let verdict = if escaping.is_empty() {
        Verdict::Bounded
    } else {
        Verdict::UnboundedNoRayFoundAtCap {
            escaping_directions: escaping,
        }
    };
    Ok(RecessionReport {
        verdict,
        exact: false,
        recc_dim: None,
        recession_cone: None,
        certificates: Vec::new(),
    })
}
