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

//! Minkowski lift `inner + B(0, r)` of a set living on the first coordinates,
//! and the decomposition of its rays into an inner part plus a short ball part.

use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recession::{ray_in_set, Params};
use crate::scalar::{self, serde_rational, Rational};
use crate::sets::{nearest_point, ConvexSet, Shape};
use crate::vector::{norm, norm_bounds, NormKind, Vector};

/// `inner + B(0, radius)` in `R^dim`; `inner` sits on the first coordinates.
pub fn minkowski_lift(inner: ConvexSet, dim: usize, radius: Rational) -> Result<ConvexSet> {
    if inner.is_empty()? {
        return Err(Error::invalid("inner set is empty"));
    }
    ConvexSet::minkowski(inner, dim, radius)
}

fn lift_parts(lift: &ConvexSet) -> Result<(&ConvexSet, &Rational)> {
    match lift.shape() {
        Shape::Minkowski(m) => Ok((&m.inner, &m.radius)),
        _ => Err(Error::invalid("expected a Minkowski sum")),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TrialCount {
    pub passed: usize,
    pub total: usize,
}

impl TrialCount {
    fn record(&mut self, ok: bool) {
        self.total += 1;
        self.passed += usize::from(ok);
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Randomized convexity, openness and containment checks of a lift.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LiftTrials {
    /// random convex combinations of lift points stay inside
    pub convexity: TrialCount,
    /// small perturbations inside the certified inner radius stay inside
    pub openness: TrialCount,
    /// points of the inner set are points of the lift
    pub containment: TrialCount,
}

impl LiftTrials {
    pub fn all_passed(&self) -> bool {
        self.convexity.all_passed() && self.openness.all_passed() && self.containment.all_passed()
    }
}

fn uniform_rational(rng: &mut ChaCha8Rng, half_width: &Rational) -> Rational {
    // dyadic in (-1, 1) with 20 bits
    let k: i64 = rng.gen_range(-(1 << 20) + 1..(1 << 20));
    scalar::rat(k, 1 << 20) * half_width
}

fn sample_inner(inner: &ConvexSet, rng: &mut ChaCha8Rng, spread: &Rational) -> Result<Vector> {
    let center = inner.interior_point()?;
    for _ in 0..1000 {
        let offset: Vec<Rational> = (0..inner.dim())
            .map(|_| uniform_rational(rng, spread))
            .collect();
        let p = &center + &Vector::new(offset);
        if inner.is_inside(&p)? {
            return Ok(p);
        }
    }
    Ok(center)
}

/// A lift point `p + b` with `p` in the inner set and `||b||_1 < radius`.
fn sample_lift(lift: &ConvexSet, rng: &mut ChaCha8Rng, spread: &Rational) -> Result<Vector> {
    let (inner, radius) = lift_parts(lift)?;
    let d = lift.dim();
    let p = sample_inner(inner, rng, spread)?.embed(d);
    let width = radius / scalar::int(d as i64);
    let b: Vec<Rational> = (0..d).map(|_| uniform_rational(rng, &width)).collect();
    Ok(&p + &Vector::new(b))
}

/// Runs `trials` rounds of each check with points drawn around the inner
/// set's interior point at coordinate spread `spread`.
pub fn lift_trials(
    lift: &ConvexSet,
    trials: usize,
    spread: &Rational,
    seed: u64,
) -> Result<LiftTrials> {
    let (inner, _) = lift_parts(lift)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = LiftTrials::default();
    let d = lift.dim();
    for _ in 0..trials {
        let x = sample_lift(lift, &mut rng, spread)?;
        let y = sample_lift(lift, &mut rng, spread)?;
        let lambda =
            (uniform_rational(&mut rng, &scalar::int(1)) + scalar::int(1)) / scalar::int(2);
        let combo = &x.scale(&lambda) + &y.scale(&(scalar::int(1) - &lambda));
        out.convexity
            .record(lift.is_inside(&x)? && lift.is_inside(&y)? && lift.is_inside(&combo)?);

        let ok = match lift.safe_inner_radius(&x)? {
            Some(delta) => {
                let width = delta / scalar::int(d as i64);
                let e: Vec<Rational> = (0..d).map(|_| uniform_rational(&mut rng, &width)).collect();
                lift.is_inside(&(&x + &Vector::new(e)))?
            }
            None => true,
        };
        out.openness.record(ok);

        let p = sample_inner(inner, &mut rng, spread)?;
        out.containment.record(lift.is_inside(&p.embed(d))?);
    }
    Ok(out)
}

/// `n u_0 = w_n + b_n` with `w_n` the nearest point of the inner closure.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionRow {
    pub n: u64,
    pub w: Vector,
    pub b: Vector,
    pub w_norm: f64,
    /// `n ||u_0|| - r`
    pub lower_bound: f64,
    pub bound_holds: bool,
    /// `|| w_n/||w_n|| - u_0 ||`, absent when `w_n = 0`
    pub direction_error: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RayDecompositionReport {
    pub u0: Vector,
    #[serde(with = "serde_rational")]
    pub radius: Rational,
    pub rows: Vec<DecompositionRow>,
    pub bounds_hold: bool,
    /// direction errors never increase along the grid (within 1e-12)
    pub direction_error_nonincreasing: bool,
    pub max_direction_error: f64,
}

/// Splits `n u_0` for every `n` in `grid` and checks the norm lower bound
/// `||w_n|| >= n ||u_0|| - r` together with the convergence of `w_n/||w_n||`.
pub fn ray_decomposition_check(
    lift: &ConvexSet,
    u0: &Vector,
    grid: &[u64],
    params: &Params,
) -> Result<RayDecompositionReport> {
    let (inner, radius) = lift_parts(lift)?;
    let d = lift.dim();
    let kind = lift.norm();
    crate::vector::check_dim(d, u0.dim())?;
    if u0.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if (norm(u0, kind)?.to_f64() - 1.0).abs() > params.tolerance {
        return Err(Error::invalid("u_0 must have unit norm"));
    }
    let origin = Vector::zeros(d);
    if !lift.is_inside(&origin)? {
        return Err(Error::PremiseViolated(
            "the origin is not in the set".into(),
        ));
    }
    if !ray_in_set(lift, &origin, u0)? {
        return Err(Error::PremiseViolated(
            "u_0 is not a ray direction of the set from the origin".into(),
        ));
    }
    let k = inner.dim();
    let (_, u_hi) = norm_bounds(u0, kind);
    let mut rows = Vec::with_capacity(grid.len());
    for &n in grid {
        let target = u0.scale(&scalar::int(n as i64));
        let proj = nearest_point(inner, &target.head(k))?;
        let w = proj.point.embed(d);
        let b = &target - &w;
        if !crate::sets::Gauge::of(&b, kind).lt(radius) {
            return Err(Error::Internal(format!(
                "ball part at n = {n} is not shorter than r"
            )));
        }
        let (w_lo, _) = norm_bounds(&w, kind);
        let bound = scalar::int(n as i64) * &u_hi - radius;
        let bound_holds = w_lo >= bound || !bound.is_positive();
        let w_norm = norm(&w, kind)?.to_f64();
        let direction_error = if w.is_zero() {
            None
        } else {
            let wf = w.to_f64();
            let uf = u0.to_f64();
            let diff: Vec<f64> = wf.iter().zip(&uf).map(|(a, u)| a / w_norm - u).collect();
            Some(f64_norm(&diff, kind))
        };
        rows.push(DecompositionRow {
            n,
            w,
            b,
            w_norm,
            lower_bound: n as f64 * norm(u0, kind)?.to_f64() - scalar::to_f64(radius),
            bound_holds,
            direction_error,
        });
    }
    let errors: Vec<f64> = rows.iter().filter_map(|r| r.direction_error).collect();
    Ok(RayDecompositionReport {
        u0: u0.clone(),
        radius: radius.clone(),
        bounds_hold: rows.iter().all(|r| r.bound_holds),
        direction_error_nonincreasing: errors.windows(2).all(|w| w[1] <= w[0] + 1e-12),
        max_direction_error: errors.iter().copied().fold(0.0, f64::max),
        rows,
    })
}

fn f64_norm(x: &[f64], kind: NormKind) -> f64 {
    match kind {
        NormKind::L1 => x.iter().map(|v| v.abs()).sum(),
        NormKind::L2 => x.iter().map(|v| v * v).sum::<f64>().sqrt(),
        NormKind::Linf => x.iter().fold(0.0, |m, v| m.max(v.abs())),
    }
}
