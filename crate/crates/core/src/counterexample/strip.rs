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

//! Strip sets `S = {x : |f_n(x)| < eps_n ||f_n||_*}` built on a biorthogonal
//! system, their witness points and the dimension sweep.

use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{BiorthogonalSystem, SystemKind};
use crate::error::{Error, Result};
use crate::recession::{ray_length, recession_cone, Params, RayLength};
use crate::scalar::{self, serde_rational, Extended, Rational, Scalar};
use crate::sets::{ConvexSet, Shape, StripRadius, StripSet};
use crate::vector::{dual_norm_bounds, norm, norm_lt, sum_sq, NormKind, Vector};

/// How the scale `eps_n` grows with the (1-based) index `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EpsRule {
    /// `eps_n = n`
    #[default]
    Linear,
    /// `eps_n = n^2`
    Quadratic,
    /// `eps_n = c`
    Constant(#[serde(with = "serde_rational")] Rational),
}

impl EpsRule {
    pub fn eps(&self, n: usize) -> Rational {
        let n = scalar::int(n as i64);
        match self {
            EpsRule::Linear => n,
            EpsRule::Quadratic => &n * &n,
            EpsRule::Constant(c) => c.clone(),
        }
    }

    /// `eps_1, ..., eps_k`
    pub fn take(&self, k: usize) -> Vec<Rational> {
        (1..=k).map(|n| self.eps(n)).collect()
    }
}

impl FromStr for EpsRule {
    type Err = Error;

    /// `linear`, `quadratic`, or a positive rational for a constant rule.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" => Ok(EpsRule::Linear),
            "quadratic" => Ok(EpsRule::Quadratic),
            other => {
                let c = scalar::parse_rational(other).map_err(|_| {
                    Error::invalid(format!(
                        "unknown eps rule '{s}' (expected linear, quadratic or a number)"
                    ))
                })?;
                if !c.is_positive() {
                    return Err(Error::invalid("constant eps must be positive"));
                }
                Ok(EpsRule::Constant(c))
            }
        }
    }
}

impl fmt::Display for EpsRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EpsRule::Linear => f.write_str("linear"),
            EpsRule::Quadratic => f.write_str("quadratic"),
            EpsRule::Constant(c) => write!(f, "{c}"),
        }
    }
}

/// Strip set with radii `R_n = eps_n ||f_n||_*` in the dual of `norm`.
pub fn build_strip(
    system: BiorthogonalSystem,
    eps: &[Rational],
    norm: NormKind,
) -> Result<ConvexSet> {
    if eps.len() != system.count() {
        return Err(Error::invalid(format!(
            "{} eps values for {} functionals",
            eps.len(),
            system.count()
        )));
    }
    if let Some(n) = eps.iter().position(|e| !e.is_positive()) {
        return Err(Error::invalid(format!("eps_{} is not positive", n + 1)));
    }
    let radii = eps
        .iter()
        .zip(system.functionals())
        .map(|(e, f)| StripRadius::scaled_dual(e, f, norm))
        .collect::<Result<Vec<_>>>()?;
    ConvexSet::strip(system, radii, norm)
}

fn strip_of(set: &ConvexSet) -> Result<&StripSet> {
    match set.shape() {
        Shape::Strip(s) => Ok(s),
        _ => Err(Error::invalid("expected a strip set")),
    }
}

/// `a_n = R_n / (2 |f_n(x_n)|) x_n`. When `R_n` is irrational the point uses
/// a rational lower bound of `R_n` in its place and `exact` is false.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WitnessPoint {
    /// 1-based
    pub n: usize,
    pub point: Vector,
    pub radius: Scalar,
    /// `eps_n / 2`
    pub norm_lower_bound: Scalar,
    pub exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    /// `|f_m(a_n)| = R_n/2` if `m = n`, else `0`
    pub pairing: bool,
    /// `||a_n|| >= eps_n / 2`
    pub norm_bound: bool,
    /// `a_n` and `-a_n` are in the set
    pub symmetric_membership: bool,
}

impl WitnessCheck {
    pub fn all(&self) -> bool {
        self.pairing && self.norm_bound && self.symmetric_membership
    }
}

impl WitnessPoint {
    pub fn verify(&self, set: &ConvexSet, tolerance: f64) -> Result<WitnessCheck> {
        let s = strip_of(set)?;
        let kind = set.norm();
        let half_r = self.radius.div(&Scalar::Exact(scalar::int(2)));
        let mut pairing = true;
        for (m, f) in s.system.functionals().iter().enumerate() {
            let v = f.apply(&self.point).abs();
            pairing &= if m + 1 == self.n {
                match (&half_r, self.exact) {
                    (Scalar::Exact(h), true) => &v == h,
                    _ => Scalar::Exact(v).approx_eq(&half_r, tolerance),
                }
            } else {
                v == scalar::int(0)
            };
        }
        let norm_bound = match (&self.norm_lower_bound, self.exact) {
            (Scalar::Exact(b), true) => !norm_lt(&self.point, kind, b),
            _ => {
                let b = self.norm_lower_bound.to_f64();
                norm(&self.point, kind)?.to_f64() >= b - tolerance * b.max(1.0)
            }
        };
        let symmetric_membership = set.is_inside(&self.point)? && set.is_inside(&-&self.point)?;
        Ok(WitnessCheck {
            pairing,
            norm_bound,
            symmetric_membership,
        })
    }
}

/// One witness per functional of the strip set.
pub fn witness_points(set: &ConvexSet) -> Result<Vec<WitnessPoint>> {
    let s = strip_of(set)?;
    let kind = set.norm();
    let two = scalar::int(2);
    s.system
        .vectors()
        .iter()
        .zip(s.system.functionals())
        .zip(&s.radii)
        .enumerate()
        .map(|(i, ((x, f), r))| {
            let pairing = f.apply(x).abs();
            if pairing.is_zero() {
                return Err(Error::invalid(format!("f_{0}(x_{0}) = 0", i + 1)));
            }
            let exact = r.value.is_exact();
            let point = x.scale(&(r.lower() / (&two * &pairing)));
            // eps_n^2 = R_n^2 / ||f_n||_*^2 is rational
            let dual = dual_norm_bounds(f, kind);
            let norm_lower_bound = if dual.0 == dual.1 {
                let eps = r.value.div(&Scalar::Exact(dual.0));
                eps.div(&Scalar::Exact(two.clone()))
            } else {
                let eps_sq = &r.squared / sum_sq(f.coords());
                match scalar::sqrt_exact(&eps_sq) {
                    Some(e) => Scalar::Exact(e / &two),
                    None => scalar::sqrt_scalar(&eps_sq).div(&Scalar::Exact(two.clone())),
                }
            };
            Ok(WitnessPoint {
                n: i + 1,
                point,
                radius: r.value.clone(),
                norm_lower_bound,
                exact,
            })
        })
        .collect()
}

/// Settings for one dimension sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub eps: EpsRule,
    pub system: SystemKind,
    pub norm: NormKind,
    /// Keep only the first `k` functionals (recession cone of dimension `d - k`).
    pub truncate: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            eps: EpsRule::Linear,
            system: SystemKind::Orthonormal,
            norm: NormKind::L2,
            truncate: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EscapeRow {
    pub d: usize,
    /// Longest ray from the origin along the directions `x_n / ||x_n||`;
    /// infinite as soon as the functionals leave a kernel.
    pub max_ray: Extended,
    /// `2 ||a_k||` for the last witness
    pub diam_lb: Scalar,
    pub recc_dim: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct EscapeProfile {
    pub rows: Vec<EscapeRow>,
}

impl EscapeProfile {
    pub const CSV_HEADER: &'static str = "d,max_ray,diam_lb,recc_dim";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.d, r.max_ray, r.diam_lb, r.recc_dim
            ));
        }
        out
    }
}

/// The strip set `S_d` of one sweep row.
pub fn sweep_set(d: usize, config: &SweepConfig) -> Result<ConvexSet> {
    let mut system = BiorthogonalSystem::build(d, config.system)?;
    if let Some(k) = config.truncate {
        if k == 0 {
            return Err(Error::invalid(
                "truncation must keep at least one functional",
            ));
        }
        system = system.truncated(k.min(d));
    }
    let eps = config.eps.take(system.count());
    build_strip(system, &eps, config.norm)
}

fn escape_row(d: usize, config: &SweepConfig, params: &Params) -> Result<EscapeRow> {
    let set = sweep_set(d, config)?;
    let kind = set.norm();
    let s = strip_of(&set)?;
    let recc_dim = recession_cone(&set)?.dimension();
    let origin = Vector::zeros(d);
    let max_ray = if recc_dim > 0 {
        Extended::Infinite
    } else {
        let mut best: Option<Scalar> = None;
        for x in s.system.vectors() {
            // along x_n/||x_n|| the length is ||x_n|| times the length along x_n
            let len = match ray_length(&set, &origin, x, params)? {
                RayLength::Finite { value, .. } => value.mul(&norm(x, kind)?),
                _ => {
                    return Err(Error::Internal(
                        "bounded strip set has an infinite ray".into(),
                    ))
                }
            };
            best = Some(match best {
                Some(b) if b.to_f64() >= len.to_f64() => b,
                _ => len,
            });
        }
        best.map_or(Extended::Infinite, Extended::Finite)
    };
    let witnesses = witness_points(&set)?;
    let last = witnesses
        .last()
        .ok_or_else(|| Error::Internal("no witnesses".into()))?;
    let diam_lb = norm(&last.point, kind)?.mul(&Scalar::Exact(scalar::int(2)));
    Ok(EscapeRow {
        d,
        max_ray,
        diam_lb,
        recc_dim,
    })
}

/// Escape profile over ascending dimensions; rows are computed in parallel
/// and returned sorted by `d`.
pub fn escape_profile(
    dims: &[usize],
    config: &SweepConfig,
    params: &Params,
) -> Result<EscapeProfile> {
    if dims.is_empty() {
        return Err(Error::invalid("no dimensions given"));
    }
    if dims.contains(&0) {
        return Err(Error::invalid("dimensions must be at least 1"));
    }
    if dims.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("dimensions must be strictly ascending"));
    }
    let mut rows = dims
        .par_iter()
        .map(|&d| escape_row(d, config, params))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.d);
    Ok(EscapeProfile { rows })
}
