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

//! Rational points of large norm inside an unbounded open set.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recession::recession_cone;
use crate::scalar::{self, serde_rational, Rational};
use crate::sets::ConvexSet;
use crate::vector::{norm_bounds, norm_gt, norm_lt, Vector};

/// `a` in the set with `||a|| > M + 1`, a ball `B(a, delta)` inside the set,
/// and a point `b` of that ball with coordinates of denominator `denominator`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DenseRestrictionWitness {
    #[serde(with = "serde_rational")]
    pub bound: Rational,
    pub a: Vector,
    #[serde(with = "serde_rational")]
    pub delta: Rational,
    pub b: Vector,
    pub denominator: String,
}

impl DenseRestrictionWitness {
    pub fn verify(&self, set: &ConvexSet) -> Result<bool> {
        let kind = set.norm();
        let one = Rational::one();
        let half = scalar::rat(1, 2);
        let delta_ok = self.delta.is_positive()
            && self.delta < half
            && set
                .safe_inner_radius(&self.a)?
                .is_none_or(|r| self.delta <= r);
        Ok(set.is_inside(&self.a)?
            && norm_gt(&self.a, kind, &(&self.bound + &one))
            && delta_ok
            && norm_lt(&(&self.b - &self.a), kind, &self.delta)
            && set.is_inside(&self.b)?
            && norm_gt(&self.b, kind, &self.bound))
    }
}

/// Walks from an interior point along a recession direction past `M + 1`,
/// then rounds to a coarse rational grid inside half the certified radius.
pub fn dense_restriction_witness(
    set: &ConvexSet,
    bound: &Rational,
) -> Result<DenseRestrictionWitness> {
    if bound.is_negative() {
        return Err(Error::invalid("M must be nonnegative"));
    }
    let kind = set.norm();
    let cone = recession_cone(set)?;
    let u = cone
        .sample_ray()
        .ok_or_else(|| Error::CannotWitness("the set is bounded".into()))?;
    let z = set.interior_point()?;
    let (u_lo, _) = norm_bounds(&u, kind);
    let (_, z_hi) = norm_bounds(&z, kind);
    let s = (bound + scalar::rat(3, 2) + z_hi) / u_lo;
    let a = z.along(&u, &s);
    let cap = scalar::rat(49, 100);
    let delta = match set.safe_inner_radius(&a)? {
        Some(r) if r < cap => r,
        _ => cap,
    };
    let half_delta = &delta / scalar::int(2);
    let mut denominator = BigInt::from(1_000_000);
    for _ in 0..64 {
        let b = Vector::new(
            a.coords()
                .iter()
                .map(|q| scalar::round_to_denominator(q, &denominator))
                .collect(),
        );
        if norm_lt(&(&b - &a), kind, &half_delta) {
            let w = DenseRestrictionWitness {
                bound: bound.clone(),
                a,
                delta,
                b,
                denominator: denominator.to_string(),
            };
            return if w.verify(set)? {
                Ok(w)
            } else {
                Err(Error::CannotWitness("witness failed verification".into()))
            };
        }
        denominator *= 10;
    }
    Err(Error::Internal("rounding never got within delta/2".into()))
}
