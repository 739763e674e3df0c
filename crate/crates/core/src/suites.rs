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

//! Named property suites, runnable from the command line.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use rand::Rng;
use serde::Serialize;

use crate::counterexample::{
    build_strip, dense_restriction_witness, escape_profile, lift_trials, minkowski_lift,
    ray_decomposition_check, witness_points, BiorthogonalSystem, EpsRule, SweepConfig,
};
use crate::error::{Error, Result};
use crate::recession::{
    contains_half_line, decompose, direction_set_invariance, is_recession_direction,
    limit_direction, ray_length, recession_cone, translate_ray_certificate, Params, RayLength,
};
use crate::samplers::{self, ChaCha8Rng};
use crate::scalar::{self, Extended, Rational};
use crate::sets::ConvexSet;
use crate::vector::{normalize, Functional, NormKind, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// half-lines from one point give half-lines from every point
    Prop21,
    /// the set of half-line directions does not depend on the base
    Obs22,
    /// diverging sequences yield certified limit directions
    Thm23,
    /// strip sets: witnesses, trivial kernel, openness
    Prop34,
    /// Minkowski lift: membership, recession, ray decomposition
    Prop41,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Prop21,
        Suite::Obs22,
        Suite::Thm23,
        Suite::Prop34,
        Suite::Prop41,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Prop21 => "prop21",
            Suite::Obs22 => "obs22",
            Suite::Thm23 => "thm23",
            Suite::Prop34 => "prop34",
            Suite::Prop41 => "prop41",
        }
    }

    pub fn run(self, seed: u64, params: &Params) -> Result<SuiteReport> {
        let mut report = SuiteReport::new(self.name());
        let mut rng = samplers::rng(seed);
        match self {
            Suite::Prop21 => prop21(&mut report, &mut rng, params)?,
            Suite::Obs22 => obs22(&mut report, &mut rng, params)?,
            Suite::Thm23 => thm23(&mut report, &mut rng, params)?,
            Suite::Prop34 => prop34(&mut report, &mut rng, params)?,
            Suite::Prop41 => prop41(&mut report, seed, params)?,
        }
        Ok(report)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses `all` or one suite name.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(Suite::ALL.to_vec());
    }
    Ok(vec![s.parse()?])
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                Error::invalid(format!(
                    "unknown suite '{s}' (expected all, prop21, obs22, thm23, prop34 or prop41)"
                ))
            })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// first few failures, for diagnostics
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 10 {
                self.failures.push(what());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn prop21(report: &mut SuiteReport, rng: &mut ChaCha8Rng, params: &Params) -> Result<()> {
    for i in 0..20 {
        let dim = 2 + i % 4;
        let norm = samplers::random_norm(rng);
        let p = samplers::polyhedron_with_ray(rng, dim, norm, false)?;
        let points = samplers::interior_points(rng, &p.set, &p.center, 10, &scalar::int(3))?;
        let dirs = samplers::cone_directions(rng, &p.set, &p.ray, 5)?;
        for z in &points {
            for u in &dirs {
                let len = ray_length(&p.set, z, u, params)?;
                report.check(len.is_infinite(), || {
                    format!("set {i}: finite ray from {z} along {u}")
                });
            }
        }
        let u0 = normalize(&dirs[0], norm)?;
        for d in decompose(&p.set, &u0, &points)? {
            report.check(d.covered, || format!("set {i}: {} not covered", d.point));
        }
    }
    // translated-ray certificates
    for i in 0..20 {
        let dim = 2 + i % 3;
        let norm = samplers::random_norm(rng);
        let p = samplers::polyhedron_with_ray(rng, dim, norm, true)?;
        let u0 = normalize(&p.ray, norm)?;
        let z0 = samplers::interior_points(rng, &p.set, &p.center, 1, &scalar::int(2))?.remove(0);
        let t0 = scalar::rat(rng.gen_range(1..=400), 4);
        let ok = match translate_ray_certificate(&p.set, &z0, &u0, &t0, params) {
            Ok(c) => c.verify(&p.set)?.all() && p.set.is_inside(&c.a0)?,
            Err(_) => false,
        };
        report.check(ok, || format!("certificate {i} failed"));
    }
    Ok(())
}

fn obs22(report: &mut SuiteReport, rng: &mut ChaCha8Rng, params: &Params) -> Result<()> {
    for i in 0..10 {
        let dim = 2 + i % 3;
        let norm = samplers::random_norm(rng);
        let (set, center, ray) = if i % 2 == 0 {
            let p = samplers::polyhedron_with_ray(rng, dim, norm, false)?;
            (p.set, p.center, Some(p.ray))
        } else {
            let set = samplers::random_strip(rng, dim, norm, Some(dim - 1))?;
            let ray = recession_cone(&set)?.sample_ray();
            (set, Vector::zeros(dim), ray)
        };
        let bases = samplers::interior_points(rng, &set, &center, 5, &scalar::int(2))?;
        let dirs = samplers::mixed_directions(rng, &set, ray.as_ref(), 40)?;
        let r = direction_set_invariance(&set, &bases, &dirs, params)?;
        report.check(r.is_invariant(), || {
            format!("set {i}: {} discrepancies", r.discrepancies.len())
        });
    }
    Ok(())
}

fn thm23(report: &mut SuiteReport, rng: &mut ChaCha8Rng, params: &Params) -> Result<()> {
    let scales = [scalar::int(1), scalar::int(10), scalar::int(100)];
    for i in 0..10 {
        let dim = 2 + i % 3;
        let s = samplers::diverging_sequence(rng, dim, 200)?;
        let ok = match limit_direction(&s.set, &s.sequence, &scales, params) {
            Ok(ld) => {
                let origin = Vector::zeros(dim);
                ray_length(&s.set, &origin, &ld.direction, params)?.is_infinite()
                    && ld
                        .certificates
                        .iter()
                        .all(|c| c.verify(&s.set, &ld.direction).unwrap_or(false))
            }
            Err(_) => false,
        };
        report.check(ok, || format!("sequence {i} in dimension {dim}"));
    }
    // w_n = (n, 1) in {y > -1}
    let set = ConvexSet::half_space(
        NormKind::L2,
        Functional::from_ints(&[0, -1]),
        Rational::one(),
    )?;
    let seq: Vec<Vector> = (1..=200).map(|n| Vector::from_ints(&[n, 1])).collect();
    let cert =
        crate::recession::midpoint_certificate(&set, &seq, &Vector::basis(2, 0), &scalar::int(7))?;
    report.check(
        cert.n == 14 && cert.midpoint == Vector::from_ints(&[7, 0]),
        || format!("worked midpoint instance certified at n = {}", cert.n),
    );
    Ok(())
}

fn prop34(report: &mut SuiteReport, rng: &mut ChaCha8Rng, params: &Params) -> Result<()> {
    let dims = [2, 4, 8, 16];
    for &d in &dims {
        let set = build_strip(
            BiorthogonalSystem::orthonormal(d),
            &EpsRule::Linear.take(d),
            NormKind::L2,
        )?;
        for w in witness_points(&set)? {
            report.check(w.verify(&set, params.tolerance)?.all(), || {
                format!("d = {d}: witness {}", w.n)
            });
        }
        let cone = recession_cone(&set)?;
        report.check(cone.is_trivial(), || format!("d = {d}: nontrivial kernel"));
        let r = set.inner_radius(&Vector::zeros(d))?;
        report.check(
            r == Extended::Finite(scalar::Scalar::Exact(Rational::one())),
            || format!("d = {d}: inner radius at origin {r}"),
        );
        report.check(
            matches!(
                dense_restriction_witness(&set, &scalar::int(d as i64)),
                Err(Error::CannotWitness(_))
            ),
            || format!("d = {d}: bounded strip produced a dense witness"),
        );
        // openness: perturbations inside the certified radius stay inside
        let pts =
            samplers::interior_points(rng, &set, &Vector::zeros(d), 10, &scalar::int(d as i64))?;
        for x in pts {
            let delta = set.safe_inner_radius(&x)?.unwrap_or_else(Rational::one);
            let width = delta / scalar::int(d as i64);
            let e: Vec<Rational> = (0..d)
                .map(|_| samplers::small_rational(rng, &width))
                .collect();
            report.check(set.is_inside(&(&x + &Vector::new(e)))?, || {
                format!("d = {d}: openness at {x}")
            });
        }
    }
    for kind in [NormKind::L1, NormKind::Linf] {
        let sys = BiorthogonalSystem::perturbed(6, rng.gen())?;
        let set = build_strip(sys, &EpsRule::Quadratic.take(6), kind)?;
        for w in witness_points(&set)? {
            report.check(w.verify(&set, params.tolerance)?.all(), || {
                format!("{kind:?}: witness {}", w.n)
            });
        }
    }
    let profile = escape_profile(&dims, &SweepConfig::default(), params)?;
    for (row, &d) in profile.rows.iter().zip(&dims) {
        let want = Extended::Finite(scalar::Scalar::Exact(scalar::int(d as i64)));
        report.check(row.max_ray == want && row.recc_dim == 0, || {
            format!("escape row {d}")
        });
    }
    Ok(())
}

fn stadium() -> Result<ConvexSet> {
    let half_line =
        ConvexSet::half_space(NormKind::L2, Functional::from_ints(&[-1]), scalar::int(0))?;
    minkowski_lift(half_line, 2, Rational::one())
}

fn prop41(report: &mut SuiteReport, seed: u64, params: &Params) -> Result<()> {
    let lift = stadium()?;
    let trials = lift_trials(&lift, 300, &scalar::int(20), seed)?;
    report.check(trials.all_passed(), || format!("lift trials {trials:?}"));
    let samples = [
        (scalar::rat(5, 1), scalar::rat(1, 2), true),
        (scalar::int(-2), scalar::int(0), false),
    ];
    for (x, y, inside) in samples {
        let p = Vector::new(vec![x, y]);
        report.check(lift.is_inside(&p)? == inside, || {
            format!("membership of {p}")
        });
    }
    for u in samplers::circle_grid(360) {
        let by_cone = is_recession_direction(&lift, &u)?;
        let by_oracle = matches!(
            ray_length(&lift, &Vector::zeros(2), &u, params)?,
            RayLength::ExceedsCap { .. }
        );
        report.check(by_cone == by_oracle, || {
            format!("recession disagreement along {u}")
        });
        let half = contains_half_line(&lift, &Vector::zeros(2), &u, params)?;
        report.check(half.is_contained() == by_cone, || {
            format!("half-line disagreement along {u}")
        });
    }
    let grid: Vec<u64> = (1..=100).collect();
    let r = ray_decomposition_check(&lift, &Vector::basis(2, 0), &grid, params)?;
    report.check(r.bounds_hold && r.max_direction_error <= 1e-9, || {
        "ray decomposition".into()
    });
    Ok(())
}
