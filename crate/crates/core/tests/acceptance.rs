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

//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Every check compares library output against an oracle written here from
//! first principles (direct row evaluation, exact norm arithmetic, brute-force
//! distance minimization, bisection), not against the library's own helpers.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::Rng;

use recess_core::counterexample::{
    build_strip, dense_restriction_witness, escape_profile, minkowski_lift,
    ray_decomposition_check, witness_points, BiorthogonalSystem, EpsRule, SweepConfig,
};
use recess_core::lp::Inequality;
use recess_core::recession::{
    contains_half_line, decompose, direction_set_invariance, limit_direction, midpoint_certificate,
    ray_length, ray_length_oracle, recession_cone, translate_ray_certificate, Params, RayLength,
};
use recess_core::samplers;
use recess_core::scalar::{int, rat};
use recess_core::sets::Shape;
use recess_core::{ConvexSet, Error, Extended, Functional, NormKind, Rational, Scalar, Vector};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

fn rows(set: &ConvexSet) -> &[Inequality] {
    match set.shape() {
        Shape::Polyhedron(p) => &p.rows,
        _ => panic!("expected a polyhedron"),
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Membership by direct evaluation of the defining inequalities.
fn inside(set: &ConvexSet, x: &Vector) -> bool {
    match set.shape() {
        Shape::Polyhedron(p) => p.rows.iter().all(|r| {
            let v = dot(r.normal.coords(), x.coords());
            if r.strict {
                v < r.bound
            } else {
                v <= r.bound
            }
        }),
        Shape::Strip(s) => s.system.functionals().iter().zip(&s.radii).all(|(f, r)| {
            let v = dot(f.coords(), x.coords());
            &v * &v < r.squared
        }),
        Shape::Minkowski(_) => panic!("no direct oracle for Minkowski sums"),
    }
}

/// Whether the half-line from an interior point in direction `u` stays inside.
fn recedes(set: &ConvexSet, u: &Vector) -> bool {
    match set.shape() {
        Shape::Polyhedron(p) => p
            .rows
            .iter()
            .all(|r| !dot(r.normal.coords(), u.coords()).is_positive()),
        Shape::Strip(s) => s
            .system
            .functionals()
            .iter()
            .all(|f| dot(f.coords(), u.coords()).is_zero()),
        Shape::Minkowski(_) => panic!("no direct oracle for Minkowski sums"),
    }
}

/// Exact comparison of `||x||` against `r >= 0`.
fn norm_cmp(x: &Vector, kind: NormKind, r: &Rational) -> std::cmp::Ordering {
    match kind {
        NormKind::L1 => x.coords().iter().map(|c| c.abs()).sum::<Rational>().cmp(r),
        NormKind::Linf => x
            .coords()
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
            .cmp(r),
        NormKind::L2 => x
            .coords()
            .iter()
            .map(|c| c * c)
            .sum::<Rational>()
            .cmp(&(r * r)),
    }
}

fn norm_lt(x: &Vector, kind: NormKind, r: &Rational) -> bool {
    norm_cmp(x, kind, r).is_lt()
}

fn norm_f64(x: &[f64], kind: NormKind) -> f64 {
    match kind {
        NormKind::L1 => x.iter().map(|v| v.abs()).sum(),
        NormKind::L2 => x.iter().map(|v| v * v).sum::<f64>().sqrt(),
        NormKind::Linf => x.iter().fold(0.0, |m, v| m.max(v.abs())),
    }
}

/// `B(z, delta)` inside an open polyhedron: `slack_i >= delta ||a_i||_*`,
/// with the dual norm compared exactly.
fn ball_inside(set: &ConvexSet, z: &Vector, delta: &Rational) -> bool {
    rows(set).iter().all(|r| {
        let slack = &r.bound - dot(r.normal.coords(), z.coords());
        if !slack.is_positive() {
            return false;
        }
        let a = r.normal.coords();
        match set.norm() {
            NormKind::L1 => slack >= delta * a.iter().map(|c| c.abs()).max().unwrap(),
            NormKind::Linf => slack >= delta * a.iter().map(|c| c.abs()).sum::<Rational>(),
            NormKind::L2 => {
                &slack * &slack >= delta * delta * a.iter().map(|c| c * c).sum::<Rational>()
            }
        }
    })
}

fn half_plane() -> ConvexSet {
    // {y > -1}
    ConvexSet::half_space(NormKind::L2, Functional::from_ints(&[0, -1]), int(1)).unwrap()
}

fn stadium() -> ConvexSet {
    let half_line =
        ConvexSet::half_space(NormKind::L2, Functional::from_ints(&[-1]), int(0)).unwrap();
    minkowski_lift(half_line, 2, int(1)).unwrap()
}

/// Distance from `(x, y)` to `{(s, 0) : s >= 0}` by brute-force minimization
/// over `s`: a coarse scan followed by golden-section refinement.
fn stadium_distance(x: f64, y: f64) -> f64 {
    let f = |s: f64| ((x - s).powi(2) + y * y).sqrt();
    let hi = x.abs() + 2.0;
    let steps = 2000;
    let (mut best, mut arg) = (f64::INFINITY, 0.0);
    for i in 0..=steps {
        let s = hi * i as f64 / steps as f64;
        if f(s) < best {
            best = f(s);
            arg = s;
        }
    }
    let h = hi / steps as f64;
    let (mut a, mut b) = ((arg - h).max(0.0), arg + h);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..100 {
        let c = b - g * (b - a);
        let d = a + g * (b - a);
        if f(c) < f(d) {
            b = d;
        } else {
            a = c;
        }
    }
    best.min(f((a + b) / 2.0))
}

// ------------------------------------------------------------- criteria

/// Half-lines from one point give half-lines from every point.
fn criterion_1() -> Check {
    let params = Params::default();
    let mut rng = samplers::rng(101);
    let (mut rays, mut covered, mut samples) = (0, 0, 0);
    for i in 0..50 {
        let dim = 2 + i % 4;
        let norm = samplers::random_norm(&mut rng);
        let p =
            samplers::polyhedron_with_ray(&mut rng, dim, norm, false).map_err(|e| e.to_string())?;
        let points = samplers::interior_points(&mut rng, &p.set, &p.center, 4, &int(3))
            .map_err(|e| e.to_string())?;
        let dirs =
            samplers::cone_directions(&mut rng, &p.set, &p.ray, 4).map_err(|e| e.to_string())?;
        for u in &dirs {
            ensure!(
                recedes(&p.set, u),
                "set {i}: sampled direction {u} is not a cone direction"
            );
            for z in &points {
                ensure!(inside(&p.set, z), "set {i}: sample {z} outside");
                let len = ray_length(&p.set, z, u, &params).map_err(|e| e.to_string())?;
                ensure!(
                    len == RayLength::Infinite,
                    "set {i}: ray from {z} along {u} is {len:?}"
                );
                rays += 1;
            }
        }
        let u0 = recess_core::vector::normalize(&dirs[0], norm).map_err(|e| e.to_string())?;
        for d in decompose(&p.set, &u0, &points[..2]).map_err(|e| e.to_string())? {
            samples += 1;
            let rebuilt = d.base.along(&u0, &d.offset);
            let ok = d.covered
                && inside(&p.set, &d.base)
                && recedes(&p.set, &u0)
                && rebuilt == d.point
                && d.offset.is_positive()
                && ball_inside(&p.set, &d.point, &d.delta)
                && norm_cmp(&u0.scale(&d.offset), norm, &(&d.delta / int(2))).is_le();
            covered += usize::from(ok);
        }
    }
    ensure!(
        covered == samples && samples == 100,
        "decompose covered {covered}/{samples}"
    );
    Ok(format!(
        "{rays} infinite rays, decompose covered {covered}/{samples}"
    ))
}

fn certificate_invariants(
    set: &ConvexSet,
    c: &recess_core::recession::ContradictionCertificate,
) -> Result<(), String> {
    let kind = set.norm();
    let chord = &c.u0.scale(&c.t1) - &c.a0;
    let gap = &chord.scale(&c.chord_norm.recip()) - &c.u0;
    ensure!(
        norm_lt(&gap, kind, &(&c.delta / (int(2) * &c.t0))),
        "direction error too large"
    );
    ensure!(
        norm_lt(&(&c.xi - &c.z0), kind, &c.delta),
        "xi outside B(z0, delta)"
    );
    ensure!(
        ball_inside(set, &c.z0, &c.delta),
        "B(z0, delta) not inside the set"
    );
    let [w1, w2] = [&c.weights[0], &c.weights[1]];
    ensure!(
        w1.is_positive() && w2.is_positive() && w1 + w2 == Rational::one(),
        "weights {w1}, {w2}"
    );
    ensure!(
        &c.xi.scale(w1) + &c.u0.scale(&(w2 * &c.t1)) == c.a0,
        "a0 is not the combination"
    );
    ensure!(c.a0 == c.z0.along(&c.u0, &c.t0), "a0 != z0 + t0 u0");
    ensure!(
        inside(set, &c.u0.scale(&c.t1)) && inside(set, &c.a0),
        "endpoint outside"
    );
    Ok(())
}

/// Convex-combination certificates for translated half-lines.
fn criterion_2() -> Check {
    let params = Params::default();
    let set = half_plane();
    let c = translate_ray_certificate(
        &set,
        &Vector::from_ints(&[-2, 0]),
        &Vector::basis(2, 0),
        &int(5),
        &params,
    )
    .map_err(|e| e.to_string())?;
    ensure!(c.t1 == int(4), "t1 = {}", c.t1);
    ensure!(c.lambda == int(-5), "lambda = {}", c.lambda);
    ensure!(c.xi == Vector::from_ints(&[-2, 0]), "xi = {}", c.xi);
    ensure!(
        c.weights == vec![rat(1, 6), rat(5, 6)],
        "weights {:?}",
        c.weights
    );
    certificate_invariants(&set, &c)?;

    let mut rng = samplers::rng(202);
    for i in 0..200 {
        let dim = 2 + i % 4;
        let norm = samplers::random_norm(&mut rng);
        let p =
            samplers::polyhedron_with_ray(&mut rng, dim, norm, true).map_err(|e| e.to_string())?;
        let u0 = recess_core::vector::normalize(&p.ray, norm).map_err(|e| e.to_string())?;
        let z0 = samplers::interior_points(&mut rng, &p.set, &p.center, 1, &int(4))
            .map_err(|e| e.to_string())?
            .remove(0);
        let t0 = rat(rng.gen_range(1..=4000), rng.gen_range(1..=40));
        let c = translate_ray_certificate(&p.set, &z0, &u0, &t0, &params)
            .map_err(|e| format!("instance {i}: {e}"))?;
        certificate_invariants(&p.set, &c).map_err(|e| format!("instance {i}: {e}"))?;
    }
    Ok("worked instance t1=4, lambda=-5, xi=(-2,0), weights (1/6,5/6); 200/200 random certificates".into())
}

/// Half-line directions do not depend on the base point.
fn criterion_3() -> Check {
    let params = Params::default();
    let mut rng = samplers::rng(303);
    let mut checked = 0;
    for i in 0..50 {
        let dim = 2 + i % 4;
        let norm = samplers::random_norm(&mut rng);
        let (set, center, ray) = if i % 3 == 2 {
            let set = samplers::random_strip(&mut rng, dim, norm, Some(dim - 1))
                .map_err(|e| e.to_string())?;
            let ray = recession_cone(&set)
                .map_err(|e| e.to_string())?
                .sample_ray();
            (set, Vector::zeros(dim), ray)
        } else {
            let p = samplers::polyhedron_with_ray(&mut rng, dim, norm, false)
                .map_err(|e| e.to_string())?;
            (p.set, p.center, Some(p.ray))
        };
        let bases = samplers::interior_points(&mut rng, &set, &center, 10, &int(3))
            .map_err(|e| e.to_string())?;
        let dirs = samplers::mixed_directions(&mut rng, &set, ray.as_ref(), 100)
            .map_err(|e| e.to_string())?;
        let r =
            direction_set_invariance(&set, &bases, &dirs, &params).map_err(|e| e.to_string())?;
        ensure!(
            r.is_invariant(),
            "set {i}: {} discrepancies",
            r.discrepancies.len()
        );
        for ds in &r.direction_sets {
            for (u, got) in dirs.iter().zip(&ds.contained) {
                ensure!(
                    *got == recedes(&set, u),
                    "set {i}: base {} direction {u}",
                    ds.base
                );
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} (set, base, direction) triples, 0 discrepancies"
    ))
}

/// Diverging sequences give certified limit directions.
fn criterion_4() -> Check {
    let params = Params::default();
    let scales = [int(1), int(10), int(100)];
    let mut rng = samplers::rng(404);
    for i in 0..20 {
        let dim = 2 + i % 4;
        let s = samplers::diverging_sequence(&mut rng, dim, 200).map_err(|e| e.to_string())?;
        let ld = limit_direction(&s.set, &s.sequence, &scales, &params)
            .map_err(|e| format!("sequence {i}: {e}"))?;
        let origin = Vector::zeros(dim);
        ensure!(
            inside(&s.set, &origin) && recedes(&s.set, &ld.direction),
            "sequence {i}: {} is not a ray direction",
            ld.direction
        );
        let len = ray_length(&s.set, &origin, &ld.direction, &params).map_err(|e| e.to_string())?;
        ensure!(
            len == RayLength::Infinite,
            "sequence {i}: ray length {len:?}"
        );
        ensure!(
            ld.certificates.len() == 3,
            "sequence {i}: {} certificates",
            ld.certificates.len()
        );
        for (c, t) in ld.certificates.iter().zip(&scales) {
            let two_t = int(2) * t;
            ensure!(&c.t == t, "scale mismatch");
            ensure!(
                inside(&s.set, &c.b_n) && inside(&s.set, &c.complement),
                "sequence {i}, t = {t}: endpoint outside"
            );
            ensure!(
                &c.complement + &c.b_n == ld.direction.scale(&two_t),
                "sequence {i}: complement"
            );
            ensure!(
                c.midpoint == ld.direction.scale(t),
                "sequence {i}: midpoint"
            );
            ensure!(
                &c.b_n.scale(&rat(1, 2)) + &c.complement.scale(&rat(1, 2)) == c.midpoint,
                "sequence {i}: midpoint identity"
            );
            ensure!(
                c.n >= c.n1.max(c.n2) && c.n <= s.sequence.len(),
                "sequence {i}: index order"
            );
            ensure!(
                !norm_cmp(&s.sequence[c.n1 - 1], s.set.norm(), &two_t).is_le(),
                "sequence {i}: n1"
            );
        }
    }
    let set = half_plane();
    let seq: Vec<Vector> = (1..=200).map(|n| Vector::from_ints(&[n, 1])).collect();
    let c = midpoint_certificate(&set, &seq, &Vector::basis(2, 0), &int(7))
        .map_err(|e| e.to_string())?;
    ensure!(c.n == 14, "worked instance certified at n = {}", c.n);
    ensure!(
        c.midpoint == Vector::from_ints(&[7, 0]),
        "midpoint {}",
        c.midpoint
    );
    Ok("20/20 sequences certified at t in {1,10,100}; worked instance n=14, midpoint (7,0)".into())
}

/// The strip-set construction across dimensions.
fn criterion_5() -> Check {
    let params = Params::default();
    let dims = [2usize, 4, 8, 16, 32, 64];
    let mut rng = samplers::rng(505);
    let mut last_diam = 0.0;
    for &d in &dims {
        let set = build_strip(
            BiorthogonalSystem::orthonormal(d),
            &EpsRule::Linear.take(d),
            NormKind::L2,
        )
        .map_err(|e| e.to_string())?;
        let Shape::Strip(s) = set.shape() else {
            unreachable!()
        };
        let w = witness_points(&set).map_err(|e| e.to_string())?;
        ensure!(w.len() == d, "d = {d}: {} witnesses", w.len());
        for (n, a) in w.iter().enumerate() {
            let r_n = int(n as i64 + 1);
            ensure!(
                s.radii[n].squared == &r_n * &r_n,
                "d = {d}: R_{} != {}",
                n + 1,
                r_n
            );
            for (m, f) in s.system.functionals().iter().enumerate() {
                let v = dot(f.coords(), a.point.coords()).abs();
                let want = if m == n {
                    &r_n / int(2)
                } else {
                    Rational::zero()
                };
                ensure!(v == want, "d = {d}: |x*_{}(a_{})| = {v}", m + 1, n + 1);
            }
            // ||a_n||^2 = n^2/4
            let sq: Rational = a.point.coords().iter().map(|c| c * c).sum();
            ensure!(
                sq == &r_n * &r_n / int(4),
                "d = {d}: ||a_{}||^2 = {sq}",
                n + 1
            );
            ensure!(
                inside(&set, &a.point) && inside(&set, &-&a.point),
                "d = {d}: +-a_{} outside",
                n + 1
            );
        }
        let r0 = set
            .inner_radius(&Vector::zeros(d))
            .map_err(|e| e.to_string())?;
        ensure!(
            r0 == Extended::Finite(Scalar::Exact(int(1))),
            "d = {d}: inner radius {r0}"
        );
        let cone = recession_cone(&set).map_err(|e| e.to_string())?;
        ensure!(
            cone.dimension() == 0,
            "d = {d}: recession dimension {}",
            cone.dimension()
        );
        let functionals: Vec<Vec<Rational>> = s
            .system
            .functionals()
            .iter()
            .map(|f| f.coords().to_vec())
            .collect();
        ensure!(
            recess_core::linalg::rank(&functionals) == d,
            "d = {d}: functionals not full rank"
        );
        for _ in 0..20 {
            let u = samplers::random_direction(&mut rng, d);
            let len =
                ray_length(&set, &Vector::zeros(d), &u, &params).map_err(|e| e.to_string())?;
            ensure!(
                matches!(len, RayLength::Finite { .. }),
                "d = {d}: a ray along {u}"
            );
        }
        let diam = 2.0 * norm_f64(&w[d - 1].point.to_f64(), NormKind::L2);
        ensure!(
            (diam - d as f64).abs() <= params.tolerance * d as f64,
            "d = {d}: diameter bound {diam}"
        );
        ensure!(diam > last_diam, "diameter bound not increasing at d = {d}");
        last_diam = diam;
    }
    let profile =
        escape_profile(&dims, &SweepConfig::default(), &params).map_err(|e| e.to_string())?;
    for (row, &d) in profile.rows.iter().zip(&dims) {
        let want = Scalar::Exact(int(d as i64));
        ensure!(row.d == d && row.recc_dim == 0, "profile row {d}");
        ensure!(
            row.max_ray == Extended::Finite(want.clone()) && row.diam_lb == want,
            "profile row {d}: {row:?}"
        );
    }
    Ok(format!(
        "d in {dims:?}: witnesses exact, inner radius 1, recc_dim 0, diameter bound = d"
    ))
}

/// The Minkowski lift of a half-line.
fn criterion_6() -> Check {
    let params = Params::default();
    let lift = stadium();
    let (mut agree, mut skipped) = (0, 0);
    for i in 0..100 {
        for j in 0..100 {
            let x = rat(-5, 2) + rat(10 * i, 99);
            let y = rat(-3, 2) + rat(3 * j, 99);
            let p = Vector::new(vec![x, y]);
            let pf = p.to_f64();
            let dist = stadium_distance(pf[0], pf[1]);
            if (dist - 1.0).abs() < 1e-7 {
                skipped += 1;
                continue;
            }
            let got = lift.is_inside(&p).map_err(|e| e.to_string())?;
            ensure!(
                got == (dist < 1.0),
                "membership disagrees at {p} (distance {dist})"
            );
            agree += 1;
        }
    }
    let origin = Vector::zeros(2);
    let cone = recession_cone(&lift).map_err(|e| e.to_string())?;
    for u in samplers::circle_grid(360) {
        // recession cone of the inner half-line, placed in the plane
        let inner = u.coords()[1].is_zero() && u.coords()[0].is_positive();
        ensure!(cone.contains(&u) == inner, "cone membership of {u}");
        let half = contains_half_line(&lift, &origin, &u, &params).map_err(|e| e.to_string())?;
        ensure!(half.is_contained() == inner, "half-line along {u}");
        let oracle = ray_length_oracle(&lift, &origin, &u, &params).map_err(|e| e.to_string())?;
        ensure!(
            matches!(oracle, RayLength::ExceedsCap { .. }) == inner,
            "oracle along {u}: {oracle:?}"
        );
    }
    let grid: Vec<u64> = (1..=100).collect();
    let u0 = Vector::basis(2, 0);
    let r = ray_decomposition_check(&lift, &u0, &grid, &params).map_err(|e| e.to_string())?;
    for row in &r.rows {
        let n = row.n as i64;
        ensure!(
            !norm_cmp(&row.w, NormKind::L2, &int(n - 1)).is_lt(),
            "||w_{n}|| < {}",
            n - 1
        );
        ensure!(
            &row.w + &row.b == u0.scale(&int(n)),
            "decomposition at n = {n}"
        );
        ensure!(norm_lt(&row.b, NormKind::L2, &int(1)), "||b_{n}|| >= 1");
        ensure!(
            row.direction_error.is_some_and(|e| e <= 1e-9),
            "direction error at n = {n}"
        );
    }
    Ok(format!("{agree} grid points agree ({skipped} within 1e-7 of the boundary), 360 directions, n = 1..100"))
}

/// Closed-form ray lengths against the bisection oracle.
fn criterion_7() -> Check {
    let params = Params::default();
    let mut rng = samplers::rng(707);
    let (mut finite, mut beyond) = (0, 0);
    let mut worst: f64 = 0.0;
    for i in 0..500 {
        let dim = 2 + i % 4;
        let norm = samplers::random_norm(&mut rng);
        let (set, center) = if i % 3 == 0 {
            let count = if rng.gen_bool(0.5) {
                None
            } else {
                Some(rng.gen_range(1..=dim))
            };
            (
                samplers::random_strip(&mut rng, dim, norm, count).map_err(|e| e.to_string())?,
                Vector::zeros(dim),
            )
        } else {
            samplers::random_polyhedron(&mut rng, dim, norm).map_err(|e| e.to_string())?
        };
        let z = samplers::interior_points(&mut rng, &set, &center, 1, &int(2))
            .map_err(|e| e.to_string())?
            .remove(0);
        let u = samplers::random_direction(&mut rng, dim);
        let closed = ray_length(&set, &z, &u, &params).map_err(|e| e.to_string())?;
        let bisect = ray_length_oracle(&set, &z, &u, &params).map_err(|e| e.to_string())?;
        let cap = 2f64.powi(params.cap_exponent as i32);
        match (&closed, &bisect) {
            (RayLength::Finite { value: a, .. }, RayLength::Finite { value: b, .. }) => {
                let (a, b) = (a.to_f64(), b.to_f64());
                let rel = (a - b).abs() / a;
                worst = worst.max(rel);
                ensure!(rel <= 1e-9, "triple {i}: {a} vs {b}");
                finite += 1;
            }
            (RayLength::Infinite, RayLength::ExceedsCap { .. }) => beyond += 1,
            (RayLength::Finite { value, .. }, RayLength::ExceedsCap { .. })
                if value.to_f64() >= cap =>
            {
                beyond += 1
            }
            _ => {
                return Err(format!(
                    "triple {i}: closed form {closed:?}, oracle {bisect:?}"
                ))
            }
        }
    }
    Ok(format!(
        "{finite} finite within rel {worst:.1e}, {beyond} beyond cap"
    ))
}

/// Rational points of large norm in unbounded sets.
fn criterion_8() -> Check {
    let m = int(1_000_000);
    let mut rng = samplers::rng(808);
    for i in 0..20 {
        let dim = 2 + i % 4;
        let norm = samplers::random_norm(&mut rng);
        let set = match i % 3 {
            0 => {
                samplers::polyhedron_with_ray(&mut rng, dim, norm, false)
                    .map_err(|e| e.to_string())?
                    .set
            }
            1 => samplers::random_strip(&mut rng, dim, norm, Some(dim - 1))
                .map_err(|e| e.to_string())?,
            _ => stadium().with_norm(norm),
        };
        let w = dense_restriction_witness(&set, &m).map_err(|e| format!("set {i}: {e}"))?;
        let b_inside = match set.shape() {
            Shape::Minkowski(_) => {
                // dist(b, (0, inf) e_1) < 1 in the set's norm, exactly
                let (x, y) = (&w.b.coords()[0], &w.b.coords()[1]);
                let offset = if x.is_negative() {
                    w.b.clone()
                } else {
                    Vector::new(vec![Rational::zero(), y.clone()])
                };
                norm_lt(&offset, norm, &int(1))
            }
            _ => inside(&set, &w.b),
        };
        ensure!(b_inside, "set {i}: b outside");
        ensure!(norm_cmp(&w.b, norm, &m).is_gt(), "set {i}: ||b|| <= M");
        ensure!(
            norm_cmp(&w.a, norm, &(&m + int(1))).is_gt(),
            "set {i}: ||a|| <= M + 1"
        );
        ensure!(
            w.delta.is_positive() && w.delta < rat(1, 2),
            "set {i}: delta = {}",
            w.delta
        );
        ensure!(
            norm_lt(&(&w.b - &w.a), norm, &w.delta),
            "set {i}: b not in B(a, delta)"
        );
    }
    for d in [2usize, 4, 8, 16] {
        let set = build_strip(
            BiorthogonalSystem::orthonormal(d),
            &EpsRule::Linear.take(d),
            NormKind::L2,
        )
        .map_err(|e| e.to_string())?;
        let r = dense_restriction_witness(&set, &int(d as i64));
        ensure!(
            matches!(r, Err(Error::CannotWitness(_))),
            "bounded S_{d}: {r:?}"
        );
    }
    Ok("20/20 witnesses with ||b|| > 10^6 inside; bounded strips report CannotWitness".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Check, Option<Duration>);
    let criteria: [Criterion; 8] = [
        (
            "half-line transfer on random polyhedra",
            criterion_1,
            Some(Duration::from_secs(10)),
        ),
        ("translated-ray certificates", criterion_2, None),
        ("direction-set invariance", criterion_3, None),
        ("limit directions of diverging sequences", criterion_4, None),
        (
            "strip-set construction sweep",
            criterion_5,
            Some(Duration::from_secs(30)),
        ),
        ("Minkowski lift of a half-line", criterion_6, None),
        ("closed-form vs bisection ray length", criterion_7, None),
        ("dense rational witnesses", criterion_8, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, budget) {
            (Ok(_), Some(b)) if elapsed > *b => Err(format!("took {elapsed:.1?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
