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

//! Seeded random instances for property suites, benches and tests.
//!
//! Every sampler draws from a caller-owned `ChaCha8Rng`, so a suite is
//! reproducible from its seed alone.

use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;
pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::counterexample::{build_strip, BiorthogonalSystem};
use crate::error::{Error, Result};
use crate::lp::Inequality;
use crate::recession::recession_cone;
use crate::scalar::{self, Rational};
use crate::sets::ConvexSet;
use crate::vector::{Functional, NormKind, Vector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_norm(rng: &mut ChaCha8Rng) -> NormKind {
    *[NormKind::L1, NormKind::L2, NormKind::Linf]
        .choose(rng)
        .expect("nonempty")
}

fn int_vector(rng: &mut ChaCha8Rng, dim: usize, range: i64) -> Vec<i64> {
    (0..dim).map(|_| rng.gen_range(-range..=range)).collect()
}

fn nonzero_int_vector(rng: &mut ChaCha8Rng, dim: usize, range: i64) -> Vector {
    loop {
        let v = int_vector(rng, dim, range);
        if v.iter().any(|&x| x != 0) {
            return Vector::from_ints(&v);
        }
    }
}

/// A dyadic rational in `(-w, w)`.
pub fn small_rational(rng: &mut ChaCha8Rng, w: &Rational) -> Rational {
    let k: i64 = rng.gen_range(-(1 << 16) + 1..(1 << 16));
    scalar::rat(k, 1 << 16) * w
}

/// A random direction with small integer coordinates.
pub fn random_direction(rng: &mut ChaCha8Rng, dim: usize) -> Vector {
    nonzero_int_vector(rng, dim, 5)
}

/// Open polyhedron built around an interior point `center` and a recession
/// direction `ray`: every row satisfies `<a_i, ray> <= 0`.
#[derive(Clone, Debug)]
pub struct ConePolyhedron {
    pub set: ConvexSet,
    pub center: Vector,
    pub ray: Vector,
}

/// Random open H-polyhedron in `R^dim` with a nontrivial recession cone.
/// With `origin_inside` the center is the origin.
pub fn polyhedron_with_ray(
    rng: &mut ChaCha8Rng,
    dim: usize,
    norm: NormKind,
    origin_inside: bool,
) -> Result<ConePolyhedron> {
    let ray = nonzero_int_vector(rng, dim, 3);
    let center = if origin_inside {
        Vector::zeros(dim)
    } else {
        Vector::from_ints(&int_vector(rng, dim, 4))
    };
    let m = rng.gen_range(dim..=2 * dim + 2);
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let mut a = nonzero_int_vector(rng, dim, 4).as_functional();
        if a.apply(&ray).is_positive() {
            a = -&a;
        }
        let slack = scalar::int(rng.gen_range(1..=5));
        let b = a.apply(&center) + slack;
        rows.push(Inequality::strict(a, b));
    }
    Ok(ConePolyhedron {
        set: ConvexSet::polyhedron(dim, norm, rows)?,
        center,
        ray,
    })
}

/// Random open H-polyhedron that may be bounded or unbounded, around a
/// random interior point.
pub fn random_polyhedron(
    rng: &mut ChaCha8Rng,
    dim: usize,
    norm: NormKind,
) -> Result<(ConvexSet, Vector)> {
    if rng.gen_bool(0.5) {
        let p = polyhedron_with_ray(rng, dim, norm, false)?;
        return Ok((p.set, p.center));
    }
    let center = Vector::from_ints(&int_vector(rng, dim, 4));
    let mut rows = Vec::new();
    // a box keeps it bounded
    for i in 0..dim {
        for sign in [1, -1] {
            let a = Functional::basis(dim, i).scale(&scalar::int(sign));
            let b = a.apply(&center) + scalar::int(rng.gen_range(1..=6));
            rows.push(Inequality::strict(a, b));
        }
    }
    for _ in 0..rng.gen_range(0..=dim) {
        let a = nonzero_int_vector(rng, dim, 4).as_functional();
        let b = a.apply(&center) + scalar::int(rng.gen_range(1..=5));
        rows.push(Inequality::strict(a, b));
    }
    Ok((ConvexSet::polyhedron(dim, norm, rows)?, center))
}

/// Strip set on a perturbed or orthonormal system with random `eps`,
/// keeping `count` functionals (all when `None`).
pub fn random_strip(
    rng: &mut ChaCha8Rng,
    dim: usize,
    norm: NormKind,
    count: Option<usize>,
) -> Result<ConvexSet> {
    let mut system = if rng.gen_bool(0.5) {
        BiorthogonalSystem::orthonormal(dim)
    } else {
        BiorthogonalSystem::perturbed(dim, rng.gen())?
    };
    if let Some(k) = count {
        system = system.truncated(k);
    }
    let eps: Vec<Rational> = (0..system.count())
        .map(|_| scalar::rat(rng.gen_range(1..=40), 4))
        .collect();
    build_strip(system, &eps, norm)
}

/// `count` distinct-ish points of the set near `center`, drawn by rejection
/// from boxes of half-width `spread`, shrinking on repeated misses.
pub fn interior_points(
    rng: &mut ChaCha8Rng,
    set: &ConvexSet,
    center: &Vector,
    count: usize,
    spread: &Rational,
) -> Result<Vec<Vector>> {
    if !set.is_inside(center)? {
        return Err(Error::NotInSet);
    }
    let mut out = Vec::with_capacity(count);
    let mut width = spread.clone();
    let mut misses = 0;
    while out.len() < count {
        let offset: Vec<Rational> = (0..set.dim())
            .map(|_| small_rational(rng, &width))
            .collect();
        let p = center + &Vector::new(offset);
        if set.is_inside(&p)? {
            out.push(p);
            misses = 0;
        } else {
            misses += 1;
            if misses % 20 == 0 {
                width /= scalar::int(2);
            }
        }
    }
    Ok(out)
}

/// Random nonzero directions of the recession cone of the closure, anchored
/// on a known cone direction `ray`.
pub fn cone_directions(
    rng: &mut ChaCha8Rng,
    set: &ConvexSet,
    ray: &Vector,
    count: usize,
) -> Result<Vec<Vector>> {
    let cone = recession_cone(set)?;
    if !cone.contains(ray) || ray.is_zero() {
        return Err(Error::invalid(
            "anchor direction is not a nonzero cone direction",
        ));
    }
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = scalar::int(rng.gen_range(1..=4));
        let noise = Vector::from_ints(&int_vector(rng, set.dim(), 1));
        let u = &ray.scale(&k) + &noise;
        if !u.is_zero() && cone.contains(&u) {
            out.push(u);
        } else if rng.gen_bool(0.2) {
            out.push(ray.scale(&k));
        }
    }
    Ok(out)
}

/// Unit-ish directions on a grid of the circle, as exact rationals.
pub fn circle_grid(count: usize) -> Vec<Vector> {
    (0..count)
        .map(|k| {
            let th = k as f64 * std::f64::consts::TAU / count as f64;
            Vector::from_f64(&[th.cos(), th.sin()]).expect("finite")
        })
        .collect()
}

/// Random directions mixing cone directions and arbitrary ones.
pub fn mixed_directions(
    rng: &mut ChaCha8Rng,
    set: &ConvexSet,
    ray: Option<&Vector>,
    count: usize,
) -> Result<Vec<Vector>> {
    let mut out = Vec::with_capacity(count);
    let from_cone = match ray {
        Some(r) => cone_directions(rng, set, r, count / 2)?,
        None => Vec::new(),
    };
    out.extend(from_cone);
    while out.len() < count {
        out.push(random_direction(rng, set.dim()));
    }
    out.shuffle(rng);
    Ok(out)
}

/// A set containing the origin together with a diverging sequence
/// `w_n = g(n) c + q` (`g(n) = 2n` or `n^2`) whose directions converge to `c`.
#[derive(Clone, Debug)]
pub struct DivergingSequence {
    pub set: ConvexSet,
    pub sequence: Vec<Vector>,
    pub direction: Vector,
}

/// Alternates between polyhedra with a ray and strip sets with a kernel.
pub fn diverging_sequence(
    rng: &mut ChaCha8Rng,
    dim: usize,
    len: usize,
) -> Result<DivergingSequence> {
    let norm = random_norm(rng);
    let (set, c) = if dim >= 2 && rng.gen_bool(0.5) {
        let set = random_strip(rng, dim, norm, Some(dim - 1))?;
        let c = recession_cone(&set)?
            .sample_ray()
            .ok_or_else(|| Error::Internal("truncated strip has a trivial kernel".into()))?;
        (set, c)
    } else {
        let p = polyhedron_with_ray(rng, dim, norm, true)?;
        (p.set, p.ray)
    };
    let origin = Vector::zeros(dim);
    let mut q = interior_points(rng, &set, &origin, 1, &scalar::int(1))?.remove(0);
    let c_norm = crate::vector::norm(&c, norm)?.to_f64();
    // keeps n -> ||g(n) c + q|| strictly increasing
    while crate::vector::norm(&q, norm)?.to_f64() * 4.0 >= c_norm {
        q = q.scale(&scalar::rat(1, 2));
    }
    let quadratic = rng.gen_bool(0.3);
    let sequence = (1..=len as i64)
        .map(|n| q.along(&c, &scalar::int(if quadratic { n * n } else { 2 * n })))
        .collect();
    Ok(DivergingSequence {
        set,
        sequence,
        direction: c,
    })
}
