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

//! Machine-checkable certificates for half-line containment.
//!
//! All certificate identities are checked in exact rational arithmetic. Where
//! an L2 norm is irrational, the certificate records the rational value it
//! used in its place; the checks then hold for that recorded value.

use num_traits::{One, Signed};
use serde::Serialize;

use super::{contains_half_line, ray_in_set, recession_cone, Params};
use crate::error::{Error, Result};
use crate::scalar::{self, serde_rational, Rational};
use crate::sets::{ConvexSet, Gauge};
use crate::vector::{
    check_dim, norm, norm_bounds, norm_gt, norm_lt, norm_rational, normalize, NormKind, Vector,
};

/// Proof that `a_0 = z_0 + t_0 u_0` lies in the set, given that the half-line
/// `{t u_0 : t > 0}` does: `a_0` is a convex combination of a point `xi` of
/// the ball `B(z_0, delta)` and the ray point `t_1 u_0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContradictionCertificate {
    pub norm: NormKind,
    pub z0: Vector,
    pub u0: Vector,
    #[serde(with = "serde_rational")]
    pub t0: Rational,
    pub a0: Vector,
    /// Radius with `B(z_0, delta)` inside the set (a rigorous lower bound).
    #[serde(with = "serde_rational")]
    pub delta: Rational,
    #[serde(with = "serde_rational")]
    pub t1: Rational,
    /// Value used for `||t_1 u_0 - a_0||`.
    #[serde(with = "serde_rational")]
    pub chord_norm: Rational,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    pub xi: Vector,
    #[serde(with = "serde_rational::vec")]
    pub weights: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    /// `|| (t_1 u_0 - a_0)/||t_1 u_0 - a_0|| - u_0 || < delta / (2 t_0)`
    pub direction_error: bool,
    /// `xi` in `B(z_0, delta)`
    pub ball: bool,
    /// `a_0 = xi/(1-lambda) + (-lambda/(1-lambda)) t_1 u_0` with weights in `(0, 1)`
    pub combination: bool,
    /// `delta` is a valid inner radius at `z_0` and `t_1 u_0` is in the set
    pub premises: bool,
}

impl CertificateCheck {
    pub fn all(&self) -> bool {
        self.direction_error && self.ball && self.combination && self.premises
    }
}

impl ContradictionCertificate {
    fn chord(&self) -> Vector {
        &self.u0.scale(&self.t1) - &self.a0
    }

    pub fn verify(&self, set: &ConvexSet) -> Result<CertificateCheck> {
        let kind = self.norm;
        let two = scalar::int(2);
        let chord = self.chord();
        let dir_gap = &chord.scale(&self.chord_norm.recip()) - &self.u0;
        let direction_error = norm_lt(&dir_gap, kind, &(&self.delta / (&two * &self.t0)));
        let ball = norm_lt(&(&self.xi - &self.z0), kind, &self.delta);

        let one = Rational::one();
        let denom = &one - &self.lambda;
        let w_xi = denom.recip();
        let w_ray = -&self.lambda / &denom;
        let in_unit = |w: &Rational| w.is_positive() && w < &one;
        let combined = &self.xi.scale(&w_xi) + &self.u0.scale(&(&self.t1 * &w_ray));
        let combination = self.lambda.is_negative()
            && self.weights == [w_xi.clone(), w_ray.clone()]
            && in_unit(&w_xi)
            && in_unit(&w_ray)
            && combined == self.a0
            && self.xi == self.a0.along(&chord, &self.lambda)
            && self.a0 == self.z0.along(&self.u0, &self.t0);

        let safe = set.safe_inner_radius(&self.z0)?;
        let premises = safe.is_none_or(|r| self.delta <= r)
            && self.delta.is_positive()
            && set.is_inside(&self.u0.scale(&self.t1))?;
        Ok(CertificateCheck {
            direction_error,
            ball,
            combination,
            premises,
        })
    }
}

/// Builds the convex-combination certificate for `a_0 = z_0 + t_0 u_0`.
///
/// Requires the open half-line `{t u_0 : t > 0}` in the set (checked exactly)
/// and `||u_0|| = 1` within tolerance. `t_1` doubles from 1 until the chord
/// direction is within `delta / (2 t_0)` of `u_0`.
pub fn translate_ray_certificate(
    set: &ConvexSet,
    z0: &Vector,
    u0: &Vector,
    t0: &Rational,
    params: &Params,
) -> Result<ContradictionCertificate> {
    check_dim(set.dim(), z0.dim())?;
    check_dim(set.dim(), u0.dim())?;
    if !t0.is_positive() {
        return Err(Error::invalid("t_0 must be positive"));
    }
    let kind = set.norm();
    if u0.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if (norm(u0, kind)?.to_f64() - 1.0).abs() > params.tolerance {
        return Err(Error::invalid("u_0 must have unit norm"));
    }
    if !set.is_inside(z0)? {
        return Err(Error::NotInSet);
    }
    if !ray_in_set(set, &Vector::zeros(set.dim()), u0)? {
        return Err(Error::PremiseViolated(
            "the half-line {t u_0 : t > 0} is not contained in the set".into(),
        ));
    }
    let delta = set.safe_inner_radius(z0)?.unwrap_or_else(Rational::one);
    let a0 = z0.along(u0, t0);
    let two = scalar::int(2);
    let threshold = &delta / (&two * t0);
    let mut t1 = Rational::one();
    for _ in 0..=params.search_cap_exponent {
        let chord = &u0.scale(&t1) - &a0;
        if !chord.is_zero() {
            let chord_norm = norm_rational(&chord, kind)?;
            let gap = &chord.scale(&chord_norm.recip()) - u0;
            if norm_lt(&gap, kind, &threshold) {
                let lambda = -t0 / &chord_norm;
                let one = Rational::one();
                let xi = a0.along(&chord, &lambda);
                let weights = vec![(&one - &lambda).recip(), -&lambda / (&one - &lambda)];
                let cert = ContradictionCertificate {
                    norm: kind,
                    z0: z0.clone(),
                    u0: u0.clone(),
                    t0: t0.clone(),
                    a0,
                    delta,
                    t1,
                    chord_norm,
                    lambda,
                    xi,
                    weights,
                };
                if !cert.verify(set)?.all() {
                    return Err(Error::CertificateSearchFailed(
                        "constructed certificate failed verification".into(),
                    ));
                }
                return Ok(cert);
            }
        }
        t1 *= &two;
    }
    Err(Error::SearchCapExceeded(format!(
        "no t_1 <= 2^{} aligns the chord with u_0",
        params.search_cap_exponent
    )))
}

/// One sample point covered by a half-line parallel to `u_0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Decomposition {
    pub point: Vector,
    pub base: Vector,
    #[serde(with = "serde_rational")]
    pub delta: Rational,
    /// `point = base + offset u_0`
    #[serde(with = "serde_rational")]
    pub offset: Rational,
    pub covered: bool,
}

/// Writes every sample `z_0` as a point of the half-line from
/// `z_0 - (delta/2) u_0` in direction `u_0`.
pub fn decompose(set: &ConvexSet, u0: &Vector, samples: &[Vector]) -> Result<Vec<Decomposition>> {
    check_dim(set.dim(), u0.dim())?;
    if u0.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if !recession_cone(set)?.contains(u0) {
        return Err(Error::PremiseViolated(
            "u_0 is not a recession direction".into(),
        ));
    }
    let (_, u_norm_hi) = norm_bounds(u0, set.norm());
    samples
        .iter()
        .map(|z0| {
            let delta = set.safe_inner_radius(z0)?.unwrap_or_else(Rational::one);
            let offset = &delta / (scalar::int(2) * &u_norm_hi);
            let base = z0.along(u0, &(-&offset));
            let covered = set.is_inside(&base)?
                && ray_in_set(set, &base, u0)?
                && base.along(u0, &offset) == *z0
                && offset.is_positive();
            Ok(Decomposition {
                point: z0.clone(),
                base,
                delta,
                offset,
                covered,
            })
        })
        .collect()
}

/// Sampled view of the set of half-line directions from one base point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionSet {
    pub base: Vector,
    pub contained: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub direction: usize,
    pub first_base: usize,
    pub other_base: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    pub direction_sets: Vec<DirectionSet>,
    pub discrepancies: Vec<Discrepancy>,
}

impl InvarianceReport {
    pub fn is_invariant(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares half-line membership of every direction across all bases.
pub fn direction_set_invariance(
    set: &ConvexSet,
    bases: &[Vector],
    directions: &[Vector],
    params: &Params,
) -> Result<InvarianceReport> {
    let mut direction_sets = Vec::with_capacity(bases.len());
    for base in bases {
        check_dim(set.dim(), base.dim())?;
        if !set.is_inside(base)? {
            return Err(Error::NotInSet);
        }
        let contained = directions
            .iter()
            .map(|u| contains_half_line(set, base, u, params).map(|h| h.is_contained()))
            .collect::<Result<Vec<_>>>()?;
        direction_sets.push(DirectionSet {
            base: base.clone(),
            contained,
        });
    }
    let mut discrepancies = Vec::new();
    if let Some(first) = direction_sets.first() {
        for (j, other) in direction_sets.iter().enumerate().skip(1) {
            for (d, (a, b)) in first.contained.iter().zip(&other.contained).enumerate() {
                if a != b {
                    discrepancies.push(Discrepancy {
                        direction: d,
                        first_base: 0,
                        other_base: j,
                    });
                }
            }
        }
    }
    Ok(InvarianceReport {
        direction_sets,
        discrepancies,
    })
}

/// Proof that `t u_0` is in the set as the midpoint of `b_n = 2t u_n` and
/// `2t u_0 - b_n`, both in the set. Indices are 1-based positions in the sequence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MidpointCertificate {
    #[serde(with = "serde_rational")]
    pub t: Rational,
    pub n: usize,
    pub n1: usize,
    pub n2: usize,
    /// `w_n / N` with `N` the recorded value of `||w_n||`.
    pub u_n: Vector,
    pub b_n: Vector,
    pub complement: Vector,
    pub midpoint: Vector,
}

impl MidpointCertificate {
    pub fn verify(&self, set: &ConvexSet, u0: &Vector) -> Result<bool> {
        let half = scalar::rat(1, 2);
        let two_t = scalar::int(2) * &self.t;
        Ok(set.is_inside(&self.b_n)?
            && set.is_inside(&self.complement)?
            && self.b_n == self.u_n.scale(&two_t)
            && self.complement == &u0.scale(&two_t) - &self.b_n
            && self.midpoint == u0.scale(&self.t)
            && self.midpoint == &self.b_n.scale(&half) + &self.complement.scale(&half)
            && self.n >= self.n1.max(self.n2))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitDirection {
    pub direction: Vector,
    /// Net radius at which a large enough cluster appeared.
    pub cluster_radius: f64,
    pub cluster_size: usize,
    pub certificates: Vec<MidpointCertificate>,
}

fn check_sequence(set: &ConvexSet, sequence: &[Vector]) -> Result<()> {
    let kind = set.norm();
    if sequence.len() < 2 {
        return Err(Error::invalid("sequence needs at least two points"));
    }
    if !set.is_inside(&Vector::zeros(set.dim()))? {
        return Err(Error::PremiseViolated(
            "the origin is not in the set".into(),
        ));
    }
    for (i, w) in sequence.iter().enumerate() {
        check_dim(set.dim(), w.dim())?;
        if !set.is_inside(w)? {
            return Err(Error::NotInSet);
        }
        if i > 0 {
            let prev = Gauge::of(&sequence[i - 1], kind);
            if Gauge::of(w, kind).raw <= prev.raw {
                return Err(Error::invalid(format!(
                    "norms must increase strictly (position {})",
                    i + 1
                )));
            }
        }
    }
    let first = Gauge::of(&sequence[0], kind).raw;
    let last = Gauge::of(&sequence[sequence.len() - 1], kind).raw;
    let factor = if kind == NormKind::L2 { 100 } else { 10 };
    if last < first * scalar::int(factor) {
        return Err(Error::invalid(
            "last norm must be at least ten times the first",
        ));
    }
    Ok(())
}

fn dist_f64(a: &[f64], b: &[f64], kind: NormKind) -> f64 {
    let d = a.iter().zip(b).map(|(x, y)| (x - y).abs());
    match kind {
        NormKind::L1 => d.sum(),
        NormKind::L2 => d.map(|x| x * x).sum::<f64>().sqrt(),
        NormKind::Linf => d.fold(0.0, f64::max),
    }
}

/// Greedy epsilon-net over the normalized points, seeded from the tail.
/// Returns the members (ascending indices) of the largest cluster.
fn largest_cluster(points: &[Vec<f64>], eps: f64, kind: NormKind) -> Vec<usize> {
    let mut centers: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in (0..points.len()).rev() {
        match centers
            .iter()
            .position(|&c| dist_f64(&points[c], &points[i], kind) <= eps)
        {
            Some(k) => members[k].push(i),
            None => {
                centers.push(i);
                members.push(vec![i]);
            }
        }
    }
    // ties go to the cluster seeded latest in the sequence
    let mut best =
        members.into_iter().fold(
            Vec::new(),
            |best: Vec<usize>, m| if m.len() > best.len() { m } else { best },
        );
    best.sort_unstable();
    best
}

/// Extracts a limit direction of `w_n / ||w_n||` and certifies `t u_0` in the
/// set for `t` in `scales`.
///
/// The limit point is located with an epsilon-net of radius
/// `params.cluster_eps`, escalated by factors of 10 up to
/// `params.cluster_eps_max` until a cluster of `params.min_cluster` members
/// appears. Two estimates are tried in order: the chord between the first and
/// last cluster members (exact for sequences affine in `n`), then the cluster
/// mean. The first one whose midpoint certificates all verify is returned.
pub fn limit_direction(
    set: &ConvexSet,
    sequence: &[Vector],
    scales: &[Rational],
    params: &Params,
) -> Result<LimitDirection> {
    check_sequence(set, sequence)?;
    let kind = set.norm();
    let normalized: Vec<Vec<f64>> = sequence
        .iter()
        .map(|w| normalize(w, kind).map(|u| u.to_f64()))
        .collect::<Result<_>>()?;

    let mut eps = params.cluster_eps;
    let (cluster, radius) = loop {
        let cluster = largest_cluster(&normalized, eps, kind);
        if cluster.len() >= params.min_cluster {
            break (cluster, eps);
        }
        let next = eps * 10.0;
        if next > params.cluster_eps_max * (1.0 + 1e-12) {
            return Err(Error::InsufficientSequence {
                largest: cluster.len(),
                required: params.min_cluster,
            });
        }
        eps = next;
    };

    let first = cluster[0];
    let last = cluster[cluster.len() - 1];
    let mut candidates = Vec::new();
    let chord = &sequence[last] - &sequence[first];
    if !chord.is_zero() {
        candidates.push(chord);
    }
    let dim = set.dim();
    let mean: Vec<f64> = (0..dim)
        .map(|j| cluster.iter().map(|&i| normalized[i][j]).sum::<f64>() / cluster.len() as f64)
        .collect();
    let mean = Vector::from_f64(&mean)?;
    if !mean.is_zero() {
        candidates.push(mean);
    }

    let mut last_err = None;
    for candidate in candidates {
        let u0 = normalize(&candidate, kind)?;
        let certs: Result<Vec<_>> = scales
            .iter()
            .map(|t| midpoint_certificate(set, sequence, &u0, t))
            .collect();
        match certs {
            Ok(certificates) => {
                return Ok(LimitDirection {
                    direction: u0,
                    cluster_radius: radius,
                    cluster_size: cluster.len(),
                    certificates,
                })
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err
        .unwrap_or_else(|| Error::CertificateSearchFailed("no nonzero direction estimate".into())))
}

/// Finds `n >= max(n_1, n_2)` with `2t < ||w_n||` (from `n_1` on) and
/// `2t u_0 - b_n` in the set (for every index from `n_2` on).
pub fn midpoint_certificate(
    set: &ConvexSet,
    sequence: &[Vector],
    u0: &Vector,
    t: &Rational,
) -> Result<MidpointCertificate> {
    if !t.is_positive() {
        return Err(Error::invalid("t must be positive"));
    }
    let kind = set.norm();
    let two_t = scalar::int(2) * t;
    let fail = |why: &str| Error::CertificateSearchFailed(format!("t = {t}: {why}"));
    let n1 = sequence
        .iter()
        .position(|w| norm_gt(w, kind, &two_t))
        .ok_or_else(|| fail("no sequence element has norm above 2t"))?;
    let target = u0.scale(&two_t);
    let parts = |i: usize| -> Result<(Vector, Vector, Vector)> {
        let u_n = sequence[i].scale(&norm_rational(&sequence[i], kind)?.recip());
        let b_n = u_n.scale(&two_t);
        let complement = &target - &b_n;
        Ok((u_n, b_n, complement))
    };
    let mut n2 = sequence.len();
    for i in (0..sequence.len()).rev() {
        let (_, _, c) = parts(i)?;
        if !set.is_inside(&c)? {
            break;
        }
        n2 = i;
    }
    if n2 == sequence.len() {
        return Err(fail("complement 2t u_0 - b_n never enters the set"));
    }
    let n = n1.max(n2);
    let (u_n, b_n, complement) = parts(n)?;
    if !set.is_inside(&b_n)? {
        return Err(fail("b_n left the set"));
    }
    let cert = MidpointCertificate {
        t: t.clone(),
        n: n + 1,
        n1: n1 + 1,
        n2: n2 + 1,
        u_n,
        b_n,
        complement,
        midpoint: u0.scale(t),
    };
    if !cert.verify(set, u0)? {
        return Err(fail("certificate failed verification"));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::BiorthogonalSystem;
    use crate::scalar::{int, rat};
    use crate::vector::Functional;

    fn above_minus_one() -> ConvexSet {
        ConvexSet::half_space(NormKind::L2, Functional::from_ints(&[0, -1]), int(1)).unwrap()
    }

    #[test]
    fn worked_contradiction_certificate() {
        let set = above_minus_one();
        let cert = translate_ray_certificate(
            &set,
            &Vector::from_ints(&[-2, 0]),
            &Vector::basis(2, 0),
            &int(5),
            &Params::default(),
        )
        .unwrap();
        assert_eq!(cert.a0, Vector::from_ints(&[3, 0]));
        assert_eq!(cert.delta, int(1));
        assert_eq!(cert.t1, int(4));
        assert_eq!(cert.lambda, int(-5));
        assert_eq!(cert.xi, Vector::from_ints(&[-2, 0]));
        assert_eq!(cert.weights, vec![rat(1, 6), rat(5, 6)]);
        assert!(cert.verify(&set).unwrap().all());
    }

    #[test]
    fn tiny_t0_still_certifies() {
        let set = above_minus_one();
        let z0 = Vector::from_ints(&[-2, 0]);
        let cert = translate_ray_certificate(
            &set,
            &z0,
            &Vector::basis(2, 0),
            &rat(1, 1_000_000_000),
            &Params::default(),
        )
        .unwrap();
        assert!(cert.verify(&set).unwrap().all());
        assert!(set.is_inside(&cert.a0).unwrap());
    }

    #[test]
    fn base_on_the_premise_ray() {
        let set = above_minus_one();
        let u0 = Vector::basis(2, 0);
        let cert =
            translate_ray_certificate(&set, &u0.scale(&int(2)), &u0, &int(3), &Params::default())
                .unwrap();
        assert_eq!(cert.a0, Vector::from_ints(&[5, 0]));
        assert!(cert.verify(&set).unwrap().all());
    }

    #[test]
    fn premise_violation_is_reported() {
        let set = above_minus_one();
        let down = Vector::from_ints(&[0, -1]);
        assert!(matches!(
            translate_ray_certificate(&set, &Vector::zeros(2), &down, &int(1), &Params::default()),
            Err(Error::PremiseViolated(_))
        ));
    }

    #[test]
    fn decomposition_of_origin_in_half_plane() {
        let d = decompose(
            &above_minus_one(),
            &Vector::basis(2, 0),
            &[Vector::zeros(2)],
        )
        .unwrap();
        assert_eq!(d[0].delta, int(1));
        assert_eq!(d[0].base, Vector::new(vec![rat(-1, 2), int(0)]));
        assert_eq!(d[0].offset, rat(1, 2));
        assert!(d[0].covered);
    }

    #[test]
    fn decomposition_along_strip_kernel() {
        let sys = BiorthogonalSystem::orthonormal(5).truncated(4);
        let set = ConvexSet::strip_exact(sys, (1..=4).map(int).collect(), NormKind::L2).unwrap();
        let d = decompose(&set, &Vector::basis(5, 4), &[Vector::zeros(5)]).unwrap();
        assert!(d[0].covered);
        assert!(matches!(
            decompose(&set, &Vector::basis(5, 0), &[Vector::zeros(5)]),
            Err(Error::PremiseViolated(_))
        ));
    }

    #[test]
    fn worked_midpoint_certificate() {
        let set = above_minus_one();
        let seq: Vec<Vector> = (1..=200).map(|n| Vector::from_ints(&[n, 1])).collect();
        let u0 = Vector::basis(2, 0);
        let cert = midpoint_certificate(&set, &seq, &u0, &int(7)).unwrap();
        assert_eq!(cert.n, 14);
        assert_eq!(cert.midpoint, Vector::from_ints(&[7, 0]));
        assert!(cert.verify(&set, &u0).unwrap());
    }

    #[test]
    fn limit_of_affine_sequence() {
        let set = above_minus_one();
        let seq: Vec<Vector> = (1..=200).map(|n| Vector::from_ints(&[n, 1])).collect();
        let scales = [int(1), int(10), int(100)];
        let ld = limit_direction(&set, &seq, &scales, &Params::default()).unwrap();
        assert_eq!(ld.direction, Vector::basis(2, 0));
        assert_eq!(ld.certificates.len(), 3);
    }

    #[test]
    fn constant_direction_sequence() {
        let set = above_minus_one();
        let seq: Vec<Vector> = (1..=20).map(|n| Vector::from_ints(&[n, 0])).collect();
        let ld = limit_direction(&set, &seq, &[int(1)], &Params::default()).unwrap();
        assert_eq!(ld.direction, Vector::basis(2, 0));
        assert_eq!(ld.cluster_radius, 1e-6);
    }

    #[test]
    fn wandering_witnesses_have_no_cluster() {
        let d = 40;
        let set = ConvexSet::strip_exact(
            BiorthogonalSystem::orthonormal(d),
            (1..=d as i64).map(int).collect(),
            NormKind::L2,
        )
        .unwrap();
        let seq: Vec<Vector> = (1..=d)
            .map(|n| Vector::basis(d, n - 1).scale(&rat(n as i64, 2)))
            .collect();
        assert!(matches!(
            limit_direction(&set, &seq, &[int(1)], &Params::default()),
            Err(Error::InsufficientSequence { .. })
        ));
    }

    #[test]
    fn invariance_on_single_repeated_base() {
        let set = above_minus_one();
        let dirs: Vec<Vector> = (0..8)
            .map(|k| {
                let th = k as f64 * std::f64::consts::FRAC_PI_4;
                Vector::from_f64(&[th.cos(), th.sin()]).unwrap()
            })
            .collect();
        let b = Vector::zeros(2);
        let r = direction_set_invariance(&set, &[b.clone(), b], &dirs, &Params::default()).unwrap();
        assert!(r.is_invariant());
    }
}
