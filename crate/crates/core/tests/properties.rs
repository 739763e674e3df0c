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

use num_traits::Signed;
use proptest::prelude::*;

use recess_core::counterexample::{build_strip, BiorthogonalSystem, EpsRule};
use recess_core::recession::{
    ray_in_set, ray_length, ray_length_oracle, recession_cone, Params, RayLength,
};
use recess_core::samplers;
use recess_core::scalar::{format_rational, int, parse_rational, rat};
use recess_core::schema::SetDescription;
use recess_core::vector::{dual_norm_bounds, norm, norm_bounds, normalize};
use recess_core::{Functional, NormKind, Rational, Vector};

fn small_rat() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=16).prop_map(|(p, q)| rat(p, q))
}

fn vector(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(small_rat(), dim).prop_map(Vector::new)
}

fn kind() -> impl Strategy<Value = NormKind> {
    prop_oneof![Just(NormKind::L1), Just(NormKind::L2), Just(NormKind::Linf)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangle_inequality(x in vector(4), y in vector(4), k in kind()) {
        let (_, nx) = norm_bounds(&x, k);
        let (_, ny) = norm_bounds(&y, k);
        let (lo, _) = norm_bounds(&(&x + &y), k);
        prop_assert!(lo <= nx + ny);
    }

    #[test]
    fn duality_bound(x in vector(3), a in vector(3), k in kind()) {
        let a = a.as_functional();
        let (_, da) = dual_norm_bounds(&a, k);
        let (_, nx) = norm_bounds(&x, k);
        prop_assert!(a.apply(&x).abs() <= da * nx);
    }

    #[test]
    fn normalized_vectors_have_unit_norm(x in vector(3), k in kind()) {
        prop_assume!(!x.is_zero());
        let u = normalize(&x, k).unwrap();
        prop_assert!((norm(&u, k).unwrap().to_f64() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rationals_round_trip(q in small_rat()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn polyhedra_are_convex_and_open(seed in any::<u64>(), dim in 2usize..5, lam in 1i64..64) {
        let mut rng = samplers::rng(seed);
        let (set, c) = samplers::random_polyhedron(&mut rng, dim, NormKind::L2).unwrap();
        let pts = samplers::interior_points(&mut rng, &set, &c, 2, &int(3)).unwrap();
        let l = rat(lam, 64);
        let combo = &pts[0].scale(&l) + &pts[1].scale(&(int(1) - &l));
        prop_assert!(set.is_inside(&combo).unwrap());
        let delta = set.safe_inner_radius(&pts[0]).unwrap().unwrap_or_else(|| int(1));
        // the point delta/2 away along any coordinate stays inside
        for i in 0..dim {
            let e = Vector::basis(dim, i).scale(&(&delta / int(2)));
            prop_assert!(set.is_inside(&(&pts[0] + &e)).unwrap());
            prop_assert!(set.is_inside(&(&pts[0] - &e)).unwrap());
        }
    }

    #[test]
    fn strip_sets_are_symmetric(seed in any::<u64>(), x in vector(4), k in kind()) {
        let sys = BiorthogonalSystem::perturbed(4, seed).unwrap();
        let set = build_strip(sys, &EpsRule::Linear.take(4), k).unwrap();
        prop_assert_eq!(set.is_inside(&x).unwrap(), set.is_inside(&-&x).unwrap());
    }

    #[test]
    fn closed_form_matches_bisection(seed in any::<u64>(), dim in 2usize..5) {
        let params = Params::default();
        let mut rng = samplers::rng(seed);
        let norm = samplers::random_norm(&mut rng);
        let (set, c) = samplers::random_polyhedron(&mut rng, dim, norm).unwrap();
        let u = samplers::random_direction(&mut rng, dim);
        match (ray_length(&set, &c, &u, &params).unwrap(), ray_length_oracle(&set, &c, &u, &params).unwrap()) {
            (RayLength::Finite { value: a, .. }, RayLength::Finite { value: b, .. }) => {
                prop_assert!((a.to_f64() - b.to_f64()).abs() <= 1e-9 * a.to_f64());
            }
            (RayLength::Infinite, RayLength::ExceedsCap { .. }) => {}
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn cone_directions_are_rays(seed in any::<u64>(), dim in 2usize..5) {
        let mut rng = samplers::rng(seed);
        let p = samplers::polyhedron_with_ray(&mut rng, dim, NormKind::L1, false).unwrap();
        let cone = recession_cone(&p.set).unwrap();
        let u = cone.sample_ray().unwrap();
        prop_assert!(cone.contains(&u));
        prop_assert!(ray_in_set(&p.set, &p.center, &u).unwrap());
        prop_assert!(ray_in_set(&p.set, &p.center, &p.ray).unwrap());
    }

    #[test]
    fn descriptions_round_trip(seed in any::<u64>(), dim in 1usize..5) {
        let mut rng = samplers::rng(seed);
        let (set, _) = samplers::random_polyhedron(&mut rng, dim, NormKind::Linf).unwrap();
        let text = SetDescription::describe(&set).unwrap().to_json();
        prop_assert_eq!(SetDescription::from_json(&text).unwrap().build().unwrap(), set);
    }

    #[test]
    fn strip_ray_lengths_scale(d in 1usize..6, n in 0usize..6, c in 1i64..20) {
        prop_assume!(n < d);
        let set = build_strip(BiorthogonalSystem::orthonormal(d), &EpsRule::Linear.take(d), NormKind::L2).unwrap();
        let u = Functional::basis(d, n).as_vector().scale(&int(c));
        let len = ray_length(&set, &Vector::zeros(d), &u, &Params::default()).unwrap();
        prop_assert_eq!(len.value().unwrap().to_rational(), rat(n as i64 + 1, c));
    }
}
