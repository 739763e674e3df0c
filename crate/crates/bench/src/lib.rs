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

//! Shared fixtures for the criterion benches.

use recess_core::counterexample::{build_strip, minkowski_lift, BiorthogonalSystem, EpsRule};
use recess_core::samplers::{self, ConePolyhedron};
use recess_core::scalar::int;
use recess_core::{ConvexSet, Functional, NormKind};

/// `S_d` with `eps_n = n` on a perturbed system.
pub fn strip(d: usize, norm: NormKind) -> ConvexSet {
    let sys = BiorthogonalSystem::perturbed(d, 11).expect("unimodular");
    build_strip(sys, &EpsRule::Linear.take(d), norm).expect("valid radii")
}

/// `(0, inf) e_1 + B(0, 1)` in the plane.
pub fn stadium(norm: NormKind) -> ConvexSet {
    let half_line =
        ConvexSet::half_space(norm, Functional::from_ints(&[-1]), int(0)).expect("valid");
    minkowski_lift(half_line, 2, int(1)).expect("valid")
}

/// A seeded polyhedron with a recession direction.
pub fn cone_polyhedron(dim: usize, seed: u64) -> ConePolyhedron {
    samplers::polyhedron_with_ray(&mut samplers::rng(seed), dim, NormKind::L2, false)
        .expect("sampler")
}
