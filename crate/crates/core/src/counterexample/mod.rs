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

//! Strip sets with no half-line, their witness points, the dense-subspace
//! restriction, the Minkowski lift, and the dimension sweep.

mod biorthogonal;
mod dense;
mod lift;
mod strip;

pub use biorthogonal::{BiorthogonalSystem, SystemKind};
pub use dense::{dense_restriction_witness, DenseRestrictionWitness};
pub use lift::{
    lift_trials, minkowski_lift, ray_decomposition_check, DecompositionRow, LiftTrials,
    RayDecompositionReport, TrialCount,
};
pub use strip::{
    build_strip, escape_profile, sweep_set, witness_points, EpsRule, EscapeProfile, EscapeRow,
    SweepConfig, WitnessCheck, WitnessPoint,
};
