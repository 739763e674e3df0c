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

//! Exact recession analysis for open convex sets in `R^d`.

pub mod counterexample;
pub mod error;
pub mod linalg;
pub mod lp;
pub mod recession;
pub mod samplers;
pub mod scalar;
pub mod schema;
pub mod sets;
pub mod suites;
pub mod vector;

pub use error::{Error, Result};
pub use scalar::{Extended, Rational, Scalar};
pub use sets::{ConvexSet, MembershipVerdict, Shape};
pub use vector::{Functional, NormKind, Vector};
