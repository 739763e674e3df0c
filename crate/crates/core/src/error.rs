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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("zero direction")]
    ZeroDirection,
    #[error("point is not in the set")]
    NotInSet,
    #[error("set is empty")]
    EmptySet,
    #[error("premise violated: {0}")]
    PremiseViolated(String),
    #[error("search exceeded cap: {0}")]
    SearchCapExceeded(String),
    #[error(
        "sequence too short to exhibit a limit direction (largest cluster {largest} < {required})"
    )]
    InsufficientSequence { largest: usize, required: usize },
    #[error("certificate search failed: {0}")]
    CertificateSearchFailed(String),
    #[error("cannot build witness: {0}")]
    CannotWitness(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
