//   Copyright 2026 afel developers
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

//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension {0} is not supported by this operation")]
    UnsupportedDimension(usize),

    #[error("expected {expected} arguments, found {found}")]
    WrongCount { expected: usize, found: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("negative scale factor {0}")]
    NegativeScale(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A documented precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A proven identity failed on exact data. This is a library bug, never an input problem.
    #[error("theory violation: {0}")]
    TheoryViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}
