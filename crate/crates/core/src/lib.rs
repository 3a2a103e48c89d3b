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

//! Exact convex geometry of rational polytopes in dimensions 1 to 4: hulls,
//! volumes and mixed volumes, mixed area measures, Alexandrov-Fenchel
//! discriminants with their equality witnesses, criticality of tuples,
//! generating measures, and zonotope summands of 3-polytopes.
//!
//! All geometric predicates use [`scalar::Scalar`], an arbitrary-precision
//! rational. Floating point appears only in quantities that are irrational in
//! general (mean width, Steiner point, angles) and always as an [`interval::Interval`].

pub mod error;
pub mod geometry;
pub mod interval;
pub mod linalg;
pub mod scalar;
pub mod area_measure;
pub mod mixed_volume;
pub mod criticality;
pub mod afi;
pub mod polyoid;
pub mod appendix;
pub mod io;
pub mod random;
pub mod cli;
