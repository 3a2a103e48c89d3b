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

//! Exact polytope primitives.

mod hull;
pub mod metric;
pub mod point;
pub mod polytope;
pub mod summand;

pub use metric::{diameter_sq, hausdorff_distance_sq, mean_width_3d, steiner_point_3d};
pub use point::{Direction, Point};
pub use polytope::{convex_hull, dim_pspan, Facet, SupportDiff, VPolytope};
pub use summand::{erosion, is_summand, minkowski_difference};
