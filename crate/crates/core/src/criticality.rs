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

//! Criticality classes of tuples of polytopes.
//!
//! A tuple `(A_1, ..., A_l)` is semicritical, critical or supercritical when
//! `dim pspan sum_{i in I} A_i` is at least `|I|`, `|I| + 1` or `|I| + 2` for
//! every nonempty index set `I`.

use num_traits::Signed;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::{dim_pspan, VPolytope};
use crate::mixed_volume::mixed_volume;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    Subcritical,
    Semicritical,
    Critical,
    Supercritical,
}

impl Class {
    fn from_slack(slack: i64) -> Class {
        match slack {
            s if s >= 2 => Class::Supercritical,
            1 => Class::Critical,
            0 => Class::Semicritical,
            _ => Class::Subcritical,
        }
    }

    pub fn is_semicritical(self) -> bool {
        self >= Class::Semicritical
    }

    pub fn is_critical(self) -> bool {
        self >= Class::Critical
    }

    pub fn is_supercritical(self) -> bool {
        self == Class::Supercritical
    }

    pub fn name(self) -> &'static str {
        match self {
            Class::Subcritical => "subcritical",
            Class::Semicritical => "semicritical",
            Class::Critical => "critical",
            Class::Supercritical => "supercritical",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetDim {
    pub subset: Vec<usize>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub class: Class,
    /// A subset minimizing `dim pspan - |I|`; absent for the empty tuple.
    pub witness: Option<Vec<usize>>,
    pub per_subset: Vec<SubsetDim>,
}

pub fn classify(bodies: &[&VPolytope]) -> Result<CriticalityReport> {
    let l = bodies.len();
    let mut per_subset = Vec::with_capacity((1usize << l).saturating_sub(1));
    let mut best: Option<(i64, Vec<usize>)> = None;
    for mask in 1usize..(1 << l) {
        let subset: Vec<usize> = (0..l).filter(|i| mask >> i & 1 == 1).collect();
        let chosen: Vec<&VPolytope> = subset.iter().map(|&i| bodies[i]).collect();
        let dim = dim_pspan(&chosen)?;
        let slack = dim as i64 - subset.len() as i64;
        if best.as_ref().is_none_or(|(s, _)| slack < *s) {
            best = Some((slack, subset.clone()));
        }
        per_subset.push(SubsetDim { subset, dim });
    }
    let (class, witness) = match best {
        None => (Class::Supercritical, None),
        Some((slack, w)) => (Class::from_slack(slack), Some(w)),
    };
    Ok(CriticalityReport { class, witness, per_subset })
}

/// Outcome of appending one body to a classified tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AppendReport {
    pub before: Class,
    pub extra_dim: usize,
    pub after: Class,
    /// For a critical tuple: the appended tuple should be semicritical iff `extra_dim >= 1`.
    pub predicted_semicritical: Option<bool>,
    /// For a supercritical tuple: the appended tuple should be critical iff `extra_dim >= 2`.
    pub predicted_critical: Option<bool>,
    pub consistent: bool,
}

pub fn check_append_rules(bodies: &[&VPolytope], extra: &VPolytope) -> Result<AppendReport> {
    let before = classify(bodies)?.class;
    let mut appended = bodies.to_vec();
    appended.push(extra);
    let after = classify(&appended)?.class;
    let extra_dim = extra.dim();
    let predicted_semicritical = before.is_critical().then_some(extra_dim >= 1);
    let predicted_critical = before.is_supercritical().then_some(extra_dim >= 2);
    let consistent = predicted_semicritical.is_none_or(|p| p == after.is_semicritical())
        && predicted_critical.is_none_or(|p| p == after.is_critical());
    Ok(AppendReport { before, extra_dim, after, predicted_semicritical, predicted_critical, consistent })
}

/// Whether "semicritical iff the mixed volume is positive" holds for this n-tuple.
pub fn positivity_crosscheck(bodies: &[&VPolytope]) -> Result<bool> {
    let v = mixed_volume(bodies)?;
    let semi = classify(bodies)?.class.is_semicritical();
    Ok(semi == v.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::scalar::int;

    fn seg(i: usize) -> VPolytope {
        VPolytope::segment(Point::zero(3), Point::unit(3, i)).unwrap()
    }

    fn square_xy() -> VPolytope {
        VPolytope::from_int_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]).unwrap()
    }

    #[test]
    fn classes() {
        let c = VPolytope::cube(3, int(0), int(1)).unwrap();
        assert_eq!(classify(&[&c]).unwrap().class, Class::Supercritical);
        assert_eq!(classify(&[&seg(0)]).unwrap().class, Class::Semicritical);
        let sq = square_xy();
        let r = classify(&[&sq, &sq]).unwrap();
        assert_eq!(r.class, Class::Semicritical);
        assert_eq!(r.witness, Some(vec![0, 1]));
        assert_eq!(r.per_subset.len(), 3);
        let empty = classify(&[]).unwrap();
        assert_eq!(empty.class, Class::Supercritical);
        assert!(empty.witness.is_none());
    }

    #[test]
    fn append_rules() {
        let c = VPolytope::cube(3, int(0), int(1)).unwrap();
        let r = check_append_rules(&[&c], &square_xy()).unwrap();
        assert_eq!(r.after, Class::Critical);
        assert!(r.consistent);
        let r = check_append_rules(&[&c], &seg(2)).unwrap();
        assert_eq!(r.after, Class::Semicritical);
        assert_eq!(r.predicted_critical, Some(false));
        assert!(r.consistent);
        let pt = VPolytope::singleton(Point::from_ints(&[1, 1, 1]));
        let r = check_append_rules(&[&seg(0), &seg(1)], &pt).unwrap();
        assert!(!r.after.is_semicritical());
        assert!(r.consistent);
    }

    #[test]
    fn positivity() {
        assert!(positivity_crosscheck(&[&seg(0), &seg(1), &seg(2)]).unwrap());
        assert!(positivity_crosscheck(&[&seg(0), &seg(0), &seg(1)]).unwrap());
        assert_eq!(classify(&[&seg(0), &seg(0), &seg(1)]).unwrap().class, Class::Subcritical);
        let c = VPolytope::cube(3, int(0), int(1)).unwrap();
        assert!(positivity_crosscheck(&[&c, &c, &c]).unwrap());
    }
}
