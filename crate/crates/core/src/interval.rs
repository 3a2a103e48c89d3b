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

//! Outward-rounded interval arithmetic for the few quantities that are
//! irrational (square roots, angles, constants involving pi).
//!
//! Basic IEEE operations are correctly rounded, so widening each result by one
//! ulp in both directions gives a rigorous enclosure. Library transcendental
//! functions are widened by [`LIBM_ULPS`].

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

use crate::scalar::{to_f64, Scalar};

/// Assumed worst-case error of `atan2`/`acos` in the platform libm.
pub const LIBM_ULPS: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

fn widen(lo: f64, hi: f64, ulps: u32) -> Interval {
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..ulps {
        lo = lo.next_down();
        hi = hi.next_up();
    }
    Interval { lo, hi }
}

impl Interval {
    pub fn point(v: f64) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "inverted interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// Enclosure of an exact rational.
    pub fn from_scalar(s: &Scalar) -> Self {
        let v = to_f64(s);
        if num_traits::Zero::is_zero(s) {
            return Interval::point(0.0);
        }
        // Ratio -> f64 is not guaranteed correctly rounded.
        widen(v, v, 2)
    }

    pub fn pi() -> Self {
        widen(PI, PI, 1)
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn radius(&self) -> f64 {
        0.5 * (self.hi - self.lo)
    }

    pub fn contains(&self, v: f64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn sqrt(self) -> Self {
        let lo = self.lo.max(0.0);
        if self.hi <= 0.0 {
            return Interval::point(0.0);
        }
        let l = if lo == 0.0 { 0.0 } else { lo.sqrt().next_down().max(0.0) };
        Interval { lo: l, hi: self.hi.sqrt().next_up() }
    }

    /// Enclosure of `atan2(y, x)` for point arguments.
    pub fn atan2(y: f64, x: f64) -> Self {
        let v = y.atan2(x);
        widen(v, v, LIBM_ULPS)
    }

    /// Enclosure of `atan2` over a box in the closed upper half-plane that avoids the origin.
    ///
    /// The angle is monotone along rays, so its extremes over the box sit at the corners.
    pub fn atan2_box(y: Interval, x: Interval) -> Self {
        assert!(y.lo >= 0.0, "atan2_box needs y >= 0");
        assert!(y.lo > 0.0 || x.lo > 0.0 || x.hi < 0.0, "box touches the origin");
        let corners = [(y.lo, x.lo), (y.lo, x.hi), (y.hi, x.lo), (y.hi, x.hi)];
        let vals = corners.map(|(a, b)| a.atan2(b));
        let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        widen(lo, hi, LIBM_ULPS)
    }

    pub fn max(self, other: Self) -> Self {
        Interval { lo: self.lo.max(other.lo), hi: self.hi.max(other.hi) }
    }

    /// `true` when every point of `self` is `<=` every point of `other`.
    pub fn certainly_le(&self, other: &Self) -> bool {
        self.hi <= other.lo
    }

    pub fn sum<I: IntoIterator<Item = Interval>>(items: I) -> Self {
        items.into_iter().fold(Interval::point(0.0), |a, b| a + b)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.17e}, {:.17e}]", self.lo, self.hi)
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        widen(self.lo + o.lo, self.hi + o.hi, 1)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        widen(self.lo - o.hi, self.hi - o.lo, 1)
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        if self == Interval::point(0.0) || o == Interval::point(0.0) {
            return Interval::point(0.0);
        }
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        widen(lo, hi, 1)
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "interval division by a range containing zero");
        let c = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        widen(lo, hi, 1)
    }
}

/// Volume of the unit ball, `kappa_n`, and surface area of the unit sphere, `omega_n = n kappa_n`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Constants {
    pub kappa: Interval,
    pub omega: Interval,
}

impl Constants {
    pub fn for_dim(n: usize) -> Self {
        let pi = Interval::pi();
        let one = Interval::point(1.0);
        // kappa_n = pi^{n/2} / Gamma(n/2 + 1), via kappa_n = 2 pi / n * kappa_{n-2}.
        let kappa = match n {
            0 => one,
            1 => Interval::point(2.0),
            _ => {
                let mut k = if n.is_multiple_of(2) { one } else { Interval::point(2.0) };
                let mut m = if n.is_multiple_of(2) { 2 } else { 3 };
                while m <= n {
                    k = k * Interval::point(2.0) * pi / Interval::point(m as f64);
                    m += 2;
                }
                k
            }
        };
        let omega = kappa * Interval::point(n as f64);
        Constants { kappa, omega }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_enclosed() {
        let p = Interval::pi();
        assert!(p.lo < PI && PI < p.hi);
        // sqrt(pi) squared brackets pi.
        let s = p.sqrt();
        let sq = s * s;
        assert!(sq.lo <= p.lo && p.hi <= sq.hi);
    }

    #[test]
    fn ball_constants() {
        let c2 = Constants::for_dim(2);
        assert!(c2.kappa.contains(PI));
        let c3 = Constants::for_dim(3);
        assert!(c3.kappa.contains(4.0 * PI / 3.0));
        assert!(c3.omega.contains(4.0 * PI));
        let c4 = Constants::for_dim(4);
        assert!(c4.kappa.contains(PI * PI / 2.0));
        for n in 1..=4 {
            let c = Constants::for_dim(n);
            let prod = c.kappa * Interval::point(n as f64);
            assert!((prod.mid() - c.omega.mid()).abs() <= 1e-14 * c.omega.mid());
        }
    }

    #[test]
    fn sqrt_of_zero_is_exact() {
        assert_eq!(Interval::point(0.0).sqrt(), Interval::point(0.0));
    }
}
