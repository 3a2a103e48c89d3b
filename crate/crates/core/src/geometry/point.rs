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

//! Points with exact coordinates and primitive integer directions.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{primitive_bigint, primitive_integer};
use crate::scalar::{from_bigint, int, Scalar};

/// A point (or vector) of R^n with rational coordinates. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<Scalar>);

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point(coords)
    }

    pub fn zero(n: usize) -> Self {
        Point(vec![Scalar::zero(); n])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Point(v.iter().map(|&x| int(x)).collect())
    }

    /// The i-th unit vector of R^n.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut p = Point::zero(n);
        p.0[i] = int(1);
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn dot(&self, other: &Point) -> Scalar {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Inner product with an integer direction.
    pub fn dot_dir(&self, d: &Direction) -> Scalar {
        self.0
            .iter()
            .zip(d.components())
            .filter(|(_, z)| !z.is_zero())
            .map(|(a, z)| a * from_bigint(z.clone()))
            .sum()
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, a: &Scalar) -> Point {
        Point(self.0.iter().map(|x| x * a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(crate::scalar::to_f64).collect()
    }

    /// Drops coordinate `i`.
    pub fn drop_coord(&self, i: usize) -> Point {
        Point(
            self.0
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, v)| v.clone())
                .collect(),
        )
    }

    pub fn select(&self, coords: &[usize]) -> Point {
        Point(coords.iter().map(|&c| self.0[c].clone()).collect())
    }
}

impl Index<usize> for Point {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A nonzero primitive integer vector `z`, standing for the unit vector `z / |z|`.
///
/// Two directions are equal exactly when they describe the same unit vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction(Vec<BigInt>);

impl Direction {
    /// Normalizes an integer vector to content 1.
    pub fn new(z: Vec<BigInt>) -> Result<Self> {
        if z.iter().all(|v| v.is_zero()) {
            return Err(Error::InvalidArgument("zero direction".into()));
        }
        Ok(Direction(primitive_bigint(z)))
    }

    pub fn from_ints(z: &[i64]) -> Result<Self> {
        Direction::new(z.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Direction of a nonzero rational vector.
    pub fn from_point(p: &Point) -> Result<Self> {
        Direction::new(primitive_integer(&p.0))
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut z = vec![BigInt::zero(); n];
        z[i] = BigInt::from(1);
        Direction(z)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[BigInt] {
        &self.0
    }

    pub fn to_point(&self) -> Point {
        Point(self.0.iter().map(|v| from_bigint(v.clone())).collect())
    }

    pub fn neg(&self) -> Direction {
        Direction(self.0.iter().map(|v| -v).collect())
    }

    pub fn norm_sq(&self) -> BigInt {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn norm(&self) -> f64 {
        self.0
            .iter()
            .map(|v| v.to_f64().unwrap_or(f64::NAN).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    pub fn unit_f64(&self) -> Vec<f64> {
        let n = self.norm();
        self.0.iter().map(|v| v.to_f64().unwrap_or(f64::NAN) / n).collect()
    }

    /// Index of the component of largest absolute value (first on ties).
    pub fn dominant_axis(&self) -> usize {
        let mut best = 0;
        for i in 1..self.0.len() {
            if self.0[i].abs() > self.0[best].abs() {
                best = i;
            }
        }
        best
    }

    /// Representative of the line through `z`: the sign making the first nonzero entry positive.
    pub fn line_representative(&self) -> Direction {
        match self.0.iter().find(|v| !v.is_zero()) {
            Some(v) if v.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|v| v.to_i64()).collect()
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ">")
    }
}
