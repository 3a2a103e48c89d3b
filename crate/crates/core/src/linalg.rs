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

//! Small exact linear algebra over rationals and integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::scalar::{common_denominator, from_bigint, gcd_all, Scalar};

/// Reduced row echelon form. Returns the reduced rows (zero rows dropped) and pivot columns.
pub fn rref(mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    rref(rows.to_vec()).1.len()
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix (Bareiss).
pub fn int_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let mut prev = BigInt::one();
    let mut sign = false;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Solves the square system `a x = b` exactly using fraction-free elimination on the
/// integer-scaled augmented matrix. `None` if singular.
pub fn solve_square(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for (row, rhs) in a.iter().zip(b) {
        let den = common_denominator(row.iter().chain(std::iter::once(rhs)));
        let d = from_bigint(den);
        m.push(
            row.iter()
                .chain(std::iter::once(rhs))
                .map(|v| (v * &d).to_integer())
                .collect(),
        );
    }
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let p = (k + 1..n).find(|&i| !m[i][k].is_zero())?;
            m.swap(k, p);
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let t = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![Scalar::zero(); n];
    for i in (0..n).rev() {
        let mut acc = from_bigint(m[i][n].clone());
        for j in i + 1..n {
            acc -= from_bigint(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / from_bigint(m[i][i].clone());
    }
    Some(x)
}

/// Solution set of `a x = b`: a particular solution and a basis of the null space.
pub fn solve_affine(a: &[Vec<Scalar>], b: &[Scalar]) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    let ncols = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Scalar::zero(); ncols];
    for (row, &p) in red.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (row, &p) in red.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    Some((x, basis))
}

/// Basis of the null space of `rows` (as a linear map on column vectors).
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return (0..ncols)
            .map(|i| {
                let mut v = vec![Scalar::zero(); ncols];
                v[i] = Scalar::one();
                v
            })
            .collect();
    }
    let zeros = vec![Scalar::zero(); rows.len()];
    solve_affine(rows, &zeros).map(|(_, n)| n).unwrap_or_default()
}

/// Scales a rational vector to a primitive integer vector (content 1). Zero stays zero.
pub fn primitive_integer(v: &[Scalar]) -> Vec<BigInt> {
    let den = from_bigint(common_denominator(v.iter()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    primitive_bigint(ints)
}

pub fn primitive_bigint(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let g = gcd_all(ints.iter()).abs();
    if !g.is_zero() && !g.is_one() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    ints
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Least-squares-free orthogonal projection of `x` onto the row space of `basis`
/// complement: returns `x - N (N^T N)^{-1} N^T x` for the columns `N` of `basis`.
pub fn remove_components(x: &[Scalar], basis: &[Vec<Scalar>]) -> Vec<Scalar> {
    if basis.is_empty() {
        return x.to_vec();
    }
    let k = basis.len();
    let gram: Vec<Vec<Scalar>> = (0..k)
        .map(|i| (0..k).map(|j| dot(&basis[i], &basis[j])).collect())
        .collect();
    let rhs: Vec<Scalar> = basis.iter().map(|b| dot(b, x)).collect();
    let coef = solve_square(&gram, &rhs).expect("null space basis is independent");
    let mut out = x.to_vec();
    for (c, b) in coef.iter().zip(basis) {
        for (o, bi) in out.iter_mut().zip(b) {
            *o -= c * bi;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    fn rats(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn ranks_agree() {
        let m = &[&[1, 2, 3][..], &[2, 4, 6], &[1, 0, 1]];
        assert_eq!(int_rank(&ints(m)), 2);
        assert_eq!(rank(&rats(m)), 2);
        assert_eq!(int_rank(&ints(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn determinant() {
        let m = ints(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(int_det(&m), BigInt::from(0));
        let m = ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(int_det(&m), BigInt::from(-1));
    }

    #[test]
    fn square_solve() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let b = vec![rat(1, 2), int(1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1, 10), rat(3, 10)]);
        let singular = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        assert!(solve_square(&singular, &b).is_none());
    }

    #[test]
    fn affine_solution_set() {
        let a = rats(&[&[1, 1, 0]]);
        let (p, n) = solve_affine(&a, &[int(2)]).unwrap();
        assert_eq!(dot(&a[0], &p), int(2));
        assert_eq!(n.len(), 2);
        assert!(solve_affine(&rats(&[&[1, 1], &[1, 1]]), &[int(1), int(2)]).is_none());
    }

    #[test]
    fn primitive_vectors() {
        let v = primitive_integer(&[rat(1, 2), rat(-3, 4), int(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
