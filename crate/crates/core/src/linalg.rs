//! Dense exact linear algebra: matrices over a [`Coeff`] field, fraction-free
//! elimination over the integers, and polynomial interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Coeff;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Coeff> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<L: Coeff>(&self, f: impl Fn(&K) -> L) -> Matrix<L> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, j);
                if !b.is_zero() {
                    acc = acc.add_ref(&a.mul_ref(b));
                }
            }
            acc
        })
    }

    /// `self · v` for a column vector.
    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add_ref(&a.mul_ref(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Matrix<K>> {
        if self.rows != self.cols {
            return Err(Error::SizeMismatch(format!("{}x{} matrix has no inverse", self.rows, self.cols)));
        }
        solve(self, &Self::identity(self.rows))
    }
}

/// Solves `a · x = b` by Gauss–Jordan elimination.
///
/// `a` may have more rows than columns; the extra equations must be
/// consistent. Fails with [`Error::Singular`] when `a` lacks full column
/// rank and [`Error::Inconsistent`] when no solution exists.
pub fn solve<K: Coeff>(a: &Matrix<K>, b: &Matrix<K>) -> Result<Matrix<K>> {
    if a.rows != b.rows {
        return Err(Error::SizeMismatch(format!("{} equations, {} right-hand rows", a.rows, b.rows)));
    }
    let (m, n, k) = (a.rows, a.cols, b.cols);
    let mut rows: Vec<Vec<K>> = (0..m)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend_from_slice(b.row(i));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..m).filter(|&r| !rows[r][col].is_zero()).min_by_key(|&r| rows[r][col].weight());
        let Some(p) = pivot else {
            return Err(Error::Singular);
        };
        rows.swap(col, p);
        let inv = K::one().try_div(&rows[col][col])?;
        for v in rows[col].iter_mut() {
            if !v.is_zero() {
                *v = v.mul_ref(&inv);
            }
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !pv.is_zero() {
                    *v = v.sub_ref(&f.mul_ref(pv));
                }
            }
        }
    }
    if rows[n..].iter().any(|r| r[n..].iter().any(|v| !v.is_zero())) {
        return Err(Error::Inconsistent);
    }
    Ok(Matrix::from_fn(n, k, |i, j| rows[i][n + j].clone()))
}

/// Fraction-free (Bareiss) solve of an integer system `a · x = b`.
///
/// Returns `(num, det)` with `x = num / det`. Overdetermined systems are
/// accepted; surplus equations are checked for consistency.
pub fn bareiss_solve(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Result<(Vec<Vec<BigInt>>, BigInt)> {
    let m = a.len();
    if b.len() != m {
        return Err(Error::SizeMismatch(format!("{} equations, {} right-hand rows", m, b.len())));
    }
    let n = a.first().map_or(0, Vec::len);
    let k = b.first().map_or(0, Vec::len);
    if m < n {
        return Err(Error::Singular);
    }
    let mut rows: Vec<Vec<BigInt>> = a.iter().zip(b).map(|(ra, rb)| ra.iter().chain(rb).cloned().collect()).collect();
    let width = n + k;
    let mut prev = BigInt::one();
    for col in 0..n {
        let Some(p) = (col..m).find(|&r| !rows[r][col].is_zero()) else {
            return Err(Error::Singular);
        };
        rows.swap(col, p);
        let (head, tail) = rows.split_at_mut(col + 1);
        let pivot_row = &head[col];
        let pv = &pivot_row[col];
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in col..width {
                let v = &row[j] * pv - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = rows[col][col].clone();
    }
    if rows[n..].iter().any(|r| r[n..].iter().any(|v| !v.is_zero())) {
        return Err(Error::Inconsistent);
    }
    let det = prev;
    let mut x = vec![vec![BigInt::zero(); k]; n];
    for c in 0..k {
        for i in (0..n).rev() {
            let mut acc = &det * &rows[i][n + c];
            for j in i + 1..n {
                acc -= &rows[i][j] * &x[j][c];
            }
            x[i][c] = acc / &rows[i][i];
        }
    }
    Ok((x, det))
}

/// Coefficients (constant term first) of the unique polynomial of degree
/// `< nodes.len()` through the given points.
pub fn interpolate(nodes: &[BigRational], values: &[BigRational]) -> Vec<BigRational> {
    assert_eq!(nodes.len(), values.len(), "node/value count mismatch");
    let n = nodes.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - nodes[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for j in 0..n {
            if coeffs[j].is_zero() {
                continue;
            }
            if j + 1 < n {
                next[j + 1] += &coeffs[j];
            }
            next[j] -= &coeffs[j] * &nodes[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}

/// Bivariate interpolation on the grid `xs × ys`: `values[i][j]` is the value
/// at `(xs[i], ys[j])`. Returns `c[a][b]`, the coefficient of `x^a y^b`.
pub fn interpolate_grid(xs: &[BigRational], ys: &[BigRational], values: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let per_x: Vec<Vec<BigRational>> = values.iter().map(|row| interpolate(ys, row)).collect();
    let mut out = vec![vec![BigRational::zero(); ys.len()]; xs.len()];
    for b in 0..ys.len() {
        let column: Vec<BigRational> = per_x.iter().map(|c| c[b].clone()).collect();
        for (a, c) in interpolate(xs, &column).into_iter().enumerate() {
            out[a][b] = c;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn field_solve_and_inverse() {
        let a = Matrix::from_rows(vec![vec![r(2), r(1)], vec![r(1), r(3)]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
    }

    #[test]
    fn overdetermined_consistency() {
        let a = Matrix::from_rows(vec![vec![r(1), r(0)], vec![r(0), r(1)], vec![r(1), r(1)]]);
        let good = Matrix::from_rows(vec![vec![r(1)], vec![r(2)], vec![r(3)]]);
        let bad = Matrix::from_rows(vec![vec![r(1)], vec![r(2)], vec![r(4)]]);
        assert_eq!(solve(&a, &good).unwrap(), Matrix::from_rows(vec![vec![r(1)], vec![r(2)]]));
        assert_eq!(solve(&a, &bad), Err(Error::Inconsistent));
        let sing = Matrix::from_rows(vec![vec![r(1), r(1)], vec![r(2), r(2)]]);
        assert_eq!(sing.inverse(), Err(Error::Singular));
    }

    #[test]
    fn bareiss_matches_cramer() {
        let a = ints(&[&[2, 1, 1], &[1, 3, 2], &[1, 0, 0], &[4, 4, 3]]);
        let b = ints(&[&[4], &[5], &[6], &[13]]);
        // last row = sum of the first three
        let b_fixed = ints(&[&[4], &[5], &[6], &[15]]);
        let (x, det) = bareiss_solve(&a, &b_fixed).unwrap();
        for (row, rhs) in a.iter().zip(&b_fixed).take(3) {
            let lhs: BigInt = row.iter().zip(&x).map(|(c, xi)| c * &xi[0]).sum();
            assert_eq!(lhs, &rhs[0] * &det);
        }
        assert_eq!(bareiss_solve(&a, &b), Err(Error::Inconsistent));
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let xs: Vec<_> = [2, 5, 11, 17].iter().map(|&v| r(v)).collect();
        let vals: Vec<_> = xs.iter().map(|x| x * x * x - r(2) * x + r(7)).collect();
        assert_eq!(interpolate(&xs, &vals), vec![r(7), r(-2), r(0), r(1)]);
        let ys: Vec<_> = [3, 7].iter().map(|&v| r(v)).collect();
        let grid: Vec<Vec<_>> = xs.iter().map(|x| ys.iter().map(|y| x * y + r(1)).collect()).collect();
        let c = interpolate_grid(&xs, &ys, &grid);
        assert_eq!(c[0][0], r(1));
        assert_eq!(c[1][1], r(1));
        assert_eq!(c[1][0], r(0));
    }
}
