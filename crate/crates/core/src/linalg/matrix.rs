//! Dense row-major matrix and vector types.
//!
//! Problem sizes here are small (at most a few hundred rows), so the
//! kernel is a plain `Vec<f64>` with row slices and no blocking.

use crate::error::{Error, Result};

/// Dense real matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Identity matrix of order `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from nested rows. All rows must have equal length
    /// and every entry must be finite.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Dimension("matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::Dimension("matrix needs at least one column".into()));
        }
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Dimension(format!(
                    "ragged rows: expected {} columns, found {}",
                    cols,
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Self::from_row_major(rows.len(), cols, data)
    }

    /// Builds a matrix from a flat row-major buffer, validating entry count
    /// and finiteness.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "buffer holds {} entries, shape {}x{} needs {}",
                data.len(),
                rows,
                cols,
                rows * cols
            )));
        }
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::Numeric("non-finite matrix entry".into()));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Fills a matrix entry-by-entry from `f(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    /// Borrow row `i` as a slice.
    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub(crate) fn as_mut_data(&mut self) -> &mut [f64] {
        &mut self.data
    }

    /// Largest absolute entry (zero for the degenerate empty case).
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Matrix product `self * other`.
    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let a_row = self.row(i);
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &a_ik) in a_row.iter().enumerate() {
                if a_ik == 0.0 {
                    continue;
                }
                let b_row = other.row(k);
                for (o, &b_kj) in out_row.iter_mut().zip(b_row) {
                    *o += a_ik * b_kj;
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector.
    pub fn matvec(&self, v: &Vector) -> Result<Vector> {
        if self.cols != v.len() {
            return Err(Error::Dimension(format!(
                "cannot apply {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            out[i] = dot(self.row(i), v.as_slice());
        }
        Ok(Vector::from_raw(out))
    }

    /// `selfᵀ * v`.
    pub fn transpose_matvec(&self, v: &Vector) -> Result<Vector> {
        if self.rows != v.len() {
            return Err(Error::Dimension(format!(
                "cannot apply transpose of {}x{} to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![0.0; self.cols];
        for i in 0..self.rows {
            let c = v.as_slice()[i];
            if c == 0.0 {
                continue;
            }
            for (o, &a) in out.iter_mut().zip(self.row(i)) {
                *o += c * a;
            }
        }
        Ok(Vector::from_raw(out))
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| c * v).collect(),
        }
    }

    /// Gram matrix of the rows, `self * selfᵀ` (symmetric, computed once
    /// per pair and mirrored).
    pub fn times_transpose(&self) -> Matrix {
        let m = self.rows;
        let mut out = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i..m {
                let v = dot(self.row(i), self.row(j));
                out.set(i, j, v);
                out.set(j, i, v);
            }
        }
        out
    }

    /// Gram matrix of the columns, `selfᵀ * self`.
    pub fn transpose_times(&self) -> Matrix {
        let n = self.cols;
        let mut out = Matrix::zeros(n, n);
        for k in 0..self.rows {
            let row = self.row(k);
            for i in 0..n {
                let a = row[i];
                if a == 0.0 {
                    continue;
                }
                let out_row = &mut out.data[i * n..(i + 1) * n];
                for j in i..n {
                    out_row[j] += a * row[j];
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let v = out.get(i, j);
                out.set(j, i, v);
            }
        }
        out
    }

    /// Rows as nested vectors, for serialization.
    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

/// Dense real column vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    data: Vec<f64>,
}

impl Vector {
    /// Builds a vector, validating finiteness.
    pub fn new(data: Vec<f64>) -> Result<Self> {
        if !data.iter().all(|v| v.is_finite()) {
            return Err(Error::Numeric("non-finite vector entry".into()));
        }
        Ok(Vector { data })
    }

    /// Internal constructor for values produced by this crate's own
    /// arithmetic (skips the finiteness scan).
    pub(crate) fn from_raw(data: Vec<f64>) -> Self {
        Vector { data }
    }

    pub fn zeros(n: usize) -> Self {
        Vector { data: vec![0.0; n] }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> f64 {
        self.data[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: f64) {
        self.data[i] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.data.clone()
    }

    pub fn dot(&self, other: &Vector) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "dot of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(dot(&self.data, &other.data))
    }

    /// Euclidean norm.
    pub fn norm2(&self) -> f64 {
        dot(&self.data, &self.data).sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn scale(&self, c: f64) -> Vector {
        Vector::from_raw(self.data.iter().map(|v| c * v).collect())
    }

    /// `self += c * other`, in place.
    pub fn add_scaled(&mut self, other: &Vector, c: f64) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "axpy of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
        Ok(())
    }
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    let mut s = 0.0;
    for (x, y) in a.iter().zip(b) {
        s += x * y;
    }
    s
}

/// Solves `A x = b` for symmetric positive definite `A` by Cholesky
/// factorization. Refuses systems whose pivots collapse below tolerance.
pub fn solve_spd(a: &Matrix, b: &Vector) -> Result<Vector> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "SPD solve needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if b.len() != n {
        return Err(Error::Dimension(format!(
            "SPD solve: matrix order {} vs rhs length {}",
            n,
            b.len()
        )));
    }
    let mut diag_scale: f64 = 0.0;
    for i in 0..n {
        diag_scale = diag_scale.max(a.get(i, i).abs());
    }
    let tol = 1e-13 * diag_scale.max(1.0);

    // Lower-triangular factor, row-major.
    let mut l = vec![0.0; n * n];
    for j in 0..n {
        let mut d = a.get(j, j);
        for k in 0..j {
            d -= l[j * n + k] * l[j * n + k];
        }
        if !(d > tol) {
            return Err(Error::Numeric(
                "matrix is not positive definite within tolerance".into(),
            ));
        }
        let ljj = d.sqrt();
        l[j * n + j] = ljj;
        for i in (j + 1)..n {
            let mut s = a.get(i, j);
            for k in 0..j {
                s -= l[i * n + k] * l[j * n + k];
            }
            l[i * n + j] = s / ljj;
        }
    }

    // Forward then backward substitution.
    let mut y = b.to_vec();
    for i in 0..n {
        for k in 0..i {
            y[i] -= l[i * n + k] * y[k];
        }
        y[i] /= l[i * n + i];
    }
    for i in (0..n).rev() {
        for k in (i + 1)..n {
            y[i] -= l[k * n + i] * y[k];
        }
        y[i] /= l[i * n + i];
    }
    Ok(Vector::from_raw(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_by_identity_is_identity_map() {
        let a = Matrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let i2 = Matrix::identity(2);
        let prod = i2.matmul(&a).unwrap();
        assert_eq!(prod, a);
    }

    #[test]
    fn solve_diagonal_system() {
        let a = Matrix::from_rows(&[vec![2.0, 0.0], vec![0.0, 2.0]]).unwrap();
        let b = Vector::new(vec![2.0, 4.0]).unwrap();
        let x = solve_spd(&a, &b).unwrap();
        assert_eq!(x.to_vec(), vec![1.0, 2.0]);
    }

    #[test]
    fn pythagorean_norm() {
        let v = Vector::new(vec![3.0, 4.0]).unwrap();
        assert_eq!(v.norm2(), 5.0);
    }

    #[test]
    fn constructors_reject_non_finite() {
        assert!(Matrix::from_rows(&[vec![1.0, f64::NAN]]).is_err());
        assert!(Vector::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn mismatched_shapes_error() {
        let a = Matrix::zeros(2, 3);
        let b = Matrix::zeros(2, 3);
        assert!(matches!(a.matmul(&b), Err(crate::error::Error::Dimension(_))));
        let v = Vector::zeros(2);
        assert!(a.matvec(&v).is_err());
    }

    #[test]
    fn solve_refuses_indefinite_system() {
        let a = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        let b = Vector::zeros(2);
        assert!(matches!(
            solve_spd(&a, &b),
            Err(crate::error::Error::Numeric(_))
        ));
    }

    #[test]
    fn gram_products_match_explicit_transpose() {
        let j = Matrix::from_rows(&[
            vec![1.0, -2.0, 0.5],
            vec![0.0, 3.0, 1.0],
        ])
        .unwrap();
        let jt = j.transpose();
        let jjt = j.times_transpose();
        let jtj = j.transpose_times();
        let jjt_ref = j.matmul(&jt).unwrap();
        let jtj_ref = jt.matmul(&j).unwrap();
        for i in 0..2 {
            for k in 0..2 {
                assert!((jjt.get(i, k) - jjt_ref.get(i, k)).abs() < 1e-15);
            }
        }
        for i in 0..3 {
            for k in 0..3 {
                assert!((jtj.get(i, k) - jtj_ref.get(i, k)).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn solve_spd_residual_small_on_random_system() {
        // A = M Mᵀ + I is SPD for any M.
        let m = Matrix::from_fn(5, 5, |i, j| ((i * 7 + j * 3) % 11) as f64 / 11.0 - 0.4);
        let a = m.times_transpose().add(&Matrix::identity(5)).unwrap();
        let b = Vector::new((0..5).map(|i| i as f64 - 2.0).collect()).unwrap();
        let x = solve_spd(&a, &b).unwrap();
        let ax = a.matvec(&x).unwrap();
        for i in 0..5 {
            assert!((ax.get(i) - b.get(i)).abs() < 1e-10);
        }
    }
}
