//! Symmetric eigendecomposition and the HJB C-matrix.
//!
//! Two solver paths sit behind [`sym_eig`]: cyclic Jacobi rotations for
//! small matrices (robust, and the reference the tests cross-check
//! against) and Householder tridiagonalization followed by implicitly
//! shifted QL for larger ones, where Jacobi's extra constant factor
//! starts to dominate epoch time. Both return orthogonal `U` and
//! eigenvalues sorted descending.

use super::matrix::{dot, Matrix, Vector};
use crate::error::{Error, Result};

/// Orders at or below this go through the Jacobi path.
const JACOBI_MAX_DIM: usize = 48;
/// Off-diagonal Frobenius norm threshold, relative to the input scale.
const JACOBI_OFF_TOL: f64 = 1e-12;
/// Sweep cap for the Jacobi iteration.
const JACOBI_MAX_SWEEPS: usize = 100;
/// QL iteration cap per eigenvalue.
const QL_MAX_ITER: usize = 60;
/// Admissible relative asymmetry of the input.
const SYMMETRY_TOL: f64 = 1e-10;

/// Eigendecomposition `A = U diag(λ) Uᵀ` of a symmetric matrix, with
/// orthogonal `U` (eigenvectors in columns) and `λ` sorted descending.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    u: Matrix,
    eigenvalues: Vector,
}

impl EigenDecomposition {
    /// Orthogonal eigenvector matrix (eigenvectors in columns).
    pub fn u(&self) -> &Matrix {
        &self.u
    }

    /// Eigenvalues in descending order.
    pub fn eigenvalues(&self) -> &Vector {
        &self.eigenvalues
    }

    /// Rebuilds `U diag(λ) Uᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        let n = self.u.rows();
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = 0.0;
                for k in 0..n {
                    s += self.u.get(i, k) * self.eigenvalues.get(k) * self.u.get(j, k);
                }
                out.set(i, j, s);
                out.set(j, i, s);
            }
        }
        out
    }

    /// Applies `U f(λ) Uᵀ` to a vector without forming the matrix.
    pub fn apply_spectral(&self, f: impl Fn(f64) -> f64, v: &Vector) -> Result<Vector> {
        let n = self.u.rows();
        if v.len() != n {
            return Err(Error::Dimension(format!(
                "spectral apply: order {} vs vector length {}",
                n,
                v.len()
            )));
        }
        // w = Uᵀ v, scaled by f(λ), then back through U.
        let mut w = vec![0.0; n];
        for i in 0..n {
            let vi = v.get(i);
            for (k, wk) in w.iter_mut().enumerate() {
                *wk += self.u.get(i, k) * vi;
            }
        }
        for (k, wk) in w.iter_mut().enumerate() {
            *wk *= f(self.eigenvalues.get(k));
        }
        let mut out = vec![0.0; n];
        for (i, oi) in out.iter_mut().enumerate() {
            *oi = dot(self.u.row(i), &w);
        }
        Ok(Vector::from_raw(out))
    }
}

/// Symmetric eigendecomposition with descending eigenvalues.
///
/// Rejects non-square input and matrices asymmetric beyond `1e-10`
/// relative to the largest entry.
pub fn sym_eig(a: &Matrix) -> Result<EigenDecomposition> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if !a.data().iter().all(|v| v.is_finite()) {
        return Err(Error::Numeric("non-finite entry in eigensolver input".into()));
    }
    let scale = a.max_abs().max(1.0);
    for i in 0..n {
        for j in (i + 1)..n {
            if (a.get(i, j) - a.get(j, i)).abs() > SYMMETRY_TOL * scale {
                return Err(Error::Dimension("matrix is not symmetric".into()));
            }
        }
    }

    if n == 1 {
        return Ok(EigenDecomposition {
            u: Matrix::identity(1),
            eigenvalues: Vector::from_raw(vec![a.get(0, 0)]),
        });
    }

    let (mut vals, mut vecs) = if n <= JACOBI_MAX_DIM {
        jacobi_eig(a)?
    } else {
        tridiag_eig(a)?
    };
    sort_descending(&mut vals, &mut vecs);
    Ok(EigenDecomposition {
        u: vecs,
        eigenvalues: Vector::from_raw(vals),
    })
}

/// HJB gain matrix `C = U (Σ + eps·I)^{-1/2} Uᵀ` where `U Σ Uᵀ` is the
/// eigendecomposition of `(1/r)·J Jᵀ + mu·I`. Eigenvalues are clamped at
/// zero before regularization since the Gram matrix is PSD up to
/// roundoff. The result is symmetric positive definite.
pub fn build_c(j: &Matrix, r: f64, mu: f64, eps: f64) -> Result<Matrix> {
    if !(r > 0.0) {
        return Err(Error::Parameter(format!("r must be positive, got {r}")));
    }
    if mu < 0.0 {
        return Err(Error::Parameter(format!("mu must be nonnegative, got {mu}")));
    }
    if eps < 0.0 {
        return Err(Error::Parameter(format!("eps must be nonnegative, got {eps}")));
    }
    let mut a = j.times_transpose().scale(1.0 / r);
    for i in 0..a.rows() {
        let v = a.get(i, i) + mu;
        a.set(i, i, v);
    }
    let dec = sym_eig(&a)?;
    spectral_inv_sqrt(&dec, eps)
}

/// Forms `U (clamp(λ,0) + eps)^{-1/2} Uᵀ` from an existing decomposition.
pub(crate) fn spectral_inv_sqrt(dec: &EigenDecomposition, eps: f64) -> Result<Matrix> {
    let n = dec.u.rows();
    let mut weights = vec![0.0; n];
    for (k, w) in weights.iter_mut().enumerate() {
        let d = dec.eigenvalues.get(k).max(0.0) + eps;
        if !(d > 0.0) {
            return Err(Error::Numeric(
                "eigenvalue plus regularizer is not positive".into(),
            ));
        }
        *w = 1.0 / d.sqrt();
    }
    // c_ij = Σ_k u_ik w_k u_jk, built symmetric by construction.
    let mut scaled = Matrix::zeros(n, n);
    for i in 0..n {
        for k in 0..n {
            scaled.set(i, k, dec.u.get(i, k) * weights[k]);
        }
    }
    let mut c = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = dot(scaled.row(i), dec.u.row(j));
            c.set(i, j, v);
            c.set(j, i, v);
        }
    }
    Ok(c)
}

fn sort_descending(vals: &mut Vec<f64>, vecs: &mut Matrix) {
    let n = vals.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| vals[b].partial_cmp(&vals[a]).expect("finite eigenvalues"));
    let sorted_vals: Vec<f64> = order.iter().map(|&k| vals[k]).collect();
    let mut sorted_vecs = Matrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            sorted_vecs.set(row, new_col, vecs.get(row, old_col));
        }
    }
    *vals = sorted_vals;
    *vecs = sorted_vecs;
}

/// Cyclic Jacobi rotations (Numerical-Recipes style), annihilating each
/// off-diagonal entry once per sweep until the off-diagonal Frobenius
/// norm falls below `1e-12` relative to the input scale.
fn jacobi_eig(a: &Matrix) -> Result<(Vec<f64>, Matrix)> {
    let n = a.rows();
    let mut w: Vec<f64> = a.data().to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let mut d: Vec<f64> = (0..n).map(|i| w[i * n + i]).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    let off_tol = JACOBI_OFF_TOL * a.frobenius_norm().max(1.0);

    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += w[p * n + q] * w[p * n + q];
            }
        }
        if off.sqrt() <= off_tol {
            let vecs = Matrix::from_row_major(n, n, v)?;
            return Ok((d, vecs));
        }

        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = w[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = 0.5 * (d[q] - d[p]) / apq;
                let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                if theta < 0.0 {
                    t = -t;
                }
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let h = t * apq;
                z[p] -= h;
                z[q] += h;
                d[p] -= h;
                d[q] += h;
                w[p * n + q] = 0.0;
                for j in 0..p {
                    let g = w[j * n + p];
                    let hh = w[j * n + q];
                    w[j * n + p] = g - s * (hh + g * tau);
                    w[j * n + q] = hh + s * (g - hh * tau);
                }
                for j in (p + 1)..q {
                    let g = w[p * n + j];
                    let hh = w[j * n + q];
                    w[p * n + j] = g - s * (hh + g * tau);
                    w[j * n + q] = hh + s * (g - hh * tau);
                }
                for j in (q + 1)..n {
                    let g = w[p * n + j];
                    let hh = w[q * n + j];
                    w[p * n + j] = g - s * (hh + g * tau);
                    w[q * n + j] = hh + s * (g - hh * tau);
                }
                for j in 0..n {
                    let g = v[j * n + p];
                    let hh = v[j * n + q];
                    v[j * n + p] = g - s * (hh + g * tau);
                    v[j * n + q] = hh + s * (g - hh * tau);
                }
            }
        }
        for p in 0..n {
            b[p] += z[p];
            d[p] = b[p];
            z[p] = 0.0;
        }
    }
    Err(Error::Numeric(
        "Jacobi eigensolver did not converge within the sweep cap".into(),
    ))
}

/// Householder tridiagonalization with accumulated transformations,
/// then implicitly shifted QL. Follows the classic EISPACK/JAMA
/// tred2/tql2 pair.
fn tridiag_eig(a: &Matrix) -> Result<(Vec<f64>, Matrix)> {
    let n = a.rows();
    let mut z: Vec<f64> = a.data().to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];

    // tred2: reduce to tridiagonal, accumulating the orthogonal
    // transformation in z.
    for (j, dj) in d.iter_mut().enumerate() {
        *dj = z[(n - 1) * n + j];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for dk in d.iter().take(i) {
            scale += dk.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = z[(i - 1) * n + j];
                z[i * n + j] = 0.0;
                z[j * n + i] = 0.0;
            }
        } else {
            for dk in d.iter_mut().take(i) {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                z[j * n + i] = f;
                g = e[j] + z[j * n + j] * f;
                for k in (j + 1)..i {
                    g += z[k * n + j] * d[k];
                    e[k] += z[k * n + j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    z[k * n + j] -= f * e[k] + g * d[k];
                }
                d[j] = z[(i - 1) * n + j];
                z[i * n + j] = 0.0;
            }
        }
        d[i] = h;
    }
    for i in 0..(n - 1) {
        z[(n - 1) * n + i] = z[i * n + i];
        z[i * n + i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for (k, dk) in d.iter_mut().enumerate().take(i + 1) {
                *dk = z[k * n + i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += z[k * n + i + 1] * z[k * n + j];
                }
                for (k, dk) in d.iter().enumerate().take(i + 1) {
                    z[k * n + j] -= g * dk;
                }
            }
        }
        for k in 0..=i {
            z[k * n + i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = z[(n - 1) * n + j];
        z[(n - 1) * n + j] = 0.0;
    }
    z[(n - 1) * n + (n - 1)] = 1.0;
    e[0] = 0.0;

    // tql2: implicit-shift QL on the tridiagonal (d, e), rotating the
    // accumulated eigenvector columns along.
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f_shift = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > QL_MAX_ITER {
                    return Err(Error::Numeric(
                        "QL eigensolver did not converge within the iteration cap".into(),
                    ));
                }

                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f_shift += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let gg = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * gg;
                    d[i + 1] = h + s * (c * gg + s * d[i]);
                    for k in 0..n {
                        h = z[k * n + i + 1];
                        z[k * n + i + 1] = s * z[k * n + i] + c * h;
                        z[k * n + i] = c * z[k * n + i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;

                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f_shift;
        e[l] = 0.0;
    }

    let vecs = Matrix::from_row_major(n, n, z)?;
    Ok((d, vecs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
        let mut m = 0.0f64;
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                m = m.max((a.get(i, j) - b.get(i, j)).abs());
            }
        }
        m
    }

    fn orthogonality_defect(u: &Matrix) -> f64 {
        let utu = u.transpose().matmul(u).unwrap();
        max_abs_diff(&utu, &Matrix::identity(u.rows()))
    }

    fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
        let mut a = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = rng.gen_range(-2.0..2.0);
                a.set(i, j, v);
                a.set(j, i, v);
            }
        }
        a
    }

    #[test]
    fn identity_decomposes_to_unit_eigenvalues() {
        let dec = sym_eig(&Matrix::identity(2)).unwrap();
        assert!((dec.eigenvalues().get(0) - 1.0).abs() < 1e-14);
        assert!((dec.eigenvalues().get(1) - 1.0).abs() < 1e-14);
        assert!(orthogonality_defect(dec.u()) < 1e-12);
    }

    #[test]
    fn diagonal_input_sorted_descending() {
        let a = Matrix::from_rows(&[vec![1.0, 0.0], vec![0.0, 4.0]]).unwrap();
        let dec = sym_eig(&a).unwrap();
        assert!((dec.eigenvalues().get(0) - 4.0).abs() < 1e-14);
        assert!((dec.eigenvalues().get(1) - 1.0).abs() < 1e-14);
        // U must be a signed permutation of the identity.
        for k in 0..2 {
            let col: Vec<f64> = (0..2).map(|i| dec.u().get(i, k).abs()).collect();
            let mut sorted = col.clone();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            assert!((sorted[0]).abs() < 1e-12);
            assert!((sorted[1] - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn two_by_two_analytic_case() {
        let a = Matrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]).unwrap();
        let dec = sym_eig(&a).unwrap();
        assert!((dec.eigenvalues().get(0) - 3.0).abs() < 1e-12);
        assert!((dec.eigenvalues().get(1) - 1.0).abs() < 1e-12);
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        // Eigenvector for λ=3 is (1,1)/√2 up to sign; for λ=1 it is (1,−1)/√2.
        let c0 = (dec.u().get(0, 0).abs() - inv_sqrt2).abs();
        let c1 = (dec.u().get(1, 0).abs() - inv_sqrt2).abs();
        assert!(c0 < 1e-12 && c1 < 1e-12);
        assert!(dec.u().get(0, 0) * dec.u().get(1, 0) > 0.0);
        assert!(dec.u().get(0, 1) * dec.u().get(1, 1) < 0.0);
    }

    #[test]
    fn rejects_non_square_and_asymmetric() {
        assert!(matches!(
            sym_eig(&Matrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
        let a = Matrix::from_rows(&[vec![1.0, 0.5], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(sym_eig(&a), Err(Error::Dimension(_))));
    }

    #[test]
    fn jacobi_reconstruction_and_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in [2usize, 3, 5, 9, 17, 33] {
            let a = random_symmetric(n, &mut rng);
            let dec = sym_eig(&a).unwrap();
            let scale = a.max_abs().max(1.0);
            assert!(max_abs_diff(&dec.reconstruct(), &a) <= 1e-8 * scale);
            assert!(orthogonality_defect(dec.u()) <= 1e-8);
            for k in 1..n {
                assert!(dec.eigenvalues().get(k - 1) >= dec.eigenvalues().get(k));
            }
        }
    }

    #[test]
    fn ql_reconstruction_and_orthogonality() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for n in [49usize, 64, 101] {
            let a = random_symmetric(n, &mut rng);
            let dec = sym_eig(&a).unwrap();
            let scale = a.max_abs().max(1.0);
            assert!(max_abs_diff(&dec.reconstruct(), &a) <= 1e-8 * scale);
            assert!(orthogonality_defect(dec.u()) <= 1e-8);
        }
    }

    #[test]
    fn jacobi_and_ql_paths_agree_on_eigenvalues() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in [5usize, 12, 24, 40] {
            let a = random_symmetric(n, &mut rng);
            let (mut v1, mut u1) = jacobi_eig(&a).unwrap();
            let (mut v2, mut u2) = tridiag_eig(&a).unwrap();
            sort_descending(&mut v1, &mut u1);
            sort_descending(&mut v2, &mut u2);
            let scale = a.max_abs().max(1.0);
            for k in 0..n {
                assert!(
                    (v1[k] - v2[k]).abs() <= 1e-9 * scale,
                    "eigenvalue {k} differs between solver paths"
                );
            }
        }
    }

    #[test]
    fn rank_deficient_gram_has_near_zero_floor() {
        // J with a repeated row makes J Jᵀ singular; eigenvalues must not
        // dip below the roundoff floor.
        let j = Matrix::from_rows(&[
            vec![1.0, 2.0, 3.0],
            vec![1.0, 2.0, 3.0],
            vec![0.0, 1.0, -1.0],
        ])
        .unwrap();
        let dec = sym_eig(&j.times_transpose()).unwrap();
        for k in 0..3 {
            assert!(dec.eigenvalues().get(k) >= -1e-10);
        }
    }

    #[test]
    fn build_c_identity_case() {
        let c = build_c(&Matrix::identity(2), 1.0, 0.0, 0.0).unwrap();
        assert!(max_abs_diff(&c, &Matrix::identity(2)) < 1e-12);
    }

    #[test]
    fn build_c_scalar_cases() {
        let j = Matrix::from_rows(&[vec![2.0]]).unwrap();
        let c = build_c(&j, 1.0, 0.0, 0.0).unwrap();
        assert!((c.get(0, 0) - 0.5).abs() < 1e-14);

        let j0 = Matrix::from_rows(&[vec![0.0]]).unwrap();
        let c0 = build_c(&j0, 1.0, 0.0, 1e-4).unwrap();
        assert!((c0.get(0, 0) - 100.0).abs() < 1e-9);
    }

    #[test]
    fn build_c_rejects_bad_parameters() {
        let j = Matrix::identity(2);
        assert!(matches!(
            build_c(&j, 0.0, 0.0, 0.0),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            build_c(&j, -1.0, 0.0, 0.0),
            Err(Error::Parameter(_))
        ));
        let j0 = Matrix::from_rows(&[vec![0.0]]).unwrap();
        assert!(matches!(
            build_c(&j0, 1.0, 0.0, 0.0),
            Err(Error::Numeric(_))
        ));
    }

    #[test]
    fn build_c_output_symmetric_and_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..20 {
            let m = rng.gen_range(1..8);
            let n = m + rng.gen_range(0..5);
            let j = Matrix::from_fn(m, n, |_, _| rng.gen_range(-1.0..1.0));
            let c = build_c(&j, 0.5, 0.0, 1e-4).unwrap();
            for i in 0..m {
                for k in 0..m {
                    assert!((c.get(i, k) - c.get(k, i)).abs() <= 1e-12);
                }
            }
            let dec = sym_eig(&c).unwrap();
            for k in 0..m {
                assert!(dec.eigenvalues().get(k) > 0.0);
            }
        }
    }

    #[test]
    fn c_inverts_the_gram_square_root() {
        // With mu = eps = 0, C (1/r)JJᵀ C must be the identity.
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..20 {
            let m = rng.gen_range(2..10);
            let j = Matrix::from_fn(m, m + 4, |_, _| rng.gen_range(-1.0..1.0));
            let r = rng.gen_range(0.1..4.0);
            let a = j.times_transpose().scale(1.0 / r);
            let dec = sym_eig(&a).unwrap();
            // Keep only well-conditioned draws.
            let lo = dec.eigenvalues().get(m - 1);
            let hi = dec.eigenvalues().get(0);
            if lo <= 1e-3 * hi {
                continue;
            }
            let c = build_c(&j, r, 0.0, 0.0).unwrap();
            let cac = c.matmul(&a).unwrap().matmul(&c).unwrap();
            assert!(max_abs_diff(&cac, &Matrix::identity(m)) <= 1e-6);
        }
    }

    #[test]
    fn apply_spectral_matches_full_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let a = random_symmetric(6, &mut rng);
        let spd = a.matmul(&a.transpose()).unwrap();
        let dec = sym_eig(&spd).unwrap();
        let v = Vector::new((0..6).map(|i| (i as f64) - 2.5).collect()).unwrap();
        let via_vec = dec.apply_spectral(|l| 1.0 / (l + 1.0).sqrt(), &v).unwrap();
        let c = spectral_inv_sqrt(&dec, 1.0).unwrap();
        let via_mat = c.matvec(&v).unwrap();
        for i in 0..6 {
            assert!((via_vec.get(i) - via_mat.get(i)).abs() < 1e-10);
        }
    }
}
