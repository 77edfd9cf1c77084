//! Cyclic Jacobi eigen-solver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a[p][q]` with a
//! diagonal unitary, then applies the classical real plane rotation that
//! annihilates it. Rotations are accumulated so the eigenvectors come out
//! alongside the eigenvalues.

use num_complex::Complex64;

use crate::matrix::MatrixError;

/// Sweep stops once the off-diagonal Frobenius norm drops below this
/// (scaled by `max(1, ‖A‖_F)`).
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

fn off_norm(n: usize, a: &[Complex64]) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalises the Hermitian `n×n` row-major matrix `a`.
///
/// Returns eigenvalues sorted descending and the row-major unitary whose
/// columns are the matching eigenvectors. The caller is responsible for
/// passing an exactly Hermitian matrix.
pub(crate) fn eigh(
    n: usize,
    mut a: Vec<Complex64>,
) -> Result<(Vec<f64>, Vec<Complex64>), MatrixError> {
    debug_assert_eq!(a.len(), n * n);
    let zero = Complex64::new(0.0, 0.0);
    let mut v = vec![zero; n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
        a[i * n + i].im = 0.0;
    }

    let frob = a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let tol = OFF_DIAGONAL_TOL * frob.max(1.0);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_norm(n, &a) < tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r == 0.0 {
                    continue;
                }
                // phase that makes the pivot real and positive
                let phase = apq / r;
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // G = diag(1, conj(phase)) on (p, q) followed by the real rotation
                // [[c, s], [-s, c]]
                let g_pp = Complex64::new(c, 0.0);
                let g_pq = Complex64::new(s, 0.0);
                let g_qp = -phase.conj() * s;
                let g_qq = phase.conj() * c;

                // A <- A G
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * g_pp + akq * g_qp;
                    a[k * n + q] = akp * g_pq + akq * g_qq;
                }
                // A <- G† A
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[q * n + k] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[p * n + q] = zero;
                a[q * n + p] = zero;
                a[p * n + p].im = 0.0;
                a[q * n + q].im = 0.0;

                // V <- V G
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = vkp * g_pp + vkq * g_qp;
                    v[k * n + q] = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }
    if !converged {
        let residual = off_norm(n, &a);
        if residual >= tol {
            return Err(MatrixError::NoConvergence(residual));
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].re.total_cmp(&a[i * n + i].re));
    let values = order.iter().map(|&i| a[i * n + i].re).collect();
    let mut vectors = vec![zero; n * n];
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + col] = v[row * n + src];
        }
    }
    Ok((values, vectors))
}
