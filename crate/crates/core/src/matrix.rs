//! Dense complex matrices for one- and two-qubit operators.
//!
//! Everything here works on 2×2 (single qubit) or 4×4 (two qubits) matrices.
//! Two-qubit indices follow the convention that subsystem A is the slow
//! (left) index and subsystem B the fast (right) index, so the basis order is
//! `|00⟩, |01⟩, |10⟩, |11⟩`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use thiserror::Error;

use crate::jacobi;

/// Complex entry type used by every matrix in the crate.
pub type ComplexScalar = Complex64;

/// Tolerance for the Hermiticity predicate.
pub const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MatrixError {
    #[error("unsupported dimension {0}: expected 2 or 4")]
    UnsupportedDim(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("matrix is not Hermitian (max |M - M†| = {0:e})")]
    NotHermitian(f64),
    #[error("Jacobi sweeps did not converge (residual off-diagonal norm {0:e})")]
    NoConvergence(f64),
}

/// Dense square complex matrix of dimension 2 or 4, row-major.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<ComplexScalar>,
}

fn check_dim(dim: usize) -> Result<(), MatrixError> {
    match dim {
        2 | 4 => Ok(()),
        d => Err(MatrixError::UnsupportedDim(d)),
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Result<Self, MatrixError> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            data: vec![ComplexScalar::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self, MatrixError> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = ComplexScalar::new(1.0, 0.0);
        }
        Ok(m)
    }

    /// Builds a matrix from row-major entries; rejects NaN and infinities.
    pub fn from_rows(dim: usize, entries: &[ComplexScalar]) -> Result<Self, MatrixError> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(MatrixError::DimMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        for (k, z) in entries.iter().enumerate() {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(MatrixError::NonFinite {
                    row: k / dim,
                    col: k % dim,
                });
            }
        }
        Ok(Self {
            dim,
            data: entries.to_vec(),
        })
    }

    pub fn from_real_rows(dim: usize, entries: &[f64]) -> Result<Self, MatrixError> {
        let cs: Vec<_> = entries
            .iter()
            .map(|&x| ComplexScalar::new(x, 0.0))
            .collect();
        Self::from_rows(dim, &cs)
    }

    pub fn diag(values: &[f64]) -> Result<Self, MatrixError> {
        let mut m = Self::zeros(values.len())?;
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(MatrixError::NonFinite { row: i, col: i });
            }
            m[(i, i)] = ComplexScalar::new(v, 0.0);
        }
        Ok(m)
    }

    pub fn pauli_y() -> Self {
        let i = ComplexScalar::i();
        let z = ComplexScalar::new(0.0, 0.0);
        Self {
            dim: 2,
            data: vec![z, -i, i, z],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[ComplexScalar] {
        &self.data
    }

    pub fn trace(&self) -> ComplexScalar {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        self.map_indexed(|m, i, j| m[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        self.map_indexed(|m, i, j| m[(j, i)])
    }

    /// Entrywise complex conjugate (not the adjoint).
    pub fn conj(&self) -> Self {
        self.map_indexed(|m, i, j| m[(i, j)].conj())
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map_indexed(|m, i, j| m[(i, j)] * s)
    }

    fn map_indexed(&self, f: impl Fn(&Self, usize, usize) -> ComplexScalar) -> Self {
        let d = self.dim;
        let mut data = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                data.push(f(self, i, j));
            }
        }
        Self { dim: d, data }
    }

    /// Largest entrywise |M - M†|.
    pub fn hermitian_defect(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0_f64;
        for i in 0..d {
            for j in i..d {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian_defect() <= HERMITIAN_TOL
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff: dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.dim != rhs.dim {
            return Err(MatrixError::DimMismatch {
                expected: self.dim,
                got: rhs.dim,
            });
        }
        let d = self.dim;
        let mut out = Self::zeros(d)?;
        for i in 0..d {
            for k in 0..d {
                let a = self[(i, k)];
                for j in 0..d {
                    out.data[i * d + j] += a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product of two 2×2 matrices; `self` is subsystem A.
    pub fn kron(&self, b: &Self) -> Result<Self, MatrixError> {
        for m in [self, b] {
            if m.dim != 2 {
                return Err(MatrixError::DimMismatch {
                    expected: 2,
                    got: m.dim,
                });
            }
        }
        let mut out = Self::zeros(4)?;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[(2 * i + j, 2 * k + l)] = self[(i, k)] * b[(j, l)];
                    }
                }
            }
        }
        Ok(out)
    }

    fn require_two_qubit(&self) -> Result<(), MatrixError> {
        if self.dim == 4 {
            Ok(())
        } else {
            Err(MatrixError::DimMismatch {
                expected: 4,
                got: self.dim,
            })
        }
    }

    /// Transposes the B index only: `((i,j),(k,l)) ↦ ((i,l),(k,j))`.
    pub fn partial_transpose_b(&self) -> Result<Self, MatrixError> {
        self.require_two_qubit()?;
        let mut out = Self::zeros(4)?;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[(2 * i + l, 2 * k + j)] = self[(2 * i + j, 2 * k + l)];
                    }
                }
            }
        }
        Ok(out)
    }

    /// Traces out subsystem B, leaving the 2×2 operator on A.
    pub fn partial_trace_b(&self) -> Result<Self, MatrixError> {
        self.require_two_qubit()?;
        let mut out = Self::zeros(2)?;
        for i in 0..2 {
            for k in 0..2 {
                out[(i, k)] = self[(2 * i, 2 * k)] + self[(2 * i + 1, 2 * k + 1)];
            }
        }
        Ok(out)
    }

    /// Returns `(M + M†)/2` after checking that `M` is Hermitian within tolerance.
    fn symmetrized(&self) -> Result<Self, MatrixError> {
        let defect = self.hermitian_defect();
        if defect > HERMITIAN_TOL {
            return Err(MatrixError::NotHermitian(defect));
        }
        let adj = self.adjoint();
        Ok(self.map_indexed(|m, i, j| (m[(i, j)] + adj[(i, j)]) * 0.5))
    }

    /// Real eigenvalues of a Hermitian matrix, sorted descending.
    pub fn eig_hermitian(&self) -> Result<Vec<f64>, MatrixError> {
        Ok(self.eigh()?.values)
    }

    /// Eigenvalues (descending) with the matching unitary eigenvector matrix.
    pub fn eigh(&self) -> Result<Eigh, MatrixError> {
        let sym = self.symmetrized()?;
        let (values, vectors) = jacobi::eigh(self.dim, sym.data)?;
        Ok(Eigh {
            values,
            vectors: Self {
                dim: self.dim,
                data: vectors,
            },
        })
    }

    /// Sum of the absolute eigenvalues of a Hermitian matrix.
    pub fn trace_norm(&self) -> Result<f64, MatrixError> {
        Ok(self.eig_hermitian()?.iter().map(|l| l.abs()).sum())
    }
}

/// Hermitian eigendecomposition: `M = V diag(values) V†`.
#[derive(Debug, Clone)]
pub struct Eigh {
    pub values: Vec<f64>,
    /// Columns are the eigenvectors, in the order of `values`.
    pub vectors: ComplexMatrix,
}

impl Eigh {
    /// Rebuilds `V f(Λ) V†` for a real function of the eigenvalues.
    pub fn reconstruct_with(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let d = self.vectors.dim;
        let v = &self.vectors;
        let mut out = ComplexMatrix {
            dim: d,
            data: vec![ComplexScalar::new(0.0, 0.0); d * d],
        };
        for (k, &lam) in self.values.iter().enumerate() {
            let fl = f(lam);
            if fl == 0.0 {
                continue;
            }
            for i in 0..d {
                for j in 0..d {
                    out[(i, j)] += v[(i, k)] * v[(j, k)].conj() * fl;
                }
            }
        }
        out
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = ComplexScalar;

    fn index(&self, (i, j): (usize, usize)) -> &ComplexScalar {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut ComplexScalar {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix add: dimension mismatch");
        self.map_indexed(|m, i, j| m[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix sub: dimension mismatch");
        self.map_indexed(|m, i, j| m[(i, j)] - rhs[(i, j)])
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        self.matmul(rhs).expect("matrix mul: dimension mismatch")
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
