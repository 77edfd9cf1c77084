//! The boosted two-qubit spin state `τ(α, n)` and its entanglement measures.
//!
//! The initial state is `α|00⟩ + √(1-α²)|11⟩` with each particle carrying a
//! Gaussian momentum packet. After a boost and tracing out momentum, each
//! particle's spin blocks depend on a single polarization `n`, and every
//! quantity here is a function of `(α, n)` alone.

use num_complex::Complex64;
use thiserror::Error;

use crate::jacobi;
use crate::kinematics::{boosted_basis_spinor, Polarization, WignerAngle};
use crate::matrix::{ComplexMatrix, MatrixError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntanglementError {
    #[error("state parameter alpha = {0} must lie strictly inside (0, 1)")]
    InvalidAlpha(f64),
    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Tolerance used when validating density matrices.
pub const DENSITY_TOL: f64 = 1e-10;

/// Eigenvalues of `ρ` at or below this are treated as exact zeros when
/// taking `√ρ` for the Wootters construction.
pub const RANK_CUTOFF: f64 = 1e-14;

/// The state parameter α together with its partner `√(1-α²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateParameter {
    alpha: f64,
    partner: f64,
}

impl StateParameter {
    pub fn new(alpha: f64) -> Result<Self, EntanglementError> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(EntanglementError::InvalidAlpha(alpha));
        }
        Ok(Self {
            alpha,
            partner: (1.0 - alpha * alpha).sqrt(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// `β = √(1-α²)`.
    pub fn partner(&self) -> f64 {
        self.partner
    }

    /// The state with α and β exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.partner,
            partner: self.alpha,
        }
    }

    /// `αβ`, the only combination (besides α²) the measures depend on.
    pub fn product(&self) -> f64 {
        self.alpha * self.partner
    }

    pub fn alpha_sq(&self) -> f64 {
        self.alpha * self.alpha
    }
}

/// Coefficients `C_ijkl` of `ρ = Σ C_ijkl |Ψ_i Ψ_j⟩⟨Ψ_k Ψ_l|` (indices 1-based
/// in the names, 0-based in storage).
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientTable {
    c: [[[[f64; 2]; 2]; 2]; 2],
}

impl CoefficientTable {
    pub fn for_state(p: StateParameter) -> Self {
        let mut c = [[[[0.0; 2]; 2]; 2]; 2];
        c[0][0][0][0] = p.alpha_sq();
        c[1][1][1][1] = p.partner * p.partner;
        c[0][0][1][1] = p.product();
        c[1][1][0][0] = p.product();
        Self { c }
    }

    /// Entry `C_ijkl` with 1-based indices.
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.c[i - 1][j - 1][k - 1][l - 1]
    }

    /// Non-zero entries as `((i, j, k, l), value)` with 1-based indices.
    pub fn nonzero(&self) -> Vec<((usize, usize, usize, usize), f64)> {
        let mut out = Vec::new();
        for i in 1..=2 {
            for j in 1..=2 {
                for k in 1..=2 {
                    for l in 1..=2 {
                        let v = self.get(i, j, k, l);
                        if v != 0.0 {
                            out.push(((i, j, k, l), v));
                        }
                    }
                }
            }
        }
        out
    }

    /// `C_1111 + C_2222`.
    pub fn trace(&self) -> f64 {
        self.get(1, 1, 1, 1) + self.get(2, 2, 2, 2)
    }
}

/// Two-qubit pure state over `|00⟩, |01⟩, |10⟩, |11⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureTwoQubitState {
    pub amplitudes: [Complex64; 4],
}

impl PureTwoQubitState {
    pub fn from_real(a: [f64; 4]) -> Self {
        Self {
            amplitudes: a.map(|x| Complex64::new(x, 0.0)),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(4).expect("dim 4");
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = self.amplitudes[i] * self.amplitudes[j].conj();
            }
        }
        m
    }
}

pub fn initial_state(p: StateParameter) -> PureTwoQubitState {
    PureTwoQubitState::from_real([p.alpha, 0.0, 0.0, p.partner])
}

/// Both spins rotated by the same sharp-momentum Wigner angle θ.
pub fn boosted_pure_state(p: StateParameter, theta: WignerAngle) -> PureTwoQubitState {
    let (s, c) = (0.5 * theta.theta).sin_cos();
    let (a, b) = (p.alpha, p.partner);
    let cross = s * c * (a - b);
    PureTwoQubitState::from_real([a * c * c + b * s * s, cross, cross, a * s * s + b * c * c])
}

/// `2|ad - bc|` for a pure state `(a, b, c, d)`.
pub fn concurrence_pure(s: &PureTwoQubitState) -> f64 {
    let [a, b, c, d] = s.amplitudes;
    (2.0 * (a * d - b * c).norm()).min(1.0)
}

fn check_density(rho: &ComplexMatrix) -> Result<(), EntanglementError> {
    if rho.dim() != 4 {
        return Err(EntanglementError::NotDensityMatrix(format!(
            "expected 4x4, got {0}x{0}",
            rho.dim()
        )));
    }
    let defect = rho.hermitian_defect();
    if defect > DENSITY_TOL {
        return Err(EntanglementError::NotDensityMatrix(format!(
            "not Hermitian (defect {defect:e})"
        )));
    }
    let tr = rho.trace();
    if (tr.re - 1.0).abs() > DENSITY_TOL || tr.im.abs() > DENSITY_TOL {
        return Err(EntanglementError::NotDensityMatrix(format!("trace {tr}")));
    }
    Ok(())
}

/// Wootters concurrence `max(0, λ1 - λ2 - λ3 - λ4)`.
///
/// The λ's are the singular values of `A = √ρ (σy⊗σy) √ρ*`, since
/// `A A† = √ρ ρ̃ √ρ`. They are read off the Hermitian dilation
/// `[[0, A], [A†, 0]]`, whose spectrum is `±λ`, which avoids square roots of
/// near-zero eigenvalues.
pub fn concurrence_wootters(rho: &ComplexMatrix) -> Result<f64, EntanglementError> {
    check_density(rho)?;
    let eig = rho.eigh()?;
    if let Some(&min) = eig.values.last() {
        if min < -DENSITY_TOL {
            return Err(EntanglementError::NotDensityMatrix(format!(
                "negative eigenvalue {min:e}"
            )));
        }
    }
    let sqrt_rho = eig.reconstruct_with(|l| if l > RANK_CUTOFF { l.sqrt() } else { 0.0 });
    let yy = ComplexMatrix::pauli_y().kron(&ComplexMatrix::pauli_y())?;
    let a = &(&sqrt_rho * &yy) * &sqrt_rho.conj();

    let n = 8;
    let mut dilation = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..4 {
        for j in 0..4 {
            dilation[i * n + 4 + j] = a[(i, j)];
            dilation[(4 + j) * n + i] = a[(i, j)].conj();
        }
    }
    let (vals, _) = jacobi::eigh(n, dilation)?;
    let lam = &vals[..4];
    Ok((lam[0] - lam[1] - lam[2] - lam[3]).clamp(0.0, 1.0))
}

/// Momentum-traced spin blocks `Tr_p{ΛΨ_i (ΛΨ_k)†}` for `(i, k) ∈ {1,2}²`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinBlockSet {
    pub b11: ComplexMatrix,
    pub b22: ComplexMatrix,
    pub b12: ComplexMatrix,
    pub b21: ComplexMatrix,
}

impl SpinBlockSet {
    /// Block `(i, k)`, 1-based.
    pub fn block(&self, i: usize, k: usize) -> &ComplexMatrix {
        match (i, k) {
            (1, 1) => &self.b11,
            (2, 2) => &self.b22,
            (1, 2) => &self.b12,
            (2, 1) => &self.b21,
            _ => panic!("spin block indices must be 1 or 2, got ({i}, {k})"),
        }
    }
}

pub fn spin_blocks(n: Polarization) -> SpinBlockSet {
    let n = n.value();
    let (hp, hm) = (0.5 * (1.0 + n), 0.5 * (1.0 - n));
    let m = |e: [f64; 4]| ComplexMatrix::from_real_rows(2, &e).expect("finite 2x2");
    SpinBlockSet {
        b11: m([hp, 0.0, 0.0, hm]),
        b22: m([hm, 0.0, 0.0, hp]),
        b12: m([0.0, hp, -hm, 0.0]),
        b21: m([0.0, -hm, hp, 0.0]),
    }
}

/// Spin blocks for a single sharp Wigner angle θ, built directly from the
/// rotated spinors. Averaging these over the momentum distribution with
/// `⟨cos θ⟩ = n` and `⟨sin θ⟩ = 0` reproduces [`spin_blocks`].
pub fn spin_blocks_sharp(theta: WignerAngle) -> SpinBlockSet {
    let outer = |i: u8, k: u8| {
        let u = boosted_basis_spinor(i, theta);
        let v = boosted_basis_spinor(k, theta);
        let (ua, va) = ([u.a1, u.a2], [v.a1, v.a2]);
        let e: Vec<Complex64> = (0..4).map(|r| ua[r / 2] * va[r % 2].conj()).collect();
        ComplexMatrix::from_rows(2, &e).expect("finite 2x2")
    };
    SpinBlockSet {
        b11: outer(1, 1),
        b22: outer(2, 2),
        b12: outer(1, 2),
        b21: outer(2, 1),
    }
}

/// The boosted two-particle spin density matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TauDensity {
    pub matrix: ComplexMatrix,
    pub alpha: StateParameter,
    pub n: Polarization,
}

/// `τ = Σ C_ijkl · block(i,k) ⊗ block(j,l)`.
pub fn assemble_tau(p: StateParameter, n: Polarization) -> TauDensity {
    assemble_tau_from(&CoefficientTable::for_state(p), &spin_blocks(n), p, n)
}

pub fn assemble_tau_from(
    table: &CoefficientTable,
    blocks: &SpinBlockSet,
    p: StateParameter,
    n: Polarization,
) -> TauDensity {
    let mut tau = ComplexMatrix::zeros(4).expect("dim 4");
    for ((i, j, k, l), c) in table.nonzero() {
        let term = blocks
            .block(i, k)
            .kron(blocks.block(j, l))
            .expect("2x2 blocks");
        tau = &tau + &term.scale(c);
    }
    TauDensity {
        matrix: tau,
        alpha: p,
        n,
    }
}

/// The X-shaped closed form of `τ(α, n)`.
pub fn tau_explicit(p: StateParameter, n: Polarization) -> ComplexMatrix {
    let n = n.value();
    let a2 = p.alpha_sq();
    let ab2 = 2.0 * p.product();
    let d0 = 4.0 * a2 * n + (1.0 - n) * (1.0 - n);
    let d3 = -4.0 * a2 * n + (1.0 + n) * (1.0 + n);
    let mid = 1.0 - n * n;
    let outer = ab2 * (1.0 + n * n);
    let inner = -ab2 * (1.0 - n * n);
    #[rustfmt::skip]
    let e = [
        d0,    0.0,   0.0,   outer,
        0.0,   mid,   inner, 0.0,
        0.0,   inner, mid,   0.0,
        outer, 0.0,   0.0,   d3,
    ];
    ComplexMatrix::from_real_rows(4, &e.map(|x| 0.25 * x)).expect("finite 4x4")
}

/// Eigenvalues of the partial transpose of τ, in closed form and fixed order
/// `λ1..λ4` (not sorted).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PTSpectrum {
    pub lambda: [f64; 4],
}

impl PTSpectrum {
    pub fn sum(&self) -> f64 {
        self.lambda.iter().sum()
    }

    pub fn sorted_desc(&self) -> [f64; 4] {
        let mut s = self.lambda;
        s.sort_by(|a, b| b.total_cmp(a));
        s
    }

    /// `|λ1| + … + |λ4|`.
    pub fn trace_norm(&self) -> f64 {
        self.lambda.iter().map(|l| l.abs()).sum()
    }
}

pub fn pt_eigenvalues_closed(p: StateParameter, n: Polarization) -> PTSpectrum {
    let n = n.value();
    let n2 = n * n;
    let ab = p.product();
    let a2 = p.alpha_sq();
    let inner = 0.25 * (1.0 - n2);
    let inner_split = 0.5 * ab * (1.0 + n2);
    let outer = 0.25 * (1.0 + n2);
    // n² + α²(1-α²)(n⁴-6n²+1) written as a sum of squares
    let radicand = (n * (2.0 * a2 - 1.0)).powi(2) + (ab * (1.0 - n2)).powi(2);
    let outer_split = 0.5 * radicand.sqrt();
    PTSpectrum {
        lambda: [
            inner + inner_split,
            inner - inner_split,
            outer + outer_split,
            outer - outer_split,
        ],
    }
}

/// Sorted (descending) numeric spectrum of the partial transpose of `rho`.
pub fn pt_eigenvalues_numeric(rho: &ComplexMatrix) -> Result<Vec<f64>, EntanglementError> {
    Ok(rho.partial_transpose_b()?.eig_hermitian()?)
}

/// `R = (1-n²) / (2(1+n²))`; τ is NPT iff `αβ > R`.
pub fn ppt_threshold(n: Polarization) -> f64 {
    let n2 = n.value() * n.value();
    (1.0 - n2) / (2.0 * (1.0 + n2))
}

pub fn is_npt(p: StateParameter, n: Polarization) -> bool {
    p.product() > ppt_threshold(n)
}

/// `N = log2(½(1+n²)(1+2αβ))` inside the NPT region, 0 elsewhere.
pub fn log_negativity_closed(p: StateParameter, n: Polarization) -> f64 {
    if is_npt(p, n) {
        let n2 = n.value() * n.value();
        (0.5 * (1.0 + n2) * (1.0 + 2.0 * p.product())).log2()
    } else {
        0.0
    }
}

/// `log2 ‖ρ^{T_B}‖₁`, floored at 0 when the trace norm is 1 within 1e-12.
pub fn log_negativity_numeric(rho: &ComplexMatrix) -> Result<f64, EntanglementError> {
    check_density(rho)?;
    let tn = rho.partial_transpose_b()?.trace_norm()?;
    if tn - 1.0 <= 1e-12 {
        Ok(0.0)
    } else {
        Ok(tn.log2())
    }
}

/// Closed-form single-particle marginal `ρ_A = ρ_B` of τ.
pub fn reduced_density(tau: &TauDensity) -> ComplexMatrix {
    let n = tau.n.value();
    let a2 = tau.alpha.alpha_sq();
    ComplexMatrix::diag(&[a2 * n + 0.5 * (1.0 - n), -a2 * n + 0.5 * (1.0 + n)]).expect("finite")
}

/// `2√det ρ_A` for τ, alongside the value with the extra ½ prefactor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedConcurrence {
    /// `√((1-n+2α²n)(1+n-2α²n))`.
    pub value: f64,
    /// `½√((1-n+2α²n)(1+n-2α²n))`, kept for comparison only.
    pub as_printed: f64,
    /// True only when τ is pure (n = 1), the one case where `2√det ρ_A`
    /// equals the concurrence of τ itself.
    pub exact: bool,
}

pub fn concurrence_reduced(p: StateParameter, n: Polarization) -> ReducedConcurrence {
    let n = n.value();
    let x = 2.0 * p.alpha_sq() * n;
    let root = ((1.0 - n + x) * (1.0 + n - x)).max(0.0).sqrt();
    ReducedConcurrence {
        value: root,
        as_printed: 0.5 * root,
        exact: n == 1.0,
    }
}
