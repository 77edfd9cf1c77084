//! Spin entanglement of a two-particle state seen from a boosted frame.
//!
//! The crate builds the boosted two-qubit spin density matrix `τ(α, n)` of
//! the state `α|00⟩ + √(1-α²)|11⟩` whose particles carry Gaussian momentum
//! packets, and evaluates its partial-transpose spectrum, logarithmic
//! negativity and concurrence. Every closed form has a numeric counterpart
//! (Jacobi diagonalisation, Kronecker assembly, quadrature) so the two can
//! be checked against each other.
//!
//! - [`matrix`]: dense 2×2 / 4×4 complex matrices, partial trace/transpose,
//!   Hermitian eigenvalues and trace norm.
//! - [`kinematics`]: rapidities, Wigner angle, rotated spinors, Bloch
//!   vectors and the polarization `n` of a Gaussian packet.
//! - [`entanglement`]: `τ(α, n)` and its entanglement measures.
//! - [`sweep`] and [`verify`]: grid sweeps and the invariant suites behind
//!   the command-line tool.

pub mod entanglement;
mod jacobi;
pub mod kinematics;
pub mod matrix;
pub mod quadrature;
pub mod sweep;
pub mod verify;

pub use entanglement::{EntanglementError, StateParameter, TauDensity};
pub use kinematics::{BoostRapidity, Polarization, WavePacket, WignerAngle};
pub use matrix::{ComplexMatrix, ComplexScalar, MatrixError};
