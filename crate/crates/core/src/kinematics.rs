//! Single-particle relativistic kinematics: rapidities, the Wigner rotation
//! angle for perpendicular boost/momentum geometry, rotated spinors, Bloch
//! vectors and the momentum-averaged spin polarization of a Gaussian packet.
//!
//! The Wigner angle is modelled as depending on `|p|` only (through
//! `cosh δ = p0/m`); the direction dependence of the full little-group
//! rotation is not represented.

use std::f64::consts::PI;

use num_complex::Complex64;
use thiserror::Error;

use crate::quadrature;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum KinematicsError {
    #[error("boost speed beta = {0} outside [0, 1)")]
    InvalidBeta(f64),
    #[error("rapidity {0} must be finite and non-negative")]
    InvalidRapidity(f64),
    #[error("momentum ratio p/m = {0} must be finite and non-negative")]
    InvalidMomentum(f64),
    #[error("wave packet needs w > 0 and m > 0 (got w = {w}, m = {m})")]
    InvalidWavePacket { w: f64, m: f64 },
    #[error("polarization {0} outside [0, 1]")]
    InvalidPolarization(f64),
    #[error("sample weights must be non-negative and sum to 1 (sum = {0})")]
    BadWeights(f64),
    #[error("quadrature needs at least {min} nodes (got {got})")]
    TooFewNodes { min: usize, got: usize },
    #[error("quadrature did not converge below {tol:e} by {nodes} nodes (last change {delta:e})")]
    NoConvergence { nodes: usize, delta: f64, tol: f64 },
}

/// Boost rapidity ξ with `cosh ξ = (1 - β²)^(-1/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostRapidity {
    pub xi: f64,
    pub beta: f64,
}

impl BoostRapidity {
    pub fn from_beta(beta: f64) -> Result<Self, KinematicsError> {
        if !(0.0..1.0).contains(&beta) {
            return Err(KinematicsError::InvalidBeta(beta));
        }
        Ok(Self {
            xi: beta.atanh(),
            beta,
        })
    }

    pub fn from_xi(xi: f64) -> Result<Self, KinematicsError> {
        if !(xi.is_finite() && xi >= 0.0) {
            return Err(KinematicsError::InvalidRapidity(xi));
        }
        Ok(Self {
            xi,
            beta: xi.tanh(),
        })
    }

    pub fn gamma(&self) -> f64 {
        self.xi.cosh()
    }
}

/// Rapidity of a boost with speed `beta` (units of c).
pub fn rapidity_from_beta(beta: f64) -> Result<BoostRapidity, KinematicsError> {
    BoostRapidity::from_beta(beta)
}

/// Particle rapidity δ with `cosh δ = p0/m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleRapidity {
    pub delta: f64,
}

impl ParticleRapidity {
    pub fn from_delta(delta: f64) -> Result<Self, KinematicsError> {
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(KinematicsError::InvalidRapidity(delta));
        }
        Ok(Self { delta })
    }

    /// From `|p|/m`; `sinh δ = |p|/m` is the same relation as `cosh δ = p0/m`
    /// without the cancellation near rest.
    pub fn from_momentum_ratio(p_over_m: f64) -> Result<Self, KinematicsError> {
        if !(p_over_m.is_finite() && p_over_m >= 0.0) {
            return Err(KinematicsError::InvalidMomentum(p_over_m));
        }
        Ok(Self {
            delta: p_over_m.asinh(),
        })
    }
}

/// Wigner rotation angle θ in `[0, π/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WignerAngle {
    pub theta: f64,
}

impl WignerAngle {
    pub fn new(theta: f64) -> Self {
        Self { theta }
    }

    pub fn degrees(&self) -> f64 {
        self.theta.to_degrees()
    }
}

/// `tan θ = sinh ξ sinh δ / (cosh ξ + cosh δ)`, evaluated with `atan2`.
pub fn wigner_angle(boost: BoostRapidity, particle: ParticleRapidity) -> WignerAngle {
    let (y, x) = wigner_tangent_parts(boost.xi, particle.delta);
    WignerAngle { theta: y.atan2(x) }
}

fn wigner_tangent_parts(xi: f64, delta: f64) -> (f64, f64) {
    (xi.sinh() * delta.sinh(), xi.cosh() + delta.cosh())
}

fn wigner_cos(xi: f64, delta: f64) -> f64 {
    let (y, x) = wigner_tangent_parts(xi, delta);
    x / x.hypot(y)
}

/// Spin amplitudes `(a1, a2)` of a single sharp-momentum spinor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinAmplitudePair {
    pub a1: Complex64,
    pub a2: Complex64,
}

impl SpinAmplitudePair {
    pub fn new(a1: Complex64, a2: Complex64) -> Self {
        Self { a1, a2 }
    }

    pub fn real(a1: f64, a2: f64) -> Self {
        Self::new(Complex64::new(a1, 0.0), Complex64::new(a2, 0.0))
    }

    /// Spin-up (`which == 1`) or spin-down (`which == 2`) basis spinor.
    pub fn basis(which: u8) -> Self {
        match which {
            1 => Self::real(1.0, 0.0),
            2 => Self::real(0.0, 1.0),
            other => panic!("basis index must be 1 or 2, got {other}"),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a1.norm_sqr() + self.a2.norm_sqr()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.a1.conj() * other.a1 + self.a2.conj() * other.a2
    }
}

/// Applies the spin rotation of angle θ: basis 1 goes to `(cos θ/2, sin θ/2)`,
/// basis 2 to `(-sin θ/2, cos θ/2)`.
pub fn wigner_rotate_spinor(s: SpinAmplitudePair, theta: WignerAngle) -> SpinAmplitudePair {
    let (sn, cs) = (0.5 * theta.theta).sin_cos();
    SpinAmplitudePair {
        a1: s.a1 * cs - s.a2 * sn,
        a2: s.a1 * sn + s.a2 * cs,
    }
}

/// The boosted image of basis spinor `which` (1 or 2).
pub fn boosted_basis_spinor(which: u8, theta: WignerAngle) -> SpinAmplitudePair {
    wigner_rotate_spinor(SpinAmplitudePair::basis(which), theta)
}

/// Bloch vector of a single-particle spin density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub nx: f64,
    pub ny: f64,
    pub nz: f64,
}

impl BlochVector {
    pub fn length(&self) -> f64 {
        (self.nx * self.nx + self.ny * self.ny + self.nz * self.nz).sqrt()
    }
}

/// Bloch vector of the spin state averaged over weighted momentum samples.
///
/// `nz` accumulates `|a1|² - |a2|²`; `nx - i ny` accumulates `2 a1 conj(a2)`,
/// which is the off-diagonal of `σ = (1 + n·σ)/2`.
pub fn bloch_from_amplitudes(
    samples: &[(f64, SpinAmplitudePair)],
) -> Result<BlochVector, KinematicsError> {
    let total: f64 = samples.iter().map(|(w, _)| w).sum();
    if samples.iter().any(|(w, _)| !(w.is_finite() && *w >= 0.0)) || (total - 1.0).abs() > 1e-10 {
        return Err(KinematicsError::BadWeights(total));
    }
    let mut nz = 0.0;
    let mut off = Complex64::new(0.0, 0.0);
    for (w, s) in samples {
        nz += w * (s.a1.norm_sqr() - s.a2.norm_sqr());
        off += s.a1 * s.a2.conj() * (2.0 * w);
    }
    Ok(BlochVector {
        nx: off.re,
        ny: -off.im,
        nz,
    })
}

/// Isotropic Gaussian wave packet `g(p) = π^{-3/4} w^{-3/2} exp(-|p|²/2w²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavePacket {
    pub w: f64,
    pub m: f64,
}

impl WavePacket {
    pub fn new(w: f64, m: f64) -> Result<Self, KinematicsError> {
        if !(w.is_finite() && m.is_finite() && w > 0.0 && m > 0.0) {
            return Err(KinematicsError::InvalidWavePacket { w, m });
        }
        Ok(Self { w, m })
    }

    /// Packet with unit mass and width `w/m = ratio`.
    pub fn from_ratio(ratio: f64) -> Result<Self, KinematicsError> {
        Self::new(ratio, 1.0)
    }

    pub fn ratio(&self) -> f64 {
        self.w / self.m
    }

    pub fn amplitude(&self, p: f64) -> f64 {
        PI.powf(-0.75) * self.w.powf(-1.5) * (-p * p / (2.0 * self.w * self.w)).exp()
    }

    /// `∫|g|² d³p` by radial quadrature; should be 1.
    pub fn norm_by_quadrature(&self, nodes: usize) -> f64 {
        let p_max = RADIAL_CUTOFF * self.w;
        4.0 * PI
            * quadrature::integrate(
                |p| {
                    let g = self.amplitude(p);
                    g * g * p * p
                },
                0.0,
                p_max,
                nodes,
            )
    }
}

/// Momentum-averaged spin polarization `n ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Polarization(f64);

impl Polarization {
    pub fn new(n: f64) -> Result<Self, KinematicsError> {
        if !(0.0..=1.0).contains(&n) {
            return Err(KinematicsError::InvalidPolarization(n));
        }
        Ok(Self(n))
    }

    /// Clamps into `[0, 1]`; NaN maps to 0.
    pub fn clamped(n: f64) -> Self {
        if n.is_nan() {
            Self(0.0)
        } else {
            Self(n.clamp(0.0, 1.0))
        }
    }

    pub const REST: Self = Self(1.0);

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Above this `w/m` the small-packet formula is flagged as unreliable.
pub const LEADING_ORDER_WARN_RATIO: f64 = 0.3;

/// Leading-order polarization `n = 1 - ((w/2m) tanh(ξ/2))²`, clamped to [0, 1].
pub fn polarization_leading_order(wp: &WavePacket, boost: BoostRapidity) -> Polarization {
    let r = wp.ratio();
    if r > LEADING_ORDER_WARN_RATIO {
        log::warn!("w/m = {r} is outside the small-packet regime; leading-order n is unreliable");
    }
    let x = 0.5 * r * (0.5 * boost.xi).tanh();
    Polarization::clamped(1.0 - x * x)
}

/// Small-packet expansion of the isotropic quadrature model:
/// `1 - (3/4)(w/m)² tanh²(ξ/2)`, from `⟨|p|²⟩ = 3w²/2`.
pub fn polarization_model_expansion(wp: &WavePacket, boost: BoostRapidity) -> f64 {
    let t = (0.5 * boost.xi).tanh();
    1.0 - 0.75 * wp.ratio().powi(2) * t * t
}

/// Radial integration range in units of `w`.
pub const RADIAL_CUTOFF: f64 = 8.0;
pub const MIN_QUADRATURE_NODES: usize = 32;
pub const MAX_QUADRATURE_NODES: usize = 1 << 14;
pub const QUADRATURE_TOL: f64 = 1e-10;

/// Result of an adaptive polarization integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureEstimate {
    pub n: Polarization,
    /// Unclamped integral value.
    pub raw: f64,
    /// Node count of the accepted estimate.
    pub nodes: usize,
    /// |difference| to the estimate at half the nodes.
    pub delta: f64,
}

fn polarization_integral(ratio: f64, xi: f64, nodes: usize) -> f64 {
    // n = (4/√π) ∫_0^∞ u² e^{-u²} cos θ(δ(u·w/m)) du
    let norm = 4.0 / PI.sqrt();
    norm * quadrature::integrate(
        |u| u * u * (-u * u).exp() * wigner_cos(xi, (u * ratio).asinh()),
        0.0,
        RADIAL_CUTOFF,
        nodes,
    )
}

/// `n = ∫|g(p)|² cos θ_{|p|} d³p` by radial Gauss–Legendre, doubling the node
/// count from `nodes` until two successive estimates agree within 1e-10.
pub fn polarization_quadrature_detailed(
    wp: &WavePacket,
    boost: BoostRapidity,
    nodes: usize,
) -> Result<QuadratureEstimate, KinematicsError> {
    if nodes < MIN_QUADRATURE_NODES {
        return Err(KinematicsError::TooFewNodes {
            min: MIN_QUADRATURE_NODES,
            got: nodes,
        });
    }
    let ratio = wp.ratio();
    let mut count = nodes;
    let mut prev = polarization_integral(ratio, boost.xi, count);
    let mut delta = f64::INFINITY;
    while count * 2 <= MAX_QUADRATURE_NODES {
        count *= 2;
        let next = polarization_integral(ratio, boost.xi, count);
        delta = (next - prev).abs();
        prev = next;
        if delta < QUADRATURE_TOL {
            return Ok(QuadratureEstimate {
                n: Polarization::clamped(next),
                raw: next,
                nodes: count,
                delta,
            });
        }
    }
    Err(KinematicsError::NoConvergence {
        nodes: count,
        delta,
        tol: QUADRATURE_TOL,
    })
}

pub fn polarization_quadrature(
    wp: &WavePacket,
    boost: BoostRapidity,
    nodes: usize,
) -> Result<Polarization, KinematicsError> {
    Ok(polarization_quadrature_detailed(wp, boost, nodes)?.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn rapidity_values() {
        assert_eq!(rapidity_from_beta(0.0).unwrap().xi, 0.0);
        assert!((rapidity_from_beta(0.8).unwrap().xi - 3f64.ln()).abs() < 1e-15);
        // atanh(0.99) = ½ ln(199)
        assert!((rapidity_from_beta(0.99).unwrap().xi - 0.5 * 199f64.ln()).abs() < 1e-14);
        assert!((rapidity_from_beta(0.99).unwrap().xi - 2.6467).abs() < 1e-4);
    }

    #[test]
    fn rapidity_rejects_superluminal() {
        assert_eq!(
            rapidity_from_beta(1.0),
            Err(KinematicsError::InvalidBeta(1.0))
        );
        assert!(rapidity_from_beta(-0.1).is_err());
        assert!(rapidity_from_beta(f64::NAN).is_err());
        assert!(BoostRapidity::from_xi(-1.0).is_err());
    }

    #[test]
    fn rapidity_round_trip_and_gamma() {
        for beta in [0.0, 0.1, 0.5, 0.9, 0.999] {
            let b = rapidity_from_beta(beta).unwrap();
            assert!((b.xi.tanh() - beta).abs() < 1e-14);
            assert!((b.gamma() - (1.0 - beta * beta).powf(-0.5)).abs() < 1e-12 * b.gamma());
        }
    }

    #[test]
    fn wigner_angle_zero_cases() {
        let p = ParticleRapidity::from_delta(2.0).unwrap();
        assert_eq!(
            wigner_angle(BoostRapidity::from_xi(0.0).unwrap(), p).theta,
            0.0
        );
        let b = BoostRapidity::from_xi(3.0).unwrap();
        assert_eq!(
            wigner_angle(b, ParticleRapidity::from_delta(0.0).unwrap()).theta,
            0.0
        );
    }

    #[test]
    fn wigner_angle_unit_rapidities() {
        let th = wigner_angle(
            BoostRapidity::from_xi(1.0).unwrap(),
            ParticleRapidity::from_delta(1.0).unwrap(),
        );
        // boost-composition value: polar factor of B_x(1)·B_y(1)
        assert!(
            (th.theta - 0.420_783_961_638_073).abs() < 1e-14,
            "{}",
            th.theta
        );
    }

    #[test]
    fn wigner_angle_ultra_relativistic() {
        let th = wigner_angle(
            BoostRapidity::from_xi(20.0).unwrap(),
            ParticleRapidity::from_delta(20.0).unwrap(),
        );
        assert!(th.theta > FRAC_PI_2 - 1e-6 && th.theta < FRAC_PI_2);
    }

    #[test]
    fn wigner_angle_monotone() {
        let grid: Vec<f64> = (0..40).map(|k| k as f64 * 0.25).collect();
        for &a in &grid {
            let mut last_xi = -1.0;
            let mut last_delta = -1.0;
            for &b in &grid {
                let t1 = wigner_angle(
                    BoostRapidity::from_xi(b).unwrap(),
                    ParticleRapidity::from_delta(a).unwrap(),
                )
                .theta;
                let t2 = wigner_angle(
                    BoostRapidity::from_xi(a).unwrap(),
                    ParticleRapidity::from_delta(b).unwrap(),
                )
                .theta;
                assert!(t1 >= last_xi && t2 >= last_delta);
                last_xi = t1;
                last_delta = t2;
            }
        }
    }

    #[test]
    fn rotate_basis_spinors() {
        let id = boosted_basis_spinor(1, WignerAngle::new(0.0));
        assert_eq!(id, SpinAmplitudePair::real(1.0, 0.0));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let up = boosted_basis_spinor(1, WignerAngle::new(FRAC_PI_2));
        let down = boosted_basis_spinor(2, WignerAngle::new(FRAC_PI_2));
        assert!((up.a1.re - h).abs() < 1e-15 && (up.a2.re - h).abs() < 1e-15);
        assert!((down.a1.re + h).abs() < 1e-15 && (down.a2.re - h).abs() < 1e-15);
    }

    #[test]
    fn bloch_examples() {
        let up = bloch_from_amplitudes(&[(1.0, SpinAmplitudePair::basis(1))]).unwrap();
        assert_eq!(
            up,
            BlochVector {
                nx: 0.0,
                ny: 0.0,
                nz: 1.0
            }
        );
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let eq = bloch_from_amplitudes(&[(1.0, SpinAmplitudePair::real(h, h))]).unwrap();
        assert!((eq.nx - 1.0).abs() < 1e-15 && eq.ny == 0.0 && eq.nz.abs() < 1e-15);
        let mixed = bloch_from_amplitudes(&[
            (0.5, SpinAmplitudePair::basis(1)),
            (0.5, SpinAmplitudePair::basis(2)),
        ])
        .unwrap();
        assert_eq!(mixed.length(), 0.0);
    }

    #[test]
    fn bloch_y_component_sign() {
        // (1, i)/√2 is the +y eigenstate of σ_y
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let s = SpinAmplitudePair::new(Complex64::new(h, 0.0), Complex64::new(0.0, h));
        let b = bloch_from_amplitudes(&[(1.0, s)]).unwrap();
        assert!((b.ny - 1.0).abs() < 1e-15 && b.nx.abs() < 1e-15);
    }

    #[test]
    fn bloch_rejects_bad_weights() {
        let s = SpinAmplitudePair::basis(1);
        assert!(bloch_from_amplitudes(&[(0.6, s), (0.6, s)]).is_err());
        assert!(bloch_from_amplitudes(&[(1.5, s), (-0.5, s)]).is_err());
    }

    #[test]
    fn leading_order_values() {
        let wp = WavePacket::from_ratio(0.1).unwrap();
        assert_eq!(
            polarization_leading_order(&wp, BoostRapidity::from_xi(0.0).unwrap()).value(),
            1.0
        );
        // tanh(ξ/2) = 1/2  ⇔  ξ = 2 atanh(1/2) = ln 3
        let b = BoostRapidity::from_xi(3f64.ln()).unwrap();
        let n = polarization_leading_order(&wp, b).value();
        assert!((n - 0.999375).abs() < 1e-14, "{n}");
        let tiny = WavePacket::from_ratio(1e-12).unwrap();
        assert!((polarization_leading_order(&tiny, b).value() - 1.0).abs() < 1e-20);
    }

    #[test]
    fn leading_order_clamps() {
        let wide = WavePacket::from_ratio(50.0).unwrap();
        let b = BoostRapidity::from_xi(10.0).unwrap();
        assert_eq!(polarization_leading_order(&wide, b).value(), 0.0);
    }

    #[test]
    fn wave_packet_normalised() {
        for (w, m) in [(0.1, 1.0), (2.0, 3.0), (1e-3, 1.0)] {
            let wp = WavePacket::new(w, m).unwrap();
            assert!((wp.norm_by_quadrature(128) - 1.0).abs() < 1e-8);
        }
        assert!(WavePacket::new(0.0, 1.0).is_err());
    }

    #[test]
    fn quadrature_trivial_limits() {
        let wp = WavePacket::from_ratio(0.5).unwrap();
        let rest = polarization_quadrature(&wp, BoostRapidity::from_xi(0.0).unwrap(), 32).unwrap();
        assert!((rest.value() - 1.0).abs() < 1e-13);
        let sharp = WavePacket::from_ratio(1e-9).unwrap();
        let n = polarization_quadrature(&sharp, BoostRapidity::from_xi(5.0).unwrap(), 32).unwrap();
        assert!((n.value() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quadrature_rejects_few_nodes() {
        let wp = WavePacket::from_ratio(0.1).unwrap();
        let b = BoostRapidity::from_xi(1.0).unwrap();
        assert_eq!(
            polarization_quadrature(&wp, b, 16),
            Err(KinematicsError::TooFewNodes { min: 32, got: 16 })
        );
    }

    #[test]
    fn quadrature_small_packet_expansion() {
        let wp = WavePacket::from_ratio(0.05).unwrap();
        let b = BoostRapidity::from_xi(3f64.ln()).unwrap();
        let n = polarization_quadrature(&wp, b, 32).unwrap().value();
        // 1 - (3/4)(0.05)²(1/4) = 0.99953125, next order is O((w/m)^4)
        assert!((n - 0.99953125).abs() < 5e-6, "{n}");
    }
}
