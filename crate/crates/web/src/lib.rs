//! wasm-bindgen bindings behind `www/index.html`.
//!
//! Each export is a thin wrapper over a plain Rust function so the numbers
//! can be tested natively; only the error conversion touches JS.

use wasm_bindgen::prelude::*;

use boostent::entanglement::log_negativity_closed;
use boostent::kinematics::{
    polarization_leading_order, polarization_quadrature, wigner_angle, ParticleRapidity,
    MIN_QUADRATURE_NODES,
};
use boostent::sweep::{linspace, SweepRecord};
use boostent::{BoostRapidity, Polarization, StateParameter, WavePacket};

/// Values per point returned by [`measure`].
pub const MEASURE_FIELDS: usize = 9;
/// Values per point returned by [`kinematics_curve`].
pub const CURVE_FIELDS: usize = 4;

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// `[λ1, λ2, λ3, λ4, R, N, C_wootters, C_reduced, C_initial]` at `(α, n)`.
pub fn measure_point(alpha: f64, n: f64) -> Result<Vec<f64>, String> {
    let p = StateParameter::new(alpha).map_err(|e| e.to_string())?;
    let n = Polarization::new(n).map_err(|e| e.to_string())?;
    let r = SweepRecord::measure(p, n, None, false).map_err(|e| e.to_string())?;
    let mut out = r.lambdas().to_vec();
    out.extend([
        r.r,
        r.log_negativity,
        r.concurrence_wootters,
        r.concurrence_reduced,
        r.concurrence_pure_initial,
    ]);
    Ok(out)
}

/// Log-negativity on an `alpha_steps × n_steps` grid over
/// `[0.01, 0.99] × [0, 1]`, row-major with α outer.
pub fn surface(alpha_steps: usize, n_steps: usize) -> Result<Vec<f64>, String> {
    if alpha_steps < 2 || n_steps < 2 || alpha_steps * n_steps > 1_000_000 {
        return Err(format!("grid {alpha_steps}×{n_steps} out of range"));
    }
    let ns: Vec<Polarization> = linspace(0.0, 1.0, n_steps)
        .into_iter()
        .map(|n| Polarization::new(n).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let mut out = Vec::with_capacity(alpha_steps * n_steps);
    for a in linspace(0.01, 0.99, alpha_steps) {
        let p = StateParameter::new(a).map_err(|e| e.to_string())?;
        out.extend(ns.iter().map(|&n| log_negativity_closed(p, n)));
    }
    Ok(out)
}

/// `[ξ, θ(ξ, p/m), n_quadrature, n_leading]` for `steps` rapidities in `[0, xi_max]`.
pub fn curve(w_over_m: f64, p_over_m: f64, xi_max: f64, steps: usize) -> Result<Vec<f64>, String> {
    if !(2..=2000).contains(&steps) {
        return Err(format!("steps {steps} out of range"));
    }
    if !(xi_max.is_finite() && xi_max > 0.0) {
        return Err(format!("xi_max must be positive, got {xi_max}"));
    }
    let wp = WavePacket::from_ratio(w_over_m).map_err(|e| e.to_string())?;
    let particle = ParticleRapidity::from_momentum_ratio(p_over_m).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(steps * CURVE_FIELDS);
    for xi in linspace(0.0, xi_max, steps) {
        let boost = BoostRapidity::from_xi(xi).map_err(|e| e.to_string())?;
        let n =
            polarization_quadrature(&wp, boost, MIN_QUADRATURE_NODES).map_err(|e| e.to_string())?;
        out.extend([
            xi,
            wigner_angle(boost, particle).theta,
            n.value(),
            polarization_leading_order(&wp, boost).value(),
        ]);
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn measure(alpha: f64, n: f64) -> Result<Vec<f64>, JsError> {
    measure_point(alpha, n).map_err(js_err)
}

#[wasm_bindgen]
pub fn negativity_surface(alpha_steps: usize, n_steps: usize) -> Result<Vec<f64>, JsError> {
    surface(alpha_steps, n_steps).map_err(js_err)
}

#[wasm_bindgen]
pub fn kinematics_curve(
    w_over_m: f64,
    p_over_m: f64,
    xi_max: f64,
    steps: usize,
) -> Result<Vec<f64>, JsError> {
    curve(w_over_m, p_over_m, xi_max, steps).map_err(js_err)
}
