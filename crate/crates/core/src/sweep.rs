//! Grid sweeps over `(α, n)` or `(α, ξ)` and their CSV / JSON rendering.

use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::entanglement::{
    assemble_tau, concurrence_pure, concurrence_reduced, concurrence_wootters, initial_state,
    log_negativity_closed, ppt_threshold, pt_eigenvalues_closed, EntanglementError, StateParameter,
};
use crate::kinematics::{polarization_leading_order, BoostRapidity, Polarization, WavePacket};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("invalid argument {flag}: {reason}")]
    InvalidArgument { flag: &'static str, reason: String },
    #[error("record (alpha = {alpha}, n = {n}) violates {what}")]
    Invariant { alpha: f64, n: f64, what: String },
    #[error(transparent)]
    Entanglement(#[from] EntanglementError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn invalid(flag: &'static str, reason: impl Into<String>) -> SweepError {
    SweepError::InvalidArgument {
        flag,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum SweepMode {
    #[default]
    DirectN,
    Kinematic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Column order of every emitted table.
pub const CSV_HEADER: [&str; 12] = [
    "alpha",
    "n",
    "xi",
    "lambda1",
    "lambda2",
    "lambda3",
    "lambda4",
    "R",
    "log_negativity",
    "concurrence_wootters",
    "concurrence_reduced",
    "concurrence_pure_initial",
];

/// Extra column appended when the halved reduced concurrence is requested.
pub const AS_PRINTED_COLUMN: &str = "concurrence_reduced_as_printed";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub alpha: f64,
    pub n: f64,
    pub xi: Option<f64>,
    pub lambda1: f64,
    pub lambda2: f64,
    pub lambda3: f64,
    pub lambda4: f64,
    #[serde(rename = "R")]
    pub r: f64,
    pub log_negativity: f64,
    pub concurrence_wootters: f64,
    pub concurrence_reduced: f64,
    pub concurrence_pure_initial: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub concurrence_reduced_as_printed: Option<f64>,
}

impl SweepRecord {
    /// Evaluates every measure at one `(α, n)` point.
    pub fn measure(
        p: StateParameter,
        n: Polarization,
        xi: Option<f64>,
        as_printed: bool,
    ) -> Result<Self, SweepError> {
        let spectrum = pt_eigenvalues_closed(p, n);
        let tau = assemble_tau(p, n);
        let reduced = concurrence_reduced(p, n);
        let rec = Self {
            alpha: p.alpha(),
            n: n.value(),
            xi,
            lambda1: spectrum.lambda[0],
            lambda2: spectrum.lambda[1],
            lambda3: spectrum.lambda[2],
            lambda4: spectrum.lambda[3],
            r: ppt_threshold(n),
            log_negativity: log_negativity_closed(p, n),
            concurrence_wootters: concurrence_wootters(&tau.matrix)?,
            concurrence_reduced: reduced.value,
            concurrence_pure_initial: concurrence_pure(&initial_state(p)),
            concurrence_reduced_as_printed: as_printed.then_some(reduced.as_printed),
        };
        rec.check()?;
        Ok(rec)
    }

    pub fn lambdas(&self) -> [f64; 4] {
        [self.lambda1, self.lambda2, self.lambda3, self.lambda4]
    }

    /// Trace identity and sign structure of the PT spectrum.
    pub fn check(&self) -> Result<(), SweepError> {
        let fail = |what: String| SweepError::Invariant {
            alpha: self.alpha,
            n: self.n,
            what,
        };
        let l = self.lambdas();
        let sum: f64 = l.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(fail(format!("trace identity (sum = {sum})")));
        }
        for (k, v) in [(1, l[0]), (3, l[2]), (4, l[3])] {
            if v < -1e-12 {
                return Err(fail(format!("sign structure (lambda{k} = {v})")));
            }
        }
        let ab = self.alpha * (1.0 - self.alpha * self.alpha).sqrt();
        if (ab - self.r).abs() >= 1e-10 && (l[1] < 0.0) != (ab > self.r) {
            return Err(fail(format!(
                "threshold (lambda2 = {}, R = {})",
                l[1], self.r
            )));
        }
        Ok(())
    }

    fn values(&self) -> Vec<Option<f64>> {
        let mut v = vec![
            Some(self.alpha),
            Some(self.n),
            self.xi,
            Some(self.lambda1),
            Some(self.lambda2),
            Some(self.lambda3),
            Some(self.lambda4),
            Some(self.r),
            Some(self.log_negativity),
            Some(self.concurrence_wootters),
            Some(self.concurrence_reduced),
            Some(self.concurrence_pure_initial),
        ];
        if self.concurrence_reduced_as_printed.is_some() {
            v.push(self.concurrence_reduced_as_printed);
        }
        v
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn format_real(x: f64) -> String {
    format!("{x:?}")
}

/// Writes records as CSV (header + one row each) or as a JSON array.
pub fn write_records<W: Write>(
    records: &[SweepRecord],
    format: OutputFormat,
    out: W,
) -> Result<(), SweepError> {
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<&str> = CSV_HEADER.to_vec();
            if records
                .iter()
                .any(|r| r.concurrence_reduced_as_printed.is_some())
            {
                header.push(AS_PRINTED_COLUMN);
            }
            w.write_record(&header)?;
            for rec in records {
                let row: Vec<String> = rec
                    .values()
                    .into_iter()
                    .map(|v| v.map(format_real).unwrap_or_default())
                    .collect();
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn read_csv_records<R: std::io::Read>(input: R) -> Result<Vec<SweepRecord>, SweepError> {
    let mut rdr = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for rec in rdr.deserialize() {
        out.push(rec?);
    }
    Ok(out)
}

/// Parameters of a grid sweep. Grid endpoints are inclusive.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub alpha_min: f64,
    pub alpha_max: f64,
    pub alpha_steps: usize,
    pub n_min: f64,
    pub n_max: f64,
    /// Points on the inner axis: `n` in direct mode, `ξ` in kinematic mode.
    pub n_steps: usize,
    pub mode: SweepMode,
    pub w_over_m: Option<f64>,
    pub xi_min: Option<f64>,
    pub xi_max: Option<f64>,
    pub as_printed: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            alpha_min: 0.01,
            alpha_max: 0.99,
            alpha_steps: 99,
            n_min: 0.0,
            n_max: 1.0,
            n_steps: 101,
            mode: SweepMode::DirectN,
            w_over_m: None,
            xi_min: None,
            xi_max: None,
            as_printed: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        let unit_open = |x: f64| x > 0.0 && x < 1.0;
        if !unit_open(self.alpha_min) {
            return Err(invalid(
                "--alpha-min",
                format!("{} not in (0, 1)", self.alpha_min),
            ));
        }
        if !unit_open(self.alpha_max) {
            return Err(invalid(
                "--alpha-max",
                format!("{} not in (0, 1)", self.alpha_max),
            ));
        }
        if self.alpha_min >= self.alpha_max {
            return Err(invalid("--alpha-min", "must be below --alpha-max"));
        }
        if self.alpha_steps < 2 {
            return Err(invalid("--alpha-steps", "need at least 2 points"));
        }
        if self.n_steps < 2 {
            return Err(invalid("--n-steps", "need at least 2 points"));
        }
        match self.mode {
            SweepMode::DirectN => {
                if !(0.0..=1.0).contains(&self.n_min) {
                    return Err(invalid("--n-min", format!("{} not in [0, 1]", self.n_min)));
                }
                if !(0.0..=1.0).contains(&self.n_max) {
                    return Err(invalid("--n-max", format!("{} not in [0, 1]", self.n_max)));
                }
                if self.n_min >= self.n_max {
                    return Err(invalid("--n-min", "must be below --n-max"));
                }
                for (flag, v) in [
                    ("--w-over-m", self.w_over_m),
                    ("--xi-min", self.xi_min),
                    ("--xi-max", self.xi_max),
                ] {
                    if v.is_some() {
                        return Err(invalid(flag, "only valid with --mode kinematic"));
                    }
                }
            }
            SweepMode::Kinematic => {
                let w = self
                    .w_over_m
                    .ok_or_else(|| invalid("--w-over-m", "required with --mode kinematic"))?;
                if !(w.is_finite() && w > 0.0) {
                    return Err(invalid("--w-over-m", format!("{w} must be positive")));
                }
                let lo = self
                    .xi_min
                    .ok_or_else(|| invalid("--xi-min", "required with --mode kinematic"))?;
                let hi = self
                    .xi_max
                    .ok_or_else(|| invalid("--xi-max", "required with --mode kinematic"))?;
                if !(lo.is_finite() && lo >= 0.0) {
                    return Err(invalid("--xi-min", format!("{lo} must be >= 0")));
                }
                if !hi.is_finite() {
                    return Err(invalid("--xi-max", format!("{hi} must be finite")));
                }
                if lo >= hi {
                    return Err(invalid("--xi-min", "must be below --xi-max"));
                }
            }
        }
        Ok(())
    }
}

/// `steps` evenly spaced points with both endpoints exact.
pub fn linspace(min: f64, max: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 2, "linspace needs at least two points");
    let last = steps - 1;
    (0..steps)
        .map(|k| {
            if k == last {
                max
            } else {
                min + (max - min) * (k as f64) / (last as f64)
            }
        })
        .collect()
}

/// Evaluates the grid in row-major order (α outer, inner axis inner).
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepRecord>, SweepError> {
    config.validate()?;
    let alphas = linspace(config.alpha_min, config.alpha_max, config.alpha_steps);
    let inner: Vec<(Polarization, Option<f64>)> = match config.mode {
        SweepMode::DirectN => linspace(config.n_min, config.n_max, config.n_steps)
            .into_iter()
            .map(|n| (Polarization::clamped(n), None))
            .collect(),
        SweepMode::Kinematic => {
            let wp = WavePacket::from_ratio(config.w_over_m.unwrap_or_default())
                .map_err(|e| invalid("--w-over-m", e.to_string()))?;
            let xi_min = config.xi_min.unwrap_or_default();
            let xi_max = config.xi_max.unwrap_or_default();
            linspace(xi_min, xi_max, config.n_steps)
                .into_iter()
                .map(|xi| {
                    let boost = BoostRapidity::from_xi(xi)
                        .map_err(|e| invalid("--xi-max", e.to_string()))?;
                    Ok((polarization_leading_order(&wp, boost), Some(xi)))
                })
                .collect::<Result<_, SweepError>>()?
        }
    };
    let mut records = Vec::with_capacity(alphas.len() * inner.len());
    for &a in &alphas {
        let p = StateParameter::new(a)?;
        for &(n, xi) in &inner {
            records.push(SweepRecord::measure(p, n, xi, config.as_printed)?);
        }
    }
    Ok(records)
}
