//! Sample-quality metrics (relative error, time to solution) and the
//! power-law estimate of minor-embedding resources.

use std::fmt;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::solvers::SampleSet;

/// Energies closer than this (relative, floor 1) to the optimum count as optimal.
pub const OPTIMUM_TOLERANCE: f64 = 1e-12;

fn tolerance(e_min: f64) -> f64 {
    OPTIMUM_TOLERANCE * e_min.abs().max(1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelativeError {
    pub value: f64,
    /// `e_min` was zero, so `value` is the absolute gap.
    pub absolute_fallback: bool,
}

/// `|e_min - e_sampled| / |e_min|`, or the absolute gap when `e_min == 0`.
pub fn relative_error(e_min: f64, e_sampled: f64) -> Result<RelativeError> {
    let tol = tolerance(e_min);
    if e_sampled < e_min - tol {
        return Err(Error::Integrity {
            optimum: e_min,
            sampled: e_sampled,
        });
    }
    let gap = e_sampled - e_min;
    let gap = if gap <= tol { 0.0 } else { gap };
    if e_min.abs() <= OPTIMUM_TOLERANCE {
        return Ok(RelativeError {
            value: gap,
            absolute_fallback: true,
        });
    }
    Ok(RelativeError {
        value: gap / e_min.abs(),
        absolute_fallback: false,
    })
}

/// Time to solution; infinite when the optimum was never sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tts {
    Finite(f64),
    Infinite,
}

impl Tts {
    pub fn value(self) -> f64 {
        match self {
            Tts::Finite(v) => v,
            Tts::Infinite => f64::INFINITY,
        }
    }
}

impl fmt::Display for Tts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tts::Finite(v) => write!(f, "{v}"),
            Tts::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Tts {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Tts::Finite(v) => s.serialize_f64(*v),
            Tts::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `log(1 - p_s) / log(1 - n_opt / n_s) * t_a`.
///
/// `n_opt == n_s` returns `t_a`: a single read succeeds with certainty.
pub fn tts(p_s: f64, t_a: f64, n_opt: u64, n_s: u64) -> Result<Tts> {
    if !(p_s > 0.0 && p_s < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "p_s must lie in (0, 1), got {p_s}"
        )));
    }
    if !(t_a.is_finite() && t_a > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "t_a must be finite and > 0, got {t_a}"
        )));
    }
    if n_s == 0 || n_opt > n_s {
        return Err(Error::InvalidParameter(format!(
            "need 0 <= n_opt <= n_s and n_s >= 1, got n_opt={n_opt}, n_s={n_s}"
        )));
    }
    if n_opt == 0 {
        return Ok(Tts::Infinite);
    }
    if n_opt == n_s {
        return Ok(Tts::Finite(t_a));
    }
    let success = n_opt as f64 / n_s as f64;
    Ok(Tts::Finite((1.0 - p_s).ln() / (-success).ln_1p() * t_a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reference {
    /// Global optimum from exhaustive search.
    Exact,
    /// Lowest energy seen in the samples, or a declared value.
    BestKnown,
}

/// What one unit of `t_a` means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AnnealTimeUnit {
    Sweeps,
    WallClockMs,
}

/// Mean and the 5/25/50/75/95 % quantiles of per-read relative errors.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LSummary {
    pub mean: f64,
    pub q05: f64,
    pub q25: f64,
    pub q50: f64,
    pub q75: f64,
    pub q95: f64,
}

pub const QUANTILES: [f64; 5] = [0.05, 0.25, 0.5, 0.75, 0.95];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QualityStats {
    pub e_min_global: f64,
    pub reference: Reference,
    pub absolute_fallback: bool,
    /// One entry per sample record (not per read).
    pub l_values: Vec<f64>,
    pub l_min: f64,
    pub n_opt: u64,
    pub n_s: u64,
    pub tts: Tts,
    pub p_s: f64,
    pub t_a: f64,
    pub t_a_unit: AnnealTimeUnit,
    pub summary: LSummary,
}

impl QualityStats {
    /// Per-read relative errors, records expanded by their counts.
    pub fn l_per_read<'a, T: Scalar>(
        &'a self,
        samples: &'a SampleSet<T>,
    ) -> impl Iterator<Item = f64> + 'a {
        self.l_values
            .iter()
            .zip(&samples.records)
            .flat_map(|(&l, r)| std::iter::repeat_n(l, r.count as usize))
    }
}

/// Linear interpolation between closest ranks over sorted data.
pub fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

/// Quality statistics of a sample set.
///
/// With `e_min_global = None` the lowest sampled energy is the reference and
/// the result is marked [`Reference::BestKnown`].
pub fn quality_stats<T: Scalar>(
    samples: &SampleSet<T>,
    e_min_global: Option<(f64, Reference)>,
    p_s: f64,
    t_a: f64,
    t_a_unit: AnnealTimeUnit,
) -> Result<QualityStats> {
    let best = samples.best().ok_or(Error::EmptySampleSet)?;
    let (e_min, reference) = e_min_global.unwrap_or((best.energy.as_f64(), Reference::BestKnown));
    let errors = samples
        .records
        .iter()
        .map(|r| relative_error(e_min, r.energy.as_f64()))
        .collect::<Result<Vec<_>>>()?;
    let l_values: Vec<f64> = errors.iter().map(|e| e.value).collect();
    let n_opt = samples
        .records
        .iter()
        .zip(&l_values)
        .filter(|(_, &l)| l == 0.0)
        .map(|(r, _)| r.count)
        .sum();
    let n_s = samples.total_reads;

    let mut per_read: Vec<f64> = l_values
        .iter()
        .zip(&samples.records)
        .flat_map(|(&l, r)| std::iter::repeat_n(l, r.count as usize))
        .collect();
    per_read.sort_by(f64::total_cmp);
    let mean = per_read.iter().sum::<f64>() / per_read.len() as f64;
    let [q05, q25, q50, q75, q95] = QUANTILES.map(|q| quantile(&per_read, q));

    Ok(QualityStats {
        e_min_global: e_min,
        reference,
        absolute_fallback: errors.iter().any(|e| e.absolute_fallback),
        l_min: l_values.iter().copied().fold(f64::INFINITY, f64::min),
        l_values,
        n_opt,
        n_s,
        tts: tts(p_s, t_a, n_opt, n_s)?,
        p_s,
        t_a,
        t_a_unit,
        summary: LSummary {
            mean,
            q05,
            q25,
            q50,
            q75,
            q95,
        },
    })
}

/// Quantity the physical-coupler power law is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CouplerBase {
    /// Number of buses `N`.
    Buses,
    /// Number of logical couplers `N^2 / 2`.
    LogicalCouplers,
}

/// Fitted power laws for embedded problem size and the hardware limits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingLaw {
    pub qubit_coef: f64,
    pub qubit_exp: f64,
    pub coupler_coef: f64,
    pub coupler_exp: f64,
    pub coupler_base: CouplerBase,
    pub max_qubits: f64,
    pub max_couplers: f64,
}

impl Default for EmbeddingLaw {
    fn default() -> Self {
        Self {
            qubit_coef: 0.11,
            qubit_exp: 2.04,
            coupler_coef: 0.56,
            coupler_exp: 2.09,
            coupler_base: CouplerBase::Buses,
            max_qubits: 5000.0,
            max_couplers: 35000.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EmbeddingEstimate {
    pub n_buses: usize,
    pub logical_qubits: usize,
    pub logical_couplers: f64,
    pub physical_qubits: f64,
    pub physical_couplers: f64,
    pub feasible: bool,
    pub law: EmbeddingLaw,
}

pub fn estimate_embedding(n_buses: usize, law: &EmbeddingLaw) -> Result<EmbeddingEstimate> {
    if n_buses == 0 {
        return Err(Error::InvalidParameter("bus count must be >= 1".into()));
    }
    let n = n_buses as f64;
    let logical_couplers = n * n / 2.0;
    let physical_qubits = law.qubit_coef * n.powf(law.qubit_exp);
    let base = match law.coupler_base {
        CouplerBase::Buses => n,
        CouplerBase::LogicalCouplers => logical_couplers,
    };
    let physical_couplers = law.coupler_coef * base.powf(law.coupler_exp);
    Ok(EmbeddingEstimate {
        n_buses,
        logical_qubits: n_buses,
        logical_couplers,
        physical_qubits,
        physical_couplers,
        feasible: physical_qubits <= law.max_qubits && physical_couplers <= law.max_couplers,
        law: *law,
    })
}

/// Smallest bus count up to `max_n` the law deems infeasible.
pub fn smallest_infeasible(law: &EmbeddingLaw, max_n: usize) -> Option<usize> {
    (1..=max_n).find(|&n| {
        estimate_embedding(n, law)
            .map(|e| !e.feasible)
            .unwrap_or(false)
    })
}
