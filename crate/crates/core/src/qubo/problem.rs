use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const ENERGY_CONVENTION: &str = "sum z_i Q_ij z_j + offset";

/// Upper-triangle entry `Q_ij = Q_ji` with `i <= j`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Term<T> {
    pub i: usize,
    pub j: usize,
    pub q: T,
}

/// Symmetric QUBO with energy `sum_{n,m} z_n Q_nm z_m + offset`.
///
/// Only `i <= j` is stored; an off-diagonal entry therefore contributes
/// `2 q z_i z_j` to the energy.
#[derive(Debug, Clone, PartialEq)]
pub struct QuboProblem<T> {
    n_vars: usize,
    terms: Vec<Term<T>>,
    offset: T,
    labels: BTreeMap<String, f64>,
}

impl<T: Scalar> QuboProblem<T> {
    pub fn zero(n_vars: usize) -> Self {
        Self {
            n_vars,
            terms: Vec::new(),
            offset: T::zero(),
            labels: BTreeMap::new(),
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    /// Nonzero upper-triangle entries sorted by `(i, j)`.
    pub fn terms(&self) -> &[Term<T>] {
        &self.terms
    }

    pub fn offset(&self) -> T {
        self.offset
    }

    /// Objective name to scalarization weight, for diagnostics.
    pub fn labels(&self) -> &BTreeMap<String, f64> {
        &self.labels
    }

    pub fn with_label(mut self, name: impl Into<String>, weight: f64) -> Self {
        self.labels.insert(name.into(), weight);
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels.clear();
        self
    }

    pub fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n_vars {
            return Err(Error::LengthMismatch {
                expected: self.n_vars,
                found: len,
            });
        }
        Ok(())
    }

    /// Energy of a 0/1 vector, offset included.
    pub fn energy(&self, z: &[u8]) -> Result<T> {
        self.check_len(z.len())?;
        Ok(self.energy_unchecked(z))
    }

    pub(crate) fn energy_unchecked(&self, z: &[u8]) -> T {
        let two = T::one() + T::one();
        let mut e = self.offset;
        for t in &self.terms {
            if z[t.i] != 0 && z[t.j] != 0 {
                e += if t.i == t.j { t.q } else { two * t.q };
            }
        }
        e
    }

    /// Row-major symmetric matrix.
    pub fn to_dense(&self) -> Vec<T> {
        let n = self.n_vars;
        let mut m = vec![T::zero(); n * n];
        for t in &self.terms {
            m[t.i * n + t.j] = t.q;
            m[t.j * n + t.i] = t.q;
        }
        m
    }

    /// Sum of every matrix entry, both triangles counted.
    pub fn total_coefficient(&self) -> T {
        let two = T::one() + T::one();
        self.terms
            .iter()
            .map(|t| if t.i == t.j { t.q } else { two * t.q })
            .sum()
    }

    pub fn max_abs_coefficient(&self) -> T {
        self.terms.iter().map(|t| t.q.abs()).fold(T::zero(), T::max)
    }

    pub fn min_nonzero_abs_coefficient(&self) -> Option<T> {
        self.terms
            .iter()
            .map(|t| t.q.abs())
            .filter(|q| !q.is_zero())
            .reduce(T::min)
    }

    pub fn to_file(&self) -> QuboFile {
        QuboFile {
            convention: ENERGY_CONVENTION.to_string(),
            n_vars: self.n_vars,
            offset: self.offset.as_f64(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    i: t.i,
                    j: t.j,
                    q: t.q.as_f64(),
                })
                .collect(),
            labels: (!self.labels.is_empty()).then(|| self.labels.clone()),
            meta: None,
        }
    }
}

/// Accumulates coefficients for a [`QuboProblem`].
#[derive(Debug, Clone)]
pub struct QuboBuilder<T> {
    n_vars: usize,
    entries: BTreeMap<(usize, usize), T>,
    offset: T,
}

impl<T: Scalar> QuboBuilder<T> {
    pub fn new(n_vars: usize) -> Self {
        Self {
            n_vars,
            entries: BTreeMap::new(),
            offset: T::zero(),
        }
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        if i >= self.n_vars || j >= self.n_vars {
            return Err(Error::InvalidEdge {
                u: i,
                v: j,
                n_vars: self.n_vars,
            });
        }
        Ok(())
    }

    /// Adds `q` to the matrix entry `Q_ij` (and its mirror `Q_ji`).
    pub fn add_entry(&mut self, i: usize, j: usize, q: T) -> Result<&mut Self> {
        self.check(i, j)?;
        let key = (i.min(j), i.max(j));
        *self.entries.entry(key).or_insert_with(T::zero) += q;
        Ok(self)
    }

    /// Adds `c * z_i` to the polynomial.
    pub fn add_linear(&mut self, i: usize, c: T) -> Result<&mut Self> {
        self.add_entry(i, i, c)
    }

    /// Adds `c * z_i * z_j` to the polynomial (`i != j` splits across both triangles).
    pub fn add_product(&mut self, i: usize, j: usize, c: T) -> Result<&mut Self> {
        if i == j {
            return self.add_entry(i, i, c);
        }
        let half = c / (T::one() + T::one());
        self.add_entry(i, j, half)
    }

    pub fn add_offset(&mut self, c: T) -> &mut Self {
        self.offset += c;
        self
    }

    pub fn build(self) -> QuboProblem<T> {
        QuboProblem {
            n_vars: self.n_vars,
            terms: self
                .entries
                .into_iter()
                .filter(|(_, q)| !q.is_zero())
                .map(|((i, j), q)| Term { i, j, q })
                .collect(),
            offset: self.offset,
            labels: BTreeMap::new(),
        }
    }
}

/// On-disk QUBO representation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuboFile {
    pub convention: String,
    pub n_vars: usize,
    pub offset: f64,
    pub terms: Vec<Term<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl QuboFile {
    pub fn into_problem<T: Scalar>(self) -> Result<QuboProblem<T>> {
        if self.convention != ENERGY_CONVENTION {
            return Err(Error::InvalidParameter(format!(
                "unsupported energy convention `{}`",
                self.convention
            )));
        }
        let mut b = QuboBuilder::new(self.n_vars);
        for t in &self.terms {
            if t.i > t.j {
                return Err(Error::InvalidParameter(format!(
                    "term ({}, {}) is below the diagonal",
                    t.i, t.j
                )));
            }
            if !t.q.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "term ({}, {}) is not finite",
                    t.i, t.j
                )));
            }
            b.add_entry(t.i, t.j, T::from_f64_lossy(t.q))?;
        }
        b.add_offset(T::from_f64_lossy(self.offset));
        let mut p = b.build();
        p.labels = self.labels.unwrap_or_default();
        Ok(p)
    }
}
