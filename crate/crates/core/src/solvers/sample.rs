use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qubo::QuboProblem;
use crate::scalar::Scalar;

/// Binary vector `z`; `z_n = 1` places bus `n` in part 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Assignment(Vec<u8>);

impl Assignment {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidParameter(format!(
                "assignment entry {b} is not 0 or 1"
            )));
        }
        Ok(Self(bits))
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// Bit `k` of `mask` becomes variable `k`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self((0..n).map(|k| ((mask >> k) & 1) as u8).collect())
    }

    /// Parses `"0101"`; whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidParameter(format!(
                    "invalid bit character `{other}`"
                ))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Self)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    pub fn complement(&self) -> Self {
        Self(self.0.iter().map(|b| 1 - b).collect())
    }

    /// The lexicographically smaller of `z` and `1 - z`.
    pub fn canonical(&self) -> Self {
        let c = self.complement();
        if c < *self {
            c
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            f.write_str(if *b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Assignment {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Assignment::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord<T> {
    pub assignment: Assignment,
    pub energy: T,
    pub count: u64,
}

/// Distinct sampled assignments with multiplicities, sorted by energy then bits.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet<T> {
    pub solver: String,
    pub params: serde_json::Value,
    pub n_vars: usize,
    pub records: Vec<SampleRecord<T>>,
    pub total_reads: u64,
    pub seed: Option<u64>,
    pub wall_time_ms: f64,
}

impl<T: Scalar> SampleSet<T> {
    /// Aggregates raw reads, evaluating every distinct assignment from scratch.
    pub fn from_reads(
        problem: &QuboProblem<T>,
        solver: impl Into<String>,
        params: serde_json::Value,
        seed: Option<u64>,
        reads: impl IntoIterator<Item = Assignment>,
    ) -> Result<Self> {
        let mut counts: BTreeMap<Assignment, u64> = BTreeMap::new();
        for a in reads {
            problem.check_len(a.len())?;
            *counts.entry(a).or_default() += 1;
        }
        let records = counts
            .into_iter()
            .map(|(assignment, count)| SampleRecord {
                energy: problem.energy_unchecked(assignment.bits()),
                assignment,
                count,
            })
            .collect();
        Ok(Self::from_records(
            solver,
            params,
            problem.n_vars(),
            seed,
            records,
        ))
    }

    pub(crate) fn from_records(
        solver: impl Into<String>,
        params: serde_json::Value,
        n_vars: usize,
        seed: Option<u64>,
        mut records: Vec<SampleRecord<T>>,
    ) -> Self {
        records.sort_by(|a, b| {
            a.energy
                .partial_cmp(&b.energy)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| a.assignment.cmp(&b.assignment))
        });
        let total_reads = records.iter().map(|r| r.count).sum();
        Self {
            solver: solver.into(),
            params,
            n_vars,
            records,
            total_reads,
            seed,
            wall_time_ms: 0.0,
        }
    }

    pub fn best(&self) -> Option<&SampleRecord<T>> {
        self.records.first()
    }

    pub fn to_file(&self) -> SampleSetFile {
        SampleSetFile {
            solver: self.solver.clone(),
            params: self.params.clone(),
            n_vars: self.n_vars,
            records: self
                .records
                .iter()
                .map(|r| RecordFile {
                    bits: r.assignment.clone(),
                    energy: r.energy.as_f64(),
                    count: r.count,
                })
                .collect(),
            seed: self.seed,
            wall_time_ms: self.wall_time_ms,
            meta: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordFile {
    pub bits: Assignment,
    pub energy: f64,
    pub count: u64,
}

/// On-disk sample set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSetFile {
    pub solver: String,
    pub params: serde_json::Value,
    pub n_vars: usize,
    pub records: Vec<RecordFile>,
    pub seed: Option<u64>,
    pub wall_time_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl SampleSetFile {
    pub fn into_sample_set<T: Scalar>(self) -> Result<SampleSet<T>> {
        let records = self
            .records
            .into_iter()
            .map(|r| {
                if r.bits.len() != self.n_vars {
                    return Err(Error::LengthMismatch {
                        expected: self.n_vars,
                        found: r.bits.len(),
                    });
                }
                if r.count == 0 {
                    return Err(Error::InvalidParameter("record count must be >= 1".into()));
                }
                Ok(SampleRecord {
                    assignment: r.bits,
                    energy: T::from_f64_lossy(r.energy),
                    count: r.count,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut set =
            SampleSet::from_records(self.solver, self.params, self.n_vars, self.seed, records);
        set.wall_time_ms = self.wall_time_ms;
        Ok(set)
    }
}
