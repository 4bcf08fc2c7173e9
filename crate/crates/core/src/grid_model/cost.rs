use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Generator,
    Line,
    Load,
}

impl ComponentKind {
    pub const ALL: [ComponentKind; 3] = [Self::Generator, Self::Line, Self::Load];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Generator => "generator",
            Self::Line => "line",
            Self::Load => "load",
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.as_str() == s)
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// FLOP count per simulated step for each component kind.
///
/// Defaults: a generator with four internal states costs `2 * 4` for the
/// explicit update plus two for its injection (10), a line 5 and a load 3.
/// Loads are excluded unless `include_loads` is set.
#[derive(Debug, Clone, PartialEq)]
pub struct CostModel {
    costs: BTreeMap<ComponentKind, f64>,
    pub include_loads: bool,
}

impl Default for CostModel {
    fn default() -> Self {
        let costs = BTreeMap::from([
            (ComponentKind::Generator, 10.0),
            (ComponentKind::Line, 5.0),
            (ComponentKind::Load, 3.0),
        ]);
        Self {
            costs,
            include_loads: false,
        }
    }
}

impl CostModel {
    pub fn new(generator: f64, line: f64, load: f64, include_loads: bool) -> Result<Self> {
        let mut model = Self {
            include_loads,
            ..Self::default()
        };
        model.set(ComponentKind::Generator, generator)?;
        model.set(ComponentKind::Line, line)?;
        model.set(ComponentKind::Load, load)?;
        Ok(model)
    }

    pub fn cost(&self, kind: ComponentKind) -> f64 {
        self.costs[&kind]
    }

    pub fn set(&mut self, kind: ComponentKind, cost: f64) -> Result<()> {
        if !(cost.is_finite() && cost > 0.0) {
            return Err(Error::CostModel(format!(
                "cost for {kind} must be finite and > 0, got {cost}"
            )));
        }
        self.costs.insert(kind, cost);
        Ok(())
    }

    /// Reads `{"generator": 10, "line": 5, "load": 3, "include_loads": false}`.
    /// Missing kinds keep their defaults.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: BTreeMap<String, serde_json::Value> = serde_json::from_str(text)?;
        let mut model = Self::default();
        for (key, value) in raw {
            if key == "include_loads" {
                model.include_loads = value
                    .as_bool()
                    .ok_or_else(|| Error::CostModel("include_loads must be a boolean".into()))?;
                continue;
            }
            let kind = ComponentKind::parse(&key)
                .ok_or_else(|| Error::CostModel(format!("unknown component kind `{key}`")))?;
            let cost = value
                .as_f64()
                .ok_or_else(|| Error::CostModel(format!("cost for {key} must be a number")))?;
            model.set(kind, cost)?;
        }
        Ok(model)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (kind, cost) in &self.costs {
            map.insert(kind.as_str().into(), (*cost).into());
        }
        map.insert("include_loads".into(), self.include_loads.into());
        serde_json::Value::Object(map)
    }
}
