//! Reader for the numeric subset of MATPOWER case files.
//!
//! Only the `mpc.bus`, `mpc.branch` and `mpc.gen` matrices are read. Every
//! other assignment, cell array and comment is skipped.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BUS_I: usize = 0;
const BUS_PD: usize = 2;
const F_BUS: usize = 0;
const T_BUS: usize = 1;
const BR_STATUS: usize = 10;
const GEN_BUS: usize = 0;
const GEN_STATUS: usize = 7;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bus {
    pub id: u32,
    /// Active load `Pd` in MW.
    pub load_mw: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub from_bus: u32,
    pub to_bus: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub bus: u32,
}

/// In-service elements of a power system case, in file order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCase {
    pub name: String,
    pub buses: Vec<Bus>,
    pub branches: Vec<Branch>,
    pub generators: Vec<Generator>,
}

impl GridCase {
    /// Builds a case from already filtered elements and checks its invariants.
    pub fn new(
        name: impl Into<String>,
        buses: Vec<Bus>,
        branches: Vec<Branch>,
        generators: Vec<Generator>,
    ) -> Result<Self> {
        let case = Self {
            name: name.into(),
            buses,
            branches,
            generators,
        };
        case.validate()?;
        Ok(case)
    }

    pub fn validate(&self) -> Result<()> {
        let mut ids = HashSet::with_capacity(self.buses.len());
        for bus in &self.buses {
            if !ids.insert(bus.id) {
                return Err(Error::Semantic(format!("duplicate bus id {}", bus.id)));
            }
        }
        for (k, br) in self.branches.iter().enumerate() {
            for end in [br.from_bus, br.to_bus] {
                if !ids.contains(&end) {
                    return Err(Error::Semantic(format!(
                        "branch {} references unknown bus {end}",
                        k + 1
                    )));
                }
            }
            if br.from_bus == br.to_bus {
                return Err(Error::Semantic(format!(
                    "branch {} is a self-loop at bus {}",
                    k + 1,
                    br.from_bus
                )));
            }
        }
        for (k, gen) in self.generators.iter().enumerate() {
            if !ids.contains(&gen.bus) {
                return Err(Error::Semantic(format!(
                    "generator {} references unknown bus {}",
                    k + 1,
                    gen.bus
                )));
            }
        }
        Ok(())
    }

    pub fn bus_ids(&self) -> Vec<u32> {
        self.buses.iter().map(|b| b.id).collect()
    }
}

struct Row {
    line: usize,
    values: Vec<f64>,
}

/// Parses MATPOWER M-file text, dropping out-of-service branches and generators.
pub fn parse_matpower(text: &str) -> Result<GridCase> {
    let mut name = None;
    let mut blocks: BTreeMap<&'static str, (usize, Vec<Row>)> = BTreeMap::new();
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)));

    while let Some((lineno, line)) = lines.next() {
        let trimmed = line.trim();
        if name.is_none() {
            if let Some(rest) = trimmed.strip_prefix("function") {
                if let Some((_, fname)) = rest.split_once('=') {
                    name = Some(fname.trim().trim_end_matches(';').to_string());
                }
            }
        }
        let Some(field) = matrix_field(trimmed) else {
            continue;
        };
        if blocks.contains_key(field) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("duplicate mpc.{field} block"),
            });
        }
        let after_eq = trimmed.split_once('=').map(|(_, r)| r.trim()).unwrap_or("");
        let Some(body) = after_eq.strip_prefix('[') else {
            return Err(Error::Parse {
                line: lineno,
                message: format!("mpc.{field} is not a bracketed matrix"),
            });
        };

        let mut rows = Vec::new();
        let mut pending: Vec<f64> = Vec::new();
        let mut pending_line = lineno;
        let mut current = (lineno, body.to_string());
        loop {
            let (ln, content) = current;
            let (content, closed) = match content.split_once(']') {
                Some((inner, _)) => (inner.to_string(), true),
                None => (content, false),
            };
            // Rows end at ';' or at a line break.
            for (k, chunk) in content.split(';').enumerate() {
                if k > 0 {
                    flush_row(&mut rows, &mut pending, pending_line);
                }
                if pending.is_empty() {
                    pending_line = ln;
                }
                for token in chunk
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|t| !t.is_empty())
                {
                    if token == "..." {
                        continue;
                    }
                    let value = parse_number(token).ok_or_else(|| Error::Parse {
                        line: ln,
                        message: format!("non-numeric entry `{token}` in mpc.{field}"),
                    })?;
                    pending.push(value);
                }
            }
            if !content.trim_end().ends_with("...") {
                flush_row(&mut rows, &mut pending, pending_line);
            }
            if closed {
                break;
            }
            current = match lines.next() {
                Some((l, s)) => (l, s.to_string()),
                None => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("unterminated mpc.{field} matrix"),
                    })
                }
            };
        }
        blocks.insert(field, (lineno, rows));
    }

    let take = |blocks: &mut BTreeMap<&'static str, (usize, Vec<Row>)>,
                field: &'static str,
                min_cols: usize| {
        let (start, rows) = blocks.remove(field).ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("missing mpc.{field} matrix"),
        })?;
        check_shape(field, start, &rows, min_cols)?;
        Ok::<_, Error>(rows)
    };
    let bus_rows = take(&mut blocks, "bus", BUS_PD + 1)?;
    let branch_rows = take(&mut blocks, "branch", BR_STATUS + 1)?;
    let gen_rows = take(&mut blocks, "gen", GEN_STATUS + 1)?;

    let mut buses = Vec::with_capacity(bus_rows.len());
    for row in &bus_rows {
        buses.push(Bus {
            id: bus_id(row, BUS_I, "bus")?,
            load_mw: row.values[BUS_PD],
        });
    }
    let mut branches = Vec::new();
    for row in &branch_rows {
        if row.values[BR_STATUS] == 0.0 {
            continue;
        }
        branches.push(Branch {
            from_bus: bus_id(row, F_BUS, "branch")?,
            to_bus: bus_id(row, T_BUS, "branch")?,
        });
    }
    let mut generators = Vec::new();
    for row in &gen_rows {
        if row.values[GEN_STATUS] <= 0.0 {
            continue;
        }
        generators.push(Generator {
            bus: bus_id(row, GEN_BUS, "gen")?,
        });
    }

    GridCase::new(
        name.unwrap_or_else(|| "case".to_string()),
        buses,
        branches,
        generators,
    )
}

fn strip_comment(line: &str) -> &str {
    match line.find('%') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn matrix_field(line: &str) -> Option<&'static str> {
    let rest = line.strip_prefix("mpc.")?;
    let ident: &str = &rest[..rest
        .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
        .unwrap_or(rest.len())];
    let field = match ident {
        "bus" => "bus",
        "branch" => "branch",
        "gen" => "gen",
        _ => return None,
    };
    rest[ident.len()..]
        .trim_start()
        .starts_with('=')
        .then_some(field)
}

fn parse_number(token: &str) -> Option<f64> {
    match token {
        "Inf" | "inf" => Some(f64::INFINITY),
        "-Inf" | "-inf" => Some(f64::NEG_INFINITY),
        "NaN" | "nan" => Some(f64::NAN),
        _ => token.parse().ok(),
    }
}

fn flush_row(rows: &mut Vec<Row>, pending: &mut Vec<f64>, line: usize) {
    if !pending.is_empty() {
        rows.push(Row {
            line,
            values: std::mem::take(pending),
        });
    }
}

fn check_shape(field: &str, start: usize, rows: &[Row], min_cols: usize) -> Result<()> {
    let Some(first) = rows.first() else {
        return Ok(());
    };
    let width = first.values.len();
    if width < min_cols {
        return Err(Error::Parse {
            line: first.line,
            message: format!("mpc.{field} needs at least {min_cols} columns, found {width}"),
        });
    }
    if let Some(bad) = rows.iter().find(|r| r.values.len() != width) {
        return Err(Error::Parse {
            line: bad.line,
            message: format!(
                "ragged mpc.{field} matrix (block at line {start}): expected {width} columns, found {}",
                bad.values.len()
            ),
        });
    }
    Ok(())
}

fn bus_id(row: &Row, col: usize, field: &str) -> Result<u32> {
    let v = row.values[col];
    if v.fract() != 0.0 || v < 1.0 || v > u32::MAX as f64 {
        return Err(Error::Parse {
            line: row.line,
            message: format!("invalid bus number {v} in mpc.{field}"),
        });
    }
    Ok(v as u32)
}
