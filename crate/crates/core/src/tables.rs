//! Expected `[σ,δ,γ]^κ` values for the fixed-point loci of `T_λ`, and their
//! comparison with computed records.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::groebner::{AnalysisRecord, Status};

const TABLES_JSON: &str = include_str!("../data/tables.json");

/// One printed table entry. `gamma` is `None` for an unknown degree ("??");
/// `kappa` is the printed component count and is never computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub sigma: usize,
    pub delta: i64,
    pub gamma: Option<u64>,
    pub kappa: u32,
    /// Marked as certified prime.
    pub prime: bool,
}

impl FromStr for Cell {
    type Err = Error;

    /// Parses `[σ,δ,γ]`, optionally followed by `^κ` and/or `*`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad table cell {s:?}"));
        let s = s.trim();
        let (body, rest) = s
            .strip_prefix('[')
            .and_then(|t| t.split_once(']'))
            .ok_or_else(bad)?;
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(bad());
        }
        let sigma = fields[0].parse().map_err(|_| bad())?;
        let delta = fields[1].parse().map_err(|_| bad())?;
        let gamma = match fields[2] {
            "??" => None,
            g => Some(g.parse().map_err(|_| bad())?),
        };
        let prime = rest.contains('*');
        let rest = rest.replace('*', "");
        let kappa = match rest.trim().strip_prefix('^') {
            Some(k) => k.parse().map_err(|_| bad())?,
            None if rest.trim().is_empty() => 1,
            None => return Err(bad()),
        };
        Ok(Cell {
            sigma,
            delta,
            gamma,
            kappa,
            prime,
        })
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},", self.sigma, self.delta)?;
        match self.gamma {
            Some(g) => write!(f, "{g}]")?,
            None => write!(f, "??]")?,
        }
        if self.kappa != 1 {
            write!(f, "^{}", self.kappa)?;
        }
        if self.prime {
            write!(f, "*")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Deserialize)]
struct RawRow {
    lambda: Partition,
    cells: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
struct RawTable {
    name: String,
    ls: Vec<usize>,
    rows: Vec<RawRow>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Erratum {
    pub lambda: Partition,
    pub l: usize,
    pub printed_sigma: usize,
    pub sigma: usize,
    pub note: String,
}

#[derive(Clone, Debug, Deserialize)]
struct RawData {
    tables: Vec<RawTable>,
    errata: Vec<Erratum>,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    pub lambda: Partition,
    pub cells: Vec<Cell>,
}

#[derive(Clone, Debug)]
pub struct Table {
    pub name: String,
    pub ls: Vec<usize>,
    pub rows: Vec<TableRow>,
}

impl Table {
    pub fn cell(&self, lambda: &Partition, l: usize) -> Option<&Cell> {
        let col = self.ls.iter().position(|&x| x == l)?;
        self.rows.iter().find(|r| &r.lambda == lambda).map(|r| &r.cells[col])
    }
}

/// The expectation for one `(λ, l)`: the printed cell, and the corrected
/// `σ` where the printed one is a known misprint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub cell: Cell,
    pub erratum: Option<Erratum>,
}

impl Expected {
    pub fn sigma(&self) -> usize {
        self.erratum.as_ref().map_or(self.cell.sigma, |e| e.sigma)
    }
}

#[derive(Clone, Debug)]
pub struct Expectations {
    pub tables: Vec<Table>,
    pub errata: Vec<Erratum>,
}

impl Expectations {
    pub fn parse(json: &str) -> Result<Self> {
        let raw: RawData = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        let mut tables = Vec::new();
        for t in raw.tables {
            let mut rows = Vec::new();
            for r in t.rows {
                if r.cells.len() != t.ls.len() {
                    return Err(Error::Parse(format!("row {} of {} has the wrong width", r.lambda, t.name)));
                }
                let cells = r.cells.iter().map(|c| c.parse()).collect::<Result<_>>()?;
                rows.push(TableRow {
                    lambda: r.lambda,
                    cells,
                });
            }
            tables.push(Table {
                name: t.name,
                ls: t.ls,
                rows,
            });
        }
        Ok(Expectations {
            tables,
            errata: raw.errata,
        })
    }

    /// The data shipped with the crate.
    pub fn embedded() -> &'static Expectations {
        static DATA: OnceLock<Expectations> = OnceLock::new();
        DATA.get_or_init(|| Expectations::parse(TABLES_JSON).expect("embedded tables parse"))
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn expected(&self, lambda: &Partition, l: usize) -> Option<Expected> {
        let cell = *self.tables.iter().find_map(|t| t.cell(lambda, l))?;
        let erratum = self
            .errata
            .iter()
            .find(|e| &e.lambda == lambda && e.l == l)
            .cloned();
        Some(Expected { cell, erratum })
    }

    /// Row order of the printed table containing partitions of `n`, if any.
    pub fn row_order(&self, n: usize) -> Option<Vec<Partition>> {
        let rows: Vec<Partition> = self
            .tables
            .iter()
            .flat_map(|t| t.rows.iter())
            .filter(|r| r.lambda.size() == n)
            .map(|r| r.lambda.clone())
            .collect();
        (!rows.is_empty()).then_some(rows)
    }

    /// All `l` with a printed entry for partitions of `n`.
    pub fn ls(&self, n: usize) -> Vec<usize> {
        let mut ls: Vec<usize> = self
            .tables
            .iter()
            .filter(|t| t.rows.iter().any(|r| r.lambda.size() == n))
            .flat_map(|t| t.ls.iter().copied())
            .collect();
        ls.sort_unstable();
        ls.dedup();
        ls
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
    Unlisted,
}

/// Compares a record with its expectation. `κ` is never compared; an
/// unknown printed degree compares only `σ` and `δ`.
pub fn judge(record: &AnalysisRecord, expected: Option<&Expected>) -> Verdict {
    let Some(e) = expected else {
        return Verdict::Unlisted;
    };
    if record.sigma != e.sigma() {
        return Verdict::Fail;
    }
    if record.status == Status::Incomplete {
        return Verdict::Skipped;
    }
    match record.delta {
        None => Verdict::Pass,
        Some(d) if d != e.cell.delta => Verdict::Fail,
        Some(_) => match (record.gamma, e.cell.gamma) {
            (Some(g), Some(h)) if g != h => Verdict::Fail,
            _ => Verdict::Pass,
        },
    }
}
