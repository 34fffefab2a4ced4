//! The closed forms by name, with their domains, and table output.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::contraction::{e_contract, p_formula};
use crate::induced::{e_induced, f_formula, g_formula, q_formula, MAX_E_K, MAX_F_K};

/// Most rows a single table may hold.
pub const MAX_ROWS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("{formula}({arg}) is outside the supported range {lo}..={hi}")]
    OutOfDomain {
        formula: Formula,
        arg: u64,
        lo: u64,
        hi: u64,
    },
    #[error("empty range {from}..={to}")]
    EmptyRange { from: u64, to: u64 },
    #[error("range {from}..={to} exceeds {MAX_ROWS} rows")]
    TooManyRows { from: u64, to: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Formula {
    P,
    Q,
    F,
    G,
    EContract,
    EInduced,
}

impl Formula {
    pub const ALL: [Formula; 6] = [
        Formula::P,
        Formula::Q,
        Formula::F,
        Formula::G,
        Formula::EContract,
        Formula::EInduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::P => "p",
            Formula::Q => "q",
            Formula::F => "f",
            Formula::G => "g",
            Formula::EContract => "e-contract",
            Formula::EInduced => "e-induced",
        }
    }

    /// `m` for the bounds in the number of segments, `k` otherwise.
    pub fn arg_name(self) -> &'static str {
        match self {
            Formula::P | Formula::Q => "m",
            _ => "k",
        }
    }

    pub fn domain(self) -> RangeInclusive<u64> {
        match self {
            Formula::P | Formula::Q => 1..=u64::MAX / 8,
            Formula::F => 1..=MAX_F_K as u64,
            Formula::G => 2..=MAX_E_K as u64,
            Formula::EContract => 1..=1 << 31,
            Formula::EInduced => 1..=MAX_E_K as u64,
        }
    }

    fn check(self, arg: u64) -> Result<(), TableError> {
        let d = self.domain();
        if d.contains(&arg) {
            Ok(())
        } else {
            Err(TableError::OutOfDomain {
                formula: self,
                arg,
                lo: *d.start(),
                hi: *d.end(),
            })
        }
    }

    /// Exact value; panics outside [`Formula::domain`].
    pub fn value(self, arg: u64) -> u128 {
        match self {
            Formula::P => p_formula(arg) as u128,
            Formula::Q => q_formula(arg) as u128,
            Formula::F => f_formula(arg as u32),
            Formula::G => g_formula(arg as u32),
            Formula::EContract => e_contract(arg) as u128,
            Formula::EInduced => e_induced(arg as u32),
        }
    }

    pub fn eval(self, arg: u64) -> Result<u128, TableError> {
        self.check(arg)?;
        Ok(self.value(arg))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Formula::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown formula {s:?}"))
    }
}

/// Values of `formula` over `from..=to`, as aligned text or CSV.
pub fn render_table(formula: Formula, from: u64, to: u64, csv: bool) -> Result<String, TableError> {
    if from > to {
        return Err(TableError::EmptyRange { from, to });
    }
    if to - from >= MAX_ROWS {
        return Err(TableError::TooManyRows { from, to });
    }
    formula.check(from)?;
    formula.check(to)?;
    let rows: Vec<(String, String)> = (from..=to)
        .map(|a| (a.to_string(), formula.value(a).to_string()))
        .collect();
    let header = (formula.arg_name(), formula.name());
    let mut out = String::new();
    if csv {
        out.push_str(&format!("{},{}\n", header.0, header.1));
        for (a, v) in &rows {
            out.push_str(&format!("{a},{v}\n"));
        }
    } else {
        let w0 = rows
            .iter()
            .map(|r| r.0.len())
            .chain([header.0.len()])
            .max()
            .unwrap();
        let w1 = rows
            .iter()
            .map(|r| r.1.len())
            .chain([header.1.len()])
            .max()
            .unwrap();
        out.push_str(&format!("{:>w0$}  {:>w1$}\n", header.0, header.1));
        for (a, v) in &rows {
            out.push_str(&format!("{a:>w0$}  {v:>w1$}\n"));
        }
    }
    Ok(out)
}
