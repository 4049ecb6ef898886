//! Command implementations behind the `rblab` binary.
//!
//! Each command returns a [`RunReport`]; commands that stream objects
//! (`enumerate`, `tree`, `matrix`) write them to the supplied writer. Reports
//! never contain timings, so identical flags give byte-identical output.

mod certify;
mod counting;
mod enumerate;
mod files;
pub mod reference;

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactlin::Rational;
use crate::trees::ColoredRootedTree;

pub use certify::{cmd_theorem3, Theorem3Options};
pub use counting::{
    cmd_conjecture, cmd_count, labeled_class_counts, unlabeled_class_counts, ClassCounts,
    ConjectureKind, CountSelection,
};
pub use enumerate::{cmd_enumerate, cmd_oracle, enumerate_operators, oracle_scan};
pub use files::{cmd_classify, cmd_matrix, cmd_tree, cmd_verify};

/// Default cost guard on `n` for labelled enumeration.
pub const DEFAULT_MAX_N: usize = 7;
/// Largest `n` accepted by the brute-force oracle without `--force`.
pub const ORACLE_MAX_N: usize = 4;
/// Largest `n` for which unlabelled classes are counted by canonical codes.
pub const CODE_COUNT_MAX_N: usize = 7;
/// Largest `n` for the unlabelled recurrences.
pub const RECURRENCE_MAX_N: usize = 64;
/// Largest `n` certified exhaustively without `--force`.
pub const THEOREM3_EXHAUSTIVE_MAX_N: usize = 4;

/// Printed with every conjecture report.
pub const CONJECTURE_DISCLAIMER: &str =
    "The closed forms compared here are conjectures: agreement \
for the listed n is evidence, not a proof.";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Operator classes used by filters and counting tables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorClass {
    All,
    Splitting,
    InnerSplitting,
    NonSplitting,
}

impl OperatorClass {
    pub const ALL: [OperatorClass; 4] = [
        OperatorClass::All,
        OperatorClass::Splitting,
        OperatorClass::InnerSplitting,
        OperatorClass::NonSplitting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OperatorClass::All => "all",
            OperatorClass::Splitting => "splitting",
            OperatorClass::InnerSplitting => "inner-splitting",
            OperatorClass::NonSplitting => "non-splitting",
        }
    }

    /// Whether an operator with the given coloured tree belongs to the class,
    /// using the colouring criteria (proper ⇔ splitting, alternating ⇔
    /// inner-splitting).
    pub fn contains(self, tree: &ColoredRootedTree) -> bool {
        match self {
            OperatorClass::All => true,
            OperatorClass::Splitting => tree.is_properly_colored(),
            OperatorClass::InnerSplitting => tree.is_alternating(),
            OperatorClass::NonSplitting => !tree.is_properly_colored(),
        }
    }
}

/// Process exit codes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExitStatus {
    Success = 0,
    /// Unreadable input or bad arguments.
    ParseFailure = 1,
    ValidationFailure = 2,
    ReferenceMismatch = 3,
    ConjectureDivergence = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    pub fn for_error(err: &Error) -> ExitStatus {
        if err.is_parse_error() {
            ExitStatus::ParseFailure
        } else {
            ExitStatus::ValidationFailure
        }
    }
}

/// Settings shared by all commands.
#[derive(Clone, Debug)]
pub struct Config {
    pub jobs: usize,
    pub max_n: usize,
    pub force: bool,
    pub format: Format,
    pub weight: Rational,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            jobs: 1,
            max_n: DEFAULT_MAX_N,
            force: false,
            format: Format::Json,
            weight: Rational::one(),
            seed: 0,
        }
    }
}

impl Config {
    /// Runs `f` inside a rayon pool with `jobs` threads.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs.max(1))
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot start worker pool: {e}")))?;
        Ok(pool.install(f))
    }

    fn guard(&self, what: &str, n: usize, limit: usize) -> Result<()> {
        if n > limit && !self.force {
            return Err(Error::InvalidInput(format!(
                "{what}: n = {n} exceeds the guard {limit}; pass --force to run anyway"
            )));
        }
        Ok(())
    }
}

/// A simple CSV-renderable table.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// Outcome of one command. `mismatches` is empty exactly when the run
/// succeeded; otherwise `failure` says which exit code applies.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Value,
    pub table: Option<Table>,
    pub mismatches: Vec<String>,
    pub failure: ExitStatus,
    pub elapsed: Duration,
}

impl RunReport {
    fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Value::Null,
            table: None,
            mismatches: Vec::new(),
            failure: ExitStatus::ValidationFailure,
            elapsed: Duration::ZERO,
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn status(&self) -> ExitStatus {
        if self.mismatches.is_empty() {
            ExitStatus::Success
        } else {
            self.failure
        }
    }

    /// Writes the report in the requested format. CSV is available for
    /// commands that produce a table.
    pub fn render(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Json => {
                #[derive(Serialize)]
                struct Rendered<'a> {
                    command: &'a str,
                    parameters: &'a BTreeMap<String, String>,
                    results: &'a Value,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    table: Option<&'a Table>,
                    mismatches: &'a [String],
                    status: ExitStatus,
                }
                let r = Rendered {
                    command: &self.command,
                    parameters: &self.parameters,
                    results: &self.results,
                    table: self.table.as_ref(),
                    mismatches: &self.mismatches,
                    status: self.status(),
                };
                serde_json::to_writer_pretty(&mut *out, &r)?;
                writeln!(out)?;
            }
            Format::Csv => {
                let table = self.table.as_ref().ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "--format csv is not available for `{}`",
                        self.command
                    ))
                })?;
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&table.header)?;
                for row in &table.rows {
                    w.write_record(row)?;
                }
                w.flush()?;
            }
        }
        Ok(())
    }

    pub fn to_string(&self, format: Format) -> Result<String> {
        let mut buf = Vec::new();
        self.render(format, &mut buf)?;
        Ok(String::from_utf8(buf).expect("reports are UTF-8"))
    }
}

fn to_value<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report values serialise")
}
