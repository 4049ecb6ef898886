use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::{
    reference, to_value, Config, ExitStatus, OperatorClass, RunReport, Table, CODE_COUNT_MAX_N,
    CONJECTURE_DISCLAIMER, RECURRENCE_MAX_N,
};
use crate::error::{Error, Result};
use crate::trees::{
    cayley_count, colorings, count_splitting_labeled_fast, count_unlabeled_all,
    count_unlabeled_alternating, count_unlabeled_proper, labeled_rooted_trees_part,
    tree_partition_count, unlabeled_rooted_trees, ColoringTally, RootedTree,
};

/// Per-class counts for one `n`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug, Serialize)]
pub struct ClassCounts {
    pub all: u64,
    pub splitting: u64,
    pub inner_splitting: u64,
    pub non_splitting: u64,
}

impl ClassCounts {
    pub fn get(&self, class: OperatorClass) -> u64 {
        match class {
            OperatorClass::All => self.all,
            OperatorClass::Splitting => self.splitting,
            OperatorClass::InnerSplitting => self.inner_splitting,
            OperatorClass::NonSplitting => self.non_splitting,
        }
    }
}

/// Labelled counts by running through every tree and every colouring.
pub fn labeled_class_counts(n: usize, cfg: &Config) -> Result<ClassCounts> {
    let tallies: Vec<ColoringTally> = cfg.install(|| {
        (0..tree_partition_count(n))
            .into_par_iter()
            .map(|part| {
                labeled_rooted_trees_part(n, part).fold(ColoringTally::default(), |mut acc, t| {
                    let x = ColoringTally::of_tree(&t);
                    acc.all += x.all;
                    acc.proper += x.proper;
                    acc.alternating += x.alternating;
                    acc
                })
            })
            .collect()
    })?;
    let mut c = ClassCounts::default();
    for t in tallies {
        c.all += t.all;
        c.splitting += t.proper;
        c.inner_splitting += t.alternating;
    }
    c.non_splitting = c.all - c.splitting;
    Ok(c)
}

/// Unlabelled counts: distinct canonical codes of coloured trees, taken over
/// all colourings of one representative per tree shape.
pub fn unlabeled_class_counts(n: usize, cfg: &Config) -> Result<ClassCounts> {
    let shapes = unlabeled_rooted_trees(n);
    let per_shape: Vec<[BTreeSet<String>; 3]> = cfg.install(|| {
        shapes
            .par_iter()
            .map(|t: &RootedTree| {
                let mut sets: [BTreeSet<String>; 3] = Default::default();
                for c in colorings(t) {
                    let code = c.canonical_code().as_str().to_string();
                    if c.is_properly_colored() {
                        sets[1].insert(code.clone());
                    }
                    if c.is_alternating() {
                        sets[2].insert(code.clone());
                    }
                    sets[0].insert(code);
                }
                sets
            })
            .collect()
    })?;
    let mut merged: [BTreeSet<String>; 3] = Default::default();
    for sets in per_shape {
        for (m, s) in merged.iter_mut().zip(sets) {
            m.extend(s);
        }
    }
    let all = merged[0].len() as u64;
    let splitting = merged[1].len() as u64;
    Ok(ClassCounts {
        all,
        splitting,
        inner_splitting: merged[2].len() as u64,
        non_splitting: all - splitting,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct CountSelection {
    pub labeled: bool,
    pub unlabeled: bool,
}

#[derive(Serialize)]
struct CountEntry {
    n: usize,
    class: OperatorClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    labeled: Option<Sources>,
    #[serde(skip_serializing_if = "Option::is_none")]
    unlabeled: Option<Sources>,
}

/// One count from up to three independent sources.
#[derive(Serialize)]
struct Sources {
    enumerated: Option<String>,
    formula: Option<String>,
    reference: Option<u64>,
}

impl Sources {
    fn disagreements(&self) -> Vec<String> {
        let mut seen: Vec<(&str, String)> = Vec::new();
        if let Some(e) = &self.enumerated {
            seen.push(("enumeration", e.clone()));
        }
        if let Some(f) = &self.formula {
            seen.push(("formula", f.clone()));
        }
        if let Some(r) = self.reference {
            seen.push(("reference", r.to_string()));
        }
        let mut out = Vec::new();
        for w in seen.windows(2) {
            if w[0].1 != w[1].1 {
                out.push(format!("{} {} vs {} {}", w[0].0, w[0].1, w[1].0, w[1].1));
            }
        }
        out
    }

    fn best(&self) -> String {
        self.enumerated
            .clone()
            .or_else(|| self.formula.clone())
            .unwrap_or_default()
    }
}

fn labeled_formula(class: OperatorClass, n: usize) -> BigUint {
    let two = BigUint::from(2u32);
    match class {
        OperatorClass::All => two.pow(n as u32) * cayley_count(n),
        OperatorClass::Splitting => count_splitting_labeled_fast(n),
        OperatorClass::InnerSplitting => two * cayley_count(n),
        OperatorClass::NonSplitting => {
            labeled_formula(OperatorClass::All, n) - count_splitting_labeled_fast(n)
        }
    }
}

fn unlabeled_recurrence(class: OperatorClass, n: usize) -> BigUint {
    match class {
        OperatorClass::All => count_unlabeled_all(n),
        OperatorClass::Splitting => count_unlabeled_proper(n),
        OperatorClass::InnerSplitting => count_unlabeled_alternating(n),
        OperatorClass::NonSplitting => count_unlabeled_all(n) - count_unlabeled_proper(n),
    }
}

/// Counts every class for `n = 1..=n_max`, labelled (trees × colourings,
/// against closed forms) and/or unlabelled (canonical codes, against
/// recurrences), and compares with the reference tables.
pub fn cmd_count(n_max: usize, selection: CountSelection, cfg: &Config) -> Result<RunReport> {
    let start = Instant::now();
    if n_max == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if selection.labeled {
        cfg.guard("count (labeled)", n_max, cfg.max_n)?;
    }
    if selection.unlabeled {
        cfg.guard("count (unlabeled)", n_max, RECURRENCE_MAX_N)?;
    }
    let code_limit = if cfg.force { n_max } else { CODE_COUNT_MAX_N };

    let mut report = RunReport::new("count")
        .param("n_max", n_max)
        .param("labeled", selection.labeled)
        .param("unlabeled", selection.unlabeled);
    report.failure = ExitStatus::ReferenceMismatch;
    let mut entries = Vec::new();
    let mut table = Table {
        header: ["n", "class", "labeled_count", "unlabeled_count"]
            .map(String::from)
            .to_vec(),
        rows: Vec::new(),
    };

    for n in 1..=n_max {
        let labeled = if selection.labeled {
            Some(labeled_class_counts(n, cfg)?)
        } else {
            None
        };
        let unlabeled = if selection.unlabeled && n <= code_limit {
            Some(unlabeled_class_counts(n, cfg)?)
        } else {
            None
        };
        for class in OperatorClass::ALL {
            let lab = selection.labeled.then(|| Sources {
                enumerated: labeled.map(|c| c.get(class).to_string()),
                formula: Some(labeled_formula(class, n).to_string()),
                reference: reference::labeled(class, n),
            });
            let unl = selection.unlabeled.then(|| Sources {
                enumerated: unlabeled.map(|c| c.get(class).to_string()),
                formula: Some(unlabeled_recurrence(class, n).to_string()),
                reference: reference::unlabeled(class, n),
            });
            for (kind, src) in [("labeled", &lab), ("unlabeled", &unl)] {
                if let Some(s) = src {
                    for d in s.disagreements() {
                        report
                            .mismatches
                            .push(format!("n={n} {} {kind}: {d}", class.name()));
                    }
                }
            }
            table.rows.push(vec![
                n.to_string(),
                class.name().to_string(),
                lab.as_ref().map(Sources::best).unwrap_or_default(),
                unl.as_ref().map(Sources::best).unwrap_or_default(),
            ]);
            entries.push(CountEntry {
                n,
                class,
                labeled: lab,
                unlabeled: unl,
            });
        }
    }
    report.results = to_value(&entries);
    report.table = Some(table);
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum ConjectureKind {
    SplittingLabeled,
    SplittingUnlabeled,
}

#[derive(Serialize)]
struct ConjectureRow {
    n: usize,
    computed: String,
    cross_check: String,
    conjectured: Option<String>,
    verdict: &'static str,
}

/// Tests the conjectured splitting counts: labelled against `2(n+2)^(n-1)`,
/// unlabelled against the tabulated candidate sequence values.
pub fn cmd_conjecture(kind: ConjectureKind, n_max: usize, cfg: &Config) -> Result<RunReport> {
    let start = Instant::now();
    if n_max == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let mut report = RunReport::new("conjecture").param("n_max", n_max);
    let mut rows = Vec::new();
    let mut diverged = false;
    let mut inconsistent = false;
    match kind {
        ConjectureKind::SplittingLabeled => {
            cfg.guard("conjecture splitting-labeled", n_max, cfg.max_n)?;
            report = report.param("which", "splitting-labeled");
            for n in 1..=n_max {
                let fast = count_splitting_labeled_fast(n);
                let tally = BigUint::from(labeled_class_counts(n, cfg)?.splitting);
                let formula = BigUint::from(2u32) * BigUint::from(n + 2).pow(n as u32 - 1);
                inconsistent |= fast != tally;
                let agrees = fast == formula;
                diverged |= !agrees;
                rows.push(ConjectureRow {
                    n,
                    computed: fast.to_string(),
                    cross_check: tally.to_string(),
                    conjectured: Some(formula.to_string()),
                    verdict: if agrees { "AGREES" } else { "DIVERGES" },
                });
            }
        }
        ConjectureKind::SplittingUnlabeled => {
            let limit = if cfg.force {
                cfg.max_n.max(n_max)
            } else {
                CODE_COUNT_MAX_N
            };
            cfg.guard("conjecture splitting-unlabeled", n_max, limit)?;
            report = report.param("which", "splitting-unlabeled");
            for n in 1..=n_max {
                let codes = BigUint::from(unlabeled_class_counts(n, cfg)?.splitting);
                let recurrence = count_unlabeled_proper(n);
                inconsistent |= codes != recurrence;
                let candidate = reference::unlabeled(OperatorClass::Splitting, n);
                let verdict = match candidate {
                    Some(v) if BigUint::from(v) == codes => "AGREES",
                    Some(_) => {
                        diverged = true;
                        "DIVERGES"
                    }
                    None => "NO-REFERENCE",
                };
                rows.push(ConjectureRow {
                    n,
                    computed: codes.to_string(),
                    cross_check: recurrence.to_string(),
                    conjectured: candidate.map(|v| v.to_string()),
                    verdict,
                });
            }
        }
    }
    if inconsistent {
        report.failure = ExitStatus::ReferenceMismatch;
        report
            .mismatches
            .push("independent splitting counts disagree with each other".into());
    } else if diverged {
        report.failure = ExitStatus::ConjectureDivergence;
    }
    for r in rows.iter().filter(|r| r.verdict == "DIVERGES") {
        report.mismatches.push(format!(
            "n={}: computed {} but conjectured {}",
            r.n,
            r.computed,
            r.conjectured.as_deref().unwrap_or("-")
        ));
    }
    report.table = Some(Table {
        header: ["n", "computed", "cross_check", "conjectured", "verdict"]
            .map(String::from)
            .to_vec(),
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.n.to_string(),
                    r.computed.clone(),
                    r.cross_check.clone(),
                    r.conjectured.clone().unwrap_or_default(),
                    r.verdict.to_string(),
                ]
            })
            .collect(),
    });
    report.results = json!({ "disclaimer": CONJECTURE_DISCLAIMER, "rows": to_value(&rows) });
    report.elapsed = start.elapsed();
    Ok(report)
}
