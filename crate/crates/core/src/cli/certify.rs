use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{Config, ExitStatus, RunReport, THEOREM3_EXHAUSTIVE_MAX_N};
use crate::bijection::{tree_to_matrix, RBTreeForm};
use crate::error::{Error, Result};
use crate::induced::{certify, CertificationReport};
use crate::rbcore::OperatorFile;
use crate::trees::{
    colorings, labeled_rooted_trees_part, prufer_decode, tree_partition_count, ColoredRootedTree,
};

/// Largest `n` for sampling mode without `--force`.
pub const THEOREM3_SAMPLE_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug)]
pub struct Theorem3Options {
    /// Operators drawn in sampling mode.
    pub samples: usize,
    /// Certify every operator even above the exhaustive guard (needs `force`).
    pub exhaustive: bool,
}

impl Default for Theorem3Options {
    fn default() -> Self {
        Theorem3Options {
            samples: 1000,
            exhaustive: false,
        }
    }
}

fn sample_trees(n: usize, count: usize, seed: u64) -> Vec<ColoredRootedTree> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let seq: Vec<usize> = (0..n - 1).map(|_| rng.gen_range(0..=n)).collect();
            let mask: u64 = rng.gen_range(0..1u64 << n);
            ColoredRootedTree::from_mask(prufer_decode(n, &seq).expect("valid sequence"), mask)
        })
        .collect()
}

/// Builds an idempotent basis for the induced product of every operator on
/// `F^n` (or a seeded sample for larger `n`) and checks it. Certificates go
/// to `certificates` as one JSON object per line.
pub fn cmd_theorem3(
    n: usize,
    opts: Theorem3Options,
    cfg: &Config,
    certificates: Option<&mut dyn Write>,
) -> Result<RunReport> {
    let start = Instant::now();
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if cfg.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let exhaustive = n <= THEOREM3_EXHAUSTIVE_MAX_N || opts.exhaustive;
    if exhaustive {
        cfg.guard("theorem3 (exhaustive)", n, THEOREM3_EXHAUSTIVE_MAX_N)?;
    } else {
        cfg.guard("theorem3 (sampling)", n, THEOREM3_SAMPLE_MAX_N)?;
    }

    let weight = &cfg.weight;
    let run = |t: ColoredRootedTree| -> Result<CertificationReport> {
        certify(&tree_to_matrix(&RBTreeForm {
            tree: t,
            weight: weight.clone(),
        }))
    };
    let reports: Vec<CertificationReport> = if exhaustive {
        let parts: Vec<Vec<Result<CertificationReport>>> = cfg.install(|| {
            (0..tree_partition_count(n))
                .into_par_iter()
                .map(|part| {
                    labeled_rooted_trees_part(n, part)
                        .flat_map(|t| colorings(&t).collect::<Vec<_>>())
                        .map(run)
                        .collect()
                })
                .collect()
        })?;
        parts.into_iter().flatten().collect::<Result<_>>()?
    } else {
        let trees = sample_trees(n, opts.samples, cfg.seed);
        cfg.install(|| trees.into_par_iter().map(run).collect::<Result<Vec<_>>>())??
    };

    if let Some(out) = certificates {
        for r in &reports {
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
    }

    let failed: Vec<&CertificationReport> = reports.iter().filter(|r| !r.certified).collect();
    let mut report = RunReport::new("theorem3")
        .param("n", n)
        .param("weight", weight)
        .param("mode", if exhaustive { "exhaustive" } else { "sampling" });
    if !exhaustive {
        report = report
            .param("samples", opts.samples)
            .param("seed", cfg.seed);
    }
    report.failure = ExitStatus::ValidationFailure;
    for r in failed.iter().take(5) {
        report
            .mismatches
            .push(format!("no certificate for {}", json!(r.matrix)));
    }
    if failed.len() > 5 {
        report
            .mismatches
            .push(format!("{} further failures", failed.len() - 5));
    }
    report.results = json!({
        "operators": reports.len(),
        "certified": reports.len() - failed.len(),
        "failed": failed.len(),
        "first_failure": failed.first().map(|r| OperatorFile {
            n: r.n,
            weight: weight.clone(),
            matrix: r.matrix.clone(),
        }),
    });
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rational;

    #[test]
    fn small_exhaustive_runs() {
        let cfg = Config::default();
        for (n, total) in [(1, 2), (2, 12), (3, 128)] {
            let r = cmd_theorem3(n, Theorem3Options::default(), &cfg, None).unwrap();
            assert_eq!(r.results["operators"], total);
            assert_eq!(r.results["certified"], total);
            assert_eq!(r.status(), ExitStatus::Success);
        }
    }

    #[test]
    fn sampling_is_seeded() {
        let cfg = Config {
            seed: 7,
            weight: Rational::new(-3, 2).unwrap(),
            ..Config::default()
        };
        let opts = Theorem3Options {
            samples: 20,
            exhaustive: false,
        };
        let mut a = Vec::new();
        let mut b = Vec::new();
        let r = cmd_theorem3(5, opts, &cfg, Some(&mut a)).unwrap();
        cmd_theorem3(
            5,
            opts,
            &Config {
                jobs: 3,
                ..cfg.clone()
            },
            Some(&mut b),
        )
        .unwrap();
        assert_eq!(r.results["certified"], 20);
        assert_eq!(a, b);
        assert!(cmd_theorem3(7, opts, &cfg, None).is_err());
    }
}
