use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rblab::cli::{
    self, Config, ConjectureKind, CountSelection, ExitStatus, Format, OperatorClass, RunReport,
    Theorem3Options,
};
use rblab::{Error, Rational, Result};

/// Rota-Baxter operators on a direct sum of fields.
#[derive(Parser, Debug)]
#[command(name = "rblab", version)]
struct Args {
    /// Dimension (or largest dimension for count / conjecture).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Cost guard on n for labelled enumeration.
    #[arg(long, global = true, env = "RBLAB_MAX_N", default_value_t = cli::DEFAULT_MAX_N)]
    max_n: usize,
    /// Weight as p or p/q.
    #[arg(long, global = true, default_value = "1")]
    weight: Rational,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for sampling mode.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Ignore cost guards.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Stream every operator of a class.
    Enumerate {
        #[arg(long, value_enum, default_value_t = OperatorClass::All)]
        class: OperatorClass,
    },
    /// Brute-force scan compared with the enumeration.
    Oracle,
    /// Class counts for n = 1..N.
    Count {
        #[arg(long)]
        labeled: bool,
        #[arg(long)]
        unlabeled: bool,
    },
    /// Compare splitting counts with the conjectured values.
    Conjecture {
        #[arg(value_enum)]
        which: ConjectureKind,
    },
    /// Check the identity and the structure conditions of an operator file.
    Verify { file: PathBuf },
    /// Splitting verdicts and tree of an operator file.
    Classify { file: PathBuf },
    /// Operator file to coloured tree.
    Tree { file: PathBuf },
    /// Coloured tree file to operator.
    Matrix { file: PathBuf },
    /// Certify that the induced algebra is again a sum of fields.
    Theorem3 {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Exhaustive even above the guard (with --force).
        #[arg(long)]
        exhaustive: bool,
        /// One certificate per line.
        #[arg(long)]
        certificates: Option<PathBuf>,
    },
}

fn need_n(n: Option<usize>) -> Result<usize> {
    n.ok_or_else(|| Error::InvalidInput("--n is required for this command".into()))
}

fn read(path: &PathBuf) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn open_out(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Returns the report and whether the main output was already written (the
/// report then goes to stderr).
fn run(args: &Args, cfg: &Config) -> Result<(RunReport, bool)> {
    let mut out = open_out(&args.out)?;
    let streamed = matches!(
        args.command,
        Command::Enumerate { .. } | Command::Tree { .. } | Command::Matrix { .. }
    );
    let report = match &args.command {
        Command::Enumerate { class } => cli::cmd_enumerate(need_n(args.n)?, *class, cfg, &mut out)?,
        Command::Oracle => cli::cmd_oracle(need_n(args.n)?, cfg)?,
        Command::Count { labeled, unlabeled } => {
            let selection = if !labeled && !unlabeled {
                CountSelection {
                    labeled: true,
                    unlabeled: true,
                }
            } else {
                CountSelection {
                    labeled: *labeled,
                    unlabeled: *unlabeled,
                }
            };
            cli::cmd_count(need_n(args.n)?, selection, cfg)?
        }
        Command::Conjecture { which } => cli::cmd_conjecture(*which, need_n(args.n)?, cfg)?,
        Command::Verify { file } => cli::cmd_verify(&read(file)?, cfg)?,
        Command::Classify { file } => cli::cmd_classify(&read(file)?, cfg)?,
        Command::Tree { file } => cli::cmd_tree(&read(file)?, cfg, &mut out)?,
        Command::Matrix { file } => cli::cmd_matrix(&read(file)?, cfg, &mut out)?,
        Command::Theorem3 {
            samples,
            exhaustive,
            certificates,
        } => {
            let opts = Theorem3Options {
                samples: *samples,
                exhaustive: *exhaustive,
            };
            let mut cert_out = match certificates {
                Some(p) => Some(BufWriter::new(File::create(p)?)),
                None => None,
            };
            let r = cli::cmd_theorem3(
                need_n(args.n)?,
                opts,
                cfg,
                cert_out.as_mut().map(|w| w as &mut dyn Write),
            )?;
            if let Some(mut w) = cert_out {
                w.flush()?;
            }
            r
        }
    };
    if !streamed {
        report.render(cfg.format, &mut out)?;
    }
    out.flush()?;
    Ok((report, streamed))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                ExitStatus::ParseFailure.code() as u8
            } else {
                0
            });
        }
    };
    let cfg = Config {
        jobs: args.jobs,
        max_n: args.max_n,
        force: args.force,
        format: args.format,
        weight: args.weight.clone(),
        seed: args.seed,
    };
    match run(&args, &cfg) {
        Ok((report, streamed)) => {
            if streamed {
                let _ = report.render(Format::Json, &mut io::stderr().lock());
            }
            eprintln!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
            ExitCode::from(report.status().code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(ExitStatus::for_error(&e).code() as u8)
        }
    }
}
