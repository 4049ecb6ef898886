use std::collections::BTreeSet;
use std::io::Write;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::json;

use super::{
    reference, to_value, Config, ExitStatus, Format, OperatorClass, RunReport, ORACLE_MAX_N,
};
use crate::bijection::{tree_to_matrix, RBTreeForm};
use crate::error::{Error, Result};
use crate::exactlin::Rational;
use crate::rbcore::{OperatorFile, RBOperator};
use crate::trees::{
    cayley_count, colorings, labeled_rooted_trees, labeled_rooted_trees_part, tree_partition_count,
    ColoredRootedTree, RootedTree,
};

/// Every operator of the given class on `F^n` with the given weight, in the
/// deterministic tree-side order (Prüfer order, then colour mask).
pub fn enumerate_operators(n: usize, weight: &Rational, class: OperatorClass) -> Vec<RBOperator> {
    let mut out = Vec::new();
    for t in labeled_rooted_trees(n) {
        for c in colorings(&t) {
            if class.contains(&c) {
                out.push(tree_to_matrix(&RBTreeForm {
                    tree: c,
                    weight: weight.clone(),
                }));
            }
        }
    }
    out
}

fn finest_class(t: &ColoredRootedTree) -> OperatorClass {
    if t.is_alternating() {
        OperatorClass::InnerSplitting
    } else if t.is_properly_colored() {
        OperatorClass::Splitting
    } else {
        OperatorClass::NonSplitting
    }
}

fn csv_row(t: &ColoredRootedTree, op: &RBOperator) -> Vec<String> {
    let join = |it: &mut dyn Iterator<Item = String>, sep: &str| it.collect::<Vec<_>>().join(sep);
    vec![
        op.n().to_string(),
        op.weight().to_string(),
        finest_class(t).name().to_string(),
        join(&mut t.tree().parents().iter().map(usize::to_string), " "),
        t.colors()
            .iter()
            .map(|c| match c {
                crate::trees::Color::White => 'w',
                crate::trees::Color::Black => 'b',
            })
            .collect(),
        join(
            &mut (0..op.n()).map(|i| {
                op.matrix()
                    .row(i)
                    .iter()
                    .map(Rational::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }),
            ";",
        ),
    ]
}

enum Rendered {
    Json(String),
    Csv(Vec<String>),
}

fn render_tree(
    t: &RootedTree,
    weight: &Rational,
    class: OperatorClass,
    format: Format,
) -> Vec<Rendered> {
    colorings(t)
        .filter(|c| class.contains(c))
        .map(|c| {
            let op = tree_to_matrix(&RBTreeForm {
                tree: c.clone(),
                weight: weight.clone(),
            });
            match format {
                Format::Json => Rendered::Json(
                    serde_json::to_string(&OperatorFile::from(&op)).expect("operators serialise"),
                ),
                Format::Csv => Rendered::Csv(csv_row(&c, &op)),
            }
        })
        .collect()
}

/// Streams every operator of `class` on `F^n` to `out`: one operator JSON
/// object per line, or CSV rows `n,weight,class,parent,color,matrix`.
pub fn cmd_enumerate(
    n: usize,
    class: OperatorClass,
    cfg: &Config,
    out: &mut dyn Write,
) -> Result<RunReport> {
    let start = Instant::now();
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    cfg.guard("enumerate", n, cfg.max_n)?;
    if cfg.weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    enum Sink<'a> {
        Json(&'a mut dyn Write),
        Csv(Box<csv::Writer<&'a mut dyn Write>>),
    }
    let mut sink = match cfg.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "weight", "class", "parent", "color", "matrix"])?;
            Sink::Csv(Box::new(w))
        }
        Format::Json => Sink::Json(out),
    };
    let mut count: u64 = 0;
    for part in 0..tree_partition_count(n) {
        let trees: Vec<RootedTree> = labeled_rooted_trees_part(n, part).collect();
        let rendered: Vec<Vec<Rendered>> = cfg.install(|| {
            trees
                .par_iter()
                .map(|t| render_tree(t, &cfg.weight, class, cfg.format))
                .collect()
        })?;
        for item in rendered.into_iter().flatten() {
            count += 1;
            match (item, &mut sink) {
                (Rendered::Csv(row), Sink::Csv(w)) => w.write_record(&row)?,
                (Rendered::Json(line), Sink::Json(w)) => writeln!(w, "{line}")?,
                _ => unreachable!("rendering follows the configured format"),
            }
        }
    }
    match sink {
        Sink::Csv(mut w) => w.flush()?,
        Sink::Json(w) => w.flush()?,
    }

    let mut report = RunReport::new("enumerate")
        .param("n", n)
        .param("class", class.name())
        .param("weight", &cfg.weight);
    report.failure = ExitStatus::ReferenceMismatch;
    let expected = match class {
        OperatorClass::All => Some(BigUint::from(2u32).pow(n as u32) * cayley_count(n)),
        _ => reference::labeled(class, n).map(BigUint::from),
    };
    if let Some(e) = &expected {
        if *e != BigUint::from(count) {
            report
                .mismatches
                .push(format!("enumerated {count} operators, expected {e}"));
        }
    }
    report.results = json!({
        "count": count,
        "expected": expected.map(|e| e.to_string()),
    });
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Brute force over all weight-1 candidate matrices with diagonal in
/// `{0, -1}` and off-diagonal entries in `{0, ±1}`, keeping those that
/// satisfy the Rota-Baxter identity. Keys are row-major integer entries.
pub fn oracle_scan(n: usize, cfg: &Config) -> Result<BTreeSet<Vec<i64>>> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .filter(|(i, k)| i != k)
        .collect();
    let split = off.len().min(4);
    let parts = 3usize.pow(split as u32) << n;
    let values = [
        Rational::zero(),
        Rational::one(),
        Rational::from_integer(-1),
    ];

    let found: Vec<Vec<Vec<i64>>> = cfg.install(|| {
        (0..parts)
            .into_par_iter()
            .map(|part| {
                let mut op = RBOperator::zero(n, Rational::one());
                let diag_mask = part & ((1 << n) - 1);
                for i in 0..n {
                    if diag_mask >> i & 1 == 1 {
                        op.set_entry(i, i, values[2].clone());
                    }
                }
                let mut rest = part >> n;
                for &(i, k) in &off[..split] {
                    op.set_entry(i, k, values[rest % 3].clone());
                    rest /= 3;
                }
                let free = &off[split..];
                let mut digits = vec![0usize; free.len()];
                let mut hits = Vec::new();
                loop {
                    if op.verify_rb_identity() {
                        hits.push(op.integer_key().expect("integer entries"));
                    }
                    let mut pos = 0;
                    loop {
                        if pos == free.len() {
                            return hits;
                        }
                        digits[pos] = (digits[pos] + 1) % 3;
                        let (i, k) = free[pos];
                        op.set_entry(i, k, values[digits[pos]].clone());
                        if digits[pos] != 0 {
                            break;
                        }
                        pos += 1;
                    }
                }
            })
            .collect()
    })?;
    Ok(found.into_iter().flatten().collect())
}

/// Compares the brute-force scan with the tree-side enumeration as sets.
pub fn cmd_oracle(n: usize, cfg: &Config) -> Result<RunReport> {
    let start = Instant::now();
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    cfg.guard("oracle", n, ORACLE_MAX_N)?;
    let scanned = oracle_scan(n, cfg)?;
    let enumerated: BTreeSet<Vec<i64>> =
        enumerate_operators(n, &Rational::one(), OperatorClass::All)
            .iter()
            .map(|op| op.integer_key().expect("integer entries"))
            .collect();

    let only_oracle: Vec<&Vec<i64>> = scanned.difference(&enumerated).take(5).collect();
    let only_enum: Vec<&Vec<i64>> = enumerated.difference(&scanned).take(5).collect();
    let candidates = BigUint::from(3u32).pow((n * n - n) as u32) << n;

    let mut report = RunReport::new("oracle").param("n", n);
    report.failure = ExitStatus::ReferenceMismatch;
    if scanned != enumerated {
        report.mismatches.push(format!(
            "oracle found {} operators, enumeration {}; the sets differ",
            scanned.len(),
            enumerated.len()
        ));
    }
    if let Some(r) = reference::labeled(OperatorClass::All, n) {
        if r != scanned.len() as u64 {
            report.mismatches.push(format!(
                "oracle count {} differs from reference {r}",
                scanned.len()
            ));
        }
    }
    report.results = json!({
        "candidates": candidates.to_string(),
        "oracle_count": scanned.len(),
        "enumerated_count": enumerated.len(),
        "sets_equal": scanned == enumerated,
        "only_in_oracle": to_value(&only_oracle),
        "only_in_enumeration": to_value(&only_enum),
    });
    report.elapsed = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_field_set_matches_fixture_list() {
        let got: BTreeSet<_> = enumerate_operators(2, &Rational::one(), OperatorClass::All)
            .into_iter()
            .collect::<Vec<_>>()
            .into_iter()
            .map(|o| o.integer_key().unwrap())
            .collect();
        let want: BTreeSet<_> = fixtures::two_field_operators()
            .iter()
            .map(|o| o.integer_key().unwrap())
            .collect();
        assert_eq!(want.len(), 12);
        assert_eq!(got, want);
    }

    #[test]
    fn oracle_small() {
        let cfg = Config::default();
        for (n, count) in [(1, 2), (2, 12), (3, 128)] {
            let r = cmd_oracle(n, &cfg).unwrap();
            assert_eq!(r.results["oracle_count"], count);
            assert!(r.mismatches.is_empty(), "{:?}", r.mismatches);
        }
        assert!(cmd_oracle(5, &cfg).is_err());
    }

    #[test]
    fn enumerate_counts_and_formats() {
        let cfg = Config::default();
        let mut buf = Vec::new();
        let r = cmd_enumerate(3, OperatorClass::All, &cfg, &mut buf).unwrap();
        assert_eq!(r.results["count"], 128);
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 128);

        let csv_cfg = Config {
            format: Format::Csv,
            ..Config::default()
        };
        let mut buf = Vec::new();
        cmd_enumerate(2, OperatorClass::NonSplitting, &csv_cfg, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 5);
        assert!(text.starts_with("n,weight,class,parent,color,matrix\n"));
        assert!(text.contains("2,1,non-splitting,0 1,ww,0 1;0 0"));
    }
}
