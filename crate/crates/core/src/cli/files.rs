use std::io::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use super::{to_value, Config, ExitStatus, RunReport};
use crate::bijection::{matrix_to_tree, tree_to_matrix, RBTreeForm};
use crate::error::{Error, Result};
use crate::rbcore::{OperatorFile, RBOperator};
use crate::trees::ColoredTreeFile;

fn read_operator(text: &str) -> Result<RBOperator> {
    let file: OperatorFile = serde_json::from_str(text)?;
    RBOperator::try_from(file)
}

fn read_tree(text: &str) -> Result<ColoredTreeFile> {
    Ok(serde_json::from_str(text)?)
}

/// Checks the Rota-Baxter identity and, for nonzero weight, the structure
/// conditions of the weight-1 normalisation. Exit status 2 unless both hold.
pub fn cmd_verify(text: &str, _cfg: &Config) -> Result<RunReport> {
    let start = Instant::now();
    let op = read_operator(text)?;
    let mut report = RunReport::new("verify")
        .param("n", op.n())
        .param("weight", op.weight());
    let identity = op.verify_rb_identity();
    if !identity {
        report
            .mismatches
            .push("the Rota-Baxter identity fails".into());
    }
    let conditions = match op.normalize_weight() {
        Ok(norm) => match norm.verify_structure_conditions() {
            Ok(()) => json!({ "holds": true }),
            Err(v) => json!({
                "holds": false,
                "condition": v.condition,
                "witness": [v.i + 1, v.k + 1, v.l.map(|l| l + 1)],
            }),
        },
        Err(_) => json!(null),
    };
    if identity && conditions["holds"] == json!(false) {
        report
            .mismatches
            .push("identity holds but a structure condition fails".into());
    }
    report.results = json!({ "rb_identity": identity, "structure_conditions": conditions });
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Splitting / inner-splitting verdicts, both from ranks and from the
/// colouring of the operator's tree.
pub fn cmd_classify(text: &str, _cfg: &Config) -> Result<RunReport> {
    let start = Instant::now();
    let op = read_operator(text)?;
    let class = op.classify();
    let mut report = RunReport::new("classify")
        .param("n", op.n())
        .param("weight", op.weight());
    if !class.is_rb {
        report
            .mismatches
            .push("not a Rota-Baxter operator of nonzero weight".into());
        report.results = to_value(&class);
        report.elapsed = start.elapsed();
        return Ok(report);
    }
    let form = matrix_to_tree(&op)?;
    let t = &form.tree;
    if t.is_properly_colored() != class.is_splitting
        || t.is_alternating() != class.is_inner_splitting
    {
        report
            .mismatches
            .push("rank verdicts disagree with the colouring".into());
    }
    report.results = json!({
        "is_rb": class.is_rb,
        "is_splitting": class.is_splitting,
        "is_inner_splitting": class.is_inner_splitting,
        "label": class.label,
        "tree": ColoredTreeFile::from_tree(t, None),
        "properly_colored": t.is_properly_colored(),
        "alternating": t.is_alternating(),
        "canonical_code": t.canonical_code().as_str(),
    });
    report.elapsed = start.elapsed();
    Ok(report)
}

#[derive(Serialize)]
struct TreeOutput {
    #[serde(flatten)]
    file: ColoredTreeFile,
    edges: Vec<[usize; 2]>,
}

/// Writes the coloured tree of an operator file to `out`.
pub fn cmd_tree(text: &str, _cfg: &Config, out: &mut dyn Write) -> Result<RunReport> {
    let start = Instant::now();
    let op = read_operator(text)?;
    let form = matrix_to_tree(&op)?;
    let output = TreeOutput {
        file: ColoredTreeFile::from_tree(&form.tree, Some(form.weight.clone())),
        edges: form
            .tree
            .tree()
            .edges()
            .into_iter()
            .map(|(p, c)| [p, c])
            .collect(),
    };
    serde_json::to_writer_pretty(&mut *out, &output)?;
    writeln!(out)?;
    let mut report = RunReport::new("tree")
        .param("n", op.n())
        .param("weight", op.weight());
    report.results = json!({ "edges": output.edges.len() });
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Writes the operator encoded by a coloured tree file to `out`. The file's
/// weight wins over the configured one.
pub fn cmd_matrix(text: &str, cfg: &Config, out: &mut dyn Write) -> Result<RunReport> {
    let start = Instant::now();
    let file = read_tree(text)?;
    let weight = file.weight.clone().unwrap_or_else(|| cfg.weight.clone());
    if weight.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let op = tree_to_matrix(&RBTreeForm {
        tree: file.to_tree()?,
        weight,
    });
    serde_json::to_writer_pretty(&mut *out, &OperatorFile::from(&op))?;
    writeln!(out)?;
    let mut report = RunReport::new("matrix")
        .param("n", op.n())
        .param("weight", op.weight());
    report.failure = ExitStatus::ValidationFailure;
    if !op.verify_rb_identity() {
        report
            .mismatches
            .push("constructed matrix fails the identity".into());
    }
    report.results = json!({ "rb_identity": report.mismatches.is_empty() });
    report.elapsed = start.elapsed();
    Ok(report)
}
