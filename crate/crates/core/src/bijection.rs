//! Operators of nonzero weight on `F^n` ↔ labelled rooted trees on
//! `{0..n}` with two-coloured non-root vertices.
//!
//! Vertex `v` is white when `r_vv = 0` and black when `r_vv = -λ`. Each row's
//! off-diagonal signs follow from the diagonal entry of that row (`+λ` in a
//! white row, `-λ` in a black row), so the coloured tree determines the matrix.

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational};
use crate::graph::StructureDigraph;
use crate::rbcore::RBOperator;
use crate::trees::{Color, ColoredRootedTree};

/// A coloured tree together with the weight of the operator it encodes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RBTreeForm {
    pub tree: ColoredRootedTree,
    pub weight: Rational,
}

pub fn matrix_to_tree(op: &RBOperator) -> Result<RBTreeForm> {
    let normalized = op.normalize_weight()?;
    if !normalized.verify_rb_identity() {
        return Err(Error::NotRotaBaxter);
    }
    let tree = StructureDigraph::from_operator(&normalized).to_rooted_tree()?;
    let colors = (0..op.n())
        .map(|i| {
            if normalized.entry(i, i).is_zero() {
                Color::White
            } else {
                Color::Black
            }
        })
        .collect();
    Ok(RBTreeForm {
        tree: ColoredRootedTree::new(tree, colors)?,
        weight: op.weight().clone(),
    })
}

pub fn tree_to_matrix(form: &RBTreeForm) -> RBOperator {
    let t = &form.tree;
    let n = t.n();
    let g = StructureDigraph::from_rooted_tree(t.tree());
    let lambda = &form.weight;
    let minus_lambda = -lambda;
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        let (diag, off) = match t.color(i + 1) {
            Color::White => (Rational::zero(), lambda),
            Color::Black => (minus_lambda.clone(), &minus_lambda),
        };
        m.set(i, i, diag);
        for k in (0..n).filter(|&k| g.has_edge(i, k)) {
            m.set(i, k, off.clone());
        }
    }
    RBOperator::new(form.weight.clone(), m).expect("square by construction")
}

/// `φ` on the tree side: every non-root colour flips.
pub fn phi_on_tree(form: &RBTreeForm) -> RBTreeForm {
    RBTreeForm {
        tree: form.tree.flip_colors(),
        weight: form.weight.clone(),
    }
}
