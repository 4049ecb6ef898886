//! The induced product `x ∘ y = R(x)y + xR(y) + λxy` on `F^n`, and an
//! explicit basis of orthogonal idempotents certifying `A^R ≅ F^n` for
//! nonzero weight.

use serde::Serialize;

use crate::bijection::matrix_to_tree;
use crate::error::{Error, Result};
use crate::exactlin::{vectors_rank, Rational};
use crate::rbcore::RBOperator;
use crate::trees::Color;

/// A commutative algebra on `F^n` given by structure constants:
/// `e_i ∘ e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraStructure {
    n: usize,
    constants: Vec<Rational>,
}

impl AlgebraStructure {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.constants[(i * self.n + j) * self.n + k]
    }

    /// `e_i ∘ e_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.n + j) * self.n;
        &self.constants[start..start + self.n]
    }

    pub fn product(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = xi * yj;
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&coeff * c);
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n)
            .all(|i| (i + 1..self.n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// `(e_i ∘ e_j) ∘ e_l = e_i ∘ (e_j ∘ e_l)` on all basis triples; returns
    /// the first failing triple.
    pub fn check_associative(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let n = self.n;
        let unit = |i: usize| -> Vec<Rational> {
            (0..n)
                .map(|k| {
                    if k == i {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        };
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for l in 0..n {
                    let left = self.product(&ij, &unit(l));
                    let right = self.product(&unit(i), self.basis_product(j, l));
                    if left != right {
                        return Err((i, j, l));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Structure constants of `A^R`. On basis vectors the product reads
/// `e_i ∘ e_j = r_ij e_j + r_ji e_i + λ δ_ij e_i`.
pub fn induced_product(op: &RBOperator) -> Result<AlgebraStructure> {
    if !op.verify_rb_identity() {
        return Err(Error::NotRotaBaxter);
    }
    let n = op.n();
    let mut constants = vec![Rational::zero(); n * n * n];
    let at = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
    for i in 0..n {
        for j in 0..n {
            let r_ij = op.entry(i, j);
            let r_ji = op.entry(j, i);
            constants[at(i, j, j)] = &constants[at(i, j, j)] + r_ij;
            constants[at(i, j, i)] = &constants[at(i, j, i)] + r_ji;
            if i == j {
                constants[at(i, i, i)] = &constants[at(i, i, i)] + op.weight();
            }
        }
    }
    let alg = AlgebraStructure { n, constants };
    if !alg.is_commutative() {
        return Err(Error::InvalidInput(
            "induced product is not commutative".into(),
        ));
    }
    alg.check_associative()
        .map_err(|(i, j, l)| Error::NotAssociative(i, j, l))?;
    Ok(alg)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IdempotentBasis {
    pub vectors: Vec<Vec<Rational>>,
}

/// Orthogonal idempotents of `A^R`, one per vertex of the operator's tree.
///
/// Works on the weight-1 normalisation. Each connected component of the
/// forest below the root has a unique source `v`; with
/// `c(i) = 1 + 2 r_ii` (`+1` white, `-1` black) the vector
/// `u_v = c(v) e_v - Σ_{i child of v} c(i) e_i` spans a one-dimensional ideal
/// isomorphic to `F`, and the rest of the component is an ideal on which the
/// same construction recurses. For a white source this is
/// `e_v - Σ c(i) e_i`; a black source needs the overall sign `c(v) = -1`.
/// The weight-`λ` idempotents are the weight-1 ones divided by `λ`.
pub fn idempotent_basis(op: &RBOperator) -> Result<IdempotentBasis> {
    if op.weight().is_zero() {
        return Err(Error::ZeroWeight);
    }
    let form = matrix_to_tree(op)?;
    let tree = form.tree.tree();
    let n = op.n();
    let children = tree.children();
    let sign = |v: usize| match form.tree.color(v) {
        Color::White => Rational::one(),
        Color::Black => Rational::from_integer(-1),
    };
    let scale = op.weight().recip().expect("weight is nonzero");

    let mut vectors = Vec::with_capacity(n);
    let mut pending: Vec<usize> = children[0].iter().rev().copied().collect();
    while let Some(v) = pending.pop() {
        let mut u = vec![Rational::zero(); n];
        u[v - 1] = &sign(v) * &scale;
        for &c in &children[v] {
            u[c - 1] = -(&sign(c) * &scale);
        }
        vectors.push(u);
        pending.extend(children[v].iter().rev().copied());
    }
    Ok(IdempotentBasis { vectors })
}

/// The basis has `n` linearly independent vectors, each idempotent, and
/// pairwise orthogonal under `alg`. Such a basis exists exactly when the
/// algebra is isomorphic to `F^n`.
pub fn verify_split_isomorphism(alg: &AlgebraStructure, basis: &IdempotentBasis) -> bool {
    let vs = &basis.vectors;
    if vs.len() != alg.n() || vs.iter().any(|v| v.len() != alg.n()) {
        return false;
    }
    if vectors_rank(vs) != alg.n() {
        return false;
    }
    for (a, u) in vs.iter().enumerate() {
        if alg.product(u, u) != *u {
            return false;
        }
        for w in &vs[a + 1..] {
            if alg.product(u, w).iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// Per-operator certificate as written by the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct CertificationReport {
    pub n: usize,
    pub matrix: Vec<Vec<Rational>>,
    pub idempotents: Vec<Vec<Rational>>,
    pub certified: bool,
}

/// Builds the product and the basis and checks them together.
pub fn certify(op: &RBOperator) -> Result<CertificationReport> {
    let alg = induced_product(op)?;
    let basis = idempotent_basis(op)?;
    let certified = verify_split_isomorphism(&alg, &basis);
    Ok(CertificationReport {
        n: op.n(),
        matrix: op.matrix().to_rows(),
        idempotents: basis.vectors,
        certified,
    })
}
