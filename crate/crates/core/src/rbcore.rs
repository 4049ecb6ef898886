//! Rota-Baxter operators on `A = F^n` with the coordinate product
//! `e_i e_j = δ_ij e_i`.
//!
//! An operator is stored as its matrix in the row convention: row `i` holds
//! the coordinates of `R(e_i)`, i.e. `R(e_i) = Σ_k r_ik e_k`. Indices in the
//! Rust API are 0-based; file formats and the CLI use 1-based vertex labels.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{vectors_rank, Matrix, Rational};
use crate::graph::StructureDigraph;

/// A linear operator on `F^n` together with its weight `λ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RBOperator {
    weight: Rational,
    matrix: Matrix,
}

impl RBOperator {
    pub fn new(weight: Rational, matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidInput(format!(
                "operator matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(RBOperator { weight, matrix })
    }

    pub fn from_i64_rows(weight: i64, rows: &[&[i64]]) -> Result<Self> {
        RBOperator::new(Rational::from_integer(weight), Matrix::from_i64_rows(rows)?)
    }

    pub fn zero(n: usize, weight: Rational) -> Self {
        RBOperator {
            weight,
            matrix: Matrix::zeros(n, n),
        }
    }

    /// `-λ·id`, the other trivial operator.
    pub fn neg_weight_identity(n: usize, weight: Rational) -> Self {
        let matrix = Matrix::identity(n).scalar_mul(&-&weight);
        RBOperator { weight, matrix }
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn weight(&self) -> &Rational {
        &self.weight
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, i: usize, k: usize) -> &Rational {
        self.matrix.get(i, k)
    }

    pub(crate) fn set_entry(&mut self, i: usize, k: usize, value: Rational) {
        self.matrix.set(i, k, value);
    }

    /// `R(x)` for a coordinate vector `x`.
    pub fn apply(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.matrix.left_apply(x)
    }

    /// Checks `R(x)R(y) = R(R(x)y + xR(y) + λxy)` on every pair of basis
    /// vectors. Both sides are bilinear in `(x, y)`, so this decides the
    /// identity on all of `A`.
    ///
    /// With `e_i e_j = δ_ij e_i`, the `k`-th coordinate of the identity at
    /// `(e_i, e_j)` reads `r_ik r_jk = r_ij r_jk + (r_ji + λδ_ij) r_ik`.
    pub fn verify_rb_identity(&self) -> bool {
        let n = self.n();
        for i in 0..n {
            for j in i..n {
                let r_ij = self.entry(i, j);
                let mut r_ji = self.entry(j, i).clone();
                if i == j {
                    r_ji = &r_ji + &self.weight;
                }
                for k in 0..n {
                    let r_ik = self.entry(i, k);
                    let r_jk = self.entry(j, k);
                    let lhs = r_ik * r_jk;
                    let rhs = &(r_ij * r_jk) + &(&r_ji * r_ik);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Checks the combinatorial conditions characterising weight-1 operators
    /// on `F^n`, reading the matrix entries as they are (callers normalise the
    /// weight first). Returns the first violated condition.
    ///
    /// * SF1: `r_ii = 0` and off-diagonal row entries in `{0, 1}`, or
    ///   `r_ii = -1` and off-diagonal row entries in `{0, -1}`.
    /// * SF2: if `r_ik = r_ki = 0` (`i ≠ k`) then `r_il r_kl = 0` for all other `l`.
    /// * SF3a: if `r_ik ≠ 0` then `r_ki = 0`.
    /// * SF3b: if `r_ik ≠ 0` then `r_kl = 0` or `r_il = r_ik` for all other `l`.
    pub fn verify_structure_conditions(&self) -> std::result::Result<(), SfViolation> {
        let n = self.n();
        let one = Rational::one();
        let minus_one = -&one;
        for i in 0..n {
            let d = self.entry(i, i);
            let allowed = if d.is_zero() {
                &one
            } else if *d == minus_one {
                &minus_one
            } else {
                return Err(SfViolation::new(SfCondition::Sf1, i, i, None));
            };
            for k in (0..n).filter(|&k| k != i) {
                let r = self.entry(i, k);
                if !r.is_zero() && r != allowed {
                    return Err(SfViolation::new(SfCondition::Sf1, i, k, None));
                }
            }
        }
        for i in 0..n {
            for k in i + 1..n {
                if !self.entry(i, k).is_zero() || !self.entry(k, i).is_zero() {
                    continue;
                }
                for l in (0..n).filter(|&l| l != i && l != k) {
                    if !self.entry(i, l).is_zero() && !self.entry(k, l).is_zero() {
                        return Err(SfViolation::new(SfCondition::Sf2, i, k, Some(l)));
                    }
                }
            }
        }
        for i in 0..n {
            for k in (0..n).filter(|&k| k != i) {
                if !self.entry(i, k).is_zero() && !self.entry(k, i).is_zero() {
                    return Err(SfViolation::new(SfCondition::Sf3a, i, k, None));
                }
            }
        }
        for i in 0..n {
            for k in (0..n).filter(|&k| k != i) {
                let r_ik = self.entry(i, k);
                if r_ik.is_zero() {
                    continue;
                }
                for l in (0..n).filter(|&l| l != i && l != k) {
                    if !self.entry(k, l).is_zero() && self.entry(i, l) != r_ik {
                        return Err(SfViolation::new(SfCondition::Sf3b, i, k, Some(l)));
                    }
                }
            }
        }
        Ok(())
    }

    /// `φ(R) = -R - λ·id`, an involution on operators of weight `λ`.
    pub fn phi(&self) -> RBOperator {
        let n = self.n();
        let mut m = self.matrix.scalar_mul(&Rational::from_integer(-1));
        for i in 0..n {
            let d = m.get(i, i) - &self.weight;
            m.set(i, i, d);
        }
        RBOperator {
            weight: self.weight.clone(),
            matrix: m,
        }
    }

    /// `λ^{-1} R` with weight 1.
    pub fn normalize_weight(&self) -> Result<RBOperator> {
        let inv = self.weight.recip().ok_or(Error::ZeroWeight)?;
        if self.weight.is_one() {
            return Ok(self.clone());
        }
        Ok(RBOperator {
            weight: Rational::one(),
            matrix: self.matrix.scalar_mul(&inv),
        })
    }

    /// `λ·R` relabelled to weight `λ`; the inverse of [`normalize_weight`]
    /// for a weight-1 operator.
    ///
    /// [`normalize_weight`]: RBOperator::normalize_weight
    pub fn rescale(&self, weight: &Rational) -> RBOperator {
        let factor = weight / &self.weight;
        RBOperator {
            weight: weight.clone(),
            matrix: self.matrix.scalar_mul(&factor),
        }
    }

    /// Conjugation `ψ^{-1} R ψ` by the automorphism `ψ(e_i) = e_{σ(i)}`.
    ///
    /// The result has entries `r'_im = r_{σ(i) σ(m)}`, so
    /// `conjugate(conjugate(X, σ), τ) = conjugate(X, σ∘τ)`.
    pub fn conjugate(&self, perm: &Permutation) -> Result<RBOperator> {
        if perm.len() != self.n() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of {} points applied to operator on F^{}",
                perm.len(),
                self.n()
            )));
        }
        let order = perm.images();
        Ok(RBOperator {
            weight: self.weight.clone(),
            matrix: self.matrix.submatrix(order, order),
        })
    }

    /// `rank(R) + rank(R + λ·id) = n`, i.e. `A = ker R ∔ ker(R + λ·id)`.
    pub fn is_splitting(&self) -> bool {
        let n = self.n();
        let shifted = self
            .matrix
            .mat_add(&Matrix::identity(n).scalar_mul(&self.weight))
            .expect("square matrices of equal size");
        self.matrix.rank() + shifted.rank() == n
    }

    /// `R(1) ∈ F·1` where `1 = e_1 + … + e_n`. The coordinates of `R(1)` are
    /// the column sums of the matrix.
    pub fn is_inner_splitting(&self) -> bool {
        let n = self.n();
        let column_sum = |k: usize| (0..n).fold(Rational::zero(), |acc, i| acc + self.entry(i, k));
        match n {
            0 => true,
            _ => {
                let first = column_sum(0);
                (1..n).all(|k| column_sum(k) == first)
            }
        }
    }

    /// Compression of the operator to `span{e_j : j ∈ support}`, which is an
    /// ideal direct summand of `A`. Indices are 0-based.
    pub fn restrict(&self, support: &[usize]) -> Result<RBOperator> {
        if support.is_empty() {
            return Err(Error::InvalidSupport("empty support".into()));
        }
        let mut idx = support.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.len() != support.len() {
            return Err(Error::InvalidSupport("repeated index".into()));
        }
        if let Some(&bad) = idx.iter().find(|&&i| i >= self.n()) {
            return Err(Error::InvalidSupport(format!("index {bad} out of range")));
        }
        Ok(RBOperator {
            weight: self.weight.clone(),
            matrix: self.matrix.submatrix(&idx, &idx),
        })
    }

    /// Reorders the basis so that vertices come by nondecreasing level of the
    /// structure digraph, which makes the matrix upper-triangular. Returns
    /// the permutation (position `i` holds the old index) and the conjugate.
    pub fn triangularize(&self) -> Result<(Permutation, RBOperator)> {
        let normalized = self.normalize_weight()?;
        if !normalized.verify_rb_identity() {
            return Err(Error::NotRotaBaxter);
        }
        let levels = StructureDigraph::from_operator(&normalized).level_function()?;
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by_key(|&v| (levels.level(v), v));
        let perm = Permutation::new(order)?;
        let conj = normalized.conjugate(&perm)?;
        Ok((perm, conj))
    }

    pub fn classify(&self) -> Classification {
        if self.weight.is_zero() || !self.verify_rb_identity() {
            return Classification {
                is_rb: false,
                is_splitting: false,
                is_inner_splitting: false,
                label: ClassLabel::NonRb,
            };
        }
        let is_inner_splitting = self.is_inner_splitting();
        let is_splitting = self.is_splitting();
        let label = if is_inner_splitting {
            ClassLabel::InnerSplitting
        } else if is_splitting {
            ClassLabel::Splitting
        } else {
            ClassLabel::NonSplitting
        };
        Classification {
            is_rb: true,
            is_splitting,
            is_inner_splitting,
            label,
        }
    }

    /// Entries as small integers, used as a compact key in exhaustive scans.
    pub fn integer_key(&self) -> Option<Vec<i64>> {
        self.matrix.entries().iter().map(Rational::to_i64).collect()
    }
}

/// The splitting operator `R(a_1 + a_2) = -λ a_2` for a decomposition
/// `A = A_1 ∔ A_2` into subalgebras, each given by a basis of coordinate
/// vectors.
pub fn make_splitting(
    n: usize,
    weight: Rational,
    subalgebra_1: &[Vec<Rational>],
    subalgebra_2: &[Vec<Rational>],
) -> Result<RBOperator> {
    let all: Vec<Vec<Rational>> = subalgebra_1.iter().chain(subalgebra_2).cloned().collect();
    if let Some(v) = all.iter().find(|v| v.len() != n) {
        return Err(Error::InvalidDecomposition(format!(
            "vector of length {} in F^{n}",
            v.len()
        )));
    }
    if all.len() != n || vectors_rank(&all) != n {
        return Err(Error::InvalidDecomposition(
            "the two subspaces do not form a direct sum equal to A".into(),
        ));
    }
    for (name, basis) in [("A_1", subalgebra_1), ("A_2", subalgebra_2)] {
        let rank = vectors_rank(basis);
        for (a, u) in basis.iter().enumerate() {
            for v in &basis[a..] {
                let prod: Vec<Rational> = u.iter().zip(v).map(|(x, y)| x * y).collect();
                let mut extended = basis.to_vec();
                extended.push(prod);
                if vectors_rank(&extended) != rank {
                    return Err(Error::InvalidDecomposition(format!(
                        "{name} is not closed under the product"
                    )));
                }
            }
        }
    }
    let basis = Matrix::from_rows(all)?;
    let inv = basis.inverse().expect("rank checked above");
    let mut keep = Matrix::zeros(n, n);
    for i in subalgebra_1.len()..n {
        keep.set(i, i, Rational::one());
    }
    let projection = inv.mat_mul(&keep)?.mat_mul(&basis)?;
    let matrix = projection.scalar_mul(&-&weight);
    RBOperator::new(weight, matrix)
}

/// A permutation of `{0, …, n-1}`, `σ(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection"
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn swap(n: usize, a: usize, b: usize) -> Self {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(a, b);
        Permutation(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SfCondition {
    #[serde(rename = "SF1")]
    Sf1,
    #[serde(rename = "SF2")]
    Sf2,
    #[serde(rename = "SF3a")]
    Sf3a,
    #[serde(rename = "SF3b")]
    Sf3b,
}

impl fmt::Display for SfCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SfCondition::Sf1 => "SF1",
            SfCondition::Sf2 => "SF2",
            SfCondition::Sf3a => "SF3a",
            SfCondition::Sf3b => "SF3b",
        })
    }
}

/// The first violated structure condition, with 0-based witness indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SfViolation {
    pub condition: SfCondition,
    pub i: usize,
    pub k: usize,
    pub l: Option<usize>,
}

impl SfViolation {
    fn new(condition: SfCondition, i: usize, k: usize, l: Option<usize>) -> Self {
        SfViolation { condition, i, k, l }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassLabel {
    NonRb,
    NonSplitting,
    Splitting,
    InnerSplitting,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassLabel::NonRb => "non-rb",
            ClassLabel::NonSplitting => "non-splitting",
            ClassLabel::Splitting => "splitting",
            ClassLabel::InnerSplitting => "inner-splitting",
        })
    }
}

/// Verdicts for one operator. `label` is the finest class that applies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Classification {
    pub is_rb: bool,
    pub is_splitting: bool,
    pub is_inner_splitting: bool,
    pub label: ClassLabel,
}

/// On-disk operator format: `{"n": 2, "weight": "1", "matrix": [["0","1"],["0","0"]]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OperatorFile {
    pub n: usize,
    pub weight: Rational,
    pub matrix: Vec<Vec<Rational>>,
}

impl From<&RBOperator> for OperatorFile {
    fn from(op: &RBOperator) -> Self {
        OperatorFile {
            n: op.n(),
            weight: op.weight.clone(),
            matrix: op.matrix.to_rows(),
        }
    }
}

impl TryFrom<OperatorFile> for RBOperator {
    type Error = Error;

    fn try_from(file: OperatorFile) -> Result<Self> {
        if file.matrix.len() != file.n || file.matrix.iter().any(|r| r.len() != file.n) {
            return Err(Error::Malformed(format!(
                "matrix is not {n}x{n}",
                n = file.n
            )));
        }
        let matrix = if file.n == 0 {
            Matrix::zeros(0, 0)
        } else {
            Matrix::from_rows(file.matrix)?
        };
        RBOperator::new(file.weight, matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn op(rows: &[&[i64]]) -> RBOperator {
        RBOperator::from_i64_rows(1, rows).unwrap()
    }

    fn q(x: i64) -> Rational {
        Rational::from_integer(x)
    }

    #[test]
    fn rb_identity_examples() {
        assert!(RBOperator::zero(3, q(5)).verify_rb_identity());
        assert!(op(&[&[0, 0], &[1, 0]]).verify_rb_identity());
        assert!(!op(&[&[0, 1], &[1, 0]]).verify_rb_identity());
        assert!(RBOperator::neg_weight_identity(4, q(-3)).verify_rb_identity());
    }

    #[test]
    fn rb_identity_agrees_with_generic_evaluation() {
        // Evaluate both sides on non-basis vectors directly.
        let r = fixtures::five_field_sample();
        let x: Vec<Rational> = [1, -2, 3, 0, 5].iter().map(|&v| q(v)).collect();
        let y: Vec<Rational> = [2, 1, -1, 4, 1].iter().map(|&v| q(v)).collect();
        let mul = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            a.iter().zip(b).map(|(u, v)| u * v).collect()
        };
        let add = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            a.iter().zip(b).map(|(u, v)| u + v).collect()
        };
        let rx = r.apply(&x).unwrap();
        let ry = r.apply(&y).unwrap();
        let lhs = mul(&rx, &ry);
        let inner = add(&add(&mul(&rx, &y), &mul(&x, &ry)), &mul(&x, &y));
        assert_eq!(lhs, r.apply(&inner).unwrap());
    }

    #[test]
    fn structure_condition_tags() {
        assert_eq!(
            op(&[&[0, 0], &[1, 0]]).verify_structure_conditions(),
            Ok(())
        );
        let v = op(&[&[0, 1], &[1, 0]])
            .verify_structure_conditions()
            .unwrap_err();
        assert_eq!(v.condition, SfCondition::Sf3a);
        let immoral = op(&[&[0, 0, 1], &[0, 0, 1], &[0, 0, 0]]);
        let v = immoral.verify_structure_conditions().unwrap_err();
        assert_eq!(
            (v.condition, v.i, v.k, v.l),
            (SfCondition::Sf2, 0, 1, Some(2))
        );
        let bad_sign = op(&[&[0, -1], &[0, 0]]);
        assert_eq!(
            bad_sign
                .verify_structure_conditions()
                .unwrap_err()
                .condition,
            SfCondition::Sf1
        );
        let not_transitive = op(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert_eq!(
            not_transitive
                .verify_structure_conditions()
                .unwrap_err()
                .condition,
            SfCondition::Sf3b
        );
    }

    #[test]
    fn phi_examples() {
        let z = RBOperator::zero(3, q(1));
        assert_eq!(z.phi(), RBOperator::neg_weight_identity(3, q(1)));
        assert_eq!(op(&[&[0, 0], &[1, 0]]).phi(), op(&[&[-1, 0], &[-1, -1]]));
        let x = fixtures::five_field_sample();
        assert_eq!(x.phi().phi(), x);
    }

    #[test]
    fn normalize_examples() {
        let r = RBOperator::neg_weight_identity(3, q(2));
        let n = r.normalize_weight().unwrap();
        assert_eq!(n, RBOperator::neg_weight_identity(3, q(1)));
        let x = op(&[&[0, 1], &[0, 0]]);
        assert_eq!(x.normalize_weight().unwrap(), x);
        assert!(matches!(
            RBOperator::zero(2, q(0)).normalize_weight(),
            Err(Error::ZeroWeight)
        ));
    }

    #[test]
    fn conjugate_examples() {
        let x = op(&[&[0, 0], &[1, 0]]);
        assert_eq!(x.conjugate(&Permutation::identity(2)).unwrap(), x);
        assert_eq!(
            x.conjugate(&Permutation::swap(2, 0, 1)).unwrap(),
            op(&[&[0, 1], &[0, 0]])
        );
        assert!(x.conjugate(&Permutation::identity(3)).is_err());
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn conjugation_composes() {
        let x = fixtures::five_field_sample();
        let s = Permutation::new(vec![2, 0, 4, 1, 3]).unwrap();
        let t = Permutation::new(vec![1, 3, 0, 4, 2]).unwrap();
        let lhs = x.conjugate(&s).unwrap().conjugate(&t).unwrap();
        assert_eq!(lhs, x.conjugate(&s.compose(&t)).unwrap());
        assert_eq!(x.conjugate(&s).unwrap().conjugate(&s.inverse()).unwrap(), x);
    }

    #[test]
    fn splitting_construction() {
        let e = |i: usize, n: usize| -> Vec<Rational> {
            (0..n).map(|k| if k == i { q(1) } else { q(0) }).collect()
        };
        let r = make_splitting(2, q(1), &[e(0, 2)], &[e(1, 2)]).unwrap();
        assert_eq!(r, op(&[&[0, 0], &[0, -1]]));
        assert!(r.verify_rb_identity());

        let whole = make_splitting(2, q(1), &[e(0, 2), e(1, 2)], &[]).unwrap();
        assert!(whole.matrix().is_zero());

        let skew = vec![vec![q(1), q(-1)], e(1, 2)];
        assert!(make_splitting(2, q(1), &skew, &[])
            .unwrap()
            .matrix()
            .is_zero());

        // F·(1,1) is the unit line, closed; F·(1,-1) is not closed.
        let r = make_splitting(2, q(3), &[vec![q(1), q(1)]], &[e(1, 2)]).unwrap();
        assert!(r.verify_rb_identity());
        assert!(r.is_splitting());
        assert!(matches!(
            make_splitting(2, q(1), &[vec![q(1), q(-1)]], &[e(1, 2)]),
            Err(Error::InvalidDecomposition(_))
        ));
        assert!(make_splitting(2, q(1), &[e(0, 2)], &[e(0, 2)]).is_err());
        assert!(make_splitting(2, q(1), &[e(0, 2)], &[]).is_err());
    }

    #[test]
    fn splitting_predicates() {
        assert!(op(&[&[-1, 0], &[0, 0]]).is_splitting());
        assert!(!op(&[&[0, 0], &[1, 0]]).is_splitting());
        assert!(RBOperator::zero(3, q(1)).is_splitting());

        assert!(RBOperator::zero(3, q(1)).is_inner_splitting());
        assert!(RBOperator::neg_weight_identity(3, q(7)).is_inner_splitting());
        assert!(!op(&[&[-1, 0], &[0, 0]]).is_inner_splitting());
    }

    #[test]
    fn restrict_examples() {
        let x = fixtures::five_field_sample();
        assert_eq!(x.restrict(&[0, 1, 2, 3, 4]).unwrap(), x);
        assert_eq!(x.restrict(&[2, 3]).unwrap(), op(&[&[-1, 0], &[0, 0]]));
        assert!(x.restrict(&[]).is_err());
        assert!(x.restrict(&[1, 1]).is_err());
        assert!(x.restrict(&[5]).is_err());
    }

    #[test]
    fn triangularize_examples() {
        let t = op(&[&[0, 1], &[0, 0]]);
        let (p, c) = t.triangularize().unwrap();
        assert_eq!(p, Permutation::identity(2));
        assert_eq!(c, t);

        let (p, c) = op(&[&[0, 0], &[1, 0]]).triangularize().unwrap();
        assert_eq!(p, Permutation::swap(2, 0, 1));
        assert_eq!(c, t);

        assert!(matches!(
            op(&[&[0, 1], &[1, 0]]).triangularize(),
            Err(Error::NotRotaBaxter)
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            op(&[&[0, 0], &[1, 0]]).classify().label,
            ClassLabel::NonSplitting
        );
        let c = op(&[&[-1, 0], &[0, 0]]).classify();
        assert!(c.is_splitting && !c.is_inner_splitting);
        assert_eq!(c.label, ClassLabel::Splitting);
        assert_eq!(
            op(&[&[-1, 0], &[0, -1]]).classify().label,
            ClassLabel::InnerSplitting
        );
        let bad = op(&[&[0, 1], &[1, 0]]).classify();
        assert!(!bad.is_rb && !bad.is_splitting && !bad.is_inner_splitting);
        assert_eq!(bad.label, ClassLabel::NonRb);
    }

    #[test]
    fn operator_file_roundtrip() {
        let half = Rational::new(1, 2).unwrap();
        let x = fixtures::five_field_sample().rescale(&half);
        let json = serde_json::to_string(&OperatorFile::from(&x)).unwrap();
        assert!(json.contains("\"weight\":\"1/2\""));
        let back: OperatorFile = serde_json::from_str(&json).unwrap();
        assert_eq!(RBOperator::try_from(back).unwrap(), x);
        let bad: OperatorFile =
            serde_json::from_str(r#"{"n":2,"weight":"1","matrix":[["0"]]}"#).unwrap();
        assert!(RBOperator::try_from(bad).is_err());
    }
}
