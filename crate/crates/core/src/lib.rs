//! Exact enumeration, verification, classification and counting of
//! Rota-Baxter operators of nonzero weight on `A = F^n`, the direct sum of
//! `n` copies of the rationals.
//!
//! The crate is organised along the path an operator takes:
//!
//! - [`exactlin`]: exact rationals and matrices (rank, inverse).
//! - [`rbcore`]: the operator type, the Rota-Baxter identity, the
//!   combinatorial structure conditions, `φ`, conjugation, splitting tests.
//! - [`graph`]: the structure digraph of an operator and its rooted tree.
//! - [`trees`]: labelled tree enumeration, colourings, canonical codes and
//!   counting recurrences.
//! - [`bijection`]: operators ↔ coloured rooted trees.
//! - [`induced`]: the induced product `x∘y = R(x)y + xR(y) + λxy` and an
//!   explicit idempotent basis showing it is again `F^n`.
//! - [`cli`]: the command implementations behind the `rblab` binary.

pub mod bijection;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod fixtures;
pub mod graph;
pub mod induced;
pub mod rbcore;
pub mod trees;

pub use bijection::{matrix_to_tree, phi_on_tree, tree_to_matrix, RBTreeForm};
pub use error::{Error, Result};
pub use exactlin::{Matrix, Rational};
pub use graph::{LevelMap, StructureDigraph};
pub use induced::{idempotent_basis, induced_product, verify_split_isomorphism};
pub use rbcore::{make_splitting, ClassLabel, Classification, Permutation, RBOperator};
pub use trees::{CanonicalCode, Color, ColoredRootedTree, RootedTree};
