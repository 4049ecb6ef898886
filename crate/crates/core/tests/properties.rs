use std::collections::BTreeSet;

use proptest::prelude::*;
use rblab::cli::{enumerate_operators, OperatorClass};
use rblab::graph::StructureDigraph;
use rblab::induced::certify;
use rblab::trees::{
    cayley_count, colorings, labeled_rooted_trees, prufer_decode, ColoredRootedTree, RootedTree,
};
use rblab::{
    matrix_to_tree, tree_to_matrix, Matrix, Permutation, RBOperator, RBTreeForm, Rational,
};

fn candidates(n: usize) -> impl Iterator<Item = RBOperator> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |k| (i, k)))
        .filter(|(i, k)| i != k)
        .collect();
    let total = 3usize.pow(off.len() as u32) << n;
    (0..total).map(move |mut code| {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            if code & 1 == 1 {
                m.set(i, i, Rational::from_integer(-1));
            }
            code >>= 1;
        }
        for &(i, k) in &off {
            m.set(i, k, Rational::from_integer([0, 1, -1][code % 3]));
            code /= 3;
        }
        RBOperator::new(Rational::one(), m).unwrap()
    })
}

#[test]
fn structure_conditions_match_identity_on_full_scan() {
    for n in 1..=3 {
        let mut hits = 0;
        for op in candidates(n) {
            let sf = op.verify_structure_conditions().is_ok();
            assert_eq!(sf, op.verify_rb_identity(), "{op:?}");
            if sf {
                hits += 1;
                for i in 0..n {
                    for k in (0..n).filter(|&k| k != i) {
                        assert!((op.entry(i, k) * op.entry(k, i)).is_zero());
                    }
                }
                let g = StructureDigraph::from_operator(&op);
                assert!(g.is_antisymmetric() && g.is_transitive() && g.is_moral());
                let t = g.to_rooted_tree().unwrap();
                assert_eq!(t.edges().len(), n);
                assert!(t.depths().iter().all(|&d| d <= n));
            }
        }
        assert_eq!(hits, [2, 12, 128][n - 1]);
    }
}

#[test]
fn valid_digraphs_are_counted_by_cayley() {
    for n in 1..=5 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |k| (i, k)))
            .filter(|(i, k)| i != k)
            .collect();
        let mut valid = 0u64;
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            // antisymmetry first keeps the loop cheap
            if edges.iter().any(|&(i, k)| edges.contains(&(k, i))) {
                continue;
            }
            let g = StructureDigraph::from_edges(n, &edges).unwrap();
            if g.is_valid() {
                valid += 1;
                let t = g.to_rooted_tree().unwrap();
                assert_eq!(StructureDigraph::from_rooted_tree(&t), g);
            }
        }
        assert_eq!(valid.to_string(), cayley_count(n).to_string(), "n={n}");
    }
}

#[test]
fn tree_streams_and_colourings() {
    for n in 1..=6 {
        let mut seen = BTreeSet::new();
        for t in labeled_rooted_trees(n) {
            let mut alternating = 0;
            if n <= 4 {
                for c in colorings(&t) {
                    if c.is_alternating() {
                        assert!(c.is_properly_colored());
                        alternating += 1;
                    }
                }
                assert_eq!(alternating, 2);
            }
            seen.insert(t);
        }
        assert_eq!(seen.len().to_string(), cayley_count(n).to_string());
    }
}

#[test]
fn matrix_to_tree_is_a_bijection_at_n4() {
    let ops = enumerate_operators(4, &Rational::one(), OperatorClass::All);
    let trees: BTreeSet<ColoredRootedTree> = ops
        .iter()
        .map(|op| matrix_to_tree(op).unwrap().tree)
        .collect();
    let keys: BTreeSet<Vec<i64>> = ops.iter().map(|op| op.integer_key().unwrap()).collect();
    assert_eq!(trees.len(), 2000);
    assert_eq!(keys.len(), 2000);
}

#[test]
fn phi_certifies_at_n4() {
    for op in enumerate_operators(4, &Rational::one(), OperatorClass::All) {
        let a = certify(&op).unwrap();
        let b = certify(&op.phi()).unwrap();
        assert!(a.certified && b.certified);
        assert_eq!(a.idempotents.len(), b.idempotents.len());
    }
}

#[test]
fn atkinson_miller_up_to_six() {
    for n in 1..=6 {
        for s in 1..=n {
            let op = rblab::fixtures::atkinson_miller(n, s);
            assert!(op.verify_rb_identity(), "n={n} s={s}");
            assert!(op.verify_structure_conditions().is_ok());
        }
    }
}

fn arb_form(max_n: usize) -> impl Strategy<Value = RBTreeForm> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(0..=n, n - 1),
                0u64..1 << n,
                (-4i64..=4).prop_filter("nonzero", |x| *x != 0),
                1i64..=3,
            )
        })
        .prop_map(|(n, seq, mask, p, q)| RBTreeForm {
            tree: ColoredRootedTree::from_mask(prufer_decode(n, &seq).unwrap(), mask),
            weight: Rational::new(p, q).unwrap(),
        })
}

fn arb_form_with_perms(
    max_n: usize,
) -> impl Strategy<Value = (RBTreeForm, Permutation, Permutation)> {
    arb_form(max_n).prop_flat_map(|f| {
        let n = f.tree.n();
        let perm = || {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::new(v).unwrap())
        };
        (Just(f), perm(), perm())
    })
}

fn kernel_rank(m: &Matrix) -> usize {
    m.rows() - m.rank()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn phi_keeps_weight_validity_and_class(form in arb_form(6)) {
        let x = tree_to_matrix(&form);
        let y = x.phi();
        prop_assert_eq!(y.weight(), x.weight());
        prop_assert!(y.verify_rb_identity());
        prop_assert_eq!(y.classify().label, x.classify().label);
        prop_assert_eq!(y.phi(), x.clone());
        // ker φ(R) = ker(R + λ) and ker(φ(R) + λ) = ker R
        let shifted = x.phi().phi();
        prop_assert_eq!(kernel_rank(y.matrix()), kernel_rank(&x.matrix().mat_add(&Matrix::identity(x.n()).scalar_mul(x.weight())).unwrap()));
        prop_assert_eq!(kernel_rank(&y.matrix().mat_add(&Matrix::identity(x.n()).scalar_mul(x.weight())).unwrap()), kernel_rank(shifted.matrix()));
    }

    #[test]
    fn conjugation_is_an_action((form, s, t) in arb_form_with_perms(6)) {
        let x = tree_to_matrix(&form);
        let twice = x.conjugate(&s).unwrap().conjugate(&t).unwrap();
        prop_assert_eq!(twice, x.conjugate(&s.compose(&t)).unwrap());
        prop_assert_eq!(x.conjugate(&Permutation::identity(x.n())).unwrap(), x);
    }

    #[test]
    fn bijection_is_equivariant((form, s, _t) in arb_form_with_perms(6)) {
        let x = tree_to_matrix(&form);
        let conj = matrix_to_tree(&x.conjugate(&s).unwrap()).unwrap();
        prop_assert_eq!(&conj.tree, &form.tree.relabel(&s).unwrap());
        prop_assert_eq!(conj.tree.canonical_code(), form.tree.canonical_code());
        prop_assert_eq!(matrix_to_tree(&x).unwrap(), form);
    }

    #[test]
    fn triangular_form_is_upper_triangular(form in arb_form(7)) {
        let x = tree_to_matrix(&form);
        let (perm, tri) = x.triangularize().unwrap();
        prop_assert!(tri.matrix().is_upper_triangular());
        prop_assert_eq!(tri, x.normalize_weight().unwrap().conjugate(&perm).unwrap());
    }

    #[test]
    fn certificates_for_random_operators(form in arb_form(6)) {
        let x = tree_to_matrix(&form);
        prop_assert!(certify(&x).unwrap().certified);
    }

    #[test]
    fn rank_criteria_match_colourings(form in arb_form(7)) {
        let x = tree_to_matrix(&form);
        prop_assert_eq!(x.is_splitting(), form.tree.is_properly_colored());
        prop_assert_eq!(x.is_inner_splitting(), form.tree.is_alternating());
    }

    #[test]
    fn trees_from_sequences_are_trees(seq in proptest::collection::vec(0usize..=6, 5)) {
        let t: RootedTree = prufer_decode(6, &seq).unwrap();
        prop_assert_eq!(t.edges().len(), 6);
        prop_assert!(RootedTree::new(t.parents().to_vec()).is_ok());
    }
}
