//! Labelled rooted trees on `{0, 1, …, n}` (root 0) with two-coloured
//! non-root vertices, their canonical forms, and counting recurrences.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::Rational;
use crate::rbcore::Permutation;

/// A rooted tree on `{0, …, n}` with root 0, stored as a parent array:
/// `parents()[v - 1]` is the parent of vertex `v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootedTree {
    parent: Vec<usize>,
}

impl RootedTree {
    pub fn new(parent: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        for (idx, &p) in parent.iter().enumerate() {
            let v = idx + 1;
            if p > n {
                return Err(Error::NotATree(format!(
                    "parent {p} of vertex {v} out of range"
                )));
            }
            if p == v {
                return Err(Error::NotATree(format!("vertex {v} is its own parent")));
            }
        }
        for start in 1..=n {
            let mut v = start;
            let mut steps = 0;
            while v != 0 {
                v = parent[v - 1];
                steps += 1;
                if steps > n {
                    return Err(Error::NotATree(format!("vertex {start} lies on a cycle")));
                }
            }
        }
        Ok(RootedTree { parent })
    }

    /// The star: every vertex is a child of the root.
    pub fn star(n: usize) -> Self {
        RootedTree { parent: vec![0; n] }
    }

    /// Number of non-root vertices.
    pub fn n(&self) -> usize {
        self.parent.len()
    }

    /// Parent of a non-root vertex `v ∈ 1..=n`.
    #[inline]
    pub fn parent(&self, v: usize) -> usize {
        self.parent[v - 1]
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Children of every vertex `0..=n`, in increasing order.
    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.n() + 1];
        for (idx, &p) in self.parent.iter().enumerate() {
            ch[p].push(idx + 1);
        }
        ch
    }

    pub fn root_degree(&self) -> usize {
        self.parent.iter().filter(|&&p| p == 0).count()
    }

    /// Distance from the root for every vertex `0..=n`.
    pub fn depths(&self) -> Vec<usize> {
        let children = self.children();
        let mut depth = vec![0; self.n() + 1];
        for v in bfs_order(&children) {
            for &c in &children[v] {
                depth[c] = depth[v] + 1;
            }
        }
        depth
    }

    /// `(parent, child)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self
            .parent
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i + 1))
            .collect();
        e.sort_unstable();
        e
    }

    /// The tree seen through the basis permutation `σ` (0-based, acting on
    /// basis indices): new vertex `i + 1` is old vertex `σ(i) + 1`, and the
    /// root stays fixed. Matches [`RBOperator::conjugate`].
    ///
    /// [`RBOperator::conjugate`]: crate::rbcore::RBOperator::conjugate
    pub fn relabel(&self, perm: &Permutation) -> Result<RootedTree> {
        if perm.len() != self.n() {
            return Err(Error::InvalidPermutation("size differs from tree".into()));
        }
        let inv = perm.inverse();
        let parent = (0..self.n())
            .map(|i| match self.parent(perm.apply(i) + 1) {
                0 => 0,
                p => inv.apply(p - 1) + 1,
            })
            .collect();
        Ok(RootedTree { parent })
    }

    /// Canonical form of the uncoloured shape.
    pub fn shape_code(&self) -> CanonicalCode {
        canonical_code_with(self, |_| '.')
    }
}

fn bfs_order(children: &[Vec<usize>]) -> Vec<usize> {
    let mut order = Vec::with_capacity(children.len());
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        queue.extend(children[v].iter().copied());
    }
    order
}

/// Decodes a Prüfer sequence of length `n - 1` over `{0, …, n}` into the
/// corresponding tree, rooted at 0.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<RootedTree> {
    if n == 0 {
        return Ok(RootedTree { parent: Vec::new() });
    }
    if seq.len() != n - 1 || seq.iter().any(|&x| x > n) {
        return Err(Error::InvalidInput(format!(
            "bad Prüfer sequence {seq:?} for n = {n}"
        )));
    }
    let total = n + 1;
    let mut degree = vec![1usize; total];
    for &x in seq {
        degree[x] += 1;
    }
    let mut adj = vec![Vec::new(); total];
    for &x in seq {
        let leaf = (0..total)
            .find(|&v| degree[v] == 1)
            .expect("a leaf always exists");
        adj[leaf].push(x);
        adj[x].push(leaf);
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let mut last = (0..total).filter(|&v| degree[v] == 1);
    let (u, w) = (
        last.next().expect("two leaves remain"),
        last.next().expect("two leaves remain"),
    );
    adj[u].push(w);
    adj[w].push(u);

    let mut parent = vec![usize::MAX; total];
    parent[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &c in &adj[v] {
            if parent[c] == usize::MAX {
                parent[c] = v;
                queue.push_back(c);
            }
        }
    }
    Ok(RootedTree {
        parent: parent[1..].to_vec(),
    })
}

/// `(n + 1)^(n - 1)`, the number of labelled rooted trees on `{0..n}` rooted at 0.
pub fn cayley_count(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::from(n + 1).pow((n - 1) as u32)
}

/// Lexicographic walk over Prüfer sequences, optionally with the first
/// symbol pinned so that the space can be split into independent parts.
#[derive(Clone, Debug)]
pub struct LabeledRootedTrees {
    n: usize,
    seq: Vec<usize>,
    pinned: bool,
    done: bool,
}

impl Iterator for LabeledRootedTrees {
    type Item = RootedTree;

    fn next(&mut self) -> Option<RootedTree> {
        if self.done {
            return None;
        }
        let tree = prufer_decode(self.n, &self.seq).expect("sequence stays in range");
        let floor = usize::from(self.pinned);
        let mut pos = self.seq.len();
        loop {
            if pos <= floor {
                self.done = true;
                break;
            }
            pos -= 1;
            if self.seq[pos] < self.n {
                self.seq[pos] += 1;
                break;
            }
            self.seq[pos] = 0;
        }
        Some(tree)
    }
}

/// Every labelled rooted tree on `{0..n}` with root 0, each exactly once.
pub fn labeled_rooted_trees(n: usize) -> LabeledRootedTrees {
    LabeledRootedTrees {
        n,
        seq: vec![0; n.saturating_sub(1)],
        pinned: false,
        done: false,
    }
}

/// Number of parts used by [`labeled_rooted_trees_part`].
pub fn tree_partition_count(n: usize) -> usize {
    if n >= 2 {
        n + 1
    } else {
        1
    }
}

/// The trees whose Prüfer sequence starts with `part`. Concatenating parts
/// `0..tree_partition_count(n)` gives the order of [`labeled_rooted_trees`].
pub fn labeled_rooted_trees_part(n: usize, part: usize) -> LabeledRootedTrees {
    if n < 2 {
        let mut it = labeled_rooted_trees(n);
        it.done = part != 0;
        return it;
    }
    let mut seq = vec![0; n - 1];
    seq[0] = part;
    LabeledRootedTrees {
        n,
        seq,
        pinned: true,
        done: part > n,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "w")]
    White,
    #[serde(rename = "b")]
    Black,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    fn tag(self) -> char {
        match self {
            Color::White => 'w',
            Color::Black => 'b',
        }
    }
}

/// A rooted tree with each non-root vertex coloured white or black. The root
/// carries a third colour implicitly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColoredRootedTree {
    tree: RootedTree,
    colors: Vec<Color>,
}

impl ColoredRootedTree {
    pub fn new(tree: RootedTree, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != tree.n() {
            return Err(Error::InvalidInput(format!(
                "{} colours for {} non-root vertices",
                colors.len(),
                tree.n()
            )));
        }
        Ok(ColoredRootedTree { tree, colors })
    }

    /// Bit `v - 1` of `mask` set means vertex `v` is black.
    pub fn from_mask(tree: RootedTree, mask: u64) -> Self {
        let colors = (0..tree.n())
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Color::Black
                } else {
                    Color::White
                }
            })
            .collect();
        ColoredRootedTree { tree, colors }
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Colour of a non-root vertex `v ∈ 1..=n`.
    pub fn color(&self, v: usize) -> Color {
        self.colors[v - 1]
    }

    /// Adjacent non-root vertices carry different colours.
    pub fn is_properly_colored(&self) -> bool {
        (1..=self.n()).all(|v| match self.tree.parent(v) {
            0 => true,
            p => self.color(p) != self.color(v),
        })
    }

    /// The colour depends only on the parity of the level `depth - 1`, and
    /// the two parities get different colours.
    pub fn is_alternating(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let depth = self.tree.depths();
        let base = self.color(1);
        let base_parity = (depth[1] - 1) % 2;
        (1..=self.n()).all(|v| {
            let same_parity = (depth[v] - 1) % 2 == base_parity;
            (self.color(v) == base) == same_parity
        })
    }

    /// Swaps white and black on every non-root vertex.
    pub fn flip_colors(&self) -> ColoredRootedTree {
        ColoredRootedTree {
            tree: self.tree.clone(),
            colors: self.colors.iter().map(|c| c.flipped()).collect(),
        }
    }

    /// See [`RootedTree::relabel`].
    pub fn relabel(&self, perm: &Permutation) -> Result<ColoredRootedTree> {
        let tree = self.tree.relabel(perm)?;
        let colors = (0..self.n()).map(|i| self.colors[perm.apply(i)]).collect();
        Ok(ColoredRootedTree { tree, colors })
    }

    /// Rooted canonical form with colour tags; equal codes exactly when the
    /// trees are isomorphic by a colour-preserving relabelling fixing the root.
    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_code_with(&self.tree, |v| self.color(v).tag())
    }
}

/// Every colouring of `tree`, ordered by the black-vertex bit mask.
pub fn colorings(tree: &RootedTree) -> impl Iterator<Item = ColoredRootedTree> + '_ {
    let n = tree.n();
    assert!(n < 64, "colouring masks are limited to 63 vertices");
    (0..1u64 << n).map(move |mask| ColoredRootedTree::from_mask(tree.clone(), mask))
}

/// Canonical code of a (coloured) rooted tree. Each vertex is encoded as
/// `(` tag, sorted child codes, `)`; the root gets the tag `r`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn canonical_code_with(tree: &RootedTree, tag: impl Fn(usize) -> char) -> CanonicalCode {
    let children = tree.children();
    let mut codes: Vec<String> = vec![String::new(); tree.n() + 1];
    for &v in bfs_order(&children).iter().rev() {
        let mut kids: Vec<String> = children[v]
            .iter()
            .map(|&c| std::mem::take(&mut codes[c]))
            .collect();
        kids.sort_unstable();
        let mut s = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>() + 1);
        s.push('(');
        s.push(if v == 0 { 'r' } else { tag(v) });
        for k in kids {
            s.push_str(&k);
        }
        s.push(')');
        codes[v] = s;
    }
    CanonicalCode(std::mem::take(&mut codes[0]))
}

/// One labelled representative per isomorphism class of rooted trees on
/// `{0..n}`, the first one met in Prüfer order, sorted by shape code.
pub fn unlabeled_rooted_trees(n: usize) -> Vec<RootedTree> {
    let mut reps: BTreeMap<CanonicalCode, RootedTree> = BTreeMap::new();
    for t in labeled_rooted_trees(n) {
        reps.entry(t.shape_code()).or_insert(t);
    }
    reps.into_values().collect()
}

/// Tallies of all, properly coloured and alternating colourings of one tree,
/// found by running through every colour mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct ColoringTally {
    pub all: u64,
    pub proper: u64,
    pub alternating: u64,
}

impl ColoringTally {
    pub fn of_tree(tree: &RootedTree) -> ColoringTally {
        let n = tree.n();
        assert!(n < 64, "colouring masks are limited to 63 vertices");
        let inner_edges: Vec<(usize, usize)> = (1..=n)
            .filter_map(|v| match tree.parent(v) {
                0 => None,
                p => Some((v - 1, p - 1)),
            })
            .collect();
        let depth = tree.depths();
        let odd_levels: u64 = (1..=n)
            .filter(|&v| (depth[v] - 1) % 2 == 1)
            .fold(0, |m, v| m | 1 << (v - 1));
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        let mut tally = ColoringTally::default();
        for mask in 0..=full {
            tally.all += 1;
            if inner_edges
                .iter()
                .all(|&(a, b)| (mask >> a ^ mask >> b) & 1 == 1)
            {
                tally.proper += 1;
            }
            if mask == odd_levels || mask == full & !odd_levels {
                tally.alternating += 1;
            }
        }
        tally
    }
}

/// Σ over labelled rooted trees of `2^(root degree)`: a forest with `k`
/// components has exactly `2^k` proper two-colourings, and the components of
/// a tree minus its root are the subtrees of the root's children.
pub fn count_splitting_labeled_fast(n: usize) -> BigUint {
    let mut by_degree = vec![0u64; n + 1];
    for t in labeled_rooted_trees(n) {
        by_degree[t.root_degree()] += 1;
    }
    by_degree
        .iter()
        .enumerate()
        .map(|(d, &c)| BigUint::from(c) << d)
        .fold(BigUint::zero(), |a, b| a + b)
}

/// Runs the Euler transform `E(x) = Π (1 - x^m)^(-b(m))` while generating
/// `b` from the transform computed so far: `next_b(m, e)` sees `e[0..m]`.
/// Returns `(b, e)` with indices `0..=upto` (`b[0]` unused).
fn euler_with_feedback(
    upto: usize,
    next_b: impl Fn(usize, &[BigUint]) -> BigUint,
) -> (Vec<BigUint>, Vec<BigUint>) {
    let mut b = vec![BigUint::zero(); upto + 1];
    let mut e = vec![BigUint::one()];
    // c(j) = Σ_{d | j} d·b(d)
    let mut c = vec![BigUint::zero(); upto + 1];
    for m in 1..=upto {
        b[m] = next_b(m, &e);
        for j in (m..=upto).step_by(m) {
            c[j] += &b[m] * BigUint::from(m);
        }
        let sum = (1..=m).fold(BigUint::zero(), |acc, j| acc + &c[j] * &e[m - j]);
        e.push(sum / BigUint::from(m));
    }
    (b, e)
}

/// Number of unlabelled rooted trees on `m` vertices for `m = 0..=upto`.
pub fn rooted_tree_counts(upto: usize) -> Vec<BigUint> {
    euler_with_feedback(upto, |m, e| e[m - 1].clone()).0
}

/// Unlabelled rooted trees on `n + 1` vertices with two-coloured non-root
/// vertices. A coloured subtree with `m` vertices is a root colour times a
/// multiset of coloured subtrees on `m - 1` vertices; the whole tree is a
/// multiset of coloured subtrees hung off the uncoloured root.
pub fn count_unlabeled_all(n: usize) -> BigUint {
    let (_, e) = euler_with_feedback(n, |m, e| BigUint::from(2u32) * &e[m - 1]);
    e[n].clone()
}

/// Unlabelled alternating classes: each shape admits exactly two
/// alternating colourings, so this is twice the rooted-tree count on `n + 1`
/// vertices.
pub fn count_unlabeled_alternating(n: usize) -> BigUint {
    BigUint::from(2u32) * &rooted_tree_counts(n + 1)[n + 1]
}

/// Unlabelled properly coloured classes: a properly coloured subtree is
/// determined by its shape and its root colour, so the count is the Euler
/// transform of `2·(rooted trees)` evaluated at `n`.
pub fn count_unlabeled_proper(n: usize) -> BigUint {
    let shapes = rooted_tree_counts(n);
    let (_, e) = euler_with_feedback(n, |m, _| BigUint::from(2u32) * &shapes[m]);
    e[n].clone()
}

/// `{"n": 3, "parent": [0, 1, 1], "color": ["w", "b", "b"]}`; `weight` is
/// optional and defaults to 1 when read by the bijection.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ColoredTreeFile {
    pub n: usize,
    pub parent: Vec<usize>,
    pub color: Vec<Color>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Rational>,
}

impl ColoredTreeFile {
    pub fn from_tree(t: &ColoredRootedTree, weight: Option<Rational>) -> Self {
        ColoredTreeFile {
            n: t.n(),
            parent: t.tree.parent.clone(),
            color: t.colors.clone(),
            weight,
        }
    }

    pub fn to_tree(&self) -> Result<ColoredRootedTree> {
        if self.color.len() != self.n {
            return Err(Error::Malformed(format!(
                "{} colours listed for n = {}",
                self.color.len(),
                self.n
            )));
        }
        if self.parent.len() != self.n {
            return Err(Error::Malformed(format!(
                "{} parents listed for n = {}",
                self.parent.len(),
                self.n
            )));
        }
        ColoredRootedTree::new(RootedTree::new(self.parent.clone())?, self.color.clone())
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;

    fn colored(parent: &[usize], colors: &str) -> ColoredRootedTree {
        let cs = colors
            .chars()
            .map(|c| if c == 'w' { Color::White } else { Color::Black })
            .collect();
        ColoredRootedTree::new(RootedTree::new(parent.to_vec()).unwrap(), cs).unwrap()
    }

    #[test]
    fn rejects_non_trees() {
        assert!(RootedTree::new(vec![2, 1]).is_err());
        assert!(RootedTree::new(vec![1]).is_err());
        assert!(RootedTree::new(vec![0, 5]).is_err());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(labeled_rooted_trees(1).count(), 1);
        assert_eq!(labeled_rooted_trees(2).count(), 3);
        assert_eq!(labeled_rooted_trees(4).count(), 125);
        for n in 1..=6 {
            let all: Vec<_> = labeled_rooted_trees(n).collect();
            assert_eq!(BigUint::from(all.len()), cayley_count(n));
            let distinct: BTreeSet<_> = all.iter().collect();
            assert_eq!(distinct.len(), all.len(), "duplicates at n = {n}");
        }
    }

    #[test]
    fn partitions_concatenate_to_full_order() {
        for n in 1..=5 {
            let whole: Vec<_> = labeled_rooted_trees(n).collect();
            let parts: Vec<_> = (0..tree_partition_count(n))
                .flat_map(|p| labeled_rooted_trees_part(n, p))
                .collect();
            assert_eq!(whole, parts);
        }
    }

    #[test]
    fn two_vertex_trees_by_hand() {
        let mut got: Vec<_> = labeled_rooted_trees(2).map(|t| t.edges()).collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                vec![(0, 1), (0, 2)],
                vec![(0, 1), (1, 2)],
                vec![(0, 2), (2, 1)]
            ]
        );
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(colorings(&RootedTree::star(1)).count(), 2);
        assert_eq!(colorings(&RootedTree::star(2)).count(), 4);
        assert_eq!(
            colorings(&RootedTree::new(vec![0, 1, 2]).unwrap()).count(),
            8
        );
    }

    #[test]
    fn proper_coloring_examples() {
        assert!(!colored(&[0, 1], "ww").is_properly_colored());
        assert!(colored(&[0, 0], "bw").is_properly_colored());
        assert!(colorings(&RootedTree::star(4)).all(|t| t.is_properly_colored()));
    }

    #[test]
    fn alternating_examples() {
        assert!(colored(&[0, 0, 0], "www").is_alternating());
        assert!(colored(&[0, 1], "wb").is_alternating());
        assert!(!colored(&[0, 1], "ww").is_alternating());
        assert!(!colored(&[0, 0], "wb").is_alternating());
        assert!(colored(&[0, 1, 1, 0], "bwwb").is_alternating());
    }

    #[test]
    fn alternating_implies_proper() {
        for t in labeled_rooted_trees(4) {
            for c in colorings(&t) {
                if c.is_alternating() {
                    assert!(c.is_properly_colored());
                }
            }
        }
    }

    #[test]
    fn tally_matches_predicates() {
        for t in labeled_rooted_trees(4) {
            let tally = ColoringTally::of_tree(&t);
            let proper = colorings(&t).filter(|c| c.is_properly_colored()).count() as u64;
            let alt = colorings(&t).filter(|c| c.is_alternating()).count() as u64;
            assert_eq!(
                (tally.all, tally.proper, tally.alternating),
                (16, proper, alt)
            );
            assert_eq!(tally.alternating, 2);
        }
    }

    #[test]
    fn canonical_code_counts_small() {
        let codes1: BTreeSet<_> = colorings(&RootedTree::star(1))
            .map(|c| c.canonical_code())
            .collect();
        assert_eq!(codes1.len(), 2);
        let codes2: BTreeSet<_> = labeled_rooted_trees(2)
            .flat_map(|t| {
                colorings(&t)
                    .map(|c| c.canonical_code())
                    .collect::<Vec<_>>()
            })
            .collect();
        assert_eq!(codes2.len(), 7);
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let t = colored(&[0, 1, 1, 2, 0], "wbbwb");
        let perm = Permutation::new(vec![4, 2, 0, 3, 1]).unwrap();
        let r = t.relabel(&perm).unwrap();
        assert_ne!(r, t);
        assert_eq!(r.canonical_code(), t.canonical_code());
        assert_ne!(t.canonical_code(), t.flip_colors().canonical_code());
    }

    #[test]
    fn unlabeled_shapes() {
        let counts: Vec<usize> = (1..=6).map(|n| unlabeled_rooted_trees(n).len()).collect();
        // rooted trees on n + 1 vertices
        assert_eq!(counts, vec![1, 2, 4, 9, 20, 48]);
    }

    #[test]
    fn recurrences() {
        let a: Vec<u64> = rooted_tree_counts(8)
            .iter()
            .map(|x| x.to_string().parse().unwrap())
            .collect();
        assert_eq!(&a[1..], &[1, 1, 2, 4, 9, 20, 48, 115]);
        let all: Vec<String> = (1..=8)
            .map(|n| count_unlabeled_all(n).to_string())
            .collect();
        assert_eq!(all, ["2", "7", "26", "107", "458", "2058", "9498", "44947"]);
        let alt: Vec<String> = (1..=5)
            .map(|n| count_unlabeled_alternating(n).to_string())
            .collect();
        assert_eq!(alt, ["2", "4", "8", "18", "40"]);
        let proper: Vec<String> = (1..=5)
            .map(|n| count_unlabeled_proper(n).to_string())
            .collect();
        assert_eq!(proper, ["2", "5", "12", "30", "74"]);
    }

    #[test]
    fn fast_splitting_count() {
        let got: Vec<String> = (1..=5)
            .map(|n| count_splitting_labeled_fast(n).to_string())
            .collect();
        assert_eq!(got, ["2", "8", "50", "432", "4802"]);
    }

    /// Proper two-colourings of unrooted labelled forests on `n` vertices,
    /// by brute force over edge subsets of the complete graph.
    fn proper_forest_colorings(n: usize) -> u64 {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut total = 0;
        for subset in 0u32..1 << pairs.len() {
            let mut comp: Vec<usize> = (0..n).collect();
            fn find(c: &mut [usize], x: usize) -> usize {
                if c[x] != x {
                    let r = find(c, c[x]);
                    c[x] = r;
                }
                c[x]
            }
            let mut acyclic = true;
            let mut components = n;
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if subset >> b & 1 == 1 {
                    let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                    if ri == rj {
                        acyclic = false;
                        break;
                    }
                    comp[ri] = rj;
                    components -= 1;
                }
            }
            if acyclic {
                total += 1u64 << components;
            }
        }
        total
    }

    #[test]
    fn unrooted_forest_count_is_a_different_sequence() {
        assert_eq!(proper_forest_colorings(2), 6);
        let differs = (2..=4)
            .any(|n| BigUint::from(proper_forest_colorings(n)) != count_splitting_labeled_fast(n));
        assert!(differs);
    }

    #[test]
    fn tree_file_roundtrip() {
        let t = colored(&[0, 1, 1], "wbb");
        let json = serde_json::to_string(&ColoredTreeFile::from_tree(&t, None)).unwrap();
        assert_eq!(json, r#"{"n":3,"parent":[0,1,1],"color":["w","b","b"]}"#);
        let back: ColoredTreeFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_tree().unwrap(), t);
    }
}
