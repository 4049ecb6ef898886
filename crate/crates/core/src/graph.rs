//! The structure digraph of a weight-1 operator: vertex `i` points at `k`
//! whenever `r_ik ≠ 0`. Valid operators give transitive, antisymmetric,
//! moral digraphs (moral TDAGs), which are in bijection with labelled rooted
//! trees on `n + 1` vertices.
//!
//! Vertices are 0-based here (vertex `i` is the basis vector `e_{i+1}`); the
//! JSON form and tree labels are 1-based.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rbcore::RBOperator;
use crate::trees::RootedTree;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StructureDigraph {
    n: usize,
    adj: Vec<bool>,
}

impl StructureDigraph {
    pub fn empty(n: usize) -> Self {
        StructureDigraph {
            n,
            adj: vec![false; n * n],
        }
    }

    /// Builds a digraph from 0-based edges; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = StructureDigraph::empty(n);
        for &(i, k) in edges {
            if i >= n || k >= n || i == k {
                return Err(Error::InvalidInput(format!(
                    "bad edge ({i}, {k}) on {n} vertices"
                )));
            }
            g.adj[i * n + k] = true;
        }
        Ok(g)
    }

    /// Off-diagonal support of the operator matrix. The diagonal carries the
    /// colours and is ignored here.
    pub fn from_operator(op: &RBOperator) -> Self {
        let n = op.n();
        let mut g = StructureDigraph::empty(n);
        for i in 0..n {
            for k in 0..n {
                if i != k && !op.entry(i, k).is_zero() {
                    g.adj[i * n + k] = true;
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, k: usize) -> bool {
        self.adj[i * self.n + k]
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n)
            .flat_map(|i| (0..n).map(move |k| (i, k)))
            .filter(|&(i, k)| self.has_edge(i, k))
            .collect()
    }

    pub fn predecessors(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&i| self.has_edge(i, k))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (i + 1..n).all(|k| !(self.has_edge(i, k) && self.has_edge(k, i))))
    }

    /// `(i,k)` and `(k,l)` imply `(i,l)` for pairwise distinct `i, k, l`.
    pub fn is_transitive(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for k in (0..n).filter(|&k| self.has_edge(i, k)) {
                for l in (0..n).filter(|&l| l != i && self.has_edge(k, l)) {
                    if !self.has_edge(i, l) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Some induced subgraph on `{i, k, l}` with edge set exactly
    /// `{(i,l), (k,l)}`, if one exists.
    pub fn find_immorality(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for l in 0..n {
            let preds: Vec<usize> = self.predecessors(l).collect();
            for (a, &i) in preds.iter().enumerate() {
                for &k in &preds[a + 1..] {
                    if !self.has_edge(i, k) && !self.has_edge(k, i) {
                        return Some((i, k, l));
                    }
                }
            }
        }
        None
    }

    pub fn is_moral(&self) -> bool {
        self.find_immorality().is_none()
    }

    /// Antisymmetric, transitive and moral.
    pub fn is_valid(&self) -> bool {
        self.is_antisymmetric() && self.is_transitive() && self.is_moral()
    }

    fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.n;
        let mut indeg: Vec<usize> = (0..n).map(|k| self.predecessors(k).count()).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for (k, d) in indeg.iter_mut().enumerate() {
                if self.has_edge(v, k) {
                    *d -= 1;
                    if *d == 0 {
                        queue.push_back(k);
                    }
                }
            }
        }
        if order.len() != n {
            return Err(Error::GraphPrecondition(
                "digraph has a directed cycle".into(),
            ));
        }
        Ok(order)
    }

    /// Sources from which `v` is reachable (including `v` itself if it is a
    /// source), found by reverse reachability.
    fn sources_reaching(&self, v: usize) -> Vec<usize> {
        let n = self.n;
        let mut seen = vec![false; n];
        let mut stack = vec![v];
        seen[v] = true;
        let mut sources = Vec::new();
        while let Some(x) = stack.pop() {
            let mut is_source = true;
            for p in self.predecessors(x) {
                is_source = false;
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
            if is_source {
                sources.push(x);
            }
        }
        sources.sort_unstable();
        sources
    }

    /// Level of each vertex: 0 for sources, otherwise the length of the
    /// longest directed path from its unique source.
    ///
    /// In a transitive digraph every vertex is one edge away from its source,
    /// so only the longest path reproduces the tree depth.
    pub fn level_function(&self) -> Result<LevelMap> {
        let order = self.topological_order()?;
        for v in 0..self.n {
            let sources = self.sources_reaching(v);
            if sources.len() > 1 {
                return Err(Error::GraphPrecondition(format!(
                    "vertex {} is reachable from sources {} and {}",
                    v + 1,
                    sources[0] + 1,
                    sources[1] + 1
                )));
            }
        }
        let mut levels = vec![0usize; self.n];
        for &v in &order {
            if let Some(best) = self.predecessors(v).map(|p| levels[p] + 1).max() {
                levels[v] = best;
            }
        }
        Ok(LevelMap { levels })
    }

    /// The labelled rooted tree on `{0, 1, …, n}` with root 0: sources hang
    /// off the root and each other vertex `j` hangs off the predecessor one
    /// level above it. Tree vertex `v ≥ 1` is digraph vertex `v - 1`.
    pub fn to_rooted_tree(&self) -> Result<RootedTree> {
        if !self.is_antisymmetric() {
            return Err(Error::GraphPrecondition(
                "digraph is not antisymmetric".into(),
            ));
        }
        if !self.is_transitive() {
            return Err(Error::GraphPrecondition("digraph is not transitive".into()));
        }
        if let Some((i, k, l)) = self.find_immorality() {
            return Err(Error::GraphPrecondition(format!(
                "immorality {} -> {} <- {}",
                i + 1,
                l + 1,
                k + 1
            )));
        }
        let levels = self.level_function()?;
        let mut parent = vec![0usize; self.n];
        for (j, slot) in parent.iter_mut().enumerate() {
            let f = levels.level(j);
            if f == 0 {
                continue;
            }
            let mut candidates = self.predecessors(j).filter(|&i| levels.level(i) + 1 == f);
            match (candidates.next(), candidates.next()) {
                (Some(i), None) => *slot = i + 1,
                (None, _) => {
                    return Err(Error::NotATree(format!("vertex {} has no parent", j + 1)))
                }
                (Some(_), Some(_)) => {
                    return Err(Error::NotATree(format!("vertex {} has two parents", j + 1)))
                }
            }
        }
        RootedTree::new(parent)
    }

    /// Inverse of [`to_rooted_tree`](Self::to_rooted_tree): every non-root
    /// ancestor of `j` points at `j`.
    pub fn from_rooted_tree(tree: &RootedTree) -> Self {
        let n = tree.n();
        let mut g = StructureDigraph::empty(n);
        for j in 1..=n {
            let mut a = tree.parent(j);
            while a != 0 {
                g.adj[(a - 1) * n + (j - 1)] = true;
                a = tree.parent(a);
            }
        }
        g
    }
}

/// Level of each digraph vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LevelMap {
    levels: Vec<usize>,
}

impl LevelMap {
    pub fn level(&self, v: usize) -> usize {
        self.levels[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.levels
    }

    pub fn max_level(&self) -> Option<usize> {
        self.levels.iter().copied().max()
    }

    /// Number of vertices on each level `0..=max_level`.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.max_level().map_or(0, |t| t + 1)];
        for &f in &self.levels {
            sizes[f] += 1;
        }
        sizes
    }
}

/// `{"n": 3, "edges": [[1, 2], [1, 3]]}` with 1-based vertices.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DigraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&StructureDigraph> for DigraphFile {
    fn from(g: &StructureDigraph) -> Self {
        DigraphFile {
            n: g.n,
            edges: g.edges().into_iter().map(|(i, k)| [i + 1, k + 1]).collect(),
        }
    }
}

impl TryFrom<DigraphFile> for StructureDigraph {
    type Error = Error;

    fn try_from(file: DigraphFile) -> Result<Self> {
        let mut edges = Vec::with_capacity(file.edges.len());
        for [i, k] in file.edges {
            if i == 0 || k == 0 {
                return Err(Error::InvalidInput("digraph vertices are 1-based".into()));
            }
            edges.push((i - 1, k - 1));
        }
        StructureDigraph::from_edges(file.n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rbcore::RBOperator;

    fn graph(n: usize, one_based: &[(usize, usize)]) -> StructureDigraph {
        let e: Vec<_> = one_based.iter().map(|&(i, k)| (i - 1, k - 1)).collect();
        StructureDigraph::from_edges(n, &e).unwrap()
    }

    fn sample_graph() -> StructureDigraph {
        graph(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
    }

    #[test]
    fn digraph_from_matrix_examples() {
        let z = RBOperator::zero(4, 1.into());
        assert!(StructureDigraph::from_operator(&z).edges().is_empty());
        assert_eq!(
            StructureDigraph::from_operator(&fixtures::five_field_sample()),
            sample_graph()
        );
        let one = RBOperator::from_i64_rows(1, &[&[0, 1], &[0, 0]]).unwrap();
        assert_eq!(StructureDigraph::from_operator(&one).edges(), vec![(0, 1)]);
    }

    #[test]
    fn validity_predicates() {
        let e = StructureDigraph::empty(3);
        assert!(e.is_antisymmetric() && e.is_transitive() && e.is_moral());
        assert!(!graph(3, &[(1, 3), (2, 3)]).is_moral());
        assert!(!graph(3, &[(1, 2), (2, 3)]).is_transitive());
        assert!(graph(3, &[(1, 2), (2, 3), (1, 3)]).is_valid());
        assert!(!graph(2, &[(1, 2), (2, 1)]).is_antisymmetric());
    }

    #[test]
    fn level_examples() {
        let f = sample_graph().level_function().unwrap();
        assert_eq!(f.as_slice(), &[0, 1, 2, 2, 0]);
        assert_eq!(f.block_sizes(), vec![2, 1, 2]);
        assert_eq!(
            StructureDigraph::empty(4)
                .level_function()
                .unwrap()
                .as_slice(),
            &[0; 4]
        );
        let chain = graph(3, &[(1, 2), (2, 3), (1, 3)]);
        assert_eq!(chain.level_function().unwrap().as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn level_preconditions() {
        let cyc = graph(3, &[(1, 2), (2, 3), (3, 1)]);
        assert!(matches!(
            cyc.level_function(),
            Err(Error::GraphPrecondition(_))
        ));
        let two_sources = graph(3, &[(1, 3), (2, 3)]);
        let err = two_sources.level_function().unwrap_err().to_string();
        assert!(err.contains("sources 1 and 2"), "{err}");
    }

    #[test]
    fn tree_construction_examples() {
        let star = StructureDigraph::empty(3).to_rooted_tree().unwrap();
        assert_eq!(star.parents(), &[0, 0, 0]);
        let t = sample_graph().to_rooted_tree().unwrap();
        assert_eq!(t.edges(), vec![(0, 1), (0, 5), (1, 2), (2, 3), (2, 4)]);
        let single = graph(2, &[(1, 2)]).to_rooted_tree().unwrap();
        assert_eq!(single.edges(), vec![(0, 1), (1, 2)]);
        assert!(graph(3, &[(1, 2), (2, 3)]).to_rooted_tree().is_err());
        assert!(graph(3, &[(1, 3), (2, 3)]).to_rooted_tree().is_err());
    }

    #[test]
    fn from_tree_examples() {
        let star = RootedTree::new(vec![0, 0, 0]).unwrap();
        assert!(StructureDigraph::from_rooted_tree(&star).edges().is_empty());
        let path = RootedTree::new(vec![0, 1, 2]).unwrap();
        assert_eq!(
            StructureDigraph::from_rooted_tree(&path),
            graph(3, &[(1, 2), (1, 3), (2, 3)])
        );
    }

    #[test]
    fn digraph_json() {
        let file = DigraphFile::from(&sample_graph());
        assert_eq!(
            serde_json::to_string(&file).unwrap(),
            r#"{"n":5,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4]]}"#
        );
        assert_eq!(StructureDigraph::try_from(file).unwrap(), sample_graph());
    }
}
