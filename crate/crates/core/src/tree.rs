//! Undirected trees, their distance matrices, and seeded random generation.
//!
//! Random trees decode a uniformly sampled sequence of length n-2 over the
//! vertex set (the classical bijection with labeled trees). The stream
//! comes from ChaCha8 seeded with a caller-supplied value, and the decoder
//! always removes the smallest available leaf, so a seed reproduces the
//! same tree on every platform.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::matrix::DenseMatrix;
use crate::ring::Integer;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("{n} vertices require exactly {} edges, got {got}", n - 1)]
    WrongEdgeCount { n: usize, got: usize },
    #[error("edge ({0}, {1}) out of range")]
    EdgeOutOfRange(usize, usize),
    #[error("edges do not form a connected acyclic graph")]
    NotConnected,
}

/// A tree on vertices `0 .. n-1`, stored as an unordered edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Tree {
    /// Validates connectivity and acyclicity at construction.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, TreeError> {
        if n == 0 {
            return Err(TreeError::Empty);
        }
        if edges.len() != n - 1 {
            return Err(TreeError::WrongEdgeCount {
                n,
                got: edges.len(),
            });
        }
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(TreeError::EdgeOutOfRange(u, v));
            }
        }
        let tree = Tree { n, edges };
        // n-1 edges + connected implies acyclic
        if tree.distances_from(0).contains(&usize::MAX) {
            return Err(TreeError::NotConnected);
        }
        Ok(tree)
    }

    /// Path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| (v - 1, v)).collect()).expect("path is a tree")
    }

    /// Star with center `0`.
    pub fn star(n: usize) -> Self {
        Tree::new(n, (1..n).map(|v| (0, v)).collect()).expect("star is a tree")
    }

    /// The four-vertex star with center at the second vertex, edges
    /// (0,1), (1,2), (1,3).
    pub fn star_k13() -> Self {
        Tree::new(4, vec![(0, 1), (1, 2), (1, 3)]).expect("K_{1,3} is a tree")
    }

    /// Uniformly random labeled tree, deterministic for a given seed.
    pub fn random(n: usize, seed: u64) -> Self {
        assert!(n >= 1, "a tree needs at least one vertex");
        if n == 1 {
            return Tree { n, edges: vec![] };
        }
        if n == 2 {
            return Tree {
                n,
                edges: vec![(0, 1)],
            };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        Tree::decode(&code)
    }

    /// Decode a vertex sequence of length n-2 into the unique tree whose
    /// leaf-removal trace it is (smallest leaf removed first).
    fn decode(code: &[usize]) -> Self {
        let n = code.len() + 2;
        let mut degree = vec![1u32; n];
        for &v in code {
            degree[v] += 1;
        }
        let mut leaves: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
        let mut edges = Vec::with_capacity(n - 1);
        for &v in code {
            let Reverse(leaf) = leaves.pop().expect("decoder invariant");
            edges.push((leaf, v));
            degree[v] -= 1;
            if degree[v] == 1 {
                leaves.push(Reverse(v));
            }
        }
        let Reverse(u) = leaves.pop().expect("two vertices remain");
        let Reverse(v) = leaves.pop().expect("two vertices remain");
        edges.push((u, v));
        Tree { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Breadth-first distances from `start`; unreachable = usize::MAX.
    pub fn distances_from(&self, start: usize) -> Vec<usize> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut dist = vec![usize::MAX; self.n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Vertices along the unique path from `a` to `b`, inclusive.
    pub fn path_between(&self, a: usize, b: usize) -> Vec<usize> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut parent = vec![usize::MAX; self.n];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut path = vec![b];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        path
    }

    /// Matrix of pairwise path lengths.
    pub fn distance_matrix(&self) -> DenseMatrix<Integer> {
        let rows: Vec<Vec<usize>> = (0..self.n).map(|v| self.distances_from(v)).collect();
        DenseMatrix::from_fn(self.n, format!("tree_distance(n={})", self.n), |j, k| {
            Integer::from(rows[j][k] as u64)
        })
        .expect("n >= 1")
    }

    /// Compact rendering of the edge list, e.g. `(0-1)(1-2)`.
    pub fn render_edges(&self) -> String {
        if self.edges.is_empty() {
            return "()".to_string();
        }
        self.edges
            .iter()
            .map(|&(u, v)| format!("({u}-{v})"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_distances() {
        let m = Tree::path(3).distance_matrix();
        let expect: Vec<i64> = vec![0, 1, 2, 1, 0, 1, 2, 1, 0];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(m.at(i / 3, i % 3), &Integer::from(*e));
        }
    }

    #[test]
    fn star_k13_distances() {
        let t = Tree::star_k13();
        let d = t.distance_matrix();
        assert_eq!(d.at(0, 2), &Integer::from(2));
        assert_eq!(d.at(0, 1), &Integer::from(1));
        assert_eq!(d.at(2, 3), &Integer::from(2));
        assert!(d.is_symmetric());
    }

    #[test]
    fn single_vertex() {
        let t = Tree::random(1, 99);
        assert_eq!(t.vertex_count(), 1);
        assert!(t.edges().is_empty());
        assert_eq!(t.distance_matrix().at(0, 0), &Integer::from(0));
    }

    #[test]
    fn two_vertices() {
        let t = Tree::random(2, 5);
        assert_eq!(t.edges(), &[(0, 1)]);
    }

    #[test]
    fn random_trees_are_trees_and_reproducible() {
        for n in 1..=10usize {
            for seed in 0..20u64 {
                let t = Tree::random(n, seed);
                assert_eq!(t.edges().len(), n - 1);
                assert!(t.distances_from(0).iter().all(|&d| d != usize::MAX));
                assert_eq!(t, Tree::random(n, seed));
            }
        }
        let a = Tree::random(5, 42);
        assert_eq!(a.edges().len(), 4);
    }

    #[test]
    fn distance_matrix_metric_properties() {
        for seed in 0..10u64 {
            let t = Tree::random(8, seed);
            let d = t.distance_matrix();
            assert!(d.is_symmetric());
            for v in 0..8 {
                assert_eq!(d.at(v, v), &Integer::from(0));
            }
            // triangle equality along tree paths
            for a in 0..8 {
                for c in 0..8 {
                    let path = t.path_between(a, c);
                    for &b in &path {
                        let sum = d.at(a, b) + d.at(b, c);
                        assert_eq!(&sum, d.at(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn invalid_trees_rejected() {
        assert!(matches!(Tree::new(0, vec![]), Err(TreeError::Empty)));
        assert!(matches!(
            Tree::new(3, vec![(0, 1)]),
            Err(TreeError::WrongEdgeCount { .. })
        ));
        // right edge count but disconnected (duplicate edge forms a cycle)
        assert!(matches!(
            Tree::new(4, vec![(0, 1), (1, 0), (2, 3)]),
            Err(TreeError::NotConnected)
        ));
        assert!(matches!(
            Tree::new(2, vec![(0, 5)]),
            Err(TreeError::EdgeOutOfRange(0, 5))
        ));
    }
}
