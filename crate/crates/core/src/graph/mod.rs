//! Simple undirected labeled graphs and their structural analysis.
//!
//! A [`Graph`] stores its vertex count, the sorted edge set `{u, v}` with
//! `u < v`, and sorted neighbor lists derived from it. Graphs are immutable
//! once built; every analysis in this module is a pure function.

mod format;
mod matching;
mod structure;

pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
pub use matching::{is_matching, maximum_matching};
pub use structure::{
    classify_structure, complete_bipartite_certificate, connected_components,
    is_union_complete_bipartite, ComponentPartition, StructureKind, StructuralClass,
};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors raised while building or parsing a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    /// Edge-list parse failure; `line` is 1-based.
    #[error("line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Reversed and repeated pairs
    /// collapse to a single edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted_edges(n, edges)
    }

    /// Path `P_n` on vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted_edges(n, edges)
    }

    /// Cycle `C_n`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Complete bipartite graph `K_{a,b}`: vertices `0..a` on one side,
    /// `a..a+b` on the other.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Self::from_sorted_edges(a + b, edges)
    }

    /// Star `K_{1,m}` with center 0.
    pub fn star(m: usize) -> Self {
        Self::complete_bipartite(1, m)
    }

    /// The Petersen graph: outer 5-cycle, spokes, inner pentagram.
    pub fn petersen() -> Self {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::new(10, edges).expect("Petersen edges are valid")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_sorted_edges(self.n + other.n, edges)
    }

    /// Subgraph induced by `vertices`, relabeled `0..vertices.len()` in the
    /// given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges).expect("induced edges are valid")
    }

    // `edges` must be sorted, deduplicated, with u < v < n.
    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            debug_assert!(u < v && v < n);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, edges, adjacency }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }
}

impl fmt::Display for Graph {
    /// Formats the graph as its graph6 string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedups_reversed_pairs() {
        let g = Graph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_self_loop_and_out_of_range() {
        assert_eq!(Graph::new(1, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_degrees_sum() {
        let g = Graph::petersen();
        assert_eq!(g.size(), 15);
        for v in 0..g.order() {
            assert_eq!(g.degree(v), 3);
            for &w in g.neighbors(v) {
                assert!(g.neighbors(w).contains(&v));
            }
        }
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
    }

    #[test]
    fn constructors() {
        assert_eq!(Graph::path(4).edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(Graph::cycle(4).size(), 4);
        assert_eq!(Graph::complete(5).size(), 10);
        assert_eq!(Graph::complete_bipartite(2, 3).size(), 6);
        let u = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(u.edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::path(4);
        let h = g.induced_subgraph(&[3, 2, 0]);
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges(), &[(0, 1)]);
    }
}
