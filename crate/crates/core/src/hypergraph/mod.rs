//! r-uniform multi-hypergraphs over dense vertex ids.

mod canon;
mod cycles;
mod enumerate;
pub mod io;
mod ops;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{CanonOptions, DEFAULT_CANON_BOUND};
pub use cycles::Walk;
pub use enumerate::{enumerate_hypertrees, subgraph_from_edges};
pub use ops::Contraction;

/// A cycle is a closed [`Walk`] with distinct vertices and edges.
pub type Cycle = Walk;

/// Construction flags for [`Hypergraph::with_options`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub allow_multi: bool,
    pub allow_isolated: bool,
}

/// An r-uniform hypergraph whose edges are ascending vertex lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypergraph {
    rank: usize,
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    allow_multi: bool,
    allow_isolated: bool,
}

impl Hypergraph {
    /// Builds a simple hypergraph with no isolated vertices.
    ///
    /// The single-vertex graph with no edges is always accepted.
    pub fn new(rank: usize, vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_options(rank, vertex_count, edges, Options::default())
    }

    /// Builds a hypergraph that may carry repeated edges.
    pub fn new_multi(rank: usize, vertex_count: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let options = Options { allow_multi: true, allow_isolated: false };
        Self::with_options(rank, vertex_count, edges, options)
    }

    /// The one-vertex hypergraph with no edges.
    pub fn trivial(rank: usize) -> Result<Self> {
        Self::new(rank, 1, Vec::new())
    }

    pub fn with_options(
        rank: usize,
        vertex_count: usize,
        mut edges: Vec<Vec<usize>>,
        options: Options,
    ) -> Result<Self> {
        if rank < 2 {
            return Err(Error::RankTooSmall { rank, min: 2 });
        }
        if vertex_count == 0 {
            return Err(Error::Parse("vertex count must be at least 1".into()));
        }
        for (index, edge) in edges.iter_mut().enumerate() {
            if edge.len() != rank {
                return Err(Error::InvalidEdge {
                    index,
                    reason: format!("has {} vertices, rank is {rank}", edge.len()),
                });
            }
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, count: vertex_count });
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidEdge { index, reason: "repeated vertex".into() });
            }
        }
        if !options.allow_multi {
            let mut seen = std::collections::HashSet::new();
            for (index, edge) in edges.iter().enumerate() {
                if !seen.insert(edge.clone()) {
                    return Err(Error::DuplicateEdge { index });
                }
            }
        }
        let h = Hypergraph {
            rank,
            vertex_count,
            edges,
            allow_multi: options.allow_multi,
            allow_isolated: options.allow_isolated,
        };
        if !options.allow_isolated && !(vertex_count == 1 && h.edges.is_empty()) {
            if let Some(v) = h.degrees().iter().position(|&d| d == 0) {
                return Err(Error::IsolatedVertex(v));
            }
        }
        Ok(h)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&[usize]> {
        self.edges.get(index).map(Vec::as_slice).ok_or(Error::EdgeOutOfRange { index, count: self.edges.len() })
    }

    pub fn allow_multi(&self) -> bool {
        self.allow_multi
    }

    pub fn allow_isolated(&self) -> bool {
        self.allow_isolated
    }

    pub(crate) fn options(&self) -> Options {
        Options { allow_multi: self.allow_multi, allow_isolated: self.allow_isolated }
    }

    /// Number of edges containing `v`, counted with multiplicity.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    /// For each vertex, the indices of the edges containing it.
    pub fn incidence_lists(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, None).iter().all(|&seen| seen)
    }

    /// True iff no two edges share two or more vertices (so no repeats either).
    pub fn is_simple(&self) -> bool {
        let inc = self.incidence_lists();
        let mut mark = vec![usize::MAX; self.edges.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                for &f in &inc[v] {
                    if f == i {
                        continue;
                    }
                    if mark[f] == i {
                        return false;
                    }
                    mark[f] = i;
                }
            }
        }
        true
    }

    pub fn is_hypertree(&self) -> bool {
        self.is_connected() && self.find_cycle().is_none()
    }

    /// Applies `perm` (old id to new id) to every vertex.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.vertex_count {
            return Err(Error::LengthMismatch { expected: self.vertex_count, got: perm.len() });
        }
        let edges = self.edges.iter().map(|e| e.iter().map(|&v| perm[v]).collect()).collect();
        Self::with_options(self.rank, self.vertex_count, edges, self.options())
    }

    /// Same hypergraph with the edge list reordered.
    pub fn permute_edges(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.edges.len() {
            return Err(Error::LengthMismatch { expected: self.edges.len(), got: order.len() });
        }
        let edges = order.iter().map(|&i| self.edges[i].clone()).collect();
        Self::with_options(self.rank, self.vertex_count, edges, self.options())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, count: self.vertex_count })
        }
    }

    pub(crate) fn check_edge(&self, index: usize) -> Result<()> {
        if index < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { index, count: self.edges.len() })
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Vertices reachable from `start`, optionally ignoring one edge.
    pub(crate) fn component_of(&self, start: usize, skip_edge: Option<usize>) -> Vec<bool> {
        let inc = self.incidence_lists();
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            for &f in &inc[v] {
                if Some(f) == skip_edge {
                    continue;
                }
                for &u in &self.edges[f] {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> Hypergraph {
        Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap()
    }

    #[test]
    fn degree_counts() {
        assert_eq!(c2().degree(0).unwrap(), 2);
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(single.degree(1).unwrap(), 1);
        assert!(matches!(single.degree(3), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1]]).is_err());
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1, 1]]).is_err());
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1, 3]]).is_err());
        assert!(Hypergraph::new(3, 4, vec![vec![0, 1, 2]]).is_err());
        let dup = vec![vec![0, 1, 2], vec![2, 1, 0]];
        assert_eq!(Hypergraph::new(3, 3, dup.clone()), Err(Error::DuplicateEdge { index: 1 }));
        assert!(Hypergraph::new_multi(3, 3, dup).is_ok());
    }

    #[test]
    fn edges_are_sorted() {
        let h = Hypergraph::new(3, 3, vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(h.edges()[0], vec![0, 1, 2]);
    }

    #[test]
    fn connectivity() {
        let two = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(!two.is_connected());
        assert!(Hypergraph::trivial(3).unwrap().is_connected());
        let path = Hypergraph::new(3, 7, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]]).unwrap();
        assert!(path.is_connected());
    }

    #[test]
    fn simplicity() {
        assert!(!c2().is_simple());
        let a2 = Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert!(a2.is_simple());
        let g2 = Hypergraph::new(4, 6, vec![vec![0, 1, 2, 3], vec![0, 1, 4, 5]]).unwrap();
        assert!(!g2.is_simple());
        let doubled = Hypergraph::new_multi(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert!(!doubled.is_simple());
    }

    #[test]
    fn hypertree_checks() {
        let one = Hypergraph::new(5, 5, vec![vec![0, 1, 2, 3, 4]]).unwrap();
        assert!(one.is_hypertree());
        assert!(!c2().is_hypertree());
        assert!(Hypergraph::trivial(2).unwrap().is_hypertree());
    }
}
