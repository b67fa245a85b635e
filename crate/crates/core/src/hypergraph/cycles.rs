use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{Cycle, Hypergraph};
use crate::error::Result;

/// Alternating walk `v0 e1 v1 e2 … vl`: `vertices` has one more entry than `edges`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Walk {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        !self.edges.is_empty() && self.vertices.first() == self.vertices.last()
    }

    /// Each step `v(i-1) e(i) v(i)` has both endpoints inside `e(i)`.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        if self.vertices.len() != self.edges.len() + 1 {
            return false;
        }
        self.edges.iter().enumerate().all(|(i, &e)| {
            h.edges().get(e).is_some_and(|edge| {
                edge.binary_search(&self.vertices[i]).is_ok() && edge.binary_search(&self.vertices[i + 1]).is_ok()
            })
        })
    }

    /// Closed, with pairwise distinct vertices and edges.
    pub fn is_cycle_in(&self, h: &Hypergraph) -> bool {
        if !self.is_closed() || !self.is_valid_in(h) {
            return false;
        }
        let mut vs = self.vertices[..self.edges.len()].to_vec();
        let mut es = self.edges.clone();
        vs.sort_unstable();
        es.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1]) && es.windows(2).all(|w| w[0] != w[1])
    }
}

/// Bipartite incidence graph: vertex `v` is node `v`, edge `i` is node `n + i`.
pub(crate) fn incidence_adjacency(h: &Hypergraph) -> Vec<Vec<usize>> {
    let n = h.vertex_count();
    let mut adj = vec![Vec::new(); n + h.edge_count()];
    for (i, e) in h.edges().iter().enumerate() {
        for &v in e {
            adj[v].push(n + i);
            adj[n + i].push(v);
        }
    }
    adj
}

/// Turns a closed node sequence of the incidence graph into a walk starting at a vertex.
fn nodes_to_walk(nodes: &[usize], n: usize) -> Walk {
    let start = nodes.iter().position(|&x| x < n).unwrap_or(0);
    let len = nodes.len();
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for k in 0..len {
        let x = nodes[(start + k) % len];
        if x < n {
            vertices.push(x);
        } else {
            edges.push(x - n);
        }
    }
    vertices.push(vertices[0]);
    Walk { vertices, edges }
}

struct BfsTree {
    parent: Vec<usize>,
    depth: Vec<usize>,
}

fn bfs_tree(adj: &[Vec<usize>], root: usize) -> BfsTree {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut depth = vec![usize::MAX; adj.len()];
    depth[root] = 0;
    parent[root] = root;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    BfsTree { parent, depth }
}

/// Closes the tree paths from `a` and `b` to their meeting point, plus the link `a-b`.
fn tree_cycle(tree: &BfsTree, mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while tree.depth[a] > tree.depth[b] {
        left.push(a);
        a = tree.parent[a];
    }
    while tree.depth[b] > tree.depth[a] {
        right.push(b);
        b = tree.parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = tree.parent[a];
        b = tree.parent[b];
    }
    left.push(a);
    right.reverse();
    left.extend(right);
    left
}

impl Hypergraph {
    /// A shortest cycle, or `None` iff the hypergraph is acyclic.
    pub fn find_cycle(&self) -> Option<Cycle> {
        let n = self.vertex_count();
        let adj = incidence_adjacency(self);
        let mut best: Option<Vec<usize>> = None;
        for root in 0..n {
            let tree = bfs_tree(&adj, root);
            for (x, nbrs) in adj.iter().enumerate() {
                if tree.depth[x] == usize::MAX {
                    continue;
                }
                for &y in nbrs {
                    if x < y && tree.parent[x] != y && tree.parent[y] != x {
                        let bound = tree.depth[x] + tree.depth[y] + 1;
                        if best.as_ref().is_some_and(|c| c.len() <= bound) {
                            continue;
                        }
                        let cyc = tree_cycle(&tree, x, y);
                        if best.as_ref().is_none_or(|c| cyc.len() < c.len()) {
                            best = Some(cyc);
                        }
                    }
                }
            }
        }
        best.map(|nodes| nodes_to_walk(&nodes, n))
    }

    /// Fundamental cycles of a BFS spanning tree of the incidence graph.
    pub fn cycle_basis(&self) -> Result<Vec<Cycle>> {
        self.require_connected()?;
        let n = self.vertex_count();
        let adj = incidence_adjacency(self);
        let tree = bfs_tree(&adj, 0);
        let mut basis = Vec::new();
        for (x, nbrs) in adj.iter().enumerate() {
            for &y in nbrs {
                if x < y && tree.parent[x] != y && tree.parent[y] != x {
                    basis.push(nodes_to_walk(&tree_cycle(&tree, x, y), n));
                }
            }
        }
        Ok(basis)
    }

    /// Incidences minus vertices minus edges plus one.
    pub fn cyclomatic_number(&self) -> usize {
        (self.edge_count() * self.rank() + 1).saturating_sub(self.vertex_count() + self.edge_count())
    }
}
