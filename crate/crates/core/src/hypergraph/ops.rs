use super::{Hypergraph, Options};
use crate::error::{Error, Result};

/// Result of contracting a 2-bridge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub hypergraph: Hypergraph,
    /// Old vertex id to new id; `None` for the dropped leaves of the contracted edge.
    pub vertex_map: Vec<Option<usize>>,
    /// The two merged endpoints (ascending) and the id of the merged vertex.
    pub merged: (usize, usize, usize),
}

/// Re-densifies `keep`-marked vertices in ascending order.
fn dense_map(keep: &[bool]) -> (Vec<Option<usize>>, usize) {
    let mut next = 0;
    let map = keep
        .iter()
        .map(|&k| {
            k.then(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    (map, next)
}

impl Hypergraph {
    /// The two non-leaf vertices of `e` if it has exactly two.
    fn non_leaf_pair(&self, e: usize, degrees: &[usize]) -> Option<(usize, usize)> {
        let inner: Vec<usize> = self.edges()[e].iter().copied().filter(|&v| degrees[v] > 1).collect();
        (inner.len() == 2).then(|| (inner[0], inner[1]))
    }

    fn is_two_bridge_with(&self, e: usize, degrees: &[usize]) -> bool {
        match self.non_leaf_pair(e, degrees) {
            Some((u, v)) => !self.component_of(u, Some(e))[v],
            None => false,
        }
    }

    /// Edges with exactly two non-leaf vertices whose removal separates them.
    pub fn two_bridges(&self) -> Result<Vec<usize>> {
        self.require_connected()?;
        let degrees = self.degrees();
        Ok((0..self.edge_count()).filter(|&e| self.is_two_bridge_with(e, &degrees)).collect())
    }

    /// Removes the 2-bridge `e`, merging its two non-leaf vertices and dropping its leaves.
    ///
    /// Only simple hypergraphs are accepted.
    pub fn contract(&self, e: usize) -> Result<Contraction> {
        self.check_edge(e)?;
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let degrees = self.degrees();
        if !self.is_two_bridge_with(e, &degrees) {
            return Err(Error::NotTwoBridge(e));
        }
        let (u, v) = self.non_leaf_pair(e, &degrees).expect("checked above");
        let mut keep = vec![true; self.vertex_count()];
        for &x in &self.edges()[e] {
            if x != u {
                keep[x] = false;
            }
        }
        let (mut map, count) = dense_map(&keep);
        let w = map[u].expect("u is kept");
        let edges = self
            .edges()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, edge)| edge.iter().map(|&x| if x == v { w } else { map[x].expect("kept") }).collect())
            .collect();
        map[v] = Some(w);
        let hypergraph = Hypergraph::with_options(self.rank(), count, edges, self.options())?;
        Ok(Contraction { hypergraph, vertex_map: map, merged: (u, v, w) })
    }

    /// Every edge contains a leaf vertex.
    pub fn is_reducible(&self) -> bool {
        let degrees = self.degrees();
        self.edges().iter().all(|e| e.iter().any(|&v| degrees[v] == 1))
    }

    /// Removes the lowest-id leaf from every edge, lowering the rank by one.
    pub fn reduce(&self) -> Result<Hypergraph> {
        if self.rank() < 3 {
            return Err(Error::RankTooSmall { rank: self.rank(), min: 3 });
        }
        let degrees = self.degrees();
        let mut keep = vec![true; self.vertex_count()];
        for (i, e) in self.edges().iter().enumerate() {
            let leaf = e.iter().copied().find(|&v| degrees[v] == 1).ok_or(Error::Irreducible(i))?;
            keep[leaf] = false;
        }
        let (map, count) = dense_map(&keep);
        let edges = self.edges().iter().map(|e| e.iter().filter_map(|&v| map[v]).collect()).collect();
        let options = Options { allow_multi: true, ..self.options() };
        Hypergraph::with_options(self.rank() - 1, count, edges, options)
    }

    /// Adds a fresh leaf (id `n + i`) to edge `i`, raising the rank by one.
    pub fn extend(&self) -> Hypergraph {
        let n = self.vertex_count();
        let edges = self
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let mut e = e.clone();
                e.push(n + i);
                e
            })
            .collect();
        Hypergraph::with_options(self.rank() + 1, n + self.edge_count(), edges, self.options())
            .expect("extension preserves validity")
    }

    /// Applies [`Hypergraph::extend`] `times` times.
    pub fn extend_by(&self, times: usize) -> Hypergraph {
        (0..times).fold(self.clone(), |h, _| h.extend())
    }
}
