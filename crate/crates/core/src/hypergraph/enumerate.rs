use std::collections::HashSet;

use super::{CanonOptions, Hypergraph, Options};
use crate::error::{Error, Result};

/// All connected r-uniform hypertrees with 1 to `max_edges` edges, up to isomorphism.
///
/// Grown by hanging a fresh edge on every vertex of every smaller tree.
pub fn enumerate_hypertrees(rank: usize, max_edges: usize) -> Result<Vec<Hypergraph>> {
    if rank < 2 {
        return Err(Error::RankTooSmall { rank, min: 2 });
    }
    let opts = CanonOptions::unbounded();
    let mut level = vec![Hypergraph::new(rank, rank, vec![(0..rank).collect()])?];
    let mut all = Vec::new();
    for _ in 1..max_edges {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for h in &level {
            let n = h.vertex_count();
            for v in 0..n {
                let mut edges = h.edges().to_vec();
                let mut e = vec![v];
                e.extend(n..n + rank - 1);
                edges.push(e);
                let g = Hypergraph::new(rank, n + rank - 1, edges)?;
                if seen.insert(g.canonical_form_with(opts)?) {
                    next.push(g);
                }
            }
        }
        all.append(&mut level);
        level = next;
    }
    if max_edges > 0 {
        all.append(&mut level);
    }
    Ok(all)
}

/// The hypergraph spanned by the chosen edges, with vertex ids re-densified.
pub fn subgraph_from_edges(h: &Hypergraph, edge_ids: &[usize]) -> Result<Hypergraph> {
    let mut used = vec![false; h.vertex_count()];
    for &i in edge_ids {
        for &v in h.edge(i)? {
            used[v] = true;
        }
    }
    let mut map = vec![usize::MAX; h.vertex_count()];
    let mut next = 0;
    for (v, &u) in used.iter().enumerate() {
        if u {
            map[v] = next;
            next += 1;
        }
    }
    if next == 0 {
        return Err(Error::NoEdges);
    }
    let edges = edge_ids.iter().map(|&i| h.edges()[i].iter().map(|&v| map[v]).collect()).collect();
    Hypergraph::with_options(h.rank(), next, edges, Options { allow_isolated: false, ..h.options() })
}
