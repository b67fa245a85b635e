//! Canonical forms of the bipartite incidence graph.
//!
//! Acyclic components are encoded by rooted tree codes taken at the center.
//! Other components have their pendant trees folded into node labels, and the
//! remaining 2-core is canonised by colour refinement with individualisation,
//! keeping the smallest certificate over all leaves of the search tree.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::cycles::incidence_adjacency;
use super::Hypergraph;
use crate::error::{Error, Result};

pub const DEFAULT_CANON_BOUND: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonOptions {
    /// Largest accepted vertex count.
    pub bound: usize,
    /// Shuffles the branching order of the search; the output does not depend on it.
    pub seed: Option<u64>,
}

impl Default for CanonOptions {
    fn default() -> Self {
        CanonOptions { bound: DEFAULT_CANON_BOUND, seed: None }
    }
}

impl CanonOptions {
    pub fn unbounded() -> Self {
        CanonOptions { bound: usize::MAX, seed: None }
    }
}

impl Hypergraph {
    /// Byte string equal for two hypergraphs iff they are isomorphic.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        self.canonical_form_with(CanonOptions::default())
    }

    pub fn canonical_form_with(&self, options: CanonOptions) -> Result<Vec<u8>> {
        if self.vertex_count() > options.bound {
            return Err(Error::SizeBound { count: self.vertex_count(), bound: options.bound });
        }
        Ok(Canoniser::new(self, options.seed).run().into_bytes())
    }

    /// Isomorphism test without a size bound.
    pub fn is_isomorphic(&self, other: &Hypergraph) -> bool {
        if self.rank() != other.rank()
            || self.vertex_count() != other.vertex_count()
            || self.edge_count() != other.edge_count()
        {
            return false;
        }
        let mut a = self.degrees();
        let mut b = other.degrees();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        let opts = CanonOptions::unbounded();
        self.canonical_form_with(opts).ok() == other.canonical_form_with(opts).ok()
    }
}

struct Canoniser {
    header: String,
    n: usize,
    adj: Vec<Vec<usize>>,
    rng: Option<ChaCha8Rng>,
}

impl Canoniser {
    fn new(h: &Hypergraph, seed: Option<u64>) -> Self {
        Canoniser {
            header: format!("r{};n{};m{};", h.rank(), h.vertex_count(), h.edge_count()),
            n: h.vertex_count(),
            adj: incidence_adjacency(h),
            rng: seed.map(ChaCha8Rng::seed_from_u64),
        }
    }

    fn kind(&self, x: usize) -> char {
        if x < self.n {
            'v'
        } else {
            'e'
        }
    }

    fn run(mut self) -> String {
        let mut seen = vec![false; self.adj.len()];
        let mut codes = Vec::new();
        for start in 0..self.adj.len() {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                for &y in &self.adj[comp[i]] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
                i += 1;
            }
            codes.push(self.component_code(&comp));
        }
        codes.sort();
        let mut out = self.header;
        out.push_str(&codes.join("|"));
        out
    }

    /// Rooted tree code of the subtree at `x` hanging away from `parent`.
    fn tree_code(&self, x: usize, parent: usize) -> String {
        let mut children: Vec<String> =
            self.adj[x].iter().filter(|&&y| y != parent).map(|&y| self.tree_code(y, x)).collect();
        children.sort();
        let mut s = String::new();
        s.push(self.kind(x));
        s.push('(');
        for c in children {
            s.push_str(&c);
        }
        s.push(')');
        s
    }

    fn component_code(&mut self, comp: &[usize]) -> String {
        let mut degree: Vec<usize> = vec![0; self.adj.len()];
        for &x in comp {
            degree[x] = self.adj[x].len();
        }
        let mut in_core = vec![false; self.adj.len()];
        for &x in comp {
            in_core[x] = true;
        }
        let mut remaining = comp.len();
        let mut layer: Vec<usize> = comp.iter().copied().filter(|&x| degree[x] <= 1).collect();
        // Peel leaves layer by layer; a tree keeps its one or two centers.
        let mut last_layer = Vec::new();
        while !layer.is_empty() {
            if remaining == layer.len() {
                last_layer = layer;
                break;
            }
            let mut next = Vec::new();
            for &x in &layer {
                in_core[x] = false;
                remaining -= 1;
            }
            for &x in &layer {
                for &y in &self.adj[x] {
                    if in_core[y] {
                        degree[y] -= 1;
                        if degree[y] == 1 {
                            next.push(y);
                        }
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            layer = next;
        }
        if !last_layer.is_empty() {
            // Acyclic: one or two centers.
            let code = last_layer.iter().map(|&c| self.tree_code(c, usize::MAX)).min().expect("non-empty");
            return format!("T{code}");
        }
        let core: Vec<usize> = comp.iter().copied().filter(|&x| in_core[x]).collect();
        self.core_code(&core, &in_core)
    }

    fn core_code(&mut self, core: &[usize], in_core: &[bool]) -> String {
        let mut local = vec![usize::MAX; self.adj.len()];
        for (i, &x) in core.iter().enumerate() {
            local[x] = i;
        }
        let labels: Vec<String> = core
            .iter()
            .map(|&x| {
                let mut hanging: Vec<String> =
                    self.adj[x].iter().filter(|&&y| !in_core[y]).map(|&y| self.tree_code(y, x)).collect();
                hanging.sort();
                format!("{}[{}]", self.kind(x), hanging.join(""))
            })
            .collect();
        let adj: Vec<Vec<usize>> =
            core.iter().map(|&x| self.adj[x].iter().filter(|&&y| in_core[y]).map(|&y| local[y]).collect()).collect();
        let distinct: Vec<&String> = labels.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let label_rank: Vec<usize> = labels.iter().map(|l| distinct.binary_search(&l).expect("present")).collect();
        let mut search = Search { adj: &adj, label_rank: &label_rank, best: None, rng: self.rng.as_mut() };
        search.explore(label_rank.clone());
        let best = search.best.expect("at least one leaf");
        let mut out = String::from("C");
        for l in &distinct {
            out.push_str(l);
            out.push(',');
        }
        out.push(':');
        for v in best {
            out.push_str(&v.to_string());
            out.push(',');
        }
        out
    }
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    label_rank: &'a [usize],
    best: Option<Vec<usize>>,
    rng: Option<&'a mut ChaCha8Rng>,
}

/// Renumbers keys to dense ranks in sorted order.
fn dense_ranks<K: Ord + Clone>(keys: &[K]) -> (Vec<usize>, usize) {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    let ranks = keys.iter().map(|k| sorted.binary_search(k).expect("present")).collect();
    (ranks, sorted.len())
}

impl Search<'_> {
    fn refine(&self, mut colors: Vec<usize>) -> (Vec<usize>, usize) {
        let (mut colors_now, mut count) = dense_ranks(&colors);
        colors = std::mem::take(&mut colors_now);
        loop {
            let keys: Vec<(usize, Vec<usize>)> = (0..colors.len())
                .map(|i| {
                    let mut nb: Vec<usize> = self.adj[i].iter().map(|&j| colors[j]).collect();
                    nb.sort_unstable();
                    (colors[i], nb)
                })
                .collect();
            let (next, next_count) = dense_ranks(&keys);
            colors = next;
            if next_count == count {
                return (colors, count);
            }
            count = next_count;
        }
    }

    fn certificate(&self, colors: &[usize]) -> Vec<usize> {
        let k = colors.len();
        let mut cert = vec![0; k];
        for i in 0..k {
            cert[colors[i]] = self.label_rank[i];
        }
        let mut links: Vec<(usize, usize)> = Vec::new();
        for i in 0..k {
            for &j in &self.adj[i] {
                if i < j {
                    let (a, b) = (colors[i], colors[j]);
                    links.push((a.min(b), a.max(b)));
                }
            }
        }
        links.sort_unstable();
        cert.push(usize::MAX);
        for (a, b) in links {
            cert.push(a);
            cert.push(b);
        }
        cert
    }

    fn explore(&mut self, colors: Vec<usize>) {
        let (colors, count) = self.refine(colors);
        if count == colors.len() {
            let cert = self.certificate(&colors);
            if self.best.as_ref().is_none_or(|b| cert < *b) {
                self.best = Some(cert);
            }
            return;
        }
        let mut size = vec![0usize; count];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..count).find(|&c| size[c] > 1).expect("not discrete");
        let mut cell: Vec<usize> = (0..colors.len()).filter(|&i| colors[i] == target).collect();
        // Twins in one cell give isomorphic subtrees; keep one per class.
        let mut reps: Vec<usize> = Vec::new();
        let mut sig_seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for &i in &cell {
            let mut nb = self.adj[i].clone();
            nb.sort_unstable();
            if sig_seen.insert(nb) {
                reps.push(i);
            }
        }
        cell = reps;
        if let Some(rng) = self.rng.as_deref_mut() {
            cell.shuffle(rng);
        }
        for node in cell {
            let split: Vec<usize> = colors.iter().enumerate().map(|(i, &c)| 2 * c + usize::from(i != node)).collect();
            self.explore(split);
        }
    }
}
