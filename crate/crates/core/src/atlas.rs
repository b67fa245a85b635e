//! Classification tables and the shipped certificate fixtures.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::classifier::{rho_r, Verdict};
use crate::error::{Error, Result};
use crate::families::{family_members_with_verdicts, gen_path, FamilyId, FamilyTag};
use crate::hypergraph::Hypergraph;
use crate::labeling::io::{certificate_to_json, CertificateJson, Fixture};
use crate::labeling::{
    check_certificate, check_consistent, default_root, ratio, tree_propagate, NormalcyKind, Propagation, Rational,
    Root, WeightedIncidence,
};
use crate::spectral::spectral_radius;

/// One entry of the classification lists.
#[derive(Clone, Debug, Serialize)]
pub struct AtlasRow {
    pub family: String,
    pub alias: Option<String>,
    pub edges: usize,
    pub verdict: Verdict,
    /// A consistent 1/4-normal labeling, present for `Equal` rows.
    pub certificate: Option<CertificateJson>,
}

/// Every list member at rank `r` with at most `max_edges` edges.
pub fn atlas(r: usize, max_edges: usize) -> Result<Vec<AtlasRow>> {
    let mut rows = Vec::new();
    for m in 1..=max_edges {
        for (id, h, verdict) in family_members_with_verdicts(r, m)? {
            let certificate = match verdict {
                Verdict::Equal => normal_certificate(&h)?.map(|b| certificate_to_json(&quarter(), &b)),
                _ => None,
            };
            rows.push(AtlasRow { family: id.to_string(), alias: id.alias_name(), edges: m, verdict, certificate });
        }
    }
    Ok(rows)
}

/// ρ of the path `A_n` next to the lower bound `(1 + 2/n + 1/n²)^(-1/r)·ρ_r`.
#[derive(Clone, Debug, Serialize)]
pub struct LimitRow {
    pub n: usize,
    pub rho: f64,
    pub lower_bound: f64,
    pub rho_r: f64,
}

pub fn limit_table(r: usize, n_max: usize, tol: f64) -> Result<Vec<LimitRow>> {
    let target = rho_r(r)?;
    (1..=n_max)
        .map(|n| {
            let rho = spectral_radius(&gen_path(r, n)?, tol)?.rho;
            let nf = n as f64;
            let lower_bound = (1.0 + 2.0 / nf + 1.0 / (nf * nf)).powf(-1.0 / r as f64) * target;
            Ok(LimitRow { n, rho, lower_bound, rho_r: target })
        })
        .collect()
}

fn quarter() -> Rational {
    ratio(1, 4)
}

/// Labels every degree-2 vertex 1/2 and every leaf 1; `None` above degree 2.
pub fn half_labeling(h: &Hypergraph) -> Option<WeightedIncidence<Rational>> {
    let deg = h.degrees();
    if deg.iter().any(|&d| d > 2) {
        return None;
    }
    let mut b = WeightedIncidence::new(h);
    for (e, edge) in h.edges().iter().enumerate() {
        for &v in edge {
            b.insert(v, e, if deg[v] == 2 { ratio(1, 2) } else { ratio(1, 1) });
        }
    }
    Some(b)
}

/// A consistent 1/4-normal labeling of `h` if one is found by propagation
/// (hypertrees) or by the half labeling (cycles).
pub fn normal_certificate(h: &Hypergraph) -> Result<Option<WeightedIncidence<Rational>>> {
    let alpha = quarter();
    let candidate = if h.is_hypertree() {
        match tree_propagate(h, Root::Vertex(default_root(h)), &alpha)? {
            Propagation::Residual { certificate, .. } => Some(certificate),
            Propagation::Failure { .. } => None,
        }
    } else {
        half_labeling(h)
    };
    let Some(b) = candidate else { return Ok(None) };
    let report = check_certificate(h, &b, &alpha)?;
    Ok((report.kind == NormalcyKind::Normal && check_consistent(h, &b)?).then_some(b))
}

/// Builds hypergraphs from core vertices padded with fresh leaves.
struct Sketch {
    rank: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Sketch {
    fn new(rank: usize) -> Self {
        Sketch { rank, n: 0, edges: Vec::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn vertices(&mut self, k: usize) -> Vec<usize> {
        (0..k).map(|_| self.vertex()).collect()
    }

    fn edge(&mut self, core: &[usize]) -> usize {
        let mut e = core.to_vec();
        while e.len() < self.rank {
            let v = self.vertex();
            e.push(v);
        }
        self.edges.push(e);
        self.edges.len() - 1
    }

    fn finish(self) -> Result<Hypergraph> {
        Hypergraph::new(self.rank, self.n, self.edges)
    }
}

/// Rank 3: a path of five edges whose three inner edges each carry a pendant edge.
pub fn spine_three_branches() -> Result<(Hypergraph, usize)> {
    let mut s = Sketch::new(3);
    let spine = s.vertices(6);
    let tops = s.vertices(3);
    s.edge(&[spine[0], spine[1]]);
    let mut centre = 0;
    for i in 0..3 {
        let e = s.edge(&[spine[i + 1], spine[i + 2], tops[i]]);
        if i == 1 {
            centre = e;
        }
    }
    s.edge(&[spine[4], spine[5]]);
    for &t in &tops {
        s.edge(&[t]);
    }
    Ok((s.finish()?, centre))
}

/// Rank 4: a central edge whose vertices carry one pendant edge each on
/// three of them and two pendant edges on the fourth.
pub fn rank_four_fork() -> Result<(Hypergraph, usize)> {
    let mut s = Sketch::new(4);
    let c = s.vertices(4);
    let centre = s.edge(&c);
    for &v in &c[..3] {
        s.edge(&[v]);
    }
    s.edge(&[c[3]]);
    s.edge(&[c[3]]);
    Ok((s.finish()?, centre))
}

/// Rank 4: two adjacent edges, each with pendant edges at two further
/// vertices, and one more pendant edge at the first.
pub fn rank_four_double() -> Result<(Hypergraph, usize)> {
    let mut s = Sketch::new(4);
    let c = s.vertices(4);
    let centre = s.edge(&c);
    s.edge(&[c[0]]);
    s.edge(&[c[1]]);
    s.edge(&[c[2]]);
    let d = s.vertices(2);
    s.edge(&[c[3], d[0], d[1]]);
    s.edge(&[d[0]]);
    s.edge(&[d[1]]);
    Ok((s.finish()?, centre))
}

/// Rank 3: a four-edge path whose second edge carries a pendant edge at its
/// third vertex and whose second vertex carries one more pendant edge.
pub fn branch_fork() -> Result<(Hypergraph, usize)> {
    let mut s = Sketch::new(3);
    let spine = s.vertices(5);
    let top = s.vertex();
    s.edge(&[spine[0], spine[1]]);
    s.edge(&[spine[1], spine[2], top]);
    s.edge(&[spine[2], spine[3]]);
    s.edge(&[spine[3], spine[4]]);
    s.edge(&[top]);
    s.edge(&[spine[2]]);
    Ok((s.finish()?, spine[2]))
}

fn propagate(h: &Hypergraph, root: Root) -> Result<WeightedIncidence<Rational>> {
    match tree_propagate(h, root, &quarter())? {
        Propagation::Residual { certificate, .. } => Ok(certificate),
        Propagation::Failure { vertex, edge } => {
            Err(Error::NonPositive(format!("propagation failed at vertex {vertex}, edge {edge}")))
        }
    }
}

fn fixture(
    name: impl Into<String>,
    description: impl Into<String>,
    claim: NormalcyKind,
    hypergraph: Hypergraph,
    certificate: WeightedIncidence<Rational>,
) -> Fixture {
    Fixture { name: name.into(), description: description.into(), claim, hypergraph, alpha: quarter(), certificate }
}

fn family(tag: FamilyTag, params: &[usize], rank: usize) -> Result<(FamilyId, Hypergraph)> {
    let id = FamilyId::new(tag, params.to_vec(), rank);
    let h = id.build()?;
    Ok((id, h))
}

fn slug(id: &FamilyId) -> String {
    if id.tag == FamilyTag::EdgeStar {
        return format!("edge-star-r{}", id.rank);
    }
    let label = id.alias_name().unwrap_or_else(|| id.to_string());
    let mut out = String::new();
    for c in label.split('^').next().unwrap_or_default().chars() {
        match c {
            'a'..='z' | 'A'..='Z' | '0'..='9' => out.push(c.to_ascii_lowercase()),
            '~' => out.push_str("tilde-"),
            '\'' => out.push_str("prime"),
            _ if !out.ends_with('-') && !out.is_empty() => out.push('-'),
            _ => {}
        }
    }
    format!("{}-r{}", out.trim_end_matches('-'), id.rank)
}

/// The vertex shared by edges `a` and `b`.
fn shared(h: &Hypergraph, a: usize, b: usize) -> Option<usize> {
    h.edges()[a].iter().copied().find(|v| h.edges()[b].contains(v))
}

/// Every shipped certificate: normal labelings of the boundary graphs,
/// subnormal labelings of paths and `H4(1,1,1,4)`, and supernormal
/// labelings of the minimal graphs just above the boundary.
pub fn fixtures() -> Result<Vec<Fixture>> {
    use FamilyTag::*;
    use NormalcyKind::{Normal, StrictlySubnormal, StrictlySupernormal};
    let mut out = Vec::new();

    for n in 2..=6 {
        let (id, h) = family(C, &[n], 3)?;
        let b = half_labeling(&h).expect("cycles have degree 2");
        out.push(fixture(slug(&id), format!("{id}: 1/2 on cycle vertices, 1 on leaves"), Normal, h, b));
    }
    let mut normal: Vec<(FamilyTag, Vec<usize>, usize)> = Vec::new();
    for n in 5..=7 {
        normal.push((Dtilde, vec![n], 3));
    }
    for n in 8..=10 {
        normal.push((Btilde, vec![n], 3));
    }
    for n in 6..=8 {
        normal.push((BDtilde, vec![n], 3));
    }
    normal.push((S, vec![4], 3));
    for n in 6..=8 {
        normal.push((Etilde, vec![n], 3));
    }
    for p in [[2, 3, 4], [2, 2, 7], [1, 5, 6], [1, 4, 8], [1, 3, 14]] {
        normal.push((F, p.to_vec(), 3));
    }
    normal.push((G, vec![1, 1, 0, 1, 4], 3));
    normal.push((G, vec![1, 1, 6, 1, 3], 3));
    normal.push((H4, vec![1, 1, 2, 2], 4));
    for (tag, params, rank) in normal {
        let (id, h) = family(tag, &params, rank)?;
        let root = default_root(&h);
        let b = propagate(&h, Root::Vertex(root))?;
        out.push(fixture(slug(&id), format!("{id}: propagated from the leaves to vertex {root}"), Normal, h, b));
    }

    for (r, n) in [(3, 3), (3, 6), (4, 4)] {
        let (id, h) = family(A, &[n], r)?;
        let b = half_labeling(&h).expect("paths have degree 2");
        out.push(fixture(
            slug(&id),
            format!("{id}: 1/2 on inner vertices, 1 on leaves; end edges exceed 1/4"),
            StrictlySubnormal,
            h,
            b,
        ));
    }
    {
        let (id, h) = family(H4, &[1, 1, 1, 4], 4)?;
        let end = h.edge_count() - 1;
        let b = propagate(&h, Root::Edge(end))?;
        out.push(fixture(
            slug(&id),
            format!("{id}: propagated to the end edge {end} of the long path"),
            StrictlySubnormal,
            h,
            b,
        ));
    }

    {
        let (id, h) = family(F, &[3, 3, 3], 3)?;
        let b = propagate(&h, Root::Edge(0))?;
        out.push(fixture(slug(&id), format!("{id}: propagated to the branching edge"), StrictlySupernormal, h, b));
    }
    {
        let (h, centre) = spine_three_branches()?;
        let b = propagate(&h, Root::Edge(centre))?;
        out.push(fixture(
            "spine-three-branches-r3",
            "five-edge path with pendant edges on its three inner edges: propagated to the middle edge",
            StrictlySupernormal,
            h,
            b,
        ));
    }
    {
        let (h, centre) = rank_four_fork()?;
        let b = propagate(&h, Root::Edge(centre))?;
        out.push(fixture(
            "edge-with-fork-r4",
            "central edge with pendant edges 1, 1, 1 and 2: propagated to the central edge",
            StrictlySupernormal,
            h,
            b,
        ));
    }
    {
        let (h, centre) = rank_four_double()?;
        let b = propagate(&h, Root::Edge(centre))?;
        out.push(fixture(
            "double-branching-r4",
            "two adjacent branching edges: propagated to the first",
            StrictlySupernormal,
            h,
            b,
        ));
    }
    {
        let (h, centre) = branch_fork()?;
        let b = propagate(&h, Root::Vertex(centre))?;
        out.push(fixture(
            "branch-fork-r3",
            format!("degree-3 vertex {centre} with a branching edge on one side: propagated to that vertex"),
            StrictlySupernormal,
            h,
            b,
        ));
    }
    {
        let (id, h) = family(G, &[1, 1, 0, 2, 2], 3)?;
        let b = propagate(&h, Root::Edge(3))?;
        out.push(fixture(
            slug(&id),
            format!("{id}: propagated to the branching edge carrying the two-edge paths"),
            StrictlySupernormal,
            h,
            b,
        ));
    }
    for r in [5, 6] {
        let (id, h) = family(EdgeStar, &[], r)?;
        let b = propagate(&h, Root::Edge(0))?;
        out.push(fixture(slug(&id), format!("{id}: propagated to the central edge"), StrictlySupernormal, h, b));
    }
    {
        let (id, h) = family(H4, &[1, 1, 1, 5], 4)?;
        let end = h.edge_count() - 1;
        let v = shared(&h, end - 1, end).expect("consecutive path edges meet");
        let b = propagate(&h, Root::Vertex(v))?;
        out.push(fixture(
            slug(&id),
            format!("{id}: propagated to vertex {v}, the last inner vertex of the long path"),
            StrictlySupernormal,
            h,
            b,
        ));
    }
    Ok(out)
}

/// Writes one `<name>.json` per fixture into `dir`, returning the paths.
pub fn write_fixtures(dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| Error::Parse(format!("{}: {e}", dir.display())))?;
    fixtures()?
        .iter()
        .map(|f| {
            let path = dir.join(format!("{}.json", f.name));
            fs::write(&path, f.to_json_string()).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            Ok(path)
        })
        .collect()
}
