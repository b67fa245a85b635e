//! Generators for the named hypergraph families.
//!
//! Sizes follow the edge-count convention: `A(n)`, `C(n)`, `D(n)`, `Dtilde(n)`
//! and the `B`/`BD` families all have exactly `n` edges. The exceptional
//! trees `E6`, `E7`, `E8` and their tilde variants keep their Dynkin names and
//! are stored as `E(i,j,k)`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classifier::Verdict;
use crate::error::{Error, Result};
use crate::hypergraph::{CanonOptions, Hypergraph, Options};

/// Largest edge count accepted by [`family_members_with_edges`].
pub const MEMBER_EDGE_BOUND: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Smith2 {
    A,
    D,
    E6,
    E7,
    E8,
    Atilde,
    Dtilde,
    Etilde6,
    Etilde7,
    Etilde8,
}

impl Smith2 {
    const ALL: [Smith2; 10] = [
        Smith2::A,
        Smith2::D,
        Smith2::E6,
        Smith2::E7,
        Smith2::E8,
        Smith2::Atilde,
        Smith2::Dtilde,
        Smith2::Etilde6,
        Smith2::Etilde7,
        Smith2::Etilde8,
    ];

    fn as_str(self) -> &'static str {
        match self {
            Smith2::A => "A",
            Smith2::D => "D",
            Smith2::E6 => "E6",
            Smith2::E7 => "E7",
            Smith2::E8 => "E8",
            Smith2::Atilde => "Atilde",
            Smith2::Dtilde => "Dtilde",
            Smith2::Etilde6 => "Etilde6",
            Smith2::Etilde7 => "Etilde7",
            Smith2::Etilde8 => "Etilde8",
        }
    }

    fn takes_size(self) -> bool {
        matches!(self, Smith2::A | Smith2::D | Smith2::Atilde | Smith2::Dtilde)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    A,
    C,
    D,
    Dprime,
    B,
    Bprime,
    Bbar,
    Btilde,
    BD,
    BDtilde,
    Dtilde,
    E,
    Etilde,
    F,
    G,
    H4,
    S,
    EdgeStar,
    Smith2(Smith2),
}

impl FamilyTag {
    const SIMPLE: [FamilyTag; 18] = [
        FamilyTag::A,
        FamilyTag::C,
        FamilyTag::D,
        FamilyTag::Dprime,
        FamilyTag::B,
        FamilyTag::Bprime,
        FamilyTag::Bbar,
        FamilyTag::Btilde,
        FamilyTag::BD,
        FamilyTag::BDtilde,
        FamilyTag::Dtilde,
        FamilyTag::E,
        FamilyTag::Etilde,
        FamilyTag::F,
        FamilyTag::G,
        FamilyTag::H4,
        FamilyTag::S,
        FamilyTag::EdgeStar,
    ];

    pub fn name(self) -> String {
        match self {
            FamilyTag::Smith2(k) => format!("Smith2:{}", k.as_str()),
            other => format!("{other:?}"),
        }
    }

    fn arity(self) -> usize {
        match self {
            FamilyTag::E | FamilyTag::F => 3,
            FamilyTag::G => 5,
            FamilyTag::H4 => 4,
            FamilyTag::EdgeStar => 0,
            FamilyTag::Smith2(k) => usize::from(k.takes_size()),
            _ => 1,
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(kind) = s.strip_prefix("Smith2:") {
            return Smith2::ALL
                .into_iter()
                .find(|k| k.as_str().eq_ignore_ascii_case(kind))
                .map(FamilyTag::Smith2)
                .ok_or_else(|| Error::Parse(format!("unknown Smith2 tag {kind:?}")));
        }
        FamilyTag::SIMPLE
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family tag {s:?}")))
    }
}

/// A family tag with its parameters and rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub params: Vec<usize>,
    pub rank: usize,
}

fn bad(family: &FamilyId, reason: impl Into<String>) -> Error {
    Error::BadFamily { family: family.to_string(), reason: reason.into() }
}

impl FamilyId {
    pub fn new(tag: FamilyTag, params: Vec<usize>, rank: usize) -> Self {
        FamilyId { tag, params, rank }
    }

    /// Parses `TAG`, `TAG(p,..)` or `TAG:p,..`; `G(1,1:6:1,3)` is also accepted.
    pub fn parse(spec: &str, rank: usize) -> Result<Self> {
        let spec = spec.trim();
        let (tag, rest) = match spec.find('(') {
            Some(i) => {
                let inner = spec[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {spec:?}")))?;
                (&spec[..i], inner.replace(':', ","))
            }
            None => match spec.rsplit_once(':') {
                Some((t, p)) if !t.is_empty() && p.chars().all(|c| c.is_ascii_digit() || c == ',') && !p.is_empty() => {
                    (t, p.to_string())
                }
                _ => (spec, String::new()),
            },
        };
        let tag: FamilyTag = tag.parse()?;
        let params = rest
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad parameter {t:?}"))))
            .collect::<Result<Vec<usize>>>()?;
        let id = FamilyId { tag, params, rank };
        if id.params.len() != tag.arity() {
            return Err(bad(&id, format!("expects {} parameters", tag.arity())));
        }
        Ok(id)
    }

    /// The structural representative: aliases become `E`/`F`/`G`/`C`, and
    /// parameters are put in their symmetric normal form.
    pub fn canonical(&self) -> Result<FamilyId> {
        let p = &self.params;
        let r = self.rank;
        let n = p.first().copied().unwrap_or(0);
        let need = |min: usize| if n >= min { Ok(()) } else { Err(bad(self, format!("needs n >= {min}"))) };
        let id = |tag, params: Vec<usize>| FamilyId { tag, params, rank: r };
        let out = match self.tag {
            FamilyTag::D => {
                need(3)?;
                id(FamilyTag::E, vec![1, 1, n - 2])
            }
            FamilyTag::Dprime => {
                need(4)?;
                id(FamilyTag::F, vec![1, 1, n - 3])
            }
            FamilyTag::B => {
                need(5)?;
                id(FamilyTag::F, vec![1, 2, n - 4])
            }
            FamilyTag::Bprime => {
                need(6)?;
                id(FamilyTag::G, vec![1, 1, n - 6, 1, 1])
            }
            FamilyTag::Bbar => {
                need(7)?;
                id(FamilyTag::G, vec![1, 1, n - 7, 1, 2])
            }
            FamilyTag::Btilde => {
                need(8)?;
                id(FamilyTag::G, vec![1, 2, n - 8, 1, 2])
            }
            FamilyTag::Etilde => match n {
                6 => id(FamilyTag::E, vec![2, 2, 2]),
                7 => id(FamilyTag::E, vec![1, 3, 3]),
                8 => id(FamilyTag::E, vec![1, 2, 5]),
                _ => return Err(bad(self, "Etilde takes 6, 7 or 8")),
            },
            FamilyTag::Smith2(kind) => {
                if r != 2 {
                    return Err(bad(self, "Smith2 families have rank 2"));
                }
                match kind {
                    Smith2::A => id(FamilyTag::A, vec![n]),
                    Smith2::D => return id(FamilyTag::D, vec![n]).canonical(),
                    Smith2::E6 => id(FamilyTag::E, vec![1, 2, 2]),
                    Smith2::E7 => id(FamilyTag::E, vec![1, 2, 3]),
                    Smith2::E8 => id(FamilyTag::E, vec![1, 2, 4]),
                    Smith2::Atilde => id(FamilyTag::C, vec![n]),
                    Smith2::Dtilde if n == 4 => id(FamilyTag::S, vec![4]),
                    Smith2::Dtilde => id(FamilyTag::Dtilde, vec![n]),
                    Smith2::Etilde6 => id(FamilyTag::E, vec![2, 2, 2]),
                    Smith2::Etilde7 => id(FamilyTag::E, vec![1, 3, 3]),
                    Smith2::Etilde8 => id(FamilyTag::E, vec![1, 2, 5]),
                }
            }
            FamilyTag::E | FamilyTag::F | FamilyTag::H4 => {
                let mut q = p.clone();
                q.sort_unstable();
                id(self.tag, q)
            }
            FamilyTag::G => id(FamilyTag::G, normalise_g(p)),
            _ => self.clone(),
        };
        if out.params.len() != out.tag.arity() {
            return Err(bad(self, format!("expects {} parameters", self.tag.arity())));
        }
        Ok(out)
    }

    /// List name of a structural representative, e.g. `D_5` for `E(1,1,3)`.
    pub fn alias_name(&self) -> Option<String> {
        let c = self.canonical().ok()?;
        let p = &c.params;
        match (c.tag, p.as_slice()) {
            (FamilyTag::A, [n]) => Some(format!("A_{n}")),
            (FamilyTag::C, [n]) => Some(format!("C_{n}")),
            (FamilyTag::S, [k]) => Some(format!("S_{k}")),
            (FamilyTag::Dtilde, [n]) => Some(format!("~D_{n}")),
            (FamilyTag::BD, [n]) => Some(format!("BD_{n}")),
            (FamilyTag::BDtilde, [n]) => Some(format!("~BD_{n}")),
            (FamilyTag::EdgeStar, []) => Some(format!("S_{r}^({r})", r = c.rank)),
            (FamilyTag::E, [1, 1, k]) => Some(format!("D_{}", k + 2)),
            (FamilyTag::E, [1, 2, 2]) => Some("E_6".into()),
            (FamilyTag::E, [1, 2, 3]) => Some("E_7".into()),
            (FamilyTag::E, [1, 2, 4]) => Some("E_8".into()),
            (FamilyTag::E, [2, 2, 2]) => Some("~E_6".into()),
            (FamilyTag::E, [1, 3, 3]) => Some("~E_7".into()),
            (FamilyTag::E, [1, 2, 5]) => Some("~E_8".into()),
            (FamilyTag::F, [1, 1, k]) => Some(format!("D'_{}", k + 3)),
            (FamilyTag::F, [1, 2, k]) => Some(format!("B_{}", k + 4)),
            (FamilyTag::G, [1, 1, k, 1, 1]) => Some(format!("B'_{}", k + 6)),
            (FamilyTag::G, [1, 1, k, 1, 2]) => Some(format!("Bbar_{}", k + 7)),
            (FamilyTag::G, [1, 2, k, 1, 2]) => Some(format!("~B_{}", k + 8)),
            _ => None,
        }
    }

    /// Number of edges of the generated hypergraph.
    pub fn edge_count(&self) -> Result<usize> {
        let c = self.canonical()?;
        let p = &c.params;
        Ok(match c.tag {
            FamilyTag::E => p.iter().sum(),
            FamilyTag::F | FamilyTag::H4 => p.iter().sum::<usize>() + 1,
            FamilyTag::G => p.iter().sum::<usize>() + 2,
            FamilyTag::EdgeStar => c.rank + 1,
            _ => p[0],
        })
    }

    pub fn build(&self) -> Result<Hypergraph> {
        let c = self.canonical()?;
        let r = c.rank;
        let p = &c.params;
        match c.tag {
            FamilyTag::A => gen_path(r, p[0]),
            FamilyTag::C => gen_cycle(r, p[0]),
            FamilyTag::S => gen_star(r, p[0]),
            FamilyTag::E => gen_e(r, p[0], p[1], p[2]),
            FamilyTag::F => gen_f(r, p[0], p[1], p[2]),
            FamilyTag::G => gen_g(r, p[0], p[1], p[2], p[3], p[4]),
            FamilyTag::H4 => {
                if r < 4 {
                    return Err(bad(self, "needs rank >= 4"));
                }
                Ok(gen_h4(p[0], p[1], p[2], p[3])?.extend_by(r - 4))
            }
            FamilyTag::Dtilde => gen_dtilde(r, p[0]),
            FamilyTag::BD => gen_bd(r, p[0]),
            FamilyTag::BDtilde => gen_bdtilde(r, p[0]),
            FamilyTag::EdgeStar => gen_edge_star(r),
            _ => unreachable!("canonical tags only"),
        }
    }

    pub fn with_rank(&self, rank: usize) -> FamilyId {
        FamilyId { rank, ..self.clone() }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(usize::to_string).collect();
        match (self.tag, params.as_slice()) {
            (FamilyTag::G, [i, j, k, l, m]) => write!(f, "G({i},{j}:{k}:{l},{m})")?,
            (_, []) => write!(f, "{}", self.tag.name())?,
            _ => write!(f, "{}({})", self.tag.name(), params.join(","))?,
        }
        write!(f, "^({})", self.rank)
    }
}

/// `i <= j`, `l <= m` and `(i, j) <= (l, m)`.
fn normalise_g(p: &[usize]) -> Vec<usize> {
    if p.len() != 5 {
        return p.to_vec();
    }
    let a = (p[0].min(p[1]), p[0].max(p[1]));
    let b = (p[3].min(p[4]), p[3].max(p[4]));
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    vec![a.0, a.1, p[2], b.0, b.1]
}

/// Adds edges made of given "core" vertices padded with fresh leaves.
struct Builder {
    rank: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Builder {
    fn new(rank: usize) -> Self {
        Builder { rank, n: 0, edges: Vec::new() }
    }

    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, core: &[usize]) {
        let mut e = core.to_vec();
        while e.len() < self.rank {
            let v = self.vertex();
            e.push(v);
        }
        self.edges.push(e);
    }

    /// A path of `len` edges starting at `start`; returns its far end.
    fn path(&mut self, start: usize, len: usize) -> usize {
        let mut cur = start;
        for _ in 0..len {
            let next = self.vertex();
            self.edge(&[cur, next]);
            cur = next;
        }
        cur
    }

    fn finish(self) -> Result<Hypergraph> {
        let n = self.n.max(1);
        Hypergraph::new(self.rank, n, self.edges)
    }
}

fn check(cond: bool, family: &str, reason: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadFamily { family: family.into(), reason: reason.into() })
    }
}

/// `A_n`: a path of `n` edges.
pub fn gen_path(r: usize, n: usize) -> Result<Hypergraph> {
    check(r >= 2 && n >= 1, "A", "needs r >= 2 and n >= 1")?;
    let mut b = Builder::new(r);
    let s = b.vertex();
    b.path(s, n);
    b.finish()
}

/// `C_n`: a cycle of `n` edges; `C_2` is two edges sharing two vertices.
pub fn gen_cycle(r: usize, n: usize) -> Result<Hypergraph> {
    check(r >= 2 && n >= 2, "C", "needs r >= 2 and n >= 2")?;
    let mut b = Builder::new(r);
    let ring: Vec<usize> = (0..n).map(|_| b.vertex()).collect();
    if n == 2 {
        b.edge(&ring);
        b.edge(&ring);
        if r == 2 {
            let options = Options { allow_multi: true, allow_isolated: false };
            return Hypergraph::with_options(2, 2, b.edges, options);
        }
    } else {
        for i in 0..n {
            b.edge(&[ring[i], ring[(i + 1) % n]]);
        }
    }
    b.finish()
}

/// `S_k`: `k` edges through one vertex.
pub fn gen_star(r: usize, k: usize) -> Result<Hypergraph> {
    check(r >= 2 && k >= 1, "S", "needs r >= 2 and k >= 1")?;
    let mut b = Builder::new(r);
    let c = b.vertex();
    for _ in 0..k {
        b.edge(&[c]);
    }
    b.finish()
}

/// The edge-star `S_r^(r)`: an edge each of whose vertices carries one more edge.
pub fn gen_edge_star(r: usize) -> Result<Hypergraph> {
    check(r >= 3, "EdgeStar", "needs r >= 3")?;
    let mut b = Builder::new(r);
    let core: Vec<usize> = (0..r).map(|_| b.vertex()).collect();
    b.edge(&core);
    for &v in &core {
        b.edge(&[v]);
    }
    b.finish()
}

/// `E_{i,j,k}`: three paths at one vertex.
pub fn gen_e(r: usize, i: usize, j: usize, k: usize) -> Result<Hypergraph> {
    check(r >= 2 && i.min(j).min(k) >= 1, "E", "needs r >= 2 and lengths >= 1")?;
    let mut b = Builder::new(r);
    let c = b.vertex();
    for len in [i, j, k] {
        b.path(c, len);
    }
    b.finish()
}

/// `F_{i,j,k}`: paths at the three core vertices of one edge.
pub fn gen_f(r: usize, i: usize, j: usize, k: usize) -> Result<Hypergraph> {
    check(r >= 3 && i.min(j).min(k) >= 1, "F", "needs r >= 3 and lengths >= 1")?;
    let mut b = Builder::new(r);
    let core: Vec<usize> = (0..3).map(|_| b.vertex()).collect();
    b.edge(&core);
    for (&v, len) in core.iter().zip([i, j, k]) {
        b.path(v, len);
    }
    b.finish()
}

/// `G_{i,j:k:l,m}`: two branching edges joined by `k` chain edges, with
/// paths `i`, `j` on the first and `l`, `m` on the second.
pub fn gen_g(r: usize, i: usize, j: usize, k: usize, l: usize, m: usize) -> Result<Hypergraph> {
    check(r >= 3 && i.min(j).min(l).min(m) >= 1, "G", "needs r >= 3 and branch lengths >= 1")?;
    let mut b = Builder::new(r);
    let first: Vec<usize> = (0..3).map(|_| b.vertex()).collect();
    b.edge(&first);
    b.path(first[0], i);
    b.path(first[1], j);
    let c2 = b.path(first[2], k);
    let d = b.vertex();
    let f = b.vertex();
    b.edge(&[c2, d, f]);
    b.path(d, l);
    b.path(f, m);
    b.finish()
}

/// `H^(4)_{i,j,k,l}`: paths at the four vertices of one 4-edge.
pub fn gen_h4(i: usize, j: usize, k: usize, l: usize) -> Result<Hypergraph> {
    check(i.min(j).min(k).min(l) >= 1, "H4", "lengths must be >= 1")?;
    let mut b = Builder::new(4);
    let core: Vec<usize> = (0..4).map(|_| b.vertex()).collect();
    b.edge(&core);
    for (&v, len) in core.iter().zip([i, j, k, l]) {
        b.path(v, len);
    }
    b.finish()
}

/// A vertex with two pendant edges.
fn fork(b: &mut Builder, v: usize) {
    b.edge(&[v]);
    b.edge(&[v]);
}

/// `~D_n`: two forks joined by a path of `n - 4` edges.
pub fn gen_dtilde(r: usize, n: usize) -> Result<Hypergraph> {
    check(r >= 2 && n >= 5, "Dtilde", "needs r >= 2 and n >= 5")?;
    let mut b = Builder::new(r);
    let u = b.vertex();
    fork(&mut b, u);
    let w = b.path(u, n - 4);
    fork(&mut b, w);
    b.finish()
}

/// A fork, `chain` edges, then a branching edge carrying paths `p` and `q`.
fn fork_chain_branch(r: usize, chain: usize, p: usize, q: usize) -> Result<Hypergraph> {
    let mut b = Builder::new(r);
    let v = b.vertex();
    fork(&mut b, v);
    let x = b.path(v, chain);
    let y = b.vertex();
    let z = b.vertex();
    b.edge(&[x, y, z]);
    b.path(y, p);
    b.path(z, q);
    b.finish()
}

/// `BD_n`: fork, chain of `n - 5` edges, branching edge with two single-edge branches.
pub fn gen_bd(r: usize, n: usize) -> Result<Hypergraph> {
    check(r >= 3 && n >= 5, "BD", "needs r >= 3 and n >= 5")?;
    fork_chain_branch(r, n - 5, 1, 1)
}

/// `~BD_n`: fork, chain of `n - 6` edges, branching edge with branches of 1 and 2 edges.
pub fn gen_bdtilde(r: usize, n: usize) -> Result<Hypergraph> {
    check(r >= 3 && n >= 6, "BDtilde", "needs r >= 3 and n >= 6")?;
    fork_chain_branch(r, n - 6, 1, 2)
}

/// Smith's graphs; `n` is the edge count and is ignored by the `E` kinds.
pub fn gen_smith2(kind: Smith2, n: usize) -> Result<Hypergraph> {
    let params = if kind.takes_size() { vec![n] } else { Vec::new() };
    FamilyId::new(FamilyTag::Smith2(kind), params, 2).build()
}

fn push(out: &mut Vec<(FamilyId, Verdict)>, r: usize, tag: FamilyTag, params: &[usize], verdict: Verdict) {
    out.push((FamilyId::new(tag, params.to_vec(), r), verdict));
}

/// Members of the lists of graphs with `ρ <= ρ_r` that have `m` edges, as
/// structural representatives, before deduplication.
pub fn list_entries(r: usize, m: usize) -> Vec<(FamilyId, Verdict)> {
    use FamilyTag::*;
    use Verdict::{Below, Equal};
    let mut out = Vec::new();
    if r < 2 || m == 0 {
        return out;
    }
    push(&mut out, r, A, &[m], Below);
    if m >= 3 {
        push(&mut out, r, E, &[1, 1, m - 2], Below);
    }
    for (p, verdict) in [
        ([1, 2, 2], Below),
        ([1, 2, 3], Below),
        ([1, 2, 4], Below),
        ([2, 2, 2], Equal),
        ([1, 3, 3], Equal),
        ([1, 2, 5], Equal),
    ] {
        if p.iter().sum::<usize>() == m {
            push(&mut out, r, E, &p, verdict);
        }
    }
    if m >= 2 {
        push(&mut out, r, C, &[m], Equal);
    }
    if m == 4 {
        push(&mut out, r, S, &[4], Equal);
    }
    if m >= 5 {
        push(&mut out, r, Dtilde, &[m], Equal);
    }
    if r == 2 {
        return out;
    }
    // Branching-edge families.
    if m >= 4 {
        push(&mut out, r, F, &[1, 1, m - 3], Below);
    }
    if m >= 5 {
        push(&mut out, r, F, &[1, 2, m - 4], Below);
        push(&mut out, r, BD, &[m], Below);
    }
    if m >= 6 {
        push(&mut out, r, G, &[1, 1, m - 6, 1, 1], Below);
        push(&mut out, r, BDtilde, &[m], Equal);
    }
    if m >= 7 {
        push(&mut out, r, G, &[1, 1, m - 7, 1, 2], Below);
    }
    if m >= 8 {
        push(&mut out, r, G, &[1, 2, m - 8, 1, 2], Equal);
    }
    let mut exceptional: Vec<(Vec<usize>, Verdict)> = vec![(vec![2, 3, 3], Below)];
    exceptional.extend((2..=6).map(|k| (vec![2, 2, k], Below)));
    exceptional.extend((3..=13).map(|k| (vec![1, 3, k], Below)));
    exceptional.extend((4..=7).map(|k| (vec![1, 4, k], Below)));
    exceptional.push((vec![1, 5, 5], Below));
    for p in [[2, 3, 4], [2, 2, 7], [1, 5, 6], [1, 4, 8], [1, 3, 14]] {
        exceptional.push((p.to_vec(), Equal));
    }
    for (p, verdict) in exceptional {
        if p.iter().sum::<usize>() + 1 == m {
            push(&mut out, r, F, &p, verdict);
        }
    }
    let mut gs: Vec<(Vec<usize>, Verdict)> = (0..=5).map(|k| (vec![1, 1, k, 1, 3], Below)).collect();
    gs.push((vec![1, 1, 0, 1, 4], Equal));
    gs.push((vec![1, 1, 6, 1, 3], Equal));
    for (p, verdict) in gs {
        if p.iter().sum::<usize>() + 2 == m {
            push(&mut out, r, G, &p, verdict);
        }
    }
    if r >= 4 {
        if (5..=8).contains(&m) {
            push(&mut out, r, H4, &[1, 1, 1, m - 4], Below);
        }
        if m == 7 {
            push(&mut out, r, H4, &[1, 1, 2, 2], Equal);
        }
    }
    out
}

/// Every list member with `m` edges at rank `r`, deduplicated up to isomorphism.
pub fn family_members_with_edges(r: usize, m: usize) -> Result<Vec<(FamilyId, Hypergraph)>> {
    Ok(family_members_with_verdicts(r, m)?.into_iter().map(|(id, h, _)| (id, h)).collect())
}

/// As [`family_members_with_edges`], also returning each member's verdict.
pub fn family_members_with_verdicts(r: usize, m: usize) -> Result<Vec<(FamilyId, Hypergraph, Verdict)>> {
    if m > MEMBER_EDGE_BOUND {
        return Err(Error::SizeBound { count: m, bound: MEMBER_EDGE_BOUND });
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (id, verdict) in list_entries(r, m) {
        let id = id.canonical()?;
        let h = id.build()?;
        if seen.insert(h.canonical_form_with(CanonOptions::unbounded())?) {
            out.push((id, h, verdict));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(gen_path(3, 1).unwrap().vertex_count(), 3);
        assert_eq!(gen_path(3, 2).unwrap().vertex_count(), 5);
        assert_eq!(gen_path(2, 3).unwrap().vertex_count(), 4);
        assert_eq!(gen_cycle(2, 3).unwrap().vertex_count(), 3);
        assert_eq!(gen_cycle(3, 3).unwrap().vertex_count(), 6);
        assert_eq!(gen_cycle(3, 2).unwrap().vertex_count(), 4);
        assert_eq!(gen_star(3, 4).unwrap().vertex_count(), 9);
        assert_eq!(gen_star(4, 4).unwrap().vertex_count(), 13);
        assert_eq!(gen_star(3, 1).unwrap().edge_count(), 1);
        assert_eq!(gen_edge_star(5).unwrap().edge_count(), 6);
    }

    #[test]
    fn edge_counts_match_ids() {
        for r in 3..=4 {
            for m in 1..=16 {
                for (id, _) in list_entries(r, m) {
                    assert_eq!(id.edge_count().unwrap(), m, "{id}");
                    assert_eq!(id.build().unwrap().edge_count(), m, "{id}");
                }
            }
        }
    }

    #[test]
    fn aliases_are_isomorphisms() {
        let iso = |a: &str, b: &str, r: usize| {
            let x = FamilyId::parse(a, r).unwrap().build().unwrap();
            let y = FamilyId::parse(b, r).unwrap().build().unwrap();
            assert!(x.is_isomorphic(&y), "{a} vs {b}");
        };
        iso("Etilde(6)", "E(2,2,2)", 3);
        iso("Etilde(7)", "E(1,3,3)", 3);
        iso("Etilde(8)", "E(1,2,5)", 3);
        iso("B(9)", "F(1,2,5)", 3);
        iso("Bprime(8)", "G(1,1:2:1,1)", 3);
        iso("Btilde(10)", "G(1,2:2:1,2)", 3);
        iso("Dprime(6)", "F(1,1,3)", 3);
        iso("D(5)", "E(1,1,3)", 3);
        iso("Dprime(4)", "EdgeStar", 3);
        iso("H4(1,1,1,1)", "EdgeStar", 4);
    }

    #[test]
    fn parameter_symmetry() {
        let a = gen_f(3, 3, 1, 2).unwrap();
        let b = gen_f(3, 1, 2, 3).unwrap();
        assert!(a.is_isomorphic(&b));
        let g1 = gen_g(3, 1, 3, 2, 1, 1).unwrap();
        let g2 = gen_g(3, 1, 1, 2, 3, 1).unwrap();
        assert!(g1.is_isomorphic(&g2));
        assert_eq!(normalise_g(&[3, 1, 2, 1, 1]), vec![1, 1, 2, 1, 3]);
    }

    #[test]
    fn extension_commutes_with_generation() {
        for spec in
            ["A(4)", "C(3)", "C(2)", "E(1,2,3)", "F(2,2,3)", "G(1,1:2:1,3)", "Dtilde(6)", "BD(6)", "BDtilde(7)", "S(4)"]
        {
            let lo = FamilyId::parse(spec, 3).unwrap().build().unwrap();
            let hi = FamilyId::parse(spec, 4).unwrap().build().unwrap();
            assert!(lo.extend().is_isomorphic(&hi), "{spec}");
        }
        let h4 = FamilyId::parse("H4(1,1,2,2)", 4).unwrap().build().unwrap();
        let h5 = FamilyId::parse("H4(1,1,2,2)", 5).unwrap().build().unwrap();
        assert!(h4.extend().is_isomorphic(&h5));
    }

    #[test]
    fn edge_star_three_is_f111() {
        assert!(gen_edge_star(3).unwrap().is_isomorphic(&gen_f(3, 1, 1, 1).unwrap()));
    }

    #[test]
    fn bad_params() {
        assert!(gen_path(3, 0).is_err());
        assert!(gen_cycle(3, 1).is_err());
        assert!(gen_f(2, 1, 1, 1).is_err());
        assert!(gen_dtilde(3, 4).is_err());
        assert!(FamilyId::parse("Btilde(7)", 3).unwrap().build().is_err());
        assert!(FamilyId::parse("Q(1)", 3).is_err());
        assert!(FamilyId::parse("F(1,2)", 3).is_err());
    }

    #[test]
    fn smith_graphs() {
        assert_eq!(gen_smith2(Smith2::E6, 0).unwrap().edge_count(), 5);
        assert_eq!(gen_smith2(Smith2::A, 1).unwrap().edge_count(), 1);
        let d4 = gen_smith2(Smith2::Dtilde, 4).unwrap();
        assert_eq!(d4.max_degree(), 4);
        assert_eq!(gen_smith2(Smith2::Atilde, 2).unwrap().edges(), &[vec![0, 1], vec![0, 1]]);
    }

    #[test]
    fn members_small() {
        let names = |r, m| -> Vec<String> {
            family_members_with_edges(r, m).unwrap().iter().map(|(id, _)| id.to_string()).collect()
        };
        let two = names(3, 2);
        assert!(two.contains(&"C(2)^(3)".to_string()));
        assert!(two.contains(&"A(2)^(3)".to_string()));
        let four = names(3, 4);
        for want in ["S(4)^(3)", "E(1,1,2)^(3)", "A(4)^(3)", "C(4)^(3)", "F(1,1,1)^(3)"] {
            assert!(four.contains(&want.to_string()), "{want} in {four:?}");
        }
        let five = names(2, 5);
        assert!(five.contains(&"E(1,2,2)^(2)".to_string()));
        assert!(five.contains(&"Dtilde(5)^(2)".to_string()));
        // B_5 coincides with D'_5.
        let f5: Vec<_> = names(3, 5).into_iter().filter(|s| s.starts_with('F')).collect();
        assert_eq!(f5, vec!["F(1,1,2)^(3)".to_string()]);
        assert!(family_members_with_edges(3, MEMBER_EDGE_BOUND + 1).is_err());
    }

    #[test]
    fn display_and_parse() {
        let g = FamilyId::parse("G(1,1:6:1,3)", 3).unwrap();
        assert_eq!(g.params, vec![1, 1, 6, 1, 3]);
        assert_eq!(g.to_string(), "G(1,1:6:1,3)^(3)");
        assert_eq!(FamilyId::parse("F:1,4,8", 3).unwrap().params, vec![1, 4, 8]);
        assert_eq!(FamilyId::parse("Smith2:E6", 2).unwrap().tag, FamilyTag::Smith2(Smith2::E6));
        assert_eq!(FamilyId::parse("EdgeStar", 5).unwrap().edge_count().unwrap(), 6);
        assert_eq!(FamilyId::parse("F(1,2,4)", 3).unwrap().alias_name().unwrap(), "B_8");
        assert_eq!(FamilyId::parse("G(1,2:0:1,2)", 3).unwrap().alias_name().unwrap(), "~B_8");
    }
}
