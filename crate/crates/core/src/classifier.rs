//! Three-way comparison of ρ(H) with `ρ_r = (r-1)!·4^(1/r)`, decided from structure alone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{family_members_with_verdicts, FamilyId, FamilyTag, MEMBER_EDGE_BOUND};
use crate::hypergraph::Hypergraph;
use crate::labeling::factorial;
use crate::spectral::spectral_radius;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    Below,
    Equal,
    Above,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub verdict: Verdict,
    /// Present iff the verdict is not `Above`.
    pub family: Option<FamilyId>,
    pub witness: String,
}

/// `(r-1)!·4^(1/r)`.
pub fn rho_r(r: usize) -> Result<f64> {
    if r < 2 {
        return Err(Error::RankTooSmall { rank: r, min: 2 });
    }
    Ok(factorial(r - 1) * 4f64.powf(1.0 / r as f64))
}

fn above(witness: impl Into<String>) -> Classification {
    Classification { verdict: Verdict::Above, family: None, witness: witness.into() }
}

/// `Some` with the verdict when `h` is isomorphic to the member `tag(params)`.
fn matches(
    h: &Hypergraph,
    tag: FamilyTag,
    params: &[usize],
    verdict: Verdict,
    witness: &str,
) -> Option<Classification> {
    let id = FamilyId::new(tag, params.to_vec(), h.rank()).canonical().ok()?;
    let g = id.build().ok()?;
    g.is_isomorphic(h).then(|| Classification { verdict, family: Some(id), witness: witness.into() })
}

fn member(h: &Hypergraph, tag: FamilyTag, params: &[usize], verdict: Verdict, witness: &str) -> Classification {
    matches(h, tag, params, verdict, witness)
        .unwrap_or_else(|| above(format!("{witness}, but not isomorphic to the expected member")))
}

/// Classifies a connected hypergraph with at least one edge.
pub fn classify(h: &Hypergraph) -> Result<Classification> {
    if h.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    h.require_connected()?;
    Ok(match h.rank() {
        2 | 3 => low_rank(h),
        _ => high_rank(h)?,
    })
}

fn high_rank(h: &Hypergraph) -> Result<Classification> {
    let r = h.rank();
    if h.is_reducible() {
        let reduced = h.reduce()?;
        let inner = classify(&reduced)?;
        return Ok(match inner.family {
            Some(id) => {
                let lifted = id.with_rank(r);
                match lifted.build() {
                    Ok(g) if g.is_isomorphic(h) => Classification {
                        verdict: inner.verdict,
                        family: Some(lifted),
                        witness: format!("reducible; {}", inner.witness),
                    },
                    _ => above("reducible, but the lifted member does not match"),
                }
            }
            None => above(format!("reducible; {}", inner.witness)),
        });
    }
    if r >= 5 {
        return Ok(above("irreducible with rank at least 5"));
    }
    let m = h.edge_count();
    let found = (m == 7)
        .then(|| matches(h, FamilyTag::H4, &[1, 1, 2, 2], Verdict::Equal, "irreducible H4(1,1,2,2)"))
        .flatten()
        .or_else(|| {
            (5..=8)
                .contains(&m)
                .then(|| {
                    matches(h, FamilyTag::H4, &[1, 1, 1, m - 4], Verdict::Below, "irreducible H4(1,1,1,l), l <= 4")
                })
                .flatten()
        });
    Ok(found.unwrap_or_else(|| above("irreducible and not one of the H4 exceptions")))
}

/// Edges of the branch that starts with edge `e` and leaves vertex `v` behind.
fn branch_edges(h: &Hypergraph, inc: &[Vec<usize>], v: usize, e: usize) -> Vec<usize> {
    let mut seen = vec![false; h.edge_count()];
    let mut stack = vec![e];
    seen[e] = true;
    let mut out = Vec::new();
    while let Some(f) = stack.pop() {
        out.push(f);
        for &u in &h.edges()[f] {
            if u == v {
                continue;
            }
            for &g in &inc[u] {
                if !seen[g] {
                    seen[g] = true;
                    stack.push(g);
                }
            }
        }
    }
    out
}

/// Edges with no leaf vertex.
fn branching_edges(h: &Hypergraph, degrees: &[usize]) -> Vec<usize> {
    (0..h.edge_count()).filter(|&e| h.edges()[e].iter().all(|&v| degrees[v] >= 2)).collect()
}

/// Size of the branch hanging at vertex `v` away from edge `e`.
fn hanging_size(h: &Hypergraph, inc: &[Vec<usize>], v: usize, e: usize) -> usize {
    inc[v].iter().filter(|&&f| f != e).map(|&f| branch_edges(h, inc, v, f).len()).sum()
}

fn e_table(h: &Hypergraph, a: usize, b: usize, c: usize) -> Classification {
    use Verdict::*;
    let verdict = match (a, b, c) {
        (2, 2, 2) => Equal,
        (1, 1, _) => Below,
        (1, 2, 2..=4) => Below,
        (1, 2, 5) | (1, 3, 3) => Equal,
        _ => Above,
    };
    if verdict == Above {
        return above(format!("three paths {a},{b},{c} at a degree-3 vertex exceed the E table"));
    }
    member(h, FamilyTag::E, &[a, b, c], verdict, "three paths at a degree-3 vertex")
}

fn f_table(h: &Hypergraph, i: usize, j: usize, k: usize) -> Classification {
    use Verdict::*;
    let verdict = match (i, j, k) {
        (1, 1, _) | (1, 2, _) => Below,
        (1, 3, 3..=13) => Below,
        (1, 3, 14) => Equal,
        (1, 4, 4..=7) => Below,
        (1, 4, 8) => Equal,
        (1, 5, 5) => Below,
        (1, 5, 6) => Equal,
        (2, 2, 2..=6) => Below,
        (2, 2, 7) => Equal,
        (2, 3, 3) => Below,
        (2, 3, 4) => Equal,
        _ => Above,
    };
    if verdict == Above {
        return above(format!("one branching edge with paths {i},{j},{k} exceeds the F table"));
    }
    member(h, FamilyTag::F, &[i, j, k], verdict, "one branching edge with three paths")
}

fn g_table(h: &Hypergraph, p: &[usize]) -> Classification {
    use Verdict::*;
    let (i, j, k, l, m) = (p[0], p[1], p[2], p[3], p[4]);
    let verdict = if i + j >= 3 && l + m >= 3 {
        if (i, j, l, m) == (1, 2, 1, 2) {
            Equal
        } else {
            Above
        }
    } else {
        match (l, m, k) {
            (1, 1, _) | (1, 2, _) => Below,
            (1, 3, 0..=5) => Below,
            (1, 3, 6) | (1, 4, 0) => Equal,
            _ => Above,
        }
    };
    if verdict == Above {
        return above(format!("two branching edges G({i},{j}:{k}:{l},{m}) exceed the G table"));
    }
    member(h, FamilyTag::G, p, verdict, "two branching edges joined by a chain")
}

/// The paths hanging at the other core vertices of branching edge `e`, excluding `toward`.
fn side_paths(h: &Hypergraph, inc: &[Vec<usize>], degrees: &[usize], e: usize, toward: usize) -> Vec<usize> {
    h.edges()[e].iter().filter(|&&u| u != toward && degrees[u] >= 2).map(|&u| hanging_size(h, inc, u, e)).collect()
}

fn low_rank(h: &Hypergraph) -> Classification {
    let r = h.rank();
    let m = h.edge_count();
    if !h.is_simple() {
        return matches(h, FamilyTag::C, &[2], Verdict::Equal, "two edges sharing two vertices")
            .unwrap_or_else(|| above("not simple and properly contains C_2"));
    }
    if h.find_cycle().is_some() {
        if m < 3 {
            return above("cyclic");
        }
        return matches(h, FamilyTag::C, &[m], Verdict::Equal, "simple cycle")
            .unwrap_or_else(|| above("properly contains a cycle"));
    }
    let degrees = h.degrees();
    let inc = h.incidence_lists();
    let max = degrees.iter().copied().max().unwrap_or(0);
    if max >= 4 {
        return match (max, m) {
            (4, 4) => member(h, FamilyTag::S, &[4], Verdict::Equal, "star of four edges"),
            _ => above("a vertex of degree at least 4 beyond S_4"),
        };
    }
    let deg3: Vec<usize> = (0..h.vertex_count()).filter(|&v| degrees[v] == 3).collect();
    if deg3.len() >= 2 {
        return if m >= 5 {
            matches(h, FamilyTag::Dtilde, &[m], Verdict::Equal, "two degree-3 vertices forming ~D_n")
                .unwrap_or_else(|| above("two degree-3 vertices beyond ~D_n"))
        } else {
            above("two degree-3 vertices")
        };
    }
    let branching = if r >= 3 { branching_edges(h, &degrees) } else { Vec::new() };
    if let [v] = deg3[..] {
        let mut branches: Vec<(usize, bool)> = inc[v]
            .iter()
            .map(|&e| {
                let edges = branch_edges(h, &inc, v, e);
                let has = edges.iter().any(|f| branching.contains(f));
                (edges.len(), has)
            })
            .collect();
        branches.sort_unstable();
        let (a, b, c) = (branches[0].0, branches[1].0, branches[2].0);
        if !branches.iter().any(|br| br.1) {
            return e_table(h, a, b, c);
        }
        if a >= 2 {
            return above("three long branches with a branching edge properly contain ~E_6");
        }
        if b >= 2 {
            return above("a branching edge together with two non-unit branches");
        }
        if let Some(c) = (m >= 6)
            .then(|| matches(h, FamilyTag::BDtilde, &[m], Verdict::Equal, "fork followed by a branching edge"))
            .flatten()
        {
            return c;
        }
        return (m >= 5)
            .then(|| matches(h, FamilyTag::BD, &[m], Verdict::Below, "fork followed by a branching edge"))
            .flatten()
            .unwrap_or_else(|| above("fork followed by a branching edge beyond ~BD_n"));
    }
    match branching[..] {
        [] => member(h, FamilyTag::A, &[m], Verdict::Below, "path"),
        [e] => {
            let mut p: Vec<usize> = h.edges()[e].iter().map(|&u| hanging_size(h, &inc, u, e)).collect();
            p.sort_unstable();
            f_table(h, p[0], p[1], p[2])
        }
        [e1, e2] => {
            let toward = |from: usize, to: usize| {
                h.edges()[from]
                    .iter()
                    .copied()
                    .find(|&u| inc[u].iter().any(|&f| f != from && branch_edges(h, &inc, u, f).contains(&to)))
                    .expect("tree is connected")
            };
            let s1 = side_paths(h, &inc, &degrees, e1, toward(e1, e2));
            let s2 = side_paths(h, &inc, &degrees, e2, toward(e2, e1));
            let k = m - 2 - s1.iter().sum::<usize>() - s2.iter().sum::<usize>();
            let id = FamilyId::new(FamilyTag::G, vec![s1[0], s1[1], k, s2[0], s2[1]], r)
                .canonical()
                .expect("five parameters");
            g_table(h, &id.params)
        }
        _ => above("three or more branching edges"),
    }
}

/// The list member isomorphic to `h`, if any.
pub fn recognize_family(h: &Hypergraph) -> Option<FamilyId> {
    recognize_with_verdict(h).map(|(id, _)| id)
}

/// Like [`recognize_family`], also returning the member's verdict.
pub fn recognize_with_verdict(h: &Hypergraph) -> Option<(FamilyId, Verdict)> {
    let m = h.edge_count();
    if m == 0 || m > MEMBER_EDGE_BOUND || !h.is_connected() {
        return None;
    }
    family_members_with_verdicts(h.rank(), m)
        .ok()?
        .into_iter()
        .find(|(_, g, _)| g.is_isomorphic(h))
        .map(|(id, _, v)| (id, v))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub classification: Classification,
    pub rho_r: f64,
    pub lower: f64,
    pub upper: f64,
    /// Side of `ρ_r` the bracket lies on once it clears `ρ_r` by more than `tol`.
    pub numeric: Option<Verdict>,
    pub agree: bool,
}

/// Compares [`classify`] with the numeric bracket.
pub fn verify_classification(h: &Hypergraph, tol: f64) -> Result<VerificationReport> {
    let classification = classify(h)?;
    let target = rho_r(h.rank())?;
    let res = spectral_radius(h, tol)?;
    let numeric = if res.upper_bound < target - tol {
        Some(Verdict::Below)
    } else if res.lower_bound > target + tol {
        Some(Verdict::Above)
    } else {
        None
    };
    let agree = numeric.is_none_or(|v| v == classification.verdict);
    Ok(VerificationReport {
        classification,
        rho_r: target,
        lower: res.lower_bound,
        upper: res.upper_bound,
        numeric,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_cycle, gen_e, gen_edge_star, gen_f, gen_g, gen_path};

    #[test]
    fn thresholds() {
        assert_eq!(rho_r(2).unwrap(), 2.0);
        assert!((rho_r(3).unwrap() - 3.174_802_10).abs() < 1e-8);
        assert!((rho_r(4).unwrap() - 8.485_281_37).abs() < 1e-8);
        assert!(rho_r(1).is_err());
    }

    #[test]
    fn boundary_examples() {
        let c = classify(&gen_f(3, 2, 2, 7).unwrap()).unwrap();
        assert_eq!(c.verdict, Verdict::Equal);
        assert_eq!(c.family.unwrap().to_string(), "F(2,2,7)^(3)");
        assert_eq!(classify(&gen_g(3, 1, 1, 3, 1, 3).unwrap()).unwrap().verdict, Verdict::Below);
        assert_eq!(classify(&gen_f(3, 3, 3, 3).unwrap()).unwrap().verdict, Verdict::Above);
        assert_eq!(classify(&gen_f(3, 1, 3, 14).unwrap()).unwrap().verdict, Verdict::Equal);
        assert_eq!(classify(&gen_f(3, 1, 3, 15).unwrap()).unwrap().verdict, Verdict::Above);
        assert_eq!(classify(&gen_edge_star(5).unwrap()).unwrap().verdict, Verdict::Above);
    }

    #[test]
    fn higher_rank_lifts() {
        let h5 = FamilyId::parse("H4(1,1,2,2)", 5).unwrap().build().unwrap();
        let c = classify(&h5).unwrap();
        assert_eq!(c.verdict, Verdict::Equal);
        assert_eq!(c.family.unwrap().tag, FamilyTag::H4);
        let h4 = FamilyId::parse("H4(1,1,1,5)", 4).unwrap().build().unwrap();
        assert_eq!(classify(&h4).unwrap().verdict, Verdict::Above);
        let c4 = gen_cycle(4, 5).unwrap();
        assert_eq!(classify(&c4).unwrap().verdict, Verdict::Equal);
    }

    #[test]
    fn smith_cases() {
        assert_eq!(classify(&gen_e(2, 1, 2, 4).unwrap()).unwrap().verdict, Verdict::Below);
        assert_eq!(classify(&gen_e(2, 1, 2, 5).unwrap()).unwrap().verdict, Verdict::Equal);
        assert_eq!(classify(&gen_e(2, 1, 2, 6).unwrap()).unwrap().verdict, Verdict::Above);
        assert_eq!(classify(&gen_path(2, 7).unwrap()).unwrap().verdict, Verdict::Below);
        let doubled = Hypergraph::new_multi(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(classify(&doubled).unwrap().verdict, Verdict::Equal);
        let tripled = Hypergraph::new_multi(2, 2, vec![vec![0, 1]; 3]).unwrap();
        assert_eq!(classify(&tripled).unwrap().verdict, Verdict::Above);
    }

    #[test]
    fn preconditions() {
        let two = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(classify(&two), Err(Error::Disconnected));
        assert_eq!(classify(&Hypergraph::trivial(3).unwrap()), Err(Error::NoEdges));
    }

    #[test]
    fn recognition() {
        let b8 = gen_f(3, 1, 2, 4).unwrap();
        assert_eq!(recognize_family(&b8).unwrap().to_string(), "F(1,2,4)^(3)");
        let e6 = gen_e(3, 2, 2, 2).unwrap();
        let perm: Vec<usize> = (0..e6.vertex_count()).rev().collect();
        let id = recognize_family(&e6.relabel(&perm).unwrap()).unwrap();
        assert_eq!(id.alias_name().unwrap(), "~E_6");
        assert!(recognize_family(&gen_f(3, 3, 3, 3).unwrap()).is_none());
    }

    #[test]
    fn verification_agrees() {
        for h in [gen_cycle(3, 5).unwrap(), gen_path(3, 9).unwrap(), gen_f(3, 1, 3, 15).unwrap()] {
            let rep = verify_classification(&h, 1e-10).unwrap();
            assert!(rep.agree, "{rep:?}");
        }
    }
}
