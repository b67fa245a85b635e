use std::cmp::Ordering;
use std::collections::VecDeque;

use super::incidence::{rho_from_alpha, WeightedIncidence};
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::hypergraph::{Contraction, Hypergraph};

/// Where propagation on a hypertree ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Root {
    /// Residual is `Σ_{e ∋ v} B(v, e) - 1`.
    Vertex(usize),
    /// Residual is `α - Π_{v ∈ e} B(v, e)`.
    Edge(usize),
}

/// Outcome of [`tree_propagate`].
///
/// Both residual conventions grow with α and vanish exactly at the normal value.
#[derive(Clone, Debug, PartialEq)]
pub enum Propagation<T> {
    /// Some row `1 - Σ` became non-positive at `(vertex, edge)`: α is too large.
    Failure { vertex: usize, edge: usize },
    /// Every entry is positive; all rows other than the root's are exactly 1.
    Residual { residual: T, certificate: WeightedIncidence<T> },
}

impl<T: Scalar> Propagation<T> {
    /// `Less` when α lies below the normal value, `Greater` when above.
    pub fn side(&self) -> Ordering {
        match self {
            Propagation::Failure { .. } => Ordering::Greater,
            Propagation::Residual { residual, .. } => residual.compare(&T::zero()),
        }
    }
}

/// Maximum-degree vertex, lowest id on ties.
pub fn default_root(h: &Hypergraph) -> usize {
    let deg = h.degrees();
    let max = deg.iter().copied().max().unwrap_or(0);
    deg.iter().position(|&d| d == max).unwrap_or(0)
}

struct Orientation {
    /// Edges in BFS order from the root.
    order: Vec<usize>,
    /// For each edge, the vertex towards the root (`None` for a root edge).
    parent_vertex: Vec<Option<usize>>,
    /// For each vertex, the edges hanging below it.
    child_edges: Vec<Vec<usize>>,
}

fn orient(h: &Hypergraph, root: Root) -> Result<Orientation> {
    let inc = h.incidence_lists();
    let m = h.edge_count();
    let mut parent_vertex = vec![None; m];
    let mut child_edges = vec![Vec::new(); h.vertex_count()];
    let mut seen_edge = vec![false; m];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    match root {
        Root::Vertex(v) => {
            h.check_vertex(v)?;
            for &e in &inc[v] {
                seen_edge[e] = true;
                parent_vertex[e] = Some(v);
                child_edges[v].push(e);
                queue.push_back(e);
            }
        }
        Root::Edge(e) => {
            h.check_edge(e)?;
            seen_edge[e] = true;
            queue.push_back(e);
        }
    }
    while let Some(e) = queue.pop_front() {
        order.push(e);
        for &u in &h.edges()[e] {
            if Some(u) == parent_vertex[e] {
                continue;
            }
            for &f in &inc[u] {
                if f != e && !seen_edge[f] {
                    seen_edge[f] = true;
                    parent_vertex[f] = Some(u);
                    child_edges[u].push(f);
                    queue.push_back(f);
                }
            }
        }
    }
    Ok(Orientation { order, parent_vertex, child_edges })
}

/// Propagates a certificate from the leaves towards `root` at the given α.
pub fn tree_propagate<T: Scalar>(h: &Hypergraph, root: Root, alpha: &T) -> Result<Propagation<T>> {
    if !h.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    if !alpha.is_positive() {
        return Err(Error::NonPositive(format!("{alpha:?}")));
    }
    let orient = orient(h, root)?;
    let mut b: WeightedIncidence<T> = WeightedIncidence::new(h);
    for &e in orient.order.iter().rev() {
        let mut product = T::one();
        for &u in &h.edges()[e] {
            if Some(u) == orient.parent_vertex[e] {
                continue;
            }
            let below = orient.child_edges[u]
                .iter()
                .fold(T::zero(), |acc, &f| acc + b.get(u, f).expect("children first").clone());
            let val = T::one() - below;
            if !val.is_positive() {
                return Ok(Propagation::Failure { vertex: u, edge: e });
            }
            product = product * val.clone();
            b.insert(u, e, val);
        }
        if let Some(p) = orient.parent_vertex[e] {
            b.insert(p, e, alpha.clone() / product);
        }
    }
    let residual = match root {
        Root::Vertex(v) => {
            orient.child_edges[v].iter().fold(T::zero(), |acc, &f| acc + b.get(v, f).expect("set").clone()) - T::one()
        }
        Root::Edge(e) => {
            let product = h.edges()[e].iter().fold(T::one(), |acc, &u| acc * b.get(u, e).expect("set").clone());
            alpha.clone() - product
        }
    };
    Ok(Propagation::Residual { residual, certificate: b })
}

/// Result of the bisection in [`tree_alpha_solve`].
#[derive(Clone, Debug, PartialEq)]
pub struct TreeSolution {
    pub alpha: f64,
    /// The normal value of α lies in `[alpha_low, alpha_high]`.
    pub alpha_low: f64,
    pub alpha_high: f64,
    pub rho: f64,
    pub rho_lower: f64,
    pub rho_upper: f64,
    pub root: usize,
    pub steps: usize,
    /// Approximately α-normal certificate at `alpha`.
    pub certificate: WeightedIncidence<f64>,
}

/// Bisects α on `(0, 1]` until the induced bracket on ρ is at most `tol` wide.
pub fn tree_alpha_solve(h: &Hypergraph, tol: f64) -> Result<TreeSolution> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::BadTolerance(tol));
    }
    if h.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    if !h.is_hypertree() {
        return Err(Error::NotHypertree);
    }
    let r = h.rank();
    let root = Root::Vertex(default_root(h));
    let rho = |a: f64| rho_from_alpha(r, a).expect("positive alpha");
    let mut hi = 1.0f64;
    let mut lo = 0.5f64;
    let mut steps = 0;
    let mut exact = None;
    match tree_propagate(h, root, &hi)?.side() {
        Ordering::Equal | Ordering::Less => exact = Some(hi),
        Ordering::Greater => {}
    }
    if exact.is_none() {
        loop {
            steps += 1;
            match tree_propagate(h, root, &lo)?.side() {
                Ordering::Less => break,
                Ordering::Equal => {
                    exact = Some(lo);
                    break;
                }
                Ordering::Greater => {
                    hi = lo;
                    lo /= 2.0;
                }
            }
        }
    }
    if exact.is_none() {
        while rho(lo) - rho(hi) > tol {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            steps += 1;
            match tree_propagate(h, root, &mid)?.side() {
                Ordering::Less => lo = mid,
                Ordering::Greater => hi = mid,
                Ordering::Equal => {
                    exact = Some(mid);
                    break;
                }
            }
        }
    }
    let (alpha, alpha_low, alpha_high) = match exact {
        Some(a) => (a, a, a),
        None => (0.5 * (lo + hi), lo, hi),
    };
    let certificate = [alpha, alpha_low]
        .iter()
        .find_map(|a| match tree_propagate(h, root, a) {
            Ok(Propagation::Residual { certificate, .. }) => Some(certificate),
            _ => None,
        })
        .expect("the lower end always propagates");
    let Root::Vertex(root) = root else { unreachable!() };
    Ok(TreeSolution {
        alpha,
        alpha_low,
        alpha_high,
        rho: rho(alpha),
        rho_lower: rho(alpha_high),
        rho_upper: rho(alpha_low),
        root,
        steps,
        certificate,
    })
}

/// Lifts a certificate of `H/e` back to `H` across the contracted 2-bridge `e`.
///
/// With `x` the weight the merged vertex carries on one side, the two
/// endpoints of `e` receive `1 - x` and `x` (when the merged row sums to 1),
/// and the leaves of `e` receive 1.
pub fn lift_contraction<T: Scalar>(
    h: &Hypergraph,
    e: usize,
    contraction: &Contraction,
    b: &WeightedIncidence<T>,
) -> Result<WeightedIncidence<T>> {
    let (u, v, w) = contraction.merged;
    let u_side = h.component_of(u, Some(e));
    let edge_in_contraction = |f: usize| if f < e { f } else { f - 1 };
    let mut lifted = WeightedIncidence::new(h);
    let mut sum_u = T::zero();
    let mut sum_v = T::zero();
    for (f, edge) in h.edges().iter().enumerate() {
        if f == e {
            continue;
        }
        let g = edge_in_contraction(f);
        for &x in edge {
            let y = contraction.vertex_map[x].expect("vertex of another edge is kept");
            let val = b.get(y, g).ok_or(Error::MissingEntry { vertex: y, edge: g })?.clone();
            if y == w {
                if u_side[x] {
                    sum_u = sum_u + val.clone();
                } else {
                    sum_v = sum_v + val.clone();
                }
            }
            lifted.insert(x, f, val);
        }
    }
    for &x in &h.edges()[e] {
        let val = if x == u {
            T::one() - sum_u.clone()
        } else if x == v {
            T::one() - sum_v.clone()
        } else {
            T::one()
        };
        lifted.insert(x, e, val);
    }
    lifted.validate(h)?;
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::super::incidence::{check_normal, check_supernormal, NormalcyKind};
    use super::super::scalar::{ratio, Rational};
    use super::*;

    fn path(r: usize, n: usize) -> Hypergraph {
        let edges = (0..n).map(|i| (i * (r - 1)..i * (r - 1) + r).collect()).collect();
        Hypergraph::new(r, n * (r - 1) + 1, edges).unwrap()
    }

    fn residual(p: Propagation<Rational>) -> Rational {
        match p {
            Propagation::Residual { residual, .. } => residual,
            Propagation::Failure { .. } => panic!("unexpected failure"),
        }
    }

    #[test]
    fn two_edge_path_residuals() {
        let h = path(3, 2);
        assert_eq!(residual(tree_propagate(&h, Root::Vertex(2), &ratio(1, 2)).unwrap()), ratio(0, 1));
        assert_eq!(residual(tree_propagate(&h, Root::Vertex(2), &ratio(1, 4)).unwrap()), ratio(-1, 2));
        let single = path(3, 1);
        assert_eq!(residual(tree_propagate(&single, Root::Vertex(0), &ratio(1, 1)).unwrap()), ratio(0, 1));
    }

    #[test]
    fn edge_root_matches_vertex_root_sign() {
        let h = path(3, 3);
        for (p, q) in [(1, 5), (1, 3), (2, 5), (1, 2)] {
            let a = ratio(p, q);
            let sv = tree_propagate(&h, Root::Vertex(2), &a).unwrap().side();
            let se = tree_propagate(&h, Root::Edge(1), &a).unwrap().side();
            assert_eq!(sv, se, "alpha {p}/{q}");
        }
    }

    #[test]
    fn failure_when_alpha_too_large() {
        let h = path(3, 4);
        let out = tree_propagate(&h, Root::Vertex(0), &ratio(9, 10)).unwrap();
        assert!(matches!(out, Propagation::Failure { .. }));
        assert_eq!(out.side(), Ordering::Greater);
    }

    #[test]
    fn rejects_cycles() {
        let c2 = Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(tree_propagate(&c2, Root::Vertex(0), &0.25), Err(Error::NotHypertree));
        assert_eq!(tree_alpha_solve(&c2, 1e-10).unwrap_err(), Error::NotHypertree);
    }

    #[test]
    fn solve_two_edge_path() {
        let sol = tree_alpha_solve(&path(3, 2), 1e-12).unwrap();
        assert!((sol.alpha - 0.5).abs() < 1e-11);
        assert!((sol.rho - 2.0 * 2f64.cbrt()).abs() < 1e-11);
        assert!(sol.rho_lower <= sol.rho && sol.rho <= sol.rho_upper);
        let single = tree_alpha_solve(&path(4, 1), 1e-10).unwrap();
        assert_eq!(single.alpha, 1.0);
    }

    #[test]
    fn lift_across_middle_bridge() {
        // The contracted path has a normal certificate at 1/2; lifting gives x = 1/2 at the bridge.
        let h = path(3, 3);
        let c = h.contract(1).unwrap();
        let Propagation::Residual { certificate, residual } =
            tree_propagate(&c.hypergraph, Root::Vertex(c.merged.2), &ratio(1, 2)).unwrap()
        else {
            panic!()
        };
        assert_eq!(residual, ratio(0, 1));
        let lifted = lift_contraction(&h, 1, &c, &certificate).unwrap();
        assert_eq!(lifted.get(2, 1), Some(&ratio(1, 2)));
        let rep = check_normal(&h, &lifted, &ratio(1, 2)).unwrap();
        // Rows are all 1, but the bridge product is 1/4 rather than 1/2.
        assert!(rep.row_sum_status.iter().all(|s| *s == super::super::incidence::Relation::Equal));
        let sup = check_supernormal(&h, &lifted, &ratio(1, 2)).unwrap();
        assert_eq!(sup.kind, NormalcyKind::StrictlySupernormal);
    }
}
