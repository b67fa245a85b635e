use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Sparse weights `B(v, e)` on the incidences of a hypergraph.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedIncidence<T> {
    rank: usize,
    vertex_count: usize,
    edge_count: usize,
    entries: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> WeightedIncidence<T> {
    pub fn new(h: &Hypergraph) -> Self {
        WeightedIncidence {
            rank: h.rank(),
            vertex_count: h.vertex_count(),
            edge_count: h.edge_count(),
            entries: BTreeMap::new(),
        }
    }

    /// Builds from `(v, e, value)` triples, checking them against `h`.
    pub fn from_entries(h: &Hypergraph, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Result<Self> {
        let mut b = Self::new(h);
        for (v, e, val) in entries {
            b.insert(v, e, val);
        }
        b.validate(h)?;
        Ok(b)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn insert(&mut self, v: usize, e: usize, val: T) {
        self.entries.insert((v, e), val);
    }

    pub fn get(&self, v: usize, e: usize) -> Option<&T> {
        self.entries.get(&(v, e))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in `(vertex, edge)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.entries.iter().map(|(&(v, e), val)| (v, e, val))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> WeightedIncidence<U> {
        WeightedIncidence {
            rank: self.rank,
            vertex_count: self.vertex_count,
            edge_count: self.edge_count,
            entries: self.entries.iter().map(|(&k, v)| (k, f(v))).collect(),
        }
    }

    pub fn to_f64(&self) -> WeightedIncidence<f64> {
        self.map(Scalar::to_f64)
    }

    /// Every entry sits on an incidence, every incidence has an entry, all are positive.
    pub fn validate(&self, h: &Hypergraph) -> Result<()> {
        for (&(v, e), val) in &self.entries {
            let inside = h.edges().get(e).is_some_and(|edge| edge.binary_search(&v).is_ok());
            if !inside {
                return Err(Error::EntryOutsideIncidence { vertex: v, edge: e });
            }
            if !val.is_positive() {
                return Err(Error::NonPositiveEntry { vertex: v, edge: e });
            }
        }
        for (e, edge) in h.edges().iter().enumerate() {
            for &v in edge {
                if !self.entries.contains_key(&(v, e)) {
                    return Err(Error::MissingEntry { vertex: v, edge: e });
                }
            }
        }
        Ok(())
    }

    fn require(&self, v: usize, e: usize) -> Result<&T> {
        self.get(v, e).ok_or(Error::MissingEntry { vertex: v, edge: e })
    }

    /// `Σ_{e ∋ v} B(v, e)` for each vertex.
    pub fn row_sums(&self, h: &Hypergraph) -> Result<Vec<T>> {
        let mut sums = vec![T::zero(); h.vertex_count()];
        for (e, edge) in h.edges().iter().enumerate() {
            for &v in edge {
                sums[v] = sums[v].clone() + self.require(v, e)?.clone();
            }
        }
        Ok(sums)
    }

    /// `Π_{v ∈ e} B(v, e)` for each edge.
    pub fn edge_products(&self, h: &Hypergraph) -> Result<Vec<T>> {
        h.edges()
            .iter()
            .enumerate()
            .map(|(e, edge)| edge.iter().try_fold(T::one(), |acc, &v| Ok(acc * self.require(v, e)?.clone())))
            .collect()
    }
}

/// Outcome of one comparison, written `<`, `=` or `>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">")]
    Greater,
}

impl From<Ordering> for Relation {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => Relation::Less,
            Ordering::Equal => Relation::Equal,
            Ordering::Greater => Relation::Greater,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalcyKind {
    Normal,
    Subnormal,
    StrictlySubnormal,
    Supernormal,
    StrictlySupernormal,
    None,
}

impl NormalcyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            NormalcyKind::Normal => "normal",
            NormalcyKind::Subnormal => "subnormal",
            NormalcyKind::StrictlySubnormal => "strictly-subnormal",
            NormalcyKind::Supernormal => "supernormal",
            NormalcyKind::StrictlySupernormal => "strictly-supernormal",
            NormalcyKind::None => "none",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            NormalcyKind::Normal,
            NormalcyKind::Subnormal,
            NormalcyKind::StrictlySubnormal,
            NormalcyKind::Supernormal,
            NormalcyKind::StrictlySupernormal,
            NormalcyKind::None,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

/// Row-sum and edge-product comparisons of a certificate against 1 and α.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalcyReport<T = super::Rational> {
    pub alpha: T,
    /// Row sum of each vertex compared with 1.
    pub row_sum_status: Vec<Relation>,
    /// Product of each edge compared with α.
    pub edge_product_status: Vec<Relation>,
    pub row_sums: Vec<T>,
    pub edge_products: Vec<T>,
    pub kind: NormalcyKind,
    pub consistent: bool,
}

impl<T> NormalcyReport<T> {
    pub fn is_normal(&self) -> bool {
        self.all_rows(Relation::Equal) && self.all_edges(Relation::Equal)
    }

    /// Rows `≤ 1` and products `≥ α`.
    pub fn is_subnormal(&self) -> bool {
        self.row_sum_status.iter().all(|&s| s != Relation::Greater)
            && self.edge_product_status.iter().all(|&s| s != Relation::Less)
    }

    /// Rows `≥ 1` and products `≤ α`.
    pub fn is_supernormal(&self) -> bool {
        self.row_sum_status.iter().all(|&s| s != Relation::Less)
            && self.edge_product_status.iter().all(|&s| s != Relation::Greater)
    }

    fn all_rows(&self, r: Relation) -> bool {
        self.row_sum_status.iter().all(|&s| s == r)
    }

    fn all_edges(&self, r: Relation) -> bool {
        self.edge_product_status.iter().all(|&s| s == r)
    }

    /// The most specific kind the statuses support.
    pub fn strongest_kind(&self) -> NormalcyKind {
        if self.is_normal() {
            NormalcyKind::Normal
        } else if self.is_subnormal() {
            NormalcyKind::StrictlySubnormal
        } else if self.is_supernormal() {
            NormalcyKind::StrictlySupernormal
        } else {
            NormalcyKind::None
        }
    }

    /// True when the statuses support `claim` (normal supports the weak variants too).
    pub fn supports(&self, claim: NormalcyKind) -> bool {
        match claim {
            NormalcyKind::Normal => self.is_normal(),
            NormalcyKind::Subnormal => self.is_subnormal(),
            NormalcyKind::StrictlySubnormal => self.is_subnormal() && !self.is_normal(),
            NormalcyKind::Supernormal => self.is_supernormal(),
            NormalcyKind::StrictlySupernormal => self.is_supernormal() && !self.is_normal(),
            NormalcyKind::None => true,
        }
    }
}

fn analyse<T: Scalar>(h: &Hypergraph, b: &WeightedIncidence<T>, alpha: &T) -> Result<NormalcyReport<T>> {
    b.validate(h)?;
    let row_sums = b.row_sums(h)?;
    let edge_products = b.edge_products(h)?;
    let row_sum_status = row_sums.iter().map(|s| s.compare(&T::one()).into()).collect();
    let edge_product_status = edge_products.iter().map(|p| p.compare(alpha).into()).collect();
    let consistent = if h.is_connected() { check_consistent(h, b)? } else { false };
    Ok(NormalcyReport {
        alpha: alpha.clone(),
        row_sum_status,
        edge_product_status,
        row_sums,
        edge_products,
        kind: NormalcyKind::None,
        consistent,
    })
}

/// Row sums all 1 and edge products all α.
pub fn check_normal<T: Scalar>(h: &Hypergraph, b: &WeightedIncidence<T>, alpha: &T) -> Result<NormalcyReport<T>> {
    let mut report = analyse(h, b, alpha)?;
    report.kind = if report.is_normal() { NormalcyKind::Normal } else { NormalcyKind::None };
    Ok(report)
}

/// Row sums at most 1 and edge products at least α.
pub fn check_subnormal<T: Scalar>(h: &Hypergraph, b: &WeightedIncidence<T>, alpha: &T) -> Result<NormalcyReport<T>> {
    let mut report = analyse(h, b, alpha)?;
    report.kind = match (report.is_subnormal(), report.is_normal()) {
        (true, true) => NormalcyKind::Subnormal,
        (true, false) => NormalcyKind::StrictlySubnormal,
        _ => NormalcyKind::None,
    };
    Ok(report)
}

/// Row sums at least 1 and edge products at most α.
pub fn check_supernormal<T: Scalar>(h: &Hypergraph, b: &WeightedIncidence<T>, alpha: &T) -> Result<NormalcyReport<T>> {
    let mut report = analyse(h, b, alpha)?;
    report.kind = match (report.is_supernormal(), report.is_normal()) {
        (true, true) => NormalcyKind::Supernormal,
        (true, false) => NormalcyKind::StrictlySupernormal,
        _ => NormalcyKind::None,
    };
    Ok(report)
}

/// Report whose kind is the strongest one the statuses support.
pub fn check_certificate<T: Scalar>(h: &Hypergraph, b: &WeightedIncidence<T>, alpha: &T) -> Result<NormalcyReport<T>> {
    let mut report = analyse(h, b, alpha)?;
    report.kind = report.strongest_kind();
    Ok(report)
}

/// `Π B(v_i, e_i) / B(v_{i-1}, e_i) = 1` around every cycle of the fundamental basis.
pub fn check_consistent<T: Scalar>(h: &Hypergraph, b: &WeightedIncidence<T>) -> Result<bool> {
    for cycle in h.cycle_basis()? {
        let mut num = T::one();
        let mut den = T::one();
        for (i, &e) in cycle.edges.iter().enumerate() {
            let prev = cycle.vertices[i];
            let next = cycle.vertices[i + 1];
            num = num * b.get(next, e).ok_or(Error::MissingEntry { vertex: next, edge: e })?.clone();
            den = den * b.get(prev, e).ok_or(Error::MissingEntry { vertex: prev, edge: e })?.clone();
        }
        if num.compare(&den) != Ordering::Equal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ρ = (r-1)!·α^(-1/r)`.
pub fn rho_from_alpha(r: usize, alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::NonPositive(alpha.to_string()));
    }
    if r < 2 {
        return Err(Error::RankTooSmall { rank: r, min: 2 });
    }
    Ok(factorial(r - 1) * alpha.powf(-1.0 / r as f64))
}

/// `α = ((r-1)!/ρ)^r`.
pub fn alpha_from_rho(r: usize, rho: f64) -> Result<f64> {
    if !rho.is_finite() || rho <= 0.0 {
        return Err(Error::NonPositive(rho.to_string()));
    }
    if r < 2 {
        return Err(Error::RankTooSmall { rank: r, min: 2 });
    }
    Ok((factorial(r - 1) / rho).powi(r as i32))
}

pub(crate) fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

#[cfg(test)]
mod tests {
    use super::super::scalar::{ratio, Rational};
    use super::*;

    fn cycle2(n: usize) -> Hypergraph {
        Hypergraph::new(2, n, (0..n).map(|i| vec![i, (i + 1) % n]).collect()).unwrap()
    }

    fn halves(h: &Hypergraph) -> WeightedIncidence<Rational> {
        let entries = h.edges().iter().enumerate().flat_map(|(e, edge)| edge.iter().map(move |&v| (v, e, ratio(1, 2))));
        WeightedIncidence::from_entries(h, entries).unwrap()
    }

    #[test]
    fn graph_cycle_is_quarter_normal() {
        let h = cycle2(5);
        let rep = check_normal(&h, &halves(&h), &ratio(1, 4)).unwrap();
        assert_eq!(rep.kind, NormalcyKind::Normal);
        assert!(rep.consistent);
        let sub = check_subnormal(&h, &halves(&h), &ratio(1, 4)).unwrap();
        assert_eq!(sub.kind, NormalcyKind::Subnormal);
        let sup = check_supernormal(&h, &halves(&h), &ratio(1, 4)).unwrap();
        assert_eq!(sup.kind, NormalcyKind::Supernormal);
    }

    #[test]
    fn alternating_thirds_are_inconsistent() {
        // Triangle with B(v_i, e_i) = 1/3 and B(v_{i+1}, e_i) = 2/3.
        let h = cycle2(3);
        let mut b = WeightedIncidence::new(&h);
        for (e, edge) in h.edges().iter().enumerate() {
            let (a, c) = (e, (e + 1) % 3);
            assert!(edge.contains(&a) && edge.contains(&c));
            b.insert(a, e, ratio(1, 3));
            b.insert(c, e, ratio(2, 3));
        }
        assert!(!check_consistent(&h, &b).unwrap());
        assert!(check_consistent(&h, &halves(&h)).unwrap());
    }

    #[test]
    fn path_halves_are_strictly_subnormal() {
        let h = Hypergraph::new(2, 4, vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        let rep = check_subnormal(&h, &halves(&h), &ratio(1, 4)).unwrap();
        assert_eq!(rep.kind, NormalcyKind::StrictlySubnormal);
        assert_eq!(rep.row_sum_status[0], Relation::Less);
        let normal = check_normal(&h, &halves(&h), &ratio(1, 4)).unwrap();
        assert_eq!(normal.kind, NormalcyKind::None);
    }

    #[test]
    fn malformed_certificates() {
        let h = cycle2(3);
        let mut b = halves(&h);
        b.insert(2, 0, ratio(1, 2));
        assert_eq!(
            check_normal(&h, &b, &ratio(1, 4)).unwrap_err(),
            Error::EntryOutsideIncidence { vertex: 2, edge: 0 }
        );
        let mut short = WeightedIncidence::new(&h);
        short.insert(0, 0, ratio(1, 2));
        assert!(matches!(check_normal(&h, &short, &ratio(1, 4)), Err(Error::MissingEntry { .. })));
        let mut zero = halves(&h);
        zero.insert(0, 0, ratio(0, 1));
        assert!(matches!(zero.validate(&h), Err(Error::NonPositiveEntry { .. })));
    }

    #[test]
    fn alpha_rho_conversion() {
        let rho3 = rho_from_alpha(3, 0.25).unwrap();
        assert!((rho3 - 2.0 * 4f64.cbrt()).abs() < 1e-14);
        assert!((rho_from_alpha(3, 1.0).unwrap() - 2.0).abs() < 1e-15);
        assert!((rho_from_alpha(2, 0.25).unwrap() - 2.0).abs() < 1e-15);
        assert!((alpha_from_rho(3, rho3).unwrap() - 0.25).abs() < 1e-15);
        assert!(rho_from_alpha(3, 0.0).is_err());
        assert!(alpha_from_rho(3, -1.0).is_err());
    }
}
