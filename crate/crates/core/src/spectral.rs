//! Spectral radius of the adjacency tensor.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::labeling::{factorial, rho_from_alpha, tree_alpha_solve, WeightedIncidence};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// Shift added to the iteration map, in units of `(r-1)!`.
const SHIFT: f64 = 0.5;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Positive, unit r-norm.
    pub vector: Vec<f64>,
    pub lower_bound: f64,
    pub upper_bound: f64,
    pub iterations: usize,
    pub converged: bool,
}

fn check_len(h: &Hypergraph, x: &[f64]) -> Result<()> {
    if x.len() == h.vertex_count() {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected: h.vertex_count(), got: x.len() })
    }
}

/// `r!·Σ_e Π_{v ∈ e} x_v`.
pub fn polynomial_form(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    let sum: f64 = h.edges().iter().map(|e| e.iter().map(|&v| x[v]).product::<f64>()).sum();
    Ok(factorial(h.rank()) * sum)
}

/// `polynomial_form(x) / ‖x‖_r^r` for nonnegative nonzero `x`.
pub fn rayleigh(h: &Hypergraph, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    if x.iter().any(|&v| v < 0.0 || !v.is_finite()) || x.iter().all(|&v| v == 0.0) {
        return Err(Error::ZeroVector);
    }
    let r = h.rank() as i32;
    let norm: f64 = x.iter().map(|v| v.powi(r)).sum();
    Ok(polynomial_form(h, x)? / norm)
}

/// `y_v = (r-1)!·Σ_{e ∋ v} Π_{u ∈ e, u ≠ v} x_u`.
pub fn tensor_apply(h: &Hypergraph, x: &[f64]) -> Vec<f64> {
    let mut y = vec![0.0; h.vertex_count()];
    for e in h.edges() {
        for (i, &v) in e.iter().enumerate() {
            let p: f64 = e.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &u)| x[u]).product();
            y[v] += p;
        }
    }
    let scale = factorial(h.rank() - 1);
    y.iter_mut().for_each(|t| *t *= scale);
    y
}

fn normalise(x: &mut [f64], r: usize) {
    let norm = x.iter().map(|v| v.powi(r as i32)).sum::<f64>().powf(1.0 / r as f64);
    x.iter_mut().for_each(|v| *v /= norm);
}

/// Largest per-vertex violation of `(r-1)!·Σ Π x_u = ρ·x_v^(r-1)`.
pub fn eigen_residual(h: &Hypergraph, rho: f64, x: &[f64]) -> Result<f64> {
    check_len(h, x)?;
    let y = tensor_apply(h, x);
    let k = (h.rank() - 1) as i32;
    Ok(y.iter().zip(x).map(|(yv, xv)| (yv - rho * xv.powi(k)).abs()).fold(0.0, f64::max))
}

/// Shifted power iteration with min/max ratio bounds.
///
/// Each step computes `y = A x^(r-1)`, brackets ρ by the extreme values of
/// `y_v / x_v^(r-1)`, and moves to `(y + c·x^[r-1])^[1/(r-1)]` normalised.
pub fn power_method(h: &Hypergraph, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::BadTolerance(tol));
    }
    if h.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    h.require_connected()?;
    let r = h.rank();
    let k = (r - 1) as i32;
    let inv = 1.0 / (r - 1) as f64;
    let shift = SHIFT * factorial(r - 1);
    let mut x = vec![1.0; h.vertex_count()];
    normalise(&mut x, r);
    let mut best = (f64::NEG_INFINITY, f64::INFINITY);
    let mut iterations = 0;
    loop {
        let y = tensor_apply(h, &x);
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (yv, xv) in y.iter().zip(&x) {
            let q = yv / xv.powi(k);
            lo = lo.min(q);
            hi = hi.max(q);
        }
        best = (best.0.max(lo), best.1.min(hi));
        let converged = hi - lo <= tol;
        if converged || iterations >= max_iter {
            return Ok(SpectralResult {
                rho: 0.5 * (lo + hi),
                vector: x,
                lower_bound: if converged { lo } else { best.0 },
                upper_bound: if converged { hi } else { best.1 },
                iterations,
                converged,
            });
        }
        iterations += 1;
        for (xv, yv) in x.iter_mut().zip(&y) {
            *xv = (yv + shift * xv.powi(k)).powf(inv);
        }
        normalise(&mut x, r);
    }
}

/// `B(v, e) = (r-1)!·Π_{u ∈ e} x_u / (ρ·x_v^r)` with `α = ((r-1)!/ρ)^r`.
pub fn eigen_to_incidence(h: &Hypergraph, res: &SpectralResult) -> Result<(f64, WeightedIncidence<f64>)> {
    check_len(h, &res.vector)?;
    if let Some(v) = res.vector.iter().position(|&t| t.is_nan() || t <= 0.0) {
        return Err(Error::NonPositive(format!("vector entry {v} = {}", res.vector[v])));
    }
    if res.rho.is_nan() || res.rho <= 0.0 {
        return Err(Error::NonPositive(res.rho.to_string()));
    }
    let r = h.rank();
    let f = factorial(r - 1);
    let x = &res.vector;
    let mut b = WeightedIncidence::new(h);
    for (i, e) in h.edges().iter().enumerate() {
        let p: f64 = e.iter().map(|&u| x[u]).product();
        for &v in e {
            b.insert(v, i, f * p / (res.rho * x[v].powi(r as i32)));
        }
    }
    Ok(((f / res.rho).powi(r as i32), b))
}

/// Eigenvector carried by a hypertree certificate.
///
/// Along an edge, `x_u / x_v = (B(v, e) / B(u, e))^(1/r)`.
fn vector_from_tree_certificate(h: &Hypergraph, b: &WeightedIncidence<f64>) -> Vec<f64> {
    let r = h.rank();
    let inc = h.incidence_lists();
    let mut x = vec![0.0; h.vertex_count()];
    x[0] = 1.0;
    let mut stack = vec![0];
    let mut done = vec![false; h.edge_count()];
    while let Some(v) = stack.pop() {
        for &e in &inc[v] {
            if done[e] {
                continue;
            }
            done[e] = true;
            let bv = *b.get(v, e).expect("complete certificate");
            for &u in &h.edges()[e] {
                if u != v {
                    let bu = *b.get(u, e).expect("complete certificate");
                    x[u] = x[v] * (bv / bu).powf(1.0 / r as f64);
                    stack.push(u);
                }
            }
        }
    }
    normalise(&mut x, r);
    x
}

/// Hypertrees go through the exact-structure solver, everything else through [`power_method`].
pub fn spectral_radius(h: &Hypergraph, tol: f64) -> Result<SpectralResult> {
    if h.edge_count() > 0 && h.is_hypertree() {
        let sol = tree_alpha_solve(h, tol)?;
        let vector = vector_from_tree_certificate(h, &sol.certificate);
        return Ok(SpectralResult {
            rho: rho_from_alpha(h.rank(), sol.alpha)?,
            vector,
            lower_bound: sol.rho_lower,
            upper_bound: sol.rho_upper,
            iterations: sol.steps,
            converged: true,
        });
    }
    power_method(h, tol, DEFAULT_MAX_ITER)
}
