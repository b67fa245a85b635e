use hypersmith::families::gen_dtilde;
use hypersmith::hypergraph::{CanonOptions, Hypergraph};
use hypersmith::labeling::{check_normal, lift_contraction, ratio, tree_propagate, Propagation, Rational, Root};
use hypersmith::spectral::{power_method, rayleigh, spectral_radius};
use proptest::prelude::*;

/// Grows a connected hypergraph: each step attaches a new edge at one
/// existing vertex, or at two when `close` is set.
fn grow(r: usize, steps: &[(usize, usize, bool)]) -> Hypergraph {
    let mut n = r;
    let mut edges = vec![(0..r).collect::<Vec<_>>()];
    for &(a, b, close) in steps {
        let a = a % n;
        let mut e = vec![a];
        let b = b % n;
        if close && b != a {
            e.push(b);
        }
        while e.len() < r {
            e.push(n);
            n += 1;
        }
        edges.push(e);
    }
    Hypergraph::new_multi(r, n, edges).unwrap()
}

fn hypergraph(max_edges: usize, cycles: bool) -> impl Strategy<Value = Hypergraph> {
    (2usize..=4, prop::collection::vec((0usize..64, 0usize..64, any::<bool>()), 0..max_edges)).prop_map(
        move |(r, steps)| {
            let steps: Vec<_> = steps.into_iter().map(|(a, b, c)| (a, b, c && cycles)).collect();
            grow(r, &steps)
        },
    )
}

fn shuffled(h: &Hypergraph, keys: &[u64]) -> Hypergraph {
    let n = h.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (keys[i % keys.len()].wrapping_mul(i as u64 + 1), i));
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let g = h.relabel(&perm).unwrap();
    let mut edge_order: Vec<usize> = (0..g.edge_count()).collect();
    edge_order.reverse();
    g.permute_edges(&edge_order).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_labels(h in hypergraph(9, true), keys in prop::collection::vec(any::<u64>(), 1..8), seed in any::<u64>()) {
        let g = shuffled(&h, &keys);
        let opts = CanonOptions { seed: Some(seed), ..CanonOptions::unbounded() };
        prop_assert_eq!(h.canonical_form().unwrap(), g.canonical_form_with(opts).unwrap());
        prop_assert!(h.is_isomorphic(&g));
    }

    #[test]
    fn reduce_undoes_extend(h in hypergraph(9, true)) {
        let back = h.extend().reduce().unwrap();
        prop_assert!(back.is_isomorphic(&h));
        prop_assert_eq!(back.rank(), h.rank());
    }

    #[test]
    fn cycle_basis_size(h in hypergraph(9, true)) {
        // Incidence graph: n + m nodes, r·m arcs, one component.
        let expected = h.rank() * h.edge_count() + 1 - h.vertex_count() - h.edge_count();
        let basis = h.cycle_basis().unwrap();
        prop_assert_eq!(basis.len(), expected);
        prop_assert_eq!(h.cyclomatic_number(), expected);
        for c in &basis {
            prop_assert!(c.is_cycle_in(&h));
        }
    }

    #[test]
    fn rayleigh_never_exceeds_rho(h in hypergraph(7, true), xs in prop::collection::vec(0.01f64..1.0, 40)) {
        let res = power_method(&h, 1e-10, 1_000_000).unwrap();
        let x: Vec<f64> = (0..h.vertex_count()).map(|i| xs[i % xs.len()]).collect();
        prop_assert!(rayleigh(&h, &x).unwrap() <= res.upper_bound + 1e-9);
        prop_assert!(rayleigh(&h, &res.vector).unwrap() >= res.lower_bound - 1e-9);
    }

    #[test]
    fn rayleigh_is_scale_invariant(h in hypergraph(7, true), xs in prop::collection::vec(0.01f64..1.0, 40), c in 0.01f64..100.0) {
        let x: Vec<f64> = (0..h.vertex_count()).map(|i| xs[i % xs.len()]).collect();
        let y: Vec<f64> = x.iter().map(|v| v * c).collect();
        let (a, b) = (rayleigh(&h, &x).unwrap(), rayleigh(&h, &y).unwrap());
        prop_assert!((a - b).abs() <= 1e-9 * a.abs().max(1.0));
    }

    #[test]
    fn residual_grows_with_alpha(h in hypergraph(8, false), a in 1u32..200, d in 1u32..200) {
        let lo = ratio(a as i64, 800);
        let hi = ratio((a + d) as i64, 800);
        let root = Root::Vertex(0);
        let r_lo = tree_propagate::<Rational>(&h, root, &lo).unwrap();
        let r_hi = tree_propagate::<Rational>(&h, root, &hi).unwrap();
        match (r_lo, r_hi) {
            (Propagation::Residual { residual: x, .. }, Propagation::Residual { residual: y, .. }) => prop_assert!(x < y),
            (Propagation::Failure { .. }, hi) => {
                let failed = matches!(hi, Propagation::Failure { .. });
                prop_assert!(failed);
            }
            (Propagation::Residual { .. }, Propagation::Failure { .. }) => {}
        }
    }

    #[test]
    fn tree_solver_matches_power_iteration(h in hypergraph(6, false)) {
        let tree = spectral_radius(&h, 1e-11).unwrap();
        let power = power_method(&h, 1e-11, 1_000_000).unwrap();
        prop_assert!((tree.rho - power.rho).abs() < 1e-7, "{} vs {}", tree.rho, power.rho);
    }
}

#[test]
fn lifted_certificate_stays_normal() {
    let quarter = ratio(1, 4);
    for r in [2, 3, 4] {
        for n in 6..=9 {
            let h = gen_dtilde(r, n).unwrap();
            for e in h.two_bridges().unwrap() {
                let c = h.contract(e).unwrap();
                let root = Root::Vertex(0);
                let Propagation::Residual { residual, certificate } =
                    tree_propagate::<Rational>(&c.hypergraph, root, &quarter).unwrap()
                else {
                    panic!("contracted graph fails at 1/4");
                };
                assert_eq!(residual, ratio(0, 1));
                let lifted = lift_contraction(&h, e, &c, &certificate).unwrap();
                assert!(check_normal(&h, &lifted, &quarter).unwrap().is_normal(), "r={r} n={n} e={e}");
            }
        }
    }
}
