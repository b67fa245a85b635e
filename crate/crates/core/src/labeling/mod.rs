//! Weighted incidence certificates and the hypertree solver.

mod incidence;
pub mod io;
mod scalar;
mod tree;

pub(crate) use incidence::factorial;
pub use incidence::{
    alpha_from_rho, check_certificate, check_consistent, check_normal, check_subnormal, check_supernormal,
    rho_from_alpha, NormalcyKind, NormalcyReport, Relation, WeightedIncidence,
};
pub use scalar::{format_rational, parse_rational, ratio, Rational, Scalar, F64_MARGIN};
pub use tree::{default_root, lift_contraction, tree_alpha_solve, tree_propagate, Propagation, Root, TreeSolution};
