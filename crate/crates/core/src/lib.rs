//! Spectral radius and the `ρ_r = (r-1)!·4^(1/r)` classification of connected
//! r-uniform hypergraphs.
//!
//! The crate is organised around a small number of modules:
//!
//! * [`hypergraph`] – the r-uniform multi-hypergraph type and the structural
//!   operators used by the classification (cycles, 2-bridges, contraction,
//!   reduction/extension, canonical forms, text/JSON formats).
//! * [`spectral`] – numerical spectral radius via nonnegative tensor power
//!   iteration with Collatz–Wielandt bracketing.
//! * [`labeling`] – weighted incidence certificates (α-normal, subnormal,
//!   supernormal), exact rational verification and the hypertree solver.
//! * [`families`] – generators for every named family.
//! * [`classifier`] – the structural decision procedure returning
//!   `Below`/`Equal`/`Above` relative to `ρ_r`.
//! * [`atlas`] – the classification tables and the shipped certificate
//!   fixtures.
//! * [`cli`] – the `hypersmith` command line.

pub mod atlas;
pub mod classifier;
pub mod cli;
mod error;
pub mod families;
pub mod hypergraph;
pub mod labeling;
pub mod spectral;

pub use classifier::{classify, recognize_family, rho_r, Classification, Verdict};
pub use error::{Error, Result};
pub use families::FamilyId;
pub use hypergraph::Hypergraph;
pub use labeling::{NormalcyKind, NormalcyReport, Rational, WeightedIncidence};
pub use spectral::{spectral_radius, SpectralResult};
