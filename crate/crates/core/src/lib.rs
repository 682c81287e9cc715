//! Exact and numerical toolkit for the triangle of sorted binomial
//! coefficients `⟨n k⟩ = C(n, ⌊(n−k)/2⌋)` (the *Pascalian numbers*), the
//! polynomials built from its rows, their complex roots, and the limit curve
//! those roots accumulate on.
//!
//! The crate is organised by subject:
//!
//! * [`combinatorics`] — Pascalian numbers, two-row standard domino tableaux,
//!   rightward diagonal lattice walks, and the statistic-preserving bijection
//!   between them.
//! * [`polynomials`] — exact big-integer polynomial arithmetic, the
//!   `P_n` / `R_n` / `q_n` / `U_{2m}` constructors, and exact verification of
//!   every recursion and identity they satisfy.
//! * [`series`] — truncated bivariate power series used to verify the
//!   generating functions of `P_n` and `R_n` coefficient by coefficient.
//! * [`roots`] — an Aberth–Ehrlich simultaneous root solver plus
//!   classification, annulus, and Vieta reports.
//! * [`curve`] — the `K_n` thresholds, the root-free regions `Γ_n`, the limit
//!   curve `∂Γ`, the approximants `z_m`, and convergence metrics from root
//!   sets to the curve.
//! * [`algebra`] — the odd-index factorization `(1+z)·q_n(z²)`, square
//!   criteria, and mod-p irreducibility certificates.
//!
//! All exact computation uses arbitrary-precision integers; all numerical
//! computation is double precision with pinned tolerances. With the default
//! `parallel` feature the batch drivers fan out over rayon; built with
//! `--no-default-features` the same entry points run sequentially and produce
//! identical output.

pub mod algebra;
pub mod combinatorics;
pub mod curve;
pub mod error;
mod exec;
pub mod polynomials;
pub mod roots;
pub mod series;

pub use error::{Error, Result};

/// Crate version, surfaced for provenance blocks in machine-readable output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
