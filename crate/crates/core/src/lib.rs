//! Exact arithmetic for over-(q,t)-binomial coefficients: the generating
//! polynomials of overpartitions fitting in an `m x n` box, counted by weight
//! (`q`) and number of overlined parts (`t`).
//!
//! The crate computes these polynomials by several independent routes, runs
//! the sign-reversing involution and log-concavity injection on
//! overpartitions as executable bijections, and checks a family of finite
//! q-series identities and unimodality statements exactly.

pub mod algebra;
pub mod combinatorics;
pub mod conjectures;
pub mod error;
pub mod identities;
pub mod involutions;
pub mod overbinomial;

pub use algebra::{gaussian, rat_eq, Assignment, MPoly, Monomial, RationalMPoly, USeries};
pub use combinatorics::{DelannoyPath, Overpartition, Part};
pub use error::{Error, Result};
pub use overbinomial::{ob_compute, over_binomial, Method, OverBinomTable};
