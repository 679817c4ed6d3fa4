//! Exact polynomial, rational-function and truncated-series arithmetic.

mod mpoly;
mod qfunc;
mod rational;
mod series;

pub use mpoly::{Assignment, MPoly, Monomial};
pub use qfunc::{
    gaussian, gaussian_by_division, pochhammer, q_factorial, qmultinomial,
    qmultinomial_by_division, PochSign,
};
pub use rational::{rat_eq, RationalMPoly};
pub use series::USeries;
