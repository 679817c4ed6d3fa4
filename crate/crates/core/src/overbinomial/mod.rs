//! Over-(q,t)-binomial coefficients `B(m,n)`: the generating polynomial
//! `sum t^k q^N` over overpartitions of `N` with `k` overlined parts whose
//! largest part is at most `m` and which have at most `n` parts.
//!
//! [`Method::Pascal1`] is the production route; every other method is an
//! independent cross-check.

mod methods;
mod table;

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{qmultinomial, MPoly, Monomial};
use crate::error::{Error, Result};

pub use methods::{
    by_enumeration, by_formula, by_hyper, by_pascal1, by_pascal2, by_paths, by_phi21, phi21_series,
};
pub use table::{coefficient_table, CoefficientTable, TableRow};

/// Default ceiling on `m * n` for the brute-force routes.
pub const DEFAULT_ENUM_LIMIT: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Enumerate,
    Formula,
    Pascal1,
    Pascal2,
    Paths,
    Hyper,
    Phi21,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Enumerate,
        Method::Formula,
        Method::Pascal1,
        Method::Pascal2,
        Method::Paths,
        Method::Hyper,
        Method::Phi21,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Enumerate => "enumerate",
            Method::Formula => "formula",
            Method::Pascal1 => "pascal1",
            Method::Pascal2 => "pascal2",
            Method::Paths => "paths",
            Method::Hyper => "hyper",
            Method::Phi21 => "phi21",
        }
    }

    /// Brute-force methods are subject to the `m * n` guard.
    pub fn is_exhaustive(self) -> bool {
        matches!(self, Method::Enumerate | Method::Paths)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Method> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// `B(m, n)` by the chosen method, with the default brute-force guard.
pub fn ob_compute(m: usize, n: usize, method: Method) -> Result<MPoly> {
    ob_compute_with_limit(m, n, method, DEFAULT_ENUM_LIMIT)
}

pub fn ob_compute_with_limit(m: usize, n: usize, method: Method, limit: usize) -> Result<MPoly> {
    if method.is_exhaustive() && m * n > limit {
        return Err(Error::MethodTooExpensive {
            method: method.name(),
            m,
            n,
            limit,
        });
    }
    match method {
        Method::Enumerate => Ok(by_enumeration(m, n)),
        Method::Formula => by_formula(m, n),
        Method::Pascal1 => Ok(over_binomial(m as i64, n as i64)),
        Method::Pascal2 => Ok(by_pascal2(m, n)),
        Method::Paths => Ok(by_paths(m, n)),
        Method::Hyper => Ok(by_hyper(m, n)),
        Method::Phi21 => by_phi21(m, n),
    }
}

/// Memoized `B(m, n)` filled by the first Pascal rule.
///
/// Entries are written once and never change; any negative coordinate
/// reads as zero.
#[derive(Debug, Default)]
pub struct OverBinomTable {
    memo: HashMap<(usize, usize), MPoly>,
}

impl OverBinomTable {
    pub fn new() -> Self {
        OverBinomTable::default()
    }

    pub fn get(&mut self, m: i64, n: i64) -> MPoly {
        if m < 0 || n < 0 {
            return MPoly::zero();
        }
        self.fill(m as usize, n as usize);
        self.memo[&(m as usize, n as usize)].clone()
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    fn fill(&mut self, m: usize, n: usize) {
        if self.memo.contains_key(&(m, n)) {
            return;
        }
        for i in 0..=m {
            for j in 0..=n {
                if self.memo.contains_key(&(i, j)) {
                    continue;
                }
                let value = if i == 0 || j == 0 {
                    MPoly::one()
                } else {
                    let e = j as i64;
                    &self.memo[&(i, j - 1)]
                        + &self.memo[&(i - 1, j)].shift(e, 0, 0)
                        + self.memo[&(i - 1, j - 1)].shift(e, 1, 0)
                };
                self.memo.insert((i, j), value);
            }
        }
    }
}

thread_local! {
    static TABLE: RefCell<OverBinomTable> = RefCell::new(OverBinomTable::new());
}

/// `B(m, n)` from the calling thread's table; zero for negative arguments.
pub fn over_binomial(m: i64, n: i64) -> MPoly {
    TABLE.with(|t| t.borrow_mut().get(m, n))
}

/// Bracket notation with top `top` and bottom `bottom`, i.e. `B(top - bottom, bottom)`.
pub fn over_bracket(top: i64, bottom: i64) -> MPoly {
    over_binomial(top - bottom, bottom)
}

/// Coefficient of `t^k q^N` in `B(m, n)`.
pub fn ob_coefficient(m: usize, n: usize, k: u32, weight: i64) -> BigInt {
    over_binomial(m as i64, n as i64).coeff_tq(k, weight)
}

/// `D(m,n)` from `D(m,n) = D(m-1,n) + D(m,n-1) + D(m-1,n-1)`.
pub fn delannoy_number(m: usize, n: usize) -> BigInt {
    let mut row: Vec<BigInt> = vec![BigInt::from(1); n + 1];
    for _ in 1..=m {
        let mut next = vec![BigInt::from(1); n + 1];
        for j in 1..=n {
            next[j] = &row[j] + &next[j - 1] + &row[j - 1];
        }
        row = next;
    }
    row[n].clone()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Sagan's q-Delannoy number: lattice paths to `(m, n)` with `q` counting
/// diagonal steps. Counted directly, not through `B(m, n)`.
pub fn sagan_q_delannoy(m: usize, n: usize) -> MPoly {
    MPoly::from_terms((0..=m.min(n)).map(|k| {
        let paths = factorial(m + n - k) / (factorial(k) * factorial(m - k) * factorial(n - k));
        (Monomial::new(k as i64, 0, 0), paths)
    }))
}

/// `sum_k t^k q^{k(k+1)/2} [m+n-k; k, m-k, n-k]_q`.
pub fn trinomial_form(m: usize, n: usize) -> MPoly {
    (0..=m.min(n))
        .map(|k| qmultinomial(k, m - k, n - k).shift((k * (k + 1) / 2) as i64, k as u32, 0))
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheckReport {
    pub max_m: usize,
    pub max_n: usize,
    pub cells: usize,
    pub pass: bool,
    pub witness: Option<String>,
}

/// Checks every method, the symmetry, the trinomial form and the Delannoy
/// specialization on the grid `0..=max_m x 0..=max_n`.
pub fn cross_check(max_m: usize, max_n: usize) -> CrossCheckReport {
    cross_check_with_limit(max_m, max_n, DEFAULT_ENUM_LIMIT)
}

pub fn cross_check_with_limit(max_m: usize, max_n: usize, limit: usize) -> CrossCheckReport {
    let cells: Vec<(usize, usize)> = (0..=max_m)
        .flat_map(|m| (0..=max_n).map(move |n| (m, n)))
        .collect();
    let failures: Vec<Option<String>> = cells
        .par_iter()
        .map(|&(m, n)| check_cell(m, n, limit).err())
        .collect();
    let witness = failures.into_iter().flatten().next();
    CrossCheckReport {
        max_m,
        max_n,
        cells: cells.len(),
        pass: witness.is_none(),
        witness,
    }
}

fn check_cell(m: usize, n: usize, limit: usize) -> Result<(), String> {
    let base = over_binomial(m as i64, n as i64);
    for method in Method::ALL {
        if method.is_exhaustive() && m * n > limit {
            continue;
        }
        let value = ob_compute_with_limit(m, n, method, limit)
            .map_err(|e| format!("({m},{n}) {method}: {e}"))?;
        if value != base {
            return Err(format!("({m},{n}) {method} disagrees with pascal1"));
        }
    }
    if over_binomial(n as i64, m as i64) != base {
        return Err(format!("({m},{n}) symmetry B(m,n) = B(n,m) fails"));
    }
    if trinomial_form(m, n) != base {
        return Err(format!("({m},{n}) q-multinomial form disagrees"));
    }
    let at_one = base.eval(1, 1, 0).map_err(|e| e.to_string())?;
    if at_one != delannoy_number(m, n) {
        return Err(format!("({m},{n}) B at q=t=1 is {at_one}, not D(m,n)"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Assignment;

    #[test]
    fn unit_box() {
        assert_eq!(over_binomial(1, 1), "1 + q + t*q".parse().unwrap());
        assert_eq!(over_binomial(-1, 3), MPoly::zero());
        assert_eq!(over_binomial(5, 0), MPoly::one());
    }

    #[test]
    fn table_one_entries() {
        let b = over_binomial(4, 4);
        assert_eq!(b.coeff_tq(0, 4), BigInt::from(5));
        assert_eq!(b.coeff_tq(1, 4), BigInt::from(7));
        assert_eq!(b.coeff_tq(2, 4), BigInt::from(2));
        assert_eq!(ob_coefficient(4, 4, 1, 9), BigInt::from(17));
        assert_eq!(ob_coefficient(4, 4, 4, 10), BigInt::from(1));
        assert_eq!(ob_coefficient(4, 4, 0, 16), BigInt::from(1));
        assert_eq!(ob_coefficient(4, 4, 1, 16), BigInt::from(1));
        assert_eq!(ob_coefficient(4, 4, 2, 16), BigInt::from(0));
        assert_eq!(ob_coefficient(4, 4, 0, 99), BigInt::from(0));
    }

    #[test]
    fn delannoy_values() {
        assert_eq!(delannoy_number(2, 2), BigInt::from(13));
        assert_eq!(delannoy_number(4, 4), BigInt::from(321));
        assert_eq!(delannoy_number(0, 7), BigInt::from(1));
        assert_eq!(delannoy_number(2, 1), BigInt::from(5));
        assert_eq!(delannoy_number(2, 3), BigInt::from(25));
    }

    #[test]
    fn sagan_small() {
        // paths to (1,1): two without a diagonal, one with
        assert_eq!(sagan_q_delannoy(1, 1), "2 + q".parse().unwrap());
    }

    #[test]
    fn sagan_matches_specialization() {
        for m in 0..=5 {
            for n in 0..=5 {
                let b = over_binomial(m as i64, n as i64)
                    .specialize(&Assignment::new().q(1))
                    .unwrap()
                    .exchange_q_t();
                assert_eq!(sagan_q_delannoy(m, n), b);
            }
        }
    }

    #[test]
    fn guard_trips() {
        let err = ob_compute(11, 10, Method::Enumerate).unwrap_err();
        assert!(matches!(err, Error::MethodTooExpensive { .. }));
        assert!(ob_compute(11, 10, Method::Pascal1).is_ok());
    }

    #[test]
    fn small_cross_checks() {
        let r = cross_check(0, 0);
        assert!(r.pass && r.cells == 1);
        assert!(cross_check(1, 1).pass);
        for method in Method::ALL {
            assert_eq!(
                ob_compute(1, 1, method).unwrap(),
                "1 + q + t*q".parse().unwrap()
            );
        }
    }

    #[test]
    fn method_names_roundtrip() {
        for method in Method::ALL {
            assert_eq!(method.name().parse::<Method>().unwrap(), method);
        }
        assert!("nope".parse::<Method>().is_err());
    }
}
