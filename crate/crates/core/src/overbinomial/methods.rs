use std::collections::HashMap;

use num_bigint::BigInt;

use crate::algebra::{gaussian, q_factorial, MPoly, Monomial, RationalMPoly};
use crate::combinatorics::{enumerate_delannoy_paths, enumerate_overpartitions, path_stats};
use crate::error::{Error, Result};

fn tally(counts: HashMap<(u32, i64), u64>) -> MPoly {
    MPoly::from_terms(
        counts
            .into_iter()
            .map(|((t, q), c)| (Monomial::new(q, t, 0), BigInt::from(c))),
    )
}

/// Direct count of overpartitions in the `m x n` box.
pub fn by_enumeration(m: usize, n: usize) -> MPoly {
    let mut counts: HashMap<(u32, i64), u64> = HashMap::new();
    for x in enumerate_overpartitions(m as u32, n) {
        *counts
            .entry((x.overline_count() as u32, x.weight() as i64))
            .or_default() += 1;
    }
    tally(counts)
}

/// `sum_p t^{d(p)} q^{wt(p)}` over Delannoy paths to `(m, n)`.
pub fn by_paths(m: usize, n: usize) -> MPoly {
    let mut counts: HashMap<(u32, i64), u64> = HashMap::new();
    for p in enumerate_delannoy_paths(m, n) {
        let (d, wt) = path_stats(&p);
        *counts.entry((d as u32, wt as i64)).or_default() += 1;
    }
    tally(counts)
}

/// `sum_k t^k q^{k(k+1)/2} (q)_{m+n-k} / ((q)_k (q)_{m-k} (q)_{n-k})`,
/// each quotient taken by exact division.
pub fn by_formula(m: usize, n: usize) -> Result<MPoly> {
    let mut acc = MPoly::zero();
    for k in 0..=m.min(n) {
        let den = q_factorial(k) * q_factorial(m - k) * q_factorial(n - k);
        let quot = q_factorial(m + n - k).div_exact(&den)?;
        acc += &quot.shift((k * (k + 1) / 2) as i64, k as u32, 0);
    }
    Ok(acc)
}

/// Table fill for `B(m,n) = B(m,n-1) + q^n B(m-1,n) + t q^n B(m-1,n-1)`.
pub fn by_pascal1(m: usize, n: usize) -> MPoly {
    let mut grid: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(); n + 1]; m + 1];
    for i in 0..=m {
        for j in 0..=n {
            grid[i][j] = if i == 0 || j == 0 {
                MPoly::one()
            } else {
                let e = j as i64;
                &grid[i][j - 1] + &grid[i - 1][j].shift(e, 0, 0) + grid[i - 1][j - 1].shift(e, 1, 0)
            };
        }
    }
    grid[m][n].clone()
}

/// Table fill for `B(m,n) = B(m-1,n) + q^m B(m,n-1) + t q^m B(m-1,n-1)`.
pub fn by_pascal2(m: usize, n: usize) -> MPoly {
    let mut grid: Vec<Vec<MPoly>> = vec![vec![MPoly::zero(); n + 1]; m + 1];
    for i in 0..=m {
        for j in 0..=n {
            grid[i][j] = if i == 0 || j == 0 {
                MPoly::one()
            } else {
                let e = i as i64;
                &grid[i - 1][j] + &grid[i][j - 1].shift(e, 0, 0) + grid[i - 1][j - 1].shift(e, 1, 0)
            };
        }
    }
    grid[m][n].clone()
}

/// `sum_k q^{k(k+1)/2} prod_{j<k} (t + q^j) [m,k]_q [n,k]_q`.
pub fn by_hyper(m: usize, n: usize) -> MPoly {
    let mut acc = MPoly::zero();
    let mut prod = MPoly::one();
    for k in 0..=m.min(n) {
        if k > 0 {
            prod = &prod * &(MPoly::t() + MPoly::q_pow(k as i64 - 1));
        }
        let k_i = k as i64;
        let term = (&prod * &gaussian(m as i64, k_i)) * gaussian(n as i64, k_i);
        acc += &term.shift(k_i * (k_i + 1) / 2, 0, 0);
    }
    acc
}

/// `(q^{shift}; q)_k` with a possibly negative `shift`.
fn laurent_poch(shift: i64, k: usize) -> MPoly {
    (0..k)
        .map(|j| MPoly::one() - MPoly::laurent_monomial(1, shift + j as i64, 0, 0))
        .product()
}

/// The terminating series
/// `2phi1(q^{-n}, q^{-m}; q^{-n-m}; q, -tq) = sum_k (q^{-n})_k (q^{-m})_k (-tq)^k / ((q)_k (q^{-n-m})_k)`
/// as one fraction over `(q)_K (q^{-n-m})_K`, `K = min(m,n)`.
pub fn phi21_series(m: usize, n: usize) -> RationalMPoly {
    let kmax = m.min(n);
    let nm = -((m + n) as i64);
    let den = q_factorial(kmax) * laurent_poch(nm, kmax);
    let mut num = MPoly::zero();
    for k in 0..=kmax {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let top = laurent_poch(-(n as i64), k) * laurent_poch(-(m as i64), k);
        let power = MPoly::monomial(sign, k as i64, k as u32, 0);
        // completes (q)_k (q^{-n-m})_k to the common denominator
        let fill_q: MPoly = (k..kmax)
            .map(|j| MPoly::one() - MPoly::q_pow(j as i64 + 1))
            .product();
        let fill_l: MPoly = (k..kmax)
            .map(|j| MPoly::one() - MPoly::laurent_monomial(1, nm + j as i64, 0, 0))
            .product();
        num += &(top * power * fill_q * fill_l);
    }
    RationalMPoly::new(num, den).expect("nonzero denominator")
}

/// `[m+n, n]_q * 2phi1(...)`, reduced by exact division.
pub fn by_phi21(m: usize, n: usize) -> Result<MPoly> {
    let series = phi21_series(m, n);
    let scaled = series.num() * &gaussian((m + n) as i64, n as i64);
    let value = scaled
        .div_exact(series.den())
        .map_err(|_| Error::IdentityViolation { m, n })?;
    if value.is_laurent() {
        return Err(Error::IdentityViolation { m, n });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b11() -> MPoly {
        "1 + q + t*q".parse().unwrap()
    }

    #[test]
    fn every_route_on_unit_box() {
        assert_eq!(by_enumeration(1, 1), b11());
        assert_eq!(by_paths(1, 1), b11());
        assert_eq!(by_formula(1, 1).unwrap(), b11());
        assert_eq!(by_pascal1(1, 1), b11());
        assert_eq!(by_pascal2(1, 1), b11());
        assert_eq!(by_hyper(1, 1), b11());
        assert_eq!(by_phi21(1, 1).unwrap(), b11());
    }

    #[test]
    fn empty_boxes_are_one() {
        for k in 0..5 {
            assert_eq!(by_pascal1(k, 0), MPoly::one());
            assert_eq!(by_pascal1(0, k), MPoly::one());
            assert_eq!(by_phi21(k, 0).unwrap(), MPoly::one());
            assert_eq!(by_hyper(0, k), MPoly::one());
            assert_eq!(by_enumeration(k, 0), MPoly::one());
        }
    }

    #[test]
    fn routes_agree_on_small_grid() {
        for m in 0..=4 {
            for n in 0..=4 {
                let base = by_pascal1(m, n);
                assert_eq!(by_pascal2(m, n), base, "pascal2 {m} {n}");
                assert_eq!(by_formula(m, n).unwrap(), base, "formula {m} {n}");
                assert_eq!(by_hyper(m, n), base, "hyper {m} {n}");
                assert_eq!(by_enumeration(m, n), base, "enumerate {m} {n}");
                assert_eq!(by_paths(m, n), base, "paths {m} {n}");
                assert_eq!(by_phi21(m, n).unwrap(), base, "phi21 {m} {n}");
            }
        }
    }
}
