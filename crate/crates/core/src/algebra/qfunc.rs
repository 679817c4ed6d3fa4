//! q-Pochhammer products, Gaussian polynomials and q-multinomials.

use std::cell::RefCell;

use super::MPoly;
use crate::error::Result;

/// Which sign the Pochhammer factors carry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochSign {
    /// `(a; q)_k = prod (1 - a q^j)`
    Minus,
    /// `(-a; q)_k = prod (1 + a q^j)`
    Plus,
}

/// `prod_{j=0}^{k-1} (1 -/+ a q^j)`; `a` is normally a single term.
pub fn pochhammer(a: &MPoly, k: usize, sign: PochSign) -> MPoly {
    let mut acc = MPoly::one();
    for j in 0..k {
        let shifted = a.shift(j as i64, 0, 0);
        let factor = match sign {
            PochSign::Minus => &MPoly::one() - &shifted,
            PochSign::Plus => &MPoly::one() + &shifted,
        };
        acc = &acc * &factor;
    }
    acc
}

/// `(q; q)_n`.
pub fn q_factorial(n: usize) -> MPoly {
    pochhammer(&MPoly::q(), n, PochSign::Minus)
}

thread_local! {
    static GAUSSIAN_ROWS: RefCell<Vec<Vec<MPoly>>> = RefCell::new(vec![vec![MPoly::one()]]);
}

/// Gaussian polynomial `[top, bottom]_q`, zero outside `0 <= bottom <= top`.
///
/// Filled by the q-Pascal rule `[n,k] = [n-1,k-1] + q^k [n-1,k]` and memoized
/// per thread.
pub fn gaussian(top: i64, bottom: i64) -> MPoly {
    if bottom < 0 || top < 0 || bottom > top {
        return MPoly::zero();
    }
    let (n, k) = (top as usize, bottom as usize);
    GAUSSIAN_ROWS.with(|rows| {
        let mut rows = rows.borrow_mut();
        while rows.len() <= n {
            let prev = rows.last().unwrap();
            let len = prev.len();
            let mut next = Vec::with_capacity(len + 1);
            next.push(MPoly::one());
            for j in 1..len {
                next.push(&prev[j - 1] + &prev[j].shift(j as i64, 0, 0));
            }
            next.push(MPoly::one());
            rows.push(next);
        }
        rows[n][k].clone()
    })
}

/// Gaussian polynomial by exact division of q-factorials; cross-check path.
pub fn gaussian_by_division(top: i64, bottom: i64) -> Result<MPoly> {
    if bottom < 0 || top < 0 || bottom > top {
        return Ok(MPoly::zero());
    }
    let (n, k) = (top as usize, bottom as usize);
    q_factorial(n).div_exact(&(q_factorial(k) * q_factorial(n - k)))
}

/// `(q)_{a+b+c} / ((q)_a (q)_b (q)_c)` as a product of two Gaussians.
pub fn qmultinomial(a: usize, b: usize, c: usize) -> MPoly {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    gaussian(a + b + c, a) * gaussian(b + c, b)
}

/// q-multinomial by exact division; cross-check path.
pub fn qmultinomial_by_division(a: usize, b: usize, c: usize) -> Result<MPoly> {
    q_factorial(a + b + c).div_exact(&(q_factorial(a) * q_factorial(b) * q_factorial(c)))
}
