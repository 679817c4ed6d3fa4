use std::fmt;

use super::MPoly;
use crate::error::{Error, Result};

/// Power series in `u` truncated after `u^order`, with coefficients in `(q, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    coeffs: Vec<MPoly>,
}

impl USeries {
    pub fn zero(order: usize) -> Self {
        USeries {
            coeffs: vec![MPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = USeries::zero(order);
        s.coeffs[0] = MPoly::one();
        s
    }

    /// Splits a polynomial by powers of `u`, dropping everything past `u^order`.
    pub fn from_poly(p: &MPoly, order: usize) -> Self {
        let coeffs = (0..=order).map(|j| p.u_coeff(j as u32)).collect();
        USeries { coeffs }
    }

    /// Coefficients `c_0 .. c_order`; missing entries are zero.
    pub fn from_coeffs(mut coeffs: Vec<MPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, MPoly::zero());
        USeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &MPoly {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[MPoly] {
        &self.coeffs
    }

    /// Reassembles the truncated polynomial in `q, t, u`.
    pub fn to_poly(&self) -> MPoly {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c.shift(0, 0, j as u32))
            .sum()
    }

    fn check_order(&self, other: &USeries) {
        assert_eq!(
            self.order(),
            other.order(),
            "series truncation orders differ"
        );
    }

    pub fn add(&self, other: &USeries) -> USeries {
        self.check_order(other);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &USeries) -> USeries {
        self.check_order(other);
        USeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &USeries) -> USeries {
        self.check_order(other);
        let k = self.order();
        let mut out = USeries::zero(k);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=k - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    /// Multiplicative inverse modulo `u^(order+1)`; needs constant term 1.
    pub fn invert(&self) -> Result<USeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitSeries);
        }
        let k = self.order();
        let mut inv = USeries::zero(k);
        inv.coeffs[0] = MPoly::one();
        for n in 1..=k {
            let mut acc = MPoly::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() && !inv.coeffs[n - i].is_zero() {
                    acc += &(&self.coeffs[i] * &inv.coeffs[n - i]);
                }
            }
            inv.coeffs[n] = -acc;
        }
        Ok(inv)
    }
}

impl fmt::Display for USeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(u^{})", self.to_poly(), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn geometric_inverse() {
        let s = USeries::from_poly(&p("1 - u*q"), 2);
        assert_eq!(s.invert().unwrap().to_poly(), p("1 + q*u + q^2*u^2"));
    }

    #[test]
    fn inverse_times_series_is_one() {
        let s = USeries::from_poly(&p("1 + t*q*u - 3*q^2*u^2 + u^3"), 5);
        let inv = s.invert().unwrap();
        assert_eq!(inv.mul(&s), USeries::one(5));
        assert_eq!(s.mul(&inv), USeries::one(5));
    }

    #[test]
    fn non_unit_rejected() {
        let s = USeries::from_poly(&p("2 - u"), 3);
        assert_eq!(s.invert().unwrap_err(), Error::NonUnitSeries);
        let s = USeries::from_poly(&p("1 + q - u"), 3);
        assert_eq!(s.invert().unwrap_err(), Error::NonUnitSeries);
    }

    #[test]
    fn two_part_coefficient() {
        // brute-force oracle: expand both geometric series to u^2 and collect
        let mut oracle = MPoly::zero();
        for a in 0..=2i64 {
            for b in 0..=2i64 {
                if a + b == 2 {
                    oracle += &MPoly::q_pow(a + 2 * b);
                }
            }
        }
        let k = 2;
        let d = USeries::from_poly(&(p("1 - u*q") * p("1 - u*q^2")), k);
        let inv = d.invert().unwrap();
        assert_eq!(inv.coeff(2), &oracle);
        assert_eq!(inv.coeff(2), &p("q^2 + q^3 + q^4"));
    }
}
