use std::fmt;

use super::MPoly;
use crate::error::{Error, Result};

/// Unreduced quotient of two polynomials. Equality is by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalMPoly {
    num: MPoly,
    den: MPoly,
}

impl RationalMPoly {
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RationalMPoly { num, den })
    }

    pub fn from_poly(num: MPoly) -> Self {
        RationalMPoly {
            num,
            den: MPoly::one(),
        }
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn mul(&self, other: &RationalMPoly) -> RationalMPoly {
        RationalMPoly {
            num: &self.num * &other.num,
            den: &self.den * &other.den,
        }
    }

    pub fn mul_poly(&self, p: &MPoly) -> RationalMPoly {
        RationalMPoly {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    /// Sum; equal denominators are kept as they are.
    pub fn add(&self, other: &RationalMPoly) -> RationalMPoly {
        if self.den == other.den {
            return RationalMPoly {
                num: &self.num + &other.num,
                den: self.den.clone(),
            };
        }
        RationalMPoly {
            num: &self.num * &other.den + &other.num * &self.den,
            den: &self.den * &other.den,
        }
    }

    /// Rewrites `self` over `den`, which must be a multiple of the current
    /// denominator.
    pub fn over(&self, den: &MPoly) -> Result<RationalMPoly> {
        let factor = den.div_exact(&self.den)?;
        Ok(RationalMPoly {
            num: &self.num * &factor,
            den: den.clone(),
        })
    }

    /// Sums terms whose denominators all divide the largest one.
    ///
    /// Falls back to pairwise cross-multiplication when they do not nest.
    pub fn sum_nested(terms: &[RationalMPoly]) -> RationalMPoly {
        let Some(big) = terms
            .iter()
            .max_by_key(|r| r.den.len() + r.den.max_q().unwrap_or(0) as usize)
        else {
            return RationalMPoly::from_poly(MPoly::zero());
        };
        let common = big.den.clone();
        let rebased: Option<Vec<MPoly>> = terms
            .iter()
            .map(|r| r.over(&common).ok().map(|r| r.num))
            .collect();
        match rebased {
            Some(nums) => RationalMPoly {
                num: nums.into_iter().sum(),
                den: common,
            },
            None => terms
                .iter()
                .skip(1)
                .fold(terms[0].clone(), |acc, r| acc.add(r)),
        }
    }

    /// Exact polynomial value, if the denominator divides the numerator.
    pub fn to_poly(&self) -> Result<MPoly> {
        self.num.div_exact(&self.den)
    }
}

/// `x == y` iff `x.num * y.den == y.num * x.den`.
pub fn rat_eq(x: &RationalMPoly, y: &RationalMPoly) -> bool {
    &x.num * &y.den == &y.num * &x.den
}

impl PartialEq for RationalMPoly {
    fn eq(&self, other: &Self) -> bool {
        rat_eq(self, other)
    }
}

impl fmt::Display for RationalMPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: &str, d: &str) -> RationalMPoly {
        RationalMPoly::new(n.parse().unwrap(), d.parse().unwrap()).unwrap()
    }

    #[test]
    fn cross_multiplication_examples() {
        assert!(rat_eq(&r("1 + q", "1"), &r("1 - q^2", "1 - q")));
        assert!(!rat_eq(&r("1", "1 - q"), &r("1", "1 - q^2")));
        let num = "1 + q + t*q".parse::<MPoly>().unwrap() * "1 + q".parse::<MPoly>().unwrap();
        let x = RationalMPoly::new(num, "1 + q".parse().unwrap()).unwrap();
        assert!(rat_eq(&x, &r("1 + q + t*q", "1")));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalMPoly::new(MPoly::one(), MPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn nested_sum_matches_cross_sum() {
        let terms = [
            r("1", "1 - q"),
            r("q", "1 - q"),
            r("t", "1 - q - q^2 + q^3"),
        ];
        let nested = RationalMPoly::sum_nested(&terms);
        let crossed = terms[1..].iter().fold(terms[0].clone(), |a, b| a.add(b));
        assert!(rat_eq(&nested, &crossed));
        assert_eq!(nested.den(), &"1 - q - q^2 + q^3".parse::<MPoly>().unwrap());
    }
}
