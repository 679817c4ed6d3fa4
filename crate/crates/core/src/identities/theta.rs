use super::{timed, IdentityId, IdentityReport, Outcome, Params};
use crate::algebra::{gaussian, Assignment, MPoly};
use crate::error::{Error, Result};
use crate::overbinomial::{delannoy_number, over_binomial};

/// `sum_{|j| <= bound} (-1)^j q^{j^2}`.
pub fn truncated_theta(bound: usize) -> MPoly {
    MPoly::one()
        + (1..=bound as i64)
            .map(|j| MPoly::monomial(if j % 2 == 0 { 2 } else { -2 }, j * j, 0, 0))
            .sum::<MPoly>()
}

/// Zero for odd `n`, the theta sum up to `n/2` for even `n`.
pub fn fin_theta_rhs(n: usize) -> MPoly {
    if n % 2 == 1 {
        MPoly::zero()
    } else {
        truncated_theta(n / 2)
    }
}

/// The theta sum up to `floor((n+1)/2)`.
pub fn fine_corollary_rhs(n: usize) -> MPoly {
    truncated_theta(n.div_ceil(2))
}

fn b1(m: i64, n: i64) -> MPoly {
    over_binomial(m, n)
        .specialize(&Assignment::new().t(1))
        .expect("t = 1 is polynomial")
}

fn signed(k: i64, p: MPoly) -> MPoly {
    if k % 2 == 0 {
        p
    } else {
        -p
    }
}

/// `sum_k (-1)^k B(n-k, k)` at `t = 1`.
pub fn fin_theta_lhs(n: usize) -> MPoly {
    let n = n as i64;
    (0..=n).map(|k| signed(k, b1(n - k, k))).sum()
}

fn fine_cor_lhs(n: usize) -> MPoly {
    let n = n as i64;
    MPoly::one()
        + (1..=n)
            .map(|k| signed(k, (b1(n - k, k) + b1(n - k, k - 1)).shift(k, 0, 0)))
            .sum::<MPoly>()
}

fn multinomial_rhs(n: usize) -> MPoly {
    let n = n as i64;
    let tri = |k: i64| k * (k + 1) / 2;
    let mut acc = MPoly::zero();
    for j in 0..n {
        for k in 0..=j {
            let term = (gaussian(2 * n - k, j) * gaussian(j, k)).shift(tri(k), 0, 0);
            acc += &signed(j, term.scale(&2.into()));
        }
    }
    let tail: MPoly = (0..=n)
        .map(|k| (gaussian(2 * n - k, n) * gaussian(n, k)).shift(tri(k), 0, 0))
        .sum();
    acc + signed(n, tail)
}

/// Theta-function identities at `t = 1` and their Delannoy shadow.
pub fn verify_theta(id: IdentityId, n: usize) -> Result<IdentityReport> {
    timed(id, Params::n(n), || match id {
        IdentityId::FinTheta => Ok(Outcome::compare(&fin_theta_lhs(n), &fin_theta_rhs(n))),
        IdentityId::FineCor => {
            if n == 0 {
                return Err(Error::BadIndices("fine-cor needs n >= 1".into()));
            }
            Ok(Outcome::compare(&fine_cor_lhs(n), &fine_corollary_rhs(n)))
        }
        IdentityId::MultinomialForm => {
            let lhs = truncated_theta(n);
            let out = Outcome::compare(&lhs, &multinomial_rhs(n));
            if out.witness.is_none() && lhs != fin_theta_lhs(2 * n) {
                return Ok(Outcome::fail(format!(
                    "theta sum disagrees with the alternating sum at {}",
                    2 * n
                )));
            }
            Ok(out)
        }
        IdentityId::DelannoyAlternating => {
            let lhs: MPoly = (0..=n)
                .map(|k| signed(k as i64, MPoly::constant(delannoy_number(n - k, k))))
                .sum();
            let rhs = match n % 4 {
                1 | 3 => 0,
                2 => -1,
                _ => 1,
            };
            Ok(Outcome::compare(&lhs, &MPoly::constant(rhs)))
        }
        other => Err(Error::BadIndices(format!(
            "{other} is not a theta identity"
        ))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(id: IdentityId, n: usize) -> String {
        let r = verify_theta(id, n).unwrap();
        assert!(r.verified(), "{id} {n}: {:?}", r.witness);
        r.value.unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(value(IdentityId::FinTheta, 2), "1 - 2*q");
        assert_eq!(value(IdentityId::FinTheta, 5), "0");
        assert_eq!(value(IdentityId::DelannoyAlternating, 6), "-1");
        assert_eq!(value(IdentityId::DelannoyAlternating, 4), "1");
        assert_eq!(value(IdentityId::FineCor, 2), "1 - 2*q");
        assert_eq!(multinomial_rhs(1), "1 - 2*q".parse().unwrap());
    }

    #[test]
    fn small_range() {
        for n in 0..=8 {
            value(IdentityId::FinTheta, n);
            value(IdentityId::MultinomialForm, n);
            value(IdentityId::DelannoyAlternating, n);
            if n > 0 {
                value(IdentityId::FineCor, n);
            }
        }
    }
}
