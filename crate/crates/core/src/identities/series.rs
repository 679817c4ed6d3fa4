use super::{timed, IdentityId, IdentityReport, Outcome, Params};
use crate::algebra::{pochhammer, MPoly, PochSign, USeries};
use crate::error::{Error, Result};
use crate::overbinomial::over_binomial;

fn b(m: usize, n: usize) -> MPoly {
    over_binomial(m as i64, n as i64)
}

fn bi(m: i64, n: i64) -> MPoly {
    over_binomial(m, n)
}

/// `(c u t^t q^q; q)_k` as a series in `u`, with `-` or `+` factors.
fn poch_u(c: i64, q: i64, t: u32, k: usize, sign: PochSign, order: usize) -> USeries {
    let a = MPoly::monomial(c, q, t, 1);
    USeries::from_poly(&pochhammer(&a, k, sign), order)
}

fn inverse_poch_uq(k: usize, order: usize) -> Result<USeries> {
    poch_u(1, 1, 0, k, PochSign::Minus, order).invert()
}

/// `sum_{k=0}^{K} B(n-1, k) u^k q^k`.
fn shifted_column_sum(n: usize, order: usize) -> USeries {
    let coeffs = (0..=order)
        .map(|k| b(n - 1, k).shift(k as i64, 0, 0))
        .collect();
    USeries::from_coeffs(coeffs, order)
}

fn compare_series(lhs: &USeries, rhs: &USeries) -> Outcome {
    let out = Outcome::compare(&lhs.to_poly(), &rhs.to_poly());
    match out.witness {
        None => Outcome {
            value: Some(lhs.to_string()),
            witness: None,
        },
        w => Outcome {
            value: None,
            witness: w,
        },
    }
}

/// Checks a `u`-series identity up to and including `u^order`.
pub fn verify_series_identity(id: IdentityId, n: usize, order: usize) -> Result<IdentityReport> {
    if n == 0 || order == 0 {
        return Err(Error::BadIndices(format!(
            "{id} needs n >= 1 and trunc >= 1"
        )));
    }
    let params = Params::n(n).with_trunc(order);
    timed(id, params, || {
        let (lhs, rhs) = match id {
            IdentityId::FinQbinom => {
                let lhs = shifted_column_sum(n, order);
                let rhs =
                    poch_u(1, 2, 1, n - 1, PochSign::Plus, order).mul(&inverse_poch_uq(n, order)?);
                (lhs, rhs)
            }
            IdentityId::FinQbi => {
                let lhs =
                    poch_u(1, 1, 1, n, PochSign::Plus, order).mul(&inverse_poch_uq(n, order)?);
                let coeffs = (0..=order)
                    .map(|k| {
                        if k == 0 {
                            MPoly::one()
                        } else {
                            (b(n - 1, k) + b(n - 1, k - 1).shift(0, 1, 0)).shift(k as i64, 0, 0)
                        }
                    })
                    .collect();
                (lhs, USeries::from_coeffs(coeffs, order))
            }
            IdentityId::FinRogersFine => {
                let lhs = shifted_column_sum(n, order);
                let mut rhs = USeries::zero(order);
                let (n, ord) = (n as i64, order);
                for k in 0..=ord {
                    let ki = k as i64;
                    let bracket = bi(n - 1 - ki, ki) + bi(n - 2 - ki, ki).shift(2 * ki + 2, 1, 1);
                    let front = MPoly::monomial(1, ki * ki + ki, 0, k as u32);
                    let top = front
                        * pochhammer(&MPoly::monomial(1, 2, 1, 1), k, PochSign::Plus)
                        * bracket;
                    let term = USeries::from_poly(&top, ord).mul(&inverse_poch_uq(k + 1, ord)?);
                    rhs = rhs.add(&term);
                }
                (lhs, rhs)
            }
            other => {
                return Err(Error::BadIndices(format!(
                    "{other} is not a series identity"
                )))
            }
        };
        Ok(compare_series(&lhs, &rhs))
    })
}
