use num_bigint::{BigInt, Sign};

use super::{timed, IdentityId, IdentityReport, Outcome, Params};
use crate::algebra::{Assignment, MPoly};
use crate::error::{Error, Result};
use crate::overbinomial::{delannoy_number, over_binomial, sagan_q_delannoy};

type Cell = (i64, i64);

/// The two products `B(a) B(b) - B(c) B(d)` for an instance, by coordinates.
fn products(id: IdentityId, p: &Params) -> Result<([Cell; 2], [Cell; 2])> {
    let n = p.need("n", p.n)? as i64;
    let k = p.need("k", p.k)? as i64;
    let bad = |why: &str| Err(Error::BadIndices(format!("{id}: {why}")));
    match id {
        IdentityId::QlogGeneral | IdentityId::Cor2 => {
            let l = p.need("l", p.l)? as i64;
            if !(0 < k && k <= l && l < n) {
                return bad("need 0 < k <= l < n");
            }
            let top = [(n - k, k), (n - l, l)];
            if id == IdentityId::QlogGeneral {
                Ok((top, [(n - k + 1, k - 1), (n - l - 1, l + 1)]))
            } else {
                Ok((top, [(n - k, k - 1), (n - l, l + 1)]))
            }
        }
        IdentityId::QlogSquare => {
            if !(0 < k && k < n) {
                return bad("need 0 < k < n");
            }
            Ok((
                [(n - k, k), (n - k, k)],
                [(n - k + 1, k - 1), (n - k - 1, k + 1)],
            ))
        }
        IdentityId::ButlerR => {
            let l = p.need("l", p.l)? as i64;
            let r = p.need("r", p.r)? as i64;
            if !(0 <= k - r && k <= l && l + r <= n) {
                return bad("need 0 <= k - r <= k <= l <= l + r <= n");
            }
            Ok((
                [(n - k, k), (n - l, l)],
                [(n - k + r, k - r), (n - l - r, l + r)],
            ))
        }
        other => Err(Error::BadIndices(format!(
            "{other} is not a nonnegativity statement"
        ))),
    }
}

fn product_diff<T>(pos: &[Cell; 2], neg: &[Cell; 2], f: impl Fn(Cell) -> T) -> T
where
    T: std::ops::Mul<Output = T> + std::ops::Sub<Output = T>,
{
    f(pos[0]) * f(pos[1]) - f(neg[0]) * f(neg[1])
}

fn b(c: Cell) -> MPoly {
    over_binomial(c.0, c.1)
}

fn delannoy(c: Cell) -> BigInt {
    if c.0 < 0 || c.1 < 0 {
        BigInt::from(0)
    } else {
        delannoy_number(c.0 as usize, c.1 as usize)
    }
}

fn sagan(c: Cell) -> MPoly {
    if c.0 < 0 || c.1 < 0 {
        MPoly::zero()
    } else {
        sagan_q_delannoy(c.0 as usize, c.1 as usize)
    }
}

fn first_negative(p: &MPoly) -> Option<String> {
    p.terms()
        .find(|(_, c)| c.sign() == Sign::Minus)
        .map(|(m, c)| format!("coefficient {c} at {}", MPoly::monomial(1, m.q, m.t, m.u)))
}

/// `B(a) B(b) - B(c) B(d)` for the instance described by `params`.
pub fn nonnegativity_difference(id: IdentityId, params: &Params) -> Result<MPoly> {
    let (pos, neg) = products(id, params)?;
    Ok(product_diff(&pos, &neg, b))
}

/// Checks coefficientwise nonnegativity of the difference, together with its
/// Delannoy (`q = t = 1`) and q-Delannoy (`q = 1`, `t -> q`) shadows computed
/// from independent path counts.
pub fn verify_nonnegativity(id: IdentityId, params: &Params) -> Result<IdentityReport> {
    let (pos, neg) = products(id, params)?;
    let mut shown = Params::n(params.n.unwrap_or(0)).with_k(params.k.unwrap_or(0));
    shown.l = params.l.filter(|_| id != IdentityId::QlogSquare);
    shown.r = params.r.filter(|_| id == IdentityId::ButlerR);
    timed(id, shown, || {
        let diff = product_diff(&pos, &neg, b);
        if let Some(w) = first_negative(&diff) {
            return Ok(Outcome::fail(w));
        }
        let d = product_diff(&pos, &neg, delannoy);
        let at_one = diff.eval(1, 1, 0)?;
        if at_one != d || d.sign() == Sign::Minus {
            return Ok(Outcome::fail(format!(
                "at q = t = 1 the difference is {at_one}, Delannoy numbers give {d}"
            )));
        }
        let sq = product_diff(&pos, &neg, sagan);
        let spec = diff.specialize(&Assignment::new().q(1))?.exchange_q_t();
        if spec != sq {
            return Ok(Outcome::fail(format!(
                "at q = 1 the difference is {spec}, q-Delannoy numbers give {sq}"
            )));
        }
        if let Some(w) = first_negative(&sq) {
            return Ok(Outcome::fail(format!("q-Delannoy difference: {w}")));
        }
        Ok(Outcome {
            value: Some(diff.to_string()),
            witness: None,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, k: usize) -> Params {
        Params::n(n).with_k(k)
    }

    #[test]
    fn square_example() {
        let r = verify_nonnegativity(IdentityId::QlogSquare, &p(2, 1)).unwrap();
        assert!(r.verified());
        let b11: MPoly = "1 + q + t*q".parse().unwrap();
        assert_eq!(r.value.unwrap(), (&b11 * &b11 - MPoly::one()).to_string());
    }

    #[test]
    fn cor2_delannoy_value() {
        let params = p(4, 2).with_l(2);
        let diff = nonnegativity_difference(IdentityId::Cor2, &params).unwrap();
        assert_eq!(diff.eval(1, 1, 0).unwrap(), BigInt::from(169 - 5 * 25));
        assert!(verify_nonnegativity(IdentityId::Cor2, &params)
            .unwrap()
            .verified());
    }

    #[test]
    fn butler_zero_shift_vanishes() {
        let params = p(5, 2).with_l(3).with_r(0);
        assert!(nonnegativity_difference(IdentityId::ButlerR, &params)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn bad_indices() {
        let e = verify_nonnegativity(IdentityId::QlogGeneral, &p(3, 2).with_l(1)).unwrap_err();
        assert!(matches!(e, Error::BadIndices(_)));
        assert!(verify_nonnegativity(IdentityId::QlogSquare, &p(3, 3)).is_err());
        assert!(verify_nonnegativity(IdentityId::ButlerR, &p(4, 1).with_l(2).with_r(2)).is_err());
    }

    #[test]
    fn small_grid() {
        for n in 2..=6 {
            for k in 1..n {
                assert!(verify_nonnegativity(IdentityId::QlogSquare, &p(n, k))
                    .unwrap()
                    .verified());
                for l in k..n {
                    for id in [IdentityId::QlogGeneral, IdentityId::Cor2] {
                        let r = verify_nonnegativity(id, &p(n, k).with_l(l)).unwrap();
                        assert!(r.verified(), "{id} {n} {k} {l}: {:?}", r.witness);
                    }
                }
            }
        }
    }
}
