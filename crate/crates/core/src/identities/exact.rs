use super::{timed, IdentityId, IdentityReport, Outcome, Params};
use crate::algebra::{pochhammer, q_factorial, rat_eq, MPoly, PochSign, RationalMPoly};
use crate::error::{Error, Result};
use crate::overbinomial::{over_binomial as b, phi21_series};

/// `(u t^t q^q; q)_k` with `-` or `+` factors.
fn poch(q: i64, t: u32, k: usize, sign: PochSign) -> MPoly {
    pochhammer(&MPoly::monomial(1, q, t, 1), k, sign)
}

fn positive(id: IdentityId, name: &str, v: usize) -> Result<usize> {
    if v == 0 {
        return Err(Error::BadIndices(format!("{id} needs {name} >= 1")));
    }
    Ok(v)
}

fn fraction_outcome(lhs: &RationalMPoly, rhs: &RationalMPoly) -> Outcome {
    if rat_eq(lhs, rhs) {
        Outcome {
            value: Some(rhs.to_string()),
            witness: None,
        }
    } else {
        let cross = Outcome::compare(&(lhs.num() * rhs.den()), &(rhs.num() * lhs.den()));
        Outcome::fail(format!(
            "after cross-multiplying, {}",
            cross.witness.unwrap_or_default()
        ))
    }
}

/// `S(n; t, y, q)` with `y` written as `u`, summed until both brackets vanish.
pub(crate) fn lebesgue_sum(n: usize) -> RationalMPoly {
    let n = n as i64;
    let mut terms = vec![RationalMPoly::from_poly(MPoly::one())];
    let mut j = 1i64;
    loop {
        let first = b(n - j, j - 1);
        let second = b(n - j, j);
        if first.is_zero() && second.is_zero() {
            break;
        }
        let ju = j as usize;
        let front = MPoly::monomial(1, j * j, 0, ju as u32);
        let a = RationalMPoly::new(
            first.shift(0, 1, 0) * poch(1, 1, ju - 1, PochSign::Plus) * &front,
            poch(1, 0, ju - 1, PochSign::Minus),
        )
        .expect("unit constant term");
        let c = RationalMPoly::new(
            second * poch(1, 1, ju, PochSign::Plus) * &front,
            poch(1, 0, ju, PochSign::Minus),
        )
        .expect("unit constant term");
        terms.push(a);
        terms.push(c);
        j += 1;
    }
    RationalMPoly::sum_nested(&terms)
}

fn thm43_cleared(n: usize) -> MPoly {
    let ni = n as i64;
    let mut rhs = poch(1, 0, n, PochSign::Minus);
    for m in 1..=n {
        let mi = m as i64;
        let clear_m = poch(mi + 1, 0, n - m, PochSign::Minus);
        let clear_m1 = poch(mi, 0, n - m + 1, PochSign::Minus);
        let plus_m = poch(1, 1, m, PochSign::Plus);
        let plus_m1 = poch(1, 1, m - 1, PochSign::Plus);
        let even = (b(ni - mi - 1, 2 * mi) + b(ni - mi - 1, 2 * mi - 1).shift(0, 1, 0)).shift(
            2 * mi * mi + 2 * mi,
            0,
            2 * m as u32,
        );
        let odd = b(ni - mi, 2 * mi - 1).shift(2 * mi * mi - mi, 0, 2 * m as u32 - 1);
        let odd_t = b(ni - mi, 2 * mi - 2).shift(2 * mi * mi - mi, 1, 2 * m as u32 - 1);
        rhs += &((even + odd) * &plus_m * &clear_m);
        rhs += &(odd_t * plus_m1 * clear_m1);
    }
    rhs
}

/// Exact (non-truncated) identities; see [`Params`] for the inputs each needs.
pub fn verify_exact_identity(id: IdentityId, params: &Params) -> Result<IdentityReport> {
    match id {
        IdentityId::FinLebesgue => {
            let n = positive(id, "n", params.need("n", params.n)?)?;
            timed(id, Params::n(n), || {
                let lhs = lebesgue_sum(n);
                let rhs = RationalMPoly::new(
                    poch(1, 1, n, PochSign::Plus),
                    poch(1, 0, n, PochSign::Minus),
                )?;
                Ok(fraction_outcome(&lhs, &rhs))
            })
        }
        IdentityId::Prop41 => {
            let m = positive(id, "m", params.need("m", params.m)?)?;
            let n = positive(id, "n", params.need("n", params.n)?)?;
            timed(id, Params::n(n).with_m(m), || {
                let (mi, ni) = (m as i64, n as i64);
                let lhs = b(ni, mi + 1);
                let rhs = MPoly::one()
                    + (1..=ni)
                        .map(|j| (b(mi, j) + b(mi, j - 1).shift(0, 1, 0)).shift(j, 0, 0))
                        .sum::<MPoly>();
                Ok(Outcome::compare(&lhs, &rhs))
            })
        }
        IdentityId::Prop42 => {
            let m = positive(id, "m", params.need("m", params.m)?)?;
            let n = positive(id, "n", params.need("n", params.n)?)?;
            let h = params.need("h", params.h)?;
            if h > m || h > n {
                return Err(Error::BadIndices(format!("{id} needs m, n >= h")));
            }
            timed(id, Params::n(n).with_m(m).with_h(h), || {
                let (mi, ni, hi) = (m as i64, n as i64, h as i64);
                let lhs: MPoly = (0..=hi)
                    .map(|k| {
                        let plain = b(ni - k, k) * b(mi - hi + k, hi - k);
                        let marked = (b(ni - 1 - k, k) * b(mi - hi + k, hi - k - 1)).shift(0, 1, 0);
                        (plain + marked).shift((ni - k) * (hi - k), 0, 0)
                    })
                    .sum();
                Ok(Outcome::compare(&lhs, &b(mi + ni - hi, hi)))
            })
        }
        IdentityId::Thm43 => {
            let n = positive(id, "n", params.need("n", params.n)?)?;
            timed(id, Params::n(n), || {
                let lhs = poch(1, 1, n, PochSign::Plus);
                Ok(Outcome::compare(&lhs, &thm43_cleared(n)))
            })
        }
        IdentityId::Phi21Rep => {
            let m = positive(id, "m", params.need("m", params.m)?)?;
            let n = positive(id, "n", params.need("n", params.n)?)?;
            timed(id, Params::n(n).with_m(m), || {
                let lhs = phi21_series(m, n);
                let rhs = RationalMPoly::new(
                    b(m as i64, n as i64) * q_factorial(n) * q_factorial(m),
                    q_factorial(m + n),
                )?;
                Ok(fraction_outcome(&lhs, &rhs))
            })
        }
        other => Err(Error::BadIndices(format!(
            "{other} is not an exact identity"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ok(id: IdentityId, p: Params) -> String {
        let r = verify_exact_identity(id, &p).unwrap();
        assert!(r.verified(), "{id} {p:?}: {:?}", r.witness);
        r.value.unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            ok(IdentityId::Prop41, Params::n(1).with_m(1)),
            "1 + q + t*q + q^2 + t*q^2"
        );
        assert_eq!(
            ok(IdentityId::Prop42, Params::n(1).with_m(1).with_h(1)),
            "1 + q + t*q"
        );
        ok(IdentityId::FinLebesgue, Params::n(1));
    }

    #[test]
    fn small_grid() {
        for n in 1..=4 {
            ok(IdentityId::FinLebesgue, Params::n(n));
            ok(IdentityId::Thm43, Params::n(n));
            for m in 1..=4 {
                ok(IdentityId::Prop41, Params::n(n).with_m(m));
                ok(IdentityId::Phi21Rep, Params::n(n).with_m(m));
                for h in 0..=m.min(n) {
                    ok(IdentityId::Prop42, Params::n(n).with_m(m).with_h(h));
                }
            }
        }
    }

    #[test]
    fn bad_parameters() {
        let p = Params::n(1).with_m(1).with_h(2);
        assert!(matches!(
            verify_exact_identity(IdentityId::Prop42, &p),
            Err(Error::BadIndices(_))
        ));
        assert!(verify_exact_identity(IdentityId::Thm43, &Params::n(0)).is_err());
    }
}
