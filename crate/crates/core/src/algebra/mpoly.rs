use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exponent triple `q^q t^t u^u`.
///
/// The derived ordering compares `q` first, then `t`, then `u`; this is the
/// canonical term order used everywhere (serialization, division, display).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: i64,
    pub t: u32,
    pub u: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { q: 0, t: 0, u: 0 };

    pub fn new(q: i64, t: u32, u: u32) -> Self {
        Monomial { q, t, u }
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial {
            q: self.q + other.q,
            t: self.t + other.t,
            u: self.u + other.u,
        }
    }

    fn divides(self, other: Monomial) -> bool {
        self.q <= other.q && self.t <= other.t && self.u <= other.u
    }

    fn div(self, other: Monomial) -> Monomial {
        Monomial {
            q: self.q - other.q,
            t: self.t - other.t,
            u: self.u - other.u,
        }
    }
}

/// Exact sparse polynomial in `q`, `t`, `u` with big-integer coefficients.
///
/// No stored coefficient is ever zero, so structural equality is
/// mathematical equality. Negative `q`-exponents only arise through
/// [`MPoly::laurent_monomial`].
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        MPoly::term(c, Monomial::ONE)
    }

    /// `c * q^q * t^t * u^u`.
    ///
    /// Panics on a negative `q` exponent; use [`MPoly::laurent_monomial`].
    pub fn monomial(c: impl Into<BigInt>, q: i64, t: u32, u: u32) -> Self {
        assert!(q >= 0, "negative q-exponent outside the Laurent path");
        MPoly::term(c, Monomial::new(q, t, u))
    }

    /// Same as [`MPoly::monomial`] but allows `q < 0`.
    pub fn laurent_monomial(c: impl Into<BigInt>, q: i64, t: u32, u: u32) -> Self {
        MPoly::term(c, Monomial::new(q, t, u))
    }

    fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { terms }
    }

    pub fn q() -> Self {
        MPoly::monomial(1, 1, 0, 0)
    }

    pub fn t() -> Self {
        MPoly::monomial(1, 0, 1, 0)
    }

    pub fn u() -> Self {
        MPoly::monomial(1, 0, 0, 1)
    }

    /// `q^e` for `e >= 0`.
    pub fn q_pow(e: i64) -> Self {
        MPoly::monomial(1, e, 0, 0)
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I, C>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in iter {
            *acc.entry(m).or_default() += c.into();
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { terms: acc }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    /// True if some term has a negative `q`-exponent.
    pub fn is_laurent(&self) -> bool {
        self.terms.keys().next().is_some_and(|m| m.q < 0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Coefficient of `t^t q^q` (with `u^0`).
    pub fn coeff_tq(&self, t: u32, q: i64) -> BigInt {
        self.coeff(Monomial::new(q, t, 0))
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.q).max()
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().next().map(|m| m.q)
    }

    pub fn max_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    pub fn max_u(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.u).max()
    }

    fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Multiplies by `c * m`.
    pub fn mul_term(&self, c: &BigInt, m: Monomial) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// Multiplies by `q^a t^b u^c`.
    pub fn shift(&self, q: i64, t: u32, u: u32) -> MPoly {
        let m = Monomial::new(q, t, u);
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        self.mul_term(c, Monomial::ONE)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Keeps only the terms with `u`-exponent `j`, returning them with `u^0`.
    pub fn u_coeff(&self, j: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.u == j)
                .map(|(m, c)| (Monomial::new(m.q, m.t, 0), c.clone()))
                .collect(),
        }
    }

    /// Drops every term whose `u`-exponent exceeds `order`.
    pub fn truncate_u(&self, order: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.u <= order)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Exchanges the roles of `q` and `t` (requires `q`-exponents `>= 0`).
    pub fn exchange_q_t(&self) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let q = u32::try_from(m.q).expect("exchange_q_t on a Laurent polynomial");
            (Monomial::new(i64::from(m.t), q, m.u), c.clone())
        }))
    }

    /// Substitutes integer values for any subset of the variables.
    pub fn specialize(&self, at: &Assignment) -> Result<MPoly> {
        if at.is_empty() {
            return Ok(self.clone());
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut mono = *m;
            if let Some(v) = &at.q {
                coeff *= int_pow(v, m.q)?;
                mono.q = 0;
            }
            if let Some(v) = &at.t {
                coeff *= num_traits::pow(v.clone(), m.t as usize);
                mono.t = 0;
            }
            if let Some(v) = &at.u {
                coeff *= num_traits::pow(v.clone(), m.u as usize);
                mono.u = 0;
            }
            *acc.entry(mono).or_default() += coeff;
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MPoly { terms: acc })
    }

    /// Full evaluation at integer `(q, t, u)`.
    pub fn eval(&self, q: i64, t: i64, u: i64) -> Result<BigInt> {
        let p = self.specialize(&Assignment::new().q(q).t(t).u(u))?;
        Ok(p.as_constant().expect("fully specialized"))
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Fails with [`Error::DivisionCheck`] when the divisor does not divide.
    /// Laurent operands are normalized by a power of `q` first, which is a
    /// unit in the Laurent ring.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionCheck);
        }
        let shift_a = self.min_q().unwrap_or(0).min(0);
        let shift_b = divisor.min_q().unwrap_or(0).min(0);
        let a = if shift_a < 0 {
            self.shift(-shift_a, 0, 0)
        } else {
            self.clone()
        };
        let b = if shift_b < 0 {
            divisor.shift(-shift_b, 0, 0)
        } else {
            divisor.clone()
        };
        let quotient = div_exact_nonneg(a, &b)?;
        let back = shift_a - shift_b;
        Ok(if back != 0 {
            quotient.shift(back, 0, 0)
        } else {
            quotient
        })
    }

    /// LaTeX rendering, e.g. `1 + q + t q`.
    pub fn to_latex(&self) -> String {
        self.render(|c, m| {
            let mut parts = Vec::new();
            if let Some(c) = c {
                parts.push(c);
            }
            for (name, e) in [("t", m.t as i64), ("q", m.q), ("u", m.u as i64)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    e => parts.push(format!("{name}^{{{e}}}")),
                }
            }
            parts.join(" ")
        })
    }

    fn render(&self, body: impl Fn(Option<String>, &Monomial) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let shown = if *m == Monomial::ONE || !mag.is_one() {
                Some(mag.to_string())
            } else {
                None
            };
            out.push_str(&body(shown, m));
        }
        out
    }
}

fn int_pow(v: &BigInt, e: i64) -> Result<BigInt> {
    if e >= 0 {
        return Ok(num_traits::pow(v.clone(), e as usize));
    }
    if v.is_zero() {
        return Err(Error::LaurentAtZero);
    }
    if v.abs().is_one() {
        return Ok(num_traits::pow(v.clone(), e.unsigned_abs() as usize));
    }
    Err(Error::LaurentNonIntegral {
        exponent: e,
        value: v.to_string(),
    })
}

fn div_exact_nonneg(mut rem: MPoly, divisor: &MPoly) -> Result<MPoly> {
    let (lead_m, lead_c) = divisor.leading().map(|(m, c)| (*m, c.clone())).unwrap();
    let mut quotient = BTreeMap::new();
    while let Some((m, c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
        if !lead_m.divides(m) {
            return Err(Error::DivisionCheck);
        }
        let (qc, r) = (&c / &lead_c, &c % &lead_c);
        if !r.is_zero() {
            return Err(Error::DivisionCheck);
        }
        let qm = m.div(lead_m);
        rem -= &divisor.mul_term(&qc, qm);
        quotient.insert(qm, qc);
    }
    Ok(MPoly { terms: quotient })
}

/// Partial integer assignment of `q`, `t`, `u`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    pub q: Option<BigInt>,
    pub t: Option<BigInt>,
    pub u: Option<BigInt>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn q(mut self, v: impl Into<BigInt>) -> Self {
        self.q = Some(v.into());
        self
    }

    pub fn t(mut self, v: impl Into<BigInt>) -> Self {
        self.t = Some(v.into());
        self
    }

    pub fn u(mut self, v: impl Into<BigInt>) -> Self {
        self.u = Some(v.into());
        self
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_none() && self.t.is_none() && self.u.is_none()
    }
}

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            let e = self.terms.entry(*m).or_default();
            *e += c;
            if e.is_zero() {
                self.terms.remove(m);
            }
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, c) in &rhs.terms {
            let e = self.terms.entry(*m).or_default();
            *e -= c;
            if e.is_zero() {
                self.terms.remove(m);
            }
        }
    }
}

impl Add<&MPoly> for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MPoly> for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&MPoly> for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero();
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(*mb)).or_default() += ca * cb;
            }
        }
        MPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $f(self, rhs: &MPoly) -> MPoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $f(self, rhs: MPoly) -> MPoly {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> MPoly {
        iter.fold(MPoly::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for MPoly {
    fn from(c: i64) -> Self {
        MPoly::constant(c)
    }
}

impl From<BigInt> for MPoly {
    fn from(c: BigInt) -> Self {
        MPoly::constant(c)
    }
}

// ---------------------------------------------------------------------------
// Text form: `1 + q + t*q`, `-2*t^2*q^3*u`, `q^-1`
// ---------------------------------------------------------------------------

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.render(|c, m| {
            let mut parts = Vec::new();
            if let Some(c) = c {
                parts.push(c);
            }
            for (name, e) in [("t", m.t as i64), ("q", m.q), ("u", m.u as i64)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    e => parts.push(format!("{name}^{e}")),
                }
            }
            parts.join("*")
        });
        f.write_str(&s)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MPoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split into signed terms; a '-' directly after '^' belongs to an exponent
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                } else if prev.is_some() {
                    return Err(Error::Parse(format!("unexpected sign in {s:?}")));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
            prev = Some(ch);
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        terms.push((neg, cur));

        let mut acc = Vec::with_capacity(terms.len());
        for (neg, body) in terms {
            let mut coeff = BigInt::one();
            let mut mono = Monomial::ONE;
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in {s:?}")));
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    coeff *= factor
                        .parse::<BigInt>()
                        .map_err(|e| Error::Parse(e.to_string()))?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?,
                    ),
                    None => (factor, 1),
                };
                match name {
                    "q" => mono.q += exp,
                    "t" | "u" if exp < 0 => {
                        return Err(Error::Parse(format!("negative exponent on {name}")))
                    }
                    "t" => mono.t += exp as u32,
                    "u" => mono.u += exp as u32,
                    _ => return Err(Error::Parse(format!("unknown factor {factor:?}"))),
                }
            }
            if neg {
                coeff = -coeff;
            }
            acc.push((mono, coeff));
        }
        Ok(MPoly::from_terms(acc))
    }
}

// ---------------------------------------------------------------------------
// JSON form: [{"q":1,"t":1,"u":0,"c":"1"}, ...]
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    q: i64,
    t: u32,
    u: u32,
    c: String,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(m, c)| JsonTerm {
                q: m.q,
                t: m.t,
                u: m.u,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<JsonTerm>::deserialize(deserializer)?;
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            let c: BigInt = t.c.parse().map_err(serde::de::Error::custom)?;
            parsed.push((Monomial::new(t.q, t.t, t.u), c));
        }
        Ok(MPoly::from_terms(parsed))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("1 + q") * p("1 - q"), p("1 - q^2"));
    }

    #[test]
    fn additive_identity() {
        let a = p("3 + t*q - 2*q^5*u");
        assert_eq!(&a + &MPoly::zero(), a);
    }

    #[test]
    fn square_of_b11() {
        // (1+q+tq)^2 expanded term by term
        let base = p("1 + q + t*q");
        let expected = MPoly::from_terms([
            (Monomial::new(0, 0, 0), 1),
            (Monomial::new(1, 0, 0), 2),
            (Monomial::new(1, 1, 0), 2),
            (Monomial::new(2, 0, 0), 1),
            (Monomial::new(2, 1, 0), 2),
            (Monomial::new(2, 2, 0), 1),
        ]);
        assert_eq!(base.pow(2), expected);
        assert_eq!(&base * &base, expected);
    }

    #[test]
    fn canonical_text() {
        assert_eq!(p("t*q + q + 1").to_string(), "1 + q + t*q");
        assert_eq!(p("-q^2 + 1").to_string(), "1 - q^2");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(
            MPoly::laurent_monomial(-3, -2, 1, 0).to_string(),
            "-3*t*q^-2"
        );
        assert_eq!(p("1 + q + t*q").to_latex(), "1 + q + t q");
        assert_eq!(p("2*t^2*q^10").to_latex(), "2 t^{2} q^{10}");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<MPoly>().is_err());
        assert!("1 + x".parse::<MPoly>().is_err());
        assert!("1 +".parse::<MPoly>().is_err());
        assert!("t^-1".parse::<MPoly>().is_err());
    }

    #[test]
    fn specialize_examples() {
        let b11 = p("1 + q + t*q");
        assert_eq!(b11.specialize(&Assignment::new().t(0)).unwrap(), p("1 + q"));
        assert_eq!(
            b11.specialize(&Assignment::new().q(1).t(1))
                .unwrap()
                .as_constant(),
            Some(BigInt::from(3))
        );
        assert_eq!(b11.specialize(&Assignment::new()).unwrap(), b11);
    }

    #[test]
    fn specialize_laurent_at_zero() {
        let l = MPoly::laurent_monomial(1, -1, 0, 0) + MPoly::one();
        assert_eq!(
            l.specialize(&Assignment::new().q(0)),
            Err(Error::LaurentAtZero)
        );
        assert_eq!(l.eval(1, 0, 0).unwrap(), BigInt::from(2));
        assert_eq!(l.eval(-1, 0, 0).unwrap(), BigInt::from(0));
        assert!(matches!(
            l.specialize(&Assignment::new().q(2)),
            Err(Error::LaurentNonIntegral { .. })
        ));
    }

    #[test]
    fn exact_division() {
        let a = p("1 + q + t*q");
        let b = p("1 - q^3 + t*u");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(
            p("1 + q^2").div_exact(&p("1 + q")),
            Err(Error::DivisionCheck)
        );
        assert_eq!(p("3*q").div_exact(&p("2")), Err(Error::DivisionCheck));
    }

    #[test]
    fn laurent_division() {
        let a = MPoly::laurent_monomial(1, -2, 0, 0) - MPoly::one();
        let b = MPoly::laurent_monomial(1, -1, 0, 0) + MPoly::one();
        // (q^-2 - 1) / (q^-1 + 1) = q^-1 - 1
        let expected = MPoly::laurent_monomial(1, -1, 0, 0) - MPoly::one();
        assert_eq!(a.div_exact(&b).unwrap(), expected);
    }

    #[test]
    fn json_roundtrip_example() {
        let a = p("1 + q + t*q - 7*u^2");
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            r#"[{"q":0,"t":0,"u":0,"c":"1"},{"q":0,"t":0,"u":2,"c":"-7"},{"q":1,"t":0,"u":0,"c":"1"},{"q":1,"t":1,"u":0,"c":"1"}]"#
        );
        let back: MPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn exchange_q_t_swaps() {
        assert_eq!(
            p("1 + 2*t + t^2*q^3").exchange_q_t(),
            p("1 + 2*q + t^3*q^2")
        );
    }
}
