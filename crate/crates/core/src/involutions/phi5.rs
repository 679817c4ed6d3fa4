use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{Assignment, MPoly};
use crate::combinatorics::{durfee, enumerate_overpartitions, reconstruct, Overpartition, Part};
use crate::error::{Error, Result};
use crate::identities::{fin_theta_rhs, fine_corollary_rhs};
use crate::overbinomial::over_binomial;

/// An element of `O_{k,n}`: exactly `k` parts (zeros included), each `<= n - k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedOverpartition {
    lambda: Overpartition,
    n: usize,
}

impl SignedOverpartition {
    pub fn new(lambda: Overpartition, n: usize) -> Result<Self> {
        let k = lambda.num_parts();
        if k > n || lambda.largest() as usize > n - k {
            return Err(Error::NotInOn(format!("{lambda} with n = {n}")));
        }
        Ok(SignedOverpartition { lambda, n })
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        SignedOverpartition::new(s.parse()?, n)
    }

    pub fn lambda(&self) -> &Overpartition {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.lambda.num_parts()
    }

    pub fn sign(&self) -> i64 {
        if self.k().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn weight(&self) -> u64 {
        self.lambda.weight()
    }
}

impl fmt::Display for SignedOverpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in O({},{})", self.lambda, self.k(), self.n)
    }
}

impl Serialize for SignedOverpartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            lambda: String,
            k: usize,
            n: usize,
            sign: i64,
        }
        Repr {
            lambda: self.lambda.to_string(),
            k: self.k(),
            n: self.n,
            sign: self.sign(),
        }
        .serialize(s)
    }
}

/// Every element of `O_n`, ordered by `k` and then by enumeration order.
pub fn o_enumerate(n: usize) -> Vec<SignedOverpartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for x in enumerate_overpartitions((n - k) as u32, k) {
            let pad = k - x.num_parts();
            out.push(SignedOverpartition {
                lambda: x.with_zeros(x.zeros() + pad),
                n,
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhiCase {
    Fixed,
    MoveMu,
    PairToMu,
    PiToMu,
    BothMarked,
    MuMarked,
    PiMarked,
    PairPlain,
    PlainToMu,
}

impl PhiCase {
    pub const ALL: [PhiCase; 9] = [
        PhiCase::Fixed,
        PhiCase::MoveMu,
        PhiCase::PairToMu,
        PhiCase::PiToMu,
        PhiCase::BothMarked,
        PhiCase::MuMarked,
        PhiCase::PiMarked,
        PhiCase::PairPlain,
        PhiCase::PlainToMu,
    ];

    pub fn label(self) -> &'static str {
        match self {
            PhiCase::Fixed => "1",
            PhiCase::MoveMu => "2",
            PhiCase::PairToMu => "3.1",
            PhiCase::PiToMu => "3.2",
            PhiCase::BothMarked => "4.1",
            PhiCase::MuMarked => "4.2",
            PhiCase::PiMarked => "4.3",
            PhiCase::PairPlain => "4.4.1",
            PhiCase::PlainToMu => "4.4.2",
        }
    }

    /// Cases that `phi` of an element in this case can land in.
    pub fn inverse_cases(self) -> &'static [PhiCase] {
        use PhiCase::*;
        match self {
            Fixed => &[Fixed],
            MoveMu => &[PiToMu, PiMarked, PlainToMu],
            PairToMu => &[BothMarked],
            PiToMu => &[MuMarked, MoveMu],
            BothMarked => &[PairPlain, PairToMu],
            MuMarked => &[PiMarked, PiToMu],
            PiMarked => &[MuMarked, MoveMu],
            PairPlain => &[BothMarked],
            PlainToMu => &[MoveMu],
        }
    }
}

impl fmt::Display for PhiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for PhiCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

fn as_text<S: Serializer>(x: &Overpartition, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Durfee data of the input and the statistics the case split reads.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiInternals {
    pub d: usize,
    #[serde(serialize_with = "as_text")]
    pub pi: Overpartition,
    #[serde(serialize_with = "as_text")]
    pub mu: Overpartition,
    pub corner_overlined: bool,
    pub s_pi: u32,
    pub s_mu: u32,
    pub s2_pi: u32,
    pub s2_mu: u32,
    pub chi_pi: bool,
    pub chi_mu: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhiTrace {
    pub input: SignedOverpartition,
    pub output: SignedOverpartition,
    #[serde(rename = "case")]
    pub case_label: PhiCase,
    pub internals: PhiInternals,
}

fn value(p: Option<Part>) -> u32 {
    p.map_or(0, |p| p.value)
}

fn mark(p: Option<Part>) -> bool {
    p.is_some_and(|p| p.overlined)
}

fn classify(x: &PhiInternals) -> PhiCase {
    let (sp, sm) = (x.s_pi, x.s_mu);
    if sp == 0 && sm == 0 {
        PhiCase::Fixed
    } else if sm > 0 && (sp == 0 || sp > sm) {
        PhiCase::MoveMu
    } else if sp > 0 && (sm == 0 || sp < sm) {
        if x.s2_pi == sp && !x.chi_pi {
            PhiCase::PairToMu
        } else {
            PhiCase::PiToMu
        }
    } else {
        match (x.chi_mu, x.chi_pi) {
            (true, true) => PhiCase::BothMarked,
            (true, false) => PhiCase::MuMarked,
            (false, true) => PhiCase::PiMarked,
            (false, false) if x.s2_pi == sp => PhiCase::PairPlain,
            (false, false) => PhiCase::PlainToMu,
        }
    }
}

/// Overlines the last two positive entries of `pi` (equal values), removes
/// the last and returns it.
fn split_pair(pi: &mut Overpartition) -> Part {
    let len = pi.num_positive();
    pi.set_overline(len - 2, true);
    let mut moved = pi.pop_smallest().expect("two positive parts");
    moved.overlined = true;
    moved
}

/// Applies the sign-reversing involution to one element of `O_n`.
pub fn phi5(x: &SignedOverpartition) -> Result<PhiTrace> {
    SignedOverpartition::new(x.lambda.clone(), x.n)?;
    let dec = durfee(&x.lambda, 0)?;
    let internals = PhiInternals {
        d: dec.d,
        pi: dec.below.clone(),
        mu: dec.right.clone(),
        corner_overlined: dec.corner_overlined,
        s_pi: value(dec.below.smallest()),
        s_mu: value(dec.right.smallest()),
        s2_pi: value(dec.below.second_smallest()),
        s2_mu: value(dec.right.second_smallest()),
        chi_pi: mark(dec.below.smallest()),
        chi_mu: mark(dec.right.smallest()),
    };
    let case = classify(&internals);
    let mut next = dec.clone();
    let (pi, mu) = (&mut next.below, &mut next.right);
    match case {
        PhiCase::Fixed => {}
        PhiCase::MoveMu | PhiCase::MuMarked => {
            let p = mu.pop_smallest().expect("s(mu) > 0");
            pi.insert(p)?;
        }
        PhiCase::PiToMu | PhiCase::PiMarked | PhiCase::PlainToMu => {
            let p = pi.pop_smallest().expect("s(pi) > 0");
            mu.insert(p)?;
        }
        PhiCase::PairToMu | PhiCase::PairPlain => {
            let p = split_pair(pi);
            mu.insert(p)?;
        }
        PhiCase::BothMarked => {
            let mut p = mu.pop_smallest().expect("s(mu) > 0");
            let last = pi.num_positive() - 1;
            pi.set_overline(last, false);
            p.overlined = false;
            pi.insert(p)?;
        }
    }
    let output = reconstruct(&next)?;
    let output = SignedOverpartition::new(output, x.n)
        .map_err(|e| Error::IllFormedImage(format!("case {case} sends {x} outside O_n: {e}")))?;
    Ok(PhiTrace {
        input: x.clone(),
        output,
        case_label: case,
        internals,
    })
}

/// Squares `j x j` (plain, or with the last row overlined) padded by zeros.
fn expected_fixed_points(n: usize, zero_free: bool) -> BTreeSet<SignedOverpartition> {
    let mut out = BTreeSet::new();
    for j in 0..=n / 2 {
        let ks = if zero_free { j..=j } else { j..=n - j };
        for k in ks {
            let plain = vec![Part::plain(j as u32); j];
            let mut variants = vec![plain.clone()];
            if j > 0 {
                let mut marked = plain;
                marked[j - 1].overlined = true;
                variants.push(marked);
            }
            for parts in variants {
                let lambda = Overpartition::new(parts, k - j).expect("square");
                out.insert(SignedOverpartition { lambda, n });
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Phi5Report {
    pub n: usize,
    pub elements: usize,
    pub fixed_points: usize,
    pub involution: bool,
    pub sign_reversing: bool,
    pub fixed_points_are_squares: bool,
    pub generating_function: bool,
    pub positive_parts_variant: bool,
    pub case_table: bool,
    pub case_counts: Vec<(String, usize)>,
    #[serde(serialize_with = "poly_text")]
    pub signed_sum: MPoly,
    pub witness: Option<String>,
}

fn poly_text<S: Serializer>(p: &MPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl Phi5Report {
    pub fn pass(&self) -> bool {
        self.involution
            && self.sign_reversing
            && self.fixed_points_are_squares
            && self.generating_function
            && self.positive_parts_variant
            && self.case_table
    }
}

fn signed_sum<'a>(xs: impl Iterator<Item = &'a SignedOverpartition>) -> MPoly {
    xs.map(|x| MPoly::monomial(x.sign(), x.weight() as i64, 0, 0))
        .sum()
}

/// Exhaustive check of the involution on `O_n`.
///
/// The zero-free elements of `O_n` are exactly the overpartitions with `k`
/// positive parts each at most `n - k`; their signed sum is the left side of
/// the weighted theta identity at `n - 1`, checked when `n >= 2`.
pub fn phi5_verify(n: usize) -> Phi5Report {
    let elements = o_enumerate(n);
    let traces: Vec<Result<(PhiTrace, PhiTrace)>> = elements
        .par_iter()
        .map(|x| {
            let first = phi5(x)?;
            let second = phi5(&first.output)?;
            Ok((first, second))
        })
        .collect();

    let mut witness: Option<String> = None;
    let mut note = |w: String| {
        if witness.is_none() {
            witness = Some(w);
        }
    };
    let mut involution = true;
    let mut sign_reversing = true;
    let mut case_table = true;
    let mut fixed = BTreeSet::new();
    let mut counts = std::collections::BTreeMap::new();
    for (x, t) in elements.iter().zip(&traces) {
        let (first, second) = match t {
            Ok(pair) => pair,
            Err(e) => {
                involution = false;
                note(format!("{x}: {e}"));
                continue;
            }
        };
        *counts.entry(first.case_label).or_insert(0usize) += 1;
        if second.output != *x {
            involution = false;
            note(format!("phi(phi({x})) = {}", second.output));
        }
        if !first
            .case_label
            .inverse_cases()
            .contains(&second.case_label)
        {
            case_table = false;
            note(format!(
                "{x} in case {} maps to case {}",
                first.case_label, second.case_label
            ));
        }
        let y = &first.output;
        if first.case_label == PhiCase::Fixed {
            if y != x {
                involution = false;
                note(format!("case 1 moved {x}"));
            }
            fixed.insert(x.clone());
        } else if y.sign() == x.sign() || y.weight() != x.weight() || y.k().abs_diff(x.k()) != 1 {
            sign_reversing = false;
            note(format!("{x} -> {y} does not flip sign at equal weight"));
        }
    }

    let fixed_points_are_squares = fixed == expected_fixed_points(n, false);
    if !fixed_points_are_squares {
        note(format!("fixed points of O_{n} are not the padded squares"));
    }
    let zero_free_fixed: BTreeSet<_> = fixed
        .iter()
        .filter(|x| x.lambda.zeros() == 0)
        .cloned()
        .collect();

    let total = signed_sum(elements.iter());
    let at_t1 = Assignment::new().t(1);
    let algebraic: MPoly = (0..=n as i64)
        .map(|k| {
            let b = over_binomial(n as i64 - k, k)
                .specialize(&at_t1)
                .expect("t = 1");
            if k % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .sum();
    let generating_function = total == fin_theta_rhs(n) && total == algebraic;
    if !generating_function {
        note(format!("signed sum over O_{n} is {total}"));
    }

    let positive_parts_variant = if n >= 2 {
        let zero_free: Vec<_> = elements.iter().filter(|x| x.lambda.zeros() == 0).collect();
        let sum = signed_sum(zero_free.iter().copied());
        let ok =
            sum == fine_corollary_rhs(n - 1) && zero_free_fixed == expected_fixed_points(n, true);
        if !ok {
            note(format!("zero-free signed sum over O_{n} is {sum}"));
        }
        ok
    } else {
        true
    };

    Phi5Report {
        n,
        elements: elements.len(),
        fixed_points: fixed.len(),
        involution,
        sign_reversing,
        fixed_points_are_squares,
        generating_function,
        positive_parts_variant,
        case_table,
        case_counts: PhiCase::ALL
            .iter()
            .map(|c| (c.label().to_string(), counts.get(c).copied().unwrap_or(0)))
            .collect(),
        signed_sum: total,
        witness,
    }
}

/// Signed count `sum sign * q^weight` over `O_n`, evaluated at `q = 1`.
pub fn signed_count(n: usize) -> BigInt {
    o_enumerate(n).iter().map(|x| BigInt::from(x.sign())).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so(s: &str, n: usize) -> SignedOverpartition {
        SignedOverpartition::parse(s, n).unwrap()
    }

    #[test]
    fn worked_example_both_ways() {
        let t = phi5(&so("5,5~,3,2,0", 10)).unwrap();
        assert_eq!(t.case_label, PhiCase::MuMarked);
        assert_eq!(t.output, so("4,4,3,2,2~,0", 10));
        assert_eq!(t.output.k(), 6);
        let back = phi5(&t.output).unwrap();
        assert_eq!(back.case_label, PhiCase::PiMarked);
        assert_eq!(back.output, so("5,5~,3,2,0", 10));
    }

    #[test]
    fn membership() {
        assert!(SignedOverpartition::parse("5,5~,3,2,0", 10).is_ok());
        assert!(matches!(
            SignedOverpartition::parse("6,1", 6),
            Err(Error::NotInOn(_))
        ));
        assert!(phi5(&SignedOverpartition {
            lambda: "6,1".parse().unwrap(),
            n: 6
        })
        .is_err());
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(o_enumerate(0), vec![so("()", 0)]);
        let weight_one: Vec<String> = o_enumerate(2)
            .iter()
            .filter(|x| x.weight() == 1)
            .map(|x| x.lambda().to_string())
            .collect();
        assert_eq!(weight_one, vec!["1", "1~"]);
    }

    #[test]
    fn unit_square_is_fixed() {
        let t = phi5(&so("1", 2)).unwrap();
        assert_eq!(t.case_label, PhiCase::Fixed);
        assert_eq!(t.output, t.input);
    }

    #[test]
    fn verify_small_n() {
        for n in 0..=6 {
            let r = phi5_verify(n);
            assert!(r.pass(), "n = {n}: {:?}", r.witness);
        }
        assert_eq!(phi5_verify(2).signed_sum, "1 - 2*q".parse().unwrap());
        assert_eq!(phi5_verify(3).signed_sum, MPoly::zero());
        assert_eq!(signed_count(4), BigInt::from(1));
    }
}
