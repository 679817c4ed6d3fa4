#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

use overqt_core::algebra::{gaussian, rat_eq, MPoly, Monomial, RationalMPoly, USeries};
use overqt_core::conjectures::{is_unimodal, unimodal_peak};
use overqt_core::involutions::{a_index, involution_holds, map_a, Pair};
use overqt_core::Overpartition;

pub const SEED: u64 = 0x5eed_0f0b;

pub fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0i64..5, 0u32..3, 0u32..3, -4i64..5), 0..5).prop_map(|terms| {
        MPoly::from_terms(
            terms
                .into_iter()
                .map(|(q, t, u, c)| (Monomial::new(q, t, u), c)),
        )
    })
}

/// `1 + u * p`: invertible as a series in `u`.
pub fn unit_series() -> impl Strategy<Value = MPoly> {
    mpoly().prop_map(|p| MPoly::one() + p.shift(0, 0, 1))
}

/// Fraction with denominator `1 + q * p`, never zero.
pub fn fraction() -> impl Strategy<Value = RationalMPoly> {
    (mpoly(), mpoly())
        .prop_map(|(a, d)| RationalMPoly::new(a, MPoly::one() + d.shift(1, 0, 0)).unwrap())
}

pub fn overpartition(max_part: u32, max_distinct: usize) -> impl Strategy<Value = Overpartition> {
    prop::collection::btree_map(1..=max_part, (1usize..3, any::<bool>()), 0..=max_distinct)
        .prop_map(|m| {
            let mut pairs = Vec::new();
            for (&v, &(mult, over)) in m.iter().rev() {
                for i in 0..mult {
                    pairs.push((v, over && i + 1 == mult));
                }
            }
            Overpartition::from_pairs(&pairs).unwrap()
        })
}

pub fn pair_with_indices() -> impl Strategy<Value = (Pair, usize, usize)> {
    (
        overpartition(12, 5),
        overpartition(12, 5),
        1usize..5,
        0usize..4,
    )
        .prop_map(|(a, b, k, d)| ((a, b), k, k + d))
}

/// A weakly rising run followed by a weakly falling run.
pub fn unimodal_seq() -> impl Strategy<Value = Vec<u32>> {
    (
        0u32..5,
        prop::collection::vec(0u32..4, 0..8),
        prop::collection::vec(0u32..4, 0..8),
    )
        .prop_map(|(start, up, down)| {
            let mut seq = vec![start];
            for d in up {
                seq.push(seq.last().unwrap() + d);
            }
            for d in down {
                let x = *seq.last().unwrap();
                seq.push(x.saturating_sub(d));
            }
            seq
        })
}

/// Some value strictly below both a left and a right neighbour value.
pub fn valley_seq() -> impl Strategy<Value = Vec<u32>> {
    (
        prop::collection::vec(0u32..10, 0..5),
        0u32..5,
        1u32..5,
        1u32..5,
        prop::collection::vec(0u32..10, 0..5),
    )
        .prop_map(|(pre, low, l, r, post)| {
            let mut seq = pre;
            seq.extend([low + l, low, low + r]);
            seq.extend(post);
            seq
        })
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

pub fn ring_axioms((a, b, c): (MPoly, MPoly, MPoly)) -> Result<(), TestCaseError> {
    check(&a + &b == &b + &a, "addition commutes")?;
    check(&a * &b == &b * &a, "multiplication commutes")?;
    check(&(&a + &b) + &c == &a + &(&b + &c), "addition associates")?;
    check(
        &(&a * &b) * &c == &a * &(&b * &c),
        "multiplication associates",
    )?;
    check(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributes")?;
    check((&a - &a.clone()).is_zero(), "a - a = 0")?;
    check(&a * &MPoly::one() == a, "unit")?;
    check(&a + &(-&a) == MPoly::zero(), "negation")?;
    let text: MPoly = a
        .to_string()
        .parse()
        .map_err(|e| TestCaseError::fail(format!("{e}")))?;
    check(text == a, "text round trip")?;
    let json: MPoly = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
    check(json == a, "json round trip")
}

pub fn gaussian_laws((n, k): (i64, i64)) -> Result<(), TestCaseError> {
    check(gaussian(n, k) == gaussian(n, n - k), "symmetry")?;
    if n > 0 {
        let rec = gaussian(n - 1, k - 1) + gaussian(n - 1, k).shift(k, 0, 0);
        check(gaussian(n, k) == rec, "q-Pascal")?;
        let other = gaussian(n - 1, k) + gaussian(n - 1, k - 1).shift(n - k, 0, 0);
        check(gaussian(n, k) == other, "second q-Pascal")?;
    }
    Ok(())
}

pub fn series_inverse((p, order): (MPoly, usize)) -> Result<(), TestCaseError> {
    let s = USeries::from_poly(&p, order);
    let inv = s
        .invert()
        .map_err(|e| TestCaseError::fail(format!("{e}")))?;
    check(s.mul(&inv) == USeries::one(order), "s * s^-1 = 1")?;
    let back = inv
        .invert()
        .map_err(|e| TestCaseError::fail(format!("{e}")))?;
    check(back == s, "double inverse")
}

pub fn rat_eq_laws((x, c, e): (RationalMPoly, MPoly, MPoly)) -> Result<(), TestCaseError> {
    let scale = MPoly::one() + c.shift(1, 0, 0);
    let y = RationalMPoly::new(x.num() * &scale, x.den() * &scale).unwrap();
    let scale2 = MPoly::one() + e.shift(0, 1, 0);
    let z = RationalMPoly::new(y.num() * &scale2, y.den() * &scale2).unwrap();
    check(rat_eq(&x, &x), "reflexive")?;
    check(rat_eq(&x, &y) && rat_eq(&y, &x), "symmetric")?;
    check(rat_eq(&y, &z) && rat_eq(&x, &z), "transitive")?;
    let shifted = x.add(&RationalMPoly::from_poly(MPoly::one()));
    check(!rat_eq(&x, &shifted), "x != x + 1")
}

pub fn checker_accepts(seq: Vec<u32>) -> Result<(), TestCaseError> {
    let peak = unimodal_peak(&seq);
    check(peak.is_some(), "rise then fall is unimodal")?;
    let p = peak.unwrap();
    check(
        seq.is_empty() || seq[p] == *seq.iter().max().unwrap(),
        "peak is a maximum",
    )
}

pub fn checker_rejects(seq: Vec<u32>) -> Result<(), TestCaseError> {
    check(!is_unimodal(&seq), "strict valley is not unimodal")
}

pub fn a_is_involution((p, k, l): (Pair, usize, usize)) -> Result<(), TestCaseError> {
    check(involution_holds(&p, k, l), "A and L square to the identity")?;
    let a = map_a(&p, k, l).unwrap();
    let s = (l - k + 1) as u32;
    check(
        a_index(&a.0, &a.1, s) == a_index(&p.0, &p.1, s),
        "index kept",
    )
}

/// Runs one property under a fixed seed; returns the number of cases executed.
pub fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    let mut runner = TestRunner::new(config(cases));
    runner.run(&strategy, test).map_err(|e| e.to_string())?;
    Ok(cases)
}
