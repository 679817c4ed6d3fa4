use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{MPoly, Monomial};
use crate::combinatorics::{enumerate_overpartitions, Overpartition, Part};
use crate::error::{Error, Result};
use crate::overbinomial::over_binomial;

pub type Pair = (Overpartition, Overpartition);

/// Default number of random pairs for the involution sample.
pub const DEFAULT_SAMPLE: usize = 10_000;

fn shift_of(k: usize, l: usize) -> Result<u32> {
    if k == 0 || l < k {
        return Err(Error::BadIndices(format!(
            "need 0 < k <= l, got k = {k}, l = {l}"
        )));
    }
    Ok((l - k + 1) as u32)
}

/// Largest `i` with `lambda_i - mu_{i+1} >= s`, or `>= s + 1` when
/// `lambda_i` is overlined; zero if there is none.
pub fn a_index(lambda: &Overpartition, mu: &Overpartition, s: u32) -> usize {
    let parts = lambda.parts();
    (1..=parts.len())
        .rev()
        .find(|&i| {
            let p = parts[i - 1];
            let need = i64::from(s) + i64::from(p.overlined);
            i64::from(p.value) - i64::from(mu.value_at(i + 1)) >= need
        })
        .unwrap_or(0)
}

fn build(parts: Vec<Part>, what: &str) -> Result<Overpartition> {
    let parts: Vec<Part> = parts.into_iter().filter(|p| p.value > 0).collect();
    Overpartition::new(parts, 0).map_err(|e| Error::IllFormedImage(format!("{what}: {e}")))
}

/// The prefix exchange with shift `s = l - k + 1`.
pub fn map_a(pair: &Pair, k: usize, l: usize) -> Result<Pair> {
    let s = shift_of(k, l)?;
    let (lambda, mu) = pair;
    if lambda.zeros() > 0 || mu.zeros() > 0 {
        return Err(Error::BadIndices("pairs must not carry zero parts".into()));
    }
    let i_max = a_index(lambda, mu, s);
    let mu_at = |i: usize| mu.parts().get(i).copied().unwrap_or(Part::plain(0));
    let mut gamma: Vec<Part> = (0..i_max)
        .map(|i| {
            let p = mu_at(i);
            Part {
                value: p.value + s,
                overlined: p.overlined,
            }
        })
        .collect();
    gamma.extend_from_slice(&lambda.parts()[i_max..]);
    let mut tau: Vec<Part> = lambda.parts()[..i_max]
        .iter()
        .map(|p| Part {
            value: p.value - s,
            overlined: p.overlined,
        })
        .collect();
    tau.extend(mu.parts().iter().skip(i_max).copied());
    Ok((build(gamma, "gamma")?, build(tau, "tau")?))
}

pub fn map_s(pair: &Pair) -> Pair {
    (pair.1.clone(), pair.0.clone())
}

pub fn map_c(pair: &Pair) -> Pair {
    (pair.0.conjugate(), pair.1.conjugate())
}

/// `S . C . A . C . S`.
pub fn map_l(pair: &Pair, k: usize, l: usize) -> Result<Pair> {
    let p = map_c(&map_s(pair));
    let p = map_a(&p, k, l)?;
    Ok(map_s(&map_c(&p)))
}

/// The injection `L . A`.
pub fn phi6(pair: &Pair, k: usize, l: usize) -> Result<Pair> {
    map_l(&map_a(pair, k, l)?, k, l)
}

/// Every intermediate pair of `S C A C S A`, labelled by the map just applied.
pub fn phi6_chain(pair: &Pair, k: usize, l: usize) -> Result<Vec<(&'static str, Pair)>> {
    let mut steps = vec![("input", pair.clone())];
    let a = map_a(pair, k, l)?;
    steps.push(("A", a.clone()));
    let s = map_s(&a);
    steps.push(("S", s.clone()));
    let c = map_c(&s);
    steps.push(("C", c.clone()));
    let a2 = map_a(&c, k, l)?;
    steps.push(("A", a2.clone()));
    let c2 = map_c(&a2);
    steps.push(("C", c2.clone()));
    steps.push(("S", map_s(&c2)));
    Ok(steps)
}

fn fits(pair: &Pair, (m1, n1): (usize, usize), (m2, n2): (usize, usize)) -> bool {
    pair.0.fits(m1 as u32, n1) && pair.1.fits(m2 as u32, n2)
}

fn stats(pair: &Pair) -> (u64, usize) {
    (
        pair.0.weight() + pair.1.weight(),
        pair.0.overline_count() + pair.1.overline_count(),
    )
}

fn box_pairs(a: (usize, usize), b: (usize, usize)) -> Vec<Pair> {
    let right: Vec<Overpartition> = enumerate_overpartitions(b.0 as u32, b.1).collect();
    enumerate_overpartitions(a.0 as u32, a.1)
        .flat_map(|x| right.iter().map(move |y| (x.clone(), y.clone())))
        .collect()
}

fn gf(pairs: &[Pair]) -> MPoly {
    MPoly::from_terms(pairs.iter().map(|p| {
        let (w, o) = stats(p);
        (Monomial::new(w as i64, o as u32, 0), 1)
    }))
}

/// A random overpartition with at most `max_len` parts, each at most `max_part`.
pub fn random_overpartition(rng: &mut impl Rng, max_len: usize, max_part: u32) -> Overpartition {
    let len = rng.gen_range(0..=max_len);
    let mut values: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut parts: Vec<Part> = values.into_iter().map(Part::plain).collect();
    for i in 0..parts.len() {
        let last = parts.get(i + 1).is_none_or(|q| q.value != parts[i].value);
        if last && rng.gen_bool(0.5) {
            parts[i].overlined = true;
        }
    }
    Overpartition::new(parts, 0).expect("sorted, marks on last occurrences")
}

fn pair_text<S: Serializer>(p: &Option<Pair>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match p {
        Some((a, b)) => s.serialize_str(&format!("({a}) ({b})")),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Phi6Report {
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub domain_size: usize,
    pub lands_in_codomain: bool,
    pub injective: bool,
    pub preserves_statistics: bool,
    pub sample_size: usize,
    pub seed: u64,
    pub involutions_on_sample: bool,
    pub containment_a: bool,
    pub containment_l: bool,
    pub generating_functions: bool,
    #[serde(serialize_with = "pair_text")]
    pub witness_pair: Option<Pair>,
    pub witness: Option<String>,
}

impl Phi6Report {
    pub fn pass(&self) -> bool {
        self.lands_in_codomain
            && self.injective
            && self.preserves_statistics
            && self.involutions_on_sample
            && self.containment_a
            && self.containment_l
            && self.generating_functions
    }
}

/// Exhaustive check of `L . A` on its domain plus a random involution sample.
pub fn phi6_verify(n: usize, k: usize, l: usize) -> Result<Phi6Report> {
    phi6_verify_with(n, k, l, DEFAULT_SAMPLE, 0)
}

pub fn phi6_verify_with(
    n: usize,
    k: usize,
    l: usize,
    sample: usize,
    seed: u64,
) -> Result<Phi6Report> {
    if !(0 < k && k <= l && l < n) {
        return Err(Error::BadIndices(format!(
            "need 0 < k <= l < n, got n = {n}, k = {k}, l = {l}"
        )));
    }
    let dom = ((n - k + 1, k - 1), (n - l - 1, l + 1));
    let mid = ((n - k, k - 1), (n - l, l + 1));
    let cod = ((n - k, k), (n - l, l));

    let mut report = Phi6Report {
        n,
        k,
        l,
        domain_size: 0,
        lands_in_codomain: true,
        injective: true,
        preserves_statistics: true,
        sample_size: sample,
        seed,
        involutions_on_sample: true,
        containment_a: true,
        containment_l: true,
        generating_functions: true,
        witness_pair: None,
        witness: None,
    };
    let fail = |r: &mut Phi6Report, p: &Pair, msg: String| {
        if r.witness.is_none() {
            r.witness_pair = Some(p.clone());
            r.witness = Some(msg);
        }
    };

    let domain = box_pairs(dom.0, dom.1);
    report.domain_size = domain.len();
    let images: Vec<Result<(Pair, Pair)>> = domain
        .par_iter()
        .map(|p| {
            let a = map_a(p, k, l)?;
            let img = map_l(&a, k, l)?;
            Ok((a, img))
        })
        .collect();
    let mut seen: HashSet<Pair> = HashSet::with_capacity(domain.len());
    let mut image_pairs = Vec::with_capacity(domain.len());
    for (p, r) in domain.iter().zip(images) {
        let (a, img) = match r {
            Ok(x) => x,
            Err(e) => {
                report.lands_in_codomain = false;
                fail(&mut report, p, e.to_string());
                continue;
            }
        };
        if !fits(&a, mid.0, mid.1) {
            report.containment_a = false;
            fail(
                &mut report,
                p,
                format!("A image ({}) ({}) escapes", a.0, a.1),
            );
        }
        if !fits(&img, cod.0, cod.1) {
            report.lands_in_codomain = false;
            fail(
                &mut report,
                p,
                format!("image ({}) ({}) escapes", img.0, img.1),
            );
        }
        if stats(&img) != stats(p) || stats(&a) != stats(p) {
            report.preserves_statistics = false;
            fail(&mut report, p, "weight or overline count changed".into());
        }
        if !seen.insert(img.clone()) {
            report.injective = false;
            fail(
                &mut report,
                p,
                format!("image ({}) ({}) hit twice", img.0, img.1),
            );
        }
        image_pairs.push(img);
    }

    let middle = box_pairs(mid.0, mid.1);
    let bad_l = middle.par_iter().find_first(|p| match map_l(p, k, l) {
        Ok(img) => !fits(&img, cod.0, cod.1),
        Err(_) => true,
    });
    if let Some(p) = bad_l {
        report.containment_l = false;
        fail(&mut report, p, "L leaves the codomain".into());
    }

    let domain_gf = gf(&domain);
    let expected_domain = over_binomial(dom.0 .0 as i64, dom.0 .1 as i64)
        * over_binomial(dom.1 .0 as i64, dom.1 .1 as i64);
    let codomain_gf = over_binomial(cod.0 .0 as i64, cod.0 .1 as i64)
        * over_binomial(cod.1 .0 as i64, cod.1 .1 as i64);
    let diff = &codomain_gf - &domain_gf;
    let nonneg = diff
        .terms()
        .all(|(_, c)| c.sign() != num_bigint::Sign::Minus);
    if domain_gf != expected_domain || gf(&image_pairs) != domain_gf || !nonneg {
        report.generating_functions = false;
        if report.witness.is_none() {
            report.witness = Some(format!("codomain minus domain = {diff}"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<Pair> = (0..sample)
        .map(|_| {
            (
                random_overpartition(&mut rng, 8, 12),
                random_overpartition(&mut rng, 8, 12),
            )
        })
        .collect();
    let bad = pairs.par_iter().find_first(|p| !involution_holds(p, k, l));
    if let Some(p) = bad {
        report.involutions_on_sample = false;
        fail(&mut report, p, "A or L is not an involution here".into());
    }
    Ok(report)
}

/// `A` and `L` square to the identity at `p`, and `A` keeps the index `I`.
pub fn involution_holds(p: &Pair, k: usize, l: usize) -> bool {
    let s = (l - k + 1) as u32;
    let check = || -> Result<bool> {
        let a = map_a(p, k, l)?;
        let same_index = a_index(&a.0, &a.1, s) == a_index(&p.0, &p.1, s);
        let ll = map_l(&map_l(p, k, l)?, k, l)?;
        Ok(same_index && map_a(&a, k, l)? == *p && ll == *p && stats(&a) == stats(p))
    };
    check().unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> Pair {
        (op(a), op(b))
    }

    #[test]
    fn worked_example_chain() {
        let p = pair("7~,6,4", "4,4~,3,3,2,2");
        assert_eq!(map_a(&p, 4, 5).unwrap(), pair("6,6~,4", "5~,4,3,3,2,2"));
        let chain = phi6_chain(&p, 4, 5).unwrap();
        let expect = [
            pair("7~,6,4", "4,4~,3,3,2,2"),
            pair("6,6~,4", "5~,4,3,3,2,2"),
            pair("5~,4,3,3,2,2", "6,6~,4"),
            pair("6,6,4,2,1~", "3,3,3,3,2,2~"),
            pair("5,5,4,2,1~", "4,4,3,3,2,2~"),
            pair("5~,4,3,3,2", "6,6~,4,2"),
            pair("6,6~,4,2", "5~,4,3,3,2"),
        ];
        for ((_, got), want) in chain.iter().zip(expect.iter()) {
            assert_eq!(got, want);
        }
        let img = phi6(&p, 4, 5).unwrap();
        assert!(fits(&img, (6, 4), (5, 5)));
    }

    #[test]
    fn s_and_c_are_involutions() {
        let p = pair("5~,4,3,3,2,2", "6,6~,4");
        assert_eq!(map_s(&map_s(&p)), p);
        assert_eq!(map_c(&map_c(&p)), p);
    }

    #[test]
    fn index_is_zero_without_gap() {
        assert_eq!(a_index(&op("1"), &op("1"), 1), 1);
        assert_eq!(a_index(&op("1"), &op("1"), 2), 0);
        assert_eq!(a_index(&op("2~"), &op("1"), 2), 0);
        assert_eq!(a_index(&Overpartition::empty(), &op("3"), 1), 0);
        let p = pair("1", "1");
        assert_eq!(map_a(&p, 1, 2).unwrap(), p);
        assert_eq!(map_a(&p, 1, 1).unwrap(), pair("2", "()"));
    }

    #[test]
    fn bad_indices() {
        assert!(matches!(
            map_a(&pair("1", "1"), 3, 2),
            Err(Error::BadIndices(_))
        ));
        assert!(phi6_verify(3, 0, 1).is_err());
    }

    #[test]
    fn trivial_domain() {
        let r = phi6_verify_with(2, 1, 1, 100, 1).unwrap();
        assert_eq!(r.domain_size, 1);
        assert!(r.pass(), "{:?}", r.witness);
    }

    #[test]
    fn exhaustive_small() {
        let r = phi6_verify_with(5, 2, 3, 500, 7).unwrap();
        assert!(r.pass(), "{:?}", r.witness);
    }
}
