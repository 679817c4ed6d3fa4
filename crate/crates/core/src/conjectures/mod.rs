//! Scanners for the open unimodality and positivity statements. A scan only
//! ever reports what holds up to the bound it was given.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::MPoly;
use crate::error::{Error, Result};
use crate::overbinomial::over_binomial;

/// Default truncation order for the Prellberg-type series.
pub const DEFAULT_PRELLBERG_ORDER: usize = 50;

/// Index of the first maximum if `seq` rises weakly to it and then falls
/// weakly; `None` otherwise. The empty sequence has peak 0.
pub fn unimodal_peak<T: Ord>(seq: &[T]) -> Option<usize> {
    let mut i = 0;
    while i + 1 < seq.len() && seq[i] <= seq[i + 1] {
        i += 1;
    }
    let top = i;
    while i + 1 < seq.len() && seq[i] >= seq[i + 1] {
        i += 1;
    }
    if i + 1 < seq.len() {
        return None;
    }
    Some(
        seq.iter()
            .position(|x| Some(x) == seq.get(top))
            .unwrap_or(0),
    )
}

pub fn is_unimodal<T: Ord>(seq: &[T]) -> bool {
    unimodal_peak(seq).is_some()
}

/// Position of the first interior dip, the witness against unimodality.
pub fn first_valley<T: Ord>(seq: &[T]) -> Option<usize> {
    let mut falling = false;
    for i in 1..seq.len() {
        if seq[i] < seq[i - 1] {
            falling = true;
        } else if seq[i] > seq[i - 1] && falling {
            return Some(i - 1);
        }
    }
    None
}

/// Positions `i` with `seq[i] == seq[i+1]`, ignoring ties at the maximum.
pub fn non_strict_steps<T: Ord>(seq: &[T]) -> Vec<usize> {
    let max = seq.iter().max();
    (0..seq.len().saturating_sub(1))
        .filter(|&i| seq[i] == seq[i + 1] && Some(&seq[i]) != max)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScanKind {
    DoubleUnimodal,
    UnimodalT1,
    Strict,
    Prellberg,
}

impl ScanKind {
    pub const ALL: [ScanKind; 4] = [
        ScanKind::DoubleUnimodal,
        ScanKind::UnimodalT1,
        ScanKind::Strict,
        ScanKind::Prellberg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScanKind::DoubleUnimodal => "double-unimodal",
            ScanKind::UnimodalT1 => "unimodal-t1",
            ScanKind::Strict => "strict",
            ScanKind::Prellberg => "prellberg",
        }
    }
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ScanKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown scan {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub conjecture_id: String,
    pub parameter: String,
    pub holds: bool,
    pub detail: String,
}

impl ScanResult {
    pub fn csv_header() -> &'static str {
        "conjecture_id,parameter,holds,detail"
    }

    pub fn to_csv(&self) -> String {
        format!(
            "{},\"{}\",{},\"{}\"",
            self.conjecture_id,
            self.parameter,
            self.holds,
            self.detail.replace('"', "\"\"")
        )
    }
}

/// Coefficients of `t^k` in `B(m,n)` as a sequence in `q^0 .. q^{mn}`.
fn q_row(b: &MPoly, k: u32, len: usize) -> Vec<BigInt> {
    (0..len).map(|w| b.coeff_tq(k, w as i64)).collect()
}

/// Coefficients of `q^w` as a sequence in `t^0 .. t^{max}`, trailing zeros cut.
fn t_column(b: &MPoly, w: i64, max_t: u32) -> Vec<BigInt> {
    let mut col: Vec<BigInt> = (0..=max_t).map(|k| b.coeff_tq(k, w)).collect();
    while col.len() > 1 && col.last().is_some_and(|c| c.is_zero()) {
        col.pop();
    }
    col
}

fn at_t1(b: &MPoly, len: usize) -> Vec<BigInt> {
    let mut seq = vec![BigInt::zero(); len];
    for (m, c) in b.terms() {
        seq[m.q as usize] += c;
    }
    seq
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn show(seq: &[BigInt]) -> String {
    seq.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn scan_cell(kind: ScanKind, m: usize, n: usize) -> ScanResult {
    let b = over_binomial(m as i64, n as i64);
    let len = m * n + 1;
    let max_t = b.max_t().unwrap_or(0);
    let parameter = format!("m={m},n={n}");
    let (holds, detail) = match kind {
        ScanKind::DoubleUnimodal => {
            let mut q_peaks = Vec::new();
            let mut t_peaks = Vec::new();
            let mut bad = None;
            for k in 0..=max_t {
                let row = q_row(&b, k, len);
                let first = row.iter().position(|c| !c.is_zero()).unwrap_or(0);
                let last = row.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
                match unimodal_peak(&row[first..=last]) {
                    Some(p) => q_peaks.push(first + p),
                    None if bad.is_none() => {
                        let v = first + first_valley(&row[first..=last]).unwrap_or(0);
                        bad = Some(format!(
                            "t^{k} row not unimodal in q: valley at q^{v} in [{}]",
                            show(&row)
                        ));
                    }
                    None => {}
                }
            }
            for w in 0..len {
                let col = t_column(&b, w as i64, max_t);
                match unimodal_peak(&col) {
                    Some(p) => t_peaks.push(p),
                    None if bad.is_none() => {
                        let v = first_valley(&col).unwrap_or(0);
                        bad = Some(format!(
                            "q^{w} column not unimodal in t: valley at t^{v} in [{}]",
                            show(&col)
                        ));
                    }
                    None => {}
                }
            }
            match bad {
                Some(d) => (false, d),
                None => (
                    true,
                    format!(
                        "q-peaks by t^k: {}; t-peaks by q^N: {}",
                        join(&q_peaks),
                        join(&t_peaks)
                    ),
                ),
            }
        }
        ScanKind::UnimodalT1 => {
            let seq = at_t1(&b, len);
            match unimodal_peak(&seq) {
                Some(p) => (true, format!("peak at q^{p} = {}", seq[p])),
                None => {
                    let v = first_valley(&seq).unwrap_or(0);
                    (
                        false,
                        format!("valley at q^{v} = {} in [{}]", seq[v], show(&seq)),
                    )
                }
            }
        }
        ScanKind::Strict => {
            let seq = at_t1(&b, len);
            let mut notes = Vec::new();
            let mut holds = is_unimodal(&seq);
            let ties = non_strict_steps(&seq);
            if !ties.is_empty() {
                holds = false;
                notes.push(format!("t=1 ties at q^{}", join(&ties)));
            }
            for w in 0..len {
                let col = t_column(&b, w as i64, max_t);
                let ties = non_strict_steps(&col);
                if !is_unimodal(&col) || !ties.is_empty() {
                    holds = false;
                    notes.push(format!("q^{w} column ties at t^{}", join(&ties)));
                }
            }
            if notes.is_empty() {
                notes.push("no ties below the peaks".into());
            }
            (holds, notes.join("; "))
        }
        ScanKind::Prellberg => unreachable!("handled by scan_prellberg"),
    };
    ScanResult {
        conjecture_id: kind.name().to_string(),
        parameter,
        holds,
        detail,
    }
}

/// Scans every `(m, n)` with `m + n <= max_mn`, ordered by `m` then `n`.
pub fn scan_unimodality(kind: ScanKind, max_mn: usize) -> Result<Vec<ScanResult>> {
    if kind == ScanKind::Prellberg {
        return Err(Error::BadIndices(
            "use scan_prellberg for the series scan".into(),
        ));
    }
    let cells: Vec<(usize, usize)> = (0..=max_mn)
        .flat_map(|m| (0..=max_mn - m).map(move |n| (m, n)))
        .collect();
    Ok(cells
        .par_iter()
        .map(|&(m, n)| scan_cell(kind, m, n))
        .collect())
}

/// Coefficients of `(1-q) (-q^n; q)_n / (q^n; q)_n + q` through `q^order`.
pub fn prellberg_series(n: usize, order: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::from(1);
    if order >= 1 {
        c[1] = BigInt::from(-1);
    }
    for j in 0..n {
        let a = n + j;
        for i in (a..=order).rev() {
            let lower = c[i - a].clone();
            c[i] += lower;
        }
    }
    for j in 0..n {
        let a = n + j;
        if a == 0 {
            continue;
        }
        for i in a..=order {
            let lower = c[i - a].clone();
            c[i] += lower;
        }
    }
    if order >= 1 {
        c[1] += 1;
    }
    c
}

/// Reports the first negative coefficient through `q^order`, for `n = 1..=max_n`.
pub fn scan_prellberg(max_n: usize, order: usize) -> Vec<ScanResult> {
    (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let c = prellberg_series(n, order);
            let neg = c.iter().position(|x| x.is_negative());
            let (holds, detail) = match neg {
                Some(i) => (false, format!("coefficient of q^{i} is {}", c[i])),
                None => (true, format!("nonnegative through q^{order}")),
            };
            ScanResult {
                conjecture_id: ScanKind::Prellberg.name().to_string(),
                parameter: format!("n={n},K={order}"),
                holds,
                detail,
            }
        })
        .collect()
}
