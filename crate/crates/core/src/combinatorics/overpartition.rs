use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One entry of an overpartition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    #[serde(rename = "v")]
    pub value: u32,
    #[serde(rename = "o")]
    pub overlined: bool,
}

impl Part {
    pub fn plain(value: u32) -> Self {
        Part {
            value,
            overlined: false,
        }
    }

    pub fn over(value: u32) -> Self {
        Part {
            value,
            overlined: true,
        }
    }
}

/// Weakly decreasing positive parts, where only the last occurrence of a
/// value may be overlined, followed by `zeros` non-overlined zero parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawOverpartition")]
pub struct Overpartition {
    parts: Vec<Part>,
    zeros: usize,
}

#[derive(Deserialize)]
struct RawOverpartition {
    parts: Vec<Part>,
    #[serde(default)]
    zeros: usize,
}

impl TryFrom<RawOverpartition> for Overpartition {
    type Error = Error;
    fn try_from(raw: RawOverpartition) -> Result<Self> {
        Overpartition::new(raw.parts, raw.zeros)
    }
}

/// `(weight, overline_count, num_parts, largest_part)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OpStats {
    pub weight: u64,
    pub overline_count: usize,
    pub num_parts: usize,
    pub largest_part: u32,
}

impl Overpartition {
    pub fn empty() -> Self {
        Overpartition::default()
    }

    /// Validates and builds. `parts` must not contain zeros; pass them as `zeros`.
    pub fn new(parts: Vec<Part>, zeros: usize) -> Result<Self> {
        let op = Overpartition { parts, zeros };
        op.validate()?;
        Ok(op)
    }

    /// Builds from `(value, overlined)` pairs, where zero values become zero parts.
    pub fn from_pairs(pairs: &[(u32, bool)]) -> Result<Self> {
        let mut parts = Vec::new();
        let mut zeros = 0;
        for &(v, o) in pairs {
            if v == 0 {
                if o {
                    return Err(Error::Parse("zero parts cannot be overlined".into()));
                }
                zeros += 1;
            } else {
                if zeros > 0 {
                    return Err(Error::Parse("zero parts must come last".into()));
                }
                parts.push(Part {
                    value: v,
                    overlined: o,
                });
            }
        }
        Overpartition::new(parts, zeros)
    }

    /// Plain partition, no overlines.
    pub fn plain(values: &[u32]) -> Result<Self> {
        let pairs: Vec<_> = values.iter().map(|&v| (v, false)).collect();
        Overpartition::from_pairs(&pairs)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<Part>, zeros: usize) -> Self {
        debug_assert!(Overpartition {
            parts: parts.clone(),
            zeros
        }
        .validate()
        .is_ok());
        Overpartition { parts, zeros }
    }

    pub fn validate(&self) -> Result<()> {
        for (i, p) in self.parts.iter().enumerate() {
            if p.value == 0 {
                return Err(Error::Parse("zero stored as a positive part".into()));
            }
            if let Some(next) = self.parts.get(i + 1) {
                if next.value > p.value {
                    return Err(Error::Parse(format!("parts not weakly decreasing: {self}")));
                }
                if next.value == p.value && p.overlined {
                    return Err(Error::Parse(format!(
                        "overline on a non-final occurrence of {}: {self}",
                        p.value
                    )));
                }
            }
        }
        Ok(())
    }

    /// Positive parts, largest first.
    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn zeros(&self) -> usize {
        self.zeros
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty() && self.zeros == 0
    }

    pub fn num_positive(&self) -> usize {
        self.parts.len()
    }

    /// Number of parts, zero parts included.
    pub fn num_parts(&self) -> usize {
        self.parts.len() + self.zeros
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }

    pub fn overline_count(&self) -> usize {
        self.parts.iter().filter(|p| p.overlined).count()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().map_or(0, |p| p.value)
    }

    pub fn stats(&self) -> OpStats {
        OpStats {
            weight: self.weight(),
            overline_count: self.overline_count(),
            num_parts: self.num_parts(),
            largest_part: self.largest(),
        }
    }

    /// `i`-th part (1-based), zero past the end.
    pub fn value_at(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).map_or(0, |p| p.value)
    }

    /// Largest part `<= m` and at most `n` parts.
    pub fn fits(&self, m: u32, n: usize) -> bool {
        self.largest() <= m && self.num_parts() <= n
    }

    /// The same overpartition with its zero parts dropped.
    pub fn positive(&self) -> Overpartition {
        Overpartition {
            parts: self.parts.clone(),
            zeros: 0,
        }
    }

    pub fn with_zeros(&self, zeros: usize) -> Overpartition {
        Overpartition {
            parts: self.parts.clone(),
            zeros,
        }
    }

    /// Inserts a part where the overline invariant survives: an overlined
    /// copy of `v` goes after the plain copies of `v`, a plain copy goes
    /// before them (and so before any overlined copy).
    pub fn insert(&mut self, part: Part) -> Result<()> {
        if part.value == 0 {
            if part.overlined {
                return Err(Error::IllFormedImage("overlined zero part".into()));
            }
            self.zeros += 1;
            return Ok(());
        }
        let start = self
            .parts
            .iter()
            .take_while(|p| p.value > part.value)
            .count();
        let end = start
            + self.parts[start..]
                .iter()
                .take_while(|p| p.value == part.value)
                .count();
        if part.overlined {
            if end > start && self.parts[end - 1].overlined {
                return Err(Error::IllFormedImage(format!(
                    "second overlined {} in {self}",
                    part.value
                )));
            }
            self.parts.insert(end, part);
        } else {
            self.parts.insert(start, part);
        }
        Ok(())
    }

    /// Removes and returns the smallest positive part (the last entry).
    pub fn pop_smallest(&mut self) -> Option<Part> {
        self.parts.pop()
    }

    /// Last positive entry.
    pub fn smallest(&self) -> Option<Part> {
        self.parts.last().copied()
    }

    /// Second-to-last positive entry; equal values count separately.
    pub fn second_smallest(&self) -> Option<Part> {
        self.parts.len().checked_sub(2).map(|i| self.parts[i])
    }

    pub(crate) fn set_overline(&mut self, idx: usize, on: bool) {
        self.parts[idx].overlined = on;
    }

    /// Conjugate via the corner bijection: the final occurrence of value `v`
    /// at row `r` corresponds to the final occurrence of value `r` at row
    /// `v` in the conjugate, and the overline travels along. Zero parts are
    /// ignored.
    pub fn conjugate(&self) -> Overpartition {
        let largest = self.largest() as usize;
        let mut conj: Vec<Part> = Vec::with_capacity(largest);
        let mut count = self.parts.len();
        for j in 1..=largest as u32 {
            while count > 0 && self.parts[count - 1].value < j {
                count -= 1;
            }
            conj.push(Part::plain(count as u32));
        }
        for p in &self.parts {
            if p.overlined {
                conj[p.value as usize - 1].overlined = true;
            }
        }
        Overpartition {
            parts: conj,
            zeros: 0,
        }
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("()");
        }
        let mut items: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                if p.overlined {
                    format!("{}~", p.value)
                } else {
                    p.value.to_string()
                }
            })
            .collect();
        items.extend(std::iter::repeat_n("0".to_string(), self.zeros));
        f.write_str(&items.join(","))
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    /// Parses `5,5~,3,2,0`; `()` or the empty string is the empty overpartition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Overpartition::empty());
        }
        let mut pairs = Vec::new();
        for item in s.split(',') {
            let item = item.trim();
            let (digits, over) = match item.strip_suffix('~') {
                Some(d) => (d, true),
                None => (item, false),
            };
            let v: u32 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("bad part {item:?}")))?;
            pairs.push((v, over));
        }
        Overpartition::from_pairs(&pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(s: &str) -> Overpartition {
        s.parse().unwrap()
    }

    #[test]
    fn text_roundtrip() {
        let x = op("5,5~,3,2,0");
        assert_eq!(x.to_string(), "5,5~,3,2,0");
        assert_eq!(x.zeros(), 1);
        assert_eq!(op("()"), Overpartition::empty());
        assert_eq!(Overpartition::empty().to_string(), "()");
    }

    #[test]
    fn invalid_rejected() {
        assert!("5~,5".parse::<Overpartition>().is_err());
        assert!("2,3".parse::<Overpartition>().is_err());
        assert!("2,0~".parse::<Overpartition>().is_err());
        assert!("2,0,1".parse::<Overpartition>().is_err());
        assert!("x".parse::<Overpartition>().is_err());
    }

    #[test]
    fn stats_examples() {
        let s = op("2,2~,0").stats();
        assert_eq!(
            (s.weight, s.overline_count, s.num_parts, s.largest_part),
            (4, 1, 3, 2)
        );
        let s = Overpartition::empty().stats();
        assert_eq!(
            (s.weight, s.overline_count, s.num_parts, s.largest_part),
            (0, 0, 0, 0)
        );
        let s = op("7~,6,4").stats();
        assert_eq!(
            (s.weight, s.overline_count, s.num_parts, s.largest_part),
            (17, 1, 3, 7)
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(op("2,2~").conjugate(), op("2,2~"));
        assert_eq!(op("3~").conjugate(), op("1,1,1~"));
        assert_eq!(op("3").conjugate(), op("1,1,1"));
        assert_eq!(Overpartition::empty().conjugate(), Overpartition::empty());
        assert_eq!(op("5~,4,3,3,2,2").conjugate(), op("6,6,4,2,1~"));
        assert_eq!(op("6,6~,4").conjugate(), op("3,3,3,3,2,2~"));
    }

    #[test]
    fn insertion_rule() {
        let mut x = op("3,2,2,1");
        x.insert(Part::over(2)).unwrap();
        assert_eq!(x, op("3,2,2,2~,1"));
        x.insert(Part::plain(2)).unwrap();
        assert_eq!(x, op("3,2,2,2,2~,1"));
        assert!(x.insert(Part::over(2)).is_err());
        x.insert(Part::plain(0)).unwrap();
        assert_eq!(x.zeros(), 1);
        let mut y = Overpartition::empty();
        y.insert(Part::over(4)).unwrap();
        assert_eq!(y, op("4~"));
    }

    #[test]
    fn json_shape() {
        let x = op("5,5~,0");
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(
            s,
            r#"{"parts":[{"v":5,"o":false},{"v":5,"o":true}],"zeros":1}"#
        );
        let back: Overpartition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Overpartition>(
            r#"{"parts":[{"v":5,"o":true},{"v":5,"o":false}]}"#
        )
        .is_err());
    }
}
