use super::overpartition::{Overpartition, Part};

/// Every overpartition with largest part `<= m` and at most `n` parts.
///
/// Underlying partitions come largest-first (reverse lexicographic, starting
/// from the full `n x m` rectangle and ending with the empty partition); for
/// each partition the overline masks run upward from 0, bit `i` marking the
/// `i`-th distinct value counted from the largest.
pub fn enumerate_overpartitions(m: u32, n: usize) -> OverpartitionIter {
    let start = if m == 0 || n == 0 {
        Vec::new()
    } else {
        vec![m; n]
    };
    OverpartitionIter::new(start, n)
}

pub struct OverpartitionIter {
    n: usize,
    parts: Option<Vec<u32>>,
    last_index: Vec<usize>,
    mask: u64,
}

impl OverpartitionIter {
    fn new(start: Vec<u32>, n: usize) -> Self {
        let mut it = OverpartitionIter {
            n,
            parts: Some(start),
            last_index: Vec::new(),
            mask: 0,
        };
        it.reindex();
        it
    }

    fn reindex(&mut self) {
        self.last_index.clear();
        self.mask = 0;
        if let Some(parts) = &self.parts {
            for i in 0..parts.len() {
                if i + 1 == parts.len() || parts[i + 1] != parts[i] {
                    self.last_index.push(i);
                }
            }
        }
    }

    /// Next partition in reverse lexicographic order inside the box.
    fn advance_partition(&mut self) {
        let Some(parts) = self.parts.as_mut() else {
            return;
        };
        match parts.last().copied() {
            None => self.parts = None,
            Some(1) => {
                parts.pop();
            }
            Some(v) => {
                parts.pop();
                parts.resize(self.n, v - 1);
            }
        }
        self.reindex();
    }
}

impl Iterator for OverpartitionIter {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        let parts = self.parts.as_ref()?;
        let mut out: Vec<Part> = parts.iter().map(|&v| Part::plain(v)).collect();
        for (bit, &idx) in self.last_index.iter().enumerate() {
            if self.mask >> bit & 1 == 1 {
                out[idx].overlined = true;
            }
        }
        let item = Overpartition::from_parts_unchecked(out, 0);
        self.mask += 1;
        if self.mask >> self.last_index.len() != 0 {
            self.advance_partition();
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn one_by_one_box() {
        let all: Vec<String> = enumerate_overpartitions(1, 1)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(all, vec!["1", "1~", "()"]);
    }

    #[test]
    fn empty_box() {
        let all: Vec<_> = enumerate_overpartitions(0, 5).collect();
        assert_eq!(all, vec![Overpartition::empty()]);
        assert_eq!(enumerate_overpartitions(4, 0).count(), 1);
    }

    #[test]
    fn eight_overpartitions_of_three() {
        let of_three: Vec<String> = enumerate_overpartitions(3, 3)
            .filter(|x| x.weight() == 3)
            .map(|x| x.to_string())
            .collect();
        assert_eq!(of_three.len(), 8);
        let expected: HashSet<&str> =
            ["3", "3~", "2,1", "2~,1", "2,1~", "2~,1~", "1,1,1", "1,1,1~"].into();
        assert_eq!(
            of_three.iter().map(String::as_str).collect::<HashSet<_>>(),
            expected
        );
    }

    #[test]
    fn all_valid_and_distinct() {
        for m in 0..=4 {
            for n in 0..=4 {
                let all: Vec<_> = enumerate_overpartitions(m, n).collect();
                let set: HashSet<_> = all.iter().cloned().collect();
                assert_eq!(set.len(), all.len());
                for x in &all {
                    x.validate().unwrap();
                    assert!(x.fits(m, n));
                }
            }
        }
    }
}
