use serde::Serialize;

/// A lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Step {
    East,
    North,
    NorthEast,
}

impl Step {
    const ALL: [Step; 3] = [Step::East, Step::North, Step::NorthEast];

    fn delta(self) -> (usize, usize) {
        match self {
            Step::East => (1, 0),
            Step::North => (0, 1),
            Step::NorthEast => (1, 1),
        }
    }

    /// Weight of this step taken from column `i`.
    pub fn weight(self, i: usize) -> usize {
        match self {
            Step::East => 0,
            Step::North => i,
            Step::NorthEast => i + 1,
        }
    }
}

/// Path from `(0,0)` to `(m,n)` with East, North and North-East steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DelannoyPath {
    pub steps: Vec<Step>,
}

impl DelannoyPath {
    pub fn endpoint(&self) -> (usize, usize) {
        self.steps.iter().fold((0, 0), |(x, y), s| {
            let (dx, dy) = s.delta();
            (x + dx, y + dy)
        })
    }
}

/// `(d, wt)`: number of North-East steps and total step weight.
pub fn path_stats(p: &DelannoyPath) -> (usize, usize) {
    let mut x = 0;
    let mut d = 0;
    let mut wt = 0;
    for s in &p.steps {
        wt += s.weight(x);
        if *s == Step::NorthEast {
            d += 1;
        }
        x += s.delta().0;
    }
    (d, wt)
}

/// All Delannoy paths to `(m, n)` in lexicographic step order
/// (East < North < North-East).
pub fn enumerate_delannoy_paths(m: usize, n: usize) -> DelannoyIter {
    let mut steps = vec![Step::East; m];
    steps.extend(std::iter::repeat_n(Step::North, n));
    DelannoyIter {
        m,
        n,
        next: Some(steps),
    }
}

pub struct DelannoyIter {
    m: usize,
    n: usize,
    next: Option<Vec<Step>>,
}

impl DelannoyIter {
    fn successor(&self, steps: &[Step]) -> Option<Vec<Step>> {
        // positions before each step
        let mut pos = Vec::with_capacity(steps.len());
        let (mut x, mut y) = (0, 0);
        for s in steps {
            pos.push((x, y));
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
        }
        for i in (0..steps.len()).rev() {
            let (x, y) = pos[i];
            for cand in Step::ALL.into_iter().filter(|c| *c > steps[i]) {
                let (dx, dy) = cand.delta();
                if x + dx <= self.m && y + dy <= self.n {
                    let mut out = steps[..i].to_vec();
                    out.push(cand);
                    out.extend(std::iter::repeat_n(Step::East, self.m - x - dx));
                    out.extend(std::iter::repeat_n(Step::North, self.n - y - dy));
                    return Some(out);
                }
            }
        }
        None
    }
}

impl Iterator for DelannoyIter {
    type Item = DelannoyPath;

    fn next(&mut self) -> Option<DelannoyPath> {
        let cur = self.next.take()?;
        self.next = self.successor(&cur);
        Some(DelannoyPath { steps: cur })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square() {
        let mut stats: Vec<_> = enumerate_delannoy_paths(1, 1)
            .map(|p| path_stats(&p))
            .collect();
        stats.sort();
        assert_eq!(stats, vec![(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn counts_follow_recurrence() {
        // D(m,n) = D(m-1,n) + D(m,n-1) + D(m-1,n-1)
        let mut d = [[0u64; 6]; 6];
        for m in 0..6 {
            for n in 0..6 {
                d[m][n] = if m == 0 || n == 0 {
                    1
                } else {
                    d[m - 1][n] + d[m][n - 1] + d[m - 1][n - 1]
                };
                let paths: Vec<_> = enumerate_delannoy_paths(m, n).collect();
                assert_eq!(paths.len() as u64, d[m][n]);
                assert!(paths.iter().all(|p| p.endpoint() == (m, n)));
            }
        }
        assert_eq!(d[2][2], 13);
    }

    #[test]
    fn vertical_line() {
        let paths: Vec<_> = enumerate_delannoy_paths(0, 3).collect();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].steps, vec![Step::North; 3]);
        assert_eq!(path_stats(&paths[0]), (0, 0));
    }
}
