//! Lattice-path encodings.
//!
//! Paths run from `(0, n)` to `(n, 0)` with unit South and East steps.
//! A parking function maps to a labeled Dyck path with `u_i` South steps on
//! the vertical line `x = i - 1`, where `u_i` counts the cars preferring spot
//! `i`; the steps carry those cars' labels in increasing order. A weakly
//! decreasing preference maps to the unlabeled path whose `i`-th East step
//! runs at height `a_i - 1`.
//!
//! Every vertex of a labeled Dyck path satisfies `y <= n - x`, so the path
//! never crosses the diagonal joining its endpoints; for a `k`-lattice path
//! the bound is `y <= n - x + k`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::NaplesError;
use crate::parking::{park, NaplesParameter, ParkingPreference};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    South,
    East,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub steps: Vec<Step>,
    /// One label per South step, in path order.
    pub labels: Option<Vec<usize>>,
}

impl LatticePath {
    pub fn unlabeled(steps: Vec<Step>) -> Self {
        LatticePath { steps, labels: None }
    }

    /// Parses a word over `{S, E}`.
    pub fn from_word(word: &str) -> Result<Self, NaplesError> {
        let steps = word
            .chars()
            .map(|c| match c {
                'S' | 's' => Ok(Step::South),
                'E' | 'e' => Ok(Step::East),
                other => Err(NaplesError::InvalidPath(format!("unknown step {other:?}"))),
            })
            .collect::<Result<_, _>>()?;
        Ok(Self::unlabeled(steps))
    }

    pub fn with_labels(mut self, labels: Vec<usize>) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn word(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::South => 'S',
                Step::East => 'E',
            })
            .collect()
    }

    /// Half the number of steps.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    fn check_balanced(&self) -> Result<usize, NaplesError> {
        let south = self.steps.iter().filter(|&&s| s == Step::South).count();
        let east = self.steps.len() - south;
        if south != east {
            return Err(NaplesError::InvalidPath(format!(
                "{south} south steps but {east} east steps"
            )));
        }
        Ok(south)
    }

    /// Vertices from `(0, n)` to `(n, 0)`, including both ends.
    pub fn vertices(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        let (mut x, mut y) = (0usize, n);
        let mut out = vec![(x, y)];
        for s in &self.steps {
            match s {
                Step::South => y = y.saturating_sub(1),
                Step::East => x += 1,
            }
            out.push((x, y));
        }
        out
    }

    /// True when every vertex satisfies `y <= n - x + k`.
    pub fn stays_below(&self, k: usize) -> bool {
        let n = self.size();
        self.check_balanced().is_ok() && self.vertices().iter().all(|&(x, y)| x + y <= n + k)
    }

    pub fn is_dyck(&self) -> bool {
        self.stays_below(0)
    }

    /// Number of South steps on each vertical line `x = 0, ..., n`.
    pub fn south_runs(&self) -> Vec<usize> {
        let mut runs = vec![0; self.size() + 1];
        let mut x = 0;
        for s in &self.steps {
            match s {
                Step::South => runs[x] += 1,
                Step::East => x += 1,
            }
        }
        runs
    }

    /// Labels grouped by vertical line, empty lines omitted.
    pub fn label_runs(&self) -> Vec<Vec<usize>> {
        let Some(labels) = &self.labels else {
            return Vec::new();
        };
        let mut out = Vec::new();
        let mut idx = 0;
        for run in self.south_runs() {
            if run > 0 {
                out.push(labels[idx..idx + run].to_vec());
                idx += run;
            }
        }
        out
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

pub fn pf_to_labeled_dyck(pref: &ParkingPreference) -> Result<LatticePath, NaplesError> {
    park(pref.as_slice(), 0).map_err(NaplesError::NotAParkingFunction)?;
    let n = pref.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut labels = Vec::with_capacity(n);
    for column in 1..=n {
        for (car, _) in pref.as_slice().iter().enumerate().filter(|(_, &a)| a == column) {
            steps.push(Step::South);
            labels.push(car + 1);
        }
        steps.push(Step::East);
    }
    Ok(LatticePath {
        steps,
        labels: Some(labels),
    })
}

pub fn labeled_dyck_to_pf(path: &LatticePath) -> Result<ParkingPreference, NaplesError> {
    let n = path.check_balanced()?;
    let labels = path
        .labels
        .as_ref()
        .ok_or_else(|| NaplesError::InvalidPath("south steps are unlabeled".into()))?;
    if labels.len() != n {
        return Err(NaplesError::InvalidPath(format!(
            "{} labels for {n} south steps",
            labels.len()
        )));
    }
    if !path.is_dyck() {
        return Err(NaplesError::InvalidPath("path crosses the diagonal".into()));
    }
    let mut prefs = vec![0usize; n];
    let mut x = 0;
    let mut label_idx = 0;
    let mut previous: Option<usize> = None;
    for s in &path.steps {
        match s {
            Step::East => {
                x += 1;
                previous = None;
            }
            Step::South => {
                let car = labels[label_idx];
                label_idx += 1;
                if car == 0 || car > n || prefs[car - 1] != 0 {
                    return Err(NaplesError::InvalidPath(format!(
                        "labels are not a bijection onto 1..={n}"
                    )));
                }
                if previous.is_some_and(|p| p >= car) {
                    return Err(NaplesError::InvalidPath(
                        "consecutive south steps must have increasing labels".into(),
                    ));
                }
                previous = Some(car);
                prefs[car - 1] = x + 1;
            }
        }
    }
    ParkingPreference::new(prefs)
}

/// Whether a weakly decreasing preference satisfies `a_i <= min(n, n - i + 1 + k)`.
pub fn decreasing_npf_check(pref: &ParkingPreference, k: NaplesParameter) -> Result<bool, NaplesError> {
    if !pref.is_weakly_decreasing() {
        return Err(NaplesError::NotDecreasing);
    }
    let n = pref.len();
    Ok(pref
        .as_slice()
        .iter()
        .enumerate()
        .all(|(idx, &a)| a <= n.min(n - idx + k.0)))
}

pub fn decreasing_to_klattice(pref: &ParkingPreference, k: NaplesParameter) -> Result<LatticePath, NaplesError> {
    if !decreasing_npf_check(pref, k)? {
        return Err(NaplesError::NotInPfNk { k: k.0 });
    }
    let n = pref.len();
    let mut steps = Vec::with_capacity(2 * n);
    let mut height = n;
    for &a in pref.as_slice() {
        steps.extend(std::iter::repeat_n(Step::South, height - (a - 1)));
        steps.push(Step::East);
        height = a - 1;
    }
    steps.extend(std::iter::repeat_n(Step::South, height));
    Ok(LatticePath::unlabeled(steps))
}

/// Weakly decreasing tuples with `a_i <= min(n, n - i + 1 + k)`.
pub fn count_decreasing_npf(n: usize, k: NaplesParameter) -> BigUint {
    // ways[v] = number of valid prefixes ending in value v
    let mut ways = vec![BigUint::one(); n + 1];
    ways[0] = BigUint::zero();
    for i in 1..=n {
        let bound = n.min(n - i + 1 + k.0);
        if i > 1 {
            // suffix sums: next[v] = sum_{w >= v} ways[w]
            let mut running = BigUint::zero();
            for v in (1..=n).rev() {
                running += &ways[v];
                ways[v] = running.clone();
            }
        }
        for w in ways.iter_mut().skip(bound + 1) {
            *w = BigUint::zero();
        }
    }
    ways.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::{all_preferences, decreasing_preferences, is_naples_pf};
    use crate::qstats::area;

    fn pref(s: &str) -> ParkingPreference {
        s.parse().unwrap()
    }

    #[test]
    fn figure_one_path() {
        let path = pf_to_labeled_dyck(&pref("331422")).unwrap();
        assert_eq!(&path.south_runs()[..6], [1, 2, 2, 1, 0, 0]);
        assert_eq!(path.label_runs(), vec![vec![3], vec![5, 6], vec![1, 2], vec![4]]);
        assert_eq!(path.word(), "SESSESSESEEE");
        let v = path.vertices();
        for corner in [(0, 5), (1, 5), (1, 3), (2, 3), (2, 1), (3, 1), (3, 0), (6, 0)] {
            assert!(v.contains(&corner), "{corner:?}");
        }
        assert_eq!(labeled_dyck_to_pf(&path).unwrap(), pref("331422"));
    }

    #[test]
    fn extreme_dyck_paths() {
        let stair = pf_to_labeled_dyck(&pref("1234")).unwrap();
        assert_eq!(stair.word(), "SESESESE");
        assert_eq!(stair.labels, Some(vec![1, 2, 3, 4]));
        let tall = pf_to_labeled_dyck(&pref("1111")).unwrap();
        assert_eq!(tall.word(), "SSSSEEEE");
        assert_eq!(labeled_dyck_to_pf(&stair).unwrap(), pref("1234"));
        assert_eq!(labeled_dyck_to_pf(&tall).unwrap(), pref("1111"));
        assert!(matches!(pf_to_labeled_dyck(&pref("322")), Err(NaplesError::NotAParkingFunction(_))));
    }

    #[test]
    fn invalid_paths_rejected() {
        let above = LatticePath::from_word("ESSE").unwrap().with_labels(vec![1, 2]);
        assert!(labeled_dyck_to_pf(&above).is_err());
        let unbalanced = LatticePath::from_word("SSE").unwrap().with_labels(vec![1, 2]);
        assert!(labeled_dyck_to_pf(&unbalanced).is_err());
        let decreasing = LatticePath::from_word("SSEE").unwrap().with_labels(vec![2, 1]);
        assert!(labeled_dyck_to_pf(&decreasing).is_err());
        let repeated = LatticePath::from_word("SESE").unwrap().with_labels(vec![1, 1]);
        assert!(labeled_dyck_to_pf(&repeated).is_err());
        assert!(labeled_dyck_to_pf(&LatticePath::from_word("SESE").unwrap()).is_err());
        assert!(LatticePath::from_word("SX").is_err());
    }

    #[test]
    fn decreasing_checks() {
        assert!(decreasing_npf_check(&pref("664422"), NaplesParameter(2)).unwrap());
        assert!(decreasing_npf_check(&pref("322"), NaplesParameter(1)).unwrap());
        for n in 2..=6 {
            let all_n = ParkingPreference::new(vec![n; n]).unwrap();
            assert!(!decreasing_npf_check(&all_n, NaplesParameter(0)).unwrap());
        }
        assert_eq!(decreasing_npf_check(&pref("123"), NaplesParameter(0)), Err(NaplesError::NotDecreasing));
    }

    #[test]
    fn figure_two_path() {
        let path = decreasing_to_klattice(&pref("664422"), NaplesParameter(2)).unwrap();
        let expected = [(0, 6), (0, 5), (2, 5), (2, 3), (4, 3), (4, 1), (6, 1), (6, 0)];
        let v = path.vertices();
        for corner in expected {
            assert!(v.contains(&corner), "{corner:?}");
        }
        assert_eq!(path.word(), "SEESSEESSEES");
        assert!(path.stays_below(2));
        assert!(path.stays_below(1));
        assert!(!path.stays_below(0));
    }

    #[test]
    fn extreme_lattice_paths() {
        for k in 0..4 {
            assert_eq!(
                decreasing_to_klattice(&pref("1111"), NaplesParameter(k)).unwrap().word(),
                "SSSSEEEE"
            );
        }
        assert_eq!(decreasing_to_klattice(&pref("4321"), NaplesParameter(0)).unwrap().word(), "SESESESE");
        assert_eq!(
            decreasing_to_klattice(&pref("333"), NaplesParameter(0)),
            Err(NaplesError::NotInPfNk { k: 0 })
        );
    }

    #[test]
    fn decreasing_counts() {
        assert_eq!(count_decreasing_npf(3, NaplesParameter(2)), BigUint::from(10u32));
        assert_eq!(count_decreasing_npf(3, NaplesParameter(0)), BigUint::from(5u32));
        assert_eq!(count_decreasing_npf(1, NaplesParameter(0)), BigUint::one());
    }

    /// k-lattice paths whose first step is South, by DP over vertices.
    fn klattice_paths_first_south(n: usize, k: usize) -> u64 {
        let ok = |x: usize, y: usize| x + y <= n + k;
        // ways[x][y] from (0, n - 1) after the forced first south step
        let mut ways = vec![vec![0u64; n + 1]; n + 1];
        ways[0][n - 1] = 1;
        for x in 0..=n {
            for y in (0..n).rev() {
                if !ok(x, y) {
                    ways[x][y] = 0;
                    continue;
                }
                if x == 0 && y == n - 1 {
                    continue;
                }
                let from_north = if y < n { ways[x][y + 1] } else { 0 };
                let from_west = if x > 0 { ways[x - 1][y] } else { 0 };
                ways[x][y] = from_north + from_west;
            }
        }
        ways[n][0]
    }

    #[test]
    fn decreasing_count_equals_lattice_path_count() {
        for n in 1..=7 {
            for k in 0..n {
                assert_eq!(
                    count_decreasing_npf(n, NaplesParameter(k)),
                    BigUint::from(klattice_paths_first_south(n, k)),
                    "n={n} k={k}"
                );
                let brute = decreasing_preferences(n)
                    .iter()
                    .filter(|p| decreasing_npf_check(p, NaplesParameter(k)).unwrap())
                    .count();
                assert_eq!(count_decreasing_npf(n, NaplesParameter(k)), BigUint::from(brute));
            }
        }
    }

    #[test]
    fn inequality_agrees_with_simulation() {
        for n in 1..=6 {
            for p in decreasing_preferences(n) {
                for k in 0..n {
                    let k = NaplesParameter(k);
                    assert_eq!(decreasing_npf_check(&p, k).unwrap(), is_naples_pf(&p, k), "{p}");
                    if is_naples_pf(&p, k) {
                        let path = decreasing_to_klattice(&p, k).unwrap();
                        assert!(path.stays_below(k.0));
                        assert_eq!(path.steps[0], Step::South);
                    }
                }
            }
        }
    }

    /// Complete unit squares between the path and the diagonal `x + y = n`.
    fn squares_under_diagonal(path: &LatticePath) -> usize {
        let n = path.size();
        let v = path.vertices();
        // height of the east step in column x (from x to x + 1)
        let mut heights = vec![0; n];
        for w in v.windows(2) {
            if w[1].0 == w[0].0 + 1 {
                heights[w[0].0] = w[0].1;
            }
        }
        (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| y >= heights[x] && x + y + 2 <= n)
                    .count()
            })
            .sum()
    }

    #[test]
    fn round_trips_geometry_and_area() {
        for n in 1..=6 {
            for p in all_preferences(n).filter(|p| is_naples_pf(p, NaplesParameter(0))) {
                let path = pf_to_labeled_dyck(&p).unwrap();
                assert!(path.is_dyck());
                assert_eq!(labeled_dyck_to_pf(&path).unwrap(), p);
                assert_eq!(squares_under_diagonal(&path), area(&p).unwrap(), "{p}");
            }
        }
    }

    /// All labeled Dyck paths of size n: Dyck words times increasing labelings of each run.
    fn all_labeled_dyck(n: usize) -> Vec<LatticePath> {
        fn words(n: usize, s: usize, e: usize, cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
            if s == n && e == n {
                out.push(cur.clone());
                return;
            }
            if s < n {
                cur.push(Step::South);
                words(n, s + 1, e, cur, out);
                cur.pop();
            }
            if e < s {
                cur.push(Step::East);
                words(n, s, e + 1, cur, out);
                cur.pop();
            }
        }
        let mut ws = Vec::new();
        words(n, 0, 0, &mut Vec::new(), &mut ws);
        let mut out = Vec::new();
        for w in ws {
            // any assignment of labels, keep those increasing along runs
            for perm in crate::perm::permutations(n) {
                let path = LatticePath::unlabeled(w.clone()).with_labels(perm.into_vec());
                let runs = path.label_runs();
                if runs.iter().all(|r| r.windows(2).all(|p| p[0] < p[1])) {
                    out.push(path);
                }
            }
        }
        out
    }

    #[test]
    fn reverse_round_trip() {
        for n in 1..=5 {
            let paths = all_labeled_dyck(n);
            assert_eq!(paths.len() as u64, (n as u64 + 1).pow(n as u32 - 1));
            for path in paths {
                let p = labeled_dyck_to_pf(&path).unwrap();
                assert_eq!(pf_to_labeled_dyck(&p).unwrap(), path);
            }
        }
    }
}
