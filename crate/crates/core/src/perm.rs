//! Permutations in one-line notation and exhaustive iteration over `S_n`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::NaplesError;

/// A permutation of `1..=n` in one-line notation, `s_1 s_2 ... s_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self, NaplesError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n || seen[e] {
                return Err(NaplesError::InvalidPermutation(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen[e] = true;
        }
        Ok(Permutation(entries))
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(entries.clone()).is_ok());
        Permutation(entries)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `n n-1 ... 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(inverse_of(&self.0))
    }

    pub fn reversed(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    /// Number of pairs `i < j` with `s_i > s_j`.
    pub fn inversions(&self) -> usize {
        let s = &self.0;
        (0..s.len())
            .map(|i| s[i + 1..].iter().filter(|&&b| b < s[i]).count())
            .sum()
    }
}

pub(crate) fn inverse_of(s: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; s.len()];
    for (pos, &v) in s.iter().enumerate() {
        inv[v - 1] = pos + 1;
    }
    inv
}

/// One-line notation: compact digits when every entry is a single digit,
/// comma separated otherwise.
pub fn format_one_line(entries: &[usize]) -> String {
    if entries.iter().all(|&e| e <= 9) {
        entries.iter().map(|e| e.to_string()).collect()
    } else {
        entries
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses `"23514"` or `"2,3,5,1,4"` (whitespace around commas allowed).
pub fn parse_one_line(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad entry {t:?}: {e}"))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| format!("bad digit {c:?}"))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_one_line(&self.0))
    }
}

impl FromStr for Permutation {
    type Err = NaplesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_one_line(s).map_err(NaplesError::InvalidPermutation)?;
        Permutation::new(v)
    }
}

/// Rearranges `v` into the next permutation in lexicographic order.
/// Returns `false` (leaving `v` sorted ascending) after the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        current: (1..=n).collect(),
        done: false,
    }
}

pub struct Permutations {
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation(self.current.clone());
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

fn prefixes(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for p in &out {
            for v in 1..=n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// Parallel fold over `S_n`.
///
/// The permutations are split into chunks sharing a common two-entry prefix;
/// each chunk is folded sequentially in lexicographic order starting from
/// `init()`, and the chunk results are combined with `reduce`. The result is
/// independent of the thread count whenever `reduce` is associative and
/// commutative on the values produced.
pub fn par_fold_permutations<A, I, F, R>(n: usize, init: I, fold: F, reduce: R) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &[usize]) -> A + Sync + Send,
    R: Fn(A, A) -> A + Sync + Send,
{
    let prefix_len = n.min(2);
    prefixes(n, prefix_len)
        .into_par_iter()
        .map(|prefix| {
            let mut rest: Vec<usize> = (1..=n).filter(|v| !prefix.contains(v)).collect();
            let mut buf = prefix.clone();
            buf.extend_from_slice(&rest);
            let mut acc = fold(init(), &buf);
            while next_permutation(&mut rest) {
                buf[prefix_len..].copy_from_slice(&rest);
                acc = fold(acc, &buf);
            }
            acc
        })
        .reduce(&init, &reduce)
}
