//! Parking preferences and the k-Naples parking rule.
//!
//! Cars `1..=n` arrive in order. A car whose preferred spot is free parks
//! there. Otherwise it backs up one spot at a time, checking up to `k` spots
//! behind its preference (never past spot 1), and takes the first free one.
//! Failing that, it drives forward from its preference and takes the first
//! free spot; a car that reaches the end of the street has failed.
//!
//! With `k = 0` this is the classical parking rule.

use std::fmt;
use std::str::FromStr;

use crate::error::{FailedCar, NaplesError};
use crate::perm::{format_one_line, inverse_of, parse_one_line, Permutation};

/// A tuple `(a_1, ..., a_n)` with every `a_i` in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingPreference(Vec<usize>);

impl ParkingPreference {
    pub fn new(prefs: Vec<usize>) -> Result<Self, NaplesError> {
        let n = prefs.len();
        if let Some((i, &a)) = prefs.iter().enumerate().find(|(_, &a)| a == 0 || a > n) {
            return Err(NaplesError::InvalidPreference(format!(
                "car {} prefers spot {a}, outside 1..={n}",
                i + 1
            )));
        }
        Ok(ParkingPreference(prefs))
    }

    pub(crate) fn from_vec_unchecked(prefs: Vec<usize>) -> Self {
        debug_assert!(prefs.iter().all(|&a| a >= 1 && a <= prefs.len()));
        ParkingPreference(prefs)
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

    /// Preference of car `i` (1-based).
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl From<&Permutation> for ParkingPreference {
    fn from(p: &Permutation) -> Self {
        ParkingPreference(p.as_slice().to_vec())
    }
}

impl fmt::Display for ParkingPreference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_one_line(&self.0))
    }
}

impl FromStr for ParkingPreference {
    type Err = NaplesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = parse_one_line(s).map_err(NaplesError::InvalidPreference)?;
        ParkingPreference::new(v)
    }
}

/// How far a car may back up before driving forward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct NaplesParameter(pub usize);

impl NaplesParameter {
    pub const CLASSICAL: NaplesParameter = NaplesParameter(0);

    pub fn get(self) -> usize {
        self.0
    }
}

impl From<usize> for NaplesParameter {
    fn from(k: usize) -> Self {
        NaplesParameter(k)
    }
}

impl fmt::Display for NaplesParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Where everybody parked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// Spot-indexed: `sigma[i]` is the car in spot `i`.
    pub sigma: Permutation,
    /// Car-indexed: `pi[i]` is the spot of car `i`.
    pub pi: Permutation,
}

/// Runs the parking process, returning the spot-indexed occupancy
/// (`spots[s - 1]` = car in spot `s`) or the first car that failed.
pub(crate) fn park(prefs: &[usize], k: usize) -> Result<Vec<usize>, FailedCar> {
    let n = prefs.len();
    let mut spots = vec![0usize; n];
    for (idx, &a) in prefs.iter().enumerate() {
        let car = idx + 1;
        let spot = find_spot(&spots, a, k).ok_or(FailedCar(car))?;
        spots[spot - 1] = car;
    }
    Ok(spots)
}

#[inline]
fn find_spot(spots: &[usize], a: usize, k: usize) -> Option<usize> {
    if spots[a - 1] == 0 {
        return Some(a);
    }
    let lowest = a.saturating_sub(k).max(1);
    if let Some(s) = (lowest..a).rev().find(|&s| spots[s - 1] == 0) {
        return Some(s);
    }
    (a + 1..=spots.len()).find(|&s| spots[s - 1] == 0)
}

pub fn simulate(pref: &ParkingPreference, k: NaplesParameter) -> Result<Outcome, FailedCar> {
    let spots = park(pref.as_slice(), k.0)?;
    let pi = inverse_of(&spots);
    Ok(Outcome {
        sigma: Permutation::from_vec_unchecked(spots),
        pi: Permutation::from_vec_unchecked(pi),
    })
}

/// The outcome map: the permutation whose `i`-th entry is the car parked in spot `i`.
pub fn phi_k(pref: &ParkingPreference, k: NaplesParameter) -> Result<Permutation, FailedCar> {
    simulate(pref, k).map(|o| o.sigma)
}

pub fn is_naples_pf(pref: &ParkingPreference, k: NaplesParameter) -> bool {
    park(pref.as_slice(), k.0).is_ok()
}

/// Every tuple in `[n]^n`, in lexicographic order.
pub fn all_preferences(n: usize) -> impl Iterator<Item = ParkingPreference> {
    let total = if n == 0 { 1 } else { n.pow(n as u32) };
    preferences_in(n, 0..total)
}

/// The tuples of `[n]^n` whose lexicographic ranks lie in `ranks`.
pub fn preferences_in(
    n: usize,
    ranks: std::ops::Range<usize>,
) -> impl Iterator<Item = ParkingPreference> {
    ranks.map(move |mut code| {
        let mut v = vec![1; n];
        for slot in v.iter_mut().rev() {
            *slot = code % n + 1;
            code /= n;
        }
        ParkingPreference(v)
    })
}

/// Weakly decreasing tuples in `[n]^n`, in lexicographic order.
pub fn decreasing_preferences(n: usize) -> Vec<ParkingPreference> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<ParkingPreference>) {
        if cur.len() == n {
            out.push(ParkingPreference(cur.clone()));
            return;
        }
        for a in 1..=max {
            cur.push(a);
            rec(n, a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::with_capacity(n), &mut out);
    out
}
