//! Run-length statistics of a permutation and the fibers of the outcome map.
//!
//! For `sigma = s_1 ... s_n` and a spot `i`:
//! - `x_k(i)` is the length of the run `s_j ... s_{i-1}` of entries smaller than `s_i`;
//! - `y_k(i)` is the length of the run `s_i ... s_r` with `r <= i + k` and entries at most `s_i`;
//! - `l_k(i)` is `x + y` when the left run reaches spot 1, else `max(x - k, 0) + y`.
//!
//! The fiber of `sigma` under `phi_k` is the product over cars of
//! contiguous intervals of admissible preferences, one per car, and the
//! interval for the car parked in spot `i` has length `l_k(i)`.

use std::ops::RangeInclusive;

use num_bigint::BigUint;

use crate::error::NaplesError;
use crate::parking::{NaplesParameter, ParkingPreference};
use crate::perm::{inverse_of, Permutation};

/// `l(i; sigma)`: the longest run `s_j ... s_i` ending at spot `i` with every entry at most `s_i`.
pub fn ell(i: usize, sigma: &Permutation) -> Result<usize, NaplesError> {
    let n = sigma.len();
    if i == 0 || i > n {
        return Err(NaplesError::IndexOutOfRange { index: i, n });
    }
    let s = sigma.as_slice();
    let v = s[i - 1];
    Ok(s[..i].iter().rev().take_while(|&&t| t <= v).count())
}

/// Per-spot statistics; vectors are indexed by `spot - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllProfile {
    pub sigma: Permutation,
    pub k: NaplesParameter,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub ell_k: Vec<usize>,
}

impl EllProfile {
    pub fn x_at(&self, spot: usize) -> usize {
        self.x[spot - 1]
    }

    pub fn y_at(&self, spot: usize) -> usize {
        self.y[spot - 1]
    }

    pub fn ell_at(&self, spot: usize) -> usize {
        self.ell_k[spot - 1]
    }
}

#[inline]
fn left_run(s: &[usize], pos: usize) -> usize {
    let v = s[pos];
    s[..pos].iter().rev().take_while(|&&t| t < v).count()
}

#[inline]
fn right_run(s: &[usize], pos: usize, k: usize) -> usize {
    let v = s[pos];
    let end = (pos + k + 1).min(s.len());
    s[pos..end].iter().take_while(|&&t| t <= v).count()
}

#[inline]
fn combine(x: usize, y: usize, pos: usize, k: usize) -> usize {
    if x == pos {
        x + y
    } else {
        x.saturating_sub(k) + y
    }
}

/// Writes `l_k(i)` for every spot into `out` (same length as `s`).
pub(crate) fn ell_k_into(s: &[usize], k: usize, out: &mut [usize]) {
    for (pos, slot) in out.iter_mut().enumerate().take(s.len()) {
        *slot = combine(left_run(s, pos), right_run(s, pos, k), pos, k);
    }
}

pub fn ell_profile(sigma: &Permutation, k: NaplesParameter) -> EllProfile {
    let s = sigma.as_slice();
    let n = s.len();
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    let mut ell_k = Vec::with_capacity(n);
    for pos in 0..n {
        let (l, r) = (left_run(s, pos), right_run(s, pos, k.0));
        x.push(l);
        y.push(r);
        ell_k.push(combine(l, r, pos, k.0));
    }
    EllProfile {
        sigma: sigma.clone(),
        k,
        x,
        y,
        ell_k,
    }
}

/// Exact product of the factors; stays in `u128` until it would overflow.
pub(crate) fn exact_product(factors: impl IntoIterator<Item = usize>) -> BigUint {
    let mut small: u128 = 1;
    let mut big: Option<BigUint> = None;
    for f in factors {
        match &mut big {
            Some(b) => *b *= f,
            None => match small.checked_mul(f as u128) {
                Some(p) => small = p,
                None => big = Some(BigUint::from(small) * f),
            },
        }
    }
    big.unwrap_or_else(|| BigUint::from(small))
}

/// `|phi_k^{-1}(sigma)|`, the product of `l_k(i; sigma)` over all spots.
pub fn fiber_size(sigma: &Permutation, k: NaplesParameter) -> BigUint {
    let s = sigma.as_slice();
    let mut buf = vec![0; s.len()];
    ell_k_into(s, k.0, &mut buf);
    exact_product(buf)
}

/// Admissible preferences for each car, indexed by `car - 1`.
///
/// The car parked in spot `p` may prefer any spot in `p - L ..= p + y - 1`,
/// where `y = y_k(p)` covers parking at the preference or backing up into
/// `p`, and `L` counts preferences to the left from which it drives forward
/// into `p`: the whole left run when that run reaches spot 1, and otherwise
/// only the `max(x - k, 0)` spots far enough from the free spot before the
/// run that backing up cannot reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleSets {
    pub sets: Vec<RangeInclusive<usize>>,
}

impl AdmissibleSets {
    pub fn new(sigma: &Permutation, k: NaplesParameter) -> Self {
        let profile = ell_profile(sigma, k);
        let pi = inverse_of(sigma.as_slice());
        let sets = pi
            .iter()
            .map(|&spot| {
                let x = profile.x_at(spot);
                let y = profile.y_at(spot);
                let left = if x == spot - 1 { x } else { x.saturating_sub(k.0) };
                (spot - left)..=(spot + y - 1)
            })
            .collect();
        AdmissibleSets { sets }
    }

    /// Offsets `u_i` below the top of each interval, i.e. `top_i - a_i`.
    /// `None` if some entry lies outside its interval.
    pub fn offsets(&self, pref: &ParkingPreference) -> Option<Vec<usize>> {
        self.sets
            .iter()
            .zip(pref.as_slice())
            .map(|(r, &a)| r.contains(&a).then(|| r.end() - a))
            .collect()
    }

    pub fn size(&self) -> BigUint {
        exact_product(self.sets.iter().map(|r| r.end() - r.start() + 1))
    }
}

/// Lexicographic iterator over a fiber.
pub struct FiberMembers {
    sets: Vec<RangeInclusive<usize>>,
    current: Vec<usize>,
    done: bool,
}

impl Iterator for FiberMembers {
    type Item = ParkingPreference;

    fn next(&mut self) -> Option<ParkingPreference> {
        if self.done {
            return None;
        }
        let out = ParkingPreference::from_vec_unchecked(self.current.clone());
        // mixed-radix increment, last car fastest
        self.done = true;
        for (slot, range) in self.current.iter_mut().zip(&self.sets).rev() {
            if *slot < *range.end() {
                *slot += 1;
                self.done = false;
                break;
            }
            *slot = *range.start();
        }
        Some(out)
    }
}

pub fn fiber_members(sigma: &Permutation, k: NaplesParameter) -> FiberMembers {
    let sets = AdmissibleSets::new(sigma, k).sets;
    let current = sets.iter().map(|r| *r.start()).collect();
    FiberMembers {
        sets,
        current,
        done: false,
    }
}
