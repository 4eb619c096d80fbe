//! Counting k-Naples parking functions and the fiber-size generating functions.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::NaplesError;
use crate::fibers::{ell_k_into, exact_product};
use crate::parking::NaplesParameter;
use crate::perm::par_fold_permutations;

/// Largest `n` for which factorial-time enumeration is attempted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimit(pub usize);

impl EnumerationLimit {
    pub const DEFAULT: EnumerationLimit = EnumerationLimit(10);

    pub fn check(self, n: usize) -> Result<(), NaplesError> {
        if n > self.0 {
            Err(NaplesError::ResourceLimit { n, ceiling: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumerationLimit {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// A sparse series `sum c_i q^i` over positive integer keys.
///
/// Used both for `F_n(q)` (key = fiber size) and for the logarithmic series
/// `G_n(q)`, where key `i` stands for the exponent `ln i` so that products of
/// terms multiply keys. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndexedSeries {
    terms: BTreeMap<u128, BigUint>,
}

impl IndexedSeries {
    pub fn new() -> Self {
        Self::default()
    }

    /// The series `q^{key}` (or `q^{ln key}`) with coefficient one.
    pub fn monomial(key: u128) -> Self {
        let mut s = Self::new();
        s.add_term(key, BigUint::one());
        s
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u128, C)>,
        C: Into<BigUint>,
    {
        let mut s = Self::new();
        for (k, c) in terms {
            s.add_term(k, c.into());
        }
        s
    }

    pub fn add_term(&mut self, key: u128, coeff: BigUint) {
        if coeff.is_zero() {
            return;
        }
        *self.terms.entry(key).or_default() += coeff;
    }

    pub fn coeff(&self, key: u128) -> BigUint {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u128, &BigUint)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn keys(&self) -> impl Iterator<Item = u128> + '_ {
        self.terms.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients.
    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// `sum key * coeff`, the derivative at `q = 1` for `F_n`.
    pub fn weighted_total(&self) -> BigUint {
        self.terms.iter().map(|(&k, c)| c * BigUint::from(k)).sum()
    }

    /// Product where keys multiply: `q^{ln a} q^{ln b} = q^{ln ab}`.
    pub fn mul_log(&self, other: &IndexedSeries) -> IndexedSeries {
        let mut out = IndexedSeries::new();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &other.terms {
                out.add_term(a * b, ca * cb);
            }
        }
        out
    }

    /// Multiplies every key by `factor` and every coefficient by `scalar`.
    pub fn shift_log(&self, factor: u128, scalar: &BigUint) -> IndexedSeries {
        let mut out = IndexedSeries::new();
        for (&a, c) in &self.terms {
            out.add_term(a * factor, c * scalar);
        }
        out
    }

    pub fn add_assign(&mut self, other: &IndexedSeries) {
        for (&k, c) in &other.terms {
            self.add_term(k, c.clone());
        }
    }
}

/// `(n + 1)^(n - 1)`, the number of classical parking functions.
pub fn count_pf_closed(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    BigUint::from(n + 1).pow(n as u32 - 1)
}

fn binomial_row(m: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for _ in 0..m {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    row
}

pub fn binomial(m: usize, r: usize) -> BigUint {
    if r > m {
        return BigUint::zero();
    }
    binomial_row(m).swap_remove(r)
}

/// `|PF_{n,k}|` by the recursion
/// `|PF_{m+1,k}| = sum_i C(m,i) min(i+1+k, m+1) |PF_{i,k}| (m-i+1)^(m-i-1)`,
/// filling the table `|PF_{0,k}|, ..., |PF_{n,k}|` bottom-up.
pub fn count_npf_recursive(n: usize, k: NaplesParameter) -> BigUint {
    npf_table(n, k).swap_remove(n)
}

pub(crate) fn npf_table(n: usize, k: NaplesParameter) -> Vec<BigUint> {
    let k = k.0;
    let mut table = vec![BigUint::one()];
    for m in 0..n {
        let row = binomial_row(m);
        let mut total = BigUint::zero();
        for (i, c) in row.iter().enumerate() {
            let reach = (i + 1 + k).min(m + 1);
            // (m - i + 1)^(m - i - 1), with 1^(-1) = 1 at i = m
            let tail = if i == m {
                BigUint::one()
            } else {
                BigUint::from(m - i + 1).pow((m - i - 1) as u32)
            };
            total += c * reach * &table[i] * tail;
        }
        table.push(total);
    }
    table
}

/// `|PF_{n,k}|` as the sum of fiber sizes over all of `S_n`.
pub fn count_npf_permsum(n: usize, k: NaplesParameter) -> Result<BigUint, NaplesError> {
    count_npf_permsum_with(n, k, EnumerationLimit::DEFAULT)
}

pub fn count_npf_permsum_with(
    n: usize,
    k: NaplesParameter,
    limit: EnumerationLimit,
) -> Result<BigUint, NaplesError> {
    limit.check(n)?;
    let k = k.0;
    // per-chunk u128 accumulators; each fiber is at most n! and a chunk has at most n! members
    let total = par_fold_permutations(
        n,
        || (0u128, BigUint::zero(), vec![0usize; n]),
        |(mut small, mut big, mut buf), s| {
            ell_k_into(s, k, &mut buf);
            let f = exact_product(buf.iter().copied());
            match u128::try_from(&f).ok().and_then(|f| small.checked_add(f)) {
                Some(sum) => small = sum,
                None => big += f,
            }
            (small, big, buf)
        },
        |a, b| (0, a.1 + b.1 + BigUint::from(a.0) + BigUint::from(b.0), Vec::new()),
    );
    Ok(total.1 + BigUint::from(total.0))
}

/// `F_n(q)` by direct histogram of `|phi^{-1}(sigma)|` over `S_n`.
pub fn fiber_gf_direct(n: usize) -> Result<IndexedSeries, NaplesError> {
    fiber_gf_direct_with(n, EnumerationLimit::DEFAULT)
}

pub fn fiber_gf_direct_with(n: usize, limit: EnumerationLimit) -> Result<IndexedSeries, NaplesError> {
    limit.check(n)?;
    let hist = par_fold_permutations(
        n,
        || (BTreeMap::<u128, u64>::new(), vec![0usize; n]),
        |(mut h, mut buf), s| {
            ell_k_into(s, 0, &mut buf);
            let size = buf.iter().map(|&v| v as u128).product::<u128>();
            *h.entry(size).or_default() += 1;
            (h, buf)
        },
        |(mut a, _), (b, _)| {
            for (k, c) in b {
                *a.entry(k).or_default() += c;
            }
            (a, Vec::new())
        },
    );
    Ok(IndexedSeries::from_terms(hist.0))
}

fn divisors(m: u128) -> Vec<u128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, f| acc.checked_mul(f))
}

/// Memoized evaluation of the coefficient recursion
/// `c_{n,i} = sum_{d | i} C(n-1, d-1) sum_{j | i/d} c_{d-1,j} c_{n-d, i/(dj)}`
/// with `c_{0,1} = 1`.
#[derive(Debug, Default)]
pub struct FiberCoefficients {
    memo: HashMap<(usize, u128), BigUint>,
}

impl FiberCoefficients {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: usize, i: u128) -> BigUint {
        if i == 0 {
            return BigUint::zero();
        }
        if n == 0 {
            return if i == 1 { BigUint::one() } else { BigUint::zero() };
        }
        if let Some(f) = factorial(n) {
            if i > f {
                return BigUint::zero();
            }
        }
        if let Some(c) = self.memo.get(&(n, i)) {
            return c.clone();
        }
        let row = binomial_row(n - 1);
        let mut total = BigUint::zero();
        for d in divisors(i) {
            if d as usize > n {
                break;
            }
            let d_us = d as usize;
            let rest = i / d;
            let mut inner = BigUint::zero();
            for j in divisors(rest) {
                let left = self.get(d_us - 1, j);
                if left.is_zero() {
                    continue;
                }
                let right = self.get(n - d_us, rest / j);
                inner += left * right;
            }
            total += &row[d_us - 1] * inner;
        }
        self.memo.insert((n, i), total.clone());
        total
    }
}

/// `c_{n,i}`: zero for negative `n`.
pub fn c_coeff(n: i64, i: u128) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    FiberCoefficients::new().get(n as usize, i)
}

/// `F_n(q)` assembled from the coefficient recursion over the divisors of `n!`.
pub fn fiber_gf_recursive(n: usize) -> Result<IndexedSeries, NaplesError> {
    let top = factorial(n).ok_or(NaplesError::ResourceLimit { n, ceiling: 34 })?;
    let mut coeffs = FiberCoefficients::new();
    let mut out = IndexedSeries::new();
    for i in divisors(top) {
        out.add_term(i, coeffs.get(n, i));
    }
    Ok(out)
}

/// `G_n(q)` by `G_n = sum_i C(n-1, i) q^{ln(i+1)} G_i G_{n-1-i}`, keys multiplicative.
pub fn log_gf(n: usize) -> IndexedSeries {
    let mut table: Vec<IndexedSeries> = vec![IndexedSeries::monomial(1)];
    for m in 1..=n {
        let row = binomial_row(m - 1);
        let mut g = IndexedSeries::new();
        for (i, c) in row.iter().enumerate() {
            let product = table[i].mul_log(&table[m - 1 - i]);
            g.add_assign(&product.shift_log(i as u128 + 1, c));
        }
        table.push(g);
    }
    table.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn closed_form() {
        assert_eq!(count_pf_closed(1), big(1));
        assert_eq!(count_pf_closed(3), big(16));
        assert_eq!(count_pf_closed(5), big(1296));
        // 18^16 needs more than 64 bits
        assert_eq!(count_pf_closed(17).to_string(), "121439531096594251776");
    }

    #[test]
    fn recursion_examples() {
        assert_eq!(count_npf_recursive(0, NaplesParameter(0)), big(1));
        assert_eq!(count_npf_recursive(3, NaplesParameter(0)), big(16));
        assert_eq!(count_npf_recursive(3, NaplesParameter(1)), big(24));
        assert_eq!(count_npf_recursive(4, NaplesParameter(1)), big(203));
    }

    #[test]
    fn permsum_examples() {
        assert_eq!(count_npf_permsum(3, NaplesParameter(2)).unwrap(), big(27));
        assert_eq!(count_npf_permsum(5, NaplesParameter(0)).unwrap(), big(1296));
        assert_eq!(count_npf_permsum(4, NaplesParameter(2)).unwrap(), big(240));
    }

    #[test]
    fn permsum_respects_ceiling() {
        let err = count_npf_permsum(11, NaplesParameter(0)).unwrap_err();
        assert_eq!(err, NaplesError::ResourceLimit { n: 11, ceiling: 10 });
        assert!(count_npf_permsum_with(4, NaplesParameter(0), EnumerationLimit(3)).is_err());
        assert!(fiber_gf_direct_with(9, EnumerationLimit(8)).is_err());
    }

    #[test]
    fn direct_series() {
        assert_eq!(fiber_gf_direct(1).unwrap(), IndexedSeries::from_terms([(1, 1u32)]));
        assert_eq!(
            fiber_gf_direct(3).unwrap(),
            IndexedSeries::from_terms([(1, 1u32), (2, 3), (3, 1), (6, 1)])
        );
        let f5 = fiber_gf_direct(5).unwrap();
        assert_eq!(f5.len(), 16);
        assert_eq!(f5.coeff(120), big(1));
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(c_coeff(4, 24), big(1));
        assert_eq!(c_coeff(3, 4), big(0));
        assert_eq!(c_coeff(5, 12), big(15));
        assert_eq!(c_coeff(-1, 1), big(0));
        assert_eq!(c_coeff(0, 1), big(1));
        assert_eq!(c_coeff(0, 2), big(0));
    }

    #[test]
    fn log_series_examples() {
        assert_eq!(log_gf(0), IndexedSeries::monomial(1));
        assert_eq!(log_gf(2), IndexedSeries::from_terms([(1, 1u32), (2, 1)]));
        assert_eq!(
            log_gf(4),
            IndexedSeries::from_terms([
                (1, 1u32),
                (2, 6),
                (3, 4),
                (4, 4),
                (6, 4),
                (8, 3),
                (12, 1),
                (24, 1)
            ])
        );
    }

    #[test]
    fn series_invariants() {
        for n in 1..=6 {
            let f = fiber_gf_direct(n).unwrap();
            assert_eq!(f.total(), BigUint::from(factorial(n).unwrap()));
            assert_eq!(f.weighted_total(), count_pf_closed(n));
            assert!(f.keys().all(|k| factorial(n).unwrap().is_multiple_of(k)));
            assert_eq!(fiber_gf_recursive(n).unwrap(), f);
            assert_eq!(log_gf(n), f);
        }
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(720).len(), 30);
    }
}
