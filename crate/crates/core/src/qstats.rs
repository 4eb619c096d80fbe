//! q-analogs and the area statistics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::enumeration::EnumerationLimit;
use crate::error::NaplesError;
use crate::fibers::{ell_k_into, ell_profile};
use crate::parking::{park, phi_k, NaplesParameter, ParkingPreference};
use crate::perm::{par_fold_permutations, Permutation};

/// Dense polynomial in `q`; `coeffs[e]` is the coefficient of `q^e`.
/// The highest stored coefficient is nonzero; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigUint>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs(vec![BigUint::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigUint {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Descending exponents, e.g. `2q^3+7q^2+9q+6`; exponents of two or more
    /// digits are braced (`q^{10}`).
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && e > 0 { String::new() } else { c.to_string() };
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                2..=9 => format!("q^{e}"),
                _ => format!("q^{{{e}}}"),
            };
            terms.push(format!("{coeff}{var}"));
        }
        terms.join("+")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_latex())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QPolynomial> for QPolynomial {
    fn add_assign(&mut self, rhs: &QPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigUint::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(out)
    }
}

/// `[m]_q = 1 + q + ... + q^{m-1}`.
pub fn q_int(m: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![BigUint::one(); m])
}

/// `sum_i (n - i - a_i + 1)`, defined on classical parking functions.
pub fn area(pref: &ParkingPreference) -> Result<usize, NaplesError> {
    park(pref.as_slice(), 0).map_err(NaplesError::NotAParkingFunction)?;
    let n = pref.len();
    Ok(n * (n + 1) / 2 - pref.as_slice().iter().sum::<usize>())
}

/// `sum_i (n - i + y_k(i; phi_k(a)) - a_i)`.
pub fn area_k(pref: &ParkingPreference, k: NaplesParameter) -> Result<usize, NaplesError> {
    let sigma = phi_k(pref, k).map_err(|car| NaplesError::NotAKNaplesParkingFunction { k: k.0, car })?;
    let n = pref.len();
    let y = ell_profile(&sigma, k).y;
    let total: i64 = (1..=n)
        .map(|i| (n - i + y[i - 1]) as i64 - pref.at(i) as i64)
        .sum();
    Ok(usize::try_from(total).expect("area_k is non-negative on its domain"))
}

/// `prod_i [l_k(i; sigma)]_q`.
pub fn fiber_area_poly(sigma: &Permutation, k: NaplesParameter) -> QPolynomial {
    let s = sigma.as_slice();
    let mut buf = vec![0; s.len()];
    ell_k_into(s, k.0, &mut buf);
    QPolynomial::from_u64s(&small_fiber_poly(&buf))
}

/// Product of `[m]_q` factors with machine-word coefficients (bounded by `n!`).
fn small_fiber_poly(factors: &[usize]) -> Vec<u64> {
    let mut poly = vec![1u64];
    for &m in factors {
        if m == 1 {
            continue;
        }
        let mut next = vec![0u64; poly.len() + m - 1];
        // multiply by 1 + q + ... + q^{m-1} with a sliding window sum
        let mut window = 0u64;
        for (e, slot) in next.iter_mut().enumerate() {
            if e < poly.len() {
                window += poly[e];
            }
            if e >= m {
                window -= poly[e - m];
            }
            *slot = window;
        }
        poly = next;
    }
    poly
}

fn add_into(acc: &mut Vec<u128>, poly: &[u64]) {
    if acc.len() < poly.len() {
        acc.resize(poly.len(), 0);
    }
    for (a, &p) in acc.iter_mut().zip(poly) {
        *a += p as u128;
    }
}

fn merge(mut a: Vec<u128>, b: Vec<u128>) -> Vec<u128> {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// `sum_{sigma in S_n} prod_i [l_k(i; sigma)]_q`, the area_k distribution over `PF_{n,k}`.
pub fn area_distribution(n: usize, k: NaplesParameter) -> Result<QPolynomial, NaplesError> {
    area_distribution_with(n, k, EnumerationLimit::DEFAULT)
}

pub fn area_distribution_with(
    n: usize,
    k: NaplesParameter,
    limit: EnumerationLimit,
) -> Result<QPolynomial, NaplesError> {
    limit.check(n)?;
    let acc = par_fold_permutations(
        n,
        || (Vec::<u128>::new(), vec![0usize; n]),
        |(mut acc, mut buf), s| {
            ell_k_into(s, k.0, &mut buf);
            add_into(&mut acc, &small_fiber_poly(&buf));
            (acc, buf)
        },
        |(a, _), (b, _)| (merge(a, b), Vec::new()),
    );
    Ok(QPolynomial::from_coeffs(acc.0.into_iter().map(BigUint::from).collect()))
}

/// Polynomial in `q` and `t`, keyed by `(q exponent, t exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPolynomial {
    terms: BTreeMap<(usize, usize), BigUint>,
}

impl BiPolynomial {
    pub fn add_term(&mut self, q_exp: usize, t_exp: usize, coeff: BigUint) {
        if !coeff.is_zero() {
            *self.terms.entry((q_exp, t_exp)).or_default() += coeff;
        }
    }

    pub fn coeff(&self, q_exp: usize, t_exp: usize) -> BigUint {
        self.terms.get(&(q_exp, t_exp)).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &BigUint)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Specialize `t = 1`.
    pub fn q_marginal(&self) -> QPolynomial {
        let mut acc = Vec::new();
        for (&(q, _), c) in &self.terms {
            if acc.len() <= q {
                acc.resize(q + 1, BigUint::zero());
            }
            acc[q] += c;
        }
        QPolynomial::from_coeffs(acc)
    }

    /// Specialize `q = 1`.
    pub fn t_marginal(&self) -> QPolynomial {
        let mut acc = Vec::new();
        for (&(_, t), c) in &self.terms {
            if acc.len() <= t {
                acc.resize(t + 1, BigUint::zero());
            }
            acc[t] += c;
        }
        QPolynomial::from_coeffs(acc)
    }

    fn merge(mut self, other: BiPolynomial) -> BiPolynomial {
        for (e, c) in other.terms {
            *self.terms.entry(e).or_default() += c;
        }
        self
    }
}

/// `sum_sigma t^{stat(sigma)} prod_i [l(i; sigma)]_q`.
pub fn qt_distribution<S>(n: usize, stat: S) -> Result<BiPolynomial, NaplesError>
where
    S: Fn(&Permutation) -> usize + Sync + Send,
{
    qt_distribution_k(n, NaplesParameter(0), stat)
}

/// As [`qt_distribution`] with the `area_k` weights.
pub fn qt_distribution_k<S>(n: usize, k: NaplesParameter, stat: S) -> Result<BiPolynomial, NaplesError>
where
    S: Fn(&Permutation) -> usize + Sync + Send,
{
    EnumerationLimit::DEFAULT.check(n)?;
    Ok(par_fold_permutations(
        n,
        BiPolynomial::default,
        |mut acc, s| {
            let sigma = Permutation::from_vec_unchecked(s.to_vec());
            let t = stat(&sigma);
            for (q, c) in fiber_area_poly(&sigma, k).coeffs().iter().enumerate() {
                acc.add_term(q, t, c.clone());
            }
            acc
        },
        BiPolynomial::merge,
    ))
}
