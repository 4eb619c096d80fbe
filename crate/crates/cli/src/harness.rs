//! Exhaustive ground truth and the cross-validation report.

use std::collections::{BTreeMap, HashMap};
use std::time::{Duration, Instant};

use naples_core::*;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::golden;

/// Largest `n` for which `[n]^n` is enumerated.
pub const ORACLE_CEILING: usize = 8;

/// Simulates every tuple in `[n]^n` and groups the successes by outcome.
/// Each group is in lexicographic order.
pub fn oracle_fibers(
    n: usize,
    k: NaplesParameter,
) -> Result<BTreeMap<Permutation, Vec<ParkingPreference>>, NaplesError> {
    oracle_fibers_with(n, k, ORACLE_CEILING)
}

pub fn oracle_fibers_with(
    n: usize,
    k: NaplesParameter,
    ceiling: usize,
) -> Result<BTreeMap<Permutation, Vec<ParkingPreference>>, NaplesError> {
    if n > ceiling {
        return Err(NaplesError::ResourceLimit { n, ceiling });
    }
    let mut out: BTreeMap<Permutation, Vec<ParkingPreference>> = BTreeMap::new();
    for p in all_preferences(n) {
        if let Ok(sigma) = phi_k(&p, k) {
            out.entry(sigma).or_default().push(p);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub range: String,
    pub passed: bool,
    /// Smallest failing input (smallest `n`, then lexicographically first).
    pub counterexample: Option<String>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub n_max: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn run<F>(&mut self, name: &str, range: String, check: F)
    where
        F: FnOnce() -> Option<String>,
    {
        let start = Instant::now();
        let counterexample = check();
        self.checks.push(CheckResult {
            name: name.to_string(),
            range,
            passed: counterexample.is_none(),
            counterexample,
            elapsed: start.elapsed(),
        });
    }
}

fn range(lo: usize, hi: usize) -> String {
    if lo > hi {
        "empty".to_string()
    } else {
        format!("n={lo}..={hi}")
    }
}

fn first_failure<I, F>(items: I, f: F) -> Option<String>
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Option<String>,
{
    items.into_iter().find_map(f)
}

/// Pairs `(n, k)` with `1 <= n <= hi`, `0 <= k < n`, in order.
fn nk_pairs(hi: usize) -> Vec<(usize, NaplesParameter)> {
    (1..=hi)
        .flat_map(|n| (0..n).map(move |k| (n, NaplesParameter(k))))
        .collect()
}

/// Every tuple of `[n]^n` lies in the constructed fiber of its outcome, and
/// each constructed fiber has exactly as many tuples as simulation finds.
fn fibers_match_oracle(n: usize, k: NaplesParameter) -> Option<String> {
    let total = if n == 0 { 1 } else { n.pow(n as u32) };
    let chunk = 1 << 14;
    let chunks: Vec<usize> = (0..total).step_by(chunk).collect();
    // per chunk: (first stray tuple, outcome counts)
    let results: Vec<(Option<ParkingPreference>, HashMap<Permutation, u64>)> = chunks
        .par_iter()
        .map(|&start| {
            let mut sets: HashMap<Permutation, AdmissibleSets> = HashMap::new();
            let mut counts: HashMap<Permutation, u64> = HashMap::new();
            for p in preferences_in(n, start..(start + chunk).min(total)) {
                let Ok(sigma) = phi_k(&p, k) else { continue };
                let sets = sets
                    .entry(sigma.clone())
                    .or_insert_with(|| AdmissibleSets::new(&sigma, k));
                if sets.offsets(&p).is_none() {
                    return (Some(p), counts);
                }
                *counts.entry(sigma).or_default() += 1;
            }
            (None, counts)
        })
        .collect();
    let mut counts: HashMap<Permutation, u64> = HashMap::new();
    for (stray, c) in results {
        if let Some(p) = stray {
            return Some(format!("n={n} k={k} pref={p}: outside the constructed fiber"));
        }
        for (sigma, v) in c {
            *counts.entry(sigma).or_default() += v;
        }
    }
    first_failure(permutations(n), |sigma| {
        let found = counts.get(&sigma).copied().unwrap_or(0);
        let built = fiber_size(&sigma, k);
        (BigUint::from(found) != built)
            .then(|| format!("n={n} k={k} sigma={sigma}: oracle {found}, formula {built}"))
    })
}

fn histogram_matches(n: usize, k: NaplesParameter) -> Option<String> {
    first_failure(permutations(n), |sigma| {
        let mut hist = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
        for p in fiber_members(&sigma, k) {
            match area_k(&p, k) {
                Ok(a) if a < hist.len() => hist[a] += 1,
                _ => return Some(format!("n={n} k={k} sigma={sigma} pref={p}: bad area_k")),
            }
        }
        let expected = fiber_area_poly(&sigma, k);
        (QPolynomial::from_u64s(&hist) != expected).then(|| {
            format!(
                "n={n} k={k} sigma={sigma}: histogram {} vs product {}",
                QPolynomial::from_u64s(&hist),
                expected
            )
        })
    })
}

fn series_from_golden(terms: &[(u128, u64)]) -> IndexedSeries {
    IndexedSeries::from_terms(terms.iter().map(|&(k, c)| (k, c)))
}

/// Runs every cross-check for `1 <= n <= n_max`.
///
/// Checks that need per-member work over every fiber are capped below
/// `n_max`; the range actually covered is recorded in each entry.
pub fn verify(n_max: usize) -> Result<VerificationReport, NaplesError> {
    if n_max > ORACLE_CEILING {
        return Err(NaplesError::ResourceLimit {
            n: n_max,
            ceiling: ORACLE_CEILING,
        });
    }
    let mut report = VerificationReport {
        n_max,
        checks: Vec::new(),
    };

    report.run("fiber-sizes-vs-oracle", range(1, n_max), || {
        first_failure(nk_pairs(n_max), |(n, k)| fibers_match_oracle(n, k))
    });

    let perm_hi = n_max.min(7);
    report.run("fiber-members-vs-oracle", range(1, perm_hi.min(6)), || {
        first_failure(nk_pairs(perm_hi.min(6)), |(n, k)| {
            let oracle = oracle_fibers(n, k).ok()?;
            first_failure(permutations(n), |sigma| {
                let built: Vec<_> = fiber_members(&sigma, k).collect();
                let expected = oracle.get(&sigma).cloned().unwrap_or_default();
                (built != expected).then(|| format!("n={n} k={k} sigma={sigma}"))
            })
        })
    });

    report.run("permutation-sum-vs-recursion", range(1, n_max), || {
        first_failure(nk_pairs(n_max), |(n, k)| {
            let a = count_npf_permsum(n, k).ok()?;
            let b = count_npf_recursive(n, k);
            (a != b).then(|| format!("n={n} k={k}: permutation sum {a}, recursion {b}"))
        })
    });

    report.run("closed-form-at-k0", range(1, n_max), || {
        first_failure(1..=n_max, |n| {
            let closed = count_pf_closed(n);
            let rec = count_npf_recursive(n, NaplesParameter(0));
            let sum = count_npf_permsum(n, NaplesParameter(0)).ok()?;
            (rec != closed || sum != closed).then(|| format!("n={n}: {closed} / {rec} / {sum}"))
        })
    });

    report.run("full-backup-is-all-preferences", range(1, n_max), || {
        first_failure(1..=n_max, |n| {
            let all = BigUint::from(n).pow(n as u32);
            let sum = count_npf_permsum(n, NaplesParameter(n - 1)).ok()?;
            (sum != all).then(|| format!("n={n}: {sum} != {all}"))
        })
    });

    report.run("monotone-nesting-and-saturation", range(1, n_max.min(6)), || {
        first_failure(1..=n_max.min(6), |n| {
            first_failure(all_preferences(n), |p| {
                let top = simulate(&p, NaplesParameter(n - 1));
                if top.is_err() || simulate(&p, NaplesParameter(n + 2)) != top {
                    return Some(format!("n={n} pref={p}: saturation"));
                }
                (0..n.saturating_sub(1)).find_map(|k| {
                    (is_naples_pf(&p, NaplesParameter(k)) && !is_naples_pf(&p, NaplesParameter(k + 1)))
                        .then(|| format!("n={n} k={k} pref={p}: nesting"))
                })
            })
        })
    });

    let gf_hi = n_max.min(8);
    report.run("fiber-series-recursions", range(1, gf_hi), || {
        first_failure(1..=gf_hi, |n| {
            let direct = fiber_gf_direct(n).ok()?;
            if fiber_gf_recursive(n).ok()? != direct {
                return Some(format!("n={n}: coefficient recursion"));
            }
            if log_gf(n) != direct {
                return Some(format!("n={n}: logarithmic recursion"));
            }
            None
        })
    });

    report.run("fiber-series-golden", range(1, n_max.min(5)), || {
        first_failure(1..=n_max.min(5), |n| {
            let direct = fiber_gf_direct(n).ok()?;
            (direct != series_from_golden(golden::FIBER_SERIES[n - 1])).then(|| format!("n={n}"))
        })
    });

    let hist_hi = n_max.min(7);
    report.run("area-k-fiber-histograms", range(1, hist_hi), || {
        first_failure(nk_pairs(hist_hi), |(n, k)| histogram_matches(n, k))
    });

    report.run("area-k-table", range(1, n_max.min(5)), || {
        first_failure(golden::AREA_K_TABLE.iter().filter(|r| r.0 <= n_max), |&(n, k, row)| {
            let got = area_distribution(n, NaplesParameter(k)).ok()?.to_latex();
            (got != golden::compact(row)).then(|| format!("n={n} k={k}: {got}"))
        })
    });

    report.run("decreasing-inequality-vs-simulation", range(1, n_max), || {
        first_failure(1..=n_max, |n| {
            first_failure(decreasing_preferences(n), |p| {
                (0..n).find_map(|k| {
                    let k = NaplesParameter(k);
                    let ok = decreasing_npf_check(&p, k).ok()?;
                    if ok != is_naples_pf(&p, k) {
                        return Some(format!("n={n} k={k} pref={p}"));
                    }
                    if ok {
                        let path = decreasing_to_klattice(&p, k).ok()?;
                        if !path.stays_below(k.0) || path.steps.first() != Some(&Step::South) {
                            return Some(format!("n={n} k={k} pref={p}: path geometry"));
                        }
                    }
                    None
                })
            })
        })
    });

    report.run("decreasing-count", range(1, n_max), || {
        first_failure(nk_pairs(n_max), |(n, k)| {
            let brute = decreasing_preferences(n)
                .iter()
                .filter(|p| is_naples_pf(p, k))
                .count();
            (count_decreasing_npf(n, k) != BigUint::from(brute)).then(|| format!("n={n} k={k}"))
        })
    });

    report.run("dyck-round-trip", range(1, n_max), || {
        first_failure(1..=n_max, |n| {
            first_failure(all_preferences(n).filter(|p| is_naples_pf(p, NaplesParameter(0))), |p| {
                let path = pf_to_labeled_dyck(&p).ok()?;
                let back = labeled_dyck_to_pf(&path).ok();
                (!path.is_dyck() || back.as_ref() != Some(&p)).then(|| format!("n={n} pref={p}"))
            })
        })
    });

    Ok(report)
}
