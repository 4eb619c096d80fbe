//! k-Naples parking functions.
//!
//! A parking preference assigns each of `n` cars a preferred spot on a
//! one-way street with `n` spots. Under the k-Naples rule a car that finds
//! its spot taken first backs up through as many as `k` spots before
//! driving forward. This crate simulates that rule, describes the fibers of
//! the outcome map over permutations, counts `PF_{n,k}` several
//! independent ways, and computes the area statistics and their q-analogs.

pub mod enumeration;
pub mod error;
pub mod fibers;
pub mod parking;
pub mod paths;
pub mod perm;
pub mod qstats;

pub use enumeration::{
    c_coeff, count_npf_permsum, count_npf_permsum_with, count_npf_recursive, count_pf_closed,
    fiber_gf_direct, fiber_gf_direct_with, fiber_gf_recursive, log_gf, EnumerationLimit,
    FiberCoefficients, IndexedSeries,
};
pub use error::{FailedCar, NaplesError};
pub use fibers::{ell, ell_profile, fiber_members, fiber_size, AdmissibleSets, EllProfile, FiberMembers};
pub use parking::{
    all_preferences, decreasing_preferences, preferences_in, is_naples_pf, phi_k, simulate, NaplesParameter, Outcome,
    ParkingPreference,
};
pub use paths::{
    count_decreasing_npf, decreasing_npf_check, decreasing_to_klattice, labeled_dyck_to_pf,
    pf_to_labeled_dyck, LatticePath, Step,
};
pub use perm::{par_fold_permutations, permutations, Permutation};
pub use qstats::{
    area, area_distribution, area_distribution_with, area_k, fiber_area_poly, q_int, qt_distribution,
    qt_distribution_k, BiPolynomial, QPolynomial,
};
