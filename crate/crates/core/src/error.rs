use thiserror::Error;

/// The car (1-based) that could not find a spot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("car {0} drove off the street")]
pub struct FailedCar(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NaplesError {
    #[error("invalid preference: {0}")]
    InvalidPreference(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a parking function ({0})")]
    NotAParkingFunction(FailedCar),
    #[error("not a {k}-Naples parking function ({car})")]
    NotAKNaplesParkingFunction { k: usize, car: FailedCar },
    #[error("preference is not weakly decreasing")]
    NotDecreasing,
    #[error("decreasing preference is not a {k}-Naples parking function")]
    NotInPfNk { k: usize },
    #[error("invalid lattice path: {0}")]
    InvalidPath(String),
    #[error("n = {n} exceeds the enumeration ceiling {ceiling}")]
    ResourceLimit { n: usize, ceiling: usize },
}

pub type Result<T, E = NaplesError> = std::result::Result<T, E>;
