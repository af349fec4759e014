use thiserror::Error;

use crate::roots::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {family:?}{rank}")]
    UnsupportedSystem { family: Family, rank: usize },

    #[error("lattice vectors live in different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),

    #[error("vertex v{0} cannot be used for a Dynkin twist")]
    InvalidTwistVertex(usize),

    #[error("{0} is not a positive root of the expected system")]
    NotPositiveRoot(String),

    #[error("{0} is not a root of the expected system")]
    NotARoot(String),

    #[error("invalid stratum label {0}")]
    InvalidStratum(usize),

    #[error("modulus {0} is not prime")]
    NotPrime(u32),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u32),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),

    #[error("no compression: {p} does not divide det(A) = {det}")]
    NoCompression { p: u32, det: i64 },

    #[error("induced images of the simple roots are not distinct and non-zero")]
    DegenerateImages,

    #[error("images of the simple roots violate the Cartan relations: {0}")]
    InvalidImages(String),

    #[error("cannot reduce modulus {p} to {reduced}")]
    InvalidReduction { p: u32, reduced: u32 },

    #[error("{0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),

    #[error("{vector} is not in {set}")]
    NotInSet { vector: String, set: &'static str },

    #[error("root {0} lies in the top stratum")]
    TopStratumRoot(String),

    #[error("not an order ideal")]
    NotAnIdeal,

    #[error("ideal lies in part {0} of the partition, expected part 1")]
    WrongPart(usize),

    #[error("cannot parse {0:?}")]
    Parse(String),

    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
