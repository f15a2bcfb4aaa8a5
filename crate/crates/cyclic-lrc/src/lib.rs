//! Cyclic locally repairable codes over finite fields.
//!
//! Builds cyclic codes of length n | q-1 and n | q+1 whose defining sets are
//! arranged so the code is an optimal (r, delta) locally repairable code:
//! the dimension, the BCH lower bound, and the Singleton-like upper bound are
//! all checked mechanically, and every repair group's restricted code is
//! verified to tolerate delta-1 erasures. A small CLI (`lrc`) exposes
//! construction, certification, parameter sweeps, and repair demos; the
//! `examples/` directory walks through each capability.

pub mod cli;
pub mod construct;
pub mod cyclic;
pub mod descriptor;
pub mod field;
pub mod linalg;
pub mod locality;
pub mod poly;
pub mod reference;
pub mod repair;

use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{p} is not prime")]
    NotPrime { p: u64 },

    #[error("field size {size} exceeds the supported cap {cap}")]
    SizeCapExceeded { size: u64, cap: u64 },

    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },

    #[error("length {n} does not divide {order}")]
    LengthNotDividing { n: usize, order: u64 },

    #[error("field has no declared base subfield")]
    NoDeclaredBase,

    #[error("operands belong to different field contexts")]
    MixedContexts,

    #[error("polynomial division by zero")]
    DivisionByZeroPoly,

    #[error("coefficient {index} lies outside the declared base subfield")]
    CoefficientOutsideSubfield { index: usize },

    #[error("defining set is not conjugacy-closed: {exponent} maps to {image} which is missing")]
    NotConjugacyClosed { exponent: usize, image: usize },

    #[error("length {n} shares a factor with the field characteristic of GF({q})")]
    LengthNotCoprime { n: usize, q: u64 },

    #[error("search space of {size} words exceeds the cap {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },

    #[error("group size {group} does not divide length {n}")]
    GroupSizeNotDividing { group: usize, n: usize },

    #[error("parameters outside construction domain: {reason}")]
    ParamDomain { reason: String },

    #[error("zero progression {list:?} leaves the admissible range 0..={max}")]
    ProgressionOutOfRange { list: Vec<usize>, max: usize },

    #[error("no construction covers q={q}, n={n}, k={k}, r={r}, delta={delta}, b={b}: {reason}")]
    NoMatchingCase {
        q: u64,
        n: usize,
        k: usize,
        r: usize,
        delta: usize,
        b: usize,
        reason: String,
    },

    #[error("no cyclic MDS code exists for odd q, even n, even k (q={q}, n={n}, k={k})")]
    NonexistentMDS { q: u64, n: usize, k: usize },

    #[error("group {group} has {count} erasures, more than delta-1 = {max}")]
    TooManyLocalErasures { group: usize, count: usize, max: usize },

    #[error("coordinate {coord} is not erased")]
    NotErased { coord: usize },

    #[error("erasure pattern is not uniquely decodable ({erased} erasures)")]
    TooManyErasures { erased: usize },

    #[error("known symbols are inconsistent with the code's parity checks")]
    InconsistentWord,

    #[error("descriptor does not match the rebuilt code: {what}")]
    DescriptorMismatch { what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
