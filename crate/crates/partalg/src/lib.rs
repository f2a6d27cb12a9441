//! Exact-arithmetic partition algebras `P_k(n)`.
//!
//! The crate implements the partition algebra in its two distinguished bases
//! (diagram and orbit), the change of basis through the Möbius function of the
//! set-partition lattice, the representation on tensor powers of the
//! permutation module of the symmetric group, and the combinatorics that
//! controls multiplicities: Bratteli diagrams, vacillating tableaux,
//! set-partition tableaux, and symmetric-group characters.
//!
//! All coefficients are exact rationals ([`Rational`]); counts are
//! arbitrary-precision integers. No floating point is used anywhere.
//!
//! Half-integer levels are encoded by an odd `two_k`: an element with
//! `two_k = 2k - 1` lives in `P_{k-1/2}(n)`, realized inside the partition
//! lattice on `2k` points by requiring `k` and `2k` to share a block.

pub mod algebra;
pub mod characters;
pub mod combinatorics;
pub mod setpart;
pub mod tableaux;
pub mod tensorrep;

pub use num::{BigInt, BigUint};

/// Exact rational scalar used for all algebra coefficients.
pub type Rational = num::BigRational;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("ground set must be nonempty")]
    EmptyGroundSet,
    #[error("ground-set sizes differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("ground-set size {0} is odd where an even size was required")]
    OddGroundSet(usize),
    #[error("set partitions are not comparable in the refinement order")]
    NotComparable,
    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),
    #[error("invalid integer partition: {0}")]
    InvalidIntegerPartition(String),
    #[error("algebra parameters differ: ({0}, {1}) vs ({2}, {3})")]
    ParameterMismatch(usize, usize, usize, usize),
    #[error("key on {got} points is inconsistent with two_k = {two_k}")]
    InconsistentGroundSet { two_k: usize, got: usize },
    #[error("half-integer element must keep {mid} and {last} in one block")]
    HalfAlgebraViolation { mid: usize, last: usize },
    #[error("generator index {index} out of range for k = {k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("e_{{k,n}} requires 2k > n, got two_k = {two_k}, n = {n}")]
    NotInKernelRange { two_k: usize, n: usize },
    #[error("embedding target two_k = {target} is smaller than {current}")]
    ShrinkingEmbed { target: usize, current: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("permutation is not a bijection of [1, n]")]
    NotAPermutation,
    #[error("partition sizes do not match: |{0}| vs expected {1}")]
    SizeMismatch(String, usize),
    #[error("formula requires n >= 2k, got n = {n}, two_k = {two_k}")]
    OutOfTheoremRange { two_k: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid vacillating sequence: {0}")]
    InvalidVacillating(String),
}

pub type Result<T> = std::result::Result<T, Error>;
