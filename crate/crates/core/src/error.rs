//! Crate-wide error type.

use core::fmt;

/// Errors reported by the exact layers of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The operation needs an even number of generators; inner elements for
    /// the fundamental involutions need not exist in odd dimension.
    OddDimension(u32),
    /// The operation is meaningless on the 0-generator scalar algebra.
    ZeroDimension,
    /// More generators than the blade bitmask supports.
    TooManyGenerators(u32),
    /// Two multivectors (or a multivector and a spec) disagree on the
    /// number of generators.
    MismatchedSpec { left: u32, right: u32 },
    /// Expected a single basis blade with a nonzero coefficient.
    NotSingleBlade,
    /// Expected a blade squaring to `+1` or `-1` exactly.
    NotUnitSquare,
    /// `u v u^-1` is not `+v` or `-v`; the inputs are not blades of the
    /// same algebra or an upstream construction is broken.
    NotProportional,
    /// A blade with zero coefficient cannot be inverted.
    NotInvertible,
    /// Inconsistent `(r, p)` counts for a generator specification.
    InvalidCounts { k: u32, l: u32, r: u32, p: u32 },
    /// A defining involution action failed on a generator; signals an
    /// internal inconsistency in the blade layer.
    ActionMismatch {
        involution: &'static str,
        generator: u32,
    },
    /// A bit-relation chain did not close; signals a blade-layer bug.
    BitRelationMismatch(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OddDimension(n) => {
                write!(f, "inner involution elements need even dimension, got n = {n}")
            }
            Error::ZeroDimension => write!(f, "operation undefined for a 0-generator algebra"),
            Error::TooManyGenerators(n) => {
                write!(f, "at most {} generators supported, got {n}", crate::blades::MAX_GENERATORS)
            }
            Error::MismatchedSpec { left, right } => {
                write!(f, "mismatched generator counts: {left} vs {right}")
            }
            Error::NotSingleBlade => write!(f, "expected a single basis blade"),
            Error::NotUnitSquare => write!(f, "blade square is not +1 or -1"),
            Error::NotProportional => write!(f, "conjugation result is not +/- the input blade"),
            Error::NotInvertible => write!(f, "blade is not invertible"),
            Error::InvalidCounts { k, l, r, p } => {
                write!(f, "inadmissible counts: k = {k}, l = {l}, r = {r}, p = {p}")
            }
            Error::ActionMismatch { involution, generator } => {
                write!(f, "{involution} action failed on generator {generator}")
            }
            Error::BitRelationMismatch(which) => {
                write!(f, "bit relation `{which}` did not hold")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
