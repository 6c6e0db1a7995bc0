use alloc::string::String;
use core::fmt;

/// Errors raised anywhere in the exact pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An enumeration (group closure, subgroup lattice, automorphisms) outgrew its cap.
    CapExceeded {
        what: &'static str,
        cap: usize,
    },
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    NotNormal,
    NotSubgroup,
    /// Coercing two cyclotomic numbers would need an order above the configured bound.
    OrderIncompatible {
        left: u32,
        right: u32,
        bound: u32,
    },
    /// Internal consistency failure while building a character table.
    TableFailure(String),
    GroupMismatch,
    NotACharacter,
    /// A prime's factorization shape matches no class of the asserted group.
    ShapeMismatch {
        prime: u64,
    },
    MarkerInvalid(String),
    NoMatchingClass {
        prime: u64,
    },
    AmbiguousFrobenius {
        prime: u64,
    },
    BoundTooSmall,
    NotFaithful,
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapExceeded { what, cap } => write!(f, "{what} exceeded cap {cap}"),
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::NotNormal => f.write_str("subgroup is not normal"),
            Error::NotSubgroup => f.write_str("element set is not a subgroup of the parent"),
            Error::OrderIncompatible { left, right, bound } => {
                write!(f, "cannot coerce cyclotomic orders {left} and {right} within bound {bound}")
            }
            Error::TableFailure(msg) => write!(f, "character table failure: {msg}"),
            Error::GroupMismatch => f.write_str("class functions live on different groups"),
            Error::NotACharacter => f.write_str("identity value is not a positive rational integer"),
            Error::ShapeMismatch { prime } => {
                write!(f, "factor shape at p = {prime} matches no conjugacy class of the asserted group")
            }
            Error::MarkerInvalid(msg) => write!(f, "cyclotomic marker invalid: {msg}"),
            Error::NoMatchingClass { prime } => {
                write!(f, "no conjugacy class is compatible with p = {prime}")
            }
            Error::AmbiguousFrobenius { prime } => {
                write!(f, "Frobenius class at p = {prime} is not unique")
            }
            Error::BoundTooSmall => f.write_str("coefficient bound must be at least 1"),
            Error::NotFaithful => f.write_str("character is not faithful"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
