use crate::rational::Rational;
use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {x} lies outside the unit interval")]
    OutsideUnitInterval { x: Rational },

    #[error("invalid breakpoint list: {reason}")]
    InvalidBreakpoints { reason: String },

    #[error("not an increasing self-homeomorphism of [0,1]: {reason}")]
    NotHomeomorphism { reason: String },

    #[error("value {y} is attained on a flat segment; its preimage is an interval")]
    FlatSegmentPreimage { y: Rational },

    #[error("duplicate abscissa {x} in point list")]
    DuplicateAbscissa { x: Rational },

    #[error("no one-sided slope: {side} of {x} is outside the domain")]
    SlopeAtBoundary { x: Rational, side: &'static str },

    #[error("not a carcass map: {clause}")]
    NotCarcass { clause: String },

    #[error("index out of range: {detail}")]
    IndexOutOfRange { detail: String },

    #[error("index {index} does not fit in {digits} binary digits")]
    DigitWidth { index: u64, digits: u32 },

    #[error("lattice depth {depth} is insufficient: {required} levels required")]
    InsufficientDepth { depth: u32, required: u32 },

    #[error("precondition violated: {detail}")]
    Precondition { detail: String },

    #[error("resource limit exceeded: {detail}")]
    ResourceLimit { detail: String },

    #[error("malformed map file: {detail}")]
    MalformedMapFile { detail: String },

    #[error("internal invariant breached: {detail}")]
    InternalInvariant { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn internal(detail: impl Into<String>) -> Self {
        Error::InternalInvariant { detail: detail.into() }
    }
}
