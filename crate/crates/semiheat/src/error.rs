//! Crate-wide error type.

use core::fmt;

/// Everything that can go wrong inside the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A precondition on a plain argument failed (message names the argument).
    InvalidArgument(&'static str),
    /// Two fields/operators built on different grids were combined.
    GridMismatch,
    /// An operation requiring a nonzero field received the zero field.
    ZeroField,
    /// A construction does not fit inside the truncated domain.
    DomainTooSmall {
        required_half_width: f64,
        half_width: f64,
    },
    /// Explicit time step exceeds its stability bound.
    CflViolation { dt: f64, dt_max: f64 },
    /// A time step produced NaN/Inf; the caller treats this as blow-up.
    NonfiniteState,
    /// The small-data construction is undefined for `p = ∞`.
    UnsupportedP,
    /// The requested profile is narrower than the mesh can resolve.
    ResolutionTooCoarse { width: f64, min_width: f64 },
    /// No candidate time produced a heat-kernel integral below the threshold.
    NoWitnessFound,
    /// Trajectory snapshots are too sparse to evaluate a time functional.
    SnapshotGap,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::GridMismatch => write!(f, "fields live on different grids"),
            Error::ZeroField => write!(f, "operation undefined for the zero field"),
            Error::DomainTooSmall {
                required_half_width,
                half_width,
            } => write!(
                f,
                "domain too small: need half-width {required_half_width}, have {half_width}"
            ),
            Error::CflViolation { dt, dt_max } => {
                write!(f, "time step {dt} exceeds stability bound {dt_max}")
            }
            Error::NonfiniteState => {
                write!(f, "time step produced a non-finite state (blow-up)")
            }
            Error::UnsupportedP => write!(f, "construction unsupported for p = infinity"),
            Error::ResolutionTooCoarse { width, min_width } => write!(
                f,
                "profile width {width} unresolved; mesh requires at least {min_width}"
            ),
            Error::NoWitnessFound => write!(f, "no witness time found among candidates"),
            Error::SnapshotGap => write!(f, "trajectory snapshots too sparse"),
        }
    }
}

impl core::error::Error for Error {}
