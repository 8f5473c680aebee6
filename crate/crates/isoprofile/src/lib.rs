//! Relative isoperimetric profile of the notched unit square.
//!
//! The domain is the one-parameter family of polygons
//! `Q_a = [0,1]^2 \ [0,a)^2` with `0 <= a < 1`: a unit square with a small
//! square of side `a` removed from one corner. For a prescribed area
//! `t <= (1 - a^2)/2` the *relative isoperimetric profile* `f_a(t)` is the
//! least possible length of boundary drawn inside the domain that cuts off a
//! region of area exactly `t` (boundary lying on the walls of `Q_a` is free).
//!
//! This crate computes `f_a(t)` in closed form, classifies the optimal
//! region for every `(a, t)`, solves the implicit constants that separate
//! the regimes of the formula, and cross-checks everything against an
//! independent enumeration of competitor regions.
//!
//! * [`geometry`]: the candidate regions (quarter disks, chords, circular
//!   arcs through the non-convex corner) and their exact area/perimeter
//!   formulas.
//! * [`solvers`]: bracketed root-finding for the implicit quantities:
//!   the maximal arc angle, the angle-from-area inversion, and the
//!   breakpoint constants `alpha`, `beta`, `gamma`, `t0`, `sigma(a)`,
//!   `tau(a)`.
//! * [`profile`]: the piecewise evaluation of `f_a(t)` with minimizer
//!   classification and derivative certificates.
//! * [`oracle`]: independent candidate enumeration, including region
//!   families that are always suboptimal and two-part disconnected
//!   competitors.
//! * [`corner_checks`]: numeric verification of the corner-avoiding
//!   deformation inequalities that force minimizers away from convex
//!   corners.
//! * [`verify`]: the named check suites behind `isoprofile verify`.
//! * [`cli`]: the `isoprofile` command-line interface.
//!
//! ```
//! use isoprofile::{NotchParam, SolverConfig, solvers::Breakpoints, profile};
//!
//! let bp = Breakpoints::compute(SolverConfig::default()).unwrap();
//! let a = NotchParam::new(0.0).unwrap();
//! let point = profile::evaluate(a, 0.25, &bp).unwrap();
//! // On the square (a = 0) small areas are cut off by a quarter disk.
//! assert!((point.perimeter - (std::f64::consts::PI * 0.25).sqrt()).abs() < 1e-12);
//! ```

use std::fmt;

pub mod cli;
pub mod corner_checks;
pub mod geometry;
pub mod oracle;
pub mod profile;
pub(crate) mod rng;
pub mod solvers;
pub mod verify;

pub use geometry::{CandidateRegion, Corner, NotchParam, RegionKind};
pub use profile::ProfilePoint;
pub use solvers::{Breakpoints, SolverConfig};

// The guide's code samples run as doctests, so `cargo test` keeps the book
// in sync with the library.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/notched-square.md")]
    pub struct NotchedSquare;
    #[doc = include_str!("../../../book/src/corner-arc.md")]
    pub struct CornerArc;
    #[doc = include_str!("../../../book/src/constants.md")]
    pub struct Constants;
    #[doc = include_str!("../../../book/src/profile.md")]
    pub struct Profile;
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub struct Oracle;
    #[doc = include_str!("../../../book/src/corner-deformations.md")]
    pub struct CornerDeformations;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}

/// Errors shared by every numeric module of the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A scalar argument lies outside its mathematical domain.
    Domain { name: &'static str, value: f64 },
    /// An argument lies outside the interval on which the operation is defined.
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    /// The region's parameters do not place it inside the domain.
    InfeasibleRegion,
    /// A bracketing solve was requested on an interval without a sign change.
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    /// Root refinement did not converge within the iteration budget.
    NoConvergence { max_iter: u32 },
    /// No arc of unit perimeter encloses the requested area.
    NoSolution { t: f64, t0: f64 },
    /// The requested area is not on the arc branch of the profile.
    NotOnArcBranch { t: f64 },
    /// Two formulas that must agree at a regime boundary disagreed.
    Inconsistent { what: &'static str },
    /// Invalid solver configuration.
    InvalidConfig { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { name, value } => {
                write!(f, "argument `{name}` = {value} is outside its domain")
            }
            Error::OutOfRange {
                name,
                value,
                lo,
                hi,
            } => write!(
                f,
                "argument `{name}` = {value} is outside the interval [{lo}, {hi}]"
            ),
            Error::InfeasibleRegion => write!(f, "region does not fit inside the domain"),
            Error::NoSignChange { lo, hi, f_lo, f_hi } => write!(
                f,
                "no sign change on bracket [{lo}, {hi}]: f({lo}) = {f_lo}, f({hi}) = {f_hi}"
            ),
            Error::NoConvergence { max_iter } => {
                write!(
                    f,
                    "root finder did not converge within {max_iter} iterations"
                )
            }
            Error::NoSolution { t, t0 } => write!(
                f,
                "no unit-perimeter arc encloses area {t} (solvable only up to {t0})"
            ),
            Error::NotOnArcBranch { t } => {
                write!(f, "area {t} is not on the arc branch of the profile")
            }
            Error::Inconsistent { what } => write!(f, "internal inconsistency: {what}"),
            Error::InvalidConfig { what } => write!(f, "invalid solver configuration: {what}"),
        }
    }
}

impl std::error::Error for Error {}

/// Formats `x` with `sig` significant digits, deterministically.
///
/// Output is positional for moderate magnitudes and scientific otherwise, so
/// reports and CSV files are byte-stable across runs.
pub(crate) fn format_sig(x: f64, sig: usize) -> String {
    debug_assert!(sig >= 1);
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if mag < -4 || mag >= sig as i32 {
        format!("{:.*e}", sig - 1, x)
    } else {
        let decimals = (sig as i32 - 1 - mag).max(0) as usize;
        format!("{:.*}", decimals, x)
    }
}
