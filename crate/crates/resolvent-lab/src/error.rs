//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Evaluation requested outside the open unit disk.
    #[error("point {0} lies outside the open unit disk")]
    OutsideDisk(Complex64),

    /// A domain type rejected its construction data.
    #[error("invalid {what}: {why}")]
    InvalidData { what: &'static str, why: String },

    /// Newton iteration (with homotopy fallback) exhausted its budget.
    #[error("solver did not converge at w = {w} (residual {residual:.3e} after {iterations} iterations)")]
    NoConvergence {
        w: Complex64,
        residual: f64,
        iterations: usize,
    },

    /// A Newton iterate left the admissible disk and step damping failed.
    #[error("Newton iterate escaped the admissible disk while solving at w = {w}")]
    IterateEscaped { w: Complex64 },

    /// Analytic continuation requested beyond the guaranteed radius.
    #[error("|w| = {w_abs:.6} exceeds the continuation radius rho = {rho:.6}")]
    RadiusExceeded { w_abs: f64, rho: f64 },

    /// A closed-form formula was evaluated outside its validity range.
    #[error("{what} out of range: {why}")]
    OutOfRange { what: &'static str, why: String },

    /// The rational expression A(r) has a pole at this r.
    #[error("A(r) has a pole at r = {r}")]
    PoleAtR { r: f64 },

    /// The check needs the atomic Herglotz representation.
    #[error("check requires an atomic Herglotz measure")]
    VariantUnsupported,

    /// A real-time trajectory reached the unit circle.
    #[error("trajectory escaped the unit disk at s = {s:.6} (|u| = {abs_u:.12})")]
    TrajectoryEscaped { s: f64, abs_u: f64 },

    /// The adaptive integrator exceeded its step budget.
    #[error("flow integration exceeded the step limit at s = {s:.6}")]
    StepLimit { s: f64 },

    /// Suite configuration is syntactically valid but violates a constraint.
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("failed to parse JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(what: &'static str, why: impl Into<String>) -> Self {
        Error::InvalidData {
            what,
            why: why.into(),
        }
    }

    pub fn out_of_range(what: &'static str, why: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            why: why.into(),
        }
    }

    /// True for failures of the numerical machinery itself (as opposed to
    /// domain/config violations); the CLI maps these to exit code 3.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoConvergence { .. }
                | Error::IterateEscaped { .. }
                | Error::TrajectoryEscaped { .. }
                | Error::StepLimit { .. }
        )
    }
}
