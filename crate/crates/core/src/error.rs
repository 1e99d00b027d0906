use thiserror::Error;

/// Errors raised across the library. The CLI maps these onto exit codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("{function}: argument outside domain ({detail})")]
    Domain { function: &'static str, detail: String },

    #[error("{what} did not converge after {iterations} iterations (last estimate {estimate:e}, error {error:e})")]
    NonConvergence {
        what: &'static str,
        iterations: usize,
        estimate: f64,
        error: f64,
    },

    #[error("{what}: cancellation loses more precision than available ({detail})")]
    Cancellation { what: &'static str, detail: String },

    #[error("density is singular at psi = {psi}")]
    SingularPoint { psi: f64 },

    #[error("psi = {psi} lies inside the exclusion window (half-width {window}) of a singular point")]
    ExcludedPoint { psi: f64, window: f64 },

    #[error("no closed form available for {0}")]
    NoClosedForm(String),

    #[error("invalid billiard specification: {0}")]
    InvalidSpec(String),

    #[error("point ({x}, {y}) lies outside the domain")]
    OutsideDomain { x: f64, y: f64 },

    #[error("operation not supported for shape {0}")]
    UnsupportedShape(String),

    #[error("insufficient expected mass for chi-square test: {0}")]
    InsufficientMass(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable machine-readable tag for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Pole { .. } => "pole",
            Error::Domain { .. } => "domain",
            Error::NonConvergence { .. } => "non_convergence",
            Error::Cancellation { .. } => "cancellation",
            Error::SingularPoint { .. } => "singular_point",
            Error::ExcludedPoint { .. } => "excluded_point",
            Error::NoClosedForm(_) => "no_closed_form",
            Error::InvalidSpec(_) => "invalid_spec",
            Error::OutsideDomain { .. } => "outside_domain",
            Error::UnsupportedShape(_) => "unsupported_shape",
            Error::InsufficientMass(_) => "insufficient_mass",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }

    /// True for failures of a numerical method rather than of the input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonConvergence { .. } | Error::Cancellation { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
