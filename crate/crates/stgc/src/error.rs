use thiserror::Error;

/// Errors from the scalar special-function layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("pole at x = {0} (nonpositive integer)")]
    Pole(f64),
    #[error("result overflows f64")]
    Overflow,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
}

/// Errors from the covariance engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GcError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("series did not converge within {max_terms} terms (last |term|/|sum| = {last_ratio:.3e})")]
    NoConvergence { max_terms: usize, last_ratio: f64 },
    #[error("result overflows f64")]
    Overflow,
    #[error("{0} requires {1}")]
    BranchPrecondition(&'static str, &'static str),
    #[error("parameters within {guard:.1e} of a singular configuration: {what}")]
    NearPole { what: String, guard: f64 },
    #[error(transparent)]
    Special(#[from] SpecialError),
}

/// Errors from the quadrature oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("weights do not annihilate degree-{degree} polynomials: residual {residual:.3e} exceeds {tol:.3e}")]
    AnnihilationViolation { degree: u32, residual: f64, tol: f64 },
    #[error("config order {order} is below k0 = {k0}")]
    OrderTooLow { order: u32, k0: u32 },
    #[error("theta' = {0:.3e} is within 1e-3 of 0; spectral integral is marginally divergent")]
    MarginallyDivergent(f64),
    #[error("quadrature did not reach target accuracy within budget: err_est {err_est:.3e}, target {target:.3e}")]
    NoConvergence { err_est: f64, target: f64 },
    #[error(transparent)]
    Gc(#[from] GcError),
}

/// Errors from the kriging subsystem.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum KrigingError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("bordered kriging system is singular or numerically rank-deficient (condition estimate {cond:.3e})")]
    SingularSystem { cond: f64 },
    #[error("CSV parse error at line {line}: {msg}")]
    Csv { line: usize, msg: String },
    #[error(transparent)]
    Gc(#[from] GcError),
}
