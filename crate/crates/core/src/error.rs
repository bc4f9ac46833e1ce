use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}: graphs are simple")]
    Loop(usize),

    #[error("edge ({0}, {1}) already present")]
    EdgePresent(usize, usize),

    #[error("edge ({0}, {1}) not present")]
    EdgeMissing(usize, usize),

    #[error("infeasible family parameters: {0}")]
    InfeasibleFamily(String),

    #[error("{what} supports n <= {max}, got n = {n}")]
    ScaleLimit { what: &'static str, n: usize, max: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),

    #[error("zero vector has no eigen residual")]
    ZeroVector,

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("Jacobi iteration did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("{formula}: negative discriminant {discriminant} at {inputs}; solver spectrum {solver:?}")]
    FormulaDiscrepancy {
        formula: &'static str,
        inputs: String,
        discriminant: f64,
        solver: Vec<f64>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),
}
