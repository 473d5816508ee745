use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("generated group exceeds the closure bound of {0} elements")]
    ClosureBoundExceeded(usize),
    #[error("generator matrix is not invertible")]
    NonInvertibleMatrix,
    #[error("character table diagonalization failed: {0}")]
    DiagonalizationFailure(String),
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("{what}: size {size} exceeds budget {budget}")]
    BudgetExceeded {
        what: String,
        size: usize,
        budget: usize,
    },
    #[error("vector of weight {weight} lies above the operator cutoff {cutoff}")]
    CutoffTooSmall { weight: usize, cutoff: usize },
    #[error("trace pairing is degenerate")]
    DegeneratePairing,
    #[error("model mismatch: {0}")]
    ModelMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("group has no 2x2 matrix model")]
    MissingMatrixModel,
    #[error("not an affine ADE diagram: {0}")]
    NotAffineADE(String),
    #[error("zero prefactor for probe {0}")]
    ZeroPrefactor(String),
    #[error("non-integral result: {0}")]
    NonIntegralResult(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Element-count ceiling for brute-force computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub usize);

impl Default for Budget {
    fn default() -> Self {
        Budget(50_000)
    }
}

impl Budget {
    pub fn check(&self, what: &str, size: usize) -> Result<()> {
        if size > self.0 {
            return Err(Error::BudgetExceeded {
                what: what.to_string(),
                size,
                budget: self.0,
            });
        }
        Ok(())
    }
}
