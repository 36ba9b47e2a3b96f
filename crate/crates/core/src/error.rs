use thiserror::Error;

/// Errors raised by the algebra modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("order must be at least 2, got {0}")]
    InvalidOrder(usize),

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("cyclotomic coefficient overflow")]
    Overflow,

    #[error("form degree {degree} out of range for order {order}")]
    DegreeOutOfRange { degree: usize, order: usize },

    #[error("element is not homogeneous in form degree")]
    NotHomogeneous,

    #[error("element is not in the span of the generators 1, x, y")]
    NotGenerator,
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
