use thiserror::Error;

use crate::algebra::AlgebraId;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("unknown generator `{name}` for algebra {algebra}")]
    UnknownGenerator { name: String, algebra: AlgebraId },
    #[error("cannot mix elements of {left} and {right}")]
    CrossAlgebraMix { left: AlgebraId, right: AlgebraId },
    #[error("negative power of `{0}` is not allowed")]
    NegativePower(String),
    #[error("(-q)^(n^2) = 1 fails for n = {n} at a primitive {order}-th root of unity")]
    RootConditionViolated { n: u32, order: u32 },
    #[error("{0} carries no Hopf structure")]
    NotAHopfAlgebra(AlgebraId),
    #[error("{0} carries no *-structure")]
    NoInvolution(AlgebraId),
    #[error("monomial {0} lies outside the declared window")]
    WindowExceeded(String),
    #[error("convolution inverse requested on non-group-like input {0}")]
    NonGrouplikeInput(String),
    #[error("value {0} does not lie in the image of A(Z2)")]
    NotInBaseImage(String),
    #[error("candidate window too small: residual {0}")]
    IncompleteWindow(String),
    #[error("linear solving is unavailable in cyclotomic mode")]
    CyclotomicModeUnsupported,
    #[error("operator support left the lattice window at {0}")]
    WindowOverflow(String),
    #[error("power iteration did not converge after {0} iterations")]
    NonConvergence(usize),
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("{0}")]
    NotInvertible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
