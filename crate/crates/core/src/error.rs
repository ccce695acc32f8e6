use thiserror::Error;

use crate::web::SignSeq;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = 1")]
    PoleAtOne,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid web diagram: {0}")]
    InvalidWeb(String),
    #[error("boundary mismatch at position {position}: expected {expected}, found {found}")]
    BoundaryMismatch { position: usize, expected: SignSeq, found: SignSeq },
    #[error("shape mismatch: {left_dom} -> {left_cod} versus {right_dom} -> {right_cod}")]
    ShapeMismatch { left_dom: SignSeq, left_cod: SignSeq, right_dom: SignSeq, right_cod: SignSeq },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
