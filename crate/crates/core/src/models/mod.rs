//! Concrete algebra models: matrix algebras with their coproduct
//! families, truncated path and word algebras, and the truncated
//! polynomial integration operator.

pub mod graph;
pub mod poly;
pub mod special;
pub mod words;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("unknown model name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },
    #[error("arc endpoint `{0}` is not a declared vertex")]
    UnknownVertex(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("truncation must be at least {min}; got {got}")]
    TruncationTooSmall { min: usize, got: usize },
    #[error("step {step} of the dynamics leaves the truncation window (length {len} > {max})")]
    DynamicsOverflow { step: usize, len: usize, max: usize },
    #[error("source-target map is not injective: duplicate arc {0} -> {1}")]
    NotInjective(String, String),
    #[error("word is empty")]
    EmptyWord,
}
