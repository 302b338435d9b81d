//! Free binary non-symmetric operad term calculus: planar-tree monomials,
//! partial composition, quadratic presentations, and dimension sequences
//! computed by exact integer rank.

pub mod dims;
pub mod presets;
pub mod tree;

pub use dims::{dims, generating_series, DimensionReport, ResourceGuard};
pub use presets::{preset, preset_names, OperadPresentation};
pub use tree::{enumerate_monomials, enumerate_shapes, Shape, TreeMonomial, TreeVec};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum OperadError {
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("ideal components start at arity 3; got {0}")]
    ArityTooSmall(usize),
    #[error("leaf index {index} out of range for arity {arity}")]
    LeafOutOfRange { index: usize, arity: usize },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("relation references generator index {0} out of range")]
    BadGenerator(usize),
    #[error("empty relation vector")]
    EmptyRelation,
    #[error(
        "arity {arity} needs a {rows}x{cols} matrix ({cells} cells), above the ceiling {ceiling}; raise {env} to allow it"
    )]
    TooLarge {
        arity: usize,
        rows: usize,
        cols: usize,
        cells: u128,
        ceiling: u128,
        env: String,
    },
}
