//! Exact rational scalars, sparse vectors over abstract basis indices,
//! and integer matrices with fraction-free rank computation.

pub mod rank;
pub mod rat;
pub mod sparse;

pub use rank::IntMatrix;
pub use rat::Rat;
pub use sparse::{Eval, SparseVec, Tensor2, Tensor3};
