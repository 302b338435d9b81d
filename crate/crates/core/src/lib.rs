//! Exact-arithmetic verification engine for split associative structures.
//!
//! The crate verifies, over the rationals and with no rounding anywhere,
//! the algebraic structures that arise from Baxter operators and
//! convolution shifts on finite-dimensional algebras: dendriform
//! dialgebras, quadri- and octo-algebras, dipterous and `[M]`-type
//! four-operation algebras, hypercubic and circular families, associative
//! di-/trialgebras with their Leibniz brackets, and the compatibility
//! checks between products and co-operations that feed all of them.
//! A small non-symmetric operad calculus computes dimension sequences of
//! the corresponding binary quadratic presentations by exact integer rank
//! computations.
//!
//! Organisation:
//!
//! * [`linalg`] — exact rationals, sparse vectors, integer matrices and
//!   fraction-free rank computation.
//! * [`algebra`] — finite-dimensional algebras, co-operations and the
//!   bialgebra-compatibility checkers.
//! * [`conv`] — the endomorphism space `End(A)`, convolution products,
//!   the shift operators and Baxter-identity checkers.
//! * [`derived`] — constructors and verifiers for every derived
//!   multi-product structure, plus the symmetry transforms between them.
//! * [`operad`] — tree monomials, quadratic presentations and dimension
//!   sequences.
//! * [`models`] — truncated models of the infinite-dimensional examples:
//!   path algebras of weighted digraphs, word algebras with substitution
//!   coproducts, truncated polynomial integration.
//! * [`io`] — the JSON file formats and report types used by the CLI.

pub mod algebra;
pub mod conv;
pub mod derived;
pub mod io;
pub mod linalg;
pub mod models;
pub mod operad;
pub mod report;

pub use linalg::rat::Rat;
pub use report::CheckReport;
