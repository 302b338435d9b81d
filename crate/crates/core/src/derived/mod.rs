//! Multi-product algebras: the derived split structures, their
//! constructors, symmetry transforms and relation verification.

pub mod build;
pub mod transform;
pub mod verify;

use indexmap::IndexMap;
use thiserror::Error;

use crate::conv::{BilinOp, ConvError};
use crate::operad::OperadError;
use crate::report::CheckReport;

/// A basis-labelled vector space with a named family of bilinear
/// operations.  Operation names follow the generator names of the
/// matching presentation so relation verification can pair them up.
#[derive(Debug, Clone)]
pub struct MultiProductAlgebra {
    pub name: String,
    pub basis: Vec<String>,
    pub ops: IndexMap<String, BilinOp>,
    /// Operation subsets whose sums the structure's axioms make
    /// associative (the cluster for genuine splittings, the designated
    /// associative operation otherwise).
    pub clusters: Vec<Vec<String>>,
}

impl MultiProductAlgebra {
    pub fn new(name: impl Into<String>, basis: Vec<String>) -> Self {
        MultiProductAlgebra {
            name: name.into(),
            basis,
            ops: IndexMap::new(),
            clusters: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn insert_op(&mut self, name: impl Into<String>, op: BilinOp) {
        let name = name.into();
        debug_assert_eq!(op.dim, self.dim());
        debug_assert!(!self.ops.contains_key(&name), "duplicate operation name");
        self.ops.insert(name, op);
    }

    pub fn op(&self, name: &str) -> Result<&BilinOp, DeriveError> {
        self.ops.get(name).ok_or_else(|| DeriveError::MissingOp {
            op: name.into(),
            have: self.ops.keys().cloned().collect(),
        })
    }

    /// Pointwise sum of the named operations.
    pub fn sum_of(&self, names: &[String]) -> Result<BilinOp, DeriveError> {
        let mut acc = BilinOp::zero(self.dim());
        for n in names {
            acc = acc.add(self.op(n)?);
        }
        Ok(acc)
    }
}

/// A constructed structure together with the hypothesis checks it was
/// built under and the verification of its relation matrix.
#[derive(Debug)]
pub struct Derived {
    pub structure: String,
    pub mpa: MultiProductAlgebra,
    pub hypotheses: Vec<CheckReport>,
    pub checks: Vec<CheckReport>,
    pub notes: Vec<String>,
}

impl Derived {
    pub fn pass(&self) -> bool {
        self.hypotheses.iter().all(|r| r.pass) && self.checks.iter().all(|r| r.pass)
    }

    pub fn all_reports(&self) -> impl Iterator<Item = &CheckReport> {
        self.hypotheses.iter().chain(self.checks.iter())
    }
}

#[derive(Debug, Error)]
pub enum DeriveError {
    #[error("hypotheses for `{structure}` failed: {failed:?} (use force to build anyway)")]
    HypothesisFailed {
        structure: String,
        failed: Vec<String>,
    },
    #[error("operation `{op}` missing; available: {have:?}")]
    MissingOp { op: String, have: Vec<String> },
    #[error("operation/generator name mismatch: preset `{preset}` needs {needed:?}")]
    NameMismatch { preset: String, needed: Vec<String> },
    #[error(transparent)]
    Conv(#[from] ConvError),
    #[error(transparent)]
    Operad(#[from] OperadError),
}
