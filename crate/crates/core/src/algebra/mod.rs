//! Finite-dimensional associative algebras over exact rationals, given by
//! structure constants over a named basis, together with co-operations
//! `A -> A (x) A` stored as sparse coefficient tables.
//!
//! Nothing here is assumed: associativity, coassociativity and every
//! compatibility flavour are *checked* on basis tuples by the verifiers
//! in [`checks`].  All identities in scope are multilinear, so holding on
//! basis tuples is equivalent to holding on the whole space.
//!
//! Products of truncated models may step outside the modelled window;
//! such entries are stored as [`Eval::Overflow`] and poison any
//! evaluation that touches them, so checkers skip (and count) those
//! tuples instead of deciding them.

pub mod checks;

use std::collections::HashMap;

use crate::linalg::{Eval, Rat, SparseVec, Tensor2, Tensor3};

#[derive(Debug, Clone)]
pub struct FiniteAlgebra {
    pub name: String,
    basis: Vec<String>,
    index: HashMap<String, u32>,
    /// `dim*dim` row-major table; entry `(i,j)` is the product `e_i e_j`.
    mu: Vec<Eval<SparseVec>>,
    pub unit: Option<SparseVec>,
}

impl FiniteAlgebra {
    pub fn new(name: impl Into<String>, basis: Vec<String>) -> Self {
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect();
        let dim = basis.len();
        FiniteAlgebra {
            name: name.into(),
            basis,
            index,
            mu: vec![Eval::Val(SparseVec::new()); dim * dim],
            unit: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: u32) -> &str {
        &self.basis[i as usize]
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.index.get(label).copied()
    }

    pub fn set_product(&mut self, i: u32, j: u32, value: SparseVec) {
        let d = self.dim();
        self.mu[i as usize * d + j as usize] = Eval::Val(value);
    }

    /// Marks `e_i e_j` as leaving the truncation window.
    pub fn set_product_overflow(&mut self, i: u32, j: u32) {
        let d = self.dim();
        self.mu[i as usize * d + j as usize] = Eval::Overflow;
    }

    pub fn product_basis(&self, i: u32, j: u32) -> &Eval<SparseVec> {
        &self.mu[i as usize * self.dim() + j as usize]
    }

    /// Bilinear extension of the structure constants.
    pub fn product(&self, x: &SparseVec, y: &SparseVec) -> Eval<SparseVec> {
        let mut out = SparseVec::new();
        for (i, cx) in x.iter() {
            for (j, cy) in y.iter() {
                match self.product_basis(i, j) {
                    Eval::Val(v) => out.add_scaled(v, &(cx * cy)),
                    Eval::Overflow => return Eval::Overflow,
                }
            }
        }
        Eval::Val(out)
    }

    pub fn has_overflow(&self) -> bool {
        self.mu.iter().any(|e| e.is_overflow())
    }

    pub fn vec_to_string(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in v.iter() {
            parts.push(format!("{}·{}", c, self.label(i)));
        }
        parts.join(" + ")
    }
}

/// A linear map `A -> A (x) A` given by its values on basis elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoOperation {
    pub name: String,
    delta: Vec<Tensor2>,
}

impl CoOperation {
    pub fn new(name: impl Into<String>, dim: usize) -> Self {
        CoOperation { name: name.into(), delta: vec![Tensor2::new(); dim] }
    }

    pub fn from_table(name: impl Into<String>, delta: Vec<Tensor2>) -> Self {
        CoOperation { name: name.into(), delta }
    }

    pub fn dim(&self) -> usize {
        self.delta.len()
    }

    pub fn add_term(&mut self, on: u32, left: u32, right: u32, coeff: Rat) {
        self.delta[on as usize].add((left, right), coeff);
    }

    pub fn on_basis(&self, i: u32) -> &Tensor2 {
        &self.delta[i as usize]
    }

    /// Linear extension to a vector.
    pub fn apply(&self, v: &SparseVec) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, c) in v.iter() {
            for (&(p, q), cc) in self.on_basis(i).iter() {
                out.add((p, q), c * cc);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.delta.iter().all(|t| t.is_zero())
    }

    pub fn scaled(&self, name: impl Into<String>, c: &Rat) -> CoOperation {
        let mut out = CoOperation::new(name, self.dim());
        for (i, t) in self.delta.iter().enumerate() {
            for (&(p, q), cc) in t.iter() {
                out.add_term(i as u32, p, q, c * cc);
            }
        }
        out
    }
}

/// `a · (x (x) y) = ax (x) y` — the left bimodule action on `A⊗A`.
pub fn act_left(alg: &FiniteAlgebra, a: &SparseVec, t: &Tensor2) -> Eval<Tensor2> {
    let mut out = Tensor2::new();
    for (&(p, q), c) in t.iter() {
        match alg.product(a, &SparseVec::basis(p)) {
            Eval::Val(ap) => {
                for (r, cr) in ap.iter() {
                    out.add((r, q), c * cr);
                }
            }
            Eval::Overflow => return Eval::Overflow,
        }
    }
    Eval::Val(out)
}

/// `(x (x) y) · a = x (x) ya` — the right bimodule action.
pub fn act_right(alg: &FiniteAlgebra, t: &Tensor2, a: &SparseVec) -> Eval<Tensor2> {
    let mut out = Tensor2::new();
    for (&(p, q), c) in t.iter() {
        match alg.product(&SparseVec::basis(q), a) {
            Eval::Val(qa) => {
                for (r, cr) in qa.iter() {
                    out.add((p, r), c * cr);
                }
            }
            Eval::Overflow => return Eval::Overflow,
        }
    }
    Eval::Val(out)
}

/// `(Δ (x) id)` applied to a two-tensor.
pub fn delta_on_first(d: &CoOperation, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::new();
    for (&(p, q), c) in t.iter() {
        for (&(a, b), cc) in d.on_basis(p).iter() {
            out.add((a, b, q), c * cc);
        }
    }
    out
}

/// `(id (x) Δ)` applied to a two-tensor.
pub fn delta_on_second(d: &CoOperation, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::new();
    for (&(p, q), c) in t.iter() {
        for (&(a, b), cc) in d.on_basis(q).iter() {
            out.add((p, a, b), c * cc);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::rat;

    #[test]
    fn product_extension_is_bilinear() {
        // dim-2 algebra with e0*e0 = e1, everything else zero
        let mut a = FiniteAlgebra::new("t", vec!["x".into(), "y".into()]);
        a.set_product(0, 0, SparseVec::basis(1));
        let v = SparseVec::single(0, rat(3));
        match a.product(&v, &v) {
            Eval::Val(p) => assert_eq!(p, SparseVec::single(1, rat(9))),
            Eval::Overflow => panic!("unexpected overflow"),
        }
    }

    #[test]
    fn overflow_poisons_products() {
        let mut a = FiniteAlgebra::new("t", vec!["x".into(), "y".into()]);
        a.set_product_overflow(0, 0);
        let v = SparseVec::basis(0);
        assert!(a.product(&v, &v).is_overflow());
        // but products avoiding the marked pair stay defined
        let w = SparseVec::basis(1);
        assert_eq!(a.product(&v, &w), Eval::Val(SparseVec::new()));
    }
}
