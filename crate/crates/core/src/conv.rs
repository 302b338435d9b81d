//! The endomorphism algebra `End(A)`, convolution products from
//! co-operations, the shift operators, and Baxter-identity checkers.
//!
//! `End(A)` carries composition and, for every co-operation `Δ`, the
//! convolution `T ∗ S := μ(T⊗S)Δ`.  The right shift is `β(T) = id ∗ T`,
//! the left shift `γ(T) = T ∗ id`.  Operators on `End(A)` are
//! materialised once as `dim²`-column maps over the elementary-matrix
//! basis `F[u<-v]` (image basis element left of the arrow), in row-major
//! `(u,v)` order; all operator-level checks quantify over that basis,
//! which suffices by bilinearity.
//!
//! Columns of maps over truncated models may be unavailable
//! ([`Eval::Overflow`]); checks skip and count the tuples they poison.

use std::cell::RefCell;
use std::collections::HashMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{CoOperation, FiniteAlgebra};
use crate::linalg::{Eval, Rat, SparseVec};
use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum ConvError {
    #[error("unknown co-operation `{0}`")]
    UnknownCoOperation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A linear map given column-by-column; column `j` is the image of basis
/// element `j`, possibly unavailable in a truncated model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    pub dim: usize,
    pub cols: Vec<Eval<SparseVec>>,
}

impl LinMap {
    pub fn zero(dim: usize) -> Self {
        LinMap { dim, cols: vec![Eval::Val(SparseVec::new()); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        LinMap {
            dim,
            cols: (0..dim as u32).map(|i| Eval::Val(SparseVec::basis(i))).collect(),
        }
    }

    /// Elementary map `e_v ↦ e_u`, all other basis elements to zero.
    pub fn elementary(dim: usize, u: u32, v: u32) -> Self {
        let mut m = LinMap::zero(dim);
        m.cols[v as usize] = Eval::Val(SparseVec::basis(u));
        m
    }

    pub fn col(&self, j: u32) -> &Eval<SparseVec> {
        &self.cols[j as usize]
    }

    pub fn apply(&self, v: &SparseVec) -> Eval<SparseVec> {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            match self.col(j) {
                Eval::Val(w) => out.add_scaled(w, c),
                Eval::Overflow => return Eval::Overflow,
            }
        }
        Eval::Val(out)
    }

    pub fn apply_eval(&self, v: &Eval<SparseVec>) -> Eval<SparseVec> {
        match v {
            Eval::Val(v) => self.apply(v),
            Eval::Overflow => Eval::Overflow,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        LinMap {
            dim: self.dim,
            cols: other.cols.iter().map(|c| self.apply_eval(c)).collect(),
        }
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| match (a, b) {
                (Eval::Val(a), Eval::Val(b)) => {
                    let mut v = a.clone();
                    v.add_scaled(b, &Rat::from_integer(1.into()));
                    Eval::Val(v)
                }
                _ => Eval::Overflow,
            })
            .collect();
        LinMap { dim: self.dim, cols }
    }

    pub fn scaled(&self, c: &Rat) -> LinMap {
        LinMap {
            dim: self.dim,
            cols: self.cols.iter().map(|col| col.clone().map(|v| v.scaled(c))).collect(),
        }
    }

    pub fn is_total(&self) -> bool {
        self.cols.iter().all(|c| !c.is_overflow())
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| matches!(c, Eval::Val(v) if v.is_zero()))
    }

    /// Dense column-major rational entries; total maps only.
    pub fn dense(&self) -> Option<Vec<Vec<Rat>>> {
        use num::Zero;
        let mut out = Vec::with_capacity(self.dim);
        for c in &self.cols {
            let v = c.as_val()?;
            let mut col = vec![Rat::zero(); self.dim];
            for (i, x) in v.iter() {
                col[i as usize] = x.clone();
            }
            out.push(col);
        }
        Some(out)
    }
}

/// A bilinear operation given by its `dim × dim` table of basis products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinOp {
    pub dim: usize,
    table: Vec<Eval<SparseVec>>,
}

impl BilinOp {
    pub fn zero(dim: usize) -> Self {
        BilinOp { dim, table: vec![Eval::Val(SparseVec::new()); dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(u32, u32) -> Eval<SparseVec>) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim as u32 {
            for j in 0..dim as u32 {
                table.push(f(i, j));
            }
        }
        BilinOp { dim, table }
    }

    pub fn set(&mut self, i: u32, j: u32, v: Eval<SparseVec>) {
        let d = self.dim;
        self.table[i as usize * d + j as usize] = v;
    }

    pub fn eval_basis(&self, i: u32, j: u32) -> &Eval<SparseVec> {
        &self.table[i as usize * self.dim + j as usize]
    }

    pub fn eval(&self, x: &SparseVec, y: &SparseVec) -> Eval<SparseVec> {
        let mut out = SparseVec::new();
        for (i, cx) in x.iter() {
            for (j, cy) in y.iter() {
                match self.eval_basis(i, j) {
                    Eval::Val(v) => out.add_scaled(v, &(cx * cy)),
                    Eval::Overflow => return Eval::Overflow,
                }
            }
        }
        Eval::Val(out)
    }

    pub fn eval_ev(&self, x: &Eval<SparseVec>, y: &Eval<SparseVec>) -> Eval<SparseVec> {
        match (x, y) {
            (Eval::Val(x), Eval::Val(y)) => self.eval(x, y),
            _ => Eval::Overflow,
        }
    }

    pub fn add(&self, other: &BilinOp) -> BilinOp {
        BilinOp::from_fn(self.dim, |i, j| {
            match (self.eval_basis(i, j), other.eval_basis(i, j)) {
                (Eval::Val(a), Eval::Val(b)) => {
                    let mut v = a.clone();
                    v.add_scaled(b, &Rat::from_integer(1.into()));
                    Eval::Val(v)
                }
                _ => Eval::Overflow,
            }
        })
    }

    /// `op(f(x), g(y))` for optional operators on either argument.
    pub fn precompose(&self, f: Option<&LinMap>, g: Option<&LinMap>) -> BilinOp {
        BilinOp::from_fn(self.dim, |i, j| {
            let x = match f {
                Some(f) => f.col(i).clone(),
                None => Eval::Val(SparseVec::basis(i)),
            };
            let y = match g {
                Some(g) => g.col(j).clone(),
                None => Eval::Val(SparseVec::basis(j)),
            };
            self.eval_ev(&x, &y)
        })
    }

    /// `op(y, x)`.
    pub fn flipped(&self) -> BilinOp {
        BilinOp::from_fn(self.dim, |i, j| self.eval_basis(j, i).clone())
    }

    pub fn scaled(&self, c: &Rat) -> BilinOp {
        BilinOp::from_fn(self.dim, |i, j| {
            self.eval_basis(i, j).clone().map(|v| v.scaled(c))
        })
    }

    pub fn sub(&self, other: &BilinOp) -> BilinOp {
        self.add(&other.scaled(&-Rat::from_integer(1.into())))
    }

    pub fn is_zero(&self) -> bool {
        self.table
            .iter()
            .all(|e| matches!(e, Eval::Val(v) if v.is_zero()))
    }
}

/// A basis-labelled space carrying one associative product; the common
/// carrier handed to the derived-structure constructors.
#[derive(Debug, Clone)]
pub struct ProductSpace {
    pub name: String,
    pub basis: Vec<String>,
    pub product: BilinOp,
}

impl ProductSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn from_algebra(alg: &FiniteAlgebra) -> Self {
        let dim = alg.dim();
        ProductSpace {
            name: alg.name.clone(),
            basis: alg.basis().to_vec(),
            product: BilinOp::from_fn(dim, |i, j| alg.product_basis(i, j).clone()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaxterKind {
    /// `ζ(x)∘ζ(y) = ζ(ζ(x)∘y + x∘ζ(y))`
    Full,
    /// `ζ(x)∘ζ(y) = ζ(ζ(x)∘y)`
    Right,
    /// `ζ(x)∘ζ(y) = ζ(x∘ζ(y))`
    Left,
}

impl BaxterKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "full" => Some(BaxterKind::Full),
            "right" => Some(BaxterKind::Right),
            "left" => Some(BaxterKind::Left),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BaxterKind::Full => "full",
            BaxterKind::Right => "right",
            BaxterKind::Left => "left",
        }
    }
}

/// Mixed shift laws for a pair of co-operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedLaw {
    /// `β₂(T)β₁(S) = β₁(β₂(T)S)`
    Bax12,
    /// `γ₂(T)γ₁(S) = γ₂(Tγ₁(S))`
    Bax3,
}

/// An algebra together with its named co-operations; the home of
/// convolution products and the shift operators.
pub struct ConvolutionContext<'a> {
    pub algebra: &'a FiniteAlgebra,
    pub coops: IndexMap<String, CoOperation>,
    cache: RefCell<HashMap<String, LinMap>>,
}

impl<'a> ConvolutionContext<'a> {
    pub fn new(algebra: &'a FiniteAlgebra, coops: Vec<CoOperation>) -> Self {
        let coops = coops.into_iter().map(|c| (c.name.clone(), c)).collect();
        ConvolutionContext { algebra, coops, cache: RefCell::new(HashMap::new()) }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn end_dim(&self) -> usize {
        self.dim() * self.dim()
    }

    pub fn coop(&self, name: &str) -> Result<&CoOperation, ConvError> {
        self.coops
            .get(name)
            .ok_or_else(|| ConvError::UnknownCoOperation(name.into()))
    }

    /// Labels of the elementary-matrix basis of `End(A)`.
    pub fn end_basis_labels(&self) -> Vec<String> {
        let b = self.algebra.basis();
        let mut out = Vec::with_capacity(self.end_dim());
        for u in b {
            for v in b {
                out.push(format!("{u}<-{v}"));
            }
        }
        out
    }

    fn end_index(&self, u: u32, v: u32) -> u32 {
        u * self.dim() as u32 + v
    }

    /// The endomorphism `F[u<-v]` for the End-basis coordinate `k`.
    pub fn endo_from_end_index(&self, k: u32) -> LinMap {
        let d = self.dim() as u32;
        LinMap::elementary(self.dim(), k / d, k % d)
    }

    /// Coordinates of a (total) endomorphism over the End basis.
    pub fn endo_to_vec(&self, t: &LinMap) -> Eval<SparseVec> {
        let mut out = SparseVec::new();
        for (v, col) in t.cols.iter().enumerate() {
            match col {
                Eval::Val(c) => {
                    for (u, x) in c.iter() {
                        out.add(self.end_index(u, v as u32), x.clone());
                    }
                }
                Eval::Overflow => return Eval::Overflow,
            }
        }
        Eval::Val(out)
    }

    pub fn vec_to_endo(&self, v: &SparseVec) -> LinMap {
        let d = self.dim() as u32;
        let mut m = LinMap::zero(self.dim());
        for (k, c) in v.iter() {
            let (u, w) = (k / d, k % d);
            if let Eval::Val(col) = &mut m.cols[w as usize] {
                col.add(u, c.clone());
            }
        }
        m
    }

    /// Composition of `End(A)` as a bilinear operation over the
    /// elementary basis: `F[u<-v] ∘ F[r<-s] = δ_{v,r} F[u<-s]`.
    pub fn end_composition(&self) -> BilinOp {
        let d = self.dim() as u32;
        BilinOp::from_fn(self.end_dim(), |a, b| {
            let (u, v) = (a / d, a % d);
            let (r, s) = (b / d, b % d);
            if v == r {
                Eval::Val(SparseVec::basis(u * d + s))
            } else {
                Eval::Val(SparseVec::new())
            }
        })
    }

    /// `End(A)` with composition, as a product space over the elementary
    /// basis.
    pub fn end_space(&self) -> ProductSpace {
        ProductSpace {
            name: format!("End({})", self.algebra.name),
            basis: self.end_basis_labels(),
            product: self.end_composition(),
        }
    }

    /// Convolution `T ∗ S = μ(T⊗S)Δ`, computed columnwise.
    pub fn convolve(&self, delta: &str, t: &LinMap, s: &LinMap) -> Result<LinMap, ConvError> {
        let d = self.coop(delta)?;
        if t.dim != self.dim() || s.dim != self.dim() {
            return Err(ConvError::DimensionMismatch(format!(
                "convolve expects endomorphisms of dimension {}",
                self.dim()
            )));
        }
        let mut cols = Vec::with_capacity(self.dim());
        'col: for i in 0..self.dim() as u32 {
            let mut acc = SparseVec::new();
            for (&(p, q), c) in d.on_basis(i).iter() {
                let tp = t.col(p);
                let sq = s.col(q);
                match (tp, sq) {
                    (Eval::Val(tp), Eval::Val(sq)) => match self.algebra.product(tp, sq) {
                        Eval::Val(v) => acc.add_scaled(&v, c),
                        Eval::Overflow => {
                            cols.push(Eval::Overflow);
                            continue 'col;
                        }
                    },
                    _ => {
                        cols.push(Eval::Overflow);
                        continue 'col;
                    }
                }
            }
            cols.push(Eval::Val(acc));
        }
        Ok(LinMap { dim: self.dim(), cols })
    }

    fn shift(&self, delta: &str, right: bool) -> Result<LinMap, ConvError> {
        let key = format!("{}:{}", if right { "beta" } else { "gamma" }, delta);
        if let Some(m) = self.cache.borrow().get(&key) {
            return Ok(m.clone());
        }
        let id = LinMap::identity(self.dim());
        let mut cols = Vec::with_capacity(self.end_dim());
        for k in 0..self.end_dim() as u32 {
            let f = self.endo_from_end_index(k);
            let image = if right {
                self.convolve(delta, &id, &f)?
            } else {
                self.convolve(delta, &f, &id)?
            };
            cols.push(self.endo_to_vec(&image));
        }
        let m = LinMap { dim: self.end_dim(), cols };
        self.cache.borrow_mut().insert(key, m.clone());
        Ok(m)
    }

    /// The right shift `β(T) = id ∗ T`, materialised over the End basis.
    pub fn beta(&self, delta: &str) -> Result<LinMap, ConvError> {
        self.shift(delta, true)
    }

    /// The left shift `γ(T) = T ∗ id`.
    pub fn gamma(&self, delta: &str) -> Result<LinMap, ConvError> {
        self.shift(delta, false)
    }

    /// Convolution as a bilinear operation over the End basis.
    pub fn convolution_op(&self, delta: &str) -> Result<BilinOp, ConvError> {
        let d = self.dim() as u32;
        let mut op = BilinOp::zero(self.end_dim());
        for a in 0..self.end_dim() as u32 {
            for b in 0..self.end_dim() as u32 {
                let t = LinMap::elementary(self.dim(), a / d, a % d);
                let s = LinMap::elementary(self.dim(), b / d, b % d);
                let conv = self.convolve(delta, &t, &s)?;
                op.set(a, b, self.endo_to_vec(&conv));
            }
        }
        Ok(op)
    }
}

/// Checks the Baxter identity of `kind` for `zeta` against one bilinear
/// operation, on all basis pairs of the carrier.
pub fn check_baxter(
    labels: &[String],
    op: &BilinOp,
    op_name: &str,
    zeta: &LinMap,
    kind: BaxterKind,
) -> CheckReport {
    let mut rep = CheckReport::new(format!("baxter({},{})", op_name, kind.as_str()));
    if op.dim != zeta.dim {
        rep.record_failure(
            vec!["dimension".into()],
            format!("operator dim {} vs carrier dim {}", zeta.dim, op.dim),
        );
        return rep;
    }
    for i in 0..op.dim as u32 {
        for j in 0..op.dim as u32 {
            let zi = zeta.col(i);
            let zj = zeta.col(j);
            let ei = Eval::Val(SparseVec::basis(i));
            let ej = Eval::Val(SparseVec::basis(j));
            let lhs = op.eval_ev(zi, zj);
            let inner = match kind {
                BaxterKind::Right => op.eval_ev(zi, &ej),
                BaxterKind::Left => op.eval_ev(&ei, zj),
                BaxterKind::Full => match (op.eval_ev(zi, &ej), op.eval_ev(&ei, zj)) {
                    (Eval::Val(mut a), Eval::Val(b)) => {
                        a.add_scaled(&b, &Rat::from_integer(1.into()));
                        Eval::Val(a)
                    }
                    _ => Eval::Overflow,
                },
            };
            let rhs = match inner {
                Eval::Val(v) => zeta.apply(&v),
                Eval::Overflow => Eval::Overflow,
            };
            match (lhs, rhs) {
                (Eval::Val(l), Eval::Val(r)) => {
                    let diff = l.sub(&r);
                    if diff.is_zero() {
                        rep.record_pass();
                    } else {
                        rep.record_failure(
                            vec![labels[i as usize].clone(), labels[j as usize].clone()],
                            format!("difference {}", diff),
                        );
                    }
                }
                _ => rep.record_skip(),
            }
        }
    }
    rep
}

/// The multi-operation form: the identity must hold for every named
/// operation of the carrier.
pub fn check_baxter_multi<'o>(
    labels: &[String],
    ops: impl IntoIterator<Item = (&'o str, &'o BilinOp)>,
    zeta: &LinMap,
    kind: BaxterKind,
) -> CheckReport {
    let mut rep = CheckReport::new(format!("baxter(all ops,{})", kind.as_str()));
    for (name, op) in ops {
        rep.absorb(&check_baxter(labels, op, name, zeta, kind));
    }
    rep
}

/// `op1 ∘ op2 = op2 ∘ op1` columnwise on the carrier basis.
pub fn check_commute(labels: &[String], op1: &LinMap, op2: &LinMap, id: &str) -> CheckReport {
    let mut rep = CheckReport::new(format!("commute({id})"));
    if op1.dim != op2.dim {
        rep.record_failure(
            vec!["dimension".into()],
            format!("{} vs {}", op1.dim, op2.dim),
        );
        return rep;
    }
    for k in 0..op1.dim as u32 {
        let a = op1.apply_eval(op2.col(k));
        let b = op2.apply_eval(op1.col(k));
        match (a, b) {
            (Eval::Val(a), Eval::Val(b)) => {
                let diff = a.sub(&b);
                if diff.is_zero() {
                    rep.record_pass();
                } else {
                    rep.record_failure(vec![labels[k as usize].clone()], format!("{}", diff));
                }
            }
            _ => rep.record_skip(),
        }
    }
    rep
}

/// Mixed shift law for a pair of co-operations, checked on End-basis
/// pairs.  Hypotheses are not assumed; the report states whether the law
/// holds.
pub fn check_mixed_baxter(
    ctx: &ConvolutionContext,
    d1: &str,
    d2: &str,
    law: MixedLaw,
) -> Result<CheckReport, ConvError> {
    let comp = ctx.end_composition();
    let labels = ctx.end_basis_labels();
    let (f2, f1, tag) = match law {
        MixedLaw::Bax12 => (ctx.beta(d2)?, ctx.beta(d1)?, "Bax12"),
        MixedLaw::Bax3 => (ctx.gamma(d2)?, ctx.gamma(d1)?, "Bax3"),
    };
    let mut rep = CheckReport::new(format!("{}({},{})", tag, d1, d2));
    for t in 0..ctx.end_dim() as u32 {
        for s in 0..ctx.end_dim() as u32 {
            let (lhs, rhs) = match law {
                MixedLaw::Bax12 => {
                    // β₂(T)β₁(S) = β₁(β₂(T)S)
                    let l = comp.eval_ev(f2.col(t), f1.col(s));
                    let inner = comp.eval_ev(f2.col(t), &Eval::Val(SparseVec::basis(s)));
                    let r = match inner {
                        Eval::Val(v) => f1.apply(&v),
                        Eval::Overflow => Eval::Overflow,
                    };
                    (l, r)
                }
                MixedLaw::Bax3 => {
                    // γ₂(T)γ₁(S) = γ₂(Tγ₁(S))
                    let l = comp.eval_ev(f2.col(t), f1.col(s));
                    let inner = comp.eval_ev(&Eval::Val(SparseVec::basis(t)), f1.col(s));
                    let r = match inner {
                        Eval::Val(v) => f2.apply(&v),
                        Eval::Overflow => Eval::Overflow,
                    };
                    (l, r)
                }
            };
            match (lhs, rhs) {
                (Eval::Val(l), Eval::Val(r)) => {
                    let diff = l.sub(&r);
                    if diff.is_zero() {
                        rep.record_pass();
                    } else {
                        rep.record_failure(
                            vec![labels[t as usize].clone(), labels[s as usize].clone()],
                            format!("{}", diff),
                        );
                    }
                }
                _ => rep.record_skip(),
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::special;

    #[test]
    fn id_conv_id_on_m2_delta0_is_zero() {
        let (alg, coops) = special::m2_delta0();
        let ctx = ConvolutionContext::new(&alg, coops);
        let id = LinMap::identity(4);
        let c = ctx.convolve("delta0", &id, &id).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn beta_of_zero_is_zero() {
        let (alg, coops) = special::m2_delta0();
        let ctx = ConvolutionContext::new(&alg, coops);
        let beta = ctx.beta("delta0").unwrap();
        let z = SparseVec::new();
        assert_eq!(beta.apply(&z), Eval::Val(SparseVec::new()));
    }

    #[test]
    fn id_conv_id_on_delta_lambda() {
        // image of every X_i is 0, image of 1 is 2Σ, independently of λ
        use crate::linalg::rat::{rat, ratio};
        for lam in [rat(0), rat(1), ratio(-2, 1)] {
            let (alg, coops) = special::delta_lambda(2, lam);
            let ctx = ConvolutionContext::new(&alg, coops);
            let id = LinMap::identity(alg.dim());
            let c = ctx.convolve("deltaLambda", &id, &id).unwrap();
            // basis order: 1, X1, X2
            let sigma2 = {
                let mut v = SparseVec::new();
                v.add(1, rat(2));
                v.add(2, rat(2));
                v
            };
            assert_eq!(c.col(0), &Eval::Val(sigma2));
            assert_eq!(c.col(1), &Eval::Val(SparseVec::new()));
            assert_eq!(c.col(2), &Eval::Val(SparseVec::new()));
        }
    }

    #[test]
    fn gamma_regression_fixture_on_m2_delta0() {
        // γ(F[E21<-E12]) maps E11 ↦ E22, E21 ↦ -E21, E22 ↦ -E22, E12 ↦ 0
        use crate::linalg::rat::rat;
        let (alg, coops) = special::m2_delta0();
        let ctx = ConvolutionContext::new(&alg, coops);
        let f = LinMap::elementary(4, 2, 1);
        let g = ctx.convolve("delta0", &f, &LinMap::identity(4)).unwrap();
        assert_eq!(g.col(0), &Eval::Val(SparseVec::basis(3)));
        assert_eq!(g.col(1), &Eval::Val(SparseVec::new()));
        assert_eq!(g.col(2), &Eval::Val(SparseVec::single(2, rat(-1))));
        assert_eq!(g.col(3), &Eval::Val(SparseVec::single(3, rat(-1))));
        // and the projection onto E11 is sent to zero
        let p = LinMap::elementary(4, 0, 0);
        assert!(ctx.convolve("delta0", &p, &LinMap::identity(4)).unwrap().is_zero());
    }

    #[test]
    fn identity_operator_baxter_kinds() {
        // ζ = id is right (and left) Baxter on any associative product,
        // but not a full Baxter operator on M₂.
        let (alg, _) = special::m2_delta0();
        let space = ProductSpace::from_algebra(&alg);
        let id = LinMap::identity(4);
        assert!(check_baxter(&space.basis, &space.product, "mu", &id, BaxterKind::Right).pass);
        assert!(check_baxter(&space.basis, &space.product, "mu", &id, BaxterKind::Left).pass);
        assert!(!check_baxter(&space.basis, &space.product, "mu", &id, BaxterKind::Full).pass);
        let zero = LinMap::zero(4);
        assert!(check_baxter(&space.basis, &space.product, "mu", &zero, BaxterKind::Full).pass);
    }
}
