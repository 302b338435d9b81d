//! Planar binary trees with generator-labelled internal nodes: the
//! monomial basis of the free binary non-symmetric operad.
//!
//! Canonical conventions, fixed once:
//! * shapes at arity `n` are enumerated with the left-subtree size
//!   ascending, recursively (so arity 3 lists the left comb `(xy)z`
//!   before the right comb `x(yz)`);
//! * monomials enumerate labels lexicographically in root-first
//!   left-to-right preorder;
//! * `graft(t, i, s)` replaces leaf `i` (1-based, left to right) of `t`
//!   by `s`.

use std::collections::BTreeMap;
use std::fmt::Write;

use num::Zero;

use super::OperadError;
use crate::linalg::Rat;

/// Unlabelled planar binary tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Shape {
    Leaf,
    Node(Box<Shape>, Box<Shape>),
}

impl Shape {
    pub fn arity(&self) -> usize {
        match self {
            Shape::Leaf => 1,
            Shape::Node(l, r) => l.arity() + r.arity(),
        }
    }

    /// Balanced-parenthesis encoding, e.g. `((xx)x)`.
    pub fn encode(&self) -> String {
        let mut s = String::new();
        fn go(t: &Shape, s: &mut String) {
            match t {
                Shape::Leaf => s.push('x'),
                Shape::Node(l, r) => {
                    s.push('(');
                    go(l, s);
                    go(r, s);
                    s.push(')');
                }
            }
        }
        go(self, &mut s);
        s
    }
}

/// A labelled planar binary tree: one generator per internal node.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TreeMonomial {
    Leaf,
    Node(u16, Box<TreeMonomial>, Box<TreeMonomial>),
}

impl TreeMonomial {
    pub fn generator(g: u16) -> Self {
        TreeMonomial::Node(g, Box::new(TreeMonomial::Leaf), Box::new(TreeMonomial::Leaf))
    }

    /// Arity-3 left comb `(x ∘inner y) ∘outer z`.
    pub fn left_comb(outer: u16, inner: u16) -> Self {
        TreeMonomial::Node(
            outer,
            Box::new(TreeMonomial::generator(inner)),
            Box::new(TreeMonomial::Leaf),
        )
    }

    /// Arity-3 right comb `x ∘outer (y ∘inner z)`.
    pub fn right_comb(outer: u16, inner: u16) -> Self {
        TreeMonomial::Node(
            outer,
            Box::new(TreeMonomial::Leaf),
            Box::new(TreeMonomial::generator(inner)),
        )
    }

    pub fn arity(&self) -> usize {
        match self {
            TreeMonomial::Leaf => 1,
            TreeMonomial::Node(_, l, r) => l.arity() + r.arity(),
        }
    }

    pub fn shape(&self) -> Shape {
        match self {
            TreeMonomial::Leaf => Shape::Leaf,
            TreeMonomial::Node(_, l, r) => Shape::Node(Box::new(l.shape()), Box::new(r.shape())),
        }
    }

    /// Internal-node labels in root-first left-to-right preorder.
    pub fn labels(&self) -> Vec<u16> {
        let mut out = Vec::new();
        fn go(t: &TreeMonomial, out: &mut Vec<u16>) {
            if let TreeMonomial::Node(g, l, r) = t {
                out.push(*g);
                go(l, out);
                go(r, out);
            }
        }
        go(self, &mut out);
        out
    }

    /// Replaces leaf `i` (1-based) by `s`.
    pub fn graft(&self, i: usize, s: &TreeMonomial) -> Result<TreeMonomial, OperadError> {
        let arity = self.arity();
        if i == 0 || i > arity {
            return Err(OperadError::LeafOutOfRange { index: i, arity });
        }
        fn go(t: &TreeMonomial, i: usize, s: &TreeMonomial) -> TreeMonomial {
            match t {
                TreeMonomial::Leaf => {
                    debug_assert_eq!(i, 1);
                    s.clone()
                }
                TreeMonomial::Node(g, l, r) => {
                    let la = l.arity();
                    if i <= la {
                        TreeMonomial::Node(*g, Box::new(go(l, i, s)), r.clone())
                    } else {
                        TreeMonomial::Node(*g, l.clone(), Box::new(go(r, i - la, s)))
                    }
                }
            }
        }
        Ok(go(self, i, s))
    }

    pub fn to_string_with(&self, gens: &[String]) -> String {
        let mut s = String::new();
        fn go(t: &TreeMonomial, gens: &[String], s: &mut String) {
            match t {
                TreeMonomial::Leaf => s.push('x'),
                TreeMonomial::Node(g, l, r) => {
                    let _ = write!(s, "{}(", gens[*g as usize]);
                    go(l, gens, s);
                    s.push(',');
                    go(r, gens, s);
                    s.push(')');
                }
            }
        }
        go(self, gens, &mut s);
        s
    }
}

/// All planar binary tree shapes with `n` leaves, in canonical order;
/// there are `Catalan(n-1)` of them.
pub fn enumerate_shapes(n: usize) -> Result<Vec<Shape>, OperadError> {
    if n == 0 {
        return Err(OperadError::ZeroArity);
    }
    fn go(n: usize) -> Vec<Shape> {
        if n == 1 {
            return vec![Shape::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..n {
            for l in go(k) {
                for r in go(n - k) {
                    out.push(Shape::Node(Box::new(l.clone()), Box::new(r)));
                }
            }
        }
        out
    }
    Ok(go(n))
}

/// All labelled monomials of the given arity over `g` generators, in
/// canonical order (shape-major, then labels lexicographic in preorder).
pub fn enumerate_monomials(n: usize, g: usize) -> Result<Vec<TreeMonomial>, OperadError> {
    if n == 0 {
        return Err(OperadError::ZeroArity);
    }
    fn go(n: usize, g: usize) -> Vec<TreeMonomial> {
        if n == 1 {
            return vec![TreeMonomial::Leaf];
        }
        let mut out = Vec::new();
        for gen in 0..g as u16 {
            for k in 1..n {
                for l in go(k, g) {
                    for r in go(n - k, g) {
                        out.push(TreeMonomial::Node(gen, Box::new(l.clone()), Box::new(r)));
                    }
                }
            }
        }
        out
    }
    // Root-label-major matches preorder-lexicographic enumeration.
    Ok(go(n, g))
}

pub fn catalan(n: usize) -> u64 {
    // small n only
    let mut c: u128 = 1;
    for i in 0..n as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c as u64
}

/// Sparse rational combination of tree monomials of one arity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeVec(BTreeMap<TreeMonomial, Rat>);

impl TreeVec {
    pub fn new() -> Self {
        TreeVec(BTreeMap::new())
    }

    pub fn add(&mut self, m: TreeMonomial, c: Rat) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TreeMonomial, &Rat)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn arity(&self) -> Option<usize> {
        self.0.keys().next().map(|m| m.arity())
    }

    /// Grafts every monomial at leaf `i` with `s` (linear in `self`).
    pub fn graft_with(&self, i: usize, s: &TreeMonomial) -> Result<TreeVec, OperadError> {
        let mut out = TreeVec::new();
        for (m, c) in self.iter() {
            out.add(m.graft(i, s)?, c.clone());
        }
        Ok(out)
    }

    /// Grafts `s` at leaf `i` of `host`, substituting `self` for `s`'s
    /// position — i.e. `host ∘ᵢ self`, linear in `self`.
    pub fn graft_into(&self, host: &TreeMonomial, i: usize) -> Result<TreeVec, OperadError> {
        let mut out = TreeVec::new();
        for (m, c) in self.iter() {
            out.add(host.graft(i, m)?, c.clone());
        }
        Ok(out)
    }
}

impl FromIterator<(TreeMonomial, Rat)> for TreeVec {
    fn from_iter<I: IntoIterator<Item = (TreeMonomial, Rat)>>(iter: I) -> Self {
        let mut v = TreeVec::new();
        for (m, c) in iter {
            v.add(m, c);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::rat;

    #[test]
    fn shape_counts_are_catalan() {
        assert_eq!(enumerate_shapes(2).unwrap().len(), 1);
        assert_eq!(enumerate_shapes(3).unwrap().len(), 2);
        assert_eq!(enumerate_shapes(4).unwrap().len(), 5);
        assert_eq!(enumerate_shapes(5).unwrap().len(), 14);
        assert!(enumerate_shapes(0).is_err());
    }

    #[test]
    fn monomial_counts() {
        // Catalan(n-1) * g^(n-1)
        assert_eq!(enumerate_monomials(3, 2).unwrap().len(), 8);
        assert_eq!(enumerate_monomials(4, 2).unwrap().len(), 40);
        assert_eq!(enumerate_monomials(3, 8).unwrap().len(), 128);
    }

    #[test]
    fn graft_builds_combs() {
        let a = TreeMonomial::generator(0);
        let b = TreeMonomial::generator(1);
        // graft a at leaf 1 of b: (x a x) at first slot of b = left comb, root b
        let left = b.graft(1, &a).unwrap();
        assert_eq!(left, TreeMonomial::left_comb(1, 0));
        assert_eq!(left.labels(), vec![1, 0]);
        let right = b.graft(2, &a).unwrap();
        assert_eq!(right, TreeMonomial::right_comb(1, 0));
        assert_eq!(right.labels(), vec![1, 0]);
        assert!(b.graft(3, &a).is_err());
    }

    #[test]
    fn graft_left_comb_regression() {
        // grafting c at leaf 3 of the left comb (a,b) hangs c on the
        // rightmost leaf: labels read (a, b, c) in preorder.
        let comb = TreeMonomial::left_comb(0, 1); // root a=0, inner b=1
        let c = TreeMonomial::generator(2);
        let t = comb.graft(3, &c).unwrap();
        assert_eq!(t.labels(), vec![0, 1, 2]);
        assert_eq!(t.arity(), 4);
        assert_eq!(t.shape().encode(), "((xx)(xx))");
    }

    #[test]
    fn treevec_cancels() {
        let mut v = TreeVec::new();
        v.add(TreeMonomial::generator(0), rat(1));
        v.add(TreeMonomial::generator(0), rat(-1));
        assert!(v.is_zero());
    }
}
