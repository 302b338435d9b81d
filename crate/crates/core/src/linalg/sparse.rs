//! Sparse vectors and tensors over abstract basis indices, plus the
//! overflow-aware evaluation wrapper used by truncated models.
//!
//! Vectors never store zero coefficients, so equality is coefficient-wise
//! structural equality.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use super::rat::Rat;

/// Result of evaluating an expression in a truncated model.
///
/// `Overflow` marks a value that left the truncation window; it is
/// absorbing under sums and products, so any identity check touching it
/// must be skipped rather than decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Eval<T> {
    Val(T),
    Overflow,
}

impl<T> Eval<T> {
    pub fn as_val(&self) -> Option<&T> {
        match self {
            Eval::Val(v) => Some(v),
            Eval::Overflow => None,
        }
    }

    pub fn is_overflow(&self) -> bool {
        matches!(self, Eval::Overflow)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Eval<U> {
        match self {
            Eval::Val(v) => Eval::Val(f(v)),
            Eval::Overflow => Eval::Overflow,
        }
    }
}

/// Sparse rational vector indexed by `u32` basis indices.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec(BTreeMap<u32, Rat>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn single(idx: u32, coeff: Rat) -> Self {
        let mut v = SparseVec::new();
        v.add(idx, coeff);
        v
    }

    pub fn basis(idx: u32) -> Self {
        Self::single(idx, Rat::from_integer(1.into()))
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

    pub fn get(&self, idx: u32) -> Option<&Rat> {
        self.0.get(&idx)
    }

    pub fn coeff(&self, idx: u32) -> Rat {
        self.0.get(&idx).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `coeff` at `idx`, dropping the entry if it cancels to zero.
    pub fn add(&mut self, idx: u32, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let e = self.0.entry(idx).or_insert_with(Rat::zero);
        *e += coeff;
        if e.is_zero() {
            self.0.remove(&idx);
        }
    }

    pub fn add_scaled(&mut self, other: &SparseVec, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (i, x) in other.iter() {
            self.add(i, x * c);
        }
    }

    pub fn scaled(&self, c: &Rat) -> SparseVec {
        let mut out = SparseVec::new();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_scaled(other, &-Rat::from_integer(1.into()));
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.0.iter().map(|(i, c)| (*i, c))
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.keys().copied()
    }
}

impl FromIterator<(u32, Rat)> for SparseVec {
    fn from_iter<I: IntoIterator<Item = (u32, Rat)>>(iter: I) -> Self {
        let mut v = SparseVec::new();
        for (i, c) in iter {
            v.add(i, c);
        }
        v
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*[{}]", c, i)?;
        }
        Ok(())
    }
}

/// Sparse element of a twofold tensor product, keyed by basis pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor2(BTreeMap<(u32, u32), Rat>);

/// Sparse element of a threefold tensor product.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Tensor3(BTreeMap<(u32, u32, u32), Rat>);

macro_rules! tensor_impl {
    ($name:ident, $key:ty) => {
        impl $name {
            pub fn new() -> Self {
                Self(BTreeMap::new())
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_empty()
            }

            pub fn add(&mut self, key: $key, coeff: Rat) {
                if coeff.is_zero() {
                    return;
                }
                let e = self.0.entry(key).or_insert_with(Rat::zero);
                *e += coeff;
                if e.is_zero() {
                    self.0.remove(&key);
                }
            }

            pub fn iter(&self) -> impl Iterator<Item = (&$key, &Rat)> {
                self.0.iter()
            }

            pub fn sub(&self, other: &Self) -> Self {
                let mut out = self.clone();
                for (k, c) in other.iter() {
                    out.add(*k, -c.clone());
                }
                out
            }
        }
    };
}

tensor_impl!(Tensor2, (u32, u32));
tensor_impl!(Tensor3, (u32, u32, u32));

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::{rat, ratio};

    #[test]
    fn no_stored_zeros() {
        let mut v = SparseVec::new();
        v.add(3, rat(2));
        v.add(3, rat(-2));
        assert!(v.is_zero());
        v.add(1, ratio(1, 2));
        v.add(1, ratio(1, 2));
        assert_eq!(v.coeff(1), rat(1));
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn coefficientwise_equality() {
        let a: SparseVec = [(0, rat(1)), (5, ratio(2, 3))].into_iter().collect();
        let b: SparseVec = [(5, ratio(4, 6)), (0, rat(1))].into_iter().collect();
        assert_eq!(a, b);
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn tensor_cancellation() {
        let mut t = Tensor2::new();
        t.add((1, 2), rat(3));
        t.add((1, 2), rat(-3));
        assert!(t.is_zero());
    }
}
