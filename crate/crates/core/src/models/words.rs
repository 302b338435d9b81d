//! Truncated free word algebras with substitution coproducts.
//!
//! The basis is all nonempty words of length `≤ N` over the alphabet;
//! concatenation past `N` is overflow.  A per-symbol coproduct table
//! `s ↦ Σ P(s → s₁s₂) s₁⊗s₂` extends to words on one side only:
//! right extension sends `s₁…sₙ` to `s₁…sₙ₋₁ Δ(sₙ)` (the first leg
//! absorbs the prefix), left extension to `Δ(s₁) s₂…sₙ`.  Both stay
//! inside the truncation, so coproducts here are total even when
//! products are not.

use std::collections::HashMap;

use super::graph::WeightedDigraph;
use super::ModelError;
use crate::algebra::{CoOperation, FiniteAlgebra};
use crate::linalg::rat::{rat, Rat};
use crate::linalg::{Eval, SparseVec};
use num::Zero;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionSide {
    Right,
    Left,
}

/// A substitution `s ↦ left·right` with its probability (an arbitrary
/// rational; the loader reports the per-symbol sums rather than
/// requiring them to be 1).
#[derive(Debug, Clone)]
pub struct Substitution {
    pub left: u32,
    pub right: u32,
    pub prob: Rat,
}

#[derive(Debug)]
pub struct WordModel {
    pub alphabet: Vec<String>,
    pub max_len: usize,
    pub rules: Vec<Vec<Substitution>>,
    pub algebra: FiniteAlgebra,
    words: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, u32>,
}

impl WordModel {
    pub fn new(
        alphabet: Vec<String>,
        max_len: usize,
        rules: Vec<Vec<Substitution>>,
    ) -> Result<Self, ModelError> {
        if max_len < 1 {
            return Err(ModelError::TruncationTooSmall { min: 1, got: max_len });
        }
        assert_eq!(rules.len(), alphabet.len());
        let k = alphabet.len() as u32;
        let mut words: Vec<Vec<u32>> = Vec::new();
        let mut level: Vec<Vec<u32>> = (0..k).map(|s| vec![s]).collect();
        for _ in 0..max_len {
            words.extend(level.iter().cloned());
            let mut next = Vec::new();
            for w in &level {
                for s in 0..k {
                    let mut v = w.clone();
                    v.push(s);
                    next.push(v);
                }
            }
            level = next;
        }
        let index: HashMap<Vec<u32>, u32> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i as u32))
            .collect();

        let labels: Vec<String> = words
            .iter()
            .map(|w| w.iter().map(|&s| alphabet[s as usize].clone()).collect::<Vec<_>>().join(""))
            .collect();
        let mut algebra = FiniteAlgebra::new(format!("words(|S|={k}, N={max_len})"), labels);
        for (i, a) in words.iter().enumerate() {
            for (j, b) in words.iter().enumerate() {
                if a.len() + b.len() <= max_len {
                    let mut c = a.clone();
                    c.extend_from_slice(b);
                    algebra.set_product(i as u32, j as u32, SparseVec::basis(index[&c]));
                } else {
                    algebra.set_product_overflow(i as u32, j as u32);
                }
            }
        }
        Ok(WordModel { alphabet, max_len, rules, algebra, words, index })
    }

    /// Builds the word model of a weighted digraph: the alphabet is the
    /// vertex set and the substitution table reads the arcs,
    /// `v ↦ Σ w(a)·v⊗t(a)` over outgoing arcs (right side) or
    /// `v ↦ Σ w(a)·s(a)⊗v` over incoming arcs (left side).  Requires the
    /// source-target map to be injective.
    pub fn from_graph(
        g: &WeightedDigraph,
        side: ExtensionSide,
        max_len: usize,
    ) -> Result<Self, ModelError> {
        g.ensure_st_injective()?;
        let mut rules: Vec<Vec<Substitution>> = vec![Vec::new(); g.vertices.len()];
        for a in &g.arcs {
            match side {
                ExtensionSide::Right => rules[a.src as usize].push(Substitution {
                    left: a.src,
                    right: a.dst,
                    prob: a.weight.clone(),
                }),
                ExtensionSide::Left => rules[a.dst as usize].push(Substitution {
                    left: a.src,
                    right: a.dst,
                    prob: a.weight.clone(),
                }),
            }
        }
        WordModel::new(g.vertices.clone(), max_len, rules)
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn word_index(&self, w: &[u32]) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn word(&self, i: u32) -> &[u32] {
        &self.words[i as usize]
    }

    pub fn symbol_index(&self, s: &str) -> Result<u32, ModelError> {
        self.alphabet
            .iter()
            .position(|x| x == s)
            .map(|i| i as u32)
            .ok_or_else(|| ModelError::UnknownSymbol(s.into()))
    }

    /// Parses a word given either as comma-separated symbols or, when
    /// every symbol label is a single character, as a contiguous string.
    pub fn parse_word(&self, s: &str) -> Result<Vec<u32>, ModelError> {
        if s.is_empty() {
            return Err(ModelError::EmptyWord);
        }
        if s.contains(',') {
            return s.split(',').map(|p| self.symbol_index(p.trim())).collect();
        }
        if self.alphabet.iter().all(|a| a.chars().count() == 1) {
            return s
                .chars()
                .map(|c| self.symbol_index(&c.to_string()))
                .collect();
        }
        self.symbol_index(s).map(|i| vec![i])
    }

    /// One-sided sharp extension of a per-symbol coproduct table.
    pub fn coop_sharp(
        &self,
        name: impl Into<String>,
        table: &[Vec<Substitution>],
        side: ExtensionSide,
    ) -> CoOperation {
        let mut d = CoOperation::new(name, self.dim());
        for (i, w) in self.words.iter().enumerate() {
            let n = w.len();
            match side {
                ExtensionSide::Right => {
                    for sub in &table[w[n - 1] as usize] {
                        let mut first = w[..n - 1].to_vec();
                        first.push(sub.left);
                        let left = self.index[&first];
                        let right = self.index[&vec![sub.right]];
                        d.add_term(i as u32, left, right, sub.prob.clone());
                    }
                }
                ExtensionSide::Left => {
                    for sub in &table[w[0] as usize] {
                        let left = self.index[&vec![sub.left]];
                        let mut second = vec![sub.right];
                        second.extend_from_slice(&w[1..]);
                        let right = self.index[&second];
                        d.add_term(i as u32, left, right, sub.prob.clone());
                    }
                }
            }
        }
        d
    }

    /// The sharp extension of the model's own substitution table.
    pub fn delta_m(&self, side: ExtensionSide) -> CoOperation {
        let name = match side {
            ExtensionSide::Right => "deltaM",
            ExtensionSide::Left => "deltaMLeft",
        };
        self.coop_sharp(name, &self.rules, side)
    }

    /// Per-symbol sums of substitution probabilities, for reporting.
    pub fn prob_sums(&self) -> Vec<Rat> {
        self.rules
            .iter()
            .map(|rs| rs.iter().fold(Rat::zero(), |acc, s| acc + s.prob.clone()))
            .collect()
    }

    /// `t`-fold application of `μ Δ♯` to a start word: all weighted
    /// continuations of the string after `t` substitution steps.  Errors
    /// if an iterate leaves the truncation window.
    pub fn substitution_dynamics(
        &self,
        start: &[u32],
        steps: usize,
        side: ExtensionSide,
    ) -> Result<SparseVec, ModelError> {
        let Some(i0) = self.word_index(start) else {
            return Err(ModelError::DynamicsOverflow {
                step: 0,
                len: start.len(),
                max: self.max_len,
            });
        };
        let delta = self.delta_m(side);
        let mut state = SparseVec::basis(i0);
        for step in 1..=steps {
            let mut next = SparseVec::new();
            for (w, c) in state.iter() {
                for (&(p, q), cc) in delta.on_basis(w).iter() {
                    match self
                        .algebra
                        .product(&SparseVec::basis(p), &SparseVec::basis(q))
                    {
                        Eval::Val(v) => next.add_scaled(&v, &(c * cc)),
                        Eval::Overflow => {
                            return Err(ModelError::DynamicsOverflow {
                                step,
                                len: self.words[w as usize].len() + 1,
                                max: self.max_len,
                            })
                        }
                    }
                }
            }
            state = next;
        }
        Ok(state)
    }
}

/// A pointed cotrialgebra on the symbols of a word model: with a root
/// symbol `e`, set `Δ⊣(s) = s⊗e`, `Δ⊢(s) = e⊗s`, `Δ⊥ = Δ⊣`, and extend
/// on the right.  The triple satisfies all coassociative-cotrialgebra
/// axioms while keeping `Δ⊣ ≠ Δ⊢`.
pub fn pointed_cotriple(
    model: &WordModel,
    root: &str,
) -> Result<[CoOperation; 3], ModelError> {
    let e = model.symbol_index(root)?;
    let k = model.alphabet.len();
    let mut dashv_table: Vec<Vec<Substitution>> = Vec::with_capacity(k);
    let mut vdash_table: Vec<Vec<Substitution>> = Vec::with_capacity(k);
    for s in 0..k as u32 {
        dashv_table.push(vec![Substitution { left: s, right: e, prob: rat(1) }]);
        vdash_table.push(vec![Substitution { left: e, right: s, prob: rat(1) }]);
    }
    let dashv = model.coop_sharp("dDashv", &dashv_table, ExtensionSide::Right);
    let vdash = model.coop_sharp("dVdash", &vdash_table, ExtensionSide::Right);
    let mut perp = model.coop_sharp("dPerp", &dashv_table, ExtensionSide::Right);
    perp.name = "dPerp".into();
    Ok([dashv, vdash, perp])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::checks::{check_coassociativity, check_compat, check_cotrialgebra, CompatKind};

    fn doubling_model(n: usize) -> WordModel {
        // one symbol s with s ↦ ss at probability 1
        WordModel::new(
            vec!["s".into()],
            n,
            vec![vec![Substitution { left: 0, right: 0, prob: rat(1) }]],
        )
        .unwrap()
    }

    #[test]
    fn sharp_extension_of_doubling() {
        let m = doubling_model(3);
        let d = m.delta_m(ExtensionSide::Right);
        // Δ♯(ss) = ss⊗s
        let ss = m.word_index(&[0, 0]).unwrap();
        let s = m.word_index(&[0]).unwrap();
        let terms: Vec<_> = d.on_basis(ss).iter().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(*terms[0].0, (ss, s));
    }

    #[test]
    fn dynamics_of_doubling() {
        let m = doubling_model(4);
        let s = vec![0u32];
        let one = m.substitution_dynamics(&s, 1, ExtensionSide::Right).unwrap();
        assert_eq!(one, SparseVec::basis(m.word_index(&[0, 0]).unwrap()));
        let two = m.substitution_dynamics(&s, 2, ExtensionSide::Right).unwrap();
        assert_eq!(two, SparseVec::basis(m.word_index(&[0, 0, 0]).unwrap()));
        // four steps would need length 5 > 4
        let err = m.substitution_dynamics(&s, 4, ExtensionSide::Right).unwrap_err();
        assert!(matches!(err, ModelError::DynamicsOverflow { step: 4, .. }));
    }

    #[test]
    fn branching_dynamics_weights() {
        use crate::linalg::rat::ratio;
        // s ↦ ab (1/2), s ↦ ba (1/2) over alphabet {s,a,b}
        let m = WordModel::new(
            vec!["s".into(), "a".into(), "b".into()],
            3,
            vec![
                vec![
                    Substitution { left: 1, right: 2, prob: ratio(1, 2) },
                    Substitution { left: 2, right: 1, prob: ratio(1, 2) },
                ],
                vec![],
                vec![],
            ],
        )
        .unwrap();
        let out = m.substitution_dynamics(&[0], 1, ExtensionSide::Right).unwrap();
        let ab = m.word_index(&[1, 2]).unwrap();
        let ba = m.word_index(&[2, 1]).unwrap();
        assert_eq!(out.coeff(ab), ratio(1, 2));
        assert_eq!(out.coeff(ba), ratio(1, 2));
        // a has no substitutions: one step from `a` gives 0
        assert!(m.substitution_dynamics(&[1], 1, ExtensionSide::Right).unwrap().is_zero());
    }

    #[test]
    fn graph_word_model_compatibilities() {
        let g = WeightedDigraph::sample_chain6();
        let m = WordModel::from_graph(&g, ExtensionSide::Right, 2).unwrap();
        let d = m.delta_m(ExtensionSide::Right);
        // Δ_M(e1) = w12 · e1⊗e2 on symbols
        let terms: Vec<_> = d.on_basis(0).iter().collect();
        assert_eq!(terms.len(), 1);
        assert_eq!(*terms[0].0, (0, 1));
        assert_eq!(terms[0].1, &rat(2));
        // the sharp extension of a graph table is primed-right compatible
        let rep = check_compat(&m.algebra, &d, CompatKind::EpsPrimeR);
        assert!(rep.pass, "{:?}", rep.first_failure());

        let ml = WordModel::from_graph(&g, ExtensionSide::Left, 2).unwrap();
        let dl = ml.delta_m(ExtensionSide::Left);
        let rep = check_compat(&ml.algebra, &dl, CompatKind::EpsPrimeL);
        assert!(rep.pass, "{:?}", rep.first_failure());
    }

    #[test]
    fn pointed_cotriple_satisfies_cotrialgebra_axioms() {
        let m = WordModel::new(vec!["e".into(), "a".into()], 2, vec![vec![], vec![]]).unwrap();
        let [dl, dr, dp] = pointed_cotriple(&m, "e").unwrap();
        assert_ne!(dl, dr);
        let rep = check_cotrialgebra(&m.algebra, &dl, &dr, &dp);
        assert!(rep.pass, "{:?}", rep.first_failure());
        for d in [&dl, &dr, &dp] {
            assert!(check_coassociativity(&m.algebra, d).pass);
            assert!(check_compat(&m.algebra, d, CompatKind::EpsR).pass);
        }
    }

    #[test]
    fn prob_sums_are_reported() {
        let m = doubling_model(2);
        assert_eq!(m.prob_sums(), vec![rat(1)]);
    }
}
