//! Weighted directed graphs and their truncated path algebras.
//!
//! The path algebra has the vertices as orthogonal idempotents and the
//! paths of length `1..=N` as the rest of the basis; concatenation of
//! composable paths is the product.  Products whose length would exceed
//! the truncation are marked as overflow — never silently zero — so
//! every identity check stays sound on the modelled window.

use std::collections::HashMap;

use super::ModelError;
use crate::algebra::{CoOperation, FiniteAlgebra};
use crate::linalg::rat::{rat, ratio, Rat};
use crate::linalg::{Eval, SparseVec, Tensor2};

#[derive(Debug, Clone)]
pub struct Arc {
    pub src: u32,
    pub dst: u32,
    pub weight: Rat,
}

#[derive(Debug, Clone)]
pub struct WeightedDigraph {
    pub vertices: Vec<String>,
    pub arcs: Vec<Arc>,
}

impl WeightedDigraph {
    pub fn new(
        vertices: Vec<String>,
        arcs: Vec<(String, String, Rat)>,
    ) -> Result<Self, ModelError> {
        let index: HashMap<&str, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i as u32))
            .collect();
        let mut out = Vec::with_capacity(arcs.len());
        for (s, t, w) in arcs {
            let src = *index.get(s.as_str()).ok_or(ModelError::UnknownVertex(s.clone()))?;
            let dst = *index.get(t.as_str()).ok_or(ModelError::UnknownVertex(t.clone()))?;
            out.push(Arc { src, dst, weight: w });
        }
        Ok(WeightedDigraph { vertices, arcs: out })
    }

    /// Whether `s × t` is injective (no parallel arcs).
    pub fn st_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.arcs.iter().all(|a| seen.insert((a.src, a.dst)))
    }

    pub fn ensure_st_injective(&self) -> Result<(), ModelError> {
        if self.st_injective() {
            return Ok(());
        }
        let mut seen = std::collections::BTreeSet::new();
        for a in &self.arcs {
            if !seen.insert((a.src, a.dst)) {
                return Err(ModelError::NotInjective(
                    self.vertices[a.src as usize].clone(),
                    self.vertices[a.dst as usize].clone(),
                ));
            }
        }
        unreachable!()
    }

    /// A chain `v1 -> v2 -> … -> vk` with the given arc weights.
    pub fn chain(labels: &[&str], weights: &[Rat]) -> Self {
        assert_eq!(labels.len(), weights.len() + 1);
        let vertices: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let arcs = weights
            .iter()
            .enumerate()
            .map(|(i, w)| Arc { src: i as u32, dst: i as u32 + 1, weight: w.clone() })
            .collect();
        WeightedDigraph { vertices, arcs }
    }

    /// The shipped sample: a 6-vertex chain with distinct small rational
    /// weights.
    pub fn sample_chain6() -> Self {
        Self::chain(
            &["1", "2", "3", "4", "5", "6"],
            &[rat(2), ratio(3, 2), rat(5), ratio(7, 3), rat(11)],
        )
    }
}

/// One basis element of the truncated path algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathElem {
    Vertex(u32),
    /// A composable sequence of arc indices, length `1..=max_len`.
    Path(Vec<u32>),
}

#[derive(Debug)]
pub struct PathAlgebra {
    pub graph: WeightedDigraph,
    pub max_len: usize,
    pub algebra: FiniteAlgebra,
    pub elems: Vec<PathElem>,
}

impl PathAlgebra {
    pub fn new(graph: WeightedDigraph, max_len: usize) -> Result<Self, ModelError> {
        if max_len < 1 {
            return Err(ModelError::TruncationTooSmall { min: 1, got: max_len });
        }
        let mut elems: Vec<PathElem> =
            (0..graph.vertices.len() as u32).map(PathElem::Vertex).collect();
        let mut frontier: Vec<Vec<u32>> =
            (0..graph.arcs.len() as u32).map(|a| vec![a]).collect();
        for _ in 0..max_len {
            elems.extend(frontier.iter().cloned().map(PathElem::Path));
            let mut next = Vec::new();
            for p in &frontier {
                let end = graph.arcs[*p.last().unwrap() as usize].dst;
                for (ai, a) in graph.arcs.iter().enumerate() {
                    if a.src == end {
                        let mut q = p.clone();
                        q.push(ai as u32);
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }

        let labels: Vec<String> = elems.iter().map(|e| Self::label_of(&graph, e)).collect();
        let mut algebra = FiniteAlgebra::new(
            format!("paths({}, N={})", graph.vertices.len(), max_len),
            labels,
        );

        let start = |e: &PathElem| match e {
            PathElem::Vertex(v) => *v,
            PathElem::Path(p) => graph.arcs[p[0] as usize].src,
        };
        let end = |e: &PathElem| match e {
            PathElem::Vertex(v) => *v,
            PathElem::Path(p) => graph.arcs[*p.last().unwrap() as usize].dst,
        };
        let index: HashMap<Vec<u32>, u32> = elems
            .iter()
            .enumerate()
            .filter_map(|(i, e)| match e {
                PathElem::Path(p) => Some((p.clone(), i as u32)),
                PathElem::Vertex(_) => None,
            })
            .collect();

        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                let (i, j) = (i as u32, j as u32);
                if end(a) != start(b) {
                    algebra.set_product(i, j, SparseVec::new());
                    continue;
                }
                let value = match (a, b) {
                    (PathElem::Vertex(_), _) => Some(SparseVec::basis(j)),
                    (_, PathElem::Vertex(_)) => Some(SparseVec::basis(i)),
                    (PathElem::Path(p), PathElem::Path(q)) => {
                        if p.len() + q.len() <= max_len {
                            let mut r = p.clone();
                            r.extend_from_slice(q);
                            Some(SparseVec::basis(index[&r]))
                        } else {
                            None
                        }
                    }
                };
                match value {
                    Some(v) => algebra.set_product(i, j, v),
                    None => algebra.set_product_overflow(i, j),
                }
            }
        }
        Ok(PathAlgebra { graph, max_len, algebra, elems })
    }

    fn label_of(graph: &WeightedDigraph, e: &PathElem) -> String {
        match e {
            PathElem::Vertex(v) => format!("e{}", graph.vertices[*v as usize]),
            PathElem::Path(p) => p
                .iter()
                .map(|&a| {
                    let arc = &graph.arcs[a as usize];
                    format!(
                        "a({},{})",
                        graph.vertices[arc.src as usize], graph.vertices[arc.dst as usize]
                    )
                })
                .collect::<Vec<_>>()
                .join(""),
        }
    }

    pub fn vertex_index(&self, v: u32) -> u32 {
        v
    }

    /// Basis index of the path following the given vertex labels.
    pub fn path_by_vertices(&self, labels: &[&str]) -> Option<u32> {
        let vs: Option<Vec<u32>> = labels
            .iter()
            .map(|l| self.graph.vertices.iter().position(|v| v == l).map(|i| i as u32))
            .collect();
        let vs = vs?;
        if vs.len() == 1 {
            return Some(vs[0]);
        }
        let mut arcs = Vec::new();
        for w in vs.windows(2) {
            let ai = self
                .graph
                .arcs
                .iter()
                .position(|a| a.src == w[0] && a.dst == w[1])?;
            arcs.push(ai as u32);
        }
        self.elems.iter().position(|e| matches!(e, PathElem::Path(p) if *p == arcs)).map(|i| i as u32)
    }

    /// The derivation-style coproduct: vertices to zero, an arc to
    /// `w·e_src⊗e_dst`, a path to the sum over positions where one arrow
    /// is split out and the prefix/suffix absorb the endpoints.
    pub fn epsilon_coproduct(&self) -> CoOperation {
        let mut d = CoOperation::new("delta", self.algebra.dim());
        for (i, e) in self.elems.iter().enumerate() {
            let PathElem::Path(p) = e else { continue };
            for (k, &ai) in p.iter().enumerate() {
                let arc = &self.graph.arcs[ai as usize];
                let left = if k == 0 {
                    arc.src
                } else {
                    self.index_of_arcs(&p[..k])
                };
                let right = if k + 1 == p.len() {
                    arc.dst
                } else {
                    self.index_of_arcs(&p[k + 1..])
                };
                d.add_term(i as u32, left, right, arc.weight.clone());
            }
        }
        d
    }

    fn index_of_arcs(&self, arcs: &[u32]) -> u32 {
        self.elems
            .iter()
            .position(|e| matches!(e, PathElem::Path(p) if p.as_slice() == arcs))
            .expect("sub-path stays within truncation") as u32
    }

    /// `Δ_M(α) = α ⊗ Σ(arcs)` on every basis element (vertices are
    /// length-zero paths here).
    pub fn delta_m(&self) -> CoOperation {
        let mut d = CoOperation::new("deltaM", self.algebra.dim());
        let arc_indices: Vec<u32> = self
            .elems
            .iter()
            .enumerate()
            .filter_map(|(i, e)| matches!(e, PathElem::Path(p) if p.len() == 1).then_some(i as u32))
            .collect();
        for i in 0..self.algebra.dim() as u32 {
            for &a in &arc_indices {
                d.add_term(i, i, a, rat(1));
            }
        }
        d
    }

    /// `(μ⊗id)(id⊗Δ)Δ_M(α)`: the weighted continuations of `α`, equal to
    /// `Σ_j w(t(α)→j) · α ⊗ e_j` over the arcs leaving the endpoint of
    /// `α`.  The composite multiplies `α` only by vertices, so it can
    /// never overflow the truncation.
    pub fn research_map(&self, alpha: u32) -> Tensor2 {
        let delta = self.epsilon_coproduct();
        let delta_m = self.delta_m();
        let mut out = Tensor2::new();
        for (&(x, arc), c) in delta_m.on_basis(alpha).iter() {
            for (&(s, t), w) in delta.on_basis(arc).iter() {
                match self.algebra.product(&SparseVec::basis(x), &SparseVec::basis(s)) {
                    Eval::Val(v) => {
                        for (r, cr) in v.iter() {
                            out.add((r, t), c * w * cr);
                        }
                    }
                    Eval::Overflow => {
                        unreachable!("research map multiplies a path only by a vertex")
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::checks::{check_associativity, check_compat, CompatKind};

    fn chain_algebra(n: usize) -> PathAlgebra {
        PathAlgebra::new(WeightedDigraph::sample_chain6(), n).unwrap()
    }

    #[test]
    fn chain6_basis_size() {
        // 6 vertices + 5 + 4 + 3 + 2 paths at N = 4
        let p = chain_algebra(4);
        assert_eq!(p.algebra.dim(), 20);
        assert!(p.graph.st_injective());
    }

    #[test]
    fn path_algebra_is_associative_where_defined() {
        let p = chain_algebra(3);
        let rep = check_associativity(&p.algebra);
        assert!(rep.pass);
        assert!(rep.skipped > 0);
    }

    #[test]
    fn vertex_idempotents() {
        let p = chain_algebra(2);
        let e1 = SparseVec::basis(0);
        assert_eq!(p.algebra.product(&e1, &e1), Eval::Val(e1.clone()));
        let e2 = SparseVec::basis(1);
        assert_eq!(p.algebra.product(&e1, &e2), Eval::Val(SparseVec::new()));
    }

    #[test]
    fn epsilon_coproduct_values() {
        let p = chain_algebra(4);
        let d = p.epsilon_coproduct();
        // Δ(e3) = 0
        assert!(d.on_basis(2).is_zero());
        // Δ(a12) = w12 · e1⊗e2
        let a12 = p.path_by_vertices(&["1", "2"]).unwrap();
        let mut expect = Tensor2::new();
        expect.add((0, 1), rat(2));
        assert_eq!(d.on_basis(a12), &expect);
        // Δ(a12 a23) = w12·e1⊗a23 + w23·a12⊗e3
        let a1223 = p.path_by_vertices(&["1", "2", "3"]).unwrap();
        let a23 = p.path_by_vertices(&["2", "3"]).unwrap();
        let mut expect = Tensor2::new();
        expect.add((0, a23), rat(2));
        expect.add((a12, 2), ratio(3, 2));
        assert_eq!(d.on_basis(a1223), &expect);
    }

    #[test]
    fn epsilon_compat_on_non_overflow_pairs() {
        let p = chain_algebra(4);
        let d = p.epsilon_coproduct();
        let rep = check_compat(&p.algebra, &d, CompatKind::Eps);
        assert!(rep.pass, "{:?}", rep.first_failure());
        assert!(rep.skipped > 0);
    }

    #[test]
    fn delta_m_is_eps_r_within_truncation() {
        let p = chain_algebra(3);
        let d = p.delta_m();
        let rep = check_compat(&p.algebra, &d, CompatKind::EpsR);
        assert!(rep.pass, "{:?}", rep.first_failure());
    }

    #[test]
    fn research_map_display_value() {
        // α = a12 a23 a34 on the chain: the only continuation is 4→5,
        // so the value is w45 · α ⊗ e5.
        let p = chain_algebra(4);
        let alpha = p.path_by_vertices(&["1", "2", "3", "4"]).unwrap();
        let out = p.research_map(alpha);
        let mut expect = Tensor2::new();
        expect.add((alpha, 4), ratio(7, 3));
        assert_eq!(out, expect);
    }

    #[test]
    fn research_map_on_vertex_and_sink() {
        let p = chain_algebra(4);
        // vertex e2: the only arc out of 2 is 2→3 with weight 3/2
        let out = p.research_map(1);
        let mut expect = Tensor2::new();
        expect.add((1, 2), ratio(3, 2));
        assert_eq!(out, expect);
        // vertex e6 has no outgoing arcs
        assert!(p.research_map(5).is_zero());
    }

    #[test]
    fn research_map_never_overflows_at_max_length() {
        let p = chain_algebra(4);
        let alpha = p.path_by_vertices(&["1", "2", "3", "4", "5"]).unwrap();
        let out = p.research_map(alpha);
        let mut expect = Tensor2::new();
        expect.add((alpha, 5), rat(11));
        assert_eq!(out, expect);
    }

    #[test]
    fn non_injective_graph_is_reported() {
        let g = WeightedDigraph::new(
            vec!["u".into(), "v".into()],
            vec![
                ("u".into(), "v".into(), rat(1)),
                ("u".into(), "v".into(), rat(2)),
            ],
        )
        .unwrap();
        assert!(!g.st_injective());
        assert!(matches!(g.ensure_st_injective(), Err(ModelError::NotInjective(_, _))));
    }
}
