//! Dimension sequences of binary quadratic non-symmetric operads.
//!
//! For a presentation with `g` generators, the free operad has
//! `Catalan(n-1)·g^(n-1)` monomials at arity `n`, and
//! `dim P'(n) = free(n) - rank(ideal component at arity n)`.
//!
//! The arity-`n` ideal component is spanned by single grafts of
//! arity-`(n-1)` ideal elements with generators, on either side and at
//! every leaf position.  That this spans the whole component follows by
//! induction on the context around a relation-rooted subtree: if an
//! arity-`n` monomial context `C[r]` is not `r` itself, its root is a
//! generator `g(L, R)` with `r` contained in (say) `L`; if `R` is a leaf
//! then `C[r] = graft(g, 1, L)` with `L` an ideal element of arity
//! `n-1`, and otherwise `R` contains a lowest internal node `h` whose
//! children are leaves, so `C[r] = graft(C'[r], pos, h)` where `C'[r]`
//! has arity `n-1` and is an ideal element by induction.  Grafting two
//! ideal elements stays inside this span by bilinearity of grafting.
//!
//! Ranks are computed with exact integer elimination; a modular rank can
//! be requested as a cross-check (advisory only: a lower bound that
//! confirms the exact value when it matches on at least two primes).

use std::collections::BTreeMap;

use serde::Serialize;

use super::presets::OperadPresentation;
use super::tree::{catalan, enumerate_monomials, TreeMonomial, TreeVec};
use super::OperadError;
use crate::linalg::rank::{IntMatrix, DEFAULT_PRIMES};
use crate::linalg::SparseVec;

/// Memory ceiling for dimension computations, in matrix cells
/// (spanning rows × free dimension).
#[derive(Debug, Clone, Copy)]
pub struct ResourceGuard {
    pub max_cells: u128,
}

pub const GUARD_ENV: &str = "BAXTERLAB_OPERAD_MAX_CELLS";
const DEFAULT_MAX_CELLS: u128 = 100_000_000;

impl Default for ResourceGuard {
    fn default() -> Self {
        ResourceGuard { max_cells: DEFAULT_MAX_CELLS }
    }
}

impl ResourceGuard {
    /// Reads the ceiling from the environment, falling back to the
    /// default.
    pub fn from_env() -> Self {
        let max_cells = std::env::var(GUARD_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(DEFAULT_MAX_CELLS);
        ResourceGuard { max_cells }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DimensionReport {
    pub name: String,
    pub generators: usize,
    /// `dim P'(n)` for `n = 1..=max_arity`.
    pub dims: Vec<u64>,
    /// `Catalan(n-1)·g^(n-1)`.
    pub free_dims: Vec<u64>,
    pub ideal_ranks: Vec<u64>,
    /// Coefficients `(-1)^n dim P'(n)` of the generating series prefix.
    pub series: Vec<i64>,
    /// Literature-documented prefix carried by the presentation.
    pub known_dims: Vec<u64>,
    /// Per-arity agreement of the modular cross-check, when requested.
    pub modular_agrees: Option<Vec<bool>>,
    pub notes: Vec<String>,
}

impl DimensionReport {
    /// Whether `dims[n-1]` goes beyond the documented prefix of a
    /// curated presentation (and is therefore reported as computed but
    /// unconfirmed).
    pub fn is_unconfirmed(&self, arity: usize) -> bool {
        !self.known_dims.is_empty() && arity > self.known_dims.len()
    }

    /// Mismatches between computed dimensions and the documented prefix.
    pub fn known_dim_conflicts(&self) -> Vec<usize> {
        self.dims
            .iter()
            .zip(&self.known_dims)
            .enumerate()
            .filter_map(|(i, (c, k))| (c != k).then_some(i + 1))
            .collect()
    }
}

/// The arity-`n` component of the quadratic ideal as a spanning set.
/// For `n = 3` these are the relations themselves.
pub fn ideal_component(
    p: &OperadPresentation,
    n: usize,
) -> Result<Vec<TreeVec>, OperadError> {
    if n < 3 {
        return Err(OperadError::ArityTooSmall(n));
    }
    let mut level: Vec<TreeVec> = p.relations.clone();
    for arity in 3..n {
        level = graft_level(&level, arity, p.generators.len())?;
    }
    Ok(level)
}

fn graft_level(
    level: &[TreeVec],
    arity: usize,
    g: usize,
) -> Result<Vec<TreeVec>, OperadError> {
    let mut next = Vec::with_capacity(level.len() * g * (arity + 2));
    for u in level {
        for gen in 0..g as u16 {
            let gen_mono = TreeMonomial::generator(gen);
            for i in 1..=arity {
                next.push(u.graft_with(i, &gen_mono)?);
            }
            for i in 1..=2 {
                next.push(u.graft_into(&gen_mono, i)?);
            }
        }
    }
    Ok(next)
}

fn matrix_for(
    vectors: &[TreeVec],
    index: &BTreeMap<TreeMonomial, u32>,
    cols: usize,
) -> IntMatrix {
    let rows: Vec<SparseVec> = vectors
        .iter()
        .map(|v| {
            v.iter()
                .map(|(m, c)| (*index.get(m).expect("monomial in index"), c.clone()))
                .collect()
        })
        .collect();
    IntMatrix::from_rational_rows(&rows, cols)
}

/// Computes `dim P'(n)` for `n = 1..=max_arity`.
pub fn dims(
    p: &OperadPresentation,
    max_arity: usize,
    guard: &ResourceGuard,
    modular_check: bool,
) -> Result<DimensionReport, OperadError> {
    if max_arity == 0 {
        return Err(OperadError::ZeroArity);
    }
    p.validate()?;
    let g = p.generators.len() as u64;
    let mut report = DimensionReport {
        name: p.name.clone(),
        generators: p.generators.len(),
        dims: Vec::new(),
        free_dims: Vec::new(),
        ideal_ranks: Vec::new(),
        series: Vec::new(),
        known_dims: p.known_dims.clone(),
        modular_agrees: modular_check.then(Vec::new),
        notes: p.notes.clone(),
    };

    let mut level: Vec<TreeVec> = p.relations.clone();
    for n in 1..=max_arity {
        let free = catalan(n - 1) * g.pow((n - 1) as u32);
        let (rank, modular_ok) = if n < 3 {
            (0u64, true)
        } else {
            if n > 3 {
                level = graft_level(&level, n - 1, p.generators.len())?;
            }
            let cells = (level.len().max(1) as u128) * (free as u128);
            if cells > guard.max_cells {
                return Err(OperadError::TooLarge {
                    arity: n,
                    rows: level.len(),
                    cols: free as usize,
                    cells,
                    ceiling: guard.max_cells,
                    env: GUARD_ENV.to_string(),
                });
            }
            let monos = enumerate_monomials(n, p.generators.len())?;
            debug_assert_eq!(monos.len() as u64, free);
            let index: BTreeMap<TreeMonomial, u32> = monos
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i as u32))
                .collect();
            let m = matrix_for(&level, &index, free as usize);
            let rank = m.rank_exact() as u64;
            let ok = if modular_check {
                m.rank_modular(&DEFAULT_PRIMES).map(|r| r as u64) == Ok(rank)
            } else {
                true
            };
            (rank, ok)
        };
        report.free_dims.push(free);
        report.ideal_ranks.push(rank);
        let d = free - rank;
        report.dims.push(d);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        report.series.push(sign * d as i64);
        if let Some(flags) = &mut report.modular_agrees {
            flags.push(modular_ok);
        }
    }
    Ok(report)
}

/// Generating-series prefix `Σ (-1)^n dim P'(n) x^n` as coefficients of
/// `x, x², …`.
pub fn generating_series(report: &DimensionReport) -> Vec<i64> {
    report.series.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::presets::preset;

    fn quick_dims(name: &str, n: usize) -> Vec<u64> {
        dims(&preset(name).unwrap(), n, &ResourceGuard::default(), false)
            .unwrap()
            .dims
    }

    #[test]
    fn free_magma_dims_are_catalan() {
        let p = OperadPresentation::new("free1", vec!["op".into()], vec![]);
        let r = dims(&p, 5, &ResourceGuard::default(), false).unwrap();
        assert_eq!(r.dims, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn associative_collapses_to_one() {
        assert_eq!(quick_dims("associative", 4), vec![1, 1, 1, 1]);
    }

    #[test]
    fn dendriform_matches_planar_trees() {
        assert_eq!(quick_dims("dendriform", 5), vec![1, 2, 5, 14, 42]);
    }

    #[test]
    fn dialgebra_dims_are_linear() {
        assert_eq!(quick_dims("dialgebra", 4), vec![1, 2, 3, 4]);
    }

    #[test]
    fn generating_series_signs() {
        let r = dims(
            &preset("dendriform").unwrap(),
            4,
            &ResourceGuard::default(),
            false,
        )
        .unwrap();
        assert_eq!(r.series, vec![-1, 2, -5, 14]);
    }

    #[test]
    fn relation_order_does_not_matter() {
        let mut p = preset("quadri").unwrap();
        p.relations.reverse();
        let a = dims(&p, 4, &ResourceGuard::default(), false).unwrap();
        let b = dims(&preset("quadri").unwrap(), 4, &ResourceGuard::default(), false).unwrap();
        assert_eq!(a.dims, b.dims);
    }

    #[test]
    fn guard_refuses_octo_high_arity() {
        let err = dims(
            &preset("octo").unwrap(),
            9,
            &ResourceGuard::default(),
            false,
        )
        .unwrap_err();
        assert!(matches!(err, OperadError::TooLarge { .. }));
    }

    #[test]
    fn ideal_component_sizes() {
        let p = preset("octo").unwrap();
        assert_eq!(ideal_component(&p, 3).unwrap().len(), 27);
        assert_eq!(ideal_component(&p, 4).unwrap().len(), 1080);
        assert!(ideal_component(&p, 2).is_err());
        let empty = OperadPresentation::new("e", vec!["a".into()], vec![]);
        assert!(ideal_component(&empty, 4).unwrap().is_empty());
    }
}
