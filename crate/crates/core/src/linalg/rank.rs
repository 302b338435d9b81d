//! Integer matrices and their rank over the rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination on integer
//! entries: the one-step rule
//! `b[i][j] = (p*a[i][j] - a[i][c]*a[p][j]) / prev_pivot`
//! divides exactly at every step, so no rational arithmetic and no
//! denominator growth occur.  Row and column pivoting are free to follow
//! sparsity; the exact-division property is preserved under permutations.
//!
//! A modular rank over one or more prime fields is available as a fast
//! cross-check.  A modular rank is always a lower bound on the rational
//! rank, so agreement with the exact path on a couple of primes is strong
//! evidence, never the authority.

use num::{Integer, Signed, Zero};
use thiserror::Error;

use super::rat::{denom_lcm, Int};
use super::sparse::SparseVec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RankError {
    #[error("no primes")]
    NoPrimes,
    #[error("prime {0} is too large for modular elimination")]
    PrimeTooLarge(u64),
}

/// Sparse integer matrix; each row is sorted by column index and stores
/// no zero entries.
#[derive(Debug, Clone, Default)]
pub struct IntMatrix {
    pub cols: usize,
    rows: Vec<Vec<(u32, Int)>>,
}

impl IntMatrix {
    pub fn new(cols: usize) -> Self {
        IntMatrix { cols, rows: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Pushes a row given as (column, coefficient) pairs; zeros dropped,
    /// duplicate columns summed.
    pub fn push_row(&mut self, mut entries: Vec<(u32, Int)>) {
        entries.sort_by_key(|e| e.0);
        let mut row: Vec<(u32, Int)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            debug_assert!((c as usize) < self.cols);
            match row.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => row.push((c, v)),
            }
        }
        row.retain(|(_, v)| !v.is_zero());
        self.rows.push(row);
    }

    /// Builds an integer matrix from rational rows by clearing each row's
    /// denominators and dividing out the content; both are row scalings,
    /// which leave the rank unchanged.
    pub fn from_rational_rows(rows: &[SparseVec], cols: usize) -> Self {
        let mut m = IntMatrix::new(cols);
        for r in rows {
            let lcm = denom_lcm(r.iter().map(|(_, c)| c));
            let mut entries: Vec<(u32, Int)> = r
                .iter()
                .map(|(i, c)| (i, c.numer() * (&lcm / c.denom())))
                .collect();
            let mut g = Int::zero();
            for (_, v) in &entries {
                g = g.gcd(v);
            }
            if !g.is_zero() && g != 1.into() {
                for (_, v) in &mut entries {
                    *v /= &g;
                }
            }
            m.push_row(entries);
        }
        m
    }

    /// Rank over the rationals by fraction-free elimination.
    pub fn rank_exact(&self) -> usize {
        let mut active: Vec<Vec<(u32, Int)>> =
            self.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        let mut rank = 0usize;
        let mut prev_pivot = Int::from(1);

        while !active.is_empty() {
            // Pivot row: fewest nonzeros, ties broken by smallest leading
            // magnitude.  Pivot column within it: rarest column among the
            // still-active rows, then smallest magnitude.
            let (pi, _) = active
                .iter()
                .enumerate()
                .min_by_key(|(_, r)| {
                    let min_abs = r.iter().map(|(_, v)| v.abs()).min().unwrap();
                    (r.len(), min_abs)
                })
                .unwrap();
            let pivot_row = active.swap_remove(pi);

            let (pc, pv) = {
                let mut best: Option<(usize, &(u32, Int))> = None;
                for e in &pivot_row {
                    let col_count = active
                        .iter()
                        .filter(|r| r.binary_search_by_key(&e.0, |x| x.0).is_ok())
                        .count();
                    let better = match &best {
                        None => true,
                        Some((bc, be)) => {
                            (col_count, e.1.abs()) < (*bc, be.1.abs())
                        }
                    };
                    if better {
                        best = Some((col_count, e));
                    }
                }
                let (_, e) = best.unwrap();
                (e.0, e.1.clone())
            };
            rank += 1;

            let mut next: Vec<Vec<(u32, Int)>> = Vec::with_capacity(active.len());
            for row in active {
                let coef = match row.binary_search_by_key(&pc, |x| x.0) {
                    Ok(k) => row[k].1.clone(),
                    Err(_) => {
                        // Stays untouched apart from the Bareiss rescale.
                        let scaled = scale_div(&row, &pv, &prev_pivot);
                        if !scaled.is_empty() {
                            next.push(scaled);
                        }
                        continue;
                    }
                };
                let combined = combine_div(&row, &pivot_row, &pv, &coef, &prev_pivot, pc);
                if !combined.is_empty() {
                    next.push(combined);
                }
            }
            active = next;
            prev_pivot = pv;
        }
        rank
    }

    /// Maximum of the ranks over the given prime fields; a lower bound on
    /// `rank_exact`.
    pub fn rank_modular(&self, primes: &[u64]) -> Result<usize, RankError> {
        if primes.is_empty() {
            return Err(RankError::NoPrimes);
        }
        let mut best = 0;
        for &p in primes {
            if p >= 1 << 31 {
                return Err(RankError::PrimeTooLarge(p));
            }
            best = best.max(self.rank_mod_p(p));
        }
        Ok(best)
    }

    fn rank_mod_p(&self, p: u64) -> usize {
        let pi = Int::from(p);
        let mut rows: Vec<Vec<(u32, u64)>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .filter_map(|(c, v)| {
                        let m = v.mod_floor(&pi);
                        let m: u64 = m.try_into().unwrap();
                        (m != 0).then_some((*c, m))
                    })
                    .collect()
            })
            .filter(|r: &Vec<_>| !r.is_empty())
            .collect();

        let mut rank = 0usize;
        while let Some(pi_row) = {
            rows.iter()
                .enumerate()
                .min_by_key(|(_, r)| r.len())
                .map(|(i, _)| i)
        } {
            let pivot_row = rows.swap_remove(pi_row);
            let (pc, pv) = pivot_row[0];
            rank += 1;
            let pv_inv = mod_inv(pv, p);
            let mut next = Vec::with_capacity(rows.len());
            for row in rows {
                let coef = match row.binary_search_by_key(&pc, |x| x.0) {
                    Ok(k) => row[k].1,
                    Err(_) => {
                        next.push(row);
                        continue;
                    }
                };
                let factor = mul_mod(coef, pv_inv, p);
                let mut out: Vec<(u32, u64)> = Vec::with_capacity(row.len() + pivot_row.len());
                let (mut a, mut b) = (row.iter().peekable(), pivot_row.iter().peekable());
                loop {
                    match (a.peek(), b.peek()) {
                        (Some((ca, va)), Some((cb, vb))) => {
                            if ca < cb {
                                out.push((*ca, *va));
                                a.next();
                            } else if cb < ca {
                                let v = (p - mul_mod(factor, *vb, p)) % p;
                                if v != 0 {
                                    out.push((*cb, v));
                                }
                                b.next();
                            } else {
                                let v = (va + p - mul_mod(factor, *vb, p)) % p;
                                if v != 0 {
                                    out.push((*ca, v));
                                }
                                a.next();
                                b.next();
                            }
                        }
                        (Some((ca, va)), None) => {
                            out.push((*ca, *va));
                            a.next();
                        }
                        (None, Some((cb, vb))) => {
                            let v = (p - mul_mod(factor, *vb, p)) % p;
                            if v != 0 {
                                out.push((*cb, v));
                            }
                            b.next();
                        }
                        (None, None) => break,
                    }
                }
                if !out.is_empty() {
                    next.push(out);
                }
            }
            rows = next;
        }
        rank
    }
}

/// `(pv * row) / prev` entrywise; exact by the Bareiss invariant.
fn scale_div(row: &[(u32, Int)], pv: &Int, prev: &Int) -> Vec<(u32, Int)> {
    row.iter()
        .filter_map(|(c, v)| {
            let num = pv * v;
            debug_assert!((&num % prev).is_zero());
            let q = num / prev;
            (!q.is_zero()).then_some((*c, q))
        })
        .collect()
}

/// `(pv * row - coef * pivot_row) / prev`, dropping the pivot column.
fn combine_div(
    row: &[(u32, Int)],
    pivot_row: &[(u32, Int)],
    pv: &Int,
    coef: &Int,
    prev: &Int,
    pivot_col: u32,
) -> Vec<(u32, Int)> {
    let mut out: Vec<(u32, Int)> = Vec::with_capacity(row.len() + pivot_row.len());
    let (mut a, mut b) = (row.iter().peekable(), pivot_row.iter().peekable());
    let mut push = |c: u32, num: Int| {
        if c == pivot_col {
            return;
        }
        debug_assert!((&num % prev).is_zero());
        let q = num / prev;
        if !q.is_zero() {
            out.push((c, q));
        }
    };
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    push(*ca, pv * va);
                    a.next();
                } else if cb < ca {
                    push(*cb, -(coef * vb));
                    b.next();
                } else {
                    push(*ca, pv * va - coef * vb);
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                push(*ca, pv * va);
                a.next();
            }
            (None, Some((cb, vb))) => {
                push(*cb, -(coef * vb));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    result
}

/// Primes used by default for modular cross-checks.
pub const DEFAULT_PRIMES: [u64; 2] = [1_000_003, 2_147_483_629];

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(rows: &[&[i64]]) -> IntMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = IntMatrix::new(cols);
        for r in rows {
            m.push_row(
                r.iter()
                    .enumerate()
                    .map(|(c, v)| (c as u32, Int::from(*v)))
                    .collect(),
            );
        }
        m
    }

    #[test]
    fn empty_matrix_has_rank_zero() {
        assert_eq!(IntMatrix::new(0).rank_exact(), 0);
        assert_eq!(IntMatrix::new(5).rank_exact(), 0);
    }

    #[test]
    fn identity_rank() {
        let m = from_dense(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(m.rank_exact(), 3);
        assert_eq!(m.rank_modular(&[10_007]).unwrap(), 3);
    }

    #[test]
    fn zero_matrix_modular() {
        let m = from_dense(&[&[0, 0], &[0, 0]]);
        assert_eq!(m.rank_modular(&DEFAULT_PRIMES).unwrap(), 0);
    }

    #[test]
    fn rank_deficient() {
        let m = from_dense(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank_exact(), 2);
        assert_eq!(m.rank_modular(&DEFAULT_PRIMES).unwrap(), 2);
    }

    #[test]
    fn no_primes_is_an_error() {
        let m = from_dense(&[&[1]]);
        assert_eq!(m.rank_modular(&[]), Err(RankError::NoPrimes));
    }

    #[test]
    fn modular_sees_torsion_drop() {
        // Row (2) over F_2 is zero, so the mod-2 rank drops below the
        // rational rank; a second prime restores it.
        let mut m = IntMatrix::new(1);
        m.push_row(vec![(0, Int::from(2))]);
        assert_eq!(m.rank_exact(), 1);
        assert_eq!(m.rank_mod_p(2), 0);
        assert_eq!(m.rank_modular(&[2, 3]).unwrap(), 1);
    }
}
