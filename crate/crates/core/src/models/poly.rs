//! The non-unital truncated polynomial algebra `t·k[t]/(tᴺ)` and its
//! integration operator, the standard source of full Baxter operators:
//! `R(tᵃ) = tᵃ⁺¹/(a+1)` with `tᴺ ↦ 0`.
//!
//! The quotient here is genuine (high powers are zero, not overflow):
//! both sides of the Baxter identity die together, so every check stays
//! exact.

use super::ModelError;
use crate::algebra::FiniteAlgebra;
use crate::conv::LinMap;
use crate::linalg::rat::Rat;
use crate::linalg::{Eval, SparseVec};

/// Basis `t^1 … t^(n-1)` with `tᵃtᵇ = tᵃ⁺ᵇ` or `0`.
pub fn trunc_poly(n: usize) -> Result<FiniteAlgebra, ModelError> {
    if n < 2 {
        return Err(ModelError::TruncationTooSmall { min: 2, got: n });
    }
    let basis: Vec<String> = (1..n).map(|a| format!("t^{a}")).collect();
    let mut alg = FiniteAlgebra::new(format!("t·k[t]/(t^{n})"), basis);
    for a in 1..n {
        for b in 1..n {
            if a + b < n {
                alg.set_product(
                    (a - 1) as u32,
                    (b - 1) as u32,
                    SparseVec::basis((a + b - 1) as u32),
                );
            }
        }
    }
    Ok(alg)
}

/// The integration operator on [`trunc_poly`].
pub fn integration_operator(n: usize) -> LinMap {
    let dim = n - 1;
    let cols = (1..n)
        .map(|a| {
            if a + 1 < n {
                Eval::Val(SparseVec::single(
                    a as u32, // t^(a+1) has index a
                    Rat::new(1.into(), (a as i64 + 1).into()),
                ))
            } else {
                Eval::Val(SparseVec::new())
            }
        })
        .collect();
    LinMap { dim, cols }
}

/// The algebra together with its integration operator; `check_baxter`
/// with kind `Full` passes on it.
pub fn integration_baxter(n: usize) -> Result<(FiniteAlgebra, LinMap), ModelError> {
    Ok((trunc_poly(n)?, integration_operator(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::checks::check_associativity;
    use crate::conv::{check_baxter, BaxterKind, ProductSpace};

    #[test]
    fn smallest_truncation_is_trivial() {
        let (alg, r) = integration_baxter(2).unwrap();
        assert_eq!(alg.dim(), 1);
        assert!(r.is_zero());
        assert!(integration_baxter(1).is_err());
    }

    #[test]
    fn integration_is_a_full_baxter_operator() {
        for n in [3, 4, 5, 6] {
            let (alg, r) = integration_baxter(n).unwrap();
            assert!(check_associativity(&alg).pass);
            let space = ProductSpace::from_algebra(&alg);
            let rep = check_baxter(&space.basis, &space.product, "mu", &r, BaxterKind::Full);
            assert!(rep.pass, "n={n}: {:?}", rep.first_failure());
        }
    }

    #[test]
    fn n3_fixture_values() {
        // R(t) = t²/2, R(t²) = 0, and R(t)R(t) = t⁴/4 = 0 = R(R(t)t + tR(t)).
        use crate::linalg::rat::ratio;
        let (alg, r) = integration_baxter(3).unwrap();
        assert_eq!(r.col(0), &Eval::Val(SparseVec::single(1, ratio(1, 2))));
        assert_eq!(r.col(1), &Eval::Val(SparseVec::new()));
        let rt = r.col(0).as_val().unwrap();
        assert_eq!(alg.product(rt, rt), Eval::Val(SparseVec::new()));
    }
}
