//! Matrix algebras and the nilpotent polynomial algebra with their
//! standard coproduct families, addressable by name.

use super::ModelError;
use crate::algebra::{CoOperation, FiniteAlgebra};
use crate::linalg::rat::{parse_rat, rat, Rat};
use crate::linalg::SparseVec;
use num::One;

/// `M_n(k)` on the matrix-unit basis `E{i}{j}` (row-major, 1-based),
/// with the identity as unit.
pub fn matrix_algebra(n: usize) -> FiniteAlgebra {
    let mut basis = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            basis.push(format!("E{i}{j}"));
        }
    }
    let mut alg = FiniteAlgebra::new(format!("M{n}"), basis);
    let idx = |i: usize, j: usize| ((i - 1) * n + (j - 1)) as u32;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    if j == k {
                        alg.set_product(idx(i, j), idx(k, l), SparseVec::basis(idx(i, l)));
                    }
                }
            }
        }
    }
    let mut unit = SparseVec::new();
    for i in 1..=n {
        unit.add(idx(i, i), rat(1));
    }
    alg.unit = Some(unit);
    alg
}

/// The coproduct `Δ_(a,b)` on `M_n(k)`, with `a + b = n + 1`:
/// `Δ_(a,b)(E_ij) = [j=a]·E_ib⊗E_ab − [i=b]·E_ab⊗E_aj`.
pub fn mn_delta_ab(n: usize, a: usize, b: usize) -> Result<(FiniteAlgebra, Vec<CoOperation>), ModelError> {
    if a + b != n + 1 || a == 0 || b == 0 || a > n || b > n {
        return Err(ModelError::BadParams {
            name: format!("mnDeltaAB({n},{a},{b})"),
            reason: "requires 1 <= a,b <= n with a + b = n + 1".into(),
        });
    }
    let alg = matrix_algebra(n);
    let idx = |i: usize, j: usize| ((i - 1) * n + (j - 1)) as u32;
    let mut d = CoOperation::new("deltaAB", alg.dim());
    for i in 1..=n {
        for j in 1..=n {
            if j == a {
                d.add_term(idx(i, j), idx(i, b), idx(a, b), rat(1));
            }
            if i == b {
                d.add_term(idx(i, j), idx(a, b), idx(a, j), rat(-1));
            }
        }
    }
    Ok((alg, vec![d]))
}

/// `(M₂(k), Δ₀)` — the `Δ_(1,2)` instance, with the coproduct named
/// `delta0`.
pub fn m2_delta0() -> (FiniteAlgebra, Vec<CoOperation>) {
    let (alg, mut coops) = mn_delta_ab(2, 1, 2).expect("valid parameters");
    coops[0].name = "delta0".into();
    (alg, coops)
}

/// `(M₂(k), Δ₁)` — the `Δ_(2,1)` instance.
pub fn m2_delta1() -> (FiniteAlgebra, Vec<CoOperation>) {
    let (alg, mut coops) = mn_delta_ab(2, 2, 1).expect("valid parameters");
    coops[0].name = "delta1".into();
    (alg, coops)
}

/// The nilpotent algebra `k[X₁…Xₙ]/(XᵢXⱼ)` on basis `1, X₁…Xₙ`.
pub fn nilpotent_algebra(n: usize) -> FiniteAlgebra {
    let mut basis = vec!["1".to_string()];
    for i in 1..=n {
        basis.push(format!("X{i}"));
    }
    let mut alg = FiniteAlgebra::new(format!("k[X1..X{n}]/R"), basis);
    let dim = n + 1;
    for i in 0..dim as u32 {
        alg.set_product(0, i, SparseVec::basis(i));
        alg.set_product(i, 0, SparseVec::basis(i));
    }
    alg.unit = Some(SparseVec::basis(0));
    alg
}

/// `Δ_λ(1) = 1⊗Σ + Σ⊗1 + λΣ⊗Σ`, `Δ_λ(Xᵢ) = Xᵢ⊗Σ` on the nilpotent
/// algebra, with `Σ = ΣXᵢ`.
pub fn delta_lambda(n: usize, lambda: Rat) -> (FiniteAlgebra, Vec<CoOperation>) {
    let alg = nilpotent_algebra(n);
    let mut d = CoOperation::new("deltaLambda", alg.dim());
    for i in 1..=n as u32 {
        d.add_term(0, 0, i, rat(1));
        d.add_term(0, i, 0, rat(1));
        for j in 1..=n as u32 {
            d.add_term(0, i, j, lambda.clone());
            d.add_term(i, i, j, rat(1));
        }
    }
    (alg, vec![d])
}

/// The counit of `Δ_λ`: `ε(1) = −λ`, `ε(Xᵢ) = 1/n` (so `ε(Σ) = 1`).
pub fn delta_lambda_counit(n: usize, lambda: &Rat) -> SparseVec {
    let mut eta = SparseVec::new();
    eta.add(0, -lambda.clone());
    for i in 1..=n as u32 {
        eta.add(i, Rat::new(1.into(), (n as i64).into()));
    }
    eta
}

/// `Δ(x) = xΣ ⊗ Σ` on the nilpotent algebra: a coassociative coproduct
/// compatible on *both* sides (`Δ(ab) = aΔ(b) = Δ(a)b`), useful as a
/// degenerate-but-nonzero two-sided example.
pub fn delta_sigma(n: usize) -> (FiniteAlgebra, Vec<CoOperation>) {
    let alg = nilpotent_algebra(n);
    let mut d = CoOperation::new("deltaSigma", alg.dim());
    for i in 1..=n as u32 {
        for j in 1..=n as u32 {
            // Δ(1) = Σ⊗Σ; Δ(Xᵢ) = XᵢΣ⊗Σ = 0
            d.add_term(0, i, j, rat(1));
        }
    }
    (alg, vec![d])
}

/// `Δ(x) = xA ⊗ B` on `M₂(k)` with `A = λ(E11+E12)`, `B = λ(E21+E22)`;
/// coassociative since `A² = λA` and `BA = λB`.
pub fn m2_ab(lambda: Rat) -> (FiniteAlgebra, Vec<CoOperation>) {
    let alg = matrix_algebra(2);
    // basis order E11=0 E12=1 E21=2 E22=3
    let a_vec: SparseVec = [(0u32, lambda.clone()), (1, lambda.clone())].into_iter().collect();
    let b_idx = [(2u32, lambda.clone()), (3, lambda.clone())];
    let mut d = CoOperation::new("deltaAB", 4);
    for x in 0..4u32 {
        let xa = match alg.product(&SparseVec::basis(x), &a_vec) {
            crate::linalg::Eval::Val(v) => v,
            crate::linalg::Eval::Overflow => unreachable!("total algebra"),
        };
        for (p, cp) in xa.iter() {
            for (q, cq) in b_idx.iter() {
                d.add_term(x, p, *q, cp * cq);
            }
        }
    }
    (alg, vec![d])
}

/// The entangled pair on `M₂(k)`: `delta1(x) = xA⊗B` (as in [`m2_ab`])
/// and `delta2(M) = M⊗E12`; both coassociative and right-compatible,
/// with `(Δ₁⊗id)Δ₂ = (id⊗Δ₂)Δ₁`.
pub fn m2_abx(lambda: Rat) -> (FiniteAlgebra, Vec<CoOperation>) {
    let (alg, mut coops) = m2_ab(lambda);
    coops[0].name = "delta1".into();
    let mut d2 = CoOperation::new("delta2", 4);
    for x in 0..4u32 {
        d2.add_term(x, x, 1, rat(1));
    }
    coops.push(d2);
    (alg, coops)
}

/// The circular pair on `M₂(k)`: `delta1 = Δ₀` and the `(λ,ν)`-weighted
/// variant `delta2`; they satisfy `(Δᵢ⊗id)Δⱼ = (id⊗Δᵢ)Δⱼ` for all
/// `i, j`.
pub fn circular_m2(lambda: Rat, nu: Rat) -> (FiniteAlgebra, Vec<CoOperation>) {
    let (alg, mut coops) = m2_delta0();
    coops[0].name = "delta1".into();
    let mut d2 = CoOperation::new("delta2", 4);
    // E11 ↦ λ E12⊗E12 ; E21 ↦ ν E22⊗E12 − ν E12⊗E11 ; E22 ↦ −λ E12⊗E12
    d2.add_term(0, 1, 1, lambda.clone());
    d2.add_term(2, 3, 1, nu.clone());
    d2.add_term(2, 1, 0, -nu);
    d2.add_term(3, 1, 1, -lambda);
    coops.push(d2);
    (alg, coops)
}

/// The second circular family on `M₂(k)`, built on `Δ₁` instead of `Δ₀`.
pub fn circular_m2_prime(lambda: Rat, nu: Rat) -> (FiniteAlgebra, Vec<CoOperation>) {
    let (alg, mut coops) = m2_delta1();
    coops[0].name = "delta1".into();
    let mut d2 = CoOperation::new("delta2", 4);
    // E11 ↦ −ν E21⊗E21 ; E12 ↦ λ E11⊗E21 − λ E21⊗E22 ; E22 ↦ ν E21⊗E21
    d2.add_term(0, 2, 2, -nu.clone());
    d2.add_term(1, 0, 2, lambda.clone());
    d2.add_term(1, 2, 3, -lambda);
    d2.add_term(3, 2, 2, nu);
    coops.push(d2);
    (alg, coops)
}

/// Resolves a builtin algebra name such as `m2Delta0`,
/// `deltaLambda(2,1/2)`, `mnDeltaAB(3,1,3)` or `circularM2(2,3)`.
pub fn by_name(name: &str) -> Result<(FiniteAlgebra, Vec<CoOperation>), ModelError> {
    let (head, args) = split_call(name);
    let parse_n = |s: &str| -> Result<usize, ModelError> {
        s.trim().parse().map_err(|_| ModelError::BadParams {
            name: name.into(),
            reason: format!("`{s}` is not a positive integer"),
        })
    };
    let parse_r = |s: &str| -> Result<Rat, ModelError> {
        parse_rat(s).map_err(|e| ModelError::BadParams { name: name.into(), reason: e.to_string() })
    };
    match (head, args.as_slice()) {
        ("m2Delta0", []) => Ok(m2_delta0()),
        ("m2Delta1", []) => Ok(m2_delta1()),
        ("m2AB", [l]) => Ok(m2_ab(parse_r(l)?)),
        ("m2AB", []) => Ok(m2_ab(Rat::one())),
        ("m2ABX", [l]) => Ok(m2_abx(parse_r(l)?)),
        ("m2ABX", []) => Ok(m2_abx(Rat::one())),
        ("mnDeltaAB", [n, a, b]) => mn_delta_ab(parse_n(n)?, parse_n(a)?, parse_n(b)?),
        ("deltaLambda", [n, l]) => Ok(delta_lambda(parse_n(n)?, parse_r(l)?)),
        ("deltaSigma", [n]) => Ok(delta_sigma(parse_n(n)?)),
        ("circularM2", [l, v]) => Ok(circular_m2(parse_r(l)?, parse_r(v)?)),
        ("circularM2prime", [l, v]) => Ok(circular_m2_prime(parse_r(l)?, parse_r(v)?)),
        _ => Err(ModelError::UnknownName(name.into())),
    }
}

fn split_call(name: &str) -> (&str, Vec<String>) {
    match name.find('(') {
        Some(i) if name.ends_with(')') => {
            let head = &name[..i];
            let inner = &name[i + 1..name.len() - 1];
            let args = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner.split(',').map(|s| s.trim().to_string()).collect()
            };
            (head, args)
        }
        _ => (name, Vec::new()),
    }
}

pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "m2Delta0",
        "m2Delta1",
        "m2AB(lambda)",
        "m2ABX(lambda)",
        "mnDeltaAB(n,a,b)",
        "deltaLambda(n,lambda)",
        "deltaSigma(n)",
        "circularM2(lambda,nu)",
        "circularM2prime(lambda,nu)",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::checks::{
        check_associativity, check_coassociativity, check_compat, check_counit, check_unit,
        CompatKind, CounitSide,
    };
    use crate::linalg::rat::ratio;

    #[test]
    fn m2_is_associative_unital() {
        let alg = matrix_algebra(2);
        assert!(check_associativity(&alg).pass);
        assert!(check_unit(&alg).pass);
    }

    #[test]
    fn m2_delta0_is_eps_not_eps_r() {
        let (alg, coops) = m2_delta0();
        assert!(check_compat(&alg, &coops[0], CompatKind::Eps).pass);
        let rep = check_compat(&alg, &coops[0], CompatKind::EpsR);
        assert!(!rep.pass);
        // first failing pair, in lexicographic basis order: (E11, E21)
        assert_eq!(rep.first_failure().unwrap().at, vec!["E11", "E21"]);
    }

    #[test]
    fn m2_delta1_and_mn_delta_ab_are_eps() {
        let (alg, coops) = m2_delta1();
        assert!(check_compat(&alg, &coops[0], CompatKind::Eps).pass);
        let (alg3, coops3) = mn_delta_ab(3, 1, 3).unwrap();
        assert!(check_associativity(&alg3).pass);
        assert!(check_compat(&alg3, &coops3[0], CompatKind::Eps).pass);
        let (alg3b, coops3b) = mn_delta_ab(3, 2, 2).unwrap();
        assert!(check_compat(&alg3b, &coops3b[0], CompatKind::Eps).pass);
        assert!(mn_delta_ab(3, 1, 2).is_err());
    }

    #[test]
    fn delta_lambda_eps_r_and_counits() {
        for lam in [rat(0), rat(1), rat(-2), ratio(1, 2)] {
            for n in 1..=3 {
                let (alg, coops) = delta_lambda(n, lam.clone());
                assert!(check_associativity(&alg).pass);
                assert!(check_compat(&alg, &coops[0], CompatKind::EpsR).pass);
                let eta = delta_lambda_counit(n, &lam);
                // (id⊗ε)Δ = id on the whole basis
                assert!(check_counit(&alg, &coops[0], &eta, CounitSide::Right).pass);
                // (ε⊗id)Δ(1) = 1: the unit never appears among failures
                let left = check_counit(&alg, &coops[0], &eta, CounitSide::Left);
                assert!(left.failures.iter().all(|f| f.at != vec!["1".to_string()]));
            }
        }
    }

    #[test]
    fn delta_sigma_is_two_sided() {
        let (alg, coops) = delta_sigma(2);
        assert!(!coops[0].is_zero());
        assert!(check_compat(&alg, &coops[0], CompatKind::EpsR).pass);
        assert!(check_compat(&alg, &coops[0], CompatKind::EpsL).pass);
        assert!(check_coassociativity(&alg, &coops[0]).pass);
    }

    #[test]
    fn m2_ab_is_eps_r() {
        let (alg, coops) = m2_ab(rat(1));
        assert!(check_compat(&alg, &coops[0], CompatKind::EpsR).pass);
        let (_, coops5) = m2_ab(rat(5));
        assert!(check_compat(&alg, &coops5[0], CompatKind::EpsR).pass);
    }

    #[test]
    fn by_name_parses() {
        assert!(by_name("m2Delta0").is_ok());
        assert!(by_name("deltaLambda(2,-2)").is_ok());
        assert!(by_name("deltaLambda(2,1/2)").is_ok());
        assert!(by_name("mnDeltaAB(3,1,3)").is_ok());
        assert!(by_name("circularM2(2,3)").is_ok());
        assert!(by_name("blah").is_err());
        assert!(by_name("deltaLambda(0/0,1)").is_err());
    }
}
