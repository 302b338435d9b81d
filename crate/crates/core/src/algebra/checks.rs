//! Verifiers for associativity, coassociativity, product/coproduct
//! compatibility, counits, entanglements and co-dialgebra axioms.
//!
//! Every check quantifies over basis tuples.  Failures are reported in
//! lexicographic basis order; tuples that touch a truncation overflow are
//! skipped and counted.

use serde::{Deserialize, Serialize};

use super::{act_left, act_right, delta_on_first, delta_on_second, CoOperation, FiniteAlgebra};
use crate::linalg::{Eval, SparseVec, Tensor2, Tensor3};
use crate::report::CheckReport;

/// The product-compatibility flavours of a co-operation.
///
/// `Eps` is the two-sided derivation rule `Δ(ab) = Δ(a)b + aΔ(b)`;
/// `EpsR`/`EpsL` are the one-sided rules `Δ(ab) = aΔ(b)` / `Δ(ab) = Δ(a)b`.
/// Unprimed kinds additionally require the co-operation to be
/// coassociative; the primed kinds drop that requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CompatKind {
    Eps,
    EpsR,
    EpsL,
    EpsPrimeR,
    EpsPrimeL,
}

impl CompatKind {
    pub fn requires_coassociativity(self) -> bool {
        matches!(self, CompatKind::Eps | CompatKind::EpsR | CompatKind::EpsL)
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "eps" => Some(CompatKind::Eps),
            "epsR" => Some(CompatKind::EpsR),
            "epsL" => Some(CompatKind::EpsL),
            "epsPrimeR" => Some(CompatKind::EpsPrimeR),
            "epsPrimeL" => Some(CompatKind::EpsPrimeL),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CompatKind::Eps => "eps",
            CompatKind::EpsR => "epsR",
            CompatKind::EpsL => "epsL",
            CompatKind::EpsPrimeR => "epsPrimeR",
            CompatKind::EpsPrimeL => "epsPrimeL",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CounitSide {
    /// `(η (x) id) Δ = id`
    Left,
    /// `(id (x) η) Δ = id`
    Right,
}

fn tensor2_diff_string(alg: &FiniteAlgebra, d: &Tensor2) -> String {
    let mut parts = Vec::new();
    for (&(p, q), c) in d.iter().take(4) {
        parts.push(format!("{}·({}⊗{})", c, alg.label(p), alg.label(q)));
    }
    parts.join(" + ")
}

fn tensor3_diff_string(alg: &FiniteAlgebra, d: &Tensor3) -> String {
    let mut parts = Vec::new();
    for (&(p, q, r), c) in d.iter().take(4) {
        parts.push(format!(
            "{}·({}⊗{}⊗{})",
            c,
            alg.label(p),
            alg.label(q),
            alg.label(r)
        ));
    }
    parts.join(" + ")
}

/// `(e_i e_j) e_k = e_i (e_j e_k)` on all basis triples.
pub fn check_associativity(alg: &FiniteAlgebra) -> CheckReport {
    let mut rep = CheckReport::new(format!("associativity({})", alg.name));
    let d = alg.dim() as u32;
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let l = match alg.product_basis(i, j) {
                    Eval::Val(v) => alg.product(v, &SparseVec::basis(k)),
                    Eval::Overflow => Eval::Overflow,
                };
                let r = match alg.product_basis(j, k) {
                    Eval::Val(v) => alg.product(&SparseVec::basis(i), v),
                    Eval::Overflow => Eval::Overflow,
                };
                match (l, r) {
                    (Eval::Val(l), Eval::Val(r)) => {
                        let diff = l.sub(&r);
                        if diff.is_zero() {
                            rep.record_pass();
                        } else {
                            rep.record_failure(
                                vec![
                                    alg.label(i).into(),
                                    alg.label(j).into(),
                                    alg.label(k).into(),
                                ],
                                alg.vec_to_string(&diff),
                            );
                        }
                    }
                    _ => rep.record_skip(),
                }
            }
        }
    }
    rep
}

/// `1·e_i = e_i·1 = e_i` when a unit expansion is present.
pub fn check_unit(alg: &FiniteAlgebra) -> CheckReport {
    let mut rep = CheckReport::new(format!("unit({})", alg.name));
    let Some(unit) = &alg.unit else {
        rep.note("no unit declared; nothing to check");
        return rep;
    };
    for i in 0..alg.dim() as u32 {
        let e = SparseVec::basis(i);
        for (side, prod) in [
            ("1·e", alg.product(unit, &e)),
            ("e·1", alg.product(&e, unit)),
        ] {
            match prod {
                Eval::Val(v) => {
                    let diff = v.sub(&e);
                    if diff.is_zero() {
                        rep.record_pass();
                    } else {
                        rep.record_failure(
                            vec![side.into(), alg.label(i).into()],
                            alg.vec_to_string(&diff),
                        );
                    }
                }
                Eval::Overflow => rep.record_skip(),
            }
        }
    }
    rep
}

/// `(Δ (x) id)Δ = (id (x) Δ)Δ` on all basis elements.
pub fn check_coassociativity(alg: &FiniteAlgebra, d: &CoOperation) -> CheckReport {
    let mut rep = CheckReport::new(format!("coassociativity({})", d.name));
    for i in 0..alg.dim() as u32 {
        let t = d.on_basis(i);
        let l = delta_on_first(d, t);
        let r = delta_on_second(d, t);
        let diff = l.sub(&r);
        if diff.is_zero() {
            rep.record_pass();
        } else {
            rep.record_failure(
                vec![alg.label(i).into()],
                tensor3_diff_string(alg, &diff),
            );
        }
    }
    rep
}

/// The compatibility identity of `kind` on all basis pairs, plus
/// coassociativity for the unprimed kinds.
pub fn check_compat(alg: &FiniteAlgebra, d: &CoOperation, kind: CompatKind) -> CheckReport {
    let mut rep = CheckReport::new(format!("compat({},{})", d.name, kind.as_str()));
    let n = alg.dim() as u32;
    for i in 0..n {
        for j in 0..n {
            let lhs = match alg.product_basis(i, j) {
                Eval::Val(v) => Eval::Val(d.apply(v)),
                Eval::Overflow => Eval::Overflow,
            };
            let ei = SparseVec::basis(i);
            let ej = SparseVec::basis(j);
            let rhs = match kind {
                CompatKind::EpsR | CompatKind::EpsPrimeR => act_left(alg, &ei, d.on_basis(j)),
                CompatKind::EpsL | CompatKind::EpsPrimeL => act_right(alg, d.on_basis(i), &ej),
                CompatKind::Eps => {
                    match (
                        act_right(alg, d.on_basis(i), &ej),
                        act_left(alg, &ei, d.on_basis(j)),
                    ) {
                        (Eval::Val(mut a), Eval::Val(b)) => {
                            for (&k, c) in b.iter() {
                                a.add(k, c.clone());
                            }
                            Eval::Val(a)
                        }
                        _ => Eval::Overflow,
                    }
                }
            };
            match (lhs, rhs) {
                (Eval::Val(l), Eval::Val(r)) => {
                    let diff = l.sub(&r);
                    if diff.is_zero() {
                        rep.record_pass();
                    } else {
                        rep.record_failure(
                            vec![alg.label(i).into(), alg.label(j).into()],
                            tensor2_diff_string(alg, &diff),
                        );
                    }
                }
                _ => rep.record_skip(),
            }
        }
    }
    if kind.requires_coassociativity() {
        let sub = check_coassociativity(alg, d);
        rep.absorb(&sub);
    }
    rep
}

/// One-sided counit identity on all basis elements; `eta` is the
/// coefficient table of a linear functional.
pub fn check_counit(
    alg: &FiniteAlgebra,
    d: &CoOperation,
    eta: &SparseVec,
    side: CounitSide,
) -> CheckReport {
    let name = match side {
        CounitSide::Left => "eta⊗id",
        CounitSide::Right => "id⊗eta",
    };
    let mut rep = CheckReport::new(format!("counit({},{})", d.name, name));
    for i in 0..alg.dim() as u32 {
        let mut out = SparseVec::new();
        for (&(p, q), c) in d.on_basis(i).iter() {
            match side {
                CounitSide::Left => out.add(q, c * eta.coeff(p)),
                CounitSide::Right => out.add(p, c * eta.coeff(q)),
            }
        }
        let diff = out.sub(&SparseVec::basis(i));
        if diff.is_zero() {
            rep.record_pass();
        } else {
            rep.record_failure(vec![alg.label(i).into()], alg.vec_to_string(&diff));
        }
    }
    rep
}

fn tensor3_equal_on_basis(
    alg: &FiniteAlgebra,
    rep: &mut CheckReport,
    lhs: impl Fn(u32) -> Tensor3,
    rhs: impl Fn(u32) -> Tensor3,
    tag: &str,
) {
    for i in 0..alg.dim() as u32 {
        let diff = lhs(i).sub(&rhs(i));
        if diff.is_zero() {
            rep.record_pass();
        } else {
            rep.record_failure(
                vec![tag.into(), alg.label(i).into()],
                tensor3_diff_string(alg, &diff),
            );
        }
    }
}

/// Entanglement `(Δ₁ (x) id)Δ₂ = (id (x) Δ₂)Δ₁` on every basis element.
pub fn check_entanglement(
    alg: &FiniteAlgebra,
    d1: &CoOperation,
    d2: &CoOperation,
) -> CheckReport {
    let mut rep = CheckReport::new(format!("entanglement({}⇢{})", d1.name, d2.name));
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d1, d2.on_basis(i)),
        |i| delta_on_second(d2, d1.on_basis(i)),
        "ent",
    );
    rep
}

/// The leg-swap condition `(Δ₁ (x) id)Δ₂ = (id (x) Δ₁)Δ₂`: applying Δ₁ to
/// either leg of Δ₂ agrees.  This is the condition the circular families
/// satisfy, and the second half of L-circularity.
pub fn check_circular_condition(
    alg: &FiniteAlgebra,
    d1: &CoOperation,
    d2: &CoOperation,
) -> CheckReport {
    let mut rep = CheckReport::new(format!("circular-cond({},{})", d1.name, d2.name));
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d1, d2.on_basis(i)),
        |i| delta_on_second(d1, d2.on_basis(i)),
        "legswap",
    );
    rep
}

/// L-circularity of `d1` with regards to `d2`: entanglement plus the
/// leg-swap condition.
pub fn check_l_circular(
    alg: &FiniteAlgebra,
    d1: &CoOperation,
    d2: &CoOperation,
) -> CheckReport {
    let mut rep = CheckReport::new(format!("l-circular({}, {})", d1.name, d2.name));
    rep.absorb(&check_entanglement(alg, d1, d2));
    rep.absorb(&check_circular_condition(alg, d1, d2));
    rep
}

/// Coassociative-codialgebra axioms for a pair of coproducts.
///
/// The three mixed axioms are the formal duals of the associative
/// dialgebra axioms, with `(x ∘ₐ y) ∘ᵦ z ↦ (Δₐ⊗id)Δᵦ` and
/// `x ∘ₐ (y ∘ᵦ z) ↦ (id⊗Δᵦ)Δₐ`:
///
/// * C1: `(id⊗Δ⊣)Δ⊣ = (id⊗Δ⊢)Δ⊣`
/// * C2: `(Δ⊢⊗id)Δ⊣ = (id⊗Δ⊣)Δ⊢`
/// * C3: `(Δ⊢⊗id)Δ⊢ = (Δ⊣⊗id)Δ⊢`
///
/// plus coassociativity of both.
pub fn check_codialgebra(
    alg: &FiniteAlgebra,
    d_dashv: &CoOperation,
    d_vdash: &CoOperation,
) -> CheckReport {
    let mut rep = CheckReport::new(format!("codialgebra({},{})", d_dashv.name, d_vdash.name));
    rep.absorb(&check_coassociativity(alg, d_dashv));
    rep.absorb(&check_coassociativity(alg, d_vdash));
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_second(d_dashv, d_dashv.on_basis(i)),
        |i| delta_on_second(d_vdash, d_dashv.on_basis(i)),
        "C1",
    );
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d_vdash, d_dashv.on_basis(i)),
        |i| delta_on_second(d_dashv, d_vdash.on_basis(i)),
        "C2",
    );
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d_vdash, d_vdash.on_basis(i)),
        |i| delta_on_first(d_dashv, d_vdash.on_basis(i)),
        "C3",
    );
    rep
}

/// Coassociative-cotrialgebra axioms: the codialgebra axioms for
/// `(Δ⊣, Δ⊢)`, coassociativity of `Δ⊥`, and the duals of the five
/// `⊥`-compatibility axioms.
pub fn check_cotrialgebra(
    alg: &FiniteAlgebra,
    d_dashv: &CoOperation,
    d_vdash: &CoOperation,
    d_perp: &CoOperation,
) -> CheckReport {
    let mut rep = CheckReport::new(format!(
        "cotrialgebra({},{},{})",
        d_dashv.name, d_vdash.name, d_perp.name
    ));
    rep.absorb(&check_codialgebra(alg, d_dashv, d_vdash));
    rep.absorb(&check_coassociativity(alg, d_perp));
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d_dashv, d_dashv.on_basis(i)),
        |i| delta_on_second(d_perp, d_dashv.on_basis(i)),
        "T1",
    );
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d_perp, d_dashv.on_basis(i)),
        |i| delta_on_second(d_dashv, d_perp.on_basis(i)),
        "T2",
    );
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d_dashv, d_perp.on_basis(i)),
        |i| delta_on_second(d_vdash, d_perp.on_basis(i)),
        "T3",
    );
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d_vdash, d_perp.on_basis(i)),
        |i| delta_on_second(d_perp, d_vdash.on_basis(i)),
        "T4",
    );
    tensor3_equal_on_basis(
        alg,
        &mut rep,
        |i| delta_on_first(d_perp, d_vdash.on_basis(i)),
        |i| delta_on_second(d_vdash, d_vdash.on_basis(i)),
        "T5",
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::rat;

    fn two_dim() -> FiniteAlgebra {
        FiniteAlgebra::new("t", vec!["e1".into(), "e2".into()])
    }

    #[test]
    fn associativity_failure_is_located() {
        // e1e1 = e2, e2e1 = e1: (e1e1)e1 = e1 but e1(e1e1) = e1e2 = 0.
        let mut a = two_dim();
        a.set_product(0, 0, SparseVec::basis(1));
        a.set_product(1, 0, SparseVec::basis(0));
        let rep = check_associativity(&a);
        assert!(!rep.pass);
        let f = rep.first_failure().unwrap();
        assert_eq!(f.at, vec!["e1", "e1", "e1"]);
    }

    #[test]
    fn zero_multiplication_is_associative() {
        let rep = check_associativity(&two_dim());
        assert!(rep.pass);
        assert_eq!(rep.checked, 8);
    }

    #[test]
    fn coassociativity_failure_example() {
        // Δ(e1) = e1⊗e2, Δ(e2) = 0:
        // (Δ⊗id)Δ(e1) = e1⊗e2⊗e2 but (id⊗Δ)Δ(e1) = 0.
        let a = two_dim();
        let mut d = CoOperation::new("d", 2);
        d.add_term(0, 0, 1, rat(1));
        let rep = check_coassociativity(&a, &d);
        assert!(!rep.pass);
        assert_eq!(rep.first_failure().unwrap().at, vec!["e1"]);
    }

    #[test]
    fn zero_coproduct_everything_holds() {
        let a = two_dim();
        let d = CoOperation::new("z", 2);
        assert!(check_coassociativity(&a, &d).pass);
        for kind in [
            CompatKind::Eps,
            CompatKind::EpsR,
            CompatKind::EpsL,
            CompatKind::EpsPrimeR,
            CompatKind::EpsPrimeL,
        ] {
            assert!(check_compat(&a, &d, kind).pass);
        }
    }

    #[test]
    fn zero_coproduct_counit_fails() {
        let a = two_dim();
        let d = CoOperation::new("z", 2);
        let eta = SparseVec::single(0, rat(1));
        let rep = check_counit(&a, &d, &eta, CounitSide::Right);
        assert!(!rep.pass);
        assert_eq!(rep.failure_count, 2);
    }

    #[test]
    fn counit_single_tensor_example() {
        // Δ(x) = x⊗e, η(e) = 1 passes (id⊗η).
        let a = two_dim(); // e1 = x, e2 = e
        let mut d = CoOperation::new("d", 2);
        d.add_term(0, 0, 1, rat(1));
        d.add_term(1, 1, 1, rat(1));
        let eta = SparseVec::single(1, rat(1));
        assert!(check_counit(&a, &d, &eta, CounitSide::Right).pass);
    }

    #[test]
    fn l_circular_scaled_and_crossed() {
        // d1 coassociative, d2 = λ·d1 passes; a crossed pair fails.
        let a = two_dim();
        let mut d1 = CoOperation::new("d1", 2);
        d1.add_term(0, 0, 0, rat(1)); // Δ(e1) = e1⊗e1 is coassociative
        let d2 = d1.scaled("d2", &rat(5));
        assert!(check_l_circular(&a, &d1, &d2).pass);
        assert!(check_l_circular(&a, &d1, &d1).pass);

        let mut c1 = CoOperation::new("c1", 2);
        c1.add_term(0, 0, 1, rat(1)); // Δ₁(e1) = e1⊗e2
        let mut c2 = CoOperation::new("c2", 2);
        c2.add_term(0, 1, 0, rat(1)); // Δ₂(e1) = e2⊗e1
        let rep = check_l_circular(&a, &c1, &c2);
        assert!(!rep.pass);
    }

    #[test]
    fn codialgebra_with_zero_left_fails_only_pure_right_axiom() {
        // With Δ⊣ = 0 and Δ⊢ nonzero coassociative, the mixed axioms hold
        // vacuously but C3 compares (Δ⊢⊗id)Δ⊢ against zero and breaks.
        let a = two_dim();
        let zero = CoOperation::new("zl", 2);
        let mut d = CoOperation::new("dr", 2);
        d.add_term(0, 0, 0, rat(1));
        let rep = check_codialgebra(&a, &zero, &d);
        assert!(!rep.pass);
        assert!(rep
            .failures
            .iter()
            .all(|f| f.at.contains(&"C3".to_string())));
        // and with both sides the same coassociative coproduct all axioms collapse
        assert!(check_codialgebra(&a, &d, &d).pass);
    }

    #[test]
    fn codialgebra_crossed_pair_fails() {
        let a = two_dim();
        let mut dl = CoOperation::new("dl", 2);
        dl.add_term(0, 0, 0, rat(1)); // e1 ↦ e1⊗e1
        let mut dr = CoOperation::new("dr", 2);
        dr.add_term(0, 0, 1, rat(1)); // e1 ↦ e1⊗e2
        let rep = check_codialgebra(&a, &dl, &dr);
        assert!(!rep.pass);
    }
}
