//! Relation verification: every relation of a presentation evaluated on
//! all basis triples of a multi-product algebra.
//!
//! Relation matrices are treated as unordered sets of equations, so
//! verification is insensitive to the order in which a source lists
//! them.

use super::{DeriveError, MultiProductAlgebra};
use crate::conv::BilinOp;
use crate::linalg::{Eval, SparseVec};
use crate::operad::presets::OperadPresentation;
use crate::operad::tree::TreeMonomial;
use crate::report::CheckReport;

/// Evaluates an arity-3 monomial (a comb with two internal nodes) on a
/// basis triple.
fn eval_mono3(ops: &[&BilinOp], m: &TreeMonomial, i: u32, j: u32, k: u32) -> Eval<SparseVec> {
    match m {
        TreeMonomial::Node(outer, l, r) => match (l.as_ref(), r.as_ref()) {
            (TreeMonomial::Node(inner, _, _), TreeMonomial::Leaf) => {
                let e = ops[*inner as usize].eval_basis(i, j);
                ops[*outer as usize].eval_ev(e, &Eval::Val(SparseVec::basis(k)))
            }
            (TreeMonomial::Leaf, TreeMonomial::Node(inner, _, _)) => {
                let e = ops[*inner as usize].eval_basis(j, k);
                ops[*outer as usize].eval_ev(&Eval::Val(SparseVec::basis(i)), e)
            }
            _ => unreachable!("quadratic relations only"),
        },
        TreeMonomial::Leaf => unreachable!("arity-3 monomial"),
    }
}

/// Verifies every relation of `preset` on all basis triples of `mpa`.
/// Operation names must cover the preset's generators; extra operations
/// (derived sums, brackets) are ignored.
pub fn verify_relations(
    mpa: &MultiProductAlgebra,
    preset: &OperadPresentation,
) -> Result<CheckReport, DeriveError> {
    let ops: Result<Vec<&BilinOp>, DeriveError> = preset
        .generators
        .iter()
        .map(|g| mpa.op(g))
        .collect();
    let ops = ops.map_err(|_| DeriveError::NameMismatch {
        preset: preset.name.clone(),
        needed: preset.generators.clone(),
    })?;
    let dim = mpa.dim() as u32;
    let mut rep = CheckReport::new(format!("relations({} on {})", preset.name, mpa.name));
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                'rel: for (ridx, rel) in preset.relations.iter().enumerate() {
                    let mut acc = SparseVec::new();
                    for (m, c) in rel.iter() {
                        match eval_mono3(&ops, m, i, j, k) {
                            Eval::Val(v) => acc.add_scaled(&v, c),
                            Eval::Overflow => {
                                rep.record_skip();
                                continue 'rel;
                            }
                        }
                    }
                    if acc.is_zero() {
                        rep.record_pass();
                    } else {
                        rep.record_failure(
                            vec![
                                format!("rel#{}", ridx + 1),
                                mpa.basis[i as usize].clone(),
                                mpa.basis[j as usize].clone(),
                                mpa.basis[k as usize].clone(),
                            ],
                            format!("{}", acc),
                        );
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// Associativity of one bilinear operation on all basis triples.
pub fn check_bilinear_associativity(
    basis: &[String],
    op: &BilinOp,
    id: &str,
) -> CheckReport {
    let mut rep = CheckReport::new(format!("associative({id})"));
    let dim = op.dim as u32;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let l = op.eval_ev(op.eval_basis(i, j), &Eval::Val(SparseVec::basis(k)));
                let r = op.eval_ev(&Eval::Val(SparseVec::basis(i)), op.eval_basis(j, k));
                match (l, r) {
                    (Eval::Val(l), Eval::Val(r)) => {
                        let d = l.sub(&r);
                        if d.is_zero() {
                            rep.record_pass();
                        } else {
                            rep.record_failure(
                                vec![
                                    basis[i as usize].clone(),
                                    basis[j as usize].clone(),
                                    basis[k as usize].clone(),
                                ],
                                format!("{}", d),
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

/// Associativity of every declared cluster sum.
pub fn check_clusters(mpa: &MultiProductAlgebra) -> Result<Vec<CheckReport>, DeriveError> {
    let mut out = Vec::new();
    for cluster in &mpa.clusters {
        let sum = mpa.sum_of(cluster)?;
        let id = format!("{}: {}", mpa.name, cluster.join("+"));
        out.push(check_bilinear_associativity(&mpa.basis, &sum, &id));
    }
    Ok(out)
}

/// The Leibniz identity `[[x,y],z] = [[x,z],y] + [x,[y,z]]` on all basis
/// triples.
pub fn check_leibniz(basis: &[String], bracket: &BilinOp, id: &str) -> CheckReport {
    let mut rep = CheckReport::new(format!("leibniz({id})"));
    let dim = bracket.dim as u32;
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let ek = Eval::Val(SparseVec::basis(k));
                let ej = Eval::Val(SparseVec::basis(j));
                let ei = Eval::Val(SparseVec::basis(i));
                let lhs = bracket.eval_ev(bracket.eval_basis(i, j), &ek);
                let t1 = bracket.eval_ev(bracket.eval_basis(i, k), &ej);
                let t2 = bracket.eval_ev(&ei, bracket.eval_basis(j, k));
                match (lhs, t1, t2) {
                    (Eval::Val(l), Eval::Val(a), Eval::Val(b)) => {
                        let mut rhs = a;
                        rhs.add_scaled(&b, &crate::linalg::Rat::from_integer(1.into()));
                        let d = l.sub(&rhs);
                        if d.is_zero() {
                            rep.record_pass();
                        } else {
                            rep.record_failure(
                                vec![
                                    basis[i as usize].clone(),
                                    basis[j as usize].clone(),
                                    basis[k as usize].clone(),
                                ],
                                format!("{}", d),
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::presets::preset;

    #[test]
    fn zero_ops_satisfy_any_preset() {
        let p = preset("quadri").unwrap();
        let mut mpa = MultiProductAlgebra::new("z", vec!["a".into(), "b".into()]);
        for g in &p.generators {
            mpa.insert_op(g.clone(), BilinOp::zero(2));
        }
        let rep = verify_relations(&mpa, &p).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.checked, 8 * 9);
    }

    #[test]
    fn name_mismatch_is_an_error() {
        let p = preset("quadri").unwrap();
        let mpa = MultiProductAlgebra::new("z", vec!["a".into()]);
        assert!(matches!(
            verify_relations(&mpa, &p),
            Err(DeriveError::NameMismatch { .. })
        ));
    }

    #[test]
    fn corrupted_table_is_located() {
        use crate::linalg::rat::rat;
        // start from all-zero dendriform ops and corrupt one entry
        let p = preset("dendriform").unwrap();
        let mut mpa = MultiProductAlgebra::new("bad", vec!["a".into(), "b".into()]);
        let mut prec = BilinOp::zero(2);
        prec.set(0, 0, Eval::Val(SparseVec::single(1, rat(1))));
        mpa.insert_op("prec", prec);
        mpa.insert_op("succ", BilinOp::zero(2));
        let rep = verify_relations(&mpa, &p).unwrap();
        assert!(!rep.pass);
        assert!(!rep.failures.is_empty());
    }
}
