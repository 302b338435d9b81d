//! Canonical binary quadratic presentations.
//!
//! Relations are stored as sparse vectors over the arity-3 monomial
//! basis.  Sum abbreviations used by the source displays (`⋆`, `≪`,
//! `⋀`, …) are expanded into plain generator sums at construction time;
//! the expansion tables sit next to each preset.
//!
//! `known_dims`, when non-empty, is the prefix of the dimension sequence
//! documented in the literature for that presentation; reports label any
//! dimensions computed beyond the prefix as unconfirmed.

use super::tree::{TreeMonomial, TreeVec};
use super::OperadError;
use crate::linalg::rat::rat;

#[derive(Debug, Clone)]
pub struct OperadPresentation {
    pub name: String,
    pub generators: Vec<String>,
    /// Quadratic relations over arity-3 tree monomials.
    pub relations: Vec<TreeVec>,
    /// Literature-documented dimension prefix (starting at arity 1).
    pub known_dims: Vec<u64>,
    pub notes: Vec<String>,
}

impl OperadPresentation {
    pub fn new(
        name: impl Into<String>,
        generators: Vec<String>,
        relations: Vec<TreeVec>,
    ) -> Self {
        OperadPresentation {
            name: name.into(),
            generators,
            relations,
            known_dims: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn arity2_dim(&self) -> usize {
        self.generators.len()
    }

    pub fn validate(&self) -> Result<(), OperadError> {
        let g = self.generators.len();
        for r in &self.relations {
            if r.is_zero() {
                return Err(OperadError::EmptyRelation);
            }
            for (m, _) in r.iter() {
                for l in m.labels() {
                    if l as usize >= g {
                        return Err(OperadError::BadGenerator(l as usize));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn generator_index(&self, name: &str) -> Option<u16> {
        self.generators.iter().position(|g| g == name).map(|i| i as u16)
    }
}

/// One side of a displayed relation: `(x ∘ᵢ y) ∘ₒ z` (left comb) or
/// `x ∘ₒ (y ∘ᵢ z)` (right comb), with generator sums on either slot.
#[derive(Clone, Copy)]
enum Side<'a> {
    /// (outer sum, inner sum) on the left-comb shape
    L(&'a [u16], &'a [u16]),
    /// (outer sum, inner sum) on the right-comb shape
    R(&'a [u16], &'a [u16]),
}

fn add_side(v: &mut TreeVec, side: Side, sign: i64) {
    match side {
        Side::L(outer, inner) => {
            for &o in outer {
                for &i in inner {
                    v.add(TreeMonomial::left_comb(o, i), rat(sign));
                }
            }
        }
        Side::R(outer, inner) => {
            for &o in outer {
                for &i in inner {
                    v.add(TreeMonomial::right_comb(o, i), rat(sign));
                }
            }
        }
    }
}

fn eq(lhs: Side, rhs: Side) -> TreeVec {
    let mut v = TreeVec::new();
    add_side(&mut v, lhs, 1);
    add_side(&mut v, rhs, -1);
    v
}

fn gens(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

use Side::{L, R};

fn dendriform() -> OperadPresentation {
    // prec = 0, succ = 1, star = prec + succ
    let star = &[0u16, 1];
    let mut p = OperadPresentation::new(
        "dendriform",
        gens(&["prec", "succ"]),
        vec![
            eq(L(&[0], &[0]), R(&[0], star)),
            eq(L(&[0], &[1]), R(&[1], &[0])),
            eq(L(&[1], star), R(&[1], &[1])),
        ],
    );
    p.known_dims = vec![1, 2, 5, 14, 42];
    p
}

fn l_algebra() -> OperadPresentation {
    OperadPresentation::new(
        "lalg",
        gens(&["prec", "succ"]),
        vec![eq(L(&[0], &[1]), R(&[1], &[0]))],
    )
}

fn dipterous() -> OperadPresentation {
    OperadPresentation::new(
        "dip",
        gens(&["star", "succ"]),
        vec![
            eq(L(&[0], &[0]), R(&[0], &[0])),
            eq(L(&[1], &[0]), R(&[1], &[1])),
        ],
    )
}

fn l_dipterous() -> OperadPresentation {
    let mut p = dipterous();
    p.name = "ldip".into();
    p.relations.push(eq(L(&[0], &[1]), R(&[1], &[0])));
    p
}

fn anti_dipterous() -> OperadPresentation {
    OperadPresentation::new(
        "adip",
        gens(&["star", "prec"]),
        vec![
            eq(L(&[0], &[0]), R(&[0], &[0])),
            eq(L(&[1], &[1]), R(&[1], &[0])),
        ],
    )
}

fn l_anti_dipterous() -> OperadPresentation {
    let mut p = anti_dipterous();
    p.name = "ladip".into();
    p.relations.push(eq(L(&[1], &[0]), R(&[0], &[1])));
    p.known_dims = vec![1, 2, 5, 14];
    p
}

fn m_type() -> OperadPresentation {
    let mut p = OperadPresentation::new(
        "m",
        gens(&["b1", "b2", "b3", "b4"]),
        vec![
            eq(L(&[3], &[3]), R(&[3], &[0])),
            eq(L(&[3], &[2]), R(&[2], &[0])),
            eq(L(&[3], &[0]), R(&[0], &[3])),
            eq(L(&[2], &[3]), R(&[2], &[1])),
            eq(L(&[3], &[1]), R(&[1], &[3])),
            eq(L(&[0], &[0]), R(&[0], &[0])),
            eq(L(&[1], &[0]), R(&[1], &[1])),
            eq(L(&[2], &[0]), R(&[1], &[2])),
            eq(L(&[0], &[1]), R(&[1], &[0])),
        ],
    );
    p.known_dims = vec![1, 4, 23, 160];
    p
}

fn m1_type() -> OperadPresentation {
    let mut p = OperadPresentation::new(
        "m1",
        gens(&["b1", "b2", "b3", "b4"]),
        vec![
            eq(L(&[1], &[1]), R(&[1], &[1])),
            eq(L(&[3], &[0]), R(&[0], &[2])),
            eq(L(&[0], &[1]), R(&[1], &[0])),
            eq(L(&[3], &[2]), R(&[2], &[0])),
            eq(L(&[3], &[1]), R(&[1], &[3])),
            eq(L(&[0], &[0]), R(&[0], &[1])),
            eq(L(&[2], &[1]), R(&[1], &[2])),
            eq(L(&[2], &[2]), R(&[2], &[1])),
            eq(L(&[3], &[3]), R(&[3], &[1])),
        ],
    );
    p.known_dims = vec![1, 4, 23, 160];
    p
}

fn m2_type() -> OperadPresentation {
    OperadPresentation::new(
        "m2",
        gens(&["b1", "b2", "b3", "b4"]),
        vec![
            eq(L(&[3], &[3]), R(&[3], &[3])),
            eq(L(&[0], &[2]), R(&[1], &[0])),
            eq(L(&[3], &[0]), R(&[0], &[3])),
            eq(L(&[2], &[0]), R(&[1], &[2])),
            eq(L(&[3], &[1]), R(&[1], &[3])),
            eq(L(&[0], &[3]), R(&[0], &[0])),
            eq(L(&[3], &[2]), R(&[2], &[3])),
            eq(L(&[2], &[3]), R(&[2], &[2])),
            eq(L(&[1], &[3]), R(&[1], &[1])),
        ],
    )
}

fn quadri() -> OperadPresentation {
    // nw=0 ne=1 sw=2 se=3
    let prec = &[0u16, 2];
    let succ = &[1u16, 3];
    let vee = &[2u16, 3];
    let wedge = &[0u16, 1];
    let star = &[0u16, 1, 2, 3];
    OperadPresentation::new(
        "quadri",
        gens(&["nw", "ne", "sw", "se"]),
        vec![
            eq(L(&[0], &[0]), R(&[0], star)),
            eq(L(&[0], &[1]), R(&[1], prec)),
            eq(L(&[1], wedge), R(&[1], succ)),
            eq(L(&[0], &[2]), R(&[2], wedge)),
            eq(L(&[0], &[3]), R(&[3], &[0])),
            eq(L(&[1], vee), R(&[3], &[1])),
            eq(L(&[2], prec), R(&[2], vee)),
            eq(L(&[2], succ), R(&[3], &[2])),
            eq(L(&[3], star), R(&[3], &[3])),
        ],
    )
}

fn octo() -> OperadPresentation {
    // nw1=0 nw2=1 ne1=2 ne2=3 sw1=4 sw2=5 se1=6 se2=7
    let prec1 = &[4u16, 0];
    let prec2 = &[5u16, 1];
    let succ1 = &[6u16, 2];
    let succ2 = &[7u16, 3];
    let wedge1 = &[0u16, 2];
    let wedge2 = &[1u16, 3];
    let vee1 = &[4u16, 6];
    let vee2 = &[5u16, 7];
    let big_wedge = &[0u16, 2, 1, 3];
    let big_vee = &[4u16, 6, 5, 7];
    let ll = &[4u16, 0, 5, 1];
    let gg = &[6u16, 2, 7, 3];
    let nw12 = &[0u16, 1];
    let ne12 = &[2u16, 3];
    let sw12 = &[4u16, 5];
    let se12 = &[6u16, 7];
    let sig1 = &[4u16, 6, 0, 2];
    let sig2 = &[5u16, 7, 1, 3];
    let star = &[0u16, 1, 2, 3, 4, 5, 6, 7];
    let mut p = OperadPresentation::new(
        "octo",
        gens(&["nw1", "nw2", "ne1", "ne2", "sw1", "sw2", "se1", "se2"]),
        vec![
            // rows 1-3: subscript-1 block
            eq(L(&[0], &[0]), R(&[0], star)),
            eq(L(&[0], &[2]), R(&[2], ll)),
            eq(L(&[2], wedge1), R(&[2], gg)),
            eq(L(&[0], &[4]), R(&[4], big_wedge)),
            eq(L(&[0], &[6]), R(&[6], nw12)),
            eq(L(&[2], vee1), R(&[6], ne12)),
            eq(L(&[4], prec1), R(&[4], big_vee)),
            eq(L(&[4], succ1), R(&[6], sw12)),
            eq(L(&[6], sig1), R(&[6], se12)),
            // rows 4-6: mixed block
            eq(L(&[0], &[1]), R(&[1], sig1)),
            eq(L(&[0], &[3]), R(&[3], prec1)),
            eq(L(&[2], wedge2), R(&[3], succ1)),
            eq(L(&[0], &[5]), R(&[5], wedge1)),
            eq(L(&[0], &[7]), R(&[7], &[0])),
            eq(L(&[2], vee2), R(&[7], &[2])),
            eq(L(&[4], prec2), R(&[5], vee1)),
            eq(L(&[4], succ2), R(&[7], &[4])),
            eq(L(&[6], sig2), R(&[7], &[6])),
            // rows 7-9: subscript-2 block
            eq(L(&[1], nw12), R(&[1], sig2)),
            eq(L(&[1], ne12), R(&[3], prec2)),
            eq(L(&[3], big_wedge), R(&[3], succ2)),
            eq(L(&[1], sw12), R(&[5], wedge2)),
            eq(L(&[1], se12), R(&[7], &[1])),
            eq(L(&[3], big_vee), R(&[7], &[3])),
            eq(L(&[5], ll), R(&[5], vee2)),
            eq(L(&[5], gg), R(&[7], &[5])),
            eq(L(&[7], star), R(&[7], &[7])),
        ],
    );
    p.known_dims = vec![1, 8, 101];
    p.notes.push(
        "dimensions beyond arity 3 are computed from the quadratic presentation \
         and have no independent confirmation"
            .into(),
    );
    p
}

fn threeop() -> OperadPresentation {
    // ne=0 nw=1 se=2; the source display lists one relation twice and it
    // is kept, so the seven stored relations have rank six.
    let mut p = OperadPresentation::new(
        "threeop",
        gens(&["ne", "nw", "se"]),
        vec![
            eq(L(&[0], &[0]), R(&[0], &[0])),
            eq(L(&[1], &[1]), R(&[1], &[0])),
            eq(L(&[0], &[2]), R(&[2], &[0])),
            eq(L(&[0], &[0]), R(&[0], &[0])),
            eq(L(&[2], &[0]), R(&[2], &[2])),
            eq(L(&[1], &[0]), R(&[0], &[1])),
            eq(L(&[1], &[2]), R(&[2], &[1])),
        ],
    );
    p.known_dims = vec![1, 3, 12];
    p
}

fn dialgebra() -> OperadPresentation {
    let mut p = OperadPresentation::new(
        "dialgebra",
        gens(&["dashv", "vdash"]),
        vec![
            eq(L(&[0], &[0]), R(&[0], &[0])),
            eq(L(&[1], &[1]), R(&[1], &[1])),
            eq(R(&[0], &[0]), R(&[0], &[1])),
            eq(L(&[0], &[1]), R(&[1], &[0])),
            eq(L(&[1], &[1]), L(&[1], &[0])),
        ],
    );
    p.known_dims = vec![1, 2, 3, 4];
    p
}

fn trialgebra() -> OperadPresentation {
    let mut p = dialgebra();
    p.name = "trialgebra".into();
    p.known_dims = vec![];
    p.generators.push("perp".into());
    p.relations.extend([
        eq(L(&[2], &[2]), R(&[2], &[2])),
        eq(L(&[0], &[0]), R(&[0], &[2])),
        eq(L(&[0], &[2]), R(&[2], &[0])),
        eq(L(&[2], &[0]), R(&[2], &[1])),
        eq(L(&[2], &[1]), R(&[1], &[2])),
        eq(L(&[1], &[2]), R(&[1], &[1])),
    ]);
    p
}

fn hypercubic(n: usize) -> OperadPresentation {
    let names: Vec<String> = (1..=n).map(|i| format!("star{i}")).collect();
    let mut rels = Vec::new();
    for i in 0..n as u16 {
        for j in 0..n as u16 {
            rels.push(eq(L(&[j], &[i]), R(&[i], &[j])));
        }
    }
    let mut p = OperadPresentation::new(format!("hypercubic({n})"), names, rels);
    p.known_dims = (1..=6u32).map(|q| (n as u64).pow(q)).collect();
    p
}

fn circular(n: usize) -> OperadPresentation {
    let names: Vec<String> = (1..=n).map(|i| format!("star{i}")).collect();
    let mut rels = Vec::new();
    for i in 0..n as u16 {
        for j in 0..n as u16 {
            rels.push(eq(L(&[j], &[i]), R(&[j], &[i])));
        }
    }
    let mut p = OperadPresentation::new(format!("circular({n})"), names, rels);
    p.known_dims = (1..=6u32).map(|q| (n as u64).pow(q)).collect();
    p
}

fn associative() -> OperadPresentation {
    let mut p = OperadPresentation::new(
        "associative",
        gens(&["star"]),
        vec![eq(L(&[0], &[0]), R(&[0], &[0]))],
    );
    p.known_dims = vec![1; 8];
    p
}

fn m4beta() -> OperadPresentation {
    // lstar1=0 prec1=1 lstar2=2 prec2=3
    OperadPresentation::new(
        "m4beta",
        gens(&["lstar1", "prec1", "lstar2", "prec2"]),
        vec![
            eq(R(&[0], &[3]), L(&[3], &[0])),
            eq(R(&[2], &[1]), L(&[1], &[2])),
            eq(R(&[1], &[2]), L(&[1], &[3])),
            eq(R(&[2], &[0]), L(&[0], &[2])),
        ],
    )
}

fn m4gamma() -> OperadPresentation {
    // rstar1=0 succ1=1 rstar2=2 succ2=3
    OperadPresentation::new(
        "m4gamma",
        gens(&["rstar1", "succ1", "rstar2", "succ2"]),
        vec![
            eq(R(&[3], &[0]), L(&[0], &[3])),
            eq(R(&[1], &[2]), L(&[2], &[1])),
            eq(R(&[2], &[0]), L(&[0], &[2])),
            eq(R(&[3], &[1]), L(&[3], &[0])),
        ],
    )
}

/// Looks up a canonical presentation by name.  `hypercubic(n)` and
/// `circular(n)` take the number of operations as a parameter.
pub fn preset(name: &str) -> Result<OperadPresentation, OperadError> {
    let parsed = match name {
        "dendriform" => dendriform(),
        "lalg" => l_algebra(),
        "dip" => dipterous(),
        "ldip" => l_dipterous(),
        "adip" => anti_dipterous(),
        "ladip" | "AL" => l_anti_dipterous(),
        "m" | "M" => m_type(),
        "m1" | "M1" => m1_type(),
        "m2" | "M2" => m2_type(),
        "quadri" => quadri(),
        "octo" => octo(),
        "threeop" => threeop(),
        "dialgebra" => dialgebra(),
        "trialgebra" => trialgebra(),
        "associative" => associative(),
        "m4beta" => m4beta(),
        "m4gamma" => m4gamma(),
        _ => {
            if let Some(n) = parse_param(name, "hypercubic") {
                hypercubic(n)
            } else if let Some(n) = parse_param(name, "circular") {
                circular(n)
            } else {
                return Err(OperadError::UnknownPreset(name.into()));
            }
        }
    };
    parsed.validate()?;
    Ok(parsed)
}

fn parse_param(name: &str, prefix: &str) -> Option<usize> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    let n: usize = inner.parse().ok()?;
    (n >= 1 && n <= 16).then_some(n)
}

pub fn preset_names() -> Vec<&'static str> {
    vec![
        "dendriform",
        "lalg",
        "dip",
        "ldip",
        "adip",
        "ladip",
        "m",
        "m1",
        "m2",
        "quadri",
        "octo",
        "threeop",
        "dialgebra",
        "trialgebra",
        "associative",
        "m4beta",
        "m4gamma",
        "hypercubic(n)",
        "circular(n)",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relation_counts() {
        assert_eq!(preset("dendriform").unwrap().relations.len(), 3);
        assert_eq!(preset("quadri").unwrap().relations.len(), 9);
        assert_eq!(preset("octo").unwrap().relations.len(), 27);
        assert_eq!(preset("m").unwrap().relations.len(), 9);
        assert_eq!(preset("m1").unwrap().relations.len(), 9);
        assert_eq!(preset("m2").unwrap().relations.len(), 9);
        assert_eq!(preset("threeop").unwrap().relations.len(), 7);
        assert_eq!(preset("dialgebra").unwrap().relations.len(), 5);
        assert_eq!(preset("trialgebra").unwrap().relations.len(), 11);
        assert_eq!(preset("hypercubic(3)").unwrap().relations.len(), 9);
        assert_eq!(preset("circular(2)").unwrap().relations.len(), 4);
    }

    #[test]
    fn unknown_preset_is_an_error() {
        assert!(preset("nope").is_err());
        assert!(preset("hypercubic(0)").is_err());
        assert!(preset("hypercubic(x)").is_err());
    }

    #[test]
    fn all_presets_validate() {
        for n in preset_names() {
            if n.contains("(n)") {
                continue;
            }
            preset(n).unwrap();
        }
    }
}
