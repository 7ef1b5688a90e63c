//! The four relation families, instantiated over a root system.

use serde::{Deserialize, Serialize};

use crate::chevalley::{
    commutator_coeffs, coroot_coordinates, CommutatorCoeffs, StructureConstants,
};
use crate::error::Result;
use crate::root_system::{Root, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationFamily {
    TorusConjugation,
    Commuting,
    Commutator,
    OppositeRoots,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 4] = [
        RelationFamily::TorusConjugation,
        RelationFamily::Commuting,
        RelationFamily::Commutator,
        RelationFamily::OppositeRoots,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RelationFamily::TorusConjugation => "torus_conjugation",
            RelationFamily::Commuting => "commuting",
            RelationFamily::Commutator => "commutator",
            RelationFamily::OppositeRoots => "opposite_roots",
        }
    }
}

/// Root data of one relation; numeric p-adic constants are attached later.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `(1+W_d)(1+V_a) = (1+V_a)^{(1+p)^<a,d>}(1+W_d)`
    TorusConjugation {
        alpha: Root,
        delta: usize,
        pairing: i32,
    },
    /// `(1+V_a1)(1+V_a2) = (1+V_a2)(1+V_a1)`
    Commuting { alpha1: Root, alpha2: Root },
    /// `(1+V_a1)(1+V_a2) = prod (1+V_{i a1 + j a2})^{c_ij p^{i+j-1}} (1+V_a2)(1+V_a1)`
    Commutator { coeffs: CommutatorCoeffs },
    /// `(1+V_a)(1+V_-a) = (1+V_-a)^Q prod (1+W_i)^{n_i P} (1+V_a)^Q`
    OppositeRoots { alpha: Root, coroot: Vec<i32> },
}

impl Relation {
    pub fn family(&self) -> RelationFamily {
        match self {
            Relation::TorusConjugation { .. } => RelationFamily::TorusConjugation,
            Relation::Commuting { .. } => RelationFamily::Commuting,
            Relation::Commutator { .. } => RelationFamily::Commutator,
            Relation::OppositeRoots { .. } => RelationFamily::OppositeRoots,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Relation::TorusConjugation { alpha, delta, .. } => {
                format!("torus a={alpha} d={}", delta + 1)
            }
            Relation::Commuting { alpha1, alpha2 } => format!("commuting {alpha1} {alpha2}"),
            Relation::Commutator { coeffs } => {
                format!("commutator {} {}", coeffs.alpha1, coeffs.alpha2)
            }
            Relation::OppositeRoots { alpha, .. } => format!("opposite {alpha}"),
        }
    }
}

/// Every relation instance, grouped by family and in canonical root order.
pub fn relation_instances(rs: &RootSystem, sc: &StructureConstants) -> Result<Vec<Relation>> {
    let roots = rs.roots();
    let mut out = Vec::new();
    for alpha in roots {
        for delta in 0..rs.rank() {
            let pairing = rs.pairing(alpha, &rs.simple_root(delta))?;
            out.push(Relation::TorusConjugation {
                alpha: alpha.clone(),
                delta,
                pairing,
            });
        }
    }
    for (i, a1) in roots.iter().enumerate() {
        for a2 in &roots[i + 1..] {
            if *a1 != -a2 && rs.sum_root(a1, a2).is_none() {
                out.push(Relation::Commuting {
                    alpha1: a1.clone(),
                    alpha2: a2.clone(),
                });
            }
        }
    }
    for a1 in roots {
        for a2 in roots {
            if *a1 != -a2 && rs.sum_root(a1, a2).is_some() {
                out.push(Relation::Commutator {
                    coeffs: commutator_coeffs(a1, a2, rs, sc)?,
                });
            }
        }
    }
    for alpha in rs.positive_roots() {
        let coroot = coroot_coordinates(alpha, rs)?.n;
        out.push(Relation::OppositeRoots {
            alpha: alpha.clone(),
            coroot,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::structure_constants;

    fn counts(name: &str) -> [usize; 4] {
        let rs = RootSystem::new(name.parse().unwrap());
        let sc = structure_constants(&rs).unwrap();
        let rels = relation_instances(&rs, &sc).unwrap();
        RelationFamily::ALL.map(|f| rels.iter().filter(|r| r.family() == f).count())
    }

    #[test]
    fn a1_counts() {
        assert_eq!(counts("A1"), [2, 0, 0, 1]);
    }

    #[test]
    fn a2_counts() {
        // 6 roots: commuting pairs are {a, b} with a + b not a root and b != -a.
        let [t, c, k, o] = counts("A2");
        assert_eq!((t, o), (12, 3));
        assert_eq!(k, 12);
        assert_eq!(c, 6);
    }
}
