//! The presentation document: generators, constants and every relation
//! record, serialized as JSON with p-adic digit strings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chevalley::{coroot_coordinates, structure_constants};
use crate::error::{Error, Result};
use crate::iwasawa::{GeneratorWord, IwasawaModel};
use crate::padic::{constants_pq, guard_digits, PAdic};
use crate::relations::{relation_instances, Relation};
use crate::root_system::{CartanType, Family, GeneratorKind, Root, RootSystem};

pub const SIGN_CONVENTION: &str = "extraspecial pairs positive in canonical root order";
pub const PRODUCT_ORDER: &str = "i+j ascending, then i ascending";
pub const DIGIT_FORMAT: &str = "base-p digits, least significant first, suffix :^precision";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub cartan_type: String,
    pub prime: u64,
    pub precision: u32,
    pub representation: String,
    pub sign_convention: String,
    pub commutator_product_order: String,
    pub digit_format: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub position: usize,
    pub name: String,
    /// Group element the variable `1 + name` stands for.
    pub element: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root: Option<Root>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simple_index: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constants {
    /// `log(1+p^2) / log(1+p)`
    #[serde(rename = "P")]
    pub p_const: String,
    /// `(1+p^2)^-1`
    #[serde(rename = "Q")]
    pub q_const: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantRecord {
    pub a: Root,
    pub b: Root,
    pub n: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorootRecord {
    pub root: Root,
    pub n: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub i: u32,
    pub j: u32,
    pub root: Root,
    pub c: i64,
    /// `c * p^(i+j-1)` as digits.
    pub exponent: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum RelationRecord {
    TorusConjugation {
        alpha: Root,
        /// 1-based simple root index.
        delta: usize,
        pairing: i32,
        symbolic: String,
        q: String,
    },
    Commuting {
        alpha1: Root,
        alpha2: Root,
    },
    Commutator {
        alpha1: Root,
        alpha2: Root,
        symbolic: String,
        factors: Vec<FactorRecord>,
    },
    OppositeRoots {
        alpha: Root,
        symbolic: String,
        coroot: Vec<i32>,
        #[serde(rename = "Q")]
        q_const: String,
        /// `n_i * P` as digits, one per simple root.
        torus_exponents: Vec<String>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub metadata: Metadata,
    pub generators: Vec<GeneratorRecord>,
    pub constants: Constants,
    pub structure_constants: Vec<StructureConstantRecord>,
    pub coroots: Vec<CorootRecord>,
    pub relations: Vec<RelationRecord>,
}

fn representation_tag(ct: CartanType) -> String {
    match ct.family() {
        Family::A => format!("standard representation of SL_{}", ct.rank() + 1),
        _ => "symbolic only".to_string(),
    }
}

pub fn emit_presentation(ct: CartanType, p: u64, m: u32) -> Result<Presentation> {
    let one = PAdic::one(p, m)?;
    let rs = RootSystem::new(ct);
    let sc = structure_constants(&rs)?;
    let k = constants_pq(p, m)?;
    let lift = |v: i64| one.lift_int(v);

    let generators = rs
        .generator_order()
        .into_iter()
        .map(|g| {
            let element = match &g.kind {
                GeneratorKind::NegRoot(r) | GeneratorKind::PosRoot(r) => format!("x_{r}(p)"),
                GeneratorKind::Torus(i) => format!("h_{}(1+p)", i + 1),
            };
            GeneratorRecord {
                position: g.position,
                name: g.name(),
                element,
                root: g.root().cloned(),
                simple_index: g.simple_index().map(|i| i + 1),
            }
        })
        .collect();

    let structure_constants = sc
        .entries()
        .map(|(a, b, n)| StructureConstantRecord {
            a: a.clone(),
            b: b.clone(),
            n,
        })
        .collect();
    let coroots = rs
        .positive_roots()
        .map(|r| {
            coroot_coordinates(r, &rs).map(|c| CorootRecord {
                root: c.root,
                n: c.n,
            })
        })
        .collect::<Result<_>>()?;

    let name = |r: &Root| format!("V{r}");
    let mut relations = Vec::new();
    for rel in relation_instances(&rs, &sc)? {
        relations.push(match rel {
            Relation::TorusConjugation {
                alpha,
                delta,
                pairing,
            } => RelationRecord::TorusConjugation {
                symbolic: format!(
                    "(1+W{d})(1+{v}) = (1+{v})^((1+p)^{pairing})(1+W{d})",
                    d = delta + 1,
                    v = name(&alpha)
                ),
                q: lift(1 + p as i64).pow_i64(pairing as i64)?.to_string(),
                alpha,
                delta: delta + 1,
                pairing,
            },
            Relation::Commuting { alpha1, alpha2 } => RelationRecord::Commuting { alpha1, alpha2 },
            Relation::Commutator { coeffs } => {
                let factors: Vec<FactorRecord> = coeffs
                    .terms
                    .iter()
                    .map(|t| FactorRecord {
                        i: t.i,
                        j: t.j,
                        root: t.root.clone(),
                        c: t.c,
                        exponent: (lift(t.c) * lift(p as i64).pow((t.i + t.j - 1) as u64))
                            .to_string(),
                    })
                    .collect();
                let product: String = factors
                    .iter()
                    .map(|f| format!("(1+{})^({} p^{})", name(&f.root), f.c, f.i + f.j - 1))
                    .collect();
                let (a1, a2) = (name(&coeffs.alpha1), name(&coeffs.alpha2));
                RelationRecord::Commutator {
                    symbolic: format!("(1+{a1})(1+{a2}) = {product}(1+{a2})(1+{a1})"),
                    alpha1: coeffs.alpha1,
                    alpha2: coeffs.alpha2,
                    factors,
                }
            }
            Relation::OppositeRoots { alpha, coroot } => {
                let torus: String = coroot
                    .iter()
                    .enumerate()
                    .map(|(i, n)| format!("(1+W{})^({n} P)", i + 1))
                    .collect();
                let (v, vn) = (name(&alpha), name(&-&alpha));
                RelationRecord::OppositeRoots {
                    symbolic: format!("(1+{v})(1+{vn}) = (1+{vn})^Q{torus}(1+{v})^Q"),
                    q_const: k.inv_one_plus_p2.to_string(),
                    torus_exponents: coroot
                        .iter()
                        .map(|&n| (k.log_ratio * lift(n as i64)).to_string())
                        .collect(),
                    alpha,
                    coroot,
                }
            }
        });
    }

    Ok(Presentation {
        metadata: Metadata {
            cartan_type: ct.to_string(),
            prime: p,
            precision: m,
            representation: representation_tag(ct),
            sign_convention: SIGN_CONVENTION.into(),
            commutator_product_order: PRODUCT_ORDER.into(),
            digit_format: DIGIT_FORMAT.into(),
        },
        generators,
        constants: Constants {
            p_const: k.log_ratio.to_string(),
            q_const: k.inv_one_plus_p2.to_string(),
        },
        structure_constants,
        coroots,
        relations,
    })
}

impl Presentation {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn cartan_type(&self) -> Result<CartanType> {
        self.metadata.cartan_type.parse()
    }

    pub fn count(&self, family: &str) -> usize {
        self.relations
            .iter()
            .filter(|r| r.family_tag() == family)
            .count()
    }

    pub fn to_plain(&self) -> String {
        let md = &self.metadata;
        let mut out = String::new();
        writeln!(
            out,
            "type {}  p = {}  precision {}",
            md.cartan_type, md.prime, md.precision
        )
        .unwrap();
        writeln!(out, "representation: {}", md.representation).unwrap();
        writeln!(out, "signs: {}", md.sign_convention).unwrap();
        writeln!(
            out,
            "commutator factor order: {}",
            md.commutator_product_order
        )
        .unwrap();
        writeln!(out).unwrap();
        writeln!(out, "generators ({}):", self.generators.len()).unwrap();
        for g in &self.generators {
            writeln!(out, "  {:>3}  1+{} <-> {}", g.position, g.name, g.element).unwrap();
        }
        writeln!(out).unwrap();
        writeln!(out, "P = {}", self.constants.p_const).unwrap();
        writeln!(out, "Q = {}", self.constants.q_const).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "structure constants:").unwrap();
        for s in &self.structure_constants {
            writeln!(out, "  N[{}, {}] = {}", s.a, s.b, s.n).unwrap();
        }
        writeln!(out).unwrap();
        writeln!(out, "relations ({}):", self.relations.len()).unwrap();
        for r in &self.relations {
            let line = match r {
                RelationRecord::TorusConjugation { symbolic, q, .. } => {
                    format!("{symbolic}    (1+p)^<a,d> = {q}")
                }
                RelationRecord::Commuting { alpha1, alpha2 } => {
                    format!("(1+V{alpha1})(1+V{alpha2}) = (1+V{alpha2})(1+V{alpha1})")
                }
                RelationRecord::Commutator {
                    symbolic, factors, ..
                } => {
                    let ex: Vec<String> = factors
                        .iter()
                        .map(|f| format!("c{}{}={}", f.i, f.j, f.c))
                        .collect();
                    format!("{symbolic}    {}", ex.join(" "))
                }
                RelationRecord::OppositeRoots {
                    symbolic,
                    torus_exponents,
                    ..
                } => {
                    format!("{symbolic}    n_i P = {}", torus_exponents.join(" "))
                }
            };
            writeln!(out, "  [{}] {line}", r.family_tag()).unwrap();
        }
        out
    }
}

impl RelationRecord {
    pub fn family_tag(&self) -> &'static str {
        match self {
            RelationRecord::TorusConjugation { .. } => "torus_conjugation",
            RelationRecord::Commuting { .. } => "commuting",
            RelationRecord::Commutator { .. } => "commutator",
            RelationRecord::OppositeRoots { .. } => "opposite_roots",
        }
    }
}

/// Result of re-checking a parsed presentation.
#[derive(Clone, Debug, Default)]
pub struct Validation {
    pub problems: Vec<String>,
    /// Relation records evaluated in the series model, if the type has one.
    pub relations_checked: usize,
    /// Coefficient precision of those checks.
    pub series_precision: Option<u32>,
}

impl Validation {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Re-parses every constant, checks the defining identities at the stated
/// precision, compares against a fresh emission and, for type A, evaluates
/// each relation with the parsed constants in the series model.
pub fn validate(doc: &Presentation) -> Result<Validation> {
    let ct = doc.cartan_type()?;
    let p = doc.metadata.prime;
    let m = doc.metadata.precision;
    let mut problems = Vec::new();
    let mut relations_checked = 0;
    let mut series_precision = None;
    let parse = |s: &str| PAdic::parse(p, s);
    let one = PAdic::one(p, m)?;

    let big_p = parse(&doc.constants.p_const)?;
    let big_q = parse(&doc.constants.q_const)?;
    let one_plus_p2 = one.lift_int(1 + (p * p) as i64);
    if big_q * one_plus_p2 != one {
        problems.push("Q (1+p^2) != 1".into());
    }
    // (1+p)^P = 1+p^2 is decided at m digits from P at m - 1 digits.
    if m >= 2
        && one
            .lift_int(1 + p as i64)
            .pow_padic(&big_p.truncate(m - 1)?)?
            != one_plus_p2
    {
        problems.push("(1+p)^P != 1+p^2".into());
    }

    let rs = RootSystem::new(ct);
    if doc.generators.len() != rs.dimension() {
        problems.push(format!(
            "{} generators, expected {}",
            doc.generators.len(),
            rs.dimension()
        ));
    }
    for rec in &doc.relations {
        match rec {
            RelationRecord::TorusConjugation {
                alpha,
                delta,
                pairing,
                q,
                ..
            } => {
                let expect = one.lift_int(1 + p as i64).pow_i64(*pairing as i64)?;
                if parse(q)? != expect {
                    problems.push(format!("q for {alpha}, d{delta}"));
                }
                if rs.pairing(alpha, &rs.simple_root(delta - 1))? != *pairing {
                    problems.push(format!("pairing for {alpha}, d{delta}"));
                }
            }
            RelationRecord::Commuting { alpha1, alpha2 } => {
                if rs.sum_root(alpha1, alpha2).is_some() || *alpha1 == -alpha2 {
                    problems.push(format!("{alpha1}, {alpha2} listed as commuting"));
                }
            }
            RelationRecord::Commutator {
                alpha1,
                alpha2,
                factors,
                ..
            } => {
                for f in factors {
                    let e = one.lift_int(f.c) * one.lift_int(p as i64).pow((f.i + f.j - 1) as u64);
                    if parse(&f.exponent)? != e
                        || f.root != alpha1.combine(f.i as i32, alpha2, f.j as i32)
                    {
                        problems.push(format!("factor ({}, {}) of {alpha1}, {alpha2}", f.i, f.j));
                    }
                }
            }
            RelationRecord::OppositeRoots {
                alpha,
                coroot,
                q_const,
                torus_exponents,
                ..
            } => {
                if parse(q_const)? != big_q {
                    problems.push(format!("Q for {alpha}"));
                }
                for (n, e) in coroot.iter().zip(torus_exponents) {
                    if parse(e)? != big_p * one.lift_int(*n as i64) {
                        problems.push(format!("n P for {alpha}"));
                    }
                }
            }
        }
    }

    let fresh = emit_presentation(ct, p, m)?;
    if fresh != *doc {
        let first = fresh
            .relations
            .iter()
            .zip(&doc.relations)
            .position(|(a, b)| a != b);
        problems.push(match first {
            Some(i) => format!("record {i} differs from a fresh emission"),
            None => "document differs from a fresh emission".into(),
        });
    }

    if ct.family() == Family::A {
        let n_bound = 3;
        let guard = guard_digits(p, (n_bound - 1) as u64);
        if m + 1 > guard {
            let series_m = m + 1 - guard;
            let model = IwasawaModel::new(rs, p, series_m, n_bound)?;
            for rec in &doc.relations {
                let (lhs, rhs) = record_words(&model, rec, &big_p, &big_q)?;
                let a = model.normal_order(&lhs)?;
                let b = model.normal_order(&rhs)?;
                if a != b {
                    problems.push(format!("relation fails in the series model: {rec:?}"));
                }
                relations_checked += 1;
            }
            series_precision = Some(series_m);
        }
    }
    Ok(Validation {
        problems,
        relations_checked,
        series_precision,
    })
}

/// Generator words of a record, with exponents taken from the document.
fn record_words(
    model: &IwasawaModel,
    rec: &RelationRecord,
    big_p: &PAdic,
    big_q: &PAdic,
) -> Result<(GeneratorWord, GeneratorWord)> {
    let work = model.group().precision() - 1;
    let fit = |x: &PAdic| x.truncate(work);
    let one = model.exponent(1);
    let v = |r: &Root| model.root_position(r);
    let p = big_p.prime();
    let parse = |s: &str| PAdic::parse(p, s).and_then(|x| fit(&x));
    let (lhs, rhs) = match rec {
        RelationRecord::TorusConjugation {
            alpha, delta, q, ..
        } => {
            let w = model.torus_position(delta - 1);
            (
                vec![(w, one), (v(alpha)?, one)],
                vec![(v(alpha)?, parse(q)?), (w, one)],
            )
        }
        RelationRecord::Commuting { alpha1, alpha2 } => (
            vec![(v(alpha1)?, one), (v(alpha2)?, one)],
            vec![(v(alpha2)?, one), (v(alpha1)?, one)],
        ),
        RelationRecord::Commutator {
            alpha1,
            alpha2,
            factors,
            ..
        } => {
            let mut rhs: Vec<(usize, PAdic)> = factors
                .iter()
                .map(|f| Ok((v(&f.root)?, parse(&f.exponent)?)))
                .collect::<Result<_>>()?;
            rhs.push((v(alpha2)?, one));
            rhs.push((v(alpha1)?, one));
            (vec![(v(alpha1)?, one), (v(alpha2)?, one)], rhs)
        }
        RelationRecord::OppositeRoots {
            alpha,
            torus_exponents,
            ..
        } => {
            let q = fit(big_q)?;
            let mut rhs = vec![(v(&-alpha)?, q)];
            for (i, e) in torus_exponents.iter().enumerate() {
                rhs.push((model.torus_position(i), parse(e)?));
            }
            rhs.push((v(alpha)?, q));
            (vec![(v(alpha)?, one), (v(&-alpha)?, one)], rhs)
        }
    };
    Ok((GeneratorWord(lhs), GeneratorWord(rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn emit(t: &str, p: u64, m: u32) -> Presentation {
        emit_presentation(t.parse().unwrap(), p, m).unwrap()
    }

    #[test]
    fn counts() {
        let a1 = emit("A1", 5, 4);
        assert_eq!(a1.generators.len(), 3);
        let c = |f| a1.count(f);
        assert_eq!(
            (
                c("torus_conjugation"),
                c("commuting"),
                c("commutator"),
                c("opposite_roots")
            ),
            (2, 0, 0, 1)
        );
        let a2 = emit("A2", 5, 4);
        assert_eq!(a2.generators.len(), 8);
        assert_eq!(a2.count("opposite_roots"), 3);
        assert_eq!(emit("G2", 7, 4).generators.len(), 14);
    }

    #[test]
    fn rejects_two() {
        assert!(matches!(
            emit_presentation("A1".parse().unwrap(), 2, 4),
            Err(Error::InvalidPrime(2))
        ));
    }

    #[test]
    fn round_trip_validates() {
        for (t, p, m) in [("A1", 5, 4), ("A2", 3, 4), ("G2", 7, 4), ("B2", 3, 3)] {
            let doc = emit(t, p, m);
            let back = Presentation::from_json(&doc.to_json()).unwrap();
            assert_eq!(back, doc);
            let v = validate(&back).unwrap();
            assert!(v.ok(), "{t}: {:?}", v.problems);
        }
        assert!(validate(&emit("A2", 5, 4)).unwrap().relations_checked > 0);
    }

    #[test]
    fn tampered_constant_is_caught() {
        let mut doc = emit("A2", 5, 4);
        for r in &mut doc.relations {
            if let RelationRecord::Commutator { factors, .. } = r {
                factors[0].c = -factors[0].c;
                let e = PAdic::new(5, 4, factors[0].c).unwrap() * PAdic::new(5, 4, 5).unwrap();
                factors[0].exponent = e.to_string();
                break;
            }
        }
        let v = validate(&doc).unwrap();
        assert!(!v.ok());
        assert!(v.problems.iter().any(|p| p.contains("series model")));
    }

    #[test]
    fn plain_rendering_mentions_every_relation() {
        let doc = emit("A2", 3, 3);
        let plain = doc.to_plain();
        assert_eq!(plain.matches("\n  [").count(), doc.relations.len());
    }
}
