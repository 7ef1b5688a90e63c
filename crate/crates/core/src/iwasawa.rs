//! Truncated Iwasawa algebra of `G(1)` for type `A_l`: Dirac expansion,
//! group-backed normal ordering, convolution and relation checks.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupModel};
use crate::padic::{constants_pq, PAdic, Valuation};
use crate::relations::Relation;
use crate::root_system::{GeneratorKind, Root, RootSystem};
use crate::series::{Monomial, OrderedSeries};

/// A word `g_{i_1}^{a_1} ... g_{i_k}^{a_k}` in the ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorWord(pub Vec<(usize, PAdic)>);

/// A relation with both sides written as generator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub relation: Relation,
    pub lhs: GeneratorWord,
    pub rhs: GeneratorWord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: String,
    pub passed: bool,
    /// First differing monomial with the two coefficients.
    pub diff: Option<(Monomial, PAdic, PAdic)>,
}

type ProductTable = RwLock<HashMap<(Monomial, Monomial), Arc<OrderedSeries>>>;

/// `Lambda(G(1)) / (M^N + p^m)` over the standard realization.
pub struct IwasawaModel {
    group: GroupModel,
    m: u32,
    n_bound: u32,
    products: ProductTable,
}

impl IwasawaModel {
    pub fn new(rs: RootSystem, p: u64, m: u32, n_bound: u32) -> Result<Self> {
        if n_bound == 0 {
            return Err(Error::InsufficientPrecision {
                required: 1,
                available: 0,
            });
        }
        let group = GroupModel::for_series(rs, p, m, n_bound)?;
        Ok(Self {
            group,
            m,
            n_bound,
            products: RwLock::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &GroupModel {
        &self.group
    }

    pub fn root_system(&self) -> &RootSystem {
        self.group.root_system()
    }

    pub fn prime(&self) -> u64 {
        self.group.prime()
    }

    pub fn precision(&self) -> u32 {
        self.m
    }

    pub fn degree_bound(&self) -> u32 {
        self.n_bound
    }

    pub fn num_vars(&self) -> usize {
        self.group.generators().len()
    }

    pub fn zero(&self) -> OrderedSeries {
        OrderedSeries::zero(self.prime(), self.m, self.n_bound, self.num_vars()).expect("validated")
    }

    pub fn one(&self) -> OrderedSeries {
        OrderedSeries::one(self.prime(), self.m, self.n_bound, self.num_vars()).expect("validated")
    }

    /// `c * b^k`
    pub fn monomial(&self, k: Monomial, c: i64) -> OrderedSeries {
        let mut s = self.zero();
        s.add_term(k, s.scalar(c));
        s
    }

    /// Exponent at the precision words need.
    pub fn exponent(&self, v: i64) -> PAdic {
        PAdic::new(self.prime(), self.group.precision() - 1, v).expect("validated")
    }

    /// Position of `V_r` in the generator order.
    pub fn root_position(&self, r: &Root) -> Result<usize> {
        self.root_system().check(r)?;
        Ok(self
            .group
            .generators()
            .iter()
            .position(|g| g.root() == Some(r))
            .expect("every root labels a generator"))
    }

    pub fn torus_position(&self, i: usize) -> usize {
        self.group
            .generators()
            .iter()
            .position(|g| g.kind == GeneratorKind::Torus(i))
            .expect("torus generator")
    }

    /// `prod_i (1 + b_i)^{e_i}` for the Lazard coordinates `e` of `g`.
    pub fn dirac(&self, g: &GroupElement) -> Result<OrderedSeries> {
        let coords = self.group.lazard_coordinates(g)?;
        let d = self.num_vars();
        let top = self.n_bound - 1;
        // binom(e_i, k) for k <= top.
        let tables: Vec<Vec<PAdic>> = coords
            .e
            .iter()
            .map(|e| {
                (0..=top as u64)
                    .map(|k| e.binomial(k, self.m))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?;
        let mut out = self.zero();
        let mut exps = vec![0u8; d];
        let one = PAdic::one(self.prime(), self.m)?;
        expand(&tables, 0, top, one, &mut exps, &mut out);
        Ok(out)
    }

    /// Group element of an ordered-basis word, multiplied left to right.
    pub fn evaluate(&self, word: &GeneratorWord) -> Result<GroupElement> {
        let mut g = self.group.identity();
        for (i, a) in &word.0 {
            g = g.mul(&self.group.generator_power(*i, a)?);
        }
        Ok(g)
    }

    pub fn normal_order(&self, word: &GeneratorWord) -> Result<OrderedSeries> {
        self.dirac(&self.evaluate(word)?)
    }

    /// `prod_{s} g_{w_s}` for the index subset `mask` of a word of positions.
    fn subword_element(&self, word: &[usize], mask: u32) -> GroupElement {
        let mut g = self.group.identity();
        for (s, &i) in word.iter().enumerate() {
            if mask >> s & 1 == 1 {
                g = g.mul(&self.group.generator(i));
            }
        }
        g
    }

    /// Ordered expansion of a product `b_{w_1} ... b_{w_n}` in any order.
    pub fn expand_variable_word(&self, word: &[usize]) -> Result<OrderedSeries> {
        let n = word.len();
        let mut out = self.zero();
        for mask in 0u32..1 << n {
            let sign = if (n as u32 - mask.count_ones()) % 2 == 0 {
                1
            } else {
                -1
            };
            let dirac = self.dirac(&self.subword_element(word, mask))?;
            out = out.add(&dirac.scale(&out.scalar(sign)))?;
        }
        Ok(out)
    }

    /// `b^k b^l` as an ordered series, cached.
    fn product(&self, k: &Monomial, l: &Monomial) -> Result<Arc<OrderedSeries>> {
        let key = (k.clone(), l.clone());
        if let Some(hit) = self.products.read().expect("lock").get(&key) {
            return Ok(hit.clone());
        }
        let value = Arc::new(if k.precedes(l) {
            self.monomial(k.mul_exponents(l), 1)
        } else {
            self.product_uncached(k, l)?
        });
        self.products
            .write()
            .expect("lock")
            .insert(key, value.clone());
        Ok(value)
    }

    /// `b^k = sum_{j <= k} prod_i binom(k_i, j_i) (-1)^{k_i - j_i} g^j`.
    fn product_uncached(&self, k: &Monomial, l: &Monomial) -> Result<OrderedSeries> {
        let left = self.dirac_expansion(k)?;
        let right = self.dirac_expansion(l)?;
        let mut out = self.zero();
        for (a, ga) in &left {
            for (b, gb) in &right {
                let d = self.dirac(&ga.mul(gb))?;
                out = out.add(&d.scale(&out.scalar(a * b)))?;
            }
        }
        Ok(out)
    }

    fn dirac_expansion(&self, k: &Monomial) -> Result<Vec<(i64, GroupElement)>> {
        let mut terms = vec![(1i64, Vec::<u8>::new())];
        for &ki in k.exponents() {
            let mut next = Vec::new();
            for (c, js) in &terms {
                for j in 0..=ki {
                    let sign = if (ki - j) % 2 == 0 { 1 } else { -1 };
                    let mut js = js.clone();
                    js.push(j);
                    next.push((c * sign * binom_small(ki, j), js));
                }
            }
            terms = next;
        }
        terms
            .into_iter()
            .map(|(c, js)| {
                let e = js.iter().map(|&j| self.exponent(j as i64)).collect();
                Ok((
                    c,
                    self.group
                        .from_coordinates(&crate::group::LazardCoordinates { e })?,
                ))
            })
            .collect()
    }

    pub fn convolve(&self, a: &OrderedSeries, b: &OrderedSeries) -> Result<OrderedSeries> {
        let z = self.zero();
        a.check_compatible(&z)?;
        b.check_compatible(&z)?;
        let mut out = self.zero();
        for (k, ca) in a.terms() {
            for (l, cb) in b.terms() {
                if k.degree() + l.degree() >= self.n_bound {
                    continue;
                }
                let t = self.product(k, l)?;
                let c = *ca * *cb;
                for (mono, v) in t.terms() {
                    out.add_term(mono.clone(), *v * c);
                }
            }
        }
        Ok(out)
    }

    pub fn omega_tilde(&self, a: &OrderedSeries) -> Valuation {
        a.omega_tilde()
    }

    /// Both sides of a relation as words, with constants at word precision.
    pub fn instantiate(&self, relation: &Relation) -> Result<RelationInstance> {
        let p = self.prime() as i64;
        let one = self.exponent(1);
        let v = |r: &Root| self.root_position(r);
        let (lhs, rhs) = match relation {
            Relation::TorusConjugation {
                alpha,
                delta,
                pairing,
            } => {
                let w = self.torus_position(*delta);
                let q = self.exponent(1 + p).pow_i64(*pairing as i64)?;
                (
                    vec![(w, one), (v(alpha)?, one)],
                    vec![(v(alpha)?, q), (w, one)],
                )
            }
            Relation::Commuting { alpha1, alpha2 } => (
                vec![(v(alpha1)?, one), (v(alpha2)?, one)],
                vec![(v(alpha2)?, one), (v(alpha1)?, one)],
            ),
            Relation::Commutator { coeffs } => {
                let mut rhs = Vec::new();
                for t in &coeffs.terms {
                    let e = self.exponent(t.c) * self.exponent(p).pow((t.i + t.j - 1) as u64);
                    rhs.push((v(&t.root)?, e));
                }
                rhs.push((v(&coeffs.alpha2)?, one));
                rhs.push((v(&coeffs.alpha1)?, one));
                (
                    vec![(v(&coeffs.alpha1)?, one), (v(&coeffs.alpha2)?, one)],
                    rhs,
                )
            }
            Relation::OppositeRoots { alpha, coroot } => {
                let k = constants_pq(self.prime(), self.group.precision() - 1)?;
                let mut rhs = vec![(v(&-alpha)?, k.inv_one_plus_p2)];
                for (i, &n) in coroot.iter().enumerate() {
                    rhs.push((
                        self.torus_position(i),
                        k.log_ratio * self.exponent(n as i64),
                    ));
                }
                rhs.push((v(alpha)?, k.inv_one_plus_p2));
                (vec![(v(alpha)?, one), (v(&-alpha)?, one)], rhs)
            }
        };
        Ok(RelationInstance {
            relation: relation.clone(),
            lhs: GeneratorWord(lhs),
            rhs: GeneratorWord(rhs),
        })
    }

    pub fn check_relation(&self, instance: &RelationInstance) -> Result<RelationCheck> {
        let lhs = self.normal_order(&instance.lhs)?;
        let rhs = self.normal_order(&instance.rhs)?;
        let diff = lhs.first_difference(&rhs);
        Ok(RelationCheck {
            relation: instance.relation.describe(),
            passed: diff.is_none(),
            diff,
        })
    }

    /// Whether `b_{w_1} ... b_{w_n}` equals its sorted monomial modulo `p`
    /// and degree `n + 1`.
    pub fn leading_term_check(&self, word: &[usize]) -> Result<bool> {
        let n = word.len() as u32;
        if n >= self.n_bound {
            return Err(Error::InsufficientPrecision {
                required: n + 1,
                available: self.n_bound,
            });
        }
        let graded = self.expand_variable_word(word)?.reduce_to(1, n + 1)?;
        let mut expected = OrderedSeries::zero(self.prime(), 1, n + 1, self.num_vars())?;
        expected.add_term(
            Monomial::from_word(self.num_vars(), word),
            PAdic::one(self.prime(), 1)?,
        );
        Ok(graded == expected)
    }

    /// Rank over `F_p` of the images of the ordered monomials of degree `n`
    /// in `gr^n`, each expanded through the group.
    pub fn graded_dimension_count(&self, n: u32) -> Result<usize> {
        if n >= self.n_bound {
            return Err(Error::InsufficientPrecision {
                required: n + 1,
                available: self.n_bound,
            });
        }
        let d = self.num_vars();
        let basis = Monomial::of_degree(d, n);
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let p = self.prime();
        let mut rows = Vec::with_capacity(basis.len());
        for k in &basis {
            let word: Vec<usize> = k
                .exponents()
                .iter()
                .enumerate()
                .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
                .collect();
            let image = self
                .expand_variable_word(&word)?
                .reduce_to(1, n + 1)?
                .homogeneous_part(n);
            let mut row = vec![0u64; basis.len()];
            for (mono, c) in image.terms() {
                row[index[mono]] = c.residue() % p;
            }
            rows.push(row);
        }
        Ok(rank_mod_p(rows, p))
    }
}

fn expand(
    tables: &[Vec<PAdic>],
    i: usize,
    left: u32,
    coeff: PAdic,
    exps: &mut Vec<u8>,
    out: &mut OrderedSeries,
) {
    if i == tables.len() {
        out.add_term(Monomial::new(exps.clone()), coeff);
        return;
    }
    for k in 0..=left {
        let b = tables[i][k as usize];
        if b.is_zero() {
            continue;
        }
        exps[i] = k as u8;
        expand(tables, i + 1, left - k, coeff * b, exps, out);
    }
    exps[i] = 0;
}

fn binom_small(n: u8, k: u8) -> i64 {
    (0..k as i64).fold(1, |acc, i| acc * (n as i64 - i) / (i + 1))
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col] * inv % p;
                for c in col..cols {
                    rows[r][c] = (rows[r][c] + (p - f) * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}
