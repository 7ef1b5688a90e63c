//! Integral structure constants of a Chevalley basis, the commutator
//! coefficients `c_ij` and coroot coordinates.
//!
//! Signs are fixed by declaring `N_{a,b} = +(v+1)` on every extraspecial pair
//! (taken with respect to the canonical root order) and propagating through
//! the standard identities between structure constants. The resulting table
//! is self-checked: magnitudes against root strings here, the Jacobi
//! identity through [`StructureConstants::jacobi_violations`].

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Root, RootSystem};

/// Signed structure constants `[X_a, X_b] = N_{a,b} X_{a+b}`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    /// Dense over root indices; zero where `a + b` is not a root.
    table: Vec<Vec<i32>>,
}

impl StructureConstants {
    pub fn get(&self, a: &Root, b: &Root) -> i32 {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.table[i][j],
            _ => 0,
        }
    }

    /// Every nonzero entry, in canonical root order.
    pub fn entries(&self) -> impl Iterator<Item = (&Root, &Root, i32)> + '_ {
        self.table.iter().enumerate().flat_map(move |(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, &n)| n != 0)
                .map(move |(j, &n)| (&self.roots[i], &self.roots[j], n))
        })
    }

    pub fn len(&self) -> usize {
        self.entries().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Triples of basis indices `(i, j, k)` of the Chevalley lattice where
    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` fails to vanish. Basis order is
    /// `H_1, ..., H_l` followed by the roots in canonical order.
    pub fn jacobi_violations(&self, rs: &RootSystem) -> Result<Vec<(usize, usize, usize)>> {
        let lie = ChevalleyAlgebra::new(rs, self)?;
        let dim = lie.dim();
        let mut bad = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let ij = lie.bracket_basis(i, j);
                for k in j + 1..dim {
                    let mut total = lie.bracket_vec_basis(&lie.bracket_basis(j, k), i, true);
                    add_into(
                        &mut total,
                        &lie.bracket_vec_basis(&lie.bracket_basis(k, i), j, true),
                    );
                    add_into(&mut total, &lie.bracket_vec_basis(&ij, k, true));
                    if total.values().any(|&c| c != 0) {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        Ok(bad)
    }
}

fn add_into(acc: &mut BTreeMap<usize, i64>, other: &BTreeMap<usize, i64>) {
    for (&k, &v) in other {
        *acc.entry(k).or_insert(0) += v;
    }
}

/// The integral Lie algebra spanned by the Chevalley basis, as sparse brackets.
pub struct ChevalleyAlgebra<'a> {
    rs: &'a RootSystem,
    sc: &'a StructureConstants,
    coroots: Vec<Vec<i32>>,
}

impl<'a> ChevalleyAlgebra<'a> {
    pub fn new(rs: &'a RootSystem, sc: &'a StructureConstants) -> Result<Self> {
        let coroots = rs
            .roots()
            .iter()
            .map(|r| coroot_coordinates(r, rs).map(|c| c.n))
            .collect::<Result<_>>()?;
        Ok(Self { rs, sc, coroots })
    }

    pub fn dim(&self) -> usize {
        self.rs.dimension()
    }

    /// Basis index of `X_r`.
    pub fn root_index(&self, r: &Root) -> Option<usize> {
        self.rs.index_of(r).map(|i| i + self.rs.rank())
    }

    /// `[e_i, e_j]` for basis elements.
    pub fn bracket_basis(&self, i: usize, j: usize) -> BTreeMap<usize, i64> {
        let l = self.rs.rank();
        let roots = self.rs.roots();
        let mut out = BTreeMap::new();
        match (i < l, j < l) {
            (true, true) => {}
            (true, false) => {
                let r = &roots[j - l];
                let c = self.rs.pairing(r, &self.rs.simple_root(i)).expect("root") as i64;
                if c != 0 {
                    out.insert(j, c);
                }
            }
            (false, true) => {
                let r = &roots[i - l];
                let c = self.rs.pairing(r, &self.rs.simple_root(j)).expect("root") as i64;
                if c != 0 {
                    out.insert(i, -c);
                }
            }
            (false, false) => {
                let (a, b) = (&roots[i - l], &roots[j - l]);
                if *a == -b {
                    for (k, &n) in self.coroots[i - l].iter().enumerate() {
                        if n != 0 {
                            out.insert(k, n as i64);
                        }
                    }
                } else if let Some(s) = self.rs.sum_root(a, b) {
                    let n = self.sc.get(a, b) as i64;
                    out.insert(self.rs.index_of(&s).expect("root") + l, n);
                }
            }
        }
        out
    }

    /// `[v, e_k]` when `left` is false, `[e_k, v]` when true.
    pub fn bracket_vec_basis(
        &self,
        v: &BTreeMap<usize, i64>,
        k: usize,
        left: bool,
    ) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (&i, &c) in v {
            let b = if left {
                self.bracket_basis(k, i)
            } else {
                self.bracket_basis(i, k)
            };
            for (idx, val) in b {
                *out.entry(idx).or_insert(0) += c * val;
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Matrix of `ad(X_r)` acting on column vectors in the basis order.
    pub fn ad_matrix(&self, r: &Root) -> Vec<Vec<i64>> {
        let dim = self.dim();
        let k = self.root_index(r).expect("root");
        let mut m = vec![vec![0i64; dim]; dim];
        for col in 0..dim {
            for (row, val) in self.bracket_basis(k, col) {
                m[row][col] = val;
            }
        }
        m
    }
}

type Q = Ratio<i64>;

pub fn structure_constants(rs: &RootSystem) -> Result<StructureConstants> {
    let roots = rs.roots().to_vec();
    let n_roots = roots.len();
    let index: HashMap<Root, usize> = roots
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();
    let mut sc = StructureConstants {
        roots,
        index,
        table: vec![vec![0; n_roots]; n_roots],
    };

    let positives: Vec<Root> = rs.positive_roots().cloned().collect();
    for xi in &positives {
        let special: Vec<(&Root, Root)> = positives
            .iter()
            .filter(|a| *a < xi)
            .filter_map(|a| {
                let b = xi.scaled_add(-1, a);
                (b.is_positive() && rs.contains(&b) && *a < b).then_some((a, b))
            })
            .collect();
        let Some(((a0, b0), rest)) = special.split_first() else {
            continue;
        };
        let (_, v) = rs.root_string(b0, a0)?;
        let n0 = v as i32 + 1;
        sc.set(a0, b0, n0);
        for (a, b) in rest {
            let term = |x: &Root, y: &Root, z: &Root, w: &Root| -> Result<Q> {
                // N_{x,y} N_{z,w} / (x+y, x+y), zero unless x+y is a root.
                let s = x + y;
                if !rs.contains(&s) {
                    return Ok(Q::zero());
                }
                let top = general_n(rs, &sc, x, y)? as i64 * general_n(rs, &sc, z, w)? as i64;
                Ok(Q::new(top, rs.norm2(&s)))
            };
            let (na0, nb0) = (-*a0, -b0);
            let t2 = term(b, &na0, a, &nb0)?;
            let t3 = term(&na0, a, b, &nb0)?;
            let n = Q::from_integer(rs.norm2(xi)) * (t2 + t3) / Q::from_integer(n0 as i64);
            if !n.is_integer() {
                return Err(Error::Consistency(format!(
                    "N_{{{a},{b}}} = {n} is not integral"
                )));
            }
            sc.set(a, b, n.to_integer() as i32);
        }
    }

    // Fill every remaining pair from the positive ones.
    let all = rs.roots().to_vec();
    for a in &all {
        for b in &all {
            if *a != -b && rs.sum_root(a, b).is_some() && sc.get(a, b) == 0 {
                let n = general_n(rs, &sc, a, b)?;
                sc.table[sc.index[a]][sc.index[b]] = n;
            }
        }
    }

    for (a, b, n) in sc.entries() {
        let (_, v) = rs.root_string(b, a)?;
        if n.unsigned_abs() != v + 1 {
            return Err(Error::Consistency(format!(
                "|N_{{{a},{b}}}| = {} but v + 1 = {}",
                n.abs(),
                v + 1
            )));
        }
    }
    Ok(sc)
}

impl StructureConstants {
    fn set(&mut self, a: &Root, b: &Root, n: i32) {
        let (i, j) = (self.index[a], self.index[b]);
        self.table[i][j] = n;
        self.table[j][i] = -n;
    }
}

/// `N_{r,s}` for arbitrary roots, reduced to pairs of positive roots whose
/// sum has smaller height.
fn general_n(rs: &RootSystem, sc: &StructureConstants, r: &Root, s: &Root) -> Result<i32> {
    let Some(t) = rs.sum_root(r, s) else {
        return Ok(0);
    };
    let stored = sc.get(r, s);
    if stored != 0 {
        return Ok(stored);
    }
    let value: Q = match (r.is_positive(), s.is_positive()) {
        (true, true) => {
            return Err(Error::Consistency(format!(
                "N_{{{r},{s}}} requested before assignment"
            )));
        }
        (false, false) => Q::from_integer(-(general_n(rs, sc, &-r, &-s)? as i64)),
        (false, true) => Q::from_integer(-(general_n(rs, sc, s, r)? as i64)),
        (true, false) => {
            if t.is_positive() {
                Q::new(-rs.norm2(&t), rs.norm2(r)) * general_n(rs, sc, &-s, &t)? as i64
            } else {
                Q::new(rs.norm2(&t), rs.norm2(s)) * general_n(rs, sc, &-&t, r)? as i64
            }
        }
    };
    if !value.is_integer() {
        return Err(Error::Consistency(format!(
            "N_{{{r},{s}}} = {value} is not integral"
        )));
    }
    Ok(value.to_integer() as i32)
}

/// Coordinates of the coroot `H_g` in the basis `H_{d_1}, ..., H_{d_l}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorootCoordinates {
    pub root: Root,
    pub n: Vec<i32>,
}

/// Solves `d_j(H_g) = sum_i n_i d_j(H_{d_i})` over the rationals and checks
/// the solution is integral.
pub fn coroot_coordinates(g: &Root, rs: &RootSystem) -> Result<CorootCoordinates> {
    rs.check(g)?;
    let l = rs.rank();
    let a = rs.cartan_matrix();
    // Augmented system: rows j, unknowns n_i, coefficient A[j][i].
    let mut m: Vec<Vec<Q>> = (0..l)
        .map(|j| {
            let mut row: Vec<Q> = (0..l).map(|i| Q::from_integer(a[j][i] as i64)).collect();
            row.push(Q::from_integer(rs.pairing(&rs.simple_root(j), g)? as i64));
            Ok(row)
        })
        .collect::<Result<_>>()?;
    for col in 0..l {
        let pivot = (col..l)
            .find(|&r| !m[r][col].is_zero())
            .ok_or_else(|| Error::Consistency("singular Cartan matrix".into()))?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for c in col..=l {
            m[col][c] *= inv;
        }
        for r in 0..l {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=l {
                    let delta = f * m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    let n = (0..l)
        .map(|i| {
            let x = m[i][l];
            if x.is_integer() {
                Ok(x.to_integer() as i32)
            } else {
                Err(Error::Consistency(format!(
                    "coroot coordinate {x} of {g} is not integral"
                )))
            }
        })
        .collect::<Result<_>>()?;
    Ok(CorootCoordinates { root: g.clone(), n })
}

/// One factor `x_{i a1 + j a2}(c_ij t^i u^j)` of a commutator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorTerm {
    pub i: u32,
    pub j: u32,
    pub root: Root,
    pub c: i64,
}

/// `x_{a1}(t) x_{a2}(u) x_{a1}(t)^{-1} x_{a2}(u)^{-1} = prod x_{i a1 + j a2}(c_ij t^i u^j)`,
/// with factors in the order of `terms` (by `i + j`, then `i`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutatorCoeffs {
    pub alpha1: Root,
    pub alpha2: Root,
    pub terms: Vec<CommutatorTerm>,
}

impl CommutatorCoeffs {
    pub fn coefficient(&self, i: u32, j: u32) -> Option<i64> {
        self.terms
            .iter()
            .find(|t| t.i == i && t.j == j)
            .map(|t| t.c)
    }
}

pub fn commutator_coeffs(
    alpha1: &Root,
    alpha2: &Root,
    rs: &RootSystem,
    sc: &StructureConstants,
) -> Result<CommutatorCoeffs> {
    rs.check(alpha1)?;
    rs.check(alpha2)?;
    if *alpha1 == -alpha2 {
        return Err(Error::ProportionalRoots(
            alpha1.coeffs().to_vec(),
            alpha2.coeffs().to_vec(),
        ));
    }
    let empty = CommutatorCoeffs {
        alpha1: alpha1.clone(),
        alpha2: alpha2.clone(),
        terms: Vec::new(),
    };
    if rs.sum_root(alpha1, alpha2).is_none() {
        return Ok(empty);
    }

    // Roots i*a1 + j*a2 with i, j >= 0 span a nilpotent subalgebra.
    let mut span: Vec<(u32, u32, Root)> = Vec::new();
    for i in 0..=4u32 {
        for j in 0..=4u32 {
            if i + j == 0 {
                continue;
            }
            let r = alpha1.combine(i as i32, alpha2, j as i32);
            if rs.contains(&r) {
                span.push((i, j, r));
            }
        }
    }
    span.sort_by_key(|(i, j, _)| (i + j, *i));
    let env = NilpotentEnvelope::new(&span, rs, sc);
    let e1 = span
        .iter()
        .position(|(i, j, _)| (*i, *j) == (1, 0))
        .expect("a1 in span");
    let e2 = span
        .iter()
        .position(|(i, j, _)| (*i, *j) == (0, 1))
        .expect("a2 in span");
    let one = BigRational::one();
    let commutator = [
        env.exp(e1, &one),
        env.exp(e2, &one),
        env.exp(e1, &-one.clone()),
        env.exp(e2, &-one.clone()),
    ]
    .into_iter()
    .reduce(|a, b| env.mul(&a, &b))
    .expect("four factors");

    // In an ordered product of exponentials no reordering happens, so the
    // coefficient of each single letter is the parameter of that factor.
    let coeff = |k: usize| {
        commutator
            .get(&vec![k as u8])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    };
    if !coeff(e1).is_zero() || !coeff(e2).is_zero() {
        return Err(Error::Consistency(
            "commutator has a linear term in a1 or a2".into(),
        ));
    }
    let recomposed = (0..span.len())
        .map(|k| env.exp(k, &coeff(k)))
        .reduce(|a, b| env.mul(&a, &b))
        .expect("nonempty span");
    if recomposed != commutator {
        return Err(Error::Consistency(format!(
            "commutator of {alpha1}, {alpha2} does not refactor"
        )));
    }

    let mut terms = Vec::new();
    for (k, (i, j, r)) in span.iter().enumerate() {
        if *i == 0 || *j == 0 {
            continue;
        }
        let c = coeff(k);
        if !c.is_integer() {
            return Err(Error::Consistency(format!(
                "c_{i}{j} = {c} for {alpha1}, {alpha2} is not integral"
            )));
        }
        terms.push(CommutatorTerm {
            i: *i,
            j: *j,
            root: r.clone(),
            c: c.to_integer().to_i64().expect("small"),
        });
    }
    Ok(CommutatorCoeffs { terms, ..empty })
}

/// Universal enveloping algebra of a graded nilpotent Lie algebra, truncated
/// above the top grade, with elements in PBW normal form.
struct NilpotentEnvelope {
    grades: Vec<u32>,
    max_grade: u32,
    /// `[e_a, e_b] = n * e_c` as `Some((c, n))`.
    brackets: Vec<Vec<Option<(u8, i64)>>>,
    memo: std::cell::RefCell<HashMap<Vec<u8>, Element>>,
}

type Element = BTreeMap<Vec<u8>, BigRational>;

impl NilpotentEnvelope {
    fn new(span: &[(u32, u32, Root)], rs: &RootSystem, sc: &StructureConstants) -> Self {
        let grades: Vec<u32> = span.iter().map(|(i, j, _)| i + j).collect();
        let max_grade = *grades.iter().max().expect("nonempty");
        let brackets = span
            .iter()
            .map(|(_, _, a)| {
                span.iter()
                    .map(|(_, _, b)| {
                        let s = rs.sum_root(a, b)?;
                        let c = span.iter().position(|(_, _, r)| *r == s)?;
                        Some((c as u8, sc.get(a, b) as i64))
                    })
                    .collect()
            })
            .collect();
        Self {
            grades,
            max_grade,
            brackets,
            memo: Default::default(),
        }
    }

    fn grade(&self, word: &[u8]) -> u32 {
        word.iter().map(|&k| self.grades[k as usize]).sum()
    }

    fn normalize(&self, word: &[u8]) -> Element {
        if self.grade(word) > self.max_grade {
            return Element::new();
        }
        if let Some(hit) = self.memo.borrow().get(word) {
            return hit.clone();
        }
        let result = match word.windows(2).position(|w| w[0] > w[1]) {
            None => Element::from([(word.to_vec(), BigRational::one())]),
            Some(i) => {
                // e_a e_b = e_b e_a + [e_a, e_b]
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);
                let mut out = self.normalize(&swapped);
                if let Some((c, n)) = self.brackets[word[i] as usize][word[i + 1] as usize] {
                    let mut shorter = word[..i].to_vec();
                    shorter.push(c);
                    shorter.extend_from_slice(&word[i + 2..]);
                    let scale = BigRational::from_integer(BigInt::from(n));
                    for (w, v) in self.normalize(&shorter) {
                        *out.entry(w).or_insert_with(BigRational::zero) += v * &scale;
                    }
                    out.retain(|_, v| !v.is_zero());
                }
                out
            }
        };
        self.memo.borrow_mut().insert(word.to_vec(), result.clone());
        result
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Element::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                let word: Vec<u8> = wa.iter().chain(wb).copied().collect();
                let coeff = ca * cb;
                for (w, v) in self.normalize(&word) {
                    *out.entry(w).or_insert_with(BigRational::zero) += v * &coeff;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn exp(&self, k: usize, c: &BigRational) -> Element {
        let mut out = Element::from([(Vec::new(), BigRational::one())]);
        if c.is_zero() {
            return out;
        }
        let mut term = BigRational::one();
        let mut n = 1u32;
        while n * self.grades[k] <= self.max_grade {
            term = term * c / BigRational::from_integer(BigInt::from(n));
            out.insert(vec![k as u8; n as usize], term.clone());
            n += 1;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn r(c: &[i32]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn a2_constants_match_matrix_units() {
        // X_{e_i - e_j} = E_ij: [E_12, E_23] = E_13, [E_21, E_32] = -E_31, [E_13, E_32] = E_12.
        let sys = rs("A2");
        let sc = structure_constants(&sys).unwrap();
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[0, 1])), 1);
        assert_eq!(sc.get(&r(&[0, 1]), &r(&[1, 0])), -1);
        assert_eq!(sc.get(&r(&[-1, 0]), &r(&[0, -1])), -1);
        assert_eq!(sc.get(&r(&[1, 1]), &r(&[0, -1])), 1);
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[-1, -1])), -1);
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[1, 1])), 0);
    }

    #[test]
    fn g2_magnitudes() {
        let sys = rs("G2");
        let sc = structure_constants(&sys).unwrap();
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[1, 1])).abs(), 2);
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[2, 1])).abs(), 3);
        assert_eq!(sc.get(&r(&[1, 0]), &r(&[0, 1])).abs(), 1);
    }

    #[test]
    fn jacobi_small_types() {
        for name in ["A1", "A2", "B2", "C2", "G2", "B3", "C3", "D4"] {
            let sys = rs(name);
            let sc = structure_constants(&sys).unwrap();
            assert!(sc.jacobi_violations(&sys).unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn corrupted_sign_breaks_jacobi() {
        let sys = rs("A2");
        let mut sc = structure_constants(&sys).unwrap();
        sc.set(&r(&[1, 0]), &r(&[0, 1]), -1);
        assert!(!sc.jacobi_violations(&sys).unwrap().is_empty());
    }

    #[test]
    fn coroot_examples() {
        let a2 = rs("A2");
        assert_eq!(coroot_coordinates(&r(&[0, 1]), &a2).unwrap().n, [0, 1]);
        assert_eq!(coroot_coordinates(&r(&[1, 1]), &a2).unwrap().n, [1, 1]);
        let c2 = rs("C2");
        assert_eq!(coroot_coordinates(&r(&[2, 1]), &c2).unwrap().n, [1, 1]);
        for name in ["B3", "C3", "F4", "G2"] {
            let sys = rs(name);
            for g in sys.roots() {
                let n = coroot_coordinates(g, &sys).unwrap().n;
                let neg = coroot_coordinates(&-g, &sys).unwrap().n;
                assert!(n.iter().zip(&neg).all(|(a, b)| *a == -b));
                // Length formula: n_i = g_i (d_i, d_i) / (g, g).
                for (i, &ni) in n.iter().enumerate() {
                    let di = sys.simple_root(i);
                    assert_eq!(
                        ni as i64 * sys.norm2(g),
                        g.coeffs()[i] as i64 * sys.norm2(&di)
                    );
                }
            }
        }
    }

    #[test]
    fn commutator_examples() {
        let a2 = rs("A2");
        let sc = structure_constants(&a2).unwrap();
        let c = commutator_coeffs(&r(&[1, 0]), &r(&[0, 1]), &a2, &sc).unwrap();
        assert_eq!(c.terms.len(), 1);
        assert_eq!(
            c.coefficient(1, 1),
            Some(sc.get(&r(&[1, 0]), &r(&[0, 1])) as i64)
        );
        assert!(commutator_coeffs(&r(&[1, 0]), &r(&[1, 1]), &a2, &sc)
            .unwrap()
            .terms
            .is_empty());
        assert!(commutator_coeffs(&r(&[1, 0]), &r(&[-1, 0]), &a2, &sc).is_err());

        let c2 = rs("C2");
        let sc = structure_constants(&c2).unwrap();
        let c = commutator_coeffs(&r(&[1, 0]), &r(&[0, 1]), &c2, &sc).unwrap();
        assert_eq!(c.terms.len(), 2);
        assert_eq!(
            c.coefficient(1, 1),
            Some(sc.get(&r(&[1, 0]), &r(&[0, 1])) as i64)
        );
        assert!(c.terms.iter().all(|t| t.c.abs() <= 2 && t.c != 0));
        assert!(c.coefficient(2, 1).is_some());
    }

    #[test]
    fn c11_is_structure_constant() {
        for name in ["B2", "G2", "B3", "F4"] {
            let sys = rs(name);
            let sc = structure_constants(&sys).unwrap();
            for a in sys.roots() {
                for b in sys.roots() {
                    if *a != -b && sys.sum_root(a, b).is_some() {
                        let c = commutator_coeffs(a, b, &sys, &sc).unwrap();
                        assert_eq!(
                            c.coefficient(1, 1),
                            Some(sc.get(a, b) as i64),
                            "{name} {a} {b}"
                        );
                    }
                }
            }
        }
    }
}
