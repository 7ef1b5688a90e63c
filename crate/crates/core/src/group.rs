//! `SL_{l+1}(Z/p^M)` as the standard realization of a type `A_l` Chevalley
//! group, with the congruence valuation, the triangular decomposition and
//! Lazard coordinates of the first congruence kernel.

use std::fmt;

use rand::Rng;

use crate::chevalley::CommutatorCoeffs;
use crate::error::{Error, Result};
use crate::padic::{constants_pq, guard_digits, PAdic, Valuation};
use crate::relations::Relation;
use crate::root_system::{Family, GeneratorKind, GeneratorLabel, Root, RootSystem};

/// A square matrix over `Z/p^M`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    n: usize,
    entries: Vec<PAdic>,
}

impl GroupElement {
    pub fn identity(n: usize, p: u64, prec: u32) -> Result<Self> {
        let zero = PAdic::zero(p, prec)?;
        let one = zero.lift_int(1);
        let entries = (0..n * n)
            .map(|k| if k / n == k % n { one } else { zero })
            .collect();
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<PAdic>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("matrix must be square and nonempty".into()));
        }
        let first = rows[0][0];
        if rows
            .iter()
            .flatten()
            .any(|x| x.prime() != first.prime() || x.precision() != first.precision())
        {
            return Err(Error::Mismatch(
                "matrix entries with different prime or precision".into(),
            ));
        }
        let g = Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        let det = g.determinant();
        if det != Some(first.lift_int(1)) {
            let shown = det.map_or_else(|| "a non-unit".to_string(), |d| d.to_string());
            return Err(Error::DeterminantNotOne(shown));
        }
        Ok(g)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> u64 {
        self.entries[0].prime()
    }

    pub fn precision(&self) -> u32 {
        self.entries[0].precision()
    }

    pub fn get(&self, i: usize, j: usize) -> PAdic {
        self.entries[i * self.n + j]
    }

    fn set(&mut self, i: usize, j: usize, v: PAdic) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<PAdic>> {
        self.entries.chunks(self.n).map(<[PAdic]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.get(i, j).residue() == u64::from(i == j)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let zero = self.entries[0].lift_int(0);
        let mut entries = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j] + a * other.get(k, j);
                }
            }
        }
        Self { n, entries }
    }

    /// Gauss-Jordan with unit pivots; `None` if the determinant is not a unit.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Self::identity(n, self.prime(), self.precision()).expect("valid parameters");
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col).is_unit())?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(col * n + j, pivot * n + j);
                    inv.entries.swap(col * n + j, pivot * n + j);
                }
            }
            let s = a.get(col, col).inv().ok()?;
            for j in 0..n {
                a.set(col, j, a.get(col, j) * s);
                inv.set(col, j, inv.get(col, j) * s);
            }
            for r in 0..n {
                let f = a.get(r, col);
                if r == col || f.is_zero() {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, a.get(r, j) - f * a.get(col, j));
                    inv.set(r, j, inv.get(r, j) - f * inv.get(col, j));
                }
            }
        }
        Some(inv)
    }

    /// `None` when the determinant is not a unit.
    pub fn determinant(&self) -> Option<PAdic> {
        let n = self.n;
        let mut a = self.clone();
        let mut det = self.entries[0].lift_int(1);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col).is_unit())?;
            if pivot != col {
                for j in 0..n {
                    a.entries.swap(col * n + j, pivot * n + j);
                }
                det = -det;
            }
            let d = a.get(col, col);
            det = det * d;
            let s = d.inv().ok()?;
            for r in col + 1..n {
                let f = a.get(r, col) * s;
                for j in col..n {
                    a.set(r, j, a.get(r, j) - f * a.get(col, j));
                }
            }
        }
        Some(det)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc =
            Self::identity(self.n, self.prime(), self.precision()).expect("valid parameters");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `x y x^-1 y^-1`
    pub fn commutator(&self, other: &Self) -> Self {
        let xi = self.inverse().expect("group element");
        let yi = other.inverse().expect("group element");
        self.mul(other).mul(&xi).mul(&yi)
    }

    /// Checks membership in the first congruence kernel.
    pub fn check_first_kernel(&self) -> Result<()> {
        for i in 0..self.n {
            for j in 0..self.n {
                let x = self.get(i, j);
                let ok = if i == j {
                    x.is_one_unit()
                } else {
                    !x.is_unit()
                };
                if !ok {
                    return Err(Error::NotInFirstKernel {
                        row: i + 1,
                        col: j + 1,
                        value: x.to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<i64>> = self
            .entries
            .chunks(self.n)
            .map(|r| r.iter().map(PAdic::to_signed).collect())
            .collect();
        write!(f, "{rows:?} mod {}^{}", self.prime(), self.precision())
    }
}

/// Parameters of `prod x_b(u_b) prod h_d(1+v_d) prod x_a(w_a)` in generator order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularParams {
    pub u: Vec<(Root, PAdic)>,
    pub v: Vec<PAdic>,
    pub w: Vec<(Root, PAdic)>,
}

impl TriangularParams {
    pub fn all(&self) -> impl Iterator<Item = &PAdic> + '_ {
        self.u
            .iter()
            .map(|(_, x)| x)
            .chain(&self.v)
            .chain(self.w.iter().map(|(_, x)| x))
    }

    /// Minimum valuation over all parameters.
    pub fn min_valuation(&self) -> Valuation {
        self.all().map(PAdic::valuation).min().expect("nonempty")
    }
}

/// Exponents `e` with `g = prod g_i^{e_i}` over the ordered basis
/// `x_b(p), h_d(1+p), x_a(p)`, known to precision `M - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LazardCoordinates {
    pub e: Vec<PAdic>,
}

/// The standard realization of a type `A_l` group at group precision `M`.
#[derive(Clone, Debug)]
pub struct GroupModel {
    rs: RootSystem,
    labels: Vec<GeneratorLabel>,
    p: u64,
    prec: u32,
}

impl GroupModel {
    pub fn new(rs: RootSystem, p: u64, prec: u32) -> Result<Self> {
        if rs.cartan_type().family() != Family::A {
            return Err(Error::NoRealization(rs.cartan_type().to_string()));
        }
        if prec < 2 {
            return Err(Error::InsufficientPrecision {
                required: 2,
                available: prec,
            });
        }
        PAdic::zero(p, prec)?;
        let labels = rs.generator_order();
        Ok(Self {
            rs,
            labels,
            p,
            prec,
        })
    }

    /// Group precision `m + g` for series of coefficient precision `m` and
    /// degree bound `N`.
    pub fn for_series(rs: RootSystem, p: u64, m: u32, degree: u32) -> Result<Self> {
        let prec = m + guard_digits(p, degree.saturating_sub(1) as u64);
        Self::new(rs, p, prec)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn generators(&self) -> &[GeneratorLabel] {
        &self.labels
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn size(&self) -> usize {
        self.rs.rank() + 1
    }

    pub fn scalar(&self, v: i64) -> PAdic {
        PAdic::new(self.p, self.prec, v).expect("validated parameters")
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.size(), self.p, self.prec).expect("validated parameters")
    }

    fn fit(&self, t: &PAdic) -> Result<PAdic> {
        if t.prime() != self.p {
            return Err(Error::Mismatch(format!(
                "prime {} in a model over {}",
                t.prime(),
                self.p
            )));
        }
        t.truncate(self.prec)
    }

    /// Matrix slot of a root: `e_i - e_j` sits at `(i, j)`.
    pub fn slot(&self, g: &Root) -> Result<(usize, usize)> {
        self.rs.check(g)?;
        let c = g.coeffs();
        let a = c.iter().position(|&x| x != 0).expect("nonzero root");
        let b = c.iter().rposition(|&x| x != 0).expect("nonzero root");
        Ok(if g.is_positive() {
            (a, b + 1)
        } else {
            (b + 1, a)
        })
    }

    pub fn x_elem(&self, g: &Root, t: &PAdic) -> Result<GroupElement> {
        let (i, j) = self.slot(g)?;
        let mut m = self.identity();
        m.set(i, j, self.fit(t)?);
        Ok(m)
    }

    /// `x_g(l) x_{-g}(-l^-1) x_g(l)`
    pub fn w_elem(&self, g: &Root, l: &PAdic) -> Result<GroupElement> {
        let l = self.fit(l)?;
        let li = l.inv()?;
        Ok(self
            .x_elem(g, &l)?
            .mul(&self.x_elem(&-g, &-li)?)
            .mul(&self.x_elem(g, &l)?))
    }

    /// `w_g(l) w_g(1)^-1`
    pub fn h_elem(&self, g: &Root, l: &PAdic) -> Result<GroupElement> {
        let one = self.scalar(1);
        Ok(self.w_elem(g, l)?.mul(&self.w_elem(g, &-one)?))
    }

    fn check_shape(&self, g: &GroupElement) -> Result<()> {
        if g.size() != self.size() || g.prime() != self.p || g.precision() != self.prec {
            return Err(Error::Mismatch(format!(
                "{}x{} matrix over {}^{} in a model of size {} over {}^{}",
                g.size(),
                g.size(),
                g.prime(),
                g.precision(),
                self.size(),
                self.p,
                self.prec
            )));
        }
        Ok(())
    }

    /// Largest `k` with `g` congruent to the identity mod `p^k`.
    pub fn omega(&self, g: &GroupElement) -> Result<Valuation> {
        self.check_shape(g)?;
        g.check_first_kernel()?;
        let one = self.scalar(1);
        let mut best = Valuation::AtLeast(self.prec);
        for i in 0..g.n {
            for j in 0..g.n {
                let mut x = g.get(i, j);
                if i == j {
                    x = x - one;
                }
                best = best.min(x.valuation());
            }
        }
        Ok(best)
    }

    pub fn triangular_decompose(&self, g: &GroupElement) -> Result<TriangularParams> {
        self.check_shape(g)?;
        g.check_first_kernel()?;
        let n = self.size();
        let one = self.scalar(1);
        // Doolittle: g = L D U with unit pivots.
        let mut lower = self.identity();
        let mut upper = self.identity();
        let mut diag = vec![one; n];
        let mut work = g.clone();
        for k in 0..n {
            let d = work.get(k, k);
            let di = d.inv()?;
            diag[k] = d;
            for i in k + 1..n {
                lower.set(i, k, work.get(i, k) * di);
                upper.set(k, i, work.get(k, i) * di);
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = work.get(i, j) - lower.get(i, k) * d * upper.get(k, j);
                    work.set(i, j, v);
                }
            }
        }

        let mut c = one;
        let mut v = Vec::with_capacity(n - 1);
        for d in &diag[..n - 1] {
            c = c * *d;
            v.push(c - one);
        }

        let mut w = Vec::new();
        for alpha in self.rs.positive_roots() {
            let (i, j) = self.slot(alpha)?;
            let t = upper.get(i, j);
            upper = self.x_elem(alpha, &-t)?.mul(&upper);
            w.push((alpha.clone(), t));
        }
        let negatives: Vec<&Root> = self.rs.negative_roots().collect();
        let mut u = Vec::new();
        for beta in negatives.into_iter().rev() {
            let (i, j) = self.slot(beta)?;
            let t = lower.get(i, j);
            lower = lower.mul(&self.x_elem(beta, &-t)?);
            u.push((beta.clone(), t));
        }
        u.reverse();
        if !upper.is_identity() || !lower.is_identity() {
            return Err(Error::Consistency(
                "unipotent factor did not peel to the identity".into(),
            ));
        }

        let params = TriangularParams { u, v, w };
        if self.recompose(&params)? != *g {
            return Err(Error::Consistency(format!(
                "triangular decomposition does not recompose {g:?}"
            )));
        }
        Ok(params)
    }

    pub fn recompose(&self, params: &TriangularParams) -> Result<GroupElement> {
        let mut g = self.identity();
        for (beta, t) in &params.u {
            g = g.mul(&self.x_elem(beta, t)?);
        }
        let one = self.scalar(1);
        for (i, v) in params.v.iter().enumerate() {
            g = g.mul(&self.h_elem(&self.rs.simple_root(i), &(one + self.fit(v)?))?);
        }
        for (alpha, t) in &params.w {
            g = g.mul(&self.x_elem(alpha, t)?);
        }
        Ok(g)
    }

    /// `log(1+p)/p` at precision `M - 1`, a unit.
    fn log_base(&self) -> PAdic {
        self.scalar(1 + self.p as i64)
            .log()
            .and_then(|l| l.shift_down(1))
            .expect("1+p is a 1-unit")
    }

    pub fn lazard_coordinates(&self, g: &GroupElement) -> Result<LazardCoordinates> {
        let params = self.triangular_decompose(g)?;
        let base = self.log_base();
        let one = self.scalar(1);
        let mut e = Vec::with_capacity(self.labels.len());
        for (_, t) in &params.u {
            e.push(t.shift_down(1)?);
        }
        for v in &params.v {
            e.push((one + *v).log()?.shift_down(1)?.div_unit(&base)?);
        }
        for (_, t) in &params.w {
            e.push(t.shift_down(1)?);
        }
        Ok(LazardCoordinates { e })
    }

    /// `g_i^e` for the `i`-th ordered-basis element; `e` needs `M - 1` digits.
    pub fn generator_power(&self, i: usize, e: &PAdic) -> Result<GroupElement> {
        let e = e.truncate(self.prec - 1)?;
        match &self.labels[i].kind {
            GeneratorKind::NegRoot(r) | GeneratorKind::PosRoot(r) => {
                self.x_elem(r, &e.shift_up(1)?)
            }
            GeneratorKind::Torus(k) => {
                let lam = (self.log_base() * e).shift_up(1)?.exp()?;
                self.h_elem(&self.rs.simple_root(*k), &lam)
            }
        }
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        let one = PAdic::one(self.p, self.prec - 1).expect("validated parameters");
        self.generator_power(i, &one).expect("generator")
    }

    pub fn from_coordinates(&self, coords: &LazardCoordinates) -> Result<GroupElement> {
        if coords.e.len() != self.labels.len() {
            return Err(Error::Mismatch(format!(
                "{} coordinates for {} generators",
                coords.e.len(),
                self.labels.len()
            )));
        }
        let mut g = self.identity();
        for (i, e) in coords.e.iter().enumerate() {
            if !e.is_zero() {
                g = g.mul(&self.generator_power(i, e)?);
            }
        }
        Ok(g)
    }

    /// A uniformly random coordinate vector at precision `M - 1`.
    pub fn random_coordinates<R: Rng + ?Sized>(&self, rng: &mut R) -> LazardCoordinates {
        let modulus = crate::padic::checked_pow(self.p, self.prec - 1).expect("fits");
        let e = (0..self.labels.len())
            .map(|_| {
                PAdic::from_residue(self.p, self.prec - 1, rng.gen_range(0..modulus))
                    .expect("valid")
            })
            .collect();
        LazardCoordinates { e }
    }

    /// Product of `factors` random elementary generators `x_g(p t)` and `h_d(1 + p t)`.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R, factors: usize) -> GroupElement {
        let modulus = crate::padic::checked_pow(self.p, self.prec).expect("fits");
        let mut g = self.identity();
        for _ in 0..factors {
            let t =
                PAdic::from_residue(self.p, self.prec, rng.gen_range(0..modulus)).expect("valid");
            let pt = t * self.scalar(self.p as i64);
            let k = rng.gen_range(0..self.labels.len());
            let f = match &self.labels[k].kind {
                GeneratorKind::NegRoot(r) | GeneratorKind::PosRoot(r) => self.x_elem(r, &pt),
                GeneratorKind::Torus(i) => {
                    self.h_elem(&self.rs.simple_root(*i), &(self.scalar(1) + pt))
                }
            };
            g = g.mul(&f.expect("generator"));
        }
        g
    }

    /// Random element of `G(k)`: the above raised to the `p^(k-1)`.
    pub fn random_element_in<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        factors: usize,
        level: u32,
    ) -> GroupElement {
        let g = self.random_element(rng, factors);
        g.pow(self.p.pow(level.saturating_sub(1)))
    }
}

/// Outcome of one group identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinbergOutcome {
    pub relation: String,
    pub passed: bool,
    pub detail: String,
}

/// Both sides of the group identity behind a relation instance.
pub fn steinberg_sides(
    model: &GroupModel,
    relation: &Relation,
) -> Result<(GroupElement, GroupElement)> {
    let p = model.prime() as i64;
    let xp = |r: &Root| model.x_elem(r, &model.scalar(p));
    let rs = model.root_system();
    Ok(match relation {
        Relation::TorusConjugation {
            alpha,
            delta,
            pairing,
        } => {
            let h = model.h_elem(&rs.simple_root(*delta), &model.scalar(1 + p))?;
            let lhs = h.mul(&xp(alpha)?).mul(&h.inverse().expect("unit"));
            let q = model.scalar(1 + p).pow_i64(*pairing as i64)?;
            (lhs, model.x_elem(alpha, &(q * model.scalar(p)))?)
        }
        Relation::Commuting { alpha1, alpha2 } => {
            (xp(alpha1)?.mul(&xp(alpha2)?), xp(alpha2)?.mul(&xp(alpha1)?))
        }
        Relation::Commutator { coeffs } => {
            let lhs = xp(&coeffs.alpha1)?.commutator(&xp(&coeffs.alpha2)?);
            (lhs, commutator_product(model, coeffs)?)
        }
        Relation::OppositeRoots { alpha, coroot } => {
            let lhs = xp(alpha)?.mul(&xp(&-alpha)?);
            let k = constants_pq(model.prime(), model.precision())?;
            let pq = k.inv_one_plus_p2 * model.scalar(p);
            let mut rhs = model.x_elem(&-alpha, &pq)?;
            let base = model.scalar(1 + p);
            for (i, &n) in coroot.iter().enumerate() {
                let e = (k.log_ratio * model.scalar(n as i64)).truncate(model.precision() - 1)?;
                let t = base.pow_padic(&e)?;
                rhs = rhs.mul(&model.h_elem(&rs.simple_root(i), &t)?);
            }
            (lhs, rhs.mul(&model.x_elem(alpha, &pq)?))
        }
    })
}

/// `prod x_{i a1 + j a2}(c_ij p^{i+j})` in the stored factor order.
pub fn commutator_product(model: &GroupModel, coeffs: &CommutatorCoeffs) -> Result<GroupElement> {
    let mut g = model.identity();
    for t in &coeffs.terms {
        let scale = model.scalar(model.prime() as i64).pow((t.i + t.j) as u64);
        g = g.mul(&model.x_elem(&t.root, &(model.scalar(t.c) * scale))?);
    }
    Ok(g)
}

pub fn verify_steinberg(
    model: &GroupModel,
    relations: &[Relation],
) -> Result<Vec<SteinbergOutcome>> {
    relations
        .iter()
        .map(|r| {
            let (lhs, rhs) = steinberg_sides(model, r)?;
            let passed = lhs == rhs;
            let detail = if passed {
                String::new()
            } else {
                format!("lhs {lhs:?} rhs {rhs:?}")
            };
            Ok(SteinbergOutcome {
                relation: r.describe(),
                passed,
                detail,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::structure_constants;
    use crate::relations::relation_instances;

    fn model(name: &str, p: u64, prec: u32) -> GroupModel {
        GroupModel::new(RootSystem::new(name.parse().unwrap()), p, prec).unwrap()
    }

    fn r(c: &[i32]) -> Root {
        Root::new(c.to_vec())
    }

    fn mat(m: &GroupModel, rows: &[&[i64]]) -> GroupElement {
        GroupElement::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| m.scalar(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn elementary_matrices() {
        let m = model("A1", 5, 6);
        assert_eq!(
            m.x_elem(&r(&[1]), &m.scalar(7)).unwrap(),
            mat(&m, &[&[1, 7], &[0, 1]])
        );
        assert_eq!(
            m.w_elem(&r(&[1]), &m.scalar(1)).unwrap(),
            mat(&m, &[&[0, 1], &[-1, 0]])
        );
        let t = m.scalar(26);
        let ti = t.inv().unwrap().to_signed();
        assert_eq!(
            m.h_elem(&r(&[1]), &t).unwrap(),
            mat(&m, &[&[26, 0], &[0, ti]])
        );
        assert!(m.h_elem(&r(&[1]), &m.scalar(1)).unwrap().is_identity());
        assert!(m.h_elem(&r(&[1]), &m.scalar(5)).is_err());

        let a2 = model("A2", 3, 4);
        let x = a2.x_elem(&r(&[1, 1]), &a2.scalar(2)).unwrap();
        assert_eq!(x, mat(&a2, &[&[1, 0, 2], &[0, 1, 0], &[0, 0, 1]]));
        let y = a2.x_elem(&r(&[0, -1]), &a2.scalar(2)).unwrap();
        assert_eq!(y, mat(&a2, &[&[1, 0, 0], &[0, 1, 0], &[0, 2, 1]]));
    }

    #[test]
    fn omega_examples() {
        let m = model("A1", 5, 6);
        assert_eq!(m.omega(&m.identity()).unwrap(), Valuation::AtLeast(6));
        let x = m.x_elem(&r(&[1]), &m.scalar(5)).unwrap();
        assert_eq!(m.omega(&x).unwrap(), Valuation::Exact(1));
        assert_eq!(m.omega(&x.pow(5)).unwrap(), Valuation::Exact(2));
        let bad = m.x_elem(&r(&[1]), &m.scalar(1)).unwrap();
        assert!(matches!(
            m.omega(&bad),
            Err(Error::NotInFirstKernel { row: 1, col: 2, .. })
        ));
    }

    #[test]
    fn sl2_product() {
        let m = model("A1", 5, 6);
        let g = m
            .x_elem(&r(&[1]), &m.scalar(5))
            .unwrap()
            .mul(&m.x_elem(&r(&[-1]), &m.scalar(5)).unwrap());
        assert_eq!(g, mat(&m, &[&[26, 5], &[5, 1]]));
        let params = m.triangular_decompose(&g).unwrap();
        let q = m.scalar(26).inv().unwrap();
        assert_eq!(params.u[0].1, q * m.scalar(5));
        assert_eq!(params.w[0].1, q * m.scalar(5));
        assert_eq!(params.v[0], m.scalar(25));
    }

    #[test]
    fn identity_decomposes_to_zero() {
        let m = model("A3", 3, 5);
        let params = m.triangular_decompose(&m.identity()).unwrap();
        assert!(params.all().all(PAdic::is_zero));
        assert!(m
            .lazard_coordinates(&m.identity())
            .unwrap()
            .e
            .iter()
            .all(PAdic::is_zero));
    }

    #[test]
    fn generators_have_unit_coordinates() {
        let m = model("A2", 5, 5);
        for i in 0..m.generators().len() {
            let e = m.lazard_coordinates(&m.generator(i)).unwrap().e;
            for (j, x) in e.iter().enumerate() {
                assert_eq!(
                    x.residue(),
                    u64::from(i == j),
                    "generator {i} coordinate {j}"
                );
            }
            assert_eq!(m.omega(&m.generator(i)).unwrap(), Valuation::Exact(1));
        }
    }

    #[test]
    fn torus_cumulative_products() {
        let m = model("A3", 5, 4);
        let d = [26i64, 31, 6];
        let mut diag: Vec<PAdic> = d.iter().map(|&x| m.scalar(x)).collect();
        let prod = diag.iter().fold(m.scalar(1), |a, b| a * *b);
        diag.push(prod.inv().unwrap());
        let mut rows = vec![vec![m.scalar(0); 4]; 4];
        for (i, x) in diag.iter().enumerate() {
            rows[i][i] = *x;
        }
        let g = GroupElement::from_rows(rows).unwrap();
        let params = m.triangular_decompose(&g).unwrap();
        let mut c = m.scalar(1);
        for (j, v) in params.v.iter().enumerate() {
            c = c * diag[j];
            assert_eq!(*v + m.scalar(1), c);
        }
    }

    #[test]
    fn steinberg_small_types() {
        for (name, p, prec) in [("A1", 5, 6), ("A2", 3, 5), ("A3", 5, 4)] {
            let m = model(name, p, prec);
            let sc = structure_constants(m.root_system()).unwrap();
            let rels = relation_instances(m.root_system(), &sc).unwrap();
            let report = verify_steinberg(&m, &rels).unwrap();
            assert!(report.iter().all(|o| o.passed), "{name}: {report:?}");
        }
    }

    #[test]
    fn corrupted_commutator_fails() {
        let m = model("A2", 3, 5);
        let sc = structure_constants(m.root_system()).unwrap();
        let mut rels = relation_instances(m.root_system(), &sc).unwrap();
        let rel = rels
            .iter_mut()
            .find(|r| matches!(r, Relation::Commutator { .. }))
            .unwrap();
        if let Relation::Commutator { coeffs } = rel {
            coeffs.terms[0].c = -coeffs.terms[0].c;
        }
        assert!(!verify_steinberg(&m, std::slice::from_ref(rel)).unwrap()[0].passed);
    }

    #[test]
    fn rejects_non_type_a_and_bad_determinant() {
        let rs = RootSystem::new("G2".parse().unwrap());
        assert!(matches!(
            GroupModel::new(rs, 7, 4),
            Err(Error::NoRealization(_))
        ));
        let m = model("A1", 3, 4);
        let rows = vec![
            vec![m.scalar(1), m.scalar(3)],
            vec![m.scalar(0), m.scalar(4)],
        ];
        assert!(matches!(
            GroupElement::from_rows(rows),
            Err(Error::DeterminantNotOne(_))
        ));
    }
}
