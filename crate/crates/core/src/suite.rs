//! Randomized and exhaustive property checks over the type A models, and the
//! `verify` driver that runs them together with every relation instance.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chevalley::{structure_constants, StructureConstants};
use crate::error::{Error, Result};
use crate::group::{verify_steinberg, GroupElement, GroupModel, LazardCoordinates};
use crate::iwasawa::IwasawaModel;
use crate::padic::{checked_pow, PAdic, Valuation};
use crate::relations::relation_instances;
use crate::root_system::{CartanType, Family, RootSystem};
use crate::series::{Monomial, OrderedSeries};

/// Trials run and the first few failures of one property.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub trials: usize,
    pub failures: Vec<String>,
    pub failed: usize,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.trials > 0
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(detail());
            }
        }
    }

    pub fn summary(&self) -> String {
        if self.failed == 0 {
            format!("{} trials", self.trials)
        } else {
            format!(
                "{} of {} trials failed; first: {}",
                self.failed,
                self.trials,
                self.failures.join("; ")
            )
        }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `dirac(g h) = dirac(g) * dirac(h)` on random pairs.
pub fn homomorphism(model: &IwasawaModel, seed: u64, pairs: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    for _ in 0..pairs {
        let g = model.group().random_element(&mut rng, 6);
        let h = model.group().random_element(&mut rng, 6);
        let lhs = model.dirac(&g.mul(&h))?;
        let rhs = model.convolve(&model.dirac(&g)?, &model.dirac(&h)?)?;
        out.record(lhs == rhs, || {
            format!(
                "g={g:?} h={h:?} first diff {:?}",
                lhs.first_difference(&rhs)
            )
        });
    }
    Ok(out)
}

fn random_level(group: &GroupModel, rng: &mut ChaCha8Rng) -> GroupElement {
    let level = rng.gen_range(1..group.precision());
    group.random_element_in(rng, 5, level)
}

/// `w(x^p) = w(x) + 1` whenever `w(x) + 1` is below precision.
pub fn omega_p_power(group: &GroupModel, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    for _ in 0..samples {
        let x = random_level(group, &mut rng);
        let w = group.omega(&x)?;
        let wp = group.omega(&x.pow(group.prime()))?;
        let ok = match w {
            Valuation::Exact(k) if k + 1 < group.precision() => wp == Valuation::Exact(k + 1),
            _ => wp == Valuation::AtLeast(group.precision()),
        };
        out.record(ok, || format!("x={x:?}: w(x)={w}, w(x^p)={wp}"));
    }
    Ok(out)
}

/// `w([x,y]) >= w(x) + w(y)`.
pub fn omega_commutator(group: &GroupModel, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    for _ in 0..samples {
        let x = random_level(group, &mut rng);
        let y = random_level(group, &mut rng);
        let (wx, wy) = (group.omega(&x)?, group.omega(&y)?);
        let wc = group.omega(&x.commutator(&y))?;
        let bound = (wx.bound() + wy.bound()).min(group.precision());
        out.record(wc.bound() >= bound, || {
            format!("w(x)={wx} w(y)={wy} w([x,y])={wc}")
        });
    }
    Ok(out)
}

/// `w(x y^-1) >= min(w(x), w(y))`.
pub fn omega_ultrametric(group: &GroupModel, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    for _ in 0..samples {
        let x = random_level(group, &mut rng);
        let y = random_level(group, &mut rng);
        let (wx, wy) = (group.omega(&x)?, group.omega(&y)?);
        let w = group.omega(&x.mul(&y.inverse().expect("unit determinant")))?;
        out.record(w.bound() >= wx.bound().min(wy.bound()), || {
            format!("w(x)={wx} w(y)={wy} w(xy^-1)={w}")
        });
    }
    Ok(out)
}

/// `w(g)` equals the minimum valuation of its triangular parameters, and the
/// parameters recompose to `g`.
pub fn omega_equals_parameters(group: &GroupModel, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    for _ in 0..samples {
        let g = random_level(group, &mut rng);
        let params = group.triangular_decompose(&g)?;
        let w = group.omega(&g)?;
        let min = params.min_valuation();
        let back = group.recompose(&params)?;
        out.record(w == min && back == g, || {
            format!("g={g:?}: w={w} min val={min}")
        });
    }
    Ok(out)
}

fn random_scaled_coordinates(group: &GroupModel, rng: &mut ChaCha8Rng) -> LazardCoordinates {
    let mut c = group.random_coordinates(rng);
    let prec = group.precision() - 1;
    for e in &mut c.e {
        let shift = rng.gen_range(0..=prec);
        *e = *e * e.lift_int(checked_pow(group.prime(), shift).expect("fits") as i64);
    }
    c
}

/// `w(prod g_i^{e_i}) = min_i (1 + val(e_i))` on coordinates of random valuation.
pub fn omega_ordered_basis(group: &GroupModel, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    let top = group.precision();
    for _ in 0..samples {
        let c = random_scaled_coordinates(group, &mut rng);
        let g = group.from_coordinates(&c)?;
        let w = group.omega(&g)?;
        let min =
            c.e.iter()
                .map(|e| e.valuation().bound() + 1)
                .min()
                .expect("nonempty");
        let expected = if min < top {
            Valuation::Exact(min)
        } else {
            Valuation::AtLeast(top)
        };
        let back = group.lazard_coordinates(&g)?;
        out.record(w == expected && back == c, || {
            format!("e={:?}: w={w}, expected {expected}", c.e)
        });
    }
    Ok(out)
}

/// Images of all coordinate tuples in `{0..p-1}^d` are pairwise distinct mod `p^2`.
pub fn level_two_bijection(group: &GroupModel) -> Result<(usize, usize)> {
    let p = group.prime();
    let d = group.generators().len();
    let total = (p as usize).pow(d as u32);
    let prec = group.precision() - 1;
    let mut seen = HashSet::new();
    for idx in 0..total {
        let mut rest = idx;
        let e = (0..d)
            .map(|_| {
                let digit = (rest % p as usize) as i64;
                rest /= p as usize;
                PAdic::new(p, prec, digit)
            })
            .collect::<Result<_>>()?;
        let g = group.from_coordinates(&LazardCoordinates { e })?;
        let coset: Vec<u64> = g
            .rows()
            .iter()
            .flatten()
            .map(|x| x.truncate(2).expect("M >= 2").residue())
            .collect();
        seen.insert(coset);
    }
    Ok((total, seen.len()))
}

/// `[g, h]` always lies in `G(2)`.
pub fn frattini_quotient_abelian(group: &GroupModel, seed: u64, samples: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    for _ in 0..samples {
        let g = group.random_element(&mut rng, 5);
        let h = group.random_element(&mut rng, 5);
        let w = group.omega(&g.commutator(&h))?;
        out.record(w.bound() >= 2, || format!("w([g,h])={w}"));
    }
    Ok(out)
}

fn random_monomial_series(
    model: &IwasawaModel,
    rng: &mut ChaCha8Rng,
    max_degree: u32,
) -> OrderedSeries {
    let d = model.num_vars();
    let mut s = model.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let degree = rng.gen_range(0..=max_degree);
        let mut exps = vec![0u8; d];
        for _ in 0..degree {
            exps[rng.gen_range(0..d)] += 1;
        }
        let shift = rng.gen_range(0..=1);
        let unit = loop {
            let c = rng.gen_range(1..model.prime() as i64 * 7);
            if c % model.prime() as i64 != 0 {
                break c;
            }
        };
        let c = unit * (model.prime() as i64).pow(shift);
        s.add_term(Monomial::new(exps), s.scalar(c));
    }
    s
}

/// `w~(a * b) = w~(a) + w~(b)` on monomial-supported pairs whose values sum
/// below `min(N, m)`.
pub fn omega_tilde_additivity(model: &IwasawaModel, seed: u64, pairs: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    let limit = model.degree_bound().min(model.precision());
    while out.trials < pairs {
        let a = random_monomial_series(model, &mut rng, limit.saturating_sub(1) / 2 + 1);
        let b = random_monomial_series(model, &mut rng, limit.saturating_sub(1) / 2 + 1);
        let (Valuation::Exact(wa), Valuation::Exact(wb)) = (a.omega_tilde(), b.omega_tilde())
        else {
            continue;
        };
        if wa + wb >= limit {
            continue;
        }
        let w = model.convolve(&a, &b)?.omega_tilde();
        out.record(w == Valuation::Exact(wa + wb), || {
            format!("a={a:?} b={b:?}: {w} != {}", wa + wb)
        });
    }
    Ok(out)
}

/// Unit and associativity of the convolution on random Dirac combinations.
pub fn convolution_laws(model: &IwasawaModel, seed: u64, triples: usize) -> Result<Outcome> {
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    let limit = model.degree_bound().min(model.precision());
    for _ in 0..triples {
        let [a, b, c] =
            [0; 3].map(|_| random_monomial_series(model, &mut rng, limit.saturating_sub(1)));
        let left = model.convolve(&model.convolve(&a, &b)?, &c)?;
        let right = model.convolve(&a, &model.convolve(&b, &c)?)?;
        let unit = model.convolve(&model.one(), &a)? == a && model.convolve(&a, &model.one())? == a;
        out.record(left == right && unit, || format!("a={a:?} b={b:?} c={c:?}"));
    }
    Ok(out)
}

fn is_sorted(word: &[usize]) -> bool {
    word.windows(2).all(|w| w[0] <= w[1])
}

/// Every wrong-order word of length `n` over all generators.
pub fn leading_terms_exhaustive(rs: &RootSystem, p: u64, n: u32) -> Result<Outcome> {
    let model = IwasawaModel::new(rs.clone(), p, 1, n + 1)?;
    let d = model.num_vars();
    let mut out = Outcome::default();
    let mut word = vec![0usize; n as usize];
    for idx in 0..d.pow(n) {
        let mut rest = idx;
        for slot in word.iter_mut() {
            *slot = rest % d;
            rest /= d;
        }
        if is_sorted(&word) {
            continue;
        }
        let ok = model.leading_term_check(&word)?;
        out.record(ok, || format!("{word:?}"));
    }
    Ok(out)
}

/// Random wrong-order words of length `n`.
pub fn leading_terms_sampled(
    rs: &RootSystem,
    p: u64,
    n: u32,
    seed: u64,
    samples: usize,
) -> Result<Outcome> {
    let model = IwasawaModel::new(rs.clone(), p, 1, n + 1)?;
    let d = model.num_vars();
    let mut rng = rng(seed);
    let mut out = Outcome::default();
    let positions: Vec<usize> = (0..d).collect();
    while out.trials < samples {
        let word: Vec<usize> = (0..n)
            .map(|_| *positions.choose(&mut rng).expect("nonempty"))
            .collect();
        if is_sorted(&word) {
            continue;
        }
        let ok = model.leading_term_check(&word)?;
        out.record(ok, || format!("{word:?}"));
    }
    Ok(out)
}

/// `C(n + d - 1, d - 1)`
pub fn ordered_monomial_count(n: u32, d: usize) -> usize {
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..(d as u128 - 1) {
        num *= n as u128 + 1 + i;
        den *= i + 1;
    }
    (num / den) as usize
}

/// Rank of `gr^n` computed through the group for each `n <= top`, paired
/// with the expected count.
pub fn graded_dimensions(rs: &RootSystem, p: u64, top: u32) -> Result<Vec<(u32, usize, usize)>> {
    let model = IwasawaModel::new(rs.clone(), p, 1, top + 1)?;
    (0..=top)
        .map(|n| {
            Ok((
                n,
                model.graded_dimension_count(n)?,
                ordered_monomial_count(n, model.num_vars()),
            ))
        })
        .collect()
}

/// One line of a verification report.
#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub header: String,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.passed).count()
    }

    fn timed(
        &mut self,
        suite: &str,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<(bool, String)>,
    ) -> Result<()> {
        let start = Instant::now();
        let (passed, detail) = f()?;
        self.entries.push(ReportEntry {
            suite: suite.into(),
            name: name.into(),
            passed,
            detail,
            elapsed: start.elapsed(),
        });
        Ok(())
    }

    fn property(
        &mut self,
        suite: &str,
        name: impl Into<String>,
        f: impl FnOnce() -> Result<Outcome>,
    ) -> Result<()> {
        self.timed(suite, name, || f().map(|o| (o.passed(), o.summary())))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.header).unwrap();
        let mut total = Duration::ZERO;
        for e in &self.entries {
            total += e.elapsed;
            let mark = if e.passed { "PASS" } else { "FAIL" };
            write!(
                out,
                "[{mark}] {:<12} {:<44} {:>9.3}s",
                e.suite,
                e.name,
                e.elapsed.as_secs_f64()
            )
            .unwrap();
            if !e.detail.is_empty() {
                write!(out, "  {}", e.detail).unwrap();
            }
            writeln!(out).unwrap();
        }
        writeln!(
            out,
            "{} checks, {} failed, {:.3}s",
            self.entries.len(),
            self.failures(),
            total.as_secs_f64()
        )
        .unwrap();
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub cartan_type: CartanType,
    pub prime: u64,
    pub degree: u32,
    pub precision: u32,
    pub seed: u64,
}

pub fn run_verify(opts: &VerifyOptions) -> Result<Report> {
    let ct = opts.cartan_type;
    if ct.family() != Family::A {
        return Err(Error::NoRealization(ct.to_string()));
    }
    let (p, n, m, seed) = (opts.prime, opts.degree, opts.precision, opts.seed);
    let rs = RootSystem::new(ct);
    let mut report = Report {
        header: format!("verify {ct} p={p} N={n} m={m} seed={seed}"),
        ..Default::default()
    };

    let mut sc: Option<StructureConstants> = None;
    report.timed("lattice", "structure constants and Jacobi", || {
        let table = structure_constants(&rs)?;
        let bad = table.jacobi_violations(&rs)?;
        sc = Some(table);
        Ok((bad.is_empty(), format!("{} violations", bad.len())))
    })?;
    let sc = sc.expect("computed above");
    let relations = relation_instances(&rs, &sc)?;

    let model = IwasawaModel::new(rs.clone(), p, m, n)?;
    let group = model.group().clone();
    for outcome in verify_steinberg(&group, &relations)? {
        report.timed("group", outcome.relation, || {
            Ok((outcome.passed, outcome.detail))
        })?;
    }
    for rel in &relations {
        report.timed("relation", rel.describe(), || {
            let check = model.check_relation(&model.instantiate(rel)?)?;
            let detail = check
                .diff
                .map_or(String::new(), |(k, a, b)| format!("at {k:?}: {a} vs {b}"));
            Ok((check.passed, detail))
        })?;
    }

    let samples = 200;
    report.property("valuation", "w(x^p) = w(x) + 1", || {
        omega_p_power(&group, seed, samples)
    })?;
    report.property("valuation", "w([x,y]) >= w(x) + w(y)", || {
        omega_commutator(&group, seed + 1, samples)
    })?;
    report.property("valuation", "w(xy^-1) >= min(w(x), w(y))", || {
        omega_ultrametric(&group, seed + 2, samples)
    })?;
    report.property("valuation", "w(g) = min val of parameters", || {
        omega_equals_parameters(&group, seed + 3, samples)
    })?;
    report.property("valuation", "ordered basis law and chart inverse", || {
        omega_ordered_basis(&group, seed + 4, samples)
    })?;
    report.property("valuation", "[G(1), G(1)] in G(2)", || {
        frattini_quotient_abelian(&group, seed + 5, samples)
    })?;

    report.property("series", "homomorphism", || {
        homomorphism(&model, seed + 6, 40)
    })?;
    report.property("series", "convolution unit and associativity", || {
        convolution_laws(&model, seed + 7, 20)
    })?;
    report.property("series", "w~ additivity", || {
        omega_tilde_additivity(&model, seed + 8, 100)
    })?;

    let top = n.saturating_sub(1).min(4);
    for k in 2..=top {
        report.property("graded", format!("leading terms, degree {k}"), || {
            leading_terms_sampled(&rs, p, k, seed + 9 + k as u64, 100)
        })?;
    }
    report.timed("graded", format!("dim gr^n for n <= {top}"), || {
        let dims = graded_dimensions(&rs, p, top)?;
        let ok = dims.iter().all(|(_, got, want)| got == want);
        let shown: Vec<String> = dims
            .iter()
            .map(|(n, got, _)| format!("n={n}:{got}"))
            .collect();
        Ok((ok, shown.join(" ")))
    })?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_counts() {
        assert_eq!(ordered_monomial_count(0, 3), 1);
        assert_eq!(ordered_monomial_count(2, 3), 6);
        assert_eq!(ordered_monomial_count(3, 8), 120);
    }

    #[test]
    fn a1_verify_passes() {
        let opts = VerifyOptions {
            cartan_type: "A1".parse().unwrap(),
            prime: 5,
            degree: 4,
            precision: 3,
            seed: 1,
        };
        let report = run_verify(&opts).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn g2_has_no_realization() {
        let opts = VerifyOptions {
            cartan_type: "G2".parse().unwrap(),
            prime: 7,
            degree: 4,
            precision: 3,
            seed: 1,
        };
        assert!(matches!(run_verify(&opts), Err(Error::NoRealization(_))));
    }
}
