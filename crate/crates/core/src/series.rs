//! Ordered-monomial series in `Lambda / (M^N + p^m Lambda)`.
//!
//! A monomial `b_1^{k_1} ... b_d^{k_d}` of degree `j` lies in `M^j`, so its
//! coefficient only matters mod `p^min(m, N - j)`. Coefficients are stored
//! reduced to that modulus, which makes equality of series exact.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::padic::{checked_pow, PAdic, Valuation};

/// Exponent vector over the generators, in generator order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn new(exponents: Vec<u8>) -> Self {
        Self(exponents)
    }

    pub fn one(d: usize) -> Self {
        Self(vec![0; d])
    }

    pub fn var(d: usize, i: usize) -> Self {
        let mut e = vec![0; d];
        e[i] = 1;
        Self(e)
    }

    /// The sorted monomial of a word of variable positions.
    pub fn from_word(d: usize, word: &[usize]) -> Self {
        let mut e = vec![0; d];
        for &i in word {
            e[i] += 1;
        }
        Self(e)
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&k| k as u32).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, _)| i)
    }

    /// True when `self * other` is already an ordered monomial.
    pub fn precedes(&self, other: &Self) -> bool {
        match (self.support().last(), other.support().next()) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        }
    }

    pub fn mul_exponents(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// All monomials of total degree `n` in `d` variables, in iteration order.
    pub fn of_degree(d: usize, n: u32) -> Vec<Monomial> {
        fn rec(d: usize, i: usize, left: u32, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
            if i == d - 1 {
                cur[i] = left as u8;
                out.push(Monomial(cur.clone()));
                return;
            }
            for k in (0..=left).rev() {
                cur[i] = k as u8;
                rec(d, i + 1, left - k, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        rec(d, 0, n, &mut vec![0; d], &mut out);
        out.sort();
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), &other.0).cmp(&(other.degree(), &self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An element of the truncated algebra over `d` ordered variables.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderedSeries {
    p: u64,
    m: u32,
    n_bound: u32,
    d: usize,
    terms: BTreeMap<Monomial, PAdic>,
}

impl OrderedSeries {
    pub fn zero(p: u64, m: u32, n_bound: u32, d: usize) -> Result<Self> {
        PAdic::zero(p, m)?;
        if n_bound == 0 {
            return Err(Error::InsufficientPrecision {
                required: 1,
                available: 0,
            });
        }
        Ok(Self {
            p,
            m,
            n_bound,
            d,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(p: u64, m: u32, n_bound: u32, d: usize) -> Result<Self> {
        let mut s = Self::zero(p, m, n_bound, d)?;
        s.add_term(Monomial::one(d), PAdic::one(p, m)?);
        Ok(s)
    }

    /// `c * b^k` for a single monomial.
    pub fn monomial(p: u64, m: u32, n_bound: u32, k: Monomial, c: PAdic) -> Result<Self> {
        let mut s = Self::zero(p, m, n_bound, k.len())?;
        s.add_term(k, c);
        Ok(s)
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.m
    }

    pub fn degree_bound(&self) -> u32 {
        self.n_bound
    }

    pub fn num_vars(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &PAdic)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &Monomial) -> PAdic {
        self.terms
            .get(k)
            .copied()
            .unwrap_or_else(|| PAdic::zero(self.p, self.m).expect("valid"))
    }

    /// Digits that are meaningful for a monomial of degree `j`.
    pub fn cap(&self, j: u32) -> u32 {
        self.m.min(self.n_bound.saturating_sub(j))
    }

    fn reduce(&self, j: u32, c: PAdic) -> Option<PAdic> {
        let cap = self.cap(j);
        if cap == 0 {
            return None;
        }
        let modulus = checked_pow(self.p, cap).expect("cap below precision");
        let r = c.residue() % modulus;
        (r != 0).then(|| PAdic::from_residue(self.p, self.m, r).expect("valid"))
    }

    /// Adds `c * b^k`, dropping it when it vanishes in the quotient.
    pub fn add_term(&mut self, k: Monomial, c: PAdic) {
        let j = k.degree();
        if j >= self.n_bound {
            return;
        }
        let c = c
            .truncate(self.m)
            .expect("coefficient precision at least m");
        let total = match self.terms.remove(&k) {
            Some(old) => old + c,
            None => c,
        };
        if let Some(r) = self.reduce(j, total) {
            self.terms.insert(k, r);
        }
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if (self.p, self.m, self.n_bound, self.d) != (other.p, other.m, other.n_bound, other.d) {
            return Err(Error::Mismatch(format!(
                "series over (p={}, m={}, N={}, d={}) and (p={}, m={}, N={}, d={})",
                self.p, self.m, self.n_bound, self.d, other.p, other.m, other.n_bound, other.d
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&other.scalar(-1)))
    }

    pub fn scale(&self, c: &PAdic) -> Self {
        let mut out = Self {
            terms: BTreeMap::new(),
            ..self.clone()
        };
        for (k, v) in &self.terms {
            out.add_term(k.clone(), *v * c.truncate(self.m).expect("precision"));
        }
        out
    }

    pub fn scalar(&self, v: i64) -> PAdic {
        PAdic::new(self.p, self.m, v).expect("valid")
    }

    /// The same element viewed in a coarser quotient.
    pub fn reduce_to(&self, m: u32, n_bound: u32) -> Result<Self> {
        if m > self.m || n_bound > self.n_bound {
            return Err(Error::InsufficientPrecision {
                required: m.max(n_bound),
                available: self.m.min(self.n_bound),
            });
        }
        let mut out = Self::zero(self.p, m, n_bound, self.d)?;
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.truncate(m)?);
        }
        Ok(out)
    }

    /// Terms of exactly degree `j`.
    pub fn homogeneous_part(&self, j: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| k.degree() == j)
            .map(|(k, c)| (k.clone(), *c))
            .collect();
        Self {
            terms,
            ..self.clone()
        }
    }

    /// Value with every variable set to zero.
    pub fn augmentation(&self) -> PAdic {
        self.coefficient(&Monomial::one(self.d))
    }

    /// `inf_k (val(c_k) + |k|)`, exact when below `min(N, m)`.
    pub fn omega_tilde(&self) -> Valuation {
        let limit = self.n_bound.min(self.m);
        let best = self
            .terms
            .iter()
            .map(|(k, c)| c.valuation().bound() + k.degree())
            .min()
            .unwrap_or(limit);
        if best < limit {
            Valuation::Exact(best)
        } else {
            Valuation::AtLeast(limit)
        }
    }

    /// First monomial, in iteration order, where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, PAdic, PAdic)> {
        let keys: std::collections::BTreeSet<&Monomial> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coefficient(k), other.coefficient(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    /// Lines `k_1 ... k_d : coefficient` under a header.
    pub fn to_text(&self, cartan_type: &str, generators: &[String]) -> String {
        let mut out = String::new();
        writeln!(out, "p {}", self.p).unwrap();
        writeln!(out, "m {}", self.m).unwrap();
        writeln!(out, "N {}", self.n_bound).unwrap();
        writeln!(out, "type {cartan_type}").unwrap();
        writeln!(out, "generators {}", generators.join(" ")).unwrap();
        for (k, c) in &self.terms {
            let exps: Vec<String> = k.0.iter().map(u8::to_string).collect();
            let c = c.truncate(self.cap(k.degree())).expect("cap below m");
            writeln!(out, "{} : {c}", exps.join(" ")).unwrap();
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<(Self, String, Vec<String>)> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let mut header = |key: &str| -> Result<String> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing `{key}` header")))?;
            line.strip_prefix(key)
                .and_then(|rest| rest.strip_prefix(' '))
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("expected `{key}` header, found `{line}`")))
        };
        let num = |s: String| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad number `{s}`")))
        };
        let p = num(header("p")?)?;
        let m = num(header("m")?)? as u32;
        let n_bound = num(header("N")?)? as u32;
        let ty = header("type")?;
        let generators: Vec<String> = header("generators")?
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let mut s = Self::zero(p, m, n_bound, generators.len())?;
        for line in lines {
            let (exps, coeff) = line
                .split_once(" : ")
                .ok_or_else(|| Error::Parse(format!("bad term line `{line}`")))?;
            let exps: Vec<u8> = exps
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad exponents `{exps}`")))?;
            if exps.len() != s.d {
                return Err(Error::Parse(format!(
                    "`{line}` has {} exponents, expected {}",
                    exps.len(),
                    s.d
                )));
            }
            let c = PAdic::parse(p, coeff)?;
            let residue = c.residue();
            s.add_term(Monomial(exps), PAdic::from_residue(p, m, residue)?);
        }
        Ok((s, ty, generators))
    }
}

impl fmt::Debug for OrderedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{}*{k:?}", c.to_signed()))
            .collect();
        write!(
            f,
            "[{}] (p={}, m={}, N={})",
            terms.join(" + "),
            self.p,
            self.m,
            self.n_bound
        )
    }
}
