//! Truncated p-adic integers `Z/p^m` with tracked precision.
//!
//! Residues live in a single machine word; `p^m` must stay below `2^63`.
//! Series kernels (logarithm, exponential, binomial coefficients) run at an
//! internal working precision `m + g` and truncate their result back to `m`,
//! where `g` is given by [`guard_digits`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

const WORD_LIMIT: u128 = 1 << 63;

/// Valuation of a truncated quantity: either known exactly, or only known to
/// be at least the available precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Valuation {
    Exact(u32),
    AtLeast(u32),
}

/// Ordered by the bound, with `Exact(k)` below `AtLeast(k)`.
impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.bound(), !self.is_exact()).cmp(&(other.bound(), !other.is_exact()))
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Valuation {
    pub fn exact(self) -> Option<u32> {
        match self {
            Valuation::Exact(v) => Some(v),
            Valuation::AtLeast(_) => None,
        }
    }

    /// The value itself when exact, the lower bound otherwise.
    pub fn bound(self) -> u32 {
        match self {
            Valuation::Exact(v) | Valuation::AtLeast(v) => v,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Valuation::Exact(_))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Exact(v) => write!(f, "{v}"),
            Valuation::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^k` if it fits below `2^63`.
pub fn checked_pow(p: u64, k: u32) -> Option<u64> {
    let mut acc: u128 = 1;
    for _ in 0..k {
        acc *= p as u128;
        if acc >= WORD_LIMIT {
            return None;
        }
    }
    Some(acc as u64)
}

/// Largest `k` with `p^k` below `2^63`.
pub fn max_precision(p: u64) -> u32 {
    let mut k = 0;
    while checked_pow(p, k + 1).is_some() {
        k += 1;
    }
    k
}

pub fn vp_u64(mut n: u64, p: u64) -> u32 {
    if n == 0 {
        return u32::MAX;
    }
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Legendre's formula for `v_p(k!)`.
pub fn vp_factorial(k: u64, p: u64) -> u32 {
    let mut v = 0;
    let mut q = k / p;
    while q > 0 {
        v += q as u32;
        q /= p;
    }
    v
}

/// Guard digits for a series whose largest index is `max_index`:
/// `ceil((D - 1) / (p - 1)) + 2`, an upper bound on `v_p(D!)` plus slack.
pub fn guard_digits(p: u64, max_index: u64) -> u32 {
    let numer = max_index.saturating_sub(1);
    numer.div_ceil(p - 1) as u32 + 2
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u64)
}

/// An element of `Z/p^prec`, i.e. a p-adic integer known to `prec` digits.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdic {
    p: u64,
    prec: u32,
    modulus: u64,
    residue: u64,
}

impl PAdic {
    pub fn new(p: u64, prec: u32, value: i64) -> Result<Self> {
        let modulus = Self::check_params(p, prec)?;
        let residue = (value as i128).rem_euclid(modulus as i128) as u64;
        Ok(Self {
            p,
            prec,
            modulus,
            residue,
        })
    }

    pub fn from_residue(p: u64, prec: u32, residue: u64) -> Result<Self> {
        let modulus = Self::check_params(p, prec)?;
        Ok(Self {
            p,
            prec,
            modulus,
            residue: residue % modulus,
        })
    }

    pub fn zero(p: u64, prec: u32) -> Result<Self> {
        Self::new(p, prec, 0)
    }

    pub fn one(p: u64, prec: u32) -> Result<Self> {
        Self::new(p, prec, 1)
    }

    fn check_params(p: u64, prec: u32) -> Result<u64> {
        if !is_odd_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if prec == 0 {
            return Err(Error::InsufficientPrecision {
                required: 1,
                available: 0,
            });
        }
        checked_pow(p, prec).ok_or(Error::PrecisionOverflow { p, prec })
    }

    /// Same prime and precision as `self`, holding `value`.
    pub fn lift_int(&self, value: i64) -> Self {
        let residue = (value as i128).rem_euclid(self.modulus as i128) as u64;
        Self { residue, ..*self }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    /// Representative in `(-p^m/2, p^m/2]`.
    pub fn to_signed(&self) -> i64 {
        if self.residue > self.modulus / 2 {
            self.residue as i64 - self.modulus as i64
        } else {
            self.residue as i64
        }
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn is_unit(&self) -> bool {
        self.residue % self.p != 0
    }

    pub fn is_one_unit(&self) -> bool {
        self.residue % self.p == 1 % self.p
    }

    pub fn valuation(&self) -> Valuation {
        if self.residue == 0 {
            Valuation::AtLeast(self.prec)
        } else {
            Valuation::Exact(vp_u64(self.residue, self.p))
        }
    }

    /// Reduce to a lower precision.
    pub fn truncate(&self, prec: u32) -> Result<Self> {
        if prec > self.prec {
            return Err(Error::InsufficientPrecision {
                required: prec,
                available: self.prec,
            });
        }
        Self::from_residue(self.p, prec, self.residue)
    }

    /// The stored representative viewed at a higher precision. Only sound for
    /// functions whose value mod `p^prec` depends on the input mod `p^prec`.
    fn lift_representative(&self, prec: u32) -> Result<Self> {
        Self::from_residue(self.p, prec, self.residue)
    }

    /// Multiply by `p^k`; precision grows by `k`.
    pub fn shift_up(&self, k: u32) -> Result<Self> {
        let prec = self.prec + k;
        let modulus = Self::check_params(self.p, prec)?;
        let scale = checked_pow(self.p, k).expect("p^k below p^(prec+k)");
        Ok(Self {
            p: self.p,
            prec,
            modulus,
            residue: self.residue * scale,
        })
    }

    /// Exact division by `p^k`; precision shrinks by `k`.
    pub fn shift_down(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Ok(*self);
        }
        if k >= self.prec {
            return Err(Error::InsufficientPrecision {
                required: k + 1,
                available: self.prec,
            });
        }
        let scale = checked_pow(self.p, k).expect("k below precision");
        if self.residue % scale != 0 {
            return Err(Error::NotDivisible {
                value: self.to_string(),
                shift: k,
            });
        }
        Self::from_residue(self.p, self.prec - k, self.residue / scale)
    }

    pub fn inv(&self) -> Result<Self> {
        let residue =
            inv_mod(self.residue, self.modulus).ok_or_else(|| Error::NotAUnit(self.to_string()))?;
        Ok(Self { residue, ..*self })
    }

    /// Division by a unit. Division by non-units is deliberately unavailable;
    /// use [`PAdic::shift_down`] for exact division by powers of `p`.
    pub fn div_unit(&self, rhs: &Self) -> Result<Self> {
        Ok(*self * rhs.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.residue;
        let mut acc = 1 % self.modulus;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(acc, base, self.modulus);
            }
            base = mul_mod(base, base, self.modulus);
            e >>= 1;
        }
        Self {
            residue: acc,
            ..*self
        }
    }

    pub fn pow_i64(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// p-adic logarithm of a 1-unit, correct to the full input precision.
    pub fn log(&self) -> Result<Self> {
        if !self.is_one_unit() {
            return Err(Error::NotAOneUnit(self.to_string()));
        }
        let prec = self.prec;
        let y = *self - self.lift_int(1);
        let v = match y.valuation() {
            Valuation::AtLeast(_) => return Ok(y),
            Valuation::Exact(v) => v as u64,
        };
        let p = self.p;
        // k*v - v_p(k) is increasing in k and bounds the term valuation below.
        let ilog = |k: u64| -> u64 {
            let mut e = 0;
            let mut q = k;
            while q >= p {
                q /= p;
                e += 1;
            }
            e
        };
        let mut last = 1;
        while (last + 1) * v < prec as u64 + ilog(last + 1) {
            last += 1;
        }
        let work = prec + guard_digits(p, last);
        let y_work = y.lift_representative(work)?;
        let out_mod = self.modulus;
        let mut sum = 0u64;
        let mut power = y_work;
        for k in 1..=last {
            if k > 1 {
                power = power * y_work;
            }
            let s = vp_u64(k, p);
            let unit = k / checked_pow(p, s).expect("p^s divides k");
            let term = power.shift_down(s)?.truncate(prec)?;
            let term = mul_mod(
                term.residue,
                inv_mod(unit % out_mod, out_mod).expect("unit"),
                out_mod,
            );
            sum = if k % 2 == 1 {
                (sum + term) % out_mod
            } else {
                (sum + out_mod - term) % out_mod
            };
        }
        Self::from_residue(p, prec, sum)
    }

    /// p-adic exponential on `pZ_p`; the result is a 1-unit.
    pub fn exp(&self) -> Result<Self> {
        let prec = self.prec;
        let p = self.p;
        let v = match self.valuation() {
            Valuation::AtLeast(_) => return Ok(self.lift_int(1)),
            Valuation::Exact(0) => return Err(Error::NotTopologicallyNilpotent(self.to_string())),
            Valuation::Exact(v) => v as u64,
        };
        // v_p(k!) <= (k-1)/(p-1), so k*v - (k-1)/(p-1) >= prec bounds the tail.
        let mut last = 1u64;
        while (last * v) * (p - 1) < prec as u64 * (p - 1) + (last - 1) {
            last += 1;
        }
        let work = prec + guard_digits(p, last);
        let y_work = self.lift_representative(work)?;
        let out_mod = self.modulus;
        let mut sum = 1 % out_mod;
        let mut power = y_work;
        let mut unit_fact = 1u64;
        for k in 1..=last {
            if k > 1 {
                power = power * y_work;
            }
            let s = vp_u64(k, p);
            unit_fact = mul_mod(
                unit_fact,
                (k / checked_pow(p, s).expect("divides")) % out_mod,
                out_mod,
            );
            let shift = vp_factorial(k, p);
            let term = power.shift_down(shift)?.truncate(prec)?;
            let term = mul_mod(
                term.residue,
                inv_mod(unit_fact, out_mod).expect("unit"),
                out_mod,
            );
            sum = (sum + term) % out_mod;
        }
        Self::from_residue(p, prec, sum)
    }

    /// `self^e` for a 1-unit base and p-adic exponent, via `exp(e log self)`.
    ///
    /// The exponent needs `prec - 1` digits since `log self` is divisible by `p`.
    pub fn pow_padic(&self, e: &Self) -> Result<Self> {
        self.check_prime(e)?;
        let prec = self.prec;
        if prec == 1 {
            return Ok(self.lift_int(1));
        }
        let log = self.log()?.shift_down(1)?;
        let e = e.truncate(prec - 1)?;
        (log * e).shift_up(1)?.exp()
    }

    /// `binom(self, k)` to `out_prec` digits. Needs `out_prec + v_p(k!)` input digits.
    pub fn binomial(&self, k: u64, out_prec: u32) -> Result<Self> {
        let shift = vp_factorial(k, self.p);
        let required = out_prec + shift;
        if self.prec < required {
            return Err(Error::InsufficientPrecision {
                required,
                available: self.prec,
            });
        }
        let a = self.truncate(required)?;
        let mut numer = a.lift_int(1);
        let mut unit_fact = 1u64;
        let out_mod = checked_pow(self.p, out_prec).ok_or(Error::PrecisionOverflow {
            p: self.p,
            prec: out_prec,
        })?;
        for i in 0..k {
            numer = numer * (a - a.lift_int(i as i64));
            let j = i + 1;
            let s = vp_u64(j, self.p);
            unit_fact = mul_mod(
                unit_fact,
                (j / checked_pow(self.p, s).expect("divides")) % out_mod,
                out_mod,
            );
        }
        let q = numer.shift_down(shift)?;
        let inv = inv_mod(unit_fact, out_mod).expect("unit");
        Self::from_residue(self.p, out_prec, mul_mod(q.residue, inv, out_mod))
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::Mismatch(format!(
                "primes {} and {}",
                self.p, other.p
            )));
        }
        Ok(())
    }

    /// Base-p digits, least significant first, trailing zeros trimmed.
    pub fn digits(&self) -> Vec<u64> {
        let mut digits = Vec::new();
        let mut r = self.residue;
        while r > 0 {
            digits.push(r % self.p);
            r /= self.p;
        }
        if digits.is_empty() {
            digits.push(0);
        }
        digits
    }

    /// Parse the digit-string format `d0,d1,...:^prec`.
    pub fn parse(p: u64, s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, prec) = s
            .split_once(":^")
            .ok_or_else(|| Error::Parse(format!("`{s}`: missing `:^<precision>` suffix")))?;
        let prec: u32 = prec
            .parse()
            .map_err(|_| Error::Parse(format!("`{s}`: bad precision")))?;
        let modulus = Self::check_params(p, prec)?;
        let digits: Vec<u64> = digits
            .split(',')
            .map(|d| d.trim().parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("`{s}`: bad digit")))?;
        if digits.len() > prec as usize && digits[prec as usize..].iter().any(|&d| d != 0) {
            return Err(Error::Parse(format!("`{s}`: more digits than precision")));
        }
        let mut residue: u128 = 0;
        let mut scale: u128 = 1;
        for &d in digits.iter().take(prec as usize) {
            if d >= p {
                return Err(Error::Parse(format!(
                    "`{s}`: digit {d} out of range for p = {p}"
                )));
            }
            residue += d as u128 * scale;
            scale *= p as u128;
        }
        Ok(Self {
            p,
            prec,
            modulus,
            residue: residue as u64,
        })
    }
}

impl fmt::Display for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits: Vec<String> = self.digits().iter().map(u64::to_string).collect();
        write!(f, "{}:^{}", digits.join(","), self.prec)
    }
}

impl fmt::Debug for PAdic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.residue, self.p, self.prec)
    }
}

fn assert_compatible(a: &PAdic, b: &PAdic) {
    assert!(
        a.p == b.p && a.prec == b.prec,
        "incompatible p-adic operands: {:?} and {:?}",
        a,
        b
    );
}

impl Add for PAdic {
    type Output = PAdic;
    fn add(self, rhs: PAdic) -> PAdic {
        assert_compatible(&self, &rhs);
        let s = self.residue as u128 + rhs.residue as u128;
        PAdic {
            residue: (s % self.modulus as u128) as u64,
            ..self
        }
    }
}

impl Sub for PAdic {
    type Output = PAdic;
    fn sub(self, rhs: PAdic) -> PAdic {
        assert_compatible(&self, &rhs);
        let s = self.residue as u128 + self.modulus as u128 - rhs.residue as u128;
        PAdic {
            residue: (s % self.modulus as u128) as u64,
            ..self
        }
    }
}

impl Mul for PAdic {
    type Output = PAdic;
    fn mul(self, rhs: PAdic) -> PAdic {
        assert_compatible(&self, &rhs);
        PAdic {
            residue: mul_mod(self.residue, rhs.residue, self.modulus),
            ..self
        }
    }
}

impl Neg for PAdic {
    type Output = PAdic;
    fn neg(self) -> PAdic {
        PAdic {
            residue: (self.modulus - self.residue) % self.modulus,
            ..self
        }
    }
}

/// The constants `P = log(1+p^2)/log(1+p)` and `Q = (1+p^2)^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicConstants {
    pub p: u64,
    pub precision: u32,
    /// `P`, the exponent with `(1+p)^P = 1+p^2`.
    pub log_ratio: PAdic,
    /// `Q = (1+p^2)^{-1}`.
    pub inv_one_plus_p2: PAdic,
}

pub fn constants_pq(p: u64, precision: u32) -> Result<PadicConstants> {
    // Both logarithms lose one digit to the division by p.
    let work = precision + 1;
    let one_plus_p = PAdic::new(p, work, 1 + p as i64)?;
    let one_plus_p2 = PAdic::new(p, work, 1 + (p * p) as i64)?;
    let log1 = one_plus_p.log()?.shift_down(1)?;
    let log2 = one_plus_p2.log()?.shift_down(1)?;
    let log_ratio = log2.div_unit(&log1)?.truncate(precision)?;
    let inv_one_plus_p2 = one_plus_p2.inv()?.truncate(precision)?;
    Ok(PadicConstants {
        p,
        precision,
        log_ratio,
        inv_one_plus_p2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pa(p: u64, prec: u32, v: i64) -> PAdic {
        PAdic::new(p, prec, v).unwrap()
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(pa(5, 4, 5).valuation(), Valuation::Exact(1));
        assert_eq!(pa(5, 4, 1).valuation(), Valuation::Exact(0));
        assert_eq!(pa(5, 4, 0).valuation(), Valuation::AtLeast(4));
        assert_eq!(pa(5, 4, 625).valuation(), Valuation::AtLeast(4));
    }

    #[test]
    fn rejects_even_and_composite_primes() {
        assert_eq!(PAdic::new(2, 3, 1), Err(Error::InvalidPrime(2)));
        assert_eq!(PAdic::new(9, 3, 1), Err(Error::InvalidPrime(9)));
        assert!(matches!(
            PAdic::new(3, 60, 1),
            Err(Error::PrecisionOverflow { .. })
        ));
    }

    #[test]
    fn log_examples() {
        assert!(pa(5, 4, 1).log().unwrap().is_zero());
        for p in [3u64, 5, 7, 11] {
            let l = pa(p, 6, 1 + p as i64).log().unwrap();
            assert_eq!(l.valuation(), Valuation::Exact(1), "p = {p}");
        }
        // log(26) = 25 - 625/2 + ... = 25 mod 125
        assert_eq!(pa(5, 3, 26).log().unwrap().residue(), 25);
        assert!(matches!(pa(5, 3, 2).log(), Err(Error::NotAOneUnit(_))));
    }

    #[test]
    fn exp_inverts_log() {
        for p in [3u64, 5, 7] {
            for x in [
                1 + p as i64,
                1 + 2 * p as i64,
                1 - (p * p) as i64,
                1 + 3 * p as i64,
            ] {
                let a = pa(p, 7, x);
                assert_eq!(a.log().unwrap().exp().unwrap(), a);
            }
        }
        assert!(pa(5, 3, 2).exp().is_err());
    }

    #[test]
    fn golden_constants_p5_m4() {
        // Independent big-rational evaluation of the series with 200 terms.
        let c = constants_pq(5, 4).unwrap();
        assert_eq!(c.log_ratio.residue(), 205);
        assert_eq!(c.inv_one_plus_p2.residue(), 601);
        assert_eq!(c.log_ratio.to_string(), "0,1,3,1:^4");
        assert_eq!(c.inv_one_plus_p2.to_string(), "1,0,4,4:^4");
        let c3 = constants_pq(3, 4).unwrap();
        assert_eq!(
            (c3.log_ratio.residue(), c3.inv_one_plus_p2.residue()),
            (12, 73)
        );
        let c7 = constants_pq(7, 4).unwrap();
        assert_eq!(
            (c7.log_ratio.residue(), c7.inv_one_plus_p2.residue()),
            (1232, 2353)
        );
    }

    #[test]
    fn constant_congruences() {
        for p in [3u64, 5, 7, 11, 13] {
            let c = constants_pq(p, 5).unwrap();
            assert_eq!(c.log_ratio.residue() % (p * p), p);
            assert_eq!(c.inv_one_plus_p2.residue() % (p * p), 1);
            let one_plus_p = pa(p, 5, 1 + p as i64);
            assert_eq!(
                one_plus_p.pow_padic(&c.log_ratio).unwrap().residue(),
                1 + p * p
            );
            assert_eq!(
                (c.inv_one_plus_p2 * pa(p, 5, 1 + (p * p) as i64)).residue(),
                1
            );
        }
    }

    #[test]
    fn binomial_examples() {
        let a = pa(5, 6, 17);
        assert_eq!(a.binomial(0, 4).unwrap().residue(), 1);
        assert_eq!(pa(5, 4, 2).binomial(2, 4).unwrap().residue(), 1);
        assert_eq!(pa(5, 6, 7).binomial(5, 4).unwrap().residue(), 21);
        let q = constants_pq(5, 6).unwrap().inv_one_plus_p2;
        assert_eq!(q.binomial(2, 3).unwrap().residue() % 5, 0);
        assert_eq!(
            pa(5, 4, 7).binomial(5, 4),
            Err(Error::InsufficientPrecision {
                required: 5,
                available: 4
            })
        );
    }

    #[test]
    fn digit_strings() {
        let a = pa(5, 4, 5 + 3 * 25);
        assert_eq!(a.to_string(), "0,1,3:^4");
        assert_eq!(PAdic::parse(5, "0,1,3:^4").unwrap(), a);
        assert_eq!(pa(3, 2, 0).to_string(), "0:^2");
        assert_eq!(PAdic::parse(3, "0:^2").unwrap(), pa(3, 2, 0));
        assert!(PAdic::parse(5, "0,7:^4").is_err());
        assert!(PAdic::parse(5, "0,1").is_err());
        assert!(PAdic::parse(5, "1,1,1:^2").is_err());
    }

    #[test]
    fn shifts_are_exact() {
        let a = pa(5, 4, 10);
        let b = a.shift_down(1).unwrap();
        assert_eq!((b.residue(), b.precision()), (2, 3));
        assert_eq!(b.shift_up(1).unwrap(), a);
        assert!(matches!(
            pa(5, 4, 11).shift_down(1),
            Err(Error::NotDivisible { .. })
        ));
        assert!(matches!(pa(5, 4, 5).inv(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn guard_policy() {
        assert_eq!(guard_digits(5, 4), 3);
        assert_eq!(guard_digits(3, 4), 4);
        assert_eq!(guard_digits(7, 1), 2);
    }

    #[test]
    #[should_panic(expected = "incompatible")]
    fn mixing_primes_panics() {
        let _ = pa(5, 3, 1) + pa(7, 3, 1);
    }
}
