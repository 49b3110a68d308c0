//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! An element is stored sparsely as `Σ c_k ζ_N^k` over a fixed basis of powers of `ζ_N`.
//! For each prime power `p^e || N`, write the `p`-part of an exponent as
//! `c_p = k (N/p^e)^{-1} mod p^e`; powers whose leading base-`p` digit of `c_p` is `p - 1`
//! are excluded from the basis and rewritten through `Σ_{t<p} ζ_N^{k + tN/p} = 0`.
//! The remaining `φ(N)` powers form a basis, so representations are canonical and
//! equality within one field is structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Rational coefficients. Every quantity this crate produces fits comfortably in `i128`;
/// overflow panics rather than wrapping (overflow checks are on in all profiles).
pub type Rat = Ratio<i128>;

#[derive(Debug)]
struct PrimePart {
    p: u32,
    /// `p^(e-1)`
    low: u32,
    /// `p^e`
    full: u32,
    /// `(N / p^e)^{-1} mod p^e`
    unit: u32,
    /// `N / p`
    step: u32,
}

#[derive(Debug)]
struct Conductor {
    n: u32,
    parts: Vec<PrimePart>,
}

impl Conductor {
    fn new(n: u32) -> Self {
        let parts = factorize(n)
            .into_iter()
            .map(|(p, e)| {
                let full = p.pow(e);
                let low = full / p;
                let cofactor = n / full;
                let unit = if full == 1 { 0 } else { mod_inverse(cofactor % full, full) };
                PrimePart {
                    p,
                    low,
                    full,
                    unit,
                    step: n / p,
                }
            })
            .collect();
        Conductor { n, parts }
    }

    #[inline]
    fn excluded(&self, part: &PrimePart, k: u32) -> bool {
        let c = (k as u64 * part.unit as u64 % part.full as u64) as u32;
        c / part.low == part.p - 1
    }

    /// Rewrites arbitrary exponent/coefficient pairs into canonical sorted form.
    fn reduce(&self, raw: BTreeMap<u32, Rat>) -> Vec<(u32, Rat)> {
        let mut cur = raw;
        for part in &self.parts {
            if !cur.keys().any(|&k| self.excluded(part, k)) {
                continue;
            }
            let mut next: BTreeMap<u32, Rat> = BTreeMap::new();
            for (k, c) in cur {
                if self.excluded(part, k) {
                    for s in 1..part.p {
                        let k2 = ((k as u64 + self.n as u64 - (s as u64 * part.step as u64) % self.n as u64)
                            % self.n as u64) as u32;
                        *next.entry(k2).or_insert_with(Rat::zero) -= c;
                    }
                } else {
                    *next.entry(k).or_insert_with(Rat::zero) += c;
                }
            }
            cur = next;
        }
        cur.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

fn conductor_data(n: u32) -> Arc<Conductor> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Arc<Conductor>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(n).or_insert_with(|| Arc::new(Conductor::new(n))).clone()
}

pub(crate) fn factorize(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mod_inverse(a: u32, m: u32) -> u32 {
    let e = (a as i64).extended_gcd(&(m as i64));
    assert_eq!(e.gcd, 1, "{a} is not invertible mod {m}");
    e.x.rem_euclid(m as i64) as u32
}

pub fn euler_phi(n: u32) -> u32 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    terms: Vec<(u32, Rat)>,
}

impl Cyclotomic {
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor > 0);
        Cyclotomic {
            conductor,
            terms: Vec::new(),
        }
    }

    pub fn rational(conductor: u32, r: Rat) -> Self {
        let mut z = Cyclotomic::zero(conductor);
        if !r.is_zero() {
            z.terms.push((0, r));
        }
        z
    }

    pub fn integer(conductor: u32, n: i128) -> Self {
        Cyclotomic::rational(conductor, Rat::from_integer(n))
    }

    pub fn one(conductor: u32) -> Self {
        Cyclotomic::integer(conductor, 1)
    }

    /// `ζ_N^k`.
    pub fn root_of_unity(conductor: u32, k: i64) -> Self {
        let n = conductor as i64;
        let mut raw = BTreeMap::new();
        raw.insert(k.rem_euclid(n) as u32, Rat::one());
        Cyclotomic::from_raw(conductor, raw)
    }

    /// Builds `Σ c ζ_N^k` from unreduced pairs; exponents are taken mod `N`.
    pub fn from_powers(conductor: u32, powers: impl IntoIterator<Item = (i64, Rat)>) -> Self {
        let mut raw: BTreeMap<u32, Rat> = BTreeMap::new();
        for (k, c) in powers {
            *raw.entry(k.rem_euclid(conductor as i64) as u32).or_insert_with(Rat::zero) += c;
        }
        Cyclotomic::from_raw(conductor, raw)
    }

    fn from_raw(conductor: u32, raw: BTreeMap<u32, Rat>) -> Self {
        let terms = conductor_data(conductor).reduce(raw);
        Cyclotomic { conductor, terms }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Canonical `(exponent, coefficient)` pairs.
    pub fn terms(&self) -> &[(u32, Rat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rat> {
        match self.terms.as_slice() {
            [] => Some(Rat::zero()),
            [(0, c)] => Some(*c),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Re-expresses the element in `Q(ζ_M)` for a multiple `M` of the conductor.
    pub fn embed(&self, target: u32) -> Result<Self> {
        if !target.is_multiple_of(self.conductor) {
            return Err(Error::input(format!(
                "cannot embed Q(zeta_{}) into Q(zeta_{target})",
                self.conductor
            )));
        }
        if target == self.conductor {
            return Ok(self.clone());
        }
        let f = target / self.conductor;
        let raw = self.terms.iter().map(|&(k, c)| (k * f, c)).collect();
        Ok(Cyclotomic::from_raw(target, raw))
    }

    fn lifted_pair(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if self.conductor == other.conductor {
            return (self.clone(), other.clone());
        }
        let n = self.conductor.lcm(&other.conductor);
        (self.embed(n).unwrap(), other.embed(n).unwrap())
    }

    /// Galois automorphism `ζ ↦ ζ^a` for `a` coprime to the conductor.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.conductor as i64;
        let raw = self
            .terms
            .iter()
            .map(|&(k, c)| (((k as i64) * a).rem_euclid(n) as u32, c))
            .collect();
        Cyclotomic::from_raw(self.conductor, raw)
    }

    /// Complex conjugation, `ζ ↦ ζ^{N-1}`.
    pub fn conj(&self) -> Self {
        if self.as_rational().is_some() {
            return self.clone();
        }
        self.galois(-1)
    }

    pub fn scale(&self, r: Rat) -> Self {
        if r.is_zero() {
            return Cyclotomic::zero(self.conductor);
        }
        Cyclotomic {
            conductor: self.conductor,
            terms: self.terms.iter().map(|&(k, c)| (k, c * r)).collect(),
        }
    }

    fn add_same(&self, other: &Cyclotomic, sign: i128) -> Cyclotomic {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    terms.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push((b[j].0, b[j].1 * sign));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1 + b[j].1 * sign;
                    if !c.is_zero() {
                        terms.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Cyclotomic {
            conductor: self.conductor,
            terms,
        }
    }

    fn mul_same(&self, other: &Cyclotomic) -> Cyclotomic {
        if let Some(r) = self.as_rational() {
            return other.scale(r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(r);
        }
        let n = self.conductor;
        let mut raw: BTreeMap<u32, Rat> = BTreeMap::new();
        for &(k1, c1) in &self.terms {
            for &(k2, c2) in &other.terms {
                *raw.entry((k1 + k2) % n).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        Cyclotomic::from_raw(n, raw)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::one(self.conductor);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Approximate complex value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), &(k, c)| {
            let v = *c.numer() as f64 / *c.denom() as f64;
            let t = std::f64::consts::TAU * k as f64 / n;
            (re + v * t.cos(), im + v * t.sin())
        })
    }

    /// Coefficients of the representative of degree `< φ(N)` modulo the `N`-th cyclotomic
    /// polynomial.
    pub fn power_basis_coeffs(&self) -> Vec<Rat> {
        let n = self.conductor as usize;
        let phi = cyclotomic_polynomial(self.conductor);
        let deg = phi.len() - 1;
        let mut poly = vec![Rat::zero(); n.max(deg)];
        for &(k, c) in &self.terms {
            poly[k as usize] += c;
        }
        for top in (deg..poly.len()).rev() {
            let c = poly[top];
            if c.is_zero() {
                continue;
            }
            // Φ is monic.
            for (i, &a) in phi.iter().enumerate() {
                if a != 0 {
                    poly[top - deg + i] -= c * Rat::from_integer(a);
                }
            }
        }
        poly.truncate(deg);
        poly
    }

    pub fn from_power_basis_coeffs(conductor: u32, coeffs: &[Rat]) -> Result<Self> {
        let phi = euler_phi(conductor) as usize;
        if coeffs.len() != phi {
            return Err(Error::input(format!(
                "expected {phi} coefficients for conductor {conductor}, got {}",
                coeffs.len()
            )));
        }
        Ok(Cyclotomic::from_powers(
            conductor,
            coeffs.iter().enumerate().map(|(k, &c)| (k as i64, c)),
        ))
    }
}

/// Sums of scaled products, reduced once at the end.
///
/// Reduction to the basis is linear, so raw exponents can be accumulated densely and
/// rewritten a single time. Inputs may have any conductor dividing the target.
pub struct Accumulator {
    n: u32,
    dense: Vec<Rat>,
}

impl Accumulator {
    pub fn new(conductor: u32) -> Self {
        Accumulator {
            n: conductor,
            dense: vec![Rat::zero(); conductor as usize],
        }
    }

    /// Accumulator over the least common conductor of the given values.
    pub fn for_values<'a>(values: impl IntoIterator<Item = &'a Cyclotomic>) -> Self {
        let n = values.into_iter().fold(1u32, |acc, c| acc.lcm(&c.conductor));
        Accumulator::new(n)
    }

    fn factor(&self, c: &Cyclotomic) -> u32 {
        assert!(self.n.is_multiple_of(c.conductor), "conductor {} does not divide {}", c.conductor, self.n);
        self.n / c.conductor
    }

    pub fn add(&mut self, a: &Cyclotomic, w: Rat) {
        let f = self.factor(a);
        for &(k, c) in &a.terms {
            self.dense[(k * f) as usize] += c * w;
        }
    }

    /// Adds `w · a · b`.
    pub fn add_product(&mut self, a: &Cyclotomic, b: &Cyclotomic, w: Rat) {
        let (fa, fb) = (self.factor(a), self.factor(b));
        let n = self.n as u64;
        for &(k1, c1) in &a.terms {
            let cw = c1 * w;
            for &(k2, c2) in &b.terms {
                let k = ((k1 * fa) as u64 + (k2 * fb) as u64) % n;
                self.dense[k as usize] += cw * c2;
            }
        }
    }

    pub fn finish(self) -> Cyclotomic {
        let raw = self
            .dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        Cyclotomic::from_raw(self.n, raw)
    }
}

/// Integer coefficients of `Φ_N`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i128> {
    static CACHE: OnceLock<Mutex<BTreeMap<u32, Vec<i128>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // Φ_N = (x^N - 1) / Π_{d | N, d < N} Φ_d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_div(&num, &div);
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

fn exact_div(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i128; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd] / den[dd];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

// Values from different fields compare after embedding into a common one.
impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.terms == other.terms;
        }
        let (a, b) = self.lifted_pair(other);
        a.terms == b.terms
    }
}

impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Only rationals keep the same form in every field.
        self.as_rational().hash(state);
    }
}

impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = self.lifted_pair(other);
        a.terms
            .len()
            .cmp(&b.terms.len())
            .then_with(|| a.terms.cmp(&b.terms))
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return self.add_same(rhs, 1);
        }
        let (a, b) = self.lifted_pair(rhs);
        a.add_same(&b, 1)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return self.add_same(rhs, -1);
        }
        let (a, b) = self.lifted_pair(rhs);
        a.add_same(&b, -1)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return self.mul_same(rhs);
        }
        let (a, b) = self.lifted_pair(rhs);
        a.mul_same(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-Rat::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            let a = c.abs();
            match (*k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (k, true) => write!(f, "z{}^{k}", self.conductor)?,
                (k, false) => write!(f, "{a}*z{}^{k}", self.conductor)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// JSON form: `{"conductor": N, "coeffs": ["a/b", ...]}` with `φ(N)` power-basis
/// coefficients modulo `Φ_N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicJson {
    pub conductor: u32,
    pub coeffs: Vec<String>,
}

impl From<&Cyclotomic> for CyclotomicJson {
    fn from(c: &Cyclotomic) -> Self {
        CyclotomicJson {
            conductor: c.conductor,
            coeffs: c.power_basis_coeffs().iter().map(|r| r.to_string()).collect(),
        }
    }
}

impl TryFrom<&CyclotomicJson> for Cyclotomic {
    type Error = Error;

    fn try_from(j: &CyclotomicJson) -> Result<Self> {
        if j.conductor == 0 {
            return Err(Error::input("conductor must be positive"));
        }
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        Cyclotomic::from_power_basis_coeffs(j.conductor, &coeffs)
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::input(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn basis_has_phi_elements() {
        for n in [1u32, 2, 3, 4, 6, 8, 9, 12, 13, 156] {
            let data = conductor_data(n);
            let kept = (0..n)
                .filter(|&k| !data.parts.iter().any(|p| data.excluded(p, k)))
                .count() as u32;
            assert_eq!(kept, euler_phi(n), "conductor {n}");
        }
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [2u32, 3, 4, 12, 156] {
            let s = (0..n as i64).fold(Cyclotomic::zero(n), |acc, k| &acc + &z(n, k));
            assert!(s.is_zero(), "conductor {n}");
            assert_eq!(z(n, 1).pow(n), Cyclotomic::one(n));
        }
    }

    #[test]
    fn sqrt_minus_three() {
        // (2ζ_6 - 1)^2 = -3
        let w = &z(6, 1).scale(Rat::from_integer(2)) - &Cyclotomic::one(6);
        assert_eq!((&w * &w).as_integer(), Some(-3));
        assert_eq!(w.conj(), -&w);
    }

    #[test]
    fn conjugation_is_an_involution() {
        let x = Cyclotomic::from_powers(156, [(1, Rat::new(1, 2)), (13, Rat::from_integer(3)), (77, Rat::from_integer(-2))]);
        assert_eq!(x.conj().conj(), x);
        let norm = &x * &x.conj();
        assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn embedding_preserves_arithmetic() {
        let a = z(4, 1);
        let b = z(6, 1);
        let ab = &a * &b;
        assert_eq!(ab.conductor(), 12);
        assert_eq!(ab, z(12, 5));
        assert_eq!(a.embed(12).unwrap(), z(12, 3));
        assert!(a.embed(6).is_err());
    }

    #[test]
    fn power_basis_round_trip() {
        let x = Cyclotomic::from_powers(12, [(1, Rat::new(1, 3)), (7, Rat::from_integer(2)), (11, Rat::from_integer(5))]);
        let coeffs = x.power_basis_coeffs();
        assert_eq!(coeffs.len(), 4);
        assert_eq!(Cyclotomic::from_power_basis_coeffs(12, &coeffs).unwrap(), x);
        let j = CyclotomicJson::from(&x);
        assert_eq!(Cyclotomic::try_from(&j).unwrap(), x);
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }
}
