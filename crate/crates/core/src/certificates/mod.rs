//! Exact evaluation of counting inequalities for Ree groups `R(q)`, `q = 3^(2n+1)`.
//!
//! Every check stores the formula it evaluates. Values of `q` below 27 are outside the
//! range in which the inequalities are claimed; they are evaluated but flagged.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Smallest `q` at which the inequalities are claimed.
pub const MIN_Q: u128 = 27;

pub const NAMES: [&str; 5] = ["b1", "ngm", "cgi", "g0_final", "r3"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    OutOfDomain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub formula: String,
    pub relation: String,
    pub q: String,
    pub m: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m0: Option<String>,
    pub lhs: String,
    pub rhs: String,
    /// Truth value of the main relation, computed in every case.
    pub relation_holds: bool,
    pub conditions: Vec<Condition>,
    pub in_domain: bool,
    /// Main relation and every side condition, asserted only inside the domain.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    pub verdict: Verdict,
}

/// `q = 3^(2n+1)` together with `n` and `m = 3^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReeOrder {
    pub q: BigInt,
    pub m: BigInt,
    pub n: u32,
    pub exponent: u32,
}

impl ReeOrder {
    pub fn from_n(n: u32) -> Self {
        let exponent = 2 * n + 1;
        ReeOrder {
            q: BigInt::from(3u8).pow(exponent),
            m: BigInt::from(3u8).pow(n),
            n,
            exponent,
        }
    }

    /// Accepts only odd powers of 3.
    pub fn from_q(q: u128) -> Result<Self> {
        let mut e = 0u32;
        let mut r = q;
        while r > 1 && r.is_multiple_of(3) {
            r /= 3;
            e += 1;
        }
        if q == 0 || r != 1 || e.is_multiple_of(2) {
            return Err(Error::input(format!("q={q} is not an odd power of 3")));
        }
        Ok(ReeOrder::from_n((e - 1) / 2))
    }

    fn in_domain(&self) -> bool {
        self.q >= BigInt::from(MIN_Q)
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

struct Draft {
    name: &'static str,
    formula: &'static str,
    relation: &'static str,
    lhs: BigInt,
    rhs: BigInt,
    conditions: Vec<Condition>,
}

fn finish(d: Draft, p: &ReeOrder, q0: Option<&ReeOrder>, in_domain: bool) -> BoundCheck {
    let relation_holds = match d.relation {
        ">" => d.lhs > d.rhs,
        ">=" => d.lhs >= d.rhs,
        "<" => d.lhs < d.rhs,
        _ => unreachable!("unknown relation"),
    };
    let all = relation_holds && d.conditions.iter().all(|c| c.holds);
    let verdict = match (in_domain, all) {
        (false, _) => Verdict::OutOfDomain,
        (true, true) => Verdict::Pass,
        (true, false) => Verdict::Fail,
    };
    BoundCheck {
        name: d.name.into(),
        formula: d.formula.into(),
        relation: d.relation.into(),
        q: p.q.to_string(),
        m: p.m.to_string(),
        q0: q0.map(|r| r.q.to_string()),
        m0: q0.map(|r| r.m.to_string()),
        lhs: d.lhs.to_string(),
        rhs: d.rhs.to_string(),
        relation_holds,
        conditions: d.conditions,
        in_domain,
        holds: in_domain.then_some(all),
        verdict,
    }
}

fn cond(name: &str, holds: bool) -> Condition {
    Condition {
        name: name.into(),
        holds,
    }
}

/// `|G| = q^3 (q^3+1) (q-1)`.
pub fn ree_order(q: &BigInt) -> BigInt {
    q.pow(3) * (q.pow(3) + 1) * (q - 1)
}

pub fn b1_lhs(q: &BigInt, m: &BigInt) -> BigInt {
    let s = q + 1 + 3 * m;
    ree_order(q) - &s * &s * (q - 1) * (q + 1) * q - 2 * &s * &s * q * q
}

pub fn ngm_lhs(q: &BigInt) -> BigInt {
    let s = q + 4;
    ree_order(q) - 6 * (q + 1) - 2 * q * q * (q + 1) * (q + 1) - &s * &s * q * (q - 1) * (q + 1)
}

/// The count `A` with `q0` the order of the subfield subgroup.
pub fn cgi_a_doubled(q: &BigInt, q0: &BigInt) -> BigInt {
    q * (q - 1) * (q + 1) - q * q0.pow(4) - 2 * q * q0.pow(3) - 3 * q * q0.pow(2)
        + 2 * q * q0
        + 2 * q
        + 2 * q0.pow(5)
        + 3 * q0.pow(4)
        - 2 * q0.pow(3)
        - q0.pow(2)
}

/// `2 (A - q0^2 (q0-1)^2 (q0+1)^2 / 2)`.
pub fn cgi_lhs_doubled(q: &BigInt, q0: &BigInt) -> BigInt {
    let t = q0 * (q0 - 1) * (q0 + 1);
    cgi_a_doubled(q, q0) - &t * &t
}

/// `2 · (8/9 q^3 - 4q^2 + q)/2`, times 9.
pub fn cgi_rhs_times18(q: &BigInt) -> BigInt {
    8 * q.pow(3) - 36 * q * q + 9 * q
}

pub fn r3_lhs(q: &BigInt, m: &BigInt) -> BigInt {
    int(28 * 28) * q.pow(3) * (q - 1) + int(63 * 63) * (q.pow(3) - q) + int(36 * 36 * 6) * (q + 3 * m + 1)
}

pub fn check_b1_bound(q: u128) -> Result<BoundCheck> {
    let p = ReeOrder::from_q(q)?;
    Ok(b1(&p))
}

fn b1(p: &ReeOrder) -> BoundCheck {
    let d = Draft {
        name: "b1",
        formula: "q^3(q^3+1)(q-1) - (q+1+3m)^2(q-1)(q+1)q - 2(q+1+3m)^2q^2 > 0",
        relation: ">",
        lhs: b1_lhs(&p.q, &p.m),
        rhs: BigInt::zero(),
        conditions: vec![],
    };
    finish(d, p, None, p.in_domain())
}

pub fn check_ngm_bound(q: u128) -> Result<BoundCheck> {
    let p = ReeOrder::from_q(q)?;
    Ok(ngm(&p))
}

fn ngm(p: &ReeOrder) -> BoundCheck {
    let d = Draft {
        name: "ngm",
        formula: "q^3(q^3+1)(q-1) - 6(q+1) - 2q^2(q+1)^2 - (q+4)^2q(q-1)(q+1) > 1",
        relation: ">",
        lhs: ngm_lhs(&p.q),
        rhs: BigInt::one(),
        conditions: vec![],
    };
    finish(d, p, None, p.in_domain())
}

/// Checks `q = q0^a` with `a` an odd prime and returns `a`.
fn subfield_exponent(p: &ReeOrder, p0: &ReeOrder) -> Result<u32> {
    let a = p.exponent / p0.exponent;
    let prime = a >= 3 && (2..a).all(|d| !a.is_multiple_of(d));
    if !p.exponent.is_multiple_of(p0.exponent) || !prime {
        return Err(Error::input(format!(
            "q={} is not q0^a for q0={} and an odd prime a",
            p.q, p0.q
        )));
    }
    Ok(a)
}

fn chain_conditions(q: &BigInt, q0: &BigInt) -> Vec<Condition> {
    vec![
        cond("q0 <= q/9", 9 * q0 <= *q),
        cond("q0^2 <= q/3", 3 * q0 * q0 <= *q),
        cond("q0^3 <= q", q0.pow(3) <= *q),
    ]
}

pub fn check_cgi_count_bound(q: u128, q0: u128) -> Result<BoundCheck> {
    let p = ReeOrder::from_q(q)?;
    let p0 = ReeOrder::from_q(q0)?;
    subfield_exponent(&p, &p0)?;
    Ok(cgi(&p, &p0))
}

fn cgi(p: &ReeOrder, p0: &ReeOrder) -> BoundCheck {
    let (q, q0) = (&p.q, &p0.q);
    let rhs = cgi_rhs_times18(q);
    let mut conditions = vec![
        cond("(8/9 q^3 - 4q^2 + q)/2 > 0", rhs > BigInt::zero()),
        cond(
            "2q0^5 + 5q0^4 - 2q0^3 - 2q0^2 >= 0",
            2 * q0.pow(5) + 5 * q0.pow(4) - 2 * q0.pow(3) - 2 * q0.pow(2) >= BigInt::zero(),
        ),
    ];
    conditions.extend(chain_conditions(q, q0));
    let d = Draft {
        name: "cgi",
        formula: "A - q0^2(q0-1)^2(q0+1)^2/2 >= (8/9 q^3 - 4q^2 + q)/2 > 0, \
                  2A = q(q-1)(q+1) - qq0^4 - 2qq0^3 - 3qq0^2 + 2qq0 + 2q + 2q0^5 + 3q0^4 - 2q0^3 - q0^2; \
                  both sides scaled by 18",
        relation: ">=",
        lhs: 9 * cgi_lhs_doubled(q, q0),
        rhs,
        conditions,
    };
    finish(d, p, Some(p0), p.in_domain())
}

pub fn check_g0_final_bound(q: u128, q0: u128) -> Result<BoundCheck> {
    let p = ReeOrder::from_q(q)?;
    let p0 = ReeOrder::from_q(q0)?;
    subfield_exponent(&p, &p0)?;
    Ok(g0_final(&p, Some(&p0)))
}

fn g0_final(p: &ReeOrder, p0: Option<&ReeOrder>) -> BoundCheck {
    let q = &p.q;
    let conditions = p0.map(|p0| chain_conditions(q, &p0.q)).unwrap_or_default();
    let d = Draft {
        name: "g0_final",
        formula: "20(q-1)q^5 < (q-1)q^3(q^3+1)",
        relation: "<",
        lhs: 20 * (q - 1) * q.pow(5),
        rhs: ree_order(q),
        conditions,
    };
    finish(d, p, p0, p.in_domain())
}

pub fn check_r3_bound(q: u128) -> Result<BoundCheck> {
    let p = ReeOrder::from_q(q)?;
    Ok(r3(&p))
}

fn r3(p: &ReeOrder) -> BoundCheck {
    let d = Draft {
        name: "r3",
        formula: "28^2 q^3(q-1) + 63^2(q^3-q) + 36^2*6(q+3m+1) < q^3(q^3+1)(q-1)",
        relation: "<",
        lhs: r3_lhs(&p.q, &p.m),
        rhs: ree_order(&p.q),
        conditions: vec![],
    };
    finish(d, p, None, p.in_domain())
}

/// Dispatches on a check name. `q0` is required for `cgi` and optional for `g0_final`.
pub fn check_by_name(name: &str, q: u128, q0: Option<u128>) -> Result<BoundCheck> {
    match (name, q0) {
        ("b1", _) => check_b1_bound(q),
        ("ngm", _) => check_ngm_bound(q),
        ("r3", _) => check_r3_bound(q),
        ("cgi", Some(q0)) => check_cgi_count_bound(q, q0),
        ("cgi", None) => Err(Error::input("cgi needs q0")),
        ("g0_final", Some(q0)) => check_g0_final_bound(q, q0),
        ("g0_final", None) => Ok(g0_final(&ReeOrder::from_q(q)?, None)),
        _ => Err(Error::input(format!(
            "unknown certificate {name:?}; expected one of {}",
            NAMES.join(", ")
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sweep {
    pub n_max: u32,
    pub checks: Vec<BoundCheck>,
    /// Families whose margin failed to grow with `q` inside the domain.
    pub non_monotone: Vec<String>,
}

impl Sweep {
    pub fn passed(&self) -> bool {
        self.non_monotone.is_empty() && self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn asserted(&self) -> usize {
        self.checks.iter().filter(|c| c.in_domain).count()
    }
}

/// Every family for `n = 0..=n_max`, with `cgi` and `g0_final` taken over all
/// subfield orders `q0 = 3^(2n0+1)` with `q = q0^a`, `a` an odd prime.
pub fn sweep(n_max: u32) -> Sweep {
    let mut checks = Vec::new();
    for n in 0..=n_max {
        let p = ReeOrder::from_n(n);
        checks.push(b1(&p));
        checks.push(ngm(&p));
        checks.push(r3(&p));
        checks.push(g0_final(&p, None));
        for n0 in 0..n {
            let p0 = ReeOrder::from_n(n0);
            if subfield_exponent(&p, &p0).is_ok() {
                checks.push(cgi(&p, &p0));
                checks.push(g0_final(&p, Some(&p0)));
            }
        }
    }
    let mut non_monotone = Vec::new();
    for name in ["b1", "ngm", "r3", "g0_final"] {
        let margins: Vec<BigInt> = checks
            .iter()
            .filter(|c| c.name == name && c.in_domain && c.q0.is_none())
            .map(margin)
            .collect();
        if margins.windows(2).any(|w| w[1] < w[0]) {
            non_monotone.push(name.to_string());
        }
    }
    Sweep {
        n_max,
        checks,
        non_monotone,
    }
}

fn margin(c: &BoundCheck) -> BigInt {
    let l: BigInt = c.lhs.parse().expect("decimal");
    let r: BigInt = c.rhs.parse().expect("decimal");
    if c.relation == "<" {
        r - l
    } else {
        l - r
    }
}

/// Expanded forms: `(coefficient, power of the first variable, power of the second)`.
/// The second variable is `m`, or `q0` for `cgi`.
const B1_EXPANDED: &[(i64, u32, u32)] = &[
    (1, 7, 0), (-1, 6, 0), (-1, 5, 0), (-3, 4, 0), (-5, 3, 0), (1, 1, 0),
    (-6, 4, 1), (-18, 3, 1), (-6, 2, 1), (6, 1, 1),
    (-9, 3, 2), (-18, 2, 2), (9, 1, 2),
];
const NGM_EXPANDED: &[(i64, u32, u32)] =
    &[(1, 7, 0), (-1, 6, 0), (-1, 5, 0), (-9, 4, 0), (-20, 3, 0), (6, 2, 0), (10, 1, 0), (-6, 0, 0)];
const R3_EXPANDED: &[(i64, u32, u32)] = &[(784, 4, 0), (3185, 3, 0), (3807, 1, 0), (7776, 0, 0), (23328, 0, 1)];
/// `2 (A - q0^2 (q0-1)^2 (q0+1)^2 / 2)`.
const CGI_EXPANDED: &[(i64, u32, u32)] = &[
    (1, 3, 0), (-1, 1, 4), (-2, 1, 3), (-3, 1, 2), (2, 1, 1), (1, 1, 0),
    (-1, 0, 6), (2, 0, 5), (5, 0, 4), (-2, 0, 3), (-2, 0, 2),
];

fn poly(terms: &[(i64, u32, u32)], u: &BigInt, v: &BigInt) -> BigInt {
    terms.iter().map(|&(c, i, j)| int(c) * u.pow(i) * v.pow(j)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transcription {
    pub name: String,
    pub points: usize,
    pub agrees: bool,
}

/// Compares each transcribed formula with its expanded polynomial on a grid large
/// enough to force equality of polynomials (degree at most 7 in each variable).
pub fn transcription_report() -> Vec<Transcription> {
    let grid: Vec<(BigInt, BigInt)> = (-4i64..=5)
        .flat_map(|a| (-3i64..=4).map(move |b| (int(a), int(b))))
        .collect();
    let check = |name: &str, f: &dyn Fn(&BigInt, &BigInt) -> BigInt, e: &[(i64, u32, u32)]| Transcription {
        name: name.into(),
        points: grid.len(),
        agrees: grid.iter().all(|(u, v)| f(u, v) == poly(e, u, v)),
    };
    vec![
        check("b1", &|q, m| b1_lhs(q, m), B1_EXPANDED),
        check("ngm", &|q, _| ngm_lhs(q), NGM_EXPANDED),
        check("cgi", &|q, q0| cgi_lhs_doubled(q, q0), CGI_EXPANDED),
        check("r3", &|q, m| r3_lhs(q, m), R3_EXPANDED),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions_agree_with_expansions() {
        let r = transcription_report();
        assert_eq!(r.len(), 4);
        assert!(r.iter().all(|t| t.agrees), "{r:?}");
    }

    #[test]
    fn perturbed_expansion_is_detected() {
        let mut wrong = B1_EXPANDED.to_vec();
        wrong[0].0 = 2;
        let (q, m) = (int(2), int(1));
        assert_ne!(b1_lhs(&q, &m), poly(&wrong, &q, &m));
    }

    #[test]
    fn cgi_rhs_is_the_scaled_bound() {
        // 8/9 q^3 - 4 q^2 + q at q = 27 is 17496 - 2916 + 27.
        assert_eq!(cgi_rhs_times18(&int(27)), int(9 * (17496 - 2916 + 27)));
    }

    #[test]
    fn small_q_values() {
        for name in ["b1", "ngm", "r3"] {
            let c = check_by_name(name, 27, None).unwrap();
            assert_eq!(c.verdict, Verdict::Pass, "{c:?}");
            assert_eq!(c.holds, Some(true));
            let c = check_by_name(name, 243, None).unwrap();
            assert_eq!(c.verdict, Verdict::Pass);
        }
        assert_eq!(check_b1_bound(27).unwrap().lhs, b1_lhs(&int(27), &int(3)).to_string());
    }

    #[test]
    fn q3_is_flagged_not_asserted() {
        for name in ["b1", "ngm", "r3", "g0_final"] {
            let c = check_by_name(name, 3, None).unwrap();
            assert!(!c.in_domain);
            assert_eq!(c.holds, None);
            assert_eq!(c.verdict, Verdict::OutOfDomain);
        }
    }

    #[test]
    fn cgi_examples() {
        let c = check_cgi_count_bound(19683, 27).unwrap();
        assert_eq!(c.verdict, Verdict::Pass, "{c:?}");
        let c = check_cgi_count_bound(14348907, 243).unwrap();
        assert_eq!(c.verdict, Verdict::Pass, "{c:?}");
        assert!(check_cgi_count_bound(27, 27).is_err());
        assert!(check_cgi_count_bound(3u128.pow(9), 243).is_err());
    }

    #[test]
    fn g0_final_reduces_to_a_cubic() {
        for n in 1..=6 {
            let q = ReeOrder::from_n(n).q;
            let reduced = 20 * &q * &q < q.pow(3) + 1;
            assert_eq!(g0_final(&ReeOrder::from_n(n), None).relation_holds, reduced);
            assert!(reduced);
        }
        assert_eq!(check_g0_final_bound(19683, 27).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn invalid_q_is_rejected() {
        for q in [0, 1, 9, 10, 81, 54] {
            assert!(check_b1_bound(q).is_err(), "{q}");
        }
        assert!(check_by_name("nope", 27, None).is_err());
        assert!(check_by_name("cgi", 27, None).is_err());
    }

    #[test]
    fn full_sweep_passes() {
        let s = sweep(10);
        assert!(s.passed(), "{:?}", s.checks.iter().filter(|c| c.verdict == Verdict::Fail).collect::<Vec<_>>());
        assert!(s.non_monotone.is_empty());
        let flagged = s.checks.iter().filter(|c| !c.in_domain).count();
        assert_eq!(flagged, 4);
        assert!(s.checks.iter().any(|c| c.name == "cgi" && c.q == "10460353203"));
    }
}
