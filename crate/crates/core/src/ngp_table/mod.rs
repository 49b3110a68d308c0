//! The parametrized character table of the Sylow 3-normalizer `N_G(P)` in `R(q)`,
//! the restrictions of four induced characters, their decompositions, and the
//! resulting ordinary depth certificate.

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::chars::{inner_product, Accumulator, CharacterTable, Cyclotomic, CyclotomicJson, Rat, TableClass};
use crate::depth::{ord_depth_from_relations, OrdDepth, RelationData};
use crate::error::{Error, Result};

/// `q = 3^(2n+1)`, `m = 3^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReeParams {
    pub n: u32,
    pub m: i128,
    pub q: i128,
}

impl ReeParams {
    pub fn new(n: u32) -> Result<Self> {
        if !(1..=6).contains(&n) {
            return Err(Error::input("the table needs 1 <= n <= 6"));
        }
        let m = 3i128.pow(n);
        Ok(ReeParams { n, m, q: 3 * m * m })
    }

    /// Number of values taken by the indices `a` and `b`, namely `(q-3)/2`.
    pub fn k(&self) -> usize {
        ((self.q - 3) / 2) as usize
    }

    /// `(q-1)/2`, the order of `ε`.
    pub fn w_odd(&self) -> u32 {
        ((self.q - 1) / 2) as u32
    }

    pub fn conductor(&self) -> u32 {
        12u32.lcm(&self.w_odd())
    }

    pub fn group_order(&self) -> i128 {
        self.q.pow(3) * (self.q - 1)
    }

    pub fn num_classes(&self) -> usize {
        self.q as usize + 7
    }
}

/// Column labels in table order.
pub fn class_labels(p: &ReeParams) -> Vec<String> {
    let mut v: Vec<String> = ["1", "X", "Y", "T", "T^-1", "YT", "YT^-1", "JT", "JT^-1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    v.extend((1..=p.k()).map(|a| format!("R^{a}")));
    v.extend((1..=p.k()).map(|a| format!("JR^{a}")));
    v.push("J".into());
    v
}

/// Row labels in table order.
pub fn character_labels(p: &ReeParams) -> Vec<String> {
    let mut v = vec!["1".to_string(), "Delta".to_string()];
    v.extend((1..=p.k()).map(|b| format!("psi+_{b}")));
    v.extend((1..=p.k()).map(|b| format!("psi-_{b}")));
    v.extend((1..=8).map(|i| format!("alpha_{i}")));
    v
}

/// Row index of `α_i` (1-based `i`).
pub fn alpha_row(p: &ReeParams, i: usize) -> usize {
    2 + 2 * p.k() + i - 1
}

pub fn class_sizes(p: &ReeParams) -> Vec<i128> {
    let q = p.q;
    let mut v = vec![
        1,
        q - 1,
        q * q * (q - 1) / 3,
        q * (q - 1) / 2,
        q * (q - 1) / 2,
        q * q * (q - 1) / 3,
        q * q * (q - 1) / 3,
        q * q * (q - 1) / 2,
        q * q * (q - 1) / 2,
    ];
    v.extend(std::iter::repeat_n(q.pow(3), 2 * p.k()));
    v.push(q * q);
    v
}

fn element_orders(p: &ReeParams) -> Vec<u64> {
    let mut v = vec![1, 3, 9, 3, 3, 9, 9, 6, 6];
    let w = p.w_odd() as u64;
    for _ in 0..2 {
        for a in 1..=p.k() as u64 {
            v.push(w / w.gcd(&a));
        }
    }
    let len = v.len();
    for o in &mut v[len - p.k()..] {
        *o *= 2;
    }
    v.push(2);
    v
}

struct Consts {
    n: u32,
    zeta: Cyclotomic,
    xi: Cyclotomic,
}

impl Consts {
    fn new(p: &ReeParams) -> Self {
        let n = p.conductor();
        let z6 = Cyclotomic::root_of_unity(n, (n / 6) as i64);
        let one = Cyclotomic::one(n);
        // i√3 = 2ζ₆ − 1
        let i_sqrt3 = &z6.scale(Rat::from_integer(2)) - &one;
        Consts {
            n,
            zeta: &one + &i_sqrt3.scale(Rat::from_integer(p.m)),
            xi: z6.scale(Rat::from_integer(p.m)),
        }
    }

    fn int(&self, v: i128) -> Cyclotomic {
        Cyclotomic::integer(self.n, v)
    }

    fn rat(&self, a: i128, b: i128) -> Cyclotomic {
        Cyclotomic::rational(self.n, Rat::new(a, b))
    }

    fn eps(&self, p: &ReeParams, e: usize) -> Cyclotomic {
        let step = (self.n / p.w_odd()) as i64;
        Cyclotomic::root_of_unity(self.n, step * e as i64)
    }
}

/// Builds a row from the nine leading entries, a function of `a` for the two families,
/// and the value at `J`.
fn row(
    p: &ReeParams,
    head: [Cyclotomic; 9],
    r: impl Fn(usize) -> Cyclotomic,
    jr: impl Fn(usize) -> Cyclotomic,
    j: Cyclotomic,
) -> Vec<Cyclotomic> {
    let mut v: Vec<Cyclotomic> = head.into_iter().collect();
    v.extend((1..=p.k()).map(&r));
    v.extend((1..=p.k()).map(&jr));
    v.push(j);
    v
}

/// All `q + 7` rows, unvalidated.
pub fn table_rows(p: &ReeParams) -> Vec<Vec<Cyclotomic>> {
    let c = Consts::new(p);
    let (q, m) = (p.q, p.m);
    let one = c.int(1);
    let neg = c.int(-1);
    let zero = c.int(0);
    let zb = c.zeta.conj();
    let xb = c.xi.conj();
    let s = |x: &Cyclotomic, a: i128, b: i128| x.scale(Rat::new(a, b));

    let mut rows = Vec::with_capacity(p.num_classes());
    let ones = || std::array::from_fn::<Cyclotomic, 9, _>(|_| one.clone());
    let delta_head = || std::array::from_fn::<Cyclotomic, 9, _>(|i| if i >= 7 { neg.clone() } else { one.clone() });
    rows.push(row(p, ones(), |_| one.clone(), |_| one.clone(), one.clone()));
    rows.push(row(p, delta_head(), |_| one.clone(), |_| neg.clone(), neg.clone()));
    for b in 1..=p.k() {
        rows.push(row(p, ones(), |a| c.eps(p, a * b), |a| c.eps(p, a * b), one.clone()));
    }
    for b in 1..=p.k() {
        rows.push(row(
            p,
            delta_head(),
            |a| c.eps(p, a * b),
            |a| -&c.eps(p, a * b),
            neg.clone(),
        ));
    }
    let zeros = |_| zero.clone();
    let qm1 = c.int(q - 1);
    rows.push(row(
        p,
        [qm1.clone(), qm1.clone(), neg.clone(), qm1.clone(), qm1, neg.clone(), neg.clone(), zero.clone(), zero.clone()],
        zeros,
        zeros,
        zero.clone(),
    ));
    rows.push(row(
        p,
        [
            c.int((q - 1) * q),
            c.int(-q),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        zeros,
        zeros,
        zero.clone(),
    ));
    let mq = c.int(m * (q - 1));
    rows.push(row(
        p,
        [mq.clone(), mq.clone(), c.int(-m), s(&zb, -m, 1), s(&c.zeta, -m, 1), c.xi.clone(), xb.clone(), zero.clone(), zero.clone()],
        zeros,
        zeros,
        zero.clone(),
    ));
    rows.push(row(
        p,
        [mq.clone(), mq, c.int(-m), s(&c.zeta, -m, 1), s(&zb, -m, 1), xb.clone(), c.xi.clone(), zero.clone(), zero.clone()],
        zeros,
        zeros,
        zero.clone(),
    ));
    let half_deg = c.rat(m * (q - 1), 2);
    let jv = c.rat(q - 1, 2);
    // α₅..α₈: (first, second) are the T/T⁻¹ conjugate pair, `sign` flips JT and J.
    for (first, second, xi_first, sign) in [
        (&zb, &c.zeta, &c.xi, 1),
        (&zb, &c.zeta, &c.xi, -1),
        (&c.zeta, &zb, &xb, 1),
        (&c.zeta, &zb, &xb, -1),
    ] {
        let xi_second = xi_first.conj();
        rows.push(row(
            p,
            [
                half_deg.clone(),
                half_deg.clone(),
                c.int(m),
                s(first, -m, 2),
                s(second, -m, 2),
                -xi_first,
                -&xi_second,
                s(first, -sign, 2),
                s(second, -sign, 2),
            ],
            zeros,
            zeros,
            jv.scale(Rat::from_integer(sign)),
        ));
    }
    rows
}

/// The table with both orthogonality relations checked exactly.
pub fn build_table(p: &ReeParams) -> Result<CharacterTable> {
    let table = CharacterTable {
        group_order: p.group_order() as u128,
        classes: class_sizes(p)
            .into_iter()
            .zip(element_orders(p))
            .map(|(size, rep_order)| TableClass {
                size: size as u128,
                rep_order,
            })
            .collect(),
        irreducibles: table_rows(p),
    };
    check_orthogonality(&table).map_err(|e| Error::Inconsistency(format!("N_G(P) table for q = {}: {e}", p.q)))?;
    Ok(table)
}

#[derive(Clone, Debug, Serialize)]
pub struct OrthogonalityReport {
    pub q: i128,
    pub classes: usize,
    pub irreducibles: usize,
    pub conductor: u32,
    pub class_size_sum: String,
    pub degree_square_sum: String,
    pub row_pairs_checked: usize,
    pub column_pairs_checked: usize,
}

/// Both orthogonality relations, in parallel over rows and columns.
pub fn check_orthogonality(t: &CharacterTable) -> std::result::Result<OrthogonalityReport, String> {
    let r = t.num_classes();
    if t.irreducibles.len() != r || t.irreducibles.iter().any(|row| row.len() != r) {
        return Err("table is not square".into());
    }
    let sizes = t.sizes();
    let order = t.group_order as i128;
    let size_sum: u128 = sizes.iter().sum();
    if size_sum != t.group_order {
        return Err(format!("class sizes sum to {size_sum}"));
    }
    let degrees = t.degrees();
    let sq: i128 = degrees.iter().map(|d| d * d).sum();
    if degrees.iter().any(|&d| d <= 0) || sq != order {
        return Err(format!("squared degrees sum to {sq}"));
    }
    let conj: Vec<Vec<Cyclotomic>> = t
        .irreducibles
        .par_iter()
        .map(|row| row.iter().map(Cyclotomic::conj).collect())
        .collect();
    let n = t
        .irreducibles
        .iter()
        .flatten()
        .fold(1u32, |acc, c| acc.lcm(&c.conductor()));

    let row_bad = (0..r).into_par_iter().find_map_first(|i| {
        for j in i..r {
            let mut acc = Accumulator::new(n);
            for k in 0..r {
                acc.add_product(&t.irreducibles[i][k], &conj[j][k], Rat::from_integer(sizes[k] as i128));
            }
            let want = if i == j { order } else { 0 };
            if acc.finish().as_integer() != Some(want) {
                return Some(format!("rows {i} and {j}"));
            }
        }
        None
    });
    if let Some(e) = row_bad {
        return Err(format!("row orthogonality fails for {e}"));
    }
    let col_bad = (0..r).into_par_iter().find_map_first(|k| {
        for l in k..r {
            let mut acc = Accumulator::new(n);
            for i in 0..r {
                acc.add_product(&t.irreducibles[i][k], &conj[i][l], Rat::from_integer(1));
            }
            let want = if k == l {
                Rat::new(order, sizes[k] as i128)
            } else {
                Rat::from_integer(0)
            };
            if acc.finish().as_rational() != Some(want) {
                return Some(format!("columns {k} and {l}"));
            }
        }
        None
    });
    if let Some(e) = col_bad {
        return Err(format!("column orthogonality fails for {e}"));
    }
    Ok(OrthogonalityReport {
        q: 0,
        classes: r,
        irreducibles: t.irreducibles.len(),
        conductor: n,
        class_size_sum: size_sum.to_string(),
        degree_square_sum: sq.to_string(),
        row_pairs_checked: r * (r + 1) / 2,
        column_pairs_checked: r * (r + 1) / 2,
    })
}

pub fn orthogonality_report(p: &ReeParams) -> Result<OrthogonalityReport> {
    let t = CharacterTable {
        group_order: p.group_order() as u128,
        classes: class_sizes(p)
            .into_iter()
            .map(|size| TableClass {
                size: size as u128,
                rep_order: 0,
            })
            .collect(),
        irreducibles: table_rows(p),
    };
    let mut r = check_orthogonality(&t).map_err(Error::Inconsistency)?;
    r.q = p.q;
    Ok(r)
}

/// Which of the four source characters an induced row comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    Trivial,
    Delta,
    PsiPlus(usize),
    PsiMinus(usize),
}

impl Source {
    pub fn row(&self, p: &ReeParams) -> usize {
        match *self {
            Source::Trivial => 0,
            Source::Delta => 1,
            Source::PsiPlus(b) => 1 + b,
            Source::PsiMinus(b) => 1 + p.k() + b,
        }
    }

    /// Whether the source is `1` or `ψ⁺` (as opposed to `Δ` or `ψ⁻`).
    fn plus_type(&self) -> bool {
        matches!(self, Source::Trivial | Source::PsiPlus(_))
    }

    pub fn label(&self) -> String {
        match self {
            Source::Trivial => "1".into(),
            Source::Delta => "Delta".into(),
            Source::PsiPlus(b) => format!("psi+_{b}"),
            Source::PsiMinus(b) => format!("psi-_{b}"),
        }
    }
}

pub fn sources(p: &ReeParams) -> Vec<Source> {
    let mut v = vec![Source::Trivial, Source::Delta];
    v.extend((1..=p.k()).map(Source::PsiPlus));
    v.extend((1..=p.k()).map(Source::PsiMinus));
    v
}

/// Values of the induced-then-restricted character on the classes of `N_G(P)`.
pub fn induced_row(p: &ReeParams, s: Source) -> Vec<Cyclotomic> {
    let c = Consts::new(p);
    let q = p.q;
    let sign = if s.plus_type() { 1 } else { -1 };
    let b = match s {
        Source::PsiPlus(b) | Source::PsiMinus(b) => b,
        _ => 0,
    };
    let mut head: [Cyclotomic; 9] = std::array::from_fn(|_| c.int(1));
    head[0] = c.int(q.pow(3) + 1);
    head[7] = c.int(sign);
    head[8] = c.int(sign);
    row(
        p,
        head,
        |a| c.eps(p, a * b).scale(Rat::from_integer(2)),
        |a| c.eps(p, a * b).scale(Rat::from_integer(2 * sign)),
        c.int(sign * (q + 1)),
    )
}

/// Claimed coefficients: 2 on the source, then `α₁ … α₈`.
pub fn claimed_alpha_coefficients(p: &ReeParams, s: Source) -> [i128; 8] {
    let (m, q) = (p.m, p.q);
    let (hi, lo) = ((m + 1) / 2, (m - 1) / 2);
    let tail = if s.plus_type() { [hi, lo, hi, lo] } else { [lo, hi, lo, hi] };
    [1, q, m, m, tail[0], tail[1], tail[2], tail[3]]
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionRow {
    pub source: String,
    pub self_coefficient: i128,
    pub alpha_coefficients: [i128; 8],
    /// Claimed combination evaluated on every class agrees with the induced values.
    pub classwise_ok: bool,
    /// Each coefficient recomputed as an inner product agrees with the claim.
    pub inner_product_ok: bool,
    /// Recomputed multiplicities of the other linear characters, all zero.
    pub other_linear_zero: bool,
    pub degree_ok: bool,
    pub norm: i128,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionCert {
    pub q: i128,
    pub m: i128,
    pub rows: Vec<DecompositionRow>,
    /// The sixth coefficient of the trivial row read as `α₆`, confirmed both ways.
    pub alpha6_reading_confirmed: bool,
    /// The alternative `α₂` reading (adding `(m-1)/2` to `α₂` and dropping `α₆`) fails.
    pub alpha2_reading_rejected: bool,
}

impl DecompositionCert {
    pub fn passed(&self) -> bool {
        self.alpha6_reading_confirmed
            && self.alpha2_reading_rejected
            && self
                .rows
                .iter()
                .all(|r| r.classwise_ok && r.inner_product_ok && r.other_linear_zero && r.degree_ok)
    }
}

fn combination(table: &[Vec<Cyclotomic>], terms: &[(usize, i128)], classes: usize) -> Vec<Cyclotomic> {
    (0..classes)
        .map(|k| {
            let mut acc = Accumulator::for_values(terms.iter().map(|&(r, _)| &table[r][k]));
            for &(r, c) in terms {
                acc.add(&table[r][k], Rat::from_integer(c));
            }
            acc.finish()
        })
        .collect()
}

/// Checks the four decomposition families two ways. With `all_b` every `ψ_b^±` is
/// checked, otherwise `b = 1` stands in for each family.
pub fn verify_decompositions(p: &ReeParams, table: &CharacterTable, all_b: bool) -> Result<DecompositionCert> {
    let rows = &table.irreducibles;
    let r = table.num_classes();
    let sizes = table.sizes();
    let order = table.group_order;
    let chosen: Vec<Source> = sources(p)
        .into_iter()
        .filter(|s| all_b || matches!(s, Source::Trivial | Source::Delta | Source::PsiPlus(1) | Source::PsiMinus(1)))
        .collect();

    let results: Vec<Result<DecompositionRow>> = chosen
        .par_iter()
        .map(|&s| {
            let induced = induced_row(p, s);
            let alphas = claimed_alpha_coefficients(p, s);
            let mut terms = vec![(s.row(p), 2i128)];
            terms.extend(alphas.iter().enumerate().map(|(i, &c)| (alpha_row(p, i + 1), c)));
            let classwise_ok = combination(rows, &terms, r) == induced;

            let mut inner_product_ok = true;
            let mut other_linear_zero = true;
            for (idx, chi) in rows.iter().enumerate() {
                let ip = inner_product(&induced, chi, &sizes, order);
                let got = ip
                    .as_integer()
                    .ok_or_else(|| Error::Inconsistency(format!("<{}, row {idx}> = {ip} is not an integer", s.label())))?;
                let want = terms.iter().find(|t| t.0 == idx).map_or(0, |t| t.1);
                if got != want {
                    if idx < alpha_row(p, 1) {
                        other_linear_zero = false;
                    } else {
                        inner_product_ok = false;
                    }
                }
            }
            let degree: i128 = terms.iter().map(|&(row, c)| c * rows[row][0].as_integer().unwrap()).sum();
            let norm = inner_product(&induced, &induced, &sizes, order)
                .as_integer()
                .ok_or_else(|| Error::Inconsistency("norm of an induced row is not an integer".into()))?;
            Ok(DecompositionRow {
                source: s.label(),
                self_coefficient: 2,
                alpha_coefficients: alphas,
                classwise_ok,
                inner_product_ok,
                other_linear_zero,
                degree_ok: degree == p.q.pow(3) + 1,
                norm,
            })
        })
        .collect();
    let rows_out = results.into_iter().collect::<Result<Vec<_>>>()?;

    // Alternative reading of the trivial-source coefficients: `(m-1)/2` moved onto `α₂`.
    let (m, q) = (p.m, p.q);
    let literal = [
        (0usize, 2i128),
        (alpha_row(p, 1), 1),
        (alpha_row(p, 2), q + (m - 1) / 2),
        (alpha_row(p, 3), m),
        (alpha_row(p, 4), m),
        (alpha_row(p, 5), (m + 1) / 2),
        (alpha_row(p, 7), (m + 1) / 2),
        (alpha_row(p, 8), (m - 1) / 2),
    ];
    let trivial_induced = induced_row(p, Source::Trivial);
    let literal_classwise = combination(rows, &literal, r) == trivial_induced;
    let a6 = inner_product(&trivial_induced, &rows[alpha_row(p, 6)], &sizes, order).as_integer();
    let a2 = inner_product(&trivial_induced, &rows[alpha_row(p, 2)], &sizes, order).as_integer();
    let first = &rows_out[0];
    let alpha6_reading_confirmed =
        first.classwise_ok && first.inner_product_ok && a6 == Some((m - 1) / 2) && a2 == Some(q);
    let alpha2_reading_rejected = !literal_classwise && a2 != Some(q + (m - 1) / 2);

    Ok(DecompositionCert {
        q,
        m,
        rows: rows_out,
        alpha6_reading_confirmed,
        alpha2_reading_rejected,
    })
}

/// Relation data derived from the four decomposition families: each of `1, Δ, ψ_b^±`
/// is joined to every `α_i` with a nonzero coefficient, and those rows are complete.
pub fn relation_data(p: &ReeParams) -> RelationData {
    let mut edges = Vec::new();
    let mut complete_vertices = Vec::new();
    for s in sources(p) {
        let v = s.row(p);
        complete_vertices.push(v);
        for (i, &c) in claimed_alpha_coefficients(p, s).iter().enumerate() {
            if c != 0 {
                edges.push((v, alpha_row(p, i + 1)));
            }
        }
    }
    RelationData {
        num_irr_h: p.num_classes(),
        edges,
        complete_vertices,
        // 1_G restricts to the trivial character of N_G(P).
        restrictions: vec![vec![0]],
        complete: false,
        normal: Some(false),
        depth_one: Some(false),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DepthCertificate {
    pub q: i128,
    #[serde(rename = "d")]
    pub depth: u32,
    pub witness: String,
    pub max_distance_upper: Option<u32>,
    pub m_trivial_lower: u32,
    pub distance_trivial_delta: u32,
    pub edges: usize,
}

/// `d(N_G(P), G)` from the partial relation graph.
pub fn depth_certificate(p: &ReeParams) -> Result<DepthCertificate> {
    depth_from_relations(p, &relation_data(p))
}

pub fn depth_from_relations(p: &ReeParams, data: &RelationData) -> Result<DepthCertificate> {
    let r: OrdDepth = ord_depth_from_relations(data)?;
    let depth = r.exact()?;
    let m_trivial_lower = r.distance_lower.iter().map(|row| row[0]).max().unwrap_or(0);
    let max_upper = r.max_distance;
    let witness = format!(
        "all distances \u{2264}{}; m(1_G)={}",
        max_upper.map_or("?".into(), |d| d.to_string()),
        m_trivial_lower
    );
    Ok(DepthCertificate {
        q: p.q,
        depth,
        witness,
        max_distance_upper: max_upper,
        m_trivial_lower,
        distance_trivial_delta: r.distances[0][1].unwrap_or(0),
        edges: data.edges.len(),
    })
}

/// Table exported in the character-table JSON format.
pub fn table_json(table: &CharacterTable) -> crate::chars::CharacterTableJson {
    table.to_json()
}

/// A single entry as JSON, for reports.
pub fn entry_json(c: &Cyclotomic) -> CyclotomicJson {
    CyclotomicJson::from(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_sizes_q27() {
        let p = ReeParams::new(1).unwrap();
        assert_eq!(p.conductor(), 156);
        assert_eq!(class_labels(&p).len(), 34);
        assert_eq!(character_labels(&p).len(), 34);
        assert_eq!(class_sizes(&p).iter().sum::<i128>(), 511_758);
        let c = Consts::new(&p);
        assert_eq!(c.xi, Cyclotomic::root_of_unity(156, 26).scale(Rat::from_integer(3)));
        // ζ ζ̄ = 1 + 3m²
        assert_eq!((&c.zeta * &c.zeta.conj()).as_integer(), Some(1 + 3 * 9));
    }

    #[test]
    fn induced_values_q27() {
        let p = ReeParams::new(1).unwrap();
        let one = induced_row(&p, Source::Trivial);
        assert_eq!(one[0].as_integer(), Some(19_684));
        let delta = induced_row(&p, Source::Delta);
        assert_eq!(delta.last().unwrap().as_integer(), Some(-28));
        assert_eq!(induced_row(&p, Source::PsiPlus(3))[1].as_integer(), Some(1));
    }

    #[test]
    fn claimed_coefficients_q27() {
        let p = ReeParams::new(1).unwrap();
        assert_eq!(claimed_alpha_coefficients(&p, Source::Trivial), [1, 27, 3, 3, 2, 1, 2, 1]);
    }
}
