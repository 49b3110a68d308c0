//! The acceptance battery. Every criterion is deterministic for a fixed seed, so two
//! runs produce identical JSON.

use depthlab::certificates::{sweep, transcription_report, Verdict};
use depthlab::depth::reference::{matrix_depth, naive_comb_depth};
use depthlab::depth::{DepthReport, DepthValue, Inclusion, DEFAULT_MAX_LEVEL};
use depthlab::ngp_table::{build_table, depth_certificate, orthogonality_report, verify_decompositions, ReeParams};
use depthlab::perm::lattice::{maximal_subgroup_classes, subgroup_classes};
use depthlab::perm::{named, ElementSet, IndexedGroup, PermGroup, DEFAULT_CAP};
use depthlab::ree3_model::{build_r3, verify_structure};
use depthlab::ree_sylow::{
    verify_centralizers, verify_p_structure, verify_w_orbits, DiagonalAction, PModel, SylowReport,
};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Debug, Serialize)]
pub struct Criterion {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Sampled pairs for the `q = 27` Sylow checks.
    pub samples: u64,
    pub seed: u64,
    /// Check every `ψ_b^±` at `q = 243` rather than one per family.
    pub full_decompositions: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            samples: 100_000,
            seed: 0,
            full_decompositions: true,
        }
    }
}

fn criterion(id: u32, name: &str, passed: bool, detail: Value) -> Criterion {
    Criterion {
        id,
        name: name.into(),
        passed,
        detail,
    }
}

fn failure(id: u32, name: &str, e: impl std::fmt::Display) -> Criterion {
    criterion(id, name, false, json!({ "error": e.to_string() }))
}

pub fn orthogonality() -> Criterion {
    const NAME: &str = "N_G(P) table at q = 27 satisfies both orthogonality relations";
    match ReeParams::new(1).and_then(|p| orthogonality_report(&p)) {
        Ok(r) => {
            let ok = (r.classes, r.irreducibles, r.conductor) == (34, 34, 156);
            criterion(1, NAME, ok, json!(r))
        }
        Err(e) => failure(1, NAME, e),
    }
}

pub fn decompositions(full: bool) -> Criterion {
    const NAME: &str = "induced decompositions agree classwise and by inner products at q = 27 and 243";
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [1, 2] {
        let all_b = n == 1 || full;
        let r = ReeParams::new(n)
            .and_then(|p| build_table(&p).and_then(|t| verify_decompositions(&p, &t, all_b)));
        match r {
            Ok(c) => {
                let passed = c.passed();
                ok &= passed && c.alpha6_reading_confirmed;
                detail.push(json!({
                    "q": c.q,
                    "rows": c.rows.len(),
                    "all_b": all_b,
                    "passed": passed,
                    "alpha6_reading_confirmed": c.alpha6_reading_confirmed,
                    "alpha2_reading_rejected": c.alpha2_reading_rejected,
                }));
            }
            Err(e) => return failure(2, NAME, e),
        }
    }
    criterion(2, NAME, ok, Value::from(detail))
}

pub const DEPTH_WITNESS: &str = "all distances \u{2264}2; m(1_G)=2";

pub fn depth_certificates() -> Criterion {
    const NAME: &str = "d(N_G(P), G) = 5 for q = 27 and 243";
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [1, 2] {
        match ReeParams::new(n).and_then(|p| depth_certificate(&p)) {
            Ok(c) => {
                ok &= c.depth == 5 && c.witness == DEPTH_WITNESS;
                detail.push(json!(c));
            }
            Err(e) => return failure(3, NAME, e),
        }
    }
    criterion(3, NAME, ok, Value::from(detail))
}

fn counts(r: &SylowReport) -> Value {
    r.checks
        .iter()
        .map(|c| (c.name.clone(), json!([c.checked, c.mismatches])))
        .collect::<serde_json::Map<_, _>>()
        .into()
}

pub fn sylow(samples: u64, seed: u64) -> Criterion {
    const NAME: &str = "Sylow 3-subgroup laws, centralizer check and W-orbits";
    let run = || -> depthlab::Result<(bool, Value)> {
        let p3 = PModel::new(0)?;
        let ex = verify_p_structure(&p3, true, 0, seed);
        let checked = |name: &str| ex.check(name).map_or(0, |c| c.checked);
        let ex_counts = [checked("inverse_of_product"), checked("closed_inverse"), checked("closed_conjugation")];
        let lemma = verify_centralizers(&p3, true, 0, 0, seed);

        let p27 = PModel::new(1)?;
        let sampled = verify_p_structure(&p27, false, samples, seed);
        let zero_mismatch = sampled.checks.iter().all(|c| c.mismatches == 0);
        let (orbits, summary) =
            verify_w_orbits(&p27, &DiagonalAction, p27.field.primitive_element(), 10_000, seed)?;
        let mut quotient = summary.derived_quotient_orbit_sizes.clone();
        quotient.sort_unstable();
        let fixed = summary.abelianization_orbit_sizes.iter().filter(|&&n| n == 1).count();

        let ok = ex.passed()
            && ex_counts == [729, 27, 729]
            && lemma.passed()
            && sampled.passed()
            && zero_mismatch
            && sampled.check("inverse_of_product").map(|c| c.checked) == Some(samples)
            && orbits.passed()
            && quotient == [1, 13, 13]
            && summary.center_orbit_sizes == [26]
            && fixed == 1;
        Ok((
            ok,
            json!({
                "exhaustive_q3": counts(&ex),
                "centralizer_q3": counts(&lemma),
                "sampled_q27": counts(&sampled),
                "orbits_q27": summary,
                "orbit_checks_q27": counts(&orbits),
            }),
        ))
    };
    match run() {
        Ok((ok, detail)) => criterion(4, NAME, ok, detail),
        Err(e) => failure(4, NAME, e),
    }
}

pub fn r3_props() -> Criterion {
    const NAME: &str = "R(3) structure and its 2-transitive degree-28 action";
    match build_r3() {
        Ok(r) => {
            let rep = verify_structure(&r);
            let stab: Vec<usize> = rep.coset_action.three_point_stabilizers.keys().copied().collect();
            let ok = rep.passed() && rep.coset_action.two_transitive && stab == [1, 2];
            criterion(5, NAME, ok, json!(rep))
        }
        Err(e) => failure(5, NAME, e),
    }
}

/// A named subgroup inside a materialized group.
pub struct CorpusCase {
    pub name: String,
    pub group: IndexedGroup,
    pub sub: ElementSet,
}

fn classes_of(name: &str, g: &PermGroup) -> depthlab::Result<Vec<CorpusCase>> {
    let ig = IndexedGroup::new(g, DEFAULT_CAP)?;
    Ok(subgroup_classes(&ig)
        .into_iter()
        .map(|c| CorpusCase {
            name: format!("{name} order {} ({} conjugates)", c.order, c.class_size),
            group: ig.clone(),
            sub: c.rep,
        })
        .collect())
}

/// Every subgroup class of S4, D8 and A5, and the maximal subgroups of PΓL(2,8).
pub fn depth_corpus() -> depthlab::Result<Vec<CorpusCase>> {
    let mut v = classes_of("S4", &named::symmetric(4))?;
    v.extend(classes_of("D8", &named::dihedral(4))?);
    v.extend(classes_of("A5", &named::alternating(5))?);
    let r = build_r3()?;
    for c in maximal_subgroup_classes(&r.indexed) {
        v.push(CorpusCase {
            name: format!("PGammaL(2,8) order {}", c.order),
            group: r.indexed.clone(),
            sub: c.rep,
        });
    }
    Ok(v)
}

/// Groups at most this large are also checked by literal tuple enumeration.
const NAIVE_LIMIT: usize = 200;

pub fn depth_oracles() -> Criterion {
    const NAME: &str = "depth algorithms agree with independent oracles";
    let cases = match depth_corpus() {
        Ok(c) => c,
        Err(e) => return failure(6, NAME, e),
    };
    let mut rows = Vec::new();
    let mut ok = cases.len() >= 20;
    for case in &cases {
        let inc = Inclusion {
            group: case.group.clone(),
            sub: case.sub.clone(),
        };
        let r = match DepthReport::compute(&inc, DEFAULT_MAX_LEVEL) {
            Ok(r) => r,
            Err(e) => return failure(6, NAME, format!("{}: {e}", case.name)),
        };
        let (dc, d) = (r.dc.value(), r.d.value());
        let matrix = inc.multiplicities().ok().and_then(|m| matrix_depth(&m, 40));
        let naive = (case.group.len() <= NAIVE_LIMIT).then(|| naive_comb_depth(&case.group, &case.sub, 20));
        let case_ok = dc.is_some()
            && d.is_some()
            && (dc <= Some(2)) == r.normal
            && (d <= Some(2)) == r.normal
            && d <= dc
            && d <= Some(r.core_bound.bound)
            && matrix == d
            && naive.is_none_or(|n| n.map(DepthValue::Exact) == Some(r.dc));
        ok &= case_ok;
        rows.push(json!({
            "case": case.name,
            "dc": r.dc,
            "d": r.d,
            "core_bound": r.core_bound.bound,
            "matrix_oracle": matrix,
            "tuple_oracle": naive.flatten(),
            "ok": case_ok,
        }));
    }
    criterion(6, NAME, ok, json!({ "inclusions": rows.len(), "cases": rows }))
}

pub fn certificates() -> Criterion {
    const NAME: &str = "counting inequalities hold for n = 1..10 and formulas match their expansions";
    let s = sweep(10);
    let t = transcription_report();
    let q3_flagged = s
        .checks
        .iter()
        .filter(|c| c.q == "3")
        .all(|c| c.verdict == Verdict::OutOfDomain);
    let in_domain_pass = s
        .checks
        .iter()
        .filter(|c| c.in_domain)
        .all(|c| c.verdict == Verdict::Pass);
    let ok = s.passed() && q3_flagged && in_domain_pass && t.iter().all(|x| x.agrees);
    criterion(
        7,
        NAME,
        ok,
        json!({
            "checks": s.checks.len(),
            "asserted": s.asserted(),
            "q3_out_of_domain": q3_flagged,
            "non_monotone": s.non_monotone,
            "transcription": t,
        }),
    )
}

pub fn run_suite(o: &SuiteOptions) -> Vec<Criterion> {
    vec![
        orthogonality(),
        decompositions(o.full_decompositions),
        depth_certificates(),
        sylow(o.samples, o.seed),
        r3_props(),
        depth_oracles(),
        certificates(),
    ]
}
