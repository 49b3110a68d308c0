//! Command runners behind the `depthlab` binary.

pub mod args;
pub mod report;
pub mod suite;

use std::path::Path;
use std::time::Instant;

use depthlab::certificates::{check_by_name, sweep, transcription_report, Verdict};
use depthlab::chars::{dixon_table, CharacterTable};
use depthlab::depth::{Inclusion, DEFAULT_MAX_LEVEL};
use depthlab::ngp_table::{
    build_table, depth_certificate, entry_json, induced_row, orthogonality_report, sources, verify_decompositions,
    ReeParams,
};
use depthlab::perm::io::GroupFile;
use depthlab::perm::{PermGroup, Subgroup, DEFAULT_CAP};
use depthlab::ree3_model::{build_r3, r3_depth_survey, verify_structure};
use depthlab::ree_sylow::{
    verify_centralizers, verify_p_structure, verify_w_orbits, DiagonalAction, PModel, ProductLaw,
};
use depthlab::Error;
use serde_json::{json, Map, Value};

use args::{CertArgs, CharsArgs, Cli, Command, Law, NgpArgs, NgpCheck, Pair, R3Check, ReeCommand, SylowArgs};
pub use report::{payload, Outcome, RunReport};

pub const CAP_ENV: &str = "DEPTHLAB_CAP";

/// Exit code for usage and input errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit code for failed checks and computational errors.
pub const EXIT_FAIL: i32 = 1;

/// A finished command: the report, a one-line summary, and the exit code.
pub struct Execution {
    pub report: RunReport,
    pub summary: String,
    pub exit_code: i32,
}

/// Materialization cap, overridable through `DEPTHLAB_CAP`.
pub fn cap_from_env() -> depthlab::Result<usize> {
    match std::env::var(CAP_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("{CAP_ENV} must be a positive integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Io(_) | Error::Json(_) => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Input(_) => "input",
        Error::Capacity { .. } => "capacity",
        Error::Inconsistency(_) => "inconsistency",
        Error::ActionInvalid(_) => "action-invalid",
        Error::Indeterminate(_) => "indeterminate",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

/// What a runner hands back before bookkeeping is attached.
struct Done {
    outcome: Outcome,
    payload: Map<String, Value>,
    summary: String,
}

type Inputs = Map<String, Value>;

pub fn execute(cli: &Cli) -> Execution {
    let start = Instant::now();
    let (name, inputs) = describe(&cli.command);
    let result = cap_from_env().and_then(|cap| dispatch(cli, cap));
    let elapsed_ms = cli.timings.then(|| start.elapsed().as_millis() as u64);
    let (outcome, payload, summary, exit_code) = match result {
        Ok(d) => {
            let code = if d.outcome == Outcome::Fail { EXIT_FAIL } else { 0 };
            (d.outcome, d.payload, d.summary, code)
        }
        Err(e) => {
            let p = Map::from_iter([
                ("error".to_string(), Value::from(e.to_string())),
                ("error_kind".to_string(), Value::from(error_kind(&e))),
            ]);
            (Outcome::Error, p, format!("error: {e}"), exit_code_for(&e))
        }
    };
    Execution {
        report: RunReport {
            command: name,
            inputs,
            outcome,
            seed: cli.seed,
            elapsed_ms,
            payload,
        },
        summary,
        exit_code,
    }
}

fn path_value(p: &Option<std::path::PathBuf>) -> Value {
    p.as_ref().map_or(Value::Null, |p| Value::from(p.display().to_string()))
}

fn describe(cmd: &Command) -> (String, Inputs) {
    let pair = |p: &Pair| {
        Map::from_iter([
            ("group".to_string(), path_value(&p.group)),
            ("subgroup".to_string(), Value::from(p.subgroup.display().to_string())),
        ])
    };
    let obj = |v: Value| match v {
        Value::Object(m) => m,
        _ => Map::new(),
    };
    match cmd {
        Command::Dc(p) => ("dc".into(), pair(p)),
        Command::Od(p) => ("od".into(), pair(p)),
        Command::CoreBound(p) => ("core-bound".into(), pair(p)),
        Command::Chars(a) => (
            "chars".into(),
            obj(json!({"group": path_value(&a.group), "table": path_value(&a.table)})),
        ),
        Command::Ree { command } => match command {
            ReeCommand::VerifySylow(a) => (
                "ree verify-sylow".into(),
                obj(json!({"n": a.n, "exhaustive": a.exhaustive, "samples": a.samples, "law": law_name(a.law)})),
            ),
            ReeCommand::Ngp(a) => (
                "ree ngp".into(),
                obj(json!({"n": a.n, "check": format!("{:?}", a.check).to_lowercase()})),
            ),
            ReeCommand::R3(a) => ("ree r3".into(), obj(json!({"check": format!("{:?}", a.check).to_lowercase()}))),
        },
        Command::Cert(a) => (
            "cert".into(),
            if a.all {
                obj(json!({"all": true, "n_max": a.n_max}))
            } else {
                obj(json!({"name": a.name, "q": a.q.map(|q| q.to_string()), "q0": a.q0.map(|q| q.to_string())}))
            },
        ),
        Command::Suite(a) => ("suite".into(), obj(json!({"samples": a.samples}))),
    }
}

fn law_name(l: Law) -> &'static str {
    match l {
        Law::Nominal => "nominal",
        Law::Associative => "associative",
    }
}

fn dispatch(cli: &Cli, cap: usize) -> depthlab::Result<Done> {
    match &cli.command {
        Command::Dc(p) => run_dc(p, cap),
        Command::Od(p) => run_od(p, cap),
        Command::CoreBound(p) => run_core_bound(p, cap),
        Command::Chars(a) => run_chars(a, cap),
        Command::Ree { command } => match command {
            ReeCommand::VerifySylow(a) => run_sylow(a, cli.seed),
            ReeCommand::Ngp(a) => run_ngp(a),
            ReeCommand::R3(a) => run_r3(a.check),
        },
        Command::Cert(a) => run_cert(a),
        Command::Suite(a) => {
            let s = suite::run_suite(&suite::SuiteOptions {
                samples: a.samples,
                seed: cli.seed,
                full_decompositions: false,
            });
            let passed = s.iter().filter(|c| c.passed).count();
            Ok(Done {
                outcome: Outcome::from_passed(passed == s.len()),
                summary: format!("suite: {passed}/{} criteria pass", s.len()),
                payload: Map::from_iter([("criteria".to_string(), serde_json::to_value(&s)?)]),
            })
        }
    }
}

/// Loads a group and subgroup, taking the group from the subgroup's `parent` if needed.
pub fn load_pair(group: Option<&Path>, subgroup: &Path, cap: usize) -> depthlab::Result<(PermGroup, Subgroup)> {
    let sub_file = GroupFile::read(subgroup)?;
    let group_path = match group {
        Some(g) => g.to_path_buf(),
        None => sub_file
            .parent_path(subgroup)
            .ok_or_else(|| Error::Input("no --group given and the subgroup file names no parent".into()))?,
    };
    let g = GroupFile::read(&group_path)?.to_group()?;
    let h = sub_file.to_subgroup(&g, cap)?;
    Ok((g, h))
}

fn inclusion(p: &Pair, cap: usize) -> depthlab::Result<Inclusion> {
    let (g, h) = load_pair(p.group.as_deref(), &p.subgroup, cap)?;
    Inclusion::new(&g, &h, cap)
}

fn run_dc(p: &Pair, cap: usize) -> depthlab::Result<Done> {
    let inc = inclusion(p, cap)?;
    let r = inc.comb_depth(DEFAULT_MAX_LEVEL)?;
    let exact = r.dc.value();
    let mut out = payload(&r);
    out.insert("group_order".into(), inc.group.len().into());
    out.insert("subgroup_order".into(), inc.sub_order().into());
    Ok(Done {
        outcome: Outcome::from_passed(exact.is_some()),
        summary: match exact {
            Some(d) => format!("combinatorial depth {d}"),
            None => format!("combinatorial depth not reached within {DEFAULT_MAX_LEVEL} levels"),
        },
        payload: out,
    })
}

fn run_od(p: &Pair, cap: usize) -> depthlab::Result<Done> {
    let inc = inclusion(p, cap)?;
    let r = inc.ord_depth()?;
    let d = r.exact()?;
    let mut out = Map::new();
    out.insert("d".into(), d.into());
    out.insert("normal".into(), inc.is_normal().into());
    out.insert("distances".into(), serde_json::to_value(&r.distances)?);
    out.insert("m_values".into(), serde_json::to_value(&r.m_values)?);
    out.insert("max_distance".into(), serde_json::to_value(r.max_distance)?);
    Ok(Done {
        outcome: Outcome::Pass,
        summary: format!("ordinary depth {d}"),
        payload: out,
    })
}

fn run_core_bound(p: &Pair, cap: usize) -> depthlab::Result<Done> {
    let r = inclusion(p, cap)?.core_bound()?;
    Ok(Done {
        outcome: Outcome::Pass,
        summary: format!("ordinary depth at most {} (m = {})", r.bound, r.m),
        payload: payload(&r),
    })
}

fn run_chars(a: &CharsArgs, cap: usize) -> depthlab::Result<Done> {
    let (table, source) = match (&a.group, &a.table) {
        (Some(g), _) => (dixon_table(&GroupFile::read(g)?.to_group()?, cap)?, "computed"),
        (None, Some(t)) => (CharacterTable::from_json_str(&std::fs::read_to_string(t)?)?, "imported"),
        (None, None) => return Err(Error::Input("give --group or --table".into())),
    };
    table.validate()?;
    let mut out = Map::new();
    out.insert("source".into(), source.into());
    out.insert("valid".into(), true.into());
    out.insert("num_classes".into(), table.num_classes().into());
    out.insert("degrees".into(), serde_json::to_value(table.degrees())?);
    out.insert("table".into(), serde_json::to_value(table.to_json())?);
    Ok(Done {
        outcome: Outcome::Pass,
        summary: format!("{source} table with {} classes, orthogonality verified", table.num_classes()),
        payload: out,
    })
}

/// Sampled points for the centralizer check.
const CENTRALIZER_SAMPLES: u64 = 100;
const CENTRALIZER_OUTSIDE: u64 = 10_000;
const ORBIT_VALIDATION_PAIRS: u64 = 10_000;

fn run_sylow(a: &SylowArgs, seed: u64) -> depthlab::Result<Done> {
    if a.exhaustive && a.n != 0 {
        return Err(Error::Input("--exhaustive is only available for n = 0".into()));
    }
    let law = match a.law {
        Law::Nominal => ProductLaw::Nominal,
        Law::Associative => ProductLaw::Associative,
    };
    let p = PModel::with_law(a.n, law)?;
    let structure = verify_p_structure(&p, a.exhaustive, a.samples, seed);
    let centralizer = verify_centralizers(&p, a.exhaustive, CENTRALIZER_SAMPLES, CENTRALIZER_OUTSIDE, seed);
    let w = p.field.primitive_element();
    let (orbits, summary) = verify_w_orbits(&p, &DiagonalAction, w, ORBIT_VALIDATION_PAIRS, seed)?;
    let passed = structure.passed() && centralizer.passed() && orbits.passed();
    let out = Map::from_iter([
        ("q".to_string(), p.q().into()),
        ("law".to_string(), law_name(a.law).into()),
        ("structure".to_string(), serde_json::to_value(&structure)?),
        ("centralizer".to_string(), serde_json::to_value(&centralizer)?),
        ("orbits".to_string(), json!({"report": orbits, "summary": summary})),
    ]);
    let findings: Vec<&str> = structure
        .findings
        .iter()
        .filter(|c| c.mismatches > 0)
        .map(|c| c.name.as_str())
        .collect();
    let mut line = format!("q = {}: Sylow checks {}", p.q(), if passed { "pass" } else { "FAIL" });
    if !findings.is_empty() {
        line.push_str(&format!("; failing unasserted findings: {}", findings.join(", ")));
    }
    Ok(Done {
        outcome: Outcome::from_passed(passed),
        summary: line,
        payload: out,
    })
}

fn run_ngp(a: &NgpArgs) -> depthlab::Result<Done> {
    let p = ReeParams::new(a.n)?;
    match a.check {
        NgpCheck::Orthogonality => {
            let r = orthogonality_report(&p)?;
            Ok(Done {
                outcome: Outcome::Pass,
                summary: format!(
                    "q = {}: {}x{} table, conductor {}, both orthogonality relations hold",
                    p.q, r.classes, r.irreducibles, r.conductor
                ),
                payload: payload(&r),
            })
        }
        NgpCheck::Induction => {
            let t = build_table(&p)?;
            let mut rows = Vec::new();
            let mut ok = true;
            for s in sources(&p) {
                let values = induced_row(&p, s);
                let norm = t.inner_product(&values, &values).as_integer();
                let mults: Vec<Option<i128>> = t
                    .irreducibles
                    .iter()
                    .map(|chi| t.inner_product(&values, chi).as_integer())
                    .collect();
                let integral = norm.is_some() && mults.iter().all(|m| m.is_some_and(|m| m >= 0));
                ok &= integral;
                rows.push(json!({
                    "source": s.label(),
                    "values": values.iter().map(entry_json).collect::<Vec<_>>(),
                    "norm": norm,
                    "multiplicities": mults,
                    "nonnegative_integral": integral,
                }));
            }
            Ok(Done {
                outcome: Outcome::from_passed(ok),
                summary: format!(
                    "q = {}: {} induced characters, multiplicities {}",
                    p.q,
                    rows.len(),
                    if ok { "nonnegative integers" } else { "NOT all nonnegative integers" }
                ),
                payload: Map::from_iter([("q".to_string(), p.q.to_string().into()), ("rows".to_string(), rows.into())]),
            })
        }
        NgpCheck::Decomposition => {
            let t = build_table(&p)?;
            let cert = verify_decompositions(&p, &t, true)?;
            let passed = cert.passed();
            let mut out = payload(&cert);
            out.insert("passed".into(), passed.into());
            Ok(Done {
                outcome: Outcome::from_passed(passed),
                summary: format!(
                    "q = {}: {} decompositions checked classwise and by inner products, {}",
                    p.q,
                    cert.rows.len(),
                    if passed { "all agree" } else { "MISMATCH" }
                ),
                payload: out,
            })
        }
        NgpCheck::Depth => {
            let c = depth_certificate(&p)?;
            Ok(Done {
                outcome: Outcome::Pass,
                summary: format!("q = {}: d(N_G(P), G) = {} ({})", p.q, c.depth, c.witness),
                payload: payload(&c),
            })
        }
    }
}

fn run_r3(check: R3Check) -> depthlab::Result<Done> {
    let r = build_r3()?;
    match check {
        R3Check::Props => {
            let rep = verify_structure(&r);
            let passed = rep.passed();
            let failed: Vec<&str> = rep.clauses.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
            Ok(Done {
                outcome: Outcome::from_passed(passed),
                summary: if passed {
                    format!("R(3): all {} structural clauses hold", rep.clauses.len())
                } else {
                    format!("R(3): failing clauses {}", failed.join(", "))
                },
                payload: payload(&rep),
            })
        }
        R3Check::Depths => {
            let entries = r3_depth_survey(&r)?;
            let line = entries
                .iter()
                .map(|e| format!("{}: dc={} d={}", e.subgroup_order, json!(e.report.dc), json!(e.report.d)))
                .collect::<Vec<_>>()
                .join(", ");
            Ok(Done {
                outcome: Outcome::Pass,
                summary: format!("R(3) maximal subgroups {line}"),
                payload: Map::from_iter([("entries".to_string(), serde_json::to_value(&entries)?)]),
            })
        }
    }
}

fn run_cert(a: &CertArgs) -> depthlab::Result<Done> {
    if a.all {
        let s = sweep(a.n_max);
        let t = transcription_report();
        let flagged = s.checks.iter().filter(|c| c.verdict == Verdict::OutOfDomain).count();
        let transcribed = t.iter().all(|x| x.agrees);
        let passed = s.passed() && transcribed;
        let summary = format!(
            "{} checks for n = 0..={}: {} asserted, {} out of domain, transcriptions {}",
            s.checks.len(),
            a.n_max,
            s.asserted(),
            flagged,
            if transcribed { "agree" } else { "DISAGREE" }
        );
        let mut out = payload(&s);
        out.insert("out_of_domain".into(), flagged.into());
        out.insert("transcription".into(), serde_json::to_value(&t)?);
        out.insert("holds".into(), passed.into());
        return Ok(Done {
            outcome: Outcome::from_passed(passed),
            summary,
            payload: out,
        });
    }
    let (Some(name), Some(q)) = (&a.name, a.q) else {
        return Err(Error::Input("--name and --q are required without --all".into()));
    };
    let c = check_by_name(name, q, a.q0)?;
    let outcome = match c.verdict {
        Verdict::Pass => Outcome::Pass,
        Verdict::Fail => Outcome::Fail,
        Verdict::OutOfDomain => Outcome::OutOfDomain,
    };
    Ok(Done {
        outcome,
        summary: format!("{name} at q = {q}: {} {} {} ({:?})", c.lhs, c.relation, c.rhs, c.verdict),
        payload: payload(&c),
    })
}
