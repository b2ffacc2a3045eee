//! Batch verification: named targets, jobs with expected outcomes, a
//! job-parallel runner and the machine-readable run summary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use crate::analysis::{
    certify_with, check_quotient_theorem, probe_normal_subgroups, s_regularity, verify_foster, CayleyVerdict,
    CertificationReport, CertifyOptions, Check, FOSTER_S,
};
use crate::automorphisms::{are_isomorphic, automorphism_group, canonical_form, AutomorphismResult};
use crate::constructions::bicayley::{bicayley_right_regular, compute_i_f, delta_map, right_element};
use crate::constructions::catalogue::{is_prime, nc9, nc_catalogue, Nc9};
use crate::constructions::foster::{foster_graph, foster_graph_from_dir, FOSTER_NAMES};
use crate::constructions::xn2::{x_n_2, x_n_2_regular_group};
use crate::error::{Error, Result};
use crate::graph::{Girth, Graph};
use crate::group::PermutationGroup;
use crate::perm::Permutation;

pub const SUMMARY_FORMAT_VERSION: u32 = 1;

/// Something that can be turned into a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Catalogue(usize),
    Nc9(usize),
    Foster(String),
    Xn2(usize),
    Petersen,
    File(PathBuf),
}

impl Target {
    /// Parses a graph name. `NC9` expands to one target per prime in
    /// `primes`. Anything that looks like a path becomes a file target.
    pub fn parse(name: &str, primes: &[usize]) -> Result<Vec<Target>> {
        let upper = name.to_ascii_uppercase();
        if let Some(i) = upper.strip_prefix("NC").and_then(|s| s.parse::<usize>().ok()) {
            return match i {
                0..=8 => Ok(vec![Target::Catalogue(i)]),
                9 if primes.is_empty() => Err(Error::InvalidParameter("NC9 needs --p".into())),
                9 => Ok(primes.iter().map(|&p| Target::Nc9(p)).collect()),
                _ => Err(Error::UnknownGraph(name.into())),
            };
        }
        if FOSTER_NAMES.iter().any(|(f, _)| *f == upper) {
            return Ok(vec![Target::Foster(upper)]);
        }
        if let Some(n) = upper.strip_prefix('X').and_then(|s| s.parse::<usize>().ok()) {
            return Ok(vec![Target::Xn2(n)]);
        }
        if upper == "PETERSEN" {
            return Ok(vec![Target::Petersen]);
        }
        let path = Path::new(name);
        if path.exists() || name.contains('/') || name.contains('.') {
            return Ok(vec![Target::File(path.to_path_buf())]);
        }
        Err(Error::UnknownGraph(name.into()))
    }

    pub fn id(&self) -> String {
        match self {
            Target::Catalogue(i) => format!("NC{i}"),
            Target::Nc9(p) => format!("NC9(p={p})"),
            Target::Foster(name) => name.clone(),
            Target::Xn2(n) => format!("X({n},2)"),
            Target::Petersen => "petersen".into(),
            Target::File(path) => path.display().to_string(),
        }
    }

    /// File-name-safe form of `id`.
    pub fn slug(&self) -> String {
        match self {
            Target::Nc9(p) => format!("NC9_p{p}"),
            Target::Xn2(n) => format!("X{n}_2"),
            Target::File(path) => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "graph".into()),
            other => other.id(),
        }
    }
}

/// A built target with whatever extra structure its construction knows.
#[derive(Clone, Debug)]
pub struct Instance {
    pub target: Target,
    pub graph: Graph,
    /// Generators of a known regular subgroup.
    pub regular_hint: Option<Vec<Permutation>>,
    pub nc9: Option<Nc9>,
}

pub fn build(target: &Target, data_dir: Option<&Path>) -> Result<Instance> {
    let mut hint = None;
    let mut nc9_data = None;
    let graph = match target {
        Target::Catalogue(i) => nc_catalogue(*i)?,
        Target::Nc9(p) => {
            let d = nc9(*p)?;
            let g = d.graph.clone();
            nc9_data = Some(d);
            g
        }
        Target::Foster(name) => match data_dir {
            Some(dir) => foster_graph_from_dir(dir, name)?.graph,
            None => foster_graph(name)?.graph,
        },
        Target::Xn2(n) => {
            hint = Some(x_n_2_regular_group(*n)?.generators().to_vec());
            x_n_2(*n)?
        }
        Target::Petersen => Graph::petersen(),
        Target::File(path) => Graph::read_edge_list(path)?,
    };
    Ok(Instance {
        target: target.clone(),
        graph,
        regular_hint: hint,
        nc9: nc9_data,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Certify,
    SRegularity,
    IsomorphismClass,
    Quotient,
}

impl std::str::FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "certify" => Ok(CheckKind::Certify),
            "s-regularity" => Ok(CheckKind::SRegularity),
            "isomorphism-class" => Ok(CheckKind::IsomorphismClass),
            "quotient" => Ok(CheckKind::Quotient),
            _ => Err(Error::InvalidParameter(format!("unknown check {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub enum Job {
    /// Per-graph checks (certify, s-regularity, quotient).
    Graph { target: Target, checks: Vec<CheckKind> },
    /// Number of isomorphism classes among `targets`.
    IsomorphismClasses {
        label: String,
        targets: Vec<Target>,
        expected: Option<usize>,
    },
    /// Bi-Cayley automorphisms of `NC9(p)`.
    BiCayley { p: usize },
}

impl Job {
    pub fn name(&self) -> String {
        match self {
            Job::Graph { target, checks } => {
                let kinds: Vec<&str> = checks
                    .iter()
                    .map(|c| match c {
                        CheckKind::Certify => "certify",
                        CheckKind::SRegularity => "s-regularity",
                        CheckKind::IsomorphismClass => "isomorphism-class",
                        CheckKind::Quotient => "quotient",
                    })
                    .collect();
                format!("{} {}", kinds.join("+"), target.id())
            }
            Job::IsomorphismClasses { label, .. } => format!("isomorphism-class {label}"),
            Job::BiCayley { p } => format!("bi-cayley NC9(p={p})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientSummary {
    pub normal_subgroup: String,
    pub normal_order: u64,
    pub hypotheses: Vec<Check>,
    pub implied: bool,
    pub conclusions: Vec<Check>,
    pub n_orbits: usize,
    pub quotient_order: usize,
    pub quotient_valency: Option<usize>,
    pub quotient_girth: Girth,
}

#[derive(Clone, Debug, Serialize)]
pub struct JobReport {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certification: Option<CertificationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub quotients: Vec<QuotientSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct JobTiming {
    pub name: String,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunSummary {
    pub format_version: u32,
    pub passed: bool,
    pub notes: Vec<String>,
    pub jobs: Vec<JobReport>,
    /// Kept apart from `jobs` so report bodies compare byte for byte.
    pub timings: Vec<JobTiming>,
}

#[derive(Serialize)]
struct Body<'a> {
    format_version: u32,
    passed: bool,
    notes: &'a [String],
    jobs: &'a [JobReport],
}

impl RunSummary {
    /// The summary without timing data.
    pub fn body_json(&self) -> String {
        serde_json::to_string_pretty(&Body {
            format_version: self.format_version,
            passed: self.passed,
            notes: &self.notes,
            jobs: &self.jobs,
        })
        .expect("summary serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }

    pub fn job(&self, name: &str) -> Option<&JobReport> {
        self.jobs.iter().find(|j| j.name == name)
    }

    /// Plain-text table, one row per job.
    pub fn table(&self) -> String {
        let width = self.jobs.iter().map(|j| j.name.len()).max().unwrap_or(3).max(3);
        let mut out = format!("{:<width$}  {:<6}  {:>10}  {:>5}  {:<10}  {:>10}\n", "job", "result", "|Aut|", "s", "verdict", "ms");
        for (job, t) in self.jobs.iter().zip(&self.timings) {
            let (aut, s, verdict) = match &job.certification {
                Some(r) => (
                    r.aut_order.to_string(),
                    r.s_regularity.map_or("-".into(), |s| s.to_string()),
                    match r.cayley_verdict {
                        CayleyVerdict::Cayley { .. } => "Cayley",
                        CayleyVerdict::NonCayley { .. } => "non-Cayley",
                        CayleyVerdict::NotVertexTransitive => "not VT",
                    },
                ),
                None => ("-".into(), "-".into(), "-"),
            };
            let _ = writeln!(
                out,
                "{:<width$}  {:<6}  {:>10}  {:>5}  {:<10}  {:>10.1}",
                job.name,
                if job.passed { "PASS" } else { "FAIL" },
                aut,
                s,
                verdict,
                t.wall_time_ms
            );
            for c in job.checks.iter().filter(|c| !c.holds) {
                let _ = writeln!(out, "    failed: {} ({})", c.name, c.detail);
            }
            if let Some(e) = &job.error {
                let _ = writeln!(out, "    error: {e}");
            }
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(out, "{}", if self.passed { "ALL PASSED" } else { "FAILED" });
        out
    }
}

fn check(name: impl Into<String>, holds: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        holds,
        detail: detail.into(),
    }
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(name: &str, actual: T, expected: T) -> Check {
    let holds = actual == expected;
    check(name, holds, format!("{actual:?}, expected {expected:?}"))
}

/// Expected properties of known targets.
fn expected_checks(target: &Target, r: &CertificationReport) -> Vec<Check> {
    let non_cayley = matches!(r.cayley_verdict, CayleyVerdict::NonCayley { .. });
    let mut out = vec![check(
        "arc-transitive implies vertex-transitive",
        !r.arc_transitive || r.vertex_transitive,
        "",
    )];
    match target {
        Target::Catalogue(i) => {
            out.extend([
                expect_eq("order", r.order, if *i <= 6 { 60 } else { 84 }),
                expect_eq("connected", r.connected, true),
                expect_eq("valency", r.valency, Some(3)),
                expect_eq("vertex-transitive", r.vertex_transitive, true),
                expect_eq("arc-transitive", r.arc_transitive, false),
                expect_eq("non-Cayley", non_cayley, true),
                expect_eq("Aut solvable", r.aut_solvable, false),
            ]);
        }
        Target::Nc9(p) => {
            out.extend([
                expect_eq("order", r.order, 12 * p),
                expect_eq("connected", r.connected, true),
                expect_eq("valency", r.valency, Some(3)),
                expect_eq("vertex-transitive", r.vertex_transitive, true),
                expect_eq("arc-transitive", r.arc_transitive, false),
                expect_eq("non-Cayley", non_cayley, true),
                expect_eq("|Aut|", r.aut_order, 24 * *p as u64),
                expect_eq("Aut solvable", r.aut_solvable, true),
                check("girth > 4", r.girth.finite().is_some_and(|g| g > 4), r.girth.to_string()),
            ]);
        }
        Target::Foster(name) => {
            let s = FOSTER_S.iter().find(|(f, _)| f == name).map(|&(_, s)| s).unwrap_or(0);
            out.extend([
                expect_eq("vertex-transitive", r.vertex_transitive, true),
                expect_eq("arc-transitive", r.arc_transitive, true),
                expect_eq("s", r.s_regularity, Some(s)),
                expect_eq("|Aut|", r.aut_order, r.order as u64 * 3 * (1 << (s.max(1) - 1))),
                expect_eq("Cayley", r.cayley_verdict.is_cayley(), matches!(name.as_str(), "F024" | "F060")),
            ]);
        }
        Target::Xn2(n) => {
            out.extend([
                expect_eq("order", r.order, 4 * n),
                expect_eq("vertex-transitive", r.vertex_transitive, true),
                expect_eq("Cayley", r.cayley_verdict.is_cayley(), true),
            ]);
            if *n >= 3 {
                out.push(expect_eq("girth", r.girth.finite(), Some(4)));
            }
        }
        Target::Petersen => {
            out.extend([
                expect_eq("vertex-transitive", r.vertex_transitive, true),
                expect_eq("non-Cayley", non_cayley, true),
                expect_eq("|Aut|", r.aut_order, 120),
            ]);
        }
        Target::File(_) => {}
    }
    out
}

fn summarize_quotient(label: String, x: &Graph, g: &PermutationGroup, n: &PermutationGroup) -> Result<QuotientSummary> {
    let rep = check_quotient_theorem(x, g, n)?;
    Ok(QuotientSummary {
        normal_subgroup: label,
        normal_order: n.order(),
        implied: rep.implied,
        n_orbits: rep.n_orbits,
        quotient_order: rep.quotient.n(),
        quotient_valency: rep.quotient.regular_degree(),
        quotient_girth: rep.quotient.girth(),
        hypotheses: rep.hypotheses,
        conclusions: rep.conclusions,
    })
}

fn consistency_check(q: &QuotientSummary) -> Check {
    let failed_hyp: Vec<&str> = q.hypotheses.iter().filter(|h| !h.holds).map(|h| h.name.as_str()).collect();
    let failed_con: Vec<&str> = q.conclusions.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect();
    let consistent = !q.implied || failed_con.is_empty();
    let detail = if q.implied {
        format!("hypotheses hold; failed conclusions: {failed_con:?}")
    } else {
        format!("hypotheses fail: {failed_hyp:?}")
    };
    check(format!("quotient by {} consistent", q.normal_subgroup), consistent, detail)
}

/// `G = ⟨R(H), δ_α⟩` and `N = ⟨R(c)⟩` for `NC9(p)`.
pub fn nc9_quotient_groups(d: &Nc9) -> Result<(PermutationGroup, PermutationGroup)> {
    let rh = bicayley_right_regular(&d.spec);
    let delta = delta_map(&d.spec, &d.alpha);
    let mut gens = rh.generators().to_vec();
    gens.push(delta);
    let g = PermutationGroup::from_generators_reduced(d.graph.n(), &gens)?;
    let n = PermutationGroup::new(d.graph.n(), vec![right_element(&d.spec, d.c)])?;
    Ok((g, n))
}

fn quotient_checks(inst: &Instance, aut: &AutomorphismResult, report: &mut JobReport) -> Result<()> {
    let x = &inst.graph;
    if let Some(d) = &inst.nc9 {
        let (g, n) = nc9_quotient_groups(d)?;
        let q = summarize_quotient("<R(c)>".into(), x, &g, &n)?;
        report.checks.push(consistency_check(&q));
        let quotient = x.quotient_graph(&n.orbits())?;
        let cycle = Graph::cycle(12)?;
        report.checks.push(check(
            "quotient by <R(c)> is C12",
            are_isomorphic(&quotient, &cycle)?.is_some(),
            format!("{} vertices, valency {:?}", quotient.n(), quotient.regular_degree()),
        ));
        report.quotients.push(q);
        return Ok(());
    }
    let odd_primes: Vec<u64> = (3..=x.n() as u64)
        .filter(|&p| is_prime(p as usize) && (x.n() as u64).is_multiple_of(p))
        .collect();
    let mut qualifying = 0;
    for (label, n) in probe_normal_subgroups(&aut.group, &odd_primes)? {
        if n.is_trivial() || n.order() == aut.order() || n.orbits().len() <= 2 {
            continue;
        }
        qualifying += 1;
        let q = summarize_quotient(label, x, &aut.group, &n)?;
        report.checks.push(consistency_check(&q));
        report.quotients.push(q);
    }
    if qualifying == 0 {
        report.checks.push(check("quotient probe", true, "no qualifying N"));
    }
    Ok(())
}

fn run_graph_job(target: &Target, kinds: &[CheckKind], data_dir: Option<&Path>, report: &mut JobReport) -> Result<()> {
    let inst = build(target, data_dir)?;
    let aut = automorphism_group(&inst.graph)?;
    if kinds.contains(&CheckKind::Certify) {
        let opts = CertifyOptions {
            regular_hint: inst.regular_hint.clone(),
            search_bound: None,
        };
        let r = certify_with(&inst.graph, &target.id(), &aut, &opts)?;
        report.checks.extend(expected_checks(target, &r));
        report.certification = Some(r);
    }
    if kinds.contains(&CheckKind::SRegularity) {
        if let Target::Foster(name) = target {
            let foster = match data_dir {
                Some(dir) => foster_graph_from_dir(dir, name)?,
                None => foster_graph(name)?,
            };
            let v = verify_foster(foster)?;
            report.checks.push(check("census gate", true, format!("{}-regular, |Aut| = {}", v.s, v.aut.order())));
        } else {
            let s = s_regularity(&inst.graph, &aut)?;
            report.checks.push(check("s-regularity", true, format!("{s:?}")));
        }
    }
    if kinds.contains(&CheckKind::IsomorphismClass) {
        let cf = canonical_form(&inst.graph)?;
        report.checks.push(check("canonical certificate", true, cf.certificate));
    }
    if kinds.contains(&CheckKind::Quotient) {
        quotient_checks(&inst, &aut, report)?;
    }
    Ok(())
}

fn run_iso_job(targets: &[Target], expected: Option<usize>, data_dir: Option<&Path>, report: &mut JobReport) -> Result<()> {
    let mut classes: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for t in targets {
        let inst = build(t, data_dir)?;
        classes.entry(canonical_form(&inst.graph)?.certificate).or_default().push(t.id());
    }
    let mut groups: Vec<Vec<String>> = classes.into_values().collect();
    groups.sort();
    let detail = groups.iter().map(|g| g.join("=")).collect::<Vec<_>>().join(", ");
    report.checks.push(match expected {
        Some(k) => check(format!("{k} isomorphism classes"), groups.len() == k, format!("{} classes: {detail}", groups.len())),
        None => check("isomorphism classes", true, format!("{} classes: {detail}", groups.len())),
    });
    Ok(())
}

/// Checks on the bi-Cayley structure of `NC9(p)`: `I` is non-empty,
/// `δ_α` has order 4, `⟨R(H), δ_α⟩` is transitive, and the normalizer of
/// `R(H)` in `Aut` is generated by `R(H)`, `F` and `δ_α`.
pub fn bicayley_checks(d: &Nc9) -> Result<Vec<Check>> {
    let x = &d.graph;
    let n = x.n();
    let aut = automorphism_group(x)?;
    let fi = compute_i_f(&d.spec, x)?;
    let delta = delta_map(&d.spec, &d.alpha);
    let rh = bicayley_right_regular(&d.spec);
    let mut gens = rh.generators().to_vec();
    gens.push(delta.clone());
    let g = PermutationGroup::from_generators_reduced(n, &gens)?;
    let normalizer = aut.group.normalizer(&rh)?;
    gens.extend(fi.f.generators().iter().cloned());
    let claimed = PermutationGroup::from_generators_reduced(n, &gens)?;
    Ok(vec![
        check("I non-empty", !fi.i.is_empty(), format!("|I| = {}", fi.i.len())),
        check(
            "delta_alpha in I",
            fi.i.iter().any(|(_, m)| *m == delta),
            delta.cycle_string(),
        ),
        expect_eq("order of delta_alpha", delta.order(), 4),
        check("delta_alpha is an automorphism", x.is_automorphism(&delta), ""),
        expect_eq("<R(H), delta_alpha> vertex-transitive", g.is_transitive(), true),
        check(
            "N_Aut(R(H)) = <R(H), F, delta_alpha>",
            normalizer.same_group(&claimed),
            format!("|N| = {}, |F| = {}, |claimed| = {}", normalizer.order(), fi.f.order(), claimed.order()),
        ),
    ])
}

fn run_job(job: &Job, data_dir: Option<&Path>) -> JobReport {
    let mut report = JobReport {
        name: job.name(),
        passed: false,
        checks: Vec::new(),
        certification: None,
        quotients: Vec::new(),
        error: None,
    };
    let outcome = match job {
        Job::Graph { target, checks } => run_graph_job(target, checks, data_dir, &mut report),
        Job::IsomorphismClasses { targets, expected, .. } => run_iso_job(targets, *expected, data_dir, &mut report),
        Job::BiCayley { p } => nc9(*p).and_then(|d| bicayley_checks(&d)).map(|c| report.checks.extend(c)),
    };
    if let Err(e) = outcome {
        report.error = Some(e.to_string());
    }
    report.passed = report.error.is_none() && report.checks.iter().all(|c| c.holds);
    report
}

#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    /// Worker threads; 0 or 1 runs jobs in order on the calling thread.
    pub jobs: usize,
    /// Directory with replacement census files.
    pub data_dir: Option<PathBuf>,
}

/// Runs `jobs`, `config.jobs` at a time. Reports come back in job order.
pub fn run(jobs: &[Job], notes: Vec<String>, config: &RunConfig) -> RunSummary {
    let data_dir = config.data_dir.as_deref();
    let slots: Vec<Mutex<Option<(JobReport, f64)>>> = jobs.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let worker = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        let Some(job) = jobs.get(i) else { break };
        let start = Instant::now();
        let report = run_job(job, data_dir);
        let ms = start.elapsed().as_secs_f64() * 1e3;
        *slots[i].lock().expect("slot lock") = Some((report, ms));
    };
    let threads = config.jobs.clamp(1, jobs.len().max(1));
    if threads == 1 {
        worker();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(worker);
            }
        });
    }
    let (reports, timings): (Vec<JobReport>, Vec<JobTiming>) = slots
        .into_iter()
        .map(|m| {
            let (r, ms) = m.into_inner().expect("slot lock").expect("every job ran");
            let t = JobTiming {
                name: r.name.clone(),
                wall_time_ms: ms,
            };
            (r, t)
        })
        .unzip();
    RunSummary {
        format_version: SUMMARY_FORMAT_VERSION,
        passed: reports.iter().all(|r| r.passed),
        notes,
        jobs: reports,
        timings,
    }
}

/// Jobs reproducing the classification claims for each prime in
/// `primes`, plus notes on anything skipped.
pub fn theorem_suite(primes: &[usize]) -> Result<(Vec<Job>, Vec<String>)> {
    let mut jobs = Vec::new();
    let mut notes = Vec::new();
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let certify = |t: Target| Job::Graph {
        target: t,
        checks: vec![CheckKind::Certify],
    };
    let symmetric = |name: &str| Job::Graph {
        target: Target::Foster(name.into()),
        checks: vec![CheckKind::Certify, CheckKind::SRegularity],
    };
    for &p in &primes {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        match p {
            5 => {
                jobs.extend((0..=6).map(|i| certify(Target::Catalogue(i))));
            }
            7 => {
                jobs.extend((7..=8).map(|i| certify(Target::Catalogue(i))));
                jobs.push(symmetric("F084"));
                jobs.push(Job::IsomorphismClasses {
                    label: "order-84 set".into(),
                    targets: vec![Target::Catalogue(7), Target::Catalogue(8), Target::Foster("F084".into())],
                    expected: Some(3),
                });
            }
            17 => jobs.push(symmetric("F204")),
            _ => {}
        }
        if p % 4 == 1 {
            jobs.push(Job::Graph {
                target: Target::Nc9(p),
                checks: vec![CheckKind::Certify, CheckKind::Quotient],
            });
            if p == 5 {
                jobs.push(Job::BiCayley { p });
                let mut set: Vec<Target> = (0..=6).map(Target::Catalogue).collect();
                set.push(Target::Nc9(5));
                jobs.push(Job::IsomorphismClasses {
                    label: "order-60 set".into(),
                    targets: set,
                    expected: Some(8),
                });
            }
        } else {
            notes.push(format!("NC9 skipped for p = {p}: p ≢ 1 (mod 4)"));
        }
        if !matches!(p, 5 | 7 | 17) {
            notes.push(format!("no catalogue or census graph of order 12·{p}"));
        }
    }
    Ok((jobs, notes))
}

/// Edge-list or DOT export format.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Edges,
    Dot,
}

/// Writes each target's graph to `dir`, returning the files written.
pub fn export(targets: &[Target], dir: &Path, format: ExportFormat, data_dir: Option<&Path>) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let mut written = Vec::new();
    for t in targets {
        let inst = build(t, data_dir)?;
        let (ext, text) = match format {
            ExportFormat::Edges => ("edges", inst.graph.to_edge_list(&[&t.id()])),
            ExportFormat::Dot => ("dot", inst.graph.to_dot(&t.slug())),
        };
        let path = dir.join(format!("{}.{ext}", t.slug()));
        std::fs::write(&path, text).map_err(|e| Error::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_names() {
        assert_eq!(Target::parse("nc3", &[]).unwrap(), vec![Target::Catalogue(3)]);
        assert_eq!(
            Target::parse("NC9", &[5, 13]).unwrap(),
            vec![Target::Nc9(5), Target::Nc9(13)]
        );
        assert!(Target::parse("NC9", &[]).is_err());
        assert!(Target::parse("NC10", &[]).is_err());
        assert_eq!(Target::parse("f084", &[]).unwrap(), vec![Target::Foster("F084".into())]);
        assert_eq!(Target::parse("X15", &[]).unwrap(), vec![Target::Xn2(15)]);
        assert!(matches!(Target::parse("a/b.edges", &[]).unwrap()[0], Target::File(_)));
        assert!(Target::parse("bogus", &[]).is_err());
    }

    #[test]
    fn suite_contents() {
        let (jobs, notes) = theorem_suite(&[3]).unwrap();
        assert!(jobs.is_empty());
        assert!(notes.iter().any(|n| n.contains("p = 3")));
        let (jobs, _) = theorem_suite(&[17]).unwrap();
        let names: Vec<String> = jobs.iter().map(Job::name).collect();
        assert_eq!(names, ["certify+s-regularity F204", "certify+quotient NC9(p=17)"]);
        assert!(theorem_suite(&[9]).is_err());
    }

    #[test]
    fn certify_job_on_petersen() {
        let jobs = [Job::Graph {
            target: Target::Petersen,
            checks: vec![CheckKind::Certify, CheckKind::SRegularity],
        }];
        let summary = run(&jobs, vec![], &RunConfig::default());
        assert!(summary.passed, "{}", summary.table());
    }

    #[test]
    fn missing_file_fails() {
        let jobs = [Job::Graph {
            target: Target::File("/nonexistent/graph.edges".into()),
            checks: vec![CheckKind::Certify],
        }];
        let summary = run(&jobs, vec![], &RunConfig::default());
        assert!(!summary.passed);
        assert!(summary.jobs[0].error.is_some());
    }

    #[test]
    fn parallel_and_serial_bodies_agree() {
        let jobs: Vec<Job> = [Target::Petersen, Target::Xn2(3), Target::Catalogue(0)]
            .into_iter()
            .map(|t| Job::Graph {
                target: t,
                checks: vec![CheckKind::Certify, CheckKind::Quotient],
            })
            .collect();
        let a = run(&jobs, vec![], &RunConfig { jobs: 1, data_dir: None });
        let b = run(&jobs, vec![], &RunConfig { jobs: 3, data_dir: None });
        assert_eq!(a.body_json(), b.body_json());
        assert!(a.passed, "{}", a.table());
    }

    #[test]
    fn nc9_bicayley_structure() {
        let checks = bicayley_checks(&nc9(5).unwrap()).unwrap();
        for c in checks {
            assert!(c.holds, "{c:?}");
        }
    }

    #[test]
    fn export_writes_files() {
        let dir = tempfile::tempdir().unwrap();
        let files = export(&[Target::Petersen, Target::Nc9(5)], dir.path(), ExportFormat::Edges, None).unwrap();
        let back = Graph::read_edge_list(&files[1]).unwrap();
        assert_eq!(back, nc9(5).unwrap().graph);
        let files = export(&[Target::Petersen], dir.path(), ExportFormat::Dot, None).unwrap();
        assert!(std::fs::read_to_string(&files[0]).unwrap().starts_with("graph petersen {"));
    }
}
