//! Commands and the JSON reports they produce.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use trivext::algebra::{Algebra, LeftModule, RightModule};
use trivext::error::Error;
use trivext::gorenstein::{Agreement, Decider, ExtensionChecker, GorensteinVerdict};
use trivext::homology::ChainComplex;
use trivext::morita::{MoritaChecker, TupleReport};
use trivext::sample::{random_nonzero_module, random_right_module, IsoClasses};
use trivext::structure::Structure;
use trivext::trivext::{module_to_copair, module_to_pair, module_to_right_pair};

use crate::workspace::Workspace;
use crate::CliError;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    Gp,
    Gi,
    Gf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Harness {
    PairGp,
    CopairGi,
    RightPairGf,
    TupleGp,
    CotupleGi,
    RightTupleGf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Pair,
    Copair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Check(Property),
    Verify(Harness),
    Resolve(Side),
}

impl Command {
    pub fn name(&self) -> String {
        match self {
            Command::Validate => "validate".into(),
            Command::Check(p) => format!("check {}", format!("{p:?}").to_lowercase()),
            Command::Verify(h) => format!(
                "verify {}",
                match h {
                    Harness::PairGp => "pair-gp",
                    Harness::CopairGi => "copair-gi",
                    Harness::RightPairGf => "right-pair-gf",
                    Harness::TupleGp => "tuple-gp",
                    Harness::CotupleGi => "cotuple-gi",
                    Harness::RightTupleGf => "right-tuple-gf",
                }
            ),
            Command::Resolve(s) => format!("resolve {}", format!("{s:?}").to_lowercase()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    /// Defaults to `max(10, 2 dim)` for the algebra at hand.
    pub bound: Option<usize>,
    pub seed: u64,
    /// Defaults to the bound.
    pub window: Option<usize>,
    /// Random modules per extension or context added to a `verify` run.
    pub samples: usize,
    pub max_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub input: String,
    pub targets: Vec<String>,
    pub seed: u64,
    pub bound: Option<usize>,
    pub window: Option<usize>,
    pub results: Vec<Value>,
    pub summary: Value,
    pub timing_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    /// The report without its timing field.
    pub fn payload(&self) -> String {
        let mut r = self.clone();
        r.timing_ms = 0;
        r.to_json()
    }
}

fn default_bound(flags: &Flags, dim: usize) -> usize {
    flags.bound.unwrap_or_else(|| (2 * dim).max(10))
}

/// Deciders keyed by algebra, created on first use.
struct Deciders<'a> {
    flags: &'a Flags,
    cache: Vec<(Arc<Algebra>, Decider)>,
}

impl<'a> Deciders<'a> {
    fn new(flags: &'a Flags) -> Self {
        Deciders { flags, cache: Vec::new() }
    }

    fn get(&mut self, alg: &Arc<Algebra>) -> &Decider {
        let i = match self.cache.iter().position(|(a, _)| Arc::ptr_eq(a, alg) || **a == **alg) {
            Some(i) => i,
            None => {
                let bound = default_bound(self.flags, alg.dim());
                let st = Arc::new(Structure::new(alg.clone(), self.flags.seed));
                self.cache.push((alg.clone(), Decider::new(st, bound)));
                self.cache.len() - 1
            }
        };
        &self.cache[i].1
    }
}

fn verdict_entry(name: &str, kind: &str, module_dim: usize, d: &Decider, v: GorensteinVerdict) -> Value {
    json!({
        "name": name,
        "kind": kind,
        "algebra_dim": d.structure().algebra().dim(),
        "module_dim": module_dim,
        "bound": d.bound(),
        "regime": d.regime(),
        "verdict": v,
    })
}

fn pick<'n>(targets: &[String], all: impl Iterator<Item = &'n String>) -> Result<Vec<String>, CliError> {
    let all: BTreeSet<String> = all.cloned().collect();
    if targets.is_empty() {
        return Ok(all.into_iter().collect());
    }
    for t in targets {
        if !all.contains(t) {
            return Err(CliError::UnknownTarget(t.clone()));
        }
    }
    let mut out = targets.to_vec();
    out.sort();
    out.dedup();
    Ok(out)
}

pub fn run(command: &Command, ws: &Workspace, input: &str, targets: &[String], flags: &Flags) -> Result<Report, CliError> {
    let start = Instant::now();
    let (results, summary) = match command {
        Command::Validate => validate(ws),
        Command::Check(p) => check(*p, ws, targets, flags)?,
        Command::Verify(h) => verify(*h, ws, targets, flags)?,
        Command::Resolve(s) => resolve(*s, ws, targets, flags)?,
    };
    Ok(Report {
        schema_version: REPORT_SCHEMA_VERSION,
        command: command.name(),
        input: input.to_string(),
        targets: targets.to_vec(),
        seed: flags.seed,
        bound: flags.bound,
        window: flags.window,
        results,
        summary,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

fn validate(ws: &Workspace) -> (Vec<Value>, Value) {
    let mut results = Vec::new();
    for (name, a) in &ws.algebras {
        results.push(json!({"name": name, "kind": "algebra", "field": a.field().p(), "dim": a.dim()}));
    }
    for (name, t) in &ws.extensions {
        results.push(json!({
            "name": name,
            "kind": "extension",
            "base_dim": t.base_dim(),
            "bimodule_dim": t.m_dim(),
            "total_dim": t.total().dim(),
        }));
    }
    for (name, r) in &ws.contexts {
        results.push(json!({"name": name, "kind": "context", "dim": r.lambda().dim()}));
    }
    let summary = json!({"counts": ws.counts(), "instances": ws.instance_count()});
    (results, summary)
}

fn check(p: Property, ws: &Workspace, targets: &[String], flags: &Flags) -> Result<(Vec<Value>, Value), CliError> {
    let mut deciders = Deciders::new(flags);
    let mut results = Vec::new();
    let mut yes = 0;
    match p {
        Property::Gp | Property::Gi => {
            let (inst, ctx_inst) = if p == Property::Gp {
                (ws.pairs.keys().collect::<Vec<_>>(), ws.tuples.keys().collect::<Vec<_>>())
            } else {
                (ws.copairs.keys().collect(), ws.cotuples.keys().collect())
            };
            let names = pick(targets, ws.modules.keys().chain(inst).chain(ctx_inst))?;
            for name in names {
                let (kind, m): (&str, LeftModule) = if let Some(m) = ws.modules.get(&name) {
                    ("module", m.clone())
                } else if p == Property::Gp {
                    if let Some((e, pm)) = ws.pairs.get(&name) {
                        ("pair", trivext::trivext::pair_to_module(pm, &ws.extensions[e]))
                    } else {
                        let (c, t) = &ws.tuples[&name];
                        let ring = &ws.contexts[c];
                        ("tuple", ring.to_lambda(&ring.tuple_module(t).map_err(internal)?))
                    }
                } else if let Some((e, c)) = ws.copairs.get(&name) {
                    ("copair", trivext::trivext::copair_to_module(c, &ws.extensions[e]))
                } else {
                    let (c, t) = &ws.cotuples[&name];
                    let ring = &ws.contexts[c];
                    ("cotuple", ring.to_lambda(&ring.cotuple_module(t).map_err(internal)?))
                };
                let d = deciders.get(m.algebra());
                let v = if p == Property::Gp { d.gp(&m) } else { d.gi(&m) };
                yes += usize::from(v.is_yes());
                results.push(verdict_entry(&name, kind, m.dim(), d, v));
            }
        }
        Property::Gf => {
            let names = pick(
                targets,
                ws.right_modules.keys().chain(ws.right_pairs.keys()).chain(ws.right_tuples.keys()),
            )?;
            for name in names {
                let (kind, m): (&str, RightModule) = if let Some(m) = ws.right_modules.get(&name) {
                    ("right_module", m.clone())
                } else if let Some((e, pm)) = ws.right_pairs.get(&name) {
                    ("right_pair", trivext::trivext::right_pair_to_module(pm, &ws.extensions[e]))
                } else {
                    let (c, t) = &ws.right_tuples[&name];
                    let ring = &ws.contexts[c];
                    ("right_tuple", ring.to_lambda_right(&ring.right_tuple_module(t).map_err(internal)?))
                };
                let d = deciders.get(m.algebra());
                let v = d.gf_right(&m);
                yes += usize::from(v.is_yes());
                results.push(verdict_entry(&name, kind, m.dim(), d, v));
            }
        }
    }
    let summary = json!({"checked": results.len(), "yes": yes, "no": results.len() - yes});
    Ok((results, summary))
}

fn internal(e: Error) -> CliError {
    CliError::Invalid(e.to_string())
}

fn status_summary(statuses: &[Agreement]) -> Value {
    let count = |a: Agreement| statuses.iter().filter(|&&s| s == a).count();
    json!({
        "instances": statuses.len(),
        "agree": count(Agreement::Agree),
        "consistent_unestablished": count(Agreement::ConsistentUnestablished),
        "contradiction": count(Agreement::Contradiction),
    })
}

fn verify(h: Harness, ws: &Workspace, targets: &[String], flags: &Flags) -> Result<(Vec<Value>, Value), CliError> {
    let mut results = Vec::new();
    let mut statuses = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(flags.seed);
    match h {
        Harness::PairGp | Harness::CopairGi | Harness::RightPairGf => {
            let names = match h {
                Harness::PairGp => pick(targets, ws.pairs.keys())?,
                Harness::CopairGi => pick(targets, ws.copairs.keys())?,
                _ => pick(targets, ws.right_pairs.keys())?,
            };
            let mut needed: BTreeSet<&String> = names
                .iter()
                .map(|n| match h {
                    Harness::PairGp => &ws.pairs[n].0,
                    Harness::CopairGi => &ws.copairs[n].0,
                    _ => &ws.right_pairs[n].0,
                })
                .collect();
            if flags.samples > 0 {
                needed.extend(ws.extensions.keys());
            }
            let checkers: BTreeMap<&str, ExtensionChecker> = needed
                .into_iter()
                .map(|e| {
                    let t = &ws.extensions[e];
                    let bound = default_bound(flags, t.total().dim());
                    (e.as_str(), ExtensionChecker::new(t.clone(), bound, flags.seed))
                })
                .collect();
            let checker = |e: &str| &checkers[e];
            for name in &names {
                let (ext, rep) = match h {
                    Harness::PairGp => {
                        let (e, p) = &ws.pairs[name];
                        (e, checker(e).verify_pair(p))
                    }
                    Harness::CopairGi => {
                        let (e, c) = &ws.copairs[name];
                        (e, checker(e).verify_copair(c))
                    }
                    _ => {
                        let (e, p) = &ws.right_pairs[name];
                        (e, checker(e).verify_right_pair(p))
                    }
                };
                statuses.push(rep.status);
                let c = checker(ext);
                results.push(pair_entry(name, ext, h, c, rep));
            }
            if flags.samples > 0 {
                for (ext, t) in &ws.extensions {
                    let total = t.total();
                    let mut seen = IsoClasses::new(flags.seed);
                    let mut i = 0;
                    for _ in 0..flags.samples {
                        let name = format!("{ext}#sample{i}");
                        let rep = match h {
                            Harness::RightPairGf => {
                                let w = random_right_module(total, flags.max_dim, &mut rng);
                                if w.dim() == 0 || !seen.insert(w.to_left_over_opposite()) {
                                    continue;
                                }
                                checker(ext).verify_right_pair(&module_to_right_pair(&w, t).map_err(internal)?)
                            }
                            _ => {
                                let n = random_nonzero_module(total, flags.max_dim, &mut rng);
                                if !seen.insert(n.clone()) {
                                    continue;
                                }
                                if h == Harness::PairGp {
                                    checker(ext).verify_pair(&module_to_pair(&n, t).map_err(internal)?)
                                } else {
                                    checker(ext).verify_copair(&module_to_copair(&n, t).map_err(internal)?)
                                }
                            }
                        };
                        i += 1;
                        statuses.push(rep.status);
                        results.push(pair_entry(&name, ext, h, checker(ext), rep));
                    }
                }
            }
        }
        Harness::TupleGp | Harness::CotupleGi | Harness::RightTupleGf => {
            let names = match h {
                Harness::TupleGp => pick(targets, ws.tuples.keys())?,
                Harness::CotupleGi => pick(targets, ws.cotuples.keys())?,
                _ => pick(targets, ws.right_tuples.keys())?,
            };
            let mut needed: BTreeSet<&String> = names
                .iter()
                .map(|n| match h {
                    Harness::TupleGp => &ws.tuples[n].0,
                    Harness::CotupleGi => &ws.cotuples[n].0,
                    _ => &ws.right_tuples[n].0,
                })
                .collect();
            if flags.samples > 0 {
                needed.extend(ws.contexts.keys());
            }
            let checkers: BTreeMap<&str, MoritaChecker> = needed
                .into_iter()
                .map(|c| {
                    let ring = &ws.contexts[c];
                    let bound = default_bound(flags, ring.lambda().dim());
                    (c.as_str(), MoritaChecker::new(ring.clone(), bound, flags.seed))
                })
                .collect();
            let checker = |c: &str| &checkers[c];
            for name in &names {
                let (ctx, rep) = match h {
                    Harness::TupleGp => {
                        let (c, t) = &ws.tuples[name];
                        (c, checker(c).verify_tuple(t).map_err(internal)?)
                    }
                    Harness::CotupleGi => {
                        let (c, t) = &ws.cotuples[name];
                        (c, checker(c).verify_cotuple(t).map_err(internal)?)
                    }
                    _ => {
                        let (c, t) = &ws.right_tuples[name];
                        (c, checker(c).verify_right_tuple(t).map_err(internal)?)
                    }
                };
                statuses.push(rep.status);
                results.push(tuple_entry(name, ctx, rep));
            }
            if flags.samples > 0 {
                for (ctx, ring) in &ws.contexts {
                    let total = ring.view().total();
                    let mut seen = IsoClasses::new(flags.seed);
                    let mut i = 0;
                    for _ in 0..flags.samples {
                        let name = format!("{ctx}#sample{i}");
                        let c = checker(ctx);
                        let rep = match h {
                            Harness::RightTupleGf => {
                                let w = random_right_module(total, flags.max_dim, &mut rng);
                                if w.dim() == 0 || !seen.insert(w.to_left_over_opposite()) {
                                    continue;
                                }
                                let t = c.ring().right_tuple_from_module(&w).map_err(internal)?;
                                c.verify_right_tuple(&t).map_err(internal)?
                            }
                            _ => {
                                let n = random_nonzero_module(total, flags.max_dim, &mut rng);
                                if !seen.insert(n.clone()) {
                                    continue;
                                }
                                if h == Harness::TupleGp {
                                    let t = c.ring().tuple_from_module(&n).map_err(internal)?;
                                    c.verify_tuple(&t).map_err(internal)?
                                } else {
                                    let t = c.ring().cotuple_from_module(&n).map_err(internal)?;
                                    c.verify_cotuple(&t).map_err(internal)?
                                }
                            }
                        };
                        i += 1;
                        statuses.push(rep.status);
                        results.push(tuple_entry(&name, ctx, rep));
                    }
                }
            }
        }
    }
    Ok((results, status_summary(&statuses)))
}

fn pair_entry(name: &str, ext: &str, h: Harness, c: &ExtensionChecker, rep: trivext::gorenstein::EquivalenceReport) -> Value {
    let (m, zr) = if h == Harness::PairGp {
        (c.m_compatible(), c.zr_compatible())
    } else {
        (c.m_cocompatible(), c.zr_cocompatible())
    };
    json!({
        "name": name,
        "extension": ext,
        "bound": c.total().bound(),
        "report": rep,
        "bimodule_report": m,
        "zr_report": zr,
    })
}

fn tuple_entry(name: &str, ctx: &str, rep: TupleReport) -> Value {
    json!({"name": name, "context": ctx, "report": rep})
}

fn dims(c: &ChainComplex) -> Vec<Value> {
    (c.lo()..=c.hi())
        .map(|i| json!({"degree": i, "dim": c.module(i).dim()}))
        .collect()
}

fn resolve(s: Side, ws: &Workspace, targets: &[String], flags: &Flags) -> Result<(Vec<Value>, Value), CliError> {
    let names = match s {
        Side::Pair => pick(targets, ws.pairs.keys())?,
        Side::Copair => pick(targets, ws.copairs.keys())?,
    };
    let mut results = Vec::new();
    let mut passed = 0;
    for name in &names {
        let ext = match s {
            Side::Pair => &ws.pairs[name].0,
            Side::Copair => &ws.copairs[name].0,
        };
        let t = &ws.extensions[ext];
        let bound = default_bound(flags, t.total().dim());
        let window = flags.window.unwrap_or(bound);
        let checker = ExtensionChecker::new(t.clone(), bound, flags.seed);
        let unqualified = |e: Error| match e {
            Error::HypothesesUnmet(why) => CliError::Unqualified(name.clone(), why),
            other => internal(other),
        };
        let (base, complex, checks) = match s {
            Side::Pair => {
                let r = checker
                    .build_pair_complete_resolution(&ws.pairs[name].1, window)
                    .map_err(unqualified)?;
                (r.base.complex, r.complex, r.checks)
            }
            Side::Copair => {
                let r = checker
                    .build_copair_complete_coresolution(&ws.copairs[name].1, window)
                    .map_err(unqualified)?;
                (r.base.complex, r.complex, r.checks)
            }
        };
        if checks.all() {
            passed += 1;
        }
        results.push(json!({
            "name": name,
            "extension": ext,
            "bound": bound,
            "window": window,
            "base_terms": dims(&base),
            "terms": dims(&complex),
            "checks": checks,
        }));
    }
    Ok((results, json!({"built": names.len(), "all_checks_pass": passed})))
}
