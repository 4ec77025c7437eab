use std::process::ExitCode;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use solgraph::certs::{
    base_two_search, default_base_subgroup, find_lb3, find_lb4, verify, Certificate, Outcome,
    Search, FORMAT_VERSION,
};
use solgraph::group::Group;
use solgraph::suite::{self, Tier};
use solgraph::{build_str, GraphView, Permutation, PredicateKind, DEFAULT_CAP};

use crate::cache::{self, Cache, Key};
use crate::{Cli, Command, Target};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] solgraph::Error),

    #[error("group order {order} exceeds the {tier} tier ceiling of {ceiling}{}", if *tier == Tier::Slow { "" } else { "; pass --tier to raise it" })]
    Tier { order: String, tier: Tier, ceiling: u64 },

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Other(String),
}

impl CliError {
    /// 2 usage or bad input, 3 capacity, 4 verification failure, 1 other.
    pub fn exit_code(&self) -> u8 {
        use solgraph::Error as E;
        match self {
            CliError::Tier { .. } => 3,
            CliError::Core(e) => match e {
                E::Capacity { .. } | E::Budget(_) => 3,
                E::Certificate(_) => 4,
                E::Io { .. } | E::NotNormal => 1,
                _ => 2,
            },
            CliError::Io(_) | CliError::Other(_) => 1,
        }
    }
}

/// Exit status when a certificate search comes back empty.
const NOT_FOUND: u8 = 5;
/// Exit status when a certificate fails verification.
const REJECTED: u8 = 4;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub seconds: f64,
    pub cached: bool,
    /// Per-criterion wall time for suite runs.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub criteria_seconds: Vec<f64>,
}

/// Everything a command reports. Apart from `timing`, identical inputs give
/// identical output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunResult {
    pub format_version: u32,
    pub command: String,
    pub arguments: Value,
    pub group: Option<String>,
    pub kind: Option<PredicateKind>,
    pub seed: Option<u64>,
    pub results: Value,
    pub certificate: Option<Certificate>,
    pub timing: Timing,
}

impl RunResult {
    pub fn to_json(&self) -> String {
        serde_json::to_value(self).expect("serializable").to_string()
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    cache: Cache,
    start: Instant,
}

impl Ctx<'_> {
    fn tier(&self) -> Tier {
        self.cli.tier.into()
    }

    fn kind(&self) -> PredicateKind {
        self.cli.kind.into()
    }

    fn group(&self, spec: &str) -> Result<Group, CliError> {
        let g = build_str(spec)?;
        let ceiling = self.tier().ceiling();
        if g.order_u64().is_none_or(|o| o > ceiling) {
            return Err(CliError::Tier {
                order: g.order().to_string(),
                tier: self.tier(),
                ceiling,
            });
        }
        Ok(g)
    }

    fn result(&self, command: &str, arguments: Value, group: Option<&str>) -> RunResult {
        RunResult {
            format_version: FORMAT_VERSION,
            command: command.to_string(),
            arguments,
            group: group.map(str::to_string),
            kind: None,
            seed: None,
            results: Value::Null,
            certificate: None,
            timing: Timing {
                seconds: 0.0,
                cached: false,
                criteria_seconds: Vec::new(),
            },
        }
    }

    /// Returns a cached result for `key`, or computes and stores one.
    fn cached(
        &self,
        key: &Key,
        compute: impl FnOnce() -> Result<(RunResult, u8), CliError>,
    ) -> Result<(RunResult, u8), CliError> {
        if let Some(mut hit) = self.cache.load(key) {
            hit.timing.cached = true;
            let code = status_of(&hit);
            return Ok((hit, code));
        }
        let (result, code) = compute()?;
        if code == 0 {
            self.cache.store(key, &result)?;
        }
        Ok((result, code))
    }
}

/// Exit status implied by a stored result.
fn status_of(r: &RunResult) -> u8 {
    match r.results.get("found") {
        Some(Value::Bool(false)) => NOT_FOUND,
        _ => 0,
    }
}

pub fn execute(cli: &Cli) -> Result<ExitCode, CliError> {
    let ctx = Ctx {
        cli,
        cache: Cache::new(!cli.no_cache),
        start: Instant::now(),
    };
    let (mut result, code) = match &cli.command {
        Command::Diameter { spec } => diameter(&ctx, spec)?,
        Command::Ball {
            spec,
            element,
            radius,
            members,
        } => ball(&ctx, spec, element, *radius, *members)?,
        Command::Certify {
            spec,
            target,
            subgroup,
        } => certify(&ctx, spec, *target, subgroup)?,
        Command::Verify { file } => verify_file(&ctx, file)?,
        Command::Suite { name } => run_suite(&ctx, (*name).into())?,
    };
    result.timing.seconds = ctx.start.elapsed().as_secs_f64();
    emit(cli, &result)?;
    Ok(ExitCode::from(code))
}

fn emit(cli: &Cli, result: &RunResult) -> Result<(), CliError> {
    match &cli.json {
        Some(path) if path.as_os_str() == "-" => println!("{}", result.to_json()),
        Some(path) => {
            cache::write(path, &result.to_json())?;
            println!("{}", summary(result));
        }
        None => println!("{}", summary(result)),
    }
    Ok(())
}

fn summary(r: &RunResult) -> String {
    let group = r.group.as_deref().unwrap_or("");
    let res = &r.results;
    match r.command.as_str() {
        "diameter" => format!(
            "{group}: diameter {} ({} graph, {} vertices, {} components)",
            res["diameter"],
            res["kind"].as_str().unwrap_or(""),
            res["vertices"],
            res["components"]
        ),
        "ball" => format!("{group}: ball of radius {} has {} elements", res["radius"], res["size"]),
        "certify" => match &r.certificate {
            Some(_) => format!(
                "{group}: {} certificate verified, written to {}",
                r.arguments["target"].as_str().unwrap_or(""),
                res["file"].as_str().unwrap_or("")
            ),
            None => format!("{group}: nothing found after {} conjugators", res["tried"]),
        },
        "verify" => format!(
            "{group}: {} certificate {}",
            res["certificate_kind"].as_str().unwrap_or(""),
            if res["verified"] == Value::Bool(true) { "verified" } else { "REJECTED" }
        ),
        "suite" => {
            let criteria = res["criteria"].as_array().map_or(&[][..], |v| v.as_slice());
            let failed = criteria.iter().filter(|c| c["passed"] != Value::Bool(true)).count();
            format!(
                "suite {}: {} passed, {failed} failed",
                res["tier"].as_str().unwrap_or(""),
                criteria.len() - failed
            )
        }
        _ => res.to_string(),
    }
}

fn diameter(ctx: &Ctx, spec: &str) -> Result<(RunResult, u8), CliError> {
    let kind = ctx.kind();
    let key = Key {
        spec,
        kind: kind.name(),
        operation: "diameter",
        parameters: json!({}),
        format_version: FORMAT_VERSION,
    };
    ctx.cached(&key, || {
        let g = ctx.group(spec)?;
        let v = GraphView::new(&g, kind, DEFAULT_CAP)?;
        let mut r = ctx.result("diameter", json!({ "spec": spec }), Some(spec));
        r.kind = Some(kind);
        r.results = json!({
            "kind": kind,
            "order": g.order_u64(),
            "vertices": v.vertex_count(),
            "isolated": v.isolated().len(),
            "components": v.components().len(),
            "diameter": v.diameter(),
        });
        Ok((r, 0))
    })
}

fn ball(ctx: &Ctx, spec: &str, element: &str, radius: u32, members: bool) -> Result<(RunResult, u8), CliError> {
    let kind = ctx.kind();
    let g = ctx.group(spec)?;
    let x = Permutation::parse_cycles(element, g.degree())?;
    let key = Key {
        spec,
        kind: kind.name(),
        operation: "ball",
        parameters: json!({ "element": x.to_cycle_string(), "radius": radius, "members": members }),
        format_version: FORMAT_VERSION,
    };
    ctx.cached(&key, || {
        let v = GraphView::new(&g, kind, DEFAULT_CAP)?;
        let center = v.vertex_of(&x)?;
        let b = v.ball(center, radius)?;
        let mut r = ctx.result(
            "ball",
            json!({ "spec": spec, "element": x.to_cycle_string(), "radius": radius, "members": members }),
            Some(spec),
        );
        r.kind = Some(kind);
        let mut res = json!({ "radius": radius, "size": b.members.len() });
        if members {
            res["members"] = b
                .members
                .iter()
                .map(|&e| Value::String(v.table().perm(e).to_cycle_string()))
                .collect();
        }
        r.results = res;
        Ok((r, 0))
    })
}

fn certify(ctx: &Ctx, spec: &str, target: Target, subgroup: &[String]) -> Result<(RunResult, u8), CliError> {
    let cli = ctx.cli;
    let kind = ctx.kind();
    let target_name = match target {
        Target::Lb3 => "lb3",
        Target::Lb4 => "lb4",
        Target::Base2 => "base2",
    };
    let g = ctx.group(spec)?;
    let sub: Vec<String> = subgroup
        .iter()
        .map(|s| Permutation::parse_cycles(s, g.degree()).map(|p| p.to_cycle_string()))
        .collect::<Result<_, _>>()?;
    let arguments = json!({
        "spec": spec,
        "target": target_name,
        "seed": cli.seed,
        "budget": cli.budget,
        "subgroup": sub,
    });
    let key = Key {
        spec,
        kind: kind.name(),
        operation: "certify",
        parameters: arguments.clone(),
        format_version: FORMAT_VERSION,
    };
    ctx.cached(&key, || {
        let search = Search::Random {
            seed: cli.seed,
            budget: cli.budget,
        };
        let outcome = match target {
            Target::Lb3 => find_lb3(&GraphView::new(&g, kind, DEFAULT_CAP)?, spec, search)?,
            Target::Lb4 => find_lb4(&GraphView::new(&g, kind, DEFAULT_CAP)?, spec, search)?,
            Target::Base2 => {
                let h = if sub.is_empty() {
                    default_base_subgroup(&g)?
                } else {
                    let gens = sub
                        .iter()
                        .map(|s| Permutation::parse_cycles(s, g.degree()))
                        .collect::<Result<Vec<_>, _>>()?;
                    Group::from_generators(gens)?
                };
                base_two_search(&g, &h, spec, cli.seed, cli.budget)?
            }
        };
        let mut r = ctx.result("certify", arguments.clone(), Some(spec));
        r.kind = Some(kind);
        r.seed = Some(cli.seed);
        match outcome {
            Outcome::Found(mut cert) => {
                if !verify(&cert)? {
                    return Err(solgraph::Error::Certificate("search produced a certificate that fails verification".into()).into());
                }
                cert.verified = true;
                let path = ctx.cache.certificate_path(&key);
                cache::write(&path, &cert.to_json())?;
                r.results = json!({ "found": true, "file": path.display().to_string() });
                r.certificate = Some(cert);
                Ok((r, 0))
            }
            Outcome::NotFound { tried } => {
                r.results = json!({ "found": false, "tried": tried });
                Ok((r, NOT_FOUND))
            }
        }
    })
}

fn verify_file(ctx: &Ctx, file: &std::path::Path) -> Result<(RunResult, u8), CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    let cert = Certificate::from_json(&text)?;
    if !matches!(cert.kind, solgraph::certs::CertKind::SophieBound) {
        ctx.group(&cert.group)?;
    }
    let ok = verify(&cert)?;
    let mut r = ctx.result("verify", json!({ "file": file.display().to_string() }), Some(&cert.group));
    r.seed = Some(cert.seed);
    r.results = json!({ "certificate_kind": cert.kind, "verified": ok });
    r.certificate = Some(cert);
    Ok((r, if ok { 0 } else { REJECTED }))
}

fn run_suite(ctx: &Ctx, tier: Tier) -> Result<(RunResult, u8), CliError> {
    let to_stdout = ctx.cli.json.as_ref().is_none_or(|p| p.as_os_str() != "-");
    let reports = suite::run(tier, |rep| {
        if to_stdout {
            println!("{rep}");
        } else {
            eprintln!("{rep}");
        }
    });
    let passed = reports.iter().all(|r| r.passed);
    let mut r = ctx.result("suite", json!({ "tier": tier }), None);
    r.results = json!({
        "tier": tier,
        "passed": passed,
        "criteria": reports
            .iter()
            .map(|c| json!({ "id": c.id, "tier": c.tier, "title": c.title, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
    });
    r.timing.criteria_seconds = reports.iter().map(|c| c.seconds).collect();
    Ok((r, if passed { 0 } else { 1 }))
}
