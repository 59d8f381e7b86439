mod docs;
mod render;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use etheta::axioms;
use etheta::maps::{MapPropertyKind, SpaceMap};
use etheta::par::Executor;
use etheta::space::collect_topologies;
use etheta::verify::{self, catalog, Bounds, ClaimReport, Cursor, Status, Tier};
use etheta::{FamilyKind, OperatorKind, OperatorTable, PointSet, SetFamily};
use serde_json::{json, Value};

use render::{Format, Table};

/// Largest space for which `analyze` lists every subset by default.
const ANALYZE_ALL_LIMIT: usize = 5;

#[derive(Parser)]
#[command(name = "etheta", version, about = "Generalized open sets, separation axioms and map properties on finite spaces")]
struct Cli {
    /// Output format; defaults to `table` on a terminal and `json-lines` otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Operator values and family memberships of subsets.
    Analyze(AnalyzeArgs),
    /// Separation axioms, with a witness for each failure.
    Axioms { space: PathBuf },
    /// Properties of a map between two spaces.
    Map(MapArgs),
    /// Check claims over the enumerated spaces and maps.
    Verify(VerifyArgs),
    /// Every topology on a fixed number of points, one document per line.
    Enumerate(EnumerateArgs),
    /// The claim catalog.
    Claims,
}

#[derive(Args)]
struct AnalyzeArgs {
    space: PathBuf,
    /// Comma-joined labels, e.g. `a,b`; repeatable.
    #[arg(long = "set")]
    sets: Vec<String>,
    /// Restrict to these operators (comma-joined).
    #[arg(long = "op", value_delimiter = ',')]
    ops: Vec<OperatorKind>,
    /// Print whole families instead; with no value, every family.
    #[arg(long, num_args = 0..=1, require_equals = false, value_delimiter = ',', default_missing_value = "all")]
    families: Option<Vec<String>>,
}

#[derive(Args)]
struct MapArgs {
    /// A map document, or the domain space when `--map` is given.
    domain: PathBuf,
    /// Codomain space; defaults to the domain.
    codomain: Option<PathBuf>,
    /// Assignment such as `a:c,b:c,c:c,d:c`.
    #[arg(long = "map")]
    assignment: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim ids, or their prefix before the first `-`; repeatable. Defaults to the whole catalog.
    #[arg(long = "claim")]
    claims: Vec<String>,
    #[arg(long, default_value_t = 4)]
    max_points: usize,
    /// Largest map domain and codomain; defaults to `min(max-points, 3)`.
    #[arg(long)]
    map_points: Option<usize>,
    #[arg(long, env = "ETHETA_WORKERS")]
    workers: Option<usize>,
    /// Stop each claim after this many instances and report a cursor.
    #[arg(long)]
    budget: Option<u64>,
    /// Continue from a cursor file (a cursor, or a report line that carries one).
    #[arg(long, conflicts_with_all = ["claims", "max_points", "map_points"])]
    resume: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    points: usize,
    /// Only T0 spaces.
    #[arg(long)]
    t0: bool,
    #[arg(long, env = "ETHETA_WORKERS")]
    workers: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format.unwrap_or_else(Format::detect);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Analyze(a) => analyze(a, format, &mut out),
        Command::Axioms { space } => axioms_cmd(space, format, &mut out),
        Command::Map(m) => map_cmd(m, format, &mut out),
        Command::Verify(v) => verify_cmd(v, format, &mut out),
        Command::Enumerate(e) => enumerate(e, format, &mut out),
        Command::Claims => claims(format, &mut out),
    };
    let flushed = out.flush();
    match result {
        Ok(code) if flushed.is_ok() => ExitCode::from(code),
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn analyze(args: AnalyzeArgs, format: Format, out: &mut impl Write) -> Result<u8> {
    let space = docs::load_space(&args.space)?;
    let n = space.len();
    if let Some(selected) = args.families {
        let t = OperatorTable::with_limit(space.clone(), etheta::set::MAX_POINTS)?;
        let kinds: Vec<FamilyKind> = if selected.iter().any(|s| s == "all") {
            FamilyKind::ALL.to_vec()
        } else {
            selected.iter().map(|s| s.parse().map_err(anyhow::Error::msg)).collect::<Result<_>>()?
        };
        let mut table = Table::new(["family", "size", "members"]);
        for k in kinds {
            let fam = t.family(k);
            let sets: Vec<Value> = fam.iter().map(|a| render::labels(&space, a)).collect();
            match format {
                Format::JsonLines => render::emit(out, &json!({ "family": k.name(), "size": fam.len(), "sets": sets }))?,
                Format::Table => table.row(vec![
                    k.name().into(),
                    format!("{}/{}", fam.len(), 1u64 << n),
                    fam.iter().map(|a| space.format_set(a)).collect::<Vec<_>>().join(" "),
                ]),
            }
        }
        if format == Format::Table {
            table.print(out)?;
        }
        return Ok(0);
    }

    let sets: Vec<PointSet> = if args.sets.is_empty() {
        if n > ANALYZE_ALL_LIMIT {
            return Err(etheta::Error::CarrierTooLarge { points: n, limit: ANALYZE_ALL_LIMIT })
                .context("pass --set to analyze individual subsets");
        }
        SetFamily::filter_all(n, |_| true).iter().collect()
    } else {
        args.sets.iter().map(|s| space.parse_set(s)).collect::<Result<_, _>>()?
    };
    let t = OperatorTable::with_limit(space.clone(), etheta::set::MAX_POINTS)?;
    let ops = if args.ops.is_empty() { OperatorKind::ALL.to_vec() } else { args.ops };

    let mut header = vec!["set".to_string()];
    header.extend(ops.iter().map(|o| o.name().to_string()));
    header.push("families".into());
    let mut table = Table::new(header);
    for a in sets {
        let values: Vec<PointSet> = ops.iter().map(|&o| t.apply(o, a)).collect();
        let member: Vec<&str> = FamilyKind::ALL.iter().filter(|&&k| t.contains(k, a)).map(|k| k.name()).collect();
        match format {
            Format::JsonLines => {
                let operators: serde_json::Map<String, Value> =
                    ops.iter().zip(&values).map(|(o, &v)| (o.name().to_string(), render::labels(&space, v))).collect();
                render::emit(out, &json!({ "set": render::labels(&space, a), "operators": operators, "families": member }))?;
            }
            Format::Table => {
                let mut row = vec![space.format_set(a)];
                row.extend(values.iter().map(|&v| space.format_set(v)));
                row.push(member.join(" "));
                table.row(row);
            }
        }
    }
    if format == Format::Table {
        table.print(out)?;
    }
    Ok(0)
}

fn axioms_cmd(path: PathBuf, format: Format, out: &mut impl Write) -> Result<u8> {
    let space = docs::load_space(&path)?;
    let t = OperatorTable::with_limit(space.clone(), etheta::set::MAX_POINTS)?;
    let report = axioms::report(&t);
    let mut table = Table::new(["axiom", "holds", "witness"]);
    for (kind, outcome) in &report.outcomes {
        let witness = outcome.witness.map(|w| render::axiom_witness(&space, &w));
        match format {
            Format::JsonLines => {
                let mut line = json!({ "axiom": kind.name(), "holds": outcome.holds });
                if let Some(w) = witness {
                    line["witness"] = w;
                }
                render::emit(out, &line)?;
            }
            Format::Table => table.row(vec![
                kind.name().into(),
                outcome.holds.to_string(),
                witness.as_ref().map(render::brief).unwrap_or_default(),
            ]),
        }
    }
    match format {
        Format::JsonLines => render::emit(out, &json!({ "cc-points": render::labels(&space, report.cc_points) }))?,
        Format::Table => {
            table.row(vec!["cc-points".into(), String::new(), space.format_set(report.cc_points)]);
            table.print(out)?;
        }
    }
    Ok(0)
}

fn map_cmd(args: MapArgs, format: Format, out: &mut impl Write) -> Result<u8> {
    let map = match &args.assignment {
        Some(text) => {
            let x = docs::load_space(&args.domain)?;
            let y = match &args.codomain {
                Some(p) => docs::load_space(p)?,
                None => x.clone(),
            };
            SpaceMap::from_labels(x, y, docs::parse_assignment(text)?)?
        }
        None => {
            if args.codomain.is_some() {
                bail!("a codomain file needs --map; a map document carries its own spaces");
            }
            docs::load_map(&args.domain)?
        }
    };
    let analysis = map.analyze()?;
    let view = analysis.view();
    let mut table = Table::new(["property", "holds", "witness"]);
    for &kind in MapPropertyKind::ALL {
        let outcome = view.property(kind)?;
        let witness = outcome.witness.map(|w| render::map_witness(map.domain(), map.codomain(), &w));
        match format {
            Format::JsonLines => {
                let mut line = json!({ "property": kind.name(), "holds": outcome.holds });
                if let Some(w) = witness {
                    line["witness"] = w;
                }
                render::emit(out, &line)?;
            }
            Format::Table => table.row(vec![
                kind.name().into(),
                outcome.holds.to_string(),
                witness.as_ref().map(render::brief).unwrap_or_default(),
            ]),
        }
    }
    if format == Format::Table {
        for (k, v) in [("surjective", view.is_surjective()), ("injective", view.is_injective())] {
            table.row(vec![k.into(), v.to_string(), String::new()]);
        }
        table.print(out)?;
    } else {
        render::emit(out, &json!({ "surjective": view.is_surjective(), "injective": view.is_injective() }))?;
    }
    Ok(0)
}

/// Exact id, or the unique id whose part before the first `-` matches.
fn resolve_claim(text: &str) -> Result<&'static str> {
    if let Ok(c) = verify::find(text) {
        return Ok(c.id);
    }
    let hits: Vec<&'static str> =
        catalog().iter().map(|c| c.id).filter(|id| id.split('-').next() == Some(text)).collect();
    match hits.as_slice() {
        [one] => Ok(one),
        _ => Err(etheta::Error::UnknownClaim(text.to_string()).into()),
    }
}

fn read_cursor(path: &PathBuf) -> Result<Cursor> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let line = text.lines().map(str::trim).filter(|l| !l.is_empty()).find(|l| l.contains("\"cursor\"") || l.contains("\"next\""));
    let line = line.with_context(|| format!("{}: no cursor found", path.display()))?;
    let value: Value = serde_json::from_str(line).with_context(|| format!("{}: not JSON", path.display()))?;
    let cursor = value.get("cursor").cloned().unwrap_or(value);
    serde_json::from_value(cursor).with_context(|| format!("{}: malformed cursor", path.display()))
}

fn verify_cmd(args: VerifyArgs, format: Format, out: &mut impl Write) -> Result<u8> {
    let workers = args.workers.unwrap_or_else(etheta::par::default_workers);
    let reports: Vec<(&'static str, etheta::Result<ClaimReport>)> = match &args.resume {
        Some(path) => {
            let cursor = read_cursor(path)?;
            let id = verify::find(&cursor.claim)?.id;
            vec![(id, verify::resume_claim(&cursor, args.budget, workers))]
        }
        None => {
            let mut bounds = Bounds::new(args.max_points).with_workers(workers);
            if let Some(k) = args.map_points {
                bounds = bounds.with_map_points(k);
            }
            bounds.budget = args.budget;
            let universe = verify::Universe::new(bounds)?;
            let claims = if args.claims.is_empty() {
                catalog().iter().collect::<Vec<_>>()
            } else {
                args.claims.iter().map(|c| resolve_claim(c).and_then(|id| Ok(verify::find(id)?))).collect::<Result<_>>()?
            };
            verify::run_suite_in(&universe, claims)
        }
    };

    let mut code = 0u8;
    let mut table = Table::new(["claim", "tier", "status", "instances", "substantive", "vacuous", "seconds", "witness"]);
    for (id, result) in &reports {
        match result {
            Ok(r) => {
                if r.status == Status::Refuted && r.tier == Tier::Core {
                    code = 2;
                }
                if r.status == Status::BudgetExceeded && code == 0 {
                    code = 3;
                }
                match format {
                    Format::JsonLines => writeln!(out, "{}", r.to_json())?,
                    Format::Table => table.row(vec![
                        r.id.clone(),
                        serde_json::to_value(r.tier)?.as_str().unwrap_or_default().into(),
                        r.status.to_string(),
                        r.instances.to_string(),
                        r.substantive.to_string(),
                        r.vacuous.to_string(),
                        format!("{:.3}", r.wall.as_secs_f64()),
                        r.witness.as_ref().map(|w| w["detail"].to_string()).unwrap_or_default(),
                    ]),
                }
            }
            Err(e) => {
                // An internal disagreement means the claim could not be checked.
                code = 2;
                match format {
                    Format::JsonLines => render::emit(out, &json!({ "id": id, "error": e.to_string() }))?,
                    Format::Table => table.row(vec![id.to_string(), String::new(), "ERROR".into(), e.to_string()]),
                }
            }
        }
    }
    if format == Format::Table {
        table.print(out)?;
        if let Some(c) = reports.iter().find_map(|(_, r)| r.as_ref().ok()?.cursor.as_ref()) {
            writeln!(out, "\nbudget exhausted; resume with --resume on a file holding:\n{}", serde_json::to_string(c)?)?;
        }
    }
    Ok(code)
}

fn enumerate(args: EnumerateArgs, format: Format, out: &mut impl Write) -> Result<u8> {
    let exec = Executor::new(args.workers.unwrap_or_else(etheta::par::default_workers));
    let spaces = collect_topologies(args.points, args.t0, &exec)?;
    for s in &spaces {
        match format {
            Format::JsonLines => writeln!(out, "{}", s.to_document().to_json())?,
            Format::Table => {
                writeln!(out, "{}", s.opens().iter().map(|a| s.format_set(a)).collect::<Vec<_>>().join(" "))?
            }
        }
    }
    if format == Format::Table {
        writeln!(out, "{} spaces", spaces.len())?;
    }
    Ok(0)
}

fn claims(format: Format, out: &mut impl Write) -> Result<u8> {
    let mut table = Table::new(["claim", "tier", "statement"]);
    for c in catalog() {
        let tier = serde_json::to_value(c.tier)?;
        match format {
            Format::JsonLines => render::emit(out, &json!({ "id": c.id, "tier": tier, "statement": c.citation }))?,
            Format::Table => table.row(vec![c.id.into(), tier.as_str().unwrap_or_default().into(), c.citation.into()]),
        }
    }
    if format == Format::Table {
        table.print(out)?;
    }
    Ok(0)
}
