use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rotabrace::catalog::{
    load_brace, load_operator, load_solution, parse_carrier, Catalog, Provenance,
};
use rotabrace::formats::{BraceFile, SolutionFile};
use rotabrace::random::random_non_solution;
use rotabrace::{
    builtins, enumerate_parallel, run_catalog, run_pipeline, CatalogReport, Options, Stage,
};
use rotabrace_core::weak_brace::{
    brace_from_operator, enumerate_ideals, quotient_brace, socle, DualWeakBrace,
};
use rotabrace_core::ybe::{regularity_report, solution_from_brace, SolutionMap};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "rotabrace",
    version,
    about = "Rota–Baxter operators, weak braces and Yang–Baxter solutions on finite Clifford semigroups"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads for enumeration and per-operator analysis.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Seed for random examples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest carrier to enumerate operators on.
    #[arg(long, global = true, default_value_t = 8)]
    max_order: usize,
    /// Largest brace to enumerate ideals of.
    #[arg(long, global = true, default_value_t = 10)]
    max_ideal_order: usize,
    /// Largest carrier for equivalence searches.
    #[arg(long, global = true, default_value_t = 8)]
    max_equiv_order: usize,
}

impl Global {
    fn options(&self, timing: bool) -> Options {
        Options {
            max_order: self.max_order,
            max_ideal_order: self.max_ideal_order,
            max_equiv_order: self.max_equiv_order,
            workers: self.workers,
            timing,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Verify a carrier, spec, brace, operator or solution file.
    Verify { file: PathBuf },
    /// List every Rota–Baxter operator on a carrier.
    EnumerateRb { carrier: String },
    /// Build the brace of an operator file on a carrier.
    BuildBrace { carrier: String, operator: PathBuf },
    /// Check the braid relation and regularity for a brace or solution file.
    CheckYbe {
        file: Option<PathBuf>,
        /// Check a seeded random map on this many points instead of a file.
        #[arg(long, conflicts_with = "file")]
        random: Option<usize>,
    },
    /// Group the operators on a carrier into automorphism orbits.
    Classify { carrier: String },
    /// Ideals and socle of a brace file.
    Ideals { brace: PathBuf },
    /// Quotient of a brace by an ideal given as comma-separated elements.
    Quotient { brace: PathBuf, ideal: String },
    /// Run the analysis pipeline and print a report.
    Report {
        /// Carriers to report on; all builtins when empty.
        carriers: Vec<String>,
        /// Comma-separated stages.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "enumerate,classify,braces,ybe,ideals"
        )]
        stages: Vec<Stage>,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        /// Include wall-clock time per carrier.
        #[arg(long)]
        timing: bool,
    },
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn verify(path: &Path, catalog: &Catalog) -> Result<bool> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| anyhow::anyhow!("{}:{}:{}: {e}", path.display(), e.line(), e.column()))?;
    if value.get("add_table").is_some() {
        let (name, b) = load_brace(path)?;
        print_json(&json!({
            "kind": "brace", "name": name, "order": b.order(),
            "trivial": b.is_trivial(), "almost_trivial": b.is_almost_trivial(), "skew": b.is_skew_brace(),
        }));
    } else if value.get("r").is_some() {
        let r = load_solution(path)?;
        print_json(
            &json!({ "kind": "solution", "order": r.order(), "braid": r.is_solution(),
            "witness": r.braid().witness() }),
        );
        return Ok(r.is_solution());
    } else if let Some(carrier) = value.get("carrier").and_then(|c| c.as_str()) {
        let entry = catalog.load(carrier)?;
        let r = load_operator(path, &entry.carrier)?;
        print_json(&json!({ "kind": "operator", "carrier": entry.name, "images": r.images() }));
    } else {
        let stem = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let e = parse_carrier(
            &path.display().to_string(),
            &text,
            Provenance::File(path.to_owned()),
            stem,
        )?;
        print_json(&json!({
            "kind": e.kind, "name": e.name, "order": e.carrier.order(),
            "idempotents": e.carrier.idempotents(), "group": e.carrier.is_group(),
        }));
    }
    Ok(true)
}

fn ybe_json(b: &DualWeakBrace) -> serde_json::Value {
    let r = solution_from_brace(b);
    let rep = regularity_report(b);
    json!({
        "order": b.order(),
        "braid": r.is_solution(),
        "r_rop_r": rep.r_rop_r,
        "rop_r_rop": rep.rop_r_rop,
        "commute": rep.commute,
        "lambda_regular": rep.lambda_regular,
        "rho_regular": rep.rho_regular,
        "left_nondegenerate": rep.left_nondegenerate,
        "right_nondegenerate": rep.right_nondegenerate,
        "bijective": rep.bijective,
        "inverse_is_opposite": rep.inverse_is_opposite,
        "solution": SolutionFile::from_solution(&r),
    })
}

fn solution_json(r: &SolutionMap) -> serde_json::Value {
    json!({
        "order": r.order(),
        "braid": r.is_solution(),
        "witness": r.braid().witness(),
        "left_nondegenerate": r.is_left_nondegenerate(),
        "right_nondegenerate": r.is_right_nondegenerate(),
    })
}

fn parse_ideal(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .with_context(|| format!("bad element {t:?}"))
        })
        .collect()
}

fn run(cli: Cli) -> Result<bool> {
    let catalog = Catalog::from_env();
    let g = &cli.global;
    match cli.command {
        Command::Verify { file } => verify(&file, &catalog),
        Command::EnumerateRb { carrier } => {
            let e = catalog.load(&carrier)?;
            let ops = enumerate_parallel(&e.carrier, g.max_order, g.workers)?;
            let images: Vec<&[usize]> = ops.iter().map(|r| r.images()).collect();
            print_json(&json!({ "carrier": e.name, "count": ops.len(), "operators": images }));
            Ok(true)
        }
        Command::BuildBrace { carrier, operator } => {
            let e = catalog.load(&carrier)?;
            let r = load_operator(&operator, &e.carrier)?;
            let b = brace_from_operator(&e.carrier, &r)?;
            let name = format!(
                "{}-{}",
                e.name,
                operator.file_stem().unwrap_or_default().to_string_lossy()
            );
            println!(
                "{}",
                serde_json::to_string_pretty(&BraceFile::from_brace(Some(name), &b))?
            );
            Ok(true)
        }
        Command::CheckYbe { file, random } => match (file, random) {
            (_, Some(n)) => {
                if n == 0 {
                    bail!("--random needs at least one point");
                }
                let (seed, r) = random_non_solution(n, g.seed);
                let mut v = solution_json(&r);
                v["seed"] = json!(seed);
                v["solution"] = json!(SolutionFile::from_solution(&r));
                print_json(&v);
                Ok(r.is_solution())
            }
            (Some(path), None) => {
                let text =
                    std::fs::read_to_string(&path).with_context(|| path.display().to_string())?;
                if text.contains("\"add_table\"") {
                    let (_, b) = load_brace(&path)?;
                    let v = ybe_json(&b);
                    print_json(&v);
                    Ok(v["braid"].as_bool() == Some(true))
                } else {
                    let r = load_solution(&path)?;
                    print_json(&solution_json(&r));
                    Ok(r.is_solution())
                }
            }
            (None, None) => bail!("give a brace or solution file, or --random N"),
        },
        Command::Classify { carrier } => {
            let e = catalog.load(&carrier)?;
            let report = run_pipeline(&e, &[Stage::Enumerate, Stage::Classify], &g.options(false))?;
            let ok = report.passed();
            print!("{}", CatalogReport::new(vec![report]).to_json());
            Ok(ok)
        }
        Command::Ideals { brace } => {
            let (name, b) = load_brace(&brace)?;
            let ideals = enumerate_ideals(&b, g.max_ideal_order)?;
            let soc = socle(&b);
            let members: Vec<&[usize]> = ideals.iter().map(|i| i.members.as_slice()).collect();
            print_json(
                &json!({ "brace": name, "count": ideals.len(), "ideals": members, "socle": soc.members }),
            );
            Ok(true)
        }
        Command::Quotient { brace, ideal } => {
            let (name, b) = load_brace(&brace)?;
            let members = parse_ideal(&ideal)?;
            let q = quotient_brace(&b, &members)?;
            print_json(&json!({
                "brace": BraceFile::from_brace(Some(format!("{name}/{ideal}")), &q.brace),
                "projection": q.projection,
                "representatives": q.representatives,
                "idempotents_isomorphic": q.idempotents_isomorphic(&b),
            }));
            Ok(true)
        }
        Command::Report {
            carriers,
            stages,
            json,
            text,
            timing,
        } => {
            let entries = if carriers.is_empty() {
                builtins()
            } else {
                carriers
                    .iter()
                    .map(|c| catalog.load(c))
                    .collect::<Result<Vec<_>, _>>()?
            };
            let report = run_catalog(&entries, &stages, &g.options(timing))?;
            if text && !json {
                print!("{}", report.to_text());
            } else {
                print!("{}", report.to_json());
            }
            Ok(report.passed)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
