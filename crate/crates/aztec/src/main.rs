//! Command-line interface: build graphs, count matchings, evaluate the
//! product formulas, replay the identity verifications, render SVG.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use aztec::graph::{io, EmbeddedPlanarGraph};
use aztec::matching::count_matchings;
use aztec::regions::RegionSpec;
use aztec::replay::{to_jsonl, verify_chain, verify_complementation, IdentityReport};
use aztec::Weight;

#[derive(Parser)]
#[command(
    name = "aztec",
    about = "Exact perfect-matching counts and identity replay for Aztec-triangle and cruciform graph families",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphSource {
    /// Region specification, e.g. "aztec-triangle:n=5" or
    /// "cruciform:m=9,n=6,a=3,b=4,c=5,d=2"
    #[arg(long)]
    region: Option<String>,
    /// Path to a graph JSON file
    #[arg(long)]
    graph_json: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<EmbeddedPlanarGraph, String> {
        match (&self.region, &self.graph_json) {
            (Some(spec), None) => {
                let spec: RegionSpec = spec.parse()?;
                spec.build().map_err(|e| e.to_string())
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read {path}: {e}"))?;
                io::from_json(&text)
            }
            _ => Err("exactly one of --region and --graph-json is required".into()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a region graph and emit its JSON representation
    Build {
        #[command(flatten)]
        source: GraphSource,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
    },
    /// Count perfect matchings exactly
    Count {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Evaluate a closed-form product formula
    Formula {
        /// One of: T, C, D, trimmed-ar, ratio
        #[arg(long)]
        name: String,
        /// Comma-separated parameters, e.g. "n=5" or "m=2,n=2,T=1;3"
        #[arg(long)]
        params: String,
    },
    /// Replay identity verifications; exit 0 iff all checks pass
    Verify {
        /// Replay the factorization chain for n = 1..n_max
        #[arg(long)]
        chain: bool,
        #[arg(long, default_value_t = 4)]
        n_max: i64,
        /// Replay the complementation route from "m,n,a,b,d"
        #[arg(long)]
        complementation: Option<String>,
        /// Write the JSON-lines report to this file
        #[arg(long)]
        report: Option<String>,
    },
    /// Render a graph as SVG
    Render {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        out: String,
    },
}

fn parse_params(s: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    for part in s.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        map.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(map)
}

fn need(map: &BTreeMap<String, String>, key: &str) -> Result<i64, String> {
    map.get(key)
        .ok_or_else(|| format!("missing parameter {key}"))?
        .parse()
        .map_err(|_| format!("parameter {key} must be an integer"))
}

fn run_formula(name: &str, params: &str) -> Result<String, String> {
    use aztec::formulas::*;
    let p = parse_params(params)?;
    match name {
        "T" => Ok(formula_t(need(&p, "n")?).map_err(|e| e.to_string())?.to_string()),
        "C" => {
            let v = formula_c(
                need(&p, "m")?,
                need(&p, "n")?,
                need(&p, "a")?,
                need(&p, "b")?,
                need(&p, "c")?,
                need(&p, "d")?,
            )
            .map_err(|e| e.to_string())?;
            Ok(v.to_string())
        }
        "D" => {
            let v = formula_d(
                need(&p, "m")?,
                need(&p, "n")?,
                need(&p, "a")?,
                need(&p, "b")?,
                need(&p, "d")?,
            )
            .map_err(|e| e.to_string())?;
            Ok(v.to_string())
        }
        "trimmed-ar" => {
            let t: Result<Vec<i64>, _> = p
                .get("T")
                .ok_or("missing parameter T")?
                .split(';')
                .map(|x| x.trim().parse::<i64>())
                .collect();
            let t = t.map_err(|_| "T must be integers separated by ;")?;
            let v = formula_trimmed_ar(need(&p, "m")?, need(&p, "n")?, &t)
                .map_err(|e| e.to_string())?;
            Ok(v.to_string())
        }
        "ratio" => {
            let (l, m, r) = ratio_identity(need(&p, "n")?).map_err(|e| e.to_string())?;
            Ok(format!("{l} = {m} = {r}"))
        }
        other => Err(format!("unknown formula {other:?}")),
    }
}

fn emit_reports(reports: &[IdentityReport], path: Option<&str>) -> Result<bool, String> {
    let jsonl = to_jsonl(reports);
    if let Some(path) = path {
        std::fs::write(path, &jsonl).map_err(|e| format!("cannot write {path}: {e}"))?;
    }
    let mut all_pass = true;
    for line in jsonl.lines() {
        println!("{line}");
    }
    for r in reports {
        all_pass &= r.pass;
    }
    Ok(all_pass)
}

fn run() -> Result<ExitCode, String> {
    match Cli::parse().command {
        Command::Build { source, out } => {
            let g = source.load()?;
            let json = io::to_json(&g);
            match out {
                Some(path) => std::fs::write(&path, json)
                    .map_err(|e| format!("cannot write {path}: {e}"))?,
                None => println!("{json}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { source } => {
            let g = source.load()?;
            let count: Weight = count_matchings(&g);
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Formula { name, params } => {
            println!("{}", run_formula(&name, &params)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { chain, n_max, complementation, report } => {
            let mut reports = Vec::new();
            if chain {
                reports.extend(verify_chain(n_max));
            }
            if let Some(spec) = complementation {
                let vals: Result<Vec<i64>, _> =
                    spec.split(',').map(|x| x.trim().parse::<i64>()).collect();
                let vals = vals.map_err(|_| "expected m,n,a,b,d integers".to_string())?;
                if vals.len() != 5 {
                    return Err("expected exactly m,n,a,b,d".into());
                }
                reports.extend(verify_complementation(
                    vals[0], vals[1], vals[2], vals[3], vals[4],
                ));
            }
            if reports.is_empty() {
                return Err("nothing to verify: pass --chain and/or --complementation".into());
            }
            let all_pass = emit_reports(&reports, report.as_deref())?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Render { source, out } => {
            let g = source.load()?;
            let svg = aztec::svg::render_svg(&g, None);
            std::fs::write(&out, svg).map_err(|e| format!("cannot write {out}: {e}"))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
