use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use spherical_core::catalog::{list_families, CatalogEntry};
use spherical_core::crosscheck::crosscheck;
use spherical_core::document::{GraphDocument, VerdictDocument};
use spherical_core::reflections::reflect_step;
use spherical_core::scalar::{format_scalar, parse_scalar};
use spherical_core::sphericity::{signed_box_len, signed_box_nth};
use spherical_core::*;

/// Exit code for usage errors, unknown ids and malformed input.
const USAGE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "spherical",
    version,
    about = "Spherical highest weights of supersymmetric pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the families or show one system.
    Pair {
        #[command(subcommand)]
        action: PairAction,
    },
    /// Reflect a base in a simple root, optionally carrying a weight.
    Reflect {
        #[command(flatten)]
        pair: PairArgs,
        /// The simple root, as a coordinate tuple.
        #[arg(long, allow_hyphen_values = true)]
        root: String,
        #[arg(short = 'w', long, allow_hyphen_values = true)]
        weight: Option<String>,
    },
    /// Decide whether a weight is spherical. Exit 0, 1 or 2 for spherical,
    /// not spherical or undetermined.
    Check {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short = 'w', long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Print the spherical weights of a coordinate box, one JSON array per line.
    Enumerate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        max_coeff: i64,
    },
    /// Compare the decision procedure with the closed form over a box.
    Crosscheck {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 8, allow_hyphen_values = true)]
        max_coeff: i64,
    },
    /// The graph of bases reachable by reflections.
    Basegraph {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        singular_only: bool,
        /// Print Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum PairAction {
    List {
        #[arg(long)]
        json: bool,
    },
    Show {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Family id, see `pair list`.
    id: Option<String>,
    #[arg(long = "pair")]
    pair: Option<String>,
    /// Simple roots as coordinate tuples, e.g. "(1,-1),(0,1)".
    #[arg(long, allow_hyphen_values = true)]
    base: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    #[arg(long)]
    m: Option<String>,
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    r: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    odd: Option<String>,
    #[arg(long)]
    mult: Option<String>,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Out<T> = std::result::Result<T, Failure>;

impl PairArgs {
    fn spec(&self) -> Out<PairSpec> {
        let id = match (&self.id, &self.pair) {
            (Some(a), Some(b)) if a != b => {
                return Err(Failure(format!("conflicting pair ids `{a}` and `{b}`")))
            }
            (Some(a), _) | (None, Some(a)) => a,
            (None, None) => return Err(Failure("a pair id is required".into())),
        };
        let mut params = BTreeMap::new();
        for (name, v) in [
            ("a", &self.a),
            ("k", &self.k),
            ("m", &self.m),
            ("n", &self.n),
            ("r", &self.r),
            ("s", &self.s),
            ("odd", &self.odd),
            ("mult", &self.mult),
        ] {
            if let Some(v) = v {
                params.insert(name.to_string(), parse_scalar(v)?);
            }
        }
        Ok(PairSpec::from_params(id, &params)?)
    }

    fn entry(&self) -> Out<(CatalogEntry, Base)> {
        let entry = build_pair(&self.spec()?)?;
        let base = match &self.base {
            Some(b) => entry.system.validate_base(&parse_base(b)?)?,
            None => entry.default_base.clone(),
        };
        Ok((entry, base))
    }
}

/// `(1,-1),(0,1)` or `1,-1;0,1`.
fn parse_base(s: &str) -> Out<Vec<Weight>> {
    let t = s.trim();
    let parts: Vec<String> = if t.contains(';') {
        t.split(';').map(str::to_string).collect()
    } else {
        t.split(')')
            .map(|p| p.trim().trim_start_matches(',').trim().to_string())
            .filter(|p| !p.is_empty())
            .collect()
    };
    if parts.is_empty() {
        return Err(Failure(format!("malformed base `{s}`")));
    }
    parts
        .iter()
        .map(|p| Weight::parse_list(p).map_err(Failure::from))
        .collect()
}

fn parse_weight(s: &str, dim: usize) -> Out<Weight> {
    let w = Weight::parse_list(s)?;
    if w.dim() != dim {
        return Err(Failure(format!(
            "expected {dim} coordinates, got {}",
            w.dim()
        )));
    }
    Ok(w)
}

fn strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(format_scalar).collect()
}

fn pair_list(json: bool, out: &mut impl Write) -> Out<()> {
    let families = list_families();
    if json {
        writeln!(out, "{}", serde_json::to_string_pretty(&families)?)?;
        return Ok(());
    }
    for f in families {
        let params: Vec<String> = f
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", format_scalar(v)))
            .collect();
        writeln!(
            out,
            "{:<11} {:<44} {:<18} {} [{}]",
            f.id,
            f.pair,
            f.system,
            f.constraints,
            params.join(" ")
        )?;
    }
    Ok(())
}

fn pair_show(args: &PairArgs, json: bool, out: &mut impl Write) -> Out<()> {
    let (entry, base) = args.entry()?;
    let sys = &entry.system;
    let principal = sys.principal_roots(&base);
    if json {
        let roots: Vec<_> = sys
            .roots()
            .iter()
            .map(|r| {
                json!({
                    "root": strings(&r.vector),
                    "even": r.mult.even,
                    "odd": r.mult.odd,
                    "exact": r.mult.exact,
                    "singular": sys.is_singular(&r.vector).unwrap_or(false),
                })
            })
            .collect();
        let doc = json!({
            "pair": entry.spec.family_id(),
            "spec": entry.spec,
            "name": entry.spec.to_string(),
            "labels": sys.labels(),
            "gram": sys.form().gram().iter().map(|row| row.iter().map(format_scalar).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "roots": roots,
            "base": base,
            "principal_roots": principal,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        return Ok(());
    }
    writeln!(out, "{}", entry.spec)?;
    writeln!(out, "coordinates: {}", sys.labels().join(", "))?;
    writeln!(out, "roots:")?;
    for r in sys.roots() {
        let kind = if sys.is_singular(&r.vector)? {
            "singular"
        } else {
            "regular"
        };
        writeln!(
            out,
            "  {:<24} {:<8} {kind}",
            r.vector.to_string(),
            r.mult.to_string()
        )?;
    }
    writeln!(out, "base: {base}")?;
    let p: Vec<String> = principal.iter().map(ToString::to_string).collect();
    writeln!(out, "principal roots: {}", p.join(", "))?;
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Out<u8> {
    match cli.command {
        Command::Pair {
            action: PairAction::List { json },
        } => pair_list(json, out)?,
        Command::Pair {
            action: PairAction::Show { pair, json },
        } => pair_show(&pair, json, out)?,
        Command::Reflect { pair, root, weight } => {
            let (entry, base) = pair.entry()?;
            let dim = entry.system.dim();
            let alpha = parse_weight(&root, dim)?;
            let lambda = weight.map(|w| parse_weight(&w, dim)).transpose()?;
            let step = reflect_step(&entry.system, &base, &alpha, lambda.as_ref())?;
            writeln!(out, "{}", serde_json::to_string_pretty(&step)?)?;
        }
        Command::Check { pair, weight } => {
            let (entry, base) = pair.entry()?;
            let lambda = parse_weight(&weight, entry.system.dim())?;
            let verdict = decide_spherical(&entry.system, &base, &lambda)?;
            let doc = VerdictDocument::new(&entry.spec, &base, &lambda, verdict);
            writeln!(out, "{}", doc.to_json())?;
            return Ok(doc.exit_code() as u8);
        }
        Command::Enumerate { pair, max_coeff } => {
            if max_coeff < 0 {
                return Err(Failure("--max-coeff must be non-negative".into()));
            }
            let (entry, base) = pair.entry()?;
            let ctx = SphericityContext::new(&entry.system, &base)?;
            let dim = entry.system.dim();
            for i in 0..signed_box_len(dim, -max_coeff, max_coeff) {
                let l = signed_box_nth(dim, -max_coeff, max_coeff, i);
                if ctx.passes_necessary(&l) && ctx.decide(&l)?.is_spherical() {
                    writeln!(out, "{}", serde_json::to_string(&strings(&l))?)?;
                }
            }
        }
        Command::Crosscheck { pair, max_coeff } => {
            let report = crosscheck(&pair.spec()?, max_coeff)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            return Ok(if report.clean() { 0 } else { 1 });
        }
        Command::Basegraph {
            pair,
            singular_only,
            dot,
        } => {
            let (entry, base) = pair.entry()?;
            let doc = GraphDocument::build(&entry.spec, Some(&base), singular_only)?;
            if dot {
                write!(out, "{}", doc.graph.to_dot())?;
            } else {
                writeln!(out, "{}", doc.to_json())?;
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(c) => c,
        Err(Failure(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            USAGE
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
