use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tfpl_cli::census::run_census;
use tfpl_cli::config::{Config, Overrides};
use tfpl_cli::render::{render_svg, Drawable};
use tfpl_cli::{corrupted_rules, suite_report, verify_all, verify_bijection};
use tfpl_core::bijection::{phi, phi_inverse, phi_oriented, LocalRuleTable};
use tfpl_core::dyck::{enumerate_dyck, DyckWord};
use tfpl_core::error::Error;
use tfpl_core::fpl::{a_pi_m, enumerate_fpl, link_pattern_counts, GridFpl};
use tfpl_core::identities::{
    verify_api_formula, verify_identity_c, verify_identity_t, verify_identity_tc, IdentityReport,
};
use tfpl_core::lr::lr_coefficient;
use tfpl_core::partition::{partitions_of, Partition};
use tfpl_core::puzzle::{enumerate_puzzles, puzzle_count, Puzzle};
use tfpl_core::tfpl::{enumerate_oriented_tfpl, enumerate_tfpl, OrientedTfplConfig, TfplConfig, TfplTable};
use tfpl_core::Result;

#[derive(Parser)]
#[command(name = "tfpl", version, about = "Fully packed loops in a triangle, puzzles and LR coefficients")]
struct Cli {
    /// TOML settings file
    #[arg(long, global = true, env = "TFPL_CONFIG")]
    config: Option<PathBuf>,
    /// Output directory for written files
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the Dyck words of half-length n
    Dyck {
        #[arg(long)]
        n: usize,
    },
    /// FPL counts by link pattern, or A_π(m) when --pi is given
    Fpl {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        pi: Option<DyckWord>,
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Print every configuration instead of counts
        #[arg(long)]
        list: bool,
    },
    /// TFPLs with the given boundary
    Tfpl {
        #[command(flatten)]
        boundary: Boundary,
        #[arg(long)]
        oriented: bool,
        #[arg(long)]
        count: bool,
    },
    /// Puzzles with the given boundary
    Puzzle {
        #[command(flatten)]
        boundary: Boundary,
        #[arg(long)]
        count: bool,
    },
    /// A Littlewood-Richardson coefficient
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long, default_value = "")]
        nu: Partition,
    },
    /// Map a puzzle to its TFPL
    Phi {
        #[arg(long)]
        puzzle: PathBuf,
        #[arg(long)]
        oriented: bool,
    },
    /// Recover the puzzle of a degree-balanced TFPL
    PhiInverse {
        #[arg(long)]
        tfpl: PathBuf,
    },
    /// Check one identity, or the whole acceptance suite when none is named
    Verify {
        #[arg(long, value_enum)]
        identity: Option<Identity>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i64,
        /// Test mode: run with a deliberately broken local rule table
        #[arg(long, hide = true)]
        corrupt_rules: bool,
    },
    /// Exhaustive bijectivity check of the puzzle map
    VerifyBijection {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Write the tables for size n to the output directory
    Census {
        #[arg(long)]
        n: usize,
    },
    /// Draw a JSON object (FPL, TFPL, oriented TFPL or puzzle) as SVG
    Render {
        #[arg(long)]
        input: PathBuf,
        /// Destination file; standard output when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(clap::Args)]
struct Boundary {
    #[arg(long)]
    sigma: DyckWord,
    #[arg(long)]
    tau: DyckWord,
    #[arg(long)]
    pi: DyckWord,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    T,
    C,
    Tc,
    Api,
}

enum Outcome {
    Json(Value),
    Text(String),
    /// A report whose `pass` field decides the exit status.
    Report(Value),
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(format!("reading {}", path.display()), e))?;
    Ok(serde_json::from_str(&text)?)
}

fn identity_report(config: &Config, id: Identity, n: usize, m: usize, k: i64) -> Result<IdentityReport> {
    let limits = config.limits();
    let words = enumerate_dyck(n);
    let range = format!("n={n}");
    let report = match id {
        Identity::C => {
            let parts = (0..=n).flat_map(partitions_of).map(|l| verify_identity_c(&l));
            IdentityReport::combine("c", format!("|λ|<={n}"), parts.collect::<Vec<_>>())
        }
        Identity::T | Identity::Tc => {
            let table = TfplTable::compute(n, &limits)?;
            let check = if matches!(id, Identity::T) { verify_identity_t } else { verify_identity_tc };
            let parts = words.iter().map(|pi| check(pi, &table)).collect::<Result<Vec<_>>>()?;
            let name = if matches!(id, Identity::T) { "t" } else { "tc" };
            IdentityReport::combine(name, range, parts)
        }
        Identity::Api => {
            let table = TfplTable::compute(n, &limits)?;
            let parts =
                words.iter().map(|pi| verify_api_formula(pi, m, k, &table, &limits)).collect::<Result<Vec<_>>>()?;
            IdentityReport::combine("api", format!("n={n} m={m} k={k}"), parts)
        }
    };
    Ok(report)
}

fn run(cli: Cli) -> Result<Outcome> {
    let overrides = Overrides { jobs: cli.jobs, out: cli.out };
    let config = Config::load(cli.config.as_deref(), &overrides)?;
    let limits = config.limits();
    Ok(match cli.command {
        Command::Dyck { n } => {
            let words: Vec<Value> = enumerate_dyck(n)
                .iter()
                .map(|w| {
                    json!({
                        "word": w,
                        "degree": w.degree(),
                        "diagram": w.diagram().to_string(),
                        "conjugate": w.conjugate(),
                    })
                })
                .collect();
            Outcome::Json(json!({ "n": n, "count": words.len(), "words": words }))
        }
        Command::Fpl { n, pi, m, list } => match (pi, n) {
            (Some(pi), _) => {
                let a = a_pi_m(&pi, m, &limits)?;
                Outcome::Json(json!({ "pi": pi, "m": m, "count": a.to_string() }))
            }
            (None, Some(n)) if list => {
                let all: Vec<Value> = enumerate_fpl(n, &limits)?.iter().map(GridFpl::to_json).collect();
                Outcome::Json(Value::Array(all))
            }
            (None, Some(n)) => {
                let counts = link_pattern_counts(n, &limits)?;
                let total: num_bigint::BigUint = counts.values().sum();
                let table: serde_json::Map<String, Value> =
                    counts.iter().map(|(w, c)| (w.to_string(), json!(c.to_string()))).collect();
                Outcome::Json(json!({ "n": n, "total": total.to_string(), "a_pi": table }))
            }
            (None, None) => return Err(Error::Config("fpl needs --n or --pi".into())),
        },
        Command::Tfpl { boundary: b, oriented, count } => {
            if oriented {
                let all = enumerate_oriented_tfpl(&b.sigma, &b.tau, &b.pi, &limits)?;
                if count {
                    Outcome::Json(json!({ "count": all.len() }))
                } else {
                    Outcome::Json(Value::Array(all.iter().map(OrientedTfplConfig::to_json).collect()))
                }
            } else {
                let all = enumerate_tfpl(&b.sigma, &b.tau, &b.pi, &limits)?;
                if count {
                    Outcome::Json(json!({ "count": all.len() }))
                } else {
                    Outcome::Json(Value::Array(all.iter().map(TfplConfig::to_json).collect()))
                }
            }
        }
        Command::Puzzle { boundary: b, count } => {
            if count {
                let c = puzzle_count(&b.sigma, &b.tau, &b.pi, &limits)?;
                Outcome::Json(json!({ "count": c.to_string() }))
            } else {
                let all = enumerate_puzzles(&b.sigma, &b.tau, &b.pi, &limits)?;
                Outcome::Json(Value::Array(all.iter().map(Puzzle::to_json).collect()))
            }
        }
        Command::Lr { lambda, mu, nu } => Outcome::Text(lr_coefficient(&lambda, &mu, &nu).to_string()),
        Command::Phi { puzzle, oriented } => {
            let p = Puzzle::from_json(&read_json(&puzzle)?)?;
            if oriented {
                Outcome::Json(phi_oriented(&p)?.to_json())
            } else {
                Outcome::Json(phi(&p)?.to_json())
            }
        }
        Command::PhiInverse { tfpl } => {
            let v = read_json(&tfpl)?;
            let f = if v.get("orientations").is_some() {
                OrientedTfplConfig::from_json(&v)?.undirect()?
            } else {
                TfplConfig::from_json(&v)?
            };
            Outcome::Json(phi_inverse(&f)?.to_json())
        }
        Command::Verify { identity: Some(id), n, m, k, .. } => {
            Outcome::Report(identity_report(&config, id, n, m, k)?.to_json())
        }
        Command::Verify { identity: None, corrupt_rules, .. } => {
            let rules = if corrupt_rules { corrupted_rules() } else { *LocalRuleTable::standard() };
            let criteria = verify_all(&config, rules)?;
            for c in &criteria {
                eprintln!("{}", c.line());
            }
            Outcome::Report(suite_report(&criteria))
        }
        Command::VerifyBijection { n } => Outcome::Report(verify_bijection(&config, n, LocalRuleTable::standard())?),
        Command::Census { n } => {
            let path = run_census(&config, n)?;
            Outcome::Json(json!({ "n": n, "path": path }))
        }
        Command::Render { input, output } => {
            let v = read_json(&input)?;
            let svg = if v.get("labels").is_some() {
                render_svg(Drawable::Puzzle(&Puzzle::from_json(&v)?))
            } else if v.get("orientations").is_some() {
                render_svg(Drawable::Oriented(&OrientedTfplConfig::from_json(&v)?))
            } else if v.get("sigma").is_some() {
                render_svg(Drawable::Tfpl(&TfplConfig::from_json(&v)?))
            } else {
                render_svg(Drawable::Fpl(&GridFpl::from_json(&v)?))
            };
            match output {
                Some(path) => {
                    std::fs::write(&path, svg).map_err(|e| Error::io(format!("writing {}", path.display()), e))?;
                    Outcome::Json(json!({ "path": path }))
                }
                None => Outcome::Text(svg.trim_end().to_string()),
            }
        }
    })
}

// A closed pipe on the reader's side is not an error worth reporting.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Text(s)) => {
            emit(&s);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Json(v)) => {
            emit(&pretty(&v));
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report(v)) => {
            emit(&pretty(&v));
            if v["pass"] == true {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
