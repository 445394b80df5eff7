use std::path::PathBuf;
use std::process::ExitCode;

use chow_kernel::{chi_rank2, format_rational, h0_line_bundle, ChowError, CicyContext, Mode, FIVE_CICYS};
use classifier::{classify_with, rule_report, RankRegime, Toggles};
use clap::{Parser, Subcommand, ValueEnum};
use cli_reporter::{render, run_checks};
use genus_bounds::{castelnuovo_pi, ci_curve_invariants, genus_bound, pi_one};
use ruled_surfaces::{adjunction_genus, intersect, DivisorClass, RuledSurface};
use serre_constructions::{liaison_solve, registry, registry_from_json, registry_to_json, validate, Construction};

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout().lock(), $($t)*);
    }};
}

macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "cicy-gg", version, about = "Stable-bundle Chern class bounds on CICY threefolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rank {
    #[value(name = "2")]
    Two,
    Higher,
}

#[derive(Subcommand)]
enum Command {
    /// Euler characteristic of a rank-2 bundle with the given Chern classes
    Chi {
        #[arg(long)]
        threefold: String,
        #[arg(long, allow_hyphen_values = true)]
        c1: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
    /// Admissible c2 values for globally generated bundles
    Classify {
        #[arg(long)]
        threefold: String,
        #[arg(long, default_value_t = 2)]
        c1_max: i64,
        #[arg(long, value_enum, default_value = "2")]
        rank: Rank,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Write the JSON report here as well
        #[arg(long)]
        out: Option<PathBuf>,
        /// Rule ids to switch off, comma separated
        #[arg(long, value_delimiter = ',')]
        disable: Vec<String>,
    },
    /// Recompute every anchor value and validate the registry
    Verify {
        #[arg(long, conflicts_with = "module")]
        all: bool,
        #[arg(long)]
        module: Option<String>,
        /// Registry JSON to validate instead of the built-in one
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Validate the construction registry, or print it as JSON
    Registry {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        dump: bool,
    },
    /// One-off kernel computations
    Query {
        #[command(subcommand)]
        query: Query,
    },
}

#[derive(Subcommand)]
enum Query {
    /// Castelnuovo bound
    Pi {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: i64,
    },
    /// Harris bound for curves off low-degree surfaces
    PiOne {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: i64,
    },
    /// Largest genus of a nondegenerate curve, plane curves included
    Genus {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        r: i64,
    },
    /// h0(O_X(t))
    H0 {
        #[arg(long)]
        threefold: String,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
    },
    /// Intersection number of two classes ah+bf on a ruled surface
    Intersect {
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
        #[arg(long, default_value_t = 0)]
        q: i64,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        with: DivisorClass,
    },
    /// Arithmetic genus of a class ah+bf on a ruled surface
    HirzebruchGenus {
        #[arg(long, allow_hyphen_values = true)]
        e: i64,
        #[arg(long, default_value_t = 0)]
        q: i64,
        #[arg(long, value_parser = parse_class, allow_hyphen_values = true)]
        class: DivisorClass,
    },
    /// Degree of the linked curve in a complete intersection
    Liaison {
        #[arg(long)]
        total: i64,
        #[arg(long)]
        omega: i64,
        #[arg(long)]
        target: i64,
        #[arg(long)]
        cut: i64,
    },
    /// Degree, genus and canonical twist of a complete-intersection curve
    Ci {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<i64>,
        #[arg(long)]
        ambient: i64,
    },
}

fn parse_class(s: &str) -> Result<DivisorClass, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => {
            let a = a.parse::<i64>().map_err(|e| e.to_string())?;
            let b = b.parse::<i64>().map_err(|e| e.to_string())?;
            Ok(DivisorClass::new(a, b))
        }
        _ => Err(format!("expected 'a,b', got '{s}'")),
    }
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn mode() -> Result<Mode, Failure> {
    match std::env::var("CICY_MODE") {
        Ok(v) => Mode::parse(&v).ok_or_else(|| usage(format!("CICY_MODE must be 'strict' or 'lax', got '{v}'"))),
        Err(_) => Ok(Mode::Strict),
    }
}

fn context(s: &str) -> Result<CicyContext, Failure> {
    let mode = mode()?;
    CicyContext::parse(s, mode).map_err(|e| match (mode, e) {
        (Mode::Strict, e @ ChowError::InvalidMultidegree(_)) => {
            let options: Vec<String> = FIVE_CICYS
                .iter()
                .map(|md| md.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                .collect();
            usage(format!("{e}; expected one of: {}", options.join(" | ")))
        }
        (_, e) => usage(e),
    })
}

fn load_registry(path: &PathBuf) -> Result<Vec<Construction>, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    registry_from_json(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Chi { threefold, c1, c2 } => {
            let ctx = context(&threefold)?;
            outln!("{}", format_rational(&chi_rank2(&ctx, c1, c2)));
        }
        Command::Classify { threefold, c1_max, rank, format, out, disable } => {
            let ctx = context(&threefold)?;
            let regime = match rank {
                Rank::Two => RankRegime::Rank2,
                Rank::Higher => RankRegime::HigherRank,
            };
            let toggles: Toggles = disable.into_iter().collect();
            let result = classify_with(&ctx, c1_max, regime, &toggles).map_err(usage)?;
            let report = rule_report(&result);
            if let Some(path) = out {
                std::fs::write(&path, report.to_json()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            match format {
                Format::Json => outln!("{}", report.to_json()),
                Format::Markdown => out!("{}", render::markdown(&report)),
                Format::Plain => out!("{}", render::plain(&report)),
            }
        }
        Command::Verify { all, module, registry } => {
            if !all && module.is_none() {
                return Err(usage("verify needs --all or --module <name>"));
            }
            let entries = registry.as_ref().map(load_registry).transpose()?;
            let lines = run_checks(module.as_deref(), entries.as_deref()).map_err(usage)?;
            for l in &lines {
                outln!("{}", l.render());
            }
            let failed: Vec<&str> = lines.iter().filter(|l| !l.pass).map(|l| l.name.as_str()).collect();
            outln!("{} checks, {} failed", lines.len(), failed.len());
            if !failed.is_empty() {
                return Err(Failure::Verification(format!("failed: {}", failed.join("; "))));
            }
        }
        Command::Registry { file, dump } => {
            let entries = match &file {
                Some(p) => load_registry(p)?,
                None => registry(),
            };
            if dump {
                outln!("{}", registry_to_json(&entries));
                return Ok(());
            }
            let mut bad = Vec::new();
            for c in &entries {
                match validate(c) {
                    Ok(_) => outln!("ok   {} ({})", c.name, c.threefold),
                    Err(e) => {
                        outln!("FAIL {} ({}): {e}", c.name, c.threefold);
                        bad.push(c.name.clone());
                    }
                }
            }
            if !bad.is_empty() {
                return Err(Failure::Verification(format!("invalid entries: {}", bad.join(", "))));
            }
        }
        Command::Query { query } => outln!("{}", run_query(query)?),
    }
    Ok(())
}

fn run_query(q: Query) -> Result<String, Failure> {
    let value = match q {
        Query::Pi { d, r } => castelnuovo_pi(d, r).map_err(usage)?.to_string(),
        Query::PiOne { d, r } => pi_one(d, r).map_err(usage)?.to_string(),
        Query::Genus { d, r } => genus_bound(d, r).map_err(usage)?.to_string(),
        Query::H0 { threefold, t } => h0_line_bundle(&context(&threefold)?, t).to_string(),
        Query::Intersect { e, q, class, with } => {
            let s = RuledSurface::new(e, q).map_err(usage)?;
            intersect(class, with, &s).to_string()
        }
        Query::HirzebruchGenus { e, q, class } => {
            let s = RuledSurface::new(e, q).map_err(usage)?;
            adjunction_genus(class, &s).map_err(usage)?.to_string()
        }
        Query::Liaison { total, omega, target, cut } => {
            liaison_solve(total, omega, target, cut).map_err(usage)?.to_string()
        }
        Query::Ci { degrees, ambient } => {
            let c = ci_curve_invariants(&degrees, ambient).map_err(usage)?;
            format!("degree {} genus {} omega O({})", c.degree, c.genus, c.omega_twist)
        }
    };
    Ok(value)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
