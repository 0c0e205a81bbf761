use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bicover::certify::{cmd_catalog, cmd_search, cmd_verify, cmd_verify_point, lam_grid, params, Certificate, SearchGrid};
use bicover::config::Which;
use bicover::plane::ProjPoint;
use bicover::qalg::Rat;

/// Certify bidouble covers with p_g = 0 and K^2 = 7 in exact arithmetic.
#[derive(Parser)]
#[command(name = "bicover", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Cmd {
    /// Run the full pipeline at one parameter point and emit a certificate.
    Verify(VerifyArgs),
    /// Classify a grid of parameter points.
    Search(SearchArgs),
    /// Print the divisor classes, the intersection table and the identities.
    Catalog {
        #[arg(long)]
        json: bool,
    },
    /// Print t, s, alpha and beta for a value of u.
    Params {
        #[arg(long, allow_hyphen_values = true)]
        u: Rat,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    u: Rat,
    #[arg(long, value_parser = parse_which)]
    conic: Which,
    /// Parameter `a:b` of the point on the conic.
    #[arg(long, value_parser = parse_lam, allow_hyphen_values = true, conflicts_with = "point", required_unless_present = "point")]
    lam: Option<[Rat; 2]>,
    /// The point itself, as `a:b:c`.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    point: Option<ProjPoint>,
    /// Write the certificate here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConicChoice {
    Alpha,
    Beta,
    Both,
}

#[derive(Args)]
struct SearchArgs {
    /// Comma-separated values of u.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    u: Vec<Rat>,
    /// Bound n of the grid of primitive pairs (a:b), 0 <= a <= n, |b| <= n.
    #[arg(long)]
    lam_grid: i64,
    /// Run the full certificate at each point instead of conditions (I)-(IV).
    #[arg(long)]
    full: bool,
    #[arg(long, value_enum, default_value = "both")]
    conic: ConicChoice,
}

fn parse_which(s: &str) -> Result<Which, String> {
    s.parse()
}

fn parse_lam(s: &str) -> Result<[Rat; 2], String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected a:b, got {s:?}"))?;
    let a: Rat = a.parse().map_err(|e| format!("{e}"))?;
    let b: Rat = b.parse().map_err(|e| format!("{e}"))?;
    if a.is_zero() && b.is_zero() {
        return Err("lam must not be 0:0".into());
    }
    Ok([a, b])
}

fn parse_point(s: &str) -> Result<ProjPoint, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("expected a:b:c, got {s:?}"));
    }
    let v: Vec<Rat> = parts
        .iter()
        .map(|p| p.parse::<Rat>().map_err(|e| format!("{e}")))
        .collect::<Result<_, _>>()?;
    ProjPoint::new(v[0].clone(), v[1].clone(), v[2].clone()).map_err(|e| e.to_string())
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(cert: &Certificate, out: Option<&PathBuf>) -> ExitCode {
    let json = cert.to_json();
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                return usage(format!("cannot write {}: {e}", path.display()));
            }
        }
        None => println!("{json}"),
    }
    for r in cert.reasons() {
        eprintln!("failed: {r}");
    }
    ExitCode::from(cert.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Verify(a) => {
            let cert = match (&a.lam, &a.point) {
                (Some(lam), _) => cmd_verify(&a.u, a.conic, lam),
                (None, Some(p)) => cmd_verify_point(&a.u, a.conic, p),
                (None, None) => unreachable!("clap requires one of --lam, --point"),
            };
            match cert {
                Ok(c) => emit(&c, a.out.as_ref()),
                Err(e) => usage(e),
            }
        }
        Cmd::Search(a) => {
            if a.lam_grid < 0 {
                return usage("--lam-grid must be nonnegative");
            }
            let which = match a.conic {
                ConicChoice::Alpha => vec![Which::Alpha],
                ConicChoice::Beta => vec![Which::Beta],
                ConicChoice::Both => vec![Which::Alpha, Which::Beta],
            };
            if let Some(bad) = a.u.iter().find(|u| params(u).is_err()) {
                return usage(format!("bad parameter u = {bad}"));
            }
            let grid = SearchGrid { u: a.u, which, lam: lam_grid(a.lam_grid), full: a.full };
            match cmd_search(grid) {
                Ok(r) => {
                    println!("{}", serde_json::to_string_pretty(&r).expect("serializable"));
                    ExitCode::SUCCESS
                }
                Err(e) => usage(e),
            }
        }
        Cmd::Catalog { json } => {
            let dump = cmd_catalog();
            if json {
                println!("{}", serde_json::to_string_pretty(&dump).expect("serializable"));
            } else {
                print!("{}", dump.to_text());
            }
            ExitCode::SUCCESS
        }
        Cmd::Params { u } => match params(&u) {
            Ok(p) => {
                println!("{}", serde_json::to_string_pretty(&p).expect("serializable"));
                ExitCode::SUCCESS
            }
            Err(e) => usage(e),
        },
    }
}
