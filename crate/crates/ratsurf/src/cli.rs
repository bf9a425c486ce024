//! Command-line front end: build codes by name, verify them against the
//! published parameter tables, evaluate point-count bounds, and count curve
//! points.
//!
//! Exit-code contract: 0 on success or a confirmed match, 1 on a mismatch or
//! a runtime failure (bad field order, unbuildable system, I/O), 2 when the
//! distance engines run out of budget and leave the comparison inconclusive,
//! 3 on a usage error (malformed flags, unknown tags).

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::bounds;
use crate::code::{build_code, build_construction, build_system, Construction, EvaluationCode};
use crate::field::Field;
use crate::geometry::PlaneCurve;
use crate::linsys::{make_surface, SurfaceKind};
use crate::report::{self, DistanceClaim, MatchState};
use crate::search::{
    configure_threads, min_distance_exhaustive, min_distance_isd, pow_saturating,
    witness_max_curve, SearchCaps,
};
use crate::Error;

pub const EXIT_MATCH: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser)]
#[command(name = "ratsurf", version, about = "Evaluation codes on three rational surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a generator matrix and a parameter report (no distance search).
    Build(BuildArgs),
    /// Build a code, run the distance engines, compare with the published row.
    Verify(VerifyArgs),
    /// Evaluate one of the point-count bound families.
    Bounds(BoundsArgs),
    /// Count the rational points of a plane curve stored in a file.
    Count(CountArgs),
}

#[derive(Args)]
struct CodeArgs {
    /// Construction tag: quadric-m2, quadric-m3, Y-F4, Z-L3, Z-L4, Z-L5, or custom.
    #[arg(long)]
    construction: String,
    /// Field size (a prime power).
    #[arg(long)]
    q: u64,
    /// Surface for --construction custom: quadric, Y, or Z.
    #[arg(long)]
    surface: Option<String>,
    /// System degree for --construction custom.
    #[arg(long)]
    degree: Option<u32>,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Generator matrix output path (default: <construction>-q<q>.matrix).
    #[arg(long)]
    matrix_out: Option<PathBuf>,
    /// JSON report output path (default: <construction>-q<q>.report.json).
    #[arg(long)]
    report_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Cap on q^k for the exhaustive distance engine.
    #[arg(long)]
    exhaustive_cap: Option<u64>,
    /// Cap on enumerated messages for the information-set engine.
    #[arg(long)]
    isd_cap: Option<u64>,
    /// Cap on projective messages for exhaustive witness sweeps.
    #[arg(long)]
    witness_cap: Option<u64>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Field size (a prime power).
    #[arg(long)]
    q: u64,
    /// Family: aubry-perret, homma-kim, cor-major, quadric-irreducible,
    /// tot-singular, cube, quadric-cubic, delta.
    #[arg(long)]
    family: String,
    /// Curve degree (homma-kim, cor-major).
    #[arg(long)]
    d: Option<u64>,
    /// Multiple of the hyperplane section (quadric-irreducible, tot-singular).
    #[arg(long)]
    s: Option<u64>,
    /// Arithmetic genus (aubry-perret).
    #[arg(long)]
    genus: Option<u64>,
}

#[derive(Args)]
struct CountArgs {
    /// File holding the curve in form text (header line, then coefficients).
    #[arg(long)]
    curve: PathBuf,
    /// Optional cross-check against the field order stored in the file.
    #[arg(long)]
    q: Option<u64>,
}

/// Parses argv (program name included) and runs one subcommand.  Returns the
/// process exit code instead of exiting so tests can drive it in-process.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_MATCH,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    configure_threads();
    match cli.command {
        Cmd::Build(args) => cmd_build(&args),
        Cmd::Verify(args) => cmd_verify(&args),
        Cmd::Bounds(args) => cmd_bounds(&args),
        Cmd::Count(args) => cmd_count(&args),
    }
}

fn usage(msg: &str) -> i32 {
    eprintln!("usage error: {msg}");
    EXIT_USAGE
}

fn failure(err: &Error) -> i32 {
    eprintln!("error: {err}");
    EXIT_MISMATCH
}

enum Target {
    Named(Construction),
    Custom { kind: SurfaceKind, degree: u32 },
}

/// Maps the flag strings onto a build target.  Unknown tag strings are usage
/// errors; everything numeric is validated later as a domain error.
fn resolve_target(args: &CodeArgs) -> Result<(Target, String), i32> {
    if args.construction == "custom" {
        let surface = match args.surface.as_deref() {
            Some(s) => s,
            None => return Err(usage("--construction custom requires --surface")),
        };
        let degree = match args.degree {
            Some(d) => d,
            None => return Err(usage("--construction custom requires --degree")),
        };
        let kind = match surface {
            "quadric" => SurfaceKind::EllipticQuadric,
            "Y" => SurfaceKind::BlowupY,
            "Z" => SurfaceKind::BlowupZ,
            other => {
                return Err(usage(&format!(
                    "unknown surface '{other}' (expected quadric, Y, or Z)"
                )))
            }
        };
        Ok((Target::Custom { kind, degree }, format!("custom-{surface}-d{degree}")))
    } else {
        match Construction::from_tag(&args.construction) {
            Ok(c) => Ok((Target::Named(c), c.tag().to_string())),
            Err(err) => Err(usage(&err.to_string())),
        }
    }
}

fn build_target(args: &CodeArgs) -> Result<(EvaluationCode, String), i32> {
    let (target, label) = resolve_target(args)?;
    let field = Field::of_order(args.q).map_err(|e| failure(&e))?;
    let code = match target {
        Target::Named(c) => build_construction(&field, c),
        Target::Custom { kind, degree } => make_surface(&field, kind)
            .and_then(|model| Ok((build_system(&model, degree)?, model)))
            .and_then(|(system, model)| build_code(&model, &system)),
    }
    .map_err(|e| failure(&e))?;
    Ok((code, label))
}

fn cmd_build(args: &BuildArgs) -> i32 {
    let (code, label) = match build_target(&args.code) {
        Ok(pair) => pair,
        Err(exit) => return exit,
    };
    let stem = format!("{label}-q{}", args.code.q);
    let matrix_path =
        args.matrix_out.clone().unwrap_or_else(|| PathBuf::from(format!("{stem}.matrix")));
    let report_path =
        args.report_out.clone().unwrap_or_else(|| PathBuf::from(format!("{stem}.report.json")));
    let rep = report::report(&code, &label);
    let json = rep.to_json();
    if let Err(err) = fs::write(&matrix_path, code.matrix_text()) {
        eprintln!("error: writing {}: {err}", matrix_path.display());
        return EXIT_MISMATCH;
    }
    if let Err(err) = fs::write(&report_path, &json) {
        eprintln!("error: writing {}: {err}", report_path.display());
        return EXIT_MISMATCH;
    }
    println!("{json}");
    if rep.expected.is_none() {
        println!("note: no published row for {label} at q={}", args.code.q);
    }
    println!("wrote {} and {}", matrix_path.display(), report_path.display());
    EXIT_MATCH
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    let (mut code, label) = match build_target(&args.code) {
        Ok(pair) => pair,
        Err(exit) => return exit,
    };
    let mut caps = SearchCaps::default();
    if let Some(cap) = args.exhaustive_cap {
        caps.exhaustive_limit = cap;
    }
    if let Some(cap) = args.isd_cap {
        caps.isd_message_limit = cap;
    }
    if let Some(cap) = args.witness_cap {
        caps.witness_exhaustive_limit = cap;
    }

    // A maximal curve caps the distance from above; the construction floor
    // from the build caps it from below.  The engines close the gap.
    if let Ok(witness) = witness_max_curve(&code, &caps) {
        let weight = code.n() as u64 - witness.zeros;
        if weight < code.d_upper().unwrap_or(u64::MAX) {
            code.record_upper(weight);
        }
    }
    if code.d_exact().is_none() {
        if pow_saturating(args.code.q, code.k() as u32) <= caps.exhaustive_limit {
            match min_distance_exhaustive(&code, &caps) {
                Ok(scan) => code.record_exact(scan.d),
                Err(err) => return failure(&err),
            }
        } else {
            match min_distance_isd(&code, None, &caps) {
                Ok(outcome) => {
                    if let Some(d) = outcome.exact {
                        code.record_exact(d);
                    } else {
                        code.record_lower(outcome.certified_lower);
                        if outcome.upper < code.d_upper().unwrap_or(u64::MAX) {
                            code.record_upper(outcome.upper);
                        }
                    }
                }
                // Codes out of the engine's supported range keep the bracket
                // from the build and the witness.
                Err(Error::IsdUnsupported(_)) => {}
                Err(err) => return failure(&err),
            }
        }
    }

    let rep = report::report(&code, &label);
    println!("{}", rep.to_json());
    if rep.expected.is_none() {
        println!("note: no published row for {label} at q={}", args.code.q);
    }
    let (verdict, exit) = match rep.overall() {
        MatchState::Match => ("match", EXIT_MATCH),
        MatchState::Mismatch => ("mismatch", EXIT_MISMATCH),
        MatchState::Inconclusive => ("inconclusive", EXIT_INCONCLUSIVE),
    };
    println!("result: {verdict}");
    exit
}

fn require(value: Option<u64>, flag: &str, family: &str) -> Result<u64, i32> {
    value.ok_or_else(|| usage(&format!("family {family} requires --{flag}")))
}

fn cmd_bounds(args: &BoundsArgs) -> i32 {
    let line = |r: &bounds::BoundResult| {
        let mut notes = vec![r.source.to_string()];
        notes.extend(r.notes.iter().map(|n| n.to_string()));
        format!("{} ({})", r.value, notes.join("; "))
    };
    let printed = match args.family.as_str() {
        "aubry-perret" => match require(args.genus, "genus", &args.family) {
            Ok(genus) => Ok(line(&bounds::aubry_perret(args.q, genus))),
            Err(exit) => return exit,
        },
        "homma-kim" => match require(args.d, "d", &args.family) {
            Ok(d) => Ok(line(&bounds::homma_kim(args.q, d))),
            Err(exit) => return exit,
        },
        "cor-major" => match require(args.d, "d", &args.family) {
            Ok(d) => Ok(line(&bounds::cor_major(args.q, d))),
            Err(exit) => return exit,
        },
        "quadric-irreducible" => match require(args.s, "s", &args.family) {
            Ok(s) => bounds::quadric_irreducible(args.q, s).map(|r| line(&r)),
            Err(exit) => return exit,
        },
        "tot-singular" => match require(args.s, "s", &args.family) {
            Ok(s) => bounds::tot_singular(args.q, s).map(|r| line(&r)),
            Err(exit) => return exit,
        },
        "cube" => bounds::cube_bound(args.q).map(|r| line(&r)),
        "quadric-cubic" => bounds::quadric_cubic_params(args.q)
            .map(|(n, k, delta)| format!("n={n} k={k} delta={delta} (quadric-cubic)")),
        "delta" => bounds::delta_branch_formula(args.q)
            .map(|v| format!("{v} (three-branch distance floor)")),
        other => return usage(&format!("unknown bound family '{other}'")),
    };
    match printed {
        Ok(text) => {
            println!("{text}");
            EXIT_MATCH
        }
        Err(err) => failure(&err),
    }
}

fn cmd_count(args: &CountArgs) -> i32 {
    let text = match fs::read_to_string(&args.curve) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: reading {}: {err}", args.curve.display());
            return EXIT_MISMATCH;
        }
    };
    let curve = match PlaneCurve::parse(&text) {
        Ok(curve) => curve,
        Err(err) => return failure(&err),
    };
    if let Some(q) = args.q {
        let stored = curve.field().order();
        if q != stored {
            eprintln!("error: --q {q} does not match the curve file's field order {stored}");
            return EXIT_MISMATCH;
        }
    }
    println!("{}", curve.count_points());
    EXIT_MATCH
}

/// The distance claim of the published row, if any — used by callers that
/// want to pick an engine target by hand.
pub fn published_claim(construction: &str, q: u64) -> Option<DistanceClaim> {
    report::lookup(construction, q).map(|row| row.d)
}
