//! `graphvol` command-line driver.
//!
//! Exit status is 0 on success, 1 on a domain error or failed check, 2 on a
//! usage error. Every failure writes exactly one `ERROR <code>: <message>`
//! line to the error stream.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use graphvol_core::format::sig15;
use graphvol_core::{
    audit, claim_suite, decompose, doubling_lower_bound, parse_diagram, upper_bound, verify_theta, GraphDiagram,
    Obstruction, DEFAULT_TOL, MIN_TOL,
};

/// Threshold for the angle derivation check.
const THETA_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "graphvol", version, about = "Hyperbolic volume bounds for spatial graphs")]
pub struct Cli {
    /// Numerical tolerance for Lobachevsky evaluation (at least 1e-14).
    #[arg(long, global = true, default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    pub tol: f64,
    /// Suppress normal output; errors and exit status are unchanged.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a diagram and look for a crossing-free cycle.
    Check { file: PathBuf },
    /// Upper volume bound for a diagram, and/or the doubling lower bound.
    Bound {
        file: Option<PathBuf>,
        /// Lower bound from supplied volumes.
        #[arg(long, num_args = 2, value_names = ["vol_double_cut=<v>", "vol_thickened=<v>"])]
        lower: Option<Vec<String>>,
    },
    /// Print the octahedral decomposition of a diagram.
    Decompose { file: PathBuf },
    /// Recompute and cross-check the volume constants.
    Constants,
    /// Rederive the cuboctahedron dihedral angle in the ball model.
    VerifyTheta,
    /// Verify the free-group injectivity and non-conjugacy claims.
    VerifyClaims,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if v.is_finite() && v >= MIN_TOL {
        Ok(v)
    } else {
        Err(format!("tolerance must be at least {MIN_TOL:e}"))
    }
}

/// A failure: exit code and the single error line.
#[derive(Debug)]
pub struct Failure {
    pub status: i32,
    pub code: &'static str,
    pub message: String,
}

impl Failure {
    fn domain(code: &'static str, message: impl Into<String>) -> Self {
        Failure {
            status: 1,
            code,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            status: 2,
            code: "usage",
            message: message.into(),
        }
    }
}

/// Parse `args` (including the program name) and run, writing to `out` and
/// `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let text = e.to_string();
            let first = text.lines().next().unwrap_or("invalid arguments");
            let msg = first.strip_prefix("error: ").unwrap_or(first);
            let _ = writeln!(err, "ERROR usage: {msg}");
            return 2;
        }
    };
    let mut buf = Vec::new();
    let result = execute(&cli, &mut buf);
    if !cli.quiet {
        let _ = out.write_all(&buf);
    }
    match result {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "ERROR {}: {}", f.code, f.message);
            f.status
        }
    }
}

fn load(path: &Path) -> Result<GraphDiagram, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::domain("io", format!("{}: {e}", path.display())))?;
    parse_diagram(&text).map_err(|e| Failure::domain("parse", format!("{}: {e}", path.display())))
}

fn obstruction_failure(edges: &[String]) -> Failure {
    Failure::domain(
        "crossing-free-cycle",
        format!(
            "cycle {} meets no crossing, so the exterior is not hyperbolic",
            edges.join(",")
        ),
    )
}

fn execute(cli: &Cli, out: &mut Vec<u8>) -> Result<(), Failure> {
    match &cli.command {
        Command::Check { file } => check(&load(file)?, out),
        Command::Bound { file, lower } => bound(file.as_deref(), lower.as_deref(), out),
        Command::Decompose { file } => {
            let d = load(file)?;
            let c = decompose(&d).map_err(|e| match e {
                graphvol_core::DecomposeError::CrossingFreeCycle { edges } => obstruction_failure(&edges),
                other => Failure::domain("decompose", other.to_string()),
            })?;
            let report = c.validate();
            if !report.pass() {
                let findings: Vec<String> = report.findings.iter().map(|f| f.to_string()).collect();
                return Err(Failure::domain("validate", findings.join("; ")));
            }
            out.extend_from_slice(c.export().as_bytes());
            Ok(())
        }
        Command::Constants => {
            let checks = audit(cli.tol).map_err(|e| Failure::domain("numerics", e.to_string()))?;
            let mut failed = Vec::new();
            for c in &checks {
                line(out, &c.line());
                if !c.pass() {
                    failed.push(c.name);
                }
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::domain(
                    "check-failed",
                    format!("constant checks failed: {}", failed.join(",")),
                ))
            }
        }
        Command::VerifyTheta => {
            let r = verify_theta().map_err(|e| Failure::domain("geometry", e.to_string()))?;
            let theta = 2f64.sqrt().atan();
            let diff = (r.angle - theta).abs();
            let chord_diff = (r.chord - 2.0 / 3f64.sqrt()).abs();
            let pass = diff <= THETA_TOL && chord_diff <= THETA_TOL && r.memberships.iter().all(|m| m.2);
            for (p, s, ok) in &r.memberships {
                line(out, &format!("MEMBER {p} {s} {}", if *ok { "PASS" } else { "FAIL" }));
            }
            line(
                out,
                &format!(
                    "THETA angle={} arctan_sqrt2={} diff={} chord={} {}",
                    sig15(r.angle),
                    sig15(theta),
                    sig15(diff),
                    sig15(r.chord),
                    if pass { "PASS" } else { "FAIL" }
                ),
            );
            if pass {
                Ok(())
            } else {
                Err(Failure::domain(
                    "check-failed",
                    format!("derived angle differs from arctan(√2) by {}", sig15(diff)),
                ))
            }
        }
        Command::VerifyClaims => {
            let r = claim_suite();
            let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
            for c in &r.claims {
                line(out, &format!("CLAIM {} {} rank={}", c.id, verdict(c.pass), c.rank));
            }
            line(
                out,
                &format!(
                    "SUBSTITUTION {} rank={}",
                    verdict(r.substitution.pass),
                    r.substitution.rank
                ),
            );
            let (a, b) = r.case_one.cyclic_lengths;
            line(
                out,
                &format!(
                    "CONJUGACY case-one {} {} cyclic-lengths={a},{b}",
                    verdict(r.case_one.pass),
                    if r.case_one.conjugate {
                        "conjugate"
                    } else {
                        "non-conjugate"
                    }
                ),
            );
            for c in &r.consistency {
                line(out, &format!("CONSISTENCY {} {}", c.id, verdict(c.holds)));
            }
            if r.all_pass() {
                Ok(())
            } else {
                Err(Failure::domain("check-failed", "free-group claim suite failed"))
            }
        }
    }
}

fn line(out: &mut Vec<u8>, s: &str) {
    out.extend_from_slice(s.as_bytes());
    out.push(b'\n');
}

fn check(d: &GraphDiagram, out: &mut Vec<u8>) -> Result<(), Failure> {
    let r = d.report();
    let links = r.components.iter().filter(|c| c.is_link()).count();
    line(
        out,
        &format!(
            "CHECK valid={} ambient={} crossings={} vertices={} edges={} components={} links={links}",
            if r.valid { "yes" } else { "no" },
            d.ambient().to_string().replace(' ', ","),
            r.crossing_count,
            d.vertex_count(),
            d.edge_count(),
            r.components.len(),
        ),
    );
    let classes = d.classify_vertices();
    let graph: Vec<String> = classes.components.iter().map(|(_, t)| t.code().to_string()).collect();
    line(
        out,
        &format!(
            "CLASSES U={} D={} components={}",
            classes.u.code(),
            classes.d.code(),
            graph.join(",")
        ),
    );
    for o in &r.obstructions {
        let Obstruction::CrossingFreeCycle { edges } = o;
        line(
            out,
            &format!("OBSTRUCTION crossing-free-cycle edges={}", edges.join(",")),
        );
    }
    match r.obstructions.first() {
        Some(Obstruction::CrossingFreeCycle { edges }) => Err(obstruction_failure(edges)),
        None => Ok(()),
    }
}

fn parse_lower(args: &[String]) -> Result<(f64, f64), Failure> {
    let (mut double_cut, mut thickened) = (None, None);
    for a in args {
        let (k, v) = a
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("expected key=value for --lower, found '{a}'")))?;
        let v: f64 = v
            .parse()
            .map_err(|_| Failure::usage(format!("'{v}' is not a number in --lower {k}")))?;
        let slot = match k {
            "vol_double_cut" => &mut double_cut,
            "vol_thickened" => &mut thickened,
            _ => return Err(Failure::usage(format!("unknown --lower key '{k}'"))),
        };
        if slot.replace(v).is_some() {
            return Err(Failure::usage(format!("--lower {k} given twice")));
        }
    }
    match (double_cut, thickened) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Failure::usage("--lower needs vol_double_cut=<v> and vol_thickened=<v>")),
    }
}

fn bound(file: Option<&Path>, lower: Option<&[String]>, out: &mut Vec<u8>) -> Result<(), Failure> {
    if file.is_none() && lower.is_none() {
        return Err(Failure::usage("bound needs a diagram file, --lower, or both"));
    }
    let lower = lower.map(parse_lower).transpose()?;
    if let Some(path) = file {
        let d = load(path)?;
        let r = upper_bound(&d).map_err(|e| Failure::domain("bound", e.to_string()))?;
        line(out, &r.line());
    }
    if let Some((a, b)) = lower {
        let r = doubling_lower_bound(a, b).map_err(|e| Failure::domain("bound", e.to_string()))?;
        line(out, &r.line());
    }
    Ok(())
}
