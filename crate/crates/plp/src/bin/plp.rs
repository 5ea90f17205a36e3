//! Command-line front end: solve/classify instances, run local optimization,
//! evaluate at fixed parameter values, search for and verify potentials, and
//! audit emitted certificates.
//!
//! Exit codes: 0 for any definitive verdict (including Infeasible/Mixed),
//! 2 when the search gave up at a degree cap, 1 on input errors.

use clap::{Args, Parser, Subcommand};
use plp::automata::{preset, verify_potential, find_potential, Kind, Pattern};
use plp::json;
use plp::opt::OptStatus;
use plp::plp::{
    check_certificate, classify_local_with_caps, feasibility_at_point, solve_side, PlpInstance,
    SearchCaps, Side, Summary, Verdict,
};
use plp::poly::parse_rat;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "plp", about = "Exact solver for one-parameter polynomial linear programs")]
struct Cli {
    /// Log filter (overrides RUST_LOG), e.g. "info" or "debug"
    #[arg(long, global = true)]
    log_level: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InstanceSource {
    /// Instance JSON file
    #[arg(long, conflicts_with = "preset")]
    instance: Option<PathBuf>,
    /// Built-in workflow: pca-nand-vertex, pca-nand-edge, broadcast-nand, broadcast-imp
    #[arg(long)]
    preset: Option<String>,
    /// Pattern length for preset instances
    #[arg(long)]
    ell: Option<usize>,
    /// Seed pattern s0 for PCA presets (0/1 string)
    #[arg(long)]
    s0: Option<String>,
}

#[derive(Args)]
struct CapArgs {
    /// Cap c + deg_p + deg_q1 at this value (failure becomes unknown-at-cap)
    #[arg(long)]
    degree_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide local feasibility near 0 and emit certificates
    Solve {
        #[command(flatten)]
        source: InstanceSource,
        /// Which side of 0 to solve: pos, neg, or both
        #[arg(long, default_value = "both")]
        side: String,
        #[command(flatten)]
        caps: CapArgs,
        /// Write the certificate/classification JSON here (default stdout)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Locally optimize an instance carrying an objective
    Optimize {
        /// Instance JSON file with "objective" and "convention" fields
        #[arg(long)]
        instance: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check feasibility at one fixed parameter value
    EvalPoint {
        #[command(flatten)]
        source: InstanceSource,
        /// Parameter value as an exact rational, e.g. 1/20 or -1/20
        #[arg(long, allow_hyphen_values = true)]
        delta: String,
    },
    /// Search for a potential proving ergodicity / broadcasting impossibility
    FindPotential {
        /// Preset naming the rule table and search kind
        #[arg(long)]
        preset: String,
        /// Smallest pattern length to try
        #[arg(long, default_value_t = 2)]
        ell_min: usize,
        /// Largest pattern length to try
        #[arg(long, default_value_t = 3)]
        ell_max: usize,
        #[command(flatten)]
        caps: CapArgs,
        /// Write the found potential JSON here
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify a concrete potential against a preset's system
    VerifyPotential {
        #[arg(long)]
        preset: String,
        /// Potential JSON file (default: the published one shipped with the crate)
        #[arg(long)]
        potential: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Re-check an emitted certificate against its instance
    CheckCertificate {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
}

fn caps_from(args: &CapArgs) -> SearchCaps {
    match args.degree_cap {
        Some(n) => SearchCaps::capped(n),
        None => SearchCaps::full(),
    }
}

fn capped_from(args: &CapArgs) -> SearchCaps {
    match args.degree_cap {
        Some(n) => SearchCaps::capped(n),
        None => SearchCaps::capped_default(),
    }
}

fn load_instance(source: &InstanceSource) -> plp::Result<PlpInstance> {
    match (&source.instance, &source.preset) {
        (Some(path), None) => json::instance_from_value(&json::read_value(path)?),
        (None, Some(name)) => {
            let (kind, table, default_ell, default_s0) = preset(name)?;
            let ell = source.ell.unwrap_or(default_ell);
            match kind {
                Kind::Pca => {
                    let s0 = match &source.s0 {
                        Some(s) => Pattern::parse(s)?,
                        None => default_s0.expect("pca presets carry a default s0"),
                    };
                    plp::automata::assemble_pca_plp(&table, ell, &s0)
                }
                Kind::Broadcast => plp::automata::assemble_broadcast_plp(&table, ell),
            }
        }
        _ => Err(plp::Error::InvalidInput(
            "exactly one of --instance / --preset is required".into(),
        )),
    }
}

fn emit(output: &Option<PathBuf>, v: &serde_json::Value) -> plp::Result<()> {
    match output {
        Some(path) => json::write_value(path, v),
        None => {
            println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> plp::Result<ExitCode> {
    let ok = ExitCode::SUCCESS;
    let unknown = ExitCode::from(2);
    match cli.command {
        Command::Solve { source, side, caps, output } => {
            let inst = load_instance(&source)?;
            let caps = caps_from(&caps);
            match side.as_str() {
                "both" => {
                    let cls = classify_local_with_caps(&inst, &caps);
                    emit(&output, &json::classification_to_value(&cls))?;
                    eprintln!("summary: {}", json::summary_str(cls.summary));
                    Ok(if cls.summary == Summary::UnknownAtCap { unknown } else { ok })
                }
                s @ ("pos" | "neg") => {
                    let side = if s == "pos" { Side::Positive } else { Side::Negative };
                    let cert = solve_side(&inst, side, &caps);
                    emit(&output, &json::certificate_to_value(&cert))?;
                    eprintln!("verdict: {}", json::verdict_str(cert.verdict));
                    Ok(if cert.verdict == Verdict::UnknownAtCap { unknown } else { ok })
                }
                other => Err(plp::Error::InvalidInput(format!(
                    "--side must be pos, neg, or both, not {other:?}"
                ))),
            }
        }
        Command::Optimize { instance, caps, output } => {
            let lp = json::optimize_from_value(&json::read_value(&instance)?)?;
            let out = plp::opt::solve_local_opt_with_caps(&lp, &caps_from(&caps));
            emit(&output, &json::opt_outcome_to_value(&out))?;
            eprintln!("status: {}", json::opt_status_str(out.status));
            Ok(if out.status == OptStatus::UnknownAtCap { unknown } else { ok })
        }
        Command::EvalPoint { source, delta } => {
            let inst = load_instance(&source)?;
            let delta = parse_rat(&delta).map_err(plp::Error::InvalidInput)?;
            if feasibility_at_point(&inst, &delta) {
                println!("feasible");
            } else {
                println!("infeasible");
            }
            Ok(ok)
        }
        Command::FindPotential { preset: name, ell_min, ell_max, caps, output } => {
            let (kind, table, _, _) = preset(&name)?;
            let ells: Vec<usize> = (ell_min..=ell_max).collect();
            match find_potential(kind, &table, &ells, &capped_from(&caps)) {
                Ok(found) => {
                    emit(&output, &json::potential_to_value(&found.potential))?;
                    eprintln!(
                        "found potential at ell={}{}",
                        found.ell,
                        found.s0.map(|p| format!(", s0={p}")).unwrap_or_default()
                    );
                    Ok(ok)
                }
                Err(reports) => {
                    for r in &reports {
                        eprintln!(
                            "candidate ell={}{}: {}",
                            r.ell,
                            r.s0.as_ref().map(|p| format!(", s0={p}")).unwrap_or_default(),
                            json::verdict_str(r.verdict)
                        );
                    }
                    let gave_up =
                        reports.iter().any(|r| r.verdict == Verdict::UnknownAtCap);
                    eprintln!("no potential found");
                    Ok(if gave_up { unknown } else { ok })
                }
            }
        }
        Command::VerifyPotential { preset: name, potential, caps, output } => {
            let (kind, table, ell, s0) = preset(&name)?;
            let w = match potential {
                Some(path) => json::potential_from_value(&json::read_value(&path)?)?,
                None => json::builtin_potentials()?
                    .into_iter()
                    .find(|(n, _)| n == &name)
                    .ok_or_else(|| {
                        plp::Error::InvalidInput(format!("no built-in potential for {name:?}"))
                    })?
                    .1,
            };
            let cert = verify_potential(kind, &table, ell, s0.as_ref(), &w, &capped_from(&caps))?;
            emit(&output, &json::certificate_to_value(&cert))?;
            eprintln!("verdict: {}", json::verdict_str(cert.verdict));
            Ok(if cert.verdict == Verdict::UnknownAtCap { unknown } else { ok })
        }
        Command::CheckCertificate { instance, certificate } => {
            let inst = json::instance_from_value(&json::read_value(&instance)?)?;
            let cert = json::certificate_from_value(&json::read_value(&certificate)?)?;
            if check_certificate(&inst, &cert) {
                println!("certificate valid");
                Ok(ok)
            } else {
                println!("certificate INVALID");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = env_logger::Builder::from_default_env();
    if let Some(level) = &cli.log_level {
        builder.parse_filters(level);
    }
    builder.init();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
