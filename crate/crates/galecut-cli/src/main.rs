//! Command-line harness: instance generation, solver dispatch, certificate
//! reporting, and independent re-verification.
//!
//! Exit codes: 0 = certificate produced and re-verified, 1 = usage or IO
//! error (or a failed re-verification), 2 = hypothesis or regime violation,
//! 3 = an exhausted search (a flagged anomaly, never swallowed).

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use galecut::equipartition::{
    delta_bounds, delta_bounds_markdown, equipartition_search, ham_sandwich,
    moment_curve_instance,
};
use galecut::gale::{gale_transform, inverse_gale};
use galecut::generate::{
    intersecting_segment_family, random_colored_segments, random_family_without_disjoint_tuple,
    random_mass_instance, random_point_config, rng_from_seed,
};
use galecut::kneser::{chromatic_number, nonface_complex, ChromaticOutcome, Coloring};
use galecut::radon::{
    enumerate_minimal_radon_pairs, find_constrained_radon_tuple_capped, find_minimal_radon_pair,
};
use galecut::transversal::{
    affine_k_transversal, dolnikov_hyperplane, Polytope, TransversalOptions,
};
use galecut::Error as LibError;
use report::{
    render_markdown, verify_certificate, Certificate, InstanceFile, InstancePayload, Metadata,
    PolytopeFamilyPayload, RunReport,
};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "galecut",
    about = "Exact certificates for Gale duality, Radon pairs, hyperplane transversals, and equipartitions",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report (or generated instance) here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Copy, Clone, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Args)]
struct InstanceArg {
    /// Path to the instance JSON file.
    #[arg(long)]
    instance: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded instance file.
    Generate(GenerateArgs),
    /// Gale transform of a point configuration.
    Gale(InstanceArg),
    /// Reconstruct a primal configuration from a zero-sum spanning dual.
    InverseGale(InstanceArg),
    /// Find one minimal Radon pair.
    Radon(InstanceArg),
    /// Enumerate all minimal Radon pairs.
    RadonEnum {
        #[command(flatten)]
        instance: InstanceArg,
        /// Cap on pair support size (defaults to complete enumeration).
        #[arg(long)]
        max_support: Option<usize>,
    },
    /// Find k minimal Radon pairs whose side intersections avoid a family.
    ConstrainedRadon {
        #[command(flatten)]
        instance: InstanceArg,
        /// Path to the setFamily instance constraining the tuple.
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_support: Option<usize>,
    },
    /// One hyperplane meeting every polytope of pairwise-intersecting families.
    Dolnikov(InstanceArg),
    /// k hyperplanes piercing a colored polytope family.
    Transversal {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        k: usize,
        /// Number of color classes the hypothesis allows.
        #[arg(long)]
        m: usize,
        /// Fail on (k, m, dimension) outside every proven regime.
        #[arg(long, value_enum, default_value_t = Switch::On)]
        regime_check: Switch,
        #[arg(long)]
        max_support: Option<usize>,
    },
    /// Simultaneously bisect d point sets in R^d.
    Hamsandwich(InstanceArg),
    /// Equipartition point sets by k hyperplanes.
    Equipartition {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        k: usize,
    },
    /// Chromatic number of the r-uniform Kneser hypergraph of a family.
    KneserChi {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 8)]
        max_colors: usize,
    },
    /// Maximal faces of the complex whose minimal non-faces are the family.
    Nonface(InstanceArg),
    /// Bounds on the least equipartition dimension.
    Bounds {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Emit the full markdown table up to --max-m / --max-k instead.
        #[arg(long, default_value_t = false)]
        table: bool,
        #[arg(long, default_value_t = 8)]
        max_m: usize,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Re-verify a stored report against its instance.
    Verify {
        #[command(flatten)]
        instance: InstanceArg,
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Args)]
struct GenerateArgs {
    /// pointConfig | massInstance | polytopeFamily | setFamily
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Ambient dimension (pointConfig, massInstance) or c (polytopeFamily).
    #[arg(long)]
    d: Option<usize>,
    /// Point count (pointConfig) or ground size (setFamily).
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 10)]
    coord_range: i64,
    /// Comma-separated set sizes (massInstance) or class sizes (polytopeFamily).
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// massInstance: random | moment-curve; polytopeFamily: intersecting | colorable.
    #[arg(long)]
    mode: Option<String>,
    /// Member count (setFamily).
    #[arg(long)]
    members: Option<usize>,
    #[arg(long, default_value_t = 2)]
    min_size: usize,
    #[arg(long, default_value_t = 4)]
    max_size: usize,
    /// setFamily: forbid r pairwise disjoint members.
    #[arg(long)]
    r: Option<usize>,
}

fn main() {
    // Usage errors are exit code 1; clap's default of 2 is reserved for
    // hypothesis violations.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let code = run(cli);
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    match dispatch(&cli.command, cli.format, cli.out.as_deref()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn exit_code_of(err: &LibError) -> i32 {
    match err {
        LibError::HypothesisViolation(_) | LibError::RegimeViolation(_) => 2,
        LibError::Exhausted(_) => 3,
        _ => 1,
    }
}

fn read_instance(path: &Path) -> Result<(Vec<u8>, InstanceFile), String> {
    let bytes =
        std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let parsed: InstanceFile = serde_json::from_slice(&bytes)
        .map_err(|e| format!("cannot parse {}: {e}", path.display()))?;
    Ok((bytes, parsed))
}

fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

fn write_output(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn emit_report(report: &RunReport, format: Format, out: Option<&Path>) -> Result<(), String> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Md => render_markdown(report),
    };
    write_output(&text, out)
}

/// Runs a solver, re-verifies its certificate independently, and emits the
/// report. The verification field is recomputed here, never taken from the
/// solver.
fn report_command(
    command: &str,
    input_digest: String,
    instance: Option<&InstanceFile>,
    outcome: Result<(Certificate, Vec<String>), LibError>,
    started: Instant,
    format: Format,
    out: Option<&Path>,
) -> Result<i32, String> {
    let (certificate, verification, anomalies, code) = match outcome {
        Ok((cert, anomalies)) => match verify_certificate(&cert, instance) {
            Ok(()) => (Some(cert), "verified".to_string(), anomalies, 0),
            Err(e) => (Some(cert), format!("failed: {e}"), anomalies, 1),
        },
        Err(err) => {
            let code = exit_code_of(&err);
            (None, "none".to_string(), vec![err.to_string()], code)
        }
    };
    let report = RunReport {
        command: command.to_string(),
        input_digest,
        certificate,
        verification,
        anomalies,
        timing_ms: started.elapsed().as_millis(),
    };
    emit_report(&report, format, out)?;
    Ok(code)
}

fn dispatch(command: &Command, format: Format, out: Option<&Path>) -> Result<i32, String> {
    let started = Instant::now();
    match command {
        Command::Generate(args) => {
            let instance = generate_instance(args)?;
            let text =
                serde_json::to_string_pretty(&instance).expect("instance serializes");
            write_output(&text, out)?;
            Ok(0)
        }
        Command::Gale(arg) => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .point_config()
                .map_err(LibError::InvalidInput)
                .and_then(gale_transform)
                .map(|dual| (Certificate::DualConfig { config: dual }, Vec::new()));
            report_command("gale", digest(&bytes), Some(&instance), outcome, started, format, out)
        }
        Command::InverseGale(arg) => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .point_config()
                .map_err(LibError::InvalidInput)
                .and_then(inverse_gale)
                .map(|primal| (Certificate::PrimalConfig { config: primal }, Vec::new()));
            report_command(
                "inverse-gale",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Radon(arg) => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .point_config()
                .map_err(LibError::InvalidInput)
                .and_then(find_minimal_radon_pair)
                .map(|pair| (Certificate::RadonPair { pair }, Vec::new()));
            report_command("radon", digest(&bytes), Some(&instance), outcome, started, format, out)
        }
        Command::RadonEnum {
            instance: arg,
            max_support,
        } => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .point_config()
                .map_err(LibError::InvalidInput)
                .and_then(|cfg| {
                    enumerate_minimal_radon_pairs(cfg, max_support.unwrap_or(usize::MAX))
                })
                .map(|pairs| (Certificate::RadonPairs { pairs }, Vec::new()));
            report_command(
                "radon-enum",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::ConstrainedRadon {
            instance: arg,
            family,
            k,
            max_support,
        } => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let (_, family_file) = read_instance(family)?;
            let outcome = instance
                .point_config()
                .map_err(LibError::InvalidInput)
                .and_then(|cfg| {
                    let fam = family_file
                        .set_family()
                        .map_err(LibError::InvalidInput)?;
                    find_constrained_radon_tuple_capped(
                        cfg,
                        fam,
                        *k,
                        max_support.unwrap_or(usize::MAX),
                    )
                })
                .map(|tuple| (Certificate::RadonTuple { pairs: tuple.pairs }, Vec::new()));
            report_command(
                "constrained-radon",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Dolnikov(arg) => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = run_dolnikov(&instance);
            report_command(
                "dolnikov",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Transversal {
            instance: arg,
            k,
            m,
            regime_check,
            max_support,
        } => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let opts = TransversalOptions {
                enforce_regime: matches!(regime_check, Switch::On),
                max_support: max_support.unwrap_or(usize::MAX),
            };
            let outcome = run_transversal(&instance, *k, *m, &opts);
            report_command(
                "transversal",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Hamsandwich(arg) => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .mass_instance()
                .map_err(LibError::InvalidInput)
                .and_then(ham_sandwich)
                .map(|certificate| {
                    (
                        Certificate::Equipartition {
                            certificate,
                            regime: Some("general".to_string()),
                        },
                        Vec::new(),
                    )
                });
            report_command(
                "hamsandwich",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Equipartition { instance: arg, k } => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .mass_instance()
                .map_err(LibError::InvalidInput)
                .and_then(|inst| equipartition_search(inst, *k))
                .map(|sol| {
                    let mut anomalies = Vec::new();
                    if sol.regime.is_none() {
                        anomalies
                            .push("outside every proven regime: empirical result".to_string());
                    }
                    (
                        Certificate::Equipartition {
                            certificate: sol.certificate,
                            regime: sol.regime.map(str::to_string),
                        },
                        anomalies,
                    )
                });
            report_command(
                "equipartition",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::KneserChi {
            instance: arg,
            r,
            max_colors,
        } => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .set_family()
                .map_err(LibError::InvalidInput)
                .and_then(|fam| chromatic_number(fam, *r, *max_colors))
                .map(|res| match res {
                    ChromaticOutcome::Number(value, coloring) => (
                        Certificate::Chromatic {
                            r: *r,
                            value: Some(value),
                            coloring: Some(coloring.colors.iter().map(|c| c + 1).collect()),
                        },
                        Vec::new(),
                    ),
                    ChromaticOutcome::Exceeds => (
                        Certificate::Chromatic {
                            r: *r,
                            value: None,
                            coloring: None,
                        },
                        vec![format!("no valid coloring with at most {max_colors} colors")],
                    ),
                });
            report_command(
                "kneser-chi",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Nonface(arg) => {
            let (bytes, instance) = read_instance(&arg.instance)?;
            let outcome = instance
                .set_family()
                .map_err(LibError::InvalidInput)
                .and_then(nonface_complex)
                .map(|facets| {
                    (
                        Certificate::Facets {
                            facets: facets
                                .into_iter()
                                .map(|f| f.into_iter().map(|i| i + 1).collect())
                                .collect(),
                        },
                        Vec::new(),
                    )
                });
            report_command(
                "nonface",
                digest(&bytes),
                Some(&instance),
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Bounds {
            m,
            k,
            table,
            max_m,
            max_k,
        } => {
            if *table {
                let md = delta_bounds_markdown(*max_m, *max_k).map_err(|e| e.to_string())?;
                write_output(&md, out)?;
                return Ok(0);
            }
            let params = format!("bounds --m {m} --k {k}");
            let outcome = delta_bounds(*m, *k)
                .map(|bounds| (Certificate::Bounds { bounds }, Vec::new()));
            report_command(
                "bounds",
                digest(params.as_bytes()),
                None,
                outcome,
                started,
                format,
                out,
            )
        }
        Command::Verify {
            instance: arg,
            report,
        } => {
            let (_, instance) = read_instance(&arg.instance)?;
            let bytes = std::fs::read(report)
                .map_err(|e| format!("cannot read {}: {e}", report.display()))?;
            let stored: RunReport = serde_json::from_slice(&bytes)
                .map_err(|e| format!("cannot parse {}: {e}", report.display()))?;
            let Some(cert) = &stored.certificate else {
                println!("report carries no certificate");
                return Ok(1);
            };
            match verify_certificate(cert, Some(&instance)) {
                Ok(()) => {
                    println!("verified");
                    Ok(0)
                }
                Err(e) => {
                    println!("failed: {e}");
                    Ok(1)
                }
            }
        }
    }
}

fn run_dolnikov(
    instance: &InstanceFile,
) -> Result<(Certificate, Vec<String>), LibError> {
    let fam = instance
        .polytope_family()
        .map_err(LibError::InvalidInput)?;
    let classes = fam.classes().map_err(LibError::InvalidInput)?;
    let class_count = classes.iter().max().map_or(0, |c| c + 1);
    let mut families: Vec<Vec<Polytope>> = vec![Vec::new(); class_count];
    for (poly, &class) in fam.polytopes.iter().zip(&classes) {
        families[class].push(poly.clone());
    }
    let sol = dolnikov_hyperplane(&families)?;
    // The solver certificate indexes the family-major order; re-verify over
    // the instance order for the report.
    match galecut::transversal::pierces_verify(&sol.certificate.hyperplanes, &fam.polytopes)? {
        galecut::transversal::PiercesOutcome::Certified(certificate) => Ok((
            Certificate::Transversal {
                certificate,
                regime: sol.regime.map(str::to_string),
            },
            Vec::new(),
        )),
        galecut::transversal::PiercesOutcome::Missed { polytope } => Err(LibError::Internal(
            format!("verified hyperplane misses polytope {polytope}"),
        )),
    }
}

fn run_transversal(
    instance: &InstanceFile,
    k: usize,
    m: usize,
    opts: &TransversalOptions,
) -> Result<(Certificate, Vec<String>), LibError> {
    let fam = instance
        .polytope_family()
        .map_err(LibError::InvalidInput)?;
    let classes = fam.classes().map_err(LibError::InvalidInput)?;
    let coloring = Coloring { colors: classes };
    let sol = affine_k_transversal(&fam.polytopes, k, m, &coloring, opts)?;
    let mut anomalies = Vec::new();
    if sol.regime.is_none() {
        anomalies.push("outside every proven regime: empirical result".to_string());
    }
    Ok((
        Certificate::Transversal {
            certificate: sol.certificate,
            regime: sol.regime.map(str::to_string),
        },
        anomalies,
    ))
}

fn generate_instance(args: &GenerateArgs) -> Result<InstanceFile, String> {
    let mut rng = rng_from_seed(args.seed);
    let need = |field: Option<usize>, name: &str| {
        field.ok_or_else(|| format!("--{name} is required for kind {}", args.kind))
    };
    let payload = match args.kind.as_str() {
        "pointConfig" => {
            let d = need(args.d, "d")?;
            let n = need(args.n, "n")?;
            let cfg = random_point_config(d, n, args.coord_range, &mut rng)
                .map_err(|e| e.to_string())?;
            InstancePayload::PointConfig(cfg)
        }
        "massInstance" => {
            let d = need(args.d, "d")?;
            let sizes = args
                .sizes
                .clone()
                .ok_or("--sizes is required for kind massInstance")?;
            let inst = match args.mode.as_deref() {
                Some("moment-curve") => {
                    moment_curve_instance(d, &sizes, args.seed).map_err(|e| e.to_string())?
                }
                None | Some("random") => {
                    random_mass_instance(d, &sizes, args.coord_range, &mut rng)
                        .map_err(|e| e.to_string())?
                }
                Some(other) => return Err(format!("unknown massInstance mode {other}")),
            };
            InstancePayload::MassInstance(inst)
        }
        "polytopeFamily" => {
            let c = need(args.d, "d")?;
            let sizes = args
                .sizes
                .clone()
                .ok_or("--sizes is required for kind polytopeFamily")?;
            let (polytopes, classes) = match args.mode.as_deref() {
                None | Some("intersecting") => {
                    let mut polys = Vec::new();
                    let mut classes = Vec::new();
                    for (class, &size) in sizes.iter().enumerate() {
                        let fam =
                            intersecting_segment_family(c, size, args.coord_range, &mut rng)
                                .map_err(|e| e.to_string())?;
                        classes.extend(std::iter::repeat(class).take(fam.len()));
                        polys.extend(fam);
                    }
                    (polys, classes)
                }
                Some("colorable") => random_colored_segments(
                    c,
                    &sizes,
                    args.coord_range,
                    &mut rng,
                )
                .map_err(|e| e.to_string())?,
                Some(other) => return Err(format!("unknown polytopeFamily mode {other}")),
            };
            InstancePayload::PolytopeFamily(PolytopeFamilyPayload {
                c,
                polytopes,
                coloring: Some(classes.iter().map(|&x| x + 1).collect()),
            })
        }
        "setFamily" => {
            let n = need(args.n, "n")?;
            let members = args
                .members
                .ok_or("--members is required for kind setFamily")?;
            let r = args.r.ok_or("--r is required for kind setFamily")?;
            let fam = random_family_without_disjoint_tuple(
                n,
                members,
                (args.min_size, args.max_size),
                r,
                &mut rng,
            )
            .map_err(|e| e.to_string())?;
            InstancePayload::SetFamily(fam)
        }
        other => return Err(format!("unknown instance kind {other}")),
    };
    Ok(InstanceFile {
        payload,
        metadata: Some(Metadata {
            seed: Some(args.seed),
            generator: Some(describe_generator(args)),
            regime: None,
        }),
    })
}

fn describe_generator(args: &GenerateArgs) -> String {
    let mut parts = vec![args.kind.clone()];
    if let Some(mode) = &args.mode {
        parts.push(format!("mode={mode}"));
    }
    if let Some(d) = args.d {
        parts.push(format!("d={d}"));
    }
    if let Some(n) = args.n {
        parts.push(format!("n={n}"));
    }
    if let Some(sizes) = &args.sizes {
        parts.push(format!(
            "sizes={}",
            sizes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ));
    }
    if let Some(members) = args.members {
        parts.push(format!("members={members}"));
    }
    parts.push(format!("range={}", args.coord_range));
    parts.join(" ")
}
