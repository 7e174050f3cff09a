//! Command-line front end: every subcommand reads exact input, runs the
//! corresponding library routine, and emits one deterministic JSON report.
//!
//! Exit codes: 0 = clean, 2 = a checked statement failed on the input (a
//! counterexample candidate), 1 = usage or computation error.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use multconj::bounds::{self, ConjectureReport};
use multconj::determinantal::{self, DegreeMatrix};
use multconj::hilbert;
use multconj::monomial::{monomials_of_degree, parse_ideal, MonomialIdeal};
use multconj::powers;
use multconj::regseq::{self, ShiftProfile};
use multconj::resolution;
use multconj::{Caps, Error};

#[derive(Parser)]
#[command(
    name = "multconj",
    about = "Exact multiplicity-bound checks for monomial and determinantal ideals",
    version
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Write the JSON report to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Cap on the size of the lcm lattice explored per Betti computation.
    #[arg(long, global = true, env = "MULTCONJ_CAP_LCM", default_value_t = Caps::default().max_lcm_lattice)]
    cap_lcm: usize,
}

#[derive(Args)]
struct IdealArg {
    /// Generators, e.g. "x1^2, x1*x2" (empty string = zero ideal).
    #[arg(long)]
    ideal: String,
    /// Number of variables.
    #[arg(short = 'n', long)]
    vars: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Check the multiplicity bound conjectures on one monomial ideal.
    Check(IdealArg),
    /// Print the Betti table and shift invariants of S/I.
    Betti {
        #[command(flatten)]
        ideal: IdealArg,
        /// Computation route: auto (closed formula when stable), oracle, or
        /// ek (closed formula, stable ideals only).
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Print the Hilbert series numerator, codimension and multiplicity.
    Hilbert(IdealArg),
    /// Check the conjectures on randomly generated strongly stable ideals.
    Fuzz {
        /// Number of variables.
        #[arg(short = 'n', long)]
        vars: usize,
        /// Number of random ideals.
        #[arg(long, default_value_t = 25)]
        count: u32,
        /// Maximal degree of a random generator.
        #[arg(long, default_value_t = 4)]
        maxdeg: u32,
        /// RNG seed; the same seed gives byte-identical output.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Multiplicity, shifts and bound inequalities for an ideal of maximal
    /// minors, from its degree array.
    Det {
        /// Entry array, rows separated by ';', e.g. "2,3;2,2".
        #[arg(long, conflicts_with_all = ["a", "b"])]
        u: Option<String>,
        /// Column degrees a_1..a_n (sorted ascending), e.g. "0,0,1".
        #[arg(long, requires = "b")]
        a: Option<String>,
        /// Row degrees b_1..b_m (sorted ascending), e.g. "2,3".
        #[arg(long, requires = "a")]
        b: Option<String>,
        /// Also report the index-reflected dual array.
        #[arg(long)]
        dual: bool,
    },
    /// Scan powers I^k: multiplicities, regularity slopes, bound ratios.
    Powers {
        #[command(flatten)]
        ideal: IdealArg,
        /// Largest power to scan.
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Propagate a shift profile through a sequence of regular forms and
    /// check the bounds after every step.
    Regseq {
        /// Maximal shifts M_1..M_q, e.g. "3,5".
        #[arg(long)]
        big_m: String,
        /// Minimal shifts m_1..m_q, e.g. "2,5".
        #[arg(long)]
        small_m: String,
        /// Codimension of the start profile.
        #[arg(short = 's', long)]
        codim: usize,
        /// Multiplicity of the start profile.
        #[arg(short = 'e', long)]
        mult: u128,
        /// Degrees of the forms to adjoin, e.g. "4,2".
        #[arg(long)]
        degrees: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps {
        max_lcm_lattice: cli.common.cap_lcm,
        ..Caps::default()
    };
    match run(&cli.command, &caps, cli.common.out.as_deref()) {
        Ok(clean) => {
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

/// Run one subcommand; `Ok(true)` means no checked statement failed.
fn run(cmd: &Command, caps: &Caps, out: Option<&Path>) -> multconj::Result<bool> {
    match cmd {
        Command::Check(arg) => {
            let ideal = parse_ideal(&arg.ideal, arg.vars)?;
            let report = bounds::check_conjectures(&ideal, caps)?;
            let clean = !report.counterexample_candidate;
            emit(&report, out)?;
            Ok(clean)
        }
        Command::Betti { ideal, method } => {
            let parsed = parse_ideal(&ideal.ideal, ideal.vars)?;
            let table = match method.as_str() {
                "auto" => resolution::betti_table(&parsed, caps)?,
                "oracle" => resolution::betti_oracle(&parsed, caps)?,
                "ek" => resolution::betti_ek(&parsed)?,
                other => {
                    return Err(Error::Input(format!(
                        "unknown method '{other}' (expected auto, oracle or ek)"
                    )))
                }
            };
            let shifts = table.shifts();
            #[derive(Serialize)]
            struct BettiReport {
                ideal: String,
                n: usize,
                entries: Vec<(usize, u32, u64)>,
                projdim: usize,
                big_m: Vec<u32>,
                small_m: Vec<u32>,
                reg: i64,
                pure: bool,
                quasi_pure: bool,
            }
            emit(
                &BettiReport {
                    ideal: parsed.to_string(),
                    n: parsed.num_vars(),
                    entries: table.entries().collect(),
                    projdim: shifts.projdim,
                    big_m: shifts.big_m,
                    small_m: shifts.small_m,
                    reg: shifts.reg,
                    pure: table.is_pure(),
                    quasi_pure: table.is_quasi_pure(),
                },
                out,
            )?;
            Ok(true)
        }
        Command::Hilbert(arg) => {
            let ideal = parse_ideal(&arg.ideal, arg.vars)?;
            let k = hilbert::k_polynomial(&ideal)?;
            #[derive(Serialize)]
            struct HilbertReport {
                ideal: String,
                n: usize,
                /// Numerator coefficients, constant term first.
                numerator: Vec<String>,
                codim: usize,
                dim: usize,
                multiplicity: String,
            }
            emit(
                &HilbertReport {
                    ideal: ideal.to_string(),
                    n: ideal.num_vars(),
                    numerator: k.coeffs().iter().map(|c| c.to_string()).collect(),
                    codim: hilbert::codimension(&ideal)?,
                    dim: hilbert::dimension(&ideal)?,
                    multiplicity: hilbert::multiplicity(&ideal)?.to_string(),
                },
                out,
            )?;
            Ok(true)
        }
        Command::Fuzz {
            vars,
            count,
            maxdeg,
            seed,
        } => {
            let report = fuzz(*vars, *count, *maxdeg, *seed, caps)?;
            let clean = report.counterexample_candidates == 0;
            emit(&report, out)?;
            Ok(clean)
        }
        Command::Det { u, a, b, dual } => {
            let matrix = match (u, a, b) {
                (Some(u), None, None) => DegreeMatrix::from_u(parse_rows(u)?)?,
                (None, Some(a), Some(b)) => {
                    DegreeMatrix::from_degree_sequences(parse_i64_list(a)?, parse_i64_list(b)?)?
                }
                _ => {
                    return Err(Error::Input(
                        "provide either --u or both --a and --b".into(),
                    ))
                }
            };
            let report = determinantal::check_bounds(&matrix)?;
            let clean = report.upper_holds && report.lower_holds;
            #[derive(Serialize)]
            struct DetOutput {
                primal: determinantal::DetReport,
                dual_u: Option<Vec<Vec<u64>>>,
            }
            emit(
                &DetOutput {
                    dual_u: if *dual {
                        Some(matrix.dualize()?.u().to_vec())
                    } else {
                        None
                    },
                    primal: report,
                },
                out,
            )?;
            Ok(clean)
        }
        Command::Powers { ideal, kmax } => {
            let parsed = parse_ideal(&ideal.ideal, ideal.vars)?;
            let scan = powers::power_scan(&parsed, *kmax, caps)?;
            let slopes = powers::slope_equality_check(&scan);
            let ratios = powers::limit_ratio_report(&scan);
            let asymptotic = powers::asymptotic_multiplicity(&scan, &slopes).ok();
            let clean = ratios.all_le_one;
            #[derive(Serialize)]
            struct PowersOutput {
                scan: powers::PowerScan,
                slopes: powers::SlopeReport,
                ratios: powers::RatioReport,
                asymptotic: Option<powers::AsymptoticReport>,
            }
            emit(
                &PowersOutput {
                    scan,
                    slopes,
                    ratios,
                    asymptotic,
                },
                out,
            )?;
            Ok(clean)
        }
        Command::Regseq {
            big_m,
            small_m,
            codim,
            mult,
            degrees,
        } => {
            let profile = ShiftProfile::new(
                *codim,
                parse_u64_list(big_m)?,
                parse_u64_list(small_m)?,
                *mult,
            )?;
            let degrees = parse_u64_list(degrees)?;
            let trace = regseq::verify_extension(&profile, &degrees)?;
            let clean = trace.ok;
            emit(&trace, out)?;
            Ok(clean)
        }
    }
}

#[derive(Serialize)]
struct FuzzReport {
    vars: usize,
    count: u32,
    maxdeg: u32,
    seed: u64,
    checked: u32,
    counterexample_candidates: u32,
    reports: Vec<ConjectureReport>,
}

/// Generate `count` random strongly stable ideals (closures of a few random
/// monomials) and check the conjectures on each. Deterministic in the seed.
fn fuzz(vars: usize, count: u32, maxdeg: u32, seed: u64, caps: &Caps) -> multconj::Result<FuzzReport> {
    if vars == 0 || maxdeg == 0 {
        return Err(Error::Input("fuzz needs vars >= 1 and maxdeg >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    let mut candidates = 0;
    let by_degree: Vec<Vec<multconj::Monomial>> = (0..=maxdeg)
        .map(|d| monomials_of_degree(vars, d))
        .collect();
    for _ in 0..count {
        let gens: Vec<_> = (0..rng.gen_range(1..=4))
            .map(|_| {
                let d = rng.gen_range(1..=maxdeg) as usize;
                by_degree[d][rng.gen_range(0..by_degree[d].len())].clone()
            })
            .collect();
        let ideal = MonomialIdeal::borel_closure(gens, vars)?;
        let report = bounds::check_conjectures(&ideal, caps)?;
        if report.counterexample_candidate {
            candidates += 1;
        }
        reports.push(report);
    }
    Ok(FuzzReport {
        vars,
        count,
        maxdeg,
        seed,
        checked: count,
        counterexample_candidates: candidates,
        reports,
    })
}

fn parse_u64_list(text: &str) -> multconj::Result<Vec<u64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::Input(format!("expected an integer, got '{}'", t.trim())))
        })
        .collect()
}

fn parse_i64_list(text: &str) -> multconj::Result<Vec<i64>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Input(format!("expected an integer, got '{}'", t.trim())))
        })
        .collect()
}

fn parse_rows(text: &str) -> multconj::Result<Vec<Vec<u64>>> {
    text.split(';').map(parse_u64_list).collect()
}

/// Serialize to pretty JSON; write to stdout, or atomically (temp file in
/// the target directory, then rename) when a path is given.
fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> multconj::Result<()> {
    let json = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Input(format!("serialization failed: {e}")))?;
    match out {
        None => {
            println!("{json}");
            Ok(())
        }
        Some(path) => {
            let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
            let tmp = match dir {
                Some(d) => d.join(format!(
                    ".{}.tmp",
                    path.file_name().unwrap_or_default().to_string_lossy()
                )),
                None => PathBuf::from(format!(
                    ".{}.tmp",
                    path.file_name().unwrap_or_default().to_string_lossy()
                )),
            };
            let io_err = |e: std::io::Error| Error::Input(format!("cannot write report: {e}"));
            let mut f = std::fs::File::create(&tmp).map_err(io_err)?;
            f.write_all(json.as_bytes()).map_err(io_err)?;
            f.write_all(b"\n").map_err(io_err)?;
            f.sync_all().map_err(io_err)?;
            std::fs::rename(&tmp, path).map_err(io_err)?;
            Ok(())
        }
    }
}
