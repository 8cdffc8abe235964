//! Command-line front end over the exterior-algebra library.
//!
//! Subcommands: `verify` (seeded identity suite), `gamma` (matrix export),
//! `solve` (plane-wave kernel of the symbol), `compare` (algebra-side vs
//! matrix-side residuals). Exit codes: 0 success, 1 check failure,
//! 2 usage or configuration error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use dirac_forms::checks::{self, CheckReport};
use dirac_forms::field::{FourMomentum, PlaneWaveField, Potential};
use dirac_forms::ideal::{gamma_rep_for, GammaRep};
use dirac_forms::solver::{self, TheoremReport};
use dirac_forms::tetrad::Tetrad;
use dirac_forms::{Error, KetVector};

#[derive(Parser)]
#[command(
    name = "dirac-forms",
    about = "Clifford algebra of Minkowski exterior forms: verification, gamma matrices, plane-wave solving"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Threshold for randomized checks and residual comparisons.
    #[arg(long, global = true, default_value_t = 1e-10, value_parser = parse_tolerance)]
    tolerance: f64,

    /// `identity` or 16 comma-separated reals, row-major h_mu^a.
    #[arg(long, global = true, default_value = "identity", value_parser = parse_tetrad)]
    tetrad: TetradArg,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for the randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full identity suite and report each check.
    Verify,
    /// Print the four gamma matrices induced by the tetrad.
    Gamma,
    /// Solve the plane-wave ansatz for the given momentum, potential, mass.
    Solve {
        #[arg(long, value_parser = parse_mass)]
        mass: f64,
        /// Covariant momentum components p0,p1,p2,p3.
        #[arg(long, value_parser = parse_four)]
        p: Four,
        /// Covariant potential components a0,a1,a2,a3.
        #[arg(long, default_value = "0,0,0,0", value_parser = parse_four)]
        a: Four,
    },
    /// Check that the exterior-algebra residual and the matrix residual of
    /// the same wave function agree.
    Compare {
        #[arg(long, value_parser = parse_mass)]
        mass: f64,
        #[arg(long, value_parser = parse_four)]
        p: Four,
        #[arg(long, default_value = "0,0,0,0", value_parser = parse_four)]
        a: Four,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone)]
enum TetradArg {
    Identity,
    Matrix([[f64; 4]; 4]),
}

#[derive(Clone)]
struct Four([f64; 4]);

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !v.is_finite() || v < 0.0 {
        return Err("tolerance must be a finite non-negative number".into());
    }
    Ok(v)
}

fn parse_mass(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if !v.is_finite() || v < 0.0 {
        return Err("mass must be a finite non-negative number".into());
    }
    Ok(v)
}

fn parse_reals(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<f64>()
                .map_err(|_| format!("`{part}` is not a number"))
                .and_then(|v| {
                    if v.is_finite() {
                        Ok(v)
                    } else {
                        Err(format!("`{part}` is not finite"))
                    }
                })
        })
        .collect()
}

fn parse_four(s: &str) -> Result<Four, String> {
    let vals = parse_reals(s)?;
    if vals.len() != 4 {
        return Err(format!("expected 4 components, got {}", vals.len()));
    }
    Ok(Four([vals[0], vals[1], vals[2], vals[3]]))
}

fn parse_tetrad(s: &str) -> Result<TetradArg, String> {
    if s == "identity" {
        return Ok(TetradArg::Identity);
    }
    let vals = parse_reals(s)?;
    if vals.len() != 16 {
        return Err(format!(
            "expected `identity` or 16 reals row-major, got {} values",
            vals.len()
        ));
    }
    let mut m = [[0.0; 4]; 4];
    for mu in 0..4 {
        m[mu].copy_from_slice(&vals[4 * mu..4 * mu + 4]);
    }
    Ok(TetradArg::Matrix(m))
}

/// A failure with the exit code it maps to.
enum Failure {
    /// Invalid configuration or input: exit 2.
    Config(String),
    /// A verification or comparison did not hold: exit 1.
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::InvalidTetrad(_) => Failure::Config(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let tetrad = match &cli.tetrad {
        TetradArg::Identity => Tetrad::identity(),
        TetradArg::Matrix(m) => Tetrad::new(*m).map_err(|e| Failure::Config(e.to_string()))?,
    };
    match &cli.command {
        Command::Verify => cmd_verify(cli, &tetrad),
        Command::Gamma => cmd_gamma(cli, tetrad),
        Command::Solve { mass, p, a } => cmd_solve(cli, tetrad, *mass, p.0, a.0),
        Command::Compare { mass, p, a } => cmd_compare(cli, tetrad, *mass, p.0, a.0),
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    seed: u64,
    tolerance: f64,
    checks: &'a [CheckReport],
    pass: bool,
}

fn cmd_verify(cli: &Cli, tetrad: &Tetrad) -> Result<bool, Failure> {
    let reports = checks::run_suite(tetrad, cli.tolerance, cli.seed)?;
    let pass = checks::all_pass(&reports);
    match cli.format {
        Format::Json => {
            let out = VerifyOutput {
                seed: cli.seed,
                tolerance: cli.tolerance,
                checks: &reports,
                pass,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Text => {
            for r in &reports {
                println!(
                    "{} {:<34} max deviation {:>12.5e}  threshold {:.1e}",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.max_deviation,
                    r.threshold
                );
            }
            let passed = reports.iter().filter(|r| r.pass).count();
            println!("{passed}/{} checks passed", reports.len());
        }
    }
    Ok(pass)
}

#[derive(Serialize)]
struct GammaOutput<'a> {
    #[serde(flatten)]
    rep: &'a GammaRep,
    anticommutator_max_deviation: f64,
}

fn cmd_gamma(cli: &Cli, tetrad: Tetrad) -> Result<bool, Failure> {
    let rep = gamma_rep_for(tetrad)?;
    let deviation = rep.anticommutator_max_deviation();
    match cli.format {
        Format::Json => {
            let out = GammaOutput {
                rep: &rep,
                anticommutator_max_deviation: deviation,
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Text => {
            println!("tetrad h_mu^a (rows mu):");
            for row in rep.tetrad().matrix() {
                println!("  {row:?}");
            }
            for mu in 0..4 {
                println!("gamma^{mu} =");
                print!("{}", rep.gamma(mu));
            }
            println!("anticommutator max deviation from 2 eta^(mu nu): {deviation:.5e}");
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct SolutionOutput {
    ket: KetVector,
    residual: f64,
}

#[derive(Serialize)]
struct SolveOutput {
    p: FourMomentum,
    a: FourMomentum,
    mass: f64,
    mass_shell_gap: f64,
    on_shell: bool,
    count: usize,
    solutions: Vec<SolutionOutput>,
}

fn cmd_solve(
    cli: &Cli,
    tetrad: Tetrad,
    mass: f64,
    p: FourMomentum,
    a: FourMomentum,
) -> Result<bool, Failure> {
    let rep = gamma_rep_for(tetrad)?;
    let potential = Potential::new(a);
    let set = solver::solve_planewave(p, &potential, mass, &rep);

    let solutions: Vec<SolutionOutput> = (0..set.count())
        .map(|k| SolutionOutput {
            ket: set.kets[k].clone(),
            residual: set.field(k).ideal_dirac_residual(&potential, mass).norm(),
        })
        .collect();
    let out = SolveOutput {
        p,
        a,
        mass,
        mass_shell_gap: set.mass_shell_gap,
        on_shell: set.on_shell,
        count: set.count(),
        solutions,
    };

    match cli.format {
        Format::Json => println!("{}", serde_json::to_string(&out).expect("serializable")),
        Format::Text => {
            println!("p = {:?}   a = {:?}   mass = {}", out.p, out.a, out.mass);
            println!(
                "(p-a)^2 - m^2 = {:.6e}   on shell: {}",
                out.mass_shell_gap, out.on_shell
            );
            println!("solutions: {}", out.count);
            for (k, sol) in out.solutions.iter().enumerate() {
                let ket = sol
                    .ket
                    .components()
                    .iter()
                    .map(format_complex)
                    .collect::<Vec<_>>()
                    .join(", ");
                println!(
                    "  #{k} ket = [{ket}]   lifted residual = {:.3e}",
                    sol.residual
                );
            }
        }
    }
    Ok(true)
}

fn cmd_compare(
    cli: &Cli,
    tetrad: Tetrad,
    mass: f64,
    p: FourMomentum,
    a: FourMomentum,
) -> Result<bool, Failure> {
    let rep = gamma_rep_for(tetrad)?;
    let potential = Potential::new(a);

    // the basis wave t1·exp(-ip·x) plus every plane-wave solution
    let mut cases: Vec<(String, PlaneWaveField)> = vec![(
        "t1 wave".to_string(),
        PlaneWaveField::single(p, rep.basis().elements()[0].clone()),
    )];
    let set = solver::solve_planewave(p, &potential, mass, &rep);
    for k in 0..set.count() {
        cases.push((format!("solution {k}"), set.field(k)));
    }

    let mut aggregate = TheoremReport {
        algebra_residual: 0.0,
        matrix_residual: 0.0,
        difference: 0.0,
        tolerance: cli.tolerance,
        pass: true,
    };
    let mut lines = Vec::new();
    for (label, field) in &cases {
        let report = solver::verify_theorem(field, &potential, mass, &rep, cli.tolerance)?;
        lines.push(format!(
            "{label}: algebra residual {:.5e}, matrix residual {:.5e}, difference {:.5e} -> {}",
            report.algebra_residual,
            report.matrix_residual,
            report.difference,
            if report.pass { "pass" } else { "FAIL" }
        ));
        aggregate.algebra_residual = aggregate.algebra_residual.max(report.algebra_residual);
        aggregate.matrix_residual = aggregate.matrix_residual.max(report.matrix_residual);
        aggregate.difference = aggregate.difference.max(report.difference);
        aggregate.pass &= report.pass;
    }

    match cli.format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&aggregate).expect("serializable")
        ),
        Format::Text => {
            for line in &lines {
                println!("{line}");
            }
            println!(
                "max difference {:.5e} vs tolerance {:.1e}: {}",
                aggregate.difference,
                aggregate.tolerance,
                if aggregate.pass { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(aggregate.pass)
}

fn format_complex(c: &Complex64) -> String {
    if c.im >= 0.0 {
        format!("{}+{}i", c.re, c.im)
    } else {
        format!("{}-{}i", c.re, -c.im)
    }
}
