//! `shen-ell`: evaluation, half-periods, verification sweeps and plot tables
//! for Shen's elliptic functions.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
//! 3 pole of the evaluated function.

mod complex;
mod config;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use shen_elliptic::shen::dn_real;
use shen_elliptic::{
    half_periods_from_invariants, period_ratio, ComplexValue, Error, ShenFunction,
};

use crate::complex::parse_complex;
use crate::config::{emit, resolve_tol, RunConfig};
use crate::suite::Suite;

#[derive(Debug, Parser)]
#[command(name = "shen-ell", version, about = "Shen's elliptic functions dn3 and dn4")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// Signature: 3 (dn3) or 4 (dn4)
    #[arg(long)]
    signature: String,
    /// Squared modulus kappa^2, strictly inside (0, 1)
    #[arg(long, allow_hyphen_values = true)]
    kappa2: f64,
    /// Write CSV here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the Shen function and its Weierstrass function at z
    Eval {
        #[command(flatten)]
        common: Common,
        /// Complex argument, e.g. 0.3+0.1i
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Half-periods from the hypergeometric formulas and from quadrature
    Periods {
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite over the kappa^2 sweep
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Default-contract threshold (overrides SHEN_ELL_TOL; default 1e-8)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tabulate both constructions on [0, 4K]
    Table {
        #[command(flatten)]
        common: Common,
        /// Number of rows
        #[arg(long, default_value_t = 101)]
        grid: usize,
    },
}

enum Failure {
    Usage(String),
    Pole(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Pole { .. } => Failure::Pole(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn config(common: Common, z: ComplexValue, grid: usize) -> Result<RunConfig, Failure> {
    RunConfig::new(
        &common.signature,
        common.kappa2,
        z,
        grid,
        common.output,
    )
    .map_err(Failure::Usage)
}

fn cmd_eval(cfg: &RunConfig) -> Result<(), Failure> {
    let f = ShenFunction::new(cfg.signature, cfg.modulus)?;
    let value = f.eval(cfg.z)?;
    let p = match f.weierstrass().wp(cfg.z) {
        Ok(p) => p,
        Err(Error::Pole { .. }) => ComplexValue::new(f64::INFINITY, 0.0),
        Err(e) => return Err(e.into()),
    };
    let text = format!(
        "signature,kappa2,z_re,z_im,f_re,f_im,p_re,p_im\n{},{},{},{},{},{},{},{}\n",
        cfg.signature.label(),
        cfg.modulus.kappa2(),
        cfg.z.re,
        cfg.z.im,
        value.re,
        value.im,
        p.re,
        p.im
    );
    cfg.emit(&text).map_err(Failure::Usage)
}

fn cmd_periods(cfg: &RunConfig) -> Result<(), Failure> {
    let f = ShenFunction::new(cfg.signature, cfg.modulus)?;
    let hp = f.half_periods();
    let ratio = period_ratio(cfg.signature, cfg.modulus)?;
    let quad = half_periods_from_invariants(f.invariants())?;
    let text = format!(
        "omega,omega_prime_imag,ratio_imag,omega_quadrature,omega_prime_quadrature_imag\n{},{},{},{},{}\n",
        hp.omega, hp.omega_prime.im, ratio.im, quad.omega, quad.omega_prime.im
    );
    cfg.emit(&text).map_err(Failure::Usage)
}

fn cmd_table(cfg: &RunConfig) -> Result<(), Failure> {
    let f = ShenFunction::new(cfg.signature, cfg.modulus)?;
    let span = 4.0 * f.half_periods().omega;
    let last = (cfg.grid - 1) as f64;
    let rows = (0..cfg.grid)
        .into_par_iter()
        .map(|i| {
            let u = span * i as f64 / last;
            let real = dn_real(cfg.signature, cfg.modulus, u)?;
            let wp_form = f.eval(ComplexValue::new(u, 0.0))?.re;
            Ok(format!("{},{},{},{}\n", u, real, wp_form, (real - wp_form).abs()))
        })
        .collect::<Result<Vec<String>, Error>>()?;
    let mut text = String::from("u,dn_real,dn_from_wp,abs_diff\n");
    text.extend(rows);
    cfg.emit(&text).map_err(Failure::Usage)
}

fn cmd_verify(suite: Suite, tol: Option<f64>, output: Option<PathBuf>) -> Result<(), Failure> {
    let tol = resolve_tol(tol).map_err(Failure::Usage)?;
    let checks = suite::run(suite, tol);
    let mut text = String::from("name,kappa2,residual,threshold,status\n");
    for c in &checks {
        text.push_str(&c.record());
        text.push('\n');
    }
    emit(output.as_ref(), &text).map_err(Failure::Usage)?;
    if checks.iter().all(|c| c.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval { common, z } => {
            let z = parse_complex(&z).map_err(Failure::Usage)?;
            cmd_eval(&config(common, z, 2)?)
        }
        Command::Periods { common } => cmd_periods(&config(common, ComplexValue::default(), 2)?),
        Command::Table { common, grid } => {
            cmd_table(&config(common, ComplexValue::default(), grid)?)
        }
        Command::Verify { suite, tol, output } => cmd_verify(suite, tol, output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("{line}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Pole(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
