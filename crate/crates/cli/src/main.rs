//! `homdim`: homological dimensions of complexes over graded monomial quotient rings.
//!
//! Exit codes: 0 success (including verdicts labeled indeterminate), 1 usage, 2 input
//! parse or type errors, 3 violated invariants.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, ValueEnum};

use homdim::dimensions::{ci_dim_best, gdim, hierarchy_check, pci_dim, pd, DeformationSpec};
use homdim::invariants::{complexity_estimate, depth, poincare_series};
use homdim::io;
use homdim::resolution::minimal_free_resolution;
use homdim::verify::{self, Counts};
use homdim::{Algebra, Caps, ChainComplex, PresentedModule};

use homdim_cli::report::{Body, ObjectReport, Outcome, Report, RingInfo, VerifyReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Command {
    RingInfo,
    Homology,
    Resolve,
    Betti,
    Poincare,
    Depth,
    Pd,
    Gdim,
    Pcidim,
    CidimBound,
    Hierarchy,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Every acceptance criterion.
    #[value(alias = "paper")]
    All,
    /// The worked examples (criteria 1, 2, 3 and 8).
    Examples,
    /// The seeded property criteria (4 to 7).
    Properties,
}

#[derive(Debug, Parser)]
#[command(name = "homdim", version, about = "Homological dimensions over graded monomial quotient rings")]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Ring file (JSON); defaults to k[s,t]/(s^2, st, t^2) for `verify` only.
    #[arg(long)]
    ring: Option<PathBuf>,
    /// Complex, module or named-module file (JSON); may be repeated.
    #[arg(long = "object")]
    objects: Vec<PathBuf>,
    /// Homological cutoff N.
    #[arg(long, default_value_t = 10)]
    cutoff: i32,
    /// Internal degree cap D.
    #[arg(long = "degree-cap", default_value_t = 20)]
    degree_cap: i32,
    /// Window W for Ext vanishing in total reflexivity tests.
    #[arg(long, default_value_t = 8)]
    window: i32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Seed for the randomized suites.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Deformation registry (JSON) used by `cidim-bound` and `hierarchy`.
    #[arg(long)]
    deformations: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Keep wall-clock times in `verify` reports (they are dropped by default so
    /// that reports are reproducible).
    #[arg(long)]
    timings: bool,
}

/// An error with a fixed exit code.
#[derive(Debug)]
struct Coded {
    code: u8,
    message: String,
}

impl fmt::Display for Coded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Coded {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    Coded { code: 1, message: message.into() }.into()
}

fn input(path: &Path, e: homdim::Error) -> anyhow::Error {
    Coded { code: 2, message: format!("{}: {e}", path.display()) }.into()
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(c) = e.downcast_ref::<Coded>() {
        return c.code;
    }
    match e.downcast_ref::<homdim::Error>() {
        Some(homdim::Error::WindowTooSmall(_)) => 1,
        _ => 3,
    }
}

fn caps(cli: &Cli) -> Result<Caps> {
    if cli.cutoff < 1 || cli.degree_cap < 1 || cli.window < 1 {
        return Err(usage("--cutoff, --degree-cap and --window must be positive"));
    }
    Ok(Caps::new(cli.cutoff, cli.degree_cap, cli.window))
}

fn load_ring(cli: &Cli) -> Result<Algebra> {
    match &cli.ring {
        Some(p) => io::parse_ring(&read(p)?).map_err(|e| input(p, e)),
        None if cli.command == Command::Verify => Ok(verify::trivial_extension()),
        None => Err(usage("--ring is required")),
    }
}

fn load_registry(cli: &Cli, r: &Algebra) -> Result<Vec<DeformationSpec>> {
    match &cli.deformations {
        Some(p) => io::parse_registry(r, &read(p)?).map_err(|e| input(p, e)),
        None => Ok(Vec::new()),
    }
}

fn ring_info(r: &Algebra, caps: Caps) -> Result<RingInfo> {
    let top = r.top_degree();
    let last = top.unwrap_or(caps.degree_cap).min(caps.degree_cap);
    let (d, c) = depth(&ChainComplex::module(PresentedModule::ring(r), 0), caps)?;
    Ok(RingInfo {
        artinian: r.is_artinian(),
        top_degree: top,
        hilbert_function: (0..=last).map(|e| r.hilbert_function(e)).collect(),
        complete_intersection: r.is_complete_intersection(),
        depth: d,
        depth_certainty: c,
    })
}

fn analyze(cmd: Command, x: &Arc<ChainComplex>, registry: &[DeformationSpec], caps: Caps) -> Result<Outcome> {
    Ok(match cmd {
        Command::Homology => Outcome::Homology(x.homology_table(caps.degree_cap)),
        Command::Resolve => {
            let res = minimal_free_resolution(x, caps.cutoff, caps.degree_cap)?;
            Outcome::Resolution { betti: res.betti_table(), complex: io::complex_to_file(res.complex()) }
        }
        Command::Betti => Outcome::Betti(minimal_free_resolution(x, caps.cutoff, caps.degree_cap)?.betti_table()),
        Command::Poincare => {
            let series = poincare_series(x, caps)?;
            match complexity_estimate(&series) {
                Ok(c) => Outcome::Poincare { series, complexity: Some(c), note: None },
                Err(homdim::Error::WindowTooSmall(why)) => {
                    Outcome::Poincare { series, complexity: None, note: Some(format!("indeterminate: {why}")) }
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Depth => {
            let (d, c1) = depth(x, caps)?;
            let (dr, c2) = depth(&ChainComplex::module(PresentedModule::ring(x.algebra()), 0), caps)?;
            Outcome::Depth { depth: d, ring_depth: dr, certainty: c1.and(c2) }
        }
        Command::Pd => Outcome::Verdict(pd(x, caps)?),
        Command::Gdim => Outcome::Verdict(gdim(x, caps)?),
        Command::Pcidim => Outcome::Verdict(pci_dim(x, caps)?),
        Command::CidimBound => Outcome::Verdict(ci_dim_best(x, registry, caps)?),
        Command::Hierarchy => Outcome::Hierarchy(hierarchy_check(x, registry, caps)?),
        Command::RingInfo | Command::Verify => unreachable!("not an object command"),
    })
}

fn command_name(cmd: Command) -> String {
    cmd.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn run(cli: &Cli) -> Result<Report> {
    let caps = caps(cli)?;
    let r = load_ring(cli)?;
    let mut seed = None;
    let body = match cli.command {
        Command::RingInfo => Body::RingInfo(ring_info(&r, caps)?),
        Command::Verify => {
            seed = Some(cli.seed);
            let counts = Counts::default();
            let criteria = match cli.suite {
                Suite::All => verify::full_suite(caps, cli.seed, counts),
                Suite::Examples => verify::examples_suite(caps),
                Suite::Properties => verify::properties_suite(cli.seed, counts),
            };
            let criteria: Vec<_> = if cli.timings { criteria } else { criteria.into_iter().map(|c| c.without_timing()).collect() };
            let suite = cli.suite.to_possible_value().expect("no skipped variants").get_name().to_string();
            Body::Verify(VerifyReport { suite, passed: criteria.iter().all(|c| c.passed), criteria })
        }
        cmd => {
            if cli.objects.is_empty() {
                return Err(usage(format!("`{}` needs at least one --object", command_name(cmd))));
            }
            let registry = load_registry(cli, &r)?;
            let mut out = Vec::new();
            for p in &cli.objects {
                let x = Arc::new(io::parse_object(&r, &read(p)?).map_err(|e| input(p, e))?);
                let result = analyze(cmd, &x, &registry, caps).with_context(|| format!("{}", p.display()))?;
                out.push(ObjectReport { object: p.display().to_string(), result });
            }
            Body::Objects(out)
        }
    };
    Ok(Report { command: command_name(cli.command), caps, seed, ring: io::ring_to_file(&r), body })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("reports serialize")),
                Format::Table => print!("{}", report.to_table()),
            }
            let violations = report.violations();
            for v in &violations {
                eprintln!("invariant violated: {v}");
            }
            ExitCode::from(if violations.is_empty() { 0 } else { 3 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
