use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use altq::config::RunConfig;
use altq::generators::{build_generators, central_delta};
use altq::runner;
use altq::{Error, Gen};

#[derive(Parser)]
#[command(name = "altq", version, about = "Exact checks for the alternating presentation of U_q^+")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks; exits 1 if any fails.
    Verify {
        /// all, ybe, fm, determinant, reps, classical, dictionary, pbw or serre
        target: String,
        /// Truncation order of the matrix presentations
        #[arg(long)]
        order: Option<u32>,
        /// Largest relation index checked in representations
        #[arg(long)]
        kmax: Option<u32>,
        /// Largest p in the linear relations
        #[arg(long)]
        pmax: Option<u32>,
        /// Largest total degree of the PBW census
        #[arg(long)]
        max_degree: Option<u32>,
        /// JSON configuration file
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the JSON report here ("-" for stdout)
        #[arg(long)]
        json: Option<PathBuf>,
        /// Restrict to these groups (repeatable)
        #[arg(long)]
        group: Vec<String>,
    },
    /// Print internal objects.
    Dump {
        #[command(subcommand)]
        what: Dump,
    },
}

#[derive(Subcommand)]
enum Dump {
    /// A generator as a polynomial in W0, W1 and the central D_n, e.g. G2, Gt1, W-1, W3
    Generator {
        symbol: String,
        /// Depth of the generator table (defaults to what the symbol needs)
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// The central element D_n in alternating generators
    Delta {
        n: u32,
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn load(config: &Option<PathBuf>) -> Result<RunConfig, Error> {
    match config {
        None => Ok(RunConfig::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::ConfigInvalid(format!("{}: {e}", path.display())))?;
            RunConfig::from_json(&text)
        }
    }
}

fn verify(
    target: &str,
    overrides: [(Option<u32>, fn(&mut RunConfig) -> &mut u32); 4],
    config: &Option<PathBuf>,
    json: &Option<PathBuf>,
    groups: &[String],
) -> Result<bool, Error> {
    let mut cfg = load(config)?;
    for (value, field) in overrides {
        if let Some(v) = value {
            *field(&mut cfg) = v;
        }
    }
    if !groups.is_empty() {
        cfg.set_groups(groups)?;
        if target != "all" {
            let only: altq::config::Group = target.parse()?;
            cfg.groups.retain(|g| *g == only);
        }
    } else {
        cfg.set_groups(&[target])?;
    }
    cfg.validate()?;
    let reports = runner::run(&cfg);
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        eprintln!("{status} {}", r.check_id);
    }
    let doc = runner::to_json(&reports);
    match json {
        Some(p) if p.as_os_str() == "-" => print!("{doc}"),
        Some(p) => std::fs::write(p, doc).map_err(|e| Error::ConfigInvalid(format!("{}: {e}", p.display())))?,
        None => {}
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    eprintln!("{} checks, {} failed", reports.len(), failed);
    Ok(failed == 0)
}

fn dump_generator(symbol: &str, nmax: Option<u32>, config: &Option<PathBuf>) -> Result<(), Error> {
    let cfg = load(config)?;
    let g: Gen = symbol.parse()?;
    if !g.is_alternating() {
        return Err(Error::AlphabetMismatch(g.to_string()));
    }
    let need = match g {
        Gen::Wm(k) | Gen::Wp(k) => k.saturating_sub(1),
        _ => g.index(),
    };
    let n = nmax.unwrap_or(need).max(need);
    let table = build_generators(n, cfg.params.rho_bar());
    let p = table.get(g).ok_or_else(|| Error::IndexOutOfRange { index: g.index() as usize, max: n as usize })?;
    println!("{g} = {p}");
    Ok(())
}

fn dump_delta(n: u32, config: &Option<PathBuf>) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, max: usize::MAX });
    }
    let cfg = load(config)?;
    println!("D{n} = {}", central_delta(n - 1, cfg.params.rho_bar()));
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Verify { target, order, kmax, pmax, max_degree, config, json, group } => verify(
            target,
            [
                (*order, |c| &mut c.order),
                (*kmax, |c| &mut c.k_max),
                (*pmax, |c| &mut c.p_max),
                (*max_degree, |c| &mut c.pbw_max_degree),
            ],
            config,
            json,
            group,
        ),
        Command::Dump { what: Dump::Generator { symbol, nmax, config } } => {
            dump_generator(symbol, *nmax, config).map(|_| true)
        }
        Command::Dump { what: Dump::Delta { n, config } } => dump_delta(*n, config).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
