//! `besselhit` command-line front end.
//!
//! Exit codes: 0 on success, 1 on invalid input (or a failed acceptance
//! criterion), 2 when a numerical method does not converge.

mod commands;
mod config;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use commands::{execute, Cli};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<besselhit::Error> for Failure {
    fn from(e: besselhit::Error) -> Self {
        match e {
            besselhit::Error::Domain(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn run() -> Result<bool, Failure> {
    let argv = config::merge(std::env::args().collect()).map_err(Failure::Usage)?;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            print!("{e}");
            return Ok(true);
        }
        Err(e) => return Err(Failure::Usage(e.render().to_string())),
    };
    if let Some(n) = cli.parallelism {
        if n == 0 {
            return Err(Failure::Usage("--parallelism must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let run = execute(&cli.command)?;
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    run.table.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(!run.failed)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("{}", msg.trim_end());
            if !msg.contains("--help") {
                eprintln!("Run `besselhit --help` for usage.");
            }
            ExitCode::from(1)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
