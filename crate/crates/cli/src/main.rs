use std::io;
use std::process::ExitCode;

use clap::Parser;
use stieltjes_cli::commands::Io;
use stieltjes_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let mut io = Io { out: &mut stdout.lock(), err: &mut stderr.lock() };
    ExitCode::from(run(cli, &mut io))
}
