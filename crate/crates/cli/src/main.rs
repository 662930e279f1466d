mod args;
mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let outcome = commands::run(&cli, &mut out, &mut err);
    let flushed = out.flush();
    match (outcome, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Ok(()), Err(e)) | (Err(commands::Failure::Io(e)), _) => {
            if e.kind() == io::ErrorKind::BrokenPipe {
                return ExitCode::SUCCESS;
            }
            let _ = writeln!(err, "error: io: {e}");
            ExitCode::from(1)
        }
        (Err(failure), _) => {
            let code = failure.code();
            let detail = failure.detail().replace('\n', " ");
            let _ = writeln!(err, "error: {code}: {detail}");
            ExitCode::from(if code == "usage" { 2 } else { 1 })
        }
    }
}
