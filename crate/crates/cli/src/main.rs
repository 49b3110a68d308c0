use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use depthlab_cli::args::Cli;
use depthlab_cli::{execute, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let run = execute(&cli);
    let json = run.report.to_json();
    let mut code = run.exit_code;
    if let Some(path) = &cli.json_out {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("cannot write {}: {e}", path.display());
            code = EXIT_USAGE;
        }
    }
    let _ = std::io::stdout().write_all(json.as_bytes());
    eprintln!("{}", run.summary);
    ExitCode::from(code as u8)
}
