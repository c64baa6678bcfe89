use std::process::ExitCode;

use clap::Parser;
use symplin_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli, &mut std::io::stdin()) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("{}", e.to_string().replace('\n', " "));
            return ExitCode::from(e.exit_code());
        }
    };
    let text = render(&out.body);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    match written {
        Ok(()) => ExitCode::from(out.code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
