use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use cubesum::{run, self_check, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = self_check().and_then(|()| run(&cli, &mut out));
    let _ = out.flush();
    match result {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
