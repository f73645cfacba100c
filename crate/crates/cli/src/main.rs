use std::process::ExitCode;

use clap::Parser;
use starcolor_cli::app::{run, write_output, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = cli.output.clone();
    match run(cli).and_then(|out| write_output(output.as_deref(), &out.text).map(|()| out.code)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
