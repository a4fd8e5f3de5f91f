mod args;
mod commands;
mod source;

use std::process::ExitCode;

use clap::Parser;

use cartanfree::Error;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Unsupported(_) => 2,
        Error::Resource(_) => 3,
        Error::Internal(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(&cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("cartanfree: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
