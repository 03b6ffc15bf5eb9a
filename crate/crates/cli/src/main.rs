mod args;
mod commands;
mod npy;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("HYPERAUG_LOG")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match &cli.command {
        Command::Augment(cmd) => commands::augment(cmd),
        Command::Extract(cmd) => commands::extract(cmd),
        Command::Generate(cmd) => commands::generate(cmd),
        Command::Convert(cmd) => commands::convert(cmd),
        Command::Bench(cmd) => commands::bench(cmd),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = format!("{e:#}").replace('\n', " ");
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
