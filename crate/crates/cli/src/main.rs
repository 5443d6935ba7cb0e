//! `bsymbol`: command-line front end of the b-symbol toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
//! or input errors.

mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{Ctx, Output};

fn dispatch(cli: &Cli) -> anyhow::Result<Output> {
    let ctx = Ctx { global: cli.global.clone() };
    match &cli.command {
        Command::Field(c) => commands::field(&ctx, c),
        Command::Periods(c) => commands::periods(&ctx, c),
        Command::ConjectureScan(c) => commands::conjecture_scan(&ctx, c),
        Command::Weight(c) => commands::weight(&ctx, c),
        Command::Enumerate(c) => commands::enumerate(&ctx, c),
        Command::Uset(c) => commands::uset(&ctx, c),
        Command::Hierarchy(c) => commands::hierarchy(&ctx, c),
        Command::Shorten(c) => commands::shorten(&ctx, c),
        Command::Table1 => commands::table_one(&ctx),
        Command::Table2 => commands::table_two(&ctx),
        Command::Verify(c) => commands::verify_cmd(&ctx, c),
    }
}

fn emit(cli: &Cli, out: &Output) -> anyhow::Result<()> {
    let mut body = out.body.clone();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.global.output {
        Some(path) => std::fs::write(path, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match dispatch(&cli).and_then(|out| emit(&cli, &out).map(|()| out.passed)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
