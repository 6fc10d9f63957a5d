//! Command-line front end. [`run_cli`] is the whole program minus process
//! exit, so integration tests can drive it in-process.

pub mod cli;
pub mod commands;
pub mod config;
pub mod report;
pub mod text;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command};
use commands::{CorollaryArgs, Done};
use config::Settings;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const OUT_OF_SCOPE: i32 = 3;
    pub const AUDIT: i32 = 4;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub struct Rendered {
    pub body: String,
    pub code: i32,
}

fn usage(message: String) -> Outcome {
    Outcome { code: exit::USAGE, stdout: String::new(), stderr: message }
}

fn single(done: Done, s: &Settings) -> Outcome {
    let r = done.rendered(s.format, false);
    Outcome { code: r.code, stdout: r.body + "\n", stderr: String::new() }
}

pub fn run_cli<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                _ => exit::USAGE,
            };
            let text = e.render().to_string();
            return if code == exit::OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let s = match config::resolve(&cli.global) {
        Ok(s) => s,
        Err(e) => return usage(format!("error: {e}\n")),
    };
    match &cli.command {
        Command::Classify { poly: Some(p), .. } => single(commands::classify(p, &s), &s),
        Command::Classify { batch: Some(path), .. } => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => return usage(format!("error: {}: {e}\n", path.display())),
            };
            let results = commands::classify_batch(&text, &s);
            let code = results.iter().map(|d| d.code).max().unwrap_or(exit::OK);
            let separator = if s.format == config::Format::Text { "\n\n" } else { "\n" };
            let body: Vec<String> = results.into_iter().map(|d| d.rendered(s.format, true).body).collect();
            let mut stdout = body.join(separator);
            if !stdout.is_empty() {
                stdout.push('\n');
            }
            Outcome { code, stdout, stderr: String::new() }
        }
        Command::Classify { .. } => usage("error: give a polynomial or --batch <FILE>\n".into()),
        Command::Curve { poly, c } => single(commands::curve(poly, c.as_deref(), &s), &s),
        Command::Forms { kind, m, tau } => single(commands::forms(*kind, m, tau), &s),
        Command::Witness { poly, mode, bound } => single(commands::witness(poly, *mode, *bound, &s), &s),
        Command::Corollary { alpha, n, m, a, b } => {
            let args = CorollaryArgs { alpha, n: *n, m: *m, a, b };
            single(commands::corollary(&args, &s), &s)
        }
        Command::Selftest { cases } => single(commands::selftest(*cases, &s), &s),
    }
}
