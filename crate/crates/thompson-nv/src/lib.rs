//! Command-line front end for the Cantor-cube homeomorphism toolkit.
//!
//! Verbs are grouped by area: `el` for element arithmetic on `.el` files,
//! `word` for generator words of two-dimensional elements, `monoid` for the
//! positive splitting monoid, `relations` for identity sweeps over the
//! generating set, `dyn` for orbit analysis of one-dimensional elements via
//! `.tp` tree-pair files, and `baker` for two-sided binary sequences under
//! the shift.
//!
//! Exit codes are the contract: `0` means success (and "verified true" for
//! checking verbs), `1` means a check ran to completion and found the claim
//! false, and `2` means a usage, parse, or i/o error.  Textual output never
//! contradicts the exit code.  Every file this tool emits can be read back
//! by this tool bit-exactly.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use std::path::Path;

mod baker_verbs;
mod dynamics;
mod el;
mod monoid;
mod relations;
mod word;

#[derive(Parser)]
#[command(
    name = "thompson-nv",
    version,
    about = "Exact computation with prefix-replacement homeomorphisms of Cantor cubes"
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Element arithmetic on .el files.
    #[command(subcommand)]
    El(el::ElCmd),
    /// Generator words for two-dimensional elements.
    #[command(subcommand)]
    Word(word::WordCmd),
    /// The positive monoid of numbered pattern sequences.
    #[command(subcommand)]
    Monoid(monoid::MonoidCmd),
    /// Identity sweeps over the generating set.
    #[command(subcommand)]
    Relations(relations::RelationsCmd),
    /// Orbit analysis of one-dimensional elements via tree pairs.
    #[command(subcommand)]
    Dyn(dynamics::DynCmd),
    /// Two-sided binary sequences under the shift.
    #[command(subcommand)]
    Baker(baker_verbs::BakerCmd),
}

/// Captured result of one invocation: exit code plus both output streams.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation, given the arguments after the binary name.
pub fn run(args: &[&str]) -> Outcome {
    let parsed = Cli::try_parse_from(std::iter::once("thompson-nv").chain(args.iter().copied()));
    let cli = match parsed {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };

    let mut out = String::new();
    match dispatch(&cli, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(msg) => Outcome {
            code: 2,
            stdout: out,
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(cli: &Cli, out: &mut String) -> Result<i32, String> {
    match &cli.command {
        Command::El(cmd) => el::run(cmd, cli.json, out),
        Command::Word(cmd) => word::run(cmd, cli.json, out),
        Command::Monoid(cmd) => monoid::run(cmd, cli.json, out),
        Command::Relations(cmd) => relations::run(cmd, cli.json, out),
        Command::Dyn(cmd) => dynamics::run(cmd, cli.json, out),
        Command::Baker(cmd) => baker_verbs::run(cmd, cli.json, out),
    }
}

/// Appends one output line.
pub(crate) fn putln(out: &mut String, line: impl AsRef<str>) {
    out.push_str(line.as_ref());
    out.push('\n');
}

pub(crate) fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

pub(crate) fn read_file(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

pub(crate) fn write_file(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

pub(crate) fn load_element(path: &Path) -> Result<nv_elements::Element, String> {
    let text = read_file(path)?;
    nv_elements::read_element(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Prints an element, or writes it to `output` when given.  In JSON mode the
/// serialized text is embedded so the object stays self-contained.
pub(crate) fn emit_element(
    f: &nv_elements::Element,
    output: Option<&Path>,
    json: bool,
    out: &mut String,
) -> Result<(), String> {
    let text = nv_elements::write_element(f);
    if let Some(path) = output {
        write_file(path, &text)?;
    }
    if json {
        putln(
            out,
            serde_json::json!({
                "dim": f.dim(),
                "size": f.size(),
                "element": text,
            })
            .to_string(),
        );
    } else if output.is_none() {
        out.push_str(&text);
    }
    Ok(())
}
