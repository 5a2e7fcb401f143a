use crate::{emit_element, load_element, pass_fail, putln};
use clap::Subcommand;
use sigma_gen::{decompose, eval_sigma, SigmaWord};
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Subcommand)]
pub(crate) enum WordCmd {
    /// Evaluate a generator word ("A0 B1 C0' p0 q1", "-" for empty) to an element.
    Eval {
        word: String,
        /// Write the result to a file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a two-dimensional element as a generator word; verifies the round trip.
    Decompose { f: PathBuf },
}

pub(crate) fn run(cmd: &WordCmd, json: bool, out: &mut String) -> Result<i32, String> {
    match cmd {
        WordCmd::Eval { word, output } => {
            let w = SigmaWord::from_str(word).map_err(|e| e.to_string())?;
            emit_element(&eval_sigma(&w), output.as_deref(), json, out)?;
            Ok(0)
        }
        WordCmd::Decompose { f } => {
            let fe = load_element(f)?;
            if fe.dim() != 2 {
                return Err(format!(
                    "decomposition needs a two-dimensional element, got dimension {}",
                    fe.dim()
                ));
            }
            let w = decompose(&fe);
            let ok = eval_sigma(&w).equals(&fe);
            if json {
                putln(
                    out,
                    serde_json::json!({
                        "word": w.to_string(),
                        "letters": w.len(),
                        "round_trip": ok,
                    })
                    .to_string(),
                );
            } else {
                putln(out, w.to_string());
                putln(out, format!("round-trip={}", pass_fail(ok)));
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}
