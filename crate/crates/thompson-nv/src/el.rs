use crate::{emit_element, load_element, putln};
use cantor_core::Point;
use clap::Subcommand;
use nv_elements::{compose, Element};
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Subcommand)]
pub(crate) enum ElCmd {
    /// Compose two elements; the second file acts first.  The result is reduced.
    Compose {
        f: PathBuf,
        g: PathBuf,
        /// Write the result to a file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Invert an element.
    Inverse {
        f: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare two elements as maps; exit 0 when equal, 1 when not.
    Equal { a: PathBuf, b: PathBuf },
    /// The identity element of the given dimension.
    Identity {
        #[arg(long)]
        dim: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce an element to its minimal pattern pair.
    Reduce {
        f: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply an element to an eventually periodic point, "pre(period);…".
    Apply { f: PathBuf, point: String },
}

pub(crate) fn run(cmd: &ElCmd, json: bool, out: &mut String) -> Result<i32, String> {
    match cmd {
        ElCmd::Compose { f, g, output } => {
            let fe = load_element(f)?;
            let ge = load_element(g)?;
            if fe.dim() != ge.dim() {
                return Err(format!(
                    "dimension mismatch: {} is {}-dimensional, {} is {}-dimensional",
                    f.display(),
                    fe.dim(),
                    g.display(),
                    ge.dim()
                ));
            }
            emit_element(&compose(&fe, &ge).reduce(), output.as_deref(), json, out)?;
            Ok(0)
        }
        ElCmd::Inverse { f, output } => {
            let fe = load_element(f)?;
            emit_element(&fe.invert(), output.as_deref(), json, out)?;
            Ok(0)
        }
        ElCmd::Equal { a, b } => {
            let ae = load_element(a)?;
            let be = load_element(b)?;
            let equal = ae.dim() == be.dim() && ae.equals(&be);
            if json {
                putln(out, serde_json::json!({ "equal": equal }).to_string());
            } else {
                putln(out, if equal { "equal" } else { "different" });
            }
            Ok(if equal { 0 } else { 1 })
        }
        ElCmd::Identity { dim, output } => {
            if *dim == 0 {
                return Err("dimension must be at least 1".to_string());
            }
            emit_element(&Element::identity(*dim), output.as_deref(), json, out)?;
            Ok(0)
        }
        ElCmd::Reduce { f, output } => {
            let fe = load_element(f)?;
            emit_element(&fe.reduce(), output.as_deref(), json, out)?;
            Ok(0)
        }
        ElCmd::Apply { f, point } => {
            let fe = load_element(f)?;
            let x = Point::from_str(point).map_err(|e| e.to_string())?;
            if x.dim() != fe.dim() {
                return Err(format!(
                    "point has {} coordinates but the element is {}-dimensional",
                    x.dim(),
                    fe.dim()
                ));
            }
            let y = fe.apply(&x);
            if json {
                putln(out, serde_json::json!({ "point": y.to_string() }).to_string());
            } else {
                putln(out, y.to_string());
            }
            Ok(0)
        }
    }
}
