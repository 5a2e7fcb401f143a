use crate::{pass_fail, putln, read_file, write_file};
use clap::{Subcommand, ValueEnum};
use nv_elements::compose;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use v_dynamics::{
    compose_factors, dynamics_report, extract_proper_transposition, permutation_factor, reveal,
    Component, OrbitKind, RevealOrder, TreePair,
};

#[derive(Clone, Copy, ValueEnum)]
pub(crate) enum OrderArg {
    /// Ascending roots, imbalance-reducing moves first, domain side first.
    Standard,
    /// Descending roots, merging moves first, range side first.
    Alternate,
}

impl From<OrderArg> for RevealOrder {
    fn from(o: OrderArg) -> RevealOrder {
        match o {
            OrderArg::Standard => RevealOrder::Standard,
            OrderArg::Alternate => RevealOrder::Alternate,
        }
    }
}

#[derive(Subcommand)]
pub(crate) enum DynCmd {
    /// Reveal a tree pair: no augmentation chain reduces imbalance or merges components.
    Reveal {
        f: PathBuf,
        #[arg(long, value_enum, default_value = "standard")]
        order: OrderArg,
        /// Write the revealed pair to a .tp file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report every finite orbit of the map a tree pair describes.
    Report {
        f: PathBuf,
        #[arg(long, value_enum, default_value = "standard")]
        order: OrderArg,
    },
    /// Factor a pair into a leaf permutation and caret-transfer pairs.
    Factor { f: PathBuf },
    /// Extract a verified proper transposition from a non-identity pair.
    Transposition { f: PathBuf },
}

/// Reads either a `.tp` tree pair or a one-dimensional `.el` element file.
fn load_pair(path: &Path) -> Result<TreePair, String> {
    let text = read_file(path)?;
    let trimmed = text.trim();
    if trimmed.starts_with("nV dim=") {
        let f = nv_elements::read_element(&text).map_err(|e| format!("{}: {e}", path.display()))?;
        TreePair::from_element(&f).map_err(|e| format!("{}: {e}", path.display()))
    } else {
        TreePair::from_str(trimmed).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn component_json(c: &Component) -> serde_json::Value {
    serde_json::json!({
        "root": c.root.to_string(),
        "period": c.period(),
        "orbit_leaf": c.lambda.to_string(),
    })
}

fn kind_str(kind: OrbitKind) -> &'static str {
    match kind {
        OrbitKind::Repelling => "repelling",
        OrbitKind::Attracting => "attracting",
        OrbitKind::NeutralInterval => "neutral-interval",
    }
}

pub(crate) fn run(cmd: &DynCmd, json: bool, out: &mut String) -> Result<i32, String> {
    match cmd {
        DynCmd::Reveal { f, order, output } => {
            let pair = load_pair(f)?;
            let rev = reveal(&pair, (*order).into());
            let text = rev.pair().to_string();
            if let Some(path) = output {
                write_file(path, &format!("{text}\n"))?;
            }
            if json {
                let cycles: Vec<Vec<String>> = rev
                    .neutral_cycles()
                    .iter()
                    .map(|c| c.iter().map(|w| w.to_string()).collect())
                    .collect();
                putln(
                    out,
                    serde_json::json!({
                        "pair": text,
                        "imbalance": rev.imbalance(),
                        "steps": rev.steps(),
                        "repelling": rev.repelling_components().iter().map(component_json).collect::<Vec<_>>(),
                        "attracting": rev.attracting_components().iter().map(component_json).collect::<Vec<_>>(),
                        "neutral_cycles": cycles,
                    })
                    .to_string(),
                );
            } else {
                if output.is_none() {
                    putln(out, &text);
                }
                putln(out, format!("imbalance={}", rev.imbalance()));
                putln(out, format!("steps={}", rev.steps()));
                for c in rev.repelling_components() {
                    putln(
                        out,
                        format!("repeller root={} period={}", c.root, c.period()),
                    );
                }
                for c in rev.attracting_components() {
                    putln(
                        out,
                        format!("attractor root={} period={}", c.root, c.period()),
                    );
                }
                for cycle in rev.neutral_cycles() {
                    let words: Vec<String> = cycle.iter().map(|w| w.to_string()).collect();
                    putln(out, format!("neutral-cycle {}", words.join(" ")));
                }
            }
            Ok(0)
        }
        DynCmd::Report { f, order } => {
            let pair = load_pair(f)?;
            let report = dynamics_report(&pair, (*order).into());
            if json {
                let rows: Vec<serde_json::Value> = report
                    .records()
                    .iter()
                    .map(|r| {
                        serde_json::json!({
                            "kind": kind_str(r.kind),
                            "period": r.period,
                            "point": r.point.to_string(),
                            "cycle": r.cycle.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                putln(
                    out,
                    serde_json::json!({
                        "records": rows,
                        "max_period": report.n_f(),
                    })
                    .to_string(),
                );
            } else {
                for line in report.lines() {
                    putln(out, line);
                }
            }
            Ok(0)
        }
        DynCmd::Factor { f } => {
            let pair = load_pair(f)?;
            let factors = permutation_factor(&pair);
            let ok = compose_factors(&factors).equals(&pair.to_element());
            if json {
                let rows: Vec<String> = factors.iter().map(|p| p.to_string()).collect();
                putln(
                    out,
                    serde_json::json!({
                        "factors": rows,
                        "recomposes": ok,
                    })
                    .to_string(),
                );
            } else {
                for p in &factors {
                    putln(out, p.to_string());
                }
                putln(out, format!("factors={}", factors.len()));
                putln(out, format!("recomposes={}", pass_fail(ok)));
            }
            Ok(if ok { 0 } else { 1 })
        }
        DynCmd::Transposition { f } => {
            let pair = load_pair(f)?;
            let (swap, cert) =
                extract_proper_transposition(&pair).map_err(|e| e.to_string())?;
            // Replay the certificate at the map level: the commutator of the
            // input with g, then with j, must land on the returned swap.
            let fe = pair.to_element();
            let ge = cert.g.to_element();
            let je = cert.j.to_element();
            let h = compose(&ge, &compose(&fe, &compose(&ge, &fe.invert())));
            let k = compose(&je, &compose(&h, &compose(&je, &h.invert())));
            let ok = k.equals(&swap.to_element());
            if json {
                putln(
                    out,
                    serde_json::json!({
                        "u": cert.u.to_string(),
                        "v": cert.v.to_string(),
                        "transposition": swap.to_string(),
                        "g": cert.g.to_string(),
                        "j": cert.j.to_string(),
                        "verified": ok,
                    })
                    .to_string(),
                );
            } else {
                putln(out, format!("u={}", cert.u));
                putln(out, format!("v={}", cert.v));
                putln(out, format!("transposition: {swap}"));
                putln(out, format!("g: {}", cert.g));
                putln(out, format!("j: {}", cert.j));
                putln(out, format!("certificate={}", pass_fail(ok)));
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}
