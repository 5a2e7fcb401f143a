use crate::{pass_fail, putln};
use clap::Subcommand;
use pi_monoid::{
    check_monoid_relation, eval_word, multiply, pq_parts, relation_instances, rewrite_to_pq,
    MonoidWord,
};
use std::str::FromStr;

#[derive(Subcommand)]
pub(crate) enum MonoidCmd {
    /// Evaluate a splitting word ("v0 h2 s1", "-" for empty) to its pattern sequence.
    Eval { word: String },
    /// Multiply two words in the monoid and print the resulting sequence.
    Multiply { left: String, right: String },
    /// Rewrite a word into splits-then-permutation form, preserving its value.
    Pq { word: String },
    /// Verify the defining relations of the monoid up to an index bound.
    Check {
        #[arg(long, default_value_t = 3)]
        max_index: usize,
    },
}

pub(crate) fn run(cmd: &MonoidCmd, json: bool, out: &mut String) -> Result<i32, String> {
    match cmd {
        MonoidCmd::Eval { word } => {
            let w = MonoidWord::from_str(word).map_err(|e| e.to_string())?;
            let seq = eval_word(&w);
            if json {
                putln(
                    out,
                    serde_json::json!({
                        "sequence": seq.to_string(),
                        "in_pi0": seq.in_pi0(),
                    })
                    .to_string(),
                );
            } else {
                putln(out, seq.to_string());
            }
            Ok(0)
        }
        MonoidCmd::Multiply { left, right } => {
            let l = MonoidWord::from_str(left).map_err(|e| e.to_string())?;
            let r = MonoidWord::from_str(right).map_err(|e| e.to_string())?;
            let prod = multiply(&eval_word(&l), &eval_word(&r));
            if json {
                putln(
                    out,
                    serde_json::json!({ "sequence": prod.to_string() }).to_string(),
                );
            } else {
                putln(out, prod.to_string());
            }
            Ok(0)
        }
        MonoidCmd::Pq { word } => {
            let w = MonoidWord::from_str(word).map_err(|e| e.to_string())?;
            let rewritten = rewrite_to_pq(&w);
            let (p, q) = pq_parts(&rewritten)
                .ok_or_else(|| "rewriting did not reach splits-then-permutation form".to_string())?;
            let ok = check_monoid_relation(&w, &rewritten);
            if json {
                putln(
                    out,
                    serde_json::json!({
                        "word": rewritten.to_string(),
                        "splits": p.to_string(),
                        "permutation": q.to_string(),
                        "preserves_evaluation": ok,
                    })
                    .to_string(),
                );
            } else {
                putln(out, rewritten.to_string());
                putln(out, format!("splits={p}"));
                putln(out, format!("permutation={q}"));
                putln(out, format!("preserves-evaluation={}", pass_fail(ok)));
            }
            Ok(if ok { 0 } else { 1 })
        }
        MonoidCmd::Check { max_index } => {
            let instances = relation_instances(*max_index);
            let mut failed = 0usize;
            if json {
                let rows: Vec<serde_json::Value> = instances
                    .iter()
                    .map(|inst| {
                        let ok = inst.holds();
                        if !ok {
                            failed += 1;
                        }
                        serde_json::json!({
                            "family": inst.family,
                            "indices": inst.indices,
                            "pass": ok,
                        })
                    })
                    .collect();
                putln(
                    out,
                    serde_json::json!({
                        "instances": rows,
                        "all_pass": failed == 0,
                    })
                    .to_string(),
                );
            } else {
                for inst in &instances {
                    let ok = inst.holds();
                    if !ok {
                        failed += 1;
                    }
                    let idx: Vec<String> =
                        inst.indices.iter().map(|i| i.to_string()).collect();
                    putln(
                        out,
                        format!(
                            "family={} indices={} {}",
                            inst.family,
                            idx.join(","),
                            pass_fail(ok)
                        ),
                    );
                }
                putln(
                    out,
                    format!("passed={} failed={failed}", instances.len() - failed),
                );
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}
