use crate::{pass_fail, putln};
use clap::Subcommand;
use sigma_gen::{
    all_family_instances, baker_comm_check, finite_generation_identities, proof_relations,
    surviving_classes, sweep_families, CLASS_NAMES,
};

#[derive(Subcommand)]
pub(crate) enum RelationsCmd {
    /// Verify all relation families up to an index bound.
    Sweep {
        #[arg(long, default_value_t = 4)]
        max_index: usize,
    },
    /// Verify the instances of a single relation family (1-17).
    Family {
        id: u8,
        #[arg(long, default_value_t = 4)]
        max_index: usize,
    },
    /// Verify the commutator word that equals the first brick-exchange generator.
    BakerComm,
    /// Check that the recorded relations kill all eight generator classes.
    Abelianization,
    /// Verify the index-lowering identities behind finite generation.
    FiniteGen {
        #[arg(long, default_value_t = 3)]
        max_index: usize,
    },
}

pub(crate) fn run(cmd: &RelationsCmd, json: bool, out: &mut String) -> Result<i32, String> {
    match cmd {
        RelationsCmd::Sweep { max_index } => {
            let report = sweep_families(*max_index);
            if json {
                let rows: Vec<serde_json::Value> = report
                    .results
                    .iter()
                    .map(|(inst, ok)| {
                        serde_json::json!({
                            "family": inst.family,
                            "indices": inst.assignment,
                            "pass": ok,
                        })
                    })
                    .collect();
                putln(
                    out,
                    serde_json::json!({
                        "results": rows,
                        "passed": report.passed(),
                        "failed": report.failed(),
                        "all_pass": report.all_pass(),
                    })
                    .to_string(),
                );
            } else {
                for line in report.lines() {
                    putln(out, line);
                }
                putln(
                    out,
                    format!("passed={} failed={}", report.passed(), report.failed()),
                );
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        RelationsCmd::Family { id, max_index } => {
            if !(1..=17).contains(id) {
                return Err(format!("family id must be between 1 and 17, got {id}"));
            }
            let instances: Vec<_> = all_family_instances(*max_index)
                .into_iter()
                .filter(|inst| inst.family == *id)
                .collect();
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
                            "indices": inst.assignment,
                            "pass": ok,
                        })
                    })
                    .collect();
                putln(
                    out,
                    serde_json::json!({
                        "results": rows,
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
                    putln(
                        out,
                        format!(
                            "family={} indices={} {}",
                            inst.family,
                            inst.assignment,
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
        RelationsCmd::BakerComm => {
            let ok = baker_comm_check();
            if json {
                putln(out, serde_json::json!({ "holds": ok }).to_string());
            } else {
                putln(out, format!("baker-comm={}", pass_fail(ok)));
            }
            Ok(if ok { 0 } else { 1 })
        }
        RelationsCmd::Abelianization => {
            let relations = proof_relations();
            let surviving = surviving_classes(&relations);
            let mut all_hold = true;
            let mut rel_rows = Vec::new();
            for rel in &relations {
                let ok = rel.holds();
                all_hold &= ok;
                if json {
                    rel_rows.push(serde_json::json!({ "label": rel.label, "holds": ok }));
                } else {
                    putln(out, format!("relation={} {}", rel.label, pass_fail(ok)));
                }
            }
            if !json {
                for name in CLASS_NAMES {
                    let killed = !surviving.contains(&name);
                    putln(
                        out,
                        format!(
                            "class={name} {}",
                            if killed { "killed" } else { "survives" }
                        ),
                    );
                }
            }
            let ok = all_hold && surviving.is_empty();
            if json {
                putln(
                    out,
                    serde_json::json!({
                        "relations": rel_rows,
                        "surviving": surviving,
                        "pass": ok,
                    })
                    .to_string(),
                );
            } else {
                putln(out, format!("abelianization={}", pass_fail(ok)));
            }
            Ok(if ok { 0 } else { 1 })
        }
        RelationsCmd::FiniteGen { max_index } => {
            let checks = finite_generation_identities(*max_index);
            let failed = checks.iter().filter(|c| !c.holds).count();
            if json {
                let rows: Vec<serde_json::Value> = checks
                    .iter()
                    .map(|c| serde_json::json!({ "label": c.label, "holds": c.holds }))
                    .collect();
                putln(
                    out,
                    serde_json::json!({
                        "identities": rows,
                        "all_pass": failed == 0,
                    })
                    .to_string(),
                );
            } else {
                for c in &checks {
                    putln(out, format!("identity={} {}", c.label, pass_fail(c.holds)));
                }
                putln(out, format!("passed={} failed={failed}", checks.len() - failed));
            }
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}
