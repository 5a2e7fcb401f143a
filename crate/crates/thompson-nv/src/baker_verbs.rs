use crate::{pass_fail, putln};
use baker::{aperiodic_necklace_count, bakers_map, enumerate_periodic_orbits, random_two_sided, TwoSidedPoint};
use cantor_core::corpus_rng;
use clap::Subcommand;
use std::str::FromStr;

/// Random-number stream reserved for the command-line shift check.
const VERIFY_SHIFT_STREAM: u64 = 70;

#[derive(Subcommand)]
pub(crate) enum BakerCmd {
    /// The shift orbit of a two-sided sequence "(left)a.b(right)".
    Orbit { point: String },
    /// One representative per primitive necklace of the given period.
    Enumerate { period: usize },
    /// Conjugacy of the shift with the brick-exchange element on random sequences.
    VerifyShift {
        #[arg(long, default_value_t = 1000)]
        count: usize,
    },
}

pub(crate) fn run(cmd: &BakerCmd, json: bool, out: &mut String) -> Result<i32, String> {
    match cmd {
        BakerCmd::Orbit { point } => {
            let x = TwoSidedPoint::from_str(point).map_err(|e| e.to_string())?;
            match x.orbit_size() {
                Some(size) => {
                    let mut orbit = Vec::with_capacity(size);
                    let mut y = x.clone();
                    for _ in 0..size {
                        orbit.push(y.to_string());
                        y = y.shift();
                    }
                    if json {
                        putln(
                            out,
                            serde_json::json!({
                                "purely_periodic": true,
                                "orbit": orbit,
                                "size": size,
                            })
                            .to_string(),
                        );
                    } else {
                        for p in &orbit {
                            putln(out, p);
                        }
                        putln(out, format!("orbit-size={size}"));
                    }
                }
                None => {
                    if json {
                        putln(
                            out,
                            serde_json::json!({ "purely_periodic": false }).to_string(),
                        );
                    } else {
                        putln(out, "purely-periodic=false");
                    }
                }
            }
            Ok(0)
        }
        BakerCmd::Enumerate { period } => {
            if *period == 0 || *period > 24 {
                return Err(format!("period must be between 1 and 24, got {period}"));
            }
            let orbits = enumerate_periodic_orbits(*period);
            let ok = orbits.len() as u64 == aperiodic_necklace_count(*period as u64);
            if json {
                let rows: Vec<String> = orbits.iter().map(|o| o.to_string()).collect();
                putln(
                    out,
                    serde_json::json!({
                        "orbits": rows,
                        "count": orbits.len(),
                        "count_check": ok,
                    })
                    .to_string(),
                );
            } else {
                for o in &orbits {
                    putln(out, o.to_string());
                }
                putln(out, format!("count={}", orbits.len()));
                if !ok {
                    putln(out, "count-check=fail");
                }
            }
            Ok(if ok { 0 } else { 1 })
        }
        BakerCmd::VerifyShift { count } => {
            let mut rng = corpus_rng(VERIFY_SHIFT_STREAM);
            let c0 = bakers_map();
            let mut failures = 0usize;
            for _ in 0..*count {
                let x = random_two_sided(&mut rng);
                if x.shift().to_point() != c0.apply(&x.to_point()) {
                    failures += 1;
                }
            }
            let ok = failures == 0;
            if json {
                putln(
                    out,
                    serde_json::json!({
                        "checked": count,
                        "failures": failures,
                        "pass": ok,
                    })
                    .to_string(),
                );
            } else {
                putln(out, format!("checked={count} failures={failures}"));
                putln(out, format!("verify-shift={}", pass_fail(ok)));
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}
