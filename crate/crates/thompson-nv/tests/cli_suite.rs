//! End-to-end checks of the command-line surface: exit codes, output text,
//! JSON mode, and bit-exact re-readability of every emitted file.

use std::path::PathBuf;
use thompson_nv::{run, Outcome};

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("thompson-nv-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn ok(args: &[&str]) -> Outcome {
    let o = run(args);
    assert_eq!(o.code, 0, "{args:?} failed: {}{}", o.stdout, o.stderr);
    o
}

fn path_str(p: &PathBuf) -> &str {
    p.to_str().unwrap()
}

#[test]
fn emitted_element_files_reread_bit_exact() {
    let dir = temp_dir("el-roundtrip");
    let f = dir.join("f.el");
    let g = dir.join("g.el");
    ok(&["word", "eval", "A0 B1 C0'", "-o", path_str(&f)]);
    // Evaluation already reduces, so reducing the emitted file must
    // reproduce it byte for byte.
    ok(&["el", "reduce", path_str(&f), "-o", path_str(&g)]);
    let t1 = std::fs::read_to_string(&f).unwrap();
    let t2 = std::fs::read_to_string(&g).unwrap();
    assert!(t1.starts_with("nV dim=2 k="));
    assert_eq!(t1, t2);
    ok(&["el", "equal", path_str(&f), path_str(&g)]);
}

#[test]
fn group_identities_hold_through_files() {
    let dir = temp_dir("el-group");
    let f = dir.join("f.el");
    let finv = dir.join("finv.el");
    let comp = dir.join("comp.el");
    let id = dir.join("id.el");
    ok(&["word", "eval", "A0 p1 C0'", "-o", path_str(&f)]);
    ok(&["el", "inverse", path_str(&f), "-o", path_str(&finv)]);
    ok(&[
        "el",
        "compose",
        path_str(&f),
        path_str(&finv),
        "-o",
        path_str(&comp),
    ]);
    ok(&["el", "identity", "--dim", "2", "-o", path_str(&id)]);
    ok(&["el", "equal", path_str(&comp), path_str(&id)]);

    let o = run(&["el", "equal", path_str(&f), path_str(&id)]);
    assert_eq!(o.code, 1);
    assert_eq!(o.stdout, "different\n");
}

#[test]
fn apply_moves_a_point_exactly() {
    let dir = temp_dir("el-apply");
    let c0 = dir.join("c0.el");
    ok(&["word", "eval", "C0", "-o", path_str(&c0)]);
    // The brick exchange shifts the leading bit of the first coordinate
    // onto the front of the second.
    let o = ok(&["el", "apply", path_str(&c0), "0(0);(1)"]);
    assert_eq!(o.stdout, "(0);0(1)\n");

    assert_eq!(run(&["el", "apply", path_str(&c0), "(0)"]).code, 2);
    assert_eq!(run(&["el", "apply", path_str(&c0), "not a point"]).code, 2);
}

#[test]
fn word_decompose_round_trips() {
    let dir = temp_dir("word");
    let f = dir.join("f.el");
    ok(&["word", "eval", "A0 p0 C1'", "-o", path_str(&f)]);
    let o = ok(&["word", "decompose", path_str(&f)]);
    assert!(o.stdout.ends_with("round-trip=pass\n"), "{}", o.stdout);

    assert_eq!(run(&["word", "eval", "Z9"]).code, 2);
    let id1 = dir.join("id1.el");
    ok(&["el", "identity", "--dim", "1", "-o", path_str(&id1)]);
    assert_eq!(run(&["word", "decompose", path_str(&id1)]).code, 2);
}

#[test]
fn monoid_verbs_evaluate_rewrite_and_check() {
    let o = ok(&["monoid", "eval", "v0"]);
    assert!(o.stdout.starts_with("[0:"), "{}", o.stdout);
    ok(&["monoid", "multiply", "v0", "h0"]);
    let o = ok(&["monoid", "pq", "s0 v0"]);
    assert!(o.stdout.contains("preserves-evaluation=pass"), "{}", o.stdout);
    let o = ok(&["monoid", "check", "--max-index", "2"]);
    assert!(o.stdout.contains("failed=0"), "{}", o.stdout);
    assert_eq!(run(&["monoid", "eval", "w3"]).code, 2);
}

#[test]
fn relation_verbs_verify_the_identities() {
    let o = ok(&["relations", "baker-comm"]);
    assert_eq!(o.stdout, "baker-comm=pass\n");
    ok(&["relations", "sweep", "--max-index", "1"]);
    ok(&["relations", "family", "3", "--max-index", "2"]);
    assert_eq!(run(&["relations", "family", "25"]).code, 2);
    let o = ok(&["relations", "abelianization"]);
    assert!(o.stdout.ends_with("abelianization=pass\n"), "{}", o.stdout);
    let o = ok(&["relations", "finite-gen", "--max-index", "1"]);
    assert!(o.stdout.contains("failed=0"), "{}", o.stdout);
}

#[test]
fn tree_pair_files_reveal_and_reread_bit_exact() {
    let dir = temp_dir("dyn-files");
    let x0 = dir.join("x0.tp");
    let out1 = dir.join("out1.tp");
    let out2 = dir.join("out2.tp");
    std::fs::write(
        &x0,
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11\n",
    )
    .unwrap();

    ok(&["dyn", "reveal", path_str(&x0), "-o", path_str(&out1)]);
    // A revealed pair admits no further moves, so revealing its own file
    // must reproduce it byte for byte.
    ok(&["dyn", "reveal", path_str(&out1), "-o", path_str(&out2)]);
    let t1 = std::fs::read_to_string(&out1).unwrap();
    let t2 = std::fs::read_to_string(&out2).unwrap();
    assert_eq!(t1, t2);
    ok(&["dyn", "report", path_str(&out1)]);
}

#[test]
fn dynamics_reports_agree_across_orders_and_input_formats() {
    let dir = temp_dir("dyn-orders");
    let x0 = dir.join("x0.tp");
    std::fs::write(
        &x0,
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11\n",
    )
    .unwrap();
    let std_report = ok(&["dyn", "report", path_str(&x0), "--order", "standard"]);
    let alt_report = ok(&["dyn", "report", path_str(&x0), "--order", "alternate"]);
    assert_eq!(std_report.stdout, alt_report.stdout);
    assert!(std_report.stdout.ends_with("max-period=1\n"));

    // One-dimensional element files are accepted as dynamics input too.
    let id1 = dir.join("id1.el");
    ok(&["el", "identity", "--dim", "1", "-o", path_str(&id1)]);
    let o = ok(&["dyn", "report", path_str(&id1)]);
    assert!(o.stdout.contains("max-period=1"), "{}", o.stdout);

    // Two-dimensional elements are rejected: no tree-pair form exists.
    let c0 = dir.join("c0.el");
    ok(&["word", "eval", "C0", "-o", path_str(&c0)]);
    assert_eq!(run(&["dyn", "report", path_str(&c0)]).code, 2);
}

#[test]
fn factor_and_transposition_verify_themselves() {
    let dir = temp_dir("dyn-factor");
    let x0 = dir.join("x0.tp");
    let idp = dir.join("id.tp");
    std::fs::write(
        &x0,
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11\n",
    )
    .unwrap();
    std::fs::write(&idp, "D: 0 1 | R: 0 1 | sigma: 0->0 1->1\n").unwrap();

    let o = ok(&["dyn", "factor", path_str(&x0)]);
    assert!(o.stdout.ends_with("recomposes=pass\n"), "{}", o.stdout);
    let o = ok(&["dyn", "transposition", path_str(&x0)]);
    assert!(o.stdout.ends_with("certificate=pass\n"), "{}", o.stdout);
    assert_eq!(run(&["dyn", "transposition", path_str(&idp)]).code, 2);
}

#[test]
fn baker_orbits_enumerate_and_verify() {
    let o = ok(&["baker", "orbit", "(01)e.e(01)"]);
    assert_eq!(o.stdout, "(01)e.e(01)\n(10)e.e(10)\norbit-size=2\n");

    let o = ok(&["baker", "orbit", "(0)1.e(1)"]);
    assert_eq!(o.stdout, "purely-periodic=false\n");
    assert_eq!(run(&["baker", "orbit", "gibberish"]).code, 2);

    let o = ok(&["baker", "enumerate", "4"]);
    assert!(o.stdout.ends_with("count=3\n"), "{}", o.stdout);
    assert_eq!(run(&["baker", "enumerate", "0"]).code, 2);

    let o = ok(&["baker", "verify-shift", "--count", "25"]);
    assert!(o.stdout.ends_with("verify-shift=pass\n"), "{}", o.stdout);
}

#[test]
fn json_mode_emits_parseable_objects() {
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "relations", "baker-comm"]).stdout).unwrap();
    assert_eq!(v["holds"], true);

    let dir = temp_dir("json");
    let id = dir.join("id.el");
    let c0 = dir.join("c0.el");
    ok(&["el", "identity", "--dim", "2", "-o", path_str(&id)]);
    ok(&["word", "eval", "C0", "-o", path_str(&c0)]);
    let o = run(&["--json", "el", "equal", path_str(&id), path_str(&c0)]);
    assert_eq!(o.code, 1);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["equal"], false);

    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "baker", "enumerate", "3"]).stdout).unwrap();
    assert_eq!(v["count"], 2);
    assert_eq!(v["count_check"], true);

    // The embedded element text is itself re-readable.
    let v: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "word", "eval", "-"]).stdout).unwrap();
    let parsed = nv_elements::read_element(v["element"].as_str().unwrap()).unwrap();
    assert!(parsed.is_identity());
}
