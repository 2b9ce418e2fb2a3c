mod common;

use std::fs;

use serde_json::Value;

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

fn temp_kb(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("ppl-cli-tests-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

#[test]
fn check_three_lottery() {
    let path = common::kb("lottery3.ppl");
    let out = common::ppl(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report = text(&out.stdout);
    assert!(report.contains("axioms (4):"), "{report}");
    assert!(report.contains("strict rules (10):"));
    assert!(report.contains("defeasible rules (6):"));
    assert!(report.contains("  rse: {} -> and{"));
    assert!(report.contains("total rules: 16"));
}

#[test]
fn check_non_monotonic_fact() {
    let path = common::kb("non_monotonic_fact.ppl");
    let out = common::ppl(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).starts_with("axioms (1):\n  ~a\n"));
}

#[test]
fn check_reports_cycle_witness() {
    let path = temp_kb(
        "cycle.ppl",
        "rule x: {} => a\nrule y: {} => b\nprio: x > y\nprio: y > x\n",
    );
    let out = common::ppl(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = text(&out.stderr);
    assert!(err.contains("cycle.ppl:3:7: error[cyclic-priority]"), "{err}");
    assert!(err.contains("x > y > x"), "{err}");
}

#[test]
fn diagnostics_carry_locations() {
    let path = temp_kb("bad.ppl", "rule r9: {} => a\nprio: r9 > rX\nrule r9: {} => b\n");
    let out = common::ppl(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = text(&out.stderr);
    assert!(err.contains("bad.ppl:2:12: error[unknown-rule-id]"), "{err}");
    assert!(err.contains("bad.ppl:3:6: error[duplicate-rule-id]"), "{err}");
}

#[test]
fn query_exit_codes() {
    assert_eq!(common::query("lottery3.ppl", "pi", "~s1", false).status.code(), Some(0));
    assert_eq!(
        common::query("lottery3.ppl", "beta", "and{~s1,~s2}", false)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        common::query("lottery3.ppl", "bogus", "~s1", false).status.code(),
        Some(2)
    );
    assert_eq!(
        common::query("lottery3.ppl", "pi", "or{s1", false).status.code(),
        Some(2)
    );
}

#[test]
fn human_and_json_agree() {
    for (file, g) in [
        ("lottery3.ppl", "or{s1, s2}"),
        ("ambiguity.ppl", "b"),
        ("ambiguity.ppl", "~a"),
    ] {
        let json = common::stdout_json(&common::query(file, "all", g, true));
        let human = text(&common::query(file, "all", g, false).stdout);
        let lines: Vec<&str> = human.lines().skip(2).collect();
        let rows = common::rows(&json);
        assert_eq!(lines.len(), rows.len());
        for (line, (alg, value, truth)) in lines.iter().zip(&rows) {
            let cols: Vec<&str> = line.split_whitespace().collect();
            let shown = if *value > 0 { "+1" } else { "-1" };
            assert_eq!(cols, [alg.as_str(), shown, truth.as_str()]);
        }
    }
}

#[test]
fn all_rows_follow_the_hierarchy() {
    for file in ["lottery3.ppl", "lottery4.ppl", "ambiguity.ppl"] {
        for g in ["s1", "~s1", "or{s1, s2}", "and{~s1, ~s2}", "a", "b", "~b"] {
            let doc = common::stdout_json(&common::query(file, "all", g, true));
            assert!(common::schema_errors(&doc).is_empty());
            let values: Vec<i64> = common::rows(&doc).iter().map(|r| r.1).collect();
            assert!(values.windows(2).all(|w| w[0] <= w[1]), "{file} {g}: {values:?}");
            assert_eq!(values[3], values[4], "beta and beta-p differ on {g}");
        }
    }
}

#[test]
fn tree_root_matches_query() {
    let path = common::kb("ambiguity.ppl");
    for (alg, want) in [("beta", 1), ("pi", -1), ("psi", -1)] {
        let out = common::ppl(&["tree", path.to_str().unwrap(), "--alg", alg, "b", "--format", "json"]);
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc["value"], want, "{alg}");
        assert_eq!(doc["op"], "max");
    }
}

#[test]
fn tree_for_fact_under_phi_is_a_leaf() {
    let path = temp_kb("fact.ppl", "fact: a\n");
    let out = common::ppl(&["tree", path.to_str().unwrap(), "--alg", "phi", "a", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = text(&out.stdout);
    assert_eq!(dot.matches(" [shape=").count(), 1, "{dot}");
    assert!(!dot.contains("->"));
}

#[test]
fn tree_without_rules_is_an_empty_max() {
    let path = temp_kb("empty.ppl", "# nothing here\n");
    let out = common::ppl(&["tree", path.to_str().unwrap(), "--alg", "pi", "a"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["op"], "max");
    assert_eq!(doc["value"], -1);
    assert_eq!(doc["children"].as_array().unwrap().len(), 0);
}

#[test]
fn tree_respects_node_budget() {
    let path = common::kb("lottery3.ppl");
    let out = common::ppl(&["tree", path.to_str().unwrap(), "--alg", "pi", "~s1", "--max-nodes", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("exceeds 5 nodes"));
}
