use std::fmt::Write as _;

use ppl_core::{Arrow, PlausibleDescription, Rule};

fn section<'a>(out: &mut String, title: &str, rules: impl Iterator<Item = &'a Rule>) {
    let rules: Vec<&Rule> = rules.collect();
    let _ = writeln!(out, "{title} ({}):", rules.len());
    for r in rules {
        let _ = writeln!(out, "  {r}");
    }
}

/// Human-readable report for `ppl check`.
pub fn summary(desc: &PlausibleDescription) -> String {
    let mut out = String::new();
    let ax = desc.axiom_formulas();
    let _ = writeln!(out, "axioms ({}):", ax.len());
    for f in ax {
        let _ = writeln!(out, "  {f}");
    }
    let of = |arrow: Arrow| desc.rules().iter().filter(move |r| r.arrow == arrow);
    section(&mut out, "strict rules", of(Arrow::Strict));
    section(&mut out, "defeasible rules", of(Arrow::Defeasible));
    section(&mut out, "warning rules", of(Arrow::Warning));
    let prio = desc.priority();
    let _ = writeln!(out, "priority ({} pairs):", prio.len());
    for (sup, inf) in prio.pairs() {
        let _ = writeln!(out, "  {sup} > {inf}");
    }
    let _ = writeln!(out, "total rules: {}", desc.rules().len());
    out
}
