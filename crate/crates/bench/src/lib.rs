//! Workloads shared by the criterion benches.

use ppl_core::{parse_kb, AtomLimit, PlausibleDescription};

/// Knowledge base for an `n`-lottery: exactly one ticket wins, each ticket
/// usually loses, and any `n - 1` tickets usually contain the winner.
pub fn lottery_text(n: usize) -> String {
    let s: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let mut out = format!("fact: or{{{}}}\n", s.join(", "));
    for i in 0..n {
        for j in i + 1..n {
            out.push_str(&format!("fact: ~and{{{}, {}}}\n", s[i], s[j]));
        }
    }
    for (i, x) in s.iter().enumerate() {
        out.push_str(&format!("rule l{}: {{}} => ~{x}\n", i + 1));
    }
    for skip in 0..n {
        let rest: Vec<&str> = s
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, x)| x.as_str())
            .collect();
        out.push_str(&format!("rule w{}: {{}} => or{{{}}}\n", skip + 1, rest.join(", ")));
    }
    out
}

pub fn lottery(n: usize) -> PlausibleDescription {
    parse_kb(&lottery_text(n))
        .expect("generated text parses")
        .describe(AtomLimit::default())
        .expect("valid description")
}
