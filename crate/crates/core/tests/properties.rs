use std::time::Instant;

use ppl_core::testing::{
    check_classical, check_hierarchy, check_theory_laws, probe_set, random_theory, rng, LawReport, Violation,
};

fn report(name: &str, violations: &[Violation]) {
    for v in violations.iter().take(10) {
        eprintln!("{name}: {}: {}", v.law, v.detail);
    }
    assert!(violations.is_empty(), "{name}: {} violations", violations.len());
}

#[test]
fn hierarchy_on_random_theories() {
    let start = Instant::now();
    let mut rng = rng(0x5eed_0001);
    let mut violations = Vec::new();
    for _ in 0..200 {
        let theory = random_theory(&mut rng);
        let desc = theory.describe();
        violations.extend(check_hierarchy(&desc, &probe_set(&theory.atoms)));
    }
    eprintln!("hierarchy: {:?}", start.elapsed());
    report("hierarchy", &violations);
}

#[test]
fn theorems_on_random_theories() {
    let start = Instant::now();
    let mut rng = rng(0x5eed_0002);
    let mut laws = LawReport::default();
    for _ in 0..200 {
        let theory = random_theory(&mut rng);
        let desc = theory.describe();
        laws.merge(check_theory_laws(&desc, &probe_set(&theory.atoms)));
    }
    eprintln!(
        "theorems: {:?}, trees checked {}, skipped {}",
        start.elapsed(),
        laws.trees_checked,
        laws.trees_skipped
    );
    report("theorems", &laws.violations);
    assert!(laws.trees_skipped * 20 < laws.trees_checked);
}

#[test]
fn classical_core_on_random_clause_sets() {
    let mut rng = rng(0x5eed_0003);
    let violations: Vec<Violation> = (0..500).flat_map(|_| check_classical(&mut rng)).collect();
    report("classical", &violations);
}

#[test]
fn generator_reaches_interesting_theories() {
    use ppl_core::testing::provability;
    use ppl_core::{Alg, Prover, TruthValue};

    let mut rng = rng(0x5eed_0001);
    let (mut with_priority, mut with_facts, mut pi_psi, mut beta_psip, mut ambiguous) = (0, 0, 0, 0, 0);
    for _ in 0..200 {
        let theory = random_theory(&mut rng);
        let desc = theory.describe();
        let probes = probe_set(&theory.atoms);
        let prover = Prover::new(&desc);
        let table = provability(&prover, &probes);
        with_priority += usize::from(!desc.priority().is_empty());
        with_facts += usize::from(!desc.axioms().is_empty());
        pi_psi += usize::from(table[1] != table[2]);
        beta_psip += usize::from(table[4] != table[5]);
        ambiguous += usize::from(
            probes
                .iter()
                .any(|f| prover.truth_value(Alg::PiP, f).unwrap() == TruthValue::Ambiguous),
        );
    }
    eprintln!(
        "priority {with_priority}, facts {with_facts}, pi<psi {pi_psi}, beta<psi-p {beta_psip}, ambiguous {ambiguous}"
    );
    assert!(with_priority > 20 && with_facts > 20);
    assert!(pi_psi > 0 && beta_psip > 0 && ambiguous > 0);
}
