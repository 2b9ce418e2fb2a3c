use proptest::prelude::*;

use ppl_core::testing::{random_theory, rng};
use ppl_core::{parse_formula, parse_kb, Formula};

fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop::sample::select(vec!["a", "b", "c", "and", "or", "x_1"]).prop_map(Formula::atom);
    atom.prop_recursive(4, 24, 4, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::negation),
            prop::collection::vec(inner.clone(), 0..4).prop_map(Formula::conj),
            prop::collection::vec(inner, 0..4).prop_map(Formula::disj),
        ]
    })
}

proptest! {
    #[test]
    fn formula_display_parses_back(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn kb_text_round_trips(seed in any::<u64>()) {
        let theory = random_theory(&mut rng(seed));
        let mut text = String::new();
        for f in &theory.facts {
            text.push_str(&format!("fact: {f}\n"));
        }
        for r in &theory.rules {
            text.push_str(&format!("rule {r}   # comment\n\n"));
        }
        for (s, i) in &theory.priority {
            text.push_str(&format!("prio:{s}>{i}\n"));
        }
        let kb = parse_kb(&text).unwrap();
        prop_assert_eq!(&kb.facts, &theory.facts);
        prop_assert_eq!(&kb.rules, &theory.rules);
        let again = parse_kb(&kb.to_text()).unwrap();
        prop_assert_eq!(&again, &kb);
        prop_assert_eq!(again.to_text(), kb.to_text());
    }
}
