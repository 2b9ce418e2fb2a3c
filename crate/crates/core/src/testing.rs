//! Seeded random theories, probe sets and law checkers shared by the
//! property suites and the acceptance gate.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithm::{Alg, History, HistoryEntry, ProofValue};
use crate::description::{build_axioms, Arrow, PlausibleDescription, Rule, RuleId, RSE_ID};
use crate::engine::Prover;
use crate::error::ProofError;
use crate::formula::{Atom, Clause, DualClause, Formula, Literal, LiteralSet};
use crate::resolution::{claus, cor_res_clauses, cor_res_sat, err, refutes, resolution_closure, sat_filter, ClauseSet};
use crate::semantics::{entails, equivalent, satisfiable, AtomLimit};
use crate::tree::{evaluation_tree_bounded, EvaluationNode, Goal};
use crate::truth::TruthValue;

const NAMES: [&str; 4] = ["a", "b", "c", "d"];
const LIMIT: AtomLimit = AtomLimit::new(AtomLimit::DEFAULT);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub law: &'static str,
    pub detail: String,
}

impl Violation {
    fn new(law: &'static str, detail: String) -> Self {
        Violation { law, detail }
    }
}

/// Node budget for tree comparisons; larger trees are counted as skipped.
pub const TREE_BUDGET: usize = 20_000;

/// Outcome of the law checks over one or more theories.
#[derive(Debug, Clone, Default)]
pub struct LawReport {
    pub violations: Vec<Violation>,
    pub trees_checked: usize,
    pub trees_skipped: usize,
}

impl LawReport {
    pub fn merge(&mut self, other: LawReport) {
        self.violations.extend(other.violations);
        self.trees_checked += other.trees_checked;
        self.trees_skipped += other.trees_skipped;
    }

    fn tree(&mut self, built: Result<EvaluationNode, ProofError>) -> Option<EvaluationNode> {
        match built {
            Ok(t) => {
                self.trees_checked += 1;
                Some(t)
            }
            Err(ProofError::TreeTooLarge { .. }) => {
                self.trees_skipped += 1;
                None
            }
            Err(e) => panic!("tree construction failed: {e}"),
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_literal(rng: &mut impl Rng, atoms: &[Atom]) -> Literal {
    let a = atoms.choose(rng).expect("atoms").clone();
    if rng.gen_bool(0.5) {
        Literal::neg(a)
    } else {
        Literal::pos(a)
    }
}

/// A literal, or a clause or dual-clause of up to three literals.
pub fn random_formula(rng: &mut impl Rng, atoms: &[Atom]) -> Formula {
    match rng.gen_range(0..4) {
        0 | 1 => random_literal(rng, atoms).to_formula(),
        k => {
            let n = rng.gen_range(1..=3);
            let members = (0..n).map(|_| random_literal(rng, atoms).to_formula());
            if k == 2 {
                Formula::disj(members)
            } else {
                Formula::conj(members)
            }
        }
    }
}

/// Inputs for one random plausible description.
#[derive(Debug, Clone)]
pub struct Theory {
    pub atoms: Vec<Atom>,
    pub facts: Vec<Formula>,
    pub rules: Vec<Rule>,
    pub priority: Vec<(RuleId, RuleId)>,
}

impl Theory {
    pub fn describe(&self) -> PlausibleDescription {
        PlausibleDescription::build(self.facts.clone(), self.rules.clone(), self.priority.clone(), LIMIT)
            .expect("generated theories are valid")
    }
}

/// At most 3 atoms, 0–2 facts, 1–6 defeasible or warning rules and at most 4
/// priority pairs. Pairs follow a random total order, so they are acyclic,
/// and `rse` only ever appears as a superior.
pub fn random_theory(rng: &mut impl Rng) -> Theory {
    let n_atoms = rng.gen_range(1..=3);
    let atoms: Vec<Atom> = NAMES[..n_atoms].iter().map(|n| Atom::new(n)).collect();
    let facts: Vec<Formula> = (0..rng.gen_range(0..=2)).map(|_| random_formula(rng, &atoms)).collect();

    let n_rules = rng.gen_range(1..=6);
    let mut rules = Vec::with_capacity(n_rules);
    for i in 0..n_rules {
        let antecedents: Vec<Formula> = (0..rng.gen_range(0..=2)).map(|_| random_formula(rng, &atoms)).collect();
        let arrow = if rng.gen_bool(0.2) {
            Arrow::Warning
        } else {
            Arrow::Defeasible
        };
        rules.push(Rule::new(
            &format!("r{}", i + 1),
            antecedents,
            arrow,
            random_formula(rng, &atoms),
        ));
    }

    let mut order: Vec<RuleId> = rules.iter().map(|r| r.id.clone()).collect();
    order.shuffle(rng);
    let has_rse = !build_axioms(&facts, LIMIT).expect("small").is_empty();
    if has_rse && rng.gen_bool(0.3) {
        order.insert(0, RuleId::new(RSE_ID));
    }
    let mut candidates = Vec::new();
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            candidates.push((order[i].clone(), order[j].clone()));
        }
    }
    candidates.shuffle(rng);
    let n_pairs = rng.gen_range(0..=4.min(candidates.len()));
    let priority = candidates.into_iter().take(n_pairs).collect();

    Theory {
        atoms,
        facts,
        rules,
        priority,
    }
}

/// Every literal, and every 2-literal clause and dual-clause over distinct atoms.
pub fn probe_set(atoms: &[Atom]) -> Vec<Formula> {
    let lits: Vec<Literal> = atoms
        .iter()
        .flat_map(|a| [Literal::pos(a.clone()), Literal::neg(a.clone())])
        .collect();
    let mut out: Vec<Formula> = lits.iter().map(Literal::to_formula).collect();
    for (i, x) in lits.iter().enumerate() {
        for y in &lits[i + 1..] {
            if x.atom != y.atom {
                out.push(Clause::new([x.clone(), y.clone()]).to_formula());
                out.push(DualClause::new([x.clone(), y.clone()]).to_formula());
            }
        }
    }
    out
}

fn description_of(desc: &PlausibleDescription) -> String {
    let mut s = String::new();
    for f in desc.facts() {
        s.push_str(&format!("fact: {f}; "));
    }
    for r in desc.rules().iter().filter(|r| r.arrow != Arrow::Strict) {
        s.push_str(&format!("rule {r}; "));
    }
    for (a, b) in desc.priority().pairs() {
        s.push_str(&format!("prio: {a} > {b}; "));
    }
    s
}

/// Provability table: `table[i][j]` is whether `Alg::ALL[i]` proves `probes[j]`.
pub fn provability(prover: &Prover<'_>, probes: &[Formula]) -> Vec<Vec<bool>> {
    Alg::ALL
        .iter()
        .map(|&alg| {
            probes
                .iter()
                .map(|f| prover.provable(alg, f).expect("within atom limit"))
                .collect()
        })
        .collect()
}

/// The hierarchy chain, plus `π = ψ` and `ψ′ = π′` when the priority relation is empty.
pub fn check_hierarchy(desc: &PlausibleDescription, probes: &[Formula]) -> Vec<Violation> {
    let prover = Prover::new(desc);
    let table = provability(&prover, probes);
    let mut out = Vec::new();
    let ctx = description_of(desc);
    for (j, f) in probes.iter().enumerate() {
        for w in 0..Alg::ALL.len() - 1 {
            let (lo, hi) = (Alg::ALL[w], Alg::ALL[w + 1]);
            if table[w][j] && !table[w + 1][j] {
                out.push(Violation::new(
                    "hierarchy",
                    format!("{lo} proves {f} but {hi} does not [{ctx}]"),
                ));
            }
        }
        // beta = beta-p
        if table[3][j] != table[4][j] {
            out.push(Violation::new(
                "hierarchy",
                format!("beta and beta-p disagree on {f} [{ctx}]"),
            ));
        }
        if desc.priority().is_empty() {
            if table[1][j] != table[2][j] {
                out.push(Violation::new(
                    "hierarchy-empty-priority",
                    format!("pi and psi disagree on {f} [{ctx}]"),
                ));
            }
            if table[5][j] != table[6][j] {
                out.push(Violation::new(
                    "hierarchy-empty-priority",
                    format!("psi-p and pi-p disagree on {f} [{ctx}]"),
                ));
            }
        }
    }
    out
}

const CONSISTENT_ALGS: [Alg; 5] = [Alg::Phi, Alg::Pi, Alg::Psi, Alg::Beta, Alg::BetaP];

/// Consistency parts 1 and 2, and part 3 where its hypothesis holds.
pub fn check_consistency(desc: &PlausibleDescription, probes: &[Formula]) -> Vec<Violation> {
    let prover = Prover::new(desc);
    let ax = desc.axiom_formulas();
    let ctx = description_of(desc);
    let mut out = Vec::new();
    for alg in CONSISTENT_ALGS {
        let proved: Vec<&Formula> = probes.iter().filter(|f| prover.provable(alg, f).unwrap()).collect();
        for (i, f) in proved.iter().enumerate() {
            for g in &proved[i..] {
                if !satisfiable(ax.iter().chain([*f, *g]), desc.limit()).unwrap() {
                    out.push(Violation::new(
                        "consistency-1",
                        format!("{alg} proves {f} and {g} but Ax with both is unsatisfiable [{ctx}]"),
                    ));
                }
            }
        }
    }
    for f in probes {
        let nf = f.negated();
        if prover.provable(Alg::Psi, f).unwrap() && prover.provable(Alg::PsiP, &nf).unwrap() {
            out.push(Violation::new(
                "consistency-2",
                format!("psi proves {f} and psi-p proves {nf} [{ctx}]"),
            ));
        }
        if prover.provable(Alg::Pi, f).unwrap()
            && prover.provable(Alg::PiP, &nf).unwrap()
            && part3_hypothesis(&prover, f)
        {
            out.push(Violation::new(
                "consistency-3",
                format!("pi proves {f} and pi-p proves {nf} [{ctx}]"),
            ));
        }
    }
    out
}

/// Whenever `s ∈ R^s_d[~f]` and `(π′, (π′:s))` proves `A(s)`, `R^s_d[f;s]` is empty.
pub fn part3_hypothesis(prover: &Prover<'_>, f: &Formula) -> bool {
    let desc = prover.description();
    let index = prover.index();
    index
        .strict_defeasible_supporters(&f.negated())
        .unwrap()
        .iter()
        .all(|&s| {
            let rule = desc.rule(s);
            let h = History::from_entries([HistoryEntry {
                alg: Alg::PiP,
                rule: rule.id.clone(),
            }]);
            let proved = prover.prove_set(Alg::PiP, &h, &rule.antecedents).unwrap().is_plus();
            !proved || index.superior_supporters(f, s).unwrap().is_empty()
        })
}

/// Plausible Conjunction and Strong Right Weakening, with the empty history.
pub fn check_weakening_and_conjunction(desc: &PlausibleDescription, probes: &[Formula]) -> Vec<Violation> {
    let prover = Prover::new(desc);
    let ax = desc.axiom_formulas();
    let limit = desc.limit();
    let ctx = description_of(desc);
    let mut certain: Vec<Formula> = vec![Formula::verum()];
    certain.extend(ax.iter().cloned());
    certain.extend(probes.iter().filter(|f| desc.axioms_entail(f).unwrap()).cloned());

    let mut out = Vec::new();
    for alg in Alg::ALL {
        let proved: Vec<&Formula> = probes.iter().filter(|f| prover.provable(alg, f).unwrap()).collect();
        for g in &proved {
            for f in &certain {
                let both = Formula::conj([f.clone(), (*g).clone()]);
                if !prover.provable(alg, &both).unwrap() {
                    out.push(Violation::new(
                        "plausible-conjunction",
                        format!("{alg} proves {g} and Ax entails {f} but not {both} [{ctx}]"),
                    ));
                }
            }
            for h in probes {
                if entails(ax.iter().chain([*g]), h, limit).unwrap() && !prover.provable(alg, h).unwrap() {
                    out.push(Violation::new(
                        "strong-right-weakening",
                        format!("{alg} proves {g}, Ax with {g} entails {h}, but {h} is not proved [{ctx}]"),
                    ));
                }
            }
        }
    }
    out
}

/// Tree root equals `P`, trees obey the value rules, and a shared session agrees with fresh ones.
pub fn check_notational_equivalence(desc: &PlausibleDescription, probes: &[Formula]) -> LawReport {
    let shared = Prover::new(desc);
    let ctx = description_of(desc);
    let empty = History::new();
    let mut report = LawReport::default();
    for alg in Alg::ALL {
        for f in probes {
            let p = shared.prove(alg, &empty, f).unwrap();
            let fresh = Prover::new(desc).prove(alg, &empty, f).unwrap();
            if p != fresh {
                report.violations.push(Violation::new(
                    "cache",
                    format!("{alg} on {f}: shared {p}, fresh {fresh} [{ctx}]"),
                ));
            }
            let built = evaluation_tree_bounded(desc, alg, &empty, &Goal::Formula(f.clone()), TREE_BUDGET);
            if let Some(tree) = report.tree(built) {
                if tree.value != p {
                    report.violations.push(Violation::new(
                        "notational-equivalence",
                        format!("{alg} on {f}: tree {} but P {p} [{ctx}]", tree.value),
                    ));
                }
                if !tree.values_consistent() {
                    report.violations.push(Violation::new(
                        "decisiveness",
                        format!("{alg} on {f}: inconsistent tree values [{ctx}]"),
                    ));
                }
            }
        }
        for pair in probes.windows(2) {
            let p = shared.prove_set(alg, &empty, pair).unwrap();
            let built = evaluation_tree_bounded(desc, alg, &empty, &Goal::Set(pair.to_vec()), TREE_BUDGET);
            if let Some(tree) = report.tree(built) {
                if tree.value != p {
                    report.violations.push(Violation::new(
                        "notational-equivalence",
                        format!(
                            "{alg} on set {{{}, {}}}: tree {} but P {p} [{ctx}]",
                            pair[0], pair[1], tree.value
                        ),
                    ));
                }
            }
        }
    }
    report
}

/// Decisiveness from non-empty histories: every valid one-entry history
/// evaluates without error to a single value, matching its tree.
pub fn check_decisiveness(desc: &PlausibleDescription, probes: &[Formula]) -> LawReport {
    let prover = Prover::new(desc);
    let ctx = description_of(desc);
    let mut report = LawReport::default();
    for alg in Alg::ALL {
        for r in desc.rules().iter().take(4) {
            let h = History::from_entries([HistoryEntry {
                alg: alg.co(),
                rule: r.id.clone(),
            }]);
            for f in probes.iter().take(4) {
                let p = match prover.prove(alg, &h, f) {
                    Ok(p) => p,
                    Err(e) => {
                        report
                            .violations
                            .push(Violation::new("decisiveness", format!("{alg} {h} {f}: {e} [{ctx}]")));
                        continue;
                    }
                };
                let built = evaluation_tree_bounded(desc, alg, &h, &Goal::Formula(f.clone()), TREE_BUDGET);
                if let Some(t) = report.tree(built) {
                    if t.value != p {
                        report.violations.push(Violation::new(
                            "decisiveness",
                            format!("{alg} {h} {f}: P {p} but tree {} [{ctx}]", t.value),
                        ));
                    }
                }
            }
        }
    }
    report
}

/// The truth-value laws, including soundness and completeness.
pub fn check_truth_values(desc: &PlausibleDescription, probes: &[Formula]) -> Vec<Violation> {
    let prover = Prover::new(desc);
    let ctx = description_of(desc);
    let v = |alg: Alg, f: &Formula| prover.truth_value(alg, f).unwrap();
    let mut out = Vec::new();
    let mut fail = |law: &'static str, msg: String| out.push(Violation::new(law, format!("{msg} [{ctx}]")));
    use TruthValue::*;
    for alg in Alg::ALL {
        for f in probes {
            let vf = v(alg, f);
            let vn = v(alg, &f.negated());
            if v(alg, &f.negated().negated()) != vf {
                fail("truth-double-negation", format!("{alg} {f}"));
            }
            let paired = matches!(
                (vf, vn),
                (True, False) | (False, True) | (Ambiguous, Ambiguous) | (Undetermined, Undetermined)
            );
            if !paired {
                fail("truth-negation", format!("{alg} V({f}) = {vf}, V(~{f}) = {vn}"));
            }
            if vf == Ambiguous && !matches!(alg, Alg::PsiP | Alg::PiP) {
                fail("truth-ambiguity", format!("{alg} V({f}) = a"));
            }
            let proved = prover.provable(alg, f).unwrap();
            if vf == True && !proved {
                fail("truth-completeness", format!("{alg} V({f}) = t without proof"));
            }
            if CONSISTENT_ALGS.contains(&alg) && proved && vf != True {
                fail("truth-soundness", format!("{alg} proves {f} but V = {vf}"));
            }
        }
        for (i, f) in probes.iter().enumerate() {
            for g in &probes[i + 1..] {
                let fs = [f.clone(), g.clone()];
                if v(alg, &Formula::conj(fs.clone())) == True && (v(alg, f) != True || v(alg, g) != True) {
                    fail(
                        "truth-conjunction",
                        format!("{alg} and{{{f}, {g}}} is t but a conjunct is not"),
                    );
                }
                if (v(alg, f) == True || v(alg, g) == True) && v(alg, &Formula::disj(fs)) != True {
                    fail(
                        "truth-disjunction",
                        format!("{alg} a disjunct of or{{{f}, {g}}} is t but it is not"),
                    );
                }
            }
        }
    }
    out
}

/// Every proof-theoretic law over one theory.
pub fn check_theory_laws(desc: &PlausibleDescription, probes: &[Formula]) -> LawReport {
    let mut report = LawReport {
        violations: check_consistency(desc, probes),
        ..LawReport::default()
    };
    report.violations.extend(check_weakening_and_conjunction(desc, probes));
    report.violations.extend(check_truth_values(desc, probes));
    report.merge(check_decisiveness(desc, probes));
    report.merge(check_notational_equivalence(desc, probes));
    report
}

/// A random set of up to six clauses over at most four atoms; clauses may be
/// empty or tautologous.
pub fn random_clause_set(rng: &mut impl Rng) -> (Vec<Atom>, ClauseSet) {
    let atoms: Vec<Atom> = NAMES[..rng.gen_range(1..=4)].iter().map(|n| Atom::new(n)).collect();
    let mut set = ClauseSet::new();
    for _ in 0..rng.gen_range(0..=6) {
        let width = if rng.gen_bool(0.05) { 0 } else { rng.gen_range(1..=3) };
        set.insert(Clause::new((0..width).map(|_| random_literal(rng, &atoms))));
    }
    (atoms, set)
}

fn random_literal_set(rng: &mut impl Rng, atoms: &[Atom]) -> BTreeSet<Literal> {
    (0..rng.gen_range(0..=3)).map(|_| random_literal(rng, atoms)).collect()
}

fn formulas_of(c: &ClauseSet) -> Vec<Formula> {
    c.iter().map(LiteralSet::to_formula).collect()
}

/// Error-literal closure, `Sat` laws, refutation completeness, `and Claus(f) ≡ f`
/// and the clause-implication lemma for one random instance.
pub fn check_classical(rng: &mut impl Rng) -> Vec<Violation> {
    let (atoms, c) = random_clause_set(rng);
    let shown = formulas_of(&c)
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let mut out = Vec::new();

    let e = err(&c);
    if e.iter().any(|l| !e.contains(&l.complement())) {
        out.push(Violation::new(
            "err-closure",
            format!("Err not closed under complement for {{{shown}}}"),
        ));
    }
    let s = sat_filter(&c);
    if !s.is_subset(&c) {
        out.push(Violation::new(
            "sat-subset",
            format!("Sat not a subset for {{{shown}}}"),
        ));
    }
    if cor_res_sat(&c) != cor_res_clauses(&s) {
        out.push(Violation::new(
            "cor-res-sat",
            format!("closure reuse changes CorRes(Sat) for {{{shown}}}"),
        ));
    }
    if sat_filter(&s) != s {
        out.push(Violation::new(
            "sat-idempotent",
            format!("Sat not idempotent for {{{shown}}}"),
        ));
    }
    if !satisfiable(formulas_of(&s).iter(), LIMIT).unwrap() || refutes(&s) {
        out.push(Violation::new(
            "sat-satisfiable",
            format!("Sat unsatisfiable for {{{shown}}}"),
        ));
    }
    let sat = satisfiable(formulas_of(&c).iter(), LIMIT).unwrap();
    if sat == resolution_closure(&c).contains(&Clause::empty()) {
        out.push(Violation::new(
            "resolution-completeness",
            format!("resolution disagrees with valuations on {{{shown}}}"),
        ));
    }

    let f = random_formula(rng, &atoms);
    let f = if rng.gen_bool(0.5) { Formula::negation(f) } else { f };
    let cl = Formula::conj(formulas_of(&claus(&f, LIMIT).unwrap()));
    if !equivalent(&cl, &f, LIMIT).unwrap() {
        out.push(Violation::new(
            "claus-equivalence",
            format!("and Claus({f}) is not equivalent to {f}"),
        ));
    }

    let l = random_literal_set(rng, &atoms);
    let m = random_literal_set(rng, &atoms);
    let (ol, om) = (Clause(l.clone()).to_formula(), Clause(m.clone()).to_formula());
    let lhs = entails([&ol], &om, LIMIT).unwrap();
    let taut = satisfiable([&om.negated()], LIMIT).map(|s| !s).unwrap();
    if lhs != (l.is_subset(&m) || taut) {
        out.push(Violation::new(
            "clause-implication",
            format!("{ol} entails {om}: {lhs}"),
        ));
    }
    let (al, am) = (DualClause(l.clone()).to_formula(), DualClause(m.clone()).to_formula());
    let lhs = entails([&am], &al, LIMIT).unwrap();
    let contra = !satisfiable([&am], LIMIT).unwrap();
    if lhs != (l.is_subset(&m) || contra) {
        out.push(Violation::new(
            "dual-clause-implication",
            format!("{am} entails {al}: {lhs}"),
        ));
    }
    out
}

/// Proof value of the formula under every algorithm, in hierarchy order.
pub fn profile(prover: &Prover<'_>, f: &Formula) -> Vec<ProofValue> {
    Alg::ALL
        .iter()
        .map(|&alg| prover.prove(alg, &History::new(), f).unwrap())
        .collect()
}
