//! Rules, priority relations and plausible descriptions.
//!
//! Facts never appear as rules directly. They are distilled into the axiom set
//! `Ax = CorRes(Sat(Claus(facts)))`, and the strict rules are derived from `Ax`
//! by [`build_strict_rules`]. Users only supply defeasible and warning rules
//! plus priority pairs.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::{AtomLimitExceeded, DescriptionError};
use crate::formula::{complement_set, simplify, Clause, DualClause, Formula, Literal, LiteralSet};
use crate::resolution::{claus_all, cor_res_sat, ClauseSet};
use crate::semantics::{entails, satisfiable, AtomLimit};

/// Identifier of the strict rule `{} -> and Ax`.
pub const RSE_ID: &str = "rse";

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RuleId(Arc<str>);

impl RuleId {
    pub fn new(id: &str) -> Self {
        RuleId(Arc::from(id))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn rse() -> Self {
        RuleId::new(RSE_ID)
    }

    /// Deterministic id of the derived strict rule with the given antecedents.
    pub fn for_strict(antecedents: &BTreeSet<Formula>) -> Self {
        if antecedents.is_empty() {
            return RuleId::rse();
        }
        let inner: Vec<String> = antecedents.iter().map(|f| f.to_string()).collect();
        RuleId::new(&format!("s[{}]", inner.join(", ")))
    }

    /// Ids users may not claim.
    pub fn is_reserved(&self) -> bool {
        self.as_str() == RSE_ID || self.as_str().starts_with("s[")
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for RuleId {
    fn from(s: &str) -> Self {
        RuleId::new(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arrow {
    Strict,
    Defeasible,
    Warning,
}

impl Arrow {
    pub fn symbol(self) -> &'static str {
        match self {
            Arrow::Strict => "->",
            Arrow::Defeasible => "=>",
            Arrow::Warning => "~>",
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub id: RuleId,
    pub antecedents: BTreeSet<Formula>,
    pub arrow: Arrow,
    pub consequent: Formula,
}

impl Rule {
    pub fn new<I>(id: &str, antecedents: I, arrow: Arrow, consequent: Formula) -> Self
    where
        I: IntoIterator<Item = Formula>,
    {
        Rule {
            id: RuleId::new(id),
            antecedents: antecedents.into_iter().collect(),
            arrow,
            consequent,
        }
    }

    pub fn defeasible<I: IntoIterator<Item = Formula>>(id: &str, antecedents: I, consequent: Formula) -> Self {
        Rule::new(id, antecedents, Arrow::Defeasible, consequent)
    }

    pub fn warning<I: IntoIterator<Item = Formula>>(id: &str, antecedents: I, consequent: Formula) -> Self {
        Rule::new(id, antecedents, Arrow::Warning, consequent)
    }

    fn strict(antecedents: BTreeSet<Formula>, consequent: Formula) -> Self {
        Rule {
            id: RuleId::for_strict(&antecedents),
            antecedents,
            arrow: Arrow::Strict,
            consequent,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {{", self.id)?;
        for (i, a) in self.antecedents.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}} {} {}", self.arrow.symbol(), self.consequent)
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Explicit `superior > inferior` pairs. Not closed under transitivity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PriorityRelation {
    pairs: BTreeSet<(RuleId, RuleId)>,
}

impl PriorityRelation {
    pub fn new<I: IntoIterator<Item = (RuleId, RuleId)>>(pairs: I) -> Self {
        PriorityRelation {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(RuleId, RuleId)> {
        self.pairs.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn contains(&self, superior: &RuleId, inferior: &RuleId) -> bool {
        self.pairs.contains(&(superior.clone(), inferior.clone()))
    }

    /// A cycle `r1 > r2 > ... > rn > r1`, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<RuleId>> {
        let mut succ: BTreeMap<&RuleId, Vec<&RuleId>> = BTreeMap::new();
        for (sup, inf) in &self.pairs {
            succ.entry(sup).or_default().push(inf);
        }
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        let mut marks: HashMap<&RuleId, Mark> = HashMap::new();
        for start in succ.keys().copied() {
            if marks.contains_key(start) {
                continue;
            }
            // iterative DFS keeping the current path for the witness
            let mut path: Vec<(&RuleId, usize)> = vec![(start, 0)];
            marks.insert(start, Mark::Open);
            while let Some((node, next)) = path.last_mut() {
                let children = succ.get(*node).map(Vec::as_slice).unwrap_or(&[]);
                if let Some(&child) = children.get(*next) {
                    *next += 1;
                    match marks.get(child) {
                        Some(Mark::Open) => {
                            let from = path.iter().position(|(n, _)| *n == child).expect("open node on path");
                            return Some(path[from..].iter().map(|(n, _)| (*n).clone()).collect());
                        }
                        Some(Mark::Done) => {}
                        None => {
                            marks.insert(child, Mark::Open);
                            path.push((child, 0));
                        }
                    }
                } else {
                    marks.insert(*node, Mark::Done);
                    path.pop();
                }
            }
        }
        None
    }
}

/// `Ax = CorRes(Sat(Claus(facts)))`, as literal sets.
pub fn build_axioms(facts: &[Formula], limit: AtomLimit) -> Result<ClauseSet, AtomLimitExceeded> {
    Ok(cor_res_sat(&claus_all(facts, limit)?))
}

/// `Rul(c)` for a contingent clause: `{} -> c` together with
/// `{smp(and ~(L-K))} -> smp(or K)` for every `{} ⊂ K ⊂ L`.
pub fn rul(c: &Clause) -> Result<Vec<Rule>, DescriptionError> {
    if !c.is_contingent() {
        return Err(DescriptionError::NonContingentClause { clause: c.to_string() });
    }
    let lits: Vec<&Literal> = c.0.iter().collect();
    let n = lits.len();
    let mut out = vec![Rule::strict(BTreeSet::new(), c.simplified())];
    for mask in 1..(1u64 << n) - 1 {
        let mut kept = BTreeSet::new();
        let mut rest = BTreeSet::new();
        for (i, l) in lits.iter().enumerate() {
            if mask >> i & 1 == 1 {
                kept.insert((*l).clone());
            } else {
                rest.insert((*l).clone());
            }
        }
        let antecedent = simplify(&DualClause(complement_set(&rest)).to_formula());
        let consequent = simplify(&Clause(kept).to_formula());
        out.push(Rule::strict(BTreeSet::from([antecedent]), consequent));
    }
    Ok(out)
}

/// `R_s`: the rules of `Rul(Ax)` grouped by antecedent set, consequents conjoined
/// and simplified. The group with no antecedents is `rse`.
pub fn build_strict_rules(axioms: &ClauseSet) -> Result<Vec<Rule>, DescriptionError> {
    let mut groups: BTreeMap<BTreeSet<Formula>, BTreeSet<Formula>> = BTreeMap::new();
    for c in axioms {
        for r in rul(c)? {
            groups.entry(r.antecedents).or_default().insert(r.consequent);
        }
    }
    Ok(groups
        .into_iter()
        .map(|(ante, cons)| Rule::strict(ante, simplify(&Formula::Conj(cons))))
        .collect())
}

/// A validated plausible description `(R, >)` with its axioms.
///
/// Rules are held in canonical order: derived strict rules first (`rse`
/// leading), then user rules in declaration order. Every iteration over rule
/// sets follows this order.
#[derive(Debug, Clone)]
pub struct PlausibleDescription {
    facts: Vec<Formula>,
    axioms: ClauseSet,
    axiom_formulas: Vec<Formula>,
    rules: Vec<Rule>,
    by_id: HashMap<RuleId, usize>,
    priority: PriorityRelation,
    superior: Vec<Vec<usize>>,
    rse: Option<usize>,
    strict_defeasible: Vec<usize>,
    consistent_with_axioms: Vec<bool>,
    limit: AtomLimit,
}

impl PlausibleDescription {
    /// Checks the user's input and derives `Ax` and `R_s`.
    pub fn build(
        facts: Vec<Formula>,
        user_rules: Vec<Rule>,
        priority: Vec<(RuleId, RuleId)>,
        limit: AtomLimit,
    ) -> Result<Self, DescriptionError> {
        let mut seen = BTreeSet::new();
        for r in &user_rules {
            if r.arrow == Arrow::Strict {
                return Err(DescriptionError::StrictRuleSupplied { id: r.id.clone() });
            }
            if r.id.is_reserved() {
                return Err(DescriptionError::ReservedRuleId { id: r.id.clone() });
            }
            if !seen.insert(r.id.clone()) {
                return Err(DescriptionError::DuplicateRuleId { id: r.id.clone() });
            }
        }

        let axioms = build_axioms(&facts, limit)?;
        let mut rules = build_strict_rules(&axioms)?;
        rules.extend(user_rules);
        let by_id: HashMap<RuleId, usize> = rules.iter().enumerate().map(|(i, r)| (r.id.clone(), i)).collect();
        let rse = by_id.get(&RuleId::rse()).copied();

        for (sup, inf) in &priority {
            for id in [sup, inf] {
                if !by_id.contains_key(id) {
                    return Err(DescriptionError::UnknownRuleId { id: id.clone() });
                }
            }
            if inf.as_str() == RSE_ID {
                return Err(DescriptionError::PriorityOverRse { superior: sup.clone() });
            }
        }
        let priority = PriorityRelation::new(priority);
        if let Some(cycle) = priority.find_cycle() {
            return Err(DescriptionError::CyclicPriority { cycle });
        }

        let mut superior = vec![Vec::new(); rules.len()];
        for (sup, inf) in priority.pairs() {
            superior[by_id[inf]].push(by_id[sup]);
        }
        let strict_defeasible = rules
            .iter()
            .enumerate()
            .filter(|(i, r)| Some(*i) != rse && r.arrow != Arrow::Warning)
            .map(|(i, _)| i)
            .collect();
        let axiom_formulas: Vec<Formula> = axioms.iter().map(LiteralSet::simplified).collect();
        let mut consistent_with_axioms = Vec::with_capacity(rules.len());
        for r in &rules {
            consistent_with_axioms.push(satisfiable(axiom_formulas.iter().chain([&r.consequent]), limit)?);
        }

        Ok(PlausibleDescription {
            facts,
            axioms,
            axiom_formulas,
            rules,
            by_id,
            priority,
            superior,
            rse,
            strict_defeasible,
            consistent_with_axioms,
            limit,
        })
    }

    pub fn facts(&self) -> &[Formula] {
        &self.facts
    }

    /// `Ax` as literal sets.
    pub fn axioms(&self) -> &ClauseSet {
        &self.axioms
    }

    /// `Ax` in simplified form: unit clauses appear as literals.
    pub fn axiom_formulas(&self) -> &[Formula] {
        &self.axiom_formulas
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn rule(&self, idx: usize) -> &Rule {
        &self.rules[idx]
    }

    pub fn index_of(&self, id: &RuleId) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn rule_by_id(&self, id: &RuleId) -> Option<&Rule> {
        self.index_of(id).map(|i| &self.rules[i])
    }

    pub fn priority(&self) -> &PriorityRelation {
        &self.priority
    }

    pub fn limit(&self) -> AtomLimit {
        self.limit
    }

    pub fn rse(&self) -> Option<usize> {
        self.rse
    }

    pub fn strict_rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().filter(|r| r.arrow == Arrow::Strict)
    }

    /// Indices of `R^s_d = (R_s ∪ R_d) - {rse}`.
    pub fn strict_defeasible(&self) -> &[usize] {
        &self.strict_defeasible
    }

    pub fn all_indices(&self) -> std::ops::Range<usize> {
        0..self.rules.len()
    }

    /// `superior > inferior`, by index.
    pub fn is_superior(&self, superior: usize, inferior: usize) -> bool {
        self.superior[inferior].contains(&superior)
    }

    pub fn ids(&self, idxs: &[usize]) -> Vec<RuleId> {
        idxs.iter().map(|&i| self.rules[i].id.clone()).collect()
    }

    /// `Ax ⊨ f`.
    pub fn axioms_entail(&self, f: &Formula) -> Result<bool, AtomLimitExceeded> {
        entails(&self.axiom_formulas, f, self.limit)
    }

    /// Whether `r ∈ R[f]`: `Ax ∪ {c(r)}` is satisfiable and entails `f`.
    pub fn supports(&self, rule: usize, f: &Formula) -> Result<bool, AtomLimitExceeded> {
        if !self.consistent_with_axioms[rule] {
            return Ok(false);
        }
        entails(
            self.axiom_formulas.iter().chain([&self.rules[rule].consequent]),
            f,
            self.limit,
        )
    }

    /// `R'[f]` for the subset `R'` given as indices; canonical order is kept.
    pub fn supporters<I>(&self, subset: I, f: &Formula) -> Result<Vec<usize>, AtomLimitExceeded>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut out = Vec::new();
        for r in subset {
            if self.supports(r, f)? {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// `R'[f;s]`: supporters of `f` in `R'` that are superior to `s`.
    pub fn superior_supporters<I>(&self, subset: I, f: &Formula, s: usize) -> Result<Vec<usize>, AtomLimitExceeded>
    where
        I: IntoIterator<Item = usize>,
    {
        let sup = subset.into_iter().filter(|&t| self.is_superior(t, s));
        self.supporters(sup, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Atom;

    fn lit(s: &str) -> Literal {
        match s.strip_prefix('~') {
            Some(n) => Literal::neg(Atom::new(n)),
            None => Literal::pos(Atom::new(s)),
        }
    }

    fn f(s: &str) -> Formula {
        lit(s).to_formula()
    }

    fn cl(ls: &[&str]) -> Clause {
        Clause::new(ls.iter().map(|s| lit(s)))
    }

    fn lim() -> AtomLimit {
        AtomLimit::default()
    }

    fn pairs(rules: &[Rule]) -> BTreeSet<(BTreeSet<Formula>, Formula)> {
        rules
            .iter()
            .map(|r| (r.antecedents.clone(), r.consequent.clone()))
            .collect()
    }

    #[test]
    fn rul_of_three_literal_clause() {
        let rules = rul(&cl(&["a", "b", "c"])).unwrap();
        assert_eq!(rules.len(), 7);
        let and = |x: &str, y: &str| Formula::conj([f(x), f(y)]);
        let or = |x: &str, y: &str| Formula::disj([f(x), f(y)]);
        let expected = BTreeSet::from([
            (BTreeSet::new(), Formula::disj([f("a"), f("b"), f("c")])),
            (BTreeSet::from([and("~b", "~c")]), f("a")),
            (BTreeSet::from([and("~a", "~c")]), f("b")),
            (BTreeSet::from([and("~a", "~b")]), f("c")),
            (BTreeSet::from([f("~a")]), or("b", "c")),
            (BTreeSet::from([f("~b")]), or("a", "c")),
            (BTreeSet::from([f("~c")]), or("a", "b")),
        ]);
        assert_eq!(pairs(&rules), expected);
    }

    #[test]
    fn rul_small_cases() {
        assert_eq!(
            pairs(&rul(&cl(&["a"])).unwrap()),
            BTreeSet::from([(BTreeSet::new(), f("a"))])
        );
        let expected = BTreeSet::from([
            (BTreeSet::new(), Formula::disj([f("a"), f("b")])),
            (BTreeSet::from([f("~a")]), f("b")),
            (BTreeSet::from([f("~b")]), f("a")),
        ]);
        assert_eq!(pairs(&rul(&cl(&["a", "b"])).unwrap()), expected);
        assert!(rul(&cl(&["a", "~a"])).is_err());
        assert!(rul(&Clause::empty()).is_err());
    }

    #[test]
    fn axioms_examples() {
        assert!(build_axioms(&[], lim()).unwrap().is_empty());
        let ax = build_axioms(&[f("a"), f("~a"), f("b")], lim()).unwrap();
        assert_eq!(ax, ClauseSet::from([cl(&["b"])]));
    }

    #[test]
    fn strict_rules_examples() {
        assert!(build_strict_rules(&ClauseSet::new()).unwrap().is_empty());
        let rs = build_strict_rules(&ClauseSet::from([cl(&["a"])])).unwrap();
        assert_eq!(pairs(&rs), BTreeSet::from([(BTreeSet::new(), f("a"))]));
        assert_eq!(rs[0].id, RuleId::rse());
    }

    #[test]
    fn strict_ids_are_derived_from_antecedents() {
        let ante = BTreeSet::from([Formula::conj([f("~b"), f("~c")])]);
        assert_eq!(RuleId::for_strict(&ante).as_str(), "s[and{~b, ~c}]");
        assert!(RuleId::for_strict(&ante).is_reserved());
    }

    #[test]
    fn cycle_detection() {
        let p = PriorityRelation::new([("x".into(), "y".into()), ("y".into(), "x".into())]);
        let cyc = p.find_cycle().unwrap();
        assert_eq!(cyc.len(), 2);
        let p = PriorityRelation::new([("x".into(), "x".into())]);
        assert_eq!(p.find_cycle().unwrap(), vec![RuleId::new("x")]);
        let p = PriorityRelation::new([
            ("x".into(), "y".into()),
            ("y".into(), "z".into()),
            ("x".into(), "z".into()),
        ]);
        assert!(p.find_cycle().is_none());
    }

    #[test]
    fn validation_failures() {
        let rules = vec![Rule::defeasible("x", [], f("a")), Rule::defeasible("y", [], f("~a"))];
        let err = PlausibleDescription::build(
            vec![],
            rules.clone(),
            vec![("x".into(), "y".into()), ("y".into(), "x".into())],
            lim(),
        )
        .unwrap_err();
        assert!(matches!(err, DescriptionError::CyclicPriority { .. }));

        let err = PlausibleDescription::build(vec![f("b")], rules.clone(), vec![("x".into(), "rse".into())], lim())
            .unwrap_err();
        assert_eq!(err, DescriptionError::PriorityOverRse { superior: "x".into() });

        let err =
            PlausibleDescription::build(vec![], rules.clone(), vec![("x".into(), "zz".into())], lim()).unwrap_err();
        assert_eq!(err, DescriptionError::UnknownRuleId { id: "zz".into() });

        // rse only exists when Ax is non-empty
        let err =
            PlausibleDescription::build(vec![], rules.clone(), vec![("rse".into(), "x".into())], lim()).unwrap_err();
        assert_eq!(err, DescriptionError::UnknownRuleId { id: "rse".into() });

        let mut dup = rules.clone();
        dup.push(Rule::warning("x", [], f("b")));
        let err = PlausibleDescription::build(vec![], dup, vec![], lim()).unwrap_err();
        assert_eq!(err, DescriptionError::DuplicateRuleId { id: "x".into() });

        let strict = vec![Rule::new("q", [], Arrow::Strict, f("a"))];
        let err = PlausibleDescription::build(vec![], strict, vec![], lim()).unwrap_err();
        assert_eq!(err, DescriptionError::StrictRuleSupplied { id: "q".into() });

        let reserved = vec![Rule::defeasible("rse", [], f("a"))];
        let err = PlausibleDescription::build(vec![], reserved, vec![], lim()).unwrap_err();
        assert_eq!(err, DescriptionError::ReservedRuleId { id: "rse".into() });
    }

    #[test]
    fn rse_may_be_superior() {
        let rules = vec![Rule::defeasible("x", [], f("~b"))];
        let d = PlausibleDescription::build(vec![f("b")], rules, vec![("rse".into(), "x".into())], lim()).unwrap();
        assert!(d.is_superior(d.rse().unwrap(), d.index_of(&"x".into()).unwrap()));
    }

    #[test]
    fn mollusc_superior_supporters() {
        let c_not_s = Rule::defeasible("cns", [f("c")], f("~s"));
        let m_s = Rule::defeasible("ms", [f("m")], f("s"));
        let d =
            PlausibleDescription::build(vec![], vec![c_not_s, m_s], vec![("cns".into(), "ms".into())], lim()).unwrap();
        let ms = d.index_of(&"ms".into()).unwrap();
        let rd = d.strict_defeasible().to_vec();
        let sup = d.superior_supporters(rd.iter().copied(), &f("~s"), ms).unwrap();
        assert_eq!(d.ids(&sup), vec![RuleId::new("cns")]);
        assert!(d.superior_supporters([], &f("~s"), ms).unwrap().is_empty());
    }
}
