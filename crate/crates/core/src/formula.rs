//! Set-based propositional formulas.
//!
//! Conjunctions and disjunctions range over finite *sets* of formulas, so
//! `or{a, b}` and `or{b, a}` are the same term and duplicates collapse. Members
//! are kept in a `BTreeSet`, which gives every formula a canonical member order
//! and makes equality, hashing and printing deterministic.
//!
//! Negation is structural: `~~a` is a different term from `a`. Logical
//! equivalence is a semantic question answered by [`crate::semantics`].

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A propositional atom. Cloning is a reference-count bump.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Self {
        Atom(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::new(s)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Neg(Box<Formula>),
    Conj(BTreeSet<Formula>),
    Disj(BTreeSet<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Self {
        Formula::Atom(Atom::new(name))
    }

    pub fn negation(inner: Formula) -> Self {
        Formula::Neg(Box::new(inner))
    }

    pub fn conj<I: IntoIterator<Item = Formula>>(members: I) -> Self {
        Formula::Conj(members.into_iter().collect())
    }

    pub fn disj<I: IntoIterator<Item = Formula>>(members: I) -> Self {
        Formula::Disj(members.into_iter().collect())
    }

    /// The empty disjunction `or{}`.
    pub fn falsum() -> Self {
        Formula::Disj(BTreeSet::new())
    }

    /// The empty conjunction `and{}`.
    pub fn verum() -> Self {
        Formula::Conj(BTreeSet::new())
    }

    /// `~self`, without any double-negation cancellation.
    pub fn negated(&self) -> Self {
        Formula::negation(self.clone())
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Neg(inner) => inner.collect_atoms(out),
            Formula::Conj(members) | Formula::Disj(members) => {
                for m in members {
                    m.collect_atoms(out);
                }
            }
        }
    }

    /// Returns the literal this formula denotes, if it is `a` or `~a`.
    pub fn as_literal(&self) -> Option<Literal> {
        match self {
            Formula::Atom(a) => Some(Literal::pos(a.clone())),
            Formula::Neg(inner) => match inner.as_ref() {
                Formula::Atom(a) => Some(Literal::neg(a.clone())),
                _ => None,
            },
            _ => None,
        }
    }

    /// Reads the formula as a clause: a literal or a disjunction of literals.
    pub fn as_clause(&self) -> Option<Clause> {
        if let Some(l) = self.as_literal() {
            return Some(Clause::unit(l));
        }
        match self {
            Formula::Disj(members) => members
                .iter()
                .map(Formula::as_literal)
                .collect::<Option<BTreeSet<_>>>()
                .map(Clause),
            _ => None,
        }
    }

    /// Reads the formula as a dual-clause: a literal or a conjunction of literals.
    pub fn as_dual_clause(&self) -> Option<DualClause> {
        if let Some(l) = self.as_literal() {
            return Some(DualClause(BTreeSet::from([l])));
        }
        match self {
            Formula::Conj(members) => members
                .iter()
                .map(Formula::as_literal)
                .collect::<Option<BTreeSet<_>>>()
                .map(DualClause),
            _ => None,
        }
    }

    /// Number of constructor applications; used by generators and tests.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Neg(inner) => 1 + inner.size(),
            Formula::Conj(ms) | Formula::Disj(ms) => 1 + ms.iter().map(Formula::size).sum::<usize>(),
        }
    }
}

impl From<Literal> for Formula {
    fn from(l: Literal) -> Self {
        l.to_formula()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(a) => write!(f, "{a}"),
            Formula::Neg(inner) => write!(f, "~{inner}"),
            Formula::Conj(ms) => write_set(f, "and", ms),
            Formula::Disj(ms) => write_set(f, "or", ms),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, head: &str, ms: &BTreeSet<Formula>) -> fmt::Result {
    write!(f, "{head}{{")?;
    for (i, m) in ms.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{m}")?;
    }
    f.write_str("}")
}

/// An atom or a negated atom.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub negated: bool,
}

impl Literal {
    pub fn pos(atom: Atom) -> Self {
        Literal { atom, negated: false }
    }

    pub fn neg(atom: Atom) -> Self {
        Literal { atom, negated: true }
    }

    pub fn complement(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }

    pub fn to_formula(&self) -> Formula {
        let a = Formula::Atom(self.atom.clone());
        if self.negated {
            Formula::negation(a)
        } else {
            a
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.atom)
        } else {
            write!(f, "{}", self.atom)
        }
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Elementwise complement of a literal set.
pub fn complement_set(lits: &BTreeSet<Literal>) -> BTreeSet<Literal> {
    lits.iter().map(Literal::complement).collect()
}

fn has_complementary_pair(lits: &BTreeSet<Literal>) -> bool {
    lits.iter().any(|l| !l.negated && lits.contains(&l.complement()))
}

/// Shared behaviour of clauses and dual-clauses: both are a literal set
/// under a disjunctive or conjunctive reading.
pub trait LiteralSet: Clone + Ord {
    fn lits(&self) -> &BTreeSet<Literal>;

    /// The unsimplified formula `or L` / `and L`.
    fn to_formula(&self) -> Formula;

    /// True when the literal set contains some `l` together with `~l`.
    fn has_complementary_pair(&self) -> bool {
        has_complementary_pair(self.lits())
    }

    /// Contingent or empty. For a literal set this is exactly the absence of a
    /// complementary pair: a non-empty clause is a tautology iff it has one,
    /// and dually a non-empty dual-clause is a contradiction iff it has one.
    fn is_contingent_or_empty(&self) -> bool {
        !self.has_complementary_pair()
    }

    fn is_contingent(&self) -> bool {
        !self.lits().is_empty() && !self.has_complementary_pair()
    }

    fn simplified(&self) -> Formula {
        simplify(&self.to_formula())
    }
}

/// A disjunction of literals, `or L`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Clause(pub BTreeSet<Literal>);

/// A conjunction of literals, `and L`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DualClause(pub BTreeSet<Literal>);

impl Clause {
    pub fn new<I: IntoIterator<Item = Literal>>(lits: I) -> Self {
        Clause(lits.into_iter().collect())
    }

    pub fn unit(l: Literal) -> Self {
        Clause(BTreeSet::from([l]))
    }

    /// The falsum `or{}`.
    pub fn empty() -> Self {
        Clause(BTreeSet::new())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn unit_literal(&self) -> Option<&Literal> {
        if self.0.len() == 1 {
            self.0.iter().next()
        } else {
            None
        }
    }
}

impl DualClause {
    pub fn new<I: IntoIterator<Item = Literal>>(lits: I) -> Self {
        DualClause(lits.into_iter().collect())
    }
}

impl LiteralSet for Clause {
    fn lits(&self) -> &BTreeSet<Literal> {
        &self.0
    }

    fn to_formula(&self) -> Formula {
        Formula::Disj(self.0.iter().map(Literal::to_formula).collect())
    }
}

impl LiteralSet for DualClause {
    fn lits(&self) -> &BTreeSet<Literal> {
        &self.0
    }

    fn to_formula(&self) -> Formula {
        Formula::Conj(self.0.iter().map(Literal::to_formula).collect())
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

impl fmt::Debug for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DualClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

impl fmt::Debug for DualClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Lit(.)` for literals, clauses and dual-clauses.
pub trait Lits {
    fn literal_set(&self) -> BTreeSet<Literal>;
}

impl Lits for Literal {
    fn literal_set(&self) -> BTreeSet<Literal> {
        BTreeSet::from([self.clone()])
    }
}

impl Lits for Clause {
    fn literal_set(&self) -> BTreeSet<Literal> {
        self.0.clone()
    }
}

impl Lits for DualClause {
    fn literal_set(&self) -> BTreeSet<Literal> {
        self.0.clone()
    }
}

pub fn lits<T: Lits>(x: &T) -> BTreeSet<Literal> {
    x.literal_set()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaClass {
    Tautology,
    Contradiction,
    Contingent,
}

/// Unwraps singleton conjunctions and disjunctions: `smp(and{g}) = smp(or{g}) = smp(g)`.
/// Anything else is returned unchanged; in particular members of larger sets
/// are not simplified.
pub fn simplify(f: &Formula) -> Formula {
    match f {
        Formula::Conj(ms) | Formula::Disj(ms) if ms.len() == 1 => simplify(ms.iter().next().expect("singleton")),
        _ => f.clone(),
    }
}

/// Members that are contingent or empty.
pub fn ctge<G: LiteralSet>(g: &BTreeSet<G>) -> BTreeSet<G> {
    g.iter().filter(|x| x.is_contingent_or_empty()).cloned().collect()
}

/// Members with no strict sub-literal-set in `g`.
pub fn minimal<G: LiteralSet>(g: &BTreeSet<G>) -> BTreeSet<G> {
    g.iter()
        .filter(|x| {
            !g.iter()
                .any(|y| y.lits().len() < x.lits().len() && y.lits().is_subset(x.lits()))
        })
        .cloned()
        .collect()
}

/// `Ctge` then `Min`, keeping the literal-set representation.
pub fn core_sets<G: LiteralSet>(g: &BTreeSet<G>) -> BTreeSet<G> {
    minimal(&ctge(g))
}

/// The core `Smp(Min(Ctge(G)))` of a set of clauses or of dual-clauses.
pub fn core<G: LiteralSet>(g: &BTreeSet<G>) -> BTreeSet<Formula> {
    core_sets(g).iter().map(LiteralSet::simplified).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Literal {
        Literal::pos(Atom::new("a"))
    }
    fn b() -> Literal {
        Literal::pos(Atom::new("b"))
    }

    #[test]
    fn complement_of_literals_and_sets() {
        assert_eq!(a().complement(), Literal::neg(Atom::new("a")));
        assert_eq!(a().complement().complement(), a());
        let set = BTreeSet::from([a(), b().complement()]);
        assert_eq!(complement_set(&set), BTreeSet::from([a().complement(), b()]));
    }

    #[test]
    fn lits_of_each_shape() {
        assert_eq!(lits(&a()), BTreeSet::from([a()]));
        let c = Clause::new([a(), b().complement()]);
        assert_eq!(lits(&c), BTreeSet::from([a(), b().complement()]));
        assert!(lits(&Clause::empty()).is_empty());
        let d = DualClause::new([a()]);
        assert_eq!(lits(&d), BTreeSet::from([a()]));
    }

    #[test]
    fn simplify_unwraps_singletons() {
        let fa = Formula::atom("a");
        assert_eq!(simplify(&Formula::disj([fa.clone()])), fa);
        assert_eq!(simplify(&Formula::verum()), Formula::verum());
        let nested = Formula::disj([Formula::conj([Formula::atom("b")])]);
        assert_eq!(simplify(&nested), Formula::atom("b"));
        // members of non-singleton sets are left alone
        let wide = Formula::disj([Formula::conj([fa.clone()]), Formula::atom("b")]);
        assert_eq!(simplify(&wide), wide);
    }

    #[test]
    fn core_drops_tautologies_and_supersets() {
        let g = BTreeSet::from([
            Clause::new([b(), b().complement()]),
            Clause::new([a(), b()]),
            Clause::new([a()]),
        ]);
        assert_eq!(core(&g), BTreeSet::from([Formula::atom("a")]));
        assert!(core::<Clause>(&BTreeSet::new()).is_empty());
        let only_empty = BTreeSet::from([Clause::empty()]);
        assert_eq!(core(&only_empty), BTreeSet::from([Formula::falsum()]));
    }

    #[test]
    fn dual_core_drops_contradictions() {
        let g = BTreeSet::from([
            DualClause::new([a(), a().complement()]),
            DualClause::new([a(), b()]),
            DualClause::new([b()]),
        ]);
        assert_eq!(core(&g), BTreeSet::from([Formula::atom("b")]));
    }

    #[test]
    fn set_order_is_irrelevant() {
        let x = Formula::disj([Formula::atom("a"), Formula::atom("b")]);
        let y = Formula::disj([Formula::atom("b"), Formula::atom("a")]);
        assert_eq!(x, y);
        assert_eq!(x.to_string(), "or{a, b}");
    }

    #[test]
    fn double_negation_is_a_distinct_term() {
        let fa = Formula::atom("a");
        assert_ne!(fa.negated().negated(), fa);
    }

    #[test]
    fn clause_readings() {
        let f = Formula::disj([Formula::atom("a"), Formula::atom("b").negated()]);
        assert_eq!(f.as_clause(), Some(Clause::new([a(), b().complement()])));
        assert_eq!(Formula::atom("a").as_clause(), Some(Clause::unit(a())));
        assert_eq!(Formula::verum().as_dual_clause(), Some(DualClause::default()));
        assert!(Formula::disj([Formula::verum()]).as_clause().is_none());
    }
}
