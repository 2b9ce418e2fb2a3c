//! Clause conversion, resolution closure and the judicious (error-filtering)
//! proof relation.

use std::collections::{BTreeSet, VecDeque};

use crate::error::AtomLimitExceeded;
use crate::formula::{core, core_sets, Clause, Formula, FormulaClass, Literal, LiteralSet};
use crate::semantics::{classify, val_space, AtomLimit};

pub type ClauseSet = BTreeSet<Clause>;

/// `Claus(f)`: one clause `or ~L(f,v)` for every valuation `v` over `Atm(f)`
/// that falsifies `f`.
pub fn claus(f: &Formula, limit: AtomLimit) -> Result<ClauseSet, AtomLimitExceeded> {
    let atoms = f.atoms();
    let mut out = ClauseSet::new();
    for v in val_space(&atoms, limit)? {
        if v.eval(f) {
            continue;
        }
        // ~L(f,v): a true atom contributes ~a, a false atom contributes a
        let clause = atoms.iter().map(|a| {
            if v.value(a) {
                Literal::neg(a.clone())
            } else {
                Literal::pos(a.clone())
            }
        });
        out.insert(Clause::new(clause));
    }
    Ok(out)
}

/// `Claus(F)`, the union over members.
pub fn claus_all<'a, I>(fs: I, limit: AtomLimit) -> Result<ClauseSet, AtomLimitExceeded>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut out = ClauseSet::new();
    for f in fs {
        out.extend(claus(f, limit)?);
    }
    Ok(out)
}

/// Every binary resolvent of `x` and `y`, one per complementary pair.
pub fn resolvents(x: &Clause, y: &Clause) -> Vec<Clause> {
    x.0.iter()
        .filter(|l| y.0.contains(&l.complement()))
        .map(|l| {
            let nl = l.complement();
            let lits = x.0.iter().filter(|m| *m != l).chain(y.0.iter().filter(|m| **m != nl));
            Clause::new(lits.cloned())
        })
        .collect()
}

/// Saturates under binary resolution. With `stop_at_empty` the search returns
/// as soon as the empty clause appears, leaving the closure partial.
fn saturate(clauses: &ClauseSet, stop_at_empty: bool) -> (ClauseSet, bool) {
    let mut seen: ClauseSet = clauses.clone();
    let mut queue: VecDeque<Clause> = clauses.iter().cloned().collect();
    let mut active: Vec<Clause> = Vec::new();
    let mut found_empty = seen.contains(&Clause::empty());
    if found_empty && stop_at_empty {
        return (seen, true);
    }
    while let Some(given) = queue.pop_front() {
        for other in &active {
            for r in resolvents(&given, other) {
                if seen.insert(r.clone()) {
                    if r.is_empty() {
                        found_empty = true;
                        if stop_at_empty {
                            return (seen, true);
                        }
                    }
                    queue.push_back(r);
                }
            }
        }
        active.push(given);
    }
    (seen, found_empty)
}

/// `Res(C)`: the least superset of `C` closed under binary resolution.
/// Tautological resolvents are kept.
pub fn resolution_closure(clauses: &ClauseSet) -> ClauseSet {
    saturate(clauses, false).0
}

/// True iff the empty clause is derivable, i.e. `C` is unsatisfiable.
pub fn refutes(clauses: &ClauseSet) -> bool {
    saturate(clauses, true).1
}

/// `SmpRes(C)`.
pub fn smp_res(clauses: &ClauseSet) -> BTreeSet<Formula> {
    resolution_closure(clauses).iter().map(LiteralSet::simplified).collect()
}

/// `CorRes(C)` as simplified formulas.
pub fn cor_res(clauses: &ClauseSet) -> BTreeSet<Formula> {
    core(&resolution_closure(clauses))
}

/// `CorRes(C)` before simplification, as literal sets.
pub fn cor_res_clauses(clauses: &ClauseSet) -> ClauseSet {
    core_sets(&resolution_closure(clauses))
}

/// Potential error literals: `l` such that both `l` and `~l` are derivable units.
pub fn err(clauses: &ClauseSet) -> BTreeSet<Literal> {
    err_in_closure(&resolution_closure(clauses))
}

fn err_in_closure(closure: &ClauseSet) -> BTreeSet<Literal> {
    let units: BTreeSet<Literal> = closure.iter().filter_map(|c| c.unit_literal().cloned()).collect();
    units
        .iter()
        .filter(|l| units.contains(&l.complement()))
        .cloned()
        .collect()
}

/// `Sat(C)`: drops the empty clause and every clause touching `Err(C)`.
pub fn sat_filter(clauses: &ClauseSet) -> ClauseSet {
    sat_with_errors(clauses, &err(clauses))
}

fn sat_with_errors(clauses: &ClauseSet, errors: &BTreeSet<Literal>) -> ClauseSet {
    clauses
        .iter()
        .filter(|c| !c.is_empty() && c.0.is_disjoint(errors))
        .cloned()
        .collect()
}

/// `CorRes(Sat(C))`, reusing the closure of `C` when `Sat` removes nothing.
pub fn cor_res_sat(clauses: &ClauseSet) -> ClauseSet {
    let closure = resolution_closure(clauses);
    let sat = sat_with_errors(clauses, &err_in_closure(&closure));
    if sat.len() == clauses.len() {
        core_sets(&closure)
    } else {
        cor_res_clauses(&sat)
    }
}

/// `F ⊢ f`: the empty clause is derivable from `Claus({~f} ∪ F)`.
pub fn proves<'a, I>(premises: I, goal: &Formula, limit: AtomLimit) -> Result<bool, AtomLimitExceeded>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let negated = goal.negated();
    let mut clauses = claus(&negated, limit)?;
    clauses.extend(claus_all(premises, limit)?);
    Ok(refutes(&clauses))
}

/// `F ⊩ f`: the empty clause is derivable from `Claus(~f) ∪ Sat(Claus(F))`.
pub fn judiciously_proves<'a, I>(premises: I, goal: &Formula, limit: AtomLimit) -> Result<bool, AtomLimitExceeded>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let mut clauses = sat_filter(&claus_all(premises, limit)?);
    clauses.extend(claus(&goal.negated(), limit)?);
    Ok(refutes(&clauses))
}

/// Membership in `From(F)`: judiciously provable and not a tautology.
pub fn in_from<'a, I>(premises: I, goal: &Formula, limit: AtomLimit) -> Result<bool, AtomLimitExceeded>
where
    I: IntoIterator<Item = &'a Formula>,
{
    Ok(judiciously_proves(premises, goal, limit)? && classify(goal, limit)? != FormulaClass::Tautology)
}
