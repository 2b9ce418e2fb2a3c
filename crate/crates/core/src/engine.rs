//! The proof function `P` with its auxiliaries `For` and `Dftd`.
//!
//! Every recursive step appends a fresh `(algorithm, rule)` entry to the
//! history, and an entry already in the history is never reused, so each
//! branch is at most `2|R|` steps deep and evaluation always terminates.
//!
//! The history only matters through membership tests, so results are memoized
//! on the history as a set.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use crate::algorithm::{Alg, History, ProofValue};
use crate::description::PlausibleDescription;
use crate::error::ProofError;
use crate::formula::Formula;
use crate::index::RuleIndex;

/// A history as a sorted set of `(rule, alg)` codes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
struct Trail(Vec<u32>);

impl Trail {
    fn code(alg: Alg, rule: usize) -> u32 {
        (rule as u32) * 8 + alg.code()
    }

    fn contains(&self, alg: Alg, rule: usize) -> bool {
        self.0.binary_search(&Self::code(alg, rule)).is_ok()
    }

    fn with(&self, alg: Alg, rule: usize) -> Trail {
        let code = Self::code(alg, rule);
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&code) {
            v.insert(pos, code);
        }
        Trail(v)
    }
}

/// A proof session over one description. Caches are local to the session.
pub struct Prover<'d> {
    index: RuleIndex<'d>,
    memo: RefCell<HashMap<(Alg, Trail, Formula), ProofValue>>,
}

impl<'d> Prover<'d> {
    pub fn new(desc: &'d PlausibleDescription) -> Self {
        Prover {
            index: RuleIndex::new(desc),
            memo: RefCell::default(),
        }
    }

    pub fn description(&self) -> &'d PlausibleDescription {
        self.index.description()
    }

    pub fn index(&self) -> &RuleIndex<'d> {
        &self.index
    }

    /// `P(α,H,f)`.
    pub fn prove(&self, alg: Alg, history: &History, f: &Formula) -> Result<ProofValue, ProofError> {
        let trail = self.trail_of(alg, history)?;
        self.formula(alg, &trail, f)
    }

    /// `P(α,H,F)` for a finite set of formulas.
    pub fn prove_set<'a, I>(&self, alg: Alg, history: &History, fs: I) -> Result<ProofValue, ProofError>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        let trail = self.trail_of(alg, history)?;
        self.set(alg, &trail, fs)
    }

    /// `α`-provability: `P(α,(),f) = +1`.
    pub fn provable(&self, alg: Alg, f: &Formula) -> Result<bool, ProofError> {
        Ok(self.formula(alg, &Trail::default(), f)?.is_plus())
    }

    fn trail_of(&self, alg: Alg, history: &History) -> Result<Trail, ProofError> {
        validate_history(self.description(), alg, history)?;
        let desc = self.description();
        let mut trail = Trail::default();
        for e in history.entries() {
            let idx = desc.index_of(&e.rule).expect("validated");
            trail = trail.with(e.alg, idx);
        }
        Ok(trail)
    }

    fn set<'a, I>(&self, alg: Alg, trail: &Trail, fs: I) -> Result<ProofValue, ProofError>
    where
        I: IntoIterator<Item = &'a Formula>,
    {
        for f in fs {
            if self.formula(alg, trail, f)? == ProofValue::Minus {
                return Ok(ProofValue::Minus);
            }
        }
        Ok(ProofValue::Plus)
    }

    fn formula(&self, alg: Alg, trail: &Trail, f: &Formula) -> Result<ProofValue, ProofError> {
        if self.index.axioms_entail(f)? {
            return Ok(ProofValue::Plus);
        }
        if alg == Alg::Phi {
            return Ok(ProofValue::Minus);
        }
        let key = (alg, trail.clone(), f.clone());
        if let Some(&v) = self.memo.borrow().get(&key) {
            return Ok(v);
        }
        let mut value = ProofValue::Minus;
        for &r in self.index.strict_defeasible_supporters(f)?.iter() {
            if trail.contains(alg, r) {
                continue;
            }
            if self.evidence_for(alg, trail, f, r)?.is_plus() {
                value = ProofValue::Plus;
                break;
            }
        }
        self.memo.borrow_mut().insert(key, value);
        Ok(value)
    }

    /// `For(α,H,f,r)`.
    fn evidence_for(&self, alg: Alg, trail: &Trail, f: &Formula, r: usize) -> Result<ProofValue, ProofError> {
        let rule = self.description().rule(r);
        if self.set(alg, &trail.with(alg, r), &rule.antecedents)? == ProofValue::Minus {
            return Ok(ProofValue::Minus);
        }
        for s in self.index.foes(alg, f, r)? {
            if self.defeated(alg, trail, f, s)? == ProofValue::Minus {
                return Ok(ProofValue::Minus);
            }
        }
        Ok(ProofValue::Plus)
    }

    /// `Dftd(α,H,f,r,s)`: the foe `s` is beaten by a superior supporter of `f`
    /// (team defeat) or its antecedents fail under the co-algorithm.
    fn defeated(&self, alg: Alg, trail: &Trail, f: &Formula, s: usize) -> Result<ProofValue, ProofError> {
        for t in self.index.superior_supporters(f, s)? {
            if trail.contains(alg, t) {
                continue;
            }
            let team = &self.description().rule(t).antecedents;
            if self.set(alg, &trail.with(alg, t), team)?.is_plus() {
                return Ok(ProofValue::Plus);
            }
        }
        let co = alg.co();
        if !trail.contains(co, s) {
            let foe = &self.description().rule(s).antecedents;
            if self.set(co, &trail.with(co, s), foe)? == ProofValue::Minus {
                return Ok(ProofValue::Plus);
            }
        }
        Ok(ProofValue::Minus)
    }
}

/// Checks that `history` is an `α`-history: entries from `αR ∪ α′R`, none repeated.
pub fn validate_history(desc: &PlausibleDescription, alg: Alg, history: &History) -> Result<(), ProofError> {
    let mut seen = BTreeSet::new();
    for e in history.entries() {
        if e.alg != alg && e.alg != alg.co() {
            return Err(ProofError::InvalidHistory(format!(
                "entry {e} uses neither {alg} nor its co-algorithm {}",
                alg.co()
            )));
        }
        if desc.index_of(&e.rule).is_none() {
            return Err(ProofError::InvalidHistory(format!("entry {e} names an unknown rule")));
        }
        if !seen.insert((e.alg, e.rule.clone())) {
            return Err(ProofError::InvalidHistory(format!("entry {e} is repeated")));
        }
    }
    Ok(())
}

/// `P(α,H,f)` in a fresh session.
pub fn prove(desc: &PlausibleDescription, alg: Alg, history: &History, f: &Formula) -> Result<ProofValue, ProofError> {
    Prover::new(desc).prove(alg, history, f)
}

/// `P(α,(),f) = +1` in a fresh session.
pub fn provable(desc: &PlausibleDescription, alg: Alg, f: &Formula) -> Result<bool, ProofError> {
    Prover::new(desc).provable(alg, f)
}
