//! Memoized rule queries for one proof session.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::algorithm::Alg;
use crate::description::PlausibleDescription;
use crate::error::AtomLimitExceeded;
use crate::formula::Formula;

type Ids = Rc<[usize]>;

/// Caches `Ax ⊨ f`, `R[f]`, `R^s_d[f]` and `Foe(α,f,r)` per formula.
///
/// The cache is session-local and not shared across threads; every cached
/// value equals the uncached computation on [`PlausibleDescription`].
pub struct RuleIndex<'d> {
    desc: &'d PlausibleDescription,
    entailed: RefCell<HashMap<Formula, bool>>,
    all: RefCell<HashMap<Formula, Ids>>,
    strict_defeasible: RefCell<HashMap<Formula, Ids>>,
}

impl<'d> RuleIndex<'d> {
    pub fn new(desc: &'d PlausibleDescription) -> Self {
        RuleIndex {
            desc,
            entailed: RefCell::default(),
            all: RefCell::default(),
            strict_defeasible: RefCell::default(),
        }
    }

    pub fn description(&self) -> &'d PlausibleDescription {
        self.desc
    }

    pub fn axioms_entail(&self, f: &Formula) -> Result<bool, AtomLimitExceeded> {
        if let Some(&v) = self.entailed.borrow().get(f) {
            return Ok(v);
        }
        let v = self.desc.axioms_entail(f)?;
        self.entailed.borrow_mut().insert(f.clone(), v);
        Ok(v)
    }

    /// `R[f]` over every rule.
    pub fn supporters(&self, f: &Formula) -> Result<Ids, AtomLimitExceeded> {
        if let Some(v) = self.all.borrow().get(f) {
            return Ok(v.clone());
        }
        let v: Ids = self.desc.supporters(self.desc.all_indices(), f)?.into();
        self.all.borrow_mut().insert(f.clone(), v.clone());
        Ok(v)
    }

    /// `R^s_d[f]`.
    pub fn strict_defeasible_supporters(&self, f: &Formula) -> Result<Ids, AtomLimitExceeded> {
        if let Some(v) = self.strict_defeasible.borrow().get(f) {
            return Ok(v.clone());
        }
        let all = self.supporters(f)?;
        let rsd = self.desc.strict_defeasible();
        let v: Ids = all.iter().copied().filter(|i| rsd.contains(i)).collect();
        self.strict_defeasible.borrow_mut().insert(f.clone(), v.clone());
        Ok(v)
    }

    /// `R^s_d[f;s]`.
    pub fn superior_supporters(&self, f: &Formula, s: usize) -> Result<Vec<usize>, AtomLimitExceeded> {
        Ok(self
            .strict_defeasible_supporters(f)?
            .iter()
            .copied()
            .filter(|&t| self.desc.is_superior(t, s))
            .collect())
    }

    /// `Foe(α,f,r)`: the rules `α` treats as evidence against `f` when `r` is in use.
    pub fn foes(&self, alg: Alg, f: &Formula, r: usize) -> Result<Vec<usize>, AtomLimitExceeded> {
        if matches!(alg, Alg::Phi | Alg::PiP) || Some(r) == self.desc.rse() {
            return Ok(Vec::new());
        }
        let against = self.supporters(&f.negated())?;
        let desc = self.desc;
        Ok(match alg {
            Alg::PsiP => against.iter().copied().filter(|&s| desc.is_superior(s, r)).collect(),
            _ => against.iter().copied().filter(|&s| !desc.is_superior(r, s)).collect(),
        })
    }
}
