//! Classical semantics by exhaustive valuation.
//!
//! Everything here enumerates `Val(A)` for a finite atom universe `A`, so the
//! cost is `2^|A|`. [`AtomLimit`] guards that: exceeding it is a refusal, not a
//! logical verdict.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::AtomLimitExceeded;
use crate::formula::{Atom, Formula, FormulaClass};

/// Largest universe any semantic check will enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtomLimit(usize);

impl AtomLimit {
    pub const DEFAULT: usize = 20;
    /// Valuations are packed in a `u64`.
    pub const HARD_MAX: usize = 63;

    pub const fn new(limit: usize) -> Self {
        if limit > Self::HARD_MAX {
            AtomLimit(Self::HARD_MAX)
        } else {
            AtomLimit(limit)
        }
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, atoms: usize) -> Result<(), AtomLimitExceeded> {
        if atoms > self.0 {
            Err(AtomLimitExceeded { atoms, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for AtomLimit {
    fn default() -> Self {
        AtomLimit(Self::DEFAULT)
    }
}

/// A valuation over a declared universe; atoms outside it are false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation {
    universe: Arc<[Atom]>,
    bits: u64,
}

impl Valuation {
    pub fn universe(&self) -> &[Atom] {
        &self.universe
    }

    pub fn value(&self, atom: &Atom) -> bool {
        match self.universe.binary_search(atom) {
            Ok(i) => self.bits >> i & 1 == 1,
            Err(_) => false,
        }
    }

    pub fn eval(&self, f: &Formula) -> bool {
        match f {
            Formula::Atom(a) => self.value(a),
            Formula::Neg(inner) => !self.eval(inner),
            Formula::Conj(ms) => ms.iter().all(|m| self.eval(m)),
            Formula::Disj(ms) => ms.iter().any(|m| self.eval(m)),
        }
    }

    /// Atoms assigned true.
    pub fn true_atoms(&self) -> impl Iterator<Item = &Atom> {
        self.universe
            .iter()
            .enumerate()
            .filter(|(i, _)| self.bits >> i & 1 == 1)
            .map(|(_, a)| a)
    }
}

/// Iterator over `Val(A)`.
#[derive(Debug, Clone)]
pub struct ValSpace {
    universe: Arc<[Atom]>,
    next: u64,
    end: u64,
}

impl ValSpace {
    pub fn len(&self) -> u64 {
        self.end - self.next
    }

    pub fn is_empty(&self) -> bool {
        self.next == self.end
    }
}

impl Iterator for ValSpace {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        if self.next == self.end {
            return None;
        }
        let v = Valuation {
            universe: self.universe.clone(),
            bits: self.next,
        };
        self.next += 1;
        Some(v)
    }
}

/// All `2^|A|` valuations that are false outside `atoms`.
pub fn val_space(atoms: &BTreeSet<Atom>, limit: AtomLimit) -> Result<ValSpace, AtomLimitExceeded> {
    limit.check(atoms.len())?;
    Ok(ValSpace {
        universe: atoms.iter().cloned().collect(),
        next: 0,
        end: 1u64 << atoms.len(),
    })
}

fn atoms_of<'a, I: IntoIterator<Item = &'a Formula>>(fs: I) -> BTreeSet<Atom> {
    let mut out = BTreeSet::new();
    for f in fs {
        f.collect_atoms(&mut out);
    }
    out
}

pub fn classify(f: &Formula, limit: AtomLimit) -> Result<FormulaClass, AtomLimitExceeded> {
    let (mut any_true, mut any_false) = (false, false);
    for v in val_space(&f.atoms(), limit)? {
        if v.eval(f) {
            any_true = true;
        } else {
            any_false = true;
        }
        if any_true && any_false {
            return Ok(FormulaClass::Contingent);
        }
    }
    Ok(if any_true {
        FormulaClass::Tautology
    } else {
        FormulaClass::Contradiction
    })
}

/// `premises ⊨ goal`: every valuation satisfying all premises satisfies the goal.
pub fn entails<'a, I>(premises: I, goal: &Formula, limit: AtomLimit) -> Result<bool, AtomLimitExceeded>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let premises: Vec<&Formula> = premises.into_iter().collect();
    let mut atoms = atoms_of(premises.iter().copied());
    goal.collect_atoms(&mut atoms);
    for v in val_space(&atoms, limit)? {
        if premises.iter().all(|p| v.eval(p)) && !v.eval(goal) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn satisfiable<'a, I>(fs: I, limit: AtomLimit) -> Result<bool, AtomLimitExceeded>
where
    I: IntoIterator<Item = &'a Formula>,
{
    Ok(find_model(fs, limit)?.is_some())
}

/// A witness valuation for `fs`, if one exists.
pub fn find_model<'a, I>(fs: I, limit: AtomLimit) -> Result<Option<Valuation>, AtomLimitExceeded>
where
    I: IntoIterator<Item = &'a Formula>,
{
    let fs: Vec<&Formula> = fs.into_iter().collect();
    let atoms = atoms_of(fs.iter().copied());
    Ok(val_space(&atoms, limit)?.find(|v| fs.iter().all(|f| v.eval(f))))
}

/// Truth-table equivalence.
pub fn equivalent(f: &Formula, g: &Formula, limit: AtomLimit) -> Result<bool, AtomLimitExceeded> {
    let atoms = atoms_of([f, g]);
    Ok(val_space(&atoms, limit)?.all(|v| v.eval(f) == v.eval(g)))
}
