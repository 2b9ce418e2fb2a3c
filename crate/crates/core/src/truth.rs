use std::fmt;

use serde::{Serialize, Serializer};

use crate::algorithm::Alg;
use crate::description::PlausibleDescription;
use crate::engine::Prover;
use crate::error::ProofError;
use crate::formula::Formula;

/// Plausible truth values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TruthValue {
    /// usually true: `f` provable, `~f` not
    True,
    /// usually false: `~f` provable, `f` not
    False,
    /// neither is provable
    Undetermined,
    /// both are provable
    Ambiguous,
}

impl TruthValue {
    pub fn from_proofs(proves_f: bool, proves_not_f: bool) -> Self {
        match (proves_f, proves_not_f) {
            (true, true) => TruthValue::Ambiguous,
            (true, false) => TruthValue::True,
            (false, true) => TruthValue::False,
            (false, false) => TruthValue::Undetermined,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            TruthValue::True => "t",
            TruthValue::False => "f",
            TruthValue::Undetermined => "u",
            TruthValue::Ambiguous => "a",
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.letter())
    }
}

impl Prover<'_> {
    /// `V(α,f)` from the provability of `f` and of `~f`.
    pub fn truth_value(&self, alg: Alg, f: &Formula) -> Result<TruthValue, ProofError> {
        let pos = self.provable(alg, f)?;
        let neg = self.provable(alg, &f.negated())?;
        Ok(TruthValue::from_proofs(pos, neg))
    }
}

pub fn truth_value(desc: &PlausibleDescription, alg: Alg, f: &Formula) -> Result<TruthValue, ProofError> {
    Prover::new(desc).truth_value(alg, f)
}
