use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::description::RuleId;

/// The seven proof algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alg {
    /// φ: only what the axioms entail.
    Phi,
    /// π: ambiguity propagating, most cautious of the defeasible algorithms.
    Pi,
    /// ψ: ambiguity propagating, defeats via the co-algorithm ψ′.
    Psi,
    /// β: ambiguity blocking.
    Beta,
    BetaP,
    PsiP,
    PiP,
}

impl Alg {
    /// Ordered along the hierarchy `φ ⊆ π ⊆ ψ ⊆ β = β′ ⊆ ψ′ ⊆ π′`.
    pub const ALL: [Alg; 7] = [Alg::Phi, Alg::Pi, Alg::Psi, Alg::Beta, Alg::BetaP, Alg::PsiP, Alg::PiP];

    /// The co-algorithm `α′`. `φ′ = φ` and `α″ = α`.
    pub fn co(self) -> Alg {
        match self {
            Alg::Phi => Alg::Phi,
            Alg::Pi => Alg::PiP,
            Alg::Psi => Alg::PsiP,
            Alg::Beta => Alg::BetaP,
            Alg::BetaP => Alg::Beta,
            Alg::PsiP => Alg::Psi,
            Alg::PiP => Alg::Pi,
        }
    }

    pub fn is_primed(self) -> bool {
        matches!(self, Alg::BetaP | Alg::PsiP | Alg::PiP)
    }

    /// ASCII tag used on the command line and in exports.
    pub fn tag(self) -> &'static str {
        match self {
            Alg::Phi => "phi",
            Alg::Pi => "pi",
            Alg::Psi => "psi",
            Alg::Beta => "beta",
            Alg::BetaP => "beta-p",
            Alg::PsiP => "psi-p",
            Alg::PiP => "pi-p",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Alg::Phi => "φ",
            Alg::Pi => "π",
            Alg::Psi => "ψ",
            Alg::Beta => "β",
            Alg::BetaP => "β′",
            Alg::PsiP => "ψ′",
            Alg::PiP => "π′",
        }
    }

    pub(crate) fn code(self) -> u32 {
        self as u32
    }
}

impl fmt::Display for Alg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm tag {0:?}; expected one of phi, pi, psi, beta, beta-p, psi-p, pi-p")]
pub struct UnknownAlg(pub String);

impl FromStr for Alg {
    type Err = UnknownAlg;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Alg::ALL
            .into_iter()
            .find(|a| a.tag() == s)
            .ok_or_else(|| UnknownAlg(s.to_string()))
    }
}

impl Serialize for Alg {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// A proof value, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProofValue {
    Plus,
    Minus,
}

impl ProofValue {
    pub fn from_bool(proved: bool) -> Self {
        if proved {
            ProofValue::Plus
        } else {
            ProofValue::Minus
        }
    }

    pub fn is_plus(self) -> bool {
        self == ProofValue::Plus
    }

    pub fn as_i8(self) -> i8 {
        match self {
            ProofValue::Plus => 1,
            ProofValue::Minus => -1,
        }
    }

    /// `min S`; `min {} = +1`.
    pub fn min_of<I: IntoIterator<Item = ProofValue>>(values: I) -> Self {
        ProofValue::from_bool(values.into_iter().all(ProofValue::is_plus))
    }

    /// `max S`; `max {} = -1`.
    pub fn max_of<I: IntoIterator<Item = ProofValue>>(values: I) -> Self {
        ProofValue::from_bool(values.into_iter().any(ProofValue::is_plus))
    }
}

impl std::ops::Neg for ProofValue {
    type Output = ProofValue;

    fn neg(self) -> ProofValue {
        match self {
            ProofValue::Plus => ProofValue::Minus,
            ProofValue::Minus => ProofValue::Plus,
        }
    }
}

impl fmt::Display for ProofValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProofValue::Plus => "+1",
            ProofValue::Minus => "-1",
        })
    }
}

impl Serialize for ProofValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HistoryEntry {
    pub alg: Alg,
    pub rule: RuleId,
}

impl fmt::Display for HistoryEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.alg, self.rule)
    }
}

/// The record of algorithm/rule choices along one proof branch.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct History {
    entries: Vec<HistoryEntry>,
}

impl History {
    pub fn new() -> Self {
        History::default()
    }

    pub fn from_entries<I: IntoIterator<Item = HistoryEntry>>(entries: I) -> Self {
        History {
            entries: entries.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[HistoryEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, alg: Alg, rule: &RuleId) -> bool {
        self.entries.iter().any(|e| e.alg == alg && &e.rule == rule)
    }

    /// `H + αr`.
    pub fn extended(&self, alg: Alg, rule: RuleId) -> Self {
        let mut entries = self.entries.clone();
        entries.push(HistoryEntry { alg, rule });
        History { entries }
    }
}

impl fmt::Display for History {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn co_algorithms() {
        assert_eq!(Alg::Phi.co(), Alg::Phi);
        assert_eq!(Alg::Beta.co(), Alg::BetaP);
        assert_eq!(Alg::PiP.co(), Alg::Pi);
        for a in Alg::ALL {
            assert_eq!(a.co().co(), a);
        }
    }

    #[test]
    fn tags_round_trip() {
        for a in Alg::ALL {
            assert_eq!(a.tag().parse::<Alg>().unwrap(), a);
        }
        assert!("gamma".parse::<Alg>().is_err());
    }

    #[test]
    fn min_max_arithmetic() {
        use ProofValue::*;
        assert_eq!(ProofValue::min_of([]), Plus);
        assert_eq!(ProofValue::max_of([]), Minus);
        assert_eq!(ProofValue::min_of([Plus, Minus]), Minus);
        assert_eq!(ProofValue::max_of([Plus, Minus]), Plus);
        assert_eq!(-Minus, Plus);
        assert_eq!(-Plus, Minus);
    }
}
