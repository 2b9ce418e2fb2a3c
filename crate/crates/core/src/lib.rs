//! Propositional plausible logic.
//!
//! Formulas and their normal forms live in [`formula`]; classical entailment
//! and judicious resolution in [`semantics`] and [`resolution`]. A
//! [`PlausibleDescription`] bundles facts, rules and a priority relation, and
//! [`Prover`] evaluates the proof algorithms of [`Alg`] over it.
//!
//! ```
//! use ppl_core::{parse_formula, parse_kb, Alg, AtomLimit, Prover, TruthValue};
//!
//! let kb = parse_kb("rule r1: {} => a\nrule r2: {} => ~a\nprio: r1 > r2\n").unwrap();
//! let desc = kb.describe(AtomLimit::default()).unwrap();
//! let prover = Prover::new(&desc);
//! let a = parse_formula("a").unwrap();
//! assert_eq!(prover.truth_value(Alg::Pi, &a).unwrap(), TruthValue::True);
//! ```

pub mod algorithm;
pub mod description;
pub mod engine;
pub mod error;
pub mod formula;
pub mod index;
pub mod resolution;
pub mod semantics;
pub mod text;
pub mod tree;
pub mod truth;

#[cfg(feature = "testing")]
pub mod testing;

pub use algorithm::{Alg, History, HistoryEntry, ProofValue, UnknownAlg};
pub use description::{Arrow, PlausibleDescription, PriorityRelation, Rule, RuleId, RSE_ID};
pub use engine::{provable, prove, Prover};
pub use error::{AtomLimitExceeded, DescriptionError, ProofError};
pub use formula::{Atom, Clause, DualClause, Formula, FormulaClass, Literal, LiteralSet};
pub use resolution::ClauseSet;
pub use semantics::{entails, satisfiable, AtomLimit, Valuation};
pub use text::{parse_formula, parse_kb, Diagnostic, DiagnosticCode, KnowledgeBase, Severity};
pub use tree::{evaluation_tree, evaluation_tree_bounded, EvaluationNode, Goal, Op, Subject};
pub use truth::{truth_value, TruthValue};
