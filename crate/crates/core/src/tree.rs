//! Evaluation trees: the min/max/minus game tree whose root value is the
//! proof value.
//!
//! Trees are built directly from the construction rules, without the
//! memoization or short-circuiting of [`crate::engine`], so the root value is
//! an independent check on [`crate::engine::Prover`].

use std::cell::Cell;
use std::fmt::{self, Write as _};

use serde_json::{json, Value};

use crate::algorithm::{Alg, History, ProofValue};
use crate::description::{PlausibleDescription, RuleId};
use crate::engine::validate_history;
use crate::error::ProofError;
use crate::formula::Formula;
use crate::index::RuleIndex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Min,
    Max,
    Minus,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Min => "min",
            Op::Max => "max",
            Op::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    /// `(α,H,F)`
    Set {
        alg: Alg,
        history: History,
        formulas: Vec<Formula>,
    },
    /// `-(α′,H,F)`; `alg` is the co-algorithm `α′`.
    NegatedSet {
        alg: Alg,
        history: History,
        formulas: Vec<Formula>,
    },
    /// `(α,H,f)`
    Formula {
        alg: Alg,
        history: History,
        formula: Formula,
    },
    /// `(α,H,f,r)`
    For {
        alg: Alg,
        history: History,
        formula: Formula,
        rule: RuleId,
    },
    /// `(α,H,f,r,s)`
    Defeat {
        alg: Alg,
        history: History,
        formula: Formula,
        rule: RuleId,
        foe: RuleId,
    },
}

impl Subject {
    fn kind(&self) -> &'static str {
        match self {
            Subject::Set { .. } => "set",
            Subject::NegatedSet { .. } => "negated-set",
            Subject::Formula { .. } => "formula",
            Subject::For { .. } => "for",
            Subject::Defeat { .. } => "defeat",
        }
    }

    fn parts(&self) -> (Alg, &History) {
        match self {
            Subject::Set { alg, history, .. }
            | Subject::NegatedSet { alg, history, .. }
            | Subject::Formula { alg, history, .. }
            | Subject::For { alg, history, .. }
            | Subject::Defeat { alg, history, .. } => (*alg, history),
        }
    }

    fn to_json(&self) -> Value {
        let (alg, history) = self.parts();
        let mut obj = serde_json::Map::new();
        obj.insert("kind".into(), json!(self.kind()));
        obj.insert("alg".into(), json!(alg.tag()));
        obj.insert(
            "history".into(),
            Value::Array(history.entries().iter().map(|e| json!(e.to_string())).collect()),
        );
        match self {
            Subject::Set { formulas, .. } | Subject::NegatedSet { formulas, .. } => {
                obj.insert(
                    "formulas".into(),
                    Value::Array(formulas.iter().map(|f| json!(f.to_string())).collect()),
                );
            }
            Subject::Formula { formula, .. } => {
                obj.insert("formula".into(), json!(formula.to_string()));
            }
            Subject::For { formula, rule, .. } => {
                obj.insert("formula".into(), json!(formula.to_string()));
                obj.insert("rule".into(), json!(rule.as_str()));
            }
            Subject::Defeat { formula, rule, foe, .. } => {
                obj.insert("formula".into(), json!(formula.to_string()));
                obj.insert("rule".into(), json!(rule.as_str()));
                obj.insert("foe".into(), json!(foe.as_str()));
            }
        }
        Value::Object(obj)
    }
}

fn write_formula_set(f: &mut fmt::Formatter<'_>, fs: &[Formula]) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in fs.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Set { alg, history, formulas } => {
                write!(f, "({alg}, {history}, ")?;
                write_formula_set(f, formulas)?;
                f.write_str(")")
            }
            Subject::NegatedSet { alg, history, formulas } => {
                write!(f, "-({alg}, {history}, ")?;
                write_formula_set(f, formulas)?;
                f.write_str(")")
            }
            Subject::Formula { alg, history, formula } => write!(f, "({alg}, {history}, {formula})"),
            Subject::For {
                alg,
                history,
                formula,
                rule,
            } => write!(f, "({alg}, {history}, {formula}, {rule})"),
            Subject::Defeat {
                alg,
                history,
                formula,
                rule,
                foe,
            } => {
                write!(f, "({alg}, {history}, {formula}, {rule}, {foe})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluationNode {
    pub subject: Subject,
    pub op: Op,
    pub value: ProofValue,
    pub children: Vec<EvaluationNode>,
}

impl EvaluationNode {
    fn new(subject: Subject, op: Op, children: Vec<EvaluationNode>) -> Self {
        let values = children.iter().map(|c| c.value);
        let value = match op {
            Op::Min => ProofValue::min_of(values),
            Op::Max => ProofValue::max_of(values),
            Op::Minus => -children[0].value,
        };
        EvaluationNode {
            subject,
            op,
            value,
            children,
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(EvaluationNode::node_count).sum::<usize>()
    }

    /// Number of edges on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| 1 + c.depth()).max().unwrap_or(0)
    }

    /// Checks the value rule at every node.
    pub fn values_consistent(&self) -> bool {
        let values = self.children.iter().map(|c| c.value);
        let expected = match self.op {
            Op::Min => ProofValue::min_of(values),
            Op::Max => ProofValue::max_of(values),
            Op::Minus => {
                if self.children.len() != 1 {
                    return false;
                }
                -self.children[0].value
            }
        };
        expected == self.value && self.children.iter().all(EvaluationNode::values_consistent)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subject": self.subject.to_json(),
            "op": self.op.name(),
            "value": self.value.as_i8(),
            "children": self.children.iter().map(EvaluationNode::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("tree json")
    }

    /// Graphviz rendering: min nodes are boxes, max nodes ellipses and minus
    /// nodes diamonds. Nodes are numbered in preorder.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph evaluation_tree {\n    node [fontname=\"monospace\"];\n");
        let mut next = 0usize;
        self.write_dot(&mut out, &mut next);
        out.push_str("}\n");
        out
    }

    fn write_dot(&self, out: &mut String, next: &mut usize) -> usize {
        let id = *next;
        *next += 1;
        let shape = match self.op {
            Op::Min => "box",
            Op::Max => "ellipse",
            Op::Minus => "diamond",
        };
        let label = format!(
            "{}\\n{} = {}",
            escape_dot(&self.subject.to_string()),
            self.op.name(),
            self.value
        );
        let _ = writeln!(out, "    n{id} [shape={shape}, label=\"{label}\"];");
        for c in &self.children {
            let cid = c.write_dot(out, next);
            let _ = writeln!(out, "    n{id} -> n{cid};");
        }
        id
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// What a tree is rooted at: a single formula or a finite set of formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Goal {
    Formula(Formula),
    Set(Vec<Formula>),
}

/// Node budget used by [`evaluation_tree`].
pub const DEFAULT_MAX_NODES: usize = 200_000;

struct Builder<'d> {
    index: RuleIndex<'d>,
    remaining: Cell<usize>,
    max_nodes: usize,
}

impl Builder<'_> {
    fn desc(&self) -> &PlausibleDescription {
        self.index.description()
    }

    fn node(&self, subject: Subject, op: Op, children: Vec<EvaluationNode>) -> Result<EvaluationNode, ProofError> {
        match self.remaining.get().checked_sub(1) {
            Some(left) => self.remaining.set(left),
            None => {
                return Err(ProofError::TreeTooLarge {
                    max_nodes: self.max_nodes,
                })
            }
        }
        Ok(EvaluationNode::new(subject, op, children))
    }

    fn set(&self, alg: Alg, history: &History, fs: Vec<Formula>) -> Result<EvaluationNode, ProofError> {
        let children = fs
            .iter()
            .map(|f| self.formula(alg, history, f))
            .collect::<Result<Vec<_>, _>>()?;
        self.node(
            Subject::Set {
                alg,
                history: history.clone(),
                formulas: fs,
            },
            Op::Min,
            children,
        )
    }

    fn formula(&self, alg: Alg, history: &History, f: &Formula) -> Result<EvaluationNode, ProofError> {
        let subject = Subject::Formula {
            alg,
            history: history.clone(),
            formula: f.clone(),
        };
        if self.index.axioms_entail(f)? {
            return self.node(subject, Op::Min, Vec::new());
        }
        let mut children = Vec::new();
        if alg != Alg::Phi {
            for &r in self.index.strict_defeasible_supporters(f)?.iter() {
                let id = &self.desc().rule(r).id;
                if !history.contains(alg, id) {
                    children.push(self.evidence_for(alg, history, f, r)?);
                }
            }
        }
        self.node(subject, Op::Max, children)
    }

    fn evidence_for(&self, alg: Alg, history: &History, f: &Formula, r: usize) -> Result<EvaluationNode, ProofError> {
        let rule = self.desc().rule(r);
        let mut children = vec![self.set(
            alg,
            &history.extended(alg, rule.id.clone()),
            rule.antecedents.iter().cloned().collect(),
        )?];
        for s in self.index.foes(alg, f, r)? {
            children.push(self.defeat(alg, history, f, r, s)?);
        }
        self.node(
            Subject::For {
                alg,
                history: history.clone(),
                formula: f.clone(),
                rule: rule.id.clone(),
            },
            Op::Min,
            children,
        )
    }

    fn defeat(
        &self,
        alg: Alg,
        history: &History,
        f: &Formula,
        r: usize,
        s: usize,
    ) -> Result<EvaluationNode, ProofError> {
        let desc = self.desc();
        let mut children = Vec::new();
        for t in self.index.superior_supporters(f, s)? {
            let team = desc.rule(t);
            if !history.contains(alg, &team.id) {
                children.push(self.set(
                    alg,
                    &history.extended(alg, team.id.clone()),
                    team.antecedents.iter().cloned().collect(),
                )?);
            }
        }
        let co = alg.co();
        let foe = desc.rule(s);
        if !history.contains(co, &foe.id) {
            let h = history.extended(co, foe.id.clone());
            let formulas: Vec<Formula> = foe.antecedents.iter().cloned().collect();
            let inner = self.set(co, &h, formulas.clone())?;
            children.push(self.node(
                Subject::NegatedSet {
                    alg: co,
                    history: h,
                    formulas,
                },
                Op::Minus,
                vec![inner],
            )?);
        }
        self.node(
            Subject::Defeat {
                alg,
                history: history.clone(),
                formula: f.clone(),
                rule: desc.rule(r).id.clone(),
                foe: foe.id.clone(),
            },
            Op::Max,
            children,
        )
    }
}

/// Builds `T[α,H,x]` within [`DEFAULT_MAX_NODES`].
pub fn evaluation_tree(
    desc: &PlausibleDescription,
    alg: Alg,
    history: &History,
    goal: &Goal,
) -> Result<EvaluationNode, ProofError> {
    evaluation_tree_bounded(desc, alg, history, goal, DEFAULT_MAX_NODES)
}

/// Builds `T[α,H,x]`, failing with [`ProofError::TreeTooLarge`] beyond `max_nodes` nodes.
/// Full trees are not memoized and can be exponential in the number of rules.
pub fn evaluation_tree_bounded(
    desc: &PlausibleDescription,
    alg: Alg,
    history: &History,
    goal: &Goal,
    max_nodes: usize,
) -> Result<EvaluationNode, ProofError> {
    validate_history(desc, alg, history)?;
    let b = Builder {
        index: RuleIndex::new(desc),
        remaining: Cell::new(max_nodes),
        max_nodes,
    };
    match goal {
        Goal::Formula(f) => b.formula(alg, history, f),
        Goal::Set(fs) => b.set(alg, history, fs.clone()),
    }
}
