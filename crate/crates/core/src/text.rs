//! Text formats: formulas and knowledge-base files.
//!
//! Formulas: atoms `[A-Za-z_][A-Za-z0-9_]*`, negation `~f`, conjunction
//! `and{f1, f2, ...}` and disjunction `or{f1, f2, ...}`. `or{}` is the falsum
//! and `and{}` the verum.
//!
//! Knowledge bases are line oriented, with `#` starting a comment:
//!
//! ```text
//! fact: or{s1, s2}
//! rule r1: {a, ~b} => c      # defeasible
//! rule w1: {a} ~> ~c         # warning
//! prio: r1 > w1
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::description::{Arrow, PlausibleDescription, Rule, RuleId, RSE_ID};
use crate::error::DescriptionError;
use crate::formula::Formula;
use crate::semantics::AtomLimit;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticCode {
    Syntax,
    DuplicateRuleId,
    UnknownRuleId,
    ReservedRuleId,
    StrictRule,
    CyclicPriority,
    PriorityOverRse,
    AtomLimit,
}

impl DiagnosticCode {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticCode::Syntax => "syntax",
            DiagnosticCode::DuplicateRuleId => "duplicate-rule-id",
            DiagnosticCode::UnknownRuleId => "unknown-rule-id",
            DiagnosticCode::ReservedRuleId => "reserved-rule-id",
            DiagnosticCode::StrictRule => "strict-rule",
            DiagnosticCode::CyclicPriority => "cyclic-priority",
            DiagnosticCode::PriorityOverRse => "priority-over-rse",
            DiagnosticCode::AtomLimit => "atom-limit",
        }
    }
}

/// A located problem in a knowledge base or formula. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub code: DiagnosticCode,
}

impl Diagnostic {
    fn error(pos: Pos, code: DiagnosticCode, message: impl Into<String>) -> Self {
        Diagnostic {
            severity: Severity::Error,
            line: pos.line,
            column: pos.column,
            message: message.into(),
            code,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(
            f,
            "{}:{}: {sev}[{}]: {}",
            self.line,
            self.column,
            self.code.as_str(),
            self.message
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

struct Cursor<'a> {
    chars: Vec<char>,
    at: usize,
    line: usize,
    _src: &'a str,
}

type Parse<T> = Result<T, Diagnostic>;

impl<'a> Cursor<'a> {
    fn new(src: &'a str, line: usize) -> Self {
        Cursor {
            chars: src.chars().collect(),
            at: 0,
            line,
            _src: src,
        }
    }

    fn pos(&self) -> Pos {
        Pos {
            line: self.line,
            column: self.at + 1,
        }
    }

    fn syntax(&self, message: impl Into<String>) -> Diagnostic {
        Diagnostic::error(self.pos(), DiagnosticCode::Syntax, message)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.at += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.at >= self.chars.len()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Parse<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{c}`{}", self.found())))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        if self.chars.len() >= self.at + n && self.chars[self.at..self.at + n].iter().copied().eq(s.chars()) {
            self.at += n;
            true
        } else {
            false
        }
    }

    fn found(&self) -> String {
        match self.peek() {
            Some(c) => format!(", found `{c}`"),
            None => ", found end of input".to_string(),
        }
    }

    /// Identifier without consuming trailing whitespace.
    fn ident(&mut self) -> Parse<(String, Pos)> {
        self.skip_ws();
        let start = self.pos();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return Err(self.syntax(format!("expected an identifier{}", self.found()))),
        }
        let begin = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.at += 1;
        }
        Ok((self.chars[begin..self.at].iter().collect(), start))
    }

    fn formula(&mut self) -> Parse<Formula> {
        self.skip_ws();
        if self.eat('~') {
            return Ok(Formula::negation(self.formula()?));
        }
        let (name, _) = self.ident()?;
        let save = self.at;
        if (name == "and" || name == "or") && self.eat('{') {
            let members = self.formula_list('}')?;
            return Ok(if name == "and" {
                Formula::Conj(members)
            } else {
                Formula::Disj(members)
            });
        }
        self.at = save;
        Ok(Formula::atom(&name))
    }

    /// Comma separated formulas up to `close`; the opening brace is already consumed.
    fn formula_list(&mut self, close: char) -> Parse<BTreeSet<Formula>> {
        let mut out = BTreeSet::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.insert(self.formula()?);
            if self.eat(close) {
                return Ok(out);
            }
            if !self.eat(',') {
                return Err(self.syntax(format!("expected `,` or `{close}`{}", self.found())));
            }
        }
    }

    fn end(&mut self) -> Parse<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.syntax(format!("unexpected trailing input{}", self.found())))
        }
    }
}

/// Parses a single formula.
pub fn parse_formula(text: &str) -> Result<Formula, Diagnostic> {
    let mut c = Cursor::new(text, 1);
    let f = c.formula()?;
    c.end()?;
    Ok(f)
}

/// Parsed knowledge base: facts, user rules and priority pairs in file order.
#[derive(Debug, Clone, Default)]
pub struct KnowledgeBase {
    pub facts: Vec<Formula>,
    pub rules: Vec<Rule>,
    pub priority: Vec<(RuleId, RuleId)>,
    rule_pos: Vec<Pos>,
    priority_pos: Vec<(Pos, Pos)>,
}

impl PartialEq for KnowledgeBase {
    fn eq(&self, other: &Self) -> bool {
        self.facts == other.facts && self.rules == other.rules && self.priority == other.priority
    }
}

impl Eq for KnowledgeBase {}

enum Line {
    Fact(Formula),
    Rule(Rule, Pos),
    Prio((RuleId, Pos), (RuleId, Pos)),
}

fn parse_line(c: &mut Cursor<'_>) -> Parse<Option<Line>> {
    if c.at_end() {
        return Ok(None);
    }
    let (head, head_pos) = c.ident()?;
    let line = match head.as_str() {
        "fact" => {
            c.expect(':')?;
            Line::Fact(c.formula()?)
        }
        "rule" => {
            let (id, id_pos) = c.ident()?;
            c.expect(':')?;
            c.expect('{')?;
            let antecedents = c.formula_list('}')?;
            let arrow_pos = {
                c.skip_ws();
                c.pos()
            };
            let arrow = if c.eat_str("=>") {
                Arrow::Defeasible
            } else if c.eat_str("~>") {
                Arrow::Warning
            } else if c.eat_str("->") {
                return Err(Diagnostic::error(
                    arrow_pos,
                    DiagnosticCode::StrictRule,
                    format!("rule {id}: strict rules are derived from facts; state the fact instead"),
                ));
            } else {
                return Err(c.syntax(format!("expected `=>` or `~>`{}", c.found())));
            };
            let consequent = c.formula()?;
            Line::Rule(
                Rule {
                    id: RuleId::new(&id),
                    antecedents,
                    arrow,
                    consequent,
                },
                id_pos,
            )
        }
        "prio" => {
            c.expect(':')?;
            let (sup, sup_pos) = c.ident()?;
            c.expect('>')?;
            let (inf, inf_pos) = c.ident()?;
            Line::Prio((RuleId::new(&sup), sup_pos), (RuleId::new(&inf), inf_pos))
        }
        other => {
            return Err(Diagnostic::error(
                head_pos,
                DiagnosticCode::Syntax,
                format!("expected `fact:`, `rule <id>:` or `prio:`, found `{other}`"),
            ))
        }
    };
    c.end()?;
    Ok(Some(line))
}

/// Parses a knowledge-base file, collecting every diagnostic.
pub fn parse_kb(text: &str) -> Result<KnowledgeBase, Vec<Diagnostic>> {
    let mut kb = KnowledgeBase::default();
    let mut diags = Vec::new();
    let mut defined: HashMap<RuleId, Pos> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut c = Cursor::new(content, i + 1);
        match parse_line(&mut c) {
            Ok(None) => {}
            Ok(Some(Line::Fact(f))) => kb.facts.push(f),
            Ok(Some(Line::Rule(rule, pos))) => {
                if rule.id.is_reserved() {
                    diags.push(Diagnostic::error(
                        pos,
                        DiagnosticCode::ReservedRuleId,
                        format!("rule id {} is reserved for derived strict rules", rule.id),
                    ));
                } else if let Some(first) = defined.get(&rule.id) {
                    diags.push(Diagnostic::error(
                        pos,
                        DiagnosticCode::DuplicateRuleId,
                        format!("rule id {} already defined on line {}", rule.id, first.line),
                    ));
                } else {
                    defined.insert(rule.id.clone(), pos);
                    kb.rules.push(rule);
                    kb.rule_pos.push(pos);
                }
            }
            Ok(Some(Line::Prio((sup, sp), (inf, ip)))) => {
                kb.priority.push((sup, inf));
                kb.priority_pos.push((sp, ip));
            }
            Err(d) => diags.push(d),
        }
    }

    for ((sup, inf), (sp, ip)) in kb.priority.iter().zip(&kb.priority_pos) {
        for (id, pos) in [(sup, sp), (inf, ip)] {
            if id.as_str() != RSE_ID && !defined.contains_key(id) {
                diags.push(Diagnostic::error(
                    *pos,
                    DiagnosticCode::UnknownRuleId,
                    format!("priority names undefined rule {id}"),
                ));
            }
        }
    }

    if diags.is_empty() {
        Ok(kb)
    } else {
        diags.sort_by_key(|d| (d.line, d.column));
        Err(diags)
    }
}

impl KnowledgeBase {
    /// Builds the plausible description, reporting validation failures at
    /// the line that caused them.
    pub fn describe(&self, limit: AtomLimit) -> Result<PlausibleDescription, Vec<Diagnostic>> {
        PlausibleDescription::build(self.facts.clone(), self.rules.clone(), self.priority.clone(), limit)
            .map_err(|e| vec![self.locate(e)])
    }

    fn prio_pos(&self, pred: impl Fn(&RuleId, &RuleId) -> bool) -> Option<(Pos, Pos)> {
        self.priority
            .iter()
            .zip(&self.priority_pos)
            .find(|((s, i), _)| pred(s, i))
            .map(|(_, p)| *p)
    }

    fn rule_pos(&self, id: &RuleId) -> Pos {
        self.rules
            .iter()
            .zip(&self.rule_pos)
            .find(|(r, _)| &r.id == id)
            .map(|(_, p)| *p)
            .unwrap_or(Pos { line: 1, column: 1 })
    }

    fn locate(&self, e: DescriptionError) -> Diagnostic {
        let top = Pos { line: 1, column: 1 };
        let message = e.to_string();
        match &e {
            DescriptionError::CyclicPriority { cycle } => {
                let next = cycle.get(1).unwrap_or(&cycle[0]);
                let pos = self.prio_pos(|s, i| s == &cycle[0] && i == next).map_or(top, |p| p.0);
                Diagnostic::error(pos, DiagnosticCode::CyclicPriority, message)
            }
            DescriptionError::PriorityOverRse { superior } => {
                let pos = self
                    .prio_pos(|s, i| s == superior && i.as_str() == RSE_ID)
                    .map_or(top, |p| p.1);
                Diagnostic::error(pos, DiagnosticCode::PriorityOverRse, message)
            }
            DescriptionError::UnknownRuleId { id } => {
                let pos = self.prio_pos(|s, i| s == id || i == id).map_or(top, |(sp, ip)| {
                    if self.priority.iter().any(|(s, _)| s == id) {
                        sp
                    } else {
                        ip
                    }
                });
                Diagnostic::error(pos, DiagnosticCode::UnknownRuleId, message)
            }
            DescriptionError::DuplicateRuleId { id } => {
                Diagnostic::error(self.rule_pos(id), DiagnosticCode::DuplicateRuleId, message)
            }
            DescriptionError::ReservedRuleId { id } => {
                Diagnostic::error(self.rule_pos(id), DiagnosticCode::ReservedRuleId, message)
            }
            DescriptionError::StrictRuleSupplied { id } => {
                Diagnostic::error(self.rule_pos(id), DiagnosticCode::StrictRule, message)
            }
            DescriptionError::NonContingentClause { .. } | DescriptionError::AtomLimit(_) => {
                Diagnostic::error(top, DiagnosticCode::AtomLimit, message)
            }
        }
    }

    /// Renders the knowledge base in canonical text form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in &self.facts {
            out.push_str(&format!("fact: {f}\n"));
        }
        for r in &self.rules {
            out.push_str(&format!("rule {r}\n"));
        }
        for (s, i) in &self.priority {
            out.push_str(&format!("prio: {s} > {i}\n"));
        }
        out
    }
}

impl fmt::Display for KnowledgeBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas() {
        assert_eq!(parse_formula("a").unwrap(), Formula::atom("a"));
        assert_eq!(parse_formula(" ~ ~a ").unwrap(), Formula::atom("a").negated().negated());
        assert_eq!(parse_formula("or{}").unwrap(), Formula::falsum());
        assert_eq!(parse_formula("and{ }").unwrap(), Formula::verum());
        let f = parse_formula("and{~s1, or{s2, s_3}}").unwrap();
        assert_eq!(f.to_string(), "and{~s1, or{s2, s_3}}");
        assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
        // a bare `and` is an atom
        assert_eq!(parse_formula("and").unwrap(), Formula::atom("and"));
    }

    #[test]
    fn formula_errors_are_located() {
        let d = parse_formula("or{a, }").unwrap_err();
        assert_eq!((d.line, d.column, d.code), (1, 7, DiagnosticCode::Syntax));
        let d = parse_formula("a b").unwrap_err();
        assert_eq!(d.column, 3);
        assert!(parse_formula("1a").is_err());
        assert!(parse_formula("or{a").is_err());
    }

    const AMBIGUITY: &str = "\
# ambiguity puzzle
rule ra: {} => a
rule rna: {} => ~a
rule rb: {} => b
rule ranb: {a} => ~b
";

    #[test]
    fn ambiguity_kb() {
        let kb = parse_kb(AMBIGUITY).unwrap();
        assert!(kb.facts.is_empty());
        assert_eq!(kb.rules.len(), 4);
        assert!(kb.rules.iter().all(|r| r.arrow == Arrow::Defeasible));
        assert!(kb.priority.is_empty());
    }

    #[test]
    fn empty_file() {
        let kb = parse_kb("").unwrap();
        assert!(kb.facts.is_empty() && kb.rules.is_empty() && kb.priority.is_empty());
        assert!(parse_kb("# nothing\n\n   \n").unwrap().rules.is_empty());
    }

    #[test]
    fn unknown_priority_target() {
        let text = "rule r9: {} => a\nprio: r9 > rX\n";
        let diags = parse_kb(text).unwrap_err();
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].code, DiagnosticCode::UnknownRuleId);
        assert_eq!((diags[0].line, diags[0].column), (2, 12));
    }

    #[test]
    fn duplicate_and_reserved_ids() {
        let diags = parse_kb("rule x: {} => a\nrule x: {} => b\nrule rse: {} => c\n").unwrap_err();
        let codes: Vec<_> = diags.iter().map(|d| d.code).collect();
        assert_eq!(
            codes,
            vec![DiagnosticCode::DuplicateRuleId, DiagnosticCode::ReservedRuleId]
        );
        assert_eq!(diags[0].line, 2);
    }

    #[test]
    fn strict_rules_rejected() {
        let diags = parse_kb("rule s: {a} -> b\n").unwrap_err();
        assert_eq!(diags[0].code, DiagnosticCode::StrictRule);
        assert_eq!(diags[0].column, 13);
    }

    #[test]
    fn syntax_errors_collected_per_line() {
        let diags = parse_kb("fact a\nbogus: x\nrule r: {a} => \nfact: a # fine\n").unwrap_err();
        assert_eq!(diags.iter().map(|d| d.line).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(diags.iter().all(|d| d.code == DiagnosticCode::Syntax));
    }

    #[test]
    fn validation_errors_are_located() {
        let text = "rule x: {} => a\nrule y: {} => b\nprio: x > y\nprio: y > x\n";
        let kb = parse_kb(text).unwrap();
        let d = &kb.describe(AtomLimit::default()).unwrap_err()[0];
        assert_eq!(d.code, DiagnosticCode::CyclicPriority);
        assert!(d.line == 3 || d.line == 4);

        let kb = parse_kb("fact: a\nrule x: {} => b\nprio: x > rse\n").unwrap();
        let d = &kb.describe(AtomLimit::default()).unwrap_err()[0];
        assert_eq!((d.code, d.line, d.column), (DiagnosticCode::PriorityOverRse, 3, 11));

        let kb = parse_kb("rule x: {} => b\nprio: rse > x\n").unwrap();
        let d = &kb.describe(AtomLimit::default()).unwrap_err()[0];
        assert_eq!((d.code, d.line, d.column), (DiagnosticCode::UnknownRuleId, 2, 7));
    }

    #[test]
    fn serialization_round_trip() {
        let text = "fact: or{s1, s2}\nrule w: {a, ~b} ~> ~c\nrule r: {} => c # note\nprio: r > w\n";
        let kb = parse_kb(text).unwrap();
        let again = parse_kb(&kb.to_text()).unwrap();
        assert_eq!(kb, again);
        assert_eq!(kb.to_text(), again.to_text());
    }
}
