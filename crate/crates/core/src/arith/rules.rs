//! Catalog of every rule the evaluator can fire, plus the trace type.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleSource {
    /// Zero rules of 628 CE.
    Brahmagupta,
    /// Fortune (positive) / debt (negative) sign rules of 628 CE.
    FortuneDebt,
    /// Zero and khahara rules of 1150 CE.
    Bhaskara,
    /// Ordinary exact rational arithmetic, shared by all rule sets.
    Exact,
    /// Modern refusals.
    Modern,
    /// Devices this library adds to make the historical rules computable.
    Interpretation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Rule {
    pub id: &'static str,
    pub source: RuleSource,
    pub statement: &'static str,
}

macro_rules! catalog {
    ($($id:literal, $src:ident, $stmt:literal;)*) => {
        pub const CATALOG: &[Rule] = &[
            $(Rule { id: $id, source: RuleSource::$src, statement: $stmt },)*
        ];
    };
}

catalog! {
    "BG-i", Brahmagupta, "a + 0 = a";
    "BG-ii", Brahmagupta, "a − 0 = a";
    "BG-iii", Brahmagupta, "a × 0 = 0";
    "BG-iv", Brahmagupta, "a ÷ 0 = a/0, left unresolved";
    "BG-v", Brahmagupta, "0 ÷ 0 = 0";
    "BG-zero", Brahmagupta, "0 = a − a";
    "DF-1", FortuneDebt, "debt − 0 = debt";
    "DF-2", FortuneDebt, "fortune − 0 = fortune";
    "DF-3", FortuneDebt, "0 − 0 = 0";
    "DF-4", FortuneDebt, "0 − debt = fortune";
    "DF-5", FortuneDebt, "0 − fortune = debt";
    "DF-6", FortuneDebt, "0 × debt = 0 × fortune = 0";
    "DF-7", FortuneDebt, "0 × 0 = 0";
    "DF-8", FortuneDebt, "fortune × fortune, fortune ÷ fortune → fortune";
    "DF-9", FortuneDebt, "debt × debt, debt ÷ debt → fortune";
    "DF-10", FortuneDebt, "debt × fortune, debt ÷ fortune → debt";
    "DF-11", FortuneDebt, "fortune × debt, fortune ÷ debt → debt";
    "BH-i", Bhaskara, "a ± 0 = a";
    "BH-ii", Bhaskara, "0² = 0";
    "BH-iii", Bhaskara, "√0 = 0";
    "BH-iv", Bhaskara, "0³ = 0";
    "BH-v", Bhaskara, "∛0 = 0";
    "BH-vi", Bhaskara, "a ÷ 0 = khahara (∞)";
    "BH-vii", Bhaskara, "a × 0 = 0, with the factor a kept pending";
    "BH-viii", Bhaskara, "(a × 0) ÷ 0 = a";
    "BH-khahara", Bhaskara, "khahara ± a = khahara";
    "BH-defer", Interpretation, "pending a × 0 carried through × and ÷ by non-zero";
    "BH-collapse", Interpretation, "pending a × 0 taken as plain 0";
    "EXACT-add", Exact, "exact rational addition";
    "EXACT-sub", Exact, "exact rational subtraction";
    "EXACT-mul", Exact, "exact rational multiplication";
    "EXACT-div", Exact, "exact rational division by a non-zero divisor";
    "EXACT-neg", Exact, "negation";
    "EXACT-pow", Exact, "exact square or cube";
    "EXACT-root", Exact, "exact square or cube root of a perfect power";
    "MOD-div0", Modern, "division by zero is undefined";
    "MOD-extended", Modern, "khahara, unresolved and pending values are not numbers";
    "SRC-undefined", Modern, "the selected rule set states no rule for this operation";
}

pub fn lookup(id: &str) -> Option<&'static Rule> {
    CATALOG.iter().find(|r| r.id == id)
}

/// A place where the printed source disagrees with what the library uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    pub printed: &'static str,
    pub used: &'static str,
    pub note: &'static str,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        id: "BH-i",
        printed: "a ± 0 = 0",
        used: "a ± 0 = a",
        note: "printed form contradicts BH-vii/BH-viii and BG-i/BG-ii",
    },
    Erratum {
        id: "LIMIT-1/.00001",
        printed: "1/.00001 = 10000",
        used: "1/.00001 = 100000",
        note: "exact rational division",
    },
    Erratum {
        id: "LIMIT-1/.0000000001",
        printed: "1/.0000000001 = 1000000000",
        used: "1/.0000000001 = 10000000000",
        note: "exact rational division",
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleFiring {
    pub rule_id: &'static str,
    pub description: String,
}

/// Rules fired during an evaluation, in firing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RuleTrace(Vec<RuleFiring>);

impl RuleTrace {
    pub fn new() -> Self {
        RuleTrace(Vec::new())
    }

    pub fn push(&mut self, rule_id: &'static str, description: impl Into<String>) {
        debug_assert!(lookup(rule_id).is_some(), "rule {rule_id} missing from catalog");
        self.0.push(RuleFiring { rule_id, description: description.into() });
    }

    pub fn extend(&mut self, other: RuleTrace) {
        self.0.extend(other.0);
    }

    pub fn firings(&self) -> &[RuleFiring] {
        &self.0
    }

    pub fn ids(&self) -> Vec<&'static str> {
        self.0.iter().map(|f| f.rule_id).collect()
    }

    pub fn contains(&self, rule_id: &str) -> bool {
        self.0.iter().any(|f| f.rule_id == rule_id)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for RuleTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for firing in &self.0 {
            writeln!(f, "{}\t{}", firing.rule_id, firing.description)?;
        }
        Ok(())
    }
}
