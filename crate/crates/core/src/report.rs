//! Structured pass/fail records for theorem checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{rational_serde, Rational};

/// Identifier of a checkable statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    #[serde(rename = "whitney")]
    Whitney,
    #[serde(rename = "thm_1_1")]
    Thm1_1,
    #[serde(rename = "thm_1_2")]
    Thm1_2,
    #[serde(rename = "thm_3_2")]
    Thm3_2,
    #[serde(rename = "thm_1_4")]
    Thm1_4,
    #[serde(rename = "thm_1_5")]
    Thm1_5,
    #[serde(rename = "thm_1_6")]
    Thm1_6,
    #[serde(rename = "cor_1_3")]
    Cor1_3,
    #[serde(rename = "lemma_2_4")]
    Lemma2_4,
    #[serde(rename = "lemma_4_1")]
    Lemma4_1,
}

impl CheckId {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Whitney => "whitney",
            CheckId::Thm1_1 => "thm_1_1",
            CheckId::Thm1_2 => "thm_1_2",
            CheckId::Thm3_2 => "thm_3_2",
            CheckId::Thm1_4 => "thm_1_4",
            CheckId::Thm1_5 => "thm_1_5",
            CheckId::Thm1_6 => "thm_1_6",
            CheckId::Cor1_3 => "cor_1_3",
            CheckId::Lemma2_4 => "lemma_2_4",
            CheckId::Lemma4_1 => "lemma_4_1",
        }
    }

    /// Per-graph checks, in suite order. Excludes `thm_1_6`, which interprets
    /// marked vertices rather than an arbitrary graph.
    pub fn per_graph() -> &'static [CheckId] {
        &[
            CheckId::Whitney,
            CheckId::Thm1_1,
            CheckId::Thm1_2,
            CheckId::Thm3_2,
            CheckId::Thm1_4,
            CheckId::Thm1_5,
            CheckId::Cor1_3,
            CheckId::Lemma2_4,
            CheckId::Lemma4_1,
        ]
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let all = [
            CheckId::Whitney,
            CheckId::Thm1_1,
            CheckId::Thm1_2,
            CheckId::Thm3_2,
            CheckId::Thm1_4,
            CheckId::Thm1_5,
            CheckId::Thm1_6,
            CheckId::Cor1_3,
            CheckId::Lemma2_4,
            CheckId::Lemma4_1,
        ];
        all.into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown check id: {s}"))
    }
}

/// The asserted relation between `lhs` and `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "ge")]
    Ge,
    #[serde(rename = "eq")]
    Eq,
}

/// Outcome of one theorem check on one instance. Reports are
/// self-certifying: the witnesses carry enough values to recompute
/// `lhs` and `rhs` from scratch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub id: CheckId,
    pub graph: String,
    pub hypotheses_met: bool,
    pub vacuous: bool,
    #[serde(with = "rational_serde")]
    pub lhs: Rational,
    #[serde(with = "rational_serde")]
    pub rhs: Rational,
    /// `lhs - rhs`.
    #[serde(with = "rational_serde")]
    pub margin: Rational,
    pub relation: Relation,
    pub pass: bool,
    pub witnesses: BTreeMap<String, String>,
}

impl TheoremReport {
    /// A report whose hypotheses hold; `pass` is derived from the relation.
    pub fn checked(
        id: CheckId,
        graph: impl Into<String>,
        relation: Relation,
        lhs: Rational,
        rhs: Rational,
        witnesses: BTreeMap<String, String>,
    ) -> Self {
        let margin = &lhs - &rhs;
        let pass = match relation {
            Relation::Ge => !margin.is_negative(),
            Relation::Eq => margin.is_zero(),
        };
        TheoremReport {
            id,
            graph: graph.into(),
            hypotheses_met: true,
            vacuous: false,
            lhs,
            rhs,
            margin,
            relation,
            pass,
            witnesses,
        }
    }

    /// A vacuous pass: the statement's hypotheses do not hold here.
    pub fn vacuous(id: CheckId, graph: impl Into<String>, reason: impl Into<String>) -> Self {
        let mut witnesses = BTreeMap::new();
        witnesses.insert("vacuous_reason".to_string(), reason.into());
        TheoremReport {
            id,
            graph: graph.into(),
            hypotheses_met: false,
            vacuous: true,
            lhs: Rational::zero(),
            rhs: Rational::zero(),
            margin: Rational::zero(),
            relation: Relation::Ge,
            pass: true,
            witnesses,
        }
    }

    /// Records an additional required condition; a failed side condition
    /// fails the whole report.
    pub fn require(mut self, condition: bool, note: &str) -> Self {
        if !condition {
            self.pass = false;
            self.witnesses
                .insert("failed_condition".to_string(), note.to_string());
        }
        self
    }

    pub fn with_witness(mut self, key: &str, value: impl ToString) -> Self {
        self.witnesses.insert(key.to_string(), value.to_string());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn pass_follows_relation() {
        let r = TheoremReport::checked(
            CheckId::Whitney,
            "g",
            Relation::Ge,
            rat(3),
            rat(2),
            BTreeMap::new(),
        );
        assert!(r.pass && r.margin == rat(1));
        let r = TheoremReport::checked(
            CheckId::Thm1_4,
            "g",
            Relation::Eq,
            rat(3),
            rat(2),
            BTreeMap::new(),
        );
        assert!(!r.pass);
        let r = TheoremReport::vacuous(CheckId::Thm1_4, "g", "not positively curved");
        assert!(r.pass && r.vacuous && !r.hypotheses_met);
    }

    #[test]
    fn check_id_round_trips() {
        for id in [
            CheckId::Whitney,
            CheckId::Thm1_5,
            CheckId::Lemma4_1,
            CheckId::Cor1_3,
        ] {
            assert_eq!(id.as_str().parse::<CheckId>().unwrap(), id);
        }
        assert!("thm_9_9".parse::<CheckId>().is_err());
    }
}
