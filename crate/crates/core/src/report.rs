//! Structured outcomes of the verifiers.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::rational::{decimal, exact_sqrt, to_f64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Equality,
    Fails,
    NotApplicable,
}

impl Status {
    pub fn is_failure(self) -> bool {
        self == Status::Fails
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Equality => "equality",
            Status::Fails => "fails",
            Status::NotApplicable => "not-applicable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exact side of an inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Rational(Rational),
    /// `Σ √a_i` over the listed non-negative radicands.
    SqrtSum(Vec<Rational>),
}

impl Value {
    pub fn approx(&self) -> f64 {
        match self {
            Value::Rational(r) => to_f64(r),
            Value::SqrtSum(terms) => terms.iter().map(|t| to_f64(t).sqrt()).sum(),
        }
    }

    pub fn is_rational(&self) -> bool {
        match self {
            Value::Rational(_) => true,
            Value::SqrtSum(terms) => terms.iter().all(|t| exact_sqrt(t).is_some()),
        }
    }
}

impl From<Rational> for Value {
    fn from(value: Rational) -> Self {
        Value::Rational(value)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rational(r) => write!(f, "{r}"),
            Value::SqrtSum(terms) => {
                let parts: Vec<String> = terms
                    .iter()
                    .map(|t| match exact_sqrt(t) {
                        Some(root) => root.to_string(),
                        None => format!("sqrt({t})"),
                    })
                    .collect();
                f.write_str(&parts.join(" + "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub statement: String,
    pub status: Status,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    /// How `lhs` actually compares with `rhs`.
    pub relation: Option<Ordering>,
    pub witnesses: Vec<String>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    /// Report for a claim of the form `lhs >= rhs` (or `lhs > rhs` when
    /// `strict`), given the exact comparison.
    pub fn compare(
        statement: &str,
        lhs: Value,
        rhs: Value,
        relation: Ordering,
        strict: bool,
    ) -> Self {
        let status = match relation {
            Ordering::Greater => Status::Holds,
            Ordering::Equal if strict => Status::Fails,
            Ordering::Equal => Status::Equality,
            Ordering::Less => Status::Fails,
        };
        VerifyReport {
            statement: statement.to_string(),
            status,
            lhs: Some(lhs),
            rhs: Some(rhs),
            relation: Some(relation),
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn not_applicable(statement: &str, reason: impl Into<String>) -> Self {
        VerifyReport {
            statement: statement.to_string(),
            status: Status::NotApplicable,
            lhs: None,
            rhs: None,
            relation: None,
            witnesses: Vec::new(),
            notes: vec![reason.into()],
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witnesses.push(witness.into());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// The structured document form.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Record<'a> {
            statement: &'a str,
            status: Status,
            lhs: Option<String>,
            rhs: Option<String>,
            relation: Option<&'static str>,
            witnesses: &'a [String],
            #[serde(skip_serializing_if = "<[String]>::is_empty")]
            notes: &'a [String],
        }
        serde_json::to_value(Record {
            statement: &self.statement,
            status: self.status,
            lhs: self.lhs.as_ref().map(ToString::to_string),
            rhs: self.rhs.as_ref().map(ToString::to_string),
            relation: self.relation.map(relation_symbol),
            witnesses: &self.witnesses,
            notes: &self.notes,
        })
        .expect("report serializes")
    }
}

fn relation_symbol(relation: Ordering) -> &'static str {
    match relation {
        Ordering::Greater => ">",
        Ordering::Equal => "=",
        Ordering::Less => "<",
    }
}

/// One line: `holds: 8 > 4`, with a decimal annotation when a side is
/// irrational.
impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.status)?;
        if let (Some(lhs), Some(rhs), Some(rel)) = (&self.lhs, &self.rhs, self.relation) {
            let symbol = relation_symbol(rel);
            write!(f, " {lhs} {symbol} {rhs}")?;
            if !lhs.is_rational() || !rhs.is_rational() {
                write!(
                    f,
                    " [{} {symbol} {}]",
                    decimal(lhs.approx()),
                    decimal(rhs.approx())
                )?;
            }
        }
        if !self.witnesses.is_empty() {
            write!(f, " witness: {}", self.witnesses.join(", "))?;
        }
        if !self.notes.is_empty() {
            write!(f, " ({})", self.notes.join("; "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn line_format() {
        let r = VerifyReport::compare(
            "thm3",
            int(8).into(),
            int(4).into(),
            Ordering::Greater,
            true,
        );
        assert_eq!(r.to_string(), "holds: 8 > 4");
        let r = VerifyReport::compare(
            "prop-length",
            Value::SqrtSum(vec![int(28), int(28)]),
            Value::SqrtSum(vec![int(64)]),
            Ordering::Greater,
            true,
        );
        assert_eq!(
            r.to_string(),
            "holds: sqrt(28) + sqrt(28) > 8 [10.5830052443 > 8.00000000000]"
        );
    }

    #[test]
    fn strict_equality_fails() {
        let r = VerifyReport::compare("x", int(1).into(), int(1).into(), Ordering::Equal, true);
        assert_eq!(r.status, Status::Fails);
        let r = VerifyReport::compare("x", int(1).into(), int(1).into(), Ordering::Equal, false);
        assert_eq!(r.status, Status::Equality);
    }

    #[test]
    fn json_record() {
        let r = VerifyReport::compare("cor-ubdiam", int(8).into(), int(8).into(), Ordering::Equal, false)
            .with_witness("4/1");
        let json = r.to_json();
        assert_eq!(json["status"], "equality");
        assert_eq!(json["lhs"], "8");
        assert_eq!(json["witnesses"][0], "4/1");
        assert!(json.get("notes").is_none());
    }
}
