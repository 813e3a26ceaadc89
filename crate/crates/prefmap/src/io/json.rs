//! JSON forms of every object, tagged by a `"kind"` field.
//!
//! ```json
//! {"kind":"ranking","labels":["x1","x2"],"groups":[[0],[1]]}
//! {"kind":"pm","labels":["x1","x2"],"entries":[[1],[2]]}
//! {"kind":"cs","labels":["x1","x2"],"values":["1","2"]}
//! ```
//!
//! Cook-Seiford values travel as decimal strings, never JSON numbers, so
//! they are exact end to end; a value such as `"2.25"` is rejected with the
//! half-integer violation. Ranking groups hold 0-based roster indices while
//! preference-map entries hold 1-based positions, matching the in-memory
//! types.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cs::CookSeifordVector;
use crate::oracle::BijectionReport;
use crate::pm::PreferenceMap;
use crate::position::{ParsePositionError, Position};
use crate::ranking::{Ranking, RankingError};
use crate::roster::{Roster, RosterError};
use crate::validate::{ValidationReport, Violation, ViolationCode};

/// The document kinds that travel as JSON.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Ranking,
    Pm,
    Cs,
    Validation,
    Check,
}

impl Kind {
    pub const fn as_str(self) -> &'static str {
        match self {
            Kind::Ranking => "ranking",
            Kind::Pm => "pm",
            Kind::Cs => "cs",
            Kind::Validation => "validation",
            Kind::Check => "check",
        }
    }

    fn from_tag(tag: &str) -> Option<Kind> {
        Some(match tag {
            "ranking" => Kind::Ranking,
            "pm" => Kind::Pm,
            "cs" => Kind::Cs,
            "validation" => Kind::Validation,
            "check" => Kind::Check,
            _ => return None,
        })
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A decoded document of any kind.
#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Ranking(Ranking),
    Pm(PreferenceMap),
    Cs(CookSeifordVector),
    Validation(ValidationReport),
    Check(BijectionReport),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Ranking(_) => Kind::Ranking,
            Document::Pm(_) => Kind::Pm,
            Document::Cs(_) => Kind::Cs,
            Document::Validation(_) => Kind::Validation,
            Document::Check(_) => Kind::Check,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecodeError {
    /// The text is not JSON at all.
    #[error("malformed JSON: {0}")]
    Json(String),
    /// The JSON does not have the expected document shape.
    #[error("bad document: {0}")]
    Schema(String),
    /// A well-formed document of a different kind than requested.
    #[error("expected a `{expected}` document, found `{found}`")]
    WrongKind { expected: Kind, found: String },
    /// The labels do not form a roster.
    #[error(transparent)]
    Roster(#[from] RosterError),
    /// The groups do not form an ordered partition of the roster.
    #[error(transparent)]
    Ranking(#[from] RankingError),
    /// The content violates a preference-map or Cook-Seiford invariant.
    #[error("invalid content: {}", summarize(.0))]
    Invalid(ValidationReport),
}

fn summarize(report: &ValidationReport) -> String {
    let codes: Vec<&str> = report
        .violations()
        .iter()
        .map(|v| v.code.as_str())
        .collect();
    format!("{} violation(s): {}", codes.len(), codes.join(", "))
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Doc {
    Ranking {
        labels: Vec<String>,
        groups: Vec<Vec<usize>>,
    },
    Pm {
        labels: Vec<String>,
        entries: Vec<Vec<i64>>,
    },
    Cs {
        labels: Vec<String>,
        values: Vec<String>,
    },
    Validation {
        valid: bool,
        violations: Vec<ViolationDoc>,
    },
    Check {
        n: usize,
        total: u64,
        pm_images_distinct: u64,
        cs_images_distinct: u64,
        roundtrip_failures: u64,
        ok: bool,
    },
}

#[derive(Serialize, Deserialize)]
struct ViolationDoc {
    code: String,
    indices: Vec<usize>,
    message: String,
}

fn to_wire(document: &Document) -> Doc {
    match document {
        Document::Ranking(ranking) => Doc::Ranking {
            labels: ranking.roster().labels().to_vec(),
            groups: ranking.groups().to_vec(),
        },
        Document::Pm(pm) => Doc::Pm {
            labels: pm.roster().labels().to_vec(),
            entries: pm
                .entries()
                .iter()
                .map(|block| block.positions().map(|p| p as i64).collect())
                .collect(),
        },
        Document::Cs(cs) => Doc::Cs {
            labels: cs.roster().labels().to_vec(),
            values: cs.values().iter().map(Position::to_string).collect(),
        },
        Document::Validation(report) => Doc::Validation {
            valid: report.is_valid(),
            violations: report
                .violations()
                .iter()
                .map(|v| ViolationDoc {
                    code: v.code.as_str().to_owned(),
                    indices: v.indices.clone(),
                    message: v.message.clone(),
                })
                .collect(),
        },
        Document::Check(report) => Doc::Check {
            n: report.n,
            total: report.total,
            pm_images_distinct: report.pm_images_distinct,
            cs_images_distinct: report.cs_images_distinct,
            roundtrip_failures: report.roundtrip_failures,
            ok: report.ok(),
        },
    }
}

/// Encodes any document as single-line JSON with a fixed field order, so
/// identical objects produce identical bytes.
pub fn encode_json(document: &Document) -> String {
    serde_json::to_string(&to_wire(document)).expect("wire types always serialize")
}

fn from_wire(doc: Doc) -> Result<Document, DecodeError> {
    match doc {
        Doc::Ranking { labels, groups } => {
            let roster = Roster::new(labels)?;
            Ok(Document::Ranking(Ranking::new(roster, groups)?))
        }
        Doc::Pm { labels, entries } => {
            let roster = Roster::new(labels)?;
            let sets: Vec<BTreeSet<i64>> = entries
                .into_iter()
                .map(|entry| entry.into_iter().collect())
                .collect();
            PreferenceMap::new(roster, &sets)
                .map(Document::Pm)
                .map_err(DecodeError::Invalid)
        }
        Doc::Cs { labels, values } => {
            let roster = Roster::new(labels)?;
            let mut positions = Vec::with_capacity(values.len());
            let mut report = ValidationReport::valid();
            for (i, text) in values.iter().enumerate() {
                match text.parse::<Position>() {
                    Ok(value) => positions.push(value),
                    Err(ParsePositionError::Syntax(_)) => {
                        return Err(DecodeError::Schema(format!(
                            "value `{text}` at index {i} is not a decimal literal"
                        )));
                    }
                    Err(ParsePositionError::NotHalfInteger(_)) => {
                        report.push(
                            ViolationCode::CsNotHalfInteger,
                            vec![i],
                            format!("value `{text}` at index {i} is not an integer or half-integer"),
                        );
                    }
                    Err(ParsePositionError::OutOfRange(_)) => {
                        report.push(
                            ViolationCode::CsOutOfRange,
                            vec![i],
                            format!("value `{text}` at index {i} is out of range"),
                        );
                    }
                }
            }
            if !report.is_valid() {
                return Err(DecodeError::Invalid(report));
            }
            CookSeifordVector::new(roster, positions)
                .map(Document::Cs)
                .map_err(DecodeError::Invalid)
        }
        Doc::Validation { valid, violations } => {
            let violations: Vec<Violation> = violations
                .into_iter()
                .map(|v| {
                    let code: ViolationCode = v
                        .code
                        .parse()
                        .map_err(|()| DecodeError::Schema(format!("unknown code `{}`", v.code)))?;
                    Ok(Violation {
                        code,
                        indices: v.indices,
                        message: v.message,
                    })
                })
                .collect::<Result<_, DecodeError>>()?;
            if valid != violations.is_empty() {
                return Err(DecodeError::Schema(
                    "`valid` flag disagrees with the violation list".to_owned(),
                ));
            }
            Ok(Document::Validation(ValidationReport::from_violations(
                violations,
            )))
        }
        Doc::Check {
            n,
            total,
            pm_images_distinct,
            cs_images_distinct,
            roundtrip_failures,
            ok,
        } => {
            let report = BijectionReport {
                n,
                total,
                pm_images_distinct,
                cs_images_distinct,
                roundtrip_failures,
            };
            if ok != report.ok() {
                return Err(DecodeError::Schema(
                    "`ok` flag disagrees with the counts".to_owned(),
                ));
            }
            Ok(Document::Check(report))
        }
    }
}

/// Decodes a JSON document, optionally insisting on a kind. The kind is
/// dispatched from the `"kind"` field; content that parses but violates a
/// domain invariant comes back as [`DecodeError::Invalid`] with the full
/// validation report.
pub fn decode_json(text: &str, expected: Option<Kind>) -> Result<Document, DecodeError> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| DecodeError::Json(e.to_string()))?;
    let tag = value
        .get("kind")
        .and_then(serde_json::Value::as_str)
        .ok_or_else(|| DecodeError::Schema("missing `kind` field".to_owned()))?;
    let kind = Kind::from_tag(tag).ok_or_else(|| DecodeError::Schema(format!(
        "unknown kind `{tag}`"
    )))?;
    if let Some(expected) = expected {
        if kind != expected {
            return Err(DecodeError::WrongKind {
                expected,
                found: tag.to_owned(),
            });
        }
    }
    let doc: Doc = serde_json::from_value(value).map_err(|e| DecodeError::Schema(e.to_string()))?;
    from_wire(doc)
}
