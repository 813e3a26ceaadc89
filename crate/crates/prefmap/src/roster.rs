//! The alternative roster.
//!
//! A roster fixes the set of alternatives once: a non-empty list of unique
//! labels. Everything else in the crate addresses alternatives by their
//! 0-based roster index; labels exist for parsing and display.

use std::collections::HashSet;

use thiserror::Error;

/// The fixed, ordered list of alternative labels.
///
/// Labels must be unique identifiers (`[A-Za-z_][A-Za-z0-9_]*`) so that any
/// ranking over the roster can be printed as an expression and re-parsed
/// without ambiguity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Roster {
    labels: Vec<String>,
}

/// One alternative: a roster index together with its label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlternativeId<'a> {
    pub index: usize,
    pub label: &'a str,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RosterError {
    #[error("a roster must contain at least one alternative")]
    Empty,
    #[error("label `{0}` is not an identifier")]
    InvalidLabel(String),
    #[error("label `{0}` appears more than once")]
    DuplicateLabel(String),
}

/// True for labels of the form `[A-Za-z_][A-Za-z0-9_]*`.
pub(crate) fn is_identifier(s: &str) -> bool {
    let mut bytes = s.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_alphabetic() || b == b'_' => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl Roster {
    /// Builds a roster from explicit labels.
    pub fn new<I, S>(labels: I) -> Result<Self, RosterError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(RosterError::Empty);
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !is_identifier(label) {
                return Err(RosterError::InvalidLabel(label.clone()));
            }
            if !seen.insert(label.as_str()) {
                return Err(RosterError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Roster { labels })
    }

    /// The default roster `x1, x2, ..., xn`.
    pub fn numbered(n: usize) -> Result<Self, RosterError> {
        if n == 0 {
            return Err(RosterError::Empty);
        }
        Ok(Roster {
            labels: (1..=n).map(|i| format!("x{i}")).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Rosters are never empty; this exists for clippy's benefit.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> Option<&str> {
        self.labels.get(index).map(String::as_str)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn alternative(&self, index: usize) -> Option<AlternativeId<'_>> {
        self.label(index).map(|label| AlternativeId { index, label })
    }

    pub fn alternatives(&self) -> impl Iterator<Item = AlternativeId<'_>> {
        self.labels
            .iter()
            .enumerate()
            .map(|(index, label)| AlternativeId { index, label })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbered_roster() {
        let r = Roster::numbered(3).unwrap();
        assert_eq!(r.labels(), ["x1", "x2", "x3"]);
        assert_eq!(r.index_of("x2"), Some(1));
        assert_eq!(r.alternative(2).unwrap().label, "x3");
    }

    #[test]
    fn rejects_empty_roster() {
        assert_eq!(Roster::new(Vec::<String>::new()), Err(RosterError::Empty));
        assert_eq!(Roster::numbered(0), Err(RosterError::Empty));
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(matches!(
            Roster::new(["ok", ""]),
            Err(RosterError::InvalidLabel(_))
        ));
        assert!(matches!(
            Roster::new(["a b"]),
            Err(RosterError::InvalidLabel(_))
        ));
        assert!(matches!(
            Roster::new(["1a"]),
            Err(RosterError::InvalidLabel(_))
        ));
        assert!(matches!(
            Roster::new(["a", "a"]),
            Err(RosterError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn identifier_grammar() {
        assert!(is_identifier("x1"));
        assert!(is_identifier("_hidden"));
        assert!(is_identifier("Alt_9"));
        assert!(!is_identifier(""));
        assert!(!is_identifier("9x"));
        assert!(!is_identifier("a-b"));
        assert!(!is_identifier("é"));
    }
}
