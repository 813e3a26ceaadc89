//! Text forms: ranking expressions, raw vectors, and line-oriented batches.
//!
//! A ranking expression writes groups best-first, `>` between groups and `~`
//! between tied labels: `x1 > x2 ~ x3 > x4`. Labels are identifiers
//! (`[A-Za-z_][A-Za-z0-9_]*`), whitespace is insignificant, and the Unicode
//! relation symbols `≻` and `∼` are accepted as aliases on input.

use std::collections::BTreeSet;
use std::collections::HashMap;

use thiserror::Error;

use crate::cs::CookSeifordVector;
use crate::pm::PreferenceMap;
use crate::position::{ParsePositionError, Position};
use crate::ranking::Ranking;
use crate::roster::Roster;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("duplicate label `{label}` at byte {offset}")]
    DuplicateLabel { offset: usize, label: String },
    #[error("label `{label}` at byte {offset} is not in the roster")]
    UnknownLabel { offset: usize, label: String },
    #[error("roster label `{label}` does not appear in the ranking")]
    MissingLabel { label: String },
    #[error("value {index}: {source}")]
    Position {
        index: usize,
        source: ParsePositionError,
    },
}

/// A parse failure tagged with its 1-based line number in a batch.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct BatchError {
    pub line: usize,
    #[source]
    pub source: ParseError,
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        offset,
        message: message.into(),
    }
}

/// Splits a ranking expression into groups of (byte offset, label).
fn lex_groups(text: &str) -> Result<Vec<Vec<(usize, &str)>>, ParseError> {
    let mut groups: Vec<Vec<(usize, &str)>> = Vec::new();
    let mut current: Vec<(usize, &str)> = Vec::new();
    let mut expect_label = true;
    let mut chars = text.char_indices().peekable();

    while let Some(&(offset, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            if !expect_label {
                return Err(syntax(offset, format!("expected `>` or `~` before `{c}`")));
            }
            let start = offset;
            let mut end = offset;
            while let Some(&(i, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = i + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            current.push((start, &text[start..end]));
            expect_label = false;
        } else if c == '>' || c == '≻' {
            if expect_label {
                return Err(syntax(offset, "expected a label before `>`"));
            }
            groups.push(std::mem::take(&mut current));
            expect_label = true;
            chars.next();
        } else if c == '~' || c == '∼' {
            if expect_label {
                return Err(syntax(offset, "expected a label before `~`"));
            }
            expect_label = true;
            chars.next();
        } else {
            return Err(syntax(offset, format!("unexpected character `{c}`")));
        }
    }

    if expect_label {
        return Err(syntax(text.len(), "expected a label"));
    }
    groups.push(current);
    Ok(groups)
}

/// Parses a ranking expression. With an explicit roster every roster label
/// must appear exactly once; otherwise the roster is the labels in order of
/// first appearance.
pub fn parse_ranking(text: &str, roster: Option<&Roster>) -> Result<Ranking, ParseError> {
    let labeled_groups = lex_groups(text)?;

    match roster {
        Some(roster) => {
            let index_of: HashMap<&str, usize> = roster
                .labels()
                .iter()
                .enumerate()
                .map(|(i, l)| (l.as_str(), i))
                .collect();
            let mut seen = vec![false; roster.len()];
            let mut groups = Vec::with_capacity(labeled_groups.len());
            for labeled in labeled_groups {
                let mut group = Vec::with_capacity(labeled.len());
                for (offset, label) in labeled {
                    let &index = index_of.get(label).ok_or_else(|| ParseError::UnknownLabel {
                        offset,
                        label: label.to_owned(),
                    })?;
                    if seen[index] {
                        return Err(ParseError::DuplicateLabel {
                            offset,
                            label: label.to_owned(),
                        });
                    }
                    seen[index] = true;
                    group.push(index);
                }
                groups.push(group);
            }
            if let Some(missing) = seen.iter().position(|used| !used) {
                return Err(ParseError::MissingLabel {
                    label: roster.label(missing).unwrap().to_owned(),
                });
            }
            Ok(Ranking::new(roster.clone(), groups).expect("checked partition"))
        }
        None => {
            let mut labels: Vec<String> = Vec::new();
            let mut index_of: HashMap<&str, usize> = HashMap::new();
            let mut groups = Vec::with_capacity(labeled_groups.len());
            for labeled in &labeled_groups {
                let mut group = Vec::with_capacity(labeled.len());
                for &(offset, label) in labeled {
                    if index_of.contains_key(label) {
                        return Err(ParseError::DuplicateLabel {
                            offset,
                            label: label.to_owned(),
                        });
                    }
                    index_of.insert(label, labels.len());
                    group.push(labels.len());
                    labels.push(label.to_owned());
                }
                groups.push(group);
            }
            let roster = Roster::new(labels).expect("lexer yields unique identifiers");
            Ok(Ranking::new(roster, groups).expect("appearance order partition"))
        }
    }
}

/// Canonical inverse of [`parse_ranking`]: members sorted by roster index and
/// joined with ` ~ `, groups joined with ` > `.
pub fn format_ranking(ranking: &Ranking) -> String {
    let roster = ranking.roster();
    ranking
        .groups()
        .iter()
        .map(|group| {
            group
                .iter()
                .map(|&i| roster.label(i).unwrap())
                .collect::<Vec<_>>()
                .join(" ~ ")
        })
        .collect::<Vec<_>>()
        .join(" > ")
}

/// Parses a batch: one ranking expression per line, `#` starts a comment,
/// blank lines are skipped. Returned rankings are tagged with their 1-based
/// line numbers.
pub fn parse_ranking_batch(
    text: &str,
    roster: Option<&Roster>,
) -> Result<Vec<(usize, Ranking)>, BatchError> {
    let mut rankings = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line = raw_line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let ranking =
            parse_ranking(line, roster).map_err(|source| BatchError { line: i + 1, source })?;
        rankings.push((i + 1, ranking));
    }
    Ok(rankings)
}

/// Parses a raw position vector: values separated by whitespace or commas,
/// optionally wrapped in `[` `]`. Values must be exact decimal literals.
pub fn parse_cs_text(text: &str) -> Result<Vec<Position>, ParseError> {
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('['), trimmed.strip_suffix(']')) {
        (Some(_), Some(_)) => &trimmed[1..trimmed.len() - 1],
        _ => trimmed,
    };
    let mut values = Vec::new();
    for token in inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
    {
        let value = token.parse().map_err(|source| ParseError::Position {
            index: values.len(),
            source,
        })?;
        values.push(value);
    }
    if values.is_empty() {
        return Err(syntax(0, "expected at least one position value"));
    }
    Ok(values)
}

/// Raw vector form of a Cook-Seiford vector: values joined with spaces.
pub fn format_cs_text(cs: &CookSeifordVector) -> String {
    cs.values()
        .iter()
        .map(Position::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses raw preference-map entries: brace-delimited integer sets such as
/// `{1} {2,3} {2,3} {4}`, separated by whitespace or commas.
pub fn parse_pm_text(text: &str) -> Result<Vec<BTreeSet<i64>>, ParseError> {
    let mut entries = Vec::new();
    let mut chars = text.char_indices().peekable();
    loop {
        // Between blocks.
        while let Some(&(_, c)) = chars.peek() {
            if c.is_whitespace() || c == ',' {
                chars.next();
            } else {
                break;
            }
        }
        let Some(&(offset, c)) = chars.peek() else {
            break;
        };
        if c != '{' {
            return Err(syntax(offset, format!("expected `{{`, found `{c}`")));
        }
        chars.next();
        let mut set = BTreeSet::new();
        'block: loop {
            while let Some(&(_, c)) = chars.peek() {
                if c.is_whitespace() || c == ',' {
                    chars.next();
                } else {
                    break;
                }
            }
            match chars.peek().copied() {
                None => return Err(syntax(text.len(), "unterminated `{`")),
                Some((_, '}')) => {
                    chars.next();
                    break 'block;
                }
                Some((start, c)) if c.is_ascii_digit() || c == '-' => {
                    let mut end = start + c.len_utf8();
                    chars.next();
                    while let Some(&(i, c)) = chars.peek() {
                        if c.is_ascii_digit() {
                            end = i + c.len_utf8();
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let token = &text[start..end];
                    let value: i64 = token
                        .parse()
                        .map_err(|_| syntax(start, format!("`{token}` is not an integer")))?;
                    set.insert(value);
                }
                Some((offset, c)) => {
                    return Err(syntax(offset, format!("unexpected character `{c}`")));
                }
            }
        }
        entries.push(set);
    }
    if entries.is_empty() {
        return Err(syntax(0, "expected at least one `{...}` entry"));
    }
    Ok(entries)
}

/// Raw text form of a preference map: one `{...}` block per alternative.
pub fn format_pm_text(pm: &PreferenceMap) -> String {
    pm.entries()
        .iter()
        .map(|block| block.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
