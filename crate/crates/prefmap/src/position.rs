//! Exact ranking positions.
//!
//! Every position value that appears in a Cook-Seiford vector is the average
//! of two integers (the ends of a block of consecutive ranking slots), so it
//! is always an integer or a half-integer. Storing twice the value as an
//! integer makes equality, ordering, and sums exact; nothing in this crate
//! ever rounds a position or passes one through binary floating point.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use thiserror::Error;

/// An exact integer or half-integer position, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    doubled: i64,
}

/// Why a decimal literal could not be read as a [`Position`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParsePositionError {
    /// The text is not a plain decimal literal.
    #[error("`{0}` is not a decimal position literal")]
    Syntax(String),
    /// The text is a decimal number, but not an integer or half-integer.
    #[error("`{0}` is not an exact integer or half-integer")]
    NotHalfInteger(String),
    /// The value does not fit in the representable range.
    #[error("`{0}` is outside the representable position range")]
    OutOfRange(String),
}

impl Position {
    /// Builds a position from twice its value.
    pub const fn from_doubled(doubled: i64) -> Self {
        Position { doubled }
    }

    /// Builds an integer-valued position.
    pub const fn from_int(value: i64) -> Self {
        match value.checked_mul(2) {
            Some(doubled) => Position { doubled },
            None => panic!("integer position out of range"),
        }
    }

    /// The exact midpoint of two integers, e.g. `midpoint(2, 3)` is 2.5.
    pub const fn midpoint(lo: i64, hi: i64) -> Self {
        match lo.checked_add(hi) {
            Some(doubled) => Position { doubled },
            None => panic!("position midpoint out of range"),
        }
    }

    /// Twice the represented value.
    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    /// True when the value is a whole number.
    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// The value as an integer, if it is one.
    pub const fn as_int(self) -> Option<i64> {
        if self.doubled % 2 == 0 {
            Some(self.doubled / 2)
        } else {
            None
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            let sign = if self.doubled < 0 { "-" } else { "" };
            write!(f, "{}{}.5", sign, self.doubled.unsigned_abs() / 2)
        }
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Position({self})")
    }
}

impl FromStr for Position {
    type Err = ParsePositionError;

    /// Reads a decimal literal exactly. Accepts `3`, `2.5`, `-0.5`, and
    /// trailing-zero spellings such as `2.50`; rejects anything whose value
    /// is not an integer or half-integer, such as `2.25`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || ParsePositionError::Syntax(s.to_owned());
        let (negative, rest) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match rest.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (rest, None),
        };
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(syntax());
        }
        let half = match frac_part {
            None => false,
            Some(f) if f.is_empty() || !f.bytes().all(|b| b.is_ascii_digit()) => {
                return Err(syntax());
            }
            Some(f) => match f.trim_end_matches('0') {
                "" => false,
                "5" => true,
                _ => return Err(ParsePositionError::NotHalfInteger(s.to_owned())),
            },
        };
        let magnitude: i64 = int_part
            .parse()
            .map_err(|_| ParsePositionError::OutOfRange(s.to_owned()))?;
        let doubled = magnitude
            .checked_mul(2)
            .and_then(|d| d.checked_add(i64::from(half)))
            .ok_or_else(|| ParsePositionError::OutOfRange(s.to_owned()))?;
        Ok(Position {
            doubled: if negative { -doubled } else { doubled },
        })
    }
}

impl Add for Position {
    type Output = Position;

    fn add(self, rhs: Position) -> Position {
        Position {
            doubled: self.doubled + rhs.doubled,
        }
    }
}

impl Sum for Position {
    fn sum<I: Iterator<Item = Position>>(iter: I) -> Position {
        iter.fold(Position::from_doubled(0), Add::add)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_integer_and_half() {
        assert_eq!(Position::from_int(4).to_string(), "4");
        assert_eq!(Position::midpoint(2, 3).to_string(), "2.5");
        assert_eq!(Position::from_doubled(-1).to_string(), "-0.5");
        assert_eq!(Position::from_doubled(-5).to_string(), "-2.5");
    }

    #[test]
    fn parse_accepts_exact_literals() {
        assert_eq!("1".parse::<Position>().unwrap(), Position::from_int(1));
        assert_eq!(
            "2.5".parse::<Position>().unwrap(),
            Position::midpoint(2, 3)
        );
        assert_eq!("2.0".parse::<Position>().unwrap(), Position::from_int(2));
        assert_eq!("2.50".parse::<Position>().unwrap(), Position::midpoint(2, 3));
        assert_eq!(
            "-0.5".parse::<Position>().unwrap(),
            Position::from_doubled(-1)
        );
    }

    #[test]
    fn parse_rejects_non_half_integers() {
        assert!(matches!(
            "2.25".parse::<Position>(),
            Err(ParsePositionError::NotHalfInteger(_))
        ));
        assert!(matches!(
            "2.51".parse::<Position>(),
            Err(ParsePositionError::NotHalfInteger(_))
        ));
    }

    #[test]
    fn parse_rejects_malformed_literals() {
        for bad in ["", "-", ".", "2.", ".5", "a", "1e3", "+2", " 1", "2,5"] {
            assert!(
                matches!(bad.parse::<Position>(), Err(ParsePositionError::Syntax(_))),
                "expected syntax error for {bad:?}"
            );
        }
    }

    #[test]
    fn parse_rejects_overflow() {
        assert!(matches!(
            "99999999999999999999".parse::<Position>(),
            Err(ParsePositionError::OutOfRange(_))
        ));
    }

    #[test]
    fn display_parse_round_trip() {
        for doubled in -20..=20 {
            let p = Position::from_doubled(doubled);
            assert_eq!(p.to_string().parse::<Position>().unwrap(), p);
        }
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Position::midpoint(2, 3) < Position::from_int(3));
        assert!(Position::from_int(2) < Position::midpoint(2, 3));
        let sum: Position = [Position::from_int(1), Position::midpoint(2, 3)]
            .into_iter()
            .sum();
        assert_eq!(sum, Position::midpoint(3, 4));
    }
}
