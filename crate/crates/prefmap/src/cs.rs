//! Cook-Seiford vectors.
//!
//! A Cook-Seiford vector assigns each alternative a single position value;
//! tied alternatives all receive the middle position of the block they
//! jointly occupy, so values are exact integers or half-integers.
//! Construction goes through [`validate_cs`], so a `CookSeifordVector` value
//! is always valid.

use crate::position::Position;
use crate::roster::Roster;
use crate::validate::{validate_cs, ValidationReport};

/// One exact position value per alternative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CookSeifordVector {
    roster: Roster,
    values: Vec<Position>,
}

impl CookSeifordVector {
    /// Validates `values` and builds the vector. The candidate must have one
    /// value per roster alternative; any violated invariant is reported.
    pub fn new(roster: Roster, values: Vec<Position>) -> Result<Self, ValidationReport> {
        if roster.len() != values.len() {
            return Err(ValidationReport::size_mismatch(format!(
                "roster has {} alternatives but the vector has {} values",
                roster.len(),
                values.len()
            )));
        }
        let report = validate_cs(&values);
        if !report.is_valid() {
            return Err(report);
        }
        Ok(CookSeifordVector { roster, values })
    }

    /// Internal constructor for values produced by a conversion, which are
    /// valid by construction.
    pub(crate) fn from_values_unchecked(roster: Roster, values: Vec<Position>) -> Self {
        debug_assert!(validate_cs(&values).is_valid());
        debug_assert_eq!(roster.len(), values.len());
        CookSeifordVector { roster, values }
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn n(&self) -> usize {
        self.roster.len()
    }

    pub fn values(&self) -> &[Position] {
        &self.values
    }

    pub fn value(&self, alternative: usize) -> Option<Position> {
        self.values.get(alternative).copied()
    }

    /// Sum of all values; always `n(n+1)/2` for a valid vector.
    pub fn sum(&self) -> Position {
        self.values.iter().copied().sum()
    }
}
