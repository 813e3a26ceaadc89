//! Preference maps.
//!
//! A preference map assigns each alternative the set of ranking positions it
//! could legitimately occupy: a block of consecutive integers. Tied
//! alternatives share a block, and the distinct blocks of a valid map
//! partition `{1..n}`. Construction goes through [`validate_pm`], so a
//! `PreferenceMap` value is always valid.

use std::collections::BTreeSet;
use std::fmt;

use crate::position::Position;
use crate::roster::Roster;
use crate::validate::{validate_pm, ValidationReport};

/// A block of consecutive 1-based positions, inclusive on both ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionBlock {
    lo: usize,
    hi: usize,
}

impl PositionBlock {
    pub(crate) fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(1 <= lo && lo <= hi);
        PositionBlock { lo, hi }
    }

    /// Lowest position in the block.
    pub fn lo(self) -> usize {
        self.lo
    }

    /// Highest position in the block.
    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn len(self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn contains(self, position: usize) -> bool {
        self.lo <= position && position <= self.hi
    }

    pub fn positions(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    /// The middle of the block: `(lo + hi) / 2`, exactly.
    pub fn midpoint(self) -> Position {
        Position::midpoint(self.lo as i64, self.hi as i64)
    }
}

impl fmt::Display for PositionBlock {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.positions().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// One position block per alternative; equal blocks mark ties.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferenceMap {
    roster: Roster,
    entries: Vec<PositionBlock>,
}

impl PreferenceMap {
    /// Validates `candidate` and builds the map. The candidate must have one
    /// entry per roster alternative; any violated invariant is reported.
    pub fn new(roster: Roster, candidate: &[BTreeSet<i64>]) -> Result<Self, ValidationReport> {
        if roster.len() != candidate.len() {
            return Err(ValidationReport::size_mismatch(format!(
                "roster has {} alternatives but the map has {} entries",
                roster.len(),
                candidate.len()
            )));
        }
        let report = validate_pm(candidate);
        if !report.is_valid() {
            return Err(report);
        }
        let entries = candidate
            .iter()
            .map(|set| {
                let lo = *set.iter().next().unwrap() as usize;
                let hi = *set.iter().next_back().unwrap() as usize;
                PositionBlock::new(lo, hi)
            })
            .collect();
        Ok(PreferenceMap { roster, entries })
    }

    /// Internal constructor for entries produced by a conversion, which are
    /// valid by construction.
    pub(crate) fn from_blocks_unchecked(roster: Roster, entries: Vec<PositionBlock>) -> Self {
        let pm = PreferenceMap { roster, entries };
        debug_assert!(validate_pm(&pm.entry_sets()).is_valid());
        debug_assert_eq!(pm.roster.len(), pm.entries.len());
        pm
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn n(&self) -> usize {
        self.roster.len()
    }

    pub fn entries(&self) -> &[PositionBlock] {
        &self.entries
    }

    pub fn entry(&self, alternative: usize) -> Option<PositionBlock> {
        self.entries.get(alternative).copied()
    }

    /// The entries as explicit integer sets, in the untrusted-input shape
    /// the validator consumes.
    pub fn entry_sets(&self) -> Vec<BTreeSet<i64>> {
        self.entries
            .iter()
            .map(|block| block.positions().map(|p| p as i64).collect())
            .collect()
    }
}
