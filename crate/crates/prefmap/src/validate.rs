//! Validation of untrusted preference maps and Cook-Seiford vectors.
//!
//! "Valid" means "arises from some ties-permitted ranking": a preference map
//! must be built from blocks of consecutive positions whose distinct blocks
//! partition `{1..n}` and are each shared by exactly as many alternatives as
//! they have positions; a Cook-Seiford vector must decompose into tie-groups
//! whose position intervals tile `{1..n}` exactly. The validators accept
//! precisely those inputs and report every violated invariant with a code
//! and the offending indices.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::position::Position;

/// Violations are collected, not fail-fast, but capped so a pathological
/// input cannot produce an unbounded report.
pub const MAX_VIOLATIONS: usize = 64;

/// One invariant of the preference-map / Cook-Seiford domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationCode {
    /// A preference-map entry is the empty set.
    PmEmptyEntry,
    /// A preference-map entry is not a block of consecutive integers.
    PmNotConsecutive,
    /// A preference-map entry contains a position outside `1..=n`.
    PmOutOfRange,
    /// Two entries overlap without being identical.
    PmOverlapNotEqual,
    /// The distinct entries do not cover every position in `1..=n`.
    PmNotPartition,
    /// An entry of cardinality k is not shared by exactly k alternatives.
    PmMultiplicityMismatch,
    /// A Cook-Seiford value lies outside `1..=n`.
    CsOutOfRange,
    /// A Cook-Seiford value is not an exact integer or half-integer.
    CsNotHalfInteger,
    /// A group of d equal values v has v - (d-1)/2 not a positive integer.
    CsGroupAlignment,
    /// The per-group position intervals do not tile `{1..n}` exactly.
    CsIntervalsDontTile,
    /// The input length disagrees with the expected size (or is zero).
    SizeMismatch,
}

impl ViolationCode {
    pub const fn as_str(self) -> &'static str {
        match self {
            ViolationCode::PmEmptyEntry => "PM_EMPTY_ENTRY",
            ViolationCode::PmNotConsecutive => "PM_NOT_CONSECUTIVE",
            ViolationCode::PmOutOfRange => "PM_OUT_OF_RANGE",
            ViolationCode::PmOverlapNotEqual => "PM_OVERLAP_NOT_EQUAL",
            ViolationCode::PmNotPartition => "PM_NOT_PARTITION",
            ViolationCode::PmMultiplicityMismatch => "PM_MULTIPLICITY_MISMATCH",
            ViolationCode::CsOutOfRange => "CS_OUT_OF_RANGE",
            ViolationCode::CsNotHalfInteger => "CS_NOT_HALF_INTEGER",
            ViolationCode::CsGroupAlignment => "CS_GROUP_ALIGNMENT",
            ViolationCode::CsIntervalsDontTile => "CS_INTERVALS_DONT_TILE",
            ViolationCode::SizeMismatch => "SIZE_MISMATCH",
        }
    }
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ViolationCode {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use ViolationCode::*;
        Ok(match s {
            "PM_EMPTY_ENTRY" => PmEmptyEntry,
            "PM_NOT_CONSECUTIVE" => PmNotConsecutive,
            "PM_OUT_OF_RANGE" => PmOutOfRange,
            "PM_OVERLAP_NOT_EQUAL" => PmOverlapNotEqual,
            "PM_NOT_PARTITION" => PmNotPartition,
            "PM_MULTIPLICITY_MISMATCH" => PmMultiplicityMismatch,
            "CS_OUT_OF_RANGE" => CsOutOfRange,
            "CS_NOT_HALF_INTEGER" => CsNotHalfInteger,
            "CS_GROUP_ALIGNMENT" => CsGroupAlignment,
            "CS_INTERVALS_DONT_TILE" => CsIntervalsDontTile,
            "SIZE_MISMATCH" => SizeMismatch,
            _ => return Err(()),
        })
    }
}

/// One violated invariant with the indices it implicates.
///
/// Indices are 0-based alternative indices, except for
/// [`ViolationCode::PmNotPartition`] and the trailing-coverage case of
/// [`ViolationCode::CsIntervalsDontTile`], where they are the uncovered
/// 1-based positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub code: ViolationCode,
    pub indices: Vec<usize>,
    pub message: String,
}

/// Machine-readable validation verdict. Valid iff no violations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    /// An empty (valid) report.
    pub fn valid() -> Self {
        ValidationReport::default()
    }

    /// Rebuilds a report from its parts (used when decoding).
    pub fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn codes(&self) -> Vec<ViolationCode> {
        self.violations.iter().map(|v| v.code).collect()
    }

    pub(crate) fn push(&mut self, code: ViolationCode, indices: Vec<usize>, message: String) {
        if self.violations.len() < MAX_VIOLATIONS {
            self.violations.push(Violation {
                code,
                indices,
                message,
            });
        }
    }

    pub(crate) fn size_mismatch(message: String) -> Self {
        let mut report = ValidationReport::valid();
        report.push(ViolationCode::SizeMismatch, vec![], message);
        report
    }
}

fn format_set(set: &BTreeSet<i64>) -> String {
    let items: Vec<String> = set.iter().map(i64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

/// Decides whether `candidate` is a valid preference map over n =
/// `candidate.len()` alternatives. Every failed invariant is reported.
pub fn validate_pm(candidate: &[BTreeSet<i64>]) -> ValidationReport {
    let mut report = ValidationReport::valid();
    let n = candidate.len();
    if n == 0 {
        report.push(
            ViolationCode::SizeMismatch,
            vec![],
            "a preference map needs at least one entry".to_owned(),
        );
        return report;
    }

    // Per-entry shape: non-empty, within range, consecutive.
    let mut well_shaped = vec![false; n];
    for (i, set) in candidate.iter().enumerate() {
        if set.is_empty() {
            report.push(
                ViolationCode::PmEmptyEntry,
                vec![i],
                format!("entry {i} is empty"),
            );
            continue;
        }
        let mut shaped = true;
        let out_of_range: Vec<i64> = set
            .iter()
            .copied()
            .filter(|&v| v < 1 || v > n as i64)
            .collect();
        if !out_of_range.is_empty() {
            shaped = false;
            let listed: Vec<String> = out_of_range.iter().map(i64::to_string).collect();
            report.push(
                ViolationCode::PmOutOfRange,
                vec![i],
                format!(
                    "entry {i} contains positions outside 1..={n}: {}",
                    listed.join(",")
                ),
            );
        }
        let min = *set.iter().next().unwrap();
        let max = *set.iter().next_back().unwrap();
        if (max as i128 - min as i128 + 1) != set.len() as i128 {
            shaped = false;
            report.push(
                ViolationCode::PmNotConsecutive,
                vec![i],
                format!("entry {i} = {} is not consecutive", format_set(set)),
            );
        }
        well_shaped[i] = shaped;
    }

    // Group alternatives by identical entry. BTreeMap keys give a
    // deterministic block order (ascending by content).
    let mut blocks: BTreeMap<&BTreeSet<i64>, Vec<usize>> = BTreeMap::new();
    for (i, set) in candidate.iter().enumerate() {
        blocks.entry(set).or_default().push(i);
    }

    // Multiplicity: a block of k positions must be shared by k alternatives.
    // Only meaningful for well-shaped blocks; malformed ones already have a
    // shape diagnostic.
    for (set, members) in &blocks {
        if set.is_empty() || !well_shaped[members[0]] {
            continue;
        }
        if members.len() != set.len() {
            report.push(
                ViolationCode::PmMultiplicityMismatch,
                members.clone(),
                format!(
                    "entry {} has {} positions but is shared by {} alternatives",
                    format_set(set),
                    set.len(),
                    members.len()
                ),
            );
        }
    }

    // Distinct well-shaped blocks must be pairwise disjoint.
    let shaped_blocks: Vec<(&BTreeSet<i64>, usize)> = blocks
        .iter()
        .filter(|(set, members)| !set.is_empty() && well_shaped[members[0]])
        .map(|(set, members)| (*set, members[0]))
        .collect();
    for (a, &(set_a, rep_a)) in shaped_blocks.iter().enumerate() {
        for &(set_b, rep_b) in &shaped_blocks[a + 1..] {
            if !set_a.is_disjoint(set_b) {
                let (lo, hi) = if rep_a < rep_b {
                    (rep_a, rep_b)
                } else {
                    (rep_b, rep_a)
                };
                report.push(
                    ViolationCode::PmOverlapNotEqual,
                    vec![lo, hi],
                    format!(
                        "entries {lo} and {hi} overlap but differ: {} vs {}",
                        format_set(candidate.get(lo).unwrap()),
                        format_set(candidate.get(hi).unwrap())
                    ),
                );
            }
        }
    }

    // Coverage: every position in 1..=n must belong to some entry.
    let mut covered = vec![false; n];
    for set in candidate {
        for &v in set.iter() {
            if (1..=n as i64).contains(&v) {
                covered[(v - 1) as usize] = true;
            }
        }
    }
    let uncovered: Vec<usize> = (1..=n).filter(|&p| !covered[p - 1]).collect();
    if !uncovered.is_empty() {
        let listed: Vec<String> = uncovered.iter().map(usize::to_string).collect();
        report.push(
            ViolationCode::PmNotPartition,
            uncovered,
            format!("no entry covers position(s) {}", listed.join(",")),
        );
    }

    report
}

/// Decides whether `candidate` is a valid Cook-Seiford vector over n =
/// `candidate.len()` alternatives: grouping equal values, a group of size d
/// at value v starts at a = v - (d-1)/2, which must be a positive integer,
/// and the intervals `[a, a+d-1]` must tile `{1..n}`.
pub fn validate_cs(candidate: &[Position]) -> ValidationReport {
    let mut report = ValidationReport::valid();
    let n = candidate.len();
    if n == 0 {
        report.push(
            ViolationCode::SizeMismatch,
            vec![],
            "a Cook-Seiford vector needs at least one value".to_owned(),
        );
        return report;
    }

    let lowest = Position::from_int(1);
    let highest = Position::from_int(n as i64);
    for (i, &v) in candidate.iter().enumerate() {
        if v < lowest || v > highest {
            report.push(
                ViolationCode::CsOutOfRange,
                vec![i],
                format!("value {v} at index {i} is outside 1..={n}"),
            );
        }
    }

    let mut groups: BTreeMap<Position, Vec<usize>> = BTreeMap::new();
    for (i, &v) in candidate.iter().enumerate() {
        groups.entry(v).or_default().push(i);
    }

    // Saturating arithmetic: wildly out-of-range values are already reported
    // above, and saturation keeps the remaining diagnostics deterministic.
    for (&value, members) in &groups {
        let d = members.len() as i64;
        let start_doubled = value.doubled().saturating_sub(d - 1);
        if start_doubled % 2 != 0 || start_doubled < 2 {
            let start = Position::from_doubled(start_doubled);
            report.push(
                ViolationCode::CsGroupAlignment,
                members.clone(),
                format!(
                    "value {value} with {d} tied alternative(s) starts at {start}, \
                     which is not a positive integer"
                ),
            );
        }
    }

    // Tiling scan in ascending value order: each group's interval must begin
    // exactly where the previous one ended. Interval widths always sum to n
    // (every index is in exactly one group), so matching starts force the
    // last interval to end exactly at n.
    let mut expected_start_doubled: i64 = 2; // position 1
    for (&value, members) in &groups {
        let d = members.len() as i64;
        let start_doubled = value.doubled().saturating_sub(d - 1);
        let end_doubled = value.doubled().saturating_add(d - 1);
        if start_doubled != expected_start_doubled {
            report.push(
                ViolationCode::CsIntervalsDontTile,
                members.clone(),
                format!(
                    "interval for value {value} starts at {} but position {} is next",
                    Position::from_doubled(start_doubled),
                    Position::from_doubled(expected_start_doubled)
                ),
            );
        }
        expected_start_doubled = end_doubled.saturating_add(2);
    }

    report
}
