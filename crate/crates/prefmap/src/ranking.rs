//! Rankings as ordered partitions.
//!
//! A ties-permitted ordinal ranking is an ordered partition of the roster:
//! a sequence of non-empty, disjoint tie-groups that together cover every
//! alternative, listed from most to least preferred. This is the canonical
//! semantic object; preference maps and Cook-Seiford vectors are two other
//! encodings of exactly the same thing.

use thiserror::Error;

use crate::roster::Roster;

/// An ordered partition of the roster into tie-groups, best first.
///
/// Groups hold 0-based roster indices and are kept sorted ascending, so two
/// rankings are equal iff they rank the same roster the same way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ranking {
    roster: Roster,
    groups: Vec<Vec<usize>>,
}

/// Cardinality view of one alternative's standing: how many alternatives are
/// strictly preferred to it, and how many are tied with it (itself included).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DominanceProfile {
    pub predecessors: usize,
    pub tie_size: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RankingError {
    #[error("a ranking must contain at least one group")]
    NoGroups,
    #[error("group {0} is empty")]
    EmptyGroup(usize),
    #[error("alternative index {index} is out of range for a roster of {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("alternative {0} appears in more than one group")]
    DuplicateAlternative(usize),
    #[error("alternative {0} does not appear in any group")]
    MissingAlternative(usize),
}

impl Ranking {
    /// Builds a ranking, checking that `groups` is an ordered partition of
    /// the whole roster. Each group is canonicalized to ascending index
    /// order; group order itself is meaningful and preserved.
    pub fn new(roster: Roster, groups: Vec<Vec<usize>>) -> Result<Self, RankingError> {
        let n = roster.len();
        if groups.is_empty() {
            return Err(RankingError::NoGroups);
        }
        let mut seen = vec![false; n];
        for (g, group) in groups.iter().enumerate() {
            if group.is_empty() {
                return Err(RankingError::EmptyGroup(g));
            }
            for &index in group {
                if index >= n {
                    return Err(RankingError::IndexOutOfRange { index, n });
                }
                if seen[index] {
                    return Err(RankingError::DuplicateAlternative(index));
                }
                seen[index] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|covered| !covered) {
            return Err(RankingError::MissingAlternative(missing));
        }
        let mut groups = groups;
        for group in &mut groups {
            group.sort_unstable();
        }
        Ok(Ranking { roster, groups })
    }

    /// Internal constructor for groups already known to be a sorted ordered
    /// partition (conversion outputs, the enumeration oracle).
    pub(crate) fn from_groups_unchecked(roster: Roster, groups: Vec<Vec<usize>>) -> Self {
        debug_assert!(Ranking::new(roster.clone(), groups.clone()).is_ok());
        Ranking { roster, groups }
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    /// Number of alternatives.
    pub fn n(&self) -> usize {
        self.roster.len()
    }

    /// Tie-groups from most to least preferred, each sorted ascending.
    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Number of tie-groups. Equals the number of distinct preference-map
    /// entries and of distinct Cook-Seiford values.
    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    /// Index of the group containing `alternative`.
    pub fn group_of(&self, alternative: usize) -> Option<usize> {
        self.groups
            .iter()
            .position(|group| group.binary_search(&alternative).is_ok())
    }

    /// Counts the strictly-preferred and indifferent alternatives for one
    /// alternative: all groups before its own, and its own group's size.
    pub fn dominance_profile(&self, alternative: usize) -> Result<DominanceProfile, RankingError> {
        if alternative >= self.n() {
            return Err(RankingError::IndexOutOfRange {
                index: alternative,
                n: self.n(),
            });
        }
        let mut predecessors = 0;
        for group in &self.groups {
            if group.binary_search(&alternative).is_ok() {
                return Ok(DominanceProfile {
                    predecessors,
                    tie_size: group.len(),
                });
            }
            predecessors += group.len();
        }
        unreachable!("every alternative below n is in some group");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranking(n: usize, groups: Vec<Vec<usize>>) -> Ranking {
        Ranking::new(Roster::numbered(n).unwrap(), groups).unwrap()
    }

    /// x1 > x2 ~ x3 > x4
    fn worked_example() -> Ranking {
        ranking(4, vec![vec![0], vec![1, 2], vec![3]])
    }

    #[test]
    fn construction_canonicalizes_group_order() {
        let r = ranking(4, vec![vec![0], vec![2, 1], vec![3]]);
        assert_eq!(r.groups(), &[vec![0], vec![1, 2], vec![3]]);
    }

    #[test]
    fn construction_rejects_bad_partitions() {
        let roster = || Roster::numbered(3).unwrap();
        assert_eq!(
            Ranking::new(roster(), vec![]).unwrap_err(),
            RankingError::NoGroups
        );
        assert_eq!(
            Ranking::new(roster(), vec![vec![0], vec![], vec![1, 2]]).unwrap_err(),
            RankingError::EmptyGroup(1)
        );
        assert_eq!(
            Ranking::new(roster(), vec![vec![0, 3], vec![1, 2]]).unwrap_err(),
            RankingError::IndexOutOfRange { index: 3, n: 3 }
        );
        assert_eq!(
            Ranking::new(roster(), vec![vec![0, 1], vec![1, 2]]).unwrap_err(),
            RankingError::DuplicateAlternative(1)
        );
        assert_eq!(
            Ranking::new(roster(), vec![vec![0], vec![2]]).unwrap_err(),
            RankingError::MissingAlternative(1)
        );
    }

    #[test]
    fn dominance_profile_worked_example() {
        let r = worked_example();
        assert_eq!(
            r.dominance_profile(1).unwrap(),
            DominanceProfile {
                predecessors: 1,
                tie_size: 2
            }
        );
        assert_eq!(
            r.dominance_profile(0).unwrap(),
            DominanceProfile {
                predecessors: 0,
                tie_size: 1
            }
        );
        assert_eq!(
            r.dominance_profile(3).unwrap(),
            DominanceProfile {
                predecessors: 3,
                tie_size: 1
            }
        );
    }

    #[test]
    fn dominance_profile_degenerate_cases() {
        let single = ranking(1, vec![vec![0]]);
        assert_eq!(
            single.dominance_profile(0).unwrap(),
            DominanceProfile {
                predecessors: 0,
                tie_size: 1
            }
        );

        let all_tie = ranking(3, vec![vec![0, 1, 2]]);
        for i in 0..3 {
            assert_eq!(
                all_tie.dominance_profile(i).unwrap(),
                DominanceProfile {
                    predecessors: 0,
                    tie_size: 3
                }
            );
        }
    }

    #[test]
    fn dominance_profile_rejects_out_of_range() {
        assert_eq!(
            worked_example().dominance_profile(4).unwrap_err(),
            RankingError::IndexOutOfRange { index: 4, n: 4 }
        );
    }

    #[test]
    fn tied_alternatives_share_a_profile() {
        let r = worked_example();
        assert_eq!(
            r.dominance_profile(1).unwrap(),
            r.dominance_profile(2).unwrap()
        );
    }

    #[test]
    fn group_counts() {
        assert_eq!(worked_example().group_count(), 3);
        assert_eq!(ranking(5, vec![vec![0, 1, 2, 3, 4]]).group_count(), 1);
        let chain = ranking(5, (0..5).map(|i| vec![i]).collect());
        assert_eq!(chain.group_count(), 5);
    }

    #[test]
    fn profile_positions_sum_to_triangular_number() {
        // Sum over i of (predecessors_i + (tie_size_i + 1)/2) = n(n+1)/2,
        // checked on doubled values so the halves stay exact.
        for r in [
            worked_example(),
            ranking(1, vec![vec![0]]),
            ranking(3, vec![vec![0, 1, 2]]),
            ranking(5, vec![vec![3], vec![0, 4], vec![1, 2]]),
        ] {
            let n = r.n() as i64;
            let doubled_sum: i64 = (0..r.n())
                .map(|i| {
                    let p = r.dominance_profile(i).unwrap();
                    2 * p.predecessors as i64 + p.tie_size as i64 + 1
                })
                .sum();
            assert_eq!(doubled_sum, n * (n + 1));
        }
    }

    #[test]
    fn group_sizes_partition_roster() {
        let r = ranking(5, vec![vec![3], vec![0, 4], vec![1, 2]]);
        let total: usize = r.groups().iter().map(Vec::len).sum();
        assert_eq!(total, r.n());
    }
}
