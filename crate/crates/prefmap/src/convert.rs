//! Conversions among the three representations of a ties-permitted ranking.
//!
//! All six directions are pure functions on validated inputs, so they are
//! total and mutually inverse:
//!
//! ```text
//!            ranking_to_pm                pm_to_cs
//!   Ranking --------------> PreferenceMap --------> CookSeifordVector
//!   Ranking <-------------- PreferenceMap <-------- CookSeifordVector
//!            pm_to_ranking                cs_to_pm
//! ```
//!
//! An alternative with p strict predecessors and a tie-group of size s gets
//! the position block `{p+1, ..., p+s}`; its single position value is the
//! block midpoint `(min + max) / 2`. Going back, alternatives with equal
//! values form a tie-group of size d centered on the shared value c, which
//! spans the block `[c - (d-1)/2, c + (d-1)/2]`.

use std::collections::BTreeMap;

use crate::cs::CookSeifordVector;
use crate::pm::{PositionBlock, PreferenceMap};
use crate::position::Position;
use crate::ranking::Ranking;

/// Builds the preference map of a ranking: each alternative may occupy the
/// consecutive positions just after all strictly-preferred alternatives.
pub fn ranking_to_pm(ranking: &Ranking) -> PreferenceMap {
    let mut entries = vec![PositionBlock::new(1, 1); ranking.n()];
    let mut predecessors = 0;
    for group in ranking.groups() {
        let block = PositionBlock::new(predecessors + 1, predecessors + group.len());
        for &alternative in group {
            entries[alternative] = block;
        }
        predecessors += group.len();
    }
    PreferenceMap::from_blocks_unchecked(ranking.roster().clone(), entries)
}

/// Collapses each preference-map entry to its midpoint.
pub fn pm_to_cs(pm: &PreferenceMap) -> CookSeifordVector {
    let values = pm.entries().iter().map(|block| block.midpoint()).collect();
    CookSeifordVector::from_values_unchecked(pm.roster().clone(), values)
}

/// The per-alternative decomposition of a Cook-Seiford value back into a
/// position block: center, tie multiplicity, and the block ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CsRow {
    /// The value itself (c).
    pub center: Position,
    /// How many alternatives share the value (d).
    pub tie_count: usize,
    /// Lowest block position, `c - (d-1)/2` (a).
    pub lo: usize,
    /// Highest block position, `c + (d-1)/2` (b).
    pub hi: usize,
}

/// Computes the (center, multiplicity, lo, hi) row for every alternative of
/// a valid vector. Validity guarantees the block ends are integers.
pub fn cs_decomposition(cs: &CookSeifordVector) -> Vec<CsRow> {
    let mut multiplicity: BTreeMap<Position, usize> = BTreeMap::new();
    for &value in cs.values() {
        *multiplicity.entry(value).or_insert(0) += 1;
    }
    cs.values()
        .iter()
        .map(|&value| {
            let d = multiplicity[&value];
            let lo_doubled = value.doubled() - (d as i64 - 1);
            let hi_doubled = value.doubled() + (d as i64 - 1);
            debug_assert!(lo_doubled >= 2 && lo_doubled % 2 == 0);
            CsRow {
                center: value,
                tie_count: d,
                lo: (lo_doubled / 2) as usize,
                hi: (hi_doubled / 2) as usize,
            }
        })
        .collect()
}

/// Expands each Cook-Seiford value back into its position block.
pub fn cs_to_pm(cs: &CookSeifordVector) -> PreferenceMap {
    let entries = cs_decomposition(cs)
        .into_iter()
        .map(|row| PositionBlock::new(row.lo, row.hi))
        .collect();
    PreferenceMap::from_blocks_unchecked(cs.roster().clone(), entries)
}

/// Recovers the ordered partition: alternatives sharing an entry form a
/// tie-group, and groups are ordered by where their block starts.
pub fn pm_to_ranking(pm: &PreferenceMap) -> Ranking {
    let mut groups: BTreeMap<PositionBlock, Vec<usize>> = BTreeMap::new();
    for (alternative, &block) in pm.entries().iter().enumerate() {
        groups.entry(block).or_default().push(alternative);
    }
    // PositionBlock orders by (lo, hi) and valid blocks are disjoint, so the
    // key order is exactly best-to-worst.
    let groups = groups.into_values().collect();
    Ranking::from_groups_unchecked(pm.roster().clone(), groups)
}

/// Ranking straight to Cook-Seiford values: with p strict predecessors and a
/// tie of size s, the value is `p + (s+1)/2`. Equal to
/// `pm_to_cs(ranking_to_pm(r))` entry for entry.
pub fn ranking_to_cs(ranking: &Ranking) -> CookSeifordVector {
    let mut values = vec![Position::from_int(1); ranking.n()];
    let mut predecessors: i64 = 0;
    for group in ranking.groups() {
        let s = group.len() as i64;
        let value = Position::from_doubled(2 * predecessors + s + 1);
        for &alternative in group {
            values[alternative] = value;
        }
        predecessors += s;
    }
    CookSeifordVector::from_values_unchecked(ranking.roster().clone(), values)
}

/// Composition `pm_to_ranking(cs_to_pm(cs))`.
pub fn cs_to_ranking(cs: &CookSeifordVector) -> Ranking {
    pm_to_ranking(&cs_to_pm(cs))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::roster::Roster;

    fn ranking(n: usize, groups: Vec<Vec<usize>>) -> Ranking {
        Ranking::new(Roster::numbered(n).unwrap(), groups).unwrap()
    }

    fn pm(raw: &[&[i64]]) -> PreferenceMap {
        let sets: Vec<BTreeSet<i64>> =
            raw.iter().map(|s| s.iter().copied().collect()).collect();
        PreferenceMap::new(Roster::numbered(raw.len()).unwrap(), &sets).unwrap()
    }

    fn cs(raw: &[&str]) -> CookSeifordVector {
        let values = raw.iter().map(|v| v.parse().unwrap()).collect();
        CookSeifordVector::new(Roster::numbered(raw.len()).unwrap(), values).unwrap()
    }

    fn blocks(pm: &PreferenceMap) -> Vec<(usize, usize)> {
        pm.entries().iter().map(|b| (b.lo(), b.hi())).collect()
    }

    /// x1 > x2 ~ x3 > x4
    fn worked_example() -> Ranking {
        ranking(4, vec![vec![0], vec![1, 2], vec![3]])
    }

    #[test]
    fn ranking_to_pm_worked_example() {
        let pm = ranking_to_pm(&worked_example());
        assert_eq!(blocks(&pm), vec![(1, 1), (2, 3), (2, 3), (4, 4)]);
    }

    #[test]
    fn ranking_to_pm_degenerate_cases() {
        assert_eq!(blocks(&ranking_to_pm(&ranking(1, vec![vec![0]]))), vec![(1, 1)]);
        assert_eq!(
            blocks(&ranking_to_pm(&ranking(3, vec![vec![0, 1, 2]]))),
            vec![(1, 3), (1, 3), (1, 3)]
        );
    }

    #[test]
    fn pm_to_cs_both_paper_maps() {
        let first = pm_to_cs(&pm(&[&[1], &[2, 3], &[2, 3], &[4]]));
        assert_eq!(
            first.values(),
            ["1", "2.5", "2.5", "4"].map(|v| v.parse().unwrap())
        );
        let second = pm_to_cs(&pm(&[&[1, 2], &[1, 2], &[3], &[4]]));
        assert_eq!(
            second.values(),
            ["1.5", "1.5", "3", "4"].map(|v| v.parse().unwrap())
        );
        let single = pm_to_cs(&pm(&[&[1]]));
        assert_eq!(single.values(), [Position::from_int(1)]);
    }

    #[test]
    fn cs_decomposition_rows() {
        // Rows (c, d, a, b) for [1, 2.5, 2.5, 4]:
        // (1,1,1,1), (2.5,2,2,3), (2.5,2,2,3), (4,1,4,4).
        let rows = cs_decomposition(&cs(&["1", "2.5", "2.5", "4"]));
        let expected = [
            ("1", 1, 1, 1),
            ("2.5", 2, 2, 3),
            ("2.5", 2, 2, 3),
            ("4", 1, 4, 4),
        ];
        for (row, (c, d, a, b)) in rows.iter().zip(expected) {
            assert_eq!(row.center, c.parse().unwrap());
            assert_eq!(row.tie_count, d);
            assert_eq!(row.lo, a);
            assert_eq!(row.hi, b);
        }

        // And for [1.5, 1.5, 3, 4]: (1.5,2,1,2) twice, (3,1,3,3), (4,1,4,4).
        let rows = cs_decomposition(&cs(&["1.5", "1.5", "3", "4"]));
        let expected = [
            ("1.5", 2, 1, 2),
            ("1.5", 2, 1, 2),
            ("3", 1, 3, 3),
            ("4", 1, 4, 4),
        ];
        for (row, (c, d, a, b)) in rows.iter().zip(expected) {
            assert_eq!(row.center, c.parse().unwrap());
            assert_eq!(row.tie_count, d);
            assert_eq!(row.lo, a);
            assert_eq!(row.hi, b);
        }
    }

    #[test]
    fn cs_to_pm_both_paper_vectors() {
        assert_eq!(
            blocks(&cs_to_pm(&cs(&["1", "2.5", "2.5", "4"]))),
            vec![(1, 1), (2, 3), (2, 3), (4, 4)]
        );
        assert_eq!(
            blocks(&cs_to_pm(&cs(&["1.5", "1.5", "3", "4"]))),
            vec![(1, 2), (1, 2), (3, 3), (4, 4)]
        );
        assert_eq!(blocks(&cs_to_pm(&cs(&["1"]))), vec![(1, 1)]);
    }

    #[test]
    fn pm_to_ranking_inverts_worked_example() {
        assert_eq!(pm_to_ranking(&pm(&[&[1], &[2, 3], &[2, 3], &[4]])), worked_example());
        assert_eq!(
            pm_to_ranking(&pm(&[&[1, 2], &[1, 2], &[3], &[4]])),
            ranking(4, vec![vec![0, 1], vec![2], vec![3]])
        );
        assert_eq!(pm_to_ranking(&pm(&[&[1]])), ranking(1, vec![vec![0]]));
    }

    #[test]
    fn ranking_to_cs_matches_composition() {
        for r in [
            worked_example(),
            ranking(3, vec![vec![0, 1, 2]]),
            ranking(4, (0..4).map(|i| vec![i]).collect()),
            ranking(5, vec![vec![3], vec![0, 4], vec![1, 2]]),
        ] {
            assert_eq!(ranking_to_cs(&r), pm_to_cs(&ranking_to_pm(&r)));
        }
    }

    #[test]
    fn ranking_to_cs_fixed_points() {
        assert_eq!(
            ranking_to_cs(&worked_example()).values(),
            ["1", "2.5", "2.5", "4"].map(|v| v.parse().unwrap())
        );
        assert_eq!(
            ranking_to_cs(&ranking(3, vec![vec![0, 1, 2]])).values(),
            [Position::from_int(2); 3]
        );
        assert_eq!(
            ranking_to_cs(&ranking(4, (0..4).map(|i| vec![i]).collect())).values(),
            [1, 2, 3, 4].map(Position::from_int)
        );
    }

    #[test]
    fn cs_to_ranking_examples() {
        assert_eq!(
            cs_to_ranking(&cs(&["1.5", "1.5", "3", "4"])),
            ranking(4, vec![vec![0, 1], vec![2], vec![3]])
        );
        assert_eq!(
            cs_to_ranking(&cs(&["1", "2", "3", "4"])),
            ranking(4, (0..4).map(|i| vec![i]).collect())
        );
        assert_eq!(
            cs_to_ranking(&cs(&["2", "2", "2"])),
            ranking(3, vec![vec![0, 1, 2]])
        );
    }

    #[test]
    fn entrywise_value_is_block_average() {
        // CS_i = sum(PM_i) / |PM_i|, checked exactly on doubled values:
        // 2 * sum(PM_i) == doubled(CS_i) * |PM_i|.
        for r in [
            worked_example(),
            ranking(5, vec![vec![1, 3], vec![0, 2, 4]]),
        ] {
            let pm = ranking_to_pm(&r);
            let cs = ranking_to_cs(&r);
            for (block, value) in pm.entries().iter().zip(cs.values()) {
                let block_sum: i64 = block.positions().map(|p| p as i64).sum();
                assert_eq!(2 * block_sum, value.doubled() * block.len() as i64);
            }
        }
    }
}
