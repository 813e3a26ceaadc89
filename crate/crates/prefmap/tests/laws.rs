//! Exhaustive verification of the conversion laws on small rosters.
//!
//! The enumeration count is cross-checked against the ordered Bell numbers
//! computed here from their recurrence, independently of the iterator being
//! tested. Every law is asserted exactly; there are no tolerances anywhere.

use std::collections::HashSet;

use prefmap::io::{decode_json, encode_json, format_ranking, parse_ranking, Document};
use prefmap::{
    check_bijection, cs_to_pm, cs_to_ranking, enumerate_weak_orders, pm_to_cs, pm_to_ranking,
    ranking_to_cs, ranking_to_pm, validate_cs, validate_pm, Position, Ranking,
};

/// Ordered Bell numbers from the recurrence a(n) = sum C(n,k) a(n-k), a(0)=1.
/// This is the independent count oracle; it never touches the iterator.
fn ordered_bell(n: usize) -> u64 {
    let mut choose = vec![vec![0u64; n + 1]; n + 1];
    for i in 0..=n {
        choose[i][0] = 1;
        for j in 1..=i {
            choose[i][j] = choose[i - 1][j - 1] + if j <= i - 1 { choose[i - 1][j] } else { 0 };
        }
    }
    let mut a = vec![0u64; n + 1];
    a[0] = 1;
    for m in 1..=n {
        a[m] = (1..=m).map(|k| choose[m][k] * a[m - k]).sum();
    }
    a[n]
}

#[test]
fn enumeration_counts_match_recurrence() {
    let frozen = [1u64, 3, 13, 75, 541];
    for (i, &expected) in frozen.iter().enumerate() {
        let n = i + 1;
        assert_eq!(ordered_bell(n), expected, "recurrence at n = {n}");
        let counted = enumerate_weak_orders(n).unwrap().count() as u64;
        assert_eq!(counted, expected, "enumeration at n = {n}");
    }
}

#[test]
fn all_laws_hold_exhaustively_up_to_five() {
    for n in 1..=5usize {
        let triangular_doubled = (n as i64) * (n as i64 + 1);
        for ranking in enumerate_weak_orders(n).unwrap() {
            let pm = ranking_to_pm(&ranking);
            let cs = ranking_to_cs(&ranking);

            // Both validators accept the images.
            assert!(validate_pm(&pm.entry_sets()).is_valid());
            assert!(validate_cs(cs.values()).is_valid());

            // Round-trip A: pm -> cs -> pm is the identity.
            assert_eq!(cs_to_pm(&pm_to_cs(&pm)), pm);
            // Round-trip B: cs -> pm -> cs is the identity.
            assert_eq!(pm_to_cs(&cs_to_pm(&cs)), cs);
            // Round-trip C: both paths return the original ranking.
            assert_eq!(pm_to_ranking(&pm), ranking);
            assert_eq!(cs_to_ranking(&cs), ranking);

            // The two routes from the ranking agree entrywise.
            assert_eq!(pm_to_cs(&pm), cs);

            // Sum law: values total n(n+1)/2, and each value is the exact
            // average of its entry, checked as 2*sum(entry) = value*len.
            assert_eq!(cs.sum().doubled(), triangular_doubled);
            let mut entry_average_doubled_sum = 0i64;
            for (block, value) in pm.entries().iter().zip(cs.values()) {
                let block_sum: i64 = block.positions().map(|p| p as i64).sum();
                assert_eq!(2 * block_sum, value.doubled() * block.len() as i64);
                entry_average_doubled_sum += value.doubled();
            }
            assert_eq!(entry_average_doubled_sum, triangular_doubled);
        }
    }
}

#[test]
fn order_is_preserved_across_representations() {
    for n in 1..=5usize {
        for ranking in enumerate_weak_orders(n).unwrap() {
            let pm = ranking_to_pm(&ranking);
            let cs = ranking_to_cs(&ranking);
            for i in 0..n {
                for j in 0..n {
                    let strictly_preferred =
                        ranking.group_of(i).unwrap() < ranking.group_of(j).unwrap();
                    let value_order = cs.value(i).unwrap() < cs.value(j).unwrap();
                    let (bi, bj) = (pm.entry(i).unwrap(), pm.entry(j).unwrap());
                    let block_order = bi.hi() < bj.lo();
                    assert_eq!(strictly_preferred, value_order);
                    assert_eq!(strictly_preferred, block_order);
                }
            }
        }
    }
}

#[test]
fn conversions_are_bijections_on_small_rosters() {
    for n in 1..=5usize {
        let expected = ordered_bell(n);
        let report = check_bijection(n).unwrap();
        assert!(report.ok(), "{report:?}");
        assert_eq!(report.total, expected);
        assert_eq!(report.pm_images_distinct, expected);
        assert_eq!(report.cs_images_distinct, expected);
        assert_eq!(report.roundtrip_failures, 0);
    }
}

/// validate_cs accepts exactly the image of ranking_to_cs: every length-n
/// vector over the half-integer grid 1..=n is either an image or rejected.
#[test]
fn cs_validator_matches_image_exactly_up_to_five() {
    for n in 1..=5usize {
        let images: HashSet<Vec<i64>> = enumerate_weak_orders(n)
            .unwrap()
            .map(|r| ranking_to_cs(&r).values().iter().map(|v| v.doubled()).collect())
            .collect();

        // All half-integers from 1 to n: doubled values 2, 3, ..., 2n.
        let grid: Vec<i64> = (2..=2 * n as i64).collect();
        let mut candidate = vec![0usize; n];
        let mut accepted = 0u64;
        loop {
            let values: Vec<Position> = candidate
                .iter()
                .map(|&g| Position::from_doubled(grid[g]))
                .collect();
            let is_image = images.contains(
                &values.iter().map(|v| v.doubled()).collect::<Vec<i64>>(),
            );
            let is_valid = validate_cs(&values).is_valid();
            assert_eq!(is_valid, is_image, "n = {n}, values = {values:?}");
            if is_valid {
                accepted += 1;
            }

            // Odometer over the grid.
            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                candidate[k] += 1;
                if candidate[k] < grid.len() {
                    break;
                }
                candidate[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        assert_eq!(accepted, ordered_bell(n), "n = {n}");
    }
}

/// validate_pm accepts exactly the image of ranking_to_pm: every length-n
/// assignment of consecutive sub-intervals of 1..=n is either an image or
/// rejected. (Non-interval shapes are already rejected per entry.)
#[test]
fn pm_validator_matches_image_exactly_up_to_four() {
    for n in 1..=4usize {
        let images: HashSet<Vec<(usize, usize)>> = enumerate_weak_orders(n)
            .unwrap()
            .map(|r| {
                ranking_to_pm(&r)
                    .entries()
                    .iter()
                    .map(|b| (b.lo(), b.hi()))
                    .collect()
            })
            .collect();

        let intervals: Vec<(usize, usize)> = (1..=n)
            .flat_map(|lo| (lo..=n).map(move |hi| (lo, hi)))
            .collect();
        let mut candidate = vec![0usize; n];
        let mut accepted = 0u64;
        loop {
            let sets: Vec<std::collections::BTreeSet<i64>> = candidate
                .iter()
                .map(|&k| {
                    let (lo, hi) = intervals[k];
                    (lo..=hi).map(|p| p as i64).collect()
                })
                .collect();
            let shape: Vec<(usize, usize)> = candidate.iter().map(|&k| intervals[k]).collect();
            let is_valid = validate_pm(&sets).is_valid();
            assert_eq!(is_valid, images.contains(&shape), "n = {n}, pm = {shape:?}");
            if is_valid {
                accepted += 1;
            }

            let mut k = 0;
            loop {
                if k == n {
                    break;
                }
                candidate[k] += 1;
                if candidate[k] < intervals.len() {
                    break;
                }
                candidate[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        assert_eq!(accepted, ordered_bell(n), "n = {n}");
    }
}

#[test]
fn io_round_trips_over_all_enumerated_rankings() {
    for n in 1..=5usize {
        for ranking in enumerate_weak_orders(n).unwrap() {
            let text = format_ranking(&ranking);
            // Exact identity when the roster is supplied; without it the
            // parser rebuilds the roster in appearance order, which still
            // reproduces the same expression.
            assert_eq!(
                parse_ranking(&text, Some(ranking.roster())).unwrap(),
                ranking
            );
            let reparsed = parse_ranking(&text, None).unwrap();
            assert_eq!(format_ranking(&reparsed), text);

            let pm = ranking_to_pm(&ranking);
            let cs = ranking_to_cs(&ranking);
            for document in [
                Document::Ranking(ranking.clone()),
                Document::Pm(pm),
                Document::Cs(cs),
            ] {
                let encoded = encode_json(&document);
                assert_eq!(decode_json(&encoded, None).unwrap(), document);
            }
        }
    }
}
