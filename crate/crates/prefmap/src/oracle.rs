//! Exhaustive enumeration of ties-permitted rankings on small rosters.
//!
//! The iterator walks the tree of ordered partitions: pick the top tie-group
//! as a non-empty subset of the remaining alternatives, recurse on the rest.
//! Subsets are taken in lexicographic order of their sorted members, which
//! makes the stream deterministic and duplicate-free. The total count is the
//! ordered Bell number of n (1, 3, 13, 75, 541, ... from n = 1), which grows
//! fast enough that sizes above [`MAX_ENUMERATION_N`] need an explicit
//! opt-in.

use std::collections::HashSet;

use thiserror::Error;

use crate::convert::{cs_to_pm, cs_to_ranking, pm_to_cs, pm_to_ranking, ranking_to_cs, ranking_to_pm};
use crate::ranking::Ranking;
use crate::roster::Roster;
use crate::validate::{validate_cs, validate_pm};

/// Largest roster size enumerable without an explicit override
/// (545,835 rankings).
pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("cannot enumerate rankings of an empty roster")]
    Empty,
    #[error("n = {n} exceeds the enumeration guard of {max}; this is an exhaustive search")]
    TooLarge { n: usize, max: usize },
}

/// One node of the search: the alternatives not yet ranked, and the subset
/// of them (as sorted indices into `remaining`) chosen as the next group.
#[derive(Debug)]
struct Frame {
    remaining: Vec<usize>,
    subset: Vec<usize>,
}

impl Frame {
    fn descend(remaining: Vec<usize>) -> Self {
        Frame {
            remaining,
            subset: vec![0],
        }
    }

    fn group(&self) -> Vec<usize> {
        self.subset.iter().map(|&i| self.remaining[i]).collect()
    }

    fn rest(&self) -> Vec<usize> {
        let mut chosen = self.subset.iter().copied().peekable();
        let mut rest = Vec::with_capacity(self.remaining.len() - self.subset.len());
        for (i, &alt) in self.remaining.iter().enumerate() {
            if chosen.peek() == Some(&i) {
                chosen.next();
            } else {
                rest.push(alt);
            }
        }
        rest
    }

    /// Steps `subset` to its lexicographic successor among the non-empty
    /// subsets of `0..remaining.len()`. False when exhausted.
    fn advance(&mut self) -> bool {
        let max = self.remaining.len() - 1;
        let &last = self.subset.last().unwrap();
        if last < max {
            self.subset.push(last + 1);
            return true;
        }
        self.subset.pop();
        match self.subset.last_mut() {
            Some(last) => {
                *last += 1;
                true
            }
            None => false,
        }
    }
}

/// Yields every ties-permitted ranking of `x1..xn` exactly once.
#[derive(Debug)]
pub struct WeakOrderIterator {
    roster: Roster,
    stack: Vec<Frame>,
    started: bool,
    done: bool,
}

impl WeakOrderIterator {
    fn new(n: usize) -> Result<Self, OracleError> {
        if n == 0 {
            return Err(OracleError::Empty);
        }
        Ok(WeakOrderIterator {
            roster: Roster::numbered(n).expect("n >= 1"),
            stack: Vec::with_capacity(n),
            started: false,
            done: false,
        })
    }

    /// Roster size being enumerated.
    pub fn n(&self) -> usize {
        self.roster.len()
    }

    /// Pushes first-subset frames until no alternatives remain.
    fn descend_from(&mut self, mut remaining: Vec<usize>) {
        while !remaining.is_empty() {
            let frame = Frame::descend(remaining);
            remaining = frame.rest();
            self.stack.push(frame);
        }
    }

    fn current(&self) -> Ranking {
        let groups = self.stack.iter().map(Frame::group).collect();
        Ranking::from_groups_unchecked(self.roster.clone(), groups)
    }
}

impl Iterator for WeakOrderIterator {
    type Item = Ranking;

    fn next(&mut self) -> Option<Ranking> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            let all = (0..self.n()).collect();
            self.descend_from(all);
            return Some(self.current());
        }
        loop {
            match self.stack.last_mut() {
                None => {
                    self.done = true;
                    return None;
                }
                Some(frame) => {
                    if frame.advance() {
                        let rest = frame.rest();
                        self.descend_from(rest);
                        return Some(self.current());
                    }
                    self.stack.pop();
                }
            }
        }
    }
}

/// Enumerates all rankings of `n` alternatives, refusing sizes beyond
/// [`MAX_ENUMERATION_N`].
pub fn enumerate_weak_orders(n: usize) -> Result<WeakOrderIterator, OracleError> {
    if n > MAX_ENUMERATION_N {
        return Err(OracleError::TooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    WeakOrderIterator::new(n)
}

/// Like [`enumerate_weak_orders`] but without the size guard, for callers
/// who explicitly accept the combinatorial cost.
pub fn enumerate_weak_orders_unbounded(n: usize) -> Result<WeakOrderIterator, OracleError> {
    WeakOrderIterator::new(n)
}

/// Outcome of running every conversion law over every ranking of size n.
///
/// Success means both distinct-image counts equal the enumeration total
/// (the conversions are injective) and no ranking broke a law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub n: usize,
    pub total: u64,
    pub pm_images_distinct: u64,
    pub cs_images_distinct: u64,
    pub roundtrip_failures: u64,
}

impl BijectionReport {
    pub fn ok(&self) -> bool {
        self.pm_images_distinct == self.total
            && self.cs_images_distinct == self.total
            && self.roundtrip_failures == 0
    }
}

fn run_check(iter: WeakOrderIterator) -> BijectionReport {
    let n = iter.n();
    let mut total: u64 = 0;
    let mut failures: u64 = 0;
    let mut pm_images: HashSet<Vec<(usize, usize)>> = HashSet::new();
    let mut cs_images: HashSet<Vec<i64>> = HashSet::new();
    let triangular_doubled = (n as i64) * (n as i64 + 1);

    for ranking in iter {
        total += 1;
        let pm = ranking_to_pm(&ranking);
        let cs = ranking_to_cs(&ranking);
        pm_images.insert(pm.entries().iter().map(|b| (b.lo(), b.hi())).collect());
        cs_images.insert(cs.values().iter().map(|v| v.doubled()).collect());

        let laws_hold = validate_pm(&pm.entry_sets()).is_valid()
            && validate_cs(cs.values()).is_valid()
            && pm_to_cs(&pm) == cs
            && cs_to_pm(&cs) == pm
            && pm_to_ranking(&pm) == ranking
            && cs_to_ranking(&cs) == ranking
            && cs.sum().doubled() == triangular_doubled;
        if !laws_hold {
            failures += 1;
        }
    }

    BijectionReport {
        n,
        total,
        pm_images_distinct: pm_images.len() as u64,
        cs_images_distinct: cs_images.len() as u64,
        roundtrip_failures: failures,
    }
}

/// Enumerates all rankings of size n and checks every conversion law on each
/// one, counting distinct images along the way.
pub fn check_bijection(n: usize) -> Result<BijectionReport, OracleError> {
    enumerate_weak_orders(n).map(run_check)
}

/// [`check_bijection`] without the size guard.
pub fn check_bijection_unbounded(n: usize) -> Result<BijectionReport, OracleError> {
    enumerate_weak_orders_unbounded(n).map(run_check)
}
