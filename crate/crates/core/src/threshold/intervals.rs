use serde::Serialize;

use crate::BuildingString;

/// A maximal run `[lo, hi]` (1-based, inclusive) of equal bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
    pub trivial: bool,
}

impl Interval {
    fn new(lo: usize, hi: usize) -> Self {
        Interval {
            lo,
            hi,
            trivial: lo == hi,
        }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.lo <= p && p <= self.hi
    }

    pub fn positions(&self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalDecomposition {
    pub zero_intervals: Vec<Interval>,
    pub one_intervals: Vec<Interval>,
}

impl IntervalDecomposition {
    /// All runs left to right with their bit.
    pub fn runs(&self) -> Vec<(bool, Interval)> {
        let mut all: Vec<(bool, Interval)> = self
            .zero_intervals
            .iter()
            .map(|&i| (false, i))
            .chain(self.one_intervals.iter().map(|&i| (true, i)))
            .collect();
        all.sort_by_key(|(_, i)| i.lo);
        all
    }
}

pub fn intervals(b: &BuildingString) -> IntervalDecomposition {
    let mut zero_intervals = Vec::new();
    let mut one_intervals = Vec::new();
    let bits = b.bits();
    let mut lo = 0;
    for p in 1..=bits.len() {
        if p == bits.len() || bits[p] != bits[lo] {
            let run = Interval::new(lo + 1, p);
            if bits[lo] {
                one_intervals.push(run);
            } else {
                zero_intervals.push(run);
            }
            lo = p;
        }
    }
    IntervalDecomposition {
        zero_intervals,
        one_intervals,
    }
}
