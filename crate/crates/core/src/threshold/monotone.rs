use num_bigint::BigInt;
use serde::Serialize;

use super::{intervals, Interval, Labeling};
use crate::{BuildingString, Error, Result};

/// The ordering facts that Algorithm 1 labels satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MonotonicityClause {
    /// `c(i) < c(j)` for `i`, `j` in different 1-intervals with `i < j`.
    OneIntervalsIncrease,
    /// Labels are equal inside a 1-interval.
    OneIntervalConstant,
    /// Labels are equal on the leading 0-interval.
    LeadingZerosConstant,
    /// `c(i) > c(j)` for `i`, `j` in different later 0-intervals with `i < j`.
    ZeroIntervalsDecrease,
    /// Labels strictly increase inside a later non-trivial 0-interval.
    ZeroIntervalIncreases,
    /// Every dominating label exceeds every isolated label.
    DominatingAboveIsolated,
}

/// A violated clause with the offending pair of vertices `i < j`
/// (for the separation clause: `i` dominating, `j` isolated).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityViolation {
    pub clause: MonotonicityClause,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonotonicityVerdict {
    pub holds: bool,
    pub violation: Option<MonotonicityViolation>,
}

/// Checks the clauses in the order they are listed in [`MonotonicityClause`]
/// and reports the first failure.
pub fn check_label_monotonicity(b: &BuildingString, l: &Labeling) -> Result<MonotonicityVerdict> {
    if l.len() != b.len() {
        return Err(Error::OutOfRange(format!(
            "labeling has {} labels for a building string of length {}",
            l.len(),
            b.len()
        )));
    }
    let d = intervals(b);
    let c = |v: usize| &l.c[v - 1];
    let violation = one_clauses(&d.one_intervals, &c)
        .or_else(|| zero_clauses(&d.zero_intervals, &c))
        .or_else(|| separation(b, l));
    Ok(MonotonicityVerdict {
        holds: violation.is_none(),
        violation,
    })
}

fn found(clause: MonotonicityClause, i: usize, j: usize) -> Option<MonotonicityViolation> {
    Some(MonotonicityViolation { clause, i, j })
}

fn one_clauses<'a>(
    runs: &[Interval],
    c: &impl Fn(usize) -> &'a BigInt,
) -> Option<MonotonicityViolation> {
    for (a, ra) in runs.iter().enumerate() {
        for rb in &runs[a + 1..] {
            for i in ra.positions() {
                for j in rb.positions() {
                    if c(i) >= c(j) {
                        return found(MonotonicityClause::OneIntervalsIncrease, i, j);
                    }
                }
            }
        }
    }
    for r in runs {
        for i in r.lo..r.hi {
            if c(i) != c(i + 1) {
                return found(MonotonicityClause::OneIntervalConstant, i, i + 1);
            }
        }
    }
    None
}

fn zero_clauses<'a>(
    runs: &[Interval],
    c: &impl Fn(usize) -> &'a BigInt,
) -> Option<MonotonicityViolation> {
    let (leading, later) = runs.split_first()?;
    // A string always starts with 0 (k >= 2), so the first 0-run is the leading one.
    for i in leading.lo..leading.hi {
        if c(i) != c(i + 1) {
            return found(MonotonicityClause::LeadingZerosConstant, i, i + 1);
        }
    }
    for (a, ra) in later.iter().enumerate() {
        for rb in &later[a + 1..] {
            for i in ra.positions() {
                for j in rb.positions() {
                    if c(i) <= c(j) {
                        return found(MonotonicityClause::ZeroIntervalsDecrease, i, j);
                    }
                }
            }
        }
    }
    for r in later {
        for i in r.lo..r.hi {
            if c(i) >= c(i + 1) {
                return found(MonotonicityClause::ZeroIntervalIncreases, i, i + 1);
            }
        }
    }
    None
}

fn separation(b: &BuildingString, l: &Labeling) -> Option<MonotonicityViolation> {
    let min_dom = (1..=b.len())
        .filter(|&p| b.bit(p))
        .min_by(|&p, &q| l.label(p).cmp(l.label(q)))?;
    let max_iso = (1..=b.len())
        .filter(|&p| !b.bit(p))
        .max_by(|&p, &q| l.label(p).cmp(l.label(q)))?;
    if l.label(min_dom) <= l.label(max_iso) {
        return found(MonotonicityClause::DominatingAboveIsolated, min_dom, max_iso);
    }
    None
}
