use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::Labeling;
use crate::{Error, Guard, Hypergraph, Result, MASK_VERTICES};

/// Largest vertex count accepted by [`verify_t2`].
pub const VERIFY_T2_GUARD: usize = 24;
/// Largest vertex count accepted by [`verify_t3`].
pub const VERIFY_T3_GUARD: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T2Verdict {
    pub holds: bool,
    /// Lexicographically first k-subset whose label sum disagrees with membership.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct T3Verdict {
    pub holds: bool,
    /// First pair `x < y` with neither `x ≪ y` nor `y ≪ x`.
    pub witness: Option<(usize, usize)>,
}

/// Checks that a k-subset is an edge iff its label sum exceeds the threshold.
pub fn verify_t2(h: &Hypergraph, l: &Labeling) -> Result<T2Verdict> {
    verify_t2_with(h, l, Guard::Enforce)
}

pub fn verify_t2_with(h: &Hypergraph, l: &Labeling, guard: Guard) -> Result<T2Verdict> {
    let k = h.uniformity().ok_or(Error::NotUniform)?;
    guard.check("verify-t2 vertex count", h.n(), VERIFY_T2_GUARD)?;
    if l.len() != h.n() {
        return Err(Error::OutOfRange(format!(
            "labeling has {} labels for {} vertices",
            l.len(),
            h.n()
        )));
    }
    let witness = match small_labels(l) {
        Some((c, tau)) => first_violation(h, k, |s| s.iter().map(|&v| c[v - 1]).sum::<i128>() > tau),
        None => first_violation(h, k, |s| s.iter().map(|&v| l.label(v)).sum::<BigInt>() > l.tau),
    };
    Ok(T2Verdict {
        holds: witness.is_none(),
        witness,
    })
}

/// Labels as `i128` when every value fits in `i64`, so sums of up to 64 terms cannot overflow.
fn small_labels(l: &Labeling) -> Option<(Vec<i128>, i128)> {
    let c = l
        .c
        .iter()
        .map(|x| x.to_i64().map(i128::from))
        .collect::<Option<Vec<_>>>()?;
    Some((c, i128::from(l.tau.to_i64()?)))
}

fn first_violation(h: &Hypergraph, k: usize, above: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    let subsets = (1..=h.n()).combinations(k);
    match h.edge_masks() {
        Ok(masks) => {
            let edges: HashSet<u64> = masks.into_iter().collect();
            let mask = |s: &[usize]| s.iter().fold(0u64, |a, &v| a | 1 << (v - 1));
            subsets.into_iter().find(|s| above(s) != edges.contains(&mask(s)))
        }
        Err(_) => subsets.into_iter().find(|s| above(s) != h.contains_edge(s)),
    }
}

/// Checks that every vertex pair is comparable under replacement:
/// `x ≪ y` iff for every (k-1)-set `W` avoiding both, `W + x ∈ E` implies `W + y ∈ E`.
pub fn verify_t3(h: &Hypergraph) -> Result<T3Verdict> {
    verify_t3_with(h, Guard::Enforce)
}

pub fn verify_t3_with(h: &Hypergraph, guard: Guard) -> Result<T3Verdict> {
    let k = h.uniformity().ok_or(Error::NotUniform)?;
    guard.check("verify-t3 vertex count", h.n(), VERIFY_T3_GUARD)?;
    if k == 0 {
        return Err(Error::OutOfRange("replacement order needs k >= 1".into()));
    }
    let n = h.n();
    let witness = if n <= MASK_VERTICES {
        incomparable_pair_masks(h, k)
    } else {
        incomparable_pair(h, k)
    };
    Ok(T3Verdict {
        holds: witness.is_none(),
        witness,
    })
}

/// Whether `(x_only, y_only)` has been seen for both directions.
fn incomparable(mut memberships: impl Iterator<Item = (bool, bool)>) -> bool {
    let (mut x_only, mut y_only) = (false, false);
    memberships.any(|pair| {
        match pair {
            (true, false) => x_only = true,
            (false, true) => y_only = true,
            _ => {}
        }
        x_only && y_only
    })
}

fn incomparable_pair_masks(h: &Hypergraph, k: usize) -> Option<(usize, usize)> {
    let n = h.n();
    let edges: HashSet<u64> = h
        .edge_masks()
        .expect("caller checked the mask limit")
        .into_iter()
        .collect();
    let bit = |v: usize| 1u64 << (v - 1);
    let rests: Vec<u64> = (1..=n)
        .combinations(k - 1)
        .map(|w| w.iter().map(|&v| bit(v)).fold(0, |a, b| a | b))
        .collect();
    (1..=n).tuple_combinations().find(|&(x, y)| {
        let (bx, by) = (bit(x), bit(y));
        incomparable(
            rests
                .iter()
                .filter(|&&w| w & (bx | by) == 0)
                .map(|&w| (edges.contains(&(w | bx)), edges.contains(&(w | by)))),
        )
    })
}

fn incomparable_pair(h: &Hypergraph, k: usize) -> Option<(usize, usize)> {
    let n = h.n();
    let with = |w: &[usize], v: usize| {
        let mut e = w.to_vec();
        e.push(v);
        e.sort_unstable();
        h.contains_edge(&e)
    };
    (1..=n).tuple_combinations().find(|&(x, y)| {
        incomparable(
            (1..=n)
                .filter(|&v| v != x && v != y)
                .combinations(k - 1)
                .map(|w| (with(&w, x), with(&w, y))),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::threshold::algorithm1_labels;
    use crate::BuildingString;

    fn h1() -> Hypergraph {
        Hypergraph::uniform(5, 3, vec![vec![1, 4, 5], vec![2, 3, 5], vec![2, 4, 5], vec![3, 4, 5]]).unwrap()
    }

    fn h2() -> Hypergraph {
        Hypergraph::uniform(5, 3, vec![vec![1, 2, 3], vec![1, 3, 4], vec![2, 3, 5], vec![3, 4, 5]]).unwrap()
    }

    #[test]
    fn h1_labeling_holds() {
        let l = Labeling::from_i64s(&[-2, -1, 0, 1, 2], 0);
        assert!(verify_t2(&h1(), &l).unwrap().holds);
        assert!(verify_t3(&h1()).unwrap().holds);
    }

    #[test]
    fn algorithm1_example_holds_with_big_labels() {
        let b = BuildingString::parse("0010100011101", 3).unwrap();
        let h = Hypergraph::build(&b);
        let l = algorithm1_labels(&b).unwrap();
        assert!(verify_t2(&h, &l).unwrap().holds);

        // Same check through the BigInt path.
        let shift = BigInt::from(1u64) << 80;
        let scaled = Labeling::new(l.c.iter().map(|x| x * &shift).collect(), &l.tau * &shift);
        assert!(verify_t2(&h, &scaled).unwrap().holds);
    }

    #[test]
    fn zero_labels_fail_on_single_edge() {
        let h = Hypergraph::uniform(3, 3, vec![vec![1, 2, 3]]).unwrap();
        let v = verify_t2(&h, &Labeling::from_i64s(&[0, 0, 0], 0)).unwrap();
        assert_eq!(v.witness, Some(vec![1, 2, 3]));
        assert!(!v.holds);
    }

    #[test]
    fn t3_examples() {
        for k in 2..=4 {
            for n in k..=9 {
                for connected in [true, false] {
                    let b = BuildingString::antiregular(n, k, connected).unwrap();
                    assert!(verify_t3(&Hypergraph::build(&b)).unwrap().holds, "{b} k={k}");
                }
            }
        }
        let h = Hypergraph::uniform(6, 3, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6]]).unwrap();
        let v = verify_t3(&h).unwrap();
        assert!(!v.holds && v.witness.is_some());
        assert!(!verify_t3(&h2()).unwrap().holds);
    }

    #[test]
    fn mask_and_list_paths_agree() {
        let cases = [
            Hypergraph::uniform(6, 3, vec![vec![1, 2, 3], vec![3, 4, 5], vec![1, 5, 6]]).unwrap(),
            h1(),
            h2(),
            Hypergraph::build(&BuildingString::parse("0010100011", 3).unwrap()),
        ];
        for h in &cases {
            assert_eq!(incomparable_pair_masks(h, 3), incomparable_pair(h, 3));
        }
    }

    #[test]
    fn guards_and_shape_errors() {
        let big = Hypergraph::edgeless_uniform(25, 3);
        let l = Labeling::from_i64s(&[0; 25], 0);
        assert!(matches!(verify_t2(&big, &l), Err(Error::GuardExceeded { .. })));
        assert!(verify_t2_with(&big, &l, Guard::Ignore).unwrap().holds);
        assert!(matches!(verify_t3(&Hypergraph::edgeless_uniform(21, 2)), Err(Error::GuardExceeded { .. })));
        assert!(verify_t2(&h1(), &Labeling::from_i64s(&[0], 0)).is_err());
        assert!(matches!(verify_t3(&Hypergraph::edgeless(3)), Err(Error::NotUniform)));
    }
}
