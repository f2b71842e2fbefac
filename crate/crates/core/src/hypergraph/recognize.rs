use std::collections::HashSet;

use num_integer::binomial;

use super::{BuildingString, Hypergraph};
use crate::{Error, Guard, Result};

/// Largest vertex count accepted by [`recognize_zero_one_constructable`].
pub const RECOGNIZE_GUARD: usize = 20;

/// A successful recognition: `build(string)` relabelled by `order` is the input.
///
/// `order[p - 1]` is the input vertex placed at building position `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub string: BuildingString,
    pub order: Vec<usize>,
}

/// Decides whether a k-uniform hypergraph is {0,1}-constructable.
///
/// Vertices are peeled from the last building position backwards: a vertex
/// can be the last one added as isolated iff it has degree 0, and as
/// dominating iff every k-subset of the remaining vertices containing it is
/// an edge. The search backtracks over all peel orders (with a memo of dead
/// vertex sets) instead of trusting a greedy choice.
pub fn recognize_zero_one_constructable(h: &Hypergraph) -> Result<Option<Recognition>> {
    recognize_with(h, Guard::Enforce)
}

pub fn recognize_with(h: &Hypergraph, guard: Guard) -> Result<Option<Recognition>> {
    let k = h.uniformity().ok_or(Error::NotUniform)?;
    guard.check("recognize vertex count", h.n(), RECOGNIZE_GUARD)?;
    if k < 2 {
        return Err(Error::OutOfRange(format!("edge size k must be at least 2, got {k}")));
    }
    let edges = h.edge_masks()?;
    let full = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    let mut search = Peeler {
        k,
        edges,
        dead: HashSet::new(),
        peeled: Vec::with_capacity(h.n()),
    };
    if !search.peel(full) {
        return Ok(None);
    }
    // `peeled` runs from the last building position to the first.
    let (order, bits): (Vec<usize>, Vec<bool>) = search
        .peeled
        .iter()
        .rev()
        .map(|&(v, dominating)| (v + 1, dominating))
        .unzip();
    let string = BuildingString::new(k, bits)?;
    Ok(Some(Recognition { string, order }))
}

struct Peeler {
    k: usize,
    edges: Vec<u64>,
    dead: HashSet<u64>,
    peeled: Vec<(usize, bool)>,
}

impl Peeler {
    fn peel(&mut self, remaining: u64) -> bool {
        let r = remaining.count_ones() as usize;
        if r == 0 {
            return true;
        }
        if self.dead.contains(&remaining) {
            return false;
        }
        let live: Vec<u64> = self
            .edges
            .iter()
            .copied()
            .filter(|&e| e & !remaining == 0)
            .collect();
        let dominating_degree = if r >= self.k {
            Some(binomial(r as u64 - 1, self.k as u64 - 1))
        } else {
            None
        };
        for v in (0..64).rev().filter(|&v| remaining >> v & 1 == 1) {
            let bit = 1u64 << v;
            let degree = live.iter().filter(|&&e| e & bit != 0).count() as u64;
            let choice = if degree == 0 {
                Some(false)
            } else if Some(degree) == dominating_degree {
                Some(true)
            } else {
                None
            };
            if let Some(dominating) = choice {
                self.peeled.push((v, dominating));
                if self.peel(remaining & !bit) {
                    return true;
                }
                self.peeled.pop();
            }
        }
        self.dead.insert(remaining);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform(n: usize, k: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::uniform(n, k, edges.iter().map(|e| e.to_vec())).unwrap()
    }

    #[test]
    fn round_trips_built_strings() {
        for word in ["001101", "00101", "000", "0011111", "00100100"] {
            let b = BuildingString::parse(word, 3).unwrap();
            let h = Hypergraph::build(&b);
            let rec = recognize_zero_one_constructable(&h).unwrap().unwrap();
            assert_eq!(rec.string, b);
            assert_eq!(Hypergraph::build(&rec.string).relabel(&rec.order).unwrap(), h);
        }
    }

    #[test]
    fn recognises_relabelled_copies() {
        let b = BuildingString::parse("0010110", 3).unwrap();
        let h = Hypergraph::build(&b).relabel(&[7, 3, 5, 1, 2, 6, 4]).unwrap();
        let rec = recognize_zero_one_constructable(&h).unwrap().unwrap();
        assert_eq!(Hypergraph::build(&rec.string).relabel(&rec.order).unwrap(), h);
    }

    #[test]
    fn rejects_non_constructable() {
        let h = uniform(6, 3, &[&[1, 2, 3], &[3, 4, 5], &[1, 5, 6]]);
        assert_eq!(recognize_zero_one_constructable(&h).unwrap(), None);
        // w = 1, then -2, -1, 0, 1, 2 as vertices 2..=6
        let h = uniform(6, 4, &[&[1, 2, 5, 6], &[1, 3, 4, 6], &[1, 3, 5, 6], &[1, 4, 5, 6]]);
        assert_eq!(recognize_zero_one_constructable(&h).unwrap(), None);
    }

    #[test]
    fn guard_and_uniformity() {
        let big = Hypergraph::edgeless_uniform(21, 3);
        assert!(matches!(
            recognize_zero_one_constructable(&big),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(recognize_with(&big, Guard::Ignore).unwrap().is_some());
        let mixed = Hypergraph::new(3, vec![vec![1], vec![2, 3]]).unwrap();
        assert!(matches!(
            recognize_zero_one_constructable(&mixed),
            Err(Error::NotUniform)
        ));
    }
}
