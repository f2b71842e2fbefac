use std::collections::HashMap;

use crate::{check_mask_limit, Guard, Hypergraph, Polynomial, Result};

/// Largest vertex count accepted by [`ipoly_trinks`] under [`Guard::Enforce`].
pub const TRINKS_GUARD: usize = 40;

/// Independence polynomial by the deletion/hiding recursion
///
/// ```text
/// I(H) = I(H ⊖ v) + x · I(H ∼ v)   if {v} is not an edge
/// I(H) = I(H ⊖ v)                  otherwise
/// ```
///
/// always pivoting on the highest-numbered vertex, memoised on the minimal
/// edge family and vertex count.
pub fn ipoly_trinks(h: &Hypergraph) -> Result<Polynomial> {
    ipoly_trinks_with(h, Guard::Enforce, true)
}

/// Same recursion without dropping non-minimal edges after hiding.
pub fn ipoly_trinks_unpruned(h: &Hypergraph) -> Result<Polynomial> {
    ipoly_trinks_with(h, Guard::Enforce, false)
}

pub fn ipoly_trinks_with(h: &Hypergraph, guard: Guard, prune: bool) -> Result<Polynomial> {
    guard.check("trinks vertex count", h.n(), TRINKS_GUARD)?;
    check_mask_limit("trinks vertex count", h.n())?;
    let edges = canonical(h.edge_masks()?, prune);
    let mut recursion = Recursion {
        prune,
        memo: HashMap::new(),
    };
    Ok(recursion.eval(h.n(), edges))
}

struct Recursion {
    prune: bool,
    memo: HashMap<(usize, Vec<u64>), Polynomial>,
}

impl Recursion {
    fn eval(&mut self, n: usize, edges: Vec<u64>) -> Polynomial {
        // The empty edge is contained in every vertex set.
        if edges.first() == Some(&0) {
            return Polynomial::zero();
        }
        if n == 0 {
            return Polynomial::one();
        }
        if edges.is_empty() {
            return Polynomial::one_plus_x_pow(n);
        }
        let key = (n, edges);
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let (n, edges) = key;
        let pivot = 1u64 << (n - 1);

        let deleted: Vec<u64> = edges.iter().copied().filter(|e| e & pivot == 0).collect();
        let result = if edges.contains(&pivot) {
            self.eval(n - 1, deleted)
        } else {
            let hidden = canonical(edges.iter().map(|e| e & !pivot).collect(), self.prune);
            let with = self.eval(n - 1, hidden);
            let without = self.eval(n - 1, deleted);
            &without + &with.shift(1)
        };
        self.memo.insert((n, edges), result.clone());
        result
    }
}

/// Sorted, deduplicated and (optionally) inclusion-minimal.
fn canonical(mut edges: Vec<u64>, prune: bool) -> Vec<u64> {
    edges.sort_unstable_by_key(|&e| (e.count_ones(), e));
    edges.dedup();
    if prune {
        let mut kept: Vec<u64> = Vec::with_capacity(edges.len());
        for e in edges {
            // Keep `e` unless some kept edge is a subset of it.
            if kept.iter().all(|&f| f & !e != 0) {
                kept.push(e);
            }
        }
        edges = kept;
    }
    edges.sort_unstable();
    edges
}
