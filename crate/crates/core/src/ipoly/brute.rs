use num_bigint::BigInt;
use rayon::prelude::*;

use crate::{check_mask_limit, Guard, Hypergraph, Polynomial, Result};

/// Largest vertex count accepted by [`ipoly_bruteforce`].
pub const BRUTEFORCE_GUARD: usize = 24;

/// Subsets per parallel work unit.
const CHUNK: u64 = 1 << 12;

/// Independence polynomial straight from the definition: count the vertex
/// subsets that contain no edge.
pub fn ipoly_bruteforce(h: &Hypergraph) -> Result<Polynomial> {
    ipoly_bruteforce_with(h, Guard::Enforce)
}

pub fn ipoly_bruteforce_with(h: &Hypergraph, guard: Guard) -> Result<Polynomial> {
    guard.check("brute-force vertex count", h.n(), BRUTEFORCE_GUARD)?;
    check_mask_limit("brute-force vertex count", h.n().saturating_add(1))?;
    let n = h.n();
    let edges = h.edge_masks()?;
    let total = 1u64 << n;
    let counts = (0..total.div_ceil(CHUNK))
        .into_par_iter()
        .map(|chunk| {
            let mut counts = vec![0u64; n + 1];
            let end = ((chunk + 1) * CHUNK).min(total);
            for set in chunk * CHUNK..end {
                if edges.iter().all(|&e| e & set != e) {
                    counts[set.count_ones() as usize] += 1;
                }
            }
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(Polynomial::new(counts.into_iter().map(BigInt::from).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BuildingString;

    #[test]
    fn pair_share_polynomial() {
        let h1 = Hypergraph::uniform(
            5,
            3,
            vec![vec![1, 4, 5], vec![2, 3, 5], vec![2, 4, 5], vec![3, 4, 5]],
        )
        .unwrap();
        assert_eq!(
            ipoly_bruteforce(&h1).unwrap(),
            Polynomial::from_i64s(&[1, 5, 10, 6, 1])
        );
    }

    #[test]
    fn edgeless_is_binomial() {
        for m in 0..10 {
            assert_eq!(
                ipoly_bruteforce(&Hypergraph::edgeless(m)).unwrap(),
                Polynomial::one_plus_x_pow(m)
            );
        }
    }

    #[test]
    fn antiregular_five() {
        let h = Hypergraph::build(&BuildingString::parse("00101", 3).unwrap());
        assert_eq!(
            ipoly_bruteforce(&h).unwrap(),
            Polynomial::from_i64s(&[1, 5, 10, 3])
        );
    }

    #[test]
    fn empty_edge_kills_everything() {
        let h = Hypergraph::new(3, vec![vec![]]).unwrap();
        assert!(ipoly_bruteforce(&h).unwrap().is_zero());
    }

    #[test]
    fn guard() {
        assert!(ipoly_bruteforce(&Hypergraph::edgeless(25)).is_err());
    }
}
