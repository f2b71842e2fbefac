use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::lp::{phase_one, PhaseOne};
use super::{verify_t2_with, Labeling};
use crate::{Error, Guard, Hypergraph, Result};

/// Largest number of k-subsets accepted by [`t2_feasibility`].
pub const FEASIBILITY_GUARD: usize = 5000;

/// A non-negative integer combination of the T2 inequalities that sums to `0 > 0`.
///
/// Adding `Σ_S c - τ > 0` over the edge terms and `Σ_S c - τ <= 0` over the
/// non-edge terms, with the given weights, cancels every label and the
/// threshold, yet the edge side has positive total weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfeasibilityCertificate {
    pub terms: Vec<CertificateTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateTerm {
    pub subset: Vec<usize>,
    pub edge: bool,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub weight: BigInt,
}

impl InfeasibilityCertificate {
    /// Checks the cancellation directly against `h`.
    pub fn check(&self, h: &Hypergraph) -> bool {
        let mut per_vertex = vec![BigInt::zero(); h.n()];
        let mut total = BigInt::zero();
        let mut edge_weight = BigInt::zero();
        for t in &self.terms {
            if !t.weight.is_positive() || h.contains_edge(&t.subset) != t.edge {
                return false;
            }
            let signed = if t.edge { t.weight.clone() } else { -&t.weight };
            for &v in &t.subset {
                match per_vertex.get_mut(v.wrapping_sub(1)) {
                    Some(slot) => *slot += &signed,
                    None => return false,
                }
            }
            total += &signed;
            if t.edge {
                edge_weight += &t.weight;
            }
        }
        edge_weight.is_positive() && total.is_zero() && per_vertex.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    /// Integer labeling realising the hypergraph; present iff feasible.
    pub witness: Option<Labeling>,
    /// Present iff infeasible.
    pub certificate: Option<InfeasibilityCertificate>,
}

/// Decides whether some labeling and threshold make `h` T2-threshold.
///
/// The strict system `Σ_S c > τ (S ∈ E)`, `Σ_S c <= τ (S ∉ E)` is scale
/// invariant, so it is solvable iff the same system with margin 1 is. By
/// Farkas' lemma that fails iff non-negative multipliers combine the
/// inequalities into a contradiction; an exact phase-one simplex over the
/// rationals searches for those multipliers. A found combination is returned
/// as the certificate, and otherwise the simplex duals give the labeling.
/// Both outcomes are re-checked before returning.
pub fn t2_feasibility(h: &Hypergraph) -> Result<FeasibilityVerdict> {
    t2_feasibility_with(h, Guard::Enforce)
}

pub fn t2_feasibility_with(h: &Hypergraph, guard: Guard) -> Result<FeasibilityVerdict> {
    let k = h.uniformity().ok_or(Error::NotUniform)?;
    let n = h.n();
    guard.check("feasibility k-subset count", binom_capped(n, k), FEASIBILITY_GUARD)?;

    let subsets: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    let is_edge: Vec<bool> = subsets.iter().map(|s| h.contains_edge(s)).collect();

    // Rows: one per vertex, then τ, then the edge-weight normalisation.
    let rows = n + 2;
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    let mut a = vec![vec![BigRational::zero(); subsets.len()]; rows];
    for (j, (s, &edge)) in subsets.iter().zip(&is_edge).enumerate() {
        let sign = if edge { 1 } else { -1 };
        for &v in s {
            a[v - 1][j] = q(sign);
        }
        a[n][j] = q(-sign);
        a[n + 1][j] = q(i64::from(edge));
    }
    let mut b = vec![BigRational::zero(); rows];
    b[n + 1] = BigRational::one();

    let verdict = match phase_one(&a, &b) {
        PhaseOne::Feasible(y) => {
            let scale = lcm_of_denominators(&y);
            let terms = subsets
                .into_iter()
                .zip(is_edge)
                .zip(y)
                .filter(|(_, w)| w.is_positive())
                .map(|((subset, edge), w)| CertificateTerm {
                    subset,
                    edge,
                    weight: (w * BigRational::from_integer(scale.clone())).to_integer(),
                })
                .collect();
            let certificate = InfeasibilityCertificate { terms };
            if !certificate.check(h) {
                return Err(Error::Inconsistent("infeasibility certificate does not cancel".into()));
            }
            FeasibilityVerdict {
                feasible: false,
                witness: None,
                certificate: Some(certificate),
            }
        }
        PhaseOne::Infeasible(u) => {
            // w = -u satisfies every inequality with margin u[n + 1] > 0.
            let scale = lcm_of_denominators(&u);
            let int = |x: &BigRational| (-x * BigRational::from_integer(scale.clone())).to_integer();
            let witness = Labeling::new(u[..n].iter().map(int).collect(), int(&u[n]));
            if !verify_t2_with(h, &witness, Guard::Ignore)?.holds {
                return Err(Error::Inconsistent("feasibility witness fails T2 check".into()));
            }
            FeasibilityVerdict {
                feasible: true,
                witness: Some(witness),
                certificate: None,
            }
        }
    };
    Ok(verdict)
}

fn lcm_of_denominators(values: &[BigRational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// `C(n, k)`, saturating at `usize::MAX`.
fn binom_capped(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}
