//! Exact combinatorics for antiregular and {0,1}-constructable k-uniform hypergraphs.
//!
//! The crate is split into three layers:
//!
//! - [`hypergraph`]: building strings, the hypergraph value type and its
//!   operations (complement, disjoint union, Zykov k-sum, deletion, hiding),
//!   degree sequences and recognition of {0,1}-constructable hypergraphs.
//! - [`ipoly`]: independence polynomials computed four independent ways
//!   (subset enumeration, the deletion/hiding recursion, the antiregular
//!   recurrence and the semi-closed forms with their correction tables), the
//!   k = 3 closed forms, coefficient sums and log-concavity.
//! - [`threshold`]: integer labelings and thresholds for constructable
//!   hypergraphs, T2/T3 checks, interval decompositions, label ordering
//!   checks and exact rational T2 feasibility.
//!
//! All arithmetic is exact; coefficients and labels are [`num_bigint::BigInt`].

pub mod cli;
mod error;
pub mod hypergraph;
pub mod ipoly;
mod poly;
pub mod sweep;
pub mod threshold;

pub use error::{Error, Result};
pub use hypergraph::{BuildingString, DegreeSequence, Hypergraph};
pub use poly::Polynomial;

/// Whether soft size caps are enforced.
///
/// Exhaustive routines refuse inputs above a documented size unless called
/// with [`Guard::Ignore`]. Hard representation limits (64 vertices for the
/// bitmask routines) always apply.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Guard {
    #[default]
    Enforce,
    Ignore,
}

impl Guard {
    pub(crate) fn check(self, what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if self == Guard::Enforce && actual > limit {
            return Err(Error::GuardExceeded {
                what,
                actual,
                limit,
            });
        }
        Ok(())
    }
}

/// Vertex sets are mirrored as `u64` masks in the enumeration routines.
pub(crate) const MASK_VERTICES: usize = 64;

pub(crate) fn check_mask_limit(what: &'static str, n: usize) -> Result<()> {
    if n > MASK_VERTICES {
        return Err(Error::GuardExceeded {
            what,
            actual: n,
            limit: MASK_VERTICES,
        });
    }
    Ok(())
}

/// Serializes a big integer as a decimal string.
pub(crate) fn serialize_decimal<S: serde::Serializer>(
    v: &num_bigint::BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}
