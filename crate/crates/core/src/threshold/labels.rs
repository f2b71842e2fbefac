use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{BuildingString, Error, Result};

/// Integer vertex labels `c[0..n]` (vertex `i` at index `i - 1`) and threshold `tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    pub c: Vec<BigInt>,
    pub tau: BigInt,
}

/// Wire form: `{"c": ["64", ...], "tau": "223"}`.
#[derive(Serialize, Deserialize)]
struct LabelingJson {
    c: Vec<String>,
    tau: String,
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        LabelingJson {
            c: self.c.iter().map(ToString::to_string).collect(),
            tau: self.tau.to_string(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Labeling {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let json = LabelingJson::deserialize(deserializer)?;
        let parse = |s: &str| {
            s.parse::<BigInt>()
                .map_err(|e| D::Error::custom(format!("bad integer {s:?}: {e}")))
        };
        Ok(Labeling {
            c: json.c.iter().map(|s| parse(s)).collect::<std::result::Result<_, _>>()?,
            tau: parse(&json.tau)?,
        })
    }
}

impl Labeling {
    pub fn new(c: Vec<BigInt>, tau: BigInt) -> Self {
        Labeling { c, tau }
    }

    pub fn from_i64s(c: &[i64], tau: i64) -> Self {
        Labeling {
            c: c.iter().map(|&v| BigInt::from(v)).collect(),
            tau: BigInt::from(tau),
        }
    }

    /// Label of vertex `v` (1-based).
    pub fn label(&self, v: usize) -> &BigInt {
        &self.c[v - 1]
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }
}

/// Labels and threshold for a {0,1}-constructable hypergraph from its
/// building string.
///
/// With `s` leading zeros, the prefix `0^s 1` gets labels `2, …, 2, 3` and
/// threshold `2k`. Each further vertex `m + 1` then updates `(c', τ')`:
///
/// - dominating: `c(m+1) = τ' + 1 - (sum of the k-1 smallest isolated labels)`,
///   threshold unchanged;
/// - isolated: every label doubles, `c(m+1) = 2τ' + 1 - 2·(sum of the last
///   k-1 dominating labels)`, padding with vertices `1, 2, …` when fewer than
///   k-1 dominating vertices exist, and `τ = 2τ' + 1`.
///
/// Ties among equal isolated labels go to the lower vertex; only the sum
/// enters the new label, so the choice does not matter.
pub fn algorithm1_labels(b: &BuildingString) -> Result<Labeling> {
    let k = b.k();
    let bits = b.bits();
    let first = b.first_dominating().ok_or(Error::NoDominatingVertex)?;
    let s = first - 1;

    let mut c: Vec<BigInt> = vec![BigInt::from(2); s];
    c.push(BigInt::from(3));
    let mut tau = BigInt::from(2 * k);

    for m in first..bits.len() {
        if bits[m] {
            let sum = smallest_isolated_sum(&c, &bits[..m], k - 1);
            c.push(&tau + 1 - sum);
        } else {
            let dominating: Vec<usize> = (0..m).filter(|&j| bits[j]).collect();
            let chosen: Vec<usize> = if dominating.len() >= k - 1 {
                dominating[dominating.len() - (k - 1)..].to_vec()
            } else {
                // The padding vertices come from the leading run of zeros.
                let pad = k - 1 - dominating.len();
                dominating.iter().copied().chain(0..pad).collect()
            };
            c.iter_mut().for_each(|x| *x *= 2);
            let sum: BigInt = chosen.iter().map(|&j| &c[j]).sum();
            tau = 2 * tau + 1;
            c.push(&tau - sum);
        }
    }
    Ok(Labeling { c, tau })
}

fn smallest_isolated_sum(c: &[BigInt], bits: &[bool], count: usize) -> BigInt {
    let mut isolated: Vec<(&BigInt, usize)> = (0..bits.len())
        .filter(|&j| !bits[j])
        .map(|j| (&c[j], j))
        .collect();
    isolated.sort();
    let sum: BigInt = isolated.iter().take(count).map(|(v, _)| *v).sum();
    debug_assert_eq!(
        sum,
        {
            // Opposite tie-break: highest vertex first among equal labels.
            let mut alt = isolated.clone();
            alt.sort_by(|a, b| a.0.cmp(b.0).then(b.1.cmp(&a.1)));
            alt.iter().take(count).map(|(v, _)| *v).sum::<BigInt>()
        },
        "selection sum depends on tie-break"
    );
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(word: &str, k: usize) -> Labeling {
        algorithm1_labels(&BuildingString::parse(word, k).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            labels("0010100011101", 3),
            Labeling::from_i64s(&[64, 64, 96, 48, 112, 8, 12, 14, 204, 204, 204, -185, 401], 223)
        );
        assert_eq!(
            labels("0010101010101", 3),
            Labeling::from_i64s(
                &[64, 64, 96, 48, 112, 8, 168, -60, 276, -222, 506, -559, 1005],
                223
            )
        );
        assert_eq!(labels("001", 3), Labeling::from_i64s(&[2, 2, 3], 6));
    }

    #[test]
    fn intermediate_prefix_matches_notation_example() {
        // Nine-vertex prefix of the first worked example.
        assert_eq!(
            labels("001010001", 3).c,
            Labeling::from_i64s(&[32, 32, 48, 24, 56, 4, 6, 7, 102], 0).c
        );
    }

    #[test]
    fn base_case_with_long_zero_run() {
        assert_eq!(labels("00001", 3), Labeling::from_i64s(&[2, 2, 2, 2, 3], 6));
        assert_eq!(labels("01", 2), Labeling::from_i64s(&[2, 3], 4));
    }

    #[test]
    fn rejects_edgeless_strings() {
        let b = BuildingString::parse("0000", 3).unwrap();
        assert!(matches!(algorithm1_labels(&b), Err(Error::NoDominatingVertex)));
    }

    #[test]
    fn json_form() {
        let l = labels("001", 3);
        let json = serde_json::to_string(&l).unwrap();
        assert_eq!(json, r#"{"c":["2","2","3"],"tau":"6"}"#);
        assert_eq!(serde_json::from_str::<Labeling>(&json).unwrap(), l);
        assert!(serde_json::from_str::<Labeling>(r#"{"c":["x"],"tau":"1"}"#).is_err());
    }
}
