use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A binary building string: bit `0` adds an isolated vertex, bit `1` adds a
/// vertex dominating every (k-1)-subset of the vertices added before it.
///
/// Position `p` (1-based) of the string is vertex `p` of the built hypergraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BuildingString {
    k: usize,
    bits: Vec<bool>,
}

impl BuildingString {
    /// Validates `k >= 2`, a non-empty word and that the first `1` (if any)
    /// sits at position `>= k`.
    pub fn new(k: usize, bits: Vec<bool>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidBuildingString(format!(
                "edge size k must be at least 2, got {k}"
            )));
        }
        if bits.is_empty() {
            return Err(Error::InvalidBuildingString("empty string".into()));
        }
        if let Some(first) = bits.iter().position(|&b| b) {
            if first + 1 < k {
                return Err(Error::InvalidBuildingString(format!(
                    "first dominating vertex at position {} has fewer than k-1 = {} predecessors",
                    first + 1,
                    k - 1
                )));
            }
        }
        Ok(BuildingString { k, bits })
    }

    pub fn parse(word: &str, k: usize) -> Result<Self> {
        let bits = word
            .trim()
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::InvalidBuildingString(format!(
                    "unexpected character {other:?}; expected 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(k, bits)
    }

    /// The antiregular string on `n` vertices.
    ///
    /// Connected strings end in `1` and alternate back to the initial run of
    /// zeros; the disconnected string is the connected string on `n - 1`
    /// vertices followed by a `0`. For `n <= k - 1` both variants are the
    /// all-zero word.
    pub fn antiregular(n: usize, k: usize, connected: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("antiregular string needs n >= 1".into()));
        }
        if k < 2 {
            return Err(Error::OutOfRange(format!("k must be at least 2, got {k}")));
        }
        // The last bit that may be 1: n for A_n, n - 1 for the disconnected one.
        let last = if connected { n } else { n - 1 };
        let bits = (1..=n)
            .map(|p| p >= k && p <= last && (last - p) % 2 == 0)
            .collect();
        Self::new(k, bits)
    }

    /// Every valid building string of length `n` for edge size `k`, in
    /// increasing binary order.
    pub fn all_of_length(n: usize, k: usize) -> impl Iterator<Item = BuildingString> {
        let free = (n + 1).saturating_sub(k);
        let count: u64 = if n == 0 || k < 2 { 0 } else { 1u64 << free.min(63) };
        (0..count).map(move |code| {
            let bits = (1..=n)
                .map(|p| p >= k && (code >> (n - p)) & 1 == 1)
                .collect();
            BuildingString { k, bits }
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit of vertex `p`, 1-based.
    pub fn bit(&self, p: usize) -> bool {
        self.bits[p - 1]
    }

    /// The last bit is 1.
    pub fn ends_dominating(&self) -> bool {
        self.bits.last().copied().unwrap_or(false)
    }

    /// 1-based position of the first dominating vertex.
    pub fn first_dominating(&self) -> Option<usize> {
        self.bits.iter().position(|&b| b).map(|i| i + 1)
    }

    pub fn dominating_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The prefix of length `m`.
    pub fn prefix(&self, m: usize) -> Result<Self> {
        Self::new(self.k, self.bits[..m].to_vec())
    }

    /// Whether this is one of the two antiregular strings of its length, and
    /// if so which one (`Some(true)` = connected).
    pub fn antiregular_kind(&self) -> Option<bool> {
        let n = self.len();
        [true, false].into_iter().find(|&connected| {
            Self::antiregular(n, self.k, connected).is_ok_and(|s| s.bits == self.bits)
        })
    }
}

impl fmt::Display for BuildingString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Parses `"<bits>:<k>"`.
impl FromStr for BuildingString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (word, k) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidBuildingString(format!("expected <bits>:<k>, got {s:?}")))?;
        let k = k
            .parse()
            .map_err(|_| Error::InvalidBuildingString(format!("bad k in {s:?}")))?;
        Self::parse(word, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ar(n: usize, k: usize, connected: bool) -> String {
        BuildingString::antiregular(n, k, connected).unwrap().to_string()
    }

    #[test]
    fn antiregular_examples() {
        assert_eq!(ar(5, 3, true), "00101");
        assert_eq!(ar(4, 3, false), "0010");
        assert_eq!(ar(2, 3, false), "00");
        assert_eq!(ar(2, 3, true), "00");
        assert_eq!(ar(3, 3, false), "000");
        assert_eq!(ar(9, 3, true), "001010101");
        assert_eq!(ar(9, 3, false), "000101010");
        assert_eq!(ar(8, 4, true), "00010101");
        assert_eq!(ar(8, 4, false), "00001010");
    }

    #[test]
    fn antiregular_families_match_prefix_patterns() {
        // 0[k-1]1(01)* or 0[k]1(01)*, optionally followed by a 0.
        for k in 2..=6 {
            for n in k..=16 {
                for connected in [true, false] {
                    let s = ar(n, k, connected);
                    assert_eq!(s.ends_with('1'), connected, "{s}");
                    let body = s.trim_end_matches('0');
                    let zeros = body.len() - body.trim_start_matches('0').len();
                    assert!(zeros == k - 1 || zeros == k || body.is_empty(), "{s}");
                    let tail = &body[zeros..];
                    assert!(tail.is_empty() || tail.len() % 2 == 1);
                    assert!(tail.chars().enumerate().all(|(i, c)| (c == '1') == (i % 2 == 0)));
                    assert!(s.len() - body.len() <= 1 || body.is_empty());
                }
            }
        }
    }

    #[test]
    fn rejects_early_dominating_vertex() {
        assert!(BuildingString::parse("01", 3).is_err());
        assert!(BuildingString::parse("001", 3).is_ok());
        assert!(BuildingString::parse("01", 2).is_ok());
        assert!(BuildingString::parse("", 2).is_err());
        assert!(BuildingString::parse("0a1", 2).is_err());
        assert!(BuildingString::parse("00", 1).is_err());
        assert!(BuildingString::antiregular(0, 3, false).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(BuildingString::all_of_length(2, 3).count(), 1);
        assert_eq!(BuildingString::all_of_length(3, 3).count(), 2);
        assert_eq!(BuildingString::all_of_length(6, 3).count(), 16);
        let all: Vec<_> = BuildingString::all_of_length(4, 3).map(|s| s.to_string()).collect();
        assert_eq!(all, ["0000", "0001", "0010", "0011"]);
    }

    #[test]
    fn antiregular_kind_detection() {
        let s = BuildingString::parse("00101", 3).unwrap();
        assert_eq!(s.antiregular_kind(), Some(true));
        let s = BuildingString::parse("001101", 3).unwrap();
        assert_eq!(s.antiregular_kind(), None);
        let s: BuildingString = "0010:3".parse().unwrap();
        assert_eq!(s.antiregular_kind(), Some(false));
    }
}
