use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::BuildingString;
use crate::{check_mask_limit, Error, Result};

/// Sorted list of 1-based vertices.
pub type Edge = Vec<usize>;

/// A hypergraph on vertices `1..=n`.
///
/// Edges are stored canonically (each edge sorted, the family ordered
/// lexicographically). `uniformity` is `Some(k)` when every edge has exactly
/// `k` vertices; an edgeless hypergraph keeps whatever `k` it was built with.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "HypergraphJson", into = "HypergraphJson")]
pub struct Hypergraph {
    n: usize,
    k: Option<usize>,
    edges: BTreeSet<Edge>,
}

/// Wire form: `{"k": 3, "n": 5, "edges": [[1,2,3], ...]}`.
#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    n: usize,
    edges: Vec<Edge>,
}

impl TryFrom<HypergraphJson> for Hypergraph {
    type Error = Error;

    fn try_from(json: HypergraphJson) -> Result<Self> {
        match json.k {
            Some(k) => Hypergraph::uniform(json.n, k, json.edges),
            None => Hypergraph::new(json.n, json.edges),
        }
    }
}

impl From<Hypergraph> for HypergraphJson {
    fn from(h: Hypergraph) -> Self {
        HypergraphJson {
            k: h.k,
            n: h.n,
            edges: h.edges.into_iter().collect(),
        }
    }
}

impl Hypergraph {
    /// Builds a hypergraph from explicit edges, inferring uniformity.
    ///
    /// Vertices must lie in `1..=n`; repeated vertices inside an edge and
    /// repeated edges are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let edges = canonical_edges(n, edges)?;
        let k = infer_uniformity(None, &edges);
        Ok(Hypergraph { n, k, edges })
    }

    /// Like [`Hypergraph::new`] but requires every edge to have `k` vertices.
    pub fn uniform<I>(n: usize, k: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let edges = canonical_edges(n, edges)?;
        if let Some(bad) = edges.iter().find(|e| e.len() != k) {
            return Err(Error::InvalidHypergraph(format!(
                "edge {bad:?} does not have {k} vertices"
            )));
        }
        Ok(Hypergraph { n, k: Some(k), edges })
    }

    pub fn edgeless(n: usize) -> Self {
        Hypergraph {
            n,
            k: None,
            edges: BTreeSet::new(),
        }
    }

    pub fn edgeless_uniform(n: usize, k: usize) -> Self {
        Hypergraph {
            n,
            k: Some(k),
            edges: BTreeSet::new(),
        }
    }

    /// Realises a building string: vertex `m + 1` with bit 1 receives every
    /// edge `{m + 1} ∪ S` for `S` a (k-1)-subset of `{1..m}`.
    pub fn build(b: &BuildingString) -> Self {
        let k = b.k();
        let mut edges = BTreeSet::new();
        for (idx, &bit) in b.bits().iter().enumerate() {
            if !bit {
                continue;
            }
            let v = idx + 1;
            for subset in (1..v).combinations(k - 1) {
                let mut e = subset;
                e.push(v);
                edges.insert(e);
            }
        }
        Hypergraph {
            n: b.len(),
            k: Some(k),
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> Option<usize> {
        self.k
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edges.contains(edge)
    }

    /// An empty edge is present, so no vertex set is independent.
    pub fn has_empty_edge(&self) -> bool {
        self.edges.first().is_some_and(Vec::is_empty)
    }

    /// Edges as bitmasks, vertex `v` at bit `v - 1`.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        check_mask_limit("bitmask edge mirror", self.n)?;
        Ok(self.edges.iter().map(|e| to_mask(e)).collect())
    }

    fn require_uniformity(&self) -> Result<usize> {
        self.k.ok_or(Error::NotUniform)
    }

    /// All k-subsets of the vertex set that are not edges.
    pub fn complement_uniform(&self) -> Result<Self> {
        let k = self.require_uniformity()?;
        let edges = (1..=self.n)
            .combinations(k)
            .filter(|s| !self.edges.contains(s))
            .collect();
        Ok(Hypergraph {
            n: self.n,
            k: Some(k),
            edges,
        })
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Self {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| e.iter().map(|v| v + shift).collect::<Edge>()),
        );
        let hint = match (self.k, other.k) {
            (Some(a), Some(b)) if a == b => Some(a),
            (a, None) if other.edges.is_empty() => a,
            (None, b) if self.edges.is_empty() => b,
            _ => None,
        };
        Hypergraph {
            n: self.n + other.n,
            k: infer_uniformity(hint, &edges),
            edges,
        }
    }

    /// Generalised Zykov k-sum `self ⊕_k other`: both edge sets plus every
    /// `{v} ∪ W` with `v` from `self` and `W` a (k-1)-subset of `other`.
    /// Not commutative for `k > 2`.
    pub fn zykov_k_sum(&self, other: &Hypergraph, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::OutOfRange(format!("k must be at least 2, got {k}")));
        }
        if other.n + 1 < k {
            return Err(Error::OutOfRange(format!(
                "right operand of a {k}-sum needs at least {} vertices, has {}",
                k - 1,
                other.n
            )));
        }
        let mut sum = self.disjoint_union(other);
        let shift = self.n;
        for v in 1..=self.n {
            for w in (shift + 1..=shift + other.n).combinations(k - 1) {
                let mut e = Vec::with_capacity(k);
                e.push(v);
                e.extend(w);
                sum.edges.insert(e);
            }
        }
        let all_k = [self, other]
            .iter()
            .all(|h| h.edges.iter().all(|e| e.len() == k));
        sum.k = if all_k { Some(k) } else { None };
        Ok(sum)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Removes `v` and every edge containing it; later vertices shift down.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(&v))
            .map(|e| relabel_without(e, v))
            .collect();
        Ok(Hypergraph {
            n: self.n - 1,
            k: self.k,
            edges,
        })
    }

    /// Removes `v` from the vertex set and from every edge, keeping only
    /// inclusion-minimal edges. An edge shrinking to `∅` is kept and makes the
    /// result have no independent sets at all.
    pub fn hide_vertex(&self, v: usize) -> Result<Self> {
        let shrunk = self.hide_vertex_unpruned(v)?;
        let edges = minimal_edges(shrunk.edges);
        Ok(Hypergraph {
            n: shrunk.n,
            k: infer_uniformity(self.k, &edges),
            edges,
        })
    }

    /// Hiding without superset pruning; duplicates still collapse.
    pub fn hide_vertex_unpruned(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let edges: BTreeSet<Edge> = self
            .edges
            .iter()
            .map(|e| {
                let without: Edge = e.iter().copied().filter(|&u| u != v).collect();
                relabel_without(&without, v)
            })
            .collect();
        Ok(Hypergraph {
            n: self.n - 1,
            k: infer_uniformity(self.k, &edges),
            edges,
        })
    }

    /// Renames vertex `i` to `perm[i - 1]`; `perm` must be a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.n + 1];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p == 0 || p > self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::OutOfRange(format!(
                "not a permutation of 1..={}",
                self.n
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v - 1]).sorted().collect())
            .collect();
        Ok(Hypergraph {
            n: self.n,
            k: self.k,
            edges,
        })
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                degrees[v - 1] += 1;
            }
        }
        DegreeSequence(degrees)
    }
}

/// `degrees[i]` is the number of edges containing vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn degrees(&self) -> &[usize] {
        &self.0
    }

    /// How often each degree value occurs.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        for &d in &self.0 {
            *counts.entry(d).or_insert(0) += 1;
        }
        counts
    }

    /// The single repeated degree value and its multiplicity, if exactly one
    /// value repeats.
    pub fn sole_repeat(&self) -> Option<(usize, usize)> {
        let repeats: Vec<_> = self
            .multiplicities()
            .into_iter()
            .filter(|&(_, m)| m > 1)
            .collect();
        match repeats.as_slice() {
            [one] => Some(*one),
            _ => None,
        }
    }
}

fn to_mask(edge: &[usize]) -> u64 {
    edge.iter().fold(0u64, |m, &v| m | 1u64 << (v - 1))
}

fn relabel_without(edge: &[usize], removed: usize) -> Edge {
    edge.iter()
        .map(|&u| if u > removed { u - 1 } else { u })
        .collect()
}

fn canonical_edges<I>(n: usize, edges: I) -> Result<BTreeSet<Edge>>
where
    I: IntoIterator<Item = Edge>,
{
    let mut out = BTreeSet::new();
    for mut e in edges {
        e.sort_unstable();
        if let Some(&v) = e.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::InvalidHypergraph(format!(
                "vertex {v} outside 1..={n}"
            )));
        }
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!(
                "edge {e:?} repeats a vertex"
            )));
        }
        if !out.insert(e.clone()) {
            return Err(Error::InvalidHypergraph(format!("duplicate edge {e:?}")));
        }
    }
    Ok(out)
}

fn infer_uniformity(hint: Option<usize>, edges: &BTreeSet<Edge>) -> Option<usize> {
    let mut sizes = edges.iter().map(Vec::len);
    match sizes.next() {
        None => hint,
        Some(first) => sizes.all(|s| s == first).then_some(first),
    }
}

/// Drops every edge that strictly contains another edge.
fn minimal_edges(edges: BTreeSet<Edge>) -> BTreeSet<Edge> {
    let mut by_size: Vec<Edge> = edges.into_iter().collect();
    by_size.sort_by_key(Vec::len);
    let mut kept: Vec<Edge> = Vec::new();
    for e in by_size {
        if !kept.iter().any(|f| is_subset(f, &e)) {
            kept.push(e);
        }
    }
    kept.into_iter().collect()
}

fn is_subset(small: &[usize], large: &[usize]) -> bool {
    let mut it = large.iter();
    small.iter().all(|v| it.any(|u| u == v))
}
