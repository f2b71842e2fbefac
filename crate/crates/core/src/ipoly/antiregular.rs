//! Independence polynomials of antiregular hypergraphs without touching the
//! hypergraph: the vertex-by-vertex recurrence, the k = 3 closed forms and the
//! semi-closed forms driven by the α/β correction tables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::Serialize;

use crate::{Error, Polynomial, Result};

pub(crate) fn binom(n: usize, r: usize) -> BigInt {
    if r > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(r))
    }
}

/// `Σ_{i=1}^{k-1} C(m, i-1) x^i`, the contribution of hiding a new dominating
/// vertex on top of `m` earlier vertices.
fn dominating_term(m: usize, k: usize) -> Polynomial {
    Polynomial::new(
        (0..k)
            .map(|i| if i == 0 { BigInt::zero() } else { binom(m, i - 1) })
            .collect(),
    )
}

fn check_args(n: usize, k: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("vertex count must be at least 1".into()));
    }
    if k < 2 {
        return Err(Error::OutOfRange(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

/// Both antiregular polynomials for every vertex count `1..=n`:
/// `(connected[m], disconnected[m])` at index `m` (index 0 is the empty graph).
pub fn antiregular_series(n: usize, k: usize) -> Result<Vec<(Polynomial, Polynomial)>> {
    check_args(n, k)?;
    let mut series = Vec::with_capacity(n + 1);
    for m in 0..=n.min(k - 1) {
        let p = Polynomial::one_plus_x_pow(m);
        series.push((p.clone(), p));
    }
    for m in k - 1..n {
        let (conn, disc) = &series[m];
        // Ā_{m+1} = K1 ∪ A_m and A_{m+1} = K1 ⊕_k Ā_m.
        let next_disc = conn.times_one_plus_x();
        let next_conn = disc + &dominating_term(m, k);
        series.push((next_conn, next_disc));
    }
    Ok(series)
}

/// `I(A_n)` (connected) or `I(Ā_n)` by iterating the antiregular recurrence
/// from `I(A_i) = (1+x)^i`, `i <= k-1`.
pub fn ipoly_antiregular_recurrence(n: usize, k: usize, connected: bool) -> Result<Polynomial> {
    let mut series = antiregular_series(n, k)?;
    let (conn, disc) = series.swap_remove(n);
    Ok(if connected { conn } else { disc })
}

/// The four closed forms for k = 3, selected by the parity of the vertex
/// count `vertices` and by connectivity.
pub fn ipoly_k3_closed(vertices: usize, connected: bool) -> Result<Polynomial> {
    check_args(vertices, 3)?;
    let p = Polynomial::one_plus_x_pow;
    let c = |v: usize| Polynomial::constant(BigInt::from(v));
    let lin = |a: usize, b: usize| Polynomial::new(vec![BigInt::from(b), BigInt::from(a)]);
    let n = vertices.div_ceil(2);
    let odd = vertices % 2 == 1;
    let poly = match (odd, connected) {
        // I(A_{2n-1}) = 3(1+x)^n + (1+x)^{n-1} - 2nx - 3
        (true, true) => &(&(&c(3) * &p(n)) + &p(n - 1)) - &lin(2 * n, 3),
        // I(Ā_{2n}) = 3(1+x)^{n+1} + (1+x)^n - (1+x)(2nx + 3)
        (false, false) => {
            &(&(&c(3) * &p(n + 1)) + &p(n)) - &lin(2 * n, 3).times_one_plus_x()
        }
        // I(Ā_{2n-1}) = (1+x)^{n+1} + 3(1+x)^n - (1+x)((2n-1)x + 3)
        (true, false) => {
            &(&p(n + 1) + &(&c(3) * &p(n))) - &lin(2 * n - 1, 3).times_one_plus_x()
        }
        // I(A_{2n}) = (1+x)^{n+1} + 3(1+x)^n - (2n+1)x - 3
        (false, true) => &(&p(n + 1) + &(&c(3) * &p(n))) - &lin(2 * n + 1, 3),
    };
    Ok(poly)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// Even levels, used by `A_{2n-1}` and `Ā_{2n}`.
    Alpha,
    /// Odd levels, used by `Ā_{2n-1}` and `A_{2n}`.
    Beta,
}

impl TableKind {
    fn parity(self) -> usize {
        match self {
            TableKind::Alpha => 0,
            TableKind::Beta => 1,
        }
    }
}

/// Correction coefficients `α_i^ℓ` (even ℓ) or `β_i^ℓ` (odd ℓ), `0 <= i < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBetaTable {
    pub kind: TableKind,
    pub k: usize,
    values: BTreeMap<(usize, usize), BigInt>,
}

impl AlphaBetaTable {
    /// Value at `(level, index)`.
    pub fn get(&self, level: usize, i: usize) -> Option<&BigInt> {
        self.values.get(&(level, i))
    }

    /// Stored levels, ascending.
    pub fn levels(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.keys().filter(|(_, i)| *i == 0).map(|(l, _)| *l)
    }

    pub fn max_level(&self) -> usize {
        self.levels().last().unwrap_or(0)
    }

    /// `Σ_{i<k} value(level, i) x^i`.
    pub fn correction(&self, level: usize) -> Option<Polynomial> {
        (0..self.k)
            .map(|i| self.get(level, i).cloned())
            .collect::<Option<Vec<_>>>()
            .map(Polynomial::new)
    }
}

fn check_table_args(k: usize, n_max: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("k must be at least 2, got {k}")));
    }
    let least = (k + 2) / 2;
    if n_max < least {
        return Err(Error::OutOfRange(format!(
            "n_max must be at least ⌈(k+1)/2⌉ = {least}, got {n_max}"
        )));
    }
    Ok(())
}

/// α table for even levels `0, 2, …, 2·n_max`.
pub fn solve_alpha(k: usize, n_max: usize) -> Result<AlphaBetaTable> {
    solve_table(TableKind::Alpha, k, n_max)
}

/// β table for odd levels `1, 3, …, 2·n_max + 1`.
pub fn solve_beta(k: usize, n_max: usize) -> Result<AlphaBetaTable> {
    solve_table(TableKind::Beta, k, n_max)
}

/// Solves the triangular system
///
/// ```text
/// t_0^{ℓ} = t_0^{ℓ+2}
/// t_i^{ℓ} + t_{i-1}^{ℓ} - t_i^{ℓ+2} = C(ℓ+1, i-1),   1 <= i <= k-1
/// t_{k-1}^{ℓ} = C(ℓ, k-2)
/// ```
///
/// by descending back-substitution: the boundary fixes `t_{k-1}` at every
/// level, the middle equations give `t_{i-1}^ℓ = t_i^{ℓ+2} - t_i^ℓ + C(ℓ+1, i-1)`,
/// and the first equation is left over as a consistency check.
pub fn solve_table(kind: TableKind, k: usize, n_max: usize) -> Result<AlphaBetaTable> {
    check_table_args(k, n_max)?;
    let parity = kind.parity();
    let keep = 2 * n_max + parity;
    let top = keep + 2 * (k - 1);
    let levels = (parity..=top).step_by(2);

    let mut column: Vec<BigInt> = levels.clone().map(|l| binom(l, k - 2)).collect();
    let mut values = BTreeMap::new();
    let stored = (keep - parity) / 2 + 1;
    for (l, v) in levels.clone().zip(&column).take(stored) {
        values.insert((l, k - 1), v.clone());
    }
    for i in (1..k).rev() {
        // `column` holds t_i at levels parity, parity+2, ...; the next one is one shorter.
        column = levels
            .clone()
            .zip(column.windows(2))
            .map(|(l, pair)| &pair[1] - &pair[0] + binom(l + 1, i - 1))
            .collect();
        for (l, v) in levels.clone().zip(&column).take(stored) {
            values.insert((l, i - 1), v.clone());
        }
    }
    if let Some(pos) = column.windows(2).position(|w| w[0] != w[1]) {
        let l = parity + 2 * pos;
        return Err(Error::Inconsistent(format!(
            "{kind:?} table for k = {k}: t_0 changes between levels {l} ({}) and {} ({})",
            column[pos],
            l + 2,
            column[pos + 1]
        )));
    }
    Ok(AlphaBetaTable { kind, k, values })
}

/// Smallest level of the right parity that is at least `k - 1`; the
/// semi-closed forms expand around the edgeless antiregular hypergraph there.
fn base_level(k: usize, kind: TableKind) -> usize {
    let l = k - 1;
    if l % 2 == kind.parity() {
        l
    } else {
        l + 1
    }
}

/// Evaluates the semi-closed form for `vertices` vertices, or `None` when the
/// form's exponent would be negative. No range guard beyond that.
pub fn semiclosed_formula(vertices: usize, k: usize, connected: bool) -> Result<Option<Polynomial>> {
    check_args(vertices, k)?;
    let n = vertices.div_ceil(2);
    let odd = vertices % 2 == 1;
    let k_odd = k % 2 == 1;
    let tables_to = n_for_level(vertices, k);
    let p = Polynomial::one_plus_x_pow;

    let result = match (odd, connected) {
        // I(A_{2n-1}): expansion of Ā_{2n-2} plus the dominating term.
        (true, true) => {
            let alpha = solve_alpha(k, tables_to)?;
            let base = base_level(k, TableKind::Alpha);
            let exponent = if k_odd {
                (n - 1).checked_sub((k - 1) / 2)
            } else {
                (n - 1).checked_sub(k / 2)
            };
            exponent.and_then(|e| {
                let head = &p(base) + &alpha.correction(base)?;
                let tail = alpha.correction(2 * n - 2)?;
                Some(&(&(&p(e) * &head) - &tail) + &dominating_term(2 * n - 2, k))
            })
        }
        // I(Ā_{2n})
        (false, false) => {
            let alpha = solve_alpha(k, tables_to)?;
            let base = base_level(k, TableKind::Alpha);
            let exponent = if k_odd {
                n.checked_sub((k - 1) / 2)
            } else {
                n.checked_sub(k / 2)
            };
            exponent.and_then(|e| {
                let head = &p(base) + &alpha.correction(base)?;
                Some(&(&p(e) * &head) - &alpha.correction(2 * n)?)
            })
        }
        // I(Ā_{2n-1})
        (true, false) => {
            let beta = solve_beta(k, tables_to)?;
            let base = base_level(k, TableKind::Beta);
            let exponent = if k_odd {
                (n - 1).checked_sub((k - 1) / 2)
            } else {
                n.checked_sub(k / 2)
            };
            exponent.and_then(|e| {
                let head = &p(base) + &beta.correction(base)?;
                Some(&(&p(e) * &head) - &beta.correction(2 * n - 1)?)
            })
        }
        // I(A_{2n}): expansion of Ā_{2n-1} plus the dominating term.
        (false, true) => {
            let beta = solve_beta(k, tables_to)?;
            let base = base_level(k, TableKind::Beta);
            let exponent = if k_odd {
                (n - 1).checked_sub((k - 1) / 2)
            } else {
                n.checked_sub(k / 2)
            };
            exponent.and_then(|e| {
                let head = &p(base) + &beta.correction(base)?;
                let tail = beta.correction(2 * n - 1)?;
                Some(&(&(&p(e) * &head) - &tail) + &dominating_term(2 * n - 1, k))
            })
        }
    };
    Ok(result)
}

/// Table size covering levels up to `vertices` and the base level.
fn n_for_level(vertices: usize, k: usize) -> usize {
    (vertices / 2 + 1).max(k / 2 + 1)
}

/// Smallest vertex count accepted by [`ipoly_semiclosed`].
pub fn semiclosed_min_vertices(k: usize) -> usize {
    k + 1
}

/// Semi-closed independence polynomial of `A_n` / `Ā_n` for `n >= k + 1`.
pub fn ipoly_semiclosed(vertices: usize, k: usize, connected: bool) -> Result<Polynomial> {
    check_args(vertices, k)?;
    if vertices < semiclosed_min_vertices(k) {
        return Err(Error::OutOfRange(format!(
            "semi-closed forms need at least k + 1 = {} vertices, got {vertices}",
            k + 1
        )));
    }
    semiclosed_formula(vertices, k, connected)?.ok_or_else(|| {
        Error::Inconsistent(format!(
            "semi-closed form undefined at {vertices} vertices for k = {k}"
        ))
    })
}

/// Smallest vertex count from which the raw semi-closed form agrees with the
/// recurrence for every vertex count of the same parity up to `n_max`.
/// `None` if it fails even at `n_max`.
pub fn semiclosed_floor(
    k: usize,
    connected: bool,
    odd: bool,
    n_max: usize,
) -> Result<Option<usize>> {
    let series = antiregular_series(n_max, k)?;
    let mut floor = None;
    for v in (1..=n_max).rev().filter(|v| (v % 2 == 1) == odd) {
        let expected = if connected { &series[v].0 } else { &series[v].1 };
        match semiclosed_formula(v, k, connected)? {
            Some(p) if &p == expected => floor = Some(v),
            _ => break,
        }
    }
    Ok(floor)
}
