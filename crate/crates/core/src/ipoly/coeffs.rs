use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::antiregular::binom;
use crate::{Error, Result};

/// Coefficients of `x^k` and `x^{k+1}` in `I(Ā_{2n})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingCoefficients {
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub a_k: BigInt,
    #[serde(serialize_with = "crate::serialize_decimal")]
    pub a_k_plus_1: BigInt,
}

/// ```text
/// a_k     = Σ_{i=⌊(k+1)/2⌋}^{n}   C(2i-1, k-1)
/// a_{k+1} = Σ_{i=⌊(k+1)/2⌋}^{n-1} C(2i-1, k-1)·(n-i)
/// ```
///
/// For k = 3 the product forms `n(n-1)(4n+1)/6` and `n²(n-1)(n-2)/6` are
/// checked as well; a mismatch is reported as [`Error::Inconsistent`].
pub fn coeff_formulas(k: usize, n: usize) -> Result<LeadingCoefficients> {
    if k < 2 || n == 0 {
        return Err(Error::OutOfRange(format!(
            "coefficient sums need k >= 2 and n >= 1, got k = {k}, n = {n}"
        )));
    }
    let start = k.div_ceil(2);
    let term = |i: usize| binom(2 * i - 1, k - 1);
    let a_k: BigInt = (start..=n).map(term).sum();
    let a_k_plus_1: BigInt = (start..n).map(|i| term(i) * BigInt::from(n - i)).sum();

    if k == 3 {
        let (a3, a4) = k3_products(n);
        if a3 != a_k || a4 != a_k_plus_1 {
            return Err(Error::Inconsistent(format!(
                "k = 3, n = {n}: sums give ({a_k}, {a_k_plus_1}), products give ({a3}, {a4})"
            )));
        }
    }
    Ok(LeadingCoefficients { a_k, a_k_plus_1 })
}

/// `(n(n-1)(4n+1)/6, n²(n-1)(n-2)/6)`.
pub fn k3_products(n: usize) -> (BigInt, BigInt) {
    let n = BigInt::from(n);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let six = BigInt::from(6);
    let a3 = &n * (&n - &one) * (BigInt::from(4) * &n + &one) / &six;
    let a4 = if n < two {
        BigInt::zero()
    } else {
        &n * &n * (&n - &one) * (&n - &two) / &six
    };
    (a3, a4)
}
