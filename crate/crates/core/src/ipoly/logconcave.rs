use serde::Serialize;

use crate::Polynomial;

/// Outcome of the exact check `a_i² >= a_{i-1}·a_{i+1}` over interior indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LogConcavityReport {
    pub holds: bool,
    /// Lowest degree `i` with `a_i² < a_{i-1}·a_{i+1}`.
    pub first_violation: Option<usize>,
}

pub fn is_log_concave(p: &Polynomial) -> LogConcavityReport {
    let first_violation = p
        .coeffs()
        .windows(3)
        .position(|w| &w[1] * &w[1] < &w[0] * &w[2])
        .map(|i| i + 1);
    LogConcavityReport {
        holds: first_violation.is_none(),
        first_violation,
    }
}
