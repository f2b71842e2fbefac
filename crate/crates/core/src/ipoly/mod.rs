//! Independence polynomials.
//!
//! Four routes to the same polynomial: [`ipoly_bruteforce`] (subset
//! enumeration), [`ipoly_trinks`] (deletion/hiding recursion on any
//! hypergraph), [`ipoly_antiregular_recurrence`] and [`ipoly_semiclosed`]
//! (antiregular only, no hypergraph needed). For k = 3 the closed forms in
//! [`ipoly_k3_closed`] give a fifth.

mod antiregular;
mod brute;
mod coeffs;
mod logconcave;
mod trinks;

pub use antiregular::{
    antiregular_series, ipoly_antiregular_recurrence, ipoly_k3_closed, ipoly_semiclosed,
    semiclosed_floor, semiclosed_formula, semiclosed_min_vertices, solve_alpha, solve_beta,
    solve_table, AlphaBetaTable, TableKind,
};
pub use brute::{ipoly_bruteforce, ipoly_bruteforce_with, BRUTEFORCE_GUARD};
pub use coeffs::{coeff_formulas, k3_products, LeadingCoefficients};
pub use logconcave::{is_log_concave, LogConcavityReport};
pub use trinks::{ipoly_trinks, ipoly_trinks_unpruned, ipoly_trinks_with, TRINKS_GUARD};
