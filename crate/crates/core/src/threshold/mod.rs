//! Threshold labelings of {0,1}-constructable hypergraphs.
//!
//! [`algorithm1_labels`] builds integer labels and a threshold from a
//! building string; [`verify_t2`] and [`verify_t3`] check the two threshold
//! notions exhaustively; [`t2_feasibility`] decides T2 for an arbitrary
//! k-uniform hypergraph.

mod feasibility;
mod intervals;
mod labels;
mod lp;
mod monotone;
mod verify;

pub use feasibility::{
    t2_feasibility, t2_feasibility_with, CertificateTerm, FeasibilityVerdict,
    InfeasibilityCertificate, FEASIBILITY_GUARD,
};
pub use intervals::{intervals, Interval, IntervalDecomposition};
pub use labels::{algorithm1_labels, Labeling};
pub use monotone::{
    check_label_monotonicity, MonotonicityClause, MonotonicityVerdict, MonotonicityViolation,
};
pub use verify::{
    verify_t2, verify_t2_with, verify_t3, verify_t3_with, T2Verdict, T3Verdict, VERIFY_T2_GUARD,
    VERIFY_T3_GUARD,
};
