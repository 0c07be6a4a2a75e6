//! Basic invariants, Z2-degeneration, slice restriction, good generating
//! systems, the degree inequalities and the table oracle.

mod basic;
mod cross;
mod degenerate;
mod report;
mod table;

pub use basic::{basic_invariants, GeneratingSystem, SystemKind};
pub use cross::minor_cross_identity_check;
pub use degenerate::{
    bidegree_bound_check, bidegree_bound_report, degree_sum_check, good_gensystem_check, good_gensystem_report,
    restrict_to_slice, slice_dependence_witness, z2_degenerate, DegenerationResult,
};
pub use report::{format_point, Status, VerificationReport};
pub use table::{table_expected, theorem_bidegrees};
