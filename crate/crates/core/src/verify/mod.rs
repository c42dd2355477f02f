//! Diagnostics and theorem checkers.

mod etf;
mod phase;
mod report;
mod sparse;

pub use etf::{etf_param_check, gerzon_bound, welch_bound, welch_equality_check, EtfItem, EtfParams, EtfReport};
pub use phase::{
    complement_property, complement_property_with_limit, complement_property_witness, does_phase_retrieval_real,
    SUBSET_SEARCH_LIMIT,
};
pub use report::{coherence, constants_audit, frame_report, is_exact, AuditEntry, FrameReport};
pub use sparse::{sparse_gs_search, SearchMode, SparsityResult, EXHAUSTIVE_LIMIT};
