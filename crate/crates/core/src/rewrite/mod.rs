//! Compositions, reduction to normal form, Gröbner–Shirshov verification and
//! bounded completion.

mod complete;
mod composition;
pub mod index;
mod oracle;
mod reduce;
mod system;
mod verify;

use num_rational::BigRational;
use thiserror::Error;

pub use complete::{shirshov_complete, Completion, CompletionLimits, CompletionStatus};
pub use composition::{composition_value, find_compositions, Composition, CompositionKind};
pub use oracle::{oracle_quotient_dim, oracle_quotient_dim_default, DEFAULT_SPECIALIZATIONS};
pub use reduce::{
    normal_form, normal_form_with_strategy, reduce, replay_trace, ReductionTrace, Strategy,
    TraceStep,
};
pub use system::{Relation, RewriteSystem};
pub use verify::{
    check_gs_basis, ideal_membership, is_gs_basis, is_trivial, CompositionRecord, GsReport,
};

#[derive(Debug, Clone, Error)]
pub enum RewriteError {
    #[error("relation {0} is zero")]
    ZeroRelation(usize),
    #[error("polynomial uses letters outside the system's alphabet")]
    AlphabetMismatch,
    #[error("invalid composition: {0}")]
    InvalidComposition(String),
    #[error("the system is not a Gröbner–Shirshov basis")]
    NotAGSBasis,
    #[error("completion did not close within {rounds} rounds")]
    LimitExceeded {
        rounds: usize,
        partial: Box<RewriteSystem>,
    },
    #[error("completion limits must be positive")]
    InvalidLimits,
    #[error("a relation coefficient has a pole at q = {0}")]
    Pole(BigRational),
    #[error("specializations disagree in degree {degree}: {dims:?}")]
    SpecializationDisagreement { degree: usize, dims: Vec<u64> },
    #[error("trace replay failed at step {step}: {reason}")]
    ReplayMismatch { step: usize, reason: String },
}
