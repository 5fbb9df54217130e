//! Presentations of `U_q(A_N)` and its relatives: quantum binomials, Serre
//! relations, Jimbo generators with their relations, the full algebra with
//! torus and negative part, Lie-algebra PBW presentations, and the case
//! classifier for compositions of the Jimbo relations.

mod cartan;
mod cases;
mod full;
mod jimbo;
mod lie;

use thiserror::Error;

use crate::freealg::FreeAlgError;
use crate::rewrite::RewriteError;

pub use cartan::{cartan_an, quantum_binomial, serre_relations, CartanData};
pub use cases::{proof_case_classify, ProofCase};
pub use full::{
    composite_exponent, full_uq_bundle, full_uq_bundle_with, triangular_check, FullLayout, FullMode,
    TriangularCheck, EXTENDED_LIMITS,
};
pub use jimbo::{classify_pair, jimbo_bundle, jimbo_expansion, simple_to_jimbo, IndexPair, JimboIndex, PairClass};
pub use lie::{lie_pbw_relations, sl2_perturbed_table, sl2_table, LieTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn prefix(self) -> &'static str {
        match self {
            Sign::Plus => "x",
            Sign::Minus => "y",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum UqError {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("invalid structure-constant table: {0}")]
    InvalidTable(String),
    #[error("index pairs {0:?} and {1:?} are not an ordered pair of valid indices")]
    NotComparable(IndexPair, IndexPair),
    #[error("composition not covered by the case tables: {0}")]
    UnclassifiableComposition(String),
    #[error(transparent)]
    Scalar(#[from] crate::scalar::ScalarError),
    #[error(transparent)]
    FreeAlg(#[from] FreeAlgError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
