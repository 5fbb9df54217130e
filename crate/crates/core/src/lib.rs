//! Gröbner–Shirshov bases for free associative algebras over the
//! rational-function field `Q(q)`.
//!
//! The crate covers exact coefficient arithmetic ([`scalar`]), words and
//! noncommutative polynomials under the deg-lex order ([`freealg`]),
//! composition checking, reduction and bounded completion ([`rewrite`]),
//! normal-word enumeration and Hilbert counts ([`basis`]), generators for
//! the quantized enveloping algebra `U_q(A_N)` and related presentations
//! ([`uq`]), and the text format and reports used by the `gsq` binary.

pub mod basis;
pub mod cli;
pub mod freealg;
pub mod presentation;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod uq;

pub use freealg::{Alphabet, Letter, Poly, Word};
pub use presentation::PresentationBundle;
pub use rewrite::RewriteSystem;
pub use scalar::Scalar;
