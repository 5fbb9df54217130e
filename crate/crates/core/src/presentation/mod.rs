//! Presentations `k⟨X | S⟩` as values and as text.
//!
//! ```text
//! # comments run to the end of the line
//! name: uq-plus-2
//! field: Q(q)
//! generators: x12 < x13 < x23
//! weights: x12=1, x13=2, x23=1
//! rel: x13*x12 - q^-2 x12*x13
//! ```
//!
//! Generators are listed in ascending order. Letters must be joined with
//! `*`; a scalar may be juxtaposed to what follows it (`q^-2 x12*x13`).

mod parse;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::freealg::{Alphabet, FreeAlgError, Poly};
use crate::rewrite::{RewriteError, RewriteSystem};

pub use parse::{parse_poly, parse_presentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationBundle {
    pub name: String,
    pub alphabet: Alphabet,
    pub relations: Vec<Poly>,
    /// Free-form key/value annotations, exported as `meta:` lines.
    pub metadata: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        line: usize,
        column: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("line {line}, column {column}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, column: usize, name: String },
    #[error("line {line}: relation is zero")]
    ZeroRelation { line: usize },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: String },
    #[error("missing `generators:` line")]
    MissingGenerators,
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::UnknownGenerator { line, .. }
            | ParseError::ZeroRelation { line }
            | ParseError::Invalid { line, .. } => Some(*line),
            ParseError::MissingGenerators => None,
        }
    }
}

impl PresentationBundle {
    pub fn new(name: impl Into<String>, alphabet: Alphabet, relations: Vec<Poly>) -> Self {
        PresentationBundle {
            name: name.into(),
            alphabet,
            relations,
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }

    pub fn system(&self) -> Result<RewriteSystem, RewriteError> {
        RewriteSystem::new(self.alphabet.clone(), self.relations.clone())
    }

    pub fn reweighted(&self, weights: Vec<u32>) -> Result<Self, FreeAlgError> {
        Ok(PresentationBundle {
            alphabet: self.alphabet.reweighted(weights)?,
            ..self.clone()
        })
    }

    /// Same relations, new name.
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// The text format; `parse_presentation(&b.export()) == Ok(b)`.
    pub fn export(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            let _ = writeln!(out, "name: {}", self.name);
        }
        out.push_str("field: Q(q)\n");
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "meta: {k} = {v}");
        }
        let _ = writeln!(out, "generators: {}", self.alphabet.names().join(" < "));
        if !self.alphabet.has_unit_weights() {
            let ws: Vec<String> = self
                .alphabet
                .names()
                .iter()
                .zip(self.alphabet.weights())
                .map(|(n, w)| format!("{n}={w}"))
                .collect();
            let _ = writeln!(out, "weights: {}", ws.join(", "));
        }
        for r in &self.relations {
            let _ = writeln!(out, "rel: {}", r.render(&self.alphabet));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Word;
    use crate::scalar::Scalar;

    #[test]
    fn export_then_parse_is_identity() {
        let a = Alphabet::with_weights(vec!["x".into(), "y".into()], vec![1, 2]).unwrap();
        let x = Word::letter(0);
        let y = Word::letter(1);
        let weird = Scalar::one().div(&Scalar::q_pow(2).sub(&Scalar::from_int(1))).unwrap();
        let rels = vec![
            Poly::monomial(y.concat(&x)).sub(&Poly::term(weird, x.concat(&y))),
            Poly::monomial(x.concat(&x)).add(&Poly::constant(Scalar::laurent([(1, -1), (-1, 3)]))),
            Poly::monomial(y.clone()).sub(&Poly::term(Scalar::from_int(1).div(&Scalar::from_int(2)).unwrap(), x)),
        ];
        let b = PresentationBundle::new("t", a, rels).with_meta("n", 2);
        let text = b.export();
        assert_eq!(parse_presentation(&text).unwrap(), b, "{text}");
    }
}
