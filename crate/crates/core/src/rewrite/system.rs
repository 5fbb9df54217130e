use crate::freealg::{Alphabet, Poly, Word};
use crate::scalar::Scalar;

use super::index::LeadIndex;
use super::RewriteError;

/// A monic relation split into its leading word and the remaining terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    poly: Poly,
    lead: Word,
    /// `poly - lead`, largest word first.
    tail: Vec<(Word, Scalar)>,
}

impl Relation {
    fn new(poly: Poly) -> Self {
        let lead = poly.leading_word().expect("nonzero relation").clone();
        let tail = poly
            .terms()
            .rev()
            .skip(1)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Relation { poly, lead, tail }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn lead(&self) -> &Word {
        &self.lead
    }

    pub fn tail(&self) -> &[(Word, Scalar)] {
        &self.tail
    }
}

/// A finite set of monic relations over an alphabet, with a subword index on
/// their leading words. Relation ids are positions in [`relations`].
///
/// [`relations`]: RewriteSystem::relations
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    relations: Vec<Relation>,
    index: LeadIndex,
}

impl RewriteSystem {
    /// Makes every relation monic and drops exact duplicates, keeping the
    /// first occurrence. Zero relations are rejected.
    pub fn new(alphabet: Alphabet, polys: Vec<Poly>) -> Result<Self, RewriteError> {
        let mut relations: Vec<Relation> = Vec::with_capacity(polys.len());
        for (i, p) in polys.into_iter().enumerate() {
            if p.is_zero() {
                return Err(RewriteError::ZeroRelation(i));
            }
            p.check_alphabet(&alphabet)
                .map_err(|_| RewriteError::AlphabetMismatch)?;
            let m = p.monic().expect("nonzero");
            if relations.iter().any(|r| r.poly == m) {
                continue;
            }
            relations.push(Relation::new(m));
        }
        Ok(Self::from_relations(alphabet, relations))
    }

    fn from_relations(alphabet: Alphabet, relations: Vec<Relation>) -> Self {
        let index = LeadIndex::new(alphabet.len(), relations.iter().map(|r| r.lead.letters()));
        RewriteSystem {
            alphabet,
            relations,
            index,
        }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self::from_relations(alphabet, Vec::new())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, id: usize) -> &Relation {
        &self.relations[id]
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn polys(&self) -> Vec<Poly> {
        self.relations.iter().map(|r| r.poly.clone()).collect()
    }

    pub fn leading_words(&self) -> Vec<&Word> {
        self.relations.iter().map(|r| &r.lead).collect()
    }

    pub(crate) fn index(&self) -> &LeadIndex {
        &self.index
    }

    /// True if `w` contains some leading word as a factor.
    pub fn is_reducible(&self, w: &Word) -> bool {
        self.index.is_reducible(w.letters())
    }

    /// Same system over a reweighted alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Self, RewriteError> {
        if alphabet.names() != self.alphabet.names() {
            return Err(RewriteError::AlphabetMismatch);
        }
        Ok(Self::from_relations(alphabet, self.relations.clone()))
    }
}
