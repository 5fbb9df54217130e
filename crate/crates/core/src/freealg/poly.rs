use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use crate::scalar::{Scalar, ScalarError};

use super::{Alphabet, FreeAlgError, Letter, Word};

/// A noncommutative polynomial: a finite `Word -> Scalar` map without zero
/// coefficients. Terms are kept sorted under the deg-lex order, so the
/// leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Word, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn monomial(w: Word) -> Self {
        Self::term(Scalar::one(), w)
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(terms: I) -> Self {
        let mut p = Poly::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Word, Scalar> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The maximal word and its coefficient.
    pub fn leading(&self) -> Result<(&Word, &Scalar), FreeAlgError> {
        self.terms.last_key_value().ok_or(FreeAlgError::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.last_key_value().map(|(w, _)| w)
    }

    /// Maximum word length, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.leading_word().map(Word::len)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_ok_and(|(_, c)| c.is_one())
    }

    /// True if all words have the same length.
    pub fn is_homogeneous(&self) -> bool {
        let mut lens = self.terms.keys().map(Word::len);
        match lens.next() {
            None => true,
            Some(l) => lens.all(|m| m == l),
        }
    }

    /// Adds `c * w` in place.
    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &a.mul(b));
            }
        }
        out
    }

    /// `a · self · b` for words `a`, `b`.
    pub fn sandwich(&self, a: &[Letter], b: &[Letter]) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (Word::sandwich(a, w.letters(), b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Poly, FreeAlgError> {
        let (_, c) = self.leading()?;
        if c.is_one() {
            return Ok(self.clone());
        }
        let inv = c.inv().map_err(|_| FreeAlgError::ZeroPolynomial)?;
        Ok(self.scale(&inv))
    }

    /// Divides every coefficient by a scalar.
    pub fn div_scalar(&self, c: &Scalar) -> Result<Poly, ScalarError> {
        Ok(self.scale(&c.inv()?))
    }

    /// The constant term if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    /// Renames letters through `map` (letter -> letter).
    pub fn relabel(&self, map: &[Letter]) -> Poly {
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(w, c)| (w.letters().iter().map(|&l| map[l as usize]).collect(), c.clone())),
        )
    }

    /// Applies the algebra homomorphism determined by letter images.
    pub fn substitute(&self, images: &HashMap<Letter, Poly>) -> Result<Poly, FreeAlgError> {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            let mut img = Poly::constant(c.clone());
            for l in w.letters() {
                let li = images.get(l).ok_or(FreeAlgError::MissingImage(*l))?;
                img = img.mul(li);
            }
            out = out.add(&img);
        }
        Ok(out)
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<(), FreeAlgError> {
        if self.terms.keys().all(|w| alphabet.contains(w)) {
            Ok(())
        } else {
            Err(FreeAlgError::AlphabetMismatch)
        }
    }

    /// Renders in presentation syntax, largest term first:
    /// `x13*x12 - q^-2 x12*x13`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (w, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff = render_coefficient(&mag);
            match (w.is_empty(), mag.is_one()) {
                (true, _) => out.push_str(&coeff),
                (false, true) => out.push_str(&alphabet.render(w)),
                (false, false) => {
                    out.push_str(&coeff);
                    out.push(' ');
                    out.push_str(&alphabet.render(w));
                }
            }
        }
        out
    }
}

/// A coefficient in a form that binds tighter than a following word.
fn render_coefficient(c: &Scalar) -> String {
    match c.laurent_terms() {
        Some(t) if t.len() > 1 => format!("({c})"),
        _ => c.to_string(),
    }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
