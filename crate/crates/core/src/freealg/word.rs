use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use smallvec::SmallVec;

use super::FreeAlgError;

/// Index of a generator in its [`Alphabet`]; the index is also its rank, so
/// a larger letter is a larger generator.
pub type Letter = u32;

/// An ordered, named generator set with optional grading weights.
#[derive(Debug, Clone)]
pub struct Alphabet {
    names: Vec<String>,
    weights: Vec<u32>,
    lookup: HashMap<String, Letter>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.weights == other.weights
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    /// Generators in ascending order; every weight defaults to 1.
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Result<Self, FreeAlgError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = vec![1; names.len()];
        Self::with_weights(names, weights)
    }

    pub fn with_weights(names: Vec<String>, weights: Vec<u32>) -> Result<Self, FreeAlgError> {
        if weights.len() != names.len() {
            return Err(FreeAlgError::WeightCount {
                expected: names.len(),
                found: weights.len(),
            });
        }
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if !is_valid_name(n) {
                return Err(FreeAlgError::InvalidName(n.clone()));
            }
            if lookup.insert(n.clone(), i as Letter).is_some() {
                return Err(FreeAlgError::DuplicateGenerator(n.clone()));
            }
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(FreeAlgError::NonPositiveWeight(names[i].clone()));
        }
        Ok(Alphabet {
            names,
            weights,
            lookup,
        })
    }

    /// Same generators with new weights.
    pub fn reweighted(&self, weights: Vec<u32>) -> Result<Self, FreeAlgError> {
        Self::with_weights(self.names.clone(), weights)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, l: Letter) -> u32 {
        self.weights[l as usize]
    }

    pub fn has_unit_weights(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.lookup.get(name).copied()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.letters().iter().all(|&l| (l as usize) < self.names.len())
    }

    pub fn word(&self, names: &[&str]) -> Result<Word, FreeAlgError> {
        names
            .iter()
            .map(|n| self.letter(n).ok_or_else(|| FreeAlgError::UnknownGenerator(n.to_string())))
            .collect()
    }

    pub fn weighted_degree(&self, w: &Word) -> u64 {
        w.letters().iter().map(|&l| self.weight(l) as u64).sum()
    }

    /// Renders a word as `a*b*c`, or `1` when empty.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (i, &l) in w.letters().iter().enumerate() {
            if i > 0 {
                out.push('*');
            }
            out.push_str(self.name(l));
        }
        out
    }

    /// Compares two words in deg-lex order after checking both belong here.
    pub fn compare(&self, u: &Word, v: &Word) -> Result<Ordering, FreeAlgError> {
        if !self.contains(u) || !self.contains(v) {
            return Err(FreeAlgError::AlphabetMismatch);
        }
        Ok(u.cmp(v))
    }
}

/// Generator names: an ASCII letter or `_` followed by letters, digits or `_`.
/// `q` is reserved for the field parameter.
pub fn is_valid_name(n: &str) -> bool {
    let mut chars = n.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    n != "q" && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A word in the free monoid. The empty word is the identity.
///
/// `Ord` is the deg-lex order: shorter words are smaller, words of equal
/// length compare letter by letter from the left.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Letter; 6]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(letters.into())
    }

    pub fn letter(l: Letter) -> Self {
        Word(smallvec::smallvec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `a · self · b`
    pub fn sandwich(a: &[Letter], mid: &[Letter], b: &[Letter]) -> Word {
        let mut v: SmallVec<[Letter; 6]> = SmallVec::with_capacity(a.len() + mid.len() + b.len());
        v.extend_from_slice(a);
        v.extend_from_slice(mid);
        v.extend_from_slice(b);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn pop(&mut self) -> Option<Letter> {
        self.0.pop()
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters(&self.0[start..end])
    }

    /// Letters never decrease left to right.
    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|p| p[0] <= p[1])
    }

    /// Positions at which `pattern` occurs as a factor.
    pub fn occurrences<'a>(&'a self, pattern: &'a [Letter]) -> impl Iterator<Item = usize> + 'a {
        let n = self.0.len();
        let m = pattern.len();
        (0..(n + 1).saturating_sub(m)).filter(move |&i| &self.0[i..i + m] == pattern)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.0.as_slice())
    }
}
