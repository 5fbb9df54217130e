use std::collections::HashMap;

use crate::freealg::{Alphabet, Letter, Poly, Word};
use crate::presentation::PresentationBundle;
use crate::scalar::Scalar;

use super::{Sign, UqError};

/// The six shapes of an ordered pair `(i,j) <_lex (m,n)` of Jimbo indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairClass {
    /// `i = m < j < n`
    C1,
    /// `i < m < n < j`
    C2,
    /// `i < m < j = n`
    C3,
    /// `i < m < j < n`
    C4,
    /// `i < j = m < n`
    C5,
    /// `i < j < m < n`
    C6,
}

impl PairClass {
    pub fn as_str(self) -> &'static str {
        match self {
            PairClass::C1 => "C1",
            PairClass::C2 => "C2",
            PairClass::C3 => "C3",
            PairClass::C4 => "C4",
            PairClass::C5 => "C5",
            PairClass::C6 => "C6",
        }
    }
}

pub type IndexPair = (usize, usize);

pub fn classify_pair(p: IndexPair, r: IndexPair) -> Result<PairClass, UqError> {
    let ((i, j), (m, n)) = (p, r);
    if i == 0 || m == 0 || i >= j || m >= n || p >= r {
        return Err(UqError::NotComparable(p, r));
    }
    Ok(if i == m {
        PairClass::C1
    } else if m < j {
        match n.cmp(&j) {
            std::cmp::Ordering::Less => PairClass::C2,
            std::cmp::Ordering::Equal => PairClass::C3,
            std::cmp::Ordering::Greater => PairClass::C4,
        }
    } else if m == j {
        PairClass::C5
    } else {
        PairClass::C6
    })
}

/// The index pairs `1 ≤ i < j ≤ N+1` in lex order, i.e. in generator order.
#[derive(Debug, Clone)]
pub struct JimboIndex {
    n: usize,
    pairs: Vec<IndexPair>,
    pos: HashMap<IndexPair, usize>,
}

impl JimboIndex {
    pub fn new(n: usize) -> Self {
        let pairs: Vec<IndexPair> = (1..=n + 1)
            .flat_map(|i| (i + 1..=n + 1).map(move |j| (i, j)))
            .collect();
        let pos = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
        JimboIndex { n, pairs, pos }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[IndexPair] {
        &self.pairs
    }

    pub fn pair(&self, k: usize) -> IndexPair {
        self.pairs[k]
    }

    pub fn position(&self, p: IndexPair) -> Option<usize> {
        self.pos.get(&p).copied()
    }

    /// `x12`, or `x1_10` once indices stop being single digits.
    pub fn name(&self, prefix: &str, (i, j): IndexPair) -> String {
        if self.n + 1 > 9 {
            format!("{prefix}{i}_{j}")
        } else {
            format!("{prefix}{i}{j}")
        }
    }

    pub fn names(&self, prefix: &str) -> Vec<String> {
        self.pairs.iter().map(|&p| self.name(prefix, p)).collect()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.pairs.iter().map(|&(i, j)| (j - i) as u32).collect()
    }
}

/// The Jimbo relation selected by the class of `((i,j),(m,n))`, over letters
/// given by `x`.
pub(crate) fn jimbo_relation(p: IndexPair, r: IndexPair, x: &impl Fn(IndexPair) -> Letter) -> Poly {
    let ((i, j), (m, n)) = (p, r);
    let class = classify_pair(p, r).expect("ordered pair");
    let two = |a: IndexPair, b: IndexPair| Word::from_letters(&[x(a), x(b)]);
    let lead = Poly::monomial(two(r, p));
    let swapped = two(p, r);
    match class {
        PairClass::C1 | PairClass::C3 => lead.sub(&Poly::term(Scalar::q_pow(-2), swapped)),
        PairClass::C2 | PairClass::C6 => lead.sub(&Poly::monomial(swapped)),
        PairClass::C4 => lead
            .sub(&Poly::monomial(swapped))
            .add(&Poly::term(Scalar::laurent([(2, 1), (-2, -1)]), two((i, n), (m, j)))),
        PairClass::C5 => lead
            .sub(&Poly::term(Scalar::q_pow(2), swapped))
            .add(&Poly::term(Scalar::q(), Word::letter(x((i, n))))),
    }
}

/// One relation per ordered pair `(i,j) <_lex (m,n)`, ordered by `(i,j)` then `(m,n)`.
pub(crate) fn jimbo_polys(idx: &JimboIndex, x: impl Fn(IndexPair) -> Letter) -> Vec<Poly> {
    let ps = idx.pairs();
    let mut out = Vec::new();
    for (a, &p) in ps.iter().enumerate() {
        for &r in &ps[a + 1..] {
            out.push(jimbo_relation(p, r, &x));
        }
    }
    out
}

/// `k⟨X̃ | S̃⁺⟩` (or the mirrored `Ỹ` bundle), weights `j − i`.
pub fn jimbo_bundle(n: usize, sign: Sign) -> Result<PresentationBundle, UqError> {
    if n == 0 {
        return Err(UqError::InvalidArguments("N must be at least 1".into()));
    }
    let idx = JimboIndex::new(n);
    let alphabet = Alphabet::with_weights(idx.names(sign.prefix()), idx.weights())?;
    let rels = jimbo_polys(&idx, |p| idx.position(p).unwrap() as Letter);
    Ok(PresentationBundle::new(format!("uq-{}-{n}", sign.as_str()), alphabet, rels).with_meta("n", n))
}

/// Images of the Jimbo generators in the simple generators `x_1 < … < x_N`:
/// `x_{i,i+1} ↦ x_i`, `x_{ij} ↦ q x_{i,j−1} x_{j−1,j} − q^{-1} x_{j−1,j} x_{i,j−1}`.
/// Indexed by Jimbo letter.
pub fn jimbo_expansion(n: usize) -> Result<Vec<Poly>, UqError> {
    if n == 0 {
        return Err(UqError::InvalidArguments("N must be at least 1".into()));
    }
    let idx = JimboIndex::new(n);
    let mut img: HashMap<IndexPair, Poly> = HashMap::new();
    for span in 1..=n {
        for i in 1..=n + 1 - span {
            let j = i + span;
            let p = if span == 1 {
                Poly::monomial(Word::letter((i - 1) as Letter))
            } else {
                let a = &img[&(i, j - 1)];
                let b = &img[&(j - 1, j)];
                a.mul(b).scale(&Scalar::q()).sub(&b.mul(a).scale(&Scalar::q_pow(-1)))
            };
            img.insert((i, j), p);
        }
    }
    Ok(idx.pairs().iter().map(|p| img.remove(p).unwrap()).collect())
}

/// `x_i ↦ x_{i,i+1}`: simple letter index to Jimbo letter index.
pub fn simple_to_jimbo(n: usize) -> Vec<Letter> {
    let idx = JimboIndex::new(n);
    (1..=n).map(|i| idx.position((i, i + 1)).unwrap() as Letter).collect()
}
