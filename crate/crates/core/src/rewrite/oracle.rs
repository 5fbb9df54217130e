//! Quotient dimensions by plain linear algebra at rational values of `q`.
//!
//! Independent of the rewriting machinery: the ideal's degree-`≤ e` part is
//! spanned by all `a·s·b` with `|a·s̄·b| ≤ e`, and its rank is computed by
//! exact Gaussian elimination after substituting `q`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::freealg::Word;
use crate::scalar::{rational, ScalarError};

use super::{RewriteError, RewriteSystem};

pub const DEFAULT_SPECIALIZATIONS: [(i64, i64); 2] = [(7, 3), (11, 5)];

type Row = BTreeMap<Word, BigRational>;

struct Echelon {
    pivots: HashMap<Word, Row>,
}

impl Echelon {
    /// Adds a row; returns whether the rank grew.
    fn insert(&mut self, mut row: Row) -> bool {
        while let Some((lead, c)) = row.last_key_value() {
            let Some(piv) = self.pivots.get(lead) else {
                let (lead, inv) = (lead.clone(), c.recip());
                for v in row.values_mut() {
                    *v *= &inv;
                }
                self.pivots.insert(lead, row);
                return true;
            };
            let c = c.clone();
            for (w, pc) in piv {
                let e = row.entry(w.clone()).or_insert_with(BigRational::zero);
                *e -= &c * pc;
                if e.is_zero() {
                    row.remove(w);
                }
            }
        }
        false
    }
}

fn words_of_len(n: usize, len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as u32).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

fn dims_at(sys: &RewriteSystem, d: usize, q: &BigRational) -> Result<Vec<u64>, RewriteError> {
    let rels: Vec<Vec<(Word, BigRational)>> = sys
        .relations()
        .iter()
        .map(|r| {
            r.poly()
                .terms()
                .map(|(w, c)| match c.specialize(q) {
                    Ok(v) => Ok((w.clone(), v)),
                    Err(ScalarError::PoleAtSpecialization(p)) => Err(RewriteError::Pole(p)),
                    Err(ScalarError::DivisionByZero) => Err(RewriteError::Pole(q.clone())),
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let n = sys.alphabet().len();
    let mut ech = Echelon {
        pivots: HashMap::new(),
    };
    let mut dims = Vec::with_capacity(d + 1);
    for e in 0..=d {
        let before = ech.pivots.len();
        for (ri, r) in sys.relations().iter().enumerate() {
            let lead_len = r.lead().len();
            if lead_len > e {
                continue;
            }
            let free = e - lead_len;
            for alen in 0..=free {
                for a in words_of_len(n, alen) {
                    for b in words_of_len(n, free - alen) {
                        let row: Row = rels[ri]
                            .iter()
                            .map(|(w, c)| (Word::sandwich(&a, w.letters(), &b), c.clone()))
                            .collect();
                        ech.insert(row);
                    }
                }
            }
        }
        let new_rank = (ech.pivots.len() - before) as u64;
        dims.push((n as u64).pow(e as u32) - new_rank);
    }
    Ok(dims)
}

/// Per-degree dimensions `dim(F_e / F_{e-1})` of the quotient filtered by
/// word length, for `e = 0..=d`, computed at each specialization of `q`.
/// The specializations must agree.
pub fn oracle_quotient_dim(
    sys: &RewriteSystem,
    d: usize,
    specializations: &[BigRational],
) -> Result<Vec<u64>, RewriteError> {
    let all: Vec<Vec<u64>> = specializations
        .par_iter()
        .map(|q| dims_at(sys, d, q))
        .collect::<Result<_, _>>()?;
    let Some(first) = all.first() else {
        return Ok(Vec::new());
    };
    for e in 0..=d {
        let vals: Vec<u64> = all.iter().map(|v| v[e]).collect();
        if vals.iter().any(|&v| v != vals[0]) {
            return Err(RewriteError::SpecializationDisagreement { degree: e, dims: vals });
        }
    }
    Ok(first.clone())
}

pub fn oracle_quotient_dim_default(sys: &RewriteSystem, d: usize) -> Result<Vec<u64>, RewriteError> {
    let qs: Vec<BigRational> = DEFAULT_SPECIALIZATIONS
        .iter()
        .map(|&(n, m)| rational(n, m))
        .collect();
    oracle_quotient_dim(sys, d, &qs)
}
