use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freealg::{Poly, Word};
use crate::scalar::Scalar;

use super::{RewriteError, RewriteSystem};

/// One rewrite `p ← p − coeff · a · s · b`, where `s` is relation `relation`
/// and `a·s̄·b` occurs in `p` with coefficient `coeff`; `position = |a|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub relation: usize,
    pub position: usize,
    pub a: Word,
    pub b: Word,
    pub coeff: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub result: Poly,
}

impl ReductionTrace {
    /// `input − result` as the explicit combination `Σ coeff · a · s · b`.
    pub fn ideal_combination(&self, sys: &RewriteSystem) -> Poly {
        let mut acc = Poly::zero();
        for s in &self.steps {
            let t = sys
                .relation(s.relation)
                .poly()
                .sandwich(s.a.letters(), s.b.letters())
                .scale(&s.coeff);
            acc = acc.add(&t);
        }
        acc
    }
}

/// Occurrence selection during reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Largest reducible word, leftmost occurrence, lowest relation id.
    Canonical,
    /// A random reducible word and a random occurrence in it, seeded.
    Random(u64),
}

type Terms = BTreeMap<Word, Scalar>;

fn add_into(terms: &mut Terms, w: Word, c: Scalar) {
    use std::collections::btree_map::Entry;
    match terms.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

/// Replaces the occurrence `a·s̄·b` with coefficient `c` by `−c·a·tail(s)·b`.
fn rewrite_at(terms: &mut Terms, sys: &RewriteSystem, rel: usize, a: &[u32], b: &[u32], c: &Scalar) {
    for (tw, tc) in sys.relation(rel).tail() {
        add_into(terms, Word::sandwich(a, tw.letters(), b), tc.mul(c).neg());
    }
}

fn canonical(
    p: &Poly,
    sys: &RewriteSystem,
    skip: Option<usize>,
    mut trace: Option<&mut Vec<TraceStep>>,
) -> Poly {
    let mut work: Terms = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut done: Vec<(Word, Scalar)> = Vec::new();
    while let Some((w, c)) = work.pop_last() {
        match sys.index().leftmost(w.letters(), skip) {
            None => done.push((w, c)),
            Some(m) => {
                let l = w.letters();
                let (a, b) = (&l[..m.start], &l[m.start + m.len..]);
                rewrite_at(&mut work, sys, m.pattern, a, b, &c);
                if let Some(t) = trace.as_deref_mut() {
                    t.push(TraceStep {
                        relation: m.pattern,
                        position: m.start,
                        a: Word::from_letters(a),
                        b: Word::from_letters(b),
                        coeff: c,
                    });
                }
            }
        }
    }
    Poly::from_terms(done)
}

fn random(p: &Poly, sys: &RewriteSystem, seed: u64, trace: Option<&mut Vec<TraceStep>>) -> Poly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work: Terms = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    let mut steps = Vec::new();
    loop {
        let reducible: Vec<&Word> = work.keys().filter(|w| sys.is_reducible(w)).collect();
        let Some(&w) = reducible.choose(&mut rng) else {
            break;
        };
        let w = w.clone();
        let matches = sys.index().find_all(w.letters());
        let m = matches[rng.gen_range(0..matches.len())];
        let c = work[&w].clone();
        let l = w.letters();
        let (a, b) = (&l[..m.start], &l[m.start + m.len..]);
        work.remove(&w);
        rewrite_at(&mut work, sys, m.pattern, a, b, &c);
        steps.push(TraceStep {
            relation: m.pattern,
            position: m.start,
            a: Word::from_letters(a),
            b: Word::from_letters(b),
            coeff: c,
        });
    }
    if let Some(t) = trace {
        t.extend(steps);
    }
    Poly::from_terms(work)
}

/// Canonical normal form together with the rewrite steps that produced it.
pub fn reduce(p: &Poly, sys: &RewriteSystem) -> ReductionTrace {
    let mut steps = Vec::new();
    let result = canonical(p, sys, None, Some(&mut steps));
    ReductionTrace { steps, result }
}

pub fn normal_form(p: &Poly, sys: &RewriteSystem) -> Poly {
    canonical(p, sys, None, None)
}

/// Normal form ignoring relation `id`; used to inter-reduce a relation
/// against the rest of its system.
pub(crate) fn normal_form_excluding(p: &Poly, sys: &RewriteSystem, id: usize) -> Poly {
    canonical(p, sys, Some(id), None)
}

pub fn normal_form_with_strategy(p: &Poly, sys: &RewriteSystem, strategy: Strategy) -> ReductionTrace {
    let mut steps = Vec::new();
    let result = match strategy {
        Strategy::Canonical => canonical(p, sys, None, Some(&mut steps)),
        Strategy::Random(seed) => random(p, sys, seed, Some(&mut steps)),
    };
    ReductionTrace { steps, result }
}

/// Re-applies every step to `input` and checks that each one cancels the
/// occurrence it names and that the final polynomial is the recorded result.
pub fn replay_trace(input: &Poly, trace: &ReductionTrace, sys: &RewriteSystem) -> Result<Poly, RewriteError> {
    let mut p = input.clone();
    for (i, s) in trace.steps.iter().enumerate() {
        let fail = |reason: String| RewriteError::ReplayMismatch { step: i, reason };
        if s.relation >= sys.len() {
            return Err(fail(format!("unknown relation {}", s.relation)));
        }
        if s.position != s.a.len() {
            return Err(fail("position differs from the left cofactor length".into()));
        }
        let rel = sys.relation(s.relation);
        let occ = Word::sandwich(s.a.letters(), rel.lead().letters(), s.b.letters());
        if p.coeff(&occ) != s.coeff {
            return Err(fail("coefficient does not match the rewritten occurrence".into()));
        }
        // Every other word of a·s·b lies below occ, so this cancels occ and
        // only touches smaller words.
        p = p.sub(&rel.poly().sandwich(s.a.letters(), s.b.letters()).scale(&s.coeff));
    }
    if p != trace.result {
        return Err(RewriteError::ReplayMismatch {
            step: trace.steps.len(),
            reason: "replayed polynomial differs from the recorded result".into(),
        });
    }
    Ok(p)
}
