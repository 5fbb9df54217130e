use rayon::prelude::*;

use crate::freealg::Poly;

use super::reduce::{normal_form, normal_form_excluding};
use super::{composition_value, find_compositions, RewriteError, RewriteSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionLimits {
    /// Largest leading-word length a new relation may have.
    pub max_degree: usize,
    pub max_rounds: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits {
            max_degree: 12,
            max_rounds: 50,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    Complete,
    /// Some consequence was discarded for exceeding `max_degree`.
    Truncated,
}

#[derive(Debug, Clone)]
pub struct Completion {
    pub status: CompletionStatus,
    pub system: RewriteSystem,
    /// New relations in the order they were adjoined, before inter-reduction.
    pub added: Vec<Poly>,
    pub rounds: usize,
    pub discarded: usize,
}

/// Shirshov's algorithm with bounds. Each round reduces every composition of
/// the current system, adjoins the distinct nonzero monic normal forms in
/// sorted order, then inter-reduces.
pub fn shirshov_complete(sys: &RewriteSystem, limits: CompletionLimits) -> Result<Completion, RewriteError> {
    if limits.max_degree == 0 || limits.max_rounds == 0 {
        return Err(RewriteError::InvalidLimits);
    }
    let mut current = sys.clone();
    let mut added = Vec::new();
    let mut discarded = 0;
    for round in 1..=limits.max_rounds {
        let mut fresh: Vec<Poly> = find_compositions(&current)
            .par_iter()
            .filter_map(|c| {
                let v = composition_value(c, &current).expect("found compositions are valid");
                let nf = normal_form(&v, &current);
                (!nf.is_zero()).then(|| nf.monic().expect("nonzero"))
            })
            .collect();
        fresh.sort_by(|p, q| p.leading_word().cmp(&q.leading_word()).then_with(|| p.cmp(q)));
        fresh.dedup();
        let before = fresh.len();
        fresh.retain(|p| p.degree().unwrap_or(0) <= limits.max_degree);
        discarded += before - fresh.len();
        if fresh.is_empty() {
            let status = if discarded > 0 {
                CompletionStatus::Truncated
            } else {
                CompletionStatus::Complete
            };
            return Ok(Completion {
                status,
                system: current,
                added,
                rounds: round,
                discarded,
            });
        }
        let mut polys = current.polys();
        polys.extend(fresh.iter().cloned());
        added.extend(fresh);
        current = inter_reduce(RewriteSystem::new(current.alphabet().clone(), polys)?)?;
    }
    Err(RewriteError::LimitExceeded {
        rounds: limits.max_rounds,
        partial: Box::new(current),
    })
}

/// Reduces each relation by the others until nothing changes; relations
/// that reduce to zero are dropped.
pub(crate) fn inter_reduce(mut sys: RewriteSystem) -> Result<RewriteSystem, RewriteError> {
    'outer: loop {
        for i in 0..sys.len() {
            let p = sys.relation(i).poly();
            let nf = normal_form_excluding(p, &sys, i);
            if &nf == p {
                continue;
            }
            let mut polys = sys.polys();
            if nf.is_zero() {
                polys.remove(i);
            } else {
                polys[i] = nf.monic().expect("nonzero");
            }
            sys = RewriteSystem::new(sys.alphabet().clone(), polys)?;
            continue 'outer;
        }
        return Ok(sys);
    }
}
