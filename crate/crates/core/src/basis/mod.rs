//! Normal words and their graded counts.
//!
//! Enumeration walks the leading-word automaton and never enters a state
//! where a leading word has just been completed, so only normal words are
//! generated. Counting runs the same automaton as a dynamic program.

use std::collections::HashMap;

use crate::freealg::{FreeAlgError, Word};
use crate::rewrite::RewriteSystem;

/// Normal words of weighted degree `≤ cap`, grouped by weighted degree and
/// sorted by the monomial order inside each group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrEnumeration {
    pub weights: Vec<u32>,
    pub cap: u64,
    pub by_degree: Vec<Vec<Word>>,
}

impl IrrEnumeration {
    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.by_degree.iter().flatten()
    }

    pub fn counts(&self) -> Vec<u64> {
        self.by_degree.iter().map(|v| v.len() as u64).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertReport {
    pub weights: Vec<u32>,
    /// `(weighted degree, number of normal words)` for every degree up to the cap.
    pub dims: Vec<(u64, u64)>,
}

impl HilbertReport {
    pub fn counts(&self) -> Vec<u64> {
        self.dims.iter().map(|&(_, c)| c).collect()
    }
}

fn check_weights(sys: &RewriteSystem, weights: &[u32]) -> Result<(), FreeAlgError> {
    let names = sys.alphabet().names();
    if weights.len() != names.len() {
        return Err(FreeAlgError::WeightCount {
            expected: names.len(),
            found: weights.len(),
        });
    }
    if let Some(i) = weights.iter().position(|&w| w == 0) {
        return Err(FreeAlgError::NonPositiveWeight(names[i].clone()));
    }
    Ok(())
}

/// Calls `f` on every normal word of weighted degree `≤ cap` in depth-first
/// order, without collecting them.
pub fn for_each_irr<F: FnMut(&Word, u64)>(
    sys: &RewriteSystem,
    weights: &[u32],
    cap: u64,
    mut f: F,
) -> Result<(), FreeAlgError> {
    check_weights(sys, weights)?;
    let idx = sys.index();
    if idx.is_dead(idx.start()) {
        return Ok(());
    }
    let mut word = Word::empty();
    // (state, weight so far, next letter to try)
    let mut stack = vec![(idx.start(), 0u64, 0u32)];
    f(&word, 0);
    let n = weights.len() as u32;
    while let Some(top) = stack.last_mut() {
        let (state, wt, next) = *top;
        if next == n {
            stack.pop();
            word.pop();
            continue;
        }
        top.2 += 1;
        let nw = wt + weights[next as usize] as u64;
        if nw > cap {
            continue;
        }
        let s = idx.step(state, next);
        if idx.is_dead(s) {
            continue;
        }
        word.push(next);
        f(&word, nw);
        stack.push((s, nw, 0));
    }
    Ok(())
}

pub fn irr_words_weighted(sys: &RewriteSystem, weights: &[u32], cap: u64) -> Result<IrrEnumeration, FreeAlgError> {
    let mut by_degree = vec![Vec::new(); cap as usize + 1];
    for_each_irr(sys, weights, cap, |w, d| by_degree[d as usize].push(w.clone()))?;
    for v in &mut by_degree {
        v.sort();
    }
    Ok(IrrEnumeration {
        weights: weights.to_vec(),
        cap,
        by_degree,
    })
}

/// Normal words under the alphabet's own weights.
pub fn irr_words(sys: &RewriteSystem, cap: u64) -> IrrEnumeration {
    irr_words_weighted(sys, sys.alphabet().weights(), cap).expect("alphabet weights are positive")
}

/// Counts normal words per weighted degree by propagating word counts
/// through automaton states.
pub fn hilbert(sys: &RewriteSystem, weights: &[u32], cap: u64) -> Result<HilbertReport, FreeAlgError> {
    check_weights(sys, weights)?;
    let idx = sys.index();
    let cap = cap as usize;
    let mut counts = vec![0u64; cap + 1];
    // layer[d]: live state -> number of normal words of weight d ending there
    let mut layers: Vec<HashMap<u32, u64>> = vec![HashMap::new(); cap + 1];
    if !idx.is_dead(idx.start()) {
        layers[0].insert(idx.start(), 1);
    }
    for d in 0..=cap {
        let layer = std::mem::take(&mut layers[d]);
        counts[d] = layer.values().sum();
        for (&s, &c) in &layer {
            for (l, &w) in weights.iter().enumerate() {
                let nd = d + w as usize;
                if nd > cap {
                    continue;
                }
                let t = idx.step(s, l as u32);
                if !idx.is_dead(t) {
                    *layers[nd].entry(t).or_insert(0) += c;
                }
            }
        }
    }
    Ok(HilbertReport {
        weights: weights.to_vec(),
        dims: counts.into_iter().enumerate().map(|(d, c)| (d as u64, c)).collect(),
    })
}

/// Nondecreasing words over `n` letters of weighted degree `≤ cap`: the
/// PBW-monomial pattern, generated directly.
pub fn monotone_words(weights: &[u32], cap: u64) -> Vec<Word> {
    fn go(weights: &[u32], cap: u64, from: u32, wt: u64, cur: &mut Word, out: &mut Vec<Word>) {
        out.push(cur.clone());
        for l in from..weights.len() as u32 {
            let nw = wt + weights[l as usize] as u64;
            if nw <= cap {
                cur.push(l);
                go(weights, cap, l, nw, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(weights, cap, 0, 0, &mut Word::empty(), &mut out);
    out.sort();
    out
}
