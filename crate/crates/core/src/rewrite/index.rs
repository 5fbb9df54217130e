//! Multi-pattern matching of leading words inside arbitrary words.
//!
//! An Aho–Corasick automaton over generator indices with a dense transition
//! table. Besides finding occurrences for the reducer, the table doubles as
//! the subword-avoidance automaton used to enumerate normal words: a state is
//! dead exactly when the letters read so far end with some leading word.

use std::collections::VecDeque;

use crate::freealg::Letter;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct LeadIndex {
    alphabet_len: usize,
    delta: Vec<u32>,
    /// Patterns ending at each state, including those reached through
    /// failure links: `(pattern id, pattern length)`.
    outputs: Vec<Vec<(u32, u32)>>,
}

/// One occurrence of a pattern inside a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Match {
    pub start: usize,
    pub pattern: usize,
    pub len: usize,
}

impl LeadIndex {
    pub fn new<'a, I>(alphabet_len: usize, patterns: I) -> Self
    where
        I: IntoIterator<Item = &'a [Letter]>,
    {
        let a = alphabet_len.max(1);
        let mut delta = vec![NONE; a];
        let mut outputs: Vec<Vec<(u32, u32)>> = vec![Vec::new()];

        for (pid, pat) in patterns.into_iter().enumerate() {
            let mut s = 0usize;
            for &l in pat {
                let slot = s * a + l as usize;
                if delta[slot] == NONE {
                    let fresh = outputs.len();
                    outputs.push(Vec::new());
                    delta.extend(std::iter::repeat_n(NONE, a));
                    delta[slot] = fresh as u32;
                }
                s = delta[slot] as usize;
            }
            outputs[s].push((pid as u32, pat.len() as u32));
        }

        // Breadth-first completion of the transition function.
        let mut fail = vec![0u32; outputs.len()];
        let mut queue = VecDeque::new();
        for slot in &mut delta[..a] {
            let t = *slot;
            if t == NONE {
                *slot = 0;
            } else {
                fail[t as usize] = 0;
                queue.push_back(t as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            let f = fail[s] as usize;
            let inherited = outputs[f].clone();
            outputs[s].extend(inherited);
            for l in 0..a {
                let slot = s * a + l;
                let t = delta[slot];
                let via_fail = delta[f * a + l];
                if t == NONE {
                    delta[slot] = via_fail;
                } else {
                    fail[t as usize] = via_fail;
                    queue.push_back(t as usize);
                }
            }
        }
        for out in &mut outputs {
            out.sort_unstable();
        }
        LeadIndex {
            alphabet_len: a,
            delta,
            outputs,
        }
    }

    pub fn start(&self) -> u32 {
        0
    }

    #[inline]
    pub fn step(&self, state: u32, l: Letter) -> u32 {
        self.delta[state as usize * self.alphabet_len + l as usize]
    }

    /// True if some pattern ends at this state (including the empty pattern
    /// at the root).
    #[inline]
    pub fn is_dead(&self, state: u32) -> bool {
        !self.outputs[state as usize].is_empty()
    }

    /// All occurrences, sorted by `(start, pattern)`.
    pub fn find_all(&self, word: &[Letter]) -> Vec<Match> {
        let mut out = Vec::new();
        let mut push = |end: usize, outs: &[(u32, u32)]| {
            for &(pid, len) in outs {
                out.push(Match {
                    start: end - len as usize,
                    pattern: pid as usize,
                    len: len as usize,
                });
            }
        };
        let mut s = 0u32;
        push(0, &self.outputs[0]);
        for (i, &l) in word.iter().enumerate() {
            s = self.step(s, l);
            push(i + 1, &self.outputs[s as usize]);
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The occurrence with the smallest start position, ties broken by the
    /// smallest pattern id; patterns in `skip` are ignored.
    pub fn leftmost(&self, word: &[Letter], skip: Option<usize>) -> Option<Match> {
        let mut best: Option<Match> = None;
        let mut consider = |end: usize, outs: &[(u32, u32)]| {
            for &(pid, len) in outs {
                if Some(pid as usize) == skip {
                    continue;
                }
                let m = Match {
                    start: end - len as usize,
                    pattern: pid as usize,
                    len: len as usize,
                };
                if best.is_none_or(|b| (m.start, m.pattern) < (b.start, b.pattern)) {
                    best = Some(m);
                }
            }
        };
        let mut s = 0u32;
        consider(0, &self.outputs[0]);
        for (i, &l) in word.iter().enumerate() {
            s = self.step(s, l);
            consider(i + 1, &self.outputs[s as usize]);
        }
        best
    }

    pub fn is_reducible(&self, word: &[Letter]) -> bool {
        if self.is_dead(0) {
            return true;
        }
        let mut s = 0u32;
        for &l in word {
            s = self.step(s, l);
            if self.is_dead(s) {
                return true;
            }
        }
        false
    }
}

/// Quadratic scan used as an oracle for the automaton.
pub fn naive_find_all(patterns: &[&[Letter]], word: &[Letter]) -> Vec<Match> {
    let mut out = Vec::new();
    for (pid, pat) in patterns.iter().enumerate() {
        if pat.len() > word.len() {
            continue;
        }
        for start in 0..=word.len() - pat.len() {
            if &word[start..start + pat.len()] == *pat {
                out.push(Match {
                    start,
                    pattern: pid,
                    len: pat.len(),
                });
            }
        }
    }
    out.sort_unstable();
    out
}
