use std::collections::BTreeMap;

use crate::freealg::{Alphabet, Letter, Poly, Word};
use crate::presentation::{parse_poly, PresentationBundle};
use crate::scalar::Scalar;

use super::UqError;

/// Structure constants `[x_i, x_j] = Σ_k α_ij^k x_k` for `i > j` over an
/// ordered basis; unlisted brackets are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieTable {
    pub names: Vec<String>,
    pub brackets: BTreeMap<(usize, usize), Vec<(usize, Scalar)>>,
}

impl LieTable {
    pub fn new(names: Vec<String>) -> Self {
        LieTable {
            names,
            brackets: BTreeMap::new(),
        }
    }

    /// Sets `[x_i, x_j]`; a pair given as `i < j` is stored antisymmetrically.
    pub fn bracket(mut self, i: usize, j: usize, value: Vec<(usize, Scalar)>) -> Self {
        self.set(i, j, value);
        self
    }

    pub fn set(&mut self, i: usize, j: usize, value: Vec<(usize, Scalar)>) {
        if i > j {
            self.brackets.insert((i, j), value);
        } else {
            let neg = value.into_iter().map(|(k, c)| (k, c.neg())).collect();
            self.brackets.insert((j, i), neg);
        }
    }

    /// `generators: f < h < e` followed by lines `[e,h] = -2*e`.
    pub fn parse(text: &str) -> Result<Self, UqError> {
        let bad = |line: usize, m: String| UqError::InvalidTable(format!("line {line}: {m}"));
        let mut table: Option<(Alphabet, LieTable)> = None;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            if let Some(rest) = body.strip_prefix("generators:") {
                let names: Vec<String> = rest.split('<').map(|s| s.trim().to_string()).collect();
                let a = Alphabet::new(names.clone()).map_err(|e| bad(line, e.to_string()))?;
                table = Some((a, LieTable::new(names)));
                continue;
            }
            let (a, t) = table
                .as_mut()
                .ok_or_else(|| bad(line, "`generators:` must come first".into()))?;
            let (lhs, rhs) = body
                .split_once('=')
                .ok_or_else(|| bad(line, "expected `[a,b] = expr`".into()))?;
            let inner = lhs
                .trim()
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| bad(line, "expected `[a,b]`".into()))?;
            let (u, v) = inner.split_once(',').ok_or_else(|| bad(line, "expected `[a,b]`".into()))?;
            let look = |s: &str| {
                a.letter(s.trim())
                    .ok_or_else(|| bad(line, format!("unknown generator `{}`", s.trim())))
            };
            let (i, j) = (look(u)? as usize, look(v)? as usize);
            if i == j {
                return Err(bad(line, "a bracket needs two distinct generators".into()));
            }
            let p = parse_poly(rhs, a).map_err(|e| bad(line, e.to_string()))?;
            let mut value = Vec::new();
            for (w, c) in p.terms() {
                if w.len() != 1 {
                    return Err(bad(line, "brackets must be linear in the generators".into()));
                }
                value.push((w.letters()[0] as usize, c.clone()));
            }
            t.set(i, j, value);
        }
        table
            .map(|(_, t)| t)
            .ok_or_else(|| UqError::InvalidTable("missing `generators:` line".into()))
    }
}

/// `x_i x_j − x_j x_i − Σ α_ij^k x_k` for every `i > j`.
pub fn lie_pbw_relations(table: &LieTable) -> Result<PresentationBundle, UqError> {
    let alphabet = Alphabet::new(table.names.clone())?;
    let n = table.names.len();
    for (&(i, j), v) in &table.brackets {
        if i >= n || j >= n || i <= j || v.iter().any(|&(k, _)| k >= n) {
            return Err(UqError::InvalidTable(format!("bad bracket entry ({i}, {j})")));
        }
    }
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..i {
            let (a, b) = (i as Letter, j as Letter);
            let mut p = Poly::monomial(Word::from_letters(&[a, b])).sub(&Poly::monomial(Word::from_letters(&[b, a])));
            for (k, c) in table.brackets.get(&(i, j)).into_iter().flatten() {
                p = p.sub(&Poly::term(c.clone(), Word::letter(*k as Letter)));
            }
            rels.push(p);
        }
    }
    Ok(PresentationBundle::new("lie-pbw", alphabet, rels))
}

/// `sl₂` on `f < h < e`: `[h,e] = 2e`, `[h,f] = −2f`, `[e,f] = h`.
pub fn sl2_table() -> LieTable {
    let (f, h, e) = (0, 1, 2);
    LieTable::new(vec!["f".into(), "h".into(), "e".into()])
        .bracket(h, e, vec![(e, Scalar::from_int(2))])
        .bracket(h, f, vec![(f, Scalar::from_int(-2))])
        .bracket(e, f, vec![(h, Scalar::one())])
}

/// `sl₂` with `[h,e] = 3e`; the Jacobi identity fails.
pub fn sl2_perturbed_table() -> LieTable {
    sl2_table().bracket(1, 2, vec![(2, Scalar::from_int(3))])
}
