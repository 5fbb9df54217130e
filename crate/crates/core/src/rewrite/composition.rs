use crate::freealg::{Poly, Word};

use super::{RewriteError, RewriteSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    Intersection,
    Inclusion,
}

impl CompositionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CompositionKind::Intersection => "intersection",
            CompositionKind::Inclusion => "inclusion",
        }
    }
}

/// An ambiguity `w` between relations `left` (f) and `right` (g).
///
/// Intersection: `w = f̄·b = a·ḡ` with a proper overlap.
/// Inclusion: `w = f̄ = a·ḡ·b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    pub left: usize,
    pub right: usize,
    pub w: Word,
    pub kind: CompositionKind,
    pub a: Word,
    pub b: Word,
}

/// All compositions, sorted by `(left, right, w)` and then by kind and cofactor.
pub fn find_compositions(sys: &RewriteSystem) -> Vec<Composition> {
    let leads = sys.leading_words();
    let mut out = Vec::new();
    for (fi, f) in leads.iter().enumerate() {
        let fl = f.letters();
        for (gi, g) in leads.iter().enumerate() {
            let gl = g.letters();
            for ov in 1..fl.len().min(gl.len()) {
                if fl[fl.len() - ov..] == gl[..ov] {
                    let b = Word::from_letters(&gl[ov..]);
                    out.push(Composition {
                        left: fi,
                        right: gi,
                        w: f.concat(&b),
                        kind: CompositionKind::Intersection,
                        a: Word::from_letters(&fl[..fl.len() - ov]),
                        b,
                    });
                }
            }
            if fi != gi && gl.len() <= fl.len() {
                for p in 0..=fl.len() - gl.len() {
                    if fl[p..p + gl.len()] == *gl {
                        out.push(Composition {
                            left: fi,
                            right: gi,
                            w: (*f).clone(),
                            kind: CompositionKind::Inclusion,
                            a: Word::from_letters(&fl[..p]),
                            b: Word::from_letters(&fl[p + gl.len()..]),
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn validate(c: &Composition, sys: &RewriteSystem) -> Result<(), RewriteError> {
    let bad = |m: &str| Err(RewriteError::InvalidComposition(m.to_string()));
    if c.left >= sys.len() || c.right >= sys.len() {
        return bad("relation id out of range");
    }
    let f = sys.relation(c.left).lead();
    let g = sys.relation(c.right).lead();
    match c.kind {
        CompositionKind::Intersection => {
            if f.concat(&c.b) != c.w || c.a.concat(g) != c.w {
                return bad("w is not f̄·b = a·ḡ");
            }
            if c.a.is_empty() || c.b.is_empty() || f.len() + g.len() <= c.w.len() {
                return bad("leading words do not properly overlap");
            }
        }
        CompositionKind::Inclusion => {
            if f != &c.w || Word::sandwich(c.a.letters(), g.letters(), c.b.letters()) != c.w {
                return bad("w is not f̄ = a·ḡ·b");
            }
            if c.left == c.right {
                return bad("a relation does not include itself");
            }
        }
    }
    Ok(())
}

/// `f·b − a·g` for intersections, `f − a·g·b` for inclusions.
pub fn composition_value(c: &Composition, sys: &RewriteSystem) -> Result<Poly, RewriteError> {
    validate(c, sys)?;
    let f = sys.relation(c.left).poly();
    let g = sys.relation(c.right).poly();
    Ok(match c.kind {
        CompositionKind::Intersection => f
            .sandwich(&[], c.b.letters())
            .sub(&g.sandwich(c.a.letters(), &[])),
        CompositionKind::Inclusion => f.sub(&g.sandwich(c.a.letters(), c.b.letters())),
    })
}
