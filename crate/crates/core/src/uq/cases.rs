//! Maps each composition of the Jimbo relations to the case tables of the
//! hand proof that they form a Gröbner–Shirshov basis.
//!
//! Every composition has `f̄ = x_{mn}x_{ij}`, `ḡ = x_{ij}x_{kl}` and
//! `w = x_{mn}x_{ij}x_{kl}`. The case is fixed by the relation families of
//! `f` and `g`; the subcase by the classes of further index pairs. Every
//! class condition a table row lists is checked, so a composition that
//! satisfies no row is reported rather than guessed.

use crate::freealg::Letter;
use crate::rewrite::{Composition, CompositionKind, RewriteSystem};

use super::jimbo::{classify_pair, jimbo_relation, IndexPair, JimboIndex, PairClass};
use super::UqError;
use PairClass::*;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProofCase {
    pub case: u8,
    /// Dotted row label such as `1.3.2`; equal to the case number for
    /// single-row tables.
    pub subcase: String,
}

/// Relation families: `C1 ∪ C3`, `C2 ∪ C6`, `C4`, `C5`.
fn family(c: PairClass) -> u8 {
    match c {
        C1 | C3 => 0,
        C2 | C6 => 1,
        C4 => 2,
        C5 => 3,
    }
}

struct Shape {
    ij: IndexPair,
    mn: IndexPair,
    kl: IndexPair,
    cf: PairClass,
    cg: PairClass,
    ckm: PairClass,
}

impl Shape {
    fn class(&self, p: IndexPair, r: IndexPair) -> Option<PairClass> {
        classify_pair(p, r).ok()
    }

    fn kj_mn(&self) -> Option<PairClass> {
        self.class((self.kl.0, self.ij.1), self.mn)
    }

    fn kl_mj(&self) -> Option<PairClass> {
        self.class(self.kl, (self.mn.0, self.ij.1))
    }

    fn kl_in(&self) -> Option<PairClass> {
        self.class(self.kl, (self.ij.0, self.mn.1))
    }

    fn il_mn(&self) -> Option<PairClass> {
        self.class((self.ij.0, self.kl.1), self.mn)
    }
}

/// Position of `c` in `classes`, as a 1-based row suffix.
fn row(c: PairClass, classes: &[PairClass]) -> Option<usize> {
    classes.iter().position(|&x| x == c).map(|p| p + 1)
}

fn label(s: &Shape) -> Option<String> {
    let (cf, cg, ckm) = (s.cf, s.cg, s.ckm);
    let case = 4 * family(cf) + family(cg) + 1;
    let l = |t: &str| Some(t.to_string());
    let nested = |head: &str, r: Option<usize>| r.map(|k| format!("{head}.{k}"));
    match case {
        1 => match (cf, cg) {
            (C1, C1) if ckm == C1 => l("1.1"),
            (C1, C3) if ckm == C4 => l("1.2"),
            (C3, C1) => nested("1.3", row(ckm, &[C4, C5, C6])),
            (C3, C3) if ckm == C3 => l("1.4"),
            _ => None,
        },
        2 => match (cf, cg) {
            (C1, C2) => nested("2.1", row(ckm, &[C2, C3, C4])),
            (C1, C6) if ckm == C6 => l("2.2"),
            (C3, C2) if ckm == C2 => l("2.3"),
            (C3, C6) if ckm == C6 => l("2.4"),
            _ => None,
        },
        3 => match cf {
            C1 if ckm == C4 && s.kj_mn() == Some(C4) => l("3.1"),
            C3 if s.kj_mn() == Some(C3) => nested("3.2", row(ckm, &[C4, C5, C6])),
            _ => None,
        },
        4 => match cf {
            C1 if ckm == C5 && s.kj_mn() == Some(C4) => l("4.1"),
            C3 if ckm == C6 && s.kj_mn() == Some(C3) => l("4.2"),
            _ => None,
        },
        5 => match (cf, cg) {
            (C2, C1) => nested("5.1", row(ckm, &[C2, C3, C4, C5, C6])),
            (C2, C3) if ckm == C2 => l("5.2"),
            (C6, C1) if ckm == C6 => l("5.3"),
            (C6, C3) if ckm == C6 => l("5.4"),
            _ => None,
        },
        6 => match (cf, cg) {
            (C2, C2) if ckm == C2 => l("6.1"),
            (C2, C6) if ckm == C6 => l("6.2"),
            (C6, C2) => nested("6.3", row(ckm, &[C2, C3, C4, C5, C6])),
            (C6, C6) if ckm == C6 => l("6.4"),
            _ => None,
        },
        7 => match cf {
            C2 if s.kj_mn() == Some(C2) => nested("7.1", row(ckm, &[C2, C3, C4, C5, C6])),
            C6 if ckm == C6 && s.kj_mn() == Some(C6) => l("7.2"),
            _ => None,
        },
        8 => match cf {
            C2 if ckm == C6 && s.kj_mn() == Some(C2) => l("8.1"),
            C6 if ckm == C6 && s.kj_mn() == Some(C6) => l("8.2"),
            _ => None,
        },
        9 => match cg {
            C1 if s.kl_mj() == Some(ckm) => nested("9.1", row(ckm, &[C4, C5, C6])),
            C3 if ckm == C4 && s.kl_mj() == Some(C3) => l("9.2"),
            _ => None,
        },
        10 => match cg {
            C2 if s.kl_mj() == Some(C2) => nested("10.1", row(ckm, &[C2, C3, C4])),
            C6 if ckm == C6 && s.kl_mj() == Some(C6) => l("10.2"),
            _ => None,
        },
        11 if s.kl_mj() == Some(ckm) => nested("11", row(ckm, &[C4, C5, C6])),
        12 if ckm == C6 && s.kl_mj() == Some(C6) && s.kj_mn() == Some(C4) && s.kl_in() == Some(C5) => l("12"),
        13 => match cg {
            C1 if ckm == C6 && s.kl_in() == Some(C1) => l("13.1"),
            C3 if ckm == C5 && s.kl_in() == Some(C4) => l("13.2"),
            _ => None,
        },
        14 => match cg {
            C2 if s.kl_in() == Some(ckm) => nested("14.1", row(ckm, &[C2, C3, C4])),
            C6 if ckm == C6 && s.kl_in() == Some(C6) => l("14.2"),
            _ => None,
        },
        15 if ckm == C6 && s.kl_in() == Some(C4) && s.kj_mn() == Some(C5) && s.il_mn() == Some(C6) => l("15"),
        16 if ckm == C6 && s.kl_in() == Some(C5) && s.kj_mn() == Some(C5) => l("16"),
        _ => None,
    }
}

fn pair_of(idx: &JimboIndex, l: Letter) -> IndexPair {
    idx.pair(l as usize)
}

/// Case and subcase of a composition of the Jimbo relations of rank `n`,
/// where `sys` uses the generator layout of that bundle.
pub fn proof_case_classify(c: &Composition, sys: &RewriteSystem, n: usize) -> Result<ProofCase, UqError> {
    let idx = JimboIndex::new(n);
    let unclassifiable = |why: &str| UqError::UnclassifiableComposition(why.to_string());
    if sys.alphabet().len() != idx.len() {
        return Err(unclassifiable("the system is not over the Jimbo generators"));
    }
    if c.kind != CompositionKind::Intersection || c.w.len() != 3 {
        return Err(unclassifiable("only length-3 intersection compositions occur"));
    }
    let ls = c.w.letters();
    let (mn, ij, kl) = (pair_of(&idx, ls[0]), pair_of(&idx, ls[1]), pair_of(&idx, ls[2]));
    let x = |p: IndexPair| idx.position(p).unwrap() as Letter;
    let (Ok(cf), Ok(cg), Ok(ckm)) = (classify_pair(ij, mn), classify_pair(kl, ij), classify_pair(kl, mn)) else {
        return Err(unclassifiable("leading words are not descending pairs"));
    };
    if sys.relation(c.left).poly() != &jimbo_relation(ij, mn, &x)
        || sys.relation(c.right).poly() != &jimbo_relation(kl, ij, &x)
    {
        return Err(unclassifiable("relations are not the Jimbo relations"));
    }
    let s = Shape { ij, mn, kl, cf, cg, ckm };
    let case = 4 * family(cf) + family(cg) + 1;
    label(&s)
        .map(|subcase| ProofCase { case, subcase })
        .ok_or_else(|| {
            UqError::UnclassifiableComposition(format!(
                "case {case}: ((i,j),(m,n)) = ({ij:?},{mn:?}) in {}, ((k,l),(i,j)) in {}, ((k,l),(m,n)) in {}",
                cf.as_str(),
                cg.as_str(),
                ckm.as_str()
            ))
        })
}
