//! The whole of `U_q(A_N)` on `X̃ ∪ H ∪ Ỹ`.
//!
//! Generator order, ascending: the `ỹ` block in lex order, then
//! `h1_inv < h1 < h2_inv < h2 < …`, then the `x̃` block in lex order.

use crate::freealg::{Alphabet, Letter, Poly, Word};
use crate::presentation::PresentationBundle;
use crate::rewrite::{shirshov_complete, CompletionLimits, CompletionStatus, RewriteSystem};
use crate::scalar::Scalar;

use super::cartan::cartan_an;
use super::jimbo::{jimbo_polys, IndexPair, JimboIndex};
use super::UqError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FullMode {
    /// `K` and `T` only for the simple generators, as displayed.
    AsPrinted,
    /// Adds `h`-commutations with every composite generator, then closes the
    /// set under bounded completion.
    Extended,
}

impl FullMode {
    pub fn as_str(self) -> &'static str {
        match self {
            FullMode::AsPrinted => "as-printed",
            FullMode::Extended => "extended",
        }
    }
}

/// Bounds for the completion step of extended mode.
pub const EXTENDED_LIMITS: CompletionLimits = CompletionLimits {
    max_degree: 4,
    max_rounds: 8,
};

/// Letter layout of the full alphabet.
#[derive(Debug, Clone)]
pub struct FullLayout {
    pub index: JimboIndex,
}

impl FullLayout {
    pub fn new(n: usize) -> Self {
        FullLayout {
            index: JimboIndex::new(n),
        }
    }

    fn p(&self) -> usize {
        self.index.len()
    }

    pub fn y(&self, p: IndexPair) -> Letter {
        self.index.position(p).unwrap() as Letter
    }

    /// `h_i^{-1}`, 1-based `i`.
    pub fn h_inv(&self, i: usize) -> Letter {
        (self.p() + 2 * (i - 1)) as Letter
    }

    pub fn h(&self, i: usize) -> Letter {
        self.h_inv(i) + 1
    }

    pub fn x(&self, p: IndexPair) -> Letter {
        (self.p() + 2 * self.index.rank() + self.index.position(p).unwrap()) as Letter
    }

    pub fn is_y(&self, l: Letter) -> bool {
        (l as usize) < self.p()
    }

    pub fn is_h(&self, l: Letter) -> bool {
        !self.is_y(l) && !self.is_x(l)
    }

    pub fn is_x(&self, l: Letter) -> bool {
        (l as usize) >= self.p() + 2 * self.index.rank()
    }

    pub fn names(&self) -> Vec<String> {
        let mut names = self.index.names("y");
        for i in 1..=self.index.rank() {
            names.push(format!("h{i}_inv"));
            names.push(format!("h{i}"));
        }
        names.extend(self.index.names("x"));
        names
    }
}

fn w(ls: &[Letter]) -> Word {
    Word::from_letters(ls)
}

/// `u v − c · v u`.
fn twisted(u: Letter, v: Letter, c: Scalar) -> Poly {
    Poly::monomial(w(&[u, v])).sub(&Poly::term(c, w(&[v, u])))
}

fn printed_relations(lay: &FullLayout) -> Vec<Poly> {
    let n = lay.index.rank();
    let cartan = cartan_an(n).expect("n >= 1");
    let simple = |i: usize| (i, i + 1);
    let mut rels = jimbo_polys(&lay.index, |p| lay.x(p));
    for i in 1..=n {
        for j in 1..i {
            rels.push(twisted(lay.h(i), lay.h(j), Scalar::one()));
        }
    }
    for i in 1..=n {
        rels.push(Poly::monomial(w(&[lay.h(i), lay.h_inv(i)])).sub(&Poly::one()));
        rels.push(Poly::monomial(w(&[lay.h_inv(i), lay.h(i)])).sub(&Poly::one()));
    }
    for i in 1..=n {
        for j in 1..=n {
            let e = cartan.d(i - 1) * cartan.a(i - 1, j - 1);
            rels.extend(h_commutations(lay, i, simple(j), e));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let mut t = twisted(lay.x(simple(i)), lay.y(simple(j)), Scalar::one());
            if i == j {
                let d = cartan.d(i - 1);
                let div = Scalar::q_pow(2 * d).sub(&Scalar::q_pow(-2 * d));
                let inv = Scalar::one().div(&div).expect("nonzero");
                let k = Poly::monomial(w(&[lay.h(i), lay.h(i)]))
                    .sub(&Poly::monomial(w(&[lay.h_inv(i), lay.h_inv(i)])));
                t = t.sub(&k.scale(&inv));
            }
            rels.push(t);
        }
    }
    rels.extend(jimbo_polys(&lay.index, |p| lay.y(p)));
    rels
}

/// `x h^{±1} − q^{∓e} h^{±1} x` and `h^{±1} y − q^{∓e} y h^{±1}` for the
/// generator with index pair `p`.
fn h_commutations(lay: &FullLayout, i: usize, p: IndexPair, e: i64) -> [Poly; 4] {
    [
        twisted(lay.x(p), lay.h(i), Scalar::q_pow(-e)),
        twisted(lay.x(p), lay.h_inv(i), Scalar::q_pow(e)),
        twisted(lay.h(i), lay.y(p), Scalar::q_pow(-e)),
        twisted(lay.h_inv(i), lay.y(p), Scalar::q_pow(e)),
    ]
}

/// Exponent of `h_i` acting on `x_{jk}`: `Σ_{l=j}^{k−1} d_i a_il`.
pub fn composite_exponent(n: usize, i: usize, (j, k): IndexPair) -> i64 {
    let c = cartan_an(n).expect("n >= 1");
    (j..k).map(|l| c.d(i - 1) * c.a(i - 1, l - 1)).sum()
}

fn composite_relations(lay: &FullLayout) -> Vec<Poly> {
    let n = lay.index.rank();
    let mut out = Vec::new();
    for &(j, k) in lay.index.pairs() {
        if k == j + 1 {
            continue;
        }
        for i in 1..=n {
            out.extend(h_commutations(lay, i, (j, k), composite_exponent(n, i, (j, k))));
        }
    }
    out
}

/// The printed relation set `S̃⁺ ∪ K ∪ T ∪ S̃⁻` (as-printed mode) or its
/// extension (extended mode, completed within [`EXTENDED_LIMITS`]). All
/// weights are 1.
pub fn full_uq_bundle(n: usize, mode: FullMode) -> Result<PresentationBundle, UqError> {
    full_uq_bundle_with(n, mode, EXTENDED_LIMITS)
}

pub fn full_uq_bundle_with(n: usize, mode: FullMode, limits: CompletionLimits) -> Result<PresentationBundle, UqError> {
    if n == 0 {
        return Err(UqError::InvalidArguments("N must be at least 1".into()));
    }
    let lay = FullLayout::new(n);
    let alphabet = Alphabet::new(lay.names())?;
    let mut rels = printed_relations(&lay);
    let name = format!("uq-full-{n}-{}", mode.as_str());
    if mode == FullMode::AsPrinted {
        return Ok(PresentationBundle::new(name, alphabet, rels)
            .with_meta("n", n)
            .with_meta("mode", mode.as_str()));
    }
    rels.extend(composite_relations(&lay));
    let sys = RewriteSystem::new(alphabet.clone(), rels)?;
    let (system, status) = match shirshov_complete(&sys, limits) {
        Ok(c) => (
            c.system,
            match c.status {
                CompletionStatus::Complete => "complete",
                CompletionStatus::Truncated => "truncated",
            },
        ),
        Err(crate::rewrite::RewriteError::LimitExceeded { partial, .. }) => (*partial, "round-limit"),
        Err(e) => return Err(e.into()),
    };
    Ok(PresentationBundle::new(name, alphabet, system.polys())
        .with_meta("n", n)
        .with_meta("mode", mode.as_str())
        .with_meta("completion", status))
}

/// Outcome of checking that every normal word is `(ỹ-monotone)(h-word)(x̃-monotone)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularCheck {
    /// Normal words per length.
    pub irr_counts: Vec<u64>,
    /// Per-length coefficients of `M_ỹ(t) · L_h(t) · M_x̃(t)`.
    pub product_counts: Vec<u64>,
    /// Normal words that do not have the factored shape.
    pub misfits: Vec<Word>,
}

impl TriangularCheck {
    pub fn holds(&self) -> bool {
        self.misfits.is_empty() && self.irr_counts == self.product_counts
    }
}

fn monotone_counts(letters: usize, cap: usize) -> Vec<u64> {
    // multisets of size k from `letters` kinds
    let mut c = vec![0u64; cap + 1];
    c[0] = 1;
    for _ in 0..letters {
        for k in 1..=cap {
            c[k] += c[k - 1];
        }
    }
    c
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate().take(a.len() - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn has_shape(lay: &FullLayout, word: &Word) -> bool {
    let ls = word.letters();
    let ys = ls.iter().take_while(|&&l| lay.is_y(l)).count();
    let hs = ls[ys..].iter().take_while(|&&l| lay.is_h(l)).count();
    let (y, h, x) = (&ls[..ys], &ls[ys..ys + hs], &ls[ys + hs..]);
    let sorted = |s: &[Letter]| s.windows(2).all(|p| p[0] <= p[1]);
    if !x.iter().all(|&l| lay.is_x(l)) || !sorted(y) || !sorted(h) || !sorted(x) {
        return false;
    }
    // a sorted h-word is normal when no h_i meets its inverse
    !(1..=lay.index.rank()).any(|i| h.contains(&lay.h(i)) && h.contains(&lay.h_inv(i)))
}

/// Compares the normal words of `sys` (over the full alphabet for rank `n`)
/// with the triangular product shape, by length up to `cap`.
pub fn triangular_check(n: usize, sys: &RewriteSystem, cap: usize) -> TriangularCheck {
    let lay = FullLayout::new(n);
    let ones = vec![1u32; sys.alphabet().len()];
    let mut irr = vec![0u64; cap + 1];
    let mut misfits = Vec::new();
    crate::basis::for_each_irr(sys, &ones, cap as u64, |w, d| {
        irr[d as usize] += 1;
        if !has_shape(&lay, w) {
            misfits.push(w.clone());
        }
    })
    .expect("unit weights");
    let m = monotone_counts(lay.index.len(), cap);
    // Laurent monomials in n variables by total absolute degree: ((1+t)/(1−t))^n
    let mut l = vec![0u64; cap + 1];
    l[0] = 1;
    let one_var: Vec<u64> = (0..=cap).map(|k| if k == 0 { 1 } else { 2 }).collect();
    for _ in 0..n {
        l = convolve(&l, &one_var);
    }
    let product = convolve(&convolve(&m, &l), &m);
    misfits.sort();
    TriangularCheck {
        irr_counts: irr,
        product_counts: product,
        misfits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_order() {
        let lay = FullLayout::new(2);
        assert_eq!(
            lay.names(),
            vec!["y12", "y13", "y23", "h1_inv", "h1", "h2_inv", "h2", "x12", "x13", "x23"]
        );
        assert!(lay.y((2, 3)) < lay.h_inv(1) && lay.h(2) < lay.x((1, 2)));
    }

    #[test]
    fn rank_one_relations() {
        let b = full_uq_bundle(1, FullMode::AsPrinted).unwrap();
        let a = &b.alphabet;
        let rendered: Vec<String> = b.relations.iter().map(|r| r.render(a)).collect();
        assert_eq!(
            rendered,
            vec![
                "h1*h1_inv - 1",
                "h1_inv*h1 - 1",
                "x12*h1 - q^-2 h1*x12",
                "x12*h1_inv - q^2 h1_inv*x12",
                "h1*y12 - q^-2 y12*h1",
                "h1_inv*y12 - q^2 y12*h1_inv",
                "x12*y12 - q^2/(q^4 - 1) h1*h1 + q^2/(q^4 - 1) h1_inv*h1_inv - y12*x12",
            ]
        );
    }

    #[test]
    fn composite_exponents() {
        assert_eq!(composite_exponent(2, 1, (1, 3)), 1);
        assert_eq!(composite_exponent(2, 2, (1, 3)), 1);
        assert_eq!(composite_exponent(3, 2, (1, 4)), 0);
    }

    #[test]
    fn series_helpers() {
        assert_eq!(monotone_counts(2, 3), vec![1, 2, 3, 4]);
        assert_eq!(convolve(&[1, 1, 1], &[1, 2, 2]), vec![1, 3, 5]);
    }
}
