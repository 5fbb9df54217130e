use crate::freealg::{Alphabet, Poly, Word};
use crate::presentation::PresentationBundle;
use crate::scalar::Scalar;

use super::{Sign, UqError};

/// A symmetrizable Cartan matrix `A` with symmetrizer `D = diag(d_i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanData {
    pub fn new(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self, UqError> {
        let n = a.len();
        let bad = |m: String| Err(UqError::InvalidCartan(m));
        if n == 0 {
            return bad("empty matrix".into());
        }
        if d.len() != n {
            return bad(format!("{} symmetrizer entries for rank {n}", d.len()));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {} has {} entries", i + 1, row.len()));
            }
            if row[i] != 2 {
                return bad(format!("a_{0}{0} = {1}", i + 1, row[i]));
            }
            if d[i] <= 0 {
                return bad(format!("d_{} must be positive", i + 1));
            }
            for (j, &x) in row.iter().enumerate() {
                if i != j && x > 0 {
                    return bad(format!("a_{}{} = {x} is positive", i + 1, j + 1));
                }
                if d[i] * x != d[j] * a[j][i] {
                    return bad(format!("DA is not symmetric at ({}, {})", i + 1, j + 1));
                }
            }
        }
        Ok(CartanData { a, d })
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    /// `a_ij`, zero-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    /// Rows of integers, then an optional `d:` line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, UqError> {
        let mut rows = Vec::new();
        let mut d = None;
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (target, body) = match line.strip_prefix("d:") {
                Some(rest) => (true, rest),
                None => (false, line),
            };
            let nums = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<i64>().map_err(|_| UqError::InvalidCartan(format!("bad entry `{s}`"))))
                .collect::<Result<Vec<_>, _>>()?;
            if target {
                d = Some(nums);
            } else {
                rows.push(nums);
            }
        }
        let n = rows.len();
        CartanData::new(rows, d.unwrap_or_else(|| vec![1; n]))
    }
}

/// The `A_N` matrix: 2 on the diagonal, −1 next to it, and `D = I`.
pub fn cartan_an(n: usize) -> Result<CartanData, UqError> {
    if n == 0 {
        return Err(UqError::InvalidArguments("rank must be at least 1".into()));
    }
    let a = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    CartanData::new(a, vec![1; n])
}

/// Gaussian binomial `(m n)_t = Π_{i=1}^{n} (t^{m−i+1} − t^{i−m−1}) / (t^i − t^{−i})`.
pub fn quantum_binomial(m: u64, n: u64, t: &Scalar) -> Result<Scalar, UqError> {
    if n > m {
        return Err(UqError::InvalidArguments(format!("({m} {n}) needs n <= m")));
    }
    let (m, n) = (m as i64, n as i64);
    let mut acc = Scalar::one();
    for i in 1..=n {
        let num = t.pow(m - i + 1)?.sub(&t.pow(i - m - 1)?);
        let den = t.pow(i)?.sub(&t.pow(-i)?);
        acc = acc.mul(&num).div(&den)?;
    }
    Ok(acc)
}

/// `Σ_ν (−1)^ν (1−a_ij ν)_t x_i^{1−a_ij−ν} x_j x_i^ν` with `t = q^{2d_i}`,
/// over letters `letter(0) < … < letter(N−1)`, made monic.
pub(crate) fn serre_polys(c: &CartanData, letter: impl Fn(usize) -> u32) -> Result<Vec<Poly>, UqError> {
    let mut out: Vec<Poly> = Vec::new();
    for i in 0..c.rank() {
        let t = Scalar::q_pow(2 * c.d(i));
        for j in 0..c.rank() {
            if i == j {
                continue;
            }
            let top = (1 - c.a(i, j)) as u64;
            let mut p = Poly::zero();
            for nu in 0..=top {
                let mut coeff = quantum_binomial(top, nu, &t)?;
                if nu % 2 == 1 {
                    coeff = coeff.neg();
                }
                let mut w = Word::empty();
                for _ in 0..top - nu {
                    w.push(letter(i));
                }
                w.push(letter(j));
                for _ in 0..nu {
                    w.push(letter(i));
                }
                p.add_term(w, &coeff);
            }
            let p = p.monic().expect("Serre relations are nonzero");
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

pub fn serre_relations(c: &CartanData, sign: Sign) -> Result<PresentationBundle, UqError> {
    let names: Vec<String> = (1..=c.rank()).map(|i| format!("{}{i}", sign.prefix())).collect();
    let alphabet = Alphabet::new(names)?;
    let rels = serre_polys(c, |i| i as u32)?;
    Ok(PresentationBundle::new(format!("serre-{}", sign.as_str()), alphabet, rels)
        .with_meta("rank", c.rank()))
}
