//! The coefficient field `Q(q)`: ratios of integer polynomials in one
//! indeterminate `q`, kept in a canonical reduced form.

mod intpoly;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use intpoly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {0}")]
    PoleAtSpecialization(BigRational),
}

/// An element `num / den` of `Q(q)`.
///
/// Canonical form: `den != 0`, `num` and `den` share no polynomial factor and
/// no common integer content, and `den` has a positive leading coefficient.
/// Zero is `0 / 1`. Two scalars are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Scalar {
            num: IntPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// `q^k` for any integer `k`; negative powers are `1 / q^|k|`.
    pub fn q_pow(k: i64) -> Self {
        Self::laurent_monomial(BigInt::one(), k)
    }

    /// `c * q^k`.
    pub fn laurent_monomial(c: BigInt, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if k >= 0 {
            Scalar {
                num: IntPoly::monomial(c, k as usize),
                den: IntPoly::one(),
            }
        } else {
            Scalar {
                num: IntPoly::constant(c),
                den: IntPoly::monomial(BigInt::one(), k.unsigned_abs() as usize),
            }
        }
    }

    /// Builds a Laurent polynomial from `(exponent, coefficient)` pairs.
    pub fn laurent<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        terms
            .into_iter()
            .map(|(k, c)| Self::laurent_monomial(BigInt::from(c), k))
            .fold(Self::zero(), |a, b| &a + &b)
    }

    /// `num / den` brought into canonical form.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a single power of `q` times an integer.
    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    /// Sign of the leading numerator coefficient, used for rendering.
    pub fn is_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(Signed::is_negative)
    }

    fn normalize(mut num: IntPoly, mut den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            // Laurent fast path: the only possible common factor is a power of q.
            let k = den.valuation().unwrap().min(num.valuation().unwrap());
            if k > 0 {
                num = num.shift_down(k);
                den = den.shift_down(k);
            }
        } else {
            let g = num.gcd_primitive(&den);
            if !g.is_one() {
                num = num.div_exact(&g);
                den = den.div_exact(&g);
            }
        }
        let c = num.content().gcd(&den.content());
        let c = if den.leading_coeff().unwrap().is_negative() {
            -c
        } else {
            c
        };
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        Scalar { num, den }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalize(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact value at `q = r`.
    pub fn specialize(&self, r: &BigRational) -> Result<BigRational, ScalarError> {
        let d = self.den.eval(r);
        if d.is_zero() {
            return Err(ScalarError::PoleAtSpecialization(r.clone()));
        }
        Ok(self.num.eval(r) / d)
    }

    /// Laurent expansion `[(exponent, coefficient)]` in decreasing exponent
    /// order, when the denominator is `q^k` (unit coefficient).
    pub fn laurent_terms(&self) -> Option<Vec<(i64, BigInt)>> {
        if !self.den.is_monomial() || !self.den.leading_coeff().unwrap().is_one() {
            return None;
        }
        let shift = self.den.degree().unwrap() as i64;
        Some(
            self.num
                .terms()
                .rev()
                .map(|(k, c)| (k as i64 - shift, c.clone()))
                .collect(),
        )
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.num
            .cmp_structural(&other.num)
            .then_with(|| self.den.cmp_structural(&other.den))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        Scalar::add(self, rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        Scalar::sub(self, rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        Scalar::mul(self, rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

fn write_laurent(f: &mut fmt::Formatter<'_>, terms: &[(i64, BigInt)]) -> fmt::Result {
    for (idx, (k, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if idx == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        match (*k, a.is_one()) {
            (0, _) => write!(f, "{a}")?,
            (1, true) => write!(f, "q")?,
            (1, false) => write!(f, "{a}*q")?,
            (k, true) => write!(f, "q^{k}")?,
            (k, false) => write!(f, "{a}*q^{k}")?,
        }
    }
    Ok(())
}

fn write_intpoly(f: &mut fmt::Formatter<'_>, p: &IntPoly) -> fmt::Result {
    let terms: Vec<(i64, BigInt)> = p.terms().rev().map(|(k, c)| (k as i64, c.clone())).collect();
    write_laurent(f, &terms)
}

/// Renders in the presentation-file scalar syntax: `q^2 - q^-2`,
/// `(q^4 + 1)/(q^2 - 1)`, `3*q^-1`, `-1/2`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if let Some(terms) = self.laurent_terms() {
            return write_laurent(f, &terms);
        }
        let wrap_num = self.num.terms().count() > 1;
        if wrap_num {
            write!(f, "(")?;
        }
        write_intpoly(f, &self.num)?;
        if wrap_num {
            write!(f, ")")?;
        }
        write!(f, "/")?;
        let wrap_den = self.den.terms().count() > 1 || self.den.valuation() != Some(0);
        if wrap_den {
            write!(f, "(")?;
        }
        write_intpoly(f, &self.den)?;
        if wrap_den {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// Shorthand for a rational number `n / d`.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
